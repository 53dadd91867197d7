#include "cdindex/elim.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <stdexcept>

namespace cdx {

IntMat matMul(const IntMat& A, const IntMat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matMul: shape mismatch");
    IntMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            Int v = A.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                if (B.at(k, j) != 0)
                    C.at(i, j) = checkedAdd(C.at(i, j), checkedMul(v, B.at(k, j)));
        }
    return C;
}

bool isZero(const IntMat& A) {
    for (Int v : A.a)
        if (v != 0) return false;
    return true;
}

namespace {

/* One Bareiss update of row i against pivot row r at column c, on int64 with
 * overflow detection.  Returns false on overflow. */
inline bool bareissRowI64(long long* mi, const long long* mr, int c, int cols, long long piv,
                          long long prev) {
    long long f = mi[c];
    for (int j = c + 1; j < cols; ++j) {
        long long t1, t2, num;
        if (__builtin_mul_overflow(mi[j], piv, &t1)) return false;
        if (__builtin_mul_overflow(f, mr[j], &t2)) return false;
        if (__builtin_sub_overflow(t1, t2, &num)) return false;
        mi[j] = num / prev; // exact by the Bareiss identity
    }
    mi[c] = 0;
    return true;
}

std::size_t bareissRankI64(const IntMat& in, Exec exec, bool& overflowed) {
    const int rows = in.rows, cols = in.cols;
    std::vector<long long> m(in.a.begin(), in.a.end());
    auto row = [&](int i) { return m.data() + std::size_t(i) * cols; };

    long long prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (row(i)[c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            std::swap_ranges(row(piv), row(piv) + cols, row(r));
        const long long p = row(r)[c];
        std::atomic<bool> bad{false};
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16) if (runParallel(exec))
#endif
        for (int i = r + 1; i < rows; ++i) {
            if (bad.load(std::memory_order_relaxed)) continue;
            if (!bareissRowI64(row(i), row(r), c, cols, p, prev))
                bad.store(true, std::memory_order_relaxed);
        }
        if (bad.load()) {
            overflowed = true;
            return 0;
        }
        prev = p;
        ++r;
    }
    overflowed = false;
    return std::size_t(r);
}

std::size_t bareissRankMpz(const IntMat& in, Exec exec) {
    const int rows = in.rows, cols = in.cols;
    static_assert(sizeof(long) == sizeof(long long), "entries must fit a GMP long");
    std::vector<mpz_class> m(in.a.size());
    for (std::size_t k = 0; k < in.a.size(); ++k) m[k] = mpz_class((long)in.a[k]);
    auto at = [&](int i, int j) -> mpz_class& { return m[std::size_t(i) * cols + j]; };

    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
        const mpz_class& p = at(r, c);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 4) if (runParallel(exec))
#endif
        for (int i = r + 1; i < rows; ++i) {
            mpz_class num;
            for (int j = c + 1; j < cols; ++j) {
                num = at(i, j) * p - at(i, c) * at(r, j);
                mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, c) = 0;
        }
        prev = p;
        ++r;
    }
    return std::size_t(r);
}

} // namespace

std::size_t rankQ(const IntMat& m, Exec exec) {
    if (m.rows == 0 || m.cols == 0) return 0;
    bool overflowed = false;
    std::size_t r = bareissRankI64(m, exec, overflowed);
    if (!overflowed) return r;
    return bareissRankMpz(m, exec);
}

std::size_t rankFp(const IntMat& m, std::uint32_t p, Exec exec) {
    if (m.rows == 0 || m.cols == 0) return 0;
    FpEchelon ech(std::size_t(m.cols), p);
    std::vector<FpEchelon::SparseRow> rows(std::size_t(m.rows));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) rows[std::size_t(i)].push_back({j, m.at(i, j)});
    ech.addRows(rows, exec);
    return ech.rank();
}

std::size_t rankField(const IntMat& m, const FieldSpec& f, Exec exec) {
    return f.rational ? rankQ(m, exec) : rankFp(m, f.p, exec);
}

FpEchelon::FpEchelon(std::size_t width, std::uint32_t p) : w_(width), p_(p) {
    if (!isOddPrime(p)) throw std::invalid_argument("FpEchelon: p must be an odd prime");
    // Lazy accumulation keeps entries unreduced across axpys; safe when the
    // worst-case sum (width + 2) * (p - 1)^2 stays clear of 2^64.
    lazy_ = (long double)(p - 1) * (p - 1) * (long double)(w_ + 2) < 9.0e18L;
    pivotRowOfCol_.assign(w_, -1);
}

void FpEchelon::toBuf(const SparseRow& row, std::vector<std::uint64_t>& buf) const {
    buf.assign(w_, 0);
    for (auto [c, v] : row) {
        assert(c >= 0 && std::size_t(c) < w_);
        buf[std::size_t(c)] = fp::add(std::uint32_t(buf[std::size_t(c)]), fp::fromInt(v, p_), p_);
    }
}

std::optional<int> FpEchelon::reduceBuf(std::vector<std::uint64_t>& buf) const {
    for (std::size_t c = 0; c < w_; ++c) {
        std::uint32_t v = std::uint32_t(buf[c] % p_);
        buf[c] = v;
        if (v == 0) continue;
        int r = pivotRowOfCol_[c];
        if (r < 0) return int(c);
        const std::uint32_t* pr = rows_[std::size_t(r)].data();
        const std::uint64_t coef = p_ - v;
        if (lazy_) {
            for (std::size_t j = c; j < w_; ++j) buf[j] += coef * pr[j];
        } else {
            for (std::size_t j = c; j < w_; ++j) buf[j] = (buf[j] + coef % p_ * (pr[j] % p_)) % p_;
        }
    }
    return std::nullopt;
}

void FpEchelon::insertBuf(std::vector<std::uint64_t>& buf, int pivotCol) {
    std::vector<std::uint32_t> row(w_, 0);
    std::uint32_t inv = fp::inv(std::uint32_t(buf[std::size_t(pivotCol)] % p_), p_);
    for (std::size_t j = std::size_t(pivotCol); j < w_; ++j)
        row[j] = fp::mul(std::uint32_t(buf[j] % p_), inv, p_);
    rowPivot_.push_back(pivotCol);
    pivotRowOfCol_[std::size_t(pivotCol)] = int(rows_.size());
    rows_.push_back(std::move(row));
}

bool FpEchelon::addRow(const SparseRow& row) {
    std::vector<std::uint64_t> buf;
    toBuf(row, buf);
    auto piv = reduceBuf(buf);
    if (!piv) return false;
    insertBuf(buf, *piv);
    return true;
}

void FpEchelon::addRows(const std::vector<SparseRow>& rows, Exec exec) {
    if (!runParallel(exec)) {
        for (const auto& r : rows) addRow(r);
        return;
    }
    // Chunked: reduce a chunk against the frozen echelon in parallel, then
    // insert survivors serially (re-reducing against pivots the chunk added).
    const std::size_t chunk = std::max<std::size_t>(1, (16u << 20) / std::max<std::size_t>(1, w_ * 8));
    std::vector<std::vector<std::uint64_t>> bufs;
    for (std::size_t base = 0; base < rows.size(); base += chunk) {
        const std::size_t cnt = std::min(chunk, rows.size() - base);
        bufs.assign(cnt, {});
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (std::size_t k = 0; k < cnt; ++k) {
            toBuf(rows[base + k], bufs[k]);
            reduceBuf(bufs[k]);
        }
        for (std::size_t k = 0; k < cnt; ++k) {
            auto piv = reduceBuf(bufs[k]);
            if (piv) insertBuf(bufs[k], *piv);
        }
    }
}

std::vector<int> FpEchelon::standardCols() const {
    std::vector<int> out;
    for (std::size_t c = 0; c < w_; ++c)
        if (pivotRowOfCol_[c] < 0) out.push_back(int(c));
    return out;
}

void FpEchelon::reduceInPlace(std::vector<std::uint64_t>& buf) const {
    assert(buf.size() == w_);
    reduceBuf(buf);
    for (auto& v : buf) v %= p_;
}

QMat qFromInt(const IntMat& m) {
    QMat out(std::size_t(m.rows), QVec(std::size_t(m.cols)));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            out[std::size_t(i)][std::size_t(j)] = (long)m.at(i, j);
    return out;
}

QRref qRref(QMat a) {
    QRref res;
    if (a.empty()) return res;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        mpq_class inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        res.pivotCols.push_back(int(c));
        ++r;
    }
    res.rank = r;
    res.m = std::move(a);
    return res;
}

QSolve solveQ(const QMat& a, const QVec& b) {
    QSolve out;
    const std::size_t rows = a.size();
    if (rows != b.size()) throw std::invalid_argument("solveQ: shape mismatch");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    QMat aug(rows, QVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][cols] = b[i];
    }
    QRref r = qRref(std::move(aug));
    out.consistent = true;
    for (int pc : r.pivotCols)
        if (std::size_t(pc) == cols) out.consistent = false;
    out.rank = out.consistent ? r.rank : r.rank - 1;
    if (!out.consistent) return out;
    out.unique = out.rank == cols;
    out.x.assign(cols, mpq_class(0));
    for (std::size_t k = 0; k < r.pivotCols.size(); ++k)
        out.x[std::size_t(r.pivotCols[k])] = r.m[k][cols];
    return out;
}

std::vector<QVec> kernelQ(const QMat& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    QRref r = qRref(a);
    std::vector<bool> isPivot(cols, false);
    std::vector<int> rowOfPivot(cols, -1);
    for (std::size_t k = 0; k < r.pivotCols.size(); ++k) {
        isPivot[std::size_t(r.pivotCols[k])] = true;
        rowOfPivot[std::size_t(r.pivotCols[k])] = int(k);
    }
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (isPivot[f]) continue;
        QVec v(cols, mpq_class(0));
        v[f] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (isPivot[c]) v[c] = -r.m[std::size_t(rowOfPivot[c])][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<std::uint32_t>> kernelFp(const IntMat& a, std::uint32_t p) {
    if (!isOddPrime(p)) throw std::invalid_argument("kernelFp: p must be an odd prime");
    const std::size_t rows = std::size_t(a.rows), cols = std::size_t(a.cols);
    std::vector<std::vector<std::uint32_t>> m(rows, std::vector<std::uint32_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = std::uint32_t(fp::fromInt(a.a[i * cols + j], p));

    /* dense RREF with first-nonzero pivoting */
    std::vector<int> pivotColOfRow;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        std::uint64_t inv = fp::inv(m[row][col], p);
        for (std::size_t j = col; j < cols; ++j) m[row][j] = std::uint32_t(fp::mul(m[row][j], inv, p));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            std::uint64_t f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = std::uint32_t(fp::sub(m[i][j], fp::mul(f, m[row][j], p), p));
        }
        pivotColOfRow.push_back(int(col));
        ++row;
    }

    std::vector<bool> isPivot(cols, false);
    std::vector<int> rowOfPivot(cols, -1);
    for (std::size_t k = 0; k < pivotColOfRow.size(); ++k) {
        isPivot[std::size_t(pivotColOfRow[k])] = true;
        rowOfPivot[std::size_t(pivotColOfRow[k])] = int(k);
    }
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (isPivot[f]) continue;
        std::vector<std::uint32_t> v(cols, 0);
        v[f] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (isPivot[c]) v[c] = std::uint32_t(fp::sub(0, m[std::size_t(rowOfPivot[c])][f], p));
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace cdx
