#include "cdindex/artinian.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "cdindex/elim.hpp"
#include "cdindex/error.hpp"
#include "cdindex/field.hpp"
#include "cdindex/ints.hpp"

namespace cdx {

namespace {

using Mono = std::vector<std::pair<int, int>>;

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) r = checkedMul(r, n - k + i) / i;
    return r;
}

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        cur.push_back(total);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int first = 1; first <= total - parts + 1; ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, cur, emit);
        cur.pop_back();
    }
}

} // namespace

GradedPieceBasis gradedPiece(const SimplicialComplex& k, int degree) {
    if (degree < 0) throw CdxError("BadParameter", "negative degree");
    GradedPieceBasis out;
    out.degree = degree;
    if (k.isVoid()) return out;
    if (degree == 0) {
        out.monomials.push_back({});
        return out;
    }
    auto faces = facesByDim(k);
    Int expect = 0;
    for (int s = 1; s <= degree && std::size_t(s) < faces.size(); ++s) {
        for (const auto& f : faces[std::size_t(s)]) {
            std::vector<int> cur;
            compositions(degree, s, cur, [&](const std::vector<int>& e) {
                Mono m;
                for (int i = 0; i < s; ++i) m.push_back({f[std::size_t(i)], e[std::size_t(i)]});
                out.monomials.push_back(std::move(m));
            });
            expect = checkedAdd(expect, binom(degree - 1, s - 1));
        }
    }
    if (Int(out.monomials.size()) != expect)
        throw std::logic_error("gradedPiece: count disagrees with the binomial tally");
    return out;
}

namespace {

std::vector<std::vector<std::uint32_t>> drawForms(int numForms, int nv, std::uint32_t p,
                                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::uint32_t>> theta{std::size_t(numForms),
                                                  std::vector<std::uint32_t>(std::size_t(nv))};
    for (auto& row : theta)
        for (auto& c : row) c = std::uint32_t(rng() % p);
    return theta;
}

/* Kind-Kleinschmidt: the forms are a parameter system iff for every facet F
 * the coefficient block on F's vertices has full column rank. */
void certifyLsop(const SimplicialComplex& cx,
                 const std::vector<std::vector<std::uint32_t>>& theta, std::uint32_t p,
                 Exec exec) {
    const int numForms = int(theta.size());
    for (const auto& f : cx.facets) {
        const int s = int(f.size());
        if (s == 0) continue;
        IntMat m(numForms, s);
        for (int i = 0; i < numForms; ++i)
            for (int j = 0; j < s; ++j) m.at(i, j) = theta[std::size_t(i)][std::size_t(f[std::size_t(j)])];
        if (int(rankFp(m, p, exec)) != s) {
            std::string w;
            for (int v : f) w += (w.empty() ? "" : ",") + cx.vnames[std::size_t(v)];
            throw CdxError("NotArtinian",
                           "the drawn forms degenerate on the face {" + w + "}; redraw the seed");
        }
    }
}

struct Reduction {
    int top = 0;                                      // highest degree built
    std::vector<GradedPieceBasis> basis;              // 0..top
    std::vector<std::map<Mono, int>> index;           // monomial -> column
    std::vector<FpEchelon> ech;                       // ech[k] spans the degree-k ideal piece
    std::vector<long long> dims;                      // 0..top
};

Reduction reduceByForms(const SimplicialComplex& cx,
                        const std::vector<std::vector<std::uint32_t>>& theta, int top,
                        std::uint32_t p, Exec exec) {
    const int numForms = int(theta.size());
    std::set<std::vector<int>> faceSet;
    {
        auto byDim = cx.isVoid() ? std::vector<std::vector<std::vector<int>>>{} : facesByDim(cx);
        for (const auto& layer : byDim)
            for (const auto& f : layer) faceSet.insert(f);
    }
    Reduction r;
    r.top = top;
    for (int k = 0; k <= top; ++k) {
        r.basis.push_back(gradedPiece(cx, k));
        r.index.push_back({});
        auto& ix = r.index.back();
        int col = 0;
        for (const auto& m : r.basis.back().monomials) ix[m] = col++;
        r.ech.emplace_back(r.basis.back().monomials.size(), p);
        if (k == 0) {
            r.dims.push_back((long long)r.basis[0].monomials.size());
            continue;
        }
        // the degree-k piece of the ideal is spanned by theta_i * m over the
        // degree-(k-1) monomial basis
        std::vector<FpEchelon::SparseRow> rows;
        for (const auto& m : r.basis[std::size_t(k - 1)].monomials) {
            std::vector<std::pair<int, int>> targets; // (column, vertex)
            for (int v = 0; v < int(cx.vnames.size()); ++v) {
                Mono mv = m;
                auto it = std::lower_bound(mv.begin(), mv.end(), std::make_pair(v, 0));
                if (it != mv.end() && it->first == v) {
                    it->second += 1;
                } else {
                    std::vector<int> supp;
                    for (auto& q : m) supp.push_back(q.first);
                    supp.insert(std::lower_bound(supp.begin(), supp.end(), v), v);
                    if (!faceSet.count(supp)) continue;
                    mv.insert(it, {v, 1});
                }
                targets.push_back({r.index[std::size_t(k)].at(mv), v});
            }
            for (int i = 0; i < numForms; ++i) {
                FpEchelon::SparseRow row;
                for (auto [c, v] : targets) {
                    std::uint32_t coef = theta[std::size_t(i)][std::size_t(v)];
                    if (coef) row.push_back({c, (long long)coef});
                }
                rows.push_back(std::move(row));
            }
        }
        r.ech.back().addRows(rows, exec);
        r.dims.push_back((long long)r.basis.back().monomials.size() -
                         (long long)r.ech.back().rank());
    }
    return r;
}

} // namespace

std::vector<long long> quotientHilbert(const SimplicialComplex& k, int numForms,
                                       std::uint32_t p, std::uint64_t seed, Exec exec) {
    if (numForms < 0) throw CdxError("BadParameter", "negative form count");
    if (!isOddPrime(p)) throw CdxError("BadParameter", "the modulus must be an odd prime");
    auto theta = drawForms(numForms, int(k.vnames.size()), p, seed);
    certifyLsop(k, theta, p, exec);
    return reduceByForms(k, theta, numForms, p, exec).dims;
}

RankProfile lefschetzProfile(const SimplicialComplex& k, std::uint64_t thetaSeed,
                             std::uint64_t wSeed, std::uint32_t p, Exec exec) {
    if (k.isVoid()) throw CdxError("BadParameter", "void complex has no face ring");
    if (!isOddPrime(p)) throw CdxError("BadParameter", "the modulus must be an odd prime");
    const int d = k.dim() + 1; // Krull dimension
    const int nv = int(k.vnames.size());
    auto theta = drawForms(d, nv, p, thetaSeed);
    certifyLsop(k, theta, p, exec);
    Reduction r = reduceByForms(k, theta, d, p, exec);

    std::vector<std::uint32_t> w(std::size_t(nv), 0);
    {
        std::mt19937_64 rng(wSeed);
        for (auto& c : w) c = std::uint32_t(rng() % p);
    }

    std::set<std::vector<int>> faceSet;
    for (const auto& layer : facesByDim(k))
        for (const auto& f : layer) faceSet.insert(f);
    std::vector<std::vector<int>> stdCols;
    for (int deg = 0; deg <= d; ++deg) stdCols.push_back(r.ech[std::size_t(deg)].standardCols());

    // image of one standard monomial under repeated multiplication by w,
    // kept as a dense vector over the current degree's monomial columns
    auto mapColumn = [&](int src, int pow, int col0) {
        std::vector<std::uint64_t> cur(r.basis[std::size_t(src)].monomials.size(), 0);
        cur[std::size_t(col0)] = 1;
        for (int step = 0; step < pow; ++step) {
            const int deg = src + step;
            std::vector<std::uint64_t> next(r.basis[std::size_t(deg + 1)].monomials.size(), 0);
            for (std::size_t c = 0; c < cur.size(); ++c) {
                if (!cur[c]) continue;
                const Mono& m = r.basis[std::size_t(deg)].monomials[c];
                for (int v = 0; v < nv; ++v) {
                    if (!w[std::size_t(v)]) continue;
                    Mono mv = m;
                    auto it = std::lower_bound(mv.begin(), mv.end(), std::make_pair(v, 0));
                    if (it != mv.end() && it->first == v) {
                        it->second += 1;
                    } else {
                        std::vector<int> supp;
                        for (auto& q : m) supp.push_back(q.first);
                        supp.insert(std::lower_bound(supp.begin(), supp.end(), v), v);
                        if (!faceSet.count(supp)) continue;
                        mv.insert(it, {v, 1});
                    }
                    auto& slot = next[std::size_t(r.index[std::size_t(deg + 1)].at(mv))];
                    slot = (slot + cur[c] * w[std::size_t(v)]) % p;
                }
            }
            cur = std::move(next);
        }
        return cur;
    };

    auto addMap = [&](RankProfile& prof, int src, int tgt, const std::string& expected) {
        const int pow = tgt - src;
        LefschetzMap lm;
        lm.source = src;
        lm.target = tgt;
        lm.power = pow;
        lm.sourceDim = r.dims[std::size_t(src)];
        lm.targetDim = r.dims[std::size_t(tgt)];
        FpEchelon rk(stdCols[std::size_t(tgt)].size(), p);
        for (int col : stdCols[std::size_t(src)]) {
            auto img = mapColumn(src, pow, col);
            r.ech[std::size_t(tgt)].reduceInPlace(img);
            FpEchelon::SparseRow row;
            for (std::size_t j = 0; j < stdCols[std::size_t(tgt)].size(); ++j) {
                std::uint64_t val = img[std::size_t(stdCols[std::size_t(tgt)][j])];
                if (val) row.push_back({int(j), (long long)val});
            }
            rk.addRow(row);
        }
        lm.rank = (long long)rk.rank();
        const bool inj = lm.rank == lm.sourceDim, sur = lm.rank == lm.targetDim;
        lm.status = inj && sur ? "bijective" : inj ? "injective" : sur ? "surjective" : "neither";
        lm.expected = expected;
        prof.maps.push_back(std::move(lm));
    };

    RankProfile prof;
    prof.hilbert = r.dims;
    for (int tgt = 1; tgt <= d; ++tgt) {
        std::string expected = 2 * tgt <= d          ? "injective"
                               : 2 * tgt >= d + 2    ? "surjective"
                                                     : "unconstrained";
        addMap(prof, tgt - 1, tgt, expected);
    }
    for (int kk = 0; d - 1 - 2 * kk >= 2; ++kk) {
        addMap(prof, kk, d - 1 - kk, "injective");
        addMap(prof, kk + 1, d - kk, "surjective");
    }
    return prof;
}

bool kruskalKatonaCheck(const std::vector<long long>& f) {
    for (long long v : f)
        if (v < 0) throw CdxError("NegativeEntry", "face counts cannot be negative");
    if (f.empty()) return true;
    if (f[0] > 1) return false;
    if (f[0] == 0)
        return std::all_of(f.begin(), f.end(), [](long long v) { return v == 0; });
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
        long long m = f[i];
        if (m == 0) {
            if (f[i + 1] != 0) return false;
            continue;
        }
        // Macaulay cascade of m at level i, then the upper-shadow bound
        long long rest = m, bound = 0;
        for (long long lvl = (long long)i; rest > 0; --lvl) {
            assert(lvl >= 1);
            long long a = lvl;
            while (binom(a + 1, lvl) <= rest) ++a;
            rest -= binom(a, lvl);
            bound = checkedAdd(bound, binom(a, lvl + 1));
        }
        if (f[i + 1] > bound) return false;
    }
    return true;
}

} // namespace cdx
