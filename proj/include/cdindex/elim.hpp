#ifndef CDINDEX_ELIM_HPP
#define CDINDEX_ELIM_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cdindex/field.hpp"
#include "cdindex/matrix.hpp"
#include "cdindex/parallel.hpp"

namespace cdx {

/* Rank over Q by fraction-free (Bareiss) elimination.  Entries stay integral
 * throughout; an int64 fast path promotes to arbitrary precision when an
 * intermediate product would overflow.  The parallel path updates rows below
 * the pivot concurrently and picks the same pivots as the serial one. */
std::size_t rankQ(const IntMat& m, Exec exec = defaultExec());

/* Rank over F_p by plain elimination. */
std::size_t rankFp(const IntMat& m, std::uint32_t p, Exec exec = defaultExec());

std::size_t rankField(const IntMat& m, const FieldSpec& f, Exec exec = defaultExec());

/* Incremental row echelon form over F_p.  Rows are inserted in a fixed order
 * and reduced against the pivots present so far, so the resulting echelon
 * (rank, pivot set, reductions) does not depend on the execution policy;
 * the parallel path only reduces batches against a frozen snapshot first. */
class FpEchelon {
public:
    using SparseRow = std::vector<std::pair<int, long long>>;

    FpEchelon(std::size_t width, std::uint32_t p);

    bool addRow(const SparseRow& row);
    void addRows(const std::vector<SparseRow>& rows, Exec exec = defaultExec());

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return w_; }
    std::uint32_t prime() const { return p_; }

    bool isPivot(int col) const { return pivotRowOfCol_[std::size_t(col)] >= 0; }
    /* Non-pivot columns, ascending: a basis of the cokernel. */
    std::vector<int> standardCols() const;

    /* Reduce modulo the row space.  On return entries are < p and nonzero
     * only on non-pivot columns. */
    void reduceInPlace(std::vector<std::uint64_t>& buf) const;

private:
    std::size_t w_;
    std::uint32_t p_;
    bool lazy_; // p^2 * width fits well under 2^64, so products can accumulate unreduced
    std::vector<std::vector<std::uint32_t>> rows_; // normalized: leading entry 1 at pivot
    std::vector<int> rowPivot_;
    std::vector<int> pivotRowOfCol_;

    void toBuf(const SparseRow& row, std::vector<std::uint64_t>& buf) const;
    /* Returns the pivot column if the reduced row is nonzero. */
    std::optional<int> reduceBuf(std::vector<std::uint64_t>& buf) const;
    void insertBuf(std::vector<std::uint64_t>& buf, int pivotCol);
};

/* Small exact rational systems (cd-word bases, incidence kernels). */
using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

QMat qFromInt(const IntMat& m);

struct QRref {
    std::size_t rank = 0;
    std::vector<int> pivotCols;
    QMat m; // reduced row echelon form
};

QRref qRref(QMat a);

struct QSolve {
    bool consistent = false;
    bool unique = false;
    std::size_t rank = 0;
    QVec x; // defined when consistent; a particular solution (free vars 0)
};

QSolve solveQ(const QMat& a, const QVec& b);

/* Kernel basis, one vector per free column, in ascending free-column order. */
std::vector<QVec> kernelQ(const QMat& a);

/* Kernel basis over F_p, entries in [0,p), same free-column convention. */
std::vector<std::vector<std::uint32_t>> kernelFp(const IntMat& a, std::uint32_t p);

} // namespace cdx

#endif
