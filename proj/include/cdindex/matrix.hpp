#ifndef CDINDEX_MATRIX_HPP
#define CDINDEX_MATRIX_HPP

#include <cassert>
#include <vector>

#include "cdindex/ints.hpp"

namespace cdx {

/* Dense row-major integer matrix.  Inputs to the rank kernels (boundary
 * matrices, restriction blocks, coefficient systems) are always integral;
 * field arithmetic happens inside the kernels. */
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    Int& at(int i, int j) {
        assert(i >= 0 && i < rows && j >= 0 && j < cols);
        return a[std::size_t(i) * cols + j];
    }
    Int at(int i, int j) const {
        assert(i >= 0 && i < rows && j >= 0 && j < cols);
        return a[std::size_t(i) * cols + j];
    }
};

/* Exact product, used by the d(d(x)) = 0 assertions. */
IntMat matMul(const IntMat& A, const IntMat& B);

bool isZero(const IntMat& A);

} // namespace cdx

#endif
