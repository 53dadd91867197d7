#ifndef CDINDEX_INTS_HPP
#define CDINDEX_INTS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdx {

/* All combinatorial counts and polynomial coefficients are 64-bit integers
 * with overflow checks; overflow throws instead of wrapping. */
using Int = long long;

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

inline Int checkedAdd(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
    return r;
}

inline Int checkedSub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
    return r;
}

inline Int checkedMul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
    return r;
}

} // namespace cdx

#endif
