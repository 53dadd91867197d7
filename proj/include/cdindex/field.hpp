#ifndef CDINDEX_FIELD_HPP
#define CDINDEX_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdx {

/* Coefficient field for rank computations: exact rationals (default) or a
 * prime field F_p with p an odd prime below 2^31. */
struct FieldSpec {
    bool rational = true;
    std::uint32_t p = 0;

    static FieldSpec Q() { return FieldSpec{true, 0}; }
    static FieldSpec Fp(std::uint32_t p);

    bool operator==(const FieldSpec& o) const { return rational == o.rational && p == o.p; }
    std::string name() const { return rational ? "q" : "fp:" + std::to_string(p); }
};

inline bool isOddPrime(std::uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline FieldSpec FieldSpec::Fp(std::uint32_t p) {
    if (p >= (1u << 31) || !isOddPrime(p))
        throw std::invalid_argument("prime field needs an odd prime below 2^31, got " + std::to_string(p));
    return FieldSpec{false, p};
}

namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p ? s - p : s);
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p - b);
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return std::uint32_t(std::uint64_t(a) * b % p);
}

inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1, base = a % p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return std::uint32_t(r);
}

inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a % p, p - 2, p);
}

/* Reduce a signed 64-bit integer into [0, p). */
inline std::uint32_t fromInt(long long v, std::uint32_t p) {
    long long r = v % (long long)p;
    if (r < 0) r += p;
    return std::uint32_t(r);
}

} // namespace fp

} // namespace cdx

#endif
