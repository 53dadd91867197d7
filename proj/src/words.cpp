#include "cdindex/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdx {

std::string AbWord::str() const {
    if (len == 0) return "1";
    std::string s;
    for (unsigned i = 0; i < len; ++i) s += bAt(i) ? 'b' : 'a';
    return s;
}

std::string CdWord::str() const {
    if (len == 0) return "1";
    std::string s;
    for (unsigned i = 0; i < len; ++i) s += dAt(i) ? 'd' : 'c';
    return s;
}

bool operator==(AbWord x, AbWord y) { return x.len == y.len && x.bits == y.bits; }
bool operator==(CdWord x, CdWord y) { return x.len == y.len && x.bits == y.bits; }

bool AbLess::operator()(AbWord x, AbWord y) const {
    if (x.len != y.len) return x.len < y.len;
    int px = __builtin_popcount(x.bits), py = __builtin_popcount(y.bits);
    if (px != py) return px < py;
    // lexicographic on the sorted b-position sets
    std::uint32_t bx = x.bits, by = y.bits;
    while (bx && by) {
        int lx = __builtin_ctz(bx), ly = __builtin_ctz(by);
        if (lx != ly) return lx < ly;
        bx &= bx - 1;
        by &= by - 1;
    }
    return false;
}

bool CdLess::operator()(CdWord x, CdWord y) const {
    unsigned n = std::min(x.len, y.len);
    for (unsigned i = 0; i < n; ++i) {
        bool dx = x.dAt(i), dy = y.dAt(i);
        if (dx != dy) return dy; // c < d
    }
    return x.len < y.len;
}

AbWord abAppend(AbWord w, bool isB) {
    if (w.len >= 31) throw std::length_error("ab-word too long");
    return AbWord{std::uint8_t(w.len + 1), w.bits | (std::uint32_t(isB) << w.len)};
}

CdWord cdAppend(CdWord w, bool isD) {
    if (w.len >= 31) throw std::length_error("cd-word too long");
    return CdWord{std::uint8_t(w.len + 1), w.bits | (std::uint32_t(isD) << w.len)};
}

CdWord cdConcat(CdWord x, CdWord y) {
    if (x.len + y.len > 31) throw std::length_error("cd-word too long");
    return CdWord{std::uint8_t(x.len + y.len), x.bits | (y.bits << x.len)};
}

AbWord abConcat(AbWord x, AbWord y) {
    if (x.len + y.len > 31) throw std::length_error("ab-word too long");
    return AbWord{std::uint8_t(x.len + y.len), x.bits | (y.bits << x.len)};
}

AbWord abWordOfSubset(std::uint32_t mask, int n) {
    return AbWord{std::uint8_t(n), mask};
}

std::uint32_t subsetOfAbWord(AbWord w) { return w.bits; }

std::vector<CdWord> allCdWords(int degree) {
    if (degree < 0) return {};
    // enumerate by recursion on the leading letter, then sort canonically
    std::vector<std::vector<CdWord>> byDeg(std::size_t(degree) + 1);
    byDeg[0] = {CdWord{}};
    for (int n = 1; n <= degree; ++n) {
        for (const CdWord& w : byDeg[std::size_t(n - 1)])
            byDeg[std::size_t(n)].push_back(cdConcat(CdWord{1, 0}, w));
        if (n >= 2)
            for (const CdWord& w : byDeg[std::size_t(n - 2)])
                byDeg[std::size_t(n)].push_back(cdConcat(CdWord{1, 1}, w));
    }
    auto out = byDeg[std::size_t(degree)];
    std::sort(out.begin(), out.end(), [](CdWord a, CdWord b) { return CdLess{}(a, b); });
    return out;
}

long long fibonacci(int i) {
    if (i <= 0) return 0;
    long long a = 1, b = 1; // F_1, F_2
    for (int k = 3; k <= i; ++k) {
        long long c = a + b;
        a = b;
        b = c;
    }
    return i == 1 ? 1 : b;
}

std::set<int> kappaToSet(CdWord w) {
    std::set<int> s;
    int pos = 0;  // letters consumed, weighted
    int run = 0;  // length of the current c-run
    for (unsigned i = 0; i < w.len; ++i) {
        if (!w.dAt(i)) {
            ++run;
            ++pos;
        } else {
            s.insert(pos + 1);
            pos += 2;
            run = 0;
        }
    }
    (void)run;
    return s;
}

bool isSparseSubset(const std::set<int>& s, int n) {
    int prev = -10;
    for (int t : s) {
        if (t < 1 || t > n - 1) return false;
        if (t == prev + 1) return false;
        prev = t;
    }
    return true;
}

CdWord kappaToWord(const std::set<int>& s, int n) {
    if (!isSparseSubset(s, n))
        throw std::invalid_argument("kappa: not a sparse subset of [n-1]");
    CdWord w{};
    int pos = 0;
    for (int t : s) {
        int cs = t - 1 - pos; // c-run before this d
        for (int j = 0; j < cs; ++j) w = cdAppend(w, false);
        w = cdAppend(w, true);
        pos = t + 1;
    }
    for (int j = pos; j < n; ++j) w = cdAppend(w, false);
    return w;
}

std::vector<std::set<int>> allSparseSubsets(int n) {
    std::vector<std::set<int>> out;
    int top = n - 1;
    if (top < 0) top = 0;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << top); ++m)
        if ((m & (m << 1)) == 0) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t x, std::uint32_t y) {
        int px = __builtin_popcount(x), py = __builtin_popcount(y);
        if (px != py) return px < py;
        while (x && y) {
            int lx = __builtin_ctz(x), ly = __builtin_ctz(y);
            if (lx != ly) return lx < ly;
            x &= x - 1;
            y &= y - 1;
        }
        return false;
    });
    for (auto m : masks) {
        std::set<int> s;
        for (int i = 0; i < top; ++i)
            if ((m >> i) & 1) s.insert(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

std::string subsetKey(const std::set<int>& s) {
    std::string k;
    for (int t : s) {
        if (!k.empty()) k += ',';
        k += std::to_string(t);
    }
    return k;
}

std::string subsetKey(std::uint32_t mask) {
    std::string k;
    for (int i = 0; i < 32; ++i)
        if ((mask >> i) & 1) {
            if (!k.empty()) k += ',';
            k += std::to_string(i + 1);
        }
    return k;
}

} // namespace cdx
