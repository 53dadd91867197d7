#ifndef CDINDEX_WORDS_HPP
#define CDINDEX_WORDS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace cdx {

/* Words over {a,b}: bit i set means letter i is 'b' (positions 0-based). */
struct AbWord {
    std::uint8_t len = 0;
    std::uint32_t bits = 0;

    bool bAt(unsigned i) const { return (bits >> i) & 1u; }
    std::string str() const;
};

/* Words over {c,d}: bit i set means letter i is 'd'.  The degree weights
 * c as 1 and d as 2. */
struct CdWord {
    std::uint8_t len = 0;
    std::uint32_t bits = 0;

    bool dAt(unsigned i) const { return (bits >> i) & 1u; }
    int degree() const { return int(len) + __builtin_popcount(bits); }
    std::string str() const; // empty word prints as "1"
};

bool operator==(AbWord x, AbWord y);
bool operator==(CdWord x, CdWord y);

/* ab-words sort by length, then by number of b's, then by the b-position
 * set compared lexicographically (matches flag-subset enumeration order). */
struct AbLess {
    bool operator()(AbWord x, AbWord y) const;
};

/* cd-words sort like their letter strings with c < d. */
struct CdLess {
    bool operator()(CdWord x, CdWord y) const;
};

AbWord abAppend(AbWord w, bool isB);
CdWord cdAppend(CdWord w, bool isD);
CdWord cdConcat(CdWord x, CdWord y);
AbWord abConcat(AbWord x, AbWord y);

/* The ab-word u_S for S a subset of [n]: letter i is 'b' iff i+1 is in S. */
AbWord abWordOfSubset(std::uint32_t mask, int n);
std::uint32_t subsetOfAbWord(AbWord w);

/* All cd-words of the given degree, in CdLess order.  Count is the
 * Fibonacci number F_{degree+1} with F_1 = F_2 = 1. */
std::vector<CdWord> allCdWords(int degree);

long long fibonacci(int i);

/* The sparse-subset encoding of degree-n cd-words: the word
 * c^{s0} d c^{s1} d ... d c^{sk} maps to {s0+1, s0+s1+3, ...}, a subset of
 * [n-1] with no two consecutive members. */
std::set<int> kappaToSet(CdWord w);
bool isSparseSubset(const std::set<int>& s, int n);
CdWord kappaToWord(const std::set<int>& s, int n);

/* All sparse subsets of [n-1], ascending by (size, lexicographic). */
std::vector<std::set<int>> allSparseSubsets(int n);

std::string subsetKey(const std::set<int>& s);
std::string subsetKey(std::uint32_t mask);

} // namespace cdx

#endif
