#ifndef CDINDEX_FLAGS_HPP
#define CDINDEX_FLAGS_HPP

#include <vector>

#include "cdindex/ints.hpp"
#include "cdindex/ncpoly.hpp"
#include "cdindex/parallel.hpp"
#include "cdindex/poset.hpp"

namespace cdx {

/* entries[mask] is f_S resp. h_S where bit i-1 of mask means i is in S;
 * all 2^n entries are stored. */
struct FlagVector {
    int n = 0;
    char flavor = 'f';
    std::vector<Int> e;

    Int at(std::uint32_t mask) const { return e[mask]; }
};

/* f_S = number of chains whose rank set is exactly S; f_empty = 1. */
FlagVector flagF(const GradedPoset& p, Exec exec = defaultExec());

/* h_S = sum_{T subset S} (-1)^{|S|-|T|} f_T. */
FlagVector flagH(const FlagVector& f);

/* Inverse transform, for round-trip checks. */
FlagVector flagFfromH(const FlagVector& h);

/* Psi = sum_S h_S u_S, u_S the word with b exactly at positions in S. */
AbPoly abIndex(const FlagVector& h);

/* Size-graded sums: entry k is the sum over |S| = k. */
std::vector<Int> aggregate(const FlagVector& v);

struct RankStats {
    std::vector<Int> rankGen;         // f_0..f_n with f_0 = 1 for 0-hat
    std::vector<Int> alphaSingletons; // alpha_1..alpha_{n-1}
    bool eulerHolds = false;          // sum (-1)^{n-i} f_i == 1
};

RankStats rankStatistics(const GradedPoset& p);

} // namespace cdx

#endif
