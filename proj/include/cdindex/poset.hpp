#ifndef CDINDEX_POSET_HPP
#define CDINDEX_POSET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cdindex/error.hpp"

namespace cdx {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : n_(bits), w_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void orWith(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    }
    std::size_t size() const { return n_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/* A finite graded poset with an implicit minimum (0-hat, rank 0) that is
 * never stored.  Elements are indexed 0..size()-1; the index -1 denotes
 * 0-hat where an element argument may name it. */
struct GradedPoset {
    int n = 0;                             // poset rank = max element rank
    std::vector<std::string> id;           // element names
    std::vector<int> rk;                   // rank per element, >= 1
    std::vector<std::vector<int>> low;     // lower covers, ascending
    std::vector<std::vector<int>> up;      // upper covers, ascending
    std::vector<std::vector<int>> byRank;  // size n+1; byRank[0] stays empty
    std::vector<Bitset> below;             // below[y] = {x : x < y}, x an element

    int size() const { return int(id.size()); }
    int indexOf(const std::string& name) const;
    /* x <= y over element indices; -1 stands for 0-hat. */
    bool leq(int x, int y) const;
};

constexpr int kZeroHat = -1;

struct RawPoset {
    int n = 0;
    std::vector<std::pair<std::string, int>> elems;
    std::vector<std::pair<std::string, std::string>> covers; // (upper, lower)
};

/* Checks: distinct identifiers, ranks >= 1, covers resolve (DanglingReference),
 * rank gaps exactly 1 (NonGradedCover), no cycles (CycleDetected), declared
 * ranks equal longest-chain ranks and n equals the max rank (RankMismatch). */
GradedPoset validatePoset(const RawPoset& raw);

/* Resolve a name to an element index; "_0" means 0-hat.  ElementNotFound. */
int mustIndex(const GradedPoset& p, const std::string& name);

GradedPoset closedInterval(const GradedPoset& p, int sigma); // <sigma> with 0-hat
GradedPoset openInterval(const GradedPoset& p, int sigma);   // boundary of sigma
GradedPoset link(const GradedPoset& p, int sigma);           // {tau >= sigma}, re-ranked
GradedPoset costar(const GradedPoset& p, int sigma);         // {tau not>= sigma}
GradedPoset skeleton(const GradedPoset& p, int k);           // ranks <= k+1; -1 <= k < n

/* Maximal chains of P minus 0-hat, each ascending by rank; these are the
 * facets of the order complex. */
std::vector<std::vector<int>> maximalChains(const GradedPoset& p);

/* Poset text format: '#' starts a comment; directives 'n <rank>',
 * 'elem <id> <rank>', 'cover <upper-id> <lower-id>'.  Rank-1 elements take
 * no cover lines; '_0' is reserved for the implicit minimum. */
GradedPoset parsePoset(const std::string& text);
GradedPoset loadPoset(const std::string& path);
std::string printPoset(const GradedPoset& p);

} // namespace cdx

#endif
