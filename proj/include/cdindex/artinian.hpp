#ifndef CDINDEX_ARTINIAN_HPP
#define CDINDEX_ARTINIAN_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cdindex/parallel.hpp"
#include "cdindex/simplicial.hpp"

namespace cdx {

/* Monomials of one degree whose support is a face, as sparse exponent
 * vectors (vertex, exponent) sorted by vertex.  The enumeration order is
 * fixed: faces by dimension then position, compositions lexicographic. */
struct GradedPieceBasis {
    int degree = 0;
    std::vector<std::vector<std::pair<int, int>>> monomials;
};

GradedPieceBasis gradedPiece(const SimplicialComplex& k, int degree);

struct LefschetzMap {
    int source = 0;           // source degree
    int target = 0;           // target degree
    int power = 1;            // exponent of the multiplier
    long long sourceDim = 0;
    long long targetDim = 0;
    long long rank = 0;
    std::string status;       // injective | surjective | bijective | neither
    std::string expected;     // injective | surjective | unconstrained
};

struct RankProfile {
    std::vector<long long> hilbert;  // quotient dimensions, degrees 0..d
    std::vector<LefschetzMap> maps;
};

/* Quotient of the face ring by numForms random linear forms drawn from the
 * seed; entries are the dimensions of degrees 0..numForms.  The forms are
 * certified to be a parameter system by facewise coefficient ranks before
 * any elimination runs; NotArtinian on certificate failure (redraw with a
 * different seed or report). */
std::vector<long long> quotientHilbert(const SimplicialComplex& k, int numForms,
                                       std::uint32_t p, std::uint64_t seed,
                                       Exec exec = defaultExec());

/* Hilbert function plus rank/status of every single-step multiplication map
 * A_{k-1} -> A_k and of the power maps w^(d-1-2k): A_k -> A_{d-1-k} and
 * A_{k+1} -> A_{d-k}.  The expected column records what the classification
 * ought to be for a Cohen-Macaulay complex of polyhedral type; the middle
 * single-step map is unconstrained when d is odd. */
RankProfile lefschetzProfile(const SimplicialComplex& k, std::uint64_t thetaSeed,
                             std::uint64_t wSeed, std::uint32_t p,
                             Exec exec = defaultExec());

/* f[i] = number of faces with i vertices (f[0] counts the empty face).
 * True iff every consecutive pair satisfies the Macaulay cascade bound,
 * i.e. the sequence is the f-vector of some simplicial complex.
 * Errors: NegativeEntry. */
bool kruskalKatonaCheck(const std::vector<long long>& f);

} // namespace cdx

#endif
