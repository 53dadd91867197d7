#ifndef CDINDEX_CONSTRUCTIONS_HPP
#define CDINDEX_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "cdindex/poset.hpp"

namespace cdx {

/* Hand-coded combinatorial face posets; no geometry enters anywhere.
 * Every factory returns a validated poset. */

GradedPoset sZeroPoset();            // two atoms s1_0, s1_1; rank 1
GradedPoset pointPoset();            // one atom; rank 1
GradedPoset nGon(int m);             // m >= 3 vertices and edges; rank 2
GradedPoset simplexBoundary(int d);  // proper faces of the d-simplex; rank d
GradedPoset crossPolytope(int d);    // boundary of the d-cross-polytope; rank d
GradedPoset booleanPoset(int d);     // full d-simplex, top face included; rank d+1
GradedPoset hypercube(int d);        // boundary of the d-cube; rank d
GradedPoset starGraph(int k);        // k >= 2 edges sharing one vertex; rank 2
GradedPoset pyramidWithFlap();       // square pyramid boundary plus a glued triangle

/* Recipe strings: szero | point | flap | ngon:<m> | simplex:<d> | cross:<d>
 * | cube[:<d>] | boolean:<d> | star:<k> | cap:<recipe>.  BadParameter. */
GradedPoset standardPoset(const std::string& recipe);

/* Face poset of the order complex. */
GradedPoset barycentric(const GradedPoset& p);

/* Adjoin one maximal element of rank n+1 covering every rank-n element. */
GradedPoset capPoset(const GradedPoset& p, const std::string& topId = "cap");

/* Remove one maximal element; the rest is unchanged. */
GradedPoset deleteMax(const GradedPoset& p, const std::string& id);

/* Two new top elements of rank n+1, each covering exactly the rank-n
 * elements of q.  Every other relation is inherited. */
GradedPoset suspend(const GradedPoset& q, const std::string& etaId = "eta",
                    const std::string& etaPrimeId = "eta_p");

/* U(p; sigma, tau) for a cover sigma > tau with tau above the minimum:
 * the cover (sigma, tau) is removed; sigma' (same rank as sigma) sits under
 * every upper cover of sigma and covers tau and tau'; tau' (same rank as tau)
 * takes tau's lower covers and sits under sigma and sigma'.
 * Empty prime ids pick <name>_p.  Errors: NotACover, TauIsBottom. */
GradedPoset unzip(const GradedPoset& p, const std::string& sigma, const std::string& tau,
                  const std::string& sigmaPrimeId = "", const std::string& tauPrimeId = "");

struct GeneratorResult {
    GradedPoset p;
    std::string distinguished; // top element whose boundary is the previous stage
};

/* Extremal poset of rank alphas.size()+1: start from the two atoms, and at
 * stage k suspend (new tops s<k+1>_0 and s<k+1>_1) and then unzip alphas[k-1]
 * times down the distinguished chain; unzip j adds s<k+1>_<2j> and
 * s<k+1>_<2j+1>.  The cd-coefficient indexed by a sparse set S comes out as
 * the product of alphas over S. */
GeneratorResult gorensteinGenerator(const std::vector<int>& alphas);

struct CorpusEntry {
    std::string name;
    GradedPoset p;
    std::vector<std::string> tags; // "polyhedral" and/or "generator"
};

/* Fixture battery spanning ranks 1..5: polygons, polytope boundaries and
 * balls, barycentric subdivisions, generator outputs. */
std::vector<CorpusEntry> builtinCorpus();

} // namespace cdx

#endif
