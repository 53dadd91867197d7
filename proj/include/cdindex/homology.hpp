#ifndef CDINDEX_HOMOLOGY_HPP
#define CDINDEX_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "cdindex/field.hpp"
#include "cdindex/matrix.hpp"
#include "cdindex/parallel.hpp"
#include "cdindex/poset.hpp"
#include "cdindex/simplicial.hpp"

namespace cdx {

struct CheckOutcome {
    bool pass = true;
    std::string witness; // first counterexample when pass = false
};

/* ranks[j] = rank of reduced homology in degree j-1, j = 0..dim+1. */
std::vector<int> reducedHomologyRanks(const SimplicialComplex& k, const FieldSpec& f,
                                      Exec exec = defaultExec());

/* One homology computation per face (the empty face included), faces ordered
 * by (dimension, lex); both certifications below read off this table. */
struct FaceLinkRanks {
    std::vector<int> face;
    int linkDim = -1;
    std::vector<int> ranks; // reduced ranks of the link, degree offset -1
};
std::vector<FaceLinkRanks> linkHomologyScan(const SimplicialComplex& k, const FieldSpec& f,
                                            Exec exec = defaultExec());

/* Reisner: every face's link has vanishing reduced homology below its own
 * dimension. */
CheckOutcome reisnerCM(const SimplicialComplex& k, const FieldSpec& f, Exec exec = defaultExec());
CheckOutcome reisnerCMFromScan(const SimplicialComplex& k, const std::vector<FaceLinkRanks>& scan);

/* Every face's link has the reduced homology of a sphere of its dimension. */
CheckOutcome gorensteinStar(const SimplicialComplex& k, const FieldSpec& f, Exec exec = defaultExec());
CheckOutcome gorensteinStarFromScan(const SimplicialComplex& k, const std::vector<FaceLinkRanks>& scan);

/* For every element sigma: the order complex of the open interval below
 * sigma passes gorensteinStar; rank-1 boundaries are {empty face} and pass. */
CheckOutcome quasiCWCheck(const GradedPoset& p, const FieldSpec& f, Exec exec = defaultExec());

/* sign[e][j] is epsilon(e, low[e][j]) in {+1,-1}; epsilon(sigma, 0-hat) = 1
 * for rank-1 sigma is implicit. */
struct IncidenceFunction {
    std::vector<std::vector<Int>> sign;
};

/* Rank induction: for each sigma of rank >= 2 the sign vector spans the
 * kernel of the boundary already built on the top two layers of the open
 * interval; the first entry is normalized to +1.  Errors:
 * KernelDimensionNotOne, NonUnitEntries. */
IncidenceFunction incidenceFunction(const GradedPoset& p, const FieldSpec& f);

/* Exhaustive scan of sum_tau eps(sigma,tau) eps(tau,rho) = 0 over all
 * length-2 intervals, the augmented rho = 0-hat row included. */
CheckOutcome incidenceDiamondCheck(const GradedPoset& p, const IncidenceFunction& eps);

/* Chain complex over degrees -1..topDeg; dims[d+1] = dim C_d and bnd[d+1]
 * maps C_d to C_{d-1} (bnd[0] stays empty).  Entries are integers read in
 * whichever exact field a rank computation chooses. */
struct ChainComplexData {
    int topDeg = -1;
    std::vector<int> dims;
    std::vector<IntMat> bnd;
};

/* C_i spanned by the rank-(i+1) elements, C_{-1} by 0-hat; asserts that
 * consecutive boundaries compose to zero. */
ChainComplexData posetChainComplex(const GradedPoset& p, const IncidenceFunction& eps);

/* ranks[j] = rank H_{j-1}, j = 0..topDeg+1. */
std::vector<int> homologyRanks(const ChainComplexData& c, const FieldSpec& f, Exec exec = defaultExec());

std::string faceName(const SimplicialComplex& k, const std::vector<int>& face);

} // namespace cdx

#endif
