#ifndef CDINDEX_SHEAF_HPP
#define CDINDEX_SHEAF_HPP

#include <map>
#include <vector>

#include "cdindex/flags.hpp"
#include "cdindex/homology.hpp"
#include "cdindex/ncpoly.hpp"
#include "cdindex/poset.hpp"

namespace cdx {

/* A sheaf of finite vector spaces on a graded poset, stored by cover-pair
 * restriction maps; longer restrictions are compositions.  res[e][j] maps
 * the stalk at e into the stalk at low[e][j] (shape stalk(low) x stalk(e));
 * res0[e] maps rank-1 stalks into the 0-hat stalk. */
struct SheafData {
    GradedPoset base;
    int stalk0 = 0;
    std::vector<int> stalk;
    std::vector<std::vector<IntMat>> res;
    std::vector<IntMat> res0;
    int d = 0; // max rank with a nonzero stalk
};

/* Stalk dim 1 on the ideal and at 0-hat, identity restrictions inside,
 * zero outside.  inQ is indexed by element; NotAnOrderIdeal when some
 * member's lower cover is excluded. */
SheafData sheafFromOrderIdeal(const GradedPoset& p, const std::vector<char>& inQ);
SheafData structureSheaf(const GradedPoset& p);

/* Functoriality: restrictions composed along any two saturated chains from
 * sigma down to rho agree (exhaustive over comparable pairs). */
CheckOutcome sheafFunctorialityCheck(const SheafData& f);

struct ModuleFlagData {
    FlagVector flagF; // over [d]
    int d = 0;
};

/* f_S = sum over S-chains of the stalk dim at the chain's top; f_empty is
 * the 0-hat stalk.  Only stalk dimensions matter, so dual modules known
 * through their dimensions alone go through the same code. */
ModuleFlagData moduleFlagFFromDims(const GradedPoset& base, int stalk0, const std::vector<int>& stalk,
                                   int d);
ModuleFlagData moduleFlagF(const SheafData& f);

/* (dim M_0)(a-b)^d + sum_sigma stalk(sigma) * expand(boundaryPhi[sigma]) *
 * b * (a-b)^(d - rank sigma); the formula-vs-counting oracle against
 * abIndex(flagH(moduleFlagF)).  MissingBoundaryIndex when a nonzero stalk
 * has no boundary cd-index supplied. */
AbPoly abIndexViaStalks(const SheafData& f, const std::map<int, CdPoly>& boundaryPhi);

/* C_i = direct sum of stalks over rank-(i+1) elements; block (tau, sigma)
 * is eps(sigma,tau) res^sigma_tau; asserts del o del = 0. */
ChainComplexData sheafChainComplex(const SheafData& f, const IncidenceFunction& eps);

/* Reduced link homology through the quotient complex C/C^{costar}:
 * out[j+1] = rank Htilde_j(lk_F(sigma)) for j = -1..d-1-rank(sigma);
 * sigma = kZeroHat gives the homology of the full complex. */
std::vector<int> linkQuotientHomology(const SheafData& f, const IncidenceFunction& eps, int sigma,
                                      const FieldSpec& k, Exec exec = defaultExec());

/* Cohen-Macaulay criterion: for every sigma (0-hat included) the link
 * homology is concentrated in degree d - 1 - rank(sigma). */
CheckOutcome cmModuleCheck(const SheafData& f, const IncidenceFunction& eps, const FieldSpec& k,
                           Exec exec = defaultExec());

/* Stalk dimensions of the dual module: rank of H_{d-1} of the quotient at
 * each sigma; restriction maps of the dual are not computed. */
struct DualStalks {
    int stalk0 = 0;
    std::vector<int> stalk;
};
DualStalks dualStalkDims(const SheafData& f, const IncidenceFunction& eps, const FieldSpec& k,
                         Exec exec = defaultExec());

/* Stalks above rank k+1 zeroed, restrictions truncated. */
SheafData skeletonSheaf(const SheafData& f, int k);

/* For k = 0..d-2: the ab-index of Omega(F^(k)) / F^(k), computed from dual
 * stalk dimensions minus skeleton stalk dimensions (the degree-preserving
 * injection makes quotient dimensions differences).  Throws
 * NegativeQuotientDim if any difference is negative; never clamps. */
std::vector<AbPoly> karuPhiOracle(const SheafData& f, const IncidenceFunction& eps, const FieldSpec& k,
                                  Exec exec = defaultExec());

} // namespace cdx

#endif
