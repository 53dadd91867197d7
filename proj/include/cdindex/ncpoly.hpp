#ifndef CDINDEX_NCPOLY_HPP
#define CDINDEX_NCPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdindex/ints.hpp"
#include "cdindex/words.hpp"

namespace cdx {

/* Homogeneous polynomials in the free algebra on {a,b} resp. {c,d}.
 * deg is the declared degree; the zero polynomial keeps its degree and an
 * empty term map. */
struct AbPoly {
    int deg = 0;
    std::map<AbWord, Int, AbLess> t;

    bool isZero() const { return t.empty(); }
    Int coeff(AbWord w) const {
        auto it = t.find(w);
        return it == t.end() ? 0 : it->second;
    }
};

struct CdPoly {
    int deg = 0;
    std::map<CdWord, Int, CdLess> t;

    bool isZero() const { return t.empty(); }
    Int coeff(CdWord w) const {
        auto it = t.find(w);
        return it == t.end() ? 0 : it->second;
    }
};

AbPoly abZero(int deg);
CdPoly cdZero(int deg);
AbPoly abMono(AbWord w, Int c = 1);
CdPoly cdMono(CdWord w, Int c = 1);

void abAdd(AbPoly& p, AbWord w, Int c);
void cdAdd(CdPoly& p, CdWord w, Int c);

AbPoly abSum(const AbPoly& p, const AbPoly& q);
AbPoly abDiff(const AbPoly& p, const AbPoly& q);
AbPoly abScale(const AbPoly& p, Int c);
AbPoly abMul(const AbPoly& p, const AbPoly& q);

CdPoly cdSum(const CdPoly& p, const CdPoly& q);
CdPoly cdDiff(const CdPoly& p, const CdPoly& q);
CdPoly cdScale(const CdPoly& p, Int c);
CdPoly cdMul(const CdPoly& p, const CdPoly& q);

bool operator==(const AbPoly& p, const AbPoly& q);
bool operator==(const CdPoly& p, const CdPoly& q);

/* Substitute c = a+b, d = ab+ba. */
AbPoly expandCd(CdWord w);
AbPoly expandCd(const CdPoly& p);

/* Swap a and b in every word. */
AbPoly swapAb(const AbPoly& p);

/* Substitute a = 1: the coefficient vector of b^0..b^deg. */
std::vector<Int> hPolynomial(const AbPoly& p);

/* (a-b)^k */
AbPoly ambPow(int k);

/* p * b */
AbPoly timesB(const AbPoly& p);

/* Exact change of basis into cd-words.  Fails (ok = false) when the input
 * is not an integer combination of cd-words. */
struct ToCdResult {
    bool ok = false;
    CdPoly phi;
    std::string why;
};
ToCdResult toCd(const AbPoly& psi);

/* The unique decomposition psi = Phi + Upsilon * b with Phi, Upsilon in the
 * cd-algebra (degrees deg and deg-1).  The combined basis of F_{deg+2}
 * expansion vectors is verified to be linearly independent.  Degree-0
 * inputs are rejected; callers report constants as-is. */
struct BExpression {
    bool ok = false;
    CdPoly phi;
    CdPoly upsilon;
    std::string why;
};
BExpression bExpression(const AbPoly& psi);

/* psi = Phi' + Upsilon' * a with Phi' = Phi + Upsilon*c, Upsilon' = -Upsilon. */
struct AExpression {
    CdPoly phiPrime;
    CdPoly upsilonPrime;
};
AExpression aExpression(const BExpression& b);

/* psi = phiD * d + phiA * a + phiB * b, from the b-expression: split Phi by
 * last letter into Phi' c + Phi'' d, then phiD = Phi'', phiA = Phi',
 * phiB = Phi' + Upsilon.  Requires deg >= 1. */
struct ExtendedCdIndex {
    CdPoly phiD; // degree deg-2 (zero when deg < 2)
    CdPoly phiA; // degree deg-1
    CdPoly phiB; // degree deg-1
};
ExtendedCdIndex extendedCdIndex(const BExpression& b);

/* Collect terms ending in the given suffix and strip it. */
CdPoly extractSub(const CdPoly& p, CdWord suffix);

std::string printAb(const AbPoly& p);
std::string printCd(const CdPoly& p);
AbPoly parseAb(const std::string& s);
CdPoly parseCd(const std::string& s);

/* Maximum degree accepted by the exact change-of-basis solvers. */
inline constexpr int kMaxSolveDegree = 12;

} // namespace cdx

#endif
