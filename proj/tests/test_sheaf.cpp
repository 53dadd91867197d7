#include <map>

#include "doctest.h"

#include "cdindex/constructions.hpp"
#include "cdindex/flags.hpp"
#include "cdindex/homology.hpp"
#include "cdindex/sheaf.hpp"

using namespace cdx;

namespace {

AbPoly psiOf(const GradedPoset& p) { return abIndex(flagH(flagF(p))); }

/* Boundary cd-indices for the structure sheaf: Phi of every open interval,
 * the constant 1 for rank-1 elements. */
std::map<int, CdPoly> boundaryIndices(const GradedPoset& p) {
    std::map<int, CdPoly> out;
    for (int e = 0; e < p.size(); ++e) {
        GradedPoset bd = openInterval(p, e);
        if (bd.n == 0) {
            out[e] = cdMono(CdWord{}, 1);
        } else {
            BExpression b = bExpression(psiOf(bd));
            REQUIRE(b.ok);
            out[e] = b.phi;
        }
    }
    return out;
}

} // namespace

TEST_CASE("structure sheaf is functorial and counts flags") {
    for (const GradedPoset& p : {hypercube(3), pyramidWithFlap(), nGon(5)}) {
        SheafData f = structureSheaf(p);
        CHECK(f.d == p.n);
        CHECK(f.stalk0 == 1);
        CHECK(sheafFunctorialityCheck(f).pass);
        CHECK(moduleFlagF(f).flagF.e == flagF(p).e);
    }
}

TEST_CASE("stalk formula reproduces the chain-counting ab-index") {
    for (const GradedPoset& p :
         {hypercube(3), pyramidWithFlap(), nGon(4), gorensteinGenerator({1, 1}).p}) {
        SheafData f = structureSheaf(p);
        CHECK(abIndexViaStalks(f, boundaryIndices(p)) == psiOf(p));
    }
}

TEST_CASE("module chain complex certifies CM") {
    GradedPoset p = pyramidWithFlap();
    SheafData f = structureSheaf(p);
    IncidenceFunction eps = incidenceFunction(p, FieldSpec::Q());
    CHECK(cmModuleCheck(f, eps, FieldSpec::Q()).pass);

    // quasi-CW but disconnected, so the top certificate fails honestly
    GradedPoset two = parsePoset(
        "n 2\nelem a1 1\nelem a2 1\nelem a3 1\nelem a4 1\nelem b1 2\nelem b2 2\n"
        "cover b1 a1\ncover b1 a2\ncover b2 a3\ncover b2 a4\n");
    CHECK_FALSE(cmModuleCheck(structureSheaf(two), incidenceFunction(two, FieldSpec::Q()),
                              FieldSpec::Q())
                    .pass);

    // a cell with one facet has no incidence function at all
    GradedPoset bad = parsePoset(
        "n 2\nelem a1 1\nelem a2 1\nelem b1 2\nelem b2 2\ncover b1 a1\ncover b2 a2\n");
    bool threw = false;
    try {
        incidenceFunction(bad, FieldSpec::Q());
    } catch (const CdxError& e) {
        threw = true;
        CHECK(e.code() == "KernelDimensionNotOne");
    }
    CHECK(threw);
}

TEST_CASE("dual stalks of a Gorenstein* poset are again ones") {
    GradedPoset p = crossPolytope(3);
    SheafData f = structureSheaf(p);
    IncidenceFunction eps = incidenceFunction(p, FieldSpec::Q());
    DualStalks d = dualStalkDims(f, eps, FieldSpec::Q());
    CHECK(d.stalk0 == 1);
    for (int e = 0; e < p.size(); ++e) CHECK(d.stalk[std::size_t(e)] == 1);

    // and the dual module's ab-index is the letter swap of the original
    ModuleFlagData mf = moduleFlagFFromDims(p, d.stalk0, d.stalk, f.d);
    CHECK(abIndex(flagH(mf.flagF)) == swapAb(psiOf(p)));
}

TEST_CASE("dual route reproduces the swapped index off the self-dual case") {
    GradedPoset p = pyramidWithFlap(); // CM but not Gorenstein*
    SheafData f = structureSheaf(p);
    IncidenceFunction eps = incidenceFunction(p, FieldSpec::Q());
    DualStalks d = dualStalkDims(f, eps, FieldSpec::Q());
    ModuleFlagData mf = moduleFlagFFromDims(p, d.stalk0, d.stalk, f.d);
    CHECK(abIndex(flagH(mf.flagF)) == swapAb(psiOf(p)));
}

TEST_CASE("skeleton quotients match the slices of the cd-index") {
    for (const GradedPoset& p : {hypercube(3), pyramidWithFlap(), simplexBoundary(3)}) {
        SheafData f = structureSheaf(p);
        IncidenceFunction eps = incidenceFunction(p, FieldSpec::Q());
        std::vector<AbPoly> oracle = karuPhiOracle(f, eps, FieldSpec::Q());
        REQUIRE(int(oracle.size()) == p.n - 1);

        BExpression b = bExpression(psiOf(p));
        REQUIRE(b.ok);
        for (int k = 0; k + 2 <= p.n; ++k) {
            CdWord suffix = cdAppend(CdWord{}, true); // d
            for (int j = 0; j < p.n - 2 - k; ++j) suffix = cdAppend(suffix, false);
            CHECK(expandCd(extractSub(b.phi, suffix)) == oracle[std::size_t(k)]);
        }
    }
}

TEST_CASE("order ideal sheaves reject non-ideals") {
    GradedPoset p = nGon(3);
    std::vector<char> inQ(std::size_t(p.size()), 1);
    inQ[std::size_t(p.byRank[1][0])] = 0; // keep an edge, drop one of its vertices
    bool threw = false;
    try {
        sheafFromOrderIdeal(p, inQ);
    } catch (const CdxError& e) {
        threw = true;
        CHECK(e.code() == "NotAnOrderIdeal");
    }
    CHECK(threw);

    // a genuine ideal: delete one maximal element
    std::vector<char> ok(std::size_t(p.size()), 1);
    ok[std::size_t(p.byRank[2][0])] = 0;
    SheafData f = sheafFromOrderIdeal(p, ok);
    CHECK(sheafFunctorialityCheck(f).pass);
}
