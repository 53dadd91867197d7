#include "doctest.h"

#include "cdindex/constructions.hpp"
#include "cdindex/homology.hpp"
#include "cdindex/simplicial.hpp"

using namespace cdx;

namespace {

/* The 6-vertex triangulation of the real projective plane; rationally
 * acyclic, so it exercises the boundary ranks without any torsion showing. */
SimplicialComplex rp2() {
    return makeComplex({"1", "2", "3", "4", "5", "6"},
                       {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                        {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
}

/* A disk glued to a triangle so its boundary wraps the triangle three
 * times: vertices 0..8 on the rim, 9..11 on the core.  First homology is
 * 3-torsion, which separates characteristic 3 from the rest. */
SimplicialComplex moore3() {
    std::vector<std::string> names;
    for (int i = 0; i < 13; ++i) names.push_back("m" + std::to_string(i));
    std::vector<std::vector<int>> facets;
    for (int j = 0; j < 9; ++j) {
        int j1 = (j + 1) % 9;
        facets.push_back({12, j, j1});                     // cone over the rim
        facets.push_back({j, j1, 9 + j1 % 3});             // prism, rim side
        facets.push_back({j, 9 + j % 3, 9 + (j + 1) % 3}); // prism, core side
    }
    return makeComplex(names, facets);
}

} // namespace

TEST_CASE("reduced homology of basic shapes") {
    CHECK(reducedHomologyRanks(orderComplex(hypercube(3)), FieldSpec::Q()) ==
          std::vector<int>{0, 0, 0, 1});
    CHECK(reducedHomologyRanks(orderComplex(crossPolytope(3)), FieldSpec::Q()) ==
          std::vector<int>{0, 0, 0, 1});
    CHECK(reducedHomologyRanks(orderComplex(nGon(5)), FieldSpec::Q()) ==
          std::vector<int>{0, 0, 1});
    CHECK(reducedHomologyRanks(orderComplex(sZeroPoset()), FieldSpec::Q()) ==
          std::vector<int>{0, 1});

    // a ball: deleting one facet from the cube boundary leaves a disk
    GradedPoset ball = deleteMax(hypercube(3), hypercube(3).id[std::size_t(hypercube(3).byRank[3][0])]);
    CHECK(reducedHomologyRanks(orderComplex(ball), FieldSpec::Q()) ==
          std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("homology depends on the field where it should") {
    CHECK(reducedHomologyRanks(rp2(), FieldSpec::Q()) == std::vector<int>{0, 0, 0, 0});
    CHECK(reducedHomologyRanks(moore3(), FieldSpec::Q()) == std::vector<int>{0, 0, 0, 0});
    CHECK(reducedHomologyRanks(moore3(), FieldSpec::Fp(3)) == std::vector<int>{0, 0, 1, 1});
    CHECK(reducedHomologyRanks(moore3(), FieldSpec::Fp(7)) == std::vector<int>{0, 0, 0, 0});
    CHECK(reisnerCM(moore3(), FieldSpec::Q()).pass);
    CHECK_FALSE(reisnerCM(moore3(), FieldSpec::Fp(3)).pass);
    CHECK(reisnerCM(moore3(), FieldSpec::Fp(7)).pass);
}

TEST_CASE("Cohen-Macaulay and Gorenstein* certificates") {
    CHECK(reisnerCM(orderComplex(pyramidWithFlap()), FieldSpec::Q()).pass);
    CHECK(gorensteinStar(orderComplex(hypercube(3)), FieldSpec::Q()).pass);

    CheckOutcome flap = gorensteinStar(orderComplex(pyramidWithFlap()), FieldSpec::Q());
    CHECK_FALSE(flap.pass);
    CHECK_FALSE(flap.witness.empty());

    // disjoint union of two edges: connected in no degree, not CM
    GradedPoset two = parsePoset(
        "n 2\nelem a1 1\nelem a2 1\nelem b1 2\nelem b2 2\ncover b1 a1\ncover b2 a2\n");
    CheckOutcome cm = reisnerCM(orderComplex(two), FieldSpec::Q());
    CHECK_FALSE(cm.pass);
    CHECK_FALSE(cm.witness.empty());

    // the scan-based entry points agree with the direct ones
    SimplicialComplex oc = orderComplex(pyramidWithFlap());
    auto scan = linkHomologyScan(oc, FieldSpec::Q());
    CHECK(reisnerCMFromScan(oc, scan).pass == true);
    CHECK(gorensteinStarFromScan(oc, scan).pass == false);
}

TEST_CASE("quasi-CW certificate") {
    CHECK(quasiCWCheck(pyramidWithFlap(), FieldSpec::Q()).pass);
    CHECK(quasiCWCheck(hypercube(3), FieldSpec::Q()).pass);
    CheckOutcome chain = quasiCWCheck(parsePoset("n 2\nelem a 1\nelem b 2\ncover b a\n"),
                                      FieldSpec::Q());
    CHECK_FALSE(chain.pass);
    CHECK_FALSE(chain.witness.empty());
}

TEST_CASE("incidence functions square to zero") {
    for (const GradedPoset& p : {hypercube(3), pyramidWithFlap(), simplexBoundary(3)}) {
        IncidenceFunction eps = incidenceFunction(p, FieldSpec::Q());
        CHECK(incidenceDiamondCheck(p, eps).pass);
        for (const auto& row : eps.sign)
            for (Int s : row) CHECK((s == 1 || s == -1));

        ChainComplexData c = posetChainComplex(p, eps);
        for (int d = 1; d + 1 < int(c.bnd.size()); ++d) {
            if (c.bnd[std::size_t(d)].rows == 0 || c.bnd[std::size_t(d) + 1].cols == 0) continue;
            CHECK(isZero(matMul(c.bnd[std::size_t(d)], c.bnd[std::size_t(d) + 1])));
        }
    }
}

TEST_CASE("cellular and simplicial homology agree on quasi-CW posets") {
    for (const GradedPoset& p :
         {hypercube(3), crossPolytope(3), pyramidWithFlap(), nGon(6), booleanPoset(2)}) {
        IncidenceFunction eps = incidenceFunction(p, FieldSpec::Q());
        ChainComplexData c = posetChainComplex(p, eps);
        CHECK(homologyRanks(c, FieldSpec::Q()) ==
              reducedHomologyRanks(orderComplex(p), FieldSpec::Q()));
    }
}

TEST_CASE("homology scan agrees across execution paths") {
    SimplicialComplex oc = orderComplex(barycentric(booleanPoset(2)));
    auto serial = linkHomologyScan(oc, FieldSpec::Q(), Exec::serial);
    auto parallel = linkHomologyScan(oc, FieldSpec::Q(), Exec::parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].face == parallel[i].face);
        CHECK(serial[i].ranks == parallel[i].ranks);
    }
}
