#include "doctest.h"

#include "cdindex/constructions.hpp"
#include "cdindex/error.hpp"
#include "cdindex/flags.hpp"
#include "cdindex/homology.hpp"
#include "cdindex/simplicial.hpp"
#include "cdindex/words.hpp"

using namespace cdx;

namespace {

CdPoly phiOf(const GradedPoset& p) {
    if (p.n == 0) return cdMono(CdWord{}, 1);
    BExpression b = bExpression(abIndex(flagH(flagF(p))));
    REQUIRE(b.ok);
    return b.phi;
}

std::vector<int> rankCounts(const GradedPoset& p) {
    std::vector<int> out;
    for (int r = 1; r <= p.n; ++r) out.push_back(int(p.byRank[std::size_t(r)].size()));
    return out;
}

CdPoly dTimes(const CdPoly& left, const CdPoly& right) {
    return cdMul(cdMul(left, cdMono(cdAppend(CdWord{}, true), 1)), right);
}

/* Phi_U = Phi_P + Phi_{boundary of tau} * d * Phi_{link of sigma}, with both
 * sides computed independently; U stays Gorenstein*. */
int checkUnzipIdentities(const GradedPoset& p) {
    int instances = 0;
    CdPoly phiP = phiOf(p);
    for (int r = 2; r <= p.n; ++r) {
        int sigma = p.byRank[std::size_t(r)][0];
        int tau = p.low[std::size_t(sigma)][0];
        GradedPoset u = unzip(p, p.id[std::size_t(sigma)], p.id[std::size_t(tau)]);
        CHECK(u.size() == p.size() + 2);

        CdPoly rhs = cdSum(phiP, dTimes(phiOf(openInterval(p, tau)), phiOf(link(p, sigma))));
        CHECK(phiOf(u) == rhs);
        CHECK(gorensteinStar(orderComplex(u), FieldSpec::Q()).pass);
        ++instances;
    }
    return instances;
}

} // namespace

TEST_CASE("fixture shapes") {
    CHECK(rankCounts(sZeroPoset()) == std::vector<int>{2});
    CHECK(rankCounts(nGon(4)) == std::vector<int>{4, 4});
    CHECK(rankCounts(simplexBoundary(3)) == std::vector<int>{4, 6, 4});
    CHECK(rankCounts(crossPolytope(3)) == std::vector<int>{6, 12, 8});
    CHECK(rankCounts(hypercube(3)) == std::vector<int>{8, 12, 6});
    CHECK(rankCounts(booleanPoset(2)) == std::vector<int>{3, 3, 1});
    CHECK(rankCounts(starGraph(3)) == std::vector<int>{4, 3});
    CHECK(rankCounts(pyramidWithFlap()) == std::vector<int>{6, 10, 6});
    CHECK(rankCounts(capPoset(hypercube(3))) == std::vector<int>{8, 12, 6, 1});
    CHECK(rankCounts(barycentric(booleanPoset(1))) == std::vector<int>{3, 2});
}

TEST_CASE("recipe strings name the same posets") {
    CHECK(printPoset(standardPoset("ngon:6")) == printPoset(nGon(6)));
    CHECK(printPoset(standardPoset("cube")) == printPoset(hypercube(3)));
    CHECK(printPoset(standardPoset("cube:4")) == printPoset(hypercube(4)));
    CHECK(printPoset(standardPoset("cap:cross:3")) == printPoset(capPoset(crossPolytope(3))));
    CHECK(printPoset(standardPoset("bary:ngon:4")) == printPoset(barycentric(nGon(4))));
    for (const char* bad : {"nope", "ngon:2", "ngon:x", "simplex:"}) {
        bool threw = false;
        try {
            standardPoset(bad);
        } catch (const CdxError& e) {
            threw = true;
            CHECK(e.code() == "BadParameter");
        }
        CHECK(threw);
    }
}

TEST_CASE("known cd-indices of the fixture battery") {
    CHECK(printCd(phiOf(sZeroPoset())) == "1*c");
    CHECK(printCd(phiOf(nGon(4))) == "1*cc + 2*d");
    CHECK(printCd(phiOf(starGraph(3))) == "1*cc + 2*d");
    CHECK(printCd(phiOf(simplexBoundary(3))) == "1*ccc + 2*cd + 2*dc");
    CHECK(printCd(phiOf(crossPolytope(3))) == "1*ccc + 6*cd + 4*dc");
    CHECK(printCd(phiOf(hypercube(3))) == "1*ccc + 4*cd + 6*dc");
    CHECK(printCd(phiOf(booleanPoset(2))) == "1*ccc + 1*dc");
    CHECK(printCd(phiOf(barycentric(hypercube(3)))) == "1*ccc + 46*cd + 24*dc");
    CHECK(printCd(phiOf(barycentric(simplexBoundary(3)))) == "1*ccc + 22*cd + 12*dc");
}

TEST_CASE("suspension appends c to the cd-index") {
    for (const GradedPoset& q : {sZeroPoset(), nGon(5), crossPolytope(3)}) {
        GradedPoset s = suspend(q);
        CHECK(s.n == q.n + 1);
        CHECK(int(s.byRank[std::size_t(s.n)].size()) == 2);
        CdPoly expect = cdMul(phiOf(q), cdMono(cdAppend(CdWord{}, false), 1));
        CHECK(phiOf(s) == expect);
    }
}

TEST_CASE("unzipping the 4-gon gives the 5-gon") {
    GradedPoset u = unzip(nGon(4), "e1", "v1");
    CHECK(rankCounts(u) == std::vector<int>{5, 5});
    CHECK(printCd(phiOf(u)) == "1*cc + 3*d");
}

TEST_CASE("unzip error cases") {
    bool threw = false;
    try {
        unzip(nGon(4), "e1", "v3"); // v3 is not under e1
    } catch (const CdxError& e) {
        threw = true;
        CHECK(e.code() == "NotACover");
    }
    CHECK(threw);
    threw = false;
    try {
        unzip(pointPoset(), "v", "_0");
    } catch (const CdxError& e) {
        threw = true;
        CHECK(e.code() == "TauIsBottom");
    }
    CHECK(threw);
}

TEST_CASE("unzip identity across many instances") {
    int instances = 0;
    instances += checkUnzipIdentities(nGon(4));
    instances += checkUnzipIdentities(nGon(5));
    instances += checkUnzipIdentities(nGon(7));
    instances += checkUnzipIdentities(simplexBoundary(3));
    instances += checkUnzipIdentities(crossPolytope(3));
    instances += checkUnzipIdentities(hypercube(3));
    instances += checkUnzipIdentities(gorensteinGenerator({1, 1}).p);
    CHECK(instances >= 10);
}

TEST_CASE("generator hits the prescribed cd-coefficients") {
    GeneratorResult g = gorensteinGenerator({1, 2, 1});
    CHECK(g.p.n == 4);
    CHECK(printCd(phiOf(g.p)) == "1*cccc + 1*ccd + 2*cdc + 1*dcc + 1*dd");

    std::vector<int> alphas = {2, 0, 2};
    CdPoly phi = phiOf(gorensteinGenerator(alphas).p);
    for (const std::set<int>& s : allSparseSubsets(4)) {
        Int expect = 1;
        for (int i : s) expect *= alphas[std::size_t(i) - 1];
        CHECK(phi.coeff(kappaToWord(s, 4)) == expect);
    }

    CHECK(printCd(phiOf(gorensteinGenerator({0, 0, 0}).p)) == "1*cccc");
    CHECK(printCd(phiOf(gorensteinGenerator({3}).p)) == "1*cc + 3*d");
}

TEST_CASE("the distinguished element's boundary is the previous stage") {
    GeneratorResult g = gorensteinGenerator({1, 2, 1});
    GradedPoset bd = openInterval(g.p, mustIndex(g.p, g.distinguished));
    CHECK(phiOf(bd) == phiOf(gorensteinGenerator({1, 2}).p));
}

TEST_CASE("the corpus is large and diverse enough") {
    auto entries = builtinCorpus();
    CHECK(entries.size() >= 30);
    int rank4 = 0, rank5 = 0, generators = 0;
    for (const CorpusEntry& e : entries) {
        CHECK(!e.name.empty());
        if (e.p.n == 4) ++rank4;
        if (e.p.n == 5) ++rank5;
        for (const std::string& t : e.tags) CHECK((t == "polyhedral" || t == "generator"));
        if (!e.tags.empty() && e.tags[0] == "generator") ++generators;
    }
    CHECK(rank4 >= 8);
    CHECK(rank5 >= 2);
    CHECK(generators >= 9);
}
