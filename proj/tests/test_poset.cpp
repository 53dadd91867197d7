#include <functional>

#include "doctest.h"

#include "cdindex/constructions.hpp"
#include "cdindex/error.hpp"
#include "cdindex/poset.hpp"

using namespace cdx;

namespace {

std::string codeOf(const std::function<void()>& f) {
    try {
        f();
    } catch (const CdxError& e) {
        return e.code();
    }
    return "";
}

std::vector<int> rankCounts(const GradedPoset& p) {
    std::vector<int> out;
    for (int r = 1; r <= p.n; ++r) out.push_back(int(p.byRank[std::size_t(r)].size()));
    return out;
}

} // namespace

TEST_CASE("parse, print, parse is the identity") {
    for (const GradedPoset& p : {pyramidWithFlap(), hypercube(3), booleanPoset(2)}) {
        std::string text = printPoset(p);
        GradedPoset q = parsePoset(text);
        CHECK(printPoset(q) == text);
        CHECK(q.n == p.n);
        CHECK(q.size() == p.size());
    }
}

TEST_CASE("parser names the offending line") {
    try {
        parsePoset("n 2\nelem a 1\ncover b a c\n");
        FAIL("expected a parse error");
    } catch (const CdxError& e) {
        CHECK(e.code() == "ParseError");
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK(codeOf([] { parsePoset("elem a 1\n"); }) == "ParseError");      // missing n
    CHECK(codeOf([] { parsePoset("n 1\nelem _0 1\n"); }) == "ParseError"); // reserved id
    CHECK(codeOf([] { parsePoset("n 1\nfoo\n"); }) == "ParseError");       // unknown directive
}

TEST_CASE("validation rejects broken input") {
    auto raw = [](int n, std::vector<std::pair<std::string, int>> elems,
                  std::vector<std::pair<std::string, std::string>> covers) {
        RawPoset r;
        r.n = n;
        r.elems = std::move(elems);
        r.covers = std::move(covers);
        return r;
    };
    CHECK(codeOf([&] { validatePoset(raw(2, {{"a", 1}, {"b", 2}}, {{"b", "x"}})); }) ==
          "DanglingReference");
    CHECK(codeOf([&] { validatePoset(raw(3, {{"a", 1}, {"b", 3}}, {{"b", "a"}})); }) ==
          "NonGradedCover");
    CHECK(codeOf([&] { validatePoset(raw(2, {{"a", 1}, {"a", 2}}, {})); }) != "");
    // declared rank 2 but no chain of that length
    CHECK(codeOf([&] { validatePoset(raw(2, {{"a", 1}, {"b", 2}}, {})); }) == "RankMismatch");
    CHECK(codeOf([&] { validatePoset(raw(2, {{"a", 1}, {"b", 2}}, {{"b", "a"}})); }) == "");
}

TEST_CASE("index lookup and order relation") {
    GradedPoset p = hypercube(3);
    CHECK(mustIndex(p, "_0") == kZeroHat);
    CHECK(codeOf([&] { mustIndex(p, "nope"); }) == "ElementNotFound");

    int f = p.byRank[3][0];
    CHECK(p.leq(kZeroHat, f));
    CHECK_FALSE(p.leq(f, kZeroHat));
    int v = p.low[std::size_t(p.low[std::size_t(f)][0])][0]; // vertex under an edge under f
    CHECK(p.leq(v, f));
    CHECK_FALSE(p.leq(f, v));
    CHECK(p.below[std::size_t(f)].size() == std::size_t(p.size()));
}

TEST_CASE("interval, link, costar and skeleton surgery") {
    GradedPoset cube = hypercube(3);
    int facet = cube.byRank[3][0];
    int vertex = cube.byRank[1][0];

    GradedPoset bd = openInterval(cube, facet); // boundary of a square facet
    CHECK(bd.n == 2);
    CHECK(rankCounts(bd) == std::vector<int>{4, 4});

    GradedPoset cl = closedInterval(cube, facet);
    CHECK(cl.n == 3);
    CHECK(cl.size() == 9);

    GradedPoset lk = link(cube, vertex); // re-ranked: 3 edges, 3 squares
    CHECK(lk.n == 2);
    CHECK(rankCounts(lk) == std::vector<int>{3, 3});

    GradedPoset cs = costar(cube, facet);
    CHECK(cs.size() == cube.size() - 1);

    GradedPoset sk = skeleton(cube, 1);
    CHECK(sk.n == 2);
    CHECK(rankCounts(sk) == std::vector<int>{8, 12});

    CHECK(maximalChains(cube).size() == 48);
    CHECK(maximalChains(sZeroPoset()).size() == 2);
}
