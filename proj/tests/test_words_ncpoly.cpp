#include <stdexcept>

#include "doctest.h"

#include "cdindex/ncpoly.hpp"
#include "cdindex/words.hpp"

using namespace cdx;

namespace {

CdWord word(const std::string& s) {
    CdWord w{};
    for (char c : s) w = cdAppend(w, c == 'd');
    return w;
}

AbPoly timesLetter(const AbPoly& p, bool isB) {
    AbPoly letter{1, {}};
    abAdd(letter, abAppend(AbWord{}, isB), 1);
    return abMul(p, letter);
}

const char* kFlapPsi = "1*aaa + 5*baa + 9*aba + 5*aab + 5*bba + 8*bab + 4*abb + 1*bbb";

} // namespace

TEST_CASE("fibonacci numbers and cd-word enumeration") {
    long long expect[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (int i = 1; i <= 10; ++i) CHECK(fibonacci(i) == expect[i - 1]);

    for (int deg = 0; deg <= 8; ++deg)
        CHECK((long long)allCdWords(deg).size() == fibonacci(deg + 1));

    std::vector<std::string> deg3;
    for (CdWord w : allCdWords(3)) deg3.push_back(w.str());
    CHECK(deg3 == std::vector<std::string>{"ccc", "cd", "dc"});

    CHECK(word("cd").degree() == 3);
    CHECK(word("dd").degree() == 4);
    CHECK(CdWord{}.str() == "1");
}

TEST_CASE("ab-words encode flag subsets") {
    CHECK(abWordOfSubset(0b101u, 3).str() == "bab");
    CHECK(abWordOfSubset(0u, 2).str() == "aa");
    for (int n = 1; n <= 6; ++n)
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
            CHECK(subsetOfAbWord(abWordOfSubset(mask, n)) == mask);
}

TEST_CASE("kappa bijection between sparse subsets and cd-words") {
    for (int n = 1; n <= 8; ++n) {
        const auto subsets = allSparseSubsets(n);
        CHECK((long long)subsets.size() == fibonacci(n + 1));
        for (const auto& s : subsets) {
            CHECK(isSparseSubset(s, n));
            CdWord w = kappaToWord(s, n);
            CHECK(w.degree() == n);
            CHECK(kappaToSet(w) == s);
        }
    }
    CHECK(kappaToWord({}, 3).str() == "ccc");
    CHECK(kappaToWord({1}, 3).str() == "dc");
    CHECK(kappaToWord({2}, 3).str() == "cd");
    CHECK(kappaToWord({1, 3}, 4).str() == "dd");
    CHECK(kappaToSet(word("dcd")) == std::set<int>{1, 4});

    CHECK(subsetKey(std::set<int>{1, 3}) == "1,3");
    CHECK(subsetKey(std::set<int>{}) == "");
    CHECK(subsetKey(0b101u) == "1,3");
}

TEST_CASE("expandCd substitutes c = a+b, d = ab+ba, multiplicatively") {
    CHECK(printAb(expandCd(word("c"))) == "1*a + 1*b");
    CHECK(printAb(expandCd(word("d"))) == "1*ba + 1*ab"); // words sort by b-mask

    for (int dx = 0; dx <= 3; ++dx)
        for (CdWord x : allCdWords(dx))
            for (int dy = 0; dy + dx <= 5; ++dy)
                for (CdWord y : allCdWords(dy))
                    CHECK(expandCd(cdConcat(x, y)) == abMul(expandCd(x), expandCd(y)));
}

TEST_CASE("change of basis into cd-words round-trips and rejects") {
    for (int deg = 1; deg <= 5; ++deg) {
        CdPoly p = cdZero(deg);
        Int c = 1;
        for (CdWord w : allCdWords(deg)) cdAdd(p, w, c++ - 3);
        ToCdResult r = toCd(expandCd(p));
        CHECK(r.ok);
        CHECK(r.phi == p);
    }

    AbPoly aa{2, {}};
    abAdd(aa, abWordOfSubset(0, 2), 1);
    ToCdResult bad = toCd(aa);
    CHECK_FALSE(bad.ok);
    CHECK(bad.why.find("NotRepresentable") != std::string::npos);
}

TEST_CASE("b-expression of a known ab-index") {
    AbPoly psi = parseAb(kFlapPsi);
    BExpression b = bExpression(psi);
    REQUIRE(b.ok);
    CHECK(printCd(b.phi) == "1*ccc + 4*cd + 4*dc");
    CHECK(printCd(b.upsilon) == "-1*d");
    CHECK(abSum(expandCd(b.phi), timesLetter(expandCd(b.upsilon), true)) == psi);

    AExpression a = aExpression(b);
    CHECK(printCd(a.phiPrime) == "1*ccc + 4*cd + 3*dc");
    CHECK(printCd(a.upsilonPrime) == "1*d");
    CHECK(abSum(expandCd(a.phiPrime), timesLetter(expandCd(a.upsilonPrime), false)) == psi);
}

TEST_CASE("b-expression rejects what has none") {
    AbPoly chain{2, {}};
    abAdd(chain, abWordOfSubset(0, 2), 1); // psi of the rank-2 chain is aa
    BExpression b = bExpression(chain);
    CHECK_FALSE(b.ok);
    CHECK(b.why.find("NotRepresentable") != std::string::npos);

    AbPoly one{0, {}};
    abAdd(one, AbWord{}, 1);
    CHECK_THROWS_AS(bExpression(one), std::invalid_argument);
}

TEST_CASE("extended cd-index splits phi by last letter") {
    BExpression b = bExpression(parseAb(kFlapPsi));
    REQUIRE(b.ok);
    ExtendedCdIndex e = extendedCdIndex(b);
    CHECK(printCd(e.phiD) == "4*c");
    CHECK(printCd(e.phiA) == "1*cc + 4*d");
    CHECK(printCd(e.phiB) == "1*cc + 3*d");

    // psi = phiD*(ab+ba) + phiA*a + phiB*b
    AbPoly back = abMul(expandCd(e.phiD), expandCd(word("d")));
    back = abSum(back, timesLetter(expandCd(e.phiA), false));
    back = abSum(back, timesLetter(expandCd(e.phiB), true));
    CHECK(back == parseAb(kFlapPsi));
}

TEST_CASE("extractSub strips a suffix") {
    CdPoly phi = parseCd("1*ccc + 4*cd + 4*dc");
    CHECK(printCd(extractSub(phi, word("c"))) == "1*cc + 4*d");
    CHECK(printCd(extractSub(phi, word("d"))) == "4*c");
    CHECK(printCd(extractSub(phi, word("dc"))) == "4*1");
    CHECK(extractSub(phi, word("dd")).isZero());
}

TEST_CASE("printing and parsing are inverse") {
    for (const char* s : {"1*ccc + 4*cd + 4*dc", "-1*d", "2*1", "0", "1*cc - 2*d"})
        CHECK(printCd(parseCd(s)) == s);
    for (const char* s : {kFlapPsi, "1*ba - 1*ab", "0"}) CHECK(printAb(parseAb(s)) == s);
}

TEST_CASE("small helpers") {
    CHECK(hPolynomial(parseAb(kFlapPsi)) == std::vector<Int>{1, 19, 17, 1});
    CHECK(printAb(ambPow(2)) == "1*aa - 1*ba - 1*ab + 1*bb");
    CHECK(swapAb(parseAb("1*ab + 2*ba")) == parseAb("2*ab + 1*ba"));
    CHECK(timesB(parseAb("1*a")) == parseAb("1*ab"));
    CHECK(printAb(timesB(parseAb("2*1"))) == "2*b");
}
