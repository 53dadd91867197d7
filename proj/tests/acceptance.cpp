// Acceptance battery: one line per criterion, nonzero exit on any failure.
// Runs the full built-in corpus with every check once, then reads the
// collected reports plus a few direct computations.

#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cdindex/artinian.hpp"
#include "cdindex/constructions.hpp"
#include "cdindex/error.hpp"
#include "cdindex/flags.hpp"
#include "cdindex/homology.hpp"
#include "cdindex/matrix.hpp"
#include "cdindex/ncpoly.hpp"
#include "cdindex/poset.hpp"
#include "cdindex/simplicial.hpp"
#include "cdindex/verify.hpp"
#include "cdindex/words.hpp"

using namespace cdx;

namespace {

int failures = 0;

void crit(int n, bool ok, const std::string& desc, const std::string& why = "") {
    if (!ok) ++failures;
    std::printf("criterion %2d %s  %s%s\n", n, ok ? "pass" : "FAIL", desc.c_str(),
                (!ok && !why.empty()) ? ("  [" + why + "]").c_str() : "");
}

std::string statusOf(const VerificationReport& r, const std::string& name) {
    for (const CheckResult& c : r.checks)
        if (c.name == name) return c.status;
    return "missing";
}

CdPoly phiOf(const GradedPoset& p) {
    if (p.n == 0) return cdMono(CdWord{}, 1); // empty interval contributes 1
    BExpression b = bExpression(abIndex(flagH(flagF(p))));
    if (!b.ok) throw CdxError("NotRepresentable", b.why);
    return b.phi;
}

CdPoly dTimes(const CdPoly& left, const CdPoly& right) {
    return cdMul(cdMul(left, cdMono(cdAppend(CdWord{}, true), 1)), right);
}

AbPoly letterTimes(const AbPoly& p, bool isB) {
    return abMul(p, abMono(abAppend(AbWord{}, isB), 1));
}

bool flagMatches(const FlagVector& v, const std::vector<std::pair<unsigned, Int>>& want) {
    for (auto [mask, value] : want)
        if (v.e[mask] != value) return false;
    return true;
}

/* p = 32003 essentially never yields a degenerate draw, but the contract
 * says redraw, so mirror the verify check's retry policy. */
std::vector<long long> hilbertRetry(const SimplicialComplex& k, int forms, std::uint64_t seed) {
    for (int t = 0;; ++t) {
        try {
            return quotientHilbert(k, forms, 32003, seed + 7919u * std::uint64_t(t));
        } catch (const CdxError& e) {
            if (std::string(e.code()) != "NotArtinian" || t >= 7) throw;
        }
    }
}

bool hasTag(const CorpusEntry& e, const std::string& tag) {
    for (const std::string& t : e.tags)
        if (t == tag) return true;
    return false;
}

} // namespace

int main() {
    std::vector<CorpusEntry> corpus = builtinCorpus();
    CorpusSummary summary = corpusSummary(corpus, {"all"}, VerifyOptions{});

    std::string broken;
    for (std::size_t i = 0; i < summary.rows.size(); ++i)
        if (!summary.rows[i].error.empty() || summary.rows[i].name != corpus[i].name)
            broken = summary.rows[i].name;
    if (!broken.empty()) {
        std::printf("corpus run failed on %s\n", broken.c_str());
        return 1;
    }
    auto report = [&](std::size_t i) -> const VerificationReport& { return summary.rows[i].report; };

    // 1: the glued-pyramid example end to end
    {
        GradedPoset p = pyramidWithFlap();
        FlagVector f = flagF(p);
        FlagVector h = flagH(f);
        bool ok = flagMatches(f, {{0, 1}, {1, 6}, {2, 10}, {4, 6}, {3, 20}, {5, 19}, {6, 19}, {7, 38}}) &&
                  flagMatches(h, {{0, 1}, {1, 5}, {2, 9}, {4, 5}, {3, 5}, {5, 8}, {6, 4}, {7, 1}});
        BExpression b = bExpression(abIndex(h));
        ExtendedCdIndex e = extendedCdIndex(b);
        ok = ok && b.ok && printCd(e.phiD) == "4*c" && printCd(e.phiA) == "1*cc + 4*d" &&
             printCd(e.phiB) == "1*cc + 3*d";
        ok = ok && reisnerCM(orderComplex(p), FieldSpec::Q()).pass &&
             !gorensteinStar(orderComplex(p), FieldSpec::Q()).pass;
        crit(1, ok, "glued-pyramid example: flag vectors, extended cd-index, certificates");
    }

    // 2: reconstruction identities across the whole corpus
    {
        std::string why;
        int members = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const VerificationReport& r = report(i);
            if (!r.bexp.ok) {
                why = corpus[i].name + " has no b-expression";
                break;
            }
            ++members;
            AbPoly viaB = abSum(expandCd(r.bexp.phi), letterTimes(expandCd(r.bexp.upsilon), true));
            AbPoly viaExt = r.ext.phiD.isZero()
                                ? abZero(r.psi.deg)
                                : abMul(expandCd(r.ext.phiD), expandCd(cdAppend(CdWord{}, true)));
            viaExt = abSum(viaExt, letterTimes(expandCd(r.ext.phiA), false));
            viaExt = abSum(viaExt, letterTimes(expandCd(r.ext.phiB), true));
            if (!(viaB == r.psi) || !(viaExt == r.psi)) {
                why = "mismatch on " + corpus[i].name;
                break;
            }
        }
        crit(2, why.empty() && members >= 30,
             "b-expression and extended-index reconstructions on " + std::to_string(members) +
                 " corpus members",
             why);
    }

    // helper for criteria that read one check's status across the corpus
    auto allWith = [&](const std::string& when, const std::string& check, std::string& why) {
        bool ok = true;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (statusOf(report(i), when) != "pass") continue;
            if (statusOf(report(i), check) != "pass") {
                ok = false;
                why = corpus[i].name + ": " + check + " " + statusOf(report(i), check);
            }
        }
        return ok;
    };

    {
        std::string why;
        crit(3, allWith("cm", "nonneg", why),
             "extended cd-index nonnegative on every Cohen-Macaulay member", why);
    }
    {
        std::string why;
        crit(4, allWith("cm", "unimodal", why),
             "all four h-vector inequality families on Cohen-Macaulay members", why);
    }
    {
        std::string why;
        crit(5, allWith("cm", "karu-oracle", why),
             "skeleton-quotient slices equal the cd-index blocks on Cohen-Macaulay members", why);
    }
    {
        std::string why;
        crit(6, allWith("quasicw", "lemma26-oracle", why),
             "stalk formula reproduces the ab-index on quasi-CW members", why);
    }

    // 7: duality, with symmetry on the sphere-like members
    {
        std::string why;
        bool ok = allWith("cm", "duality", why);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const VerificationReport& r = report(i);
            if (statusOf(r, "gorenstein") == "pass" && !(swapAb(r.psi) == r.psi)) {
                ok = false;
                why = corpus[i].name + ": ab-index not symmetric";
            }
        }
        crit(7, ok, "dual-route ab-index reversed everywhere; symmetric on homology spheres",
             why);
    }

    // 8: unzipping instances with independent sides
    {
        std::string why;
        int instances = 0;
        std::vector<GradedPoset> hosts = {nGon(4),           nGon(5),          nGon(7),
                                          simplexBoundary(3), crossPolytope(3), hypercube(3),
                                          gorensteinGenerator({1, 1}).p};
        for (const GradedPoset& p : hosts) {
            CdPoly phiP = phiOf(p);
            for (int rk = 2; rk <= p.n && why.empty(); ++rk) {
                int sigma = p.byRank[std::size_t(rk)][0];
                int tau = p.low[std::size_t(sigma)][0];
                GradedPoset u = unzip(p, p.id[std::size_t(sigma)], p.id[std::size_t(tau)]);
                CdPoly rhs = cdSum(phiP, dTimes(phiOf(openInterval(p, tau)), phiOf(link(p, sigma))));
                if (u.size() != p.size() + 2 || !(phiOf(u) == rhs) ||
                    !gorensteinStar(orderComplex(u), FieldSpec::Q()).pass)
                    why = "instance " + p.id[std::size_t(sigma)] + "/" + p.id[std::size_t(tau)];
                else
                    ++instances;
            }
        }
        crit(8, why.empty() && instances >= 10,
             std::to_string(instances) + " unzip instances: cd-index increment and sphere checks",
             why);
    }

    // 9: extremal generators hit every product value and nest at the top
    {
        std::string why;
        std::vector<std::vector<int>> params = {{0}, {3}, {1, 2, 1}, {2, 0, 2}, {1, 1, 1, 1}};
        for (const std::vector<int>& alphas : params) {
            GeneratorResult g = gorensteinGenerator(alphas);
            int n = int(alphas.size()) + 1;
            CdPoly phi = phiOf(g.p);
            for (const std::set<int>& s : allSparseSubsets(n)) {
                Int want = 1;
                for (int i : s) want *= alphas[std::size_t(i) - 1];
                if (phi.coeff(kappaToWord(s, n)) != want)
                    why = "alpha{" + subsetKey(s) + "} off for gen n=" + std::to_string(n);
            }
            std::vector<int> prefix(alphas.begin(), alphas.end() - 1);
            GradedPoset below = openInterval(g.p, mustIndex(g.p, g.distinguished));
            if (!(phiOf(below) == phiOf(gorensteinGenerator(prefix).p)))
                why = "marked-top interval wrong for gen n=" + std::to_string(n);
        }
        crit(9, why.empty(), "extremal generators: product coefficients and marked-top nesting",
             why);
    }

    // 10: bounds everywhere, equality exactly on generator outputs
    {
        std::string why;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const VerificationReport& r = report(i);
            if (statusOf(r, "gorenstein") != "pass") continue;
            CdPoly phi = r.bexp.phi;
            bool allEq = true, hasBig = false;
            for (const std::set<int>& s : allSparseSubsets(r.n)) {
                Int val = phi.coeff(kappaToWord(s, r.n));
                Int bound = 1;
                for (int j : s) bound *= phi.coeff(kappaToWord({j}, r.n));
                if (val > bound) why = corpus[i].name + ": alpha{" + subsetKey(s) + "} above bound";
                if (s.size() >= 2) {
                    hasBig = true;
                    if (val != bound) allEq = false;
                }
            }
            if (hasBig && allEq != hasTag(corpus[i], "generator"))
                why = corpus[i].name + (allEq ? ": unexpected equality" : ": generator not sharp");
        }
        crit(10, why.empty(), "sparse coefficient bounds sharp exactly on generator outputs", why);
    }

    // 11: Artinian quotients match h-vectors; Lefschetz profiles in even dimension
    {
        std::string why;
        for (std::size_t i = 0; i < corpus.size() && why.empty(); ++i) {
            const VerificationReport& r = report(i);
            if (statusOf(r, "cm") != "pass" || r.n > 4) continue;
            SimplicialComplex oc = orderComplex(corpus[i].p);
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                if (hilbertRetry(oc, r.n, seed) != r.hvec) {
                    why = corpus[i].name + ": hilbert off at seed " + std::to_string(seed);
                    break;
                }
            }
        }
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const VerificationReport& r = report(i);
            if (!hasTag(corpus[i], "polyhedral") || statusOf(r, "cm") != "pass") continue;
            if ((r.n - 1) % 2 != 0) continue;
            if (statusOf(r, "lefschetz") != "pass")
                why = corpus[i].name + ": lefschetz " + statusOf(r, "lefschetz");
        }
        crit(11, why.empty(),
             "quotient Hilbert functions equal h-vectors (3 seeds); even-d Lefschetz profiles",
             why);
    }

    // 12: Kruskal-Katona on polyhedral Cohen-Macaulay members
    {
        std::string why;
        bool ok = true;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (!hasTag(corpus[i], "polyhedral")) continue;
            if (statusOf(report(i), "cm") != "pass") continue;
            if (statusOf(report(i), "kk") != "pass") {
                ok = false;
                why = corpus[i].name + ": kk " + statusOf(report(i), "kk");
            }
        }
        crit(12, ok, "h-vector difference vectors pass the face-count cascade", why);
    }

    // 13: a-expression span ranks
    {
        std::map<int, const SpanCell*> cells;
        for (const SpanCell& c : summary.span) cells[c.n] = &c;
        bool ok = true;
        std::string why;
        for (int n = 2; n <= 4; ++n) {
            long long want = fibonacci(n + 2);
            if (!cells.count(n) || cells[n]->rank != want || cells[n]->target != want) {
                ok = false;
                why = "rank " + std::to_string(n);
            }
        }
        crit(13, ok, "a-expression coefficient spans hit 3, 5, 8 for ranks 2, 3, 4", why);
    }

    // 14: property suites
    {
        std::string why;

        for (const CorpusEntry& e : corpus) { // flag transform round-trip
            FlagVector f = flagF(e.p);
            if (!(flagFfromH(flagH(f)).e == f.e)) why = "flag round-trip on " + e.name;
        }

        for (int d1 = 0; d1 <= 3 && why.empty(); ++d1) // expandCd is multiplicative
            for (int d2 = 0; d1 + d2 <= 5; ++d2)
                for (CdWord w1 : allCdWords(d1))
                    for (CdWord w2 : allCdWords(d2))
                        if (!(expandCd(cdConcat(w1, w2)) == abMul(expandCd(w1), expandCd(w2))))
                            why = "expandCd split " + w1.str() + "|" + w2.str();

        for (int n = 1; n <= 8 && why.empty(); ++n) { // sparse-set encoding round-trip
            std::vector<CdWord> words = allCdWords(n);
            if (words.size() != allSparseSubsets(n).size()) why = "sparse count at " + std::to_string(n);
            for (CdWord w : words)
                if (!(kappaToWord(kappaToSet(w), n) == w)) why = "encoding round-trip " + w.str();
        }

        std::vector<GradedPoset> fixtures = {hypercube(3), crossPolytope(3), pyramidWithFlap(),
                                             nGon(6), booleanPoset(2)};
        for (const GradedPoset& p : fixtures) {
            IncidenceFunction eps = incidenceFunction(p, FieldSpec::Q());
            if (!incidenceDiamondCheck(p, eps).pass) why = "diamond relation";
            ChainComplexData c = posetChainComplex(p, eps);
            for (int d = 1; d + 1 < int(c.bnd.size()); ++d) {
                if (c.bnd[std::size_t(d)].rows == 0 || c.bnd[std::size_t(d) + 1].cols == 0) continue;
                if (!isZero(matMul(c.bnd[std::size_t(d)], c.bnd[std::size_t(d) + 1])))
                    why = "boundary square at rank " + std::to_string(d);
            }
            if (homologyRanks(c, FieldSpec::Q()) !=
                reducedHomologyRanks(orderComplex(p), FieldSpec::Q()))
                why = "engine disagreement";
        }

        crit(14, why.empty(),
             "flag round-trip, word algebra, boundary squares to zero, engine agreement", why);
    }

    return failures == 0 ? 0 : 1;
}
