#include "cdindex/constructions.hpp"

#include <algorithm>
#include <set>

#include "cdindex/error.hpp"
#include "cdindex/simplicial.hpp"

namespace cdx {

namespace {

RawPoset rawOf(const GradedPoset& p) {
    RawPoset r;
    r.n = p.n;
    for (int e = 0; e < p.size(); ++e) r.elems.push_back({p.id[e], p.rk[e]});
    for (int e = 0; e < p.size(); ++e)
        for (int l : p.low[e]) r.covers.push_back({p.id[e], p.id[l]});
    return r;
}

[[noreturn]] void badParameter(const std::string& what) {
    throw CdxError("BadParameter", what);
}

} // namespace

GradedPoset sZeroPoset() {
    RawPoset r;
    r.n = 1;
    r.elems = {{"s1_0", 1}, {"s1_1", 1}};
    return validatePoset(r);
}

GradedPoset pointPoset() {
    RawPoset r;
    r.n = 1;
    r.elems = {{"v", 1}};
    return validatePoset(r);
}

GradedPoset nGon(int m) {
    if (m < 3) badParameter("ngon needs at least 3 vertices");
    RawPoset r;
    r.n = 2;
    for (int i = 1; i <= m; ++i) r.elems.push_back({"v" + std::to_string(i), 1});
    for (int i = 1; i <= m; ++i) {
        std::string e = "e" + std::to_string(i);
        r.elems.push_back({e, 2});
        r.covers.push_back({e, "v" + std::to_string(i)});
        r.covers.push_back({e, "v" + std::to_string(i % m + 1)});
    }
    return validatePoset(r);
}

GradedPoset simplexBoundary(int d) {
    if (d < 1 || d > 20) badParameter("simplex dimension out of range");
    std::vector<std::string> vnames;
    for (int i = 0; i <= d; ++i) vnames.push_back("v" + std::to_string(i));
    std::vector<std::vector<int>> facets;
    for (int omit = 0; omit <= d; ++omit) {
        std::vector<int> f;
        for (int i = 0; i <= d; ++i)
            if (i != omit) f.push_back(i);
        facets.push_back(f);
    }
    return facePoset(makeComplex(vnames, facets));
}

GradedPoset crossPolytope(int d) {
    if (d < 1 || d > 12) badParameter("cross-polytope dimension out of range");
    std::vector<std::string> vnames;
    for (int i = 1; i <= d; ++i) {
        vnames.push_back("p" + std::to_string(i));
        vnames.push_back("m" + std::to_string(i));
    }
    std::vector<std::vector<int>> facets;
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::vector<int> f;
        for (int i = 0; i < d; ++i) f.push_back(2 * i + ((mask >> i) & 1));
        facets.push_back(f);
    }
    return facePoset(makeComplex(vnames, facets));
}

GradedPoset booleanPoset(int d) {
    if (d < 1 || d > 20) badParameter("boolean dimension out of range");
    std::vector<std::string> vnames;
    std::vector<int> all;
    for (int i = 0; i <= d; ++i) {
        vnames.push_back("v" + std::to_string(i));
        all.push_back(i);
    }
    return facePoset(makeComplex(vnames, {all}));
}

GradedPoset hypercube(int d) {
    if (d < 1 || d > 12) badParameter("cube dimension out of range");
    // faces are words over {0,1,*}; rank = stars + 1; the solid cube (all
    // stars) is excluded
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= 3;
    RawPoset r;
    r.n = d;
    std::vector<std::string> words(total);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        std::string w(d, '0');
        int stars = 0;
        for (int i = 0; i < d; ++i) {
            int digit = int(c % 3);
            c /= 3;
            w[i] = digit == 2 ? '*' : char('0' + digit);
            stars += digit == 2;
        }
        words[code] = w;
        if (stars == d) continue;
        r.elems.push_back({w, stars + 1});
        for (int i = 0; i < d; ++i) {
            if (w[i] != '*') continue;
            std::string lo = w;
            lo[i] = '0';
            r.covers.push_back({w, lo});
            lo[i] = '1';
            r.covers.push_back({w, lo});
        }
    }
    return validatePoset(r);
}

GradedPoset starGraph(int k) {
    if (k < 2) badParameter("star needs at least 2 edges");
    RawPoset r;
    r.n = 2;
    r.elems.push_back({"c", 1});
    for (int i = 1; i <= k; ++i) {
        std::string l = "l" + std::to_string(i), e = "e" + std::to_string(i);
        r.elems.push_back({l, 1});
        r.elems.push_back({e, 2});
        r.covers.push_back({e, "c"});
        r.covers.push_back({e, l});
    }
    return validatePoset(r);
}

GradedPoset pyramidWithFlap() {
    RawPoset r;
    r.n = 3;
    for (const char* v : {"a", "b1", "b2", "b3", "b4", "t"}) r.elems.push_back({v, 1});
    auto edge = [&](const std::string& e, const std::string& x, const std::string& y) {
        r.elems.push_back({e, 2});
        r.covers.push_back({e, x});
        r.covers.push_back({e, y});
    };
    edge("ab1", "a", "b1");
    edge("ab2", "a", "b2");
    edge("ab3", "a", "b3");
    edge("ab4", "a", "b4");
    edge("b12", "b1", "b2");
    edge("b23", "b2", "b3");
    edge("b34", "b3", "b4");
    edge("b41", "b4", "b1");
    edge("tb1", "t", "b1");
    edge("tb2", "t", "b2");
    auto cell = [&](const std::string& c, std::vector<std::string> es) {
        r.elems.push_back({c, 3});
        for (auto& e : es) r.covers.push_back({c, e});
    };
    cell("T12", {"ab1", "ab2", "b12"});
    cell("T23", {"ab2", "ab3", "b23"});
    cell("T34", {"ab3", "ab4", "b34"});
    cell("T41", {"ab4", "ab1", "b41"});
    cell("Q", {"b12", "b23", "b34", "b41"});
    cell("F", {"b12", "tb1", "tb2"}); // the flap, glued along b12
    return validatePoset(r);
}

namespace {

int recipeInt(const std::string& s, const std::string& recipe) {
    if (s.empty() || s.size() > 7 || s.find_first_not_of("0123456789") != std::string::npos)
        badParameter("bad recipe parameter in '" + recipe + "'");
    return std::stoi(s);
}

} // namespace

GradedPoset standardPoset(const std::string& recipe) {
    if (recipe == "szero") return sZeroPoset();
    if (recipe == "point") return pointPoset();
    if (recipe == "flap") return pyramidWithFlap();
    if (recipe == "cube") return hypercube(3);
    auto colon = recipe.find(':');
    if (colon != std::string::npos) {
        std::string kind = recipe.substr(0, colon), arg = recipe.substr(colon + 1);
        if (kind == "cap") return capPoset(standardPoset(arg));
        if (kind == "bary") return barycentric(standardPoset(arg));
        if (kind == "ngon") return nGon(recipeInt(arg, recipe));
        if (kind == "simplex") return simplexBoundary(recipeInt(arg, recipe));
        if (kind == "cross") return crossPolytope(recipeInt(arg, recipe));
        if (kind == "cube") return hypercube(recipeInt(arg, recipe));
        if (kind == "boolean") return booleanPoset(recipeInt(arg, recipe));
        if (kind == "star") return starGraph(recipeInt(arg, recipe));
    }
    badParameter("unknown recipe '" + recipe + "'");
}

GradedPoset barycentric(const GradedPoset& p) { return facePoset(orderComplex(p)); }

GradedPoset capPoset(const GradedPoset& p, const std::string& topId) {
    if (p.size() == 0) badParameter("cap over an empty poset");
    RawPoset r = rawOf(p);
    r.n = p.n + 1;
    r.elems.push_back({topId, p.n + 1});
    for (int e : p.byRank[p.n]) r.covers.push_back({topId, p.id[e]});
    return validatePoset(r);
}

GradedPoset deleteMax(const GradedPoset& p, const std::string& id) {
    int del = mustIndex(p, id);
    if (del == kZeroHat || !p.up[del].empty()) badParameter("'" + id + "' is not maximal");
    RawPoset r;
    for (int e = 0; e < p.size(); ++e) {
        if (e == del) continue;
        r.elems.push_back({p.id[e], p.rk[e]});
        r.n = std::max(r.n, p.rk[e]);
        for (int l : p.low[e])
            if (l != del) r.covers.push_back({p.id[e], p.id[l]});
    }
    return validatePoset(r);
}

GradedPoset suspend(const GradedPoset& q, const std::string& etaId, const std::string& etaPrimeId) {
    RawPoset r = rawOf(q);
    r.n = q.n + 1;
    r.elems.push_back({etaId, q.n + 1});
    r.elems.push_back({etaPrimeId, q.n + 1});
    if (q.n > 0)
        for (int e : q.byRank[q.n]) {
            r.covers.push_back({etaId, q.id[e]});
            r.covers.push_back({etaPrimeId, q.id[e]});
        }
    return validatePoset(r);
}

namespace {

std::string freshId(const GradedPoset& p, std::string base) {
    while (p.indexOf(base) >= 0) base += "_p";
    return base;
}

} // namespace

GradedPoset unzip(const GradedPoset& p, const std::string& sigma, const std::string& tau,
                  const std::string& sigmaPrimeId, const std::string& tauPrimeId) {
    int ti = mustIndex(p, tau);
    if (ti == kZeroHat) throw CdxError("TauIsBottom", "cannot unzip below the minimum");
    int si = mustIndex(p, sigma);
    if (si == kZeroHat || !std::binary_search(p.low[si].begin(), p.low[si].end(), ti))
        throw CdxError("NotACover", "'" + sigma + "' does not cover '" + tau + "'");
    std::string sp = sigmaPrimeId.empty() ? freshId(p, sigma + "_p") : sigmaPrimeId;
    std::string tp = tauPrimeId.empty() ? freshId(p, tau + "_p") : tauPrimeId;

    RawPoset r;
    r.n = p.n;
    for (int e = 0; e < p.size(); ++e) {
        r.elems.push_back({p.id[e], p.rk[e]});
        for (int l : p.low[e])
            if (!(e == si && l == ti)) r.covers.push_back({p.id[e], p.id[l]});
    }
    r.elems.push_back({sp, p.rk[si]});
    r.elems.push_back({tp, p.rk[ti]});
    for (int rho : p.up[si]) r.covers.push_back({p.id[rho], sp});
    for (int l : p.low[ti]) r.covers.push_back({tp, p.id[l]});
    r.covers.push_back({sp, tau});
    r.covers.push_back({sp, tp});
    r.covers.push_back({sigma, tp});
    return validatePoset(r);
}

GeneratorResult gorensteinGenerator(const std::vector<int>& alphas) {
    for (int a : alphas)
        if (a < 0) badParameter("generator multiplicities must be nonnegative");
    GradedPoset p = sZeroPoset();
    std::string dist = "s1_1";
    for (std::size_t k = 1; k <= alphas.size(); ++k) {
        const std::string stage = "s" + std::to_string(k + 1);
        const std::string eta = stage + "_0", etaPrime = stage + "_1";
        p = suspend(p, eta, etaPrime);
        // unzip down the distinguished chain: first eta over the previous
        // stage's top, then each freshly added pair
        std::string sig = eta, tau = dist;
        for (int j = 1; j <= alphas[k - 1]; ++j) {
            std::string sp = stage + "_" + std::to_string(2 * j);
            std::string tp = stage + "_" + std::to_string(2 * j + 1);
            p = unzip(p, sig, tau, sp, tp);
            sig = sp;
            tau = tp;
        }
        dist = etaPrime;
    }
    return {p, dist};
}

std::vector<CorpusEntry> builtinCorpus() {
    std::vector<CorpusEntry> out;
    auto poly = [&](const std::string& name, GradedPoset p) {
        out.push_back({name, std::move(p), {"polyhedral"}});
    };
    auto gen = [&](const std::string& name, const std::vector<int>& alphas) {
        out.push_back({name, gorensteinGenerator(alphas).p, {"generator"}});
    };
    auto minId = [](const GradedPoset& p) {
        std::vector<std::string> ids;
        for (int e : p.byRank[p.n]) ids.push_back(p.id[e]);
        return *std::min_element(ids.begin(), ids.end());
    };

    poly("szero", sZeroPoset());
    poly("point", pointPoset());
    for (int m = 3; m <= 8; ++m) poly("ngon" + std::to_string(m), nGon(m));
    poly("boolean1", booleanPoset(1));
    poly("bary_boolean1", barycentric(booleanPoset(1)));
    poly("star3", starGraph(3));
    gen("gen_0", {0});
    gen("gen_3", {3});

    poly("simplex3", simplexBoundary(3));
    poly("cross3", crossPolytope(3));
    poly("cube", hypercube(3));
    poly("flap", pyramidWithFlap());
    poly("boolean2", booleanPoset(2));
    poly("bary_cube", barycentric(hypercube(3)));
    poly("bary_simplex3", barycentric(simplexBoundary(3)));
    poly("bary_boolean2", barycentric(booleanPoset(2)));
    gen("gen_1_1", {1, 1});
    gen("gen_2_1", {2, 1});
    {
        GradedPoset c = hypercube(3);
        poly("cube_minus", deleteMax(c, minId(c)));
        GradedPoset x = crossPolytope(3);
        poly("cross3_minus", deleteMax(x, minId(x)));
    }

    poly("simplex4", simplexBoundary(4));
    poly("boolean3", booleanPoset(3));
    poly("cap_cube", capPoset(hypercube(3)));
    poly("cap_cross3", capPoset(crossPolytope(3)));
    gen("gen_0_1_0", {0, 1, 0});
    gen("gen_1_0_1", {1, 0, 1});
    gen("gen_1_2_1", {1, 2, 1});
    gen("gen_2_0_2", {2, 0, 2});
    gen("gen_2_0_1", {2, 0, 1});

    gen("gen_0_0_0_0", {0, 0, 0, 0});
    gen("gen_1_1_1_1", {1, 1, 1, 1});
    return out;
}

} // namespace cdx
