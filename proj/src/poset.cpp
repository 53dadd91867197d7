#include "cdindex/poset.hpp"

#include <algorithm>
#include <unordered_map>

namespace cdx {

int GradedPoset::indexOf(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (id[std::size_t(i)] == name) return i;
    return -2;
}

bool GradedPoset::leq(int x, int y) const {
    if (x == kZeroHat) return true;
    if (y == kZeroHat) return false;
    if (x == y) return true;
    return below[std::size_t(y)].test(std::size_t(x));
}

int mustIndex(const GradedPoset& p, const std::string& name) {
    if (name == "_0") return kZeroHat;
    int i = p.indexOf(name);
    if (i < 0) throw CdxError("ElementNotFound", "no element named '" + name + "'");
    return i;
}

GradedPoset validatePoset(const RawPoset& raw) {
    GradedPoset p;
    std::unordered_map<std::string, int> ix;
    ix.reserve(raw.elems.size());
    for (auto& [name, r] : raw.elems) {
        if (name.empty() || name == "_0")
            throw CdxError("ParseError", "invalid element identifier '" + name + "'");
        if (!ix.emplace(name, int(p.id.size())).second)
            throw CdxError("ParseError", "duplicate element '" + name + "'");
        if (r < 1) throw CdxError("RankMismatch", "element '" + name + "' has rank < 1");
        p.id.push_back(name);
        p.rk.push_back(r);
    }
    int m = p.size();
    p.low.assign(std::size_t(m), {});
    p.up.assign(std::size_t(m), {});

    for (auto& [uname, lname] : raw.covers) {
        auto u = ix.find(uname), l = ix.find(lname);
        if (u == ix.end()) throw CdxError("DanglingReference", "cover mentions unknown '" + uname + "'");
        if (l == ix.end()) throw CdxError("DanglingReference", "cover mentions unknown '" + lname + "'");
        int ui = u->second, li = l->second;
        if (p.rk[std::size_t(ui)] != p.rk[std::size_t(li)] + 1)
            throw CdxError("NonGradedCover", "cover (" + uname + ", " + lname + ") has rank gap != 1");
        p.low[std::size_t(ui)].push_back(li);
        p.up[std::size_t(li)].push_back(ui);
    }
    for (int i = 0; i < m; ++i) {
        auto& lo = p.low[std::size_t(i)];
        auto& hi = p.up[std::size_t(i)];
        std::sort(lo.begin(), lo.end());
        lo.erase(std::unique(lo.begin(), lo.end()), lo.end());
        std::sort(hi.begin(), hi.end());
        hi.erase(std::unique(hi.begin(), hi.end()), hi.end());
    }

    /* Covers drop rank by exactly 1, so a cycle would force a rank increase
     * somewhere; the explicit walk still guards against inconsistent input. */
    {
        std::vector<int> state(std::size_t(m), 0);
        std::vector<int> stack;
        for (int s = 0; s < m; ++s) {
            if (state[std::size_t(s)]) continue;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                if (state[std::size_t(v)] == 0) {
                    state[std::size_t(v)] = 1;
                    for (int w : p.low[std::size_t(v)]) {
                        if (state[std::size_t(w)] == 1)
                            throw CdxError("CycleDetected", "cover cycle through '" + p.id[std::size_t(w)] + "'");
                        if (state[std::size_t(w)] == 0) stack.push_back(w);
                    }
                } else {
                    state[std::size_t(v)] = 2;
                    stack.pop_back();
                }
            }
        }
    }

    int maxRank = 0;
    for (int r : p.rk) maxRank = std::max(maxRank, r);
    if (raw.n != maxRank)
        throw CdxError("RankMismatch", "declared rank " + std::to_string(raw.n) +
                                           " but max element rank is " + std::to_string(maxRank));
    p.n = maxRank;
    p.byRank.assign(std::size_t(p.n) + 1, {});
    for (int i = 0; i < m; ++i) p.byRank[std::size_t(p.rk[std::size_t(i)])].push_back(i);

    /* Longest chain from 0-hat, processed rank by rank. */
    std::vector<int> lc(std::size_t(m), 0);
    p.below.assign(std::size_t(m), Bitset(std::size_t(m)));
    for (int r = 1; r <= p.n; ++r) {
        for (int e : p.byRank[std::size_t(r)]) {
            int best = 0;
            for (int l : p.low[std::size_t(e)]) {
                best = std::max(best, lc[std::size_t(l)]);
                p.below[std::size_t(e)].set(std::size_t(l));
                p.below[std::size_t(e)].orWith(p.below[std::size_t(l)]);
            }
            lc[std::size_t(e)] = best + 1;
            if (lc[std::size_t(e)] != r)
                throw CdxError("RankMismatch", "element '" + p.id[std::size_t(e)] + "' declared rank " +
                                                   std::to_string(r) + " but longest chain has length " +
                                                   std::to_string(lc[std::size_t(e)]));
        }
    }
    return p;
}

namespace {

/* Restriction to a subset of elements with a uniform rank shift; covers
 * among kept elements are preserved and the result is re-validated. */
GradedPoset restrict(const GradedPoset& p, const std::vector<char>& keep, int rankShift) {
    RawPoset raw;
    for (int i = 0; i < p.size(); ++i)
        if (keep[std::size_t(i)]) raw.elems.emplace_back(p.id[std::size_t(i)], p.rk[std::size_t(i)] - rankShift);
    for (int i = 0; i < p.size(); ++i) {
        if (!keep[std::size_t(i)]) continue;
        for (int l : p.low[std::size_t(i)])
            if (keep[std::size_t(l)]) raw.covers.emplace_back(p.id[std::size_t(i)], p.id[std::size_t(l)]);
    }
    raw.n = 0;
    for (auto& [name, r] : raw.elems) raw.n = std::max(raw.n, r);
    return validatePoset(raw);
}

void checkElement(const GradedPoset& p, int sigma) {
    if (sigma < 0 || sigma >= p.size())
        throw CdxError("ElementNotFound", "element index out of range");
}

} // namespace

GradedPoset closedInterval(const GradedPoset& p, int sigma) {
    if (sigma == kZeroHat) return restrict(p, std::vector<char>(std::size_t(p.size()), 0), 0);
    checkElement(p, sigma);
    std::vector<char> keep(std::size_t(p.size()), 0);
    for (int i = 0; i < p.size(); ++i) keep[std::size_t(i)] = p.leq(i, sigma);
    return restrict(p, keep, 0);
}

GradedPoset openInterval(const GradedPoset& p, int sigma) {
    checkElement(p, sigma);
    std::vector<char> keep(std::size_t(p.size()), 0);
    for (int i = 0; i < p.size(); ++i) keep[std::size_t(i)] = i != sigma && p.leq(i, sigma);
    return restrict(p, keep, 0);
}

GradedPoset link(const GradedPoset& p, int sigma) {
    if (sigma == kZeroHat) return p;
    checkElement(p, sigma);
    std::vector<char> keep(std::size_t(p.size()), 0);
    for (int i = 0; i < p.size(); ++i) keep[std::size_t(i)] = i != sigma && p.leq(sigma, i);
    return restrict(p, keep, p.rk[std::size_t(sigma)]);
}

GradedPoset costar(const GradedPoset& p, int sigma) {
    if (sigma == kZeroHat) return restrict(p, std::vector<char>(std::size_t(p.size()), 0), 0);
    checkElement(p, sigma);
    std::vector<char> keep(std::size_t(p.size()), 0);
    for (int i = 0; i < p.size(); ++i) keep[std::size_t(i)] = !p.leq(sigma, i);
    return restrict(p, keep, 0);
}

GradedPoset skeleton(const GradedPoset& p, int k) {
    if (k < -1 || k >= p.n) throw CdxError("OutOfRange", "skeleton index " + std::to_string(k));
    std::vector<char> keep(std::size_t(p.size()), 0);
    for (int i = 0; i < p.size(); ++i) keep[std::size_t(i)] = p.rk[std::size_t(i)] <= k + 1;
    return restrict(p, keep, 0);
}

std::vector<std::vector<int>> maximalChains(const GradedPoset& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    /* Walk downward cover paths from each maximal element; every element of
     * rank >= 2 has a lower cover, so paths always reach rank 1. */
    auto descend = [&](auto&& self, int e) -> void {
        path.push_back(e);
        if (p.low[std::size_t(e)].empty()) {
            out.emplace_back(path.rbegin(), path.rend());
        } else {
            for (int l : p.low[std::size_t(e)]) self(self, l);
        }
        path.pop_back();
    };
    for (int e = 0; e < p.size(); ++e)
        if (p.up[std::size_t(e)].empty()) descend(descend, e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace cdx
