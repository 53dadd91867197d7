#include "cdindex/flags.hpp"

namespace cdx {

namespace {

Int countChains(const GradedPoset& p, std::uint32_t mask) {
    if (mask == 0) return 1;
    std::vector<int> ranks;
    for (int i = 0; i < p.n; ++i)
        if ((mask >> i) & 1u) ranks.push_back(i + 1);

    std::vector<Int> ways(std::size_t(p.size()), 0);
    for (int e : p.byRank[std::size_t(ranks[0])]) ways[std::size_t(e)] = 1;
    for (std::size_t step = 1; step < ranks.size(); ++step) {
        std::vector<Int> nxt(std::size_t(p.size()), 0);
        for (int y : p.byRank[std::size_t(ranks[step])]) {
            Int acc = 0;
            for (int x : p.byRank[std::size_t(ranks[step - 1])])
                if (ways[std::size_t(x)] != 0 && p.leq(x, y)) acc = checkedAdd(acc, ways[std::size_t(x)]);
            nxt[std::size_t(y)] = acc;
        }
        ways.swap(nxt);
    }
    Int total = 0;
    for (int e : p.byRank[std::size_t(ranks.back())]) total = checkedAdd(total, ways[std::size_t(e)]);
    return total;
}

} // namespace

FlagVector flagF(const GradedPoset& p, Exec exec) {
    if (p.n > 20) throw CdxError("OutOfRange", "rank too large for dense flag vectors");
    FlagVector f;
    f.n = p.n;
    f.flavor = 'f';
    f.e.assign(std::size_t(1) << p.n, 0);
    std::exception_ptr bad;
#pragma omp parallel for schedule(dynamic, 1) if (runParallel(exec))
    for (long long mask = 0; mask < (1LL << p.n); ++mask) {
        try {
            f.e[std::size_t(mask)] = countChains(p, std::uint32_t(mask));
        } catch (...) {
#pragma omp critical
            if (!bad) bad = std::current_exception();
        }
    }
    if (bad) std::rethrow_exception(bad);
    return f;
}

FlagVector flagH(const FlagVector& f) {
    if (f.flavor != 'f') throw CdxError("OutOfRange", "flagH expects an f-flavor input");
    FlagVector h;
    h.n = f.n;
    h.flavor = 'h';
    h.e.assign(f.e.size(), 0);
    for (std::uint32_t s = 0; s < f.e.size(); ++s) {
        Int acc = 0;
        std::uint32_t t = s;
        /* submask walk */
        while (true) {
            int parity = (__builtin_popcount(s) - __builtin_popcount(t)) % 2;
            acc = checkedAdd(acc, parity ? checkedSub(0, f.e[t]) : f.e[t]);
            if (t == 0) break;
            t = (t - 1) & s;
        }
        h.e[s] = acc;
    }
    return h;
}

FlagVector flagFfromH(const FlagVector& h) {
    if (h.flavor != 'h') throw CdxError("OutOfRange", "flagFfromH expects an h-flavor input");
    FlagVector f;
    f.n = h.n;
    f.flavor = 'f';
    f.e.assign(h.e.size(), 0);
    for (std::uint32_t s = 0; s < h.e.size(); ++s) {
        Int acc = 0;
        std::uint32_t t = s;
        while (true) {
            acc = checkedAdd(acc, h.e[t]);
            if (t == 0) break;
            t = (t - 1) & s;
        }
        f.e[s] = acc;
    }
    return f;
}

AbPoly abIndex(const FlagVector& h) {
    if (h.flavor != 'h') throw CdxError("OutOfRange", "abIndex expects an h-flavor input");
    AbPoly psi{h.n, {}};
    for (std::uint32_t s = 0; s < h.e.size(); ++s)
        if (h.e[s] != 0) psi.t.emplace(abWordOfSubset(s, h.n), h.e[s]);
    return psi;
}

std::vector<Int> aggregate(const FlagVector& v) {
    std::vector<Int> out(std::size_t(v.n) + 1, 0);
    for (std::uint32_t s = 0; s < v.e.size(); ++s) {
        auto k = std::size_t(__builtin_popcount(s));
        out[k] = checkedAdd(out[k], v.e[s]);
    }
    return out;
}

RankStats rankStatistics(const GradedPoset& p) {
    RankStats st;
    st.rankGen.assign(std::size_t(p.n) + 1, 0);
    st.rankGen[0] = 1; // 0-hat
    for (int i = 0; i < p.size(); ++i) st.rankGen[std::size_t(p.rk[std::size_t(i)])]++;

    for (int k = 1; k <= p.n - 1; ++k) {
        Int a = -1;
        for (int i = 0; i <= k; ++i) {
            Int term = st.rankGen[std::size_t(i)];
            a = checkedAdd(a, (k - i) % 2 ? checkedSub(0, term) : term);
        }
        st.alphaSingletons.push_back(a);
    }

    Int euler = 0;
    for (int i = 0; i <= p.n; ++i) {
        Int term = st.rankGen[std::size_t(i)];
        euler = checkedAdd(euler, (p.n - i) % 2 ? checkedSub(0, term) : term);
    }
    st.eulerHolds = euler == 1;
    return st;
}

} // namespace cdx
