#include "cdindex/sheaf.hpp"

#include <algorithm>

#include "cdindex/elim.hpp"

namespace cdx {

namespace {

int maxNonzeroRank(const GradedPoset& p, const std::vector<int>& stalk) {
    int d = 0;
    for (int e = 0; e < p.size(); ++e)
        if (stalk[std::size_t(e)] != 0) d = std::max(d, p.rk[std::size_t(e)]);
    return d;
}

} // namespace

SheafData sheafFromOrderIdeal(const GradedPoset& p, const std::vector<char>& inQ) {
    if (int(inQ.size()) != p.size()) throw CdxError("OutOfRange", "ideal indicator size mismatch");
    for (int e = 0; e < p.size(); ++e) {
        if (!inQ[std::size_t(e)]) continue;
        for (int l : p.low[std::size_t(e)])
            if (!inQ[std::size_t(l)])
                throw CdxError("NotAnOrderIdeal", "'" + p.id[std::size_t(e)] + "' kept but its lower cover '" +
                                                      p.id[std::size_t(l)] + "' is not");
    }
    SheafData f;
    f.base = p;
    f.stalk0 = 1;
    f.stalk.assign(std::size_t(p.size()), 0);
    for (int e = 0; e < p.size(); ++e) f.stalk[std::size_t(e)] = inQ[std::size_t(e)] ? 1 : 0;
    f.res.assign(std::size_t(p.size()), {});
    f.res0.assign(std::size_t(p.size()), IntMat(0, 0));
    for (int e = 0; e < p.size(); ++e) {
        int se = f.stalk[std::size_t(e)];
        for (int l : p.low[std::size_t(e)]) {
            IntMat m(f.stalk[std::size_t(l)], se);
            if (se == 1 && f.stalk[std::size_t(l)] == 1) m.at(0, 0) = 1;
            f.res[std::size_t(e)].push_back(std::move(m));
        }
        if (p.rk[std::size_t(e)] == 1) {
            IntMat m(1, se);
            if (se == 1) m.at(0, 0) = 1;
            f.res0[std::size_t(e)] = std::move(m);
        }
    }
    f.d = maxNonzeroRank(p, f.stalk);
    return f;
}

SheafData structureSheaf(const GradedPoset& p) {
    return sheafFromOrderIdeal(p, std::vector<char>(std::size_t(p.size()), 1));
}

namespace {

/* Compose cover restrictions down a saturated chain from e. */
IntMat composeDown(const SheafData& f, const std::vector<int>& chainDown) {
    int e = chainDown[0];
    IntMat acc(f.stalk[std::size_t(e)], f.stalk[std::size_t(e)]);
    for (int i = 0; i < acc.rows; ++i) acc.at(i, i) = 1;
    int cur = e;
    for (std::size_t s = 1; s < chainDown.size(); ++s) {
        const auto& lows = f.base.low[std::size_t(cur)];
        auto it = std::find(lows.begin(), lows.end(), chainDown[s]);
        acc = matMul(f.res[std::size_t(cur)][std::size_t(it - lows.begin())], acc);
        cur = chainDown[s];
    }
    return acc;
}

void enumerateChainsDown(const SheafData& f, int from, int to, std::vector<int>& path,
                         std::vector<std::vector<int>>& out) {
    path.push_back(from);
    if (from == to) {
        out.push_back(path);
    } else {
        for (int l : f.base.low[std::size_t(from)])
            if (l == to || f.base.leq(to, l)) enumerateChainsDown(f, l, to, path, out);
    }
    path.pop_back();
}

} // namespace

CheckOutcome sheafFunctorialityCheck(const SheafData& f) {
    const GradedPoset& p = f.base;
    for (int hi = 0; hi < p.size(); ++hi) {
        for (int lo = 0; lo < p.size(); ++lo) {
            if (lo == hi || !p.leq(lo, hi)) continue;
            std::vector<std::vector<int>> chains;
            std::vector<int> path;
            enumerateChainsDown(f, hi, lo, path, chains);
            if (chains.size() < 2) continue;
            IntMat first = composeDown(f, chains[0]);
            for (std::size_t c = 1; c < chains.size(); ++c) {
                IntMat other = composeDown(f, chains[c]);
                if (!(first.rows == other.rows && first.cols == other.cols && first.a == other.a))
                    return {false, "compositions from '" + p.id[std::size_t(hi)] + "' to '" +
                                       p.id[std::size_t(lo)] + "' disagree"};
            }
        }
    }
    return {true, ""};
}

ModuleFlagData moduleFlagFFromDims(const GradedPoset& base, int stalk0, const std::vector<int>& stalk,
                                   int d) {
    if (d > 20) throw CdxError("OutOfRange", "module dimension too large for dense flag vectors");
    ModuleFlagData out;
    out.d = d;
    out.flagF.n = d;
    out.flagF.flavor = 'f';
    out.flagF.e.assign(std::size_t(1) << d, 0);
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        if (mask == 0) {
            out.flagF.e[0] = stalk0;
            continue;
        }
        std::vector<int> ranks;
        for (int i = 0; i < d; ++i)
            if ((mask >> i) & 1u) ranks.push_back(i + 1);
        std::vector<Int> ways(std::size_t(base.size()), 0);
        for (int e : base.byRank[std::size_t(ranks[0])]) ways[std::size_t(e)] = 1;
        for (std::size_t step = 1; step < ranks.size(); ++step) {
            std::vector<Int> nxt(std::size_t(base.size()), 0);
            for (int y : base.byRank[std::size_t(ranks[step])]) {
                Int acc = 0;
                for (int x : base.byRank[std::size_t(ranks[step - 1])])
                    if (ways[std::size_t(x)] != 0 && base.leq(x, y)) acc = checkedAdd(acc, ways[std::size_t(x)]);
                nxt[std::size_t(y)] = acc;
            }
            ways.swap(nxt);
        }
        Int total = 0;
        for (int e : base.byRank[std::size_t(ranks.back())])
            total = checkedAdd(total, checkedMul(ways[std::size_t(e)], stalk[std::size_t(e)]));
        out.flagF.e[mask] = total;
    }
    return out;
}

ModuleFlagData moduleFlagF(const SheafData& f) {
    return moduleFlagFFromDims(f.base, f.stalk0, f.stalk, f.d);
}

AbPoly abIndexViaStalks(const SheafData& f, const std::map<int, CdPoly>& boundaryPhi) {
    AbPoly psi = abScale(ambPow(f.d), f.stalk0);
    AbWord b = abAppend(AbWord{}, true);
    for (int e = 0; e < f.base.size(); ++e) {
        if (f.stalk[std::size_t(e)] == 0) continue;
        auto it = boundaryPhi.find(e);
        if (it == boundaryPhi.end())
            throw CdxError("MissingBoundaryIndex",
                           "no boundary cd-index supplied for '" + f.base.id[std::size_t(e)] + "'");
        AbPoly term = abMul(abMul(expandCd(it->second), abMono(b)), ambPow(f.d - f.base.rk[std::size_t(e)]));
        psi = abSum(psi, abScale(term, f.stalk[std::size_t(e)]));
    }
    return psi;
}

namespace {

/* Assemble the sheaf chain complex restricted to elements accepted by keep
 * (quotient by the complement's span); keep0 retains the 0-hat block. */
ChainComplexData assemble(const SheafData& f, const IncidenceFunction& eps,
                          const std::vector<char>& keep, bool keep0) {
    const GradedPoset& p = f.base;
    ChainComplexData c;
    c.topDeg = p.n - 1;
    c.dims.assign(std::size_t(p.n) + 1, 0);
    c.dims[0] = keep0 ? f.stalk0 : 0;
    std::vector<int> offset(std::size_t(p.size()), -1);
    for (int r = 1; r <= p.n; ++r) {
        int acc = 0;
        for (int e : p.byRank[std::size_t(r)]) {
            if (!keep[std::size_t(e)]) continue;
            offset[std::size_t(e)] = acc;
            acc += f.stalk[std::size_t(e)];
        }
        c.dims[std::size_t(r)] = acc;
    }
    c.bnd.resize(std::size_t(p.n) + 1);
    for (int d = 0; d <= c.topDeg; ++d) {
        IntMat m(c.dims[std::size_t(d)], c.dims[std::size_t(d + 1)]);
        for (int sigma : p.byRank[std::size_t(d + 1)]) {
            if (!keep[std::size_t(sigma)]) continue;
            int colBase = offset[std::size_t(sigma)];
            int sc = f.stalk[std::size_t(sigma)];
            if (d == 0) {
                if (!keep0) continue;
                const IntMat& r0 = f.res0[std::size_t(sigma)];
                for (int i = 0; i < r0.rows; ++i)
                    for (int j = 0; j < sc; ++j) m.at(i, colBase + j) = r0.at(i, j);
            } else {
                const auto& taus = p.low[std::size_t(sigma)];
                for (std::size_t t = 0; t < taus.size(); ++t) {
                    int tau = taus[t];
                    if (!keep[std::size_t(tau)]) continue;
                    const IntMat& rm = f.res[std::size_t(sigma)][t];
                    Int s = eps.sign[std::size_t(sigma)][t];
                    int rowBase = offset[std::size_t(tau)];
                    for (int i = 0; i < rm.rows; ++i)
                        for (int j = 0; j < sc; ++j)
                            m.at(rowBase + i, colBase + j) =
                                checkedAdd(m.at(rowBase + i, colBase + j), checkedMul(s, rm.at(i, j)));
                }
            }
        }
        c.bnd[std::size_t(d + 1)] = std::move(m);
    }
    for (int d = 1; d <= c.topDeg; ++d)
        if (!isZero(matMul(c.bnd[std::size_t(d)], c.bnd[std::size_t(d + 1)])))
            throw std::logic_error("sheaf chain complex fails del o del = 0 at degree " + std::to_string(d));
    return c;
}

} // namespace

ChainComplexData sheafChainComplex(const SheafData& f, const IncidenceFunction& eps) {
    return assemble(f, eps, std::vector<char>(std::size_t(f.base.size()), 1), true);
}

std::vector<int> linkQuotientHomology(const SheafData& f, const IncidenceFunction& eps, int sigma,
                                      const FieldSpec& k, Exec exec) {
    const GradedPoset& p = f.base;
    std::vector<char> keep(std::size_t(p.size()), 0);
    for (int e = 0; e < p.size(); ++e) keep[std::size_t(e)] = p.leq(sigma, e);
    ChainComplexData c = assemble(f, eps, keep, sigma == kZeroHat);
    std::vector<int> h = homologyRanks(c, k, exec);

    int rkSigma = sigma == kZeroHat ? 0 : p.rk[std::size_t(sigma)];
    std::vector<int> out;
    for (int j = -1; j <= f.d - 1 - rkSigma; ++j) {
        int deg = j + rkSigma; // Htilde_j(lk) = H_deg(quotient)
        int idx = deg + 1;
        out.push_back(idx >= 0 && idx < int(h.size()) ? h[std::size_t(idx)] : 0);
    }
    return out;
}

CheckOutcome cmModuleCheck(const SheafData& f, const IncidenceFunction& eps, const FieldSpec& k,
                           Exec exec) {
    for (int sigma = kZeroHat; sigma < f.base.size(); ++sigma) {
        int rkSigma = sigma == kZeroHat ? 0 : f.base.rk[std::size_t(sigma)];
        std::vector<int> h = linkQuotientHomology(f, eps, sigma, k, exec);
        for (int j = -1; j <= f.d - 1 - rkSigma; ++j) {
            if (j == f.d - 1 - rkSigma) continue;
            if (h[std::size_t(j + 1)] != 0) {
                std::string name = sigma == kZeroHat ? "_0" : f.base.id[std::size_t(sigma)];
                return {false, "link of '" + name + "' has homology rank " +
                                   std::to_string(h[std::size_t(j + 1)]) + " in degree " + std::to_string(j) +
                                   " != " + std::to_string(f.d - 1 - rkSigma)};
            }
        }
    }
    return {true, ""};
}

DualStalks dualStalkDims(const SheafData& f, const IncidenceFunction& eps, const FieldSpec& k,
                         Exec exec) {
    DualStalks out;
    out.stalk.assign(std::size_t(f.base.size()), 0);
    for (int sigma = kZeroHat; sigma < f.base.size(); ++sigma) {
        int rkSigma = sigma == kZeroHat ? 0 : f.base.rk[std::size_t(sigma)];
        int jTop = f.d - 1 - rkSigma; // H_{d-1}(quotient) = Htilde_{jTop}(link)
        if (jTop < -1) continue;     // stalks vanish above dim, so does the dual
        std::vector<int> h = linkQuotientHomology(f, eps, sigma, k, exec);
        int dim = h[std::size_t(jTop + 1)];
        if (sigma == kZeroHat)
            out.stalk0 = dim;
        else
            out.stalk[std::size_t(sigma)] = dim;
    }
    return out;
}

SheafData skeletonSheaf(const SheafData& f, int k) {
    if (k >= f.d) throw CdxError("OutOfRange", "skeleton index must be below the sheaf dimension");
    SheafData s = f;
    for (int e = 0; e < s.base.size(); ++e) {
        if (s.base.rk[std::size_t(e)] <= k + 1) continue;
        s.stalk[std::size_t(e)] = 0;
        for (std::size_t t = 0; t < s.res[std::size_t(e)].size(); ++t) {
            int l = s.base.low[std::size_t(e)][t];
            s.res[std::size_t(e)][t] = IntMat(s.stalk[std::size_t(l)], 0);
        }
    }
    /* incoming restrictions into zeroed stalks shrink to zero rows */
    for (int e = 0; e < s.base.size(); ++e) {
        for (std::size_t t = 0; t < s.res[std::size_t(e)].size(); ++t) {
            int l = s.base.low[std::size_t(e)][t];
            if (s.stalk[std::size_t(l)] == 0 || s.stalk[std::size_t(e)] == 0)
                s.res[std::size_t(e)][t] = IntMat(s.stalk[std::size_t(l)], s.stalk[std::size_t(e)]);
        }
        if (s.base.rk[std::size_t(e)] == 1 && s.stalk[std::size_t(e)] == 0)
            s.res0[std::size_t(e)] = IntMat(s.stalk0, 0);
    }
    s.d = maxNonzeroRank(s.base, s.stalk);
    return s;
}

std::vector<AbPoly> karuPhiOracle(const SheafData& f, const IncidenceFunction& eps, const FieldSpec& k,
                                  Exec exec) {
    std::vector<AbPoly> out;
    for (int kk = 0; kk <= f.d - 2; ++kk) {
        SheafData sk = skeletonSheaf(f, kk);
        DualStalks omega = dualStalkDims(sk, eps, k, exec);

        int d0 = omega.stalk0 - sk.stalk0;
        std::vector<int> diff(std::size_t(f.base.size()), 0);
        if (d0 < 0)
            throw CdxError("NegativeQuotientDim", "dual stalk at 0-hat smaller than the module's");
        for (int e = 0; e < f.base.size(); ++e) {
            diff[std::size_t(e)] = omega.stalk[std::size_t(e)] - sk.stalk[std::size_t(e)];
            if (diff[std::size_t(e)] < 0)
                throw CdxError("NegativeQuotientDim",
                               "dual stalk at '" + f.base.id[std::size_t(e)] + "' smaller than the module's");
        }
        int dN = maxNonzeroRank(f.base, diff);
        if (d0 != 0) dN = std::max(dN, 0);
        ModuleFlagData quot = moduleFlagFFromDims(f.base, d0, diff, dN);
        out.push_back(abIndex(flagH(quot.flagF)));
    }
    return out;
}

} // namespace cdx
