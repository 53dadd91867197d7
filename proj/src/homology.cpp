#include "cdindex/homology.hpp"

#include <algorithm>

#include "cdindex/elim.hpp"

namespace cdx {

std::string faceName(const SimplicialComplex& k, const std::vector<int>& face) {
    std::string s = "{";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i) s += ",";
        s += k.vnames[std::size_t(face[i])];
    }
    return s + "}";
}

std::vector<int> reducedHomologyRanks(const SimplicialComplex& k, const FieldSpec& f, Exec exec) {
    if (k.isVoid()) return {};
    auto faces = facesByDim(k);
    int dim = int(faces.size()) - 2;
    std::vector<std::size_t> rk(std::size_t(dim) + 2, 0); // rk[d+1] = rank of boundary out of C_d
    for (int d = 0; d <= dim; ++d) rk[std::size_t(d) + 1] = rankField(boundaryMatrix(faces, d), f, exec);
    std::vector<int> out(std::size_t(dim) + 2, 0);
    for (int d = -1; d <= dim; ++d) {
        std::size_t outOf = rk[std::size_t(d + 1)];
        std::size_t into = d + 1 <= dim ? rk[std::size_t(d + 2)] : 0;
        out[std::size_t(d + 1)] = int(faces[std::size_t(d + 1)].size() - outOf - into);
    }
    return out;
}

std::vector<FaceLinkRanks> linkHomologyScan(const SimplicialComplex& k, const FieldSpec& f, Exec exec) {
    auto faces = facesByDim(k);
    std::vector<std::vector<int>> flat;
    for (auto& layer : faces)
        for (auto& face : layer) flat.push_back(face);

    std::vector<FaceLinkRanks> out(flat.size());
    std::exception_ptr bad;
#pragma omp parallel for schedule(dynamic, 1) if (runParallel(exec))
    for (long long i = 0; i < (long long)flat.size(); ++i) {
        try {
            SimplicialComplex lk = linkOfFace(k, flat[std::size_t(i)]);
            FaceLinkRanks r;
            r.face = flat[std::size_t(i)];
            r.linkDim = lk.dim();
            r.ranks = reducedHomologyRanks(lk, f, Exec::serial);
            out[std::size_t(i)] = std::move(r);
        } catch (...) {
#pragma omp critical
            if (!bad) bad = std::current_exception();
        }
    }
    if (bad) std::rethrow_exception(bad);
    return out;
}

CheckOutcome reisnerCMFromScan(const SimplicialComplex& k, const std::vector<FaceLinkRanks>& scan) {
    for (const auto& r : scan) {
        for (int i = -1; i < r.linkDim; ++i) {
            if (r.ranks[std::size_t(i + 1)] != 0) {
                return {false, "link of " + faceName(k, r.face) + " has reduced homology rank " +
                                   std::to_string(r.ranks[std::size_t(i + 1)]) + " in degree " +
                                   std::to_string(i) + " < dim " + std::to_string(r.linkDim)};
            }
        }
    }
    return {true, ""};
}

CheckOutcome gorensteinStarFromScan(const SimplicialComplex& k, const std::vector<FaceLinkRanks>& scan) {
    CheckOutcome cm = reisnerCMFromScan(k, scan);
    if (!cm.pass) return cm;
    for (const auto& r : scan) {
        int top = r.ranks[std::size_t(r.linkDim + 1)];
        if (top != 1) {
            return {false, "link of " + faceName(k, r.face) + " has top homology rank " +
                               std::to_string(top) + " in degree " + std::to_string(r.linkDim) +
                               ", expected 1"};
        }
    }
    return {true, ""};
}

CheckOutcome reisnerCM(const SimplicialComplex& k, const FieldSpec& f, Exec exec) {
    return reisnerCMFromScan(k, linkHomologyScan(k, f, exec));
}

CheckOutcome gorensteinStar(const SimplicialComplex& k, const FieldSpec& f, Exec exec) {
    return gorensteinStarFromScan(k, linkHomologyScan(k, f, exec));
}

CheckOutcome quasiCWCheck(const GradedPoset& p, const FieldSpec& f, Exec exec) {
    for (int e = 0; e < p.size(); ++e) {
        CheckOutcome g = gorensteinStar(orderComplex(openInterval(p, e)), f, exec);
        if (!g.pass)
            return {false, "boundary of '" + p.id[std::size_t(e)] + "' is not Gorenstein*: " + g.witness};
    }
    return {true, ""};
}

IncidenceFunction incidenceFunction(const GradedPoset& p, const FieldSpec& f) {
    IncidenceFunction eps;
    eps.sign.assign(std::size_t(p.size()), {});
    for (int r = 2; r <= p.n; ++r) {
        for (int sigma : p.byRank[std::size_t(r)]) {
            const auto& taus = p.low[std::size_t(sigma)];
            /* rows: rank r-2 members of the open interval (0-hat when r = 2) */
            std::vector<int> rhos;
            if (r > 2)
                for (int rho : p.byRank[std::size_t(r) - 2])
                    if (p.leq(rho, sigma)) rhos.push_back(rho);
            int nr = r == 2 ? 1 : int(rhos.size());
            IntMat a(nr, int(taus.size()));
            if (r == 2) {
                for (std::size_t j = 0; j < taus.size(); ++j) a.at(0, int(j)) = 1;
            } else {
                for (std::size_t j = 0; j < taus.size(); ++j) {
                    int tau = taus[j];
                    const auto& tlow = p.low[std::size_t(tau)];
                    for (std::size_t t = 0; t < tlow.size(); ++t) {
                        auto it = std::lower_bound(rhos.begin(), rhos.end(), tlow[t]);
                        a.at(int(it - rhos.begin()), int(j)) = eps.sign[std::size_t(tau)][t];
                    }
                }
            }

            std::vector<Int> x(taus.size(), 0);
            if (f.rational) {
                std::vector<QVec> ker = kernelQ(qFromInt(a));
                if (ker.size() != 1)
                    throw CdxError("KernelDimensionNotOne",
                                   "boundary kernel at '" + p.id[std::size_t(sigma)] + "' has dimension " +
                                       std::to_string(ker.size()));
                std::size_t first = 0;
                while (first < ker[0].size() && ker[0][first] == 0) ++first;
                mpq_class lead = ker[0][first];
                for (std::size_t j = 0; j < taus.size(); ++j) {
                    mpq_class v = ker[0][j] / lead;
                    if (v == 1)
                        x[j] = 1;
                    else if (v == -1)
                        x[j] = -1;
                    else
                        throw CdxError("NonUnitEntries", "kernel entry " + v.get_str() + " at '" +
                                                             p.id[std::size_t(sigma)] + "' is not +-1");
                }
            } else {
                auto ker = kernelFp(a, f.p);
                if (ker.size() != 1)
                    throw CdxError("KernelDimensionNotOne",
                                   "boundary kernel at '" + p.id[std::size_t(sigma)] + "' has dimension " +
                                       std::to_string(ker.size()));
                std::size_t first = 0;
                while (first < ker[0].size() && ker[0][first] == 0) ++first;
                std::uint64_t lead = fp::inv(ker[0][first], f.p);
                for (std::size_t j = 0; j < taus.size(); ++j) {
                    std::uint64_t v = fp::mul(ker[0][j], lead, f.p);
                    if (v == 1)
                        x[j] = 1;
                    else if (v == f.p - 1)
                        x[j] = -1;
                    else
                        throw CdxError("NonUnitEntries", "kernel entry " + std::to_string(v) + " at '" +
                                                             p.id[std::size_t(sigma)] + "' is not +-1");
                }
            }
            eps.sign[std::size_t(sigma)] = std::move(x);
        }
    }
    return eps;
}

CheckOutcome incidenceDiamondCheck(const GradedPoset& p, const IncidenceFunction& eps) {
    for (int sigma = 0; sigma < p.size(); ++sigma) {
        int r = p.rk[std::size_t(sigma)];
        if (r < 2) continue;
        const auto& taus = p.low[std::size_t(sigma)];
        if (r == 2) {
            Int sum = 0;
            for (std::size_t j = 0; j < taus.size(); ++j) sum += eps.sign[std::size_t(sigma)][j];
            if (sum != 0)
                return {false, "interval (0-hat, " + p.id[std::size_t(sigma)] + ") breaks the diamond sum"};
            continue;
        }
        for (int rho : p.byRank[std::size_t(r) - 2]) {
            if (!p.leq(rho, sigma)) continue;
            Int sum = 0;
            for (std::size_t j = 0; j < taus.size(); ++j) {
                int tau = taus[j];
                const auto& tlow = p.low[std::size_t(tau)];
                for (std::size_t t = 0; t < tlow.size(); ++t)
                    if (tlow[t] == rho)
                        sum += eps.sign[std::size_t(sigma)][j] * eps.sign[std::size_t(tau)][t];
            }
            if (sum != 0)
                return {false, "interval (" + p.id[std::size_t(rho)] + ", " + p.id[std::size_t(sigma)] +
                                   ") breaks the diamond sum"};
        }
    }
    return {true, ""};
}

ChainComplexData posetChainComplex(const GradedPoset& p, const IncidenceFunction& eps) {
    ChainComplexData c;
    c.topDeg = p.n - 1;
    c.dims.assign(std::size_t(p.n) + 1, 0);
    c.dims[0] = 1; // C_{-1} = 0-hat
    std::vector<int> pos(std::size_t(p.size()), -1);
    for (int r = 1; r <= p.n; ++r) {
        c.dims[std::size_t(r)] = int(p.byRank[std::size_t(r)].size());
        for (std::size_t j = 0; j < p.byRank[std::size_t(r)].size(); ++j)
            pos[std::size_t(p.byRank[std::size_t(r)][j])] = int(j);
    }
    c.bnd.resize(std::size_t(p.n) + 1);
    for (int d = 0; d <= c.topDeg; ++d) {
        IntMat m(c.dims[std::size_t(d)], c.dims[std::size_t(d + 1)]);
        for (std::size_t j = 0; j < p.byRank[std::size_t(d + 1)].size(); ++j) {
            int sigma = p.byRank[std::size_t(d + 1)][std::size_t(j)];
            if (d == 0) {
                m.at(0, int(j)) = 1; // epsilon(sigma, 0-hat)
            } else {
                const auto& taus = p.low[std::size_t(sigma)];
                for (std::size_t t = 0; t < taus.size(); ++t)
                    m.at(pos[std::size_t(taus[t])], int(j)) = eps.sign[std::size_t(sigma)][t];
            }
        }
        c.bnd[std::size_t(d + 1)] = std::move(m);
    }
    for (int d = 1; d <= c.topDeg; ++d)
        if (!isZero(matMul(c.bnd[std::size_t(d)], c.bnd[std::size_t(d + 1)])))
            throw std::logic_error("poset chain complex fails del o del = 0 at degree " + std::to_string(d));
    return c;
}

std::vector<int> homologyRanks(const ChainComplexData& c, const FieldSpec& f, Exec exec) {
    std::vector<std::size_t> rk(c.dims.size() + 1, 0);
    for (std::size_t i = 1; i < c.bnd.size(); ++i)
        if (c.bnd[i].rows > 0 && c.bnd[i].cols > 0) rk[i] = rankField(c.bnd[i], f, exec);
    std::vector<int> out(c.dims.size(), 0);
    for (std::size_t i = 0; i < c.dims.size(); ++i) {
        std::size_t cycles = std::size_t(c.dims[i]) - (i + 1 < c.bnd.size() ? rk[i + 1] : 0);
        out[i] = int(cycles - rk[i]);
    }
    return out;
}

} // namespace cdx
