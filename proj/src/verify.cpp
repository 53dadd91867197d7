#include "cdindex/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "cdindex/artinian.hpp"
#include "cdindex/elim.hpp"
#include "cdindex/error.hpp"
#include "cdindex/homology.hpp"
#include "cdindex/ints.hpp"
#include "cdindex/matrix.hpp"
#include "cdindex/sheaf.hpp"
#include "cdindex/simplicial.hpp"
#include "cdindex/words.hpp"

namespace cdx {

namespace {

using ojson = nlohmann::ordered_json;

std::string setText(const std::set<int>& s) { return "{" + subsetKey(s) + "}"; }

std::string maskText(std::uint32_t mask) { return "{" + subsetKey(mask) + "}"; }

template <class T>
std::string seqText(const std::vector<T>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

/* Subset masks of [n] grouped by size, ascending inside each group; the
 * fixed enumeration order of every flag-vector artifact. */
std::vector<std::uint32_t> maskOrder(int n) {
    std::vector<std::uint32_t> out;
    out.reserve(std::size_t(1) << n);
    for (int c = 0; c <= n; ++c)
        for (std::uint32_t m = 0; m < (1u << n); ++m)
            if (__builtin_popcount(m) == c) out.push_back(m);
    return out;
}

std::vector<int> maskElems(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if ((mask >> i) & 1u) out.push_back(i + 1);
    return out;
}

std::vector<std::set<int>> sparseOrdered(int n) {
    std::vector<std::set<int>> all = allSparseSubsets(n);
    std::sort(all.begin(), all.end(), [](const std::set<int>& x, const std::set<int>& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    return all;
}

std::map<std::set<int>, Int> alphaMap(const CdPoly& phi, int n) {
    std::map<std::set<int>, Int> t;
    for (const std::set<int>& s : allSparseSubsets(n)) t[s] = phi.coeff(kappaToWord(s, n));
    return t;
}

/* First word violating a <= b coefficientwise, rendered with both sides. */
std::optional<std::string> cdLeqViolation(const CdPoly& a, const CdPoly& b) {
    for (const auto& [w, c] : a.t)
        if (c > b.coeff(w))
            return w.str() + ": " + std::to_string(c) + " > " + std::to_string(b.coeff(w));
    for (const auto& [w, c] : b.t)
        if (c < 0 && a.coeff(w) == 0) return w.str() + ": 0 > " + std::to_string(c);
    return std::nullopt;
}

long long alternatingFSum(const RankStats& st, int n) {
    long long s = 0;
    for (int i = 0; i <= n; ++i) {
        long long v = (long long)st.rankGen[std::size_t(i)];
        s += ((n - i) % 2 != 0) ? -v : v;
    }
    return s;
}

std::string joinNames(const std::vector<std::string>& v) {
    std::string out;
    for (const std::string& s : v) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

} // namespace

const std::vector<std::string>& allCheckNames() {
    static const std::vector<std::string> names = {
        "euler",          "cm",     "gorenstein", "quasicw",     "nonneg",
        "unimodal",       "duality", "bounds",    "karu-oracle", "lemma26-oracle",
        "corollary74",    "conjecture84", "lefschetz", "kk",     "fvec-unimodal"};
    return names;
}

VerificationReport computeReport(const GradedPoset& p, const std::string& name, Exec exec) {
    VerificationReport r;
    r.poset = name;
    r.field = FieldSpec::Q();
    r.n = p.n;
    r.elems = p.size();
    r.fF = flagF(p, exec);
    r.fH = flagH(r.fF);
    r.psi = abIndex(r.fH);
    r.stats = rankStatistics(p);
    r.hvec = aggregate(r.fH);
    if (p.n >= 1) {
        r.bexp = bExpression(r.psi);
        if (r.bexp.ok) {
            r.aexp = aExpression(r.bexp);
            r.ext = extendedCdIndex(r.bexp);
        }
    } else {
        r.bexp.ok = false;
        r.bexp.why = "degree-0 ab-index; the constant is reported as-is";
    }
    return r;
}

VerificationReport verifyReport(const GradedPoset& p, const std::string& name,
                                const std::set<std::string>& checksIn, const VerifyOptions& opt,
                                Exec exec) {
    VerificationReport r = computeReport(p, name, exec);
    r.field = opt.field;

    std::set<std::string> want;
    for (const std::string& c : checksIn) {
        if (c == "all") {
            for (const std::string& k : allCheckNames())
                if (k != "fvec-unimodal" || opt.exploratory) want.insert(k);
        } else if (std::find(allCheckNames().begin(), allCheckNames().end(), c) !=
                   allCheckNames().end()) {
            want.insert(c);
        } else {
            throw CdxError("UnknownCheck", "no check named \"" + c + "\"");
        }
    }
    if (want.empty()) return r;

    if (p.size() == 0) {
        for (const std::string& nm : allCheckNames())
            if (want.count(nm)) r.checks.push_back({nm, "skipped", "empty poset"});
        return r;
    }

    const FieldSpec& fld = opt.field;

    std::optional<SimplicialComplex> ocOpt;
    auto oc = [&]() -> const SimplicialComplex& {
        if (!ocOpt) ocOpt = orderComplex(p);
        return *ocOpt;
    };
    std::optional<std::vector<FaceLinkRanks>> scanOpt;
    auto scan = [&]() -> const std::vector<FaceLinkRanks>& {
        if (!scanOpt) {
            scanOpt = linkHomologyScan(oc(), fld, exec);
            if (!scanOpt->empty()) { // the empty face leads; its link is the whole complex
                r.homology = (*scanOpt)[0].ranks;
                r.hasHomology = true;
            }
        }
        return *scanOpt;
    };
    std::optional<CheckOutcome> cmOpt, gorOpt, qcwOpt;
    auto cm = [&]() -> const CheckOutcome& {
        if (!cmOpt) cmOpt = reisnerCMFromScan(oc(), scan());
        return *cmOpt;
    };
    auto gor = [&]() -> const CheckOutcome& {
        if (!gorOpt) gorOpt = gorensteinStarFromScan(oc(), scan());
        return *gorOpt;
    };
    auto qcw = [&]() -> const CheckOutcome& {
        if (!qcwOpt) qcwOpt = quasiCWCheck(p, fld, exec);
        return *qcwOpt;
    };
    std::optional<IncidenceFunction> epsOpt;
    auto eps = [&]() -> const IncidenceFunction& {
        if (!epsOpt) epsOpt = incidenceFunction(p, fld);
        return *epsOpt;
    };
    std::optional<SheafData> sfOpt;
    auto sheaf = [&]() -> const SheafData& {
        if (!sfOpt) sfOpt = structureSheaf(p);
        return *sfOpt;
    };

    auto add = [&](const std::string& nm, bool pass, std::string witness) {
        r.checks.push_back({nm, pass ? "pass" : "fail", std::move(witness)});
    };
    auto skip = [&](const std::string& nm, std::string why) {
        r.checks.push_back({nm, "skipped", std::move(why)});
    };
    auto cmGate = [&](const std::string& nm) {
        if (cm().pass) return true;
        skip(nm, "requires a Cohen-Macaulay order complex (cm failed)");
        return false;
    };
    auto qcwGate = [&](const std::string& nm) {
        if (qcw().pass) return true;
        skip(nm, "requires the quasi-CW certificate (quasicw failed)");
        return false;
    };
    auto bexpGate = [&](const std::string& nm) {
        if (r.bexp.ok) return true;
        skip(nm, "no b-expression: " + r.bexp.why);
        return false;
    };

    for (const std::string& nm : allCheckNames()) {
        if (!want.count(nm)) continue;

        if (nm == "euler") {
            long long global = alternatingFSum(r.stats, p.n);
            if (global != 1) {
                add(nm, false, "alternating f-sum " + std::to_string(global) + ", expected 1");
                continue;
            }
            bool ok = true;
            for (int e = 0; e < p.size() && ok; ++e) {
                GradedPoset lk = link(p, e);
                long long s = alternatingFSum(rankStatistics(lk), lk.n);
                if (s != 1) {
                    add(nm, false, "link of " + p.id[std::size_t(e)] + ": alternating f-sum " +
                                       std::to_string(s) + ", expected 1");
                    ok = false;
                }
            }
            if (ok)
                add(nm, true, "alternating f-sum 1 globally and on all " +
                                  std::to_string(p.size()) + " element links");
            continue;
        }

        if (nm == "cm") {
            const CheckOutcome& o = cm();
            add(nm, o.pass,
                o.pass ? "all face links top-concentrated over " + fld.name() : o.witness);
            continue;
        }

        if (nm == "gorenstein") {
            const CheckOutcome& o = gor();
            add(nm, o.pass,
                o.pass ? "order complex is a homology sphere over " + fld.name() : o.witness);
            continue;
        }

        if (nm == "quasicw") {
            const CheckOutcome& o = qcw();
            add(nm, o.pass,
                o.pass ? "every boundary interval is a homology sphere over " + fld.name()
                       : o.witness);
            continue;
        }

        if (nm == "nonneg") {
            if (!cmGate(nm)) continue;
            if (!bexpGate(nm)) continue;
            std::string bad;
            auto scanPoly = [&](const CdPoly& q, const char* tail) {
                for (const auto& [w, c] : q.t)
                    if (c < 0 && bad.empty())
                        bad = "coefficient " + std::to_string(c) + " at " + w.str() + "*" + tail;
            };
            scanPoly(r.ext.phiD, "d");
            scanPoly(r.ext.phiA, "a");
            scanPoly(r.ext.phiB, "b");
            if (bad.empty()) add(nm, true, "phiD, phiA, phiB coefficientwise nonnegative");
            else add(nm, false, bad);
            continue;
        }

        if (nm == "unimodal") {
            if (!cmGate(nm)) continue;
            const std::vector<Int>& h = r.hvec;
            int d = p.n;
            std::string bad;
            auto need = [&](int i, int j) { // h[i] <= h[j]
                if (bad.empty() && h[std::size_t(i)] > h[std::size_t(j)])
                    bad = "h_" + std::to_string(i) + " = " + std::to_string(h[std::size_t(i)]) +
                          " exceeds h_" + std::to_string(j) + " = " +
                          std::to_string(h[std::size_t(j)]);
            };
            for (int k = 0; 2 * k < d; ++k) { // mirror family
                need(k, d - 1 - k);
                need(d - k, k + 1);
            }
            for (int k = 1; 2 * k <= d; ++k) need(k - 1, k); // rising half
            for (int k = (d + 1) / 2; k + 1 <= d; ++k) need(k + 1, k); // falling half
            if (bad.empty())
                add(nm, true, "h-vector " + seqText(h) + ": mirror and monotone inequalities hold");
            else add(nm, false, bad);
            continue;
        }

        if (nm == "duality") {
            if (!cmGate(nm)) continue;
            if (!qcwGate(nm)) continue; // the incidence function needs the CW structure
            DualStalks ds = dualStalkDims(sheaf(), eps(), fld, exec);
            ModuleFlagData mfd = moduleFlagFFromDims(p, ds.stalk0, ds.stalk, p.n);
            AbPoly dualPsi = abIndex(flagH(mfd.flagF));
            AbPoly target = swapAb(r.psi);
            if (!abDiff(dualPsi, target).isZero()) {
                add(nm, false, "dual module ab-index " + printAb(dualPsi) +
                                   " differs from the reversed ab-index " + printAb(target));
                continue;
            }
            if (gor().pass && !abDiff(r.psi, target).isZero()) {
                add(nm, false,
                    "Gorenstein* certificate holds but the ab-index is not symmetric: " +
                        printAb(r.psi));
                continue;
            }
            add(nm, true,
                gor().pass ? "dual ab-index equals the reversed ab-index; ab-index symmetric"
                           : "dual ab-index equals the reversed ab-index");
            continue;
        }

        if (nm == "bounds") {
            if (!cmGate(nm)) continue;
            if (!qcwGate(nm)) continue;
            if (!bexpGate(nm)) continue;
            auto tab = alphaMap(r.bexp.phi, p.n);
            std::string bad;
            std::vector<std::string> eq;
            int cnt = 0;
            for (const std::set<int>& s : sparseOrdered(p.n)) {
                Int val = tab.at(s);
                Int bound = 1;
                for (int i : s) bound = checkedMul(bound, tab.at(std::set<int>{i}));
                ++cnt;
                if (val > bound) {
                    bad = "alpha" + setText(s) + " = " + std::to_string(val) + " > " +
                          std::to_string(bound) + " = product of singleton alphas";
                    break;
                }
                if (s.size() >= 2 && val == bound)
                    eq.push_back(setText(s) + " = " + std::to_string(val));
            }
            if (!bad.empty()) add(nm, false, bad);
            else
                add(nm, true, std::to_string(cnt) + " sparse sets within bounds; " +
                                  (eq.empty() ? std::string("no equality cases")
                                              : "equality on " + joinNames(eq)));
            continue;
        }

        if (nm == "karu-oracle") {
            if (!cmGate(nm)) continue;
            if (!qcwGate(nm)) continue; // skeleton quotients are built from the incidence data
            if (!bexpGate(nm)) continue;
            std::vector<AbPoly> oracle;
            try {
                oracle = karuPhiOracle(sheaf(), eps(), fld, exec);
            } catch (const CdxError& e) {
                add(nm, false, e.what());
                continue;
            }
            std::string bad;
            int cnt = 0;
            for (int k = 0; k + 2 <= p.n && k < (int)oracle.size() && bad.empty(); ++k) {
                CdWord suf{};
                suf = cdAppend(suf, true);
                for (int j = 0; j < p.n - 2 - k; ++j) suf = cdAppend(suf, false);
                CdPoly slice = extractSub(r.bexp.phi, suf);
                if (!abDiff(oracle[std::size_t(k)], expandCd(slice)).isZero())
                    bad = "k = " + std::to_string(k) + ": skeleton quotient index " +
                          printAb(oracle[std::size_t(k)]) + " differs from the phi slice " +
                          printCd(slice);
                else ++cnt;
            }
            if (!bad.empty()) add(nm, false, bad);
            else if (cnt == 0) add(nm, true, "degree below 2; nothing to slice");
            else
                add(nm, true, "phi slices reproduced for k = 0.." + std::to_string(p.n - 2) +
                                  " from the skeleton quotients");
            continue;
        }

        if (nm == "lemma26-oracle") {
            if (!qcwGate(nm)) continue;
            std::map<int, CdPoly> bphi;
            std::string bad;
            for (int e = 0; e < p.size() && bad.empty(); ++e) {
                GradedPoset bd = openInterval(p, e);
                ToCdResult tc = toCd(abIndex(flagH(flagF(bd, exec))));
                if (!tc.ok) {
                    bad = "boundary of " + p.id[std::size_t(e)] + " has no cd-index: " + tc.why;
                    break;
                }
                bphi[e] = tc.phi;
            }
            if (!bad.empty()) {
                add(nm, false, bad);
                continue;
            }
            AbPoly formula = abIndexViaStalks(sheaf(), bphi);
            if (abDiff(formula, r.psi).isZero())
                add(nm, true, "stalk formula reproduces the ab-index from " +
                                  std::to_string(p.size()) + " boundary indices");
            else
                add(nm, false, "stalk formula gives " + printAb(formula) + ", ab-index is " +
                                   printAb(r.psi));
            continue;
        }

        if (nm == "corollary74") {
            if (!cmGate(nm)) continue;
            if (!qcwGate(nm)) continue;
            if (!bexpGate(nm)) continue;
            std::vector<int> maxes;
            for (int e = 0; e < p.size(); ++e)
                if (p.up[std::size_t(e)].empty()) maxes.push_back(e);
            std::vector<std::vector<int>> subsets;
            std::vector<int> cur;
            std::function<void(int)> rec = [&](int from) {
                if (!cur.empty()) subsets.push_back(cur);
                if ((int)cur.size() == opt.idealCap) return;
                for (int i = from; i < (int)maxes.size(); ++i) {
                    cur.push_back(maxes[std::size_t(i)]);
                    rec(i + 1);
                    cur.pop_back();
                }
            };
            rec(0);
            int rankDrop = 0, notCm = 0, noBexp = 0, compared = 0;
            std::string bad;
            for (const std::vector<int>& del : subsets) {
                if (!bad.empty()) break;
                GradedPoset q = p;
                for (int e : del) q = deleteMax(q, p.id[std::size_t(e)]);
                if (q.n != p.n) {
                    ++rankDrop;
                    continue;
                }
                SimplicialComplex qoc = orderComplex(q);
                CheckOutcome qcm = reisnerCMFromScan(qoc, linkHomologyScan(qoc, fld, exec));
                if (!qcm.pass) {
                    ++notCm;
                    continue;
                }
                BExpression qb = bExpression(abIndex(flagH(flagF(q, exec))));
                if (!qb.ok) {
                    ++noBexp;
                    continue;
                }
                ExtendedCdIndex qe = extendedCdIndex(qb);
                ++compared;
                auto vio = cdLeqViolation(qe.phiD, r.ext.phiD);
                const char* piece = "phiD";
                if (!vio) {
                    vio = cdLeqViolation(qe.phiA, r.ext.phiA);
                    piece = "phiA";
                }
                if (!vio) {
                    vio = cdLeqViolation(qe.phiB, r.ext.phiB);
                    piece = "phiB";
                }
                if (vio) {
                    std::string ids;
                    for (int e : del) {
                        if (!ids.empty()) ids += ",";
                        ids += p.id[std::size_t(e)];
                    }
                    bad = "ideal without {" + ids + "}: " + piece + " at " + *vio;
                }
            }
            if (!bad.empty()) add(nm, false, bad);
            else if (compared == 0)
                skip(nm, "no full-rank Cohen-Macaulay ideals among " +
                             std::to_string(subsets.size()) + " candidates");
            else {
                std::string w = std::to_string(compared) + " of " +
                                std::to_string(subsets.size()) + " ideals compared (" +
                                std::to_string(rankDrop) + " dropped rank, " +
                                std::to_string(notCm) + " not Cohen-Macaulay";
                if (noBexp > 0) w += ", " + std::to_string(noBexp) + " without b-expression";
                add(nm, true, w + ")");
            }
            continue;
        }

        if (nm == "conjecture84") {
            if (!cmGate(nm)) continue;
            if (!qcwGate(nm)) continue;
            if (!bexpGate(nm)) continue;
            auto tab = alphaMap(r.bexp.phi, p.n);
            std::string bad;
            long long splits = 0;
            int eqCount = 0;
            for (const std::set<int>& s : sparseOrdered(p.n)) {
                if (!bad.empty()) break;
                std::vector<int> el(s.begin(), s.end());
                Int aS = tab.at(s);
                for (std::uint32_t m = 0; m < (1u << el.size()); ++m) {
                    std::set<int> t1, t2;
                    for (std::size_t i = 0; i < el.size(); ++i)
                        ((m >> i) & 1u ? t1 : t2).insert(el[std::size_t(i)]);
                    Int prod = checkedMul(tab.at(t1), tab.at(t2));
                    ++splits;
                    if (aS > prod) {
                        bad = "alpha" + setText(s) + " = " + std::to_string(aS) + " > " +
                              std::to_string(prod) + " = alpha" + setText(t1) + "*alpha" +
                              setText(t2);
                        break;
                    }
                    if (s.size() >= 2 && !t1.empty() && !t2.empty() && aS == prod) ++eqCount;
                }
            }
            if (!bad.empty()) add(nm, false, bad);
            else
                add(nm, true, std::to_string(splits) + " splits within bounds (" +
                                  std::to_string(eqCount) + " nontrivial equalities)");
            continue;
        }

        if (nm == "lefschetz") {
            if (!cmGate(nm)) continue;
            if (!qcwGate(nm)) continue;
            if (p.n < 1) {
                skip(nm, "rank 0; no graded pieces");
                continue;
            }
            std::uint32_t prime = fld.rational ? 32003u : fld.p;
            int good = 0;
            std::vector<std::string> notes;
            std::vector<std::string> seedsUsed;
            for (int t = 0; t < 3; ++t) {
                std::uint64_t base = opt.seed + 7919ull * (std::uint64_t)t;
                std::optional<RankProfile> prof;
                std::uint64_t chosen = base;
                for (int att = 0; att < 8 && !prof; ++att) {
                    std::uint64_t cand = base + (std::uint64_t)att;
                    try {
                        prof = lefschetzProfile(oc(), cand, cand ^ 0x9e3779b97f4a7c15ull, prime,
                                                exec);
                        chosen = cand;
                    } catch (const CdxError& e) {
                        if (e.code() != "NotArtinian") throw;
                    }
                }
                if (!prof) {
                    notes.push_back("seed " + std::to_string(base) +
                                    ": no parameter system in 8 draws");
                    seedsUsed.push_back(std::to_string(base) + "*");
                    continue;
                }
                seedsUsed.push_back(std::to_string(chosen));
                bool ok = true;
                std::string first;
                for (const LefschetzMap& m : prof->maps) {
                    bool sat = m.expected == "injective"    ? m.rank == m.sourceDim
                               : m.expected == "surjective" ? m.rank == m.targetDim
                                                            : true;
                    if (!sat) {
                        ok = false;
                        if (first.empty())
                            first = "w^" + std::to_string(m.power) + ": A_" +
                                    std::to_string(m.source) + " -> A_" +
                                    std::to_string(m.target) + " rank " +
                                    std::to_string(m.rank) + ", expected " + m.expected +
                                    " (dims " + std::to_string(m.sourceDim) + " -> " +
                                    std::to_string(m.targetDim) + ")";
                    }
                }
                if (ok) ++good;
                else notes.push_back("seed " + std::to_string(chosen) + ": " + first);
            }
            std::string w = "p = " + std::to_string(prime) + ", seeds " + joinNames(seedsUsed) +
                            ": " + std::to_string(good) + "/3 profiles match the expected pattern";
            if (!notes.empty()) w += "; " + joinNames(notes);
            add(nm, good >= 2, w);
            continue;
        }

        if (nm == "kk") {
            if (!cmGate(nm)) continue;
            if (!qcwGate(nm)) continue;
            std::vector<long long> diff;
            diff.push_back((long long)r.hvec[0]);
            for (int j = 1; j <= p.n / 2; ++j)
                diff.push_back((long long)(r.hvec[std::size_t(j)] - r.hvec[std::size_t(j) - 1]));
            bool ok = false;
            std::string note;
            try {
                ok = kruskalKatonaCheck(diff);
            } catch (const CdxError& e) {
                note = e.what();
            }
            if (ok)
                add(nm, true, "difference vector " + seqText(diff) + " is a simplicial f-vector");
            else
                add(nm, false, "difference vector " + seqText(diff) +
                                   (note.empty() ? " fails the binomial cascade" : ": " + note));
            continue;
        }

        if (nm == "fvec-unimodal") {
            if (!cmGate(nm)) continue;
            std::vector<long long> f = fVector(oc());
            std::vector<long long> seq(f.begin() + 1, f.end());
            int dip = -1;
            bool falling = false;
            for (std::size_t i = 1; i < seq.size(); ++i) {
                if (seq[i] < seq[i - 1]) falling = true;
                else if (seq[i] > seq[i - 1] && falling) {
                    dip = (int)i;
                    break;
                }
            }
            if (dip < 0) add(nm, true, "face counts " + seqText(seq) + " unimodal (exploratory)");
            else
                add(nm, false, "face counts " + seqText(seq) + " rise again at position " +
                                   std::to_string(dip) + " (exploratory finding)");
            continue;
        }
    }

    return r;
}

namespace {

ojson flagJson(const FlagVector& v) {
    ojson arr = ojson::array();
    for (std::uint32_t mask : maskOrder(v.n)) {
        ojson o;
        o["set"] = maskElems(mask);
        o["value"] = v.at(mask);
        arr.push_back(std::move(o));
    }
    return arr;
}

ojson checksJson(const std::vector<CheckResult>& checks) {
    ojson arr = ojson::array();
    for (const CheckResult& c : checks) {
        ojson o;
        o["name"] = c.name;
        o["status"] = c.status;
        o["witness"] = c.witness;
        arr.push_back(std::move(o));
    }
    return arr;
}

ojson reportJsonObj(const VerificationReport& r) {
    ojson j;
    j["poset"] = r.poset;
    j["field"] = r.field.name();
    j["checks"] = checksJson(r.checks);
    ojson a;
    a["flagF"] = flagJson(r.fF);
    a["flagH"] = flagJson(r.fH);
    a["psi"] = printAb(r.psi);
    if (r.bexp.ok) {
        a["phi"] = printCd(r.bexp.phi);
        a["upsilon"] = printCd(r.bexp.upsilon);
        ojson ext;
        ext["phiD"] = printCd(r.ext.phiD);
        ext["phiA"] = printCd(r.ext.phiA);
        ext["phiB"] = printCd(r.ext.phiB);
        a["extended"] = std::move(ext);
    } else {
        a["phi"] = nullptr;
        a["upsilon"] = nullptr;
        a["extended"] = nullptr;
        a["note"] = r.bexp.why;
    }
    ojson al;
    al["singletons"] = r.stats.alphaSingletons;
    if (r.bexp.ok) {
        ojson tab = ojson::array();
        for (const std::set<int>& s : sparseOrdered(r.n)) {
            ojson row;
            row["set"] = std::vector<int>(s.begin(), s.end());
            row["word"] = kappaToWord(s, r.n).str();
            row["value"] = r.bexp.phi.coeff(kappaToWord(s, r.n));
            tab.push_back(std::move(row));
        }
        al["table"] = std::move(tab);
    }
    a["alphas"] = std::move(al);
    a["hvec"] = r.hvec;
    a["fvec"] = aggregate(r.fF);
    a["rank_f"] = r.stats.rankGen;
    if (r.hasHomology) a["homology"] = r.homology;
    j["artifacts"] = std::move(a);
    return j;
}

} // namespace

std::string reportText(const VerificationReport& r) {
    std::ostringstream o;
    o << "poset: " << r.poset << "  (rank " << r.n << ", " << r.elems << " elements)\n";
    o << "field: " << r.field.name() << "\n";
    if (!r.checks.empty()) {
        o << "checks:\n";
        for (const CheckResult& c : r.checks) {
            o << "  " << c.name;
            for (std::size_t i = c.name.size(); i < 15; ++i) o << ' ';
            o << c.status;
            for (std::size_t i = c.status.size(); i < 8; ++i) o << ' ';
            o << c.witness << "\n";
        }
    }
    o << "artifacts:\n";
    o << "  f_S:";
    for (std::uint32_t m : maskOrder(r.fF.n)) o << "  " << maskText(m) << "=" << r.fF.at(m);
    o << "\n  h_S:";
    for (std::uint32_t m : maskOrder(r.fH.n)) o << "  " << maskText(m) << "=" << r.fH.at(m);
    o << "\n";
    o << "  psi: " << printAb(r.psi) << "\n";
    if (r.bexp.ok) {
        o << "  phi: " << printCd(r.bexp.phi) << "\n";
        o << "  upsilon: " << printCd(r.bexp.upsilon) << "\n";
        o << "  phiD: " << printCd(r.ext.phiD) << "\n";
        o << "  phiA: " << printCd(r.ext.phiA) << "\n";
        o << "  phiB: " << printCd(r.ext.phiB) << "\n";
    } else {
        o << "  phi: none (" << r.bexp.why << ")\n";
    }
    o << "  alpha singletons: " << seqText(r.stats.alphaSingletons) << "\n";
    if (r.bexp.ok) {
        o << "  alpha table:";
        for (const std::set<int>& s : sparseOrdered(r.n))
            o << "  " << setText(s) << "=" << r.bexp.phi.coeff(kappaToWord(s, r.n));
        o << "\n";
    }
    o << "  h-vector: " << seqText(r.hvec) << "\n";
    o << "  rank sizes: " << seqText(r.stats.rankGen) << "\n";
    if (r.hasHomology) o << "  homology: " << seqText(r.homology) << "\n";
    return o.str();
}

std::string reportJson(const VerificationReport& r) { return reportJsonObj(r).dump(2) + "\n"; }

CorpusSummary corpusSummary(const std::vector<CorpusEntry>& entries,
                            const std::set<std::string>& checks, const VerifyOptions& opt,
                            Exec exec) {
    CorpusSummary s;
    s.rows.resize(entries.size());
#pragma omp parallel for schedule(dynamic, 1) if (runParallel(exec))
    for (long long i = 0; i < (long long)entries.size(); ++i) {
        const CorpusEntry& e = entries[std::size_t(i)];
        CorpusRow& row = s.rows[std::size_t(i)];
        row.name = e.name;
        row.n = e.p.n;
        Exec inner = runParallel(exec) ? Exec::serial : exec;
        try {
            row.report = checks.empty() ? computeReport(e.p, e.name, inner)
                                        : verifyReport(e.p, e.name, checks, opt, inner);
        } catch (const std::exception& ex) {
            row.error = ex.what();
        }
    }
    std::map<int, std::vector<const VerificationReport*>> byRank;
    for (const CorpusRow& row : s.rows)
        if (row.error.empty() && row.report.bexp.ok) byRank[row.report.n].push_back(&row.report);
    for (const auto& [n, list] : byRank) {
        std::vector<CdWord> wn = allCdWords(n);
        std::vector<CdWord> wn1 = allCdWords(n - 1);
        IntMat m((int)list.size(), (int)(wn.size() + wn1.size()));
        for (int i = 0; i < (int)list.size(); ++i) {
            int j = 0;
            for (const CdWord& w : wn) m.at(i, j++) = list[std::size_t(i)]->aexp.phiPrime.coeff(w);
            for (const CdWord& w : wn1)
                m.at(i, j++) = list[std::size_t(i)]->aexp.upsilonPrime.coeff(w);
        }
        SpanCell c;
        c.n = n;
        c.members = (int)list.size();
        c.rank = (long long)rankQ(m, exec);
        c.target = fibonacci(n + 2);
        s.span.push_back(c);
    }
    return s;
}

std::string summaryText(const CorpusSummary& s) {
    std::ostringstream o;
    for (const CorpusRow& r : s.rows) {
        o << "  " << r.name;
        for (std::size_t i = r.name.size(); i < 18; ++i) o << ' ';
        o << " rank " << r.n;
        if (!r.error.empty()) {
            o << "  error: " << r.error << "\n";
            continue;
        }
        o << "  phi "
          << (r.report.bexp.ok ? printCd(r.report.bexp.phi) : std::string("-"));
        if (!r.report.checks.empty()) {
            int pass = 0, fail = 0, skipped = 0;
            std::vector<std::string> fails;
            for (const CheckResult& c : r.report.checks) {
                if (c.status == "pass") ++pass;
                else if (c.status == "fail") {
                    ++fail;
                    fails.push_back(c.name);
                } else ++skipped;
            }
            o << "  [" << pass << " pass, " << fail << " fail, " << skipped << " skipped";
            if (!fails.empty()) o << "; fails: " << joinNames(fails);
            o << "]";
        }
        o << "\n";
    }
    if (!s.span.empty()) {
        o << "a-expression span by rank:\n";
        for (const SpanCell& c : s.span)
            o << "  rank " << c.n << ": " << c.members << " members span " << c.rank
              << ", target F(" << c.n + 2 << ") = " << c.target << "\n";
    }
    return o.str();
}

std::string summaryJson(const CorpusSummary& s) {
    ojson j;
    ojson rows = ojson::array();
    for (const CorpusRow& r : s.rows) {
        ojson row;
        row["name"] = r.name;
        row["rank"] = r.n;
        if (!r.error.empty()) {
            row["error"] = r.error;
            row["phi"] = nullptr;
            row["checks"] = ojson::array();
        } else {
            row["error"] = nullptr;
            if (r.report.bexp.ok) row["phi"] = printCd(r.report.bexp.phi);
            else row["phi"] = nullptr;
            row["checks"] = checksJson(r.report.checks);
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    ojson span = ojson::array();
    for (const SpanCell& c : s.span) {
        ojson cell;
        cell["rank"] = c.n;
        cell["members"] = c.members;
        cell["span"] = c.rank;
        cell["target"] = c.target;
        span.push_back(std::move(cell));
    }
    j["span"] = std::move(span);
    return j.dump(2) + "\n";
}

} // namespace cdx
