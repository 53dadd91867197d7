#include "cdindex/ncpoly.hpp"

#include <cctype>
#include <stdexcept>

#include "cdindex/elim.hpp"

namespace cdx {

AbPoly abZero(int deg) { return AbPoly{deg, {}}; }
CdPoly cdZero(int deg) { return CdPoly{deg, {}}; }

AbPoly abMono(AbWord w, Int c) {
    AbPoly p{int(w.len), {}};
    if (c != 0) p.t.emplace(w, c);
    return p;
}

CdPoly cdMono(CdWord w, Int c) {
    CdPoly p{w.degree(), {}};
    if (c != 0) p.t.emplace(w, c);
    return p;
}

void abAdd(AbPoly& p, AbWord w, Int c) {
    if (c == 0) return;
    auto [it, fresh] = p.t.emplace(w, c);
    if (!fresh) {
        it->second = checkedAdd(it->second, c);
        if (it->second == 0) p.t.erase(it);
    }
}

void cdAdd(CdPoly& p, CdWord w, Int c) {
    if (c == 0) return;
    auto [it, fresh] = p.t.emplace(w, c);
    if (!fresh) {
        it->second = checkedAdd(it->second, c);
        if (it->second == 0) p.t.erase(it);
    }
}

AbPoly abSum(const AbPoly& p, const AbPoly& q) {
    AbPoly r = p;
    for (auto& [w, c] : q.t) abAdd(r, w, c);
    return r;
}

AbPoly abDiff(const AbPoly& p, const AbPoly& q) {
    AbPoly r = p;
    for (auto& [w, c] : q.t) abAdd(r, w, checkedSub(0, c));
    return r;
}

AbPoly abScale(const AbPoly& p, Int c) {
    AbPoly r{p.deg, {}};
    if (c == 0) return r;
    for (auto& [w, k] : p.t) r.t.emplace(w, checkedMul(k, c));
    return r;
}

AbPoly abMul(const AbPoly& p, const AbPoly& q) {
    AbPoly r{p.deg + q.deg, {}};
    for (auto& [w1, c1] : p.t)
        for (auto& [w2, c2] : q.t) abAdd(r, abConcat(w1, w2), checkedMul(c1, c2));
    return r;
}

CdPoly cdSum(const CdPoly& p, const CdPoly& q) {
    CdPoly r = p;
    for (auto& [w, c] : q.t) cdAdd(r, w, c);
    return r;
}

CdPoly cdDiff(const CdPoly& p, const CdPoly& q) {
    CdPoly r = p;
    for (auto& [w, c] : q.t) cdAdd(r, w, checkedSub(0, c));
    return r;
}

CdPoly cdScale(const CdPoly& p, Int c) {
    CdPoly r{p.deg, {}};
    if (c == 0) return r;
    for (auto& [w, k] : p.t) r.t.emplace(w, checkedMul(k, c));
    return r;
}

CdPoly cdMul(const CdPoly& p, const CdPoly& q) {
    CdPoly r{p.deg + q.deg, {}};
    for (auto& [w1, c1] : p.t)
        for (auto& [w2, c2] : q.t) cdAdd(r, cdConcat(w1, w2), checkedMul(c1, c2));
    return r;
}

bool operator==(const AbPoly& p, const AbPoly& q) { return p.deg == q.deg && p.t == q.t; }
bool operator==(const CdPoly& p, const CdPoly& q) { return p.deg == q.deg && p.t == q.t; }

AbPoly expandCd(CdWord w) {
    /* Every substitution path yields a distinct ab-word, so coefficients
     * stay 1; the accumulation below would also handle collisions. */
    std::vector<AbWord> cur{AbWord{}};
    for (unsigned i = 0; i < w.len; ++i) {
        std::vector<AbWord> nxt;
        nxt.reserve(cur.size() * 2);
        for (AbWord u : cur) {
            if (w.dAt(i)) {
                nxt.push_back(abAppend(abAppend(u, false), true));
                nxt.push_back(abAppend(abAppend(u, true), false));
            } else {
                nxt.push_back(abAppend(u, false));
                nxt.push_back(abAppend(u, true));
            }
        }
        cur.swap(nxt);
    }
    AbPoly p{w.degree(), {}};
    for (AbWord u : cur) abAdd(p, u, 1);
    return p;
}

AbPoly expandCd(const CdPoly& p) {
    AbPoly r{p.deg, {}};
    for (auto& [w, c] : p.t) {
        AbPoly e = expandCd(w);
        for (auto& [u, k] : e.t) abAdd(r, u, checkedMul(k, c));
    }
    return r;
}

AbPoly swapAb(const AbPoly& p) {
    AbPoly r{p.deg, {}};
    for (auto& [w, c] : p.t) {
        std::uint32_t mask = w.len == 32 ? ~0u : ((1u << w.len) - 1u);
        r.t.emplace(AbWord{w.len, ~w.bits & mask}, c);
    }
    return r;
}

std::vector<Int> hPolynomial(const AbPoly& p) {
    std::vector<Int> h(std::size_t(p.deg) + 1, 0);
    for (auto& [w, c] : p.t) {
        auto k = std::size_t(__builtin_popcount(w.bits));
        h[k] = checkedAdd(h[k], c);
    }
    return h;
}

AbPoly ambPow(int k) {
    if (k < 0) throw std::invalid_argument("ambPow: negative exponent");
    if (k > 31) throw std::length_error("ambPow: exponent too large");
    AbPoly p{k, {}};
    for (std::uint32_t m = 0; m < (1u << k); ++m)
        p.t.emplace(AbWord{std::uint8_t(k), m}, __builtin_popcount(m) % 2 ? -1 : 1);
    return p;
}

AbPoly timesB(const AbPoly& p) {
    AbPoly r{p.deg + 1, {}};
    for (auto& [w, c] : p.t) r.t.emplace(abAppend(w, true), c);
    return r;
}

namespace {

Int intOfQ(const mpq_class& q) {
    mpz_class num = q.get_num();
    if (!num.fits_slong_p()) throw OverflowError("rational coefficient exceeds int64");
    return Int(num.get_si());
}

/* Solve psi = sum_j x_j * expand(columns[j]) exactly over Q.  Row index is
 * the ab-word bit pattern of length deg. */
struct BasisSolve {
    bool consistent = false;
    bool integral = false;
    std::size_t rank = 0;
    std::vector<Int> x;
};

BasisSolve solveAgainstBasis(const AbPoly& psi, const std::vector<AbPoly>& columns) {
    int d = psi.deg;
    if (d < 0 || d > kMaxSolveDegree) throw std::length_error("cd solve: degree out of range");
    std::size_t rows = std::size_t(1) << d;
    QMat a(rows, QVec(columns.size(), mpq_class(0)));
    QVec b(rows, mpq_class(0));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (auto& [w, c] : columns[j].t) a[w.bits][j] = mpq_class(long(c));
    for (auto& [w, c] : psi.t) b[w.bits] = mpq_class(long(c));

    QSolve s = solveQ(a, b);
    BasisSolve out;
    out.consistent = s.consistent;
    out.rank = s.rank;
    if (!s.consistent) return out;
    out.integral = true;
    out.x.resize(columns.size(), 0);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (s.x[j].get_den() != 1) {
            out.integral = false;
            return out;
        }
        out.x[j] = intOfQ(s.x[j]);
    }
    return out;
}

} // namespace

ToCdResult toCd(const AbPoly& psi) {
    ToCdResult r;
    int d = psi.deg;
    std::vector<CdWord> basis = allCdWords(d);
    std::vector<AbPoly> cols;
    cols.reserve(basis.size());
    for (CdWord w : basis) cols.push_back(expandCd(w));

    BasisSolve s = solveAgainstBasis(psi, cols);
    if (s.rank != basis.size()) throw std::logic_error("toCd: cd expansions must be independent");
    if (!s.consistent) {
        r.why = "NotRepresentable: not in the span of cd-word expansions";
        return r;
    }
    /* The lattice spanned by cd-word expansions is saturated, so integer
     * inputs in the rational span have integer coordinates. */
    if (!s.integral) throw std::logic_error("toCd: NonIntegralSolution");
    r.ok = true;
    r.phi.deg = d;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (s.x[j] != 0) r.phi.t.emplace(basis[j], s.x[j]);
    return r;
}

BExpression bExpression(const AbPoly& psi) {
    BExpression r;
    int d = psi.deg;
    if (d < 1) throw std::invalid_argument("bExpression: degree must be at least 1");

    std::vector<CdWord> phiBasis = allCdWords(d);
    std::vector<CdWord> upsBasis = allCdWords(d - 1);
    std::vector<AbPoly> cols;
    cols.reserve(phiBasis.size() + upsBasis.size());
    for (CdWord w : phiBasis) cols.push_back(expandCd(w));
    for (CdWord w : upsBasis) cols.push_back(timesB(expandCd(w)));

    BasisSolve s = solveAgainstBasis(psi, cols);
    if (s.rank != cols.size())
        throw std::logic_error("bExpression: basis of cd-words and cd-words*b must be independent");
    if (!s.consistent) {
        r.why = "NotRepresentable: no decomposition Phi + Upsilon*b exists";
        return r;
    }
    if (!s.integral) throw std::logic_error("bExpression: NonIntegralSolution");
    r.ok = true;
    r.phi.deg = d;
    r.upsilon.deg = d - 1;
    for (std::size_t j = 0; j < phiBasis.size(); ++j)
        if (s.x[j] != 0) r.phi.t.emplace(phiBasis[j], s.x[j]);
    for (std::size_t j = 0; j < upsBasis.size(); ++j)
        if (s.x[phiBasis.size() + j] != 0) r.upsilon.t.emplace(upsBasis[j], s.x[phiBasis.size() + j]);
    return r;
}

AExpression aExpression(const BExpression& b) {
    if (!b.ok) throw std::invalid_argument("aExpression: b-expression not available");
    AExpression r;
    CdWord c{1, 0};
    r.phiPrime = cdSum(b.phi, cdMul(b.upsilon, cdMono(c)));
    r.upsilonPrime = cdScale(b.upsilon, -1);
    return r;
}

ExtendedCdIndex extendedCdIndex(const BExpression& b) {
    if (!b.ok) throw std::invalid_argument("extendedCdIndex: b-expression not available");
    int d = b.phi.deg;
    if (d < 1) throw std::invalid_argument("extendedCdIndex: degree must be at least 1");
    ExtendedCdIndex r;
    r.phiD.deg = d - 2;
    r.phiA.deg = d - 1;
    for (auto& [w, c] : b.phi.t) {
        CdWord head{std::uint8_t(w.len - 1), w.bits & ((1u << (w.len - 1)) - 1u)};
        if (w.dAt(unsigned(w.len) - 1))
            cdAdd(r.phiD, head, c);
        else
            cdAdd(r.phiA, head, c);
    }
    r.phiB = cdSum(r.phiA, b.upsilon);
    return r;
}

CdPoly extractSub(const CdPoly& p, CdWord suffix) {
    CdPoly r{p.deg - suffix.degree(), {}};
    for (auto& [w, c] : p.t) {
        if (w.len < suffix.len) continue;
        unsigned shift = unsigned(w.len) - suffix.len;
        if ((w.bits >> shift) != suffix.bits) continue;
        std::uint32_t lowMask = shift == 0 ? 0u : ((1u << shift) - 1u);
        cdAdd(r, CdWord{std::uint8_t(shift), w.bits & lowMask}, c);
    }
    return r;
}

namespace {

template <typename Poly>
std::string printPoly(const Poly& p) {
    if (p.t.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [w, c] : p.t) {
        Int k = c;
        if (first) {
            if (k < 0) {
                out += "-";
                k = checkedSub(0, k);
            }
            first = false;
        } else if (k < 0) {
            out += " - ";
            k = checkedSub(0, k);
        } else {
            out += " + ";
        }
        out += std::to_string(k);
        out += "*";
        out += w.str();
    }
    return out;
}

struct Term {
    Int coeff;
    std::string word;
};

std::vector<Term> parseTerms(const std::string& s) {
    std::vector<Term> terms;
    std::size_t i = 0, n = s.size();
    auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip();
    if (i == n) throw std::invalid_argument("polynomial: empty input");
    bool first = true;
    while (i < n) {
        Int sign = 1;
        if (!first) {
            if (s[i] == '+') {
                ++i;
            } else if (s[i] == '-') {
                sign = -1;
                ++i;
            } else {
                throw std::invalid_argument("polynomial: expected + or - between terms");
            }
            skip();
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
            skip();
        }
        first = false;
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("polynomial: expected integer coefficient");
        Int coeff;
        try {
            coeff = std::stoll(s.substr(start, i - start));
        } catch (const std::out_of_range&) {
            throw OverflowError("polynomial: coefficient exceeds int64");
        }
        if (i >= n || s[i] != '*') throw std::invalid_argument("polynomial: expected '*' after coefficient");
        ++i;
        start = i;
        while (i < n && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("polynomial: expected word after '*'");
        terms.push_back(Term{checkedMul(sign, coeff), s.substr(start, i - start)});
        skip();
    }
    return terms;
}

} // namespace

std::string printAb(const AbPoly& p) { return printPoly(p); }
std::string printCd(const CdPoly& p) { return printPoly(p); }

AbPoly parseAb(const std::string& s) {
    std::string trimmed;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed == "0") return abZero(0);
    AbPoly p{-1, {}};
    for (const Term& t : parseTerms(s)) {
        AbWord w{};
        if (t.word != "1") {
            if (t.word.size() > 31) throw std::length_error("polynomial: word too long");
            for (char c : t.word) {
                if (c != 'a' && c != 'b') throw std::invalid_argument("polynomial: ab-word may only use a and b");
                w = abAppend(w, c == 'b');
            }
        }
        if (p.deg < 0)
            p.deg = int(w.len);
        else if (p.deg != int(w.len))
            throw std::invalid_argument("polynomial: terms of unequal degree");
        abAdd(p, w, t.coeff);
    }
    return p;
}

CdPoly parseCd(const std::string& s) {
    std::string trimmed;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed == "0") return cdZero(0);
    CdPoly p{-1, {}};
    for (const Term& t : parseTerms(s)) {
        CdWord w{};
        if (t.word != "1") {
            if (t.word.size() > 31) throw std::length_error("polynomial: word too long");
            for (char c : t.word) {
                if (c != 'c' && c != 'd') throw std::invalid_argument("polynomial: cd-word may only use c and d");
                w = cdAppend(w, c == 'd');
            }
        }
        if (p.deg < 0)
            p.deg = w.degree();
        else if (p.deg != w.degree())
            throw std::invalid_argument("polynomial: terms of unequal degree");
        cdAdd(p, w, t.coeff);
    }
    return p;
}

} // namespace cdx
