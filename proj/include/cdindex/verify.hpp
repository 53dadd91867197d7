#ifndef CDINDEX_VERIFY_HPP
#define CDINDEX_VERIFY_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cdindex/constructions.hpp"
#include "cdindex/field.hpp"
#include "cdindex/flags.hpp"
#include "cdindex/ncpoly.hpp"
#include "cdindex/parallel.hpp"
#include "cdindex/poset.hpp"

namespace cdx {

struct CheckResult {
    std::string name;
    std::string status;  // "pass", "fail" or "skipped"
    std::string witness; // the numbers compared, or the skip reason
};

/* Everything a report can carry.  The decomposition fields are only
 * meaningful while bexp.ok holds; degree-0 indices keep bexp.ok false and
 * report the constant as-is. */
struct VerificationReport {
    std::string poset;
    FieldSpec field;
    int n = 0;
    int elems = 0;
    std::vector<CheckResult> checks;

    FlagVector fF;
    FlagVector fH;
    AbPoly psi;
    BExpression bexp;
    AExpression aexp;
    ExtendedCdIndex ext;
    RankStats stats;
    std::vector<Int> hvec;
    std::vector<int> homology; // reduced ranks of the order complex
    bool hasHomology = false;
};

/* Canonical check names in report order.  "fvec-unimodal" is exploratory
 * and sits last; "all" in a request expands to everything before it. */
const std::vector<std::string>& allCheckNames();

struct VerifyOptions {
    FieldSpec field = FieldSpec::Q();
    std::uint64_t seed = 1;   // lefschetz form draws
    int idealCap = 2;         // corollary74: max deleted maximal elements
    bool exploratory = false; // admits fvec-unimodal under "all"
};

/* Artifacts only; the check list stays empty. */
VerificationReport computeReport(const GradedPoset& p, const std::string& name,
                                 Exec exec = defaultExec());

/* Runs the requested checks ("all" expands, unknown names throw
 * UnknownCheck).  Prerequisite certificates are computed on demand and
 * dependent checks are marked skipped when one fails. */
VerificationReport verifyReport(const GradedPoset& p, const std::string& name,
                                const std::set<std::string>& checks, const VerifyOptions& opt,
                                Exec exec = defaultExec());

std::string reportText(const VerificationReport& r);
std::string reportJson(const VerificationReport& r);

struct CorpusRow {
    std::string name;
    int n = 0;
    std::string error; // nonempty when the report could not be built
    VerificationReport report;
};

struct SpanCell {
    int n = 0;
    int members = 0;    // rows contributing an a-expression
    long long rank = 0; // rank of their coefficient matrix
    long long target = 0;
};

struct CorpusSummary {
    std::vector<CorpusRow> rows;
    std::vector<SpanCell> span;
};

/* One report per entry with per-row error isolation, then the span table:
 * for each poset rank n the a-expression coefficient vectors are stacked
 * into a matrix and its rank is compared with the Fibonacci target
 * F(n+2).  Rows run in parallel under exec; each row is built serially. */
CorpusSummary corpusSummary(const std::vector<CorpusEntry>& entries,
                            const std::set<std::string>& checks, const VerifyOptions& opt,
                            Exec exec = defaultExec());

std::string summaryText(const CorpusSummary& s);
std::string summaryJson(const CorpusSummary& s);

} // namespace cdx

#endif
