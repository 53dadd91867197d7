#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cdindex/constructions.hpp"
#include "cdindex/error.hpp"
#include "cdindex/verify.hpp"

namespace {

using namespace cdx;

FieldSpec parseFieldName(const std::string& s) {
    if (s == "q") return FieldSpec::Q();
    if (s.rfind("fp:", 0) == 0) {
        const std::string digits = s.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw CdxError("BadParameter", "--field fp:<p> needs a decimal prime, got '" + s + "'");
        unsigned long v = 0;
        try {
            v = std::stoul(digits);
        } catch (const std::out_of_range&) {
            throw CdxError("BadParameter", "--field prime out of range in '" + s + "'");
        }
        try {
            return FieldSpec::Fp(std::uint32_t(v));
        } catch (const std::invalid_argument& e) {
            throw CdxError("BadParameter", e.what());
        }
    }
    throw CdxError("BadParameter", "--field expects q or fp:<p>, got '" + s + "'");
}

std::set<std::string> parseCheckList(const std::string& s) {
    std::set<std::string> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.insert(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    return out;
}

std::vector<int> parseAlphaList(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty() || cur.find_first_not_of("0123456789") != std::string::npos)
            throw CdxError("BadParameter", "--alphas expects nonnegative integers, got '" + s + "'");
        out.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(ch)))
            cur += ch;
    }
    flush();
    return out;
}

std::string fileStem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

/* Recipe strings double as report ids and file names; ':' and ',' become '_'. */
std::string recipeName(const std::string& recipe) {
    std::string out = recipe;
    for (char& ch : out)
        if (ch == ':' || ch == ',') ch = '_';
    return out;
}

/* Re-throw domain errors with the file path prepended to the message. */
std::string stripCode(const CdxError& e) {
    std::string msg = e.what();
    const std::string pre = e.code() + ": ";
    if (msg.rfind(pre, 0) == 0) msg = msg.substr(pre.size());
    return msg;
}

GradedPoset loadNamed(const std::string& path) {
    try {
        return loadPoset(path);
    } catch (const CdxError& e) {
        throw CdxError(e.code(), path + ": " + stripCode(e));
    }
}

struct InputArgs {
    std::string file;
    std::string recipe;
};

GradedPoset resolveInput(const InputArgs& in, std::string& name) {
    if (!in.recipe.empty() && !in.file.empty())
        throw CdxError("BadParameter", "give a poset file or --recipe, not both");
    if (!in.recipe.empty()) {
        name = recipeName(in.recipe);
        return standardPoset(in.recipe);
    }
    if (in.file.empty()) throw CdxError("BadParameter", "need a poset file or --recipe");
    name = fileStem(in.file);
    return loadNamed(in.file);
}

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(outPath);
    if (!out) throw CdxError("IOError", "cannot write '" + outPath + "'");
    out << text;
}

int failures(const VerificationReport& r) {
    int bad = 0;
    for (const auto& c : r.checks)
        if (c.status == "fail") ++bad;
    return bad;
}

struct ReportArgs {
    InputArgs in;
    std::string checks = "all";
    std::string field = "q";
    std::string report = "text";
    std::string out;
    std::uint64_t seed = 1;
    int idealCap = 2;
    bool exploratory = false;
};

int runCompute(const ReportArgs& a) {
    std::string name;
    GradedPoset p = resolveInput(a.in, name);
    VerificationReport r = computeReport(p, name);
    emit(a.report == "json" ? reportJson(r) : reportText(r), a.out);
    return 0;
}

int runVerify(const ReportArgs& a) {
    std::string name;
    GradedPoset p = resolveInput(a.in, name);
    VerifyOptions opt;
    opt.field = parseFieldName(a.field);
    opt.seed = a.seed;
    opt.idealCap = a.idealCap;
    opt.exploratory = a.exploratory;
    VerificationReport r = verifyReport(p, name, parseCheckList(a.checks), opt);
    emit(a.report == "json" ? reportJson(r) : reportText(r), a.out);
    return failures(r) ? 1 : 0;
}

struct GenArgs {
    std::string alphas;
    std::string polytope;
    std::string bary;
    std::string unzipFile;
    std::string sigma;
    std::string tau;
    std::string out;
};

int runGen(const GenArgs& a) {
    const int given = int(!a.alphas.empty()) + int(!a.polytope.empty()) + int(!a.bary.empty()) +
                      int(!a.unzipFile.empty());
    if (given != 1)
        throw CdxError("BadParameter", "pick exactly one of --alphas, --polytope, --bary, --unzip");

    GradedPoset p;
    std::string outPath = a.out;
    std::string note;
    if (!a.alphas.empty()) {
        GeneratorResult g = gorensteinGenerator(parseAlphaList(a.alphas));
        p = g.p;
        note = "distinguished element " + g.distinguished;
        if (outPath.empty()) outPath = "gen_" + recipeName(a.alphas) + ".poset";
    } else if (!a.polytope.empty()) {
        p = standardPoset(a.polytope);
        if (outPath.empty()) outPath = recipeName(a.polytope) + ".poset";
    } else if (!a.bary.empty()) {
        p = barycentric(loadNamed(a.bary));
        if (outPath.empty()) outPath = "bary_" + fileStem(a.bary) + ".poset";
    } else {
        if (a.sigma.empty() || a.tau.empty())
            throw CdxError("BadParameter", "--unzip needs --sigma and --tau");
        p = unzip(loadNamed(a.unzipFile), a.sigma, a.tau);
        if (outPath.empty())
            outPath = fileStem(a.unzipFile) + "_unzip_" + a.sigma + "_" + a.tau + ".poset";
    }

    std::ofstream out(outPath);
    if (!out) throw CdxError("IOError", "cannot write '" + outPath + "'");
    out << printPoset(p);
    std::cout << "wrote " << outPath << " (rank " << p.n << ", " << p.size() << " elements";
    if (!note.empty()) std::cout << ", " << note;
    std::cout << ")\n";
    return 0;
}

struct CorpusArgs {
    std::string dir;
    std::string checks;
    std::string field = "q";
    std::string report = "text";
    std::string out;
    std::uint64_t seed = 1;
    int idealCap = 2;
    bool exploratory = false;
};

int runCorpus(const CorpusArgs& a) {
    std::vector<CorpusEntry> entries;
    /* Files that fail to parse still get a summary row; their slot in the
     * name-sorted order is remembered so rows stay deterministic. */
    std::vector<std::pair<std::size_t, CorpusRow>> broken;
    if (a.dir.empty()) {
        entries = builtinCorpus();
    } else {
        std::vector<std::string> files;
        for (const auto& de : std::filesystem::directory_iterator(a.dir))
            if (de.is_regular_file() && de.path().extension() == ".poset")
                files.push_back(de.path().string());
        std::sort(files.begin(), files.end());
        for (std::size_t i = 0; i < files.size(); ++i) {
            try {
                entries.push_back({fileStem(files[i]), loadNamed(files[i]), {}});
            } catch (const CdxError& e) {
                CorpusRow row;
                row.name = fileStem(files[i]);
                row.error = e.what();
                broken.emplace_back(i, row);
            }
        }
    }

    VerifyOptions opt;
    opt.field = parseFieldName(a.field);
    opt.seed = a.seed;
    opt.idealCap = a.idealCap;
    opt.exploratory = a.exploratory;
    CorpusSummary s = corpusSummary(entries, parseCheckList(a.checks), opt);
    for (const auto& [pos, row] : broken)
        s.rows.insert(s.rows.begin() + std::min(pos, s.rows.size()), row);

    emit(a.report == "json" ? summaryJson(s) : summaryText(s), a.out);

    int bad = 0;
    for (const auto& row : s.rows) {
        if (!row.error.empty()) ++bad;
        bad += failures(row.report);
    }
    return bad ? 1 : 0;
}

void addInputOptions(CLI::App* cmd, InputArgs& in) {
    cmd->add_option("input", in.file, "poset file")->check(CLI::ExistingFile);
    cmd->add_option("-r,--recipe", in.recipe,
                    "build the input from a recipe instead of a file: szero | point | flap | "
                    "ngon:<m> | simplex:<d> | cross:<d> | cube[:<d>] | boolean:<d> | star:<k> | "
                    "cap:<recipe> | bary:<recipe>");
}

void addReportOptions(CLI::App* cmd, std::string& report, std::string& out) {
    cmd->add_option("--report", report, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("-o,--out", out, "write the report to this path instead of stdout");
}

void addCheckOptions(CLI::App* cmd, ReportArgs& a) {
    cmd->add_option("--checks", a.checks,
                    "comma-separated check names, or all (exploratory checks stay out of all "
                    "unless --exploratory is set)");
    cmd->add_option("--field", a.field, "coefficient field for rank computations: q or fp:<p>");
    cmd->add_option("--seed", a.seed, "base seed for the lefschetz form draws");
    cmd->add_option("--ideal-cap", a.idealCap,
                    "corollary74: delete at most this many maximal elements per ideal");
    cmd->add_flag("--exploratory", a.exploratory, "admit exploratory checks under --checks all");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag vectors, ab/cd-indices and certified structure checks for finite graded posets"};
    app.require_subcommand(1);

    ReportArgs computeArgs;
    CLI::App* cmdCompute = app.add_subcommand(
        "compute", "compute the artifacts: flag vectors, cd-index, decomposition, alpha table");
    addInputOptions(cmdCompute, computeArgs.in);
    addReportOptions(cmdCompute, computeArgs.report, computeArgs.out);

    ReportArgs verifyArgs;
    CLI::App* cmdVerify =
        app.add_subcommand("verify", "compute the artifacts and run the requested checks");
    addInputOptions(cmdVerify, verifyArgs.in);
    addCheckOptions(cmdVerify, verifyArgs);
    addReportOptions(cmdVerify, verifyArgs.report, verifyArgs.out);

    GenArgs genArgs;
    CLI::App* cmdGen = app.add_subcommand("gen", "write a fixture poset file");
    CLI::Option* optAlphas = cmdGen->add_option(
        "--alphas", genArgs.alphas, "extremal generator parameters, e.g. 1,2,1");
    CLI::Option* optPolytope =
        cmdGen->add_option("--polytope", genArgs.polytope, "standard recipe, e.g. ngon:5 or cube");
    CLI::Option* optBary = cmdGen->add_option("--bary", genArgs.bary,
                                              "barycentric subdivision of this poset file");
    optBary->check(CLI::ExistingFile);
    CLI::Option* optUnzip = cmdGen->add_option(
        "--unzip", genArgs.unzipFile, "unzip one cover of this poset file (needs --sigma, --tau)");
    optUnzip->check(CLI::ExistingFile);
    cmdGen->add_option("--sigma", genArgs.sigma, "upper element of the cover to unzip");
    cmdGen->add_option("--tau", genArgs.tau, "lower element of the cover to unzip");
    cmdGen->add_option("-o,--out", genArgs.out, "output path (default: derived from the recipe)");
    optAlphas->excludes(optPolytope)->excludes(optBary)->excludes(optUnzip);
    optPolytope->excludes(optBary)->excludes(optUnzip);
    optBary->excludes(optUnzip);

    CorpusArgs corpusArgs;
    CLI::App* cmdCorpus = app.add_subcommand(
        "corpus",
        "batch reports plus the a-expression span table (built-in corpus when no directory is given)");
    cmdCorpus->add_option("dir", corpusArgs.dir, "directory of .poset files")
        ->check(CLI::ExistingDirectory);
    cmdCorpus->add_option("--checks", corpusArgs.checks,
                          "comma-separated check names, or all (default: artifacts only)");
    cmdCorpus->add_option("--field", corpusArgs.field,
                          "coefficient field for rank computations: q or fp:<p>");
    cmdCorpus->add_option("--seed", corpusArgs.seed, "base seed for the lefschetz form draws");
    cmdCorpus->add_option("--ideal-cap", corpusArgs.idealCap,
                          "corollary74: delete at most this many maximal elements per ideal");
    cmdCorpus->add_flag("--exploratory", corpusArgs.exploratory,
                        "admit exploratory checks under --checks all");
    addReportOptions(cmdCorpus, corpusArgs.report, corpusArgs.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // one exit code for every usage error
    }

    try {
        if (*cmdCompute) return runCompute(computeArgs);
        if (*cmdVerify) return runVerify(verifyArgs);
        if (*cmdGen) return runGen(genArgs);
        return runCorpus(corpusArgs);
    } catch (const std::exception& e) {
        std::cerr << "cdindex: " << e.what() << "\n";
        return 2;
    }
}
