#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "cdindex/constructions.hpp"
#include "cdindex/elim.hpp"
#include "cdindex/flags.hpp"
#include "cdindex/homology.hpp"
#include "cdindex/simplicial.hpp"
#include "cdindex/verify.hpp"

using namespace cdx;

namespace {

template <class F> double timeIt(F&& f, Exec e) {
    auto t0 = std::chrono::steady_clock::now();
    f(e);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

/* Dense matrix with small entries; the rank kernels see boundary and
 * restriction blocks of exactly this flavor. */
IntMat randomMat(int rows, int cols, std::uint64_t seed) {
    IntMat m(rows, cols);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(-4, 4);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = pick(rng);
    return m;
}

template <class F> void row(const char* name, F&& f) {
    const double ts = timeIt(f, Exec::serial);
    const double tp = timeIt(f, Exec::parallel);
    std::printf("%-28s %10.3fs %10.3fs %8.2fx\n", name, ts, tp, tp > 0 ? ts / tp : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    int scale = 1;
    if (argc > 1) scale = std::atoi(argv[1]);
    if (scale < 1 || argc > 2) {
        std::fprintf(stderr, "usage: %s [scale >= 1]\n", argv[0]);
        return 2;
    }

    std::printf("threads available: %d\n", hardwareThreads());
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    const int n = 160 * scale;
    const IntMat m = randomMat(n, n + 16, 7);
    std::size_t r1 = 0, r2 = 0;
    row("rankFp 32003", [&](Exec e) { r1 = rankFp(m, 32003, e); });
    row("rankQ (fraction-free)", [&](Exec e) { r2 = rankQ(m, e); });
    if (r1 != r2) {
        std::fprintf(stderr, "rank mismatch: fp %zu vs q %zu\n", r1, r2);
        return 1;
    }

    const GradedPoset bc = barycentric(hypercube(3));
    FlagVector fSerial, fParallel;
    row("flagF bary(cube)", [&](Exec e) {
        FlagVector f = flagF(bc, e);
        (e == Exec::serial ? fSerial : fParallel) = f;
    });
    if (fSerial.e != fParallel.e) {
        std::fprintf(stderr, "flagF serial and parallel disagree\n");
        return 1;
    }

    const SimplicialComplex oc = orderComplex(bc);
    std::size_t faces1 = 0, faces2 = 0;
    row("link scan bary(cube)", [&](Exec e) {
        auto scan = linkHomologyScan(oc, FieldSpec::Q(), e);
        (e == Exec::serial ? faces1 : faces2) = scan.size();
    });
    if (faces1 != faces2) {
        std::fprintf(stderr, "link scan serial and parallel disagree\n");
        return 1;
    }

    const auto entries = builtinCorpus();
    std::string s1, s2;
    row("corpus artifacts", [&](Exec e) {
        CorpusSummary s = corpusSummary(entries, {}, VerifyOptions{}, e);
        (e == Exec::serial ? s1 : s2) = summaryJson(s);
    });
    if (s1 != s2) {
        std::fprintf(stderr, "corpus summaries differ between paths\n");
        return 1;
    }

    std::printf("all kernels agree across paths\n");
    return 0;
}
