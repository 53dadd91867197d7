#include <random>

#include "doctest.h"

#include "cdindex/elim.hpp"

using namespace cdx;

namespace {

IntMat randomMat(int rows, int cols, std::uint64_t seed, int lo = -4, int hi = 4) {
    IntMat m(rows, cols);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(lo, hi);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = pick(rng);
    return m;
}

} // namespace

TEST_CASE("rank over Q on fixed matrices") {
    IntMat id(4, 4);
    for (int i = 0; i < 4; ++i) id.at(i, i) = 1;
    CHECK(rankQ(id) == 4);

    CHECK(rankQ(IntMat(3, 5)) == 0);

    IntMat dep(3, 3);
    // row2 = row0 + row1
    Int rows[3][3] = {{1, 2, 3}, {4, 5, 6}, {5, 7, 9}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dep.at(i, j) = rows[i][j];
    CHECK(rankQ(dep) == 2);
    CHECK(rankFp(dep, 32003) == 2);
    CHECK(rankField(dep, FieldSpec::Q()) == 2);
    CHECK(rankField(dep, FieldSpec::Fp(7)) == 2);
}

TEST_CASE("rank kernels agree with each other and across execution paths") {
    for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
        IntMat m = randomMat(23, 31, seed);
        std::size_t rqs = rankQ(m, Exec::serial);
        std::size_t rqp = rankQ(m, Exec::parallel);
        std::size_t rfs = rankFp(m, 32003, Exec::serial);
        std::size_t rfp = rankFp(m, 32003, Exec::parallel);
        CHECK(rqs == rqp);
        CHECK(rfs == rfp);
        CHECK(rqs == rfs);
    }
}

TEST_CASE("rank mod p can drop below the rational rank") {
    IntMat m(2, 2);
    m.at(0, 0) = 1;
    m.at(1, 1) = 7;
    CHECK(rankQ(m) == 2);
    CHECK(rankFp(m, 7) == 1);
}

TEST_CASE("fraction-free elimination survives the int64 fast path overflowing") {
    // Entries near 2^20 make Bareiss pivots overflow 64 bits within a few
    // elimination steps, forcing the arbitrary-precision promotion.
    IntMat m = randomMat(9, 9, 99, 1 << 19, 1 << 20);
    std::size_t rq = rankQ(m);
    CHECK(rq == rankFp(m, 32003));
    CHECK(rq == 9);
}

TEST_CASE("incremental echelon matches the batch kernels") {
    IntMat m = randomMat(18, 25, 5);
    const std::uint32_t p = 32003;

    FpEchelon ech(25, p);
    std::vector<FpEchelon::SparseRow> rows;
    for (int i = 0; i < m.rows; ++i) {
        FpEchelon::SparseRow row;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) row.emplace_back(j, m.at(i, j));
        rows.push_back(row);
    }
    for (const auto& row : rows) ech.addRow(row);
    CHECK(ech.rank() == rankFp(m, p));
    CHECK(ech.standardCols().size() == 25 - ech.rank());

    FpEchelon par(25, p);
    par.addRows(rows, Exec::parallel);
    CHECK(par.rank() == ech.rank());
    for (int j = 0; j < 25; ++j) CHECK(par.isPivot(j) == ech.isPivot(j));

    // A combination of inserted rows reduces to zero.
    std::vector<std::uint64_t> buf(25, 0);
    for (int j = 0; j < m.cols; ++j)
        buf[std::size_t(j)] = fp::add(fp::fromInt(m.at(0, j), p), fp::fromInt(m.at(1, j), p), p);
    ech.reduceInPlace(buf);
    for (std::uint64_t v : buf) CHECK(v == 0);
}

TEST_CASE("rational solve and kernels") {
    QMat a = {{1, 2}, {3, 4}};
    QSolve s = solveQ(a, {5, 11});
    CHECK(s.consistent);
    CHECK(s.unique);
    CHECK(s.x[0] == 1);
    CHECK(s.x[1] == 2);

    QMat bad = {{1, 1}, {1, 1}};
    CHECK_FALSE(solveQ(bad, {0, 1}).consistent);

    QMat line = {{1, 1, 1}};
    std::vector<QVec> ker = kernelQ(line);
    REQUIRE(ker.size() == 2);
    for (const QVec& k : ker) CHECK(k[0] + k[1] + k[2] == 0);

    IntMat li(1, 3);
    li.at(0, 0) = li.at(0, 1) = li.at(0, 2) = 1;
    auto kp = kernelFp(li, 7);
    REQUIRE(kp.size() == 2);
    for (const auto& k : kp) CHECK((k[0] + k[1] + k[2]) % 7 == 0);

    QRref r = qRref(QMat{{1, 2}, {2, 4}});
    CHECK(r.rank == 1);
    REQUIRE(r.pivotCols.size() == 1);
    CHECK(r.pivotCols[0] == 0);
}
