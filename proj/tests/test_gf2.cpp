#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "autdec/gf2.hpp"

using namespace autdec;

namespace {

using IntMat = std::vector<std::vector<int>>;

// Plain integer-arithmetic row reduction, kept deliberately naive and separate
// from the library implementation so the two can check each other.
struct OracleResult {
    IntMat reduced;
    std::vector<int> pivots;
};

OracleResult oracle_rref(IntMat a) {
    OracleResult out;
    if (a.empty()) return out;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t sel = lead;
        while (sel < rows && a[sel][col] % 2 == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[lead]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != lead && a[r][col] % 2 == 1)
                for (std::size_t c = 0; c < cols; ++c) a[r][c] = (a[r][c] + a[lead][c]) % 2;
        }
        out.pivots.push_back(int(col));
        ++lead;
    }
    for (auto& row : a)
        for (auto& x : row) x %= 2;
    out.reduced = a;
    return out;
}

BinaryMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
    BinaryMatrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c, true);
    return m;
}

IntMat to_int(const BinaryMatrix& m) {
    IntMat out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
    return out;
}

}  // namespace

TEST_SUITE("gf2") {

TEST_CASE("vector basics") {
    BinaryVector v(130);
    CHECK(v.size() == 130);
    CHECK(v.is_zero());
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    CHECK(v.popcount() == 3);
    v.flip(64);
    CHECK(v.popcount() == 2);
    CHECK(v.get(0));
    CHECK_FALSE(v.get(64));

    auto w = BinaryVector::indicator(130, {0, 5});
    auto x = v ^ w;
    CHECK(x.popcount() == 2);
    CHECK(x.get(5));
    CHECK(x.get(129));
    CHECK_FALSE(x.get(0));
}

TEST_CASE("from_bits and to_string") {
    auto v = BinaryVector::from_bits({1, 0, 1, 1});
    CHECK(v.to_string() == "1011");
    CHECK(v.popcount() == 3);
}

TEST_CASE("mismatched xor throws") {
    BinaryVector a(4), b(5);
    CHECK_THROWS_AS(a ^= b, std::invalid_argument);
}

TEST_CASE("matrix construction and access") {
    auto m = BinaryMatrix::from_rows({{1, 0, 1}, {0, 1, 1}});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.get(0, 2));
    CHECK_FALSE(m.get(1, 0));
    CHECK(m.row(1).to_string() == "011");
    CHECK(m.column(2).to_string() == "11");
    CHECK(m.row_popcount(0) == 2);
    CHECK(m.transpose().get(2, 0));
    CHECK(m.transpose().transpose() == m);
}

TEST_CASE("stacking") {
    auto a = BinaryMatrix::from_rows({{1, 0}, {0, 1}});
    auto b = BinaryMatrix::from_rows({{1, 1}});
    auto v = a.vstack(b);
    CHECK(v.rows() == 3);
    CHECK(v.row(2).to_string() == "11");
    auto h = a.hstack(a);
    CHECK(h.cols() == 4);
    CHECK(h.row(0).to_string() == "1010");
    CHECK_THROWS_AS(a.vstack(h), std::invalid_argument);
}

TEST_CASE("rref on a dependent pair of rows") {
    auto m = BinaryMatrix::from_rows({{1, 1}, {1, 1}});
    auto rr = rref(m);
    CHECK(rr.reduced == BinaryMatrix::from_rows({{1, 1}, {0, 0}}));
    CHECK(rr.pivots == std::vector<std::size_t>{0});
    CHECK(rr.rank() == 1);
    CHECK(mul(rr.transform, m) == rr.reduced);
}

TEST_CASE("rref of identity is identity") {
    auto id = BinaryMatrix::identity(7);
    auto rr = rref(id);
    CHECK(rr.reduced == id);
    CHECK(rr.transform == id);
    CHECK(rr.rank() == 7);
}

TEST_CASE("rref matches oracle on random matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::size_t> dim(1, 64);
    for (int trial = 0; trial < 300; ++trial) {
        auto m = random_matrix(rng, dim(rng), dim(rng), 0.3);
        auto rr = rref(m);
        auto oracle = oracle_rref(to_int(m));

        REQUIRE(to_int(rr.reduced) == oracle.reduced);
        std::vector<int> pivots_int(rr.pivots.begin(), rr.pivots.end());
        REQUIRE(pivots_int == oracle.pivots);

        // transform is the row-operation record: invertible, maps input to reduced
        REQUIRE(mul(rr.transform, m) == rr.reduced);
        REQUIRE(rank(rr.transform) == m.rows());
    }
}

TEST_CASE("rank equals rank of transpose") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = random_matrix(rng, 1 + trial % 40, 1 + (trial * 7) % 50, 0.4);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("kernel basis example") {
    auto m = BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    auto k = kernel_basis(m);
    REQUIRE(k.rows() == 1);
    CHECK(k.row(0).to_string() == "111");
}

TEST_CASE("kernel of identity is empty") {
    auto k = kernel_basis(BinaryMatrix::identity(5));
    CHECK(k.rows() == 0);
    CHECK(k.cols() == 5);
}

TEST_CASE("kernel basis properties on random matrices") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<std::size_t> dim(1, 48);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(rng, dim(rng), dim(rng), 0.35);
        auto k = kernel_basis(m);
        REQUIRE(k.rows() == m.cols() - rank(m));
        if (k.rows() > 0) {
            REQUIRE(mul(m, k.transpose()).is_zero());
            REQUIRE(rank(k) == k.rows());
        }
    }
}

TEST_CASE("matrix multiplication against naive oracle") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 40);
        std::size_t p = dim(rng), q = dim(rng), r = dim(rng);
        auto a = random_matrix(rng, p, q);
        auto b = random_matrix(rng, q, r);
        auto c = mul(a, b);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                int acc = 0;
                for (std::size_t k = 0; k < q; ++k) acc ^= (a.get(i, k) && b.get(k, j)) ? 1 : 0;
                REQUIRE(c.get(i, j) == (acc == 1));
            }
        // matrix-vector agrees with matrix-matrix on single columns
        auto v = random_matrix(rng, q, 1);
        auto mv = mul(a, v.column(0));
        REQUIRE(mv == mul(a, v).column(0));
    }
}

TEST_CASE("permutation validation and composition") {
    std::vector<std::uint32_t> repeated{0, 0, 1};
    std::vector<std::uint32_t> out_of_range{0, 3};
    CHECK_THROWS_AS((void)Permutation(repeated), std::invalid_argument);
    CHECK_THROWS_AS((void)Permutation(out_of_range), std::invalid_argument);

    auto a = Permutation::from_cycles(5, {{0, 1, 2}});
    auto b = Permutation::from_cycles(5, {{3, 4}});
    CHECK((a * b).image == std::vector<std::uint32_t>{1, 2, 0, 4, 3});
    CHECK((a * a.inverse()).is_identity());
    CHECK(Permutation::identity(5).is_identity());

    // (a*b)(j) = a(b(j))
    auto c = Permutation::from_cycles(4, {{0, 1}});
    auto d = Permutation::from_cycles(4, {{1, 2}});
    CHECK((c * d).image == std::vector<std::uint32_t>{1, 2, 0, 3});
}

TEST_CASE("column permutation pulls from the image") {
    auto m = BinaryMatrix::from_rows({{1, 0, 0}, {0, 1, 0}});
    auto a = Permutation::from_cycles(3, {{0, 1, 2}});  // a(0)=1, a(1)=2, a(2)=0
    auto pm = permute_columns(m, a);
    // out[:, j] = m[:, a(j)]
    CHECK(pm == BinaryMatrix::from_rows({{0, 0, 1}, {1, 0, 0}}));

    std::mt19937 rng(55);
    auto big = random_matrix(rng, 10, 20);
    std::vector<std::uint32_t> img(20);
    for (std::size_t i = 0; i < 20; ++i) img[i] = std::uint32_t(i);
    std::shuffle(img.begin(), img.end(), rng);
    Permutation p(img);
    CHECK(permute_columns(permute_columns(big, p), p.inverse()) == big);

    auto v = big.row(3);
    CHECK(permute(permute(v, p), p.inverse()) == v);
    // permute(v, a*b) applies b's lookup after a's
    auto q = Permutation(img);
    std::shuffle(img.begin(), img.end(), rng);
    Permutation p2(img);
    CHECK(permute(v, p2 * q) == permute(permute(v, p2), q));
}

TEST_CASE("in_rowspace") {
    auto m = BinaryMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}});
    auto rr = rref(m);
    CHECK(in_rowspace(rr, BinaryVector::from_bits({1, 1, 0, 0})));
    CHECK(in_rowspace(rr, BinaryVector::from_bits({1, 1, 1, 1})));
    CHECK(in_rowspace(rr, BinaryVector(4)));
    CHECK_FALSE(in_rowspace(rr, BinaryVector::from_bits({1, 0, 0, 0})));
    CHECK_FALSE(in_rowspace(rr, BinaryVector::from_bits({1, 1, 1, 0})));
}

}
