#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "autdec/bp.hpp"
#include "autdec/codes.hpp"
#include "autdec/gf2.hpp"
#include "autdec/osd.hpp"

using namespace autdec;

namespace {

// Independent reimplementation of the base solve for matrices with at most
// 32 rows: plain uint32 column masks, greedy basis by leading bit, and pivot
// values found by enumerating all 2^rank combinations.
BinaryVector oracle_osd0(const BinaryMatrix& h, const std::vector<double>& posterior_llrs,
                         const BinaryVector& s) {
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();
    REQUIRE(m <= 32);
    std::vector<std::uint32_t> cols(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (h.get(i, j)) cols[j] |= std::uint32_t{1} << i;
        }
    }
    std::uint32_t smask = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (s.get(i)) smask |= std::uint32_t{1} << i;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::fabs(posterior_llrs[a]) < std::fabs(posterior_llrs[b]);
    });

    std::vector<std::uint32_t> basis;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> rest;
    for (std::size_t t = 0; t < n; ++t) {
        std::uint32_t v = cols[order[t]];
        for (std::uint32_t b : basis) v = std::min(v, v ^ b);
        if (v != 0) {
            basis.push_back(v);
            pivots.push_back(order[t]);
        } else {
            rest.push_back(order[t]);
        }
    }

    std::uint32_t residual = smask;
    BinaryVector c(n);
    for (std::size_t j : rest) {
        if (posterior_llrs[j] <= 0.0) {
            c.set(j, true);
            residual ^= cols[j];
        }
    }
    bool solved = false;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pivots.size()); ++pick) {
        std::uint32_t acc = 0;
        for (std::size_t t = 0; t < pivots.size(); ++t) {
            if ((pick >> t) & 1) acc ^= cols[pivots[t]];
        }
        if (acc == residual) {
            for (std::size_t t = 0; t < pivots.size(); ++t) {
                if ((pick >> t) & 1) c.set(pivots[t], true);
            }
            solved = true;
            break;
        }
    }
    REQUIRE(solved);
    return c;
}

double support_metric(const BinaryVector& c, const Priors& priors) {
    double total = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c.get(j)) total += priors.llrs[j];
    }
    return total;
}

}  // namespace

TEST_SUITE("osd") {

TEST_CASE("input validation") {
    BinaryMatrix h = BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    Priors pr = uniform_priors(3, 0.1);
    std::vector<double> post = {1.0, -2.0, 3.0};
    CHECK_THROWS_AS(osd_decode(BinaryMatrix(0, 0), {}, make_priors({}), BinaryVector(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(osd_decode(h, {1.0, 2.0}, pr, BinaryVector(2)), std::invalid_argument);
    CHECK_THROWS_AS(osd_decode(h, post, uniform_priors(2, 0.1), BinaryVector(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(osd_decode(h, post, pr, BinaryVector(3)), std::invalid_argument);
}

TEST_CASE("syndrome outside the column space is rejected") {
    BinaryMatrix h = BinaryMatrix::from_rows({{1, 1, 0}, {1, 1, 0}});
    Priors pr = uniform_priors(3, 0.1);
    std::vector<double> post = {1.0, 2.0, 3.0};
    CHECK_THROWS_WITH_AS(osd_decode(h, post, pr, BinaryVector::from_bits({1, 0})),
                         doctest::Contains("column space"), std::invalid_argument);
    CHECK_NOTHROW(osd_decode(h, post, pr, BinaryVector::from_bits({1, 1})));
}

TEST_CASE("base solve on a chain follows the reliabilities") {
    BinaryMatrix h = BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    Priors pr = uniform_priors(3, 0.1);
    std::vector<double> post = {-1.0, 2.0, 3.0};
    BinaryVector c = osd_decode(h, post, pr, BinaryVector::from_bits({1, 0}));
    CHECK(c == BinaryVector::from_bits({1, 0, 0}));
}

TEST_CASE("equal metrics keep the earlier candidate") {
    BinaryMatrix h = BinaryMatrix::from_rows({{1, 1}});
    std::vector<double> post = {1.0, -1.0};
    BinaryVector s = BinaryVector::from_bits({1});

    BinaryVector uniform = osd_decode(h, post, uniform_priors(2, 0.2), s, OsdConfig{1});
    CHECK(uniform == BinaryVector::from_bits({0, 1}));

    // A cheaper flip on column 0 makes the swept candidate win.
    BinaryVector biased = osd_decode(h, post, make_priors({0.4, 0.1}), s, OsdConfig{1});
    CHECK(biased == BinaryVector::from_bits({1, 0}));
}

TEST_CASE("base solve matches the enumeration oracle on random instances") {
    std::mt19937 rng(777);
    std::bernoulli_distribution fill(0.35);
    std::bernoulli_distribution err(0.15);
    std::uniform_real_distribution<double> llr(-3.0, 3.0);
    std::uniform_real_distribution<double> prob(0.01, 0.3);
    int improved = 0;
    for (int trial = 0; trial < 25; ++trial) {
        BinaryMatrix h(10, 20);
        do {
            for (std::size_t i = 0; i < 10; ++i) {
                for (std::size_t j = 0; j < 20; ++j) h.set(i, j, fill(rng));
            }
        } while (rank(h) != 10);
        std::vector<double> post;
        std::vector<double> probs;
        for (int j = 0; j < 20; ++j) {
            post.push_back(llr(rng));
            probs.push_back(prob(rng));
        }
        Priors pr = make_priors(probs);
        BinaryVector e(20);
        for (std::size_t j = 0; j < 20; ++j) e.set(j, err(rng));
        BinaryVector s = mul(h, e);

        BinaryVector base = osd_decode(h, post, pr, s);
        CHECK(base == oracle_osd0(h, post, s));
        CHECK(mul(h, base) == s);

        BinaryVector swept = osd_decode(h, post, pr, s, OsdConfig{6});
        CHECK(mul(h, swept) == s);
        const double mb = support_metric(base, pr);
        const double ms = support_metric(swept, pr);
        CHECK(ms <= mb);
        if (ms < mb) ++improved;
    }
    CHECK(improved >= 1);
}

TEST_CASE("post-processing a failed bp run yields a valid correction") {
    CssCode code = build_qrm15();
    Priors pr = uniform_priors(code.n, 0.05);
    BpDecoder dec(code.hx, pr, BpConfig{15, 1.0});
    BinaryVector s = BinaryVector::from_bits({1, 1, 1, 1});
    BpResult r = dec.decode(s);
    REQUIRE_FALSE(r.converged);
    BinaryVector c0 = osd_decode(code.hx, r.posterior_llrs, pr, s);
    CHECK(mul(code.hx, c0) == s);
    BinaryVector c10 = osd_decode(code.hx, r.posterior_llrs, pr, s, OsdConfig{10});
    CHECK(mul(code.hx, c10) == s);
    CHECK(support_metric(c10, pr) <= support_metric(c0, pr));
}

TEST_CASE("repeated calls are deterministic") {
    BinaryMatrix h = BinaryMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, 0}});
    Priors pr = make_priors({0.1, 0.2, 0.15, 0.05});
    std::vector<double> post = {0.5, -0.25, 1.5, -2.0};
    BinaryVector s = BinaryVector::from_bits({1, 1});
    BinaryVector a = osd_decode(h, post, pr, s, OsdConfig{2});
    BinaryVector b = osd_decode(h, post, pr, s, OsdConfig{2});
    CHECK(a == b);
}

}
