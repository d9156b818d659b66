#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "autdec/bp.hpp"
#include "autdec/codes.hpp"
#include "autdec/gf2.hpp"

using namespace autdec;

namespace {

// Exhaustive per-bit maximization over all error patterns matching the
// syndrome. Scores are sums of prior llrs over the support, so lower is more
// likely. Requires a strict winner for every bit.
std::vector<int> max_marginal_hard(const BinaryMatrix& h, const std::vector<double>& llrs,
                                   const BinaryVector& s) {
    const std::size_t n = h.cols();
    const std::size_t m = h.rows();
    REQUIRE(n <= 20);
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> best0(n, inf);
    std::vector<double> best1(n, inf);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            bool parity = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (h.get(i, j) && ((mask >> j) & 1)) parity = !parity;
            }
            ok = parity == s.get(i);
        }
        if (!ok) continue;
        double score = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if ((mask >> j) & 1) score += llrs[j];
        }
        for (std::size_t j = 0; j < n; ++j) {
            double& slot = ((mask >> j) & 1) ? best1[j] : best0[j];
            if (score < slot) slot = score;
        }
    }
    std::vector<int> hard(n);
    for (std::size_t j = 0; j < n; ++j) {
        REQUIRE(best0[j] != best1[j]);
        hard[j] = best1[j] < best0[j] ? 1 : 0;
    }
    return hard;
}

}  // namespace

TEST_SUITE("bp") {

TEST_CASE("priors validate range and derive llrs") {
    Priors p = make_priors({0.1, 0.5, 0.25});
    CHECK(p.probabilities.size() == 3);
    CHECK(p.llrs[0] == doctest::Approx(std::log(9.0)));
    CHECK(p.llrs[1] == doctest::Approx(0.0));
    CHECK(p.llrs[2] == doctest::Approx(std::log(3.0)));

    CHECK_THROWS_AS(make_priors({0.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_priors({0.6}), std::invalid_argument);
    CHECK_THROWS_AS(make_priors({-0.1}), std::invalid_argument);

    Priors u = uniform_priors(4, 0.2);
    CHECK(u.llrs.size() == 4);
    CHECK(u.llrs[3] == doctest::Approx(std::log(4.0)));
}

TEST_CASE("construction rejects bad inputs") {
    BinaryMatrix h = BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    CHECK_THROWS_AS(BpDecoder(BinaryMatrix(0, 0), uniform_priors(0, 0.1)), std::invalid_argument);
    CHECK_THROWS_AS(BpDecoder(h, uniform_priors(2, 0.1)), std::invalid_argument);
    CHECK_THROWS_AS(BpDecoder(h, uniform_priors(3, 0.1), BpConfig{0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(BpDecoder(h, uniform_priors(3, 0.1), BpConfig{15, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(BpDecoder(h, uniform_priors(3, 0.1), BpConfig{15, 1.5}), std::invalid_argument);

    BpDecoder dec(h, uniform_priors(3, 0.1));
    CHECK_THROWS_AS(dec.decode(BinaryVector(3)), std::invalid_argument);
}

TEST_CASE("zero syndrome converges immediately to the zero vector") {
    BinaryMatrix h = BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    BpDecoder dec(h, uniform_priors(3, 0.1));
    BpResult r = dec.decode(BinaryVector(2));
    CHECK(r.converged);
    CHECK(r.iterations_used == 0);
    CHECK(r.hard.is_zero());
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(r.posterior_llrs[j] == dec.priors().llrs[j]);
    }
}

TEST_CASE("two-check chain recovers the single flipped bit") {
    BinaryMatrix h = BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    BpDecoder dec(h, uniform_priors(3, 0.1));
    BpResult r = dec.decode(BinaryVector::from_bits({1, 0}));
    CHECK(r.converged);
    CHECK(r.hard == BinaryVector::from_bits({1, 0, 0}));
    CHECK(mul(h, r.hard) == BinaryVector::from_bits({1, 0}));
}

TEST_CASE("scaled min-sum still solves the chain") {
    BinaryMatrix h = BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    BpDecoder dec(h, uniform_priors(3, 0.1), BpConfig{15, 0.625});
    BpResult r = dec.decode(BinaryVector::from_bits({1, 0}));
    CHECK(r.converged);
    CHECK(r.hard == BinaryVector::from_bits({1, 0, 0}));
}

TEST_CASE("cycle-free matrices give exact hard decisions") {
    // Both Tanner graphs are trees, where min-sum with enough sweeps settles
    // to the per-bit maximizer found by exhaustive search.
    std::vector<BinaryMatrix> fixtures;
    fixtures.push_back(BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}}));
    fixtures.push_back(BinaryMatrix::from_rows({
        {1, 1, 1, 0, 0, 0, 0},
        {0, 0, 1, 1, 0, 0, 0},
        {0, 0, 0, 1, 1, 1, 0},
        {0, 0, 0, 0, 0, 1, 1},
    }));
    for (const BinaryMatrix& h : fixtures) {
        std::vector<double> probs;
        for (std::size_t j = 0; j < h.cols(); ++j) probs.push_back(0.03 + 0.015 * static_cast<double>(j));
        Priors priors = make_priors(probs);
        BpDecoder dec(h, priors, BpConfig{12, 1.0});
        for (std::size_t smask = 0; smask < (std::size_t{1} << h.rows()); ++smask) {
            BinaryVector s(h.rows());
            for (std::size_t i = 0; i < h.rows(); ++i) s.set(i, (smask >> i) & 1);
            BpResult r = dec.decode(s);
            std::vector<int> expect = max_marginal_hard(h, priors.llrs, s);
            for (std::size_t j = 0; j < h.cols(); ++j) {
                CAPTURE(smask);
                CAPTURE(j);
                CHECK(static_cast<int>(r.hard.get(j)) == expect[j]);
            }
            if (r.converged) CHECK(mul(h, r.hard) == s);
        }
    }
}

TEST_CASE("degree-0 variable keeps its prior") {
    BinaryMatrix h = BinaryMatrix::from_rows({{1, 0}, {1, 0}});
    BpDecoder dec(h, uniform_priors(2, 0.1));
    BpResult r = dec.decode(BinaryVector::from_bits({1, 1}));
    CHECK(r.converged);
    CHECK(r.hard == BinaryVector::from_bits({1, 0}));
    CHECK(r.posterior_llrs[1] == dec.priors().llrs[1]);
}

TEST_CASE("plain decoding fails on the four-one syndrome of the 15-qubit code") {
    CssCode code = build_qrm15();
    BpDecoder dec(code.hx, uniform_priors(code.n, 0.05), BpConfig{15, 1.0});
    BinaryVector s = BinaryVector::from_bits({1, 1, 1, 1});
    BpResult r = dec.decode(s);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations_used == 15);
    BinaryVector all_ones(code.n);
    for (std::size_t j = 0; j < code.n; ++j) all_ones.set(j, true);
    CHECK(r.hard == all_ones);
    // The all-ones vector has zero syndrome, so it cannot explain s at all.
    CHECK(mul(code.hx, r.hard).is_zero());
}

TEST_CASE("decoding is deterministic across calls and instances") {
    CssCode code = build_qrm15();
    BpDecoder a(code.hx, uniform_priors(code.n, 0.05));
    BpDecoder b(code.hx, uniform_priors(code.n, 0.05));
    BinaryVector s = BinaryVector::from_bits({1, 0, 1, 0});
    BpResult r1 = a.decode(s);
    BpResult r2 = a.decode(s);
    BpResult r3 = b.decode(s);
    CHECK(r1.hard == r2.hard);
    CHECK(r1.hard == r3.hard);
    CHECK(r1.iterations_used == r2.iterations_used);
    for (std::size_t j = 0; j < code.n; ++j) {
        CHECK(r1.posterior_llrs[j] == r2.posterior_llrs[j]);
        CHECK(r1.posterior_llrs[j] == r3.posterior_llrs[j]);
    }
}

}
