#include "autdec/osd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace autdec {

namespace {

double support_llr_sum(const BinaryVector& c, const std::vector<double>& prior_llrs) {
    double total = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c.get(j)) total += prior_llrs[j];
    }
    return total;
}

}  // namespace

BinaryVector osd_decode(const BinaryMatrix& h, const std::vector<double>& posterior_llrs,
                        const Priors& priors, const BinaryVector& s, const OsdConfig& cfg) {
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();
    if (m == 0 || n == 0) {
        throw std::invalid_argument("osd_decode: check matrix must be non-empty");
    }
    if (posterior_llrs.size() != n || priors.llrs.size() != n) {
        throw std::invalid_argument("osd_decode: llr length does not match column count");
    }
    if (s.size() != m) {
        throw std::invalid_argument("osd_decode: syndrome length does not match row count");
    }

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::fabs(posterior_llrs[a]) < std::fabs(posterior_llrs[b]);
    });
    const Permutation pi(order);
    const BinaryMatrix hp = permute_columns(h, pi);
    const RrefResult rr = rref(hp);
    const std::size_t r = rr.pivots.size();

    BinaryVector ys = mul(rr.transform, s);
    for (std::size_t i = r; i < m; ++i) {
        if (ys.get(i)) {
            throw std::invalid_argument("osd_decode: syndrome outside the column space of H");
        }
    }

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_pos;  // ascending |llr|, least reliable first
    free_pos.reserve(n - r);
    for (std::size_t t = 0; t < n; ++t) {
        if (!is_pivot[t]) free_pos.push_back(t);
    }

    const BinaryMatrix hp_cols = hp.transpose();
    BinaryVector base_residual = s;
    BinaryVector base_free(n);  // indexed by permuted position, pivots unused
    for (std::size_t f : free_pos) {
        if (posterior_llrs[order[f]] <= 0.0) {
            base_free.set(f, true);
            base_residual ^= hp_cols.row(f);
        }
    }

    const std::size_t sweep1 = std::min(cfg.order, free_pos.size());
    const std::size_t sweep2 = std::min((cfg.order + 1) / 2, free_pos.size());
    std::vector<std::vector<std::size_t>> flips;
    flips.push_back({});
    for (std::size_t a = 0; a < sweep1; ++a) flips.push_back({free_pos[a]});
    for (std::size_t a = 0; a < sweep2; ++a) {
        for (std::size_t b = a + 1; b < sweep2; ++b) {
            flips.push_back({free_pos[a], free_pos[b]});
        }
    }

    BinaryVector best(n);
    double best_metric = 0.0;
    bool have_best = false;
    for (const std::vector<std::size_t>& pattern : flips) {
        BinaryVector residual = base_residual;
        BinaryVector free_vals = base_free;
        for (std::size_t f : pattern) {
            free_vals.flip(f);
            residual ^= hp_cols.row(f);
        }
        const BinaryVector y = mul(rr.transform, residual);
        BinaryVector candidate(n);
        for (std::size_t t = 0; t < r; ++t) {
            if (y.get(t)) candidate.set(order[rr.pivots[t]], true);
        }
        for (std::size_t f : free_pos) {
            if (free_vals.get(f)) candidate.set(order[f], true);
        }
        const double metric = support_llr_sum(candidate, priors.llrs);
        if (!have_best || metric < best_metric) {
            best = candidate;
            best_metric = metric;
            have_best = true;
        }
    }

    if (mul(h, best) != s) {
        throw std::logic_error("osd_decode: internal solve failed to match the syndrome");
    }
    return best;
}

}  // namespace autdec
