#include "autdec/bp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace autdec {

namespace {

constexpr double kMessageClip = 50.0;

double clip(double x) {
    if (x > kMessageClip) return kMessageClip;
    if (x < -kMessageClip) return -kMessageClip;
    return x;
}

}  // namespace

Priors make_priors(std::vector<double> probabilities) {
    Priors out;
    out.llrs.reserve(probabilities.size());
    for (double p : probabilities) {
        if (!(p > 0.0) || !(p <= 0.5)) {
            throw std::invalid_argument("make_priors: probabilities must lie in (0, 0.5]");
        }
        out.llrs.push_back(std::log((1.0 - p) / p));
    }
    out.probabilities = std::move(probabilities);
    return out;
}

Priors uniform_priors(std::size_t n, double p) {
    return make_priors(std::vector<double>(n, p));
}

BpDecoder::BpDecoder(const BinaryMatrix& h, Priors priors, BpConfig cfg)
    : h_(h), priors_(std::move(priors)), cfg_(cfg), n_(h.cols()), m_(h.rows()) {
    if (m_ == 0 || n_ == 0) {
        throw std::invalid_argument("BpDecoder: check matrix must be non-empty");
    }
    if (priors_.llrs.size() != n_ || priors_.probabilities.size() != n_) {
        throw std::invalid_argument("BpDecoder: priors length does not match column count");
    }
    if (cfg_.max_iters == 0) {
        throw std::invalid_argument("BpDecoder: max_iters must be positive");
    }
    if (!(cfg_.scaling > 0.0) || !(cfg_.scaling <= 1.0)) {
        throw std::invalid_argument("BpDecoder: scaling must lie in (0, 1]");
    }
    var_edges_.resize(n_);
    check_edge_begin_.reserve(m_ + 1);
    check_edge_begin_.push_back(0);
    for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (h_.get(i, j)) {
                var_edges_[j].push_back(static_cast<std::uint32_t>(edge_var_.size()));
                edge_var_.push_back(static_cast<std::uint32_t>(j));
            }
        }
        check_edge_begin_.push_back(static_cast<std::uint32_t>(edge_var_.size()));
    }
}

BpResult BpDecoder::decode(const BinaryVector& syndrome) const {
    if (syndrome.size() != m_) {
        throw std::invalid_argument("BpDecoder::decode: syndrome length does not match row count");
    }
    BpResult result;
    result.hard = BinaryVector(n_);
    result.posterior_llrs = priors_.llrs;
    if (syndrome.is_zero()) {
        result.converged = true;
        return result;
    }

    const std::size_t edges = edge_var_.size();
    std::vector<double> v2c(edges);
    std::vector<double> c2v(edges, 0.0);
    for (std::size_t e = 0; e < edges; ++e) v2c[e] = priors_.llrs[edge_var_[e]];

    for (std::size_t iter = 1; iter <= cfg_.max_iters; ++iter) {
        for (std::size_t i = 0; i < m_; ++i) {
            const std::size_t begin = check_edge_begin_[i];
            const std::size_t end = check_edge_begin_[i + 1];
            bool parity = syndrome.get(i);
            double min1 = std::numeric_limits<double>::infinity();
            double min2 = std::numeric_limits<double>::infinity();
            std::size_t argmin = begin;
            for (std::size_t e = begin; e < end; ++e) {
                const double msg = v2c[e];
                if (msg < 0.0) parity = !parity;
                const double mag = std::fabs(msg);
                if (mag < min1) {
                    min2 = min1;
                    min1 = mag;
                    argmin = e;
                } else if (mag < min2) {
                    min2 = mag;
                }
            }
            for (std::size_t e = begin; e < end; ++e) {
                const double mag = (e == argmin) ? min2 : min1;
                const bool negative = parity != (v2c[e] < 0.0);
                c2v[e] = clip(cfg_.scaling * (negative ? -mag : mag));
            }
        }

        for (std::size_t j = 0; j < n_; ++j) {
            double post = priors_.llrs[j];
            for (std::uint32_t e : var_edges_[j]) post += c2v[e];
            result.posterior_llrs[j] = post;
            result.hard.set(j, post <= 0.0);
        }

        bool matched = true;
        for (std::size_t i = 0; i < m_ && matched; ++i) {
            bool parity = false;
            for (std::size_t e = check_edge_begin_[i]; e < check_edge_begin_[i + 1]; ++e) {
                parity ^= result.hard.get(edge_var_[e]);
            }
            matched = parity == syndrome.get(i);
        }
        result.iterations_used = iter;
        if (matched) {
            result.converged = true;
            return result;
        }

        for (std::size_t j = 0; j < n_; ++j) {
            for (std::uint32_t e : var_edges_[j]) {
                v2c[e] = clip(result.posterior_llrs[j] - c2v[e]);
            }
        }
    }
    return result;
}

}  // namespace autdec
