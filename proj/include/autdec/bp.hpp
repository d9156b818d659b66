#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "autdec/gf2.hpp"

namespace autdec {

/// Per-column error probabilities with the derived log((1-p)/p) ratios.
struct Priors {
    std::vector<double> probabilities;
    std::vector<double> llrs;
};

/// Validates probabilities lie in (0, 0.5] and derives the llrs.
Priors make_priors(std::vector<double> probabilities);
Priors uniform_priors(std::size_t n, double p);

struct BpConfig {
    std::size_t max_iters = 15;
    double scaling = 1.0;  // min-sum scale factor in (0, 1]
};

struct BpResult {
    BinaryVector hard;
    bool converged = false;
    std::vector<double> posterior_llrs;
    std::size_t iterations_used = 0;
};

/// Flooding min-sum decoder for syndrome problems H*e = s. Compile once,
/// decode many times; decode is const and uses only call-local workspaces, so
/// one compiled decoder can serve concurrent callers.
class BpDecoder {
public:
    BpDecoder(const BinaryMatrix& h, Priors priors, BpConfig cfg = {});

    /// Runs until the hard decision reproduces the syndrome or max_iters is
    /// reached. Hard decision: posterior llr <= 0 means bit 1. Messages are
    /// clipped at +/-50. converged is true iff H*hard equals s at exit.
    BpResult decode(const BinaryVector& syndrome) const;

    const BinaryMatrix& matrix() const { return h_; }
    const Priors& priors() const { return priors_; }
    const BpConfig& config() const { return cfg_; }

private:
    BinaryMatrix h_;
    Priors priors_;
    BpConfig cfg_;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint32_t> edge_var_;          // edges grouped by check
    std::vector<std::uint32_t> check_edge_begin_;  // size m_+1
    std::vector<std::vector<std::uint32_t>> var_edges_;
};

}  // namespace autdec
