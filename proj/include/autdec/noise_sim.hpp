#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "autdec/bp.hpp"
#include "autdec/codes.hpp"
#include "autdec/dem_io.hpp"
#include "autdec/ensemble.hpp"
#include "autdec/gf2.hpp"

namespace autdec {

/// Decoder selection string: "bp", "bp+osd0", "bp+osd-<order>", "autbp-<k>"
/// or "autbposd0-<k>". The aut* forms run an ensemble of k automorphism
/// members; the others are single-member.
struct DecoderSpec {
    InnerDecoder inner;
    std::size_t ensemble = 1;
};

DecoderSpec parse_decoder_spec(const std::string& text);
std::string to_string(const DecoderSpec& spec);

struct DepolarizingDraw {
    BinaryVector e_x;
    BinaryVector e_z;
};

/// Each qubit independently gets X, Y or Z with probability p/3 each; Y sets
/// both components.
DepolarizingDraw sample_depolarizing(std::size_t n, double p, std::mt19937_64& rng);

/// 95% score interval by default; clamped to [0, 1]. shots must be positive.
std::pair<double, double> wilson_interval(std::size_t failures, std::size_t shots,
                                          double z = 1.96);

struct SimSummary {
    std::string code;
    std::string decoder;
    std::size_t ensemble = 1;
    double p = 0.0;
    std::size_t shots = 0;
    std::size_t failures = 0;
    double p_logical = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
    std::size_t max_iters = 0;
    std::uint64_t seed = 0;
};

struct SimOptions {
    BpConfig bp_cfg;
    std::size_t workers = 1;
    std::uint64_t ensemble_seed = 1;
    std::vector<Permutation> include_auts;  // forced ensemble members after the identity
    std::optional<MetricKind> metric;       // default: min-weight (capacity), likelihood (dem)
    std::string label;                      // code column for dem runs
};

/// Identity first, then the forced members, then automorphisms sampled from
/// the joint Tanner graph of hx and hz, deduplicated and truncated to k.
std::vector<Permutation> assemble_code_automorphisms(const CssCode& code, std::size_t k,
                                                     std::uint64_t seed,
                                                     const std::vector<Permutation>& include = {});

/// Same, sampling from the Tanner graph of a single check matrix.
std::vector<Permutation> assemble_matrix_automorphisms(const BinaryMatrix& h, std::size_t k,
                                                       std::uint64_t seed,
                                                       const std::vector<Permutation>& include = {});

/// Depolarizing channel at rate p: Z components are decoded against hx and X
/// components against hz, both with uniform priors 2p/3. A shot fails when a
/// residual flips any logical, or when a non-convergent fallback output does
/// not even reproduce the syndrome. Shot RNG is derived from (seed, shot), so
/// results do not depend on the worker count.
SimSummary run_capacity_experiment(const CssCode& code, const std::string& decoder_spec,
                                   double p, std::size_t shots, std::uint64_t seed,
                                   const SimOptions& opts = {});

/// Faults fire independently with their own priors; failure when the residual
/// flips any observable (or an invalid non-convergent output).
SimSummary run_dem_experiment(const DetectorErrorModel& dem, const std::string& decoder_spec,
                              std::size_t shots, std::uint64_t seed,
                              const SimOptions& opts = {});

std::string csv_header();
std::string csv_row(const SimSummary& s);

}  // namespace autdec
