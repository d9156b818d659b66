#include "autdec/noise_sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <thread>

#include "autdec/tanner_aut.hpp"

namespace autdec {

namespace {

constexpr double kMinPrior = 1e-12;

double clamp_prior(double p) {
    return std::min(std::max(p, kMinPrior), 0.5);
}

std::mt19937_64 shot_rng(std::uint64_t seed, std::uint64_t shot) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(shot), static_cast<std::uint32_t>(shot >> 32)};
    return std::mt19937_64(seq);
}

std::vector<Permutation> assemble_from_generators(GeneratorSet gens, std::size_t columns,
                                                  std::size_t k, std::uint64_t seed,
                                                  const std::vector<Permutation>& include) {
    for (const Permutation& p : include) {
        if (p.image.size() != columns) {
            throw std::invalid_argument("ensemble member has the wrong length");
        }
    }
    return sample_ensemble(gens, k, seed, include);
}

GeneratorSet column_generators(const ColoredGraph& graph, std::size_t columns) {
    GeneratorSet gens;
    gens.provenance = "graph-search";
    for (const Permutation& whole : find_automorphism_generators(graph).generators) {
        gens.generators.push_back(restrict_to_variables(whole, columns));
    }
    return gens;
}

/// True when the shot fails on this side: residual flips a logical, or the
/// decoder gave up and its fallback does not even match the syndrome.
bool side_fails(const EnsembleDecoder& dec, const BinaryMatrix& h, const BinaryMatrix& logicals,
                const BinaryVector& e) {
    const BinaryVector s = mul(h, e);
    DecodeOutcome out = dec.decode(s);
    if (!out.success_flag && mul(h, out.correction) != s) return true;
    BinaryVector residual = e;
    residual ^= out.correction;
    return !mul(logicals, residual).is_zero();
}

std::size_t count_failures(std::size_t shots, std::size_t workers,
                           const std::function<bool(std::size_t)>& shot_fails) {
    const std::size_t threads = std::max<std::size_t>(1, std::min(workers, shots));
    if (threads <= 1) {
        std::size_t failures = 0;
        for (std::size_t shot = 0; shot < shots; ++shot) {
            if (shot_fails(shot)) ++failures;
        }
        return failures;
    }
    std::vector<std::size_t> partial(threads, 0);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            std::size_t local = 0;
            for (std::size_t shot = t; shot < shots; shot += threads) {
                if (shot_fails(shot)) ++local;
            }
            partial[t] = local;
        });
    }
    for (std::thread& th : pool) th.join();
    std::size_t failures = 0;
    for (std::size_t c : partial) failures += c;
    return failures;
}

SimSummary summarize(std::string code, const DecoderSpec& spec, std::size_t members,
                     double p, std::size_t shots, std::size_t failures,
                     const SimOptions& opts, std::uint64_t seed) {
    SimSummary s;
    s.code = std::move(code);
    s.decoder = to_string(spec);
    s.ensemble = members;
    s.p = p;
    s.shots = shots;
    s.failures = failures;
    s.p_logical = shots == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(shots);
    const auto [lo, hi] = wilson_interval(failures, shots);
    s.wilson_lo = lo;
    s.wilson_hi = hi;
    s.max_iters = opts.bp_cfg.max_iters;
    s.seed = seed;
    return s;
}

}  // namespace

DecoderSpec parse_decoder_spec(const std::string& text) {
    auto ensemble_count = [&](const std::string& digits) {
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("bad ensemble size in decoder spec '" + text + "'");
        }
        const std::size_t k = static_cast<std::size_t>(std::stoul(digits));
        if (k == 0) {
            throw std::invalid_argument("ensemble size must be positive in '" + text + "'");
        }
        return k;
    };
    const std::string autbp = "autbp-";
    const std::string autbposd0 = "autbposd0-";
    if (text.rfind(autbposd0, 0) == 0) {
        return {InnerDecoder{InnerKind::bp_osd, 0}, ensemble_count(text.substr(autbposd0.size()))};
    }
    if (text.rfind(autbp, 0) == 0) {
        return {InnerDecoder{InnerKind::bp, 0}, ensemble_count(text.substr(autbp.size()))};
    }
    return {parse_inner_decoder(text), 1};
}

std::string to_string(const DecoderSpec& spec) {
    if (spec.ensemble == 1) return to_string(spec.inner);
    if (spec.inner.kind == InnerKind::bp) return "autbp-" + std::to_string(spec.ensemble);
    return "autbposd0-" + std::to_string(spec.ensemble);
}

DepolarizingDraw sample_depolarizing(std::size_t n, double p, std::mt19937_64& rng) {
    if (!(p >= 0.0) || !(p <= 1.0)) {
        throw std::invalid_argument("sample_depolarizing: p must lie in [0, 1]");
    }
    DepolarizingDraw draw{BinaryVector(n), BinaryVector(n)};
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double u = unit(rng);
        if (u < p / 3.0) {
            draw.e_x.set(j, true);  // X
        } else if (u < 2.0 * p / 3.0) {
            draw.e_x.set(j, true);  // Y
            draw.e_z.set(j, true);
        } else if (u < p) {
            draw.e_z.set(j, true);  // Z
        }
    }
    return draw;
}

std::pair<double, double> wilson_interval(std::size_t failures, std::size_t shots, double z) {
    if (shots == 0) {
        throw std::invalid_argument("wilson_interval: shots must be positive");
    }
    if (failures > shots) {
        throw std::invalid_argument("wilson_interval: failures exceed shots");
    }
    const double n = static_cast<double>(shots);
    const double phat = static_cast<double>(failures) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = (z / denom) * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    double lo = std::max(0.0, center - half);
    double hi = std::min(1.0, center + half);
    if (failures == 0) lo = 0.0;          // the score interval touches the
    if (failures == shots) hi = 1.0;      // boundary exactly in these cases
    return {lo, hi};
}

std::vector<Permutation> assemble_code_automorphisms(const CssCode& code, std::size_t k,
                                                     std::uint64_t seed,
                                                     const std::vector<Permutation>& include) {
    GeneratorSet gens = column_generators(build_joint_tanner(code.hx, code.hz), code.n);
    if (code.name == "qrm15") {
        // The graph group only permutes syndrome bits; the code's full
        // automorphism group comes from invertible 4x4 matrices acting on
        // the column labels and is far larger, so sample from both.
        const BinaryMatrix cycle = BinaryMatrix::from_rows(
            {{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
        const BinaryMatrix transvection = BinaryMatrix::from_rows(
            {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        gens.generators.push_back(qrm_code_automorphism(cycle));
        gens.generators.push_back(qrm_code_automorphism(transvection));
        gens.provenance = "code-constructive";
    }
    return assemble_from_generators(std::move(gens), code.n, k, seed, include);
}

std::vector<Permutation> assemble_matrix_automorphisms(const BinaryMatrix& h, std::size_t k,
                                                       std::uint64_t seed,
                                                       const std::vector<Permutation>& include) {
    GeneratorSet gens = column_generators(build_tanner(h), h.cols());
    return assemble_from_generators(std::move(gens), h.cols(), k, seed, include);
}

SimSummary run_capacity_experiment(const CssCode& code, const std::string& decoder_spec,
                                   double p, std::size_t shots, std::uint64_t seed,
                                   const SimOptions& opts) {
    const DecoderSpec spec = parse_decoder_spec(decoder_spec);
    if (!(p >= 0.0) || !(p <= 1.0)) {
        throw std::invalid_argument("run_capacity_experiment: p must lie in [0, 1]");
    }
    std::vector<Permutation> auts;
    if (spec.ensemble == 1) {
        auts.push_back(Permutation::identity(code.n));
    } else {
        auts = assemble_code_automorphisms(code, spec.ensemble, opts.ensemble_seed,
                                           opts.include_auts);
    }
    EnsembleOptions eopts;
    eopts.inner = spec.inner;
    eopts.metric = opts.metric.value_or(MetricKind::min_weight);
    const Priors priors = uniform_priors(code.n, clamp_prior(2.0 * p / 3.0));
    const EnsembleDecoder dec_z(code.hx, priors, auts, opts.bp_cfg, eopts);
    const EnsembleDecoder dec_x(code.hz, priors, auts, opts.bp_cfg, eopts);

    const std::size_t failures = count_failures(shots, opts.workers, [&](std::size_t shot) {
        std::mt19937_64 rng = shot_rng(seed, shot);
        const DepolarizingDraw draw = sample_depolarizing(code.n, p, rng);
        return side_fails(dec_z, code.hx, code.lx, draw.e_z) ||
               side_fails(dec_x, code.hz, code.lz, draw.e_x);
    });
    return summarize(code.name, spec, auts.size(), p, shots, failures, opts, seed);
}

SimSummary run_dem_experiment(const DetectorErrorModel& dem, const std::string& decoder_spec,
                              std::size_t shots, std::uint64_t seed, const SimOptions& opts) {
    const DecoderSpec spec = parse_decoder_spec(decoder_spec);
    const std::size_t faults = dem.h.cols();
    std::vector<Permutation> auts;
    if (spec.ensemble == 1) {
        auts.push_back(Permutation::identity(faults));
    } else {
        auts = assemble_matrix_automorphisms(dem.h, spec.ensemble, opts.ensemble_seed,
                                             opts.include_auts);
    }
    std::vector<double> clamped;
    clamped.reserve(faults);
    for (double q : dem.priors) clamped.push_back(clamp_prior(q));
    EnsembleOptions eopts;
    eopts.inner = spec.inner;
    eopts.metric = opts.metric.value_or(MetricKind::prior_likelihood);
    const EnsembleDecoder dec(dem.h, make_priors(clamped), auts, opts.bp_cfg, eopts);

    const std::size_t failures = count_failures(shots, opts.workers, [&](std::size_t shot) {
        std::mt19937_64 rng = shot_rng(seed, shot);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        BinaryVector e(faults);
        for (std::size_t j = 0; j < faults; ++j) {
            if (unit(rng) < dem.priors[j]) e.set(j, true);
        }
        return side_fails(dec, dem.h, dem.observables, e);
    });
    return summarize(opts.label.empty() ? "dem" : opts.label, spec, auts.size(), 0.0, shots,
                     failures, opts, seed);
}

std::string csv_header() {
    return "code,decoder,ensemble,p,shots,failures,p_logical,wilson_lo,wilson_hi,max_iters,seed";
}

std::string csv_row(const SimSummary& s) {
    char num[64];
    std::string row = s.code + "," + s.decoder + "," + std::to_string(s.ensemble) + ",";
    std::snprintf(num, sizeof(num), "%g", s.p);
    row += num;
    row += "," + std::to_string(s.shots) + "," + std::to_string(s.failures) + ",";
    std::snprintf(num, sizeof(num), "%.10g", s.p_logical);
    row += num;
    std::snprintf(num, sizeof(num), ",%.10g", s.wilson_lo);
    row += num;
    std::snprintf(num, sizeof(num), ",%.10g", s.wilson_hi);
    row += num;
    row += "," + std::to_string(s.max_iters) + "," + std::to_string(s.seed);
    return row;
}

}  // namespace autdec
