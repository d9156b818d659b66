#include "autdec/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

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

InnerDecoder parse_inner_decoder(const std::string& text) {
    if (text == "bp") return {InnerKind::bp, 0};
    if (text == "bp+osd0") return {InnerKind::bp_osd, 0};
    const std::string prefix = "bp+osd-";
    if (text.rfind(prefix, 0) == 0) {
        const std::string digits = text.substr(prefix.size());
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            return {InnerKind::bp_osd, static_cast<std::size_t>(std::stoul(digits))};
        }
    }
    throw std::invalid_argument("unknown inner decoder '" + text +
                                "' (expected bp, bp+osd0 or bp+osd-<order>)");
}

std::string to_string(const InnerDecoder& inner) {
    if (inner.kind == InnerKind::bp) return "bp";
    if (inner.osd_order == 0) return "bp+osd0";
    return "bp+osd-" + std::to_string(inner.osd_order);
}

Candidate select_best(const std::vector<Candidate>& cands, MetricKind metric_kind) {
    if (cands.empty()) {
        throw std::invalid_argument("select_best: candidate list is empty");
    }
    const Candidate* best = &cands.front();
    for (const Candidate& c : cands) {
        bool better = false;
        if (metric_kind == MetricKind::min_weight) {
            const std::size_t wc = c.correction.popcount();
            const std::size_t wb = best->correction.popcount();
            better = wc < wb || (wc == wb && c.member < best->member);
        } else {
            better = c.metric < best->metric ||
                     (c.metric == best->metric && c.member < best->member);
        }
        if (better) best = &c;
    }
    return *best;
}

EnsembleDecoder::EnsembleDecoder(const BinaryMatrix& h, Priors priors,
                                 const std::vector<Permutation>& auts, BpConfig bp_cfg,
                                 EnsembleOptions opts)
    : h_(h), priors_(std::move(priors)), opts_(opts) {
    if (auts.empty()) {
        throw std::invalid_argument("EnsembleDecoder: need at least one automorphism");
    }
    if (!auts.front().is_identity()) {
        throw std::invalid_argument("EnsembleDecoder: auts[0] must be the identity");
    }
    members_.reserve(auts.size());
    for (std::size_t i = 0; i < auts.size(); ++i) {
        SyndromeMap map = compute_stab_map(h_, auts[i]);
        BinaryMatrix matrix = permute_columns(h_, auts[i]);
        Priors member_priors = priors_;
        if (opts_.permute_priors) {
            for (std::size_t j = 0; j < h_.cols(); ++j) {
                const std::size_t src = auts[i].image[j];
                member_priors.probabilities[j] = priors_.probabilities[src];
                member_priors.llrs[j] = priors_.llrs[src];
            }
        }
        BpDecoder bp(matrix, std::move(member_priors), bp_cfg);
        members_.push_back(EnsembleMember{i, auts[i], std::move(map), std::move(matrix),
                                          std::move(bp)});
    }
}

Candidate EnsembleDecoder::run_member(std::size_t i, const BinaryVector& s) const {
    const EnsembleMember& mem = members_[i];
    const BinaryVector si = transform_syndrome(mem.map, s);
    BpResult r = mem.bp.decode(si);
    Candidate cand;
    cand.member = i;
    if (r.converged) {
        cand.correction = std::move(r.hard);
        cand.converged = true;
    } else if (opts_.inner.kind == InnerKind::bp_osd) {
        cand.correction = osd_decode(mem.matrix, r.posterior_llrs, mem.bp.priors(), si,
                                     OsdConfig{opts_.inner.osd_order});
        cand.converged = true;
    } else {
        cand.correction = std::move(r.hard);
        cand.converged = false;
    }
    if (cand.converged && mul(h_, cand.correction) != s) {
        cand.converged = false;
    }
    cand.metric = support_llr_sum(cand.correction, priors_.llrs);
    return cand;
}

std::vector<Candidate> EnsembleDecoder::decode_candidates(const BinaryVector& s) const {
    if (s.size() != h_.rows()) {
        throw std::invalid_argument("EnsembleDecoder: syndrome length does not match row count");
    }
    std::vector<Candidate> cands(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) cands[i] = run_member(i, s);
    return cands;
}

DecodeOutcome EnsembleDecoder::decode(const BinaryVector& s, std::size_t workers) const {
    if (s.size() != h_.rows()) {
        throw std::invalid_argument("EnsembleDecoder: syndrome length does not match row count");
    }
    std::vector<Candidate> cands(members_.size());
    const std::size_t threads = std::min(std::max<std::size_t>(workers, 1), members_.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < members_.size(); ++i) cands[i] = run_member(i, s);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < members_.size();
                     i = next.fetch_add(1)) {
                    cands[i] = run_member(i, s);
                }
            });
        }
        for (std::thread& th : pool) th.join();
    }

    std::vector<Candidate> converged;
    converged.reserve(cands.size());
    for (const Candidate& c : cands) {
        if (c.converged) converged.push_back(c);
    }
    DecodeOutcome out;
    out.candidates_considered = converged.size();
    if (converged.empty()) {
        out.correction = cands.front().correction;
        out.success_flag = false;
        out.winner = 0;
        return out;
    }
    Candidate best = select_best(converged, opts_.metric);
    out.correction = std::move(best.correction);
    out.success_flag = true;
    out.winner = best.member;
    return out;
}

EnsembleDecoder build_ensemble(const BinaryMatrix& h, Priors priors,
                               const std::vector<Permutation>& auts, BpConfig bp_cfg,
                               EnsembleOptions opts) {
    return EnsembleDecoder(h, std::move(priors), auts, bp_cfg, opts);
}

DecodeOutcome ensemble_decode(const EnsembleDecoder& ens, const BinaryVector& s,
                              std::size_t workers) {
    return ens.decode(s, workers);
}

}  // namespace autdec
