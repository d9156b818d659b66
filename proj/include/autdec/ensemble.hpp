#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "autdec/bp.hpp"
#include "autdec/gf2.hpp"
#include "autdec/osd.hpp"
#include "autdec/stab_map.hpp"

namespace autdec {

enum class InnerKind { bp, bp_osd };
enum class MetricKind { min_weight, prior_likelihood };

/// Inner decoder selection. "bp" runs min-sum only; "bp+osd0" and "bp+osd-N"
/// add ordered-statistics post-processing on the non-converged runs.
struct InnerDecoder {
    InnerKind kind = InnerKind::bp;
    std::size_t osd_order = 0;
};

InnerDecoder parse_inner_decoder(const std::string& text);
std::string to_string(const InnerDecoder& inner);

struct EnsembleOptions {
    InnerDecoder inner;
    MetricKind metric = MetricKind::min_weight;
    bool permute_priors = false;  // experimental: give member i the priors reordered by its permutation
};

struct Candidate {
    BinaryVector correction;
    double metric = 0.0;  // prior log-likelihood ratio summed over the support
    std::size_t member = 0;
    bool converged = false;
};

struct DecodeOutcome {
    BinaryVector correction;
    bool success_flag = false;
    std::size_t winner = 0;
    std::size_t candidates_considered = 0;
};

struct EnsembleMember {
    std::size_t index = 0;
    Permutation automorphism;
    SyndromeMap map;
    BinaryMatrix matrix;  // permute_columns(H, automorphism) = map.u * H
    BpDecoder bp;
};

/// Smallest Hamming weight or smallest metric field; ties go to the lowest
/// member index. Throws on an empty list.
Candidate select_best(const std::vector<Candidate>& cands, MetricKind metric_kind);

/// One compiled decoder per automorphism, each attacking the same syndrome
/// through its own permuted view of H. A member's output is a correction in
/// original coordinates as-is, because H*A = U*H turns (H*A)x = Us into
/// Hx = s.
class EnsembleDecoder {
public:
    EnsembleDecoder(const BinaryMatrix& h, Priors priors,
                    const std::vector<Permutation>& auts, BpConfig bp_cfg,
                    EnsembleOptions opts = {});

    /// Runs every member, validates converged outputs against H*c = s
    /// (failures are demoted to non-converged), and returns them all.
    std::vector<Candidate> decode_candidates(const BinaryVector& s) const;

    /// Ranks the converged candidates and returns the winner. When nothing
    /// converges, member 0's output is returned with success_flag false.
    /// workers > 1 fans the members out across threads; the outcome does not
    /// depend on the schedule.
    DecodeOutcome decode(const BinaryVector& s, std::size_t workers = 1) const;

    const BinaryMatrix& matrix() const { return h_; }
    const Priors& priors() const { return priors_; }
    const EnsembleOptions& options() const { return opts_; }
    const std::vector<EnsembleMember>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

private:
    Candidate run_member(std::size_t i, const BinaryVector& s) const;

    BinaryMatrix h_;
    Priors priors_;
    EnsembleOptions opts_;
    std::vector<EnsembleMember> members_;
};

EnsembleDecoder build_ensemble(const BinaryMatrix& h, Priors priors,
                               const std::vector<Permutation>& auts, BpConfig bp_cfg,
                               EnsembleOptions opts = {});

DecodeOutcome ensemble_decode(const EnsembleDecoder& ens, const BinaryVector& s,
                              std::size_t workers = 1);

}  // namespace autdec
