#pragma once

#include <cstddef>
#include <vector>

#include "autdec/bp.hpp"
#include "autdec/gf2.hpp"

namespace autdec {

struct OsdConfig {
    std::size_t order = 0;  // number of unreliable positions swept beyond the base solve
};

/// Ordered-statistics post-processing. Columns are ranked by ascending
/// |posterior llr| (ties toward lower index), a greedy independent set of
/// rank(H) columns is taken in that order, the remaining positions are fixed
/// to their hard decisions, and the pivot values follow by elimination. With
/// order > 0 the base is re-solved with all weight-1 flips among the `order`
/// least reliable non-pivot positions plus all weight-2 flips among the first
/// ceil(order/2), keeping the candidate whose support is most likely under
/// the priors. Throws std::invalid_argument when s is outside the column
/// space of H.
BinaryVector osd_decode(const BinaryMatrix& h, const std::vector<double>& posterior_llrs,
                        const Priors& priors, const BinaryVector& s, const OsdConfig& cfg = {});

}  // namespace autdec
