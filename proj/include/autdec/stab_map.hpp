#pragma once

#include <cstdint>
#include <vector>

#include "autdec/gf2.hpp"

namespace autdec {

/// Invertible row transformation pairing a column permutation a with the
/// check matrix it acts on: u * H = permute_columns(H, a). When u is a row
/// permutation, row_image[i] gives the source row of output row i and
/// syndrome transforms skip the matrix multiply.
struct SyndromeMap {
    BinaryMatrix u;
    Permutation a;
    bool is_row_permutation = false;
    std::vector<std::uint32_t> row_image;
};

/// Build the row transformation for a row-space automorphism of H. Exact row
/// rearrangements are matched directly; everything else goes through pivot
/// coefficient extraction on the RREF of H, extended to an invertible square
/// matrix when H has dependent rows. Throws if a is not a row-space
/// automorphism, naming the first violating row.
SyndromeMap compute_stab_map(const BinaryMatrix& h, const Permutation& a);

BinaryVector transform_syndrome(const SyndromeMap& map, const BinaryVector& s);

}  // namespace autdec
