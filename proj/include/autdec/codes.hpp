#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "autdec/gf2.hpp"

namespace autdec {

/// CSS code: hx and hz with hx * hz^T = 0, plus logical operator
/// representatives (k rows each, paired so lx * lz^T is invertible).
struct CssCode {
    std::string name;
    std::size_t n = 0;
    std::size_t k = 0;
    BinaryMatrix hx;
    BinaryMatrix hz;
    BinaryMatrix lx;
    BinaryMatrix lz;
};

/// Validate commutation, compute k from ranks and fill in logical operators.
CssCode make_css(std::string name, BinaryMatrix hx, BinaryMatrix hz);

/// The [[15,1,3]] quantum Reed-Muller code. X checks are the 4x15 matrix
/// whose column j (1-indexed) is the binary expansion of j; Z checks add the
/// 6 pairwise AND products of those rows.
CssCode build_qrm15();

/// Bivariate bicycle code on an l x m torus: hx = [A | B], hz = [B^T | A^T]
/// with A, B sums of monomial shift matrices x^a y^b. Exponents are reduced
/// mod l and mod m.
CssCode build_bb(std::size_t l, std::size_t m,
                 const std::vector<std::pair<unsigned, unsigned>>& a_exps,
                 const std::vector<std::pair<unsigned, unsigned>>& b_exps);

/// Deterministic logical representatives: kernel of one side reduced against
/// the row space of the other, in fixed column order.
std::pair<BinaryMatrix, BinaryMatrix> logical_operators(const BinaryMatrix& hx,
                                                        const BinaryMatrix& hz);

/// Minimum weight over all logical (non-stabilizer) X-type and Z-type
/// operators, by exhaustive kernel enumeration. Only feasible for small codes;
/// throws if a kernel dimension exceeds 24.
std::size_t min_logical_weight(const CssCode& code);

/// Qubit permutation induced by an invertible 4x4 matrix acting on the
/// nonzero 4-bit column labels of the QRM-15 code: column v maps to M*v.
Permutation qrm_code_automorphism(const BinaryMatrix& m);

/// Column permutations of a BB code that shift both blocks one step along
/// the x and y torus directions. Each preserves hx and hz up to a row
/// permutation.
std::vector<Permutation> bb_shift_generators(std::size_t l, std::size_t m);

/// One entry of the code manifest.
struct BbSpec {
    std::string name;
    std::size_t l = 0;
    std::size_t m = 0;
    std::vector<std::pair<unsigned, unsigned>> a_exps;
    std::vector<std::pair<unsigned, unsigned>> b_exps;
    std::size_t expect_n = 0;
    std::size_t expect_k = 0;
};

/// Thrown when manifest text is not valid JSON or entries are malformed.
class ManifestParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parse a JSON manifest: array of {name, l, m, a_exps, b_exps, expect_n,
/// expect_k} with exponent pairs as [x_pow, y_pow].
std::vector<BbSpec> parse_code_manifest(const std::string& json_text);

/// Build the code for a manifest entry and check the computed (n, k) against
/// the expected values; mismatch throws.
CssCode build_from_spec(const BbSpec& spec);

/// The manifest bundled into the binary; identical to data/codes.json.
const std::string& builtin_code_manifest();

}  // namespace autdec
