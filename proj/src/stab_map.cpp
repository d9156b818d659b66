#include "autdec/stab_map.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace autdec {

namespace {

// Row permutation structure of u, if any: exactly one 1 per row and column.
void detect_row_permutation(SyndromeMap& map) {
    const std::size_t m = map.u.rows();
    std::vector<std::uint32_t> image(m);
    std::vector<bool> used(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (map.u.row_popcount(i) != 1) return;
        const std::size_t j = map.u.row(i).first_set();
        if (used[j]) return;
        used[j] = true;
        image[i] = std::uint32_t(j);
    }
    map.is_row_permutation = true;
    map.row_image = std::move(image);
}

// If the permuted matrix is an exact rearrangement of H's rows, use that
// rearrangement directly; it is automatically invertible and keeps graph
// automorphisms on their advertised fast path even when H has dependent rows.
bool try_row_matching(const BinaryMatrix& h, const BinaryMatrix& ha, SyndromeMap& out) {
    const std::size_t m = h.rows();
    std::map<std::string, std::vector<std::uint32_t>> rows_of;
    for (std::size_t i = m; i-- > 0;) rows_of[h.row(i).to_string()].push_back(std::uint32_t(i));

    BinaryMatrix u(m, m);
    std::vector<std::uint32_t> image(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto it = rows_of.find(ha.row(i).to_string());
        if (it == rows_of.end() || it->second.empty()) return false;
        const std::uint32_t src = it->second.back();
        it->second.pop_back();
        u.set(i, src, true);
        image[i] = src;
    }
    out.u = std::move(u);
    out.is_row_permutation = true;
    out.row_image = std::move(image);
    return true;
}

}  // namespace

SyndromeMap compute_stab_map(const BinaryMatrix& h, const Permutation& a) {
    if (a.size() != h.cols()) throw std::invalid_argument("compute_stab_map: length mismatch");
    const std::size_t m = h.rows();

    SyndromeMap out;
    out.a = a;

    if (a.is_identity()) {
        out.u = BinaryMatrix::identity(m);
        detect_row_permutation(out);
        return out;
    }

    const BinaryMatrix ha = permute_columns(h, a);
    if (try_row_matching(h, ha, out)) return out;

    const RrefResult rr = rref(h);
    for (std::size_t i = 0; i < m; ++i)
        if (!in_rowspace(rr, ha.row(i)))
            throw std::invalid_argument(
                "compute_stab_map: permutation does not preserve the row space (row " +
                std::to_string(i) + " of the permuted matrix falls outside)");

    const std::size_t r = rr.rank();
    // Row i of H*A equals the combination of RREF rows picked out by its
    // entries at the pivot columns; collect those coefficients.
    BinaryMatrix mext(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < r; ++t)
            if (ha.get(i, rr.pivots[t])) mext.set(i, t, true);

    if (r < m) {
        // The remaining columns multiply only zero rows of the RREF; fill them
        // with unit columns that make the square matrix invertible.
        IncrementalBasis col_space;
        for (std::size_t t = 0; t < r; ++t) col_space.insert(mext.column(t));
        std::size_t next = r;
        for (std::size_t i = 0; i < m && next < m; ++i) {
            if (col_space.insert(BinaryVector::indicator(m, {i}))) {
                mext.set(i, next, true);
                ++next;
            }
        }
        if (next != m) throw std::logic_error("compute_stab_map: completion failed");
    }

    out.u = mul(mext, rr.transform);
    if (mul(out.u, h) != ha) throw std::logic_error("compute_stab_map: transform check failed");
    detect_row_permutation(out);
    return out;
}

BinaryVector transform_syndrome(const SyndromeMap& map, const BinaryVector& s) {
    if (s.size() != map.u.cols())
        throw std::invalid_argument("transform_syndrome: length mismatch");
    if (map.is_row_permutation) {
        BinaryVector out(s.size());
        for (std::size_t i = 0; i < map.row_image.size(); ++i)
            if (s.get(map.row_image[i])) out.set(i, true);
        return out;
    }
    return mul(map.u, s);
}

}  // namespace autdec
