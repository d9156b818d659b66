#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autdec/gf2.hpp"

namespace autdec {

/// Vertex-colored undirected graph with sorted adjacency lists. Tanner
/// graphs put the n variable vertices first, then the check vertices.
struct ColoredGraph {
    std::size_t vertex_count = 0;
    std::vector<std::uint32_t> colors;
    std::vector<std::vector<std::uint32_t>> adj;

    std::size_t edge_count() const;
};

/// Bipartite graph of H: variable vertex j (color 0, or the override) joined
/// to check vertex n+i (one color past the largest variable color) iff H[i,j]=1.
ColoredGraph build_tanner(const BinaryMatrix& h,
                          const std::vector<std::uint32_t>* variable_colors = nullptr);

/// Variables color 0, hx checks color 1, hz checks color 2; both check blocks
/// share the variable vertices.
ColoredGraph build_joint_tanner(const BinaryMatrix& hx, const BinaryMatrix& hz);

/// Point map interpretation: vertex v goes to p(v). Checks colors and
/// adjacency exactly.
bool is_graph_automorphism(const ColoredGraph& g, const Permutation& p);

struct GeneratorSet {
    std::vector<Permutation> generators;
    std::string provenance;  // "graph-search" or "code-constructive"
};

/// Color-preserving automorphism generators by equitable partition refinement
/// with individualization and backtracking. Every returned permutation is
/// re-verified against the adjacency before being reported.
GeneratorSet find_automorphism_generators(const ColoredGraph& g);

struct GroupOrderResult {
    std::size_t order = 1;
    bool overflowed = false;
};

/// Breadth-first closure of the generated group; stops once more than cap
/// elements have been seen.
GroupOrderResult group_order(const std::vector<Permutation>& gens, std::size_t cap);

/// Every group element in breadth-first order starting at the identity, or
/// nothing if the closure exceeds cap.
std::optional<std::vector<Permutation>> enumerate_group(const std::vector<Permutation>& gens,
                                                        std::size_t cap);

/// Deterministic ensemble choice. Element 0 is the identity, followed by the
/// forced includes, then distinct random words (length <= 8) in the
/// generators. If the whole group has at most k elements it is returned
/// instead; a short result signals that case to the caller.
std::vector<Permutation> sample_ensemble(const GeneratorSet& gens, std::size_t k,
                                         std::uint64_t seed,
                                         const std::vector<Permutation>& include = {});

/// First n entries of a whole-graph permutation as a column permutation;
/// throws if the permutation does not keep {0..n-1} in place as a set.
Permutation restrict_to_variables(const Permutation& whole, std::size_t n);

std::string generators_to_json(const GeneratorSet& gens);
GeneratorSet generators_from_json(const std::string& text);

}  // namespace autdec
