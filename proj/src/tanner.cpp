#include <algorithm>
#include <stdexcept>

#include "autdec/tanner_aut.hpp"

namespace autdec {

std::size_t ColoredGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adj) twice += nbrs.size();
    return twice / 2;
}

ColoredGraph build_tanner(const BinaryMatrix& h,
                          const std::vector<std::uint32_t>* variable_colors) {
    const std::size_t n = h.cols(), m = h.rows();
    if (variable_colors && variable_colors->size() != n)
        throw std::invalid_argument("build_tanner: color override length mismatch");

    ColoredGraph g;
    g.vertex_count = n + m;
    g.colors.resize(n + m, 0);
    g.adj.resize(n + m);

    std::uint32_t max_var_color = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (variable_colors) g.colors[j] = (*variable_colors)[j];
        max_var_color = std::max(max_var_color, g.colors[j]);
    }
    for (std::size_t i = 0; i < m; ++i) g.colors[n + i] = max_var_color + 1;

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h.get(i, j)) {
                g.adj[j].push_back(std::uint32_t(n + i));
                g.adj[n + i].push_back(std::uint32_t(j));
            }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

ColoredGraph build_joint_tanner(const BinaryMatrix& hx, const BinaryMatrix& hz) {
    if (hx.cols() != hz.cols()) throw std::invalid_argument("build_joint_tanner: column mismatch");
    const std::size_t n = hx.cols(), rx = hx.rows(), rz = hz.rows();

    ColoredGraph g;
    g.vertex_count = n + rx + rz;
    g.colors.resize(g.vertex_count, 0);
    g.adj.resize(g.vertex_count);
    for (std::size_t i = 0; i < rx; ++i) g.colors[n + i] = 1;
    for (std::size_t i = 0; i < rz; ++i) g.colors[n + rx + i] = 2;

    for (std::size_t i = 0; i < rx; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (hx.get(i, j)) {
                g.adj[j].push_back(std::uint32_t(n + i));
                g.adj[n + i].push_back(std::uint32_t(j));
            }
    for (std::size_t i = 0; i < rz; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (hz.get(i, j)) {
                g.adj[j].push_back(std::uint32_t(n + rx + i));
                g.adj[n + rx + i].push_back(std::uint32_t(j));
            }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool is_graph_automorphism(const ColoredGraph& g, const Permutation& p) {
    if (p.size() != g.vertex_count) return false;
    std::vector<std::uint32_t> mapped;
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        const std::uint32_t w = p.image[v];
        if (g.colors[w] != g.colors[v]) return false;
        mapped.clear();
        mapped.reserve(g.adj[v].size());
        for (std::uint32_t u : g.adj[v]) mapped.push_back(p.image[u]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != g.adj[w]) return false;
    }
    return true;
}

Permutation restrict_to_variables(const Permutation& whole, std::size_t n) {
    if (whole.size() < n) throw std::invalid_argument("restrict_to_variables: too few points");
    std::vector<std::uint32_t> image(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (whole.image[j] >= n)
            throw std::invalid_argument("restrict_to_variables: variables not preserved");
        image[j] = whole.image[j];
    }
    return Permutation(std::move(image));
}

}  // namespace autdec
