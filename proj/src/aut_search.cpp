#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "autdec/tanner_aut.hpp"

namespace autdec {

namespace {

// Ordered list of cells; the automorphism search keeps the cell order
// invariant under isomorphism so that positions can be compared across
// branches.
using Partition = std::vector<std::vector<std::uint32_t>>;

Partition initial_partition(const ColoredGraph& g) {
    std::map<std::uint32_t, std::vector<std::uint32_t>> by_color;
    for (std::uint32_t v = 0; v < g.vertex_count; ++v) by_color[g.colors[v]].push_back(v);
    Partition p;
    p.reserve(by_color.size());
    for (auto& [color, verts] : by_color) p.push_back(std::move(verts));
    return p;
}

// Equitable refinement: split every cell by the multiset of neighbor cell
// ids, repeating until stable. Sub-cells are ordered by signature, which is
// an isomorphism invariant, so corresponding cells end up at corresponding
// positions in every branch of the search.
Partition refine(const ColoredGraph& g, Partition cells) {
    std::vector<std::uint32_t> id(g.vertex_count);
    for (;;) {
        for (std::uint32_t c = 0; c < cells.size(); ++c)
            for (std::uint32_t v : cells[c]) id[v] = c;

        bool changed = false;
        Partition next;
        next.reserve(cells.size());
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(std::move(cell));
                continue;
            }
            std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> split;
            std::vector<std::uint32_t> sig;
            for (std::uint32_t v : cell) {
                sig.assign(g.adj[v].size(), 0);
                for (std::size_t i = 0; i < g.adj[v].size(); ++i) sig[i] = id[g.adj[v][i]];
                std::sort(sig.begin(), sig.end());
                split[sig].push_back(v);
            }
            if (split.size() == 1) {
                next.push_back(std::move(cell));
            } else {
                changed = true;
                for (auto& [s, verts] : split) next.push_back(std::move(verts));
            }
        }
        cells = std::move(next);
        if (!changed) return cells;
    }
}

Partition individualize(const Partition& p, std::size_t ci, std::uint32_t v) {
    Partition out;
    out.reserve(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != ci) {
            out.push_back(p[i]);
            continue;
        }
        out.push_back({v});
        std::vector<std::uint32_t> rest;
        rest.reserve(p[i].size() - 1);
        for (std::uint32_t u : p[i])
            if (u != v) rest.push_back(u);
        out.push_back(std::move(rest));
    }
    return out;
}

bool is_discrete(const Partition& p, std::size_t n) { return p.size() == n; }

// Smallest non-singleton cell, earliest position on ties. Depends only on
// the cell-size sequence, itself an invariant.
std::size_t target_cell(const Partition& p) {
    std::size_t best = p.size(), best_size = SIZE_MAX;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i].size() > 1 && p[i].size() < best_size) {
            best = i;
            best_size = p[i].size();
        }
    return best;
}

std::vector<std::uint32_t> cell_sizes(const Partition& p) {
    std::vector<std::uint32_t> s;
    s.reserve(p.size());
    for (const auto& cell : p) s.push_back(std::uint32_t(cell.size()));
    return s;
}

std::vector<std::uint32_t> leaf_order(const Partition& p) {
    std::vector<std::uint32_t> order;
    order.reserve(p.size());
    for (const auto& cell : p) order.push_back(cell.front());
    return order;
}

struct Searcher {
    const ColoredGraph& g;
    std::vector<Partition> base;               // refined partition per depth
    std::vector<std::size_t> base_cell;        // individualized cell per depth
    std::vector<std::vector<std::uint32_t>> base_sizes;
    std::vector<std::uint32_t> base_leaf;
    std::vector<Permutation> gens;

    explicit Searcher(const ColoredGraph& graph) : g(graph) {}

    void build_base_path() {
        Partition p = refine(g, initial_partition(g));
        for (;;) {
            base_sizes.push_back(cell_sizes(p));
            if (is_discrete(p, g.vertex_count)) {
                base_leaf = leaf_order(p);
                base.push_back(std::move(p));
                return;
            }
            const std::size_t ci = target_cell(p);
            const std::uint32_t v = p[ci].front();
            base.push_back(p);
            base_cell.push_back(ci);
            p = refine(g, individualize(p, ci, v));
        }
    }

    // First verified automorphism in the subtree rooted at an already refined
    // partition, or nothing. Subtrees whose cell-size sequence deviates from
    // the base path cannot contain one and are cut immediately.
    std::optional<Permutation> first_automorphism(const Partition& p, std::size_t depth) {
        if (cell_sizes(p) != base_sizes[depth]) return std::nullopt;
        if (is_discrete(p, g.vertex_count)) {
            std::vector<std::uint32_t> image(g.vertex_count);
            const auto leaf = leaf_order(p);
            for (std::size_t i = 0; i < leaf.size(); ++i) image[base_leaf[i]] = leaf[i];
            Permutation cand(std::move(image));
            if (is_graph_automorphism(g, cand)) return cand;
            return std::nullopt;
        }
        const std::size_t ci = target_cell(p);
        for (std::uint32_t v : p[ci]) {
            auto r = first_automorphism(refine(g, individualize(p, ci, v)), depth + 1);
            if (r) return r;
        }
        return std::nullopt;
    }

    bool orbit_meets(std::uint32_t v, const std::set<std::uint32_t>& processed) const {
        std::vector<std::uint32_t> stack{v};
        std::set<std::uint32_t> seen{v};
        while (!stack.empty()) {
            const std::uint32_t u = stack.back();
            stack.pop_back();
            if (processed.count(u)) return true;
            for (const auto& gperm : gens) {
                const std::uint32_t w = gperm.image[u];
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        return false;
    }

    void run() {
        build_base_path();
        // Deepest level first: every generator found fixes the base prefix of
        // the levels still to come, so orbit pruning can always use all of
        // them.
        for (std::size_t d = base_cell.size(); d-- > 0;) {
            const Partition& p = base[d];
            const std::size_t ci = base_cell[d];
            std::set<std::uint32_t> processed{p[ci].front()};
            for (std::size_t i = 1; i < p[ci].size(); ++i) {
                const std::uint32_t v = p[ci][i];
                if (orbit_meets(v, processed)) continue;
                auto r = first_automorphism(refine(g, individualize(p, ci, v)), d + 1);
                if (r) gens.push_back(std::move(*r));
                processed.insert(v);
            }
        }
    }
};

}  // namespace

GeneratorSet find_automorphism_generators(const ColoredGraph& g) {
    GeneratorSet out;
    out.provenance = "graph-search";
    if (g.vertex_count == 0) return out;
    Searcher s(g);
    s.run();
    out.generators = std::move(s.gens);
    return out;
}

GroupOrderResult group_order(const std::vector<Permutation>& gens, std::size_t cap) {
    if (cap < 1) throw std::invalid_argument("group_order: cap must be positive");
    if (gens.empty()) return {1, false};
    auto all = enumerate_group(gens, cap);
    if (!all) return {cap, true};
    return {all->size(), false};
}

std::optional<std::vector<Permutation>> enumerate_group(const std::vector<Permutation>& gens,
                                                        std::size_t cap) {
    if (gens.empty()) return std::vector<Permutation>{};
    const std::size_t n = gens.front().size();
    for (const auto& gp : gens)
        if (gp.size() != n) throw std::invalid_argument("enumerate_group: mixed domains");

    std::vector<Permutation> order{Permutation::identity(n)};
    std::set<std::vector<std::uint32_t>> seen{order.front().image};
    for (std::size_t next = 0; next < order.size(); ++next) {
        // breadth-first over right-multiplication keeps the order deterministic
        const Permutation cur = order[next];
        for (const auto& gp : gens) {
            Permutation prod = cur * gp;
            if (seen.insert(prod.image).second) {
                if (order.size() + 1 > cap) return std::nullopt;
                order.push_back(std::move(prod));
            }
        }
    }
    return order;
}

std::vector<Permutation> sample_ensemble(const GeneratorSet& gens, std::size_t k,
                                         std::uint64_t seed,
                                         const std::vector<Permutation>& include) {
    if (k < 1) throw std::invalid_argument("sample_ensemble: k must be positive");
    std::size_t n = 0;
    if (!gens.generators.empty())
        n = gens.generators.front().size();
    else if (!include.empty())
        n = include.front().size();
    else
        throw std::invalid_argument("sample_ensemble: cannot infer the domain size");

    auto whole = enumerate_group(gens.generators, k);
    if (whole && !whole->empty() && whole->size() <= k) return *whole;
    if (whole && whole->empty()) {
        // no generators: identity plus whatever was forced in
        std::vector<Permutation> out{Permutation::identity(n)};
        for (const auto& p : include)
            if (!p.is_identity()) out.push_back(p);
        if (out.size() > k) out.resize(k);
        return out;
    }

    std::vector<Permutation> out{Permutation::identity(n)};
    std::set<std::vector<std::uint32_t>> seen{out.front().image};
    for (const auto& p : include) {
        if (out.size() == k) return out;
        if (seen.insert(p.image).second) out.push_back(p);
    }

    std::mt19937_64 rng(seed);
    std::size_t attempts = 0;
    const std::size_t max_attempts = 256 + 64 * k;
    while (out.size() < k && attempts < max_attempts) {
        ++attempts;
        const std::size_t len = 1 + rng() % 8;
        Permutation word = Permutation::identity(n);
        for (std::size_t i = 0; i < len; ++i)
            word = word * gens.generators[rng() % gens.generators.size()];
        if (seen.insert(word.image).second) out.push_back(std::move(word));
    }
    return out;
}

std::string generators_to_json(const GeneratorSet& gens) {
    nlohmann::json doc;
    doc["provenance"] = gens.provenance;
    doc["generators"] = nlohmann::json::array();
    for (const auto& p : gens.generators) doc["generators"].push_back(p.image);
    return doc.dump(2) + "\n";
}

GeneratorSet generators_from_json(const std::string& text) {
    GeneratorSet out;
    try {
        const auto doc = nlohmann::json::parse(text);
        out.provenance = doc.at("provenance").get<std::string>();
        for (const auto& arr : doc.at("generators"))
            out.generators.emplace_back(arr.get<std::vector<std::uint32_t>>());
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("generators file: ") + ex.what());
    }
    return out;
}

}  // namespace autdec
