#include "gain_inertia/matching.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace gain_inertia {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Edmonds' algorithm with blossom contraction by base relabeling.
class Blossom {
public:
    explicit Blossom(const GainGraph& g)
        : g_(g)
        , n_(g.vertex_count())
        , match_(n_, kNone)
        , parent_(n_)
        , base_(n_)
        , used_(n_)
        , in_blossom_(n_)
    {
    }

    std::vector<std::size_t> run()
    {
        // Greedy start; augmenting search fixes any suboptimality.
        for (Vertex v = 0; v < n_; ++v) {
            if (match_[v] != kNone)
                continue;
            for (const auto& nb : g_.neighbors(v)) {
                if (match_[nb.vertex] == kNone) {
                    match_[v] = nb.vertex;
                    match_[nb.vertex] = v;
                    break;
                }
            }
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (match_[v] != kNone)
                continue;
            const std::size_t end = find_path(v);
            // Flip the alternating path ending at `end`.
            for (std::size_t u = end; u != kNone;) {
                const std::size_t pu = parent_[u];
                const std::size_t next = match_[pu];
                match_[u] = pu;
                match_[pu] = u;
                u = next;
            }
        }
        return match_;
    }

private:
    std::size_t lca(std::size_t a, std::size_t b)
    {
        std::vector<bool> seen(n_, false);
        while (true) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == kNone)
                break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b])
                return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(std::size_t v, std::size_t b, std::size_t child)
    {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    std::size_t find_path(std::size_t root)
    {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), kNone);
        for (std::size_t i = 0; i < n_; ++i)
            base_[i] = i;
        used_[root] = true;
        std::queue<std::size_t> q;
        q.push(root);
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop();
            for (const auto& nb : g_.neighbors(v)) {
                const std::size_t to = nb.vertex;
                if (base_[v] == base_[to] || match_[v] == to)
                    continue;
                if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
                    const std::size_t cur_base = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == kNone) {
                    parent_[to] = v;
                    if (match_[to] == kNone)
                        return to;
                    used_[match_[to]] = true;
                    q.push(match_[to]);
                }
            }
        }
        return kNone;
    }

    const GainGraph& g_;
    std::size_t n_;
    std::vector<std::size_t> match_;
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> base_;
    std::vector<bool> used_;
    std::vector<bool> in_blossom_;
};

GainGraph without_edges(const GainGraph& g, const std::vector<bool>& drop)
{
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (!drop[i])
            kept.push_back(g.edges()[i]);
    }
    return GainGraph::from_edges(g.vertex_count(), std::move(kept));
}

} // namespace

MatchingResult max_matching(const GainGraph& g)
{
    const auto mate = Blossom(g).run();
    MatchingResult out;
    for (Vertex v = 0; v < mate.size(); ++v) {
        if (mate[v] == kNone)
            continue;
        out.saturated.push_back(v);
        if (v < mate[v])
            out.edges.emplace_back(v, mate[v]);
    }
    out.size = out.edges.size();
    return out;
}

std::size_t matching_number(const GainGraph& g)
{
    return max_matching(g).size;
}

std::size_t matching_number_bruteforce(const GainGraph& g)
{
    const std::size_t m = g.edge_count();
    if (m > kBruteForceEdgeLimit)
        throw MatchingError("brute-force matching limited to " + std::to_string(kBruteForceEdgeLimit)
                            + " edges, graph has " + std::to_string(m));
    const auto edges = g.edges();
    std::vector<bool> used(g.vertex_count(), false);
    const std::size_t vertex_bound = g.vertex_count() / 2;
    std::size_t best = 0;

    // Branch on edge i: skip it, or take it when both ends are free.
    auto search = [&](auto&& self, std::size_t i, std::size_t taken) -> void {
        best = std::max(best, taken);
        if (i == m || best == vertex_bound || taken + (m - i) <= best)
            return;
        const Edge& e = edges[i];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = true;
            self(self, i + 1, taken + 1);
            used[e.u] = used[e.v] = false;
        }
        self(self, i + 1, taken);
    };
    search(search, 0, 0);
    return best;
}

bool exists_max_matching_avoiding_edges(const GainGraph& g, std::span<const std::size_t> forbidden_edges)
{
    std::vector<bool> drop(g.edge_count(), false);
    for (std::size_t e : forbidden_edges) {
        if (e >= g.edge_count())
            throw MatchingError("edge index " + std::to_string(e) + " is not an edge of the graph");
        drop[e] = true;
    }
    return matching_number(without_edges(g, drop)) == matching_number(g);
}

bool exists_max_matching_avoiding(const GainGraph& g, std::span<const std::pair<Vertex, Vertex>> forbidden)
{
    std::vector<std::size_t> indices;
    for (auto [u, v] : forbidden) {
        if (u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v))
            throw MatchingError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge of the graph");
        for (const auto& nb : g.neighbors(u)) {
            if (nb.vertex == v)
                indices.push_back(nb.edge);
        }
    }
    return exists_max_matching_avoiding_edges(g, indices);
}

bool every_max_matching_saturates(const GainGraph& g, Vertex v)
{
    if (v >= g.vertex_count())
        throw MatchingError("vertex " + std::to_string(v) + " is not in the graph");
    const std::size_t m = matching_number(g);
    const Vertex removed[] = {v};
    return m > 0 && matching_number(delete_vertices(g, removed).graph) + 1 == m;
}

GraphInvariants graph_invariants(const GainGraph& g)
{
    GraphInvariants inv;
    inv.vertex_count = g.vertex_count();
    inv.edge_count = g.edge_count();
    inv.component_count = component_count(g);
    inv.cyclomatic = inv.edge_count + inv.component_count - inv.vertex_count;
    inv.matching = matching_number(g);
    inv.pendant_vertices = pendant_vertices(g);
    inv.quasi_pendant_vertices = quasi_pendant_vertices(g);
    return inv;
}

} // namespace gain_inertia
