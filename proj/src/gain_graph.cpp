#include "gain_inertia/gain_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gain_inertia {

namespace {

constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

std::string pair_text(Vertex u, Vertex v)
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

GainGraph GainGraph::build(std::size_t vertex_count, std::span<const EdgeSpec> edges)
{
    std::vector<Edge> built;
    built.reserve(edges.size());
    for (const auto& spec : edges) {
        Gain g;
        try {
            g = Gain::from_spec(spec.gain);
        } catch (const GainError& e) {
            throw GraphError("edge " + pair_text(spec.u, spec.v) + ": " + e.what());
        }
        built.push_back({spec.u, spec.v, g});
    }
    return from_edges(vertex_count, std::move(built));
}

GainGraph GainGraph::from_edges(std::size_t vertex_count, std::vector<Edge> edges)
{
    for (auto& e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count)
            throw GraphError("edge " + pair_text(e.u, e.v) + " has a vertex outside [0, "
                             + std::to_string(vertex_count) + ")");
        if (e.u == e.v)
            throw GraphError("loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) {
            std::swap(e.u, e.v);
            e.gain = e.gain.conj();
        }
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
            throw GraphError("duplicate edge " + pair_text(edges[i].u, edges[i].v));
    }

    GainGraph g;
    g.adjacency_.assign(vertex_count, {});
    for (std::size_t i = 0; i < edges.size(); ++i) {
        g.adjacency_[edges[i].u].push_back({edges[i].v, i});
        g.adjacency_[edges[i].v].push_back({edges[i].u, i});
    }
    for (auto& list : g.adjacency_)
        std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    g.edges_ = std::move(edges);
    return g;
}

std::size_t GainGraph::max_degree() const noexcept
{
    std::size_t best = 0;
    for (const auto& list : adjacency_)
        best = std::max(best, list.size());
    return best;
}

bool GainGraph::has_edge(Vertex u, Vertex v) const
{
    return gain(u, v).has_value();
}

std::optional<Gain> GainGraph::gain(Vertex u, Vertex v) const
{
    if (u >= vertex_count() || v >= vertex_count())
        return std::nullopt;
    const auto& list = adjacency_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Neighbor& n, Vertex x) { return n.vertex < x; });
    if (it == list.end() || it->vertex != v)
        return std::nullopt;
    const Edge& e = edges_[it->edge];
    return e.u == u ? e.gain : e.gain.conj();
}

bool GainGraph::all_gains_exact() const noexcept
{
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.gain.is_exact(); });
}

bool operator==(const GainGraph& a, const GainGraph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const Edge& x = a.edges_[i];
        const Edge& y = b.edges_[i];
        if (x.u != y.u || x.v != y.v || !x.gain.approx_equal(y.gain))
            return false;
    }
    return true;
}

std::vector<std::vector<Vertex>> connected_components(const GainGraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const auto& nb : g.neighbors(v)) {
                if (!seen[nb.vertex]) {
                    seen[nb.vertex] = true;
                    stack.push_back(nb.vertex);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::size_t component_count(const GainGraph& g)
{
    return connected_components(g).size();
}

std::size_t cyclomatic_number(const GainGraph& g)
{
    return g.edge_count() + component_count(g) - g.vertex_count();
}

BlockDecomposition block_decomposition(const GainGraph& g)
{
    const std::size_t n = g.vertex_count();
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, kUnseen), low(n, 0);
    std::vector<bool> is_cut(n, false);
    std::vector<std::size_t> edge_stack;
    BlockDecomposition out;

    struct Frame {
        Vertex v;
        std::size_t parent_edge;
        std::size_t next = 0;
    };
    std::vector<Frame> frames;
    std::size_t timer = 0;

    auto emit_block = [&](std::size_t until_edge) {
        Block b;
        while (true) {
            std::size_t e = edge_stack.back();
            edge_stack.pop_back();
            b.edges.push_back(e);
            b.vertices.push_back(g.edges()[e].u);
            b.vertices.push_back(g.edges()[e].v);
            if (e == until_edge)
                break;
        }
        std::sort(b.edges.begin(), b.edges.end());
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        out.blocks.push_back(std::move(b));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != kUnseen || g.degree(root) == 0)
            continue;
        std::size_t root_children = 0;
        disc[root] = low[root] = timer++;
        frames.push_back({root, kNoEdge});
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                const Neighbor nb = nbrs[f.next++];
                if (nb.edge == f.parent_edge)
                    continue;
                if (disc[nb.vertex] == kUnseen) {
                    edge_stack.push_back(nb.edge);
                    disc[nb.vertex] = low[nb.vertex] = timer++;
                    if (f.v == root)
                        ++root_children;
                    frames.push_back({nb.vertex, nb.edge});
                } else if (disc[nb.vertex] < disc[f.v]) {
                    edge_stack.push_back(nb.edge);
                    low[f.v] = std::min(low[f.v], disc[nb.vertex]);
                }
                continue;
            }
            const Frame done = f;
            frames.pop_back();
            if (frames.empty())
                break;
            const Vertex parent = frames.back().v;
            low[parent] = std::min(low[parent], low[done.v]);
            if (low[done.v] >= disc[parent]) {
                emit_block(done.parent_edge);
                if (parent != root)
                    is_cut[parent] = true;
            }
        }
        if (root_children > 1)
            is_cut[root] = true;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (is_cut[v])
            out.cut_vertices.push_back(v);
    }
    return out;
}

namespace {

std::vector<Vertex> walk_cycle_block(const GainGraph& g, const Block& b)
{
    // Every vertex of a cycle block has exactly two block edges.
    auto other_end = [&](std::size_t e, Vertex v) {
        const Edge& edge = g.edges()[e];
        return edge.u == v ? edge.v : edge.u;
    };
    auto block_neighbors = [&](Vertex v) {
        std::vector<Vertex> out;
        for (const auto& nb : g.neighbors(v)) {
            if (std::binary_search(b.edges.begin(), b.edges.end(), nb.edge))
                out.push_back(other_end(nb.edge, v));
        }
        return out;
    };
    std::vector<Vertex> order{b.vertices.front()};
    Vertex prev = b.vertices.front();
    Vertex cur = std::min(block_neighbors(prev)[0], block_neighbors(prev)[1]);
    while (cur != order.front()) {
        order.push_back(cur);
        auto nb = block_neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

} // namespace

CycleStructure cycle_structure(const GainGraph& g)
{
    CycleStructure cs;
    const auto blocks = block_decomposition(g);
    std::vector<int> cycle_of(g.vertex_count(), -1);
    std::vector<const Block*> cycle_blocks;

    // A vertex lies on a cycle iff it belongs to a block that is not a bridge.
    std::vector<bool> on_cycle(g.vertex_count(), false);
    for (const auto& b : blocks.blocks) {
        if (b.vertices.size() >= 3)
            for (Vertex v : b.vertices)
                on_cycle[v] = true;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (on_cycle[v])
            cs.cycle_vertices.push_back(v);
    }

    for (const auto& b : blocks.blocks) {
        if (b.edges.size() > b.vertices.size()) {
            cs.vertex_disjoint = false;
            return cs;
        }
        if (!b.is_cycle())
            continue;
        for (Vertex v : b.vertices) {
            if (cycle_of[v] != -1) {
                cs.vertex_disjoint = false;
                return cs;
            }
            cycle_of[v] = static_cast<int>(cycle_blocks.size());
        }
        cycle_blocks.push_back(&b);
    }

    std::vector<std::vector<Vertex>> cycles;
    for (const Block* b : cycle_blocks)
        cycles.push_back(walk_cycle_block(g, *b));

    // Order cycles by smallest vertex; renumber cycle_of to match.
    std::vector<std::size_t> order(cycles.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cycles[a][0] < cycles[b][0]; });
    std::vector<int> rank(cycles.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        cs.cycles.push_back(std::move(cycles[order[i]]));
        rank[order[i]] = static_cast<int>(i);
    }
    for (auto& c : cycle_of) {
        if (c != -1)
            c = rank[static_cast<std::size_t>(c)];
    }

    std::vector<std::size_t> boundary;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        const int cu = cycle_of[e.u];
        const int cv = cycle_of[e.v];
        const bool cycle_edge = cu != -1 && cu == cv;
        if ((cu != -1 || cv != -1) && !cycle_edge)
            boundary.push_back(i);
    }
    cs.boundary_edges = std::move(boundary);

    cs.contraction.assign(g.vertex_count(), 0);
    std::vector<std::optional<Vertex>> cyclic_vertex(cs.cycles.size());
    std::size_t next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (cycle_of[v] == -1) {
            cs.contraction[v] = next++;
            continue;
        }
        auto& slot = cyclic_vertex[static_cast<std::size_t>(cycle_of[v])];
        if (!slot)
            slot = next++;
        cs.contraction[v] = *slot;
    }
    cs.contracted_order = next;
    return cs;
}

GainGraph contracted_graph(const GainGraph& g, const CycleStructure& cs)
{
    if (!cs.vertex_disjoint)
        throw GraphError("cycles are not pairwise vertex-disjoint; no contraction exists");
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Vertex a = cs.contraction[e.u];
        Vertex b = cs.contraction[e.v];
        if (a != b)
            edges.push_back({a, b, Gain{}});
    }
    GainGraph t = GainGraph::from_edges(cs.contracted_order, std::move(edges));
    if (cyclomatic_number(t) != 0)
        throw GraphError("contracted graph is not a forest");
    return t;
}

std::vector<CycleMembership> cycle_membership(const GainGraph& g)
{
    std::vector<CycleMembership> out(g.vertex_count(), CycleMembership::None);
    for (const auto& b : block_decomposition(g).blocks) {
        if (b.vertices.size() < 3)
            continue;
        const bool several = b.edges.size() > b.vertices.size();
        for (Vertex v : b.vertices) {
            if (several || out[v] != CycleMembership::None)
                out[v] = CycleMembership::Several;
            else
                out[v] = CycleMembership::One;
        }
    }
    return out;
}

Gain gain_of_cycle(const GainGraph& g, std::span<const Vertex> cycle)
{
    if (cycle.size() < 3)
        throw GraphError("a cycle needs at least 3 vertices");
    std::vector<Vertex> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw GraphError("cycle repeats a vertex");
    Gain product;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vertex a = cycle[i];
        const Vertex b = cycle[(i + 1) % cycle.size()];
        auto step = g.gain(a, b);
        if (!step)
            throw GraphError("no edge " + pair_text(a, b) + " on cycle");
        product = product * *step;
    }
    return product;
}

InducedSubgraph induced_subgraph(const GainGraph& g, std::span<const Vertex> kept)
{
    InducedSubgraph out;
    out.from_original.assign(g.vertex_count(), std::nullopt);
    std::vector<Vertex> sorted(kept.begin(), kept.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        if (v >= g.vertex_count())
            throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
        out.from_original[v] = out.to_original.size();
        out.to_original.push_back(v);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        auto a = out.from_original[e.u];
        auto b = out.from_original[e.v];
        if (a && b)
            edges.push_back({*a, *b, e.gain});
    }
    out.graph = GainGraph::from_edges(out.to_original.size(), std::move(edges));
    return out;
}

InducedSubgraph delete_vertices(const GainGraph& g, std::span<const Vertex> removed)
{
    std::vector<bool> drop(g.vertex_count(), false);
    for (Vertex v : removed) {
        if (v >= g.vertex_count())
            throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
        drop[v] = true;
    }
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!drop[v])
            kept.push_back(v);
    }
    return induced_subgraph(g, kept);
}

InducedSubgraph delete_vertices(const GainGraph& g, std::initializer_list<Vertex> removed)
{
    return delete_vertices(g, std::span<const Vertex>(removed.begin(), removed.size()));
}

std::vector<Vertex> pendant_vertices(const GainGraph& g)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1)
            out.push_back(v);
    }
    return out;
}

std::vector<Vertex> quasi_pendant_vertices(const GainGraph& g)
{
    std::vector<Vertex> out;
    for (Vertex v : pendant_vertices(g))
        out.push_back(g.neighbors(v)[0].vertex);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> cycle_edge_degree(const GainGraph& g)
{
    std::vector<std::size_t> out(g.vertex_count(), 0);
    for (const auto& b : block_decomposition(g).blocks) {
        if (b.vertices.size() < 3)
            continue;
        for (std::size_t idx : b.edges) {
            ++out[g.edges()[idx].u];
            ++out[g.edges()[idx].v];
        }
    }
    return out;
}

bool has_attached_disjoint_cycles(const GainGraph& g)
{
    const auto cs = cycle_structure(g);
    if (!cs.vertex_disjoint || cs.cycles.empty())
        return false;
    for (const auto& comp : connected_components(g)) {
        std::size_t edges = 0;
        bool all_degree_two = true;
        for (Vertex v : comp) {
            edges += g.degree(v);
            all_degree_two = all_degree_two && g.degree(v) == 2;
        }
        edges /= 2;
        const bool tree = edges + 1 == comp.size();
        const bool cycle = edges == comp.size() && all_degree_two;
        if (!tree && !cycle)
            return true;
    }
    return false;
}

} // namespace gain_inertia
