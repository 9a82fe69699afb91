#pragma once

#include "gain_inertia/gain.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace gain_inertia {

using Vertex = std::size_t;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EdgeSpec {
    Vertex u = 0;
    Vertex v = 0;
    GainSpec gain = FourthRoot::One;
};

/// Stored with u < v; `gain` is the gain of the oriented edge u -> v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Gain gain;
};

struct Neighbor {
    Vertex vertex = 0;
    std::size_t edge = 0; // index into GainGraph::edges()
};

/// Simple undirected graph with a unit complex gain on every oriented edge.
/// The reverse orientation carries the conjugate gain. Immutable.
class GainGraph {
public:
    GainGraph() = default;

    /// Validates vertex range, loops, duplicate pairs and gain modulus.
    /// Throws GraphError (or GainError for a bad gain spec).
    static GainGraph build(std::size_t vertex_count, std::span<const EdgeSpec> edges);
    static GainGraph build(std::size_t vertex_count, std::initializer_list<EdgeSpec> edges)
    {
        return build(vertex_count, std::span<const EdgeSpec>(edges.begin(), edges.size()));
    }
    /// Same validation, for already-constructed gains.
    static GainGraph from_edges(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    std::size_t max_degree() const noexcept;

    bool has_edge(Vertex u, Vertex v) const;
    /// Gain of the oriented edge u -> v, if the edge exists.
    std::optional<Gain> gain(Vertex u, Vertex v) const;
    bool all_gains_exact() const noexcept;

    /// Labeled equality: same order, same edges, gains within 1e-12.
    friend bool operator==(const GainGraph& a, const GainGraph& b);

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

/// Vertex sets in increasing order of their smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const GainGraph& g);
std::size_t component_count(const GainGraph& g);

/// |E| - |V| + number of components.
std::size_t cyclomatic_number(const GainGraph& g);

struct Block {
    std::vector<Vertex> vertices; // sorted
    std::vector<std::size_t> edges; // edge indices, sorted

    bool is_cycle() const noexcept { return vertices.size() >= 3 && vertices.size() == edges.size(); }
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<Vertex> cut_vertices; // sorted
};

/// Biconnected components. Isolated vertices belong to no block.
BlockDecomposition block_decomposition(const GainGraph& g);

struct CycleStructure {
    /// Each cycle as a traversal order starting at its smallest vertex.
    /// Empty unless vertex_disjoint.
    std::vector<std::vector<Vertex>> cycles;
    bool vertex_disjoint = true;
    /// O(G): vertices on at least one cycle, sorted.
    std::vector<Vertex> cycle_vertices;
    /// Edge indices incident to a cycle vertex that are not edges of the
    /// cycle through that vertex. Absent unless vertex_disjoint.
    std::optional<std::vector<std::size_t>> boundary_edges;
    /// Vertex of G -> vertex of the contracted graph. Empty unless vertex_disjoint.
    std::vector<Vertex> contraction;
    std::size_t contracted_order = 0;
};

CycleStructure cycle_structure(const GainGraph& g);

/// The graph obtained by contracting each cycle to one vertex (all gains 1).
/// Throws GraphError when the cycles are not vertex-disjoint.
GainGraph contracted_graph(const GainGraph& g, const CycleStructure& cs);

/// Number of cycles through each vertex, capped at 2.
enum class CycleMembership { None, One, Several };
std::vector<CycleMembership> cycle_membership(const GainGraph& g);

/// Per vertex, the number of incident edges that lie on some cycle. A vertex
/// with at least three such edges lies on two cycles that leave it through
/// different edge pairs.
std::vector<std::size_t> cycle_edge_degree(const GainGraph& g);

/// Product of gains along v0 -> v1 -> ... -> v0. Throws GraphError when the
/// sequence is not a cycle of g.
Gain gain_of_cycle(const GainGraph& g, std::span<const Vertex> cycle);

struct InducedSubgraph {
    GainGraph graph;
    std::vector<Vertex> to_original;                 // new id -> old id
    std::vector<std::optional<Vertex>> from_original; // old id -> new id
};

/// Induced subgraph on V(G) minus `removed`, relabeled contiguously in
/// increasing order of original id.
InducedSubgraph delete_vertices(const GainGraph& g, std::span<const Vertex> removed);
InducedSubgraph delete_vertices(const GainGraph& g, std::initializer_list<Vertex> removed);
InducedSubgraph induced_subgraph(const GainGraph& g, std::span<const Vertex> kept);

std::vector<Vertex> pendant_vertices(const GainGraph& g);
std::vector<Vertex> quasi_pendant_vertices(const GainGraph& g);

/// At least one cycle, cycles pairwise vertex-disjoint, and not a disjoint
/// union of cycles and trees (some component is neither).
bool has_attached_disjoint_cycles(const GainGraph& g);

struct GraphInvariants {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::size_t component_count = 0;
    std::size_t cyclomatic = 0;
    std::size_t matching = 0;
    std::vector<Vertex> pendant_vertices;
    std::vector<Vertex> quasi_pendant_vertices;
};

} // namespace gain_inertia
