#pragma once

#include "gain_inertia/gain_graph.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace gain_inertia {

class MatchingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct MatchingResult {
    std::size_t size = 0;
    std::vector<std::pair<Vertex, Vertex>> edges; // (u, v) with u < v, sorted
    std::vector<Vertex> saturated;               // sorted
};

/// Maximum cardinality matching by Edmonds' blossom algorithm. Vertices are
/// scanned in id order, so the result is deterministic.
MatchingResult max_matching(const GainGraph& g);
std::size_t matching_number(const GainGraph& g);

inline constexpr std::size_t kBruteForceEdgeLimit = 24;

/// Exhaustive search over edge subsets; throws MatchingError above
/// kBruteForceEdgeLimit edges.
std::size_t matching_number_bruteforce(const GainGraph& g);

/// True iff some maximum matching of g uses no edge of `forbidden`, i.e.
/// m(g - forbidden) == m(g). Throws MatchingError for a non-edge.
bool exists_max_matching_avoiding(const GainGraph& g, std::span<const std::pair<Vertex, Vertex>> forbidden);
bool exists_max_matching_avoiding_edges(const GainGraph& g, std::span<const std::size_t> forbidden_edges);

/// True iff m(g - v) == m(g) - 1. Throws MatchingError if v is not a vertex.
bool every_max_matching_saturates(const GainGraph& g, Vertex v);

GraphInvariants graph_invariants(const GainGraph& g);

} // namespace gain_inertia
