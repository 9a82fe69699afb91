#pragma once

// Slow, independent reference implementations used only by tests.

#include "gain_inertia/gain_graph.hpp"
#include "gain_inertia/spectral.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using gain_inertia::GainGraph;
using gain_inertia::Vertex;

/// Every simple cycle once, as a vertex sequence starting at its smallest
/// vertex. Exponential; meant for n <= 10.
std::vector<std::vector<Vertex>> simple_cycles(const GainGraph& g);

/// Number of distinct simple cycles through each vertex.
std::vector<std::size_t> cycles_through(const GainGraph& g);

/// Maximum matching size by memoized search over vertex subsets (n <= 20).
std::size_t matching_number(const GainGraph& g);

/// Eigenvalues of the Hermitian adjacency matrix via cyclic Jacobi on the real
/// 2n x 2n embedding, every eigenvalue counted once.
std::vector<double> eigenvalues(const GainGraph& g);

gain_inertia::Inertia inertia(const GainGraph& g, double tol = 1e-8);

/// det(xI - A) by permutation expansion; coefficient k multiplies x^k.
/// Gains must be fourth roots of unity; n <= 8.
std::vector<std::int64_t> char_poly(const GainGraph& g);

/// Components by breadth-first search.
std::size_t component_count(const GainGraph& g);

} // namespace oracle
