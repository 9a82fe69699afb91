#pragma once

#include "gain_inertia/gain_graph.hpp"
#include "gain_inertia/theorems.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace gain_inertia {

class GeneratorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by build_extremal when no attempt within the retry budget passes
/// verification.
class RetryExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GainMode { AllOnes, Signed, FourthRoots, UniformAngle };
std::string_view to_string(GainMode m) noexcept;
std::optional<GainMode> parse_gain_mode(std::string_view text);

/// Seedable engine with platform-independent real and integer draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    bool chance(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

/// Seed for the index-th independent stream derived from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

Gain random_gain(Rng& rng, GainMode mode);

/// Erdos-Renyi G(n, p) with gains drawn by `mode`. Deterministic in `seed`.
GainGraph random_gain_graph(std::size_t n, double edge_probability, GainMode mode, std::uint64_t seed);

/// Graph for one fuzz trial: order uniform in [0, n_max], expected average
/// degree uniform in [0.8, 3.5]. Depends only on (seed, trial, n_max, mode).
GainGraph fuzz_graph(std::uint64_t seed, std::uint64_t trial, std::size_t n_max, GainMode mode);

/// C_n with all gains 1 except the closing edge (n-1, 0), chosen so the cycle
/// has type t. Throws GeneratorError on parity mismatch or n < 3.
GainGraph build_typed_cycle(std::size_t n, CycleType t);

struct FamilySpec {
    OptimalityKind kind = OptimalityKind::PLower;
    std::vector<std::size_t> cycle_lengths;
    std::vector<std::size_t> tree_sizes;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kExtremalRetryBudget = 100;

/// Checks cycle-length parity for the kind, and that lengths are >= 3 and tree
/// sizes >= 1. Throws GeneratorError.
void validate_family_spec(const FamilySpec& spec);

/// Connected graph of vertex-disjoint typed cycles hung on a random forest of
/// the given tree sizes. Each attempt is verified with the structural
/// checker; throws RetryExhausted when the budget runs out.
GainGraph build_extremal(const FamilySpec& spec);

struct EnumerationOptions {
    std::optional<std::size_t> min_order; // defaults to max_order
    std::size_t max_order = 0;
    std::vector<FourthRoot> gain_set{FourthRoot::One};
    bool connected_only = false;
    /// All assignments when |E| * log2 |gain_set| <= this, or when there are
    /// at most `sample_count` assignments; otherwise a seeded sample.
    std::size_t exhaustive_bit_limit = 16;
    std::size_t sample_count = 64;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxEnumerationOrder = 7;

/// Labeled simple graphs with gain assignments, produced one at a time.
/// Underlying graphs are visited in order of (order, edge mask).
class GraphEnumerator {
public:
    /// Throws GeneratorError if max_order > kMaxEnumerationOrder or the gain
    /// set is empty.
    explicit GraphEnumerator(EnumerationOptions options);

    std::optional<GainGraph> next();
    /// Underlying graphs visited so far, before the connectivity filter.
    std::size_t underlying_visited() const noexcept { return underlying_visited_; }

private:
    bool advance_underlying();
    void start_assignments();

    EnumerationOptions options_;
    std::size_t order_ = 0;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    std::uint64_t mask_ = 0;
    bool started_ = false;
    bool done_ = false;
    std::size_t underlying_visited_ = 0;
    std::size_t underlying_index_ = 0;

    std::vector<std::pair<Vertex, Vertex>> edges_;
    bool exhaustive_ = true;
    std::uint64_t assignment_ = 0;
    std::uint64_t assignment_total_ = 0;
    std::optional<Rng> sampler_;
};

/// Graphs of order exactly n_max.
GraphEnumerator enumerate_graphs(std::size_t n_max, std::vector<FourthRoot> gain_set, bool connected_only = false,
                                 std::uint64_t seed = 0);

} // namespace gain_inertia
