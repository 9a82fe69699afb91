#include "gain_inertia/generators.hpp"

#include "gain_inertia/matching.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace gain_inertia {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

FourthRoot sign_power(std::size_t exponent) noexcept
{
    return exponent % 2 == 0 ? FourthRoot::One : FourthRoot::MinusOne;
}

/// Gain phi(C) that gives a cycle of length n the type t.
FourthRoot target_cycle_gain(std::size_t n, CycleType t)
{
    switch (t) {
    case CycleType::A: return sign_power(n / 2);
    case CycleType::B: return multiply(FourthRoot::MinusOne, sign_power(n / 2));
    case CycleType::C: return sign_power((n - 1) / 2);
    case CycleType::D: return multiply(FourthRoot::MinusOne, sign_power((n - 1) / 2));
    case CycleType::E: return multiply(FourthRoot::I, sign_power((n - 1) / 2));
    }
    return FourthRoot::One;
}

FourthRoot random_root(Rng& rng)
{
    return static_cast<FourthRoot>(rng.below(4));
}

bool connected_mask(std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& pairs, std::uint64_t mask)
{
    if (order <= 1)
        return true;
    std::vector<std::size_t> parent(order);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t parts = order;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!(mask >> i & 1U))
            continue;
        auto a = find(pairs[i].first);
        auto b = find(pairs[i].second);
        if (a != b) {
            parent[a] = b;
            --parts;
        }
    }
    return parts == 1;
}

std::optional<GainGraph> extremal_attempt(const FamilySpec& spec, Rng& rng)
{
    const CycleType type = required_cycle_type(spec.kind);
    std::vector<Edge> edges;
    std::size_t next_vertex = 0;

    // Cycles first: vertices [start, start + len).
    std::vector<std::pair<Vertex, std::size_t>> cycles;
    for (std::size_t len : spec.cycle_lengths) {
        const Vertex start = next_vertex;
        next_vertex += len;
        Gain product;
        for (std::size_t i = 0; i + 1 < len; ++i) {
            const Gain gi = random_root(rng);
            product = product * gi;
            edges.push_back({start + i, start + i + 1, gi});
        }
        const Gain closing = Gain(target_cycle_gain(len, type)) * product.conj();
        edges.push_back({start + len - 1, start, closing});
        cycles.emplace_back(start, len);
    }

    if (spec.tree_sizes.empty()) {
        if (cycles.size() > 1)
            return std::nullopt;
        return GainGraph::from_edges(next_vertex, std::move(edges));
    }

    // Random recursive trees joined into one tree by random edges.
    std::vector<Vertex> tree_vertices;
    for (std::size_t size : spec.tree_sizes) {
        const Vertex root = next_vertex;
        for (std::size_t i = 0; i < size; ++i) {
            const Vertex v = next_vertex++;
            if (i > 0)
                edges.push_back({root + rng.below(i), v, random_root(rng)});
        }
        if (!tree_vertices.empty())
            edges.push_back({tree_vertices[rng.below(tree_vertices.size())], root + rng.below(size), random_root(rng)});
        for (std::size_t i = 0; i < size; ++i)
            tree_vertices.push_back(root + i);
    }

    // Hang each cycle on a vertex saturated by every maximum matching of the
    // contracted tree built so far (cyclic vertices included).
    std::vector<Vertex> contracted_id(next_vertex, 0);
    std::vector<Edge> contracted_edges;
    std::size_t contracted_order = 0;
    for (Vertex v : tree_vertices)
        contracted_id[v] = contracted_order++;
    for (const Edge& e : edges) {
        const bool tree_edge = std::find(tree_vertices.begin(), tree_vertices.end(), e.u) != tree_vertices.end();
        if (tree_edge)
            contracted_edges.push_back({contracted_id[e.u], contracted_id[e.v], Gain{}});
    }
    for (auto [start, len] : cycles) {
        const GainGraph current = GainGraph::from_edges(contracted_order, contracted_edges);
        std::vector<Vertex> candidates;
        for (Vertex v : tree_vertices) {
            if (every_max_matching_saturates(current, contracted_id[v]))
                candidates.push_back(v);
        }
        if (candidates.empty())
            return std::nullopt;
        const Vertex anchor = candidates[rng.below(candidates.size())];
        const Vertex on_cycle = start + rng.below(len);
        edges.push_back({on_cycle, anchor, random_root(rng)});
        contracted_edges.push_back({contracted_id[anchor], contracted_order++, Gain{}});
    }
    return GainGraph::from_edges(next_vertex, std::move(edges));
}

} // namespace

std::string_view to_string(GainMode m) noexcept
{
    switch (m) {
    case GainMode::AllOnes: return "all_ones";
    case GainMode::Signed: return "signed";
    case GainMode::FourthRoots: return "fourth_roots";
    case GainMode::UniformAngle: return "uniform_angle";
    }
    return "?";
}

std::optional<GainMode> parse_gain_mode(std::string_view text)
{
    std::string norm;
    for (char ch : text)
        norm.push_back(ch == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (norm == "all_ones")
        return GainMode::AllOnes;
    if (norm == "signed")
        return GainMode::Signed;
    if (norm == "fourth_roots")
        return GainMode::FourthRoots;
    if (norm == "uniform_angle")
        return GainMode::UniformAngle;
    return std::nullopt;
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    // Rejection keeps the draw unbiased and independent of the library.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept
{
    return splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ULL + 1));
}

Gain random_gain(Rng& rng, GainMode mode)
{
    switch (mode) {
    case GainMode::AllOnes: return FourthRoot::One;
    case GainMode::Signed: return rng.below(2) == 0 ? FourthRoot::One : FourthRoot::MinusOne;
    case GainMode::FourthRoots: return random_root(rng);
    case GainMode::UniformAngle: {
        const double theta = 2.0 * std::numbers::pi * rng.uniform01();
        return Gain::from_complex({std::cos(theta), std::sin(theta)});
    }
    }
    return FourthRoot::One;
}

GainGraph random_gain_graph(std::size_t n, double edge_probability, GainMode mode, std::uint64_t seed)
{
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw GeneratorError("edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.chance(edge_probability))
                edges.push_back({u, v, random_gain(rng, mode)});
        }
    }
    return GainGraph::from_edges(n, std::move(edges));
}

GainGraph fuzz_graph(std::uint64_t seed, std::uint64_t trial, std::size_t n_max, GainMode mode)
{
    Rng rng(derive_seed(seed, trial));
    const std::size_t n = rng.below(n_max + 1);
    const double degree = 0.8 + 2.7 * rng.uniform01();
    const double p = n < 2 ? 0.0 : std::min(1.0, degree / static_cast<double>(n - 1));
    return random_gain_graph(n, p, mode, derive_seed(~seed, trial));
}

GainGraph build_typed_cycle(std::size_t n, CycleType t)
{
    if (n < 3)
        throw GeneratorError("a cycle needs at least 3 vertices");
    if (!type_matches_parity(n, t))
        throw GeneratorError("cycle type " + std::string(to_string(t)) + " needs "
                             + (n % 2 == 0 ? "an odd" : "an even") + " length, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1, FourthRoot::One});
    edges.push_back({n - 1, 0, target_cycle_gain(n, t)});
    return GainGraph::from_edges(n, std::move(edges));
}

void validate_family_spec(const FamilySpec& spec)
{
    const CycleType t = required_cycle_type(spec.kind);
    for (std::size_t len : spec.cycle_lengths) {
        if (len < 3)
            throw GeneratorError("cycle length " + std::to_string(len) + " is below 3");
        if (!type_matches_parity(len, t))
            throw GeneratorError(std::string(to_string(spec.kind)) + " needs "
                                 + (t == CycleType::A ? "even" : "odd") + " cycle lengths, got "
                                 + std::to_string(len));
    }
    for (std::size_t size : spec.tree_sizes) {
        if (size == 0)
            throw GeneratorError("tree sizes must be positive");
    }
}

GainGraph build_extremal(const FamilySpec& spec)
{
    validate_family_spec(spec);
    for (std::size_t attempt = 0; attempt < kExtremalRetryBudget; ++attempt) {
        Rng rng(derive_seed(spec.seed, attempt));
        auto g = extremal_attempt(spec, rng);
        if (g && component_count(*g) <= 1 && check_structural(*g, spec.kind))
            return *g;
    }
    throw RetryExhausted("no graph satisfying the " + std::string(to_string(spec.kind)) + " conditions after "
                         + std::to_string(kExtremalRetryBudget) + " attempts");
}

GraphEnumerator::GraphEnumerator(EnumerationOptions options)
    : options_(std::move(options))
{
    if (options_.max_order > kMaxEnumerationOrder)
        throw GeneratorError("enumeration is limited to order " + std::to_string(kMaxEnumerationOrder));
    if (options_.gain_set.empty())
        throw GeneratorError("gain set is empty");
    if (!options_.min_order)
        options_.min_order = options_.max_order;
    if (*options_.min_order > options_.max_order)
        throw GeneratorError("minimum order exceeds maximum order");
    order_ = *options_.min_order;
}

bool GraphEnumerator::advance_underlying()
{
    while (!done_) {
        if (!started_) {
            started_ = true;
            pairs_.clear();
            for (Vertex u = 0; u < order_; ++u) {
                for (Vertex v = u + 1; v < order_; ++v)
                    pairs_.emplace_back(u, v);
            }
            mask_ = 0;
        } else if (mask_ + 1 < (std::uint64_t{1} << pairs_.size())) {
            ++mask_;
        } else {
            if (order_ == options_.max_order) {
                done_ = true;
                return false;
            }
            ++order_;
            started_ = false;
            continue;
        }
        ++underlying_visited_;
        ++underlying_index_;
        if (options_.connected_only && (order_ == 0 || !connected_mask(order_, pairs_, mask_)))
            continue;
        edges_.clear();
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if (mask_ >> i & 1U)
                edges_.push_back(pairs_[i]);
        }
        start_assignments();
        return true;
    }
    return false;
}

void GraphEnumerator::start_assignments()
{
    const std::size_t k = options_.gain_set.size();
    const double bits = static_cast<double>(edges_.size()) * std::log2(static_cast<double>(k));
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t i = 0; i < edges_.size() && small; ++i) {
        total *= k;
        small = total <= options_.sample_count;
    }
    exhaustive_ = small || bits <= static_cast<double>(options_.exhaustive_bit_limit) + 1e-9;
    assignment_ = 0;
    if (exhaustive_) {
        assignment_total_ = 1;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            assignment_total_ *= k;
        sampler_.reset();
    } else {
        assignment_total_ = options_.sample_count;
        sampler_.emplace(derive_seed(derive_seed(options_.seed, order_), mask_));
    }
}

std::optional<GainGraph> GraphEnumerator::next()
{
    if (!started_ || assignment_ >= assignment_total_) {
        if (!advance_underlying())
            return std::nullopt;
    }
    const std::size_t k = options_.gain_set.size();
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    std::uint64_t code = assignment_;
    for (const auto& [u, v] : edges_) {
        std::size_t pick;
        if (exhaustive_) {
            pick = code % k;
            code /= k;
        } else {
            pick = sampler_->below(k);
        }
        edges.push_back({u, v, options_.gain_set[pick]});
    }
    ++assignment_;
    return GainGraph::from_edges(order_, std::move(edges));
}

GraphEnumerator enumerate_graphs(std::size_t n_max, std::vector<FourthRoot> gain_set, bool connected_only,
                                 std::uint64_t seed)
{
    EnumerationOptions opts;
    opts.max_order = n_max;
    opts.gain_set = std::move(gain_set);
    opts.connected_only = connected_only;
    opts.seed = seed;
    return GraphEnumerator(std::move(opts));
}

} // namespace gain_inertia
