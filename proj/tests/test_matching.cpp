#include "gain_inertia/generators.hpp"
#include "gain_inertia/matching.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace gain_inertia;

namespace {

GainGraph petersen()
{
    std::vector<EdgeSpec> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({i + 5, (i + 2) % 5 + 5});
    }
    return GainGraph::build(10, e);
}

void expect_valid(const GainGraph& g, const MatchingResult& m)
{
    std::set<Vertex> used;
    for (auto [u, v] : m.edges) {
        EXPECT_TRUE(g.has_edge(u, v));
        EXPECT_TRUE(used.insert(u).second);
        EXPECT_TRUE(used.insert(v).second);
    }
    EXPECT_EQ(m.edges.size(), m.size);
    EXPECT_EQ(std::vector<Vertex>(used.begin(), used.end()), m.saturated);
}

} // namespace

TEST(Matching, KnownValues)
{
    EXPECT_EQ(matching_number(GainGraph::build(0, {})), 0u);
    EXPECT_EQ(matching_number(GainGraph::build(3, {{0, 1}, {1, 2}, {0, 2}})), 1u);
    EXPECT_EQ(matching_number(GainGraph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}})), 3u);
    EXPECT_EQ(matching_number(GainGraph::build(4, {{0, 1}, {0, 2}, {0, 3}})), 1u);
    const auto p = petersen();
    EXPECT_EQ(matching_number(p), 5u);
    EXPECT_EQ(matching_number_bruteforce(p), 5u);
    expect_valid(p, max_matching(p));
}

TEST(Matching, BlossomNeedsContraction)
{
    // Triangle 1-2-3 with stems 0-1 and 3-4; greedy 1-2 must be undone.
    const auto g = GainGraph::build(6, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {3, 4}, {2, 5}});
    EXPECT_EQ(matching_number(g), 3u);
    expect_valid(g, max_matching(g));
}

TEST(Matching, BruteForceLimit)
{
    EXPECT_THROW(matching_number_bruteforce(random_gain_graph(12, 0.8, GainMode::AllOnes, 1)), MatchingError);
}

TEST(MatchingProperty, BlossomMatchesOracles)
{
    for (std::uint64_t trial = 0; trial < 500; ++trial) {
        const auto g = fuzz_graph(21, trial, 14, GainMode::AllOnes);
        const auto m = max_matching(g);
        expect_valid(g, m);
        ASSERT_EQ(m.size, oracle::matching_number(g)) << trial;
        if (g.edge_count() <= kBruteForceEdgeLimit) {
            ASSERT_EQ(m.size, matching_number_bruteforce(g)) << trial;
        }
    }
}

TEST(MatchingProperty, VertexDeletionAndPendants)
{
    for (std::uint64_t trial = 0; trial < 300; ++trial) {
        const auto g = fuzz_graph(22, trial, 11, GainMode::AllOnes);
        const std::size_t m = matching_number(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const std::size_t mv = matching_number(delete_vertices(g, {v}).graph);
            EXPECT_LE(mv, m);
            EXPECT_LE(m, mv + 1);
            EXPECT_EQ(every_max_matching_saturates(g, v), mv + 1 == m);
        }
        for (Vertex x : pendant_vertices(g)) {
            const Vertex y = g.neighbors(x)[0].vertex;
            EXPECT_EQ(m, matching_number(delete_vertices(g, {y}).graph) + 1);
            EXPECT_EQ(m, matching_number(delete_vertices(g, {x, y}).graph) + 1);
        }
    }
}

TEST(Matching, AvoidingEdges)
{
    // Path 0-1-2-3: the middle edge is in no maximum matching, the ends are in all.
    const auto path = GainGraph::build(4, {{0, 1}, {1, 2}, {2, 3}});
    const std::pair<Vertex, Vertex> middle[] = {{1, 2}};
    const std::pair<Vertex, Vertex> end[] = {{0, 1}};
    const std::pair<Vertex, Vertex> missing[] = {{0, 3}};
    EXPECT_TRUE(exists_max_matching_avoiding(path, middle));
    EXPECT_FALSE(exists_max_matching_avoiding(path, end));
    EXPECT_THROW(exists_max_matching_avoiding(path, missing), MatchingError);
}

TEST(Matching, EvenCycleAttachmentAdds)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        const std::size_t len = 4 + 2 * rng.below(4);
        GainGraph h;
        do {
            h = random_gain_graph(1 + rng.below(8), 0.5, GainMode::AllOnes, rng.below(1u << 30));
        } while (component_count(h) != 1);
        std::vector<Edge> edges(h.edges().begin(), h.edges().end());
        const std::size_t base = h.vertex_count();
        for (Vertex i = 0; i < len; ++i)
            edges.push_back({base + i, base + (i + 1) % len, Gain{}});
        edges.push_back({rng.below(base), base + rng.below(len), Gain{}});
        const auto g = GainGraph::from_edges(base + len, edges);
        EXPECT_EQ(matching_number(g), len / 2 + matching_number(h));
    }
}
