// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "gain_inertia/cli.hpp"
#include "gain_inertia/generators.hpp"
#include "gain_inertia/graph_io.hpp"
#include "gain_inertia/matching.hpp"
#include "gain_inertia/report.hpp"
#include "gain_inertia/spectral.hpp"
#include "gain_inertia/theorems.hpp"

#include "oracles.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace gain_inertia;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures; // first few, printed below the line

    void fail(const std::string& what)
    {
        pass = false;
        if (failures.size() < 5)
            failures.push_back(what);
    }
};

// ---- shared suites ----

std::vector<GainGraph> suite_typed_cycles()
{
    std::vector<GainGraph> out;
    for (std::size_t n = 3; n <= 12; ++n)
        for (auto t : {CycleType::A, CycleType::B, CycleType::C, CycleType::D, CycleType::E})
            if (type_matches_parity(n, t))
                out.push_back(build_typed_cycle(n, t));
    return out;
}

constexpr std::size_t kRandomPerMode = 5000;
constexpr std::size_t kRandomMaxOrder = 12;

GainGraph suite_random(std::size_t i)
{
    const GainMode mode = i < kRandomPerMode ? GainMode::FourthRoots : GainMode::UniformAngle;
    return fuzz_graph(kSeed, i, kRandomMaxOrder, mode);
}

// Exhaustive {1,-1} and sampled fourth roots, connected, orders 1..5.
void for_each_enumerated(const std::function<void(const GainGraph&)>& fn)
{
    EnumerationOptions signed_all;
    signed_all.min_order = 1;
    signed_all.max_order = 5;
    signed_all.gain_set = {FourthRoot::One, FourthRoot::MinusOne};
    signed_all.connected_only = true;
    signed_all.exhaustive_bit_limit = 64;
    GraphEnumerator a(signed_all);
    while (auto g = a.next())
        fn(*g);

    EnumerationOptions sampled = signed_all;
    sampled.gain_set = {FourthRoot::One, FourthRoot::I, FourthRoot::MinusOne, FourthRoot::MinusI};
    sampled.exhaustive_bit_limit = 0;
    sampled.sample_count = 64;
    sampled.seed = kSeed;
    GraphEnumerator b(sampled);
    while (auto g = b.next())
        fn(*g);
}

constexpr std::size_t kExtremalCount = 500;

FamilySpec extremal_spec(std::size_t i)
{
    const OptimalityKind kind = kAllKinds[i % 4];
    const bool even = kind == OptimalityKind::PLower || kind == OptimalityKind::NLower;
    Rng rng(derive_seed(kSeed ^ 0xE5, i));
    FamilySpec spec{kind, {}, {}, derive_seed(kSeed, i)};
    const std::size_t cycles = rng.below(4);
    for (std::size_t c = 0; c < cycles; ++c)
        spec.cycle_lengths.push_back(even ? 4 + 2 * rng.below(3) : 3 + 2 * rng.below(3));
    const std::size_t trees = cycles == 1 ? rng.below(4) : 1 + rng.below(3);
    for (std::size_t t = 0; t < trees; ++t)
        spec.tree_sizes.push_back(1 + rng.below(6));
    // A lone single-vertex tree cannot carry a cycle.
    if (cycles > 0 && trees == 1 && spec.tree_sizes[0] == 1)
        spec.tree_sizes[0] = 2;
    return spec;
}

std::string one_line(std::string text)
{
    for (auto& ch : text)
        if (ch == '\n')
            ch = ';';
    return text;
}

// ---- criteria ----

Outcome typed_cycle_table()
{
    Outcome o;
    std::size_t cases = 0;
    for (const auto& g : suite_typed_cycles()) {
        const auto cs = cycle_structure(g);
        const std::size_t n = g.vertex_count();
        const CycleType t = classify_cycle(g, cs.cycles[0]);
        const Inertia got = inertia_exact(g);
        const Inertia want = cycle_inertia_closed_form(n, t);
        ++cases;
        if (!(got == want))
            o.fail("C" + std::to_string(n) + " type " + std::string(to_string(t)));
    }
    o.detail = std::to_string(cases) + " cycles";
    // Five even lengths with types A, B and five odd lengths with C, D, E.
    if (cases != 5 * 2 + 5 * 3)
        o.fail("expected 25 typed cycles, built " + std::to_string(cases));
    return o;
}

Outcome random_bounds()
{
    Outcome o;
    for (std::size_t i = 0; i < 2 * kRandomPerMode; ++i) {
        const auto g = suite_random(i);
        const auto r = check_bounds(g);
        if (r.verdict != Verdict::Holds)
            o.fail("trial " + std::to_string(i) + ": " + one_line(serialize_graph(g)));
    }
    o.detail = std::to_string(2 * kRandomPerMode) + " graphs";
    return o;
}

Outcome exhaustive_equivalence()
{
    Outcome o;
    std::size_t graphs = 0, optimal[4] = {0, 0, 0, 0};
    for_each_enumerated([&](const GainGraph& g) {
        ++graphs;
        const auto a = analyze_graph(g);
        for (std::size_t k = 0; k < 4; ++k) {
            const bool s = structural_conditions(a, kAllKinds[k]);
            const bool p = spectral_conditions(a, kAllKinds[k]);
            optimal[k] += s;
            if (s != p)
                o.fail(std::string(to_string(kAllKinds[k])) + ": " + one_line(serialize_graph(g)));
        }
    });
    o.detail = std::to_string(graphs) + " graphs; optimal p_lower/p_upper/n_lower/n_upper = "
               + std::to_string(optimal[0]) + "/" + std::to_string(optimal[1]) + "/" + std::to_string(optimal[2])
               + "/" + std::to_string(optimal[3]);
    return o;
}

Outcome extremal_outputs()
{
    Outcome o;
    for (std::size_t i = 0; i < kExtremalCount; ++i) {
        const FamilySpec spec = extremal_spec(i);
        try {
            const auto g = build_extremal(spec);
            if (!check_structural(g, spec.kind) || !check_spectral(g, spec.kind))
                o.fail("family " + std::to_string(i) + ": " + one_line(serialize_graph(g)));
        } catch (const std::exception& e) {
            o.fail("family " + std::to_string(i) + ": " + e.what());
        }
    }
    o.detail = std::to_string(kExtremalCount) + " graphs";
    return o;
}

Outcome matching_oracle()
{
    Outcome o;
    std::size_t compared = 0;
    auto compare = [&](const GainGraph& g, const std::string& where) {
        if (g.edge_count() > kBruteForceEdgeLimit)
            return;
        ++compared;
        if (matching_number(g) != matching_number_bruteforce(g))
            o.fail(where + ": " + one_line(serialize_graph(g)));
    };
    for (std::size_t i = 0; i < 2 * kRandomPerMode; ++i)
        compare(suite_random(i), "random " + std::to_string(i));
    for_each_enumerated([&](const GainGraph& g) { compare(g, "enumerated"); });
    for (std::size_t i = 0; i < 2000; ++i)
        compare(fuzz_graph(kSeed + 5, i, 10, GainMode::AllOnes), "extra " + std::to_string(i));
    o.detail = std::to_string(compared) + " graphs with <= " + std::to_string(kBruteForceEdgeLimit) + " edges";
    return o;
}

Outcome inertia_oracle()
{
    Outcome o;
    std::size_t compared = 0;
    auto compare = [&](const GainGraph& g, const std::string& where) {
        if (!g.all_gains_exact())
            return;
        ++compared;
        try {
            const Inertia exact = inertia_exact(g);
            const Inertia fl = inertia_float(adjacency_matrix(g), default_zero_tolerance(g));
            if (!(exact == fl))
                o.fail(where + ": " + one_line(serialize_graph(g)));
        } catch (const SpectralError& e) {
            o.fail(where + ": " + e.what());
        }
    };
    for (const auto& g : suite_typed_cycles())
        compare(g, "typed cycle");
    for (std::size_t i = 0; i < 2 * kRandomPerMode; ++i)
        compare(suite_random(i), "random " + std::to_string(i));
    for_each_enumerated([&](const GainGraph& g) { compare(g, "enumerated"); });
    for (std::size_t i = 0; i < kExtremalCount; ++i)
        compare(build_extremal(extremal_spec(i)), "extremal " + std::to_string(i));
    o.detail = std::to_string(compared) + " exact-gain graphs";
    return o;
}

Outcome lemma_suite()
{
    Outcome o;
    std::size_t checks = 0;
    std::size_t two_cycle_vertices = 0, literal_violations = 0;
    for (std::size_t i = 0; i < 2000; ++i) {
        const GainMode mode = i % 2 == 0 ? GainMode::FourthRoots : GainMode::UniformAngle;
        const auto g = fuzz_graph(kSeed + 7, i, 12, mode);
        for (const auto& r : run_invariant_checks(g)) {
            checks += r.verdict == Verdict::Holds;
            if (r.failed())
                o.fail(r.subject + " trial " + std::to_string(i) + ": " + one_line(serialize_graph(g)));
        }
        // The two-cycle clause read literally: any vertex on two distinct
        // cycles (brute-force enumeration) should lower c by at least two.
        const auto through = oracle::cycles_through(g);
        const std::size_t c = cyclomatic_number(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (through[v] < 2)
                continue;
            ++two_cycle_vertices;
            if (cyclomatic_number(delete_vertices(g, {v}).graph) + 2 > c) {
                if (literal_violations++ == 0)
                    o.fail("c(G - v) <= c(G) - 2 for v on two distinct cycles, trial " + std::to_string(i)
                           + " vertex " + std::to_string(v) + ": " + one_line(serialize_graph(g)));
            }
        }
    }

    // Odd vertex-disjoint cycles: m(T_G) = m(G - O(G)) iff some maximum
    // matching avoids F(G); the right side is also checked by the oracle.
    std::size_t odd_graphs = 0;
    EnumerationOptions shapes;
    shapes.min_order = 1;
    shapes.max_order = 6;
    shapes.connected_only = true;
    GraphEnumerator it(shapes);
    while (auto g = it.next()) {
        const auto cs = cycle_structure(*g);
        if (!cs.vertex_disjoint || cs.cycles.empty())
            continue;
        if (std::any_of(cs.cycles.begin(), cs.cycles.end(), [](const auto& c) { return c.size() % 2 == 0; }))
            continue;
        ++odd_graphs;
        const bool equal = matching_number(contracted_graph(*g, cs))
                           == matching_number(delete_vertices(*g, cs.cycle_vertices).graph);
        const bool avoiding = exists_max_matching_avoiding_edges(*g, *cs.boundary_edges);
        std::vector<Edge> kept;
        for (std::size_t e = 0; e < g->edge_count(); ++e)
            if (std::find(cs.boundary_edges->begin(), cs.boundary_edges->end(), e) == cs.boundary_edges->end())
                kept.push_back(g->edges()[e]);
        const bool avoiding_oracle =
            oracle::matching_number(GainGraph::from_edges(g->vertex_count(), kept)) == oracle::matching_number(*g);
        if (equal != avoiding || avoiding != avoiding_oracle)
            o.fail("odd-cycle boundary matching: " + one_line(serialize_graph(*g)));
    }

    // An even cycle joined by one edge to a connected graph adds m(C).
    for (std::size_t i = 0; i < 200; ++i) {
        Rng rng(derive_seed(kSeed + 11, i));
        const std::size_t len = 4 + 2 * rng.below(4);
        GainGraph h;
        do {
            h = random_gain_graph(1 + rng.below(9), 0.45, GainMode::FourthRoots, rng.below(1ull << 40));
        } while (component_count(h) != 1);
        std::vector<Edge> edges(h.edges().begin(), h.edges().end());
        const std::size_t base = h.vertex_count();
        for (Vertex v = 0; v < len; ++v)
            edges.push_back({base + v, base + (v + 1) % len, random_gain(rng, GainMode::FourthRoots)});
        edges.push_back({rng.below(base), base + rng.below(len), Gain{}});
        const auto g = GainGraph::from_edges(base + len, std::move(edges));
        const std::size_t want = len / 2 + oracle::matching_number(h);
        if (matching_number(g) != want || oracle::matching_number(g) != want)
            o.fail("even-cycle attachment " + std::to_string(i) + ": " + one_line(serialize_graph(g)));
    }
    o.detail = std::to_string(checks) + " invariant checks held; two-cycle clause violated at "
               + std::to_string(literal_violations) + " of " + std::to_string(two_cycle_vertices) + " vertices; "
               + std::to_string(odd_graphs)
               + " odd-cycle graphs; 200 even-cycle attachments";
    return o;
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "gain_inertia");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str()};
}

bool report_consistent(const nlohmann::ordered_json& r)
{
    const long p = r["inertia"]["positive"], n = r["inertia"]["negative"], z = r["inertia"]["nullity"];
    const long m = r["matching"], c = r["cyclomatic"];
    const bool holds = m - c <= p && p <= m + c && m - c <= n && n <= m + c;
    return p + n + z == r["vertices"].get<long>() && (r["bounds"]["verdict"] == "holds") == holds
           && r["bounds"]["lower"].get<long>() == m - c && r["bounds"]["upper"].get<long>() == m + c;
}

Outcome cli_integration()
{
    Outcome o;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("gain_inertia_acceptance_" + std::to_string(kSeed));
    fs::create_directories(dir);

    // Round trip on generated and random graphs.
    for (std::size_t i = 0; i < kExtremalCount; ++i) {
        const auto g = build_extremal(extremal_spec(i));
        const auto text = serialize_graph(g);
        const auto back = parse_graph_text(text);
        if (!(back == g) || serialize_graph(back) != text)
            o.fail("round trip extremal " + std::to_string(i));
    }
    for (std::size_t i = 0; i < 2 * kRandomPerMode; i += 10) {
        const auto g = suite_random(i);
        if (!(parse_graph_text(serialize_graph(g)) == g))
            o.fail("round trip random " + std::to_string(i));
    }

    // Report consistency.
    for (std::size_t i = 0; i < 2 * kRandomPerMode; i += 50) {
        const auto j = to_json(build_analysis_report(suite_random(i)));
        if (!report_consistent(j))
            o.fail("inconsistent report for random " + std::to_string(i));
    }

    // Exit codes.
    const auto good = (dir / "good.txt").string();
    const auto bad = (dir / "bad.txt").string();
    std::ofstream(good) << "gaingraph v1\nn 3\ne 0 1 +1\ne 1 2 +1\ne 0 2 +1\n";
    std::ofstream(bad) << "gaingraph v1\nn 3\ne 0 1 +1\ne 1 2 +q\n";
    auto expect_code = [&](std::vector<std::string> args, int code) {
        const auto r = cli(args);
        if (r.code != code) {
            std::string joined;
            for (const auto& a : args)
                joined += a + " ";
            o.fail(joined + "-> " + std::to_string(r.code) + ", expected " + std::to_string(code));
        }
        return r;
    };
    const auto analyzed = expect_code({"analyze", "--strict", good}, 0);
    if (analyzed.code == 0 && !report_consistent(nlohmann::ordered_json::parse(analyzed.out)))
        o.fail("analyze report inconsistent");
    expect_code({"analyze", bad}, 2);
    expect_code({"analyze", (dir / "missing.txt").string()}, 3);
    expect_code({"fuzz", "--trials", "1", "--n-max", "0", "--mode", "all_ones", "--seed", "1"}, 0);
    expect_code({"enumerate", "--n-max", "8"}, 2);
    expect_code({"generate", "--kind", "plower", "--cycles", "3"}, 2);
    expect_code({"generate", "--kind", "pupper", "--cycles", "3,5"}, 4);
    const auto out = (dir / "gen.txt").string();
    expect_code({"generate", "--kind", "plower", "--cycles", "4", "--trees", "2", "--seed", "1", "--out", out}, 0);
    const auto gen = expect_code({"analyze", "--strict", out}, 0);
    if (gen.code == 0) {
        const auto j = nlohmann::ordered_json::parse(gen.out);
        if (j["optimality"]["p_lower"]["structural"] != true || j["optimality"]["p_lower"]["spectral"] != true)
            o.fail("generated p-lower graph not reported optimal");
    }

    const auto e = expect_code({"enumerate", "--n-max", "5", "--gain-set", "+1,-1", "--kind", "all"}, 0);
    long graphs = -1, mismatches = -1;
    if (e.code == 0) {
        const auto j = nlohmann::ordered_json::parse(e.out);
        graphs = j["graphs"];
        mismatches = j["mismatches"];
        if (mismatches != 0)
            o.fail("enumerate reported mismatches");
    }
    fs::remove_all(dir);
    o.detail = "enumerate 5 {+1,-1}: " + std::to_string(graphs) + " graphs, " + std::to_string(mismatches)
               + " mismatches";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    Outcome (*run)();
};

} // namespace

int main()
{
    const Criterion criteria[] = {
        {1, "typed cycle inertia equals closed form, n = 3..12", 1, typed_cycle_table},
        {2, "inertia bounds on 10000 random graphs", 60, random_bounds},
        {3, "structural and spectral optimality agree on enumerated graphs", 300, exhaustive_equivalence},
        {4, "constructed extremal graphs are optimal on both sides", 60, extremal_outputs},
        {5, "blossom matching equals brute force", 60, matching_oracle},
        {6, "floating inertia equals exact inertia", 60, inertia_oracle},
        {7, "matching, cyclomatic and inertia lemma suite", 120, lemma_suite},
        {8, "command line round trip, exit codes and reports", 300, cli_integration},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds)
            o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s");
        std::printf("[%s] criterion %d: %s (%s; %.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    secs);
        for (const auto& f : o.failures)
            std::printf("       %s\n", f.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
