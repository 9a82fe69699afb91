#include "gain_inertia/theorems.hpp"

#include "gain_inertia/graph_io.hpp"
#include "gain_inertia/matching.hpp"

#include <algorithm>
#include <cctype>

namespace gain_inertia {

namespace {

using ll = long long;

ll as_ll(std::size_t x)
{
    return static_cast<ll>(x);
}

struct Numbers {
    Inertia inertia;
    std::size_t matching = 0;
    std::size_t cyclomatic = 0;

    ll lower() const { return as_ll(matching) - as_ll(cyclomatic); }
    ll upper() const { return as_ll(matching) + as_ll(cyclomatic); }
    bool p_lower() const { return as_ll(inertia.positive) == lower(); }
    bool p_upper() const { return as_ll(inertia.positive) == upper(); }
};

Numbers numbers_of(const GainGraph& g)
{
    return {inertia(g), matching_number(g), cyclomatic_number(g)};
}

class ReportBuilder {
public:
    explicit ReportBuilder(std::string subject) { report_.subject = std::move(subject); }

    ReportBuilder& value(std::string name, ll v)
    {
        report_.values.emplace_back(std::move(name), v);
        return *this;
    }

    /// Records a failed expectation; the first failure sets the witness.
    void expect(bool ok, const GainGraph& g, std::vector<Vertex> where, std::string what)
    {
        applicable_ = true;
        if (ok || report_.witness)
            return;
        report_.witness = Witness{serialize_graph(g), std::move(where)};
        report_.note = std::move(what);
    }

    void applicable() { applicable_ = true; }

    TheoremReport finish(std::string skip_reason = {})
    {
        if (!applicable_) {
            report_.verdict = Verdict::Skipped;
            report_.note = std::move(skip_reason);
        } else {
            report_.verdict = report_.witness ? Verdict::Fails : Verdict::Holds;
        }
        return std::move(report_);
    }

private:
    TheoremReport report_;
    bool applicable_ = false;
};

void require_connected(const GainGraph& g)
{
    if (component_count(g) > 1)
        throw TheoremError("optimality checkers need a connected graph");
}

std::vector<Vertex> cycle_vertex_list(const GainGraph& g)
{
    std::vector<Vertex> out;
    const auto membership = cycle_membership(g);
    for (Vertex v = 0; v < membership.size(); ++v) {
        if (membership[v] != CycleMembership::None)
            out.push_back(v);
    }
    return out;
}

GainGraph minus(const GainGraph& g, std::initializer_list<Vertex> removed)
{
    return delete_vertices(g, removed).graph;
}

} // namespace

std::string_view to_string(CycleType t) noexcept
{
    switch (t) {
    case CycleType::A: return "A";
    case CycleType::B: return "B";
    case CycleType::C: return "C";
    case CycleType::D: return "D";
    case CycleType::E: return "E";
    }
    return "?";
}

std::string_view to_string(OptimalityKind k) noexcept
{
    switch (k) {
    case OptimalityKind::PLower: return "p_lower";
    case OptimalityKind::PUpper: return "p_upper";
    case OptimalityKind::NLower: return "n_lower";
    case OptimalityKind::NUpper: return "n_upper";
    }
    return "?";
}

std::optional<OptimalityKind> parse_kind(std::string_view text)
{
    std::string norm;
    for (char ch : text) {
        if (ch != '-' && ch != '_')
            norm.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    if (norm == "plower")
        return OptimalityKind::PLower;
    if (norm == "pupper")
        return OptimalityKind::PUpper;
    if (norm == "nlower")
        return OptimalityKind::NLower;
    if (norm == "nupper")
        return OptimalityKind::NUpper;
    return std::nullopt;
}

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Skipped: return "skipped";
    }
    return "?";
}

std::string_view to_string(GainSubgroup s) noexcept
{
    switch (s) {
    case GainSubgroup::Simple: return "simple";
    case GainSubgroup::Signed: return "signed";
    case GainSubgroup::Mixed: return "mixed";
    case GainSubgroup::General: return "general";
    }
    return "?";
}

CycleType required_cycle_type(OptimalityKind k) noexcept
{
    switch (k) {
    case OptimalityKind::PLower:
    case OptimalityKind::NLower: return CycleType::A;
    case OptimalityKind::PUpper: return CycleType::C;
    case OptimalityKind::NUpper: return CycleType::D;
    }
    return CycleType::A;
}

bool type_matches_parity(std::size_t length, CycleType t) noexcept
{
    const bool even = length % 2 == 0;
    return (t == CycleType::A || t == CycleType::B) == even;
}

CycleType classify_cycle_gain(std::size_t length, const Gain& cycle_gain, double re_tol)
{
    if (length < 3)
        throw TheoremError("a cycle has at least 3 vertices");
    if (length % 2 == 0) {
        const FourthRoot target = (length / 2) % 2 == 0 ? FourthRoot::One : FourthRoot::MinusOne;
        if (auto r = cycle_gain.exact())
            return *r == target ? CycleType::A : CycleType::B;
        return std::abs(cycle_gain.value() - to_complex(target)) < re_tol ? CycleType::A : CycleType::B;
    }
    const FourthRoot sign = ((length - 1) / 2) % 2 == 0 ? FourthRoot::One : FourthRoot::MinusOne;
    const Gain rotated = Gain(sign) * cycle_gain;
    if (auto r = rotated.exact()) {
        switch (*r) {
        case FourthRoot::One: return CycleType::C;
        case FourthRoot::MinusOne: return CycleType::D;
        default: return CycleType::E;
        }
    }
    const double re = rotated.value().real();
    if (std::abs(re) < re_tol)
        return CycleType::E;
    return re > 0.0 ? CycleType::C : CycleType::D;
}

CycleType classify_cycle(const GainGraph& g, std::span<const Vertex> cycle, double re_tol)
{
    Gain phi;
    try {
        phi = gain_of_cycle(g, cycle);
    } catch (const GraphError& e) {
        throw TheoremError(e.what());
    }
    return classify_cycle_gain(cycle.size(), phi, re_tol);
}

Inertia cycle_inertia_closed_form(std::size_t n, CycleType t)
{
    if (n < 3)
        throw TheoremError("a cycle has at least 3 vertices");
    if (!type_matches_parity(n, t))
        throw TheoremError("cycle type " + std::string(to_string(t)) + " does not fit length " + std::to_string(n));
    Inertia out;
    switch (t) {
    case CycleType::A: out.positive = out.negative = (n - 2) / 2; break;
    case CycleType::B: out.positive = out.negative = n / 2; break;
    case CycleType::C:
        out.positive = (n + 1) / 2;
        out.negative = (n - 1) / 2;
        break;
    case CycleType::D:
        out.positive = (n - 1) / 2;
        out.negative = (n + 1) / 2;
        break;
    case CycleType::E: out.positive = out.negative = (n - 1) / 2; break;
    }
    out.zero = n - out.positive - out.negative;
    return out;
}

GraphAnalysis analyze_graph(const GainGraph& g, double re_tol)
{
    GraphAnalysis a;
    a.inertia = inertia(g);
    a.matching = matching_number(g);
    a.components = component_count(g);
    a.cyclomatic = g.edge_count() + a.components - g.vertex_count();
    a.cycles = cycle_structure(g);
    if (a.cycles.vertex_disjoint) {
        for (const auto& c : a.cycles.cycles)
            a.cycle_types.push_back(classify_cycle(g, c, re_tol));
        a.contracted_matching = matching_number(contracted_graph(g, a.cycles));
        a.outside_matching = matching_number(delete_vertices(g, a.cycles.cycle_vertices).graph);
    }
    return a;
}

bool structural_conditions(const GraphAnalysis& a, OptimalityKind k) noexcept
{
    if (!a.cycles.vertex_disjoint)
        return false;
    const CycleType want = required_cycle_type(k);
    if (!std::all_of(a.cycle_types.begin(), a.cycle_types.end(), [&](CycleType t) { return t == want; }))
        return false;
    return a.contracted_matching == a.outside_matching;
}

bool spectral_conditions(const GraphAnalysis& a, OptimalityKind k) noexcept
{
    const ll p = as_ll(a.inertia.positive);
    const ll n = as_ll(a.inertia.negative);
    switch (k) {
    case OptimalityKind::PLower: return p == a.lower_bound();
    case OptimalityKind::PUpper: return p == a.upper_bound();
    case OptimalityKind::NLower: return n == a.lower_bound();
    case OptimalityKind::NUpper: return n == a.upper_bound();
    }
    return false;
}

TheoremReport check_bounds(const GainGraph& g)
{
    ReportBuilder report("inertia-bounds");
    report.applicable();
    Numbers total;
    for (const auto& comp : connected_components(g)) {
        const auto sub = induced_subgraph(g, comp);
        const Numbers part = numbers_of(sub.graph);
        const ll p = as_ll(part.inertia.positive);
        const ll n = as_ll(part.inertia.negative);
        report.expect(part.lower() <= p && p <= part.upper() && part.lower() <= n && n <= part.upper(), g, comp,
                      "component violates m - c <= p, n <= m + c");
        total.inertia.positive += part.inertia.positive;
        total.inertia.negative += part.inertia.negative;
        total.inertia.zero += part.inertia.zero;
        total.matching += part.matching;
        total.cyclomatic += part.cyclomatic;
    }
    const ll p = as_ll(total.inertia.positive);
    const ll n = as_ll(total.inertia.negative);
    report.value("matching", as_ll(total.matching))
        .value("cyclomatic", as_ll(total.cyclomatic))
        .value("positive", p)
        .value("negative", n)
        .value("lower", total.lower())
        .value("upper", total.upper());
    report.expect(total.lower() <= p && p <= total.upper() && total.lower() <= n && n <= total.upper(), g, {},
                  "graph violates m - c <= p, n <= m + c");
    return report.finish();
}

bool check_structural(const GainGraph& g, OptimalityKind k)
{
    require_connected(g);
    return structural_conditions(analyze_graph(g), k);
}

bool check_spectral(const GainGraph& g, OptimalityKind k)
{
    require_connected(g);
    const Numbers num = numbers_of(g);
    GraphAnalysis a;
    a.inertia = num.inertia;
    a.matching = num.matching;
    a.cyclomatic = num.cyclomatic;
    return spectral_conditions(a, k);
}

TheoremReport verify_characterization(const GainGraph& g, const GraphAnalysis& a, OptimalityKind k)
{
    require_connected(g);
    ReportBuilder report("characterization-" + std::string(to_string(k)));
    const bool structural = structural_conditions(a, k);
    const bool spectral = spectral_conditions(a, k);
    report.value("structural", structural)
        .value("spectral", spectral)
        .value("positive", as_ll(a.inertia.positive))
        .value("negative", as_ll(a.inertia.negative))
        .value("matching", as_ll(a.matching))
        .value("cyclomatic", as_ll(a.cyclomatic));
    report.expect(structural == spectral, g, {}, "structural and spectral optimality disagree");
    return report.finish();
}

TheoremReport verify_characterization(const GainGraph& g, OptimalityKind k)
{
    require_connected(g);
    return verify_characterization(g, analyze_graph(g), k);
}

GainSubgroup gain_subgroup(const GainGraph& g)
{
    auto within = [&](std::initializer_list<FourthRoot> allowed) {
        return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
            auto r = e.gain.exact();
            return r && std::find(allowed.begin(), allowed.end(), *r) != allowed.end();
        });
    };
    if (within({FourthRoot::One}))
        return GainSubgroup::Simple;
    if (within({FourthRoot::One, FourthRoot::MinusOne}))
        return GainSubgroup::Signed;
    // Both orientations of an edge must lie in the set, and {1,i,-i} is closed
    // under conjugation, so checking the stored orientation suffices.
    if (within({FourthRoot::One, FourthRoot::I, FourthRoot::MinusI}))
        return GainSubgroup::Mixed;
    return GainSubgroup::General;
}

std::vector<TheoremReport> run_invariant_checks(const GainGraph& g)
{
    std::vector<TheoremReport> out;
    const std::size_t order = g.vertex_count();
    const Numbers base = numbers_of(g);
    const auto membership = cycle_membership(g);

    std::vector<Numbers> without(order);
    for (Vertex v = 0; v < order; ++v)
        without[v] = numbers_of(minus(g, {v}));

    {
        ReportBuilder r("inertia-order-sum");
        r.value("order", as_ll(order)).value("sum", as_ll(base.inertia.order()));
        r.expect(base.inertia.order() == order, g, {}, "p + n + nullity differs from the order");
        out.push_back(r.finish());
    }
    {
        ReportBuilder r("matching-vertex-deletion");
        for (Vertex v = 0; v < order; ++v) {
            const ll mv = as_ll(without[v].matching);
            const ll m = as_ll(base.matching);
            r.expect(m - 1 <= mv && mv <= m, g, {v}, "m(G) - 1 <= m(G - v) <= m(G) fails");
        }
        out.push_back(r.finish("no vertices"));
    }
    {
        // A vertex on several cycles that all pass through the same two edges
        // (a degree-2 vertex inside a theta) only lowers c by one, so the
        // two-step drop is checked for vertices with three or more cycle edges.
        ReportBuilder r("cyclomatic-vertex-deletion");
        const auto cycle_degree = cycle_edge_degree(g);
        for (Vertex v = 0; v < order; ++v) {
            const ll c = as_ll(base.cyclomatic);
            const ll cv = as_ll(without[v].cyclomatic);
            if (membership[v] == CycleMembership::None)
                r.expect(cv == c, g, {v}, "c(G - v) != c(G) off every cycle");
            else if (cycle_degree[v] >= 3)
                r.expect(cv <= c - 2, g, {v}, "c(G - v) > c(G) - 2 at a vertex with three cycle edges");
            else
                r.expect(cv <= c - 1, g, {v}, "c(G - v) > c(G) - 1 on a cycle");
        }
        out.push_back(r.finish("no vertices"));
    }
    {
        ReportBuilder r("pendant-matching-reduction");
        ReportBuilder s("pendant-inertia-reduction");
        for (Vertex x : pendant_vertices(g)) {
            const Vertex y = g.neighbors(x)[0].vertex;
            const Numbers pair = numbers_of(minus(g, {x, y}));
            r.expect(base.matching == without[y].matching + 1 && base.matching == pair.matching + 1, g, {x, y},
                     "m(G) = m(G - y) + 1 = m(G - x - y) + 1 fails");
            s.expect(base.inertia.positive == without[y].inertia.positive + 1
                         && base.inertia.positive == pair.inertia.positive + 1
                         && base.inertia.negative == without[y].inertia.negative + 1
                         && base.inertia.negative == pair.inertia.negative + 1,
                     g, {x, y}, "pendant reduction of p or n fails");
        }
        out.push_back(r.finish("no pendant vertex"));
        out.push_back(s.finish("no pendant vertex"));
    }
    {
        ReportBuilder r("inertia-vertex-deletion");
        ReportBuilder mono("inertia-induced-monotonicity");
        for (Vertex v = 0; v < order; ++v) {
            const ll p = as_ll(base.inertia.positive);
            const ll n = as_ll(base.inertia.negative);
            const ll pv = as_ll(without[v].inertia.positive);
            const ll nv = as_ll(without[v].inertia.negative);
            r.expect(p - 1 <= pv && pv <= p && n - 1 <= nv && nv <= n, g, {v},
                     "p(G) - 1 <= p(G - v) <= p(G) or the n analogue fails");
            mono.expect(pv <= p && nv <= n, g, {v}, "induced subgraph has larger p or n");
        }
        // Deleting all vertices of one component, or all cycle vertices, gives
        // further induced subgraphs.
        const auto cycle_vertices = cycle_vertex_list(g);
        if (!cycle_vertices.empty()) {
            const Numbers h = numbers_of(delete_vertices(g, cycle_vertices).graph);
            mono.expect(h.inertia.positive <= base.inertia.positive && h.inertia.negative <= base.inertia.negative, g,
                        cycle_vertices, "deleting cycle vertices increased p or n");
        }
        out.push_back(r.finish("no vertices"));
        out.push_back(mono.finish("no vertices"));
    }
    {
        ReportBuilder r("inertia-component-additivity");
        r.applicable();
        Inertia sum;
        for (const auto& comp : connected_components(g)) {
            const Inertia part = inertia(induced_subgraph(g, comp).graph);
            sum.positive += part.positive;
            sum.negative += part.negative;
            sum.zero += part.zero;
        }
        r.value("positive", as_ll(base.inertia.positive)).value("positive_sum", as_ll(sum.positive));
        r.value("negative", as_ll(base.inertia.negative)).value("negative_sum", as_ll(sum.negative));
        r.expect(sum == base.inertia, g, {}, "inertia is not the sum over components");
        out.push_back(r.finish());
    }
    {
        ReportBuilder r("inertia-edgeless");
        const bool edgeless = g.edge_count() == 0;
        r.value("edges", as_ll(g.edge_count()));
        r.expect((base.inertia.positive == 0) == edgeless && (base.inertia.negative == 0) == edgeless, g, {},
                 "p = 0 or n = 0 does not match having no edges");
        out.push_back(r.finish());
    }
    {
        ReportBuilder r("inertia-oracle-agreement");
        if (g.all_gains_exact()) {
            std::optional<Inertia> exact;
            try {
                exact = inertia_exact(g);
            } catch (const SpectralError&) {
            }
            if (exact) {
                const Inertia fl = inertia_float(adjacency_matrix(g), default_zero_tolerance(g));
                r.value("exact_positive", as_ll(exact->positive)).value("float_positive", as_ll(fl.positive));
                r.value("exact_negative", as_ll(exact->negative)).value("float_negative", as_ll(fl.negative));
                r.expect(*exact == fl, g, {}, "exact and floating inertia differ");
            }
        }
        out.push_back(r.finish("gains are not all exact"));
    }
    {
        TheoremReport bounds = check_bounds(g);
        out.push_back(std::move(bounds));
    }
    return out;
}

namespace {

TheoremReport check_componentwise(const GainGraph& g, const Numbers& whole, bool lower)
{
    ReportBuilder r(lower ? "componentwise-p-lower" : "componentwise-p-upper");
    bool all = true;
    for (const auto& comp : connected_components(g)) {
        const Numbers part = numbers_of(induced_subgraph(g, comp).graph);
        all = all && (lower ? part.p_lower() : part.p_upper());
    }
    const bool global = lower ? whole.p_lower() : whole.p_upper();
    r.value("graph_optimal", global).value("all_components_optimal", all);
    r.expect(global == all, g, {}, "optimality of the graph differs from optimality of every component");
    return r.finish();
}

TheoremReport check_cycle_vertex_deletion(const GainGraph& g, const Numbers& whole, bool lower)
{
    ReportBuilder r(lower ? "cycle-vertex-deletion-p-lower" : "cycle-vertex-deletion-p-upper");
    if (lower ? !whole.p_lower() : !whole.p_upper())
        return r.finish(lower ? "graph is not p-lower optimal" : "graph is not p-upper optimal");
    for (Vertex v : cycle_vertex_list(g)) {
        const Numbers h = numbers_of(minus(g, {v}));
        const ll pv = as_ll(h.inertia.positive);
        if (lower) {
            r.expect(whole.inertia.positive == h.inertia.positive && pv == h.lower()
                         && whole.cyclomatic == h.cyclomatic + 1 && whole.matching == h.matching + 1,
                     g, {v}, "deleting a cycle vertex of a p-lower optimal graph broke an identity");
        } else {
            r.expect(whole.inertia.positive == h.inertia.positive + 1 && pv == h.upper()
                         && whole.cyclomatic == h.cyclomatic + 1 && whole.matching == h.matching,
                     g, {v}, "deleting a cycle vertex of a p-upper optimal graph broke an identity");
        }
    }
    return r.finish("no cycle vertex");
}

TheoremReport check_cycle_vertex_position(const GainGraph& g, const Numbers& whole)
{
    ReportBuilder r("cycle-vertex-position");
    if (!whole.p_lower() && !whole.p_upper())
        return r.finish("graph is neither p-lower nor p-upper optimal");
    const auto membership = cycle_membership(g);
    const auto quasi = quasi_pendant_vertices(g);
    for (Vertex v = 0; v < membership.size(); ++v) {
        if (membership[v] == CycleMembership::None)
            continue;
        const bool is_quasi = std::binary_search(quasi.begin(), quasi.end(), v);
        r.expect(membership[v] == CycleMembership::One && !is_quasi, g, {v},
                 "cycle vertex of an optimal graph lies on two cycles or is quasi-pendant");
    }
    return r.finish("no cycle vertex");
}

TheoremReport check_pendant_pair_deletion(const GainGraph& g, const Numbers& whole)
{
    ReportBuilder r("pendant-pair-deletion");
    if (!whole.p_lower() && !whole.p_upper())
        return r.finish("graph is neither p-lower nor p-upper optimal");
    for (Vertex x : pendant_vertices(g)) {
        const Vertex y = g.neighbors(x)[0].vertex;
        const Numbers h = numbers_of(minus(g, {x, y}));
        if (whole.p_lower())
            r.expect(h.p_lower(), g, {x, y}, "G - x - y is not p-lower optimal");
        if (whole.p_upper())
            r.expect(h.p_upper(), g, {x, y}, "G - x - y is not p-upper optimal");
    }
    return r.finish("no pendant vertex");
}

TheoremReport check_unicyclic_type(const GainGraph& g, const Numbers& whole, const CycleStructure& cs)
{
    ReportBuilder r("unicyclic-cycle-type");
    if (whole.cyclomatic != 1 || cs.cycles.size() != 1)
        return r.finish("graph is not unicyclic");
    if (!whole.p_lower() && !whole.p_upper())
        return r.finish("graph is neither p-lower nor p-upper optimal");
    const CycleType t = classify_cycle(g, cs.cycles[0]);
    r.value("length", as_ll(cs.cycles[0].size()));
    if (whole.p_lower())
        r.expect(t == CycleType::A, g, cs.cycles[0], "unique cycle of a p-lower optimal graph is not type A");
    if (whole.p_upper())
        r.expect(t == CycleType::C, g, cs.cycles[0], "unique cycle of a p-upper optimal graph is not type C");
    return r.finish();
}

TheoremReport check_pendant_cycle_attachment(const GainGraph& g, const Numbers& whole, const CycleStructure& cs)
{
    ReportBuilder r("pendant-cycle-attachment");
    if (!whole.p_lower())
        return r.finish("graph is not p-lower optimal");
    if (!cs.vertex_disjoint)
        return r.finish("cycles are not vertex-disjoint");
    for (const auto& cycle : cs.cycles) {
        // Pendant cycle: one vertex of degree 3, the rest of degree 2.
        std::optional<Vertex> hub;
        bool shape = true;
        for (Vertex v : cycle) {
            if (g.degree(v) == 3 && !hub)
                hub = v;
            else if (g.degree(v) != 2)
                shape = false;
        }
        if (!shape || !hub)
            continue;
        const Vertex u = *hub;
        Vertex v = 0;
        for (const auto& nb : g.neighbors(u)) {
            if (std::find(cycle.begin(), cycle.end(), nb.vertex) == cycle.end())
                v = nb.vertex;
        }
        const auto h = delete_vertices(g, cycle);
        const Vertex v_in_h = *h.from_original[v];
        std::vector<Vertex> rest = cycle;
        rest.erase(std::find(rest.begin(), rest.end(), u));
        const auto h_plus_u = delete_vertices(g, rest);

        bool all_type_a = true;
        for (const auto& c : cs.cycles)
            all_type_a = all_type_a && classify_cycle(g, c) == CycleType::A;
        const std::size_t m_h = matching_number(h.graph);
        const Vertex hv[] = {v_in_h};
        r.expect(all_type_a, g, cycle, "a cycle is not type A");
        r.expect(matching_number(minus(g, {u, v})) + 1 < whole.matching, g, {u, v},
                 "the attaching edge lies in a maximum matching");
        r.expect(matching_number(delete_vertices(h.graph, hv).graph) + 1 == m_h, g, {v},
                 "some maximum matching of H misses the attachment vertex");
        r.expect(matching_number(h_plus_u.graph) == m_h, g, {u}, "m(H + u) != m(H)");
        r.expect(numbers_of(h.graph).p_lower(), g, cycle, "H is not p-lower optimal");
        r.expect(numbers_of(h_plus_u.graph).p_lower(), g, {u}, "H + u is not p-lower optimal");
    }
    return r.finish("no pendant cycle");
}

TheoremReport check_boundary_avoiding_matching(const GainGraph& g, const Numbers& whole, const CycleStructure& cs)
{
    ReportBuilder r("boundary-avoiding-matching");
    if (component_count(g) != 1)
        return r.finish("graph is not connected");
    if (!whole.p_lower())
        return r.finish("graph is not p-lower optimal");
    r.expect(cs.vertex_disjoint, g, {}, "p-lower optimal graph has cycles sharing a vertex");
    if (!cs.vertex_disjoint)
        return r.finish();
    std::size_t cycle_matching = 0;
    for (const auto& c : cs.cycles)
        cycle_matching += c.size() / 2;
    const std::size_t outside = matching_number(delete_vertices(g, cs.cycle_vertices).graph);
    r.value("matching", as_ll(whole.matching)).value("outside_plus_cycles", as_ll(outside + cycle_matching));
    r.expect(exists_max_matching_avoiding_edges(g, *cs.boundary_edges), g, {},
             "every maximum matching uses a boundary edge");
    r.expect(whole.matching == outside + cycle_matching, g, {}, "m(G) != m(G - O(G)) + sum of cycle matchings");
    return r.finish();
}

TheoremReport check_odd_cycle_boundary(const GainGraph& g, const CycleStructure& cs)
{
    ReportBuilder r("odd-cycle-boundary-matching");
    if (!cs.vertex_disjoint || cs.cycles.empty())
        return r.finish("needs at least one cycle and vertex-disjoint cycles");
    for (const auto& c : cs.cycles) {
        if (c.size() % 2 == 0)
            return r.finish("an even cycle is present");
    }
    const std::size_t contracted = matching_number(contracted_graph(g, cs));
    const std::size_t outside = matching_number(delete_vertices(g, cs.cycle_vertices).graph);
    const bool avoiding = exists_max_matching_avoiding_edges(g, *cs.boundary_edges);
    r.value("contracted_matching", as_ll(contracted)).value("outside_matching", as_ll(outside));
    r.value("avoiding", avoiding);
    r.expect((contracted == outside) == avoiding, g, {},
             "m(T_G) = m(G - O(G)) does not match existence of a boundary-avoiding maximum matching");
    return r.finish();
}

TheoremReport check_attached_cycles_pendant(const GainGraph& g, const CycleStructure& cs)
{
    ReportBuilder r("attached-cycles-pendant");
    if (!has_attached_disjoint_cycles(g))
        return r.finish("graph is not in the attached-disjoint-cycles class");
    const std::size_t contracted = matching_number(contracted_graph(g, cs));
    const std::size_t outside = matching_number(delete_vertices(g, cs.cycle_vertices).graph);
    if (contracted != outside)
        return r.finish("m(T_G) != m(G - O(G))");
    const auto pendants = pendant_vertices(g);
    r.expect(!pendants.empty(), g, {}, "no pendant vertex");
    for (Vertex q : quasi_pendant_vertices(g)) {
        r.expect(!std::binary_search(cs.cycle_vertices.begin(), cs.cycle_vertices.end(), q), g, {q},
                 "a quasi-pendant vertex lies on a cycle");
    }
    return r.finish();
}

} // namespace

std::vector<TheoremReport> run_lemma_checks(const GainGraph& g)
{
    const Numbers whole = numbers_of(g);
    const CycleStructure cs = cycle_structure(g);
    std::vector<TheoremReport> out;
    out.push_back(check_componentwise(g, whole, true));
    out.push_back(check_componentwise(g, whole, false));
    out.push_back(check_cycle_vertex_deletion(g, whole, true));
    out.push_back(check_cycle_vertex_deletion(g, whole, false));
    out.push_back(check_cycle_vertex_position(g, whole));
    out.push_back(check_pendant_pair_deletion(g, whole));
    out.push_back(check_unicyclic_type(g, whole, cs));
    out.push_back(check_pendant_cycle_attachment(g, whole, cs));
    out.push_back(check_boundary_avoiding_matching(g, whole, cs));
    out.push_back(check_odd_cycle_boundary(g, cs));
    out.push_back(check_attached_cycles_pendant(g, cs));
    return out;
}

} // namespace gain_inertia
