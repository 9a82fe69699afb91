#include "gain_inertia/report.hpp"

#include "gain_inertia/matching.hpp"

#include <algorithm>

namespace gain_inertia {

namespace {

using json = nlohmann::ordered_json;

json optimality_json(const std::array<OptimalityVerdict, 4>& verdicts)
{
    json out = json::object();
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        out[std::string(to_string(kAllKinds[i]))] = {
            {"structural", verdicts[i].structural},
            {"spectral", verdicts[i].spectral},
            {"equivalent", verdicts[i].equivalent()},
        };
    }
    return out;
}

json gain_json(const Gain& g)
{
    json out = {{"re", g.value().real()}, {"im", g.value().imag()}};
    if (auto r = g.exact())
        out["exact"] = to_token(*r);
    else
        out["exact"] = nullptr;
    return out;
}

} // namespace

bool AnalysisReport::any_failure() const noexcept
{
    if (bounds.failed())
        return true;
    if (std::any_of(optimality.begin(), optimality.end(), [](const auto& v) { return !v.equivalent(); }))
        return true;
    return std::any_of(lemmas.begin(), lemmas.end(), [](const auto& r) { return r.failed(); });
}

AnalysisReport build_analysis_report(const GainGraph& g)
{
    AnalysisReport out;
    const GraphAnalysis whole = analyze_graph(g);
    out.vertices = g.vertex_count();
    out.edges = g.edge_count();
    out.components = whole.components;
    out.cyclomatic = whole.cyclomatic;
    out.matching = whole.matching;
    out.inertia = whole.inertia;
    out.subgroup = gain_subgroup(g);
    out.cycles_vertex_disjoint = whole.cycles.vertex_disjoint;
    for (std::size_t i = 0; i < whole.cycles.cycles.size(); ++i) {
        const auto& c = whole.cycles.cycles[i];
        out.cycles.push_back({c, whole.cycle_types[i], gain_of_cycle(g, c)});
    }
    out.bounds = check_bounds(g);

    for (auto& v : out.optimality)
        v.structural = true;
    for (const auto& comp : connected_components(g)) {
        const auto sub = induced_subgraph(g, comp);
        const GraphAnalysis part = analyze_graph(sub.graph);
        ComponentReport detail;
        detail.vertices = comp;
        detail.matching = part.matching;
        detail.cyclomatic = part.cyclomatic;
        detail.inertia = part.inertia;
        for (std::size_t k = 0; k < 4; ++k) {
            detail.optimality[k] = {structural_conditions(part, kAllKinds[k]), spectral_conditions(part, kAllKinds[k])};
            out.optimality[k].structural = out.optimality[k].structural && detail.optimality[k].structural;
        }
        out.component_detail.push_back(std::move(detail));
    }
    for (std::size_t k = 0; k < 4; ++k)
        out.optimality[k].spectral = spectral_conditions(whole, kAllKinds[k]);

    out.lemmas = run_lemma_checks(g);
    return out;
}

json to_json(const Inertia& in)
{
    return {
        {"positive", in.positive},
        {"negative", in.negative},
        {"nullity", in.zero},
        {"rank", in.rank()},
    };
}

json to_json(const TheoremReport& report)
{
    json out = {
        {"subject", report.subject},
        {"verdict", std::string(to_string(report.verdict))},
    };
    json values = json::object();
    for (const auto& [name, v] : report.values)
        values[name] = v;
    out["values"] = std::move(values);
    if (!report.note.empty())
        out["note"] = report.note;
    if (report.witness)
        out["witness"] = {{"graph", report.witness->graph}, {"vertices", report.witness->vertices}};
    return out;
}

json to_json(const AnalysisReport& r)
{
    json cycles = json::array();
    for (const auto& c : r.cycles) {
        cycles.push_back({
            {"vertices", c.vertices},
            {"length", c.vertices.size()},
            {"type", std::string(to_string(c.type))},
            {"gain", gain_json(c.gain)},
        });
    }
    json bounds = to_json(r.bounds);
    const long long lower = static_cast<long long>(r.matching) - static_cast<long long>(r.cyclomatic);
    const long long upper = static_cast<long long>(r.matching) + static_cast<long long>(r.cyclomatic);
    bounds["lower"] = lower;
    bounds["upper"] = upper;

    json components = json::array();
    for (const auto& c : r.component_detail) {
        components.push_back({
            {"vertices", c.vertices},
            {"matching", c.matching},
            {"cyclomatic", c.cyclomatic},
            {"inertia", to_json(c.inertia)},
            {"optimality", optimality_json(c.optimality)},
        });
    }
    json lemmas = json::array();
    for (const auto& l : r.lemmas)
        lemmas.push_back(to_json(l));

    return {
        {"vertices", r.vertices},
        {"edges", r.edges},
        {"components", r.components},
        {"cyclomatic", r.cyclomatic},
        {"matching", r.matching},
        {"inertia", to_json(r.inertia)},
        {"gain_subgroup", std::string(to_string(r.subgroup))},
        {"cycles_vertex_disjoint", r.cycles_vertex_disjoint},
        {"cycles", std::move(cycles)},
        {"bounds", std::move(bounds)},
        {"optimality", optimality_json(r.optimality)},
        {"component_detail", std::move(components)},
        {"lemmas", std::move(lemmas)},
    };
}

} // namespace gain_inertia
