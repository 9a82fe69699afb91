#pragma once

#include "gain_inertia/gain_graph.hpp"
#include "gain_inertia/spectral.hpp"
#include "gain_inertia/theorems.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <vector>

namespace gain_inertia {

struct OptimalityVerdict {
    bool structural = false;
    bool spectral = false;
    bool equivalent() const noexcept { return structural == spectral; }
};

struct CycleReport {
    std::vector<Vertex> vertices;
    CycleType type = CycleType::A;
    Gain gain;
};

struct ComponentReport {
    std::vector<Vertex> vertices;
    std::size_t matching = 0;
    std::size_t cyclomatic = 0;
    Inertia inertia;
    std::array<OptimalityVerdict, 4> optimality; // indexed like kAllKinds
};

/// Full analysis of one graph. Disconnected graphs are checked per component;
/// a graph is structurally optimal when every component is.
struct AnalysisReport {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t components = 0;
    std::size_t cyclomatic = 0;
    std::size_t matching = 0;
    Inertia inertia;
    GainSubgroup subgroup = GainSubgroup::Simple;
    bool cycles_vertex_disjoint = true;
    std::vector<CycleReport> cycles;
    TheoremReport bounds;
    std::array<OptimalityVerdict, 4> optimality;
    std::vector<ComponentReport> component_detail;
    std::vector<TheoremReport> lemmas;

    /// Any failed verdict among bounds, optimality equivalence and lemmas.
    bool any_failure() const noexcept;
};

AnalysisReport build_analysis_report(const GainGraph& g);

nlohmann::ordered_json to_json(const Inertia& in);
nlohmann::ordered_json to_json(const TheoremReport& report);
nlohmann::ordered_json to_json(const AnalysisReport& report);

} // namespace gain_inertia
