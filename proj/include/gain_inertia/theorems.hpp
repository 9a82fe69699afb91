#pragma once

#include "gain_inertia/gain_graph.hpp"
#include "gain_inertia/spectral.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gain_inertia {

class TheoremError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Gain class of a cycle C_n with gain phi:
///   A: n even, phi == (-1)^(n/2)        B: n even, otherwise
///   C: n odd, Re((-1)^((n-1)/2) phi) > 0
///   D: n odd, Re((-1)^((n-1)/2) phi) < 0
///   E: n odd, Re((-1)^((n-1)/2) phi) == 0
enum class CycleType { A, B, C, D, E };

enum class OptimalityKind { PLower, PUpper, NLower, NUpper };

inline constexpr OptimalityKind kAllKinds[] = {OptimalityKind::PLower, OptimalityKind::PUpper,
                                               OptimalityKind::NLower, OptimalityKind::NUpper};

std::string_view to_string(CycleType t) noexcept;
std::string_view to_string(OptimalityKind k) noexcept;
/// Accepts "plower", "pupper", "nlower", "nupper" (case-insensitive, '-' and '_' ignored).
std::optional<OptimalityKind> parse_kind(std::string_view text);

/// The cycle type every cycle must have for a graph of this kind to be optimal.
CycleType required_cycle_type(OptimalityKind k) noexcept;
bool type_matches_parity(std::size_t length, CycleType t) noexcept;

inline constexpr double kDefaultReTolerance = 1e-9;

/// Exact gains are compared exactly; floating gains use re_tol.
CycleType classify_cycle_gain(std::size_t length, const Gain& cycle_gain, double re_tol = kDefaultReTolerance);
CycleType classify_cycle(const GainGraph& g, std::span<const Vertex> cycle, double re_tol = kDefaultReTolerance);

/// Inertia of a cycle of the given length and type. Throws TheoremError on a
/// parity mismatch or length < 3.
Inertia cycle_inertia_closed_form(std::size_t length, CycleType t);

enum class Verdict { Holds, Fails, Skipped };
std::string_view to_string(Verdict v) noexcept;

struct Witness {
    std::string graph;           // gaingraph v1 text
    std::vector<Vertex> vertices; // vertex or cycle the failure is about
};

/// One checked statement. `values` carries the numbers on both sides; a
/// failing verdict always has a witness.
struct TheoremReport {
    std::string subject;
    Verdict verdict = Verdict::Skipped;
    std::vector<std::pair<std::string, long long>> values;
    std::optional<Witness> witness;
    std::string note;

    bool failed() const noexcept { return verdict == Verdict::Fails; }
};

/// Everything the optimality checkers need, computed once per graph.
struct GraphAnalysis {
    Inertia inertia;
    std::size_t matching = 0;
    std::size_t cyclomatic = 0;
    std::size_t components = 0;
    CycleStructure cycles;
    std::vector<CycleType> cycle_types;             // parallel to cycles.cycles
    std::optional<std::size_t> contracted_matching; // m(T_G), when cycles are disjoint
    std::optional<std::size_t> outside_matching;    // m(G - O(G)), when cycles are disjoint

    long long lower_bound() const noexcept
    {
        return static_cast<long long>(matching) - static_cast<long long>(cyclomatic);
    }
    long long upper_bound() const noexcept
    {
        return static_cast<long long>(matching) + static_cast<long long>(cyclomatic);
    }
};

GraphAnalysis analyze_graph(const GainGraph& g, double re_tol = kDefaultReTolerance);

/// Conditions without the connectivity requirement: cycles pairwise
/// vertex-disjoint, all of the required type, and m(T_G) == m(G - O(G)).
bool structural_conditions(const GraphAnalysis& a, OptimalityKind k) noexcept;
/// p or n equals the lower (m - c) or upper (m + c) bound.
bool spectral_conditions(const GraphAnalysis& a, OptimalityKind k) noexcept;

/// m - c <= p, n <= m + c, per component and in total.
TheoremReport check_bounds(const GainGraph& g);

/// Connected graphs only; throw TheoremError otherwise.
bool check_structural(const GainGraph& g, OptimalityKind k);
bool check_spectral(const GainGraph& g, OptimalityKind k);
/// Holds iff the structural and spectral sides agree.
TheoremReport verify_characterization(const GainGraph& g, OptimalityKind k);
TheoremReport verify_characterization(const GainGraph& g, const GraphAnalysis& a, OptimalityKind k);

/// Consequences of optimality and the matching facts the characterization
/// relies on. Statements whose hypothesis g does not meet are Skipped.
std::vector<TheoremReport> run_lemma_checks(const GainGraph& g);

/// Vertex-deletion, pendant-reduction and additivity properties of m, c, p
/// and n, plus exact/floating inertia agreement. Every vertex is tried.
std::vector<TheoremReport> run_invariant_checks(const GainGraph& g);

enum class GainSubgroup { Simple, Signed, Mixed, General };
std::string_view to_string(GainSubgroup s) noexcept;

/// simple: all gains 1; signed: within {1,-1}; mixed: within {1,i,-i};
/// checked in that order.
GainSubgroup gain_subgroup(const GainGraph& g);

} // namespace gain_inertia
