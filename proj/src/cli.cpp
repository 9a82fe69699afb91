#include "gain_inertia/cli.hpp"

#include "gain_inertia/generators.hpp"
#include "gain_inertia/graph_io.hpp"
#include "gain_inertia/report.hpp"
#include "gain_inertia/theorems.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace gain_inertia {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kEnumerateChunk = 2048;
constexpr std::size_t kMaxExamples = 10;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Calls fn(i) for i in [0, count) on the worker pool; results land at index i,
// so output order never depends on scheduling.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>
{
    std::vector<decltype(fn(std::size_t{}))> results(count);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty())
            parts.push_back(item);
    }
    return parts;
}

std::vector<FourthRoot> parse_gain_set(const std::string& text)
{
    std::vector<FourthRoot> set;
    for (const auto& token : split_list(text)) {
        auto r = parse_token(token);
        if (!r)
            throw UsageError("unknown gain '" + token + "' in --gain-set (expected +1, -1, +i, -i)");
        if (std::find(set.begin(), set.end(), *r) == set.end())
            set.push_back(*r);
    }
    if (set.empty())
        throw UsageError("--gain-set is empty");
    return set;
}

std::vector<OptimalityKind> parse_kind_list(const std::string& text)
{
    if (text == "all")
        return {std::begin(kAllKinds), std::end(kAllKinds)};
    std::vector<OptimalityKind> kinds;
    for (const auto& token : split_list(text)) {
        auto k = parse_kind(token);
        if (!k)
            throw UsageError("unknown kind '" + token + "'");
        if (std::find(kinds.begin(), kinds.end(), *k) == kinds.end())
            kinds.push_back(*k);
    }
    if (kinds.empty())
        throw UsageError("--kind is empty");
    return kinds;
}

int cmd_analyze(const std::string& path, bool strict, std::ostream& out, std::ostream& err)
{
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open '" << path << "'\n";
        return kExitIo;
    }
    GainGraph g;
    try {
        g = parse_graph(in);
    } catch (const ParseError& e) {
        err << path << ":" << e.line() << ": " << e.what() << "\n";
        return kExitUsage;
    }
    if (in.bad()) {
        err << "error: read failed for '" << path << "'\n";
        return kExitIo;
    }
    const AnalysisReport report = build_analysis_report(g);
    out << to_json(report).dump(2) << "\n";
    if (strict && report.any_failure()) {
        err << "strict: at least one check failed\n";
        return kExitViolation;
    }
    return kExitOk;
}

struct TrialOutcome {
    std::size_t held = 0;
    std::size_t skipped = 0;
    std::vector<json> violations;
};

int cmd_fuzz(std::size_t trials, std::size_t n_max, GainMode mode, std::uint64_t seed, std::ostream& out,
             std::ostream& err)
{
    auto outcomes = parallel_map(trials, [&](std::size_t trial) {
        TrialOutcome o;
        const GainGraph g = fuzz_graph(seed, trial, n_max, mode);
        for (auto& r : run_invariant_checks(g)) {
            if (r.verdict == Verdict::Holds) {
                ++o.held;
            } else if (r.verdict == Verdict::Skipped) {
                ++o.skipped;
            } else {
                json v = to_json(r);
                v["trial"] = trial;
                if (!v.contains("witness"))
                    v["witness"] = {{"graph", serialize_graph(g)}};
                o.violations.push_back(std::move(v));
            }
        }
        return o;
    });

    json violations = json::array();
    std::size_t held = 0, skipped = 0;
    for (auto& o : outcomes) {
        held += o.held;
        skipped += o.skipped;
        for (auto& v : o.violations)
            violations.push_back(std::move(v));
    }
    const std::size_t violation_count = violations.size();
    json summary = {
        {"command", "fuzz"},
        {"trials", trials},
        {"n_max", n_max},
        {"mode", std::string(to_string(mode))},
        {"seed", seed},
        {"checks_held", held},
        {"checks_skipped", skipped},
        {"violation_count", violation_count},
        {"violations", std::move(violations)},
    };
    out << summary.dump(2) << "\n";
    if (violation_count > 0) {
        err << "fuzz: " << violation_count << " violation(s)\n";
        return kExitViolation;
    }
    return kExitOk;
}

struct KindTally {
    std::size_t structural = 0;
    std::size_t spectral = 0;
    std::size_t mismatches = 0;
};

struct GraphVerdicts {
    std::vector<OptimalityVerdict> verdicts; // parallel to the requested kinds
};

int cmd_enumerate(std::size_t n_max, const std::vector<FourthRoot>& gain_set, const std::vector<OptimalityKind>& kinds,
                  std::uint64_t seed, std::ostream& out, std::ostream& err)
{
    EnumerationOptions options;
    options.min_order = 1;
    options.max_order = n_max;
    options.gain_set = gain_set;
    options.connected_only = true;
    options.seed = seed;

    std::vector<KindTally> tally(kinds.size());
    json examples = json::array();
    std::size_t graphs = 0;
    std::size_t total_mismatches = 0;

    if (n_max >= 1) {
        GraphEnumerator enumerator(options);
        std::vector<GainGraph> chunk;
        bool exhausted = false;
        while (!exhausted) {
            chunk.clear();
            while (chunk.size() < kEnumerateChunk) {
                auto g = enumerator.next();
                if (!g) {
                    exhausted = true;
                    break;
                }
                chunk.push_back(std::move(*g));
            }
            auto results = parallel_map(chunk.size(), [&](std::size_t i) {
                GraphVerdicts v;
                const GraphAnalysis a = analyze_graph(chunk[i]);
                for (auto k : kinds)
                    v.verdicts.push_back({structural_conditions(a, k), spectral_conditions(a, k)});
                return v;
            });
            for (std::size_t i = 0; i < chunk.size(); ++i) {
                for (std::size_t k = 0; k < kinds.size(); ++k) {
                    const auto& v = results[i].verdicts[k];
                    tally[k].structural += v.structural;
                    tally[k].spectral += v.spectral;
                    if (!v.equivalent()) {
                        ++tally[k].mismatches;
                        ++total_mismatches;
                        if (examples.size() < kMaxExamples) {
                            examples.push_back({
                                {"index", graphs + i},
                                {"kind", std::string(to_string(kinds[k]))},
                                {"structural", v.structural},
                                {"spectral", v.spectral},
                                {"graph", serialize_graph(chunk[i])},
                            });
                        }
                    }
                }
            }
            graphs += chunk.size();
        }
    }

    json gains = json::array();
    for (auto r : gain_set)
        gains.push_back(to_token(r));
    json per_kind = json::object();
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        per_kind[std::string(to_string(kinds[k]))] = {
            {"structural_optimal", tally[k].structural},
            {"spectral_optimal", tally[k].spectral},
            {"mismatches", tally[k].mismatches},
        };
    }
    json summary = {
        {"command", "enumerate"},
        {"n_max", n_max},
        {"gain_set", std::move(gains)},
        {"seed", seed},
        {"graphs", graphs},
        {"kinds", std::move(per_kind)},
        {"mismatches", total_mismatches},
        {"mismatch_examples", std::move(examples)},
    };
    out << summary.dump(2) << "\n";
    if (total_mismatches > 0) {
        err << "enumerate: " << total_mismatches << " mismatch(es)\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_generate(const FamilySpec& spec, const std::optional<std::string>& path, std::ostream& out, std::ostream& err)
{
    GainGraph g;
    try {
        validate_family_spec(spec);
        g = build_extremal(spec);
    } catch (const GeneratorError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RetryExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kExitRetryExhausted;
    }
    const std::string text = serialize_graph(g);
    if (!path) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(*path);
    file << text;
    file.flush();
    if (!file) {
        err << "error: cannot write '" << *path << "'\n";
        return kExitIo;
    }
    json summary = {
        {"command", "generate"},
        {"out", *path},
        {"kind", std::string(to_string(spec.kind))},
        {"seed", spec.seed},
        {"vertices", g.vertex_count()},
        {"edges", g.edge_count()},
    };
    out << summary.dump(2) << "\n";
    return kExitOk;
}

} // namespace

unsigned worker_count()
{
    if (const char* env = std::getenv("GAIN_INERTIA_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            return static_cast<unsigned>(std::min(v, 256L));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Inertia, matching and cyclomatic checks for complex unit gain graphs", "gain_inertia"};
    app.require_subcommand(1);

    std::string path;
    bool strict = false;
    auto* analyze = app.add_subcommand("analyze", "Analyze a gaingraph v1 file and print a JSON report");
    analyze->add_option("path", path, "Graph file")->required();
    analyze->add_flag("--strict", strict, "Exit 1 if any check fails");

    std::size_t trials = 1000;
    std::size_t fuzz_n_max = 10;
    std::string mode_text = "fourth_roots";
    std::uint64_t fuzz_seed = 0;
    auto* fuzz = app.add_subcommand("fuzz", "Run the invariant suite on random graphs");
    fuzz->add_option("--trials", trials, "Number of random graphs")->check(CLI::PositiveNumber);
    fuzz->add_option("--n-max", fuzz_n_max, "Largest order")->check(CLI::Range(std::size_t{0}, std::size_t{64}));
    fuzz->add_option("--mode", mode_text, "all_ones, signed, fourth_roots or uniform_angle");
    fuzz->add_option("--seed", fuzz_seed, "Seed");

    std::size_t enum_n_max = 4;
    std::string gain_set_text = "+1";
    std::string enum_kinds = "all";
    std::uint64_t enum_seed = 0;
    auto* enumerate = app.add_subcommand("enumerate", "Compare both optimality sides on all small connected graphs");
    enumerate->add_option("--n-max", enum_n_max, "Largest order (at most 7)");
    enumerate->add_option("--gain-set", gain_set_text, "Comma-separated gains, e.g. +1,-1");
    enumerate->add_option("--kind", enum_kinds, "all, or a comma-separated list of p_lower, p_upper, n_lower, n_upper");
    enumerate->add_option("--seed", enum_seed, "Seed for sampled gain assignments");

    std::string gen_kind;
    std::vector<std::size_t> cycles;
    std::vector<std::size_t> trees;
    std::uint64_t gen_seed = 0;
    std::string out_path;
    auto* generate = app.add_subcommand("generate", "Build an optimal graph of the given kind");
    generate->add_option("--kind", gen_kind, "p_lower, p_upper, n_lower or n_upper")->required();
    generate->add_option("--cycles", cycles, "Cycle lengths")->delimiter(',');
    generate->add_option("--trees", trees, "Tree sizes")->delimiter(',');
    generate->add_option("--seed", gen_seed, "Seed");
    generate->add_option("--out", out_path, "Output file (default: stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(path, strict, out, err);
        if (fuzz->parsed()) {
            auto mode = parse_gain_mode(mode_text);
            if (!mode)
                throw UsageError("unknown --mode '" + mode_text + "'");
            return cmd_fuzz(trials, fuzz_n_max, *mode, fuzz_seed, out, err);
        }
        if (enumerate->parsed()) {
            if (enum_n_max > kMaxEnumerationOrder)
                throw UsageError("--n-max must be at most " + std::to_string(kMaxEnumerationOrder));
            return cmd_enumerate(enum_n_max, parse_gain_set(gain_set_text), parse_kind_list(enum_kinds), enum_seed,
                                 out, err);
        }
        if (generate->parsed()) {
            auto kind = parse_kind(gen_kind);
            if (!kind)
                throw UsageError("unknown --kind '" + gen_kind + "'");
            FamilySpec spec{*kind, cycles, trees, gen_seed};
            return cmd_generate(spec, out_path.empty() ? std::nullopt : std::optional(out_path), out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace gain_inertia
