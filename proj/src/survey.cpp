#include "domcolor/survey.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "domcolor/classify.hpp"
#include "domcolor/enumerate.hpp"
#include "domcolor/formats.hpp"
#include "domcolor/theory.hpp"

namespace domcolor {
namespace {

constexpr std::array<std::pair<SurveyCheck, std::string_view>, 10> kCheckNames{{
    {SurveyCheck::order_range, "order_range"},
    {SurveyCheck::invariant_chain, "invariant_chain"},
    {SurveyCheck::order_over_degree, "order_over_degree"},
    {SurveyCheck::triangle_free, "triangle_free"},
    {SurveyCheck::universal_vertex, "universal_vertex"},
    {SurveyCheck::planar, "planar"},
    {SurveyCheck::bipartite_characterization, "bipartite_characterization"},
    {SurveyCheck::complete_characterization, "complete_characterization"},
    {SurveyCheck::unicyclic_characterization, "unicyclic_characterization"},
    {SurveyCheck::reduction, "reduction"},
}};

// Records of evaluate_bounds consumed by each inequality check.
std::vector<std::string_view> bound_names(SurveyCheck c) {
    switch (c) {
        case SurveyCheck::order_range: return {"chi_dd_at_least_two", "chi_dd_at_most_order"};
        case SurveyCheck::invariant_chain: return {"chain_lower", "chain_middle", "chain_upper"};
        case SurveyCheck::order_over_degree: return {"order_over_max_degree"};
        case SurveyCheck::triangle_free: return {"triangle_free_two_gamma"};
        case SurveyCheck::universal_vertex: return {"universal_vertex_equality"};
        case SurveyCheck::planar: return {"planar_four_gamma"};
        default: return {};
    }
}

struct GraphOutcome {
    bool skipped = false;
    bool inconclusive = false;
    std::vector<int> applicable;  // per requested check: -1 n/a, 0 failed, 1 passed
    std::vector<Counterexample> counterexamples;
};

// Trees and unicyclic graphs are planar by construction, as is every graph on
// at most four vertices.
bool planar_by_construction(const GraphClass& c, int n) {
    return n <= 4 || c.tree || c.unicyclic;
}

GraphOutcome evaluate(const Graph& g, const std::vector<SurveyCheck>& checks,
                      const SolveOptions& opts) {
    GraphOutcome out;
    out.applicable.assign(checks.size(), -1);
    if (g.order() < 2) {
        out.skipped = true;
        return out;
    }
    const std::string code = write(g, Format::graph6);
    const GraphClass cls = classify(g);
    try {
        const InvariantReport inv = full_report(g, opts);
        if (inv.status != SolveStatus::optimal) {
            out.inconclusive = true;
            return out;
        }
        const auto records = evaluate_bounds(g, inv, planar_by_construction(cls, g.order()));
        auto fail = [&](std::size_t i, std::string relation, double lhs, double rhs) {
            out.applicable[i] = 0;
            out.counterexamples.push_back(
                {std::string(check_name(checks[i])), code, std::move(relation), lhs, rhs});
        };
        for (std::size_t i = 0; i < checks.size(); ++i) {
            const SurveyCheck c = checks[i];
            const auto names = bound_names(c);
            if (!names.empty()) {
                for (const BoundRecord& r : records) {
                    if (std::find(names.begin(), names.end(), r.name) == names.end() || !r.applicable)
                        continue;
                    if (out.applicable[i] != 0) out.applicable[i] = 1;
                    if (!r.holds) fail(i, r.name + ": " + r.relation, r.lhs, r.rhs);
                }
                continue;
            }
            switch (c) {
                case SurveyCheck::bipartite_characterization:
                    out.applicable[i] = 1;
                    if ((inv.chi_dd == 2) != cls.complete_bipartite)
                        fail(i, "chi_dd == 2 vs complete bipartite", inv.chi_dd,
                             cls.complete_bipartite);
                    break;
                case SurveyCheck::complete_characterization:
                    out.applicable[i] = 1;
                    if ((inv.chi_dd == g.order()) != cls.complete)
                        fail(i, "chi_dd == n vs complete", inv.chi_dd, cls.complete);
                    break;
                case SurveyCheck::unicyclic_characterization:
                    if (!cls.unicyclic) break;
                    out.applicable[i] = 1;
                    if ((inv.chi_dd == inv.chi) != in_unicyclic_equality_family(g))
                        fail(i, "chi_dd == chi vs family membership", inv.chi_dd, inv.chi);
                    break;
                case SurveyCheck::reduction: {
                    if (g.order() > 8) break;
                    out.applicable[i] = 1;
                    const int extended = definite(
                        domination_chromatic(add_universal_vertex(g), opts), "reduction");
                    for (int k = 1; k <= g.order(); ++k)
                        if ((inv.chi <= k) != (extended <= k + 1))
                            fail(i, "chi <= " + std::to_string(k) + " vs extension chi_dd <= " +
                                        std::to_string(k + 1),
                                 inv.chi, extended);
                    break;
                }
                default: break;
            }
        }
    } catch (const SearchExhausted&) {
        out = GraphOutcome{};
        out.applicable.assign(checks.size(), -1);
        out.inconclusive = true;
    }
    return out;
}

}  // namespace

std::string_view check_name(SurveyCheck c) {
    for (auto [check, name] : kCheckNames)
        if (check == c) return name;
    return "unknown";
}

SurveyCheck parse_check(std::string_view name) {
    for (auto [check, n] : kCheckNames)
        if (n == name) return check;
    throw std::invalid_argument("unknown survey check '" + std::string(name) + "'");
}

std::vector<SurveyCheck> all_checks() {
    std::vector<SurveyCheck> out;
    for (auto [check, name] : kCheckNames) out.push_back(check);
    return out;
}

SurveyReport survey_graphs(const std::vector<Graph>& graphs, const std::vector<SurveyCheck>& checks,
                           const SurveyOptions& opts) {
    std::vector<GraphOutcome> outcomes(graphs.size());
    const unsigned jobs = std::max(1U, std::min<unsigned>(opts.jobs, graphs.size()));
    auto work = [&](unsigned worker) {
        for (std::size_t i = worker; i < graphs.size(); i += jobs)
            outcomes[i] = evaluate(graphs[i], checks, opts.solve);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    SurveyReport report;
    report.graphs = static_cast<int>(graphs.size());
    if (!graphs.empty()) {
        report.n_min = graphs.front().order();
        report.n_max = graphs.front().order();
        for (const Graph& g : graphs) {
            report.n_min = std::min(report.n_min, g.order());
            report.n_max = std::max(report.n_max, g.order());
        }
    }
    for (SurveyCheck c : checks) report.tallies.push_back({std::string(check_name(c))});
    for (const GraphOutcome& o : outcomes) {
        report.skipped += o.skipped;
        report.inconclusive += o.inconclusive;
        for (std::size_t i = 0; i < checks.size(); ++i) {
            if (o.applicable[i] < 0) continue;
            ++report.tallies[i].applicable;
            ++(o.applicable[i] ? report.tallies[i].passed : report.tallies[i].failed);
        }
        report.counterexamples.insert(report.counterexamples.end(), o.counterexamples.begin(),
                                      o.counterexamples.end());
    }
    report.complete = report.inconclusive == 0;
    return report;
}

SurveyReport survey(int n_max, const std::vector<SurveyCheck>& checks, const SurveyOptions& opts) {
    if (n_max < 1 || n_max > kMaxEnumerationOrder)
        throw std::out_of_range("n-max: survey supports 1 <= n <= " +
                                std::to_string(kMaxEnumerationOrder));
    if (n_max == kMaxEnumerationOrder && !opts.long_run)
        throw std::out_of_range("n-max: n = 7 needs the long-run flag");
    if (opts.n_min < 1 || opts.n_min > n_max)
        throw std::out_of_range("n-min: must lie in [1, n-max]");
    std::vector<Graph> graphs;
    for (int n = opts.n_min; n <= n_max; ++n) {
        auto level = connected_graphs(n, true);
        graphs.insert(graphs.end(), level.begin(), level.end());
    }
    SurveyReport report = survey_graphs(graphs, checks, opts);
    report.n_min = opts.n_min;
    report.n_max = n_max;
    return report;
}

int FamilyCheckReport::disagreements() const {
    return static_cast<int>(std::count_if(instances.begin(), instances.end(),
                                          [](const FamilyComparison& c) { return !c.agree(); }));
}

std::vector<FamilySpec> family_instances(std::string_view family, int n_max) {
    std::vector<FamilySpec> out;
    if (family == "path") {
        for (int n = 2; n <= n_max; ++n) out.push_back(Path{n});
    } else if (family == "cycle") {
        for (int n = 3; n <= n_max; ++n) out.push_back(Cycle{n});
    } else if (family == "complete") {
        for (int n = 2; n <= n_max; ++n) out.push_back(Complete{n});
    } else if (family == "multipartite") {
        std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& parts, int total) {
            if (parts.size() >= 2) out.push_back(CompleteMultipartite{parts});
            if (parts.size() == 4) return;
            const int cap = parts.empty() ? 3 : parts.back();
            for (int s = 1; s <= cap && total + s <= n_max; ++s) {
                parts.push_back(s);
                grow(parts, total + s);
                parts.pop_back();
            }
        };
        std::vector<int> parts;
        grow(parts, 0);
    } else if (family == "star") {
        for (int leaves = 1; leaves + 1 <= n_max; ++leaves) out.push_back(Star{leaves});
    } else if (family == "bistar") {
        for (int p = 2; p <= 4; ++p)
            for (int q = 2; q <= 4; ++q)
                if (p + q <= n_max) out.push_back(BiStar{p, q});
    } else if (family == "wheel") {
        for (int n = 3; n + 1 <= n_max; ++n) out.push_back(Wheel{n});
    } else if (family == "petersen") {
        if (n_max >= 10) out.push_back(Petersen{});
    } else if (family == "kn-leaves") {
        for (int n = 2; n <= n_max; ++n)
            for (int m = 1; m <= n / 2; ++m)
                for (int per_hub = 1; per_hub <= 2; ++per_hub) {
                    if (n + m * per_hub > n_max) continue;
                    KnWithLeaves spec{n, {}};
                    for (int h = 0; h < m; ++h) spec.leaf_counts[h] = per_hub;
                    out.push_back(spec);
                }
    } else if (family == "c3-leaves") {
        for (int leaves = 0; leaves + 3 <= n_max; ++leaves) out.push_back(C3WithLeaves{leaves});
    } else {
        throw std::invalid_argument("family: unknown family '" + std::string(family) + "'");
    }
    return out;
}

FamilyCheckReport family_check(std::string_view family, int n_max, const SurveyOptions& opts) {
    FamilyCheckReport report;
    report.family = std::string(family);
    report.n_max = n_max;
    for (const FamilySpec& spec : family_instances(family, n_max)) {
        const Graph g = generate(spec);
        const auto solved = domination_chromatic(g, opts.solve);
        if (!solved.optimal()) {
            ++report.inconclusive;
            continue;
        }
        report.instances.push_back(
            {describe(spec), write(g, Format::graph6), formula_chi_dd(spec), solved.value});
    }
    return report;
}

}  // namespace domcolor
