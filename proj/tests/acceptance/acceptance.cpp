// Acceptance suite. Each criterion prints one PASS/FAIL line with its elapsed
// time against the pinned limit; failing instances follow, indented.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "domcolor/classify.hpp"
#include "domcolor/coloring.hpp"
#include "domcolor/enumerate.hpp"
#include "domcolor/families.hpp"
#include "domcolor/formats.hpp"
#include "domcolor/oracle.hpp"
#include "domcolor/solvers.hpp"
#include "domcolor/survey.hpp"
#include "domcolor/theory.hpp"

using namespace domcolor;

namespace {

struct Outcome {
    std::vector<std::string> failures;
    std::string summary;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::string str(int v) { return std::to_string(v); }

std::string g6(const Graph& g) { return write(g, Format::graph6); }

// Solver value next to the closed form, for one instance.
void compare_formula(Outcome& o, const FamilySpec& spec) {
    const Graph g = generate(spec);
    const ColoringResult r = domination_chromatic(g);
    if (!r.optimal()) {
        o.failures.push_back(describe(spec) + ": inconclusive");
        return;
    }
    const int formula = formula_chi_dd(spec);
    o.expect(r.value == formula, describe(spec) + ": solver " + str(r.value) + ", closed form " +
                                     str(formula) + ", witness " + r.witness->to_line());
}

Outcome family_sweep() {
    Outcome o;
    int instances = 0;
    auto add = [&](const FamilySpec& spec) {
        compare_formula(o, spec);
        ++instances;
    };
    for (int n = 2; n <= 12; ++n) add(Path{n});
    for (int n = 3; n <= 12; ++n) add(Cycle{n});
    for (int n = 2; n <= 8; ++n) add(Complete{n});
    for (int r = 1; r <= 4; ++r)
        for (int s = r; s <= 4; ++s) add(CompleteMultipartite{{r, s}});
    for (const FamilySpec& spec : family_instances("multipartite", 12)) add(spec);
    for (int n = 1; n <= 8; ++n) add(Star{n});
    for (int n = 3; n <= 8; ++n) add(Wheel{n});
    o.summary = str(instances) + " instances";
    return o;
}

Outcome petersen() {
    Outcome o;
    const InvariantReport r = full_report(generate(Petersen{}));
    o.expect(r.status == SolveStatus::optimal, "inconclusive");
    o.expect(r.chi_dd == 5, "chi_dd = " + str(r.chi_dd) + ", expected 5");
    o.expect(r.chi_d == 5, "chi_d = " + str(r.chi_d) + ", expected 5");
    o.expect(r.chi_dom == 4, "chi_dom = " + str(r.chi_dom) + ", expected 4");
    o.expect(r.chi == 3, "chi = " + str(r.chi) + ", expected 3");
    o.expect(r.gamma == 3, "gamma = " + str(r.gamma) + ", expected 3");
    o.summary = "chi_dd=" + str(r.chi_dd) + " chi_d=" + str(r.chi_d) + " chi_dom=" + str(r.chi_dom) +
                " chi=" + str(r.chi) + " gamma=" + str(r.gamma);
    return o;
}

Outcome bistars() {
    Outcome o;
    for (int p = 2; p <= 4; ++p)
        for (int q = 2; q <= 4; ++q) {
            const Graph g = generate(BiStar{p, q});
            const ColoringResult dd = domination_chromatic(g);
            const ColoringResult d = dominator_chromatic(g);
            const std::string label = describe(BiStar{p, q});
            o.expect(dd.optimal() && dd.value == 4,
                     label + ": chi_dd = " + str(dd.value) + ", expected 4, witness " +
                         (dd.witness ? dd.witness->to_line() : "-"));
            o.expect(d.optimal() && d.value == 3, label + ": chi_d = " + str(d.value) + ", expected 3");
        }
    o.summary = "9 bi-stars";
    return o;
}

Outcome leaf_hubs() {
    Outcome o;
    int instances = 0;
    for (int n = 3; n <= 6; ++n)
        for (int m = 1; m <= n / 2; ++m)
            for (int per_hub = 1; per_hub <= 2; ++per_hub) {
                KnWithLeaves spec{n, {}};
                for (int h = 0; h < m; ++h) spec.leaf_counts[h] = per_hub;
                compare_formula(o, spec);
                ++instances;
            }
    o.summary = str(instances) + " instances";
    return o;
}

void collect_counterexamples(Outcome& o, const SurveyReport& r) {
    for (const Counterexample& c : r.counterexamples)
        o.failures.push_back(c.check + " on " + c.graph6 + ": " + c.relation);
    if (!r.complete) o.failures.push_back(str(r.inconclusive) + " graphs inconclusive");
}

Outcome survey_six() {
    Outcome o;
    const SurveyReport r = survey(
        6, {SurveyCheck::order_range, SurveyCheck::invariant_chain, SurveyCheck::order_over_degree,
            SurveyCheck::triangle_free, SurveyCheck::universal_vertex,
            SurveyCheck::bipartite_characterization, SurveyCheck::complete_characterization});
    const auto level6 = connected_graphs(6, true).size();
    o.expect(r.graphs == 143, "class count " + str(r.graphs) + ", expected 143");
    o.expect(level6 == 112, "classes at n=6: " + str(static_cast<int>(level6)) + ", expected 112");
    collect_counterexamples(o, r);
    std::ostringstream s;
    s << r.graphs << " classes";
    for (const CheckTally& t : r.tallies) s << ", " << t.check << " " << t.passed << "/" << t.applicable;
    o.summary = s.str();
    return o;
}

Outcome unicyclic() {
    Outcome o;
    std::vector<Graph> graphs;
    for (int n = 3; n <= 8; ++n) {
        auto level = unicyclic_graphs(n);
        graphs.insert(graphs.end(), level.begin(), level.end());
    }
    const SurveyReport r = survey_graphs(graphs, {SurveyCheck::unicyclic_characterization});
    collect_counterexamples(o, r);
    int members = 0;
    for (const Graph& g : graphs) members += in_unicyclic_equality_family(g);
    o.summary = str(r.graphs) + " unicyclic classes, " + str(members) + " in the equality family";
    return o;
}

Outcome reduction() {
    Outcome o;
    const SurveyReport r = survey(6, {SurveyCheck::reduction});
    collect_counterexamples(o, r);
    int pairs = 0;
    for (int n = 2; n <= 6; ++n) pairs += n * static_cast<int>(connected_graphs(n, true).size());
    o.expect(r.tallies.front().applicable == r.graphs - r.skipped, "reduction not run on every class");
    o.summary = str(r.graphs - r.skipped) + " classes, " + str(pairs) + " (graph, k) pairs";
    return o;
}

void compare_oracle(Outcome& o, const Graph& g, int& count) {
    const ColoringResult r = domination_chromatic(g);
    const OracleResult oracle = oracle_chi_dd(g);
    ++count;
    if (!r.optimal()) {
        o.failures.push_back(g6(g) + ": inconclusive");
        return;
    }
    o.expect(r.value == oracle.value,
             g6(g) + ": branch and bound " + str(r.value) + ", oracle " + str(oracle.value));
}

Outcome oracle_equivalence() {
    Outcome o;
    int labeled = 0, sampled = 0;
    for (int n = 2; n <= 7; ++n) {
        ConnectedGraphStream stream = enumerate_connected(n, false);
        while (auto g = stream.next()) compare_oracle(o, *g, labeled);
    }
    std::mt19937_64 rng(20240601);
    for (int n : {8, 9})
        for (int i = 0; i < 50; ++i) compare_oracle(o, random_connected_graph(n, 0.35, rng), sampled);
    o.summary = str(labeled) + " labeled connected graphs n<=7, " + str(sampled) + " random graphs n=8,9";
    return o;
}

void round_trip(Outcome& o, const Graph& g, const std::string& label) {
    for (Format f : {Format::graph6, Format::dimacs, Format::edgelist}) {
        const std::string text = write(g, f);
        try {
            const Graph back = parse(text, f);
            o.expect(back == g && write(back, f) == text,
                     label + ": " + std::string(format_name(f)) + " round trip differs");
        } catch (const std::exception& e) {
            o.failures.push_back(label + ": " + std::string(format_name(f)) + ": " + e.what());
        }
    }
}

Outcome formats() {
    Outcome o;
    int graphs = 0, instances = 0;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : connected_graphs(n, false)) {
            round_trip(o, g, g6(g));
            ++graphs;
        }
    for (const char* family : {"path", "cycle", "complete", "multipartite", "star", "bistar", "wheel",
                               "petersen", "kn-leaves", "c3-leaves"})
        for (const FamilySpec& spec : family_instances(family, 14)) {
            round_trip(o, generate(spec), describe(spec));
            ++instances;
        }
    o.summary = str(graphs) + " connected graphs n<=5, " + str(instances) + " family instances";
    return o;
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "closed forms for paths, cycles, complete, multipartite, stars, wheels", 60, family_sweep},
        {2, "Petersen graph invariants", 10, petersen},
        {3, "bi-star chi_dd = 4 and chi_d = 3", 5, bistars},
        {4, "complete graphs with leaves at m <= n/2 hubs", 30, leaf_hubs},
        {5, "survey of all connected graphs n <= 6", 600, survey_six},
        {6, "unicyclic characterization n <= 8", 600, unicyclic},
        {7, "universal-vertex reduction n <= 6", 900, reduction},
        {8, "branch and bound against the partition oracle", 1800, oracle_equivalence},
        {9, "format round trips", 60, formats},
    };
    return all;
}

bool run_criterion(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = o.failures.empty() && in_time;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), seconds, c.limit_seconds, o.summary.empty() ? "" : "; ",
                o.summary.c_str());
    if (!in_time) std::printf("    exceeded the time limit\n");
    for (const std::string& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domcolor acceptance suite"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    bool all_pass = true;
    for (const Criterion& c : criteria())
        if (only == 0 || c.id == only) all_pass &= run_criterion(c);
    return all_pass ? 0 : 1;
}
