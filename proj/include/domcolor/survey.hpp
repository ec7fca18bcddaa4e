#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "domcolor/families.hpp"
#include "domcolor/graph.hpp"
#include "domcolor/solvers.hpp"

namespace domcolor {

/// Relations machine-checked by the survey. Each one is a published result;
/// a failure is reported as a counterexample, never thrown.
enum class SurveyCheck {
    order_range,                 // 2 <= chi_dd <= n
    invariant_chain,             // max(chi,gamma) <= max(chi_d,chi_dom) <= chi_dd <= chi*gamma
    order_over_degree,           // n / Delta <= chi_dd
    triangle_free,               // chi_dd <= 2 gamma on triangle-free graphs
    universal_vertex,            // chi_dd == chi when gamma == 1
    planar,                      // chi_dd <= 4 gamma on trees, unicyclic graphs and n <= 4
    bipartite_characterization,  // chi_dd == 2  <=>  complete bipartite
    complete_characterization,   // chi_dd == n  <=>  complete
    unicyclic_characterization,  // chi_dd == chi  <=>  C3, C4, C5 or C3 + leaves at one vertex
    reduction,                   // chi <= k  <=>  chi_dd(G + universal vertex) <= k + 1
};

std::string_view check_name(SurveyCheck c);
/// Throws std::invalid_argument for an unknown name.
SurveyCheck parse_check(std::string_view name);
std::vector<SurveyCheck> all_checks();

struct Counterexample {
    std::string check;
    std::string graph6;
    std::string relation;
    double lhs = 0;
    double rhs = 0;
};

struct CheckTally {
    std::string check;
    int applicable = 0;
    int passed = 0;
    int failed = 0;
};

struct SurveyReport {
    int n_min = 0;
    int n_max = 0;
    int graphs = 0;
    /// Graphs outside every check's domain (the one-vertex graph).
    int skipped = 0;
    /// Graphs whose search hit the node ceiling; their checks did not run.
    int inconclusive = 0;
    bool complete = true;
    std::vector<CheckTally> tallies;
    std::vector<Counterexample> counterexamples;

    bool clean() const { return counterexamples.empty(); }
};

struct SurveyOptions {
    /// Smallest order enumerated by survey().
    int n_min = 1;
    /// Required for n_max = 7.
    bool long_run = false;
    SolveOptions solve;
    /// Worker threads; the report does not depend on this.
    unsigned jobs = 1;
};

/// Runs the checks on one representative of every isomorphism class of
/// connected graphs with n_min <= n <= n_max, ordered by n then adjacency code.
SurveyReport survey(int n_max, const std::vector<SurveyCheck>& checks,
                    const SurveyOptions& opts = {});

/// Same, over an explicit graph list; n_min/n_max are taken from the list.
SurveyReport survey_graphs(const std::vector<Graph>& graphs, const std::vector<SurveyCheck>& checks,
                           const SurveyOptions& opts = {});

/// Closed form against the exact solver for one family instance.
struct FamilyComparison {
    std::string instance;
    std::string graph6;
    int formula = 0;
    int solver = 0;
    bool agree() const { return formula == solver; }
};

struct FamilyCheckReport {
    std::string family;
    int n_max = 0;
    std::vector<FamilyComparison> instances;
    int inconclusive = 0;

    int disagreements() const;
};

/// Family instances with at most n_max vertices that have a closed form.
/// multipartite: up to 4 parts of size <= 3 (non-increasing part sizes);
/// bistar: p, q <= 4; kn-leaves: m <= floor(n/2) hubs with 1 or 2 leaves each.
std::vector<FamilySpec> family_instances(std::string_view family, int n_max);

FamilyCheckReport family_check(std::string_view family, int n_max, const SurveyOptions& opts = {});

}  // namespace domcolor
