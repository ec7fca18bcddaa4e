#include <doctest.h>

#include <algorithm>
#include <vector>

#include "domcolor/classify.hpp"
#include "domcolor/enumerate.hpp"
#include "domcolor/families.hpp"
#include "domcolor/oracle.hpp"
#include "domcolor/solvers.hpp"

using namespace domcolor;

namespace {

// Smallest k admitting a proper colouring, by trying every assignment in
// k^n. Only meant for n <= 10 and small k.
int brute_chromatic(const Graph& g) {
    const int n = g.order();
    for (int k = 1;; ++k) {
        std::vector<int> a(n, 0);
        while (true) {
            bool ok = true;
            for (auto [u, v] : g.edges())
                if (a[u] == a[v]) ok = false;
            if (ok) return k;
            int i = 0;
            while (i < n && ++a[i] == k) a[i++] = 0;
            if (i == n) break;
        }
    }
}

int brute_domination(const Graph& g) {
    const int n = g.order();
    int best = n;
    for (unsigned long s = 1; s < (1UL << n); ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            bool hit = (s >> v) & 1;
            for (int u = 0; u < n && !hit; ++u) hit = ((s >> u) & 1) && g.adjacent(u, v);
            ok = hit;
        }
        if (ok) best = std::min(best, __builtin_popcountl(s));
    }
    return best;
}

void check_result_sound(const Graph& g, const ColoringResult& r,
                        bool (*accept)(const Graph&, const Coloring&)) {
    REQUIRE(r.optimal());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->color_count() == r.value);
    CHECK(accept(g, *r.witness));
}

}  // namespace

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(generate(Cycle{5})).value == 3);
    CHECK(chromatic_number(generate(Complete{6})).value == 6);
    const Graph p = generate(Petersen{});
    CHECK(brute_chromatic(p) == 3);
    CHECK(chromatic_number(p).value == 3);
}

TEST_CASE("domination number") {
    const auto star = domination_number(generate(Star{7}));
    CHECK(star.size == 1);
    CHECK(star.witness == bit(0));
    CHECK(brute_domination(generate(Path{7})) == 3);
    CHECK(domination_number(generate(Path{7})).size == 3);
    CHECK(brute_domination(generate(Petersen{})) == 3);
    CHECK(domination_number(generate(Petersen{})).size == 3);
}

TEST_CASE("dominator and dominated chromatic numbers") {
    const Graph p = generate(Petersen{});
    CHECK(dominated_chromatic(p).value == 4);
    CHECK(dominator_chromatic(p).value == 5);
    CHECK(dominator_chromatic(generate(BiStar{3, 3})).value == 3);
    for (int r = 2; r <= 4; ++r)
        for (int s = 2; s <= 4; ++s) {
            const Graph k = generate(CompleteMultipartite{{r, s}});
            CHECK(dominator_chromatic(k).value == 2);
            CHECK(dominated_chromatic(k).value == 2);
        }
}

TEST_CASE("domination chromatic number") {
    CHECK(domination_chromatic(generate(Path{7})).value == 5);
    CHECK(domination_chromatic(generate(Petersen{})).value == 5);
    CHECK(domination_chromatic(generate(Cycle{4})).value == 2);
    CHECK(domination_chromatic(generate(KnWithLeaves{3, {{0, 1}, {1, 1}}})).value == 4);
    CHECK(oracle_chi_dd(generate(KnWithLeaves{3, {{0, 1}, {1, 1}}})).value == 4);
}

TEST_CASE("full report") {
    SUBCASE("C6 meets the product bound") {
        const InvariantReport r = full_report(generate(Cycle{6}));
        CHECK(r.chi == 2);
        CHECK(r.gamma == 2);
        CHECK(brute_domination(generate(Cycle{6})) == 2);
        CHECK(r.chi_dd == 4);
        CHECK(r.chi_dd == r.chi * r.gamma);
    }
    SUBCASE("W6") {
        const InvariantReport r = full_report(generate(Wheel{6}));
        CHECK(r.gamma == 1);
        CHECK(r.chi == 3);
        CHECK(r.chi_dd == 3);
    }
    SUBCASE("K4") {
        const InvariantReport r = full_report(generate(Complete{4}));
        CHECK(r.chi == 4);
        CHECK(r.gamma == 1);
        CHECK(r.chi_d == 4);
        CHECK(r.chi_dom == 4);
        CHECK(r.chi_dd == 4);
    }
    SUBCASE("Petersen") {
        const InvariantReport r = full_report(generate(Petersen{}));
        CHECK(r.status == SolveStatus::optimal);
        CHECK(r.chi == 3);
        CHECK(r.gamma == 3);
        CHECK(r.chi_d == 5);
        CHECK(r.chi_dom == 4);
        CHECK(r.chi_dd == 5);
        REQUIRE(r.chi_dd_witness.has_value());
        CHECK(is_domination(generate(Petersen{}), *r.chi_dd_witness));
    }
}

TEST_CASE("solver domain") {
    CHECK_THROWS_AS(domination_chromatic(Graph(1, {})), SolverError);
    CHECK_THROWS_AS(domination_chromatic(Graph(4, {{0, 1}, {2, 3}})), SolverError);
    CHECK_THROWS_AS(chromatic_number(Graph(3, {{0, 1}})), SolverError);
}

TEST_CASE("node ceiling yields an inconclusive result, never a value") {
    SolveOptions tight;
    tight.max_nodes = 5;
    const ColoringResult r = domination_chromatic(generate(Petersen{}), tight);
    CHECK(r.status == SolveStatus::inconclusive);
    CHECK_FALSE(r.witness.has_value());
    CHECK_THROWS_AS(definite(r, "test"), SearchExhausted);
    CHECK(full_report(generate(Petersen{}), tight).status == SolveStatus::inconclusive);
}

TEST_CASE("degeneracy order is a permutation") {
    const Graph g = generate(KnWithLeaves{5, {{0, 1}, {1, 2}}});
    auto order = degeneracy_order(g);
    REQUIRE(static_cast<int>(order.size()) == g.order());
    std::sort(order.begin(), order.end());
    for (int i = 0; i < g.order(); ++i) CHECK(order[i] == i);
}

TEST_CASE("search properties on every class up to six vertices") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : connected_graphs(n, true)) {
            const InvariantReport r = full_report(g);
            REQUIRE(r.status == SolveStatus::optimal);
            CHECK(r.chi == brute_chromatic(g));
            CHECK(r.gamma == brute_domination(g));
            CHECK(popcount(r.gamma_witness) == r.gamma);

            check_result_sound(g, chromatic_number(g), is_proper);
            check_result_sound(g, dominator_chromatic(g), is_dominator);
            check_result_sound(g, dominated_chromatic(g), is_dominated);
            check_result_sound(g, domination_chromatic(g), is_domination);

            // Optimality: one colour fewer is infeasible for the same search.
            ColoringSearch s(g, {true, true}, kDefaultMaxNodes);
            CHECK(s.feasible(r.chi_dd) == ColoringSearch::Outcome::feasible);
            CHECK(s.feasible(r.chi_dd - 1) == ColoringSearch::Outcome::infeasible);

            SolveOptions unbounded;
            unbounded.bounded_start = false;
            CHECK(domination_chromatic(g, unbounded).value == r.chi_dd);
        }
    }
}
