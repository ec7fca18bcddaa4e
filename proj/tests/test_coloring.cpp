#include <doctest.h>

#include <vector>

#include "domcolor/coloring.hpp"
#include "domcolor/enumerate.hpp"
#include "domcolor/families.hpp"

using namespace domcolor;

namespace {

VertexSet set_of(std::initializer_list<Vertex> vs) {
    VertexSet s = 0;
    for (Vertex v : vs) s |= bit(v);
    return s;
}

// Definitions restated without bitmasks, for the exhaustive comparison below.
bool naive_domination(const Graph& g, const std::vector<int>& color) {
    const int n = g.order();
    int k = 0;
    for (int c : color) k = std::max(k, c + 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) && color[u] == color[v]) return false;
    for (int v = 0; v < n; ++v) {
        bool dominates = false;
        for (int c = 0; c < k && !dominates; ++c) {
            bool all = true;
            for (int x = 0; x < n; ++x)
                if (color[x] == c && x != v && !g.adjacent(v, x)) all = false;
            dominates = all;
        }
        if (!dominates) return false;
    }
    for (int c = 0; c < k; ++c) {
        bool has_common = false;
        for (int w = 0; w < n && !has_common; ++w) {
            bool all = true;
            for (int x = 0; x < n; ++x)
                if (color[x] == c && !g.adjacent(w, x)) all = false;
            has_common = all;
        }
        if (!has_common) return false;
    }
    return true;
}

// Advances a restricted-growth string; false once exhausted.
bool next_rgs(std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    for (int i = n - 1; i > 0; --i) {
        int prefix_max = 0;
        for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, a[j]);
        if (a[i] <= prefix_max) {
            ++a[i];
            for (int j = i + 1; j < n; ++j) a[j] = 0;
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("coloring construction") {
    const Coloring c({0, 1, 0, 2});
    CHECK(c.vertex_count() == 4);
    CHECK(c.color_count() == 3);
    CHECK(c.color_class(0) == set_of({0, 2}));
    CHECK(c.to_line() == "0102");
    CHECK(Coloring::from_line("0102") == c);
    CHECK(Coloring::from_line("0123456789ab").color_count() == 12);
    CHECK(Coloring::from_classes(4, {set_of({1, 3}), set_of({0, 2})}).to_line() == "1010");
    CHECK(Coloring({2, 0, 1, 2}).normalized().to_line() == "0120");
    CHECK(Coloring::discrete(3).to_line() == "012");

    CHECK_THROWS_AS(Coloring({}), ColoringError);
    CHECK_THROWS_AS(Coloring({0, 2}), ColoringError);
    CHECK_THROWS_AS(Coloring({0, -1}), ColoringError);
    CHECK_THROWS_AS(Coloring::from_line("0!"), ColoringError);
    CHECK_THROWS_AS(Coloring::from_classes(3, {set_of({0, 1}), set_of({1, 2})}), ColoringError);
    CHECK_THROWS_AS(Coloring::from_classes(3, {set_of({0, 1})}), ColoringError);
}

TEST_CASE("vertex dominates class") {
    const Graph star = generate(Star{5});
    CHECK(vertex_dominates_class(star, 0, set_of({1, 2, 3, 4, 5})));
    const Graph p4 = generate(Path{4});
    CHECK_FALSE(vertex_dominates_class(p4, 0, set_of({1, 3})));
    for (Vertex v = 0; v < 4; ++v) CHECK(vertex_dominates_class(p4, v, bit(v)));
}

TEST_CASE("class dominated by a common neighbour") {
    CHECK(class_dominated_by(generate(Path{3}), set_of({0, 2})) == 1);
    CHECK_FALSE(class_dominated_by(generate(Cycle{8}), set_of({3, 7})).has_value());
    CHECK(class_dominated_by(generate(Complete{2}), bit(0)) == 1);
    // The common neighbour must be outside the class: a lone vertex of K1 has none.
    CHECK_FALSE(class_dominated_by(Graph(1, {}), bit(0)).has_value());
}

TEST_CASE("C8 class {3,7}: exhaustive scan for a common neighbour") {
    const Graph c8 = generate(Cycle{8});
    int common = 0;
    for (Vertex w = 0; w < 8; ++w) common += c8.adjacent(w, 3) && c8.adjacent(w, 7);
    CHECK(common == 0);
}

TEST_CASE("colouring predicates") {
    const Graph c4 = generate(Cycle{4});
    const Coloring two = Coloring::from_classes(4, {set_of({0, 2}), set_of({1, 3})});
    CHECK(is_proper(c4, two));
    CHECK(is_dominator(c4, two));
    CHECK(is_dominated(c4, two));
    CHECK(is_domination(c4, two));

    CHECK_FALSE(is_proper(generate(Complete{3}), Coloring({0, 0, 0})));

    const Graph p4 = generate(Path{4});
    CHECK(is_dominated(p4, two));
    CHECK_FALSE(is_dominator(p4, two));
}

TEST_CASE("violation reports") {
    const Graph p4 = generate(Path{4});
    CHECK(check_domination_coloring(p4, Coloring::from_classes(4, {set_of({0, 2}), bit(1), bit(3)}))
              .empty());
    const ViolationReport r =
        check_domination_coloring(p4, Coloring::from_classes(4, {set_of({0, 2}), set_of({1, 3})}));
    CHECK(r.undominating_vertices == std::vector<Vertex>{0, 3});
    CHECK(r.proper_violations.empty());
    CHECK(r.undominated_classes.empty());

    const Graph c6 = generate(Cycle{6});
    CHECK(check_domination_coloring(
              c6, Coloring::from_classes(6, {set_of({0, 2}), bit(1), set_of({3, 5}), bit(4)}))
              .empty());

    const ViolationReport bad = check_domination_coloring(generate(Complete{3}), Coloring({0, 0, 1}));
    CHECK(bad.proper_violations == std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
    CHECK_THROWS_AS(check_domination_coloring(p4, Coloring({0, 1})), ColoringError);
}

TEST_CASE("verifier agrees with the restated definitions on every partition") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : connected_graphs(n, false)) {
            std::vector<int> a(n, 0);
            do {
                const Coloring c(a);
                const bool expected = naive_domination(g, a);
                CHECK(is_domination(g, c) == expected);
                CHECK(check_domination_coloring(g, c).empty() == expected);
                CHECK(is_domination(g, c) == (is_proper(g, c) && is_dominator(g, c) && is_dominated(g, c)));
            } while (next_rgs(a));
        }
    }
}

TEST_CASE("properties of every colouring on small classes") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : connected_graphs(n, true)) {
            // The discrete colouring is proper and every vertex dominates its own class.
            const Coloring d = Coloring::discrete(n);
            CHECK(is_proper(g, d));
            CHECK(is_dominator(g, d));
            CHECK(is_dominated(g, d) == !g.has_isolated_vertex());
            std::vector<int> a(n, 0);
            do {
                const Coloring c(a);
                // Renaming colours never changes a verdict.
                CHECK(is_domination(g, c) == is_domination(g, c.normalized()));
                if (!is_proper(g, c)) CHECK_FALSE(check_domination_coloring(g, c).proper_violations.empty());
            } while (next_rgs(a));
        }
    }
}
