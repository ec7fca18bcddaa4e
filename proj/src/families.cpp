#include "domcolor/families.hpp"

#include <numeric>
#include <sstream>

#include "overloaded.hpp"

namespace domcolor {
namespace {

using detail::Overloaded;

void require(bool ok, const std::string& field, const std::string& why) {
    if (!ok) throw FamilyError(field, why);
}

void add_clique(std::vector<Graph::Edge>& edges, int first, int count) {
    for (int i = first; i < first + count; ++i)
        for (int j = i + 1; j < first + count; ++j) edges.emplace_back(i, j);
}

void add_path(std::vector<Graph::Edge>& edges, int n) {
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
}

}  // namespace

void validate(const FamilySpec& spec) {
    std::visit(
        Overloaded{
            [](const Path& s) { require(s.n >= 2, "n", "path needs n >= 2"); },
            [](const Cycle& s) { require(s.n >= 3, "n", "cycle needs n >= 3"); },
            [](const Complete& s) { require(s.n >= 1, "n", "complete graph needs n >= 1"); },
            [](const CompleteMultipartite& s) {
                require(s.parts.size() >= 2, "parts", "need at least two parts");
                for (int p : s.parts) require(p >= 1, "parts", "every part needs size >= 1");
            },
            [](const Star& s) { require(s.leaves >= 1, "n", "star needs at least one leaf"); },
            [](const BiStar& s) {
                require(s.p >= 2, "p", "bi-star centre degree p must be >= 2");
                require(s.q >= 2, "q", "bi-star centre degree q must be >= 2");
            },
            [](const Wheel& s) { require(s.n >= 3, "n", "wheel rim needs n >= 3"); },
            [](const Petersen&) {},
            [](const KnWithLeaves& s) {
                require(s.n >= 1, "n", "complete core needs n >= 1");
                const auto m = static_cast<int>(s.leaf_counts.size());
                require(m >= 1 && m <= s.n, "leaf-counts", "need 1 <= m <= n hubs");
                for (auto [hub, count] : s.leaf_counts) {
                    require(hub >= 0 && hub < s.n, "leaf-counts",
                            "hub index " + std::to_string(hub) + " outside [0, n)");
                    require(count >= 1, "leaf-counts", "every hub needs at least one leaf");
                }
            },
            [](const C3WithLeaves& s) { require(s.leaves >= 0, "n", "leaf count must be >= 0"); },
        },
        spec);
}

Graph generate(const FamilySpec& spec) {
    validate(spec);
    std::vector<Graph::Edge> edges;
    const int n = std::visit(
        Overloaded{
            [&](const Path& s) {
                add_path(edges, s.n);
                return s.n;
            },
            [&](const Cycle& s) {
                add_path(edges, s.n);
                edges.emplace_back(0, s.n - 1);
                return s.n;
            },
            [&](const Complete& s) {
                add_clique(edges, 0, s.n);
                return s.n;
            },
            [&](const CompleteMultipartite& s) {
                std::vector<int> start(s.parts.size() + 1, 0);
                std::partial_sum(s.parts.begin(), s.parts.end(), start.begin() + 1);
                const int total = start.back();
                for (std::size_t a = 0; a < s.parts.size(); ++a)
                    for (int u = start[a]; u < start[a + 1]; ++u)
                        for (int v = start[a + 1]; v < total; ++v) edges.emplace_back(u, v);
                return total;
            },
            [&](const Star& s) {
                for (int i = 1; i <= s.leaves; ++i) edges.emplace_back(0, i);
                return s.leaves + 1;
            },
            [&](const BiStar& s) {
                edges.emplace_back(0, 1);
                int next = 2;
                for (int i = 0; i < s.p - 1; ++i) edges.emplace_back(0, next++);
                for (int i = 0; i < s.q - 1; ++i) edges.emplace_back(1, next++);
                return next;
            },
            [&](const Wheel& s) {
                add_path(edges, s.n);
                edges.emplace_back(0, s.n - 1);
                for (int i = 0; i < s.n; ++i) edges.emplace_back(i, s.n);
                return s.n + 1;
            },
            [&](const Petersen&) {
                for (int i = 0; i < 5; ++i) {
                    edges.emplace_back(i, (i + 1) % 5);
                    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
                    edges.emplace_back(i, i + 5);
                }
                return 10;
            },
            [&](const KnWithLeaves& s) {
                add_clique(edges, 0, s.n);
                int next = s.n;
                for (auto [hub, count] : s.leaf_counts)
                    for (int i = 0; i < count; ++i) edges.emplace_back(hub, next++);
                return next;
            },
            [&](const C3WithLeaves& s) {
                add_clique(edges, 0, 3);
                for (int i = 0; i < s.leaves; ++i) edges.emplace_back(0, 3 + i);
                return 3 + s.leaves;
            },
        },
        spec);
    if (n > kMaxVertices) throw FamilyError("n", "instance exceeds " + std::to_string(kMaxVertices) + " vertices");
    return Graph(n, edges);
}

std::string family_keyword(const FamilySpec& spec) {
    static const char* const names[] = {"path",   "cycle",   "complete", "multipartite",
                                        "star",   "bistar",  "wheel",    "petersen",
                                        "kn-leaves", "c3-leaves"};
    return names[spec.index()];
}

std::string describe(const FamilySpec& spec) {
    std::ostringstream out;
    out << family_keyword(spec) << '(';
    std::visit(Overloaded{
                   [&](const Path& s) { out << s.n; },
                   [&](const Cycle& s) { out << s.n; },
                   [&](const Complete& s) { out << s.n; },
                   [&](const CompleteMultipartite& s) {
                       for (std::size_t i = 0; i < s.parts.size(); ++i)
                           out << (i ? "," : "") << s.parts[i];
                   },
                   [&](const Star& s) { out << s.leaves; },
                   [&](const BiStar& s) { out << s.p << ',' << s.q; },
                   [&](const Wheel& s) { out << s.n; },
                   [&](const Petersen&) {},
                   [&](const KnWithLeaves& s) {
                       out << s.n << ';';
                       bool first = true;
                       for (auto [hub, count] : s.leaf_counts) {
                           out << (first ? "" : ",") << hub << ':' << count;
                           first = false;
                       }
                   },
                   [&](const C3WithLeaves& s) { out << s.leaves; },
               },
               spec);
    out << ')';
    return out.str();
}

}  // namespace domcolor
