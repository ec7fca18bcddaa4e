#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "domcolor/graph.hpp"

namespace domcolor {

// Parametrised graph families. Vertex labelings are fixed so that test
// vectors and witnesses are reproducible; each struct documents its own.

/// v0 - v1 - ... - v(n-1).
struct Path { int n; };
/// Path labeling closed by the edge (n-1, 0).
struct Cycle { int n; };
struct Complete { int n; };
/// Parts occupy consecutive index blocks in the given order.
struct CompleteMultipartite { std::vector<int> parts; };
/// K(1,leaves): centre 0, leaves 1..leaves.
struct Star { int leaves; };
/// Centres u = 0 (degree p) and v = 1 (degree q); u's p-1 leaves follow,
/// then v's q-1 leaves.
struct BiStar { int p; int q; };
/// Rim cycle on 0..n-1, hub n.
struct Wheel { int n; };
/// Outer cycle 0..4, inner pentagram 5..9 (i+5 ~ (i+2)%5+5), spokes i ~ i+5.
struct Petersen {};
/// K(n) on 0..n-1 with leaf_counts[h] pendant leaves at hub h. Leaves are
/// numbered from n upwards, grouped by increasing hub.
struct KnWithLeaves {
    int n;
    std::map<int, int> leaf_counts;
};
/// Triangle 0,1,2 with `leaves` pendant vertices 3.. attached at vertex 0.
struct C3WithLeaves { int leaves; };

using FamilySpec = std::variant<Path, Cycle, Complete, CompleteMultipartite, Star, BiStar, Wheel,
                                Petersen, KnWithLeaves, C3WithLeaves>;

/// Invalid family parameter; the message names the offending field.
class FamilyError : public std::out_of_range {
public:
    FamilyError(const std::string& field, const std::string& why)
        : std::out_of_range(field + ": " + why), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

void validate(const FamilySpec& spec);
Graph generate(const FamilySpec& spec);

/// Short family keyword as used on the command line ("path", "bistar", ...).
std::string family_keyword(const FamilySpec& spec);
/// Human readable instance label, e.g. "path(7)" or "kn_leaves(5;0:1,1:1)".
std::string describe(const FamilySpec& spec);

}  // namespace domcolor
