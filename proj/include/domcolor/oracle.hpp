#pragma once

#include <functional>
#include <optional>

#include "domcolor/coloring.hpp"
#include "domcolor/graph.hpp"

namespace domcolor {

inline constexpr int kMaxOracleOrder = 10;

struct OracleResult {
    int value = 0;
    Coloring witness;
    long long partitions = 0;
};

/// Exhaustive minimum over every set partition of the vertex set, generated
/// as restricted-growth strings. Shares nothing with the branch-and-bound
/// search; the only common code is the predicate passed in.
OracleResult oracle_minimum(const Graph& g, const std::function<bool(const Coloring&)>& accept);

/// Minimum colour count of a domination colouring, by exhaustive partition
/// enumeration filtered through check_domination_coloring. Requires a
/// connected graph with 2 <= n <= kMaxOracleOrder.
OracleResult oracle_chi_dd(const Graph& g);

}  // namespace domcolor
