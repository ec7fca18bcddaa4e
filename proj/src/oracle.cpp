#include "domcolor/oracle.hpp"

#include <string>
#include <vector>

#include "domcolor/solvers.hpp"

namespace domcolor {

OracleResult oracle_minimum(const Graph& g, const std::function<bool(const Coloring&)>& accept) {
    const int n = g.order();
    if (n > kMaxOracleOrder)
        throw SolverError("oracle supports n <= " + std::to_string(kMaxOracleOrder));
    // a[i] <= 1 + max(a[0..i-1]); prefix_max[i] = max(a[0..i]).
    std::vector<int> a(n, 0);
    std::vector<int> prefix_max(n, 0);
    std::optional<OracleResult> best;
    long long count = 0;
    for (;;) {
        ++count;
        const int k = prefix_max[n - 1] + 1;
        if (!best || k < best->value) {
            Coloring c(a);
            if (accept(c)) best = OracleResult{k, c, 0};
        }
        int i = n - 1;
        while (i > 0 && a[i] > prefix_max[i - 1]) --i;
        if (i == 0) break;
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (int j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    if (!best) throw SolverError("no set partition satisfies the predicate");
    best->partitions = count;
    return *best;
}

OracleResult oracle_chi_dd(const Graph& g) {
    require_solvable(g, 2);
    return oracle_minimum(g, [&](const Coloring& c) { return check_domination_coloring(g, c).empty(); });
}

}  // namespace domcolor
