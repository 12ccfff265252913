#pragma once

#include <cstdint>
#include <vector>

#include "mct/circuit.hpp"
#include "mct/coloring.hpp"

namespace mct {

/// Default edge-count guard for the exact searches; K_7 color classes
/// (at most 21 edges) stay in range.
inline constexpr int kOracleEdgeGuard = 25;

struct OracleOptions {
    int max_edges = kOracleEdgeGuard;
};

struct OracleResult {
    long long best = 0;
    Trail witness;                 // lexicographically least among maxima
    std::uint64_t nodes_explored = 0;
};

/// Exact longest trail by exhaustive search over (used-edge-set, endpoint)
/// states from every start vertex, ascending. Throws TooLarge past the guard.
OracleResult longest_trail_exact(const ColorClassGraph& g, const OracleOptions& opts = {});

/// Exact longest closed trail; 0 if the graph is a forest.
OracleResult longest_circuit_exact(const ColorClassGraph& g, const OracleOptions& opts = {});

enum class SearchMode { Trail, Circuit };

const char* search_mode_name(SearchMode m);

struct WorstCaseResult {
    long long value = 0;            // min over colorings of max over colors
    std::uint64_t witness_index = 0; // smallest coloring index achieving it
    EdgeColoring witness;
    std::uint64_t nodes_explored = 0;
};

/// Exhaustive minimum over all 2-colorings of K_n (edge {0,1} fixed red, the
/// red/blue swap symmetry) of the exact longest monochromatic trail or
/// circuit. n <= 6; n = 7 only with allow_n7. threads > 1 partitions the
/// per-class table fill; the result is identical to sequential execution.
WorstCaseResult worst_case_search(int n, SearchMode mode, int threads = 1, bool allow_n7 = false);

} // namespace mct
