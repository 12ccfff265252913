#pragma once

#include <vector>

#include "mct/coloring.hpp"

namespace mct {

/// Acyclic edge set whose removal leaves the color class with all degrees even.
struct ParityForest {
    ColorId color = 0;
    std::vector<Edge> edges; // ascending (u, v)
};

struct EulerizedColoring {
    EdgeColoring base;
    std::vector<ColorClassGraph> residual; // per color, base class minus forest
    std::vector<ParityForest> forests;     // per color

    long long removed_total() const {
        long long s = 0;
        for (const auto& f : forests) s += static_cast<long long>(f.edges.size());
        return s;
    }
};

/// Parity-correcting forest of g. Deterministic: per component, a BFS tree
/// grown from the smallest vertex id with neighbors taken in ascending order;
/// non-root vertices are processed in reverse discovery order and the edge to
/// the parent is kept iff the vertex's remaining parity deficit is odd.
ParityForest parity_forest(const ColorClassGraph& g);

/// Applies parity_forest independently per color. threads > 1 runs the color
/// loop in parallel; results are identical to sequential execution.
EulerizedColoring eulerize(const EdgeColoring& c, int threads = 1);

} // namespace mct
