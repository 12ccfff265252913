#pragma once

#include <vector>

#include "mct/circuit.hpp"
#include "mct/coloring.hpp"
#include "mct/eulerize.hpp"

namespace mct {

struct ThresholdInfo {
    long long bound = 0;  // floor of the guarantee formula, clamped at 0
    long long n_min = 0;  // smallest n at which the clamped bound is positive
};

/// Slack constant for the n^{3/2} term of the guarantee formulas.
inline constexpr double kThresholdSlack = 2.0;

/// Circuit-length guarantee for k-colorings of K_n:
///   k = 2:  floor(2n^2/9      - 2 n^{3/2}), clamped at 0
///   k >= 3: floor(n^2/(8 k^2) - 2 n^{3/2}), clamped at 0
ThresholdInfo guarantee_threshold(long long n, int k);

struct SolveReport {
    ColorId color = 0;
    Component component;
    Trail circuit;
    std::vector<long long> forest_sizes; // removed edges per color
    long long threshold = 0;
    bool threshold_ok = true;
};

/// The full pipeline: eulerize, pick the residual component with the most
/// edges across all colors (ties: lowest color, then smallest vertex id), and
/// emit its Euler circuit. If every residual class is empty the certificate
/// is the length-0 trail at vertex 0.
SolveReport solve(const EdgeColoring& c, int threads = 1);

} // namespace mct
