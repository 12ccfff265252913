#include "mct/engine.hpp"

#include <cmath>
#include <vector>

namespace mct {

namespace {

long long clamped_bound(long long n, int k) {
    const long double nn = static_cast<long double>(n);
    const long double main_term =
        (k == 2) ? 2.0L * nn * nn / 9.0L : nn * nn / (8.0L * static_cast<long double>(k) * k);
    const long double slack = static_cast<long double>(kThresholdSlack) * nn * std::sqrt(nn);
    const long double val = std::floor(main_term - slack);
    return val <= 0.0L ? 0 : static_cast<long long>(val);
}

} // namespace

ThresholdInfo guarantee_threshold(long long n, int k) {
    if (k < 2) throw Error(Err::BadK, "guarantee requires k >= 2");
    if (n < 1) throw Error(Err::BadN, "vertex count must be >= 1");

    ThresholdInfo info;
    info.bound = clamped_bound(n, k);

    // The real-valued formula crosses zero at sqrt(n) = 9 (k = 2) resp.
    // sqrt(n) = 16k^2, and is increasing past the crossing; walk up from
    // there to the first n with a positive floored bound.
    long long probe;
    if (k == 2) {
        probe = 81;
    } else {
        const long double root = 256.0L * std::pow(static_cast<long double>(k), 4.0L);
        probe = static_cast<long long>(root) - 2;
        if (probe < 1) probe = 1;
    }
    while (clamped_bound(probe, k) < 1) ++probe;
    info.n_min = probe;
    return info;
}

SolveReport solve(const EdgeColoring& c, int threads) {
    const EulerizedColoring eu = eulerize(c, threads);

    SolveReport rep;
    rep.forest_sizes.resize(c.k());
    for (ColorId col = 0; col < c.k(); ++col)
        rep.forest_sizes[col] = static_cast<long long>(eu.forests[col].edges.size());

    // Choose the residual component with the most edges; ties go to the
    // lowest color, then the smallest contained vertex id.
    bool found = false;
    Component best;
    ColorId best_color = 0;
    for (ColorId col = 0; col < c.k(); ++col) {
        std::vector<Component> comps = components(eu.residual[col]);
        const Component* pick = nullptr;
        for (const Component& comp : comps) {
            if (!pick || comp.edge_count > pick->edge_count ||
                (comp.edge_count == pick->edge_count &&
                 comp.vertices.front() < pick->vertices.front()))
                pick = &comp;
        }
        if (pick && (!found || pick->edge_count > best.edge_count)) {
            found = true;
            best = *pick;
            best_color = col;
        }
    }

    if (!found || best.edge_count == 0) {
        rep.color = 0;
        rep.component = Component{0, {0}, 1, 0};
        rep.circuit = Trail{0, {0}, false};
    } else {
        rep.color = best_color;
        rep.component = best;
        rep.circuit = euler_circuit(eu.residual[best_color], best);
    }

    rep.threshold = (c.k() >= 2) ? guarantee_threshold(c.n(), c.k()).bound : 0;
    rep.threshold_ok = rep.circuit.length() >= rep.threshold;
    return rep;
}

} // namespace mct
