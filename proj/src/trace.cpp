#include "mct/trace.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace mct {

namespace {

constexpr double kEps = 1e-9;

Inequality ineq(std::string name, double lhs, double rhs) {
    Inequality q;
    q.name = std::move(name);
    q.lhs = lhs;
    q.rhs = rhs;
    q.holds = lhs >= rhs - kEps;
    return q;
}

// Largest component by order; ties by edge count, then smallest vertex id.
// components() already sorts by (edges, order, id), so the first entry of
// maximum order wins.
const Component& largest_by_order(const std::vector<Component>& comps) {
    const Component* best = &comps.front();
    for (const Component& c : comps)
        if (c.vertex_count > best->vertex_count) best = &c;
    return *best;
}

} // namespace

const char* case_label_name(CaseLabel c) {
    switch (c) {
    case CaseLabel::A: return "A";
    case CaseLabel::B: return "B";
    case CaseLabel::C: return "C";
    case CaseLabel::D: return "D";
    }
    return "?";
}

CaseLabel classify_case(long long n, long long n1) {
    if (n < 1 || n1 < 1 || n1 > n) throw Error(Err::BadN, "need 1 <= n1 <= n");
    if (3 * n1 < n) return CaseLabel::A;
    if (3 * n1 <= 2 * n) return CaseLabel::B;
    // C requires n1 <= n - 2 sqrt(n), i.e. (n - n1)^2 >= 4n with n1 < n.
    if (n1 < n && (n - n1) * (n - n1) >= 4 * n) return CaseLabel::C;
    return CaseLabel::D;
}

namespace {

struct Measured {
    EulerizedColoring eu;
    std::vector<Component> blue_comps; // residual color 1
    std::vector<Component> red_comps;  // residual color 0
    int n1 = 0;
    int n1_swapped = 0;
};

Measured measure(const EdgeColoring& c) {
    Measured m{eulerize(c), {}, {}, 0, 0};
    m.red_comps = components(m.eu.residual[0]);
    m.blue_comps = components(m.eu.residual[1]);
    m.n1 = largest_by_order(m.blue_comps).vertex_count;
    m.n1_swapped = largest_by_order(m.red_comps).vertex_count;
    return m;
}

} // namespace

CaseTrace case_diagnose(const EdgeColoring& c) {
    if (c.k() != 2) throw Error(Err::BadK, "case analysis requires exactly 2 colors");
    Measured m = measure(c);
    CaseTrace t;
    t.n = c.n();
    t.n1 = m.n1;
    t.label = classify_case(t.n, t.n1);
    t.n1_swapped = m.n1_swapped;
    t.label_swapped = classify_case(t.n, t.n1_swapped);
    return t;
}

CaseTrace proof_trace(const EdgeColoring& c) {
    if (c.k() != 2) throw Error(Err::BadK, "case analysis requires exactly 2 colors");
    Measured m = measure(c);

    CaseTrace t;
    const double n = static_cast<double>(c.n());
    const double rt = std::sqrt(n);
    t.n = c.n();
    t.n1 = m.n1;
    t.label = classify_case(t.n, t.n1);
    t.n1_swapped = m.n1_swapped;
    t.label_swapped = classify_case(t.n, t.n1_swapped);
    const double n1 = static_cast<double>(t.n1);

    const ColorClassGraph& red = m.eu.residual[0];
    const ColorClassGraph& blue = m.eu.residual[1];
    const Component& u1 = largest_by_order(m.blue_comps);

    if (t.label == CaseLabel::A) {
        // Every blue component is small, so the red side carries almost all
        // edges and its average degree is ~2n/3.
        const double red_edges = static_cast<double>(red.edge_total());
        t.inequalities.push_back(
            ineq("case_a_red_edges", red_edges, 0.5 * n * (2.0 * n / 3.0) - 2.0 * n));
        t.inequalities.push_back(
            ineq("case_a_avg_red_degree", 2.0 * red_edges / n, 2.0 * n / 3.0 - 4.0));
        return t;
    }

    if (t.label == CaseLabel::D) {
        // Both largest components must nearly span for the intersection
        // argument; with one color empty the premise simply fails and the
        // trace reports the other side's component instead.
        const Component& r1 = largest_by_order(m.red_comps);
        const double red_order = static_cast<double>(r1.vertex_count);
        Inequality hyp = ineq("case_d_hypothesis", red_order, n - 2.0 * rt);
        hyp.holds = red_order > n - 2.0 * rt + kEps; // strict, per the case split
        t.hypothesis_met = hyp.holds;
        t.inequalities.push_back(hyp);
        if (!t.hypothesis_met) {
            t.inequalities.push_back(ineq("fallback_blue_component_edges",
                                          static_cast<double>(u1.edge_count), 0.0));
            return t;
        }

        std::vector<std::uint8_t> in_both(c.n(), 0);
        for (Vertex v : u1.vertices) in_both[v] = 1;
        for (Vertex v : r1.vertices)
            if (in_both[v]) in_both[v] = 2;
        auto edges_inside = [&](const ColorClassGraph& g) {
            long long cnt = 0;
            for (const Edge& e : g.edges)
                if (in_both[e.first] == 2 && in_both[e.second] == 2) ++cnt;
            return cnt;
        };
        const double inter_edges =
            static_cast<double>(edges_inside(red) + edges_inside(blue));
        t.inequalities.push_back(ineq("case_d_intersection_edges", inter_edges,
                                      n * (n - 1.0) / 2.0 - 4.0 * n * rt - 2.0 * n));
        const double winner = static_cast<double>(
            std::max(u1.edge_count, r1.edge_count));
        t.inequalities.push_back(ineq("case_d_split", winner, inter_edges / 2.0));
        t.inequalities.push_back(
            ineq("case_d_bound", winner, n * n / 4.0 - 2.0 * n * rt));
        return t;
    }

    // Cases B and C share the red bipartite machinery between U1 and its
    // complement: nearly complete in red, one vertex of high cross degree,
    // and the common red component V1 that this produces.
    std::vector<std::uint8_t> in_u1(c.n(), 0);
    for (Vertex v : u1.vertices) in_u1[v] = 1;

    long long cross_red = 0;
    std::vector<long long> cross_deg(c.n(), 0); // red degree into U1, complement side
    std::vector<Edge> cross_edges;
    for (const Edge& e : red.edges) {
        if (in_u1[e.first] == in_u1[e.second]) continue;
        ++cross_red;
        cross_edges.push_back(e);
        Vertex outside = in_u1[e.first] ? e.second : e.first;
        ++cross_deg[outside];
    }
    t.inequalities.push_back(ineq("red_cross_edges", static_cast<double>(cross_red),
                                  n1 * (n - n1) - 2.0 * n));

    long long best_deg = 0;
    for (Vertex v = 0; v < c.n(); ++v)
        if (!in_u1[v]) best_deg = std::max(best_deg, cross_deg[v]);
    const double pigeonhole = (t.n1 < t.n) ? n1 - 2.0 * n / (n - n1) : 0.0;
    t.inequalities.push_back(
        ineq("max_cross_degree", static_cast<double>(best_deg), pigeonhole));
    t.inequalities.push_back(ineq("degree_bound_sqrt", pigeonhole, n1 - rt));

    // V1 = U1's share of the largest component of the red cross bipartite
    // graph (largest by edges, as components() orders them).
    ColorClassGraph cross_graph = make_class_graph(c.n(), 0, cross_edges);
    std::vector<Component> cross_comps = components(cross_graph);
    const Component& cc = cross_comps.front();
    for (Vertex v : cc.vertices)
        if (in_u1[v]) t.v1.push_back(v);
    t.inequalities.push_back(
        ineq("v1_size", static_cast<double>(t.v1.size()), n1 - rt));

    // The full red component containing V1 (not just its bipartite part).
    const Component* red_v1 = nullptr;
    if (!t.v1.empty()) {
        for (const Component& comp : m.red_comps)
            if (std::binary_search(comp.vertices.begin(), comp.vertices.end(),
                                   t.v1.front())) {
                red_v1 = &comp;
                break;
            }
    }
    const double red_v1_edges =
        red_v1 ? static_cast<double>(red_v1->edge_count) : 0.0;
    t.inequalities.push_back(ineq("v1_component_edges", red_v1_edges,
                                  (n1 - rt) * (n - n1) - 2.0 * n));

    if (t.label == CaseLabel::B) {
        t.inequalities.push_back(ineq("case_b_bound", red_v1_edges,
                                      (n / 3.0 - rt) * (2.0 * n / 3.0) - 2.0 * n));
        return t;
    }

    // Case C: count edges inside U1 and how many of them touch V1, then the
    // combined total that one of the two candidate components must halve.
    std::unordered_set<Vertex> v1_set(t.v1.begin(), t.v1.end());
    long long inside = 0, inside_v1 = 0;
    auto count_inside = [&](const ColorClassGraph& g) {
        for (const Edge& e : g.edges) {
            if (!in_u1[e.first] || !in_u1[e.second]) continue;
            ++inside;
            if (v1_set.count(e.first) || v1_set.count(e.second)) ++inside_v1;
        }
    };
    count_inside(red);
    count_inside(blue);
    t.inequalities.push_back(ineq("u1_induced_edges", static_cast<double>(inside),
                                  n1 * (n1 - 1.0) / 2.0 - 2.0 * n));
    t.inequalities.push_back(ineq("u1_v1_incident_edges",
                                  static_cast<double>(inside_v1),
                                  n1 * (n1 - 1.0) / 2.0 - 3.0 * n));

    long long cross_v1 = 0;
    for (const Edge& e : cross_edges)
        if (v1_set.count(e.first) || v1_set.count(e.second)) ++cross_v1;
    const double total = static_cast<double>(inside_v1 + cross_v1);
    t.inequalities.push_back(
        ineq("case_c_total", total, 4.0 * n * n / 9.0 - 2.0 * n * rt));

    const double winner =
        std::max(red_v1_edges, static_cast<double>(u1.edge_count));
    t.inequalities.push_back(ineq("case_c_split", winner, total / 2.0));
    t.inequalities.push_back(
        ineq("case_c_winner", winner, 2.0 * n * n / 9.0 - 2.0 * n * rt));
    return t;
}

PeelReport min_degree_peel(const ColorClassGraph& g, double d) {
    if (d < 0) throw Error(Err::BadM, "peel threshold must be >= 0");

    PeelReport rep;
    rep.threshold = d;
    rep.avg_degree =
        g.n > 0 ? 2.0 * static_cast<double>(g.edge_total()) / g.n : 0.0;

    std::vector<long long> deg(g.degree.begin(), g.degree.end());
    std::vector<std::uint8_t> alive(g.n, 1);
    std::set<Vertex> pending; // deficient vertices, smallest id first
    for (Vertex v = 0; v < g.n; ++v)
        if (deg[v] < d) pending.insert(v);

    while (!pending.empty()) {
        Vertex v = *pending.begin();
        pending.erase(pending.begin());
        alive[v] = 0;
        for (int i = g.adj_offset[v]; i < g.adj_offset[v + 1]; ++i) {
            Vertex w = g.adj[i].first;
            if (alive[w] && --deg[w] < d) pending.insert(w);
        }
    }

    for (Vertex v = 0; v < g.n; ++v)
        if (alive[v]) rep.survivors.push_back(v);

    if (!rep.survivors.empty()) {
        long long min_deg = -1;
        for (Vertex v : rep.survivors) {
            if (min_deg < 0 || deg[v] < min_deg) min_deg = deg[v];
        }
        rep.min_degree = min_deg;
        for (const Edge& e : g.edges)
            if (alive[e.first] && alive[e.second]) ++rep.edge_count;
    }
    return rep;
}

} // namespace mct
