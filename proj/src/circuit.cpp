#include "mct/circuit.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace mct {

const char* verify_code_name(VerifyCode c) {
    switch (c) {
        case VerifyCode::Ok: return "Ok";
        case VerifyCode::BadColor: return "BadColor";
        case VerifyCode::RepeatedEdge: return "RepeatedEdge";
        case VerifyCode::NotAWalk: return "NotAWalk";
        case VerifyCode::BadClosure: return "BadClosure";
        case VerifyCode::BadVertex: return "BadVertex";
    }
    return "Unknown";
}

Trail euler_circuit(const ColorClassGraph& g, const Component& component) {
    if (component.edge_count == 0 || component.vertices.empty())
        throw Error(Err::EmptyComponent, "component has no edges");
    for (Vertex v : component.vertices)
        if (g.degree[v] & 1)
            throw Error(Err::NotEven, "vertex " + std::to_string(v) + " has odd degree");

    // connectivity check over the component's vertex set
    std::vector<char> in_comp(g.n, 0);
    for (Vertex v : component.vertices) in_comp[v] = 1;
    const Vertex start = component.vertices.front();
    {
        std::vector<Vertex> stack = {start};
        std::vector<char> seen(g.n, 0);
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (int i = g.adj_offset[v]; i < g.adj_offset[v + 1]; ++i) {
                const Vertex w = g.adj[i].first;
                if (!in_comp[w])
                    throw Error(Err::NotConnected, "edge leaves the component at vertex " +
                                                       std::to_string(w));
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != component.vertex_count)
            throw Error(Err::NotConnected, "component vertex set is not connected");
    }

    // Hierholzer, iterative: always advance along the lowest unused neighbor,
    // splice subtours as vertices exhaust.
    std::vector<char> used(g.edges.size(), 0);
    std::vector<int> cursor(g.n);
    for (Vertex v = 0; v < g.n; ++v) cursor[v] = g.adj_offset[v];

    std::vector<Vertex> stack = {start};
    std::vector<Vertex> out;
    out.reserve(component.edge_count + 1);
    while (!stack.empty()) {
        const Vertex v = stack.back();
        int& cur = cursor[v];
        while (cur < g.adj_offset[v + 1] && used[g.adj[cur].second]) ++cur;
        if (cur == g.adj_offset[v + 1]) {
            out.push_back(v);
            stack.pop_back();
        } else {
            used[g.adj[cur].second] = 1;
            stack.push_back(g.adj[cur].first);
        }
    }
    std::reverse(out.begin(), out.end());

    if (static_cast<long long>(out.size()) != component.edge_count + 1 ||
        out.front() != start || out.back() != start)
        throw Error(Err::Internal, "euler circuit construction failed");

    Trail t;
    t.color = g.color;
    t.vertices = std::move(out);
    t.closed = true;
    return t;
}

VerifyResult verify(const EdgeColoring& c, const Trail& t) {
    auto fail = [](VerifyCode code, std::string detail) {
        return VerifyResult{false, code, std::move(detail)};
    };
    if (t.vertices.empty()) return fail(VerifyCode::NotAWalk, "empty vertex sequence");
    for (Vertex v : t.vertices)
        if (v < 0 || v >= c.n())
            return fail(VerifyCode::BadVertex, "vertex " + std::to_string(v) + " out of range");
    if (t.color < 0 || t.color >= c.k())
        return fail(VerifyCode::BadColor, "color " + std::to_string(t.color) + " out of range");

    std::unordered_set<std::size_t> seen;
    seen.reserve(t.vertices.size() * 2);
    for (std::size_t i = 0; i + 1 < t.vertices.size(); ++i) {
        Vertex u = t.vertices[i], v = t.vertices[i + 1];
        if (u == v)
            return fail(VerifyCode::NotAWalk,
                        "consecutive repeat at position " + std::to_string(i));
        if (u > v) std::swap(u, v);
        const std::size_t r = EdgeColoring::pair_rank(c.n(), u, v);
        if (!seen.insert(r).second)
            return fail(VerifyCode::RepeatedEdge, "edge {" + std::to_string(u) + "," +
                                                      std::to_string(v) + "} repeats");
        if (c.color_of(u, v) != t.color)
            return fail(VerifyCode::BadColor, "edge {" + std::to_string(u) + "," +
                                                  std::to_string(v) + "} has color " +
                                                  std::to_string(c.color_of(u, v)));
    }
    const bool endpoints_closed = t.vertices.size() >= 2 && t.vertices.front() == t.vertices.back();
    if (t.closed != endpoints_closed)
        return fail(VerifyCode::BadClosure, t.closed ? "flagged closed but endpoints differ"
                                                     : "endpoints meet but flagged open");
    return VerifyResult{true, VerifyCode::Ok, ""};
}

} // namespace mct
