#include "mct/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mct {

namespace {

void check_vertex_pair(int n, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(Err::BadVertex,
                    "vertex pair {" + std::to_string(u) + "," + std::to_string(v) +
                        "} out of range for n=" + std::to_string(n));
    if (u == v)
        throw Error(Err::BadVertex, "loop at vertex " + std::to_string(u));
}

// Union-find with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

} // namespace

std::size_t EdgeColoring::pair_rank(int n, Vertex u, Vertex v) {
    // ascending (u, v) enumeration order: (0,1), (0,2), ..., (n-2,n-1)
    const auto un = static_cast<std::size_t>(u);
    return un * (2 * static_cast<std::size_t>(n) - un - 1) / 2 +
           static_cast<std::size_t>(v - u - 1);
}

ColorId EdgeColoring::color_of(Vertex u, Vertex v) const {
    check_vertex_pair(n_, u, v);
    if (u > v) std::swap(u, v);
    return colors_[pair_rank(n_, u, v)];
}

EdgeColoring EdgeColoring::from_dense(int n, int k, std::vector<ColorId> colors) {
    if (n < 1) throw Error(Err::BadN, "vertex count must be >= 1");
    if (k < 1) throw Error(Err::BadK, "color count must be >= 1");
    const std::size_t want = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (colors.size() != want)
        throw Error(Err::MissingEdge, "expected " + std::to_string(want) + " colors, got " +
                                          std::to_string(colors.size()));
    for (ColorId c : colors)
        if (c < 0 || c >= k)
            throw Error(Err::ColorOutOfRange, "color " + std::to_string(c) + " not in [0," +
                                                  std::to_string(k) + ")");
    EdgeColoring out;
    out.n_ = n;
    out.k_ = k;
    out.colors_ = std::move(colors);
    return out;
}

EdgeColoring EdgeColoring::make(int n, int k, const std::vector<ColoredEdge>& assignment) {
    if (n < 1) throw Error(Err::BadN, "vertex count must be >= 1");
    if (k < 1) throw Error(Err::BadK, "color count must be >= 1");
    const std::size_t want = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<ColorId> colors(want, -1);
    for (const auto& e : assignment) {
        Vertex u = e.u, v = e.v;
        check_vertex_pair(n, u, v);
        if (u > v) std::swap(u, v);
        if (e.color < 0 || e.color >= k)
            throw Error(Err::ColorOutOfRange, "pair {" + std::to_string(u) + "," +
                                                  std::to_string(v) + "} has color " +
                                                  std::to_string(e.color));
        const std::size_t r = pair_rank(n, u, v);
        if (colors[r] != -1)
            throw Error(Err::DuplicateEdge, "pair {" + std::to_string(u) + "," +
                                                std::to_string(v) + "} assigned twice");
        colors[r] = e.color;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (colors[pair_rank(n, u, v)] == -1)
                throw Error(Err::MissingEdge, "pair {" + std::to_string(u) + "," +
                                                  std::to_string(v) + "} unassigned");
    EdgeColoring out;
    out.n_ = n;
    out.k_ = k;
    out.colors_ = std::move(colors);
    return out;
}

EdgeColoring EdgeColoring::swapped_colors() const {
    if (k_ != 2) throw Error(Err::BadK, "color swap requires k = 2");
    std::vector<ColorId> colors(colors_.size());
    for (std::size_t i = 0; i < colors_.size(); ++i) colors[i] = 1 - colors_[i];
    return from_dense(n_, 2, std::move(colors));
}

EdgeColoring new_coloring(int n, int k, const std::vector<ColoredEdge>& assignment) {
    return EdgeColoring::make(n, k, assignment);
}

namespace {

ColorClassGraph build_graph(int n, ColorId color, std::vector<Edge> edges) {
    ColorClassGraph g;
    g.n = n;
    g.color = color;
    g.edges = std::move(edges);
    g.degree.assign(n, 0);
    for (const auto& [u, v] : g.edges) {
        ++g.degree[u];
        ++g.degree[v];
    }
    g.adj_offset.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) g.adj_offset[v + 1] = g.adj_offset[v] + g.degree[v];
    g.adj.resize(2 * g.edges.size());
    std::vector<int> cursor(g.adj_offset.begin(), g.adj_offset.end() - 1);
    // edges ascending (u, v) => each vertex's list comes out neighbor-sorted
    for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei) {
        const auto& [u, v] = g.edges[ei];
        g.adj[cursor[u]++] = {v, ei};
        g.adj[cursor[v]++] = {u, ei};
    }
    return g;
}

} // namespace

ColorClassGraph make_class_graph(int n, ColorId color, std::vector<Edge> edges) {
    if (n < 0) throw Error(Err::BadN, "negative vertex count");
    for (auto& [u, v] : edges) {
        check_vertex_pair(n, u, v);
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error(Err::DuplicateEdge, "duplicate edge in edge list");
    return build_graph(n, color, std::move(edges));
}

ColorClassGraph color_class(const EdgeColoring& c, ColorId color) {
    if (color < 0 || color >= c.k())
        throw Error(Err::ColorOutOfRange, "color " + std::to_string(color) + " not in [0," +
                                              std::to_string(c.k()) + ")");
    std::vector<Edge> edges;
    const auto& dense = c.dense();
    std::size_t r = 0;
    for (Vertex u = 0; u < c.n(); ++u)
        for (Vertex v = u + 1; v < c.n(); ++v, ++r)
            if (dense[r] == color) edges.emplace_back(u, v);
    return build_graph(c.n(), color, std::move(edges));
}

std::vector<Component> components(const ColorClassGraph& g) {
    UnionFind uf(g.n);
    for (const auto& [u, v] : g.edges) uf.unite(u, v);

    std::vector<int> comp_index(g.n, -1);
    std::vector<Component> out;
    for (Vertex v = 0; v < g.n; ++v) {
        const int r = uf.find(v);
        if (comp_index[r] == -1) {
            comp_index[r] = static_cast<int>(out.size());
            out.push_back(Component{g.color, {}, 0, 0});
        }
        out[comp_index[r]].vertices.push_back(v); // ascending by construction
    }
    for (const auto& [u, v] : g.edges) ++out[comp_index[uf.find(u)]].edge_count;
    for (auto& c : out) c.vertex_count = static_cast<int>(c.vertices.size());

    std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
        if (a.edge_count != b.edge_count) return a.edge_count > b.edge_count;
        if (a.vertex_count != b.vertex_count) return a.vertex_count > b.vertex_count;
        return a.vertices.front() < b.vertices.front();
    });
    return out;
}

DegreeParity degree_parity(const ColorClassGraph& g) {
    DegreeParity p;
    p.odd.resize(g.n);
    for (Vertex v = 0; v < g.n; ++v) {
        p.odd[v] = static_cast<std::uint8_t>(g.degree[v] & 1);
        if (p.odd[v]) p.odd_vertices.push_back(v);
    }
    return p;
}

MaxComponentReport max_component_edges(const EdgeColoring& c) {
    MaxComponentReport rep;
    rep.per_color.resize(c.k(), 0);
    bool have_witness = false;
    for (ColorId col = 0; col < c.k(); ++col) {
        const auto comps = components(color_class(c, col));
        // components are sorted by edge_count desc, so front is the max
        const Component& top = comps.front();
        rep.per_color[col] = top.edge_count;
        if (!have_witness || top.edge_count > rep.global_max) {
            have_witness = true;
            rep.global_max = top.edge_count;
            rep.witness_color = col;
            rep.witness = top;
        }
    }
    return rep;
}

} // namespace mct
