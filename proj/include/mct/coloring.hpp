#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mct/errors.hpp"

namespace mct {

using Vertex = int;
using ColorId = int;
using Edge = std::pair<Vertex, Vertex>; // normalized u < v

struct ColoredEdge {
    Vertex u;
    Vertex v;
    ColorId color;
};

/// A k-coloring of the edges of K_n, stored densely by canonical pair rank.
/// Immutable after construction.
class EdgeColoring {
public:
    EdgeColoring() = default;

    /// Validated construction from an explicit pair -> color assignment.
    /// Rejects loops, out-of-range vertices/colors, duplicates and gaps.
    static EdgeColoring make(int n, int k, const std::vector<ColoredEdge>& assignment);

    /// Construction from a dense color array in pair-rank order.
    static EdgeColoring from_dense(int n, int k, std::vector<ColorId> colors);

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t edge_count() const { return colors_.size(); }

    ColorId color_of(Vertex u, Vertex v) const;

    /// Canonical rank of pair {u,v}, u < v, under ascending (u, v) order.
    static std::size_t pair_rank(int n, Vertex u, Vertex v);

    const std::vector<ColorId>& dense() const { return colors_; }

    /// The same coloring with colors 0 and 1 exchanged (k = 2 only).
    EdgeColoring swapped_colors() const;

    bool operator==(const EdgeColoring& o) const = default;

private:
    int n_ = 1;
    int k_ = 1;
    std::vector<ColorId> colors_;
};

/// The simple graph formed by one color's edges, with degrees and a
/// CSR adjacency sorted by neighbor id.
struct ColorClassGraph {
    int n = 0;
    ColorId color = 0;
    std::vector<Edge> edges;              // normalized, ascending (u, v)
    std::vector<int> degree;              // size n
    std::vector<int> adj_offset;          // size n + 1
    std::vector<std::pair<Vertex, int>> adj; // (neighbor, edge index), neighbor ascending

    std::size_t edge_total() const { return edges.size(); }
};

/// Builds a ColorClassGraph from an arbitrary edge list (normalizes pairs,
/// rejects loops and duplicates). Used directly by tests and subgraph code.
ColorClassGraph make_class_graph(int n, ColorId color, std::vector<Edge> edges);

struct Component {
    ColorId color = 0;
    std::vector<Vertex> vertices; // ascending
    int vertex_count = 0;
    long long edge_count = 0;
};

struct DegreeParity {
    std::vector<std::uint8_t> odd;   // odd[v] = degree(v) mod 2
    std::vector<Vertex> odd_vertices; // ascending
};

struct MaxComponentReport {
    std::vector<long long> per_color; // max component edge count per color
    long long global_max = 0;
    ColorId witness_color = 0;
    Component witness;
};

EdgeColoring new_coloring(int n, int k, const std::vector<ColoredEdge>& assignment);

ColorClassGraph color_class(const EdgeColoring& c, ColorId color);

/// Connected components of g, covering all n vertices (singletons included),
/// sorted by (edge_count desc, vertex_count desc, smallest vertex id asc).
std::vector<Component> components(const ColorClassGraph& g);

DegreeParity degree_parity(const ColorClassGraph& g);

MaxComponentReport max_component_edges(const EdgeColoring& c);

} // namespace mct
