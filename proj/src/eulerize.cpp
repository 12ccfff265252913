#include "mct/eulerize.hpp"

#include <algorithm>
#include <queue>

#ifdef MCT_HAVE_OPENMP
#include <omp.h>
#endif

namespace mct {

ParityForest parity_forest(const ColorClassGraph& g) {
    ParityForest f;
    f.color = g.color;

    std::vector<int> parent(g.n, -1);
    std::vector<char> seen(g.n, 0);
    std::vector<int> order;
    order.reserve(g.n);
    std::vector<int> forest_degree(g.n, 0);

    for (Vertex root = 0; root < g.n; ++root) {
        if (seen[root] || g.degree[root] == 0) continue;
        // BFS tree from the smallest unvisited vertex, neighbors ascending.
        const std::size_t comp_begin = order.size();
        seen[root] = 1;
        std::queue<Vertex> q;
        q.push(root);
        order.push_back(root);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (int i = g.adj_offset[v]; i < g.adj_offset[v + 1]; ++i) {
                const Vertex w = g.adj[i].first;
                if (seen[w]) continue;
                seen[w] = 1;
                parent[w] = v;
                order.push_back(w);
                q.push(w);
            }
        }
        // Leaf-up parity correction in reverse discovery order: keep the
        // parent edge iff the remaining deficit at the vertex is odd.
        for (std::size_t i = order.size(); i-- > comp_begin + 1;) {
            const Vertex v = order[i];
            if ((g.degree[v] - forest_degree[v]) & 1) {
                Vertex a = parent[v], b = v;
                if (a > b) std::swap(a, b);
                f.edges.emplace_back(a, b);
                ++forest_degree[v];
                ++forest_degree[parent[v]];
            }
        }
    }
    std::sort(f.edges.begin(), f.edges.end());
    return f;
}

namespace {

ColorClassGraph residual_graph(const ColorClassGraph& g, const ParityForest& f) {
    std::vector<Edge> kept;
    kept.reserve(g.edges.size() - f.edges.size());
    std::set_difference(g.edges.begin(), g.edges.end(), f.edges.begin(), f.edges.end(),
                        std::back_inserter(kept));
    return make_class_graph(g.n, g.color, std::move(kept));
}

} // namespace

EulerizedColoring eulerize(const EdgeColoring& c, int threads) {
    EulerizedColoring out;
    out.base = c;
    out.residual.resize(c.k());
    out.forests.resize(c.k());

    const int k = c.k();
#ifdef MCT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : 1) if (threads > 1)
#endif
    for (int col = 0; col < k; ++col) {
        const ColorClassGraph g = color_class(c, col);
        ParityForest f = parity_forest(g);
        out.residual[col] = residual_graph(g, f);
        out.forests[col] = std::move(f);
    }
    return out;
}

} // namespace mct
