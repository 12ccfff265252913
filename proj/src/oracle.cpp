#include "mct/oracle.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <utility>

#ifdef MCT_HAVE_OPENMP
#include <omp.h>
#endif

namespace mct {

namespace {

// Value table over (used-edge-mask, endpoint) states. Dense when it fits
// comfortably in memory, hashed otherwise (sparse graphs with many vertices).
class StateTable {
public:
    StateTable(std::uint64_t masks, int nv) : nv_(nv) {
        if (masks * static_cast<std::uint64_t>(nv) <= (1ULL << 25)) {
            dense_.assign(masks * nv, kUnset);
        }
    }

    std::int8_t get(std::uint64_t mask, int v) const {
        if (!dense_.empty()) return dense_[mask * nv_ + v];
        auto it = map_.find(mask * nv_ + v);
        return it == map_.end() ? kUnset : it->second;
    }

    void set(std::uint64_t mask, int v, std::int8_t val) {
        if (!dense_.empty())
            dense_[mask * nv_ + v] = val;
        else
            map_[mask * nv_ + v] = val;
    }

    static constexpr std::int8_t kUnset = -1;

private:
    int nv_;
    std::vector<std::int8_t> dense_;
    std::unordered_map<std::uint64_t, std::int8_t> map_;
};

// Compact view of a graph's positive-degree vertices and their incidences.
struct SearchGraph {
    int m = 0;                       // edge count
    std::vector<Vertex> verts;       // original ids, ascending
    std::vector<int> compact;        // original id -> compact id (or -1)
    // incident[v]: (neighbor compact id, edge bit), ascending by neighbor
    std::vector<std::vector<std::pair<int, int>>> incident;
};

SearchGraph compact_view(const ColorClassGraph& g, int max_edges) {
    if (static_cast<int>(g.edge_total()) > max_edges)
        throw Error(Err::TooLarge, "graph exceeds the exact-search edge guard");
    if (g.edge_total() > 62)
        throw Error(Err::TooLarge, "edge mask does not fit a 64-bit word");

    SearchGraph s;
    s.m = static_cast<int>(g.edge_total());
    s.compact.assign(g.n, -1);
    for (Vertex v = 0; v < g.n; ++v)
        if (g.degree[v] > 0) {
            s.compact[v] = static_cast<int>(s.verts.size());
            s.verts.push_back(v);
        }
    s.incident.resize(s.verts.size());
    for (int e = 0; e < s.m; ++e) {
        const auto [u, v] = g.edges[e];
        s.incident[s.compact[u]].emplace_back(s.compact[v], e);
        s.incident[s.compact[v]].emplace_back(s.compact[u], e);
    }
    for (auto& list : s.incident) std::sort(list.begin(), list.end());
    return s;
}

// Longest continuation from `v` with `mask` already used. Plain memoized
// recursion; depth is bounded by the edge guard.
std::int8_t trail_value(const SearchGraph& s, StateTable& tab, std::uint64_t mask,
                        int v, std::uint64_t& nodes) {
    std::int8_t cached = tab.get(mask, v);
    if (cached != StateTable::kUnset) return cached;
    ++nodes;
    std::int8_t best = 0;
    for (const auto& [w, e] : s.incident[v]) {
        if (mask & (1ULL << e)) continue;
        std::int8_t ext =
            static_cast<std::int8_t>(1 + trail_value(s, tab, mask | (1ULL << e), w, nodes));
        best = std::max(best, ext);
    }
    tab.set(mask, v, best);
    return best;
}

// Longest trail from `v` back to `home`; kBlocked when home is unreachable.
// A zero-length stay counts only at home itself.
constexpr std::int8_t kBlocked = -100;

std::int8_t circuit_value(const SearchGraph& s, StateTable& tab, std::uint64_t mask,
                          int v, int home, std::uint64_t& nodes) {
    std::int8_t cached = tab.get(mask, v);
    if (cached != StateTable::kUnset) return cached;
    ++nodes;
    std::int8_t best = (v == home) ? std::int8_t{0} : kBlocked;
    for (const auto& [w, e] : s.incident[v]) {
        if (mask & (1ULL << e)) continue;
        std::int8_t ext = circuit_value(s, tab, mask | (1ULL << e), w, home, nodes);
        if (ext != kBlocked)
            best = std::max(best, static_cast<std::int8_t>(1 + ext));
    }
    tab.set(mask, v, best);
    return best;
}

// Greedy lexicographic reconstruction: repeatedly take the smallest neighbor
// that preserves the known optimum.
template <typename Value>
std::vector<Vertex> rebuild(const SearchGraph& s, Value&& value, int start,
                            std::int8_t total) {
    std::vector<Vertex> seq{s.verts[start]};
    std::uint64_t mask = 0;
    int v = start;
    std::int8_t remaining = total;
    while (remaining > 0) {
        bool advanced = false;
        for (const auto& [w, e] : s.incident[v]) {
            if (mask & (1ULL << e)) continue;
            std::int8_t ext = value(mask | (1ULL << e), w);
            if (ext != kBlocked && 1 + ext == remaining) {
                mask |= 1ULL << e;
                v = w;
                remaining = static_cast<std::int8_t>(remaining - 1);
                seq.push_back(s.verts[w]);
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw Error(Err::Internal, "witness reconstruction lost the optimum");
    }
    return seq;
}

} // namespace

OracleResult longest_trail_exact(const ColorClassGraph& g, const OracleOptions& opts) {
    SearchGraph s = compact_view(g, opts.max_edges);
    OracleResult res;

    if (s.verts.empty()) {
        res.witness = Trail{g.color, {0}, false};
        return res;
    }

    StateTable tab(1ULL << s.m, static_cast<int>(s.verts.size()));
    std::int8_t best = 0;
    int start = 0;
    for (int v = 0; v < static_cast<int>(s.verts.size()); ++v) {
        std::int8_t len = trail_value(s, tab, 0, v, res.nodes_explored);
        if (len > best) {
            best = len;
            start = v;
        }
    }
    res.best = best;
    auto value = [&](std::uint64_t mask, int v) {
        return trail_value(s, tab, mask, v, res.nodes_explored);
    };
    std::vector<Vertex> seq = rebuild(s, value, start, best);
    const bool closed = best > 0 && seq.front() == seq.back();
    res.witness = Trail{g.color, std::move(seq), closed};
    return res;
}

OracleResult longest_circuit_exact(const ColorClassGraph& g, const OracleOptions& opts) {
    SearchGraph s = compact_view(g, opts.max_edges);
    OracleResult res;

    std::int8_t best = 0;
    std::vector<Vertex> seq{0};
    for (int home = 0; home < static_cast<int>(s.verts.size()); ++home) {
        StateTable tab(1ULL << s.m, static_cast<int>(s.verts.size()));
        std::int8_t len = circuit_value(s, tab, 0, home, home, res.nodes_explored);
        if (len > best) {
            best = len;
            auto value = [&](std::uint64_t mask, int v) {
                return circuit_value(s, tab, mask, v, home, res.nodes_explored);
            };
            seq = rebuild(s, value, home, best);
        }
    }
    res.best = best;
    res.witness = Trail{g.color, std::move(seq), best > 0};
    return res;
}

const char* search_mode_name(SearchMode m) {
    return m == SearchMode::Trail ? "trail" : "circuit";
}

namespace {

// All of K_n's pair incidences in compact form (every vertex present).
struct CompleteView {
    int n;
    int m;
    std::vector<std::vector<std::pair<int, int>>> incident; // (w, edge rank)
};

CompleteView complete_view(int n) {
    CompleteView cv;
    cv.n = n;
    cv.m = n * (n - 1) / 2;
    cv.incident.resize(n);
    int rank = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++rank) {
            cv.incident[u].emplace_back(v, rank);
            cv.incident[v].emplace_back(u, rank);
        }
    for (auto& list : cv.incident) std::sort(list.begin(), list.end());
    return cv;
}

// Fill order for a whole-subset table: dependencies only ever drop one edge,
// so masks can be processed popcount layer by popcount layer, each layer in
// parallel.
template <typename Fill>
void fill_by_layers(int m, int threads, Fill&& fill) {
    std::vector<std::uint32_t> layer;
    for (int pop = 1; pop <= m; ++pop) {
        layer.clear();
        // Gosper's hack: ascending enumeration of all masks with `pop` bits.
        std::uint32_t mask = (1U << pop) - 1;
        const std::uint32_t limit = 1U << m;
        while (mask < limit) {
            layer.push_back(mask);
            std::uint32_t c = mask & -mask;
            std::uint32_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        const long long count = static_cast<long long>(layer.size());
#ifdef MCT_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
#endif
        for (long long i = 0; i < count; ++i) fill(layer[i]);
        (void)threads;
    }
}

} // namespace

WorstCaseResult worst_case_search(int n, SearchMode mode, int threads, bool allow_n7) {
    if (n < 2) throw Error(Err::BadN, "need n >= 2");
    if (n > 7 || (n == 7 && !allow_n7))
        throw Error(Err::TooLarge, n > 7 ? "exhaustive search is capped at n = 7"
                                         : "n = 7 requires the explicit opt-in flag");

    const CompleteView cv = complete_view(n);
    const std::uint64_t all_masks = 1ULL << cv.m;
    WorstCaseResult res;

    // value_of[S] = exact longest trail (or circuit) of the subgraph with
    // edge set S, for every S at once; each coloring then costs two lookups.
    std::vector<std::int8_t> value_of(all_masks, 0);

    if (mode == SearchMode::Trail) {
        // from[S*n + v] = longest trail inside S starting at v.
        std::vector<std::int8_t> from(all_masks * n, 0);
        fill_by_layers(cv.m, threads, [&](std::uint32_t S) {
            std::int8_t best_here = 0;
            for (int v = 0; v < n; ++v) {
                std::int8_t best = 0;
                for (const auto& [w, e] : cv.incident[v]) {
                    if (!(S & (1U << e))) continue;
                    std::int8_t ext = static_cast<std::int8_t>(
                        1 + from[(S ^ (1U << e)) * static_cast<std::uint64_t>(n) + w]);
                    best = std::max(best, ext);
                }
                from[S * static_cast<std::uint64_t>(n) + v] = best;
                best_here = std::max(best_here, best);
            }
            value_of[S] = best_here;
        });
        res.nodes_explored = all_masks * n;
    } else {
        // One pass per home vertex; to_home[S*n + v] = longest trail inside S
        // from v ending at home (kBlocked when impossible).
        std::vector<std::int8_t> to_home(all_masks * n);
        for (int home = 0; home < n; ++home) {
            for (int v = 0; v < n; ++v)
                to_home[static_cast<std::uint64_t>(v)] =
                    (v == home) ? std::int8_t{0} : kBlocked;
            fill_by_layers(cv.m, threads, [&](std::uint32_t S) {
                for (int v = 0; v < n; ++v) {
                    std::int8_t best = (v == home) ? std::int8_t{0} : kBlocked;
                    for (const auto& [w, e] : cv.incident[v]) {
                        if (!(S & (1U << e))) continue;
                        std::int8_t ext =
                            to_home[(S ^ (1U << e)) * static_cast<std::uint64_t>(n) + w];
                        if (ext != kBlocked)
                            best = std::max(best, static_cast<std::int8_t>(1 + ext));
                    }
                    to_home[S * static_cast<std::uint64_t>(n) + v] = best;
                }
                value_of[S] = std::max(value_of[S],
                                       to_home[S * static_cast<std::uint64_t>(n) + home]);
            });
        }
        res.nodes_explored = all_masks * n * n;
    }

    // Scan colorings ascending; edge {0,1} is pinned red, so index bit j - 1
    // is the color of edge rank j and the swap symmetry is already folded in.
    const std::uint64_t full = all_masks - 1;
    std::int8_t best_val = std::numeric_limits<std::int8_t>::max();
    std::uint64_t best_idx = 0;
    for (std::uint64_t c = 0; c < (all_masks >> 1); ++c) {
        const std::uint64_t blue = c << 1;
        const std::int8_t v = std::max(value_of[full ^ blue], value_of[blue]);
        if (v < best_val) {
            best_val = v;
            best_idx = c;
        }
    }

    res.value = best_val;
    res.witness_index = best_idx;
    std::vector<ColorId> colors(cv.m, 0);
    for (int j = 1; j < cv.m; ++j)
        colors[j] = static_cast<ColorId>((best_idx >> (j - 1)) & 1);
    res.witness = EdgeColoring::from_dense(n, 2, std::move(colors));
    return res;
}

} // namespace mct
