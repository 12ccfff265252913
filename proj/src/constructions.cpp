#include "mct/constructions.hpp"

#include <utility>

namespace mct {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

PrimeField field_ops(int q) {
    if (!is_prime(q)) throw Error(Err::NotPrime, "field order must be prime");
    PrimeField f;
    f.q = q;
    f.add_table.resize(static_cast<std::size_t>(q) * q);
    f.mul_table.resize(static_cast<std::size_t>(q) * q);
    f.inv_table.assign(q, 0);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            f.add_table[a * q + b] = (a + b) % q;
            int prod = (a * b) % q;
            f.mul_table[a * q + b] = prod;
            if (prod == 1) f.inv_table[a] = b;
        }
    return f;
}

EdgeColoring extremal_bipartite_split(int n) {
    if (n < 2) throw Error(Err::BadN, "split construction needs n >= 2");
    const int a = n / 3; // part A = [0, a), the smaller side
    std::vector<ColorId> colors;
    colors.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            colors.push_back((u < a) == (v < a) ? 1 : 0);
    return EdgeColoring::from_dense(n, 2, std::move(colors));
}

EdgeColoring affine_plane_coloring(const AffinePlaneParams& p) {
    if (p.m < 1) throw Error(Err::BadM, "blob size must be >= 1");
    const PrimeField f = field_ops(p.q); // throws NotPrime for composite q
    const int q = p.q;
    const int n = p.n();

    // Vertices come in consecutive blobs of size m; blob index doubles as the
    // row-major point (x, y) = (p / q, p % q) of AG(2, q).
    auto color_between = [&](int pa, int pb) -> ColorId {
        const int xa = pa / q, ya = pa % q;
        const int xb = pb / q, yb = pb % q;
        if (xa == xb) return q; // vertical parallel class
        const int dx = f.sub(xb, xa);
        const int dy = f.sub(yb, ya);
        return f.mul(dy, f.inv(dx)); // slope s -> color s
    };

    std::vector<ColorId> colors;
    colors.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const int pu = u / p.m, pv = v / p.m;
            colors.push_back(pu == pv ? 0 : color_between(pu, pv));
        }
    return EdgeColoring::from_dense(n, p.k(), std::move(colors));
}

EdgeColoring random_coloring(int n, int k, std::uint64_t seed) {
    if (n < 1) throw Error(Err::BadN, "need n >= 1");
    if (k < 1) throw Error(Err::BadK, "need k >= 1");
    SplitMix64 rng(seed);
    std::vector<ColorId> colors(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (ColorId& c : colors)
        c = static_cast<ColorId>(rng.next() % static_cast<std::uint64_t>(k));
    return EdgeColoring::from_dense(n, k, std::move(colors));
}

} // namespace mct
