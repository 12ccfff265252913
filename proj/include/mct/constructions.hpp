#pragma once

#include <cstdint>
#include <vector>

#include "mct/coloring.hpp"

namespace mct {

/// splitmix64: identical streams across implementations for equal seeds.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

/// Addition/multiplication/inverse tables for the prime field F_q.
struct PrimeField {
    int q = 2;
    std::vector<int> add_table; // q*q, row-major
    std::vector<int> mul_table; // q*q
    std::vector<int> inv_table; // q, inv_table[0] unused

    int add(int a, int b) const { return add_table[a * q + b]; }
    int mul(int a, int b) const { return mul_table[a * q + b]; }
    int sub(int a, int b) const { return add(a, q == 1 ? 0 : (q - b) % q); }
    int inv(int a) const { return inv_table[a]; }
};

bool is_prime(int q);

/// Field tables for prime q. Throws NotPrime otherwise.
PrimeField field_ops(int q);

/// The tight two-coloring: part A = [0, floor(n/3)), part B the rest;
/// edges inside a part are blue (1), edges across are red (0).
EdgeColoring extremal_bipartite_split(int n);

struct AffinePlaneParams {
    int q = 2; // plane order, prime
    int m = 1; // blob size
    int n() const { return q * q * m; }
    int k() const { return q + 1; }
};

/// Gyarfas-style coloring from the affine plane AG(2, q): vertex blobs map to
/// plane points, cross-blob edges take the color of the slope class of the
/// line through their points (slope s -> color s, vertical -> color q), and
/// within-blob edges take color 0. Every monochromatic component has order
/// exactly q*m = n/(k-1).
EdgeColoring affine_plane_coloring(const AffinePlaneParams& p);

/// Uniform colors from the splitmix64 stream, one draw per pair in ascending
/// (u, v) order; color = output mod k.
EdgeColoring random_coloring(int n, int k, std::uint64_t seed);

} // namespace mct
