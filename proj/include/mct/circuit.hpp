#pragma once

#include <string>
#include <vector>

#include "mct/coloring.hpp"

namespace mct {

/// A walk without repeated edges. Closed means first vertex == last vertex
/// and length >= 1; a circuit is a closed trail. A length-0 trail is a single
/// vertex and is never closed.
struct Trail {
    ColorId color = 0;
    std::vector<Vertex> vertices; // v0 .. v_len, never empty
    bool closed = false;

    long long length() const { return static_cast<long long>(vertices.size()) - 1; }
};

enum class VerifyCode {
    Ok,
    BadColor,
    RepeatedEdge,
    NotAWalk,
    BadClosure,
    BadVertex,
};

struct VerifyResult {
    bool ok = false;
    VerifyCode code = VerifyCode::Ok;
    std::string detail;

    explicit operator bool() const { return ok; }
};

const char* verify_code_name(VerifyCode c);

/// Euler circuit of one connected even-degree component of g, produced by
/// iterative Hierholzer splicing. Starts and ends at the component's smallest
/// vertex id; edge choice is always the lowest unused neighbor.
Trail euler_circuit(const ColorClassGraph& g, const Component& component);

/// Certificate check: every consecutive pair is an edge of K_n colored
/// t.color, no unordered pair repeats, all ids are in range and the closed
/// flag matches the endpoints. Returns the first failure.
VerifyResult verify(const EdgeColoring& c, const Trail& t);

} // namespace mct
