#include "doctest.h"

#include <sstream>

#include "mct/constructions.hpp"
#include "mct/engine.hpp"
#include "mct/oracle.hpp"
#include "mct/sweep.hpp"
#include "test_helpers.hpp"

using namespace mct;

// The thread count must never change any output. These tests pin the
// contract; with a serial build they still pass (threads become a no-op).

TEST_CASE("eulerize is thread-count invariant") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        EdgeColoring c = random_coloring(40, 3, seed);
        EulerizedColoring a = eulerize(c, 1);
        EulerizedColoring b = eulerize(c, 4);
        REQUIRE(a.forests.size() == b.forests.size());
        for (std::size_t i = 0; i < a.forests.size(); ++i)
            CHECK(a.forests[i].edges == b.forests[i].edges);
        for (std::size_t i = 0; i < a.residual.size(); ++i)
            CHECK(a.residual[i].edges == b.residual[i].edges);
    }
}

TEST_CASE("solve is thread-count invariant") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        EdgeColoring c = random_coloring(35, 2, seed);
        SolveReport a = solve(c, 1);
        SolveReport b = solve(c, 4);
        CHECK(a.color == b.color);
        CHECK(a.circuit.vertices == b.circuit.vertices);
        CHECK(a.circuit.closed == b.circuit.closed);
        CHECK(a.component.vertices == b.component.vertices);
        CHECK(a.forest_sizes == b.forest_sizes);
    }
}

TEST_CASE("worst-case search is thread-count invariant") {
    for (SearchMode mode : {SearchMode::Trail, SearchMode::Circuit}) {
        WorstCaseResult a = worst_case_search(5, mode, 1);
        WorstCaseResult b = worst_case_search(5, mode, 4);
        CHECK(a.value == b.value);
        CHECK(a.witness_index == b.witness_index);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("sweep output is byte-identical across thread counts") {
    SweepSpec spec;
    spec.family = "random";
    spec.n_min = 20;
    spec.n_max = 32;
    spec.step = 4;
    spec.seeds = 3;
    spec.k = 2;

    std::ostringstream csv1, csv4;
    write_sweep_csv(csv1, run_sweep(spec, 1));
    write_sweep_csv(csv4, run_sweep(spec, 4));
    CHECK(csv1.str() == csv4.str());
    CHECK(csv1.str().find("runtime_ms") != std::string::npos);

    spec.family = "extremal";
    spec.seeds = 1;
    std::ostringstream e1, e4;
    write_sweep_csv(e1, run_sweep(spec, 1));
    write_sweep_csv(e4, run_sweep(spec, 4));
    CHECK(e1.str() == e4.str());
}
