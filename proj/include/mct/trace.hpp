#pragma once

#include <string>
#include <vector>

#include "mct/coloring.hpp"
#include "mct/eulerize.hpp"

namespace mct {

enum class CaseLabel { A, B, C, D };

const char* case_label_name(CaseLabel c);

/// Case boundaries on (n, n1):
///   A: n1 < n/3,  B: n/3 <= n1 <= 2n/3,  C: 2n/3 < n1 <= n - 2 sqrt(n),
///   D: n1 > n - 2 sqrt(n).
/// Evaluated exactly in integers.
CaseLabel classify_case(long long n, long long n1);

struct Inequality {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    bool holds = false;
};

/// Instance-level evaluation of the two-color case analysis. Blue is color 1,
/// red is color 0; all quantities are measured on the eulerized residual
/// classes. Diagnostic only: inequalities are recorded, never enforced.
struct CaseTrace {
    int n = 0;
    int n1 = 0;            // order of the largest residual blue component
    CaseLabel label = CaseLabel::A;
    int n1_swapped = 0;    // same diagnosis with the colors exchanged
    CaseLabel label_swapped = CaseLabel::A;
    std::vector<Vertex> v1;            // cases B and C only
    std::vector<Inequality> inequalities; // proof_trace only
    bool hypothesis_met = true;        // case D: largest red component also spans
};

/// Case label and n1 only (plus the swapped-color diagnosis). k = 2 required.
CaseTrace case_diagnose(const EdgeColoring& c);

/// Full trace: every case inequality evaluated on the instance. k = 2 required.
CaseTrace proof_trace(const EdgeColoring& c);

struct PeelReport {
    double avg_degree = 0;   // of the input graph, over all n vertices
    double threshold = 0;
    std::vector<Vertex> survivors; // ascending
    long long min_degree = 0;      // within the surviving set (0 when empty)
    long long edge_count = 0;      // within the surviving set
};

/// Repeatedly deletes the smallest-id vertex of current degree < d until the
/// set stabilizes. If the input has average degree >= 2d the survivor set is
/// nonempty.
PeelReport min_degree_peel(const ColorClassGraph& g, double d);

} // namespace mct
