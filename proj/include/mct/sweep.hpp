#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mct {

inline constexpr const char* kSweepCsvHeader =
    "n,k,family,seed,circuit_len,threshold,max_comp_edges,n1,case,runtime_ms";

struct SweepRow {
    int n = 0;
    int k = 2;
    std::string family;
    std::uint64_t seed = 0;
    long long circuit_len = 0;
    long long threshold = 0;
    long long max_comp_edges = 0;
    int n1 = 0;              // k = 2 only, 0 otherwise
    std::string case_label;  // "A".."D" for k = 2, "-" otherwise
    long long runtime_ms = 0;
};

struct SweepSpec {
    std::string family; // "extremal" | "random"
    int n_min = 0;
    int n_max = 0;
    int step = 1;
    int seeds = 1; // random family: seeds 0 .. seeds-1; extremal emits seed 0
    int k = 2;
    bool timings = false; // when false, runtime_ms is 0 so output is byte-stable
};

/// One row per (n, seed), ordered by (n, seed) regardless of thread count.
/// Every certificate is verified internally; a failure throws Err::Internal.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads = 1);

std::string sweep_row_csv(const SweepRow& r);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct SweepSummary {
    double max_rel_dev_component = 0; // |max_comp_edges - 2n^2/9| / (2n^2/9)
    double max_rel_dev_ramsey = 0;    // |n - 3 sqrt(l/2)| / n with l = max_comp_edges
};

SweepSummary sweep_summary(const std::vector<SweepRow>& rows);

} // namespace mct
