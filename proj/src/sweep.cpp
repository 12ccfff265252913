#include "mct/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <ostream>
#include <sstream>
#include <utility>

#include "mct/constructions.hpp"
#include "mct/engine.hpp"
#include "mct/trace.hpp"

namespace mct {

namespace {

SweepRow run_one(const SweepSpec& spec, int n, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    const auto t0 = spec.timings ? clock::now() : clock::time_point{};

    const bool extremal = spec.family == "extremal";
    const EdgeColoring c =
        extremal ? extremal_bipartite_split(n) : random_coloring(n, spec.k, seed);

    SweepRow row;
    row.n = n;
    row.k = c.k();
    row.family = spec.family;
    row.seed = seed;

    const SolveReport rep = solve(c);
    if (!verify(c, rep.circuit))
        throw Error(Err::Internal, "sweep certificate failed self-verification");
    row.circuit_len = rep.circuit.length();
    row.threshold = rep.threshold;
    row.max_comp_edges = max_component_edges(c).global_max;

    if (c.k() == 2) {
        const CaseTrace t = case_diagnose(c);
        row.n1 = t.n1;
        row.case_label = case_label_name(t.label);
    } else {
        row.n1 = 0;
        row.case_label = "-";
    }

    if (spec.timings)
        row.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0)
                .count();
    return row;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads) {
    if (spec.family != "extremal" && spec.family != "random")
        throw Error(Err::Parse, "unknown sweep family: " + spec.family);
    if (spec.n_min < 2 || spec.n_max < spec.n_min || spec.step < 1)
        throw Error(Err::BadN, "bad sweep range");
    if (spec.seeds < 1) throw Error(Err::BadM, "need at least one seed");
    if (spec.k < 2) throw Error(Err::BadK, "sweep requires k >= 2");

    const int per_n = spec.family == "random" ? spec.seeds : 1;
    std::vector<std::pair<int, std::uint64_t>> tasks;
    for (int n = spec.n_min; n <= spec.n_max; n += spec.step)
        for (int s = 0; s < per_n; ++s)
            tasks.emplace_back(n, static_cast<std::uint64_t>(s));

    std::vector<SweepRow> rows(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    const long long total = static_cast<long long>(tasks.size());
#ifdef MCT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
#endif
    for (long long i = 0; i < total; ++i) {
        try {
            rows[i] = run_one(spec, tasks[i].first, tasks[i].second);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    (void)threads;
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

std::string sweep_row_csv(const SweepRow& r) {
    std::ostringstream ss;
    ss << r.n << ',' << r.k << ',' << r.family << ',' << r.seed << ','
       << r.circuit_len << ',' << r.threshold << ',' << r.max_comp_edges << ','
       << r.n1 << ',' << r.case_label << ',' << r.runtime_ms;
    return ss.str();
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& r : rows) out << sweep_row_csv(r) << '\n';
}

SweepSummary sweep_summary(const std::vector<SweepRow>& rows) {
    SweepSummary s;
    for (const SweepRow& r : rows) {
        const double n = r.n;
        const double ell = static_cast<double>(r.max_comp_edges);
        const double inverted = 3.0 * std::sqrt(ell / 2.0);
        s.max_rel_dev_ramsey =
            std::max(s.max_rel_dev_ramsey, std::abs(n - inverted) / n);
        if (r.family == "extremal") {
            const double target = 2.0 * n * n / 9.0;
            s.max_rel_dev_component = std::max(
                s.max_rel_dev_component, std::abs(ell - target) / target);
        }
    }
    return s;
}

} // namespace mct
