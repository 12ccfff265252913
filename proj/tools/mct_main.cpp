#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "mct/constructions.hpp"
#include "mct/engine.hpp"
#include "mct/io.hpp"
#include "mct/oracle.hpp"
#include "mct/sweep.hpp"
#include "mct/trace.hpp"

namespace {

// Exit codes: 0 ok, 1 verification failure, 2 parse, 3 I/O, 4 size guard,
// 5 flag/mode guard, 70 internal.
int exit_code_for(const mct::Error& e) {
    switch (e.kind()) {
    case mct::Err::Parse: return 2;
    case mct::Err::Io: return 3;
    case mct::Err::TooLarge: return 4;
    case mct::Err::BadN:
    case mct::Err::BadK:
    case mct::Err::BadM:
    case mct::Err::NotPrime: return 5;
    default: return 70;
    }
}

struct GenArgs {
    std::string family;
    int n = 0, k = 0, q = 0, m = 0;
    std::uint64_t seed = 0;
    std::string out;
    bool has_n = false, has_k = false, has_q = false, has_m = false, has_seed = false;
};

int run_gen(const GenArgs& a) {
    auto want = [&](bool present, const char* flag, bool needed) {
        if (needed && !present) {
            std::cerr << "error: family " << a.family << " requires " << flag << "\n";
            return false;
        }
        if (!needed && present) {
            std::cerr << "error: family " << a.family << " does not take " << flag << "\n";
            return false;
        }
        return true;
    };

    mct::EdgeColoring c;
    if (a.family == "extremal") {
        if (!want(a.has_n, "--n", true) || !want(a.has_k, "--k", false) ||
            !want(a.has_q, "--q", false) || !want(a.has_m, "--m", false) ||
            !want(a.has_seed, "--seed", false))
            return 5;
        c = mct::extremal_bipartite_split(a.n);
    } else if (a.family == "affine") {
        if (!want(a.has_q, "--q", true) || !want(a.has_m, "--m", true) ||
            !want(a.has_n, "--n", false) || !want(a.has_k, "--k", false) ||
            !want(a.has_seed, "--seed", false))
            return 5;
        c = mct::affine_plane_coloring({a.q, a.m});
    } else {
        if (!want(a.has_n, "--n", true) || !want(a.has_k, "--k", true) ||
            !want(a.has_seed, "--seed", true) || !want(a.has_q, "--q", false) ||
            !want(a.has_m, "--m", false))
            return 5;
        c = mct::random_coloring(a.n, a.k, a.seed);
    }

    mct::write_ecg_file(a.out, c);
    std::cout << "n=" << c.n() << " k=" << c.k() << "\n";
    return 0;
}

void print_trace(const mct::CaseTrace& t) {
    std::cout << "n1=" << t.n1 << " case=" << mct::case_label_name(t.label) << "\n";
    std::cout << "swapped n1=" << t.n1_swapped
              << " case=" << mct::case_label_name(t.label_swapped) << "\n";
    if (!t.v1.empty()) std::cout << "v1_size=" << t.v1.size() << "\n";
    if (!t.hypothesis_met) std::cout << "hypothesis=not-met\n";
    for (const mct::Inequality& q : t.inequalities)
        std::cout << q.name << " lhs=" << q.lhs << " rhs=" << q.rhs << ' '
                  << (q.holds ? "ok" : "violated") << "\n";
}

int run_solve(const std::string& in, const std::string& cert_out, bool trace) {
    const mct::EdgeColoring c = mct::read_ecg_file(in);
    const mct::SolveReport rep = mct::solve(c);

    // Self-check before anything is written or reported.
    if (!mct::verify(c, rep.circuit))
        throw mct::Error(mct::Err::Internal, "solve certificate failed self-verification");

    if (!cert_out.empty()) mct::write_cert_file(cert_out, rep.circuit);
    std::cout << rep.color << ' ' << rep.circuit.length() << ' ' << rep.threshold
              << ' ' << (rep.threshold_ok ? "pass" : "below-threshold") << "\n";
    if (trace) print_trace(mct::proof_trace(c));
    return 0;
}

int run_verify(const std::string& in, const std::string& cert) {
    const mct::EdgeColoring c = mct::read_ecg_file(in);
    const mct::Trail t = mct::read_cert_file(cert);
    const mct::VerifyResult r = mct::verify(c, t);
    if (r.ok) {
        std::cout << "ok\n";
        return 0;
    }
    std::cout << mct::verify_code_name(r.code) << ": " << r.detail << "\n";
    return 1;
}

int run_sweep_cmd(const mct::SweepSpec& spec, int threads, const std::string& out) {
    const std::vector<mct::SweepRow> rows = mct::run_sweep(spec, threads);
    std::ofstream f(out);
    if (!f) throw mct::Error(mct::Err::Io, "cannot open " + out + " for writing");
    mct::write_sweep_csv(f, rows);
    f.flush();
    if (!f) throw mct::Error(mct::Err::Io, "failed writing " + out);

    const mct::SweepSummary s = mct::sweep_summary(rows);
    std::cout << "rows=" << rows.size() << " max_rel_dev_component="
              << s.max_rel_dev_component << " max_rel_dev_ramsey="
              << s.max_rel_dev_ramsey << "\n";
    return 0;
}

struct OracleArgs {
    std::string mode;       // trail | circuit | worstcase
    std::string objective;  // worstcase only: trail | circuit
    std::string in;
    std::string out;
    int n = 0;
    bool has_n = false;
    bool has_in = false;
    bool allow_n7 = false;
};

int run_oracle(const OracleArgs& a) {
    if (a.mode == "worstcase") {
        if (!a.has_n || a.out.empty() || a.has_in) {
            std::cerr << "error: --mode worstcase takes --n and --out, not --in\n";
            return 5;
        }
        const mct::SearchMode sm = a.objective == "circuit"
                                       ? mct::SearchMode::Circuit
                                       : mct::SearchMode::Trail;
        const mct::WorstCaseResult r = mct::worst_case_search(a.n, sm, 1, a.allow_n7);
        mct::write_ecg_file(a.out, r.witness);
        std::cout << "n,mode,value,witness_file\n"
                  << a.n << ',' << mct::search_mode_name(sm) << ',' << r.value << ','
                  << a.out << "\n";
        return 0;
    }

    if (!a.has_in || a.has_n) {
        std::cerr << "error: --mode " << a.mode << " takes --in, not --n\n";
        return 5;
    }
    const mct::EdgeColoring c = mct::read_ecg_file(a.in);
    mct::OracleResult best;
    mct::ColorId best_color = 0;
    for (mct::ColorId col = 0; col < c.k(); ++col) {
        const mct::ColorClassGraph g = mct::color_class(c, col);
        mct::OracleResult r = a.mode == "trail" ? mct::longest_trail_exact(g)
                                                : mct::longest_circuit_exact(g);
        if (col == 0 || r.best > best.best) {
            best = std::move(r);
            best_color = col;
        }
    }
    if (!a.out.empty()) {
        if (!mct::verify(c, best.witness))
            throw mct::Error(mct::Err::Internal,
                             "oracle witness failed self-verification");
        mct::write_cert_file(a.out, best.witness);
    }
    std::cout << "value=" << best.best << " color=" << best_color;
    if (!a.out.empty()) std::cout << " witness=" << a.out;
    std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monochromatic circuit toolkit"};
    app.require_subcommand(1);

    // gen
    GenArgs ga;
    CLI::App* gen = app.add_subcommand("gen", "generate a coloring file");
    gen->add_option("--family", ga.family, "extremal|affine|random")
        ->required()
        ->check(CLI::IsMember({"extremal", "affine", "random"}));
    auto* optn = gen->add_option("--n", ga.n, "vertex count");
    auto* optk = gen->add_option("--k", ga.k, "color count");
    auto* optq = gen->add_option("--q", ga.q, "plane order (prime)");
    auto* optm = gen->add_option("--m", ga.m, "blob size");
    auto* opts = gen->add_option("--seed", ga.seed, "prng seed");
    gen->add_option("-o,--out", ga.out, "output ecg path")->required();

    // solve
    std::string solve_in, solve_cert;
    bool solve_trace = false;
    CLI::App* solve = app.add_subcommand("solve", "solve a coloring file");
    solve->add_option("-i,--in", solve_in, "input ecg path")->required();
    solve->add_option("-c,--cert", solve_cert, "certificate output path");
    solve->add_flag("--trace", solve_trace, "print the case trace (k = 2)");

    // verify
    std::string ver_in, ver_cert;
    CLI::App* verify = app.add_subcommand("verify", "verify a certificate");
    verify->add_option("-i,--in", ver_in, "input ecg path")->required();
    verify->add_option("-c,--cert", ver_cert, "certificate path")->required();

    // sweep
    mct::SweepSpec spec;
    int sweep_threads = 1;
    std::string sweep_out;
    CLI::App* sweep = app.add_subcommand("sweep", "run a family sweep to CSV");
    sweep->add_option("--family", spec.family, "extremal|random")
        ->required()
        ->check(CLI::IsMember({"extremal", "random"}));
    sweep->add_option("--n-min", spec.n_min, "smallest n")->required();
    sweep->add_option("--n-max", spec.n_max, "largest n")->required();
    sweep->add_option("--step", spec.step, "n increment");
    sweep->add_option("--seeds", spec.seeds, "seed count (random family)");
    sweep->add_option("--k", spec.k, "color count (random family)");
    sweep->add_option("--threads", sweep_threads, "worker threads");
    sweep->add_flag("--timings", spec.timings, "record wall-clock runtime_ms");
    sweep->add_option("-o,--out", sweep_out, "output csv path")->required();

    // oracle
    OracleArgs oa;
    oa.objective = "trail";
    CLI::App* oracle = app.add_subcommand("oracle", "exact search oracles");
    oracle->add_option("--mode", oa.mode, "trail|circuit|worstcase")
        ->required()
        ->check(CLI::IsMember({"trail", "circuit", "worstcase"}));
    oracle->add_option("--objective", oa.objective, "worstcase target: trail|circuit")
        ->check(CLI::IsMember({"trail", "circuit"}));
    auto* orc_in_opt = oracle->add_option("-i,--in", oa.in, "input ecg path");
    auto* orc_n_opt = oracle->add_option("--n", oa.n, "worst-case vertex count");
    oracle->add_flag("--allow-n7", oa.allow_n7, "permit the n = 7 search");
    oracle->add_option("-o,--out", oa.out, "witness output path");

    // diagnose
    std::string diag_in;
    CLI::App* diagnose = app.add_subcommand("diagnose", "case diagnosis (k = 2)");
    diagnose->add_option("-i,--in", diag_in, "input ecg path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 5;
    }

    try {
        if (*gen) {
            ga.has_n = optn->count() > 0;
            ga.has_k = optk->count() > 0;
            ga.has_q = optq->count() > 0;
            ga.has_m = optm->count() > 0;
            ga.has_seed = opts->count() > 0;
            return run_gen(ga);
        }
        if (*solve) return run_solve(solve_in, solve_cert, solve_trace);
        if (*verify) return run_verify(ver_in, ver_cert);
        if (*sweep) return run_sweep_cmd(spec, sweep_threads, sweep_out);
        if (*oracle) {
            oa.has_n = orc_n_opt->count() > 0;
            oa.has_in = orc_in_opt->count() > 0;
            return run_oracle(oa);
        }
        if (*diagnose) {
            print_trace(mct::proof_trace(mct::read_ecg_file(diag_in)));
            return 0;
        }
    } catch (const mct::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
