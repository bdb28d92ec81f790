/******************************************
Copyright (C) 2026 The indsup developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in
all copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
THE SOFTWARE.
***********************************************/

#include "bench.h"
#include "explicit_search.h"
#include "gates.h"
#include "oracle.h"
#include "padoa.h"
#include "pipeline.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace indsup;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_timeout = 2;

void print_stats(const SupportResult& res, size_t projection_size)
{
    if (res.unsat_input) std::cout << "c formula is unsatisfiable\n";
    if (res.explicit_phase.ran) {
        std::cout << "c [explicit] projection " << res.explicit_phase.in_size << " -> "
                  << res.explicit_phase.out_size << " (gates " << res.gates_recovered
                  << ", xor-constraints " << res.xor_constraints << ", removed "
                  << res.explicit_removed << ")\n";
    }
    if (res.implicit_phase.ran) {
        const SearchStats& st = res.implicit_stats;
        std::cout << "c [implicit] projection " << res.implicit_phase.in_size << " -> "
                  << res.implicit_phase.out_size << " (queries " << st.queries << ", sat "
                  << st.sat << ", unsat " << st.unsat << ", unknown " << st.unknown
                  << ", unconstrained " << st.premoved_unconstrained << ")\n";
        std::cout << "c [implicit] insertions " << st.assumption_insertions << ", conflicts "
                  << st.conflicts << ", propagations " << st.propagations << ", decisions "
                  << st.decisions << ", restarts " << st.restarts << "\n";
    }
    std::cout << "c projection size " << projection_size << ", support size "
              << res.support.size() << "\n";
    // wall-clock lines go to stderr so stdout stays deterministic
    std::cerr << "c time total " << res.total_seconds << " s";
    if (res.explicit_phase.ran) std::cerr << ", explicit " << res.explicit_phase.seconds << " s";
    if (res.implicit_phase.ran) std::cerr << ", implicit " << res.implicit_phase.seconds << " s";
    std::cerr << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"indsup: computes an independent support for a CNF formula's projection set"};
    app.require_subcommand(0, 1);

    std::string input_path;
    PipelineConfig cfg;
    bool no_explicit = false, no_implicit = false, use_simple = false;
    bool dump_gates = false, dump_padoa = false;

    app.add_option("input", input_path, "input CNF in DIMACS format (projection via 'c ind ... 0')");
    app.add_option("--conflict-limit", cfg.conflict_budget,
                   "conflicts allowed per definability query, -1 = unlimited")
        ->check(CLI::Range(int64_t{-1}, std::numeric_limits<int64_t>::max()));
    app.add_flag("--no-explicit", no_explicit, "skip the gate-based phase");
    app.add_flag("--no-implicit", no_implicit, "skip the solver-based phase");
    app.add_flag("--simple", use_simple,
                 "use one solver call per query instead of the integrated loop");
    app.add_option("--xor-max-len", cfg.xor_max_len, "longest XOR constraint to recover (2..5)")
        ->check(CLI::Range(2u, 5u));
    app.add_flag("--verify", cfg.verify, "check the result with the enumeration oracle");
    app.add_option("--seed", cfg.seed, "random seed recorded in the run configuration");
    app.add_option("--timeout", cfg.wall_timeout, "wall-clock limit in seconds, 0 = none");
    app.add_flag("--dump-gates", dump_gates, "print recovered gates as comment lines");
    app.add_flag("--dump-padoa", dump_padoa, "print the duplicated formula as DIMACS");

    CLI::App* bench_cmd =
        app.add_subcommand("bench", "run a list of instances and report PAR-2");
    std::vector<std::string> bench_paths;
    double bench_timeout = 60.0;
    bench_cmd->add_option("instances", bench_paths, "CNF files to run")->required();
    bench_cmd->add_option("--timeout", bench_timeout, "per-instance wall timeout in seconds");

    CLI11_PARSE(app, argc, argv);

    cfg.run_explicit = !no_explicit;
    cfg.run_implicit = !no_implicit;
    cfg.use_simple_search = use_simple;

    if (bench_cmd->parsed()) {
        const BenchResult result = run_bench(bench_paths, cfg, bench_timeout);
        std::cout << bench_csv(result.records);
        std::cerr << "PAR-2: " << result.par2 << "\n";
        return exit_ok;
    }

    if (input_path.empty()) {
        std::cerr << "error: no input file given\n";
        return exit_error;
    }
    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "error: cannot open '" << input_path << "'\n";
        return exit_error;
    }

    try {
        const CnfFormula f = parse_dimacs(in);

        if (dump_gates) {
            const OccurrenceList occ = build_occurrence_list(f);
            for (const GateDef& g : collect_gates(f, occ, cfg.xor_max_len).all())
                std::cout << "c gate " << describe_gate(g) << "\n";
        }
        if (dump_padoa) std::cout << write_padoa_dimacs(build_padoa(f, f.projection));

        if (cfg.verify && f.num_vars > kMaxOracleVars) {
            std::cerr << "error: --verify needs at most " << kMaxOracleVars
                      << " variables, formula has " << f.num_vars << "\n";
            return exit_error;
        }

        const SupportResult res = run_pipeline(f, cfg);
        print_stats(res, f.projection.size());
        if (res.verified)
            std::cout << "c verify: " << (res.verify_ok ? "ok" : "FAILED") << "\n";
        if (res.timed_out) {
            std::cerr << "c wall timeout hit, no support emitted\n";
            return exit_timeout;
        }
        std::cout << write_support(res.support);
        if (res.verified && !res.verify_ok) return exit_error;
        return exit_ok;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
}
