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

#pragma once

#include "cnf.h"
#include "implicit_search.h"

#include <vector>

namespace indsup {

struct PipelineConfig {
    /// Per-variable conflict budget for the implicit phase and the
    /// unsatisfiability pre-check; negative means unlimited.
    int64_t conflict_budget = 500;
    bool run_explicit = true;
    bool run_implicit = true;
    bool use_simple_search = false;
    uint32_t xor_max_len = 5; // 2..5
    bool verify = false;
    uint64_t seed = 0;
    double wall_timeout = 0.0; // seconds, 0 = none
};

struct PhaseReport {
    bool ran = false;
    uint32_t in_size = 0;
    uint32_t out_size = 0;
    double seconds = 0.0;
};

struct SupportResult {
    std::vector<Var> support; // ascending; partial (but sound) on timeout
    bool timed_out = false;
    bool unsat_input = false;
    bool verified = false; // the oracle check ran
    bool verify_ok = false;

    PhaseReport explicit_phase;
    PhaseReport implicit_phase;
    uint64_t gates_recovered = 0;
    uint64_t xor_constraints = 0;
    uint64_t explicit_removed = 0;
    SearchStats implicit_stats;
    double total_seconds = 0.0;
};

/// Runs the enabled phases in sequence, feeding each phase's output to the
/// next as its projection set. Unsatisfiable inputs (detected by one
/// budgeted solve up front) yield the empty support. cfg.verify reruns the
/// result through the enumeration oracle (throws for formulas beyond its
/// bound).
SupportResult run_pipeline(const CnfFormula& f, const PipelineConfig& cfg);

} // namespace indsup
