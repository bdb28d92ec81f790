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

#include "pipeline.h"

#include "explicit_search.h"
#include "gates.h"
#include "oracle.h"
#include "solver.h"
#include "stopwatch.h"

#include <algorithm>

namespace indsup {

SupportResult run_pipeline(const CnfFormula& f, const PipelineConfig& cfg)
{
    assert(cfg.xor_max_len >= 2 && cfg.xor_max_len <= 5);
    const Stopwatch total;
    const Deadline deadline =
        cfg.wall_timeout > 0 ? Deadline::in_seconds(cfg.wall_timeout) : Deadline{};

    SupportResult res;
    std::vector<Var> cur = f.projection;
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());

    {
        Solver pre(f.num_vars);
        pre.add_formula(f);
        pre.set_interrupt([&deadline] { return deadline.expired(); });
        if (pre.solve({}, cfg.conflict_budget) == SolveOutcome::Unsat) {
            res.unsat_input = true;
            res.total_seconds = total.seconds();
            return res;
        }
    }

    if (cfg.run_explicit && !deadline.expired()) {
        const Stopwatch sw;
        const OccurrenceList occ = build_occurrence_list(f);
        const IncidenceMap inc = compute_incidence(f);
        const GateIndex gates = collect_gates(f, occ, cfg.xor_max_len);
        res.xor_constraints = find_xor_gates(f, cfg.xor_max_len).size();
        ExplicitResult er = greedy_ind_search(gates, cur, inc);
        res.explicit_phase = {true, static_cast<uint32_t>(cur.size()),
                              static_cast<uint32_t>(er.support.size()), sw.seconds()};
        res.gates_recovered = gates.size();
        res.explicit_removed = er.removed.size();
        cur = std::move(er.support);
    }

    if (cfg.run_implicit && !deadline.expired()) {
        const Stopwatch sw;
        SearchStats st;
        std::vector<Var> out =
            cfg.use_simple_search
                ? simple_search(f, cur, cfg.conflict_budget, &st, deadline)
                : integrated_implicit(f, cur, cfg.conflict_budget, &st, deadline);
        res.implicit_phase = {true, static_cast<uint32_t>(cur.size()),
                              static_cast<uint32_t>(out.size()), sw.seconds()};
        res.implicit_stats = st;
        if (st.timed_out) res.timed_out = true;
        cur = std::move(out);
    }

    if (deadline.expired()) res.timed_out = true;
    res.support = std::move(cur);

    if (cfg.verify && !res.timed_out) {
        res.verify_ok = is_independent_support(f, f.projection, res.support);
        res.verified = true;
    }
    res.total_seconds = total.seconds();
    return res;
}

} // namespace indsup
