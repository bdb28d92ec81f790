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

#include "implicit_search.h"

#include "padoa.h"
#include "solver.h"

#include <algorithm>

namespace indsup {

namespace {

std::vector<Var> unique_sorted(std::span<const Var> vars)
{
    std::vector<Var> out(vars.begin(), vars.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void snapshot_stats(const Solver& solver, SearchStats& st)
{
    const SolverStats& ss = solver.stats();
    st.assumption_insertions = ss.assumption_insertions;
    st.propagations = ss.propagations;
    st.conflicts = ss.conflicts;
    st.decisions = ss.decisions;
    st.restarts = ss.restarts;
}

} // namespace

std::vector<Var> query_order(std::span<const Var> vars, const IncidenceMap& incidence)
{
    std::vector<Var> order(vars.begin(), vars.end());
    std::sort(order.begin(), order.end(), [&](Var a, Var b) {
        if (incidence[a] != incidence[b]) return incidence[a] < incidence[b];
        return a < b;
    });
    return order;
}

std::vector<Var> simple_search(const CnfFormula& f, std::span<const Var> projection,
                               int64_t conflict_budget, SearchStats* stats,
                               const Deadline& deadline)
{
    SearchStats st;
    std::vector<Var> proj = unique_sorted(projection);
    std::vector<Var> result;

    const IncidenceMap inc = compute_incidence(f);
    std::vector<Var> constrained;
    for (Var v : proj) {
        // a variable in no clause is trivially independent, skip the query
        if (inc[v] == 0) {
            result.push_back(v);
            st.premoved_unconstrained++;
        } else {
            constrained.push_back(v);
        }
    }
    std::vector<Var> unknown = query_order(constrained, inc);

    if (!unknown.empty()) {
        const PadoaInstance inst = build_padoa(f, proj);
        Solver solver(inst.psi.num_vars);
        solver.add_formula(inst.psi);
        solver.set_interrupt([&deadline] { return deadline.expired(); });
        if (!solver.ok()) {
            if (stats) *stats = st;
            return {};
        }

        std::vector<Lit> assumps;
        while (!unknown.empty()) {
            if (deadline.expired()) {
                st.timed_out = true;
                result.insert(result.end(), unknown.begin(), unknown.end());
                break;
            }
            const Var q = unknown.back();
            unknown.pop_back();

            assumps.clear();
            for (Var v : result) assumps.emplace_back(inst.z_of(v), true);
            for (Var v : unknown) assumps.emplace_back(inst.z_of(v), true);
            assumps.emplace_back(q, true);
            assumps.emplace_back(inst.y_of(q), false);

            const SolveOutcome ret = solver.solve(assumps, conflict_budget);
            st.queries++;
            if (ret == SolveOutcome::Sat) st.sat++;
            if (ret == SolveOutcome::Unsat) st.unsat++;
            if (ret == SolveOutcome::Unknown) st.unknown++;
            // timeouts count as SAT: only a completed refutation may drop q
            if (ret != SolveOutcome::Unsat) result.push_back(q);
        }
        snapshot_stats(solver, st);
    }

    std::sort(result.begin(), result.end());
    if (stats) *stats = st;
    return result;
}

std::vector<Var> integrated_implicit(const CnfFormula& f, std::span<const Var> projection,
                                     int64_t conflict_budget, SearchStats* stats,
                                     const Deadline& deadline)
{
    SearchStats st;
    std::vector<Var> proj = unique_sorted(projection);

    const IncidenceMap inc = compute_incidence(f);
    std::vector<Var> independent, constrained;
    for (Var v : proj) {
        if (inc[v] == 0) {
            independent.push_back(v);
            st.premoved_unconstrained++;
        } else {
            constrained.push_back(v);
        }
    }
    std::vector<Var> unknown = query_order(constrained, inc);

    const PadoaInstance inst = build_padoa(f, proj);
    Solver solver(inst.psi.num_vars);
    solver.add_formula(inst.psi);

    const auto finalize = [&](std::vector<Var> res) {
        snapshot_stats(solver, st);
        std::sort(res.begin(), res.end());
        if (stats) *stats = st;
        return res;
    };

    if (!solver.ok()) return finalize({});
    if (unknown.empty()) return finalize(std::move(independent));

    // Live assumption stack: selectors of classified-independent variables
    // at the bottom, selectors of still-unknown variables above them (the
    // next query's selector on top), then the active query pair.
    std::vector<Lit> assumps;
    const auto push_selector = [&](Var v) {
        const Lit z(inst.z_of(v), true);
        solver.mark_assumption(z.var(), true);
        assumps.push_back(z);
    };
    for (Var v : independent) push_selector(v);
    for (Var v : unknown) push_selector(v);

    Var query = 0;
    uint64_t query_conflicts_start = 0;
    const auto begin_query = [&] {
        assert(!unknown.empty());
        // the selector on top belongs to the variable being queried; it
        // must not be assumed while x != y is being tested
        solver.backtrack_until(static_cast<uint32_t>(assumps.size()) - 1);
        query = unknown.back();
        unknown.pop_back();
        assert(assumps.back() == Lit(inst.z_of(query), true));
        solver.mark_assumption(assumps.back().var(), false);
        assumps.pop_back();
        const Lit xq(query, true);
        const Lit nyq(inst.y_of(query), false);
        solver.mark_assumption(xq.var(), true);
        solver.mark_assumption(nyq.var(), true);
        assumps.push_back(xq);
        assumps.push_back(nyq);
        query_conflicts_start = solver.conflicts();
        st.queries++;
    };
    const auto drop_query_lits = [&] {
        for (int i = 0; i < 2; i++) {
            solver.mark_assumption(assumps.back().var(), false);
            assumps.pop_back();
        }
        solver.backtrack_until(static_cast<uint32_t>(assumps.size()));
    };

    begin_query();
    std::vector<Lit> learnt;
    for (;;) {
        if (deadline.expired()) {
            st.timed_out = true;
            std::vector<Var> partial = independent;
            partial.push_back(query);
            partial.insert(partial.end(), unknown.begin(), unknown.end());
            return finalize(std::move(partial));
        }

        // re-walk the assumption stack from the current level
        Lit branch = lit_undef;
        bool is_assumption = false;
        bool falsified = false;
        uint32_t falsified_pos = 0;
        while (solver.decision_level() < assumps.size()) {
            const Lit p = assumps[solver.decision_level()];
            const Value v = solver.value(p);
            if (v == Value::False) {
                falsified = true;
                falsified_pos = solver.decision_level();
                break;
            }
            if (v == Value::True) {
                solver.new_decision_level(); // fake level, already satisfied
                continue;
            }
            branch = p;
            is_assumption = true;
            break;
        }

        if (falsified) {
            if (falsified_pos + 2 < assumps.size()) {
                // a falsified selector implies the input itself is
                // unsatisfiable (psi under all selectors mirrors any model)
                return finalize({});
            }
            st.unsat++;
            drop_query_lits();
            if (unknown.empty()) return finalize(std::move(independent));
            begin_query();
            continue;
        }

        if (branch == lit_undef) {
            const bool budget_out =
                conflict_budget >= 0 &&
                static_cast<int64_t>(solver.conflicts() - query_conflicts_start) >=
                    conflict_budget;
            if (!budget_out) branch = solver.pick_branch_literal();
            if (budget_out || branch == lit_undef) {
                // SAT or out of budget: the variable stays independent and
                // its selector moves below every still-unknown selector so
                // it is never popped again
                if (budget_out)
                    st.unknown++;
                else
                    st.sat++;
                drop_query_lits();
                const auto splice = static_cast<uint32_t>(independent.size());
                independent.push_back(query);
                const Lit z(inst.z_of(query), true);
                solver.mark_assumption(z.var(), true);
                assumps.insert(assumps.begin() + splice, z);
                solver.backtrack_until(splice);
                if (unknown.empty()) return finalize(std::move(independent));
                begin_query();
                continue;
            }
            is_assumption = false;
        }

        solver.new_decision_level();
        if (is_assumption)
            solver.enqueue_assumption(branch);
        else
            solver.enqueue_search_decision(branch);

        for (;;) {
            const ClauseRef confl = solver.propagate();
            if (confl == clause_ref_undef) break;
            if (solver.decision_level() == 0) return finalize({});
            const uint32_t backjump = solver.analyze_conflict(confl, learnt);
            solver.learn_and_assert(learnt, backjump);
        }

        if (solver.restart_due()) {
            // everything up to the assumption levels would be re-created
            // deterministically, so restart only above them
            solver.backtrack_until(
                std::min(solver.decision_level(), static_cast<uint32_t>(assumps.size())));
            solver.note_restart();
        }
    }
}

} // namespace indsup
