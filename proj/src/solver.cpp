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

#include "solver.h"

#include <algorithm>

namespace indsup {

// ---- VarHeap ----

void Solver::VarHeap::grow(Var v)
{
    if (v >= pos_.size()) pos_.resize(v + 1, -1);
}

void Solver::VarHeap::insert(Var v)
{
    grow(v);
    if (pos_[v] >= 0) return;
    pos_[v] = static_cast<int32_t>(heap_.size());
    heap_.push_back(v);
    sift_up(heap_.size() - 1);
}

Var Solver::VarHeap::pop()
{
    Var top = heap_[0];
    heap_[0] = heap_.back();
    pos_[heap_[0]] = 0;
    heap_.pop_back();
    pos_[top] = -1;
    if (!heap_.empty()) sift_down(0);
    return top;
}

void Solver::VarHeap::on_increase(Var v)
{
    if (contains(v)) sift_up(static_cast<size_t>(pos_[v]));
}

void Solver::VarHeap::sift_up(size_t i)
{
    Var v = heap_[i];
    while (i > 0) {
        size_t parent = (i - 1) / 2;
        if (!before(v, heap_[parent])) break;
        heap_[i] = heap_[parent];
        pos_[heap_[i]] = static_cast<int32_t>(i);
        i = parent;
    }
    heap_[i] = v;
    pos_[v] = static_cast<int32_t>(i);
}

void Solver::VarHeap::sift_down(size_t i)
{
    Var v = heap_[i];
    for (;;) {
        size_t child = 2 * i + 1;
        if (child >= heap_.size()) break;
        if (child + 1 < heap_.size() && before(heap_[child + 1], heap_[child])) child++;
        if (!before(heap_[child], v)) break;
        heap_[i] = heap_[child];
        pos_[heap_[i]] = static_cast<int32_t>(i);
        i = child;
    }
    heap_[i] = v;
    pos_[v] = static_cast<int32_t>(i);
}

// ---- Solver ----

Solver::Solver(uint32_t num_vars)
{
    ensure_num_vars(num_vars);
}

void Solver::ensure_num_vars(uint32_t n)
{
    if (n <= num_vars_ && num_vars_ > 0) return;
    num_vars_ = std::max(num_vars_, n);
    assigns_.resize(num_vars_ + 1, Value::Undef);
    vardata_.resize(num_vars_ + 1);
    polarity_.resize(num_vars_ + 1, 0);
    assumption_mark_.resize(num_vars_ + 1, 0);
    seen_.resize(num_vars_ + 1, 0);
    activity_.resize(num_vars_ + 1, 0.0);
    watches_.resize(2 * (static_cast<size_t>(num_vars_) + 1));
    for (Var v = 1; v <= num_vars_; v++) {
        order_.grow(v);
        if (assigns_[v] == Value::Undef) order_.insert(v);
    }
}

Value Solver::value(Lit l) const
{
    const Value v = assigns_[l.var()];
    if (v == Value::Undef) return Value::Undef;
    return ((v == Value::True) == l.positive()) ? Value::True : Value::False;
}

void Solver::add_clause(std::span<const Lit> lits)
{
    assert(decision_level() == 0);
    for (Lit l : lits) {
        if (l.var() == 0 || l.var() > num_vars_)
            throw std::out_of_range("clause literal " + std::to_string(l.to_dimacs()) +
                                    " beyond declared variable count");
    }
    if (!ok_) return;

    Clause c(lits.begin(), lits.end());
    if (!normalize_clause(c)) return; // tautology
    // Level-0 values are permanent: drop false literals, skip satisfied
    // clauses.
    Clause kept;
    for (Lit l : c) {
        const Value v = value(l);
        if (v == Value::True) return;
        if (v == Value::Undef) kept.push_back(l);
    }
    if (kept.empty()) {
        ok_ = false;
        return;
    }
    if (kept.size() == 1) {
        unchecked_enqueue(kept[0], clause_ref_undef);
        if (propagate() != clause_ref_undef) ok_ = false;
        return;
    }
    attach_watches(store_clause(std::move(kept), false));
}

void Solver::add_clause(std::initializer_list<Lit> lits)
{
    add_clause(std::span<const Lit>(lits.begin(), lits.size()));
}

void Solver::add_formula(const CnfFormula& f)
{
    ensure_num_vars(f.num_vars);
    for (const Clause& c : f.clauses) add_clause(c);
}

ClauseRef Solver::store_clause(std::vector<Lit> lits, bool learnt)
{
    db_.push_back({std::move(lits), learnt});
    return static_cast<ClauseRef>(db_.size() - 1);
}

void Solver::attach_watches(ClauseRef cref)
{
    const auto& c = db_[cref].lits;
    assert(c.size() >= 2);
    watches_[c[0].index()].push_back({cref, c[1]});
    watches_[c[1].index()].push_back({cref, c[0]});
}

void Solver::unchecked_enqueue(Lit p, ClauseRef from)
{
    assert(value(p) == Value::Undef);
    assigns_[p.var()] = p.positive() ? Value::True : Value::False;
    vardata_[p.var()] = {from, decision_level()};
    trail_.push_back(p);
}

void Solver::enqueue_assumption(Lit p)
{
    stats_.assumption_insertions++;
    unchecked_enqueue(p, clause_ref_undef);
}

void Solver::enqueue_search_decision(Lit p)
{
    stats_.decisions++;
    unchecked_enqueue(p, clause_ref_undef);
}

ClauseRef Solver::propagate()
{
    ClauseRef confl = clause_ref_undef;
    while (qhead_ < trail_.size()) {
        const Lit p = trail_[qhead_++];
        std::vector<Watcher>& ws = watches_[(~p).index()];
        size_t i = 0, j = 0;
        while (i != ws.size()) {
            const Watcher w = ws[i];
            if (value(w.blocker) == Value::True) {
                ws[j++] = ws[i++];
                continue;
            }
            std::vector<Lit>& c = db_[w.cref].lits;
            const Lit false_lit = ~p;
            if (c[0] == false_lit) std::swap(c[0], c[1]);
            assert(c[1] == false_lit);
            i++;

            const Lit first = c[0];
            if (first != w.blocker && value(first) == Value::True) {
                ws[j++] = {w.cref, first};
                continue;
            }
            bool moved = false;
            for (size_t k = 2; k < c.size(); k++) {
                if (value(c[k]) != Value::False) {
                    std::swap(c[1], c[k]);
                    watches_[c[1].index()].push_back({w.cref, first});
                    moved = true;
                    break;
                }
            }
            if (moved) continue;

            // unit or conflicting
            ws[j++] = {w.cref, first};
            if (value(first) == Value::False) {
                confl = w.cref;
                qhead_ = static_cast<uint32_t>(trail_.size());
                while (i < ws.size()) ws[j++] = ws[i++];
            } else {
                stats_.propagations++;
                unchecked_enqueue(first, w.cref);
            }
        }
        ws.resize(j);
    }
    if (confl != clause_ref_undef) {
        stats_.conflicts++;
        conflicts_since_restart_++;
        // a contradiction among level-0 facts can never be undone
        if (decision_level() == 0) ok_ = false;
    }
    return confl;
}

uint32_t Solver::analyze_conflict(ClauseRef confl, std::vector<Lit>& learnt)
{
    assert(decision_level() >= 1);
    learnt.clear();
    learnt.push_back(lit_undef); // slot for the asserting literal

    uint32_t path_count = 0;
    Lit p = lit_undef;
    size_t index = trail_.size();
    ClauseRef reason = confl;

    do {
        assert(reason != clause_ref_undef);
        const auto& c = db_[reason].lits;
        for (Lit q : c) {
            if (q == p) continue;
            const Var v = q.var();
            if (seen_[v] || vardata_[v].level == 0) continue;
            seen_[v] = 1;
            bump_activity(v);
            if (vardata_[v].level >= decision_level())
                path_count++;
            else
                learnt.push_back(q);
        }
        while (!seen_[trail_[--index].var()]) {}
        p = trail_[index];
        seen_[p.var()] = 0;
        reason = vardata_[p.var()].reason;
        path_count--;
    } while (path_count > 0);
    learnt[0] = ~p;

    uint32_t backjump = 0;
    if (learnt.size() > 1) {
        size_t max_i = 1;
        for (size_t i = 2; i < learnt.size(); i++) {
            if (vardata_[learnt[i].var()].level > vardata_[learnt[max_i].var()].level) max_i = i;
        }
        std::swap(learnt[1], learnt[max_i]);
        backjump = vardata_[learnt[1].var()].level;
    }

    for (size_t i = 1; i < learnt.size(); i++) seen_[learnt[i].var()] = 0;
    decay_activity();
    return backjump;
}

void Solver::learn_and_assert(const std::vector<Lit>& learnt, uint32_t backjump_level)
{
    backtrack_until(backjump_level);
    if (learnt.size() == 1) {
        assert(decision_level() == 0);
        unchecked_enqueue(learnt[0], clause_ref_undef);
    } else {
        const ClauseRef cref = store_clause(learnt, true);
        attach_watches(cref);
        unchecked_enqueue(learnt[0], cref);
    }
    stats_.learnt_clauses++;
}

void Solver::backtrack_until(uint32_t level)
{
    if (decision_level() <= level) return;
    const uint32_t keep = trail_lim_[level];
    for (size_t i = trail_.size(); i-- > keep;) {
        const Var v = trail_[i].var();
        if (!assumption_mark_[v]) polarity_[v] = (assigns_[v] == Value::True) ? 1 : 0;
        assigns_[v] = Value::Undef;
        order_.insert(v);
    }
    trail_.resize(keep);
    trail_lim_.resize(level);
    qhead_ = keep;
}

Lit Solver::pick_branch_literal()
{
    while (!order_.empty()) {
        // deterministic: ties fall to the lowest variable id
        const Var v = order_.pop();
        if (assigns_[v] == Value::Undef) return Lit(v, polarity_[v] != 0);
    }
    return lit_undef;
}

void Solver::note_restart()
{
    restart_idx_++;
    conflicts_since_restart_ = 0;
    restart_threshold_ = restart_unit_ * luby(restart_idx_ + 1);
    stats_.restarts++;
}

void Solver::bump_activity(Var v)
{
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
        for (double& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    order_.on_increase(v);
}

void Solver::decay_activity()
{
    var_inc_ /= activity_decay_;
}

uint64_t Solver::luby(uint64_t i)
{
    // 1 1 2 1 1 2 4 1 1 2 1 1 2 4 8 ...
    uint64_t k = 1;
    while ((1ull << k) - 1 < i) k++;
    while ((1ull << k) - 1 != i) {
        k--;
        i -= (1ull << k) - 1;
    }
    return 1ull << (k - 1);
}

bool Solver::interrupted()
{
    return interrupt_ && ((++poll_counter_ & 0x3ff) == 0) && interrupt_();
}

std::vector<Clause> Solver::learnt_snapshot() const
{
    std::vector<Clause> out;
    for (const StoredClause& sc : db_) {
        if (sc.learnt) out.push_back(sc.lits);
    }
    return out;
}

SolveOutcome Solver::solve(std::span<const Lit> assumptions, int64_t conflict_limit)
{
    assert(decision_level() == 0);
    if (!ok_) return SolveOutcome::Unsat;
    for (Lit a : assumptions) {
        assert(a.var() >= 1 && a.var() <= num_vars_);
        mark_assumption(a.var(), true);
    }
    const uint64_t start_conflicts = stats_.conflicts;
    const auto finish = [&](SolveOutcome out) {
        backtrack_until(0);
        for (Lit a : assumptions) mark_assumption(a.var(), false);
        return out;
    };

    std::vector<Lit> learnt;
    for (;;) {
        // consume assumptions in order, one fake decision level each
        Lit branch = lit_undef;
        bool is_assumption = false;
        while (decision_level() < assumptions.size() && branch == lit_undef) {
            const Lit p = assumptions[decision_level()];
            const Value v = value(p);
            if (v == Value::False) return finish(SolveOutcome::Unsat);
            if (v == Value::True) {
                new_decision_level();
                continue;
            }
            branch = p;
            is_assumption = true;
        }
        if (branch == lit_undef) {
            branch = pick_branch_literal();
            if (branch == lit_undef) {
                model_ = assigns_;
                return finish(SolveOutcome::Sat);
            }
        }

        new_decision_level();
        if (is_assumption)
            enqueue_assumption(branch);
        else
            enqueue_search_decision(branch);

        for (;;) {
            const ClauseRef confl = propagate();
            if (confl == clause_ref_undef) break;
            if (decision_level() == 0) return finish(SolveOutcome::Unsat);
            const uint32_t backjump = analyze_conflict(confl, learnt);
            learn_and_assert(learnt, backjump);
        }

        if (restart_due()) {
            backtrack_until(0);
            note_restart();
        }
        if (conflict_limit >= 0 &&
            static_cast<int64_t>(stats_.conflicts - start_conflicts) >= conflict_limit)
            return finish(SolveOutcome::Unknown);
        if (interrupted()) return finish(SolveOutcome::Unknown);
    }
}

} // namespace indsup
