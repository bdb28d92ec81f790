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

#include <functional>
#include <span>
#include <vector>

namespace indsup {

enum class Value : uint8_t { False = 0, True = 1, Undef = 2 };

enum class SolveOutcome : uint8_t { Sat, Unsat, Unknown };

using ClauseRef = uint32_t;
inline constexpr ClauseRef clause_ref_undef = UINT32_MAX;
inline constexpr int64_t no_conflict_limit = -1;

struct SolverStats {
    uint64_t decisions = 0;
    uint64_t propagations = 0;
    uint64_t conflicts = 0;
    uint64_t assumption_insertions = 0;
    uint64_t restarts = 0;
    uint64_t learnt_clauses = 0;
};

/// Conflict-driven clause learning solver. solve() treats assumptions as
/// retractable fake decisions inserted one per level, with full unit
/// propagation after each. The lower-level members (new_decision_level,
/// enqueue_*, propagate, analyze_conflict, backtrack_until, ...) are public
/// so an external loop can drive the solver directly while keeping
/// assumptions on the trail between queries.
///
/// Branching is exponential-decay activity (decay 0.95/conflict) with ties
/// broken toward the lowest variable id; polarity caching starts at false
/// and skips variables marked as assumptions. Restarts follow a Luby
/// sequence with unit 100. Learnt clauses are never deleted.
class Solver {
public:
    explicit Solver(uint32_t num_vars = 0);

    void ensure_num_vars(uint32_t n);
    uint32_t num_vars() const { return num_vars_; }

    /// False once an unconditional contradiction has been derived.
    bool ok() const { return ok_; }

    /// Must be called at decision level 0. Normalizes the clause, drops it
    /// when satisfied at level 0, enqueues units, and marks the solver
    /// permanently unsatisfiable on an immediate conflict. Throws
    /// std::out_of_range for variables beyond the declared count.
    void add_clause(std::span<const Lit> lits);
    void add_clause(std::initializer_list<Lit> lits);
    void add_formula(const CnfFormula& f);

    /// conflict_limit < 0 means unlimited; the budget counts conflicts
    /// since this call began. Always returns at decision level 0.
    SolveOutcome solve(std::span<const Lit> assumptions = {},
                       int64_t conflict_limit = no_conflict_limit);

    /// Valid after solve() returned Sat; indexed by variable.
    const std::vector<Value>& model() const { return model_; }

    // ---- low-level search interface ----
    Value value(Var v) const { return assigns_[v]; }
    Value value(Lit l) const;
    uint32_t decision_level() const { return static_cast<uint32_t>(trail_lim_.size()); }
    void new_decision_level() { trail_lim_.push_back(static_cast<uint32_t>(trail_.size())); }
    void enqueue_assumption(Lit p);
    void enqueue_search_decision(Lit p);
    /// Unit propagation to fixpoint; returns the first conflicting clause
    /// or clause_ref_undef.
    ClauseRef propagate();
    /// First-UIP analysis. learnt[0] is the asserting literal; returns the
    /// backjump level (the second-highest level in the clause, 0 for a
    /// unit). Requires decision level >= 1.
    uint32_t analyze_conflict(ClauseRef confl, std::vector<Lit>& learnt);
    /// Backtracks to the backjump level, records the learnt clause and
    /// enqueues its asserting literal.
    void learn_and_assert(const std::vector<Lit>& learnt, uint32_t backjump_level);
    void backtrack_until(uint32_t level);
    /// Highest-activity unassigned variable with its cached polarity, or
    /// lit_undef when every variable is assigned.
    Lit pick_branch_literal();
    bool restart_due() const { return conflicts_since_restart_ >= restart_threshold_; }
    void note_restart();
    void bump_variable_activity(Var v) { bump_activity(v); }
    /// Assumption-marked variables are excluded from the polarity cache.
    void mark_assumption(Var v, bool on) { assumption_mark_[v] = on; }

    const SolverStats& stats() const { return stats_; }
    uint64_t conflicts() const { return stats_.conflicts; }

    /// Cooperative interrupt, polled occasionally during solve(); an
    /// interrupted solve returns Unknown.
    void set_interrupt(std::function<bool()> fn) { interrupt_ = std::move(fn); }
    bool interrupted();

    /// Copies of the learnt clauses (unit learnts become level-0 facts and
    /// are not listed).
    std::vector<Clause> learnt_snapshot() const;

private:
    struct Watcher {
        ClauseRef cref;
        Lit blocker;
    };
    struct StoredClause {
        std::vector<Lit> lits;
        bool learnt = false;
    };
    struct VarData {
        ClauseRef reason = clause_ref_undef;
        uint32_t level = 0;
    };

    // Max-heap over variables: higher activity first, lower id on ties.
    class VarHeap {
    public:
        explicit VarHeap(const std::vector<double>& act) : act_(act) {}
        bool empty() const { return heap_.empty(); }
        bool contains(Var v) const { return v < pos_.size() && pos_[v] >= 0; }
        void grow(Var v);
        void insert(Var v);
        Var pop();
        void on_increase(Var v);

    private:
        bool before(Var a, Var b) const
        {
            return act_[a] > act_[b] || (act_[a] == act_[b] && a < b);
        }
        void sift_up(size_t i);
        void sift_down(size_t i);

        const std::vector<double>& act_;
        std::vector<Var> heap_;
        std::vector<int32_t> pos_;
    };

    void unchecked_enqueue(Lit p, ClauseRef from);
    ClauseRef store_clause(std::vector<Lit> lits, bool learnt);
    void attach_watches(ClauseRef cref);
    void bump_activity(Var v);
    void decay_activity();
    static uint64_t luby(uint64_t i);

    uint32_t num_vars_ = 0;
    bool ok_ = true;

    std::vector<StoredClause> db_;
    std::vector<std::vector<Watcher>> watches_; // indexed by Lit::index()
    std::vector<Value> assigns_;                // indexed by var
    std::vector<VarData> vardata_;
    std::vector<uint8_t> polarity_; // cached last value, initially false
    std::vector<uint8_t> assumption_mark_;
    std::vector<uint8_t> seen_; // analyze scratch

    std::vector<Lit> trail_;
    std::vector<uint32_t> trail_lim_;
    uint32_t qhead_ = 0;

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    VarHeap order_{activity_};

    uint64_t conflicts_since_restart_ = 0;
    uint64_t restart_idx_ = 0;
    uint64_t restart_threshold_ = 100;
    static constexpr uint64_t restart_unit_ = 100;
    static constexpr double activity_decay_ = 0.95;

    std::function<bool()> interrupt_;
    uint64_t poll_counter_ = 0;

    std::vector<Value> model_;
    SolverStats stats_;
};

} // namespace indsup
