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

#include "oracle.h"
#include "test_util.h"

#include <doctest.h>

using namespace indsup;
using namespace indsup::testgen;

namespace {

bool model_satisfies(const Solver& s, const CnfFormula& f)
{
    const auto& model = s.model();
    for (const Clause& c : f.clauses) {
        bool sat = false;
        for (Lit l : c) {
            const bool v = model[l.var()] == Value::True;
            if (v == l.positive()) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool oracle_sat_under(const CnfFormula& f, const std::vector<Lit>& assumps)
{
    for (uint32_t m : enumerate_solutions(f).models) {
        bool ok = true;
        for (Lit a : assumps) {
            if (!lit_true_in(m, a)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

} // namespace

TEST_CASE("level zero conflicts make the solver permanently unsat")
{
    Solver s(1);
    s.add_clause({lit(1)});
    s.add_clause({lit(-1)});
    CHECK_FALSE(s.ok());
    CHECK(s.solve() == SolveOutcome::Unsat);
}

TEST_CASE("a satisfiable clause solves")
{
    const CnfFormula f = make_formula(2, {clause({1, 2})});
    Solver s(2);
    s.add_formula(f);
    CHECK(s.solve() == SolveOutcome::Sat);
    CHECK(model_satisfies(s, f));
}

TEST_CASE("the empty clause is a contradiction")
{
    Solver s(2);
    s.add_clause(std::span<const Lit>{});
    CHECK_FALSE(s.ok());
    CHECK(s.solve() == SolveOutcome::Unsat);
}

TEST_CASE("assumptions propagate")
{
    Solver s(2);
    s.add_clause({lit(-1), lit(2)});
    const std::vector<Lit> assumps = {lit(1)};
    CHECK(s.solve(assumps) == SolveOutcome::Sat);
    CHECK(s.model()[1] == Value::True);
    CHECK(s.model()[2] == Value::True);
}

TEST_CASE("a falsified assumption is unsat")
{
    Solver s(1);
    s.add_clause({lit(-1)});
    const std::vector<Lit> assumps = {lit(1)};
    CHECK(s.solve(assumps) == SolveOutcome::Unsat);
    // solver stays usable
    CHECK(s.solve() == SolveOutcome::Sat);
}

TEST_CASE("a zero conflict budget yields unknown")
{
    Rng rng(55);
    const CnfFormula f = random_3cnf(rng, 12, 4.0);
    Solver s(f.num_vars);
    s.add_formula(f);
    CHECK(s.solve({}, 0) == SolveOutcome::Unknown);
}

TEST_CASE("propagation to fixpoint")
{
    SUBCASE("chains")
    {
        Solver s(3);
        s.add_clause({lit(-1), lit(2)});
        s.add_clause({lit(-2), lit(3)});
        s.new_decision_level();
        s.enqueue_search_decision(lit(1));
        CHECK(s.propagate() == clause_ref_undef);
        CHECK(s.value(Var(2)) == Value::True);
        CHECK(s.value(Var(3)) == Value::True);
    }
    SUBCASE("conflict")
    {
        Solver s(2);
        s.add_clause({lit(-1), lit(2)});
        s.add_clause({lit(-1), lit(-2)});
        s.new_decision_level();
        s.enqueue_search_decision(lit(1));
        CHECK(s.propagate() != clause_ref_undef);
    }
    SUBCASE("nothing to do")
    {
        Solver s(2);
        s.add_clause({lit(1), lit(2)});
        CHECK(s.propagate() == clause_ref_undef);
    }
}

TEST_CASE("first uip analysis on the textbook example")
{
    Solver s(4);
    s.add_clause({lit(-1), lit(-2), lit(3)});
    s.add_clause({lit(-3), lit(4)});
    s.add_clause({lit(-3), lit(-4)});

    s.new_decision_level();
    s.enqueue_search_decision(lit(1));
    REQUIRE(s.propagate() == clause_ref_undef);
    s.new_decision_level();
    s.enqueue_search_decision(lit(2));
    const ClauseRef confl = s.propagate();
    REQUIRE(confl != clause_ref_undef);

    std::vector<Lit> learnt;
    const uint32_t backjump = s.analyze_conflict(confl, learnt);
    // x3 is the single uip: both conflict literals flow through it
    CHECK(learnt == std::vector<Lit>{lit(-3)});
    CHECK(backjump == 0);

    s.learn_and_assert(learnt, backjump);
    CHECK(s.decision_level() == 0);
    CHECK(s.value(Var(3)) == Value::False);
    CHECK(s.propagate() == clause_ref_undef);
    CHECK(s.solve() == SolveOutcome::Sat);
}

TEST_CASE("backtracking truncates the trail")
{
    Solver s(5);
    for (Var v = 1; v <= 5; v++) {
        s.new_decision_level();
        s.enqueue_search_decision(Lit(v, true));
    }
    CHECK(s.decision_level() == 5);
    s.backtrack_until(2);
    CHECK(s.decision_level() == 2);
    CHECK(s.value(Var(1)) == Value::True);
    CHECK(s.value(Var(2)) == Value::True);
    for (Var v = 3; v <= 5; v++) CHECK(s.value(v) == Value::Undef);
    s.backtrack_until(2); // no-op
    CHECK(s.decision_level() == 2);
    s.backtrack_until(0);
    CHECK(s.decision_level() == 0);
    for (Var v = 1; v <= 5; v++) CHECK(s.value(v) == Value::Undef);
}

TEST_CASE("branching prefers activity, then low ids, with false polarity")
{
    SUBCASE("fresh solver")
    {
        Solver s(3);
        CHECK(s.pick_branch_literal() == Lit(1, false));
    }
    SUBCASE("all assigned")
    {
        Solver s(2);
        s.new_decision_level();
        s.enqueue_search_decision(lit(1));
        s.new_decision_level();
        s.enqueue_search_decision(lit(2));
        CHECK(s.pick_branch_literal() == lit_undef);
    }
    SUBCASE("bumped variables win")
    {
        Solver s(8);
        for (int i = 0; i < 3; i++) s.bump_variable_activity(7);
        CHECK(s.pick_branch_literal() == Lit(7, false));
    }
}

TEST_CASE("agreement with the enumeration oracle")
{
    Rng rng(77);
    std::uniform_int_distribution<uint32_t> pick_vars(4, 14);
    std::uniform_real_distribution<double> pick_density(2.0, 5.0);
    for (int round = 0; round < 120; round++) {
        const CnfFormula f = random_3cnf(rng, pick_vars(rng), pick_density(rng));
        const bool expected = !enumerate_solutions(f).empty();

        Solver s(f.num_vars);
        s.add_formula(f);
        const SolveOutcome got = s.solve();
        CHECK(got == (expected ? SolveOutcome::Sat : SolveOutcome::Unsat));
        if (got == SolveOutcome::Sat) CHECK(model_satisfies(s, f));

        // same instance under random assumptions, reusing the solver
        std::vector<Lit> assumps;
        std::vector<Var> vars = random_subset(rng, f.num_vars, 0.3);
        for (Var v : vars) assumps.emplace_back(v, rng() % 2 == 0);
        const bool expected_a = oracle_sat_under(f, assumps);
        CHECK(s.solve(assumps) == (expected_a ? SolveOutcome::Sat : SolveOutcome::Unsat));
    }
}

TEST_CASE("learnt clauses are entailed")
{
    Rng rng(88);
    for (int round = 0; round < 20; round++) {
        const CnfFormula f = random_3cnf(rng, 10, 4.3);
        Solver s(f.num_vars);
        s.add_formula(f);
        s.solve();
        const ModelSet ms = enumerate_solutions(f);
        for (const Clause& learnt : s.learnt_snapshot()) {
            for (uint32_t m : ms.models) {
                bool sat = false;
                for (Lit l : learnt) sat = sat || lit_true_in(m, l);
                CHECK(sat);
            }
        }
    }
}

TEST_CASE("identical runs produce identical statistics")
{
    Rng rng(99);
    const CnfFormula f = random_3cnf(rng, 14, 4.2);
    auto run = [&] {
        Solver s(f.num_vars);
        s.add_formula(f);
        const SolveOutcome out = s.solve();
        return std::tuple(out, s.stats().conflicts, s.stats().decisions,
                          s.stats().propagations, s.stats().restarts);
    };
    CHECK(run() == run());
}

TEST_CASE("out of range literals are rejected")
{
    Solver s(2);
    CHECK_THROWS_AS(s.add_clause({lit(3)}), std::out_of_range);
}
