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

#include "padoa.h"

#include "oracle.h"
#include "solver.h"
#include "test_util.h"

#include <doctest.h>

using namespace indsup;
using namespace indsup::testgen;

namespace {

SolveOutcome solve_query(const PadoaInstance& inst, Var target, const std::vector<Var>& active)
{
    Solver s(inst.psi.num_vars);
    s.add_formula(inst.psi);
    return s.solve(definability_query_assumptions(inst, target, active));
}

} // namespace

TEST_CASE("duplication of a unit formula")
{
    const CnfFormula f = make_formula(1, {clause({1})});
    const PadoaInstance inst = build_padoa(f, f.projection);
    CHECK(inst.psi.num_vars == 3);
    CHECK(inst.y_of(1) == 2);
    CHECK(inst.z_of(1) == 3);
    REQUIRE(inst.psi.clauses.size() == 4);
    CHECK(inst.psi.clauses[0] == clause({1}));
    CHECK(inst.psi.clauses[1] == clause({2}));
    CHECK(inst.psi.clauses[2] == clause({-3, -1, 2}));
    CHECK(inst.psi.clauses[3] == clause({-3, 1, -2}));
}

TEST_CASE("fresh variable numbering")
{
    const CnfFormula f = make_formula(3, {clause({1, 2, 3})});
    const PadoaInstance inst = build_padoa(f, std::vector<Var>{1, 2});
    CHECK(inst.psi.num_vars == 8);
    CHECK(inst.y_of(1) == 4);
    CHECK(inst.y_of(2) == 5);
    CHECK(inst.y_of(3) == 6);
    CHECK(inst.z_of(1) == 7);
    CHECK(inst.z_of(2) == 8);
}

TEST_CASE("psi size is twice the clauses plus two per selector")
{
    Rng rng(17);
    for (int round = 0; round < 20; round++) {
        const CnfFormula f = random_cnf(rng, 6, 9);
        const std::vector<Var> p = random_subset(rng, 6, 0.6);
        const PadoaInstance inst = build_padoa(f, p);
        CHECK(inst.psi.clauses.size() == 2 * f.clauses.size() + 2 * p.size());
    }
}

TEST_CASE("psi mirrors any model when all selectors hold")
{
    Rng rng(19);
    int sat_rounds = 0;
    for (int round = 0; round < 20; round++) {
        const CnfFormula f = random_cnf(rng, 5, 7);
        if (enumerate_solutions(f).empty()) continue;
        sat_rounds++;
        const std::vector<Var> p = all_vars(f.num_vars);
        const PadoaInstance inst = build_padoa(f, p);

        bool found = false;
        for (uint32_t m : enumerate_solutions(inst.psi).models) {
            bool all_z = true;
            for (Var v : p) all_z = all_z && lit_true_in(m, Lit(inst.z_of(v), true));
            if (all_z) {
                found = true;
                break;
            }
        }
        CHECK(found);
    }
    CHECK(sat_rounds > 0);
}

TEST_CASE("definability queries")
{
    SUBCASE("a unit variable is defined by nothing")
    {
        const CnfFormula f = make_formula(1, {clause({1})});
        const PadoaInstance inst = build_padoa(f, f.projection);
        const auto assumps = definability_query_assumptions(inst, 1, {});
        CHECK(assumps == std::vector<Lit>{Lit(1, true), Lit(2, false)});
        CHECK(solve_query(inst, 1, {}) == SolveOutcome::Unsat);
    }
    SUBCASE("a free disjunct is not defined by the other")
    {
        const CnfFormula f = make_formula(2, {clause({1, 2})});
        const PadoaInstance inst = build_padoa(f, f.projection);
        CHECK(solve_query(inst, 1, {2}) == SolveOutcome::Sat);

        // cross-checked against the duplicated formula's own models
        const auto assumps = definability_query_assumptions(inst, 1, std::vector<Var>{2});
        bool witness = false;
        for (uint32_t m : enumerate_solutions(inst.psi).models) {
            bool ok = true;
            for (Lit a : assumps) ok = ok && lit_true_in(m, a);
            witness = witness || ok;
        }
        CHECK(witness);
    }
    SUBCASE("a gate output is defined by its inputs")
    {
        const CnfFormula f =
            make_formula(3, {clause({-3, 1}), clause({-3, 2}), clause({3, -1, -2})});
        const PadoaInstance inst = build_padoa(f, f.projection);
        CHECK(solve_query(inst, 3, {1, 2}) == SolveOutcome::Unsat);
        CHECK(is_defined(f, 3, std::vector<Var>{1, 2}));
    }
    SUBCASE("targets outside the projection are rejected")
    {
        const CnfFormula f = make_formula(2, {clause({1, 2})});
        const PadoaInstance inst = build_padoa(f, std::vector<Var>{1});
        CHECK_THROWS_AS(definability_query_assumptions(inst, 2, {}), std::invalid_argument);
    }
}

TEST_CASE("padoa query agrees with the enumeration oracle")
{
    Rng rng(23);
    for (int round = 0; round < 60; round++) {
        const CnfFormula f = random_cnf(rng, 6, 8);
        std::vector<Var> p = random_subset(rng, 6, 0.7);
        if (p.empty()) continue;
        const Var target = p[rng() % p.size()];
        std::vector<Var> active;
        for (Var v : p) {
            if (v != target && rng() % 2 == 0) active.push_back(v);
        }
        const PadoaInstance inst = build_padoa(f, p);
        const bool unsat = solve_query(inst, target, active) == SolveOutcome::Unsat;
        CHECK(unsat == is_defined(f, target, active));
    }
}

TEST_CASE("padoa dimacs dump parses back")
{
    const CnfFormula f = make_formula(2, {clause({1, -2})});
    const PadoaInstance inst = build_padoa(f, f.projection);
    const CnfFormula round = parse_dimacs(write_padoa_dimacs(inst));
    CHECK(round.num_vars == inst.psi.num_vars);
    CHECK(round.clauses == inst.psi.clauses);
}
