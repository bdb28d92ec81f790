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

#include "explicit_search.h"

#include "oracle.h"
#include "test_util.h"

#include <doctest.h>

#include <set>

using namespace indsup;
using namespace indsup::testgen;

namespace {

IncidenceMap make_incidence(std::vector<uint32_t> counts_from_var1)
{
    IncidenceMap inc;
    inc.count.push_back(0);
    for (uint32_t c : counts_from_var1) inc.count.push_back(c);
    return inc;
}

GateIndex single_and_gate()
{
    GateIndex gi;
    gi.add({lit(3), GateOp::And, {lit(1), lit(2)}});
    return gi;
}

GateIndex mutual_xor_gates()
{
    GateIndex gi;
    gi.add({lit(2), GateOp::Xor, {lit(1), lit(3)}});
    gi.add({lit(3), GateOp::Xor, {lit(1), lit(2)}});
    return gi;
}

} // namespace

TEST_CASE("dependency graph construction")
{
    const std::vector<Var> p = {1, 2, 3};
    SUBCASE("single gate")
    {
        const DepGraph g = build_dependency_graph(single_and_gate(), p);
        CHECK(g.vertices == p);
        CHECK(g.edges == std::set<std::pair<Var, Var>>{{1, 3}, {2, 3}});
        CHECK(g.roots() == std::vector<Var>{1, 2});
    }
    SUBCASE("no gates")
    {
        const DepGraph g = build_dependency_graph(GateIndex{}, p);
        CHECK(g.edges.empty());
        CHECK(g.roots() == p);
    }
    SUBCASE("mutual definitions form a cycle")
    {
        const DepGraph g = build_dependency_graph(mutual_xor_gates(), p);
        CHECK(g.edges == std::set<std::pair<Var, Var>>{{1, 2}, {3, 2}, {1, 3}, {2, 3}});
        CHECK(g.roots() == std::vector<Var>{1});
    }
    SUBCASE("gates outside the projection are ignored")
    {
        const DepGraph g = build_dependency_graph(single_and_gate(), std::vector<Var>{1, 2});
        CHECK(g.edges.empty());
    }
}

TEST_CASE("greedy search removes defined variables")
{
    const std::vector<Var> p = {1, 2, 3};
    SUBCASE("single gate")
    {
        const ExplicitResult r =
            greedy_ind_search(single_and_gate(), p, make_incidence({2, 2, 3}));
        CHECK(r.support == std::vector<Var>{1, 2});
        REQUIRE(r.removed.size() == 1);
        CHECK(r.removed[0].first == 3);

        const CnfFormula f =
            make_formula(3, {clause({-3, 1}), clause({-3, 2}), clause({3, -1, -2})});
        CHECK(is_independent_support(f, p, r.support));
    }
    SUBCASE("mutual gates drop exactly one side")
    {
        std::vector<Clause> cls;
        add_xor_constraint(cls, {1, 2, 3}, true); // 2 = 1^3 and 3 = 1^2 both hold
        const CnfFormula f = make_formula(3, std::move(cls));
        const ExplicitResult r =
            greedy_ind_search(mutual_xor_gates(), p, compute_incidence(f));
        CHECK(r.support.size() == 2);
        CHECK(r.removed.size() == 1);
        CHECK(is_independent_support(f, p, r.support));
    }
    SUBCASE("no gates keeps everything")
    {
        const ExplicitResult r = greedy_ind_search(GateIndex{}, p, make_incidence({1, 1, 1}));
        CHECK(r.support == p);
        CHECK(r.removed.empty());
    }
}

TEST_CASE("variables are visited in ascending incidence")
{
    // both 1 and 3 are definable; visiting low incidence first removes 3,
    // whose removal then blocks the gate for 1
    GateIndex gi;
    gi.add({lit(1), GateOp::And, {lit(2), lit(3)}});
    gi.add({lit(3), GateOp::And, {lit(1), lit(2)}});
    const ExplicitResult r =
        greedy_ind_search(gi, std::vector<Var>{1, 2, 3}, make_incidence({3, 1, 2}));
    CHECK(r.support == std::vector<Var>{1, 2});
    REQUIRE(r.removed.size() == 1);
    CHECK(r.removed[0].first == 3);
}

TEST_CASE("removal order is an acyclicity witness")
{
    Rng rng(33);
    for (int round = 0; round < 25; round++) {
        const Circuit circ = random_tseitin_circuit(rng, 2 + rng() % 4, 3 + rng() % 5);
        const CnfFormula& f = circ.f;
        const GateIndex gates = collect_gates(f, build_occurrence_list(f), 5);
        const std::vector<Var> p = all_vars(f.num_vars);
        const ExplicitResult r = greedy_ind_search(gates, p, compute_incidence(f));

        // inputs of removed[i] lie in support or among later removals
        for (size_t i = 0; i < r.removed.size(); i++) {
            std::set<Var> allowed(r.support.begin(), r.support.end());
            for (size_t j = i + 1; j < r.removed.size(); j++) allowed.insert(r.removed[j].first);
            for (Lit in : r.removed[i].second.inputs) CHECK(allowed.count(in.var()) == 1);
        }

        // support ∪ removed = P
        std::set<Var> whole(r.support.begin(), r.support.end());
        for (const auto& [v, g] : r.removed) whole.insert(v);
        CHECK(whole == std::set<Var>(p.begin(), p.end()));

        CHECK(is_independent_support(f, p, r.support));

        // roots always survive
        const DepGraph dg = build_dependency_graph(gates, p);
        for (Var root : dg.roots())
            CHECK(std::find(r.support.begin(), r.support.end(), root) != r.support.end());

        // a second pass removes nothing further
        const ExplicitResult again = greedy_ind_search(gates, r.support, compute_incidence(f));
        CHECK(again.support == r.support);
        CHECK(again.removed.empty());
    }
}
