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

#include <algorithm>
#include <unordered_set>

namespace indsup {

std::vector<Var> DepGraph::roots() const
{
    std::unordered_set<Var> has_incoming;
    for (const auto& [u, v] : edges) has_incoming.insert(v);
    std::vector<Var> out;
    for (Var v : vertices) {
        if (!has_incoming.count(v)) out.push_back(v);
    }
    return out;
}

DepGraph build_dependency_graph(const GateIndex& gates, std::span<const Var> projection)
{
    DepGraph g;
    g.vertices.assign(projection.begin(), projection.end());
    std::sort(g.vertices.begin(), g.vertices.end());
    std::unordered_set<Var> in_p(g.vertices.begin(), g.vertices.end());

    for (Var v : g.vertices) {
        for (const GateDef& gd : gates.for_var(v)) {
            for (Lit in : gd.inputs) {
                if (in_p.count(in.var())) g.edges.emplace(in.var(), v);
            }
        }
    }
    return g;
}

ExplicitResult greedy_ind_search(const GateIndex& gates, std::span<const Var> projection,
                                 const IncidenceMap& incidence)
{
    std::vector<Var> order(projection.begin(), projection.end());
    std::sort(order.begin(), order.end(), [&](Var a, Var b) {
        if (incidence[a] != incidence[b]) return incidence[a] < incidence[b];
        return a < b;
    });

    std::unordered_set<Var> in_p(order.begin(), order.end());
    ExplicitResult res;
    for (Var u : order) {
        for (const GateDef& g : gates.for_var(u)) {
            bool ok = true;
            for (Lit in : g.inputs) {
                if (!in_p.count(in.var())) {
                    // could lead to a cycle (or leave the projection), skip
                    ok = false;
                    break;
                }
            }
            if (ok) {
                in_p.erase(u);
                res.removed.emplace_back(u, g);
                break;
            }
        }
    }

    res.support.assign(in_p.begin(), in_p.end());
    std::sort(res.support.begin(), res.support.end());
    return res;
}

} // namespace indsup
