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
#include "gates.h"

#include <set>
#include <span>
#include <utility>
#include <vector>

namespace indsup {

/// Diagnostic view of the gate structure restricted to the projection set:
/// an edge u -> v for every gate defining v from an input u, both in P.
struct DepGraph {
    std::vector<Var> vertices; // ascending
    std::set<std::pair<Var, Var>> edges;

    /// Vertices without incoming edges.
    std::vector<Var> roots() const;
};

DepGraph build_dependency_graph(const GateIndex& gates, std::span<const Var> projection);

struct ExplicitResult {
    std::vector<Var> support; // ascending
    /// Removal order with the admitting gate; each removed variable's gate
    /// inputs lie in support or among later-removed variables.
    std::vector<std::pair<Var, GateDef>> removed;
};

/// Greedy feedback-vertex-set style pass: variables are visited in
/// ascending incidence (ties by ascending id) and removed when some gate
/// defines them from variables still in the shrinking set.
ExplicitResult greedy_ind_search(const GateIndex& gates, std::span<const Var> projection,
                                 const IncidenceMap& incidence);

} // namespace indsup
