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
#include "stopwatch.h"

#include <span>
#include <vector>

namespace indsup {

struct SearchStats {
    uint64_t queries = 0;
    uint64_t sat = 0;
    uint64_t unsat = 0;
    uint64_t unknown = 0;
    uint64_t premoved_unconstrained = 0;
    // solver counters for the whole search
    uint64_t assumption_insertions = 0;
    uint64_t propagations = 0;
    uint64_t conflicts = 0;
    uint64_t decisions = 0;
    uint64_t restarts = 0;
    bool timed_out = false;
};

/// Query order for the implicit phase: the returned sequence is ascending
/// by (incidence, variable id); consumers pop from the back, so the pop
/// order is descending incidence with ties broken by descending id.
std::vector<Var> query_order(std::span<const Var> vars, const IncidenceMap& incidence);

/// One definability query per projection variable against a fresh
/// assumption stack (selectors of classified-independent plus still-unknown
/// variables, then the query pair). Non-UNSAT outcomes keep the variable.
/// conflict_budget < 0 means unlimited; it is applied per query.
std::vector<Var> simple_search(const CnfFormula& f, std::span<const Var> projection,
                               int64_t conflict_budget, SearchStats* stats = nullptr,
                               const Deadline& deadline = {});

/// The same classification loop fused into one persistent solver run:
/// selector assumptions stay on the trail between queries, a refuted query
/// retracts only its own three assumptions, an accepted variable's selector
/// is spliced below the remaining ones, and restarts back off only to the
/// assumption levels. Returns the empty set for unsatisfiable input.
std::vector<Var> integrated_implicit(const CnfFormula& f, std::span<const Var> projection,
                                     int64_t conflict_budget, SearchStats* stats = nullptr,
                                     const Deadline& deadline = {});

} // namespace indsup
