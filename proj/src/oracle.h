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

#include <span>
#include <vector>

namespace indsup {

/// Exhaustive-enumeration ground truth. Deliberately naive; refuses
/// formulas beyond kMaxOracleVars variables.
inline constexpr uint32_t kMaxOracleVars = 26;
inline constexpr uint32_t kMaxDefinedSetSize = 20;

/// Complete set of satisfying assignments. Bit v-1 of a model holds the
/// value of variable v.
struct ModelSet {
    uint32_t num_vars = 0;
    std::vector<uint32_t> models;

    bool empty() const { return models.empty(); }
    size_t size() const { return models.size(); }
};

ModelSet enumerate_solutions(const CnfFormula& f);

/// True iff any two models agreeing on vars agree on x... packed
/// restriction helper: bit i of the result is the model's value of vars[i].
uint32_t project_model(uint32_t model, std::span<const Var> vars);

/// Definition 1 check: grouping sol(f) by the restriction to I, every group
/// projects to a single restriction to P. Requires I subset of P.
bool is_independent_support(const CnfFormula& f, std::span<const Var> projection,
                            std::span<const Var> support);

/// Definition 2 check: every assignment over base fixes x in all consistent
/// models (vacuously true when none exist).
bool is_defined(const CnfFormula& f, Var x, std::span<const Var> base);

/// |sol(f) projected to support| == |sol(f) projected to projection|.
bool check_projected_count_preserved(const CnfFormula& f, std::span<const Var> projection,
                                     std::span<const Var> support);

} // namespace indsup
