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

/// The duplicated formula psi = f(X) and f(X->Y) and, for every projection
/// variable i, the selector implication z_i -> (x_i = y_i) encoded as two
/// ternary clauses. Y copies all of X; Z indexes the projection only.
/// Variable layout: y_i = num_vars + i, z_j = 2*num_vars + rank of j in the
/// ascending projection order. Satisfiable whenever f is (set y := x).
struct PadoaInstance {
    CnfFormula psi;
    uint32_t orig_num_vars = 0;
    std::vector<Var> projection; // ascending

    Var y_of(Var x) const { return orig_num_vars + x; }
    Var z_of(Var x) const;
    bool in_projection(Var x) const;
};

PadoaInstance build_padoa(const CnfFormula& f, std::span<const Var> projection);

/// Assumptions [z_j for j in active, ascending] ++ [x_target, ~y_target].
/// Solving psi to completion under them is UNSAT exactly when target is
/// defined by active. Throws std::invalid_argument if target is not a
/// projection variable.
std::vector<Lit> definability_query_assumptions(const PadoaInstance& inst, Var target,
                                                std::span<const Var> active);

/// DIMACS text of psi preceded by a comment block mapping the x/y/z layout.
std::string write_padoa_dimacs(const PadoaInstance& inst);

} // namespace indsup
