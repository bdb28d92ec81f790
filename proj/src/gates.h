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

#include <set>
#include <span>
#include <tuple>
#include <vector>

namespace indsup {

enum class GateOp : uint8_t { And, Xor };

/// A recovered definition out = op(inputs), entailed by the formula it was
/// recovered from. AND gates have exactly two inputs; a length-k XOR
/// constraint yields definitions with k-1 inputs.
struct GateDef {
    Lit out;
    GateOp op = GateOp::And;
    std::vector<Lit> inputs;

    bool operator==(const GateDef&) const = default;
};

/// Gates grouped by output variable, in recovery order. Duplicates are
/// suppressed on (output variable, op, sorted input variable set).
class GateIndex {
public:
    void add(GateDef g);
    const std::vector<GateDef>& for_var(Var v) const;
    size_t size() const { return count_; }
    std::vector<GateDef> all() const;

private:
    std::vector<std::vector<GateDef>> by_var_;
    std::set<std::tuple<Var, uint8_t, std::vector<Var>>> keys_;
    size_t count_ = 0;
};

/// Parity constraint vars[0] ^ ... ^ vars[k-1] = rhs over positive
/// variables, vars ascending.
struct XorConstraint {
    std::vector<Var> vars;
    bool rhs = false;

    bool operator==(const XorConstraint&) const = default;
};

/// Marks the binary-clause partners of ~out_lit, then accepts every clause
/// of out_lit of length n+1 <= max_inputs+1 whose other literals all have
/// their opposite polarity marked. Clears its markings before returning.
/// marker must be all-zero and sized for 2*(num_vars+1) literal indices.
void find_gate_out(Lit out_lit, const OccurrenceList& occ, const CnfFormula& f,
                   std::vector<uint8_t>& marker, GateIndex& gates, uint32_t max_inputs = 2);

/// Tries both polarities of every variable as an AND-gate output.
GateIndex find_and_gates_sweep(const OccurrenceList& occ, const CnfFormula& f);

/// Every parity constraint of length 2..max_len whose defining clauses are
/// all present; a shorter clause over a subset of the variables counts as
/// covering all of its sign-pattern extensions.
std::vector<XorConstraint> find_xor_gates(const CnfFormula& f, uint32_t max_len);

/// One definition per literal of the constraint; the output polarity makes
/// each definition equivalent to the constraint.
std::vector<GateDef> extract_xor_definitions(const XorConstraint& xc);

/// AND sweep plus XOR recovery merged into one index.
GateIndex collect_gates(const CnfFormula& f, const OccurrenceList& occ, uint32_t xor_max_len);

/// "3 = AND(1, 2)" rendering for debug dumps.
std::string describe_gate(const GateDef& g);

} // namespace indsup
