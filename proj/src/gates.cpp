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

#include "gates.h"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace indsup {

void GateIndex::add(GateDef g)
{
    std::vector<Var> in_vars;
    in_vars.reserve(g.inputs.size());
    for (Lit l : g.inputs) in_vars.push_back(l.var());
    std::sort(in_vars.begin(), in_vars.end());
    auto key = std::make_tuple(g.out.var(), static_cast<uint8_t>(g.op), std::move(in_vars));
    if (!keys_.insert(std::move(key)).second) return;

    const Var v = g.out.var();
    if (v >= by_var_.size()) by_var_.resize(v + 1);
    by_var_[v].push_back(std::move(g));
    count_++;
}

const std::vector<GateDef>& GateIndex::for_var(Var v) const
{
    static const std::vector<GateDef> empty;
    return v < by_var_.size() ? by_var_[v] : empty;
}

std::vector<GateDef> GateIndex::all() const
{
    std::vector<GateDef> out;
    out.reserve(count_);
    for (const auto& gs : by_var_) out.insert(out.end(), gs.begin(), gs.end());
    return out;
}

void find_gate_out(Lit out_lit, const OccurrenceList& occ, const CnfFormula& f,
                   std::vector<uint8_t>& marker, GateIndex& gates, uint32_t max_inputs)
{
    std::vector<Lit> to_clear;
    for (uint32_t ci : occ[~out_lit]) {
        const Clause& c = f.clauses[ci];
        if (c.size() != 2) continue;
        const Lit other = (c[0] == ~out_lit) ? c[1] : c[0];
        marker[other.index()] = 1;
        to_clear.push_back(other);
    }
    if (to_clear.empty()) return;

    for (uint32_t ci : occ[out_lit]) {
        const Clause& c = f.clauses[ci];
        if (c.size() <= 2 || c.size() > max_inputs + 1) continue;
        bool ok = true;
        for (Lit l : c) {
            if (l != out_lit && !marker[(~l).index()]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        GateDef g;
        g.out = out_lit;
        g.op = GateOp::And;
        for (Lit l : c) {
            if (l != out_lit) g.inputs.push_back(~l);
        }
        gates.add(std::move(g));
    }

    for (Lit l : to_clear) marker[l.index()] = 0;
}

GateIndex find_and_gates_sweep(const OccurrenceList& occ, const CnfFormula& f)
{
    GateIndex gates;
    std::vector<uint8_t> marker(2 * (static_cast<size_t>(f.num_vars) + 1), 0);
    for (Var v = 1; v <= f.num_vars; v++) {
        find_gate_out(Lit(v, true), occ, f, marker, gates);
        find_gate_out(Lit(v, false), occ, f, marker, gates);
    }
    return gates;
}

namespace {

// Sign patterns are masks over the sorted variable set: bit i set means
// vars[i] appears negated. An XOR with rhs=1 is defined by all even-weight
// patterns, rhs=0 by all odd-weight ones.
uint32_t parity_patterns(uint32_t k, bool even)
{
    uint32_t out = 0;
    for (uint32_t m = 0; m < (1u << k); m++) {
        if ((std::popcount(m) % 2 == 0) == even) out |= 1u << m;
    }
    return out;
}

} // namespace

std::vector<XorConstraint> find_xor_gates(const CnfFormula& f, uint32_t max_len)
{
    assert(max_len >= 2 && max_len <= 5);
    const OccurrenceList occ = build_occurrence_list(f);

    std::set<std::vector<Var>> candidates;
    for (const Clause& c : f.clauses) {
        if (c.size() < 2 || c.size() > max_len) continue;
        std::vector<Var> vs;
        vs.reserve(c.size());
        for (Lit l : c) vs.push_back(l.var());
        std::sort(vs.begin(), vs.end());
        candidates.insert(std::move(vs));
    }

    std::vector<XorConstraint> found;
    for (const std::vector<Var>& vars : candidates) {
        const uint32_t k = static_cast<uint32_t>(vars.size());

        // Clauses touching any of the candidate variables, deduplicated.
        std::vector<uint32_t> cids;
        for (Var v : vars) {
            for (bool pos : {true, false}) {
                const auto& lst = occ[Lit(v, pos)];
                cids.insert(cids.end(), lst.begin(), lst.end());
            }
        }
        std::sort(cids.begin(), cids.end());
        cids.erase(std::unique(cids.begin(), cids.end()), cids.end());

        uint32_t covered = 0;
        for (uint32_t ci : cids) {
            const Clause& c = f.clauses[ci];
            if (c.size() > k) continue;
            uint32_t fixed_mask = 0, free_bits = (1u << k) - 1;
            bool inside = true;
            for (Lit l : c) {
                auto it = std::lower_bound(vars.begin(), vars.end(), l.var());
                if (it == vars.end() || *it != l.var()) {
                    inside = false;
                    break;
                }
                const uint32_t bit = 1u << (it - vars.begin());
                free_bits &= ~bit;
                if (!l.positive()) fixed_mask |= bit;
            }
            if (!inside) continue;
            // Enumerate the sign patterns the clause covers: its own signs
            // extended over the variables it does not mention.
            for (uint32_t sub = free_bits;; sub = (sub - 1) & free_bits) {
                covered |= 1u << (fixed_mask | sub);
                if (sub == 0) break;
            }
        }

        if ((covered & parity_patterns(k, true)) == parity_patterns(k, true))
            found.push_back({vars, true});
        if ((covered & parity_patterns(k, false)) == parity_patterns(k, false))
            found.push_back({vars, false});
    }
    return found;
}

std::vector<GateDef> extract_xor_definitions(const XorConstraint& xc)
{
    assert(xc.vars.size() >= 2);
    std::vector<GateDef> defs;
    defs.reserve(xc.vars.size());
    for (size_t i = 0; i < xc.vars.size(); i++) {
        GateDef g;
        // x_i = rhs ^ (xor of the rest), so the output literal is negated
        // exactly when rhs = 1.
        g.out = Lit(xc.vars[i], !xc.rhs);
        g.op = GateOp::Xor;
        for (size_t j = 0; j < xc.vars.size(); j++) {
            if (j != i) g.inputs.push_back(Lit(xc.vars[j], true));
        }
        defs.push_back(std::move(g));
    }
    return defs;
}

GateIndex collect_gates(const CnfFormula& f, const OccurrenceList& occ, uint32_t xor_max_len)
{
    GateIndex gates = find_and_gates_sweep(occ, f);
    for (const XorConstraint& xc : find_xor_gates(f, xor_max_len)) {
        for (GateDef& def : extract_xor_definitions(xc)) gates.add(std::move(def));
    }
    return gates;
}

std::string describe_gate(const GateDef& g)
{
    std::ostringstream os;
    os << g.out.to_dimacs() << " = " << (g.op == GateOp::And ? "AND(" : "XOR(");
    for (size_t i = 0; i < g.inputs.size(); i++) {
        if (i) os << ", ";
        os << g.inputs[i].to_dimacs();
    }
    os << ")";
    return os.str();
}

} // namespace indsup
