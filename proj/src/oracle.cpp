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

#include "oracle.h"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace indsup {

namespace {

void check_var_bound(const CnfFormula& f)
{
    if (f.num_vars > kMaxOracleVars)
        throw std::invalid_argument("oracle refuses formulas with more than " +
                                    std::to_string(kMaxOracleVars) + " variables");
}

bool is_subset(std::span<const Var> small, std::span<const Var> big)
{
    std::unordered_set<Var> bs(big.begin(), big.end());
    return std::all_of(small.begin(), small.end(), [&](Var v) { return bs.count(v) != 0; });
}

} // namespace

ModelSet enumerate_solutions(const CnfFormula& f)
{
    check_var_bound(f);
    // One (pos, neg) mask pair per clause: satisfied iff a positive literal
    // is set or a negative literal is unset.
    std::vector<std::pair<uint32_t, uint32_t>> masks;
    masks.reserve(f.clauses.size());
    for (const Clause& c : f.clauses) {
        uint32_t pos = 0, neg = 0;
        for (Lit l : c) {
            uint32_t bit = 1u << (l.var() - 1);
            (l.positive() ? pos : neg) |= bit;
        }
        masks.emplace_back(pos, neg);
    }

    ModelSet ms;
    ms.num_vars = f.num_vars;
    const uint64_t total = 1ull << f.num_vars;
    for (uint64_t a = 0; a < total; a++) {
        const uint32_t assign = static_cast<uint32_t>(a);
        bool sat = true;
        for (const auto& [pos, neg] : masks) {
            if ((assign & pos) == 0 && (~assign & neg) == 0) {
                sat = false;
                break;
            }
        }
        if (sat) ms.models.push_back(assign);
    }
    return ms;
}

uint32_t project_model(uint32_t model, std::span<const Var> vars)
{
    uint32_t out = 0;
    for (size_t i = 0; i < vars.size(); i++) {
        if (model & (1u << (vars[i] - 1))) out |= 1u << i;
    }
    return out;
}

bool is_independent_support(const CnfFormula& f, std::span<const Var> projection,
                            std::span<const Var> support)
{
    if (!is_subset(support, projection))
        throw std::invalid_argument("support is not a subset of the projection set");
    const ModelSet ms = enumerate_solutions(f);
    std::unordered_map<uint32_t, uint32_t> proj_of;
    proj_of.reserve(ms.models.size());
    for (uint32_t m : ms.models) {
        const uint32_t key = project_model(m, support);
        const uint32_t val = project_model(m, projection);
        auto [it, inserted] = proj_of.emplace(key, val);
        if (!inserted && it->second != val) return false;
    }
    return true;
}

bool is_defined(const CnfFormula& f, Var x, std::span<const Var> base)
{
    if (base.size() > kMaxDefinedSetSize)
        throw std::invalid_argument("definedness base exceeds the enumeration bound");
    const ModelSet ms = enumerate_solutions(f);
    const uint32_t xbit = 1u << (x - 1);
    // 1 = seen false, 2 = seen true
    std::unordered_map<uint32_t, uint8_t> seen;
    for (uint32_t m : ms.models) {
        const uint32_t key = project_model(m, base);
        uint8_t& flags = seen[key];
        flags |= (m & xbit) ? 2 : 1;
        if (flags == 3) return false;
    }
    return true;
}

bool check_projected_count_preserved(const CnfFormula& f, std::span<const Var> projection,
                                     std::span<const Var> support)
{
    const ModelSet ms = enumerate_solutions(f);
    std::unordered_set<uint32_t> onto_support, onto_projection;
    for (uint32_t m : ms.models) {
        onto_support.insert(project_model(m, support));
        onto_projection.insert(project_model(m, projection));
    }
    return onto_support.size() == onto_projection.size();
}

} // namespace indsup
