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

#include <algorithm>
#include <sstream>

namespace indsup {

Var PadoaInstance::z_of(Var x) const
{
    auto it = std::lower_bound(projection.begin(), projection.end(), x);
    assert(it != projection.end() && *it == x);
    const auto rank = static_cast<uint32_t>(it - projection.begin());
    return 2 * orig_num_vars + rank + 1;
}

bool PadoaInstance::in_projection(Var x) const
{
    return std::binary_search(projection.begin(), projection.end(), x);
}

PadoaInstance build_padoa(const CnfFormula& f, std::span<const Var> projection)
{
    PadoaInstance inst;
    inst.orig_num_vars = f.num_vars;
    inst.projection.assign(projection.begin(), projection.end());
    std::sort(inst.projection.begin(), inst.projection.end());
    inst.projection.erase(std::unique(inst.projection.begin(), inst.projection.end()),
                          inst.projection.end());

    const uint32_t n = f.num_vars;
    inst.psi.num_vars = 2 * n + static_cast<uint32_t>(inst.projection.size());
    inst.psi.projection = all_vars(inst.psi.num_vars);
    inst.psi.clauses.reserve(2 * f.clauses.size() + 2 * inst.projection.size());

    inst.psi.clauses.insert(inst.psi.clauses.end(), f.clauses.begin(), f.clauses.end());
    for (const Clause& c : f.clauses) {
        Clause copy;
        copy.reserve(c.size());
        for (Lit l : c) copy.emplace_back(n + l.var(), l.positive());
        inst.psi.clauses.push_back(std::move(copy));
    }
    for (Var x : inst.projection) {
        const Lit z(inst.z_of(x), true);
        const Lit xl(x, true);
        const Lit yl(inst.y_of(x), true);
        inst.psi.clauses.push_back({~z, ~xl, yl});
        inst.psi.clauses.push_back({~z, xl, ~yl});
    }
    return inst;
}

std::vector<Lit> definability_query_assumptions(const PadoaInstance& inst, Var target,
                                                std::span<const Var> active)
{
    if (!inst.in_projection(target))
        throw std::invalid_argument("definability target " + std::to_string(target) +
                                    " is not a projection variable");
    std::vector<Var> sorted(active.begin(), active.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Lit> assumps;
    assumps.reserve(sorted.size() + 2);
    for (Var j : sorted) {
        assert(j != target && inst.in_projection(j));
        assumps.emplace_back(inst.z_of(j), true);
    }
    assumps.emplace_back(target, true);
    assumps.emplace_back(inst.y_of(target), false);
    return assumps;
}

std::string write_padoa_dimacs(const PadoaInstance& inst)
{
    std::ostringstream os;
    os << "c padoa duplication: " << inst.orig_num_vars << " original vars, "
       << inst.projection.size() << " selectors\n";
    for (Var x : inst.projection)
        os << "c padoa x " << x << " y " << inst.y_of(x) << " z " << inst.z_of(x) << '\n';
    os << write_dimacs(inst.psi);
    return os.str();
}

} // namespace indsup
