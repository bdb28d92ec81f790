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

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace indsup {

/// Variables are 1-based, DIMACS style.
using Var = uint32_t;

/// A literal packed as var<<1 | sign-bit (bit set = negated). The packed
/// value doubles as a dense index for per-literal arrays.
class Lit {
public:
    constexpr Lit() = default;
    constexpr Lit(Var v, bool positive) : x_((v << 1) | (positive ? 0u : 1u)) {}

    constexpr Var var() const { return x_ >> 1; }
    constexpr bool positive() const { return (x_ & 1) == 0; }
    constexpr uint32_t index() const { return x_; }

    constexpr Lit operator~() const
    {
        Lit l;
        l.x_ = x_ ^ 1;
        return l;
    }

    constexpr auto operator<=>(const Lit&) const = default;

    static Lit from_dimacs(int n)
    {
        assert(n != 0);
        return Lit(static_cast<Var>(std::abs(n)), n > 0);
    }
    int to_dimacs() const
    {
        int v = static_cast<int>(var());
        return positive() ? v : -v;
    }

private:
    uint32_t x_ = 0;
};

inline constexpr Lit lit_undef{};

using Clause = std::vector<Lit>;

/// Clause database with an optional projection set. Immutable by convention
/// once built; safe to share across threads.
struct CnfFormula {
    uint32_t num_vars = 0;
    std::vector<Clause> clauses;
    /// Ascending, unique. Holds every variable when the input declared none.
    std::vector<Var> projection;

    bool operator==(const CnfFormula&) const = default;
};

/// All variables 1..n ascending.
std::vector<Var> all_vars(uint32_t num_vars);

/// Removes duplicate literals (keeping first occurrence order) and reports
/// tautologies. Returns false iff the clause is a tautology.
bool normalize_clause(Clause& c);

/// Per-literal clause indices: occ[lit] lists the clauses containing lit,
/// by position in CnfFormula::clauses.
struct OccurrenceList {
    std::vector<std::vector<uint32_t>> occ;

    const std::vector<uint32_t>& operator[](Lit l) const
    {
        static const std::vector<uint32_t> empty;
        return l.index() < occ.size() ? occ[l.index()] : empty;
    }
};

/// incidence(v) = number of clauses containing v or ~v.
struct IncidenceMap {
    std::vector<uint32_t> count;

    uint32_t operator[](Var v) const { return v < count.size() ? count[v] : 0; }
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("dimacs parse error at line " + std::to_string(line) + ": " + msg)
        , line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_ = 0;
};

/// Parses DIMACS CNF. Projection is the union of all `c ind ... 0` lines;
/// when none is present the projection defaults to all variables. Clauses
/// are normalized: duplicate literals merged, tautologies dropped. Clause
/// order follows the input. Throws ParseError with the offending line.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);

CnfFormula make_formula(uint32_t num_vars, std::vector<Clause> clauses);
CnfFormula make_formula(uint32_t num_vars, std::vector<Clause> clauses,
                        std::vector<Var> projection);

OccurrenceList build_occurrence_list(const CnfFormula& f);
IncidenceMap compute_incidence(const CnfFormula& f);

/// "c ind v1 ... vk 0" with variables ascending plus a "c set size: k" line.
std::string write_support(std::span<const Var> support);

/// DIMACS text; the `c ind` line is emitted only for a proper subset
/// projection so that parse(write(parse(t))) == parse(t).
std::string write_dimacs(const CnfFormula& f);

std::string to_string(Lit l);
std::string to_string(const Clause& c);

} // namespace indsup
