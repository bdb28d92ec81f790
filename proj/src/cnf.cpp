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

#include "cnf.h"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

namespace indsup {

std::vector<Var> all_vars(uint32_t num_vars)
{
    std::vector<Var> vs(num_vars);
    std::iota(vs.begin(), vs.end(), 1u);
    return vs;
}

bool normalize_clause(Clause& c)
{
    Clause out;
    out.reserve(c.size());
    for (Lit l : c) {
        bool dup = false;
        for (Lit o : out) {
            if (o == l) {
                dup = true;
                break;
            }
            if (o == ~l) return false; // tautology
        }
        if (!dup) out.push_back(l);
    }
    c = std::move(out);
    return true;
}

CnfFormula make_formula(uint32_t num_vars, std::vector<Clause> clauses)
{
    return make_formula(num_vars, std::move(clauses), all_vars(num_vars));
}

CnfFormula make_formula(uint32_t num_vars, std::vector<Clause> clauses,
                        std::vector<Var> projection)
{
    CnfFormula f;
    f.num_vars = num_vars;
    for (Clause& c : clauses) {
        if (normalize_clause(c)) f.clauses.push_back(std::move(c));
    }
    std::sort(projection.begin(), projection.end());
    projection.erase(std::unique(projection.begin(), projection.end()), projection.end());
    f.projection = std::move(projection);
    return f;
}

namespace {

struct Tokenizer {
    std::istream& in;
    std::string line = {};
    int line_no = 0;

    bool next_line()
    {
        while (std::getline(in, line)) {
            line_no++;
            return true;
        }
        return false;
    }
};

bool parse_int(const std::string& tok, long& out)
{
    if (tok.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stol(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::vector<std::string> toks;
    std::istringstream iss(s);
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

} // namespace

CnfFormula parse_dimacs(std::istream& in)
{
    Tokenizer tz{in};
    CnfFormula f;
    bool have_header = false;
    long declared_vars = 0;
    std::set<Var> ind_vars;
    bool have_ind = false;
    Clause pending;
    int pending_start_line = 0;

    while (tz.next_line()) {
        std::vector<std::string> toks = split_ws(tz.line);
        if (toks.empty()) continue;

        if (toks[0] == "c") {
            if (toks.size() >= 2 && toks[1] == "ind") {
                have_ind = true;
                bool terminated = false;
                for (size_t i = 2; i < toks.size(); i++) {
                    long v = 0;
                    if (!parse_int(toks[i], v) || v < 0)
                        throw ParseError(tz.line_no, "bad token '" + toks[i] + "' in ind line");
                    if (v == 0) {
                        if (i + 1 != toks.size())
                            throw ParseError(tz.line_no, "tokens after terminating 0 in ind line");
                        terminated = true;
                        break;
                    }
                    ind_vars.insert(static_cast<Var>(v));
                }
                if (!terminated)
                    throw ParseError(tz.line_no, "ind line does not end with 0");
            }
            continue;
        }
        if (toks[0] == "p") {
            if (have_header) throw ParseError(tz.line_no, "duplicate header");
            if (toks.size() != 4 || toks[1] != "cnf")
                throw ParseError(tz.line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            long nclauses = 0;
            if (!parse_int(toks[2], declared_vars) || !parse_int(toks[3], nclauses) ||
                declared_vars < 0 || nclauses < 0)
                throw ParseError(tz.line_no, "malformed header counts");
            have_header = true;
            f.num_vars = static_cast<uint32_t>(declared_vars);
            continue;
        }

        // clause data
        if (!have_header) throw ParseError(tz.line_no, "clause data before header");
        for (const std::string& t : toks) {
            long v = 0;
            if (!parse_int(t, v))
                throw ParseError(tz.line_no, "bad clause token '" + t + "'");
            if (v == 0) {
                if (normalize_clause(pending)) f.clauses.push_back(std::move(pending));
                pending.clear();
                pending_start_line = 0;
                continue;
            }
            if (std::abs(v) > declared_vars)
                throw ParseError(tz.line_no, "literal " + t + " exceeds declared variable count " +
                                                 std::to_string(declared_vars));
            if (pending.empty()) pending_start_line = tz.line_no;
            pending.push_back(Lit::from_dimacs(static_cast<int>(v)));
        }
    }

    if (!have_header) throw ParseError(tz.line_no, "missing header");
    if (!pending.empty())
        throw ParseError(pending_start_line, "unterminated clause at end of input");

    if (have_ind) {
        for (Var v : ind_vars) {
            if (v > f.num_vars)
                throw ParseError(tz.line_no, "projection variable " + std::to_string(v) +
                                                 " exceeds declared variable count");
        }
        f.projection.assign(ind_vars.begin(), ind_vars.end());
    } else {
        f.projection = all_vars(f.num_vars);
    }
    return f;
}

CnfFormula parse_dimacs(const std::string& text)
{
    std::istringstream iss(text);
    return parse_dimacs(iss);
}

OccurrenceList build_occurrence_list(const CnfFormula& f)
{
    OccurrenceList ol;
    ol.occ.resize(2 * (static_cast<size_t>(f.num_vars) + 1));
    for (uint32_t ci = 0; ci < f.clauses.size(); ci++) {
        for (Lit l : f.clauses[ci]) ol.occ[l.index()].push_back(ci);
    }
    return ol;
}

IncidenceMap compute_incidence(const CnfFormula& f)
{
    IncidenceMap inc;
    inc.count.assign(static_cast<size_t>(f.num_vars) + 1, 0);
    for (const Clause& c : f.clauses) {
        for (Lit l : c) inc.count[l.var()]++;
    }
    return inc;
}

std::string write_support(std::span<const Var> support)
{
    std::vector<Var> sorted(support.begin(), support.end());
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    os << "c ind";
    for (Var v : sorted) os << ' ' << v;
    os << " 0\n";
    os << "c set size: " << sorted.size() << '\n';
    return os.str();
}

std::string write_dimacs(const CnfFormula& f)
{
    std::ostringstream os;
    os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    if (f.projection != all_vars(f.num_vars)) {
        os << "c ind";
        for (Var v : f.projection) os << ' ' << v;
        os << " 0\n";
    }
    for (const Clause& c : f.clauses) {
        for (Lit l : c) os << l.to_dimacs() << ' ';
        os << "0\n";
    }
    return os.str();
}

std::string to_string(Lit l)
{
    return std::to_string(l.to_dimacs());
}

std::string to_string(const Clause& c)
{
    std::string s = "(";
    for (size_t i = 0; i < c.size(); i++) {
        if (i) s += " ";
        s += to_string(c[i]);
    }
    return s + ")";
}

} // namespace indsup
