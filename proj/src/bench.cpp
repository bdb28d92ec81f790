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

#include "bench.h"

#include "stopwatch.h"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace indsup {

double par2_score(std::span<const BenchRecord> records, double timeout_seconds)
{
    if (records.empty()) return 0.0;
    double sum = 0.0;
    for (const BenchRecord& r : records)
        sum += (r.outcome == BenchOutcome::Done) ? r.seconds : 2.0 * timeout_seconds;
    return sum / static_cast<double>(records.size());
}

std::string bench_csv(std::span<const BenchRecord> records)
{
    std::ostringstream os;
    os << "path,outcome,seconds,support_size\n";
    for (const BenchRecord& r : records) {
        os << r.path << ',';
        switch (r.outcome) {
        case BenchOutcome::Done: os << "done"; break;
        case BenchOutcome::Timeout: os << "timeout"; break;
        case BenchOutcome::Error: os << "error"; break;
        }
        os << ',' << std::fixed << std::setprecision(3) << r.seconds << ',';
        if (r.outcome == BenchOutcome::Done) os << r.support_size;
        os << '\n';
    }
    return os.str();
}

BenchResult run_bench(std::span<const std::string> paths, const PipelineConfig& cfg,
                      double timeout_seconds)
{
    BenchResult out;
    for (const std::string& path : paths) {
        BenchRecord rec;
        rec.path = path;
        const Stopwatch sw;
        std::ifstream in(path);
        if (!in) {
            rec.outcome = BenchOutcome::Error;
            rec.seconds = sw.seconds();
            out.records.push_back(std::move(rec));
            continue;
        }
        try {
            const CnfFormula f = parse_dimacs(in);
            PipelineConfig run_cfg = cfg;
            run_cfg.wall_timeout = timeout_seconds;
            const SupportResult res = run_pipeline(f, run_cfg);
            rec.seconds = sw.seconds();
            if (res.timed_out) {
                rec.outcome = BenchOutcome::Timeout;
            } else {
                rec.outcome = BenchOutcome::Done;
                rec.support_size = static_cast<uint32_t>(res.support.size());
            }
        } catch (const std::exception&) {
            rec.outcome = BenchOutcome::Error;
            rec.seconds = sw.seconds();
        }
        out.records.push_back(std::move(rec));
    }
    out.par2 = par2_score(out.records, timeout_seconds);
    return out;
}

} // namespace indsup
