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

#include "pipeline.h"

#include <span>
#include <string>
#include <vector>

namespace indsup {

enum class BenchOutcome : uint8_t { Done, Timeout, Error };

struct BenchRecord {
    std::string path;
    BenchOutcome outcome = BenchOutcome::Error;
    double seconds = 0.0;
    uint32_t support_size = 0; // meaningful only for Done
};

/// Penalized average runtime: a finished instance scores its wall seconds,
/// anything else scores twice the timeout; the result is the mean.
double par2_score(std::span<const BenchRecord> records, double timeout_seconds);

/// CSV with a header row; timeout and error rows leave support_size empty.
std::string bench_csv(std::span<const BenchRecord> records);

struct BenchResult {
    std::vector<BenchRecord> records;
    double par2 = 0.0;
};

/// Runs every instance under the wall timeout. Unreadable or malformed
/// files become error rows and score as timeouts.
BenchResult run_bench(std::span<const std::string> paths, const PipelineConfig& cfg,
                      double timeout_seconds);

} // namespace indsup
