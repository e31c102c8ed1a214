/*
   Copyright 2026 The confocal authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "confocal/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace confocal {

TrialRecord run_trial(int c, int kappa, std::uint64_t seed, const ExperimentOptions& opts) {
    TrialRecord rec;
    rec.seed = seed;
    rec.c = c;
    rec.kappa = kappa;
    rec.d = 2 * (c - 1) - kappa;
    try {
        const GeneratedCurve curve = generate_curve(c, kappa, seed);
        rec.report = analyze_equiclassical(to_complex(curve.implicit), scheme_from(curve.singularities));
    } catch (const Error& e) {
        rec.outcome = TrialOutcome::degenerate;
        rec.reason = std::string(to_string(e.code()));
        return rec;
    }
    const FocalJacobianReport& r = *rec.report;
    if (r.gap < opts.min_gap || r.condition_gap < opts.min_gap) {
        rec.outcome = TrialOutcome::degenerate;
        rec.reason = "small singular-value gap";
        return rec;
    }
    const int expected_rank = std::min(2 * c, c + rec.d + 1);
    const int expected_kernel = std::max(0, rec.d - c + 1);
    rec.outcome = TrialOutcome::fail;
    if (r.d != rec.d)
        rec.reason = "class differs from 2(c-1) - kappa";
    else if (r.rank != expected_rank)
        rec.reason = "rank differs from min(2c, c+d+1)";
    else if (r.kernel_dim() != expected_kernel)
        rec.reason = "kernel differs from max(0, d-c+1)";
    else if (r.kernel_dim() != r.shifted_dim)
        rec.reason = "kernel differs from the shifted section count";
    else if (r.complex_rank != r.rank)
        rec.reason = "complexified rank differs";
    else if (r.max_division_residual() >= opts.residual_bound)
        rec.reason = "kernel not divisible by u^2 + v^2";
    else if (r.max_shifted_residual() >= opts.residual_bound)
        rec.reason = "quotient violates the shifted conditions";
    else
        rec.outcome = TrialOutcome::pass;
    return rec;
}

ExperimentSummary run_rank_experiment(int c, int kappa, const ExperimentOptions& opts) {
    if (opts.trials < 0) throw Error(ErrorCode::InvalidArgument, "negative trial count");
    if (c < 2 || kappa < 0 || kappa > (c - 1) * (c - 2) / 2)
        throw Error(ErrorCode::InvalidArgument, "inadmissible (c, kappa)");
    ExperimentSummary sum;
    sum.c = c;
    sum.kappa = kappa;
    sum.seed = opts.seed;
    sum.trials.resize(opts.trials);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < opts.trials; i = next++) {
            sum.trials[i] = run_trial(c, kappa, opts.seed + static_cast<std::uint64_t>(i), opts);
            sum.trials[i].index = i;
        }
    };
    const int jobs = std::clamp(opts.jobs, 1, std::max(1, opts.trials));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& t : sum.trials) {
        if (t.outcome == TrialOutcome::pass) ++sum.passed;
        else if (t.outcome == TrialOutcome::fail) ++sum.failed;
        else ++sum.degenerate;
    }
    return sum;
}

}  // namespace confocal
