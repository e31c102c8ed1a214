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

#ifndef CONFOCAL_EXPERIMENT_HPP
#define CONFOCAL_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "confocal/equiclassical.hpp"

namespace confocal {

enum class TrialOutcome { pass, fail, degenerate };

constexpr std::string_view to_string(TrialOutcome o) noexcept {
    switch (o) {
        case TrialOutcome::pass: return "pass";
        case TrialOutcome::fail: return "fail";
        case TrialOutcome::degenerate: return "degenerate";
    }
    return "unknown";
}

struct TrialRecord {
    int index = 0;
    std::uint64_t seed = 0;
    int c = 0;
    int kappa = 0;
    int d = 0;
    TrialOutcome outcome = TrialOutcome::degenerate;
    /// Error code or the failed check; empty on a pass.
    std::string reason;
    /// Present once the focal Jacobian was computed.
    std::optional<FocalJacobianReport> report;
};

struct ExperimentSummary {
    int c = 0;
    int kappa = 0;
    std::uint64_t seed = 0;
    std::vector<TrialRecord> trials;
    int passed = 0;
    int failed = 0;
    int degenerate = 0;

    int clean() const { return passed + failed; }
    double clean_fraction() const { return trials.empty() ? 0.0 : double(clean()) / double(trials.size()); }
};

struct ExperimentOptions {
    int trials = 25;
    std::uint64_t seed = 0;
    int jobs = 1;
    /// Minimum singular-value gap for a trial to count as clean.
    double min_gap = 1e3;
    double residual_bound = 1e-8;
};

/// One draw: ratgen, singularity location, conditions, focal Jacobian, checks against
/// rank min(2c, c+d+1), kernel max(0, d-c+1) and the shifted system.
TrialRecord run_trial(int c, int kappa, std::uint64_t seed, const ExperimentOptions& opts = {});

/// Trial i uses seed opts.seed + i; records come back in trial order for any job count.
ExperimentSummary run_rank_experiment(int c, int kappa, const ExperimentOptions& opts);

}  // namespace confocal

#endif  // CONFOCAL_EXPERIMENT_HPP
