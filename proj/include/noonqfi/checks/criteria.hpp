// Copyright 2026 The noonqfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * The acceptance criteria as callable checks. Each returns a verdict line;
 * none of them throws for a failed comparison.
 */

#pragma once

#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "noonqfi/fock.hpp"
#include "noonqfi/qfi.hpp"

namespace noonqfi::checks {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/**
 * Structural audit shared by the other checks: every state they build or
 * converge is recorded here, and criterion 9 reports the tally.
 */
class StructureAudit {
  public:
    /// Builds rho at (spec, sq, dim) densely and checks it.
    void inspect_state(const NoonSpec &spec, Squeezing sq, int dim);
    void inspect_outcome(const QfiOutcome &outcome);

    struct Tally {
        int states = 0;
        int outcomes = 0;
        int spectra = 0;
        double worst_hermiticity = 0.0;
        double worst_negative = 0.0; ///< most negative eigenvalue / largest
        double worst_support = 0.0;  ///< largest entry outside the pattern
        double worst_deficit_ratio = 0.0; ///< (1 - Tr rho) / precision
        std::vector<std::string> failures;
    };
    [[nodiscard]] Tally tally() const;

  private:
    mutable std::mutex mutex_;
    Tally tally_;
};

struct CriteriaOptions {
    double precision = 1e-5;
    int workers = 1;
    /// Not owned. Null gives each call a private audit.
    StructureAudit *audit = nullptr;
};

[[nodiscard]] CriterionResult noiseless_law(const CriteriaOptions &opts);
[[nodiscard]] CriterionResult theta_independence(const CriteriaOptions &opts);
[[nodiscard]] CriterionResult oracle_equivalence(const CriteriaOptions &opts);
[[nodiscard]] CriterionResult derivative_check(const CriteriaOptions &opts);
[[nodiscard]] CriterionResult single_rail_dominance(const CriteriaOptions &opts);
[[nodiscard]] CriterionResult optimal_n_monotonicity(const CriteriaOptions &opts);
[[nodiscard]] CriterionResult decay_model_fit(const CriteriaOptions &opts);
[[nodiscard]] CriterionResult fit_exactness(const CriteriaOptions &opts);
[[nodiscard]] CriterionResult structural_invariants(const CriteriaOptions &opts);
[[nodiscard]] CriterionResult block_path_equivalence(const CriteriaOptions &opts);

struct CriterionEntry {
    int id;
    const char *name;
    CriterionResult (*run)(const CriteriaOptions &);
    /// Expected to finish in well under a minute.
    bool quick;
};

[[nodiscard]] const std::vector<CriterionEntry> &criteria();

/**
 * Runs the selected criteria in id order with a shared audit; criterion 9,
 * if selected, runs last so it sees everything the others recorded.
 */
[[nodiscard]] std::vector<CriterionResult>
run_criteria(const std::vector<int> &ids, CriteriaOptions opts,
             const std::function<void(const CriterionResult &)> &on_result = {});

[[nodiscard]] std::string format_verdict(const CriterionResult &result);

} // namespace noonqfi::checks
