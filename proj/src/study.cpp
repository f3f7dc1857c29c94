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

#include "noonqfi/study.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "noonqfi/cache.hpp"
#include "noonqfi/errors.hpp"

namespace noonqfi {

namespace {

// Runs task(i) for i in [0, count) on up to `workers` threads. The first
// exception thrown by any task is rethrown after all threads join.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)> &task) {
    const auto threads =
        std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, workers)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            task(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (auto i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                    try {
                        task(i);
                    } catch (...) {
                        const std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace

std::string to_string(Encoding encoding) {
    return encoding == Encoding::SingleRail ? "single" : "dual";
}

Encoding parse_encoding(const std::string &text) {
    if (text == "single") {
        return Encoding::SingleRail;
    }
    if (text == "dual") {
        return Encoding::DualRail;
    }
    throw DomainError("unknown encoding '" + text + "' (expected single|dual)");
}

std::string to_string(Schedule schedule) {
    return schedule == Schedule::Accelerated ? "accelerated" : "unit-step";
}

Schedule parse_schedule(const std::string &text) {
    if (text == "accelerated") {
        return Schedule::Accelerated;
    }
    if (text == "unit-step") {
        return Schedule::UnitStep;
    }
    throw DomainError("unknown schedule '" + text +
                      "' (expected accelerated|unit-step)");
}

SweepPoint compute_point(Encoding encoding, int n, double r,
                         const StudyConfig &config) {
    SweepPoint point;
    point.encoding = encoding;
    point.n = n;
    point.r = r;
    point.theta = config.theta;
    point.precision = config.convergence.precision;
    const Schedule schedule = config.convergence.schedule;
    if (config.cache != nullptr) {
        if (auto hit = config.cache->get(key_of(point, schedule))) {
            return *hit;
        }
    }

    const NoonSpec spec{encoding, n, config.theta};
    const auto start = std::chrono::steady_clock::now();
    try {
        const QfiOutcome outcome =
            qfi_converged(spec, Squeezing(r), config.convergence);
        point.qfi = outcome.value;
        point.dim_used = outcome.dim_used;
        point.converged = true;
    } catch (const ConvergenceError &e) {
        point.qfi = e.history().empty() ? 0.0 : e.history().back().qfi;
        point.dim_used = e.history().empty() ? 0 : e.history().back().dim;
        point.converged = false;
    }
    point.wall_time_s = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (config.cache != nullptr && point.converged) {
        config.cache->put(point, schedule);
    }
    return point;
}

std::vector<SweepPoint> sweep_over_n(Encoding encoding, double r,
                                     const std::vector<int> &n_list,
                                     const StudyConfig &config) {
    if (n_list.empty()) {
        throw InsufficientDataError("empty N list");
    }
    std::vector<SweepPoint> out(n_list.size());
    parallel_for(n_list.size(), config.workers, [&](std::size_t i) {
        out[i] = compute_point(encoding, n_list[i], r, config);
    });
    return out;
}

std::vector<SweepPoint> sweep_over_r(Encoding encoding, int n,
                                     const std::vector<double> &r_list,
                                     const StudyConfig &config) {
    if (r_list.empty()) {
        throw InsufficientDataError("empty r list");
    }
    std::vector<SweepPoint> out(r_list.size());
    parallel_for(r_list.size(), config.workers, [&](std::size_t i) {
        out[i] = compute_point(encoding, n, r_list[i], config);
    });
    return out;
}

OptimalN optimal_n(Encoding encoding, double r, const StudyConfig &config,
                   int n_cap) {
    if (r == 0.0) {
        throw DivergentOptimumError(
            "optimal N diverges at r = 0 (F = N^2 grows without bound)");
    }
    (void)Squeezing(r); // rejects r < 0

    OptimalN out;
    out.r = r;
    double best = -std::numeric_limits<double>::infinity();
    const auto batch = static_cast<std::size_t>(std::max(1, config.workers));
    std::vector<SweepPoint> pending;
    for (int n = 1;; ++n) {
        if (n > n_cap) {
            throw ScanCapError("no optimum found for N <= " +
                                   std::to_string(n_cap),
                               out.scanned);
        }
        // Compute ahead in batches of `workers`; the stopping decision below
        // only ever looks at points in order, so the result does not depend
        // on the batch size.
        if (pending.empty()) {
            std::vector<int> ns;
            for (int m = n; m < n + static_cast<int>(batch) && m <= n_cap; ++m) {
                ns.push_back(m);
            }
            pending = sweep_over_n(encoding, r, ns, config);
            std::reverse(pending.begin(), pending.end());
        }
        const SweepPoint point = pending.back();
        pending.pop_back();
        if (!point.converged) {
            throw ConvergenceError("optimal-N scan: N = " + std::to_string(n) +
                                       " did not converge",
                                   {});
        }
        out.scanned.push_back(point.qfi);
        if (point.qfi > best) {
            best = point.qfi;
            out.n_star = n;
        }
        const auto &f = out.scanned;
        if (n >= out.n_star + 3 && f[n - 1] < f[n - 2] && f[n - 2] < f[n - 3] &&
            f[n - 3] < f[n - 4]) {
            out.f_star = best;
            out.scan_upper = n;
            return out;
        }
    }
}

} // namespace noonqfi
