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
 * Append-only on-disk store of converged sweep points.
 *
 * One CSV record per line, keyed by (encoding, n, r, theta, precision,
 * schedule). Doubles are written with 17 significant digits so a hit
 * returns the stored point bit for bit. Appends take an exclusive flock and
 * go out in a single write, so several processes may share one file.
 * A file that fails to parse is ignored for reads (with a warning on
 * stderr) rather than trusted.
 */

#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "noonqfi/study.hpp"

namespace noonqfi {

struct CacheKey {
    Encoding encoding = Encoding::SingleRail;
    int n = 1;
    double r = 0.0;
    double theta = 0.0;
    double precision = 0.0;
    Schedule schedule = Schedule::Accelerated;

    friend bool operator<(const CacheKey &a, const CacheKey &b) {
        return std::tie(a.encoding, a.n, a.r, a.theta, a.precision, a.schedule) <
               std::tie(b.encoding, b.n, b.r, b.theta, b.precision, b.schedule);
    }
};

[[nodiscard]] CacheKey key_of(const SweepPoint &point, Schedule schedule);

class ResultCache {
  public:
    explicit ResultCache(std::filesystem::path path);

    ResultCache(const ResultCache &) = delete;
    ResultCache &operator=(const ResultCache &) = delete;

    [[nodiscard]] std::optional<SweepPoint> get(const CacheKey &key) const;
    /// Only converged points are stored.
    void put(const SweepPoint &point, Schedule schedule);

    /// Re-read the file, picking up records appended by other processes.
    void reload();

    [[nodiscard]] bool bypassed() const;
    [[nodiscard]] const std::filesystem::path &path() const noexcept {
        return path_;
    }

  private:
    void load_locked();

    std::filesystem::path path_;
    mutable std::mutex mutex_;
    std::map<CacheKey, SweepPoint> entries_;
    bool bypassed_ = false;
};

} // namespace noonqfi
