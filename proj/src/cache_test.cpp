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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include "noonqfi/cache.hpp"

using namespace noonqfi;

namespace {

std::filesystem::path scratch(const std::string &name) {
    auto p = std::filesystem::temp_directory_path() /
             ("noonqfi_cache_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove(p);
    return p;
}

SweepPoint point(int n, double r, double qfi) {
    SweepPoint p;
    p.encoding = Encoding::SingleRail;
    p.n = n;
    p.r = r;
    p.theta = 0.4;
    p.precision = 1e-5;
    p.qfi = qfi;
    p.dim_used = 40 + n;
    p.converged = true;
    p.wall_time_s = 0.001 * n;
    return p;
}

bool same(const SweepPoint &a, const SweepPoint &b) {
    return a.encoding == b.encoding && a.n == b.n && a.r == b.r && a.theta == b.theta &&
           a.precision == b.precision && a.qfi == b.qfi && a.dim_used == b.dim_used &&
           a.converged == b.converged && a.wall_time_s == b.wall_time_s;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST_CASE("put then get returns the identical point") {
    const auto path = scratch("roundtrip");
    const SweepPoint p = point(3, 0.1 + 0.2, 1.0 / 3.0);
    {
        ResultCache cache(path);
        cache.put(p, Schedule::Accelerated);
        const auto hit = cache.get(key_of(p, Schedule::Accelerated));
        REQUIRE(hit.has_value());
        CHECK(same(*hit, p));
    }
    // and from a fresh reader of the file
    ResultCache reread(path);
    const auto hit = reread.get(key_of(p, Schedule::Accelerated));
    REQUIRE(hit.has_value());
    CHECK(same(*hit, p));
    std::filesystem::remove(path);
}

TEST_CASE("unknown keys are absent; precision and schedule never alias") {
    const auto path = scratch("alias");
    ResultCache cache(path);
    const SweepPoint p = point(2, 0.5, 3.1);
    cache.put(p, Schedule::Accelerated);
    CHECK_FALSE(cache.get(key_of(point(5, 0.5, 0.0), Schedule::Accelerated)));
    CHECK_FALSE(cache.get(key_of(p, Schedule::UnitStep)));
    SweepPoint finer = p;
    finer.precision = 1e-7;
    CHECK_FALSE(cache.get(key_of(finer, Schedule::Accelerated)));
    std::filesystem::remove(path);
}

TEST_CASE("unconverged points and duplicates are not written") {
    const auto path = scratch("filter");
    ResultCache cache(path);
    SweepPoint bad = point(1, 2.0, 0.7);
    bad.converged = false;
    cache.put(bad, Schedule::Accelerated);
    CHECK_FALSE(cache.get(key_of(bad, Schedule::Accelerated)));
    const SweepPoint good = point(1, 2.0, 0.6);
    cache.put(good, Schedule::Accelerated);
    cache.put(good, Schedule::Accelerated);
    const auto text = slurp(path);
    CHECK(std::count(text.begin(), text.end(), '\n') == 2); // header + one record
    std::filesystem::remove(path);
}

TEST_CASE("two processes appending distinct keys") {
    const auto path = scratch("concurrent");
    constexpr int kPerChild = 150;
    pid_t kids[2];
    for (int c = 0; c < 2; ++c) {
        kids[c] = ::fork();
        REQUIRE(kids[c] >= 0);
        if (kids[c] == 0) {
            ResultCache cache(path);
            for (int i = 0; i < kPerChild; ++i) {
                cache.put(point(1 + i, 0.25 + c, 1.0 + i + 1000 * c), Schedule::Accelerated);
            }
            ::_exit(0);
        }
    }
    for (const pid_t k : kids) {
        int status = 0;
        ::waitpid(k, &status, 0);
        CHECK(WIFEXITED(status));
        CHECK(WEXITSTATUS(status) == 0);
    }
    ResultCache cache(path);
    CHECK_FALSE(cache.bypassed());
    for (int c = 0; c < 2; ++c) {
        for (int i = 0; i < kPerChild; ++i) {
            const SweepPoint want = point(1 + i, 0.25 + c, 1.0 + i + 1000 * c);
            const auto hit = cache.get(key_of(want, Schedule::Accelerated));
            REQUIRE(hit.has_value());
            CHECK(same(*hit, want));
        }
    }
    std::filesystem::remove(path);
}

TEST_CASE("reload picks up another writer's records") {
    const auto path = scratch("reload");
    ResultCache a(path);
    ResultCache b(path);
    const SweepPoint p = point(4, 1.0, 2.5);
    a.put(p, Schedule::UnitStep);
    CHECK_FALSE(b.get(key_of(p, Schedule::UnitStep)));
    b.reload();
    CHECK(b.get(key_of(p, Schedule::UnitStep)).has_value());
    std::filesystem::remove(path);
}

TEST_CASE("a corrupt file is bypassed, never trusted") {
    const auto path = scratch("corrupt");
    {
        ResultCache cache(path);
        cache.put(point(1, 0.5, 0.9), Schedule::Accelerated);
    }
    {
        std::ofstream out(path, std::ios::app);
        out << "single,2,0.5,0.4,1e-05,not-a-number,9,true,0,accelerated\n";
    }
    ResultCache cache(path);
    CHECK(cache.bypassed());
    CHECK_FALSE(cache.get(key_of(point(1, 0.5, 0.9), Schedule::Accelerated)));
    const auto before = slurp(path);
    cache.put(point(3, 0.5, 1.0), Schedule::Accelerated);
    CHECK(slurp(path) == before); // no writes while bypassed
    std::filesystem::remove(path);
}

TEST_CASE("a truncated final record is treated as corruption") {
    const auto path = scratch("truncated");
    {
        ResultCache cache(path);
        cache.put(point(1, 0.5, 0.9), Schedule::Accelerated);
    }
    {
        std::ofstream out(path, std::ios::app);
        out << "single,2,0.5,0.4";
    }
    ResultCache cache(path);
    CHECK(cache.bypassed());
    std::filesystem::remove(path);
}

TEST_CASE("a foreign header is bypassed") {
    const auto path = scratch("foreign");
    {
        std::ofstream out(path);
        out << "something,else\n";
    }
    ResultCache cache(path);
    CHECK(cache.bypassed());
    std::filesystem::remove(path);
}
