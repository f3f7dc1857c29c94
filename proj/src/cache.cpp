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

#include "noonqfi/cache.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include "noonqfi/csv.hpp"
#include "noonqfi/errors.hpp"

namespace noonqfi {

namespace {

const std::string &cache_header() {
    static const std::string header = std::string(kSweepHeader) + ",schedule";
    return header;
}

// RAII file descriptor holding an flock for its lifetime.
class LockedFile {
  public:
    LockedFile(const std::filesystem::path &path, int flags, int lock_op) {
        fd_ = ::open(path.c_str(), flags | O_CLOEXEC, 0644);
        if (fd_ < 0) {
            return;
        }
        while (::flock(fd_, lock_op) != 0) {
            if (errno != EINTR) {
                ::close(fd_);
                fd_ = -1;
                return;
            }
        }
    }
    ~LockedFile() {
        if (fd_ >= 0) {
            ::close(fd_);
        }
    }
    LockedFile(const LockedFile &) = delete;
    LockedFile &operator=(const LockedFile &) = delete;

    [[nodiscard]] int fd() const noexcept { return fd_; }
    [[nodiscard]] bool ok() const noexcept { return fd_ >= 0; }

  private:
    int fd_ = -1;
};

bool write_all(int fd, const std::string &data) {
    std::size_t done = 0;
    while (done < data.size()) {
        const ssize_t n = ::write(fd, data.data() + done, data.size() - done);
        if (n < 0) {
            if (errno == EINTR) {
                continue;
            }
            return false;
        }
        done += static_cast<std::size_t>(n);
    }
    return true;
}

} // namespace

CacheKey key_of(const SweepPoint &point, Schedule schedule) {
    return {point.encoding, point.n,         point.r,
            point.theta,    point.precision, schedule};
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
    const std::lock_guard lock(mutex_);
    load_locked();
}

void ResultCache::reload() {
    const std::lock_guard lock(mutex_);
    load_locked();
}

bool ResultCache::bypassed() const {
    const std::lock_guard lock(mutex_);
    return bypassed_;
}

void ResultCache::load_locked() {
    entries_.clear();
    bypassed_ = false;
    std::error_code ec;
    if (!std::filesystem::exists(path_, ec)) {
        return;
    }
    std::string content;
    {
        const LockedFile file(path_, O_RDONLY, LOCK_SH);
        if (!file.ok()) {
            std::cerr << "warning: cannot open cache " << path_ << ": "
                      << std::strerror(errno) << "; cache bypassed\n";
            bypassed_ = true;
            return;
        }
        char buf[1 << 16];
        ssize_t n = 0;
        while ((n = ::read(file.fd(), buf, sizeof buf)) > 0) {
            content.append(buf, static_cast<std::size_t>(n));
        }
    }
    if (content.empty()) {
        return;
    }

    std::istringstream in(content);
    std::string line;
    std::size_t line_number = 0;
    try {
        if (!std::getline(in, line) || line != cache_header()) {
            throw ParseError("unexpected cache header", 1);
        }
        line_number = 1;
        if (content.back() != '\n') {
            const auto lines = std::count(content.begin(), content.end(), '\n');
            throw ParseError("truncated final record",
                             static_cast<std::size_t>(lines) + 1);
        }
        while (std::getline(in, line)) {
            ++line_number;
            const auto comma = line.rfind(',');
            if (comma == std::string::npos) {
                throw ParseError("missing schedule field", line_number);
            }
            Schedule schedule{};
            try {
                schedule = parse_schedule(line.substr(comma + 1));
            } catch (const DomainError &e) {
                throw ParseError(e.what(), line_number);
            }
            const SweepPoint point =
                parse_sweep_row(std::string_view(line).substr(0, comma), line_number);
            entries_.emplace(key_of(point, schedule), point);
        }
    } catch (const ParseError &e) {
        std::cerr << "warning: corrupt cache " << path_ << " (" << e.what()
                  << "); cache bypassed\n";
        entries_.clear();
        bypassed_ = true;
    }
}

std::optional<SweepPoint> ResultCache::get(const CacheKey &key) const {
    const std::lock_guard lock(mutex_);
    if (bypassed_) {
        return std::nullopt;
    }
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void ResultCache::put(const SweepPoint &point, Schedule schedule) {
    if (!point.converged) {
        return;
    }
    const std::lock_guard lock(mutex_);
    if (bypassed_) {
        return;
    }
    const CacheKey key = key_of(point, schedule);
    if (entries_.contains(key)) {
        return;
    }
    const std::string record =
        format_sweep_row(point) + ',' + to_string(schedule) + '\n';
    {
        const LockedFile file(path_, O_WRONLY | O_CREAT | O_APPEND, LOCK_EX);
        struct stat st {};
        if (!file.ok() || ::fstat(file.fd(), &st) != 0) {
            std::cerr << "warning: cannot append to cache " << path_ << ": "
                      << std::strerror(errno) << '\n';
            return;
        }
        const std::string payload =
            st.st_size == 0 ? cache_header() + '\n' + record : record;
        if (!write_all(file.fd(), payload)) {
            std::cerr << "warning: short write to cache " << path_ << '\n';
            return;
        }
    }
    entries_.emplace(key, point);
}

} // namespace noonqfi
