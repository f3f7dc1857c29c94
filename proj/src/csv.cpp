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

#include "noonqfi/csv.hpp"

#include <charconv>
#include <cstdio>
#include <string>

#include "noonqfi/errors.hpp"

namespace noonqfi {

namespace {

template <typename T>
T parse_number(std::string_view field, const char *name, std::size_t line) {
    T value{};
    const auto *first = field.data();
    const auto *last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(std::string("bad ") + name + " '" +
                             std::string(field) + "'",
                         line);
    }
    return value;
}

bool parse_bool(std::string_view field, std::size_t line) {
    if (field == "true" || field == "1") {
        return true;
    }
    if (field == "false" || field == "0") {
        return false;
    }
    throw ParseError("bad converged flag '" + std::string(field) + "'", line);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    return s;
}

} // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string format_sweep_row(const SweepPoint &p) {
    std::string row = to_string(p.encoding);
    row += ',' + std::to_string(p.n);
    row += ',' + format_double(p.r);
    row += ',' + format_double(p.theta);
    row += ',' + format_double(p.precision);
    row += ',' + format_double(p.qfi);
    row += ',' + std::to_string(p.dim_used);
    row += p.converged ? ",true" : ",false";
    row += ',' + format_double(p.wall_time_s);
    return row;
}

SweepPoint parse_sweep_row(std::string_view line, std::size_t line_number) {
    const auto fields = split_fields(trim(line));
    if (fields.size() != 9) {
        throw ParseError("expected 9 fields, got " +
                             std::to_string(fields.size()),
                         line_number);
    }
    SweepPoint p;
    try {
        p.encoding = parse_encoding(std::string(fields[0]));
    } catch (const Error &e) {
        throw ParseError(e.what(), line_number);
    }
    p.n = parse_number<int>(fields[1], "n", line_number);
    p.r = parse_number<double>(fields[2], "r", line_number);
    p.theta = parse_number<double>(fields[3], "theta", line_number);
    p.precision = parse_number<double>(fields[4], "precision", line_number);
    p.qfi = parse_number<double>(fields[5], "qfi", line_number);
    p.dim_used = parse_number<int>(fields[6], "dim_used", line_number);
    p.converged = parse_bool(fields[7], line_number);
    p.wall_time_s = parse_number<double>(fields[8], "wall_time_s", line_number);
    return p;
}

std::vector<SweepPoint> read_sweep_csv(std::istream &in) {
    std::vector<SweepPoint> out;
    std::string line;
    std::size_t line_number = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_number;
        const auto body = trim(line);
        if (body.empty()) {
            continue;
        }
        if (!header_seen) {
            if (body != kSweepHeader) {
                throw ParseError("expected header '" + std::string(kSweepHeader) +
                                     "'",
                                 line_number);
            }
            header_seen = true;
            continue;
        }
        out.push_back(parse_sweep_row(body, line_number));
    }
    if (!header_seen) {
        throw ParseError("empty input, missing header", line_number);
    }
    return out;
}

std::string format_fit_row(const FitResult &f) {
    return format_double(f.r) + ',' + format_double(f.a_coeff) + ',' +
           format_double(f.b_coeff) + ',' + format_double(f.residual_sum) +
           ',' + std::to_string(f.n_min) + ',' + std::to_string(f.n_max);
}

std::string format_slope_row(const SlopeResult &s) {
    return format_double(s.gradient) + ',' + format_double(s.stderr_) + ',' +
           format_double(s.r_window.first) + ',' +
           format_double(s.r_window.second) + ',' + std::to_string(s.fits_used);
}

} // namespace noonqfi
