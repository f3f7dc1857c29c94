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

#include "noonqfi/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "noonqfi/cache.hpp"
#include "noonqfi/checks/criteria.hpp"
#include "noonqfi/csv.hpp"
#include "noonqfi/errors.hpp"
#include "noonqfi/study.hpp"

namespace noonqfi::cli {

namespace {

using Json = nlohmann::ordered_json;
using Settings = std::map<std::string, std::string>;

/// Semantically invalid invocation that CLI11 cannot see (exit 2).
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

double to_double(const std::string &text, const std::string &what) {
    double v = 0.0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw DomainError(what + ": not a number: '" + text + "'");
    }
    return v;
}

int to_int(const std::string &text, const std::string &what) {
    int v = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw DomainError(what + ": not an integer: '" + text + "'");
    }
    return v;
}

int decimals(const std::string &text) {
    const auto dot = text.find('.');
    return dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
}

// ------------------------------------------------------------ emission

Json to_json(const SweepPoint &p) {
    return Json{{"encoding", to_string(p.encoding)},
                {"n", p.n},
                {"r", p.r},
                {"theta", p.theta},
                {"precision", p.precision},
                {"qfi", p.qfi},
                {"dim_used", p.dim_used},
                {"converged", p.converged},
                {"wall_time_s", p.wall_time_s}};
}

Json to_json(const FitResult &f) {
    return Json{{"r", f.r},
                {"a_coeff", f.a_coeff},
                {"b_coeff", f.b_coeff},
                {"residual_sum", f.residual_sum},
                {"n_min", f.n_min},
                {"n_max", f.n_max}};
}

Json to_json(const SlopeResult &s) {
    return Json{{"gradient", s.gradient},
                {"stderr", s.stderr_},
                {"r_lo", s.r_window.first},
                {"r_hi", s.r_window.second},
                {"fits_used", s.fits_used}};
}

void emit_json(std::ostream &out, const Json &j) { out << j.dump(2) << '\n'; }

void dump_history(std::ostream &err, const std::vector<TruncationStep> &history) {
    if (history.empty()) {
        return;
    }
    err << "dim,qfi,trace\n";
    for (const auto &h : history) {
        err << h.dim << ',' << format_double(h.qfi) << ',' << format_double(h.trace)
            << '\n';
    }
}

// ------------------------------------------------------------ options

/// Raw text of the RunConfig flags; empty means "not given".
struct CommonFlags {
    std::string precision, theta, dim_cap, schedule, cache, workers, output, config;

    void attach(CLI::App *app) {
        app->add_option("--precision", precision,
                        "Absolute QFI precision for truncation convergence [1e-5]");
        app->add_option("--theta", theta, "Phase theta in radians [0.4]");
        app->add_option("--dim-cap", dim_cap,
                        "Cutoff cap (single: total, dual: per mode) [4096 / 120]");
        app->add_option("--schedule", schedule, "accelerated | unit-step [accelerated]");
        app->add_option("--cache", cache, "Result cache file (env NOONQFI_CACHE)");
        app->add_option("--workers", workers, "Worker threads (env NOONQFI_WORKERS) [1]");
        app->add_option("--output", output, "csv | json [csv]");
        app->add_option("--config", config, "key=value settings file");
    }

    RunConfig resolve() const {
        Settings flags;
        const std::pair<const char *, const std::string *> given[] = {
            {"precision", &precision}, {"theta", &theta},
            {"dim_cap", &dim_cap},     {"schedule_mode", &schedule},
            {"cache_path", &cache},    {"workers", &workers},
            {"output", &output}};
        for (const auto &[key, value] : given) {
            if (!value->empty()) {
                flags[key] = *value;
            }
        }
        Settings env;
        if (const char *v = std::getenv("NOONQFI_CACHE"); v && *v) {
            env["cache_path"] = v;
        }
        if (const char *v = std::getenv("NOONQFI_WORKERS"); v && *v) {
            env["workers"] = v;
        }
        const Settings file = config.empty() ? Settings{} : read_config_file(config);
        return resolve_run_config(flags, env, file);
    }
};

struct Session {
    RunConfig run;
    std::unique_ptr<ResultCache> cache;

    explicit Session(const CommonFlags &flags) : run(flags.resolve()) {
        if (!run.cache_path.empty()) {
            cache = std::make_unique<ResultCache>(run.cache_path);
        }
    }

    [[nodiscard]] StudyConfig study() const {
        StudyConfig s;
        s.convergence.precision = run.precision;
        s.convergence.schedule = run.schedule;
        s.convergence.dim_cap = run.dim_cap;
        s.theta = run.theta;
        s.cache = cache.get();
        s.workers = run.workers;
        return s;
    }
};

double single_real(const std::string &text, const char *flag) {
    const auto values = parse_real_list(text);
    if (values.size() != 1) {
        throw UsageError(std::string(flag) + " takes a single value on this axis");
    }
    return values.front();
}

int single_int(const std::string &text, const char *flag) {
    const auto values = parse_int_list(text);
    if (values.size() != 1) {
        throw UsageError(std::string(flag) + " takes a single value on this axis");
    }
    return values.front();
}

// ------------------------------------------------------------ commands

struct QfiArgs {
    CommonFlags common;
    std::string encoding;
    int n = 0;
    std::optional<double> r, omega, accel;
};

int cmd_qfi(const QfiArgs &a, std::ostream &out) {
    const Session session(a.common);
    const bool by_mode = a.omega.has_value() || a.accel.has_value();
    if (a.r.has_value() == by_mode || (by_mode && !(a.omega && a.accel))) {
        throw UsageError("give exactly one of --r or the pair --omega/--accel");
    }
    const Squeezing sq = a.r ? Squeezing(*a.r)
                             : squeezing_from_mode(ModeSpec(*a.omega, *a.accel));
    const NoonSpec spec{parse_encoding(a.encoding), a.n, session.run.theta};

    ConvergenceOptions opts = session.study().convergence;
    const auto outcome = qfi_converged(spec, sq, opts);
    std::optional<double> bound;
    if (outcome.value > 0.0) {
        bound = cramer_rao_bound(outcome.value, 1);
    }

    if (session.run.output == OutputFormat::Json) {
        Json j{{"encoding", a.encoding},
               {"n", a.n},
               {"r", sq.r()},
               {"theta", spec.theta},
               {"precision", outcome.precision},
               {"qfi", outcome.value},
               {"dim_used", outcome.dim_used},
               {"converged", outcome.converged},
               {"trace_deficit", outcome.trace_deficit()}};
        j["cramer_rao_delta_theta"] = bound ? Json(*bound) : Json(nullptr);
        emit_json(out, j);
    } else {
        out << "encoding,n,r,theta,precision,qfi,dim_used,converged,trace_deficit,"
               "cramer_rao_delta_theta\n"
            << a.encoding << ',' << a.n << ',' << format_double(sq.r()) << ','
            << format_double(spec.theta) << ',' << format_double(outcome.precision)
            << ',' << format_double(outcome.value) << ',' << outcome.dim_used << ','
            << (outcome.converged ? "true" : "false") << ','
            << format_double(outcome.trace_deficit()) << ','
            << (bound ? format_double(*bound) : "inf") << '\n';
    }
    return kOk;
}

struct SweepArgs {
    CommonFlags common;
    std::string axis, encoding, n, r;
};

int cmd_sweep(const SweepArgs &a, std::ostream &out) {
    const Session session(a.common);
    const auto encoding = parse_encoding(a.encoding);
    std::vector<SweepPoint> points;
    if (a.axis == "n") {
        auto ns = parse_int_list(a.n);
        std::stable_sort(ns.begin(), ns.end());
        points = sweep_over_n(encoding, single_real(a.r, "--r"), ns, session.study());
    } else {
        auto rs = parse_real_list(a.r);
        std::stable_sort(rs.begin(), rs.end());
        points = sweep_over_r(encoding, single_int(a.n, "--n"), rs, session.study());
    }
    if (session.run.output == OutputFormat::Json) {
        Json rows = Json::array();
        for (const auto &p : points) {
            rows.push_back(to_json(p));
        }
        emit_json(out, rows);
    } else {
        out << kSweepHeader << '\n';
        for (const auto &p : points) {
            out << format_sweep_row(p) << '\n';
        }
    }
    const bool all = std::all_of(points.begin(), points.end(),
                                 [](const SweepPoint &p) { return p.converged; });
    return all ? kOk : kPartialSweep;
}

struct OptimalArgs {
    CommonFlags common;
    std::string encoding, r;
    int n_cap = kDefaultOptimalNCap;
};

int cmd_optimal_n(const OptimalArgs &a, std::ostream &out) {
    const Session session(a.common);
    const auto encoding = parse_encoding(a.encoding);
    const auto rs = parse_real_list(a.r);
    if (std::any_of(rs.begin(), rs.end(), [](double r) { return r == 0.0; })) {
        throw UsageError("r = 0 in grid: the optimal N diverges as r -> 0");
    }
    std::map<double, OptimalN> done;
    std::vector<OptimalN> rows;
    for (const double r : rs) {
        auto it = done.find(r);
        if (it == done.end()) {
            it = done.emplace(r, optimal_n(encoding, r, session.study(), a.n_cap)).first;
        }
        rows.push_back(it->second);
    }
    if (session.run.output == OutputFormat::Json) {
        Json j = Json::array();
        for (const auto &o : rows) {
            j.push_back(Json{{"r", o.r},
                             {"n_star", o.n_star},
                             {"f_star", o.f_star},
                             {"scan_upper", o.scan_upper}});
        }
        emit_json(out, j);
    } else {
        out << "r,n_star,f_star,scan_upper\n";
        for (const auto &o : rows) {
            out << format_double(o.r) << ',' << o.n_star << ','
                << format_double(o.f_star) << ',' << o.scan_upper << '\n';
        }
    }
    return kOk;
}

struct FitArgs {
    CommonFlags common;
    std::string input, encoding, r, n, window;
    std::optional<int> n_min;
};

int cmd_fit(const FitArgs &a, std::ostream &out, std::ostream &err) {
    const Session session(a.common);
    std::vector<SweepPoint> points;
    if (!a.input.empty()) {
        if (!a.r.empty() || !a.n.empty()) {
            throw UsageError("--input excludes the inline grid flags --r/--n");
        }
        std::ifstream in(a.input);
        if (!in) {
            throw UsageError("cannot open " + a.input);
        }
        points = read_sweep_csv(in);
    } else {
        if (a.r.empty() || a.n.empty() || a.encoding.empty()) {
            throw UsageError("give --input, or --encoding with --r and --n");
        }
        const auto encoding = parse_encoding(a.encoding);
        auto ns = parse_int_list(a.n);
        std::stable_sort(ns.begin(), ns.end());
        for (const double r : parse_real_list(a.r)) {
            const auto sweep = sweep_over_n(encoding, r, ns, session.study());
            points.insert(points.end(), sweep.begin(), sweep.end());
        }
    }

    std::map<double, std::vector<SweepPoint>> by_r;
    for (const auto &p : points) {
        if (p.encoding != points.front().encoding) {
            throw UsageError("fit input mixes encodings");
        }
        if (!p.converged) {
            err << "warning: skipping unconverged point n=" << p.n
                << " r=" << format_double(p.r) << '\n';
            continue;
        }
        by_r[p.r].push_back(p);
    }

    std::vector<FitResult> fits;
    for (auto &[r, group] : by_r) {
        std::sort(group.begin(), group.end(),
                  [](const SweepPoint &x, const SweepPoint &y) { return x.n < y.n; });
        fits.push_back(a.n_min ? fit_decay(group, *a.n_min) : fit_decay_tail(group));
    }

    std::optional<SlopeResult> slope;
    if (!a.window.empty()) {
        const auto bounds = split(a.window, ':');
        if (bounds.size() != 2) {
            throw UsageError("--window takes lo:hi");
        }
        slope = slope_of_a(fits, to_double(bounds[0], "--window"),
                           to_double(bounds[1], "--window"));
    }

    if (session.run.output == OutputFormat::Json) {
        Json j{{"fits", Json::array()}};
        for (const auto &f : fits) {
            j["fits"].push_back(to_json(f));
        }
        if (slope) {
            j["slope"] = to_json(*slope);
        }
        emit_json(out, j);
    } else {
        out << kFitHeader << '\n';
        for (const auto &f : fits) {
            out << format_fit_row(f) << '\n';
        }
        if (slope) {
            out << '\n' << kSlopeHeader << '\n' << format_slope_row(*slope) << '\n';
        }
    }
    return kOk;
}

struct SelftestArgs {
    CommonFlags common;
    bool all = false;
    std::string ids;
};

int cmd_selftest(const SelftestArgs &a, std::ostream &out) {
    const Session session(a.common);
    std::vector<int> ids;
    if (!a.ids.empty()) {
        ids = parse_int_list(a.ids);
    } else {
        for (const auto &e : checks::criteria()) {
            if (a.all || e.quick) {
                ids.push_back(e.id);
            }
        }
    }
    checks::CriteriaOptions opts;
    opts.precision = session.run.precision;
    opts.workers = session.run.workers;
    const bool json = session.run.output == OutputFormat::Json;
    Json rows = Json::array();
    const auto results = checks::run_criteria(ids, opts, [&](const auto &r) {
        if (json) {
            rows.push_back(Json{{"id", r.id},
                                {"name", r.name},
                                {"passed", r.passed},
                                {"detail", r.detail},
                                {"seconds", r.seconds}});
        } else {
            out << checks::format_verdict(r) << '\n' << std::flush;
        }
    });
    if (json) {
        emit_json(out, rows);
    }
    const bool ok = std::all_of(results.begin(), results.end(),
                                [](const auto &r) { return r.passed; });
    return ok ? kOk : kFailure;
}

} // namespace

// ------------------------------------------------------------ public helpers

std::map<std::string, std::string> read_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file " + path, 0);
    }
    Settings out;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected key=value in " + path, number);
        }
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

RunConfig resolve_run_config(const Settings &flags, const Settings &env,
                             const Settings &file) {
    static const char *const kKeys[] = {"precision",  "theta",   "dim_cap",
                                        "schedule_mode", "cache_path", "workers",
                                        "output"};
    for (const auto &[key, value] : file) {
        if (std::find_if(std::begin(kKeys), std::end(kKeys), [&](const char *k) {
                return key == k;
            }) == std::end(kKeys)) {
            throw ContractError("unknown config key '" + key + "'");
        }
    }
    auto lookup = [&](const std::string &key) -> std::optional<std::string> {
        for (const Settings *layer : {&flags, &env, &file}) {
            if (const auto it = layer->find(key); it != layer->end()) {
                return it->second;
            }
        }
        return std::nullopt;
    };

    RunConfig rc;
    if (const auto v = lookup("precision")) {
        rc.precision = to_double(*v, "precision");
        if (!(rc.precision > 0.0)) {
            throw DomainError("precision must be > 0");
        }
    }
    if (const auto v = lookup("theta")) {
        rc.theta = to_double(*v, "theta");
    }
    if (const auto v = lookup("dim_cap")) {
        rc.dim_cap = to_int(*v, "dim_cap");
        if (rc.dim_cap < 2) {
            throw DomainError("dim_cap must be >= 2");
        }
    }
    if (const auto v = lookup("schedule_mode")) {
        rc.schedule = parse_schedule(*v);
    }
    if (const auto v = lookup("cache_path")) {
        rc.cache_path = *v;
    }
    if (const auto v = lookup("workers")) {
        rc.workers = to_int(*v, "workers");
        if (rc.workers < 1) {
            throw DomainError("workers must be >= 1");
        }
    }
    if (const auto v = lookup("output")) {
        if (*v == "csv") {
            rc.output = OutputFormat::Csv;
        } else if (*v == "json") {
            rc.output = OutputFormat::Json;
        } else {
            throw DomainError("output must be csv or json, got '" + *v + "'");
        }
    }
    return rc;
}

std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> out;
    for (const auto &item : split(text, ',')) {
        if (const auto dots = item.find(".."); dots != std::string::npos) {
            const int lo = to_int(trim(item.substr(0, dots)), "range start");
            const int hi = to_int(trim(item.substr(dots + 2)), "range end");
            if (hi < lo) {
                throw DomainError("empty range '" + item + "'");
            }
            for (int v = lo; v <= hi; ++v) {
                out.push_back(v);
            }
        } else {
            out.push_back(to_int(item, "list item"));
        }
    }
    return out;
}

std::vector<double> parse_real_list(const std::string &text) {
    std::vector<double> out;
    for (const auto &item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() == 1) {
            out.push_back(to_double(item, "list item"));
            continue;
        }
        if (parts.size() != 3) {
            throw DomainError("range '" + item + "' is not lo:step:hi");
        }
        const double lo = to_double(parts[0], "range start");
        const double step = to_double(parts[1], "range step");
        const double hi = to_double(parts[2], "range end");
        if (!(step > 0.0) || hi < lo) {
            throw DomainError("empty range '" + item + "'");
        }
        const bool plain = std::none_of(parts.begin(), parts.end(), [](const auto &p) {
            return p.find_first_of("eE") != std::string::npos;
        });
        const int d = std::max({decimals(parts[0]), decimals(parts[1]), decimals(parts[2])});
        if (plain && d <= 9) {
            // Exact integer steps in units of 10^-d.
            const double scale = std::pow(10.0, d);
            const auto l = std::llround(lo * scale);
            const auto s = std::llround(step * scale);
            const auto h = std::llround(hi * scale);
            for (auto v = l; v <= h; v += s) {
                out.push_back(static_cast<double>(v) / scale);
            }
        } else {
            const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
            for (long i = 0; i < count; ++i) {
                out.push_back(lo + static_cast<double>(i) * step);
            }
        }
    }
    return out;
}

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
    CLI::App app{"Quantum Fisher information of NOON states seen by an "
                 "accelerated receiver"};
    app.name("noonqfi");
    app.require_subcommand(1);

    QfiArgs qa;
    auto *qfi = app.add_subcommand("qfi", "Converged QFI for one state");
    qa.common.attach(qfi);
    qfi->add_option("--encoding", qa.encoding, "single | dual")
        ->required()
        ->check(CLI::IsMember({"single", "dual"}));
    qfi->add_option("--n", qa.n, "Excitation number N")->required()->check(CLI::PositiveNumber);
    auto *r_opt = qfi->add_option("--r", qa.r, "Squeezing parameter r >= 0");
    auto *w_opt = qfi->add_option("--omega", qa.omega, "Mode frequency (with --accel)");
    auto *a_opt = qfi->add_option("--accel", qa.accel, "Proper acceleration (with --omega)");
    r_opt->excludes(w_opt)->excludes(a_opt);
    w_opt->needs(a_opt);
    a_opt->needs(w_opt);

    SweepArgs sa;
    auto *sweep = app.add_subcommand("sweep", "QFI along N or r");
    sa.common.attach(sweep);
    sweep->add_option("--axis", sa.axis, "n | r")->required()->check(CLI::IsMember({"n", "r"}));
    sweep->add_option("--encoding", sa.encoding, "single | dual")
        ->required()
        ->check(CLI::IsMember({"single", "dual"}));
    sweep->add_option("--n", sa.n, "N list (a..b, a,b,c) or a single N")->required();
    sweep->add_option("--r", sa.r, "r list (lo:step:hi, a,b,c) or a single r")->required();

    OptimalArgs oa;
    auto *opt = app.add_subcommand("optimal-n", "QFI-maximising N for each r");
    oa.common.attach(opt);
    opt->add_option("--encoding", oa.encoding, "single | dual")
        ->required()
        ->check(CLI::IsMember({"single", "dual"}));
    opt->add_option("--r", oa.r, "r list, all > 0")->required();
    opt->add_option("--n-cap", oa.n_cap, "Largest N scanned [200]")->check(CLI::PositiveNumber);

    FitArgs fa;
    auto *fit = app.add_subcommand("fit", "Fit F = N^2 exp(-a N + b) per r, and da/dr");
    fa.common.attach(fit);
    fit->add_option("--input", fa.input, "Sweep CSV to fit");
    fit->add_option("--encoding", fa.encoding, "Inline grid: single | dual")
        ->check(CLI::IsMember({"single", "dual"}));
    fit->add_option("--r", fa.r, "Inline grid: r list");
    fit->add_option("--n", fa.n, "Inline grid: N list");
    fit->add_option("--window", fa.window, "r window lo:hi for the slope of a(r)");
    fit->add_option("--n-min", fa.n_min, "Smallest N fitted [first N past the peak]");

    SelftestArgs ta;
    auto *self = app.add_subcommand("selftest", "Run the invariant and acceptance checks");
    ta.common.attach(self);
    self->add_flag("--all", ta.all, "Include the long-running studies");
    self->add_option("--criteria", ta.ids, "Criterion ids, e.g. 1..4,10");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (qfi->parsed()) {
            return cmd_qfi(qa, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sa, out);
        }
        if (opt->parsed()) {
            return cmd_optimal_n(oa, out);
        }
        if (fit->parsed()) {
            return cmd_fit(fa, out, err);
        }
        return cmd_selftest(ta, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ContractError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DimensionError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConvergenceError &e) {
        err << "convergence failure: " << e.what() << '\n';
        dump_history(err, e.history());
        return kNotConverged;
    } catch (const ScanCapError &e) {
        err << "scan cap reached: " << e.what() << '\n';
        for (std::size_t i = 0; i < e.partial().size(); ++i) {
            err << i + 1 << ',' << format_double(e.partial()[i]) << '\n';
        }
        return kNotConverged;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace noonqfi::cli
