// Copyright 2026 The holocomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command implementations behind the `holocomp` executable.
//
// A run is described by a RunConfig read from a JSON file. Parsing is strict:
// unknown keys and wrong value types are rejected with a ConfigError (exit
// code 2). Each command returns a ResultRecord (JSON) and may write a CSV.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "holocomp/analysis.hpp"
#include "holocomp/dfs.hpp"
#include "holocomp/holonomy.hpp"
#include "holocomp/numeric.hpp"
#include "holocomp/qutrit.hpp"
#include "holocomp/twoqubit.hpp"

namespace holocomp::cli {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

/// Malformed or invalid configuration.
struct ConfigError : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

enum ExitCode : int { kSuccess = 0, kConfigError = 2, kNumericalError = 3 };

struct GateConfig {
    std::string kind = "elementary";  // elementary | composite2 | composite4 | twoqubit_elementary | twoqubit_composite
    double theta = std::numbers::pi / 2;
    double phi = 0.0;
    std::string jk = "11";
    std::string envelope = "square";
    int steps = 16;
};

struct ErrorConfig {
    double eps0 = 0.0;
    double eps1 = 0.0;
    double eps_jk = 0.0;
};

struct SweepConfig {
    std::string gate_kind = "composite4";
    std::string error_mode = "common";
    double theta = std::numbers::pi / 4;
    double phi = 0.0;
    std::string jk = "11";
    std::string envelope = "square";
    int steps = 16;
    std::vector<double> epsilons = analysis::default_epsilon_grid();
};

struct HolonomyConfig {
    std::string schedule = "elementary";  // elementary | composite2 | composite4 | twoqubit | twoqubit_composite | truncated
    double theta = std::numbers::pi / 3;
    double phi = std::numbers::pi / 5;
    std::string jk = "11";
    int samples_per_segment = holonomy::kDefaultSamplesPerSegment;
    double tolerance = 1e-8;
};

struct DfsConfig {
    std::string encoding = "s1";
    double theta = std::numbers::pi / 4;
    double phi = 0.0;
    std::vector<double> kappas = {0.0, 0.5};
    std::string distribution = "uniform";
    int n_samples = 1000;
    std::uint64_t seed = 1;
    std::optional<ErrorConfig> error;
};

struct RunConfig {
    GateConfig gate;
    std::optional<ErrorConfig> error;
    SweepConfig sweep;
    HolonomyConfig holonomy;
    DfsConfig dfs;
    double tolerance = kDefaultTolerance;
};

// ---------------------------------------------------------------------------
// Config parsing / serialization

namespace detail {

class ObjectReader {
  public:
    ObjectReader(const json& j, std::string path, std::initializer_list<const char*> allowed)
        : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
        std::set<std::string> ok(allowed.begin(), allowed.end());
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!ok.count(it.key())) throw ConfigError(path_ + ": unknown key '" + it.key() + "'");
        }
    }

    template <typename T>
    void read(const char* key, T& out) const {
        if (!j_.contains(key)) return;
        const json& v = j_.at(key);
        try {
            if constexpr (std::is_same_v<T, double>) {
                if (!v.is_number()) throw ConfigError(where(key) + ": expected a number");
            } else if constexpr (std::is_integral_v<T>) {
                if (!v.is_number_integer()) throw ConfigError(where(key) + ": expected an integer");
                if constexpr (std::is_unsigned_v<T>) {
                    if (v.is_number_integer() && !v.is_number_unsigned()) {
                        throw ConfigError(where(key) + ": expected a non-negative integer");
                    }
                }
            } else if constexpr (std::is_same_v<T, std::string>) {
                if (!v.is_string()) throw ConfigError(where(key) + ": expected a string");
            }
            out = v.get<T>();
        } catch (const json::exception& e) {
            throw ConfigError(where(key) + ": " + e.what());
        }
    }

    const json* child(const char* key) const { return j_.contains(key) ? &j_.at(key) : nullptr; }
    std::string where(const char* key) const { return path_ + "." + key; }

  private:
    const json& j_;
    std::string path_;
};

inline ErrorConfig parse_error(const json& j, const std::string& path) {
    ErrorConfig e;
    ObjectReader r(j, path, {"eps0", "eps1", "eps_jk"});
    r.read("eps0", e.eps0);
    r.read("eps1", e.eps1);
    r.read("eps_jk", e.eps_jk);
    return e;
}

inline std::optional<ErrorConfig> parse_optional_error(const ObjectReader& r, const char* key, const std::string& path) {
    const json* e = r.child(key);
    if (!e || e->is_null()) return std::nullopt;
    return parse_error(*e, path + "." + key);
}

inline json error_to_json(const std::optional<ErrorConfig>& e) {
    if (!e) return nullptr;
    return json{{"eps0", e->eps0}, {"eps1", e->eps1}, {"eps_jk", e->eps_jk}};
}

}  // namespace detail

inline RunConfig parse_config(const json& j) {
    RunConfig c;
    detail::ObjectReader top(j, "config", {"gate", "error", "sweep", "holonomy", "dfs", "tolerance"});
    top.read("tolerance", c.tolerance);
    if (const json* g = top.child("gate")) {
        detail::ObjectReader r(*g, "config.gate", {"kind", "theta", "phi", "jk", "envelope", "steps"});
        r.read("kind", c.gate.kind);
        r.read("theta", c.gate.theta);
        r.read("phi", c.gate.phi);
        r.read("jk", c.gate.jk);
        r.read("envelope", c.gate.envelope);
        r.read("steps", c.gate.steps);
    }
    c.error = detail::parse_optional_error(top, "error", "config");
    if (const json* s = top.child("sweep")) {
        detail::ObjectReader r(*s, "config.sweep",
                               {"gate_kind", "error_mode", "theta", "phi", "jk", "envelope", "steps", "epsilons"});
        r.read("gate_kind", c.sweep.gate_kind);
        r.read("error_mode", c.sweep.error_mode);
        r.read("theta", c.sweep.theta);
        r.read("phi", c.sweep.phi);
        r.read("jk", c.sweep.jk);
        r.read("envelope", c.sweep.envelope);
        r.read("steps", c.sweep.steps);
        if (const json* e = r.child("epsilons")) {
            if (!e->is_array()) throw ConfigError("config.sweep.epsilons: expected an array");
            c.sweep.epsilons.clear();
            for (const auto& v : *e) {
                if (!v.is_number()) throw ConfigError("config.sweep.epsilons: expected numbers");
                c.sweep.epsilons.push_back(v.get<double>());
            }
        }
    }
    if (const json* h = top.child("holonomy")) {
        detail::ObjectReader r(*h, "config.holonomy",
                               {"schedule", "theta", "phi", "jk", "samples_per_segment", "tolerance"});
        r.read("schedule", c.holonomy.schedule);
        r.read("theta", c.holonomy.theta);
        r.read("phi", c.holonomy.phi);
        r.read("jk", c.holonomy.jk);
        r.read("samples_per_segment", c.holonomy.samples_per_segment);
        r.read("tolerance", c.holonomy.tolerance);
    }
    if (const json* d = top.child("dfs")) {
        detail::ObjectReader r(*d, "config.dfs",
                               {"encoding", "theta", "phi", "kappas", "distribution", "n_samples", "seed", "error"});
        r.read("encoding", c.dfs.encoding);
        r.read("theta", c.dfs.theta);
        r.read("phi", c.dfs.phi);
        r.read("distribution", c.dfs.distribution);
        r.read("n_samples", c.dfs.n_samples);
        r.read("seed", c.dfs.seed);
        if (const json* k = r.child("kappas")) {
            if (!k->is_array()) throw ConfigError("config.dfs.kappas: expected an array");
            c.dfs.kappas.clear();
            for (const auto& v : *k) {
                if (!v.is_number()) throw ConfigError("config.dfs.kappas: expected numbers");
                c.dfs.kappas.push_back(v.get<double>());
            }
        }
        c.dfs.error = detail::parse_optional_error(r, "error", "config.dfs");
    }
    return c;
}

inline RunConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: not valid JSON: ") + e.what());
    }
    return parse_config(j);
}

inline RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

/// Canonical form: every field present, defaults filled in.
inline json to_json(const RunConfig& c) {
    return json{
        {"tolerance", c.tolerance},
        {"gate",
         {{"kind", c.gate.kind},
          {"theta", c.gate.theta},
          {"phi", c.gate.phi},
          {"jk", c.gate.jk},
          {"envelope", c.gate.envelope},
          {"steps", c.gate.steps}}},
        {"error", detail::error_to_json(c.error)},
        {"sweep",
         {{"gate_kind", c.sweep.gate_kind},
          {"error_mode", c.sweep.error_mode},
          {"theta", c.sweep.theta},
          {"phi", c.sweep.phi},
          {"jk", c.sweep.jk},
          {"envelope", c.sweep.envelope},
          {"steps", c.sweep.steps},
          {"epsilons", c.sweep.epsilons}}},
        {"holonomy",
         {{"schedule", c.holonomy.schedule},
          {"theta", c.holonomy.theta},
          {"phi", c.holonomy.phi},
          {"jk", c.holonomy.jk},
          {"samples_per_segment", c.holonomy.samples_per_segment},
          {"tolerance", c.holonomy.tolerance}}},
        {"dfs",
         {{"encoding", c.dfs.encoding},
          {"theta", c.dfs.theta},
          {"phi", c.dfs.phi},
          {"kappas", c.dfs.kappas},
          {"distribution", c.dfs.distribution},
          {"n_samples", c.dfs.n_samples},
          {"seed", c.dfs.seed},
          {"error", detail::error_to_json(c.dfs.error)}}},
    };
}

// ---------------------------------------------------------------------------
// Result records

/// Matrix as rows of [re, im] pairs.
inline json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j.front().is_array()) throw InvalidArgument("matrix_from_json: expected rows");
    ComplexMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(j.front().size()));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const json& row = j.at(static_cast<std::size_t>(r));
        if (static_cast<Eigen::Index>(row.size()) != m.cols()) throw InvalidArgument("matrix_from_json: ragged rows");
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const json& z = row.at(static_cast<std::size_t>(c));
            m(r, c) = Complex(z.at(0).get<double>(), z.at(1).get<double>());
        }
    }
    return m;
}

/// UTC timestamp; honours SOURCE_DATE_EPOCH for reproducible records.
inline std::string record_timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct ResultRecord {
    json body;  // command, input, outputs, version, timestamp

    const json& outputs() const { return body.at("outputs"); }
};

inline ResultRecord make_record(const std::string& command, const RunConfig& config, json outputs) {
    return {json{{"command", command},
                 {"input", to_json(config)},
                 {"outputs", std::move(outputs)},
                 {"version", kVersion},
                 {"timestamp", record_timestamp()}}};
}

/// %.17g: enough digits to round-trip a double.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct CommandOutput {
    ResultRecord record;
    std::string csv;  // empty when the command has no tabular output
};

// ---------------------------------------------------------------------------
// Commands

namespace detail {

inline qutrit::SegmentPair segments_for(const std::string& envelope, int steps) {
    if (steps <= 0) throw ConfigError("steps must be positive");
    return qutrit::default_segments(parse_envelope(envelope), steps);
}

/// Columns (|e>, |b>, |d>) expressed in the (|0>, |1>, |e>) basis.
inline ComplexMatrix ebd_change_of_basis(const qutrit::BrightDarkFrame& f) {
    ComplexMatrix w(3, 3);
    w.col(0) = qutrit::excited_state();
    w.col(1) = f.bright;
    w.col(2) = f.dark;
    return w;
}

inline void require_unitary(const ComplexMatrix& u, double tol, const char* what) {
    if (!is_unitary(u, std::max(tol, 1e-9))) throw NumericalFailure(std::string(what) + " is not unitary");
}

}  // namespace detail

inline CommandOutput cmd_gate(const RunConfig& c) {
    const auto segments = detail::segments_for(c.gate.envelope, c.gate.steps);
    json out;
    out["kind"] = c.gate.kind;
    ComplexMatrix built, target, actual;
    bool has_actual = static_cast<bool>(c.error);
    if (c.gate.kind == "elementary" || c.gate.kind == "composite2" || c.gate.kind == "composite4") {
        const qutrit::BrightDarkFrame frame(c.gate.theta, c.gate.phi);
        std::optional<qutrit::ErrorModel> model;
        if (c.error) model = qutrit::ErrorModel{c.error->eps0, c.error->eps1};
        out["basis"] = {"0", "1", "e"};
        if (c.gate.kind == "elementary") {
            built = qutrit::elementary_gate(frame, segments);
            target = qutrit::elementary_target(frame);
            if (model) actual = qutrit::elementary_gate_with_error(frame, *model, segments);
        } else if (c.gate.kind == "composite2") {
            built = qutrit::composite_two(frame, std::nullopt, segments);
            target = qutrit::composite_two_target(frame);
            if (model) actual = qutrit::composite_two(frame, model, segments);
        } else {
            built = qutrit::composite_four(frame, std::nullopt, segments);
            target = qutrit::logical_rotation_target(c.gate.theta, c.gate.phi);
            if (model) actual = qutrit::composite_four(frame, model, segments);
        }
        const ComplexMatrix w = detail::ebd_change_of_basis(frame);
        out["ebd_basis_matrix"] = matrix_to_json(w.adjoint() * built * w);
        out["logical_block"] = matrix_to_json(built.topLeftCorner(2, 2));
    } else if (c.gate.kind == "twoqubit_elementary" || c.gate.kind == "twoqubit_composite") {
        const auto jk = twoqubit::ComputationalLabel::parse(c.gate.jk);
        std::optional<twoqubit::TwoQubitErrorModel> model;
        if (c.error) model = twoqubit::TwoQubitErrorModel{c.error->eps_jk};
        out["basis"] = {"00", "01", "10", "11", "a"};
        out["jk"] = jk.str();
        if (c.gate.kind == "twoqubit_elementary") {
            built = twoqubit::twoqubit_elementary(jk, std::nullopt, segments);
            target = twoqubit::twoqubit_elementary_target(jk);
            if (model) actual = twoqubit::twoqubit_elementary(jk, model, segments);
        } else {
            built = twoqubit::twoqubit_composite(jk, std::nullopt, segments);
            target = twoqubit::twoqubit_composite_target(jk);
            if (model) actual = twoqubit::twoqubit_composite(jk, model, segments);
        }
        const ComplexMatrix block = twoqubit::computational_block(built);
        out["logical_block"] = matrix_to_json(block);
        out["entangling"] = twoqubit::entangling_power_check(block);
    } else {
        throw ConfigError("config.gate.kind: unknown gate kind '" + c.gate.kind + "'");
    }
    detail::require_unitary(built, c.tolerance, "constructed gate");
    out["ideal"] = matrix_to_json(built);
    out["target"] = matrix_to_json(target);
    out["distance_to_target"] = frobenius_distance(built, target);
    out["matches_target"] = frobenius_distance(built, target) <= c.tolerance;
    if (has_actual) {
        detail::require_unitary(actual, c.tolerance, "error-affected gate");
        const auto f = analysis::gate_fidelity(target, actual);
        out["actual"] = matrix_to_json(actual);
        out["fidelity"] = f.value;
        out["infidelity"] = f.infidelity;
        out["actual_distance_to_target"] = frobenius_distance(actual, target);
    }
    return {make_record("gate", c, std::move(out)), {}};
}

inline analysis::SweepSpec sweep_spec_from(const SweepConfig& s) {
    analysis::SweepSpec spec;
    spec.gate_kind = analysis::parse_gate_kind(s.gate_kind);
    spec.error_mode = analysis::parse_error_mode(s.error_mode);
    spec.theta = s.theta;
    spec.phi = s.phi;
    spec.jk = twoqubit::ComputationalLabel::parse(s.jk);
    spec.envelope = parse_envelope(s.envelope);
    spec.steps = s.steps;
    spec.epsilons = s.epsilons;
    analysis::validate(spec);
    return spec;
}

inline CommandOutput cmd_sweep(const RunConfig& c) {
    const auto spec = sweep_spec_from(c.sweep);
    const auto fit = analysis::run_sweep(spec);
    std::string csv = "epsilon,infidelity\n";
    json samples = json::array();
    for (const auto& s : fit.samples) {
        csv += format_double(s.epsilon) + "," + format_double(s.infidelity) + "\n";
        samples.push_back({{"epsilon", s.epsilon}, {"infidelity", s.infidelity}});
    }
    json out{{"gate_kind", analysis::to_string(spec.gate_kind)},
             {"error_mode", analysis::to_string(spec.error_mode)},
             {"samples", samples},
             {"fit",
              {{"slope", fit.slope},
               {"intercept", fit.intercept},
               {"r_squared", fit.r_squared},
               {"slope_stderr", std::isnan(fit.slope_stderr) ? json(nullptr) : json(fit.slope_stderr)},
               {"slope_ci95", std::isnan(fit.slope_ci95) ? json(nullptr) : json(fit.slope_ci95)},
               {"used", fit.used}}}};
    return {make_record("sweep", c, std::move(out)), std::move(csv)};
}

inline CommandOutput cmd_check_holonomy(const RunConfig& c) {
    const auto& h = c.holonomy;
    Schedule schedule;
    std::vector<ComplexVector> basis;
    std::size_t loop_len = 2;
    if (h.schedule == "elementary" || h.schedule == "composite2" || h.schedule == "composite4" ||
        h.schedule == "truncated") {
        const qutrit::BrightDarkFrame frame(h.theta, h.phi);
        if (h.schedule == "composite2") {
            schedule = qutrit::composite_two_schedule(frame);
        } else if (h.schedule == "composite4") {
            schedule = qutrit::composite_four_schedule(frame);
        } else {
            schedule = qutrit::elementary_schedule(frame);
            if (h.schedule == "truncated") {
                schedule.resize(1);
                loop_len = 1;
            }
        }
        basis = {basis_vector(qutrit::kDim, qutrit::kZero), basis_vector(qutrit::kDim, qutrit::kOne)};
    } else if (h.schedule == "twoqubit" || h.schedule == "twoqubit_composite") {
        const auto jk = twoqubit::ComputationalLabel::parse(h.jk);
        schedule = twoqubit::twoqubit_schedule(jk);
        if (h.schedule == "twoqubit_composite") {
            const Schedule again = schedule;
            schedule.insert(schedule.end(), again.begin(), again.end());
        }
        const auto cb = twoqubit::computational_basis();
        basis.assign(cb.begin(), cb.end());
    } else {
        throw ConfigError("config.holonomy.schedule: unknown schedule '" + h.schedule + "'");
    }
    if (h.samples_per_segment <= 0) throw ConfigError("config.holonomy.samples_per_segment must be positive");
    const auto trace = holonomy::trace_evolution(schedule, basis, h.samples_per_segment);
    const auto report = holonomy::check_holonomy(trace, h.tolerance);
    json out{{"schedule", h.schedule},
             {"segments", trace.segment_count()},
             {"cond1_residual", report.cond1_residual},
             {"cond2_max", report.cond2_max},
             {"passed", report.passed},
             {"tolerance", report.tolerance},
             {"loop_closure_residuals", holonomy::subloop_closure_residuals(trace, loop_len)}};
    if (trace.segment_count() == 2) out["midpoint_distance"] = holonomy::grassmannian_midpoint_check(trace);
    return {make_record("check-holonomy", c, std::move(out)), {}};
}

inline CommandOutput cmd_dfs(const RunConfig& c) {
    const auto& d = c.dfs;
    const auto encoding = dfs::encoding_by_name(d.encoding);
    if (d.kappas.empty()) throw ConfigError("config.dfs.kappas must not be empty");
    if (d.n_samples <= 0) throw ConfigError("config.dfs.n_samples must be positive");
    dfs::LogicalGateRequest gate{d.theta, d.phi, std::nullopt, qutrit::default_segments()};
    if (d.error) gate.model = qutrit::ErrorModel{d.error->eps0, d.error->eps1};

    ComplexVector encoded = ComplexVector::Zero(encoding.reg.dim());
    const std::vector<std::string> logical = encoding.kind == dfs::EncodingKind::single_logical
                                                 ? std::vector<std::string>{"0", "1"}
                                                 : std::vector<std::string>{"00", "01", "10", "11"};
    for (const auto& name : logical) encoded(encoding.index(name)) = 1.0;
    encoded.normalize();
    const ComplexVector contrast = dfs::contrast_state(encoding);

    std::string csv = "kappa,encoded_fidelity,unencoded_fidelity\n";
    json rows = json::array();
    for (double kappa : d.kappas) {
        const dfs::DephasingChannel channel{dfs::parse_kick_distribution(d.distribution), kappa, d.n_samples, d.seed};
        const auto enc = dfs::apply_collective_dephasing(channel, encoding, encoded, gate);
        const auto unenc = dfs::apply_collective_dephasing_unchecked(channel, encoding, contrast, gate);
        const double expected = dfs::closed_form_kick_average(channel.distribution, kappa, unenc.kicks_per_realization,
                                                              dfs::contrast_weight_gap(encoding));
        csv += format_double(kappa) + "," + format_double(enc.mean_fidelity) + "," +
               format_double(unenc.mean_fidelity) + "\n";
        rows.push_back({{"kappa", kappa},
                        {"encoded_fidelity", enc.mean_fidelity},
                        {"encoded_min_fidelity", enc.min_fidelity},
                        {"unencoded_fidelity", unenc.mean_fidelity},
                        {"unencoded_std_error", unenc.std_error},
                        {"unencoded_closed_form", expected},
                        {"kicks_per_realization", unenc.kicks_per_realization}});
    }
    json out{{"encoding", dfs::to_string(encoding.kind)}, {"results", rows}};
    if (encoding.kind == dfs::EncodingKind::single_logical) {
        const ComplexMatrix u = dfs::logical_composite_gate(encoding, d.theta, d.phi, gate.model);
        const ComplexMatrix block = dfs::restrict_to_encoding(u, encoding, {"0", "1", "a"});
        out["logical_gate"] = matrix_to_json(block);
        out["logical_gate_fidelity"] =
            analysis::gate_fidelity(qutrit::logical_rotation_target(d.theta, d.phi), block).value;
    } else {
        const ComplexMatrix u = dfs::logical_two_qubit_composite(encoding, d.theta, d.phi, gate.model);
        const ComplexMatrix block = dfs::restrict_to_encoding(u, encoding, {"00", "01", "10", "11"});
        out["logical_gate"] = matrix_to_json(block);
        out["entangling"] = twoqubit::entangling_power_check(block);
    }
    return {make_record("dfs", c, std::move(out)), std::move(csv)};
}

/// Dispatch by subcommand name.
inline CommandOutput run_command(const std::string& name, const RunConfig& c) {
    if (name == "gate") return cmd_gate(c);
    if (name == "sweep") return cmd_sweep(c);
    if (name == "check-holonomy") return cmd_check_holonomy(c);
    if (name == "dfs") return cmd_dfs(c);
    throw ConfigError("unknown command '" + name + "'");
}

/// Writes <out>/<command>.json and, when present, <out>/<command>.csv.
inline void write_outputs(const std::string& command, const CommandOutput& result, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const std::string stem = command == "check-holonomy" ? "check_holonomy" : command;
    {
        std::ofstream f(dir / (stem + ".json"));
        if (!f) throw std::runtime_error("cannot write to '" + dir.string() + "'");
        f << result.record.body.dump(2) << "\n";
    }
    if (!result.csv.empty()) {
        std::ofstream f(dir / (stem + ".csv"));
        if (!f) throw std::runtime_error("cannot write to '" + dir.string() + "'");
        f << result.csv;
    }
}

}  // namespace holocomp::cli
