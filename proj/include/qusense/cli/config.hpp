// Copyright 2026 The qusense Authors
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

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qusense/core/dims.hpp"
#include "qusense/metrology/fisher.hpp"
#include "qusense/sensing/correlation.hpp"

namespace qusense::cli {

using json = nlohmann::json;

inline constexpr std::uint64_t kDefaultSeed = 20240917;

enum class Experiment { Digitize, AcField, Correlate, Fisher, Purity };

inline std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::Digitize: return "digitize";
    case Experiment::AcField: return "acfield";
    case Experiment::Correlate: return "correlate";
    case Experiment::Fisher: return "fisher";
    case Experiment::Purity: return "purity";
  }
  return "?";
}

inline std::optional<Experiment> experiment_from_string(std::string_view s) {
  for (Experiment e : {Experiment::Digitize, Experiment::AcField, Experiment::Correlate,
                       Experiment::Fisher, Experiment::Purity}) {
    if (s == to_string(e)) return e;
  }
  return std::nullopt;
}

struct DigitizeParams {
  std::vector<int> dims;
  std::size_t phi_points = 120;
};

struct AcFieldParams {
  std::vector<int> dims;
  std::size_t amplitude_points = 120;
  std::uint64_t shots = 10000;
};

struct CorrelateParams {
  TargetSpinConfig targets;
  CorrelationRun run;
};

struct FisherParams {
  std::size_t n_min = 1;
  std::size_t n_max = 8;
  std::vector<Strategy> strategies{Strategy::SQL, Strategy::QPEA, Strategy::NOON};
  std::size_t phi_points = kDefaultPhiGrid;
  double h_step = kDefaultFisherStep;
};

struct PurityParams {
  std::size_t n_min = 1;
  std::size_t n_max = 5;
  std::size_t phi_points = 256;
};

struct ExperimentConfig {
  Experiment experiment = Experiment::Digitize;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "csv";
  std::string out = ".";
  std::variant<DigitizeParams, AcFieldParams, CorrelateParams, FisherParams, PurityParams>
      params;
};

struct Diagnostic {
  std::string field;
  std::string message;
};

namespace detail {

/// Reads fields of one JSON object, recording problems instead of throwing.
class Reader {
 public:
  Reader(const json& obj, std::string prefix, std::vector<Diagnostic>& diags)
      : obj_(obj), prefix_(std::move(prefix)), diags_(diags) {}

  bool has(const std::string& key) {
    seen_.insert(key);
    return obj_.contains(key);
  }

  void fail(const std::string& key, std::string message) {
    diags_.push_back({prefix_ + key, std::move(message)});
  }

  void require(const std::string& key) {
    if (!has(key)) fail(key, "required field is missing");
  }

  template <class T>
  void uint(const std::string& key, T& out, std::uint64_t lo, std::uint64_t hi) {
    if (!has(key)) return;
    const json& v = obj_.at(key);
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
      fail(key, "must be a non-negative integer");
      return;
    }
    const auto x = v.get<std::uint64_t>();
    if (x < lo || x > hi) {
      fail(key, "must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
      return;
    }
    out = static_cast<T>(x);
  }

  /// Real number satisfying `ok`; `what` names the precondition.
  template <class Pred>
  void real(const std::string& key, double& out, Pred ok, const std::string& what) {
    if (!has(key)) return;
    const json& v = obj_.at(key);
    if (!v.is_number()) {
      fail(key, "must be a number");
      return;
    }
    const double x = v.get<double>();
    if (!std::isfinite(x) || !ok(x)) {
      fail(key, "must be " + what);
      return;
    }
    out = x;
  }

  void string(const std::string& key, std::string& out) {
    if (!has(key)) return;
    if (!obj_.at(key).is_string()) {
      fail(key, "must be a string");
      return;
    }
    out = obj_.at(key).get<std::string>();
  }

  /// Register dimensions: non-empty array of integers >= 2, dense size
  /// within the simulator cap.
  void dims(const std::string& key, std::vector<int>& out) {
    if (!has(key)) {
      fail(key, "required field is missing");
      return;
    }
    const json& v = obj_.at(key);
    if (!v.is_array() || v.empty()) {
      fail(key, "must be a non-empty array of integers");
      return;
    }
    std::vector<int> d;
    for (const json& x : v) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 2 || x.get<std::int64_t>() > 64) {
        fail(key, "entries must be integers in [2, 64]");
        return;
      }
      d.push_back(x.get<int>());
    }
    try {
      Dims check(d);
    } catch (const std::exception& e) {
      fail(key, e.what());
      return;
    }
    out = std::move(d);
  }

  json array(const std::string& key) {
    if (!has(key)) return json();
    const json& v = obj_.at(key);
    if (!v.is_array()) {
      fail(key, "must be an array");
      return json();
    }
    return v;
  }

  const json* object(const std::string& key) {
    if (!has(key)) return nullptr;
    const json& v = obj_.at(key);
    if (!v.is_object()) {
      fail(key, "must be an object");
      return nullptr;
    }
    return &v;
  }

  void reject_unknown() {
    for (const auto& [k, v] : obj_.items()) {
      if (!seen_.contains(k)) fail(k, "unknown field");
    }
  }

  const std::string& prefix() const { return prefix_; }

 private:
  const json& obj_;
  std::string prefix_;
  std::vector<Diagnostic>& diags_;
  std::set<std::string> seen_;
};

inline void read_qubit_range(Reader& r, std::size_t& lo, std::size_t& hi, std::size_t cap) {
  r.uint("n_min", lo, 1, cap);
  r.uint("n_max", hi, 1, cap);
  if (lo > hi) r.fail("n_max", "must be >= n_min");
}

inline DigitizeParams read_digitize(Reader& r) {
  DigitizeParams p;
  r.dims("dims", p.dims);
  r.uint("phi_points", p.phi_points, 1, 100000);
  return p;
}

inline AcFieldParams read_acfield(Reader& r) {
  AcFieldParams p;
  r.dims("dims", p.dims);
  r.uint("amplitude_points", p.amplitude_points, 1, 100000);
  r.uint("shots", p.shots, 1, std::uint64_t{1} << 40);
  return p;
}

inline CorrelateParams read_correlate(Reader& r, std::vector<Diagnostic>& diags) {
  CorrelateParams p;
  auto positive = [](double x) { return x > 0.0; };
  auto any = [](double) { return true; };

  if (json a = r.array("couplings_hz"); !a.is_null()) {
    std::vector<double> c;
    bool ok = a.size() == 2;
    for (const json& x : a) {
      ok = ok && x.is_number() && x.get<double>() > 0.0 && std::isfinite(x.get<double>());
      if (ok) c.push_back(x.get<double>());
    }
    if (ok) {
      p.targets.couplings = c;
    } else {
      r.fail("couplings_hz", "must be two couplings > 0");
    }
  }
  if (json a = r.array("initial"); !a.is_null()) {
    std::vector<SpinState> s;
    bool ok = a.size() == 2;
    for (const json& x : a) {
      if (x == "up") {
        s.push_back(SpinState::Up);
      } else if (x == "down") {
        s.push_back(SpinState::Down);
      } else {
        ok = false;
      }
    }
    if (ok) {
      p.targets.initial = s;
    } else {
      r.fail("initial", "must be two of \"up\" or \"down\"");
    }
  }
  if (json a = r.array("evolving"); !a.is_null()) {
    std::vector<bool> e;
    bool ok = a.size() == 2;
    for (const json& x : a) {
      ok = ok && x.is_boolean();
      if (ok) e.push_back(x.get<bool>());
    }
    if (ok) {
      p.targets.evolving = e;
    } else {
      r.fail("evolving", "must be two booleans");
    }
  }
  r.real("detuning_hz", p.targets.detuning, any, "finite");
  r.real("ms", p.targets.ms, any, "finite");
  r.real("t2_star_s", p.targets.t2_star, positive, "> 0");

  p.run.tau = default_sensing_time(p.targets);
  r.real("tau_s", p.run.tau, positive, "> 0 (sensing time precondition tau > 0)");

  if (const json* t = r.object("correlation_times")) {
    Reader tr(*t, r.prefix() + "correlation_times.", diags);
    double start = 0.0;
    double step = 15e-6;
    std::size_t count = 400;
    tr.real("start_s", start, [](double x) { return x >= 0.0; }, ">= 0");
    tr.real("step_s", step, positive, "> 0");
    tr.uint("count", count, 2, 1000000);
    tr.reject_unknown();
    p.run.correlation_times.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      p.run.correlation_times[i] = start + step * static_cast<double>(i);
    }
  }
  r.uint("shots", p.run.shots, 0, std::uint64_t{1} << 40);
  r.uint("fft_length", p.run.fft_length, 0, std::size_t{1} << 22);
  if (json a = r.array("readout_fidelities"); !a.is_null()) {
    bool ok = a.size() == 2;
    std::array<double, 2> f{};
    for (std::size_t i = 0; ok && i < 2; ++i) {
      ok = a[i].is_number() && a[i].get<double>() >= 0.0 && a[i].get<double>() <= 1.0;
      if (ok) f[i] = a[i].get<double>();
    }
    if (ok) {
      p.run.readout_fidelities = f;
    } else {
      r.fail("readout_fidelities", "must be two values in [0, 1]");
    }
  }
  return p;
}

inline FisherParams read_fisher(Reader& r) {
  FisherParams p;
  read_qubit_range(r, p.n_min, p.n_max, 10);
  r.uint("phi_points", p.phi_points, 3, 100000);
  r.real("h_step", p.h_step, [](double x) { return x > 0.0 && x < 0.1; }, "in (0, 0.1)");
  if (json a = r.array("strategies"); !a.is_null()) {
    std::vector<Strategy> s;
    bool ok = !a.empty();
    for (const json& x : a) {
      const auto v = x.is_string() ? strategy_from_string(x.get<std::string>()) : std::nullopt;
      ok = ok && v.has_value();
      if (v) s.push_back(*v);
    }
    if (ok) {
      p.strategies = s;
    } else {
      r.fail("strategies", "must be a non-empty list of SQL, QPEA, NOON");
    }
  }
  return p;
}

inline PurityParams read_purity(Reader& r) {
  PurityParams p;
  read_qubit_range(r, p.n_min, p.n_max, 8);
  r.uint("phi_points", p.phi_points, 2, 100000);
  return p;
}

}  // namespace detail

struct ParseResult {
  std::optional<ExperimentConfig> config;
  std::vector<Diagnostic> diagnostics;
};

/// Checks a parsed config document. `expected` is the experiment named on
/// the command line, if any; the document's "experiment" field must agree
/// with it and is required otherwise.
inline ParseResult parse_config(const json& doc, std::optional<Experiment> expected) {
  ParseResult res;
  auto& diags = res.diagnostics;
  if (!doc.is_object()) {
    diags.push_back({"", "config must be a JSON object"});
    return res;
  }
  detail::Reader r(doc, "", diags);
  ExperimentConfig cfg;

  std::optional<Experiment> exp = expected;
  if (r.has("experiment")) {
    const json& v = doc.at("experiment");
    const auto e = v.is_string() ? experiment_from_string(v.get<std::string>()) : std::nullopt;
    if (!e) {
      r.fail("experiment", "must be one of digitize, acfield, correlate, fisher, purity");
    } else if (expected && *expected != *e) {
      r.fail("experiment", "config is for '" + std::string(to_string(*e)) +
                               "' but '" + std::string(to_string(*expected)) + "' was requested");
    } else {
      exp = e;
    }
  } else if (!expected) {
    r.fail("experiment", "required field is missing");
  }

  r.uint("seed", cfg.seed, 0, std::numeric_limits<std::uint64_t>::max());
  r.string("format", cfg.format);
  if (cfg.format != "csv" && cfg.format != "json") r.fail("format", "must be csv or json");
  r.string("out", cfg.out);

  if (exp) {
    cfg.experiment = *exp;
    switch (*exp) {
      case Experiment::Digitize: cfg.params = detail::read_digitize(r); break;
      case Experiment::AcField: cfg.params = detail::read_acfield(r); break;
      case Experiment::Correlate: cfg.params = detail::read_correlate(r, diags); break;
      case Experiment::Fisher: cfg.params = detail::read_fisher(r); break;
      case Experiment::Purity: cfg.params = detail::read_purity(r); break;
    }
    r.reject_unknown();
  }
  if (diags.empty()) res.config = std::move(cfg);
  return res;
}

inline json diagnostics_json(const std::vector<Diagnostic>& diags) {
  json out = json::array();
  for (const auto& d : diags) out.push_back({{"field", d.field}, {"message", d.message}});
  return out;
}

}  // namespace qusense::cli
