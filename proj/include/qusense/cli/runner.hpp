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
#include <filesystem>
#include <string>
#include <vector>

#include "qusense/cli/config.hpp"
#include "qusense/cli/output.hpp"
#include "qusense/noise/dephasing.hpp"
#include "qusense/sensing/acfield.hpp"

#ifndef QUSENSE_VERSION
#define QUSENSE_VERSION "0.0.0"
#endif

namespace qusense::cli {

namespace detail {

inline std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

inline Table image_table(const std::string& name, const OutcomeImage& img,
                         const std::string& mapping = {}) {
  Table t{name, {}, {}};
  if (!mapping.empty()) t.columns.push_back("mapping");
  t.columns.insert(t.columns.end(), {"phi", "outcome", "probability"});
  for (std::size_t i = 0; i < img.phis.size(); ++i) {
    for (std::size_t k = 0; k < img.probability[i].size(); ++k) {
      std::vector<Cell> row;
      if (!mapping.empty()) row.emplace_back(mapping);
      row.emplace_back(img.phis[i]);
      row.emplace_back(as_int(k));
      row.emplace_back(img.probability[i][k]);
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

inline std::vector<Table> run_digitize(const DigitizeParams& p) {
  const Dims dims(p.dims);
  Table t = image_table("digitize", digitization_image(dims, p.phi_points, Mapping::QFT), "qft");
  const Table h = image_table("digitize", digitization_image(dims, p.phi_points, Mapping::LocalH),
                              "local_h");
  t.rows.insert(t.rows.end(), h.rows.begin(), h.rows.end());
  return {std::move(t)};
}

inline std::vector<Table> run_acfield(const AcFieldParams& p, std::uint64_t seed) {
  const Dims dims(p.dims);
  std::vector<double> phases(p.amplitude_points);
  for (std::size_t i = 0; i < phases.size(); ++i) {
    phases[i] = 2.0 * std::numbers::pi * static_cast<double>(i) /
                static_cast<double>(phases.size());
  }
  Table image = image_table("acfield_image", ac_field_image(dims, phases));
  Table est{"acfield_estimates", {"phi", "most_frequent", "estimate_digitized", "estimate_ml"}, {}};
  std::vector<AcFieldResult> results(phases.size());
  parallel_for(phases.size(), [&](std::size_t i) {
    results[i] = simulate_ac_field_estimation(phases[i], dims, p.shots, derive_seed(seed, i));
  });
  for (const auto& r : results) {
    est.rows.push_back({r.field_phase, as_int(r.most_frequent), r.estimate_digitized, r.estimate_ml});
  }
  return {std::move(image), std::move(est)};
}

inline std::vector<Table> run_correlate(const CorrelateParams& p, std::uint64_t seed) {
  const CorrelationResult r = simulate_correlation_spectroscopy(p.targets, p.run, seed);
  Table series{"correlation_timeseries", {"T_c", "p_mem1", "p_mem2"}, {}};
  for (std::size_t i = 0; i < r.correlation_times.size(); ++i) {
    series.rows.push_back({r.correlation_times[i], r.memory[0][i], r.memory[1][i]});
  }
  Table spec{"correlation_spectrum", {"f", "S1", "S2"}, {}};
  for (std::size_t k = 0; k < r.spectrum[0].frequency.size(); ++k) {
    spec.rows.push_back({r.spectrum[0].frequency[k], r.spectrum[0].magnitude[k],
                         r.spectrum[1].magnitude[k]});
  }
  Table peaks{"correlation_peaks", {"memory", "frequency", "magnitude", "fwhm"}, {}};
  for (std::size_t m = 0; m < 2; ++m) {
    peaks.rows.push_back({as_int(m + 1), r.peak[m].frequency, r.peak[m].magnitude, r.peak[m].fwhm});
  }
  return {std::move(series), std::move(spec), std::move(peaks)};
}

inline std::vector<Table> run_fisher(const FisherParams& p) {
  Table summary{"fisher", {"n", "strategy", "qfi", "qfi_analytic", "cfi_mean"}, {}};
  Table curves{"cfi_curves", {"n", "strategy", "phi", "cfi"}, {}};
  for (std::size_t n = p.n_min; n <= p.n_max; ++n) {
    for (Strategy s : p.strategies) {
      const FisherResult f = fisher_analysis(s, n, p.phi_points, p.h_step);
      const std::string name(to_string(s));
      summary.rows.push_back({as_int(n), name, f.qfi, qfi_analytic(s, n), f.cfi_mean});
      for (const auto& pt : f.cfi_curve) curves.rows.push_back({as_int(n), name, pt.phi, pt.value});
    }
  }
  return {std::move(summary), std::move(curves)};
}

inline std::vector<Table> run_purity(const PurityParams& p) {
  Table t{"purity", {"n", "mapping", "mean_purity", "std_error"}, {}};
  for (std::size_t n = p.n_min; n <= p.n_max; ++n) {
    for (Mapping m : {Mapping::QFT, Mapping::LocalH}) {
      const PurityStudy s = purity_study(n, m, p.phi_points);
      t.rows.push_back({as_int(n), std::string(to_string(m)), s.mean, s.std_error});
    }
  }
  return {std::move(t)};
}

/// Every real output must be finite.
inline void check_finite(const std::vector<Table>& tables) {
  for (const Table& t : tables) {
    for (const auto& row : t.rows) {
      for (const Cell& c : row) {
        if (const auto* d = std::get_if<double>(&c); d && !std::isfinite(*d)) {
          throw invariant_error("non-finite value in " + t.name);
        }
      }
    }
  }
}

}  // namespace detail

inline std::vector<Table> run_experiment(const ExperimentConfig& cfg) {
  std::vector<Table> tables = std::visit(
      [&](const auto& p) -> std::vector<Table> {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, DigitizeParams>) return detail::run_digitize(p);
        if constexpr (std::is_same_v<P, AcFieldParams>) return detail::run_acfield(p, cfg.seed);
        if constexpr (std::is_same_v<P, CorrelateParams>) return detail::run_correlate(p, cfg.seed);
        if constexpr (std::is_same_v<P, FisherParams>) return detail::run_fisher(p);
        if constexpr (std::is_same_v<P, PurityParams>) return detail::run_purity(p);
      },
      cfg.params);
  detail::check_finite(tables);
  return tables;
}

/// Writes the tables (one CSV each, or a single results.json) and the
/// metadata.json sidecar into `dir`. Returns the written file names.
inline std::vector<std::string> write_outputs(const ExperimentConfig& cfg,
                                              const std::vector<Table>& tables,
                                              const std::string& config_hash,
                                              const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> files;
  if (cfg.format == "json") {
    write_file((dir / "results.json").string(), to_json(tables).dump(2) + "\n");
    files.push_back("results.json");
  } else {
    for (const Table& t : tables) {
      const std::string name = t.name + ".csv";
      write_file((dir / name).string(), to_csv(t));
      files.push_back(name);
    }
  }
  nlohmann::ordered_json meta;
  meta["experiment"] = std::string(to_string(cfg.experiment));
  meta["config_hash"] = "fnv1a64:" + config_hash;
  meta["seed"] = cfg.seed;
  meta["version"] = QUSENSE_VERSION;
  meta["format"] = cfg.format;
  meta["outputs"] = files;
  write_file((dir / "metadata.json").string(), meta.dump(2) + "\n");
  files.push_back("metadata.json");
  return files;
}

}  // namespace qusense::cli
