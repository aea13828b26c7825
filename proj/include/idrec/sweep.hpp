// Copyright 2026 The idrec Authors.
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

#ifndef IDREC_SWEEP_HPP
#define IDREC_SWEEP_HPP

// Single evaluations, parameter sweeps to CSV, figure presets and
// oracle validation runs. Time is expressed as the dimensionless gamma*t.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "idrec/channels.hpp"
#include "idrec/protocol.hpp"

namespace idrec {

enum class Regime { Markovian, NonMarkovian, Custom };

const char* to_string(Regime r);
std::optional<Regime> parse_regime(std::string_view name);

enum class Quantity { Concurrence, DeltaC, Probability, POfT };

const char* to_string(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view name);

inline constexpr const char* kCsvHeader =
    "gamma_t,p,I,statistics,channel,concurrence,delta_c,probability";

struct SweepConfig {
  ChannelKind kind = ChannelKind::ADC;
  Regime regime = Regime::Markovian;
  double gamma = 1.0;
  double lambda = 5.0;  // only read for Regime::Custom
  std::vector<double> i_values = {0.0, 0.25, 0.5, 0.75, 1.0};
  Statistics stats = Statistics::Fermion;
  double t_max = 10.0;  // in units of 1/gamma
  int n_points = 501;
  std::vector<Quantity> outputs = {Quantity::Concurrence, Quantity::DeltaC, Quantity::Probability,
                                   Quantity::POfT};
  unsigned threads = 0;  // 0: hardware concurrency

  LorentzianBath bath() const;
  // Throws DomainError on n_points < 2, t_max <= 0, I outside [0,1].
  void validate() const;
  bool wants(Quantity q) const;
};

// Fermions: the real positive family l = r' at the requested I.
// Bosons: its statistics dual (r negated), which carries the same concurrence.
DeformationSpec preset_spec(double indistinguishability, Statistics stats);

struct EvalRecord {
  double p;
  double indistinguishability;
  double concurrence;
  double delta_c;
  double probability;
};

// Closed-form evaluation at disturbance probability p. C and delta_C are NaN
// when post-selection cannot succeed (P_LR = 0).
EvalRecord evaluate_at_p(ChannelKind kind, double p, const DeformationSpec& spec);
// Same at dimensionless time gamma*t for the given bath.
EvalRecord run_eval(ChannelKind kind, const LorentzianBath& bath, double gamma_t,
                    const DeformationSpec& spec);
// "p=... I=... C=... delta_C=... P_LR=..." with 12 significant digits.
std::string format_record(const EvalRecord& r);

// Rows are I-major, time-minor. Points where post-selection fails print nan.
// Quantities not listed in config.outputs are left empty.
void write_sweep_csv(const SweepConfig& config, std::ostream& out);
// Throws IoError when the file cannot be written.
void run_sweep(const SweepConfig& config, const std::filesystem::path& out_path);

std::string gnuplot_script(const SweepConfig& config, const std::string& csv_path,
                           const std::string& title);

struct FigurePreset {
  std::string id;
  std::string title;
  ChannelKind kind;
  std::vector<Quantity> quantities;
};

const std::vector<FigurePreset>& figure_presets();
std::optional<FigurePreset> find_figure(std::string_view id);
// Resolved sweep for one panel of a preset. Markovian panels span gamma*t in
// [0,10]; non-Markovian panels span [0,100] so that revivals are visible.
SweepConfig figure_config(const FigurePreset& preset, Regime regime);

struct ValidationReport {
  std::uint64_t seed = 0;
  int cases = 0;
  double threshold = 1e-9;
  double max_abs_dc = 0.0;
  double max_abs_dp = 0.0;
  int worst_case = -1;
  int failures = 0;  // cases over threshold or with mismatched errors
  bool passed() const { return failures == 0; }
  std::string text() const;
};

// Draws cases random (channel, complex spec, time, regime, statistics) and
// compares the closed forms with the labeled oracle. Throws DomainError when
// cases < 1.
ValidationReport run_validate(std::uint64_t seed, int cases, double threshold = 1e-9);

}  // namespace idrec

#endif  // IDREC_SWEEP_HPP
