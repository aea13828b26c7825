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

#include "idrec/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "idrec/entanglement.hpp"
#include "idrec/errors.hpp"

namespace idrec {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct Point {
  double gamma_t;
  double p;
  double i;
  double c;
  double dc;
  double prob;
};

}  // namespace

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Markovian: return "markovian";
    case Regime::NonMarkovian: return "nonmarkovian";
    case Regime::Custom: return "custom";
  }
  return "?";
}

std::optional<Regime> parse_regime(std::string_view name) {
  const std::string s = lower(name);
  if (s == "markovian" || s == "m") return Regime::Markovian;
  if (s == "nonmarkovian" || s == "non-markovian" || s == "nm") return Regime::NonMarkovian;
  if (s == "custom") return Regime::Custom;
  return std::nullopt;
}

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::Concurrence: return "concurrence";
    case Quantity::DeltaC: return "delta_c";
    case Quantity::Probability: return "probability";
    case Quantity::POfT: return "p_of_t";
  }
  return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name) {
  const std::string s = lower(name);
  if (s == "concurrence" || s == "c") return Quantity::Concurrence;
  if (s == "delta_c" || s == "dc") return Quantity::DeltaC;
  if (s == "probability" || s == "p_lr") return Quantity::Probability;
  if (s == "p_of_t" || s == "p") return Quantity::POfT;
  return std::nullopt;
}

LorentzianBath SweepConfig::bath() const {
  switch (regime) {
    case Regime::Markovian: return LorentzianBath::markovian(gamma);
    case Regime::NonMarkovian: return LorentzianBath::non_markovian(gamma);
    case Regime::Custom: break;
  }
  return LorentzianBath(gamma, lambda);
}

void SweepConfig::validate() const {
  if (n_points < 2) throw DomainError("sweep needs at least 2 time points");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("t_max must be positive");
  for (double i : i_values)
    if (!(i >= 0.0 && i <= 1.0)) throw DomainError("I values must lie in [0,1], got " + fmt(i));
  (void)bath();  // gamma/lambda checks
}

bool SweepConfig::wants(Quantity q) const {
  return std::find(outputs.begin(), outputs.end(), q) != outputs.end();
}

DeformationSpec preset_spec(double indistinguishability, Statistics stats) {
  const DeformationSpec f = spec_for_target_i(indistinguishability, Statistics::Fermion);
  return stats == Statistics::Fermion ? f : statistics_dual(f);
}

EvalRecord evaluate_at_p(ChannelKind kind, double p, const DeformationSpec& spec) {
  EvalRecord r{};
  r.p = p;
  r.indistinguishability = indistinguishability(spec);
  try {
    r.concurrence = concurrence_closed(kind, spec, p);
    r.delta_c = delta_c(kind, spec, p);
  } catch (const PostSelectionImpossible&) {
    r.concurrence = r.delta_c = std::nan("");  // P_LR = 0 below
  }
  r.probability = success_probability_closed(kind, spec, p);
  return r;
}

EvalRecord run_eval(ChannelKind kind, const LorentzianBath& bath, double gamma_t,
                    const DeformationSpec& spec) {
  if (!(gamma_t >= 0.0) || !std::isfinite(gamma_t))
    throw DomainError("gamma*t must be finite and non-negative");
  return evaluate_at_p(kind, p_analytic(gamma_t / bath.gamma(), bath), spec);
}

std::string format_record(const EvalRecord& r) {
  return "p=" + fmt(r.p) + " I=" + fmt(r.indistinguishability) + " C=" + fmt(r.concurrence) +
         " delta_C=" + fmt(r.delta_c) + " P_LR=" + fmt(r.probability);
}

void write_sweep_csv(const SweepConfig& config, std::ostream& out) {
  config.validate();
  const LorentzianBath bath = config.bath();
  const int nt = config.n_points;
  const std::size_t total = config.i_values.size() * static_cast<std::size_t>(nt);

  std::vector<DeformationSpec> specs;
  for (double i : config.i_values) specs.push_back(preset_spec(i, config.stats));

  std::vector<Point> rows(total);
  auto compute = [&](std::size_t k) {
    const std::size_t ii = k / nt;
    const int it = static_cast<int>(k % nt);
    Point& pt = rows[k];
    pt.gamma_t = config.t_max * it / (nt - 1);
    pt.i = config.i_values[ii];
    pt.p = p_analytic(pt.gamma_t / bath.gamma(), bath);
    const double nan = std::nan("");
    try {
      pt.c = concurrence_closed(config.kind, specs[ii], pt.p);
      pt.dc = delta_c(config.kind, specs[ii], pt.p);
    } catch (const Error&) {
      pt.c = pt.dc = nan;
    }
    try {
      pt.prob = success_probability_closed(config.kind, specs[ii], pt.p);
    } catch (const Error&) {
      pt.prob = nan;
    }
  };

  unsigned nthreads = config.threads ? config.threads : std::thread::hardware_concurrency();
  nthreads = std::clamp<unsigned>(nthreads, 1u, 64u);
  if (nthreads == 1 || total < 256) {
    for (std::size_t k = 0; k < total; ++k) compute(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nthreads; ++w)
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < total;) compute(k);
      });
    for (auto& th : pool) th.join();
  }

  const bool want_p = config.wants(Quantity::POfT);
  const bool want_c = config.wants(Quantity::Concurrence);
  const bool want_dc = config.wants(Quantity::DeltaC);
  const bool want_pr = config.wants(Quantity::Probability);
  const std::string stats = to_string(config.stats);
  const std::string chan = to_string(config.kind);
  out << kCsvHeader << '\n';
  for (const Point& pt : rows) {
    out << fmt(pt.gamma_t) << ',' << (want_p ? fmt(pt.p) : "") << ',' << fmt(pt.i) << ',' << stats
        << ',' << chan << ',' << (want_c ? fmt(pt.c) : "") << ',' << (want_dc ? fmt(pt.dc) : "")
        << ',' << (want_pr ? fmt(pt.prob) : "") << '\n';
  }
}

void run_sweep(const SweepConfig& config, const std::filesystem::path& out_path) {
  config.validate();
  std::ostringstream buf;
  write_sweep_csv(config, buf);
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + out_path.string() + " for writing");
  f << buf.str();
  f.close();
  if (!f) throw IoError("failed writing " + out_path.string());
}

std::string gnuplot_script(const SweepConfig& config, const std::string& csv_path,
                           const std::string& title) {
  // columns: 1 gamma_t, 2 p, 3 I, 6 C, 7 dC, 8 P_LR
  std::ostringstream s;
  s << "set datafile separator ','\n"
    << "set key autotitle columnhead outside\n"
    << "set xlabel 'gamma t'\n"
    << "set title '" << title << "'\n";
  bool first_plot = true;
  const std::pair<Quantity, int> cols[] = {{Quantity::Concurrence, 6},
                                           {Quantity::DeltaC, 7},
                                           {Quantity::Probability, 8},
                                           {Quantity::POfT, 2}};
  for (const auto& [q, col] : cols) {
    if (!config.wants(q)) continue;
    if (!first_plot) s << "pause -1\n";
    first_plot = false;
    s << "set ylabel '" << to_string(q) << "'\nplot ";
    for (std::size_t k = 0; k < config.i_values.size(); ++k) {
      if (k) s << ", \\\n     ";
      // each I block is n_points rows after the header
      const std::size_t first = k * config.n_points;
      s << "'" << csv_path << "' every ::" << first << "::" << first + config.n_points - 1
        << " using 1:" << col << " with lines title 'I=" << fmt(config.i_values[k]) << "'";
    }
    s << "\n";
  }
  return s.str();
}

const std::vector<FigurePreset>& figure_presets() {
  using Q = Quantity;
  static const std::vector<FigurePreset> presets = {
      {"fig2", "ADC concurrence after deformation and sLOCC", ChannelKind::ADC, {Q::Concurrence}},
      {"fig3", "ADC net entanglement gain", ChannelKind::ADC, {Q::DeltaC}},
      {"fig4", "ADC sLOCC success probability", ChannelKind::ADC, {Q::Probability}},
      {"fig5", "PDC concurrence after deformation and sLOCC", ChannelKind::PDC, {Q::Concurrence}},
      {"fig6", "PDC net entanglement gain", ChannelKind::PDC, {Q::DeltaC}},
      {"fig7", "PDC sLOCC success probability", ChannelKind::PDC, {Q::Probability}},
      {"fig8", "DEP concurrence and net gain", ChannelKind::DEP, {Q::Concurrence, Q::DeltaC}},
      {"fig9", "DEP sLOCC success probability", ChannelKind::DEP, {Q::Probability}},
  };
  return presets;
}

std::optional<FigurePreset> find_figure(std::string_view id) {
  const std::string s = lower(id);
  for (const auto& f : figure_presets())
    if (f.id == s) return f;
  return std::nullopt;
}

SweepConfig figure_config(const FigurePreset& preset, Regime regime) {
  if (regime == Regime::Custom) throw DomainError("figure presets are markovian or nonmarkovian");
  SweepConfig c;
  c.kind = preset.kind;
  c.regime = regime;
  c.outputs = preset.quantities;
  c.outputs.push_back(Quantity::POfT);
  c.t_max = regime == Regime::Markovian ? 10.0 : 100.0;
  c.n_points = regime == Regime::Markovian ? 501 : 2001;
  return c;
}

}  // namespace idrec
