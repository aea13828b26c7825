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

// idrec command-line front end. Talks to the library only through idrec.h.

#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idrec/idrec.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct Failure {
  idrec_status status;
  std::string message;
};

void check(idrec_status s, const std::string& context) {
  if (s != IDREC_OK) throw Failure{s, context + ": " + idrec_last_error()};
}

int exit_code(idrec_status s) {
  switch (s) {
    case IDREC_OK: return kExitOk;
    case IDREC_ERR_VALIDATION: return kExitValidation;
    case IDREC_ERR_IO: return kExitIo;
    default: return kExitUsage;
  }
}

struct SpecDeleter {
  void operator()(idrec_spec* s) const { idrec_spec_destroy(s); }
};
struct BathDeleter {
  void operator()(idrec_bath* b) const { idrec_bath_destroy(b); }
};
struct SweepDeleter {
  void operator()(idrec_sweep* s) const { idrec_sweep_destroy(s); }
};
using SpecPtr = std::unique_ptr<idrec_spec, SpecDeleter>;
using BathPtr = std::unique_ptr<idrec_bath, BathDeleter>;
using SweepPtr = std::unique_ptr<idrec_sweep, SweepDeleter>;

struct Options {
  std::string channel = "ADC";
  std::string regime;  // empty: markovian, or custom when --lambda is given
  double gamma = 1.0;
  std::optional<double> lambda;
  std::string statistics = "fermion";

  std::optional<double> time;
  std::optional<double> p;
  std::optional<double> target_i;
  std::optional<std::complex<double>> l, r, lp, rp;

  std::vector<double> i_values = {0.0, 0.25, 0.5, 0.75, 1.0};
  double t_max = 10.0;
  int points = 501;
  std::vector<std::string> outputs = {"concurrence", "delta_c", "probability", "p_of_t"};
  std::string out;
  unsigned threads = 0;
  bool gnuplot = false;

  std::string figure;

  std::uint64_t seed = 42;
  int cases = 1000;
  double threshold = 1e-9;
};

std::filesystem::path output_path(const std::string& requested, const std::string& fallback) {
  std::filesystem::path p = requested.empty() ? fallback : requested;
  if (p.is_relative())
    if (const char* dir = std::getenv("IDREC_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  return p;
}

idrec_channel channel_of(const Options& o) {
  idrec_channel c;
  check(idrec_parse_channel(o.channel.c_str(), &c), "--channel");
  return c;
}

idrec_statistics statistics_of(const Options& o) {
  idrec_statistics s;
  check(idrec_parse_statistics(o.statistics.c_str(), &s), "--statistics");
  return s;
}

idrec_regime regime_of(const Options& o) {
  if (o.regime.empty()) return o.lambda ? IDREC_CUSTOM : IDREC_MARKOVIAN;
  idrec_regime r;
  check(idrec_parse_regime(o.regime.c_str(), &r), "--regime");
  if (r == IDREC_CUSTOM && !o.lambda) throw Failure{IDREC_ERR_DOMAIN, "--regime custom requires --lambda"};
  return r;
}

BathPtr make_bath(const Options& o) {
  idrec_bath* b = nullptr;
  const idrec_regime r = regime_of(o);
  if (r == IDREC_CUSTOM)
    check(idrec_bath_create(o.gamma, *o.lambda, &b), "bath");
  else
    check(idrec_bath_preset(r, o.gamma, &b), "bath");
  return BathPtr(b);
}

SpecPtr make_spec(const Options& o) {
  idrec_spec* s = nullptr;
  const bool explicit_coeffs = o.l || o.r || o.lp || o.rp;
  if (explicit_coeffs && o.target_i)
    throw Failure{IDREC_ERR_DOMAIN, "give either --I or --l/--r/--lp/--rp, not both"};
  if (explicit_coeffs) {
    if (!(o.l && o.r && o.lp && o.rp))
      throw Failure{IDREC_ERR_DOMAIN, "--l, --r, --lp and --rp must be given together"};
    auto c = [](std::complex<double> z) { return idrec_complex{z.real(), z.imag()}; };
    check(idrec_spec_create(c(*o.l), c(*o.r), c(*o.lp), c(*o.rp), statistics_of(o), &s), "spec");
  } else {
    check(idrec_spec_preset(o.target_i.value_or(1.0), statistics_of(o), &s), "spec");
  }
  return SpecPtr(s);
}

int cmd_eval(const Options& o) {
  if (o.time && o.p) throw Failure{IDREC_ERR_DOMAIN, "give either --time or --p, not both"};
  const SpecPtr spec = make_spec(o);
  idrec_record rec;
  if (o.p) {
    check(idrec_eval_at_p(channel_of(o), *o.p, spec.get(), &rec), "eval");
  } else {
    const BathPtr bath = make_bath(o);
    check(idrec_eval(channel_of(o), bath.get(), o.time.value_or(0.0), spec.get(), &rec), "eval");
  }
  char line[256];
  check(idrec_record_format(&rec, line, sizeof line, nullptr), "format");
  std::cout << line << '\n';
  return kExitOk;
}

unsigned output_flags(const std::vector<std::string>& names) {
  unsigned flags = 0;
  for (const auto& n : names) {
    if (n == "concurrence") flags |= IDREC_OUT_CONCURRENCE;
    else if (n == "delta_c") flags |= IDREC_OUT_DELTA_C;
    else if (n == "probability") flags |= IDREC_OUT_PROBABILITY;
    else if (n == "p_of_t") flags |= IDREC_OUT_P_OF_T;
    else throw Failure{IDREC_ERR_DOMAIN, "unknown output '" + n + "'"};
  }
  return flags;
}

void write_outputs(const idrec_sweep* s, const std::filesystem::path& csv, bool gnuplot,
                   const std::string& title) {
  check(idrec_sweep_write_csv(s, csv.string().c_str()), "sweep");
  std::cerr << "wrote " << csv.string() << '\n';
  if (gnuplot) {
    std::filesystem::path gp = csv;
    gp.replace_extension(".gp");
    check(idrec_sweep_write_gnuplot(s, csv.filename().string().c_str(), title.c_str(),
                                    gp.string().c_str()),
          "gnuplot");
    std::cerr << "wrote " << gp.string() << '\n';
  }
}

int cmd_sweep(const Options& o) {
  idrec_sweep* raw = nullptr;
  check(idrec_sweep_create(&raw), "sweep");
  const SweepPtr s(raw);
  check(idrec_sweep_set_channel(s.get(), channel_of(o)), "--channel");
  const idrec_regime r = regime_of(o);
  check(idrec_sweep_set_bath(s.get(), r, o.gamma, o.lambda.value_or(5.0 * o.gamma)), "bath");
  check(idrec_sweep_set_statistics(s.get(), statistics_of(o)), "--statistics");
  check(idrec_sweep_set_i_values(s.get(), o.i_values.data(), o.i_values.size()), "--I");
  check(idrec_sweep_set_time_grid(s.get(), o.t_max, o.points), "time grid");
  check(idrec_sweep_set_outputs(s.get(), output_flags(o.outputs)), "--outputs");
  check(idrec_sweep_set_threads(s.get(), o.threads), "--threads");
  write_outputs(s.get(), output_path(o.out, "sweep.csv"), o.gnuplot, "sweep " + o.channel);
  return kExitOk;
}

int cmd_figure(const Options& o) {
  std::vector<idrec_regime> regimes;
  if (o.regime.empty()) {
    regimes = {IDREC_MARKOVIAN, IDREC_NONMARKOVIAN};
  } else {
    regimes = {regime_of(o)};
  }
  std::string title;
  for (size_t k = 0; k < idrec_figure_count(); ++k)
    if (o.figure == idrec_figure_id(k)) title = idrec_figure_title(k);
  for (idrec_regime r : regimes) {
    idrec_sweep* raw = nullptr;
    check(idrec_sweep_from_figure(o.figure.c_str(), r, &raw), "figure");
    const SweepPtr s(raw);
    check(idrec_sweep_set_statistics(s.get(), statistics_of(o)), "--statistics");
    check(idrec_sweep_set_threads(s.get(), o.threads), "--threads");
    const std::string tag = r == IDREC_MARKOVIAN ? "markovian" : "nonmarkovian";
    std::string name = o.figure + "_" + tag + ".csv";
    if (!o.out.empty()) {
      // --out names a directory for figure output
      name = (std::filesystem::path(o.out) / name).string();
    }
    const std::filesystem::path target = output_path(name, name);
    if (!o.out.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(target.parent_path(), ec);  // failure surfaces on write
    }
    write_outputs(s.get(), target, o.gnuplot, title + " (" + tag + ")");
  }
  return kExitOk;
}

int cmd_validate(const Options& o) {
  idrec_validation v{};
  const idrec_status st = idrec_validate(o.seed, o.cases, o.threshold, &v);
  if (st != IDREC_OK && st != IDREC_ERR_VALIDATION) check(st, "validate");
  char text[1024];
  check(idrec_validation_format(&v, text, sizeof text, nullptr), "format");
  std::cout << text;
  return exit_code(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement recovery of identical qubits by spatial indistinguishability"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_version_flag("--version", std::string(idrec_version()));

  Options o;
  app.add_option("--channel", o.channel, "ADC, PDC or DEP")->capture_default_str();
  app.add_option("--regime", o.regime, "markovian (lambda=5 gamma), nonmarkovian (lambda=0.01 gamma), custom");
  app.add_option("--gamma", o.gamma, "decay rate gamma")->capture_default_str();
  app.add_option("--lambda", o.lambda, "bath width lambda (implies custom regime)");
  app.add_option("--statistics", o.statistics, "fermion or boson")->capture_default_str();
  app.add_option("--time", o.time, "dimensionless time gamma*t");
  app.add_option("--p", o.p, "disturbance probability, instead of --time");
  app.add_option("--l", o.l, "coefficient l of psi1 (complex, e.g. 0.6+0.1j)");
  app.add_option("--r", o.r, "coefficient r of psi1");
  app.add_option("--lp", o.lp, "coefficient l' of psi2");
  app.add_option("--rp", o.rp, "coefficient r' of psi2");
  app.add_option("--t-max", o.t_max, "sweep end, in units of 1/gamma")->capture_default_str();
  app.add_option("--points", o.points, "number of time points")->capture_default_str();
  app.add_option("--outputs", o.outputs, "concurrence,delta_c,probability,p_of_t")->delimiter(',');
  app.add_option("--out", o.out, "output file (sweep) or directory (figure); relative to $IDREC_OUTPUT_DIR");
  app.add_option("--threads", o.threads, "worker threads, 0 = all cores")->capture_default_str();
  app.add_flag("--gnuplot", o.gnuplot, "also write a gnuplot script next to the CSV");
  app.add_option("--seed", o.seed, "validation seed")->capture_default_str();
  app.add_option("--cases", o.cases, "validation case count")->capture_default_str();
  app.add_option("--threshold", o.threshold, "validation tolerance")->capture_default_str();

  // --I means a single target for eval and a list for sweep.
  CLI::App* eval = app.add_subcommand("eval", "closed-form values at one point")->fallthrough();
  eval->add_option("--I", o.target_i, "target indistinguishability in [0,1] (default 1)");
  CLI::App* sweep = app.add_subcommand("sweep", "time sweep to CSV")->fallthrough();
  sweep->add_option("--I", o.i_values, "indistinguishability grid")->delimiter(',');
  CLI::App* figure = app.add_subcommand("figure", "figure preset data (fig2..fig9)")->fallthrough();
  figure->add_option("id", o.figure, "figure id")->required();
  CLI::App* validate = app.add_subcommand("validate", "compare closed forms with the labeled oracle")
                           ->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*sweep) return cmd_sweep(o);
    if (*figure) return cmd_figure(o);
    if (*validate) return cmd_validate(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return exit_code(f.status);
  }
  return kExitUsage;
}
