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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "idrec/entanglement.hpp"
#include "idrec/errors.hpp"
#include "idrec/sweep.hpp"

using namespace idrec;

namespace {

struct Row {
  double gamma_t, p, i;
  std::string stats, channel;
  std::string c, dc, prob;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream s(line);
  while (std::getline(s, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::vector<Row> parse(const std::string& csv, std::string* header = nullptr) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    const auto f = split(line);
    REQUIRE(f.size() == 8);
    rows.push_back({std::stod(f[0]), f[1].empty() ? NAN : std::stod(f[1]), std::stod(f[2]), f[3], f[4], f[5], f[6], f[7]});
  }
  return rows;
}

std::string csv_of(const SweepConfig& c) {
  std::ostringstream s;
  write_sweep_csv(c, s);
  return s.str();
}

int derivative_sign_changes(const std::vector<double>& y) {
  int changes = 0, last = 0;
  for (std::size_t i = 1; i < y.size(); ++i) {
    const double d = y[i] - y[i - 1];
    const int s = d > 1e-12 ? 1 : d < -1e-12 ? -1 : 0;
    if (s != 0 && last != 0 && s != last) ++changes;
    if (s != 0) last = s;
  }
  return changes;
}

}  // namespace

TEST_CASE("config validation") {
  SweepConfig c;
  CHECK_NOTHROW(c.validate());
  c.n_points = 1;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = SweepConfig{};
  c.t_max = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = SweepConfig{};
  c.i_values = {0.5, 1.2};
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = SweepConfig{};
  c.regime = Regime::Custom;
  c.lambda = -1;
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("CSV header, ordering and formatting") {
  SweepConfig c;
  c.i_values = {0.0, 1.0};
  c.n_points = 11;
  std::string header;
  const std::string csv = csv_of(c);
  const auto rows = parse(csv, &header);
  CHECK(header == "gamma_t,p,I,statistics,channel,concurrence,delta_c,probability");
  REQUIRE(rows.size() == 22);
  CHECK(rows[0].i == 0.0);
  CHECK(rows[10].i == 0.0);
  CHECK(rows[11].i == 1.0);
  CHECK(rows[5].gamma_t == 5.0);
  CHECK(rows[0].stats == "fermion");
  CHECK(rows[0].channel == "ADC");
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');
  // 12 significant digits
  CHECK(csv.find("0.577103994484") != std::string::npos);
  for (const auto& r : rows) {
    const double p = p_analytic(r.gamma_t, LorentzianBath::markovian());
    CHECK(std::abs(r.p - p) <= 1e-11);
    CHECK(std::abs(std::stod(r.c) - concurrence_closed(ChannelKind::ADC, preset_spec(r.i, Statistics::Fermion), p)) <=
          1e-11);
  }
}

TEST_CASE("empty I list gives header only") {
  SweepConfig c;
  c.i_values = {};
  CHECK(csv_of(c) == std::string(kCsvHeader) + "\n");
}

TEST_CASE("unselected outputs are left empty") {
  SweepConfig c;
  c.n_points = 3;
  c.i_values = {0.5};
  c.outputs = {Quantity::Probability};
  for (const auto& r : parse(csv_of(c))) {
    CHECK(r.c.empty());
    CHECK(r.dc.empty());
    CHECK(std::isnan(r.p));
    CHECK_FALSE(r.prob.empty());
  }
}

TEST_CASE("output is independent of the thread count") {
  SweepConfig c;
  c.kind = ChannelKind::DEP;
  c.regime = Regime::NonMarkovian;
  c.t_max = 100;
  c.n_points = 1001;
  c.stats = Statistics::Boson;
  c.threads = 1;
  const std::string one = csv_of(c);
  c.threads = 4;
  const std::string four = csv_of(c);
  c.threads = 7;
  CHECK(one == four);
  CHECK(one == csv_of(c));
}

TEST_CASE("run_sweep writes the file and reports I/O errors") {
  SweepConfig c;
  c.n_points = 5;
  const std::filesystem::path p = std::filesystem::temp_directory_path() / "idrec_sweep_test.csv";
  run_sweep(c, p);
  std::ifstream f(p, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == csv_of(c));
  std::filesystem::remove(p);
  CHECK_THROWS_AS(run_sweep(c, "/nonexistent-dir/x.csv"), IoError);
}

TEST_CASE("run_eval examples") {
  const LorentzianBath m(1.0, 5.0);
  const EvalRecord r = run_eval(ChannelKind::ADC, m, 0.0, preset_spec(1.0, Statistics::Fermion));
  CHECK(r.p == 0.0);
  CHECK(r.concurrence == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.probability == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r.indistinguishability == doctest::Approx(1.0).epsilon(1e-14));

  const EvalRecord d = evaluate_at_p(ChannelKind::DEP, 2.0 / 3.0, preset_spec(0.0, Statistics::Fermion));
  CHECK(d.concurrence <= 1e-12);

  const EvalRecord late = run_eval(ChannelKind::PDC, m, 60.0, preset_spec(0.0, Statistics::Fermion));
  CHECK(late.concurrence <= 1e-12);
  CHECK(late.probability == doctest::Approx(1.0));

  CHECK_THROWS_AS(run_eval(ChannelKind::ADC, m, -1.0, preset_spec(0.0, Statistics::Fermion)), DomainError);
  CHECK(format_record(r) == "p=0 I=1 C=1 delta_C=0 P_LR=0.5");
}

TEST_CASE("boson presets are the duals of the fermion family") {
  for (double i : {0.0, 0.3, 1.0}) {
    const DeformationSpec f = preset_spec(i, Statistics::Fermion);
    const DeformationSpec b = preset_spec(i, Statistics::Boson);
    CHECK(b.stats == Statistics::Boson);
    CHECK(b.r == -f.r);
    CHECK(std::abs(indistinguishability(b) - i) <= 1e-10);
  }
  const double h = std::sqrt(0.5);
  const DeformationSpec b1 = preset_spec(1.0, Statistics::Boson);
  // l = r' = l' = -r
  CHECK(std::abs(b1.l - h) < 1e-15);
  CHECK(std::abs(b1.rp - h) < 1e-15);
  CHECK(std::abs(b1.lp - h) < 1e-15);
  CHECK(std::abs(b1.r + h) < 1e-15);
}

TEST_CASE("figure presets pair channels with figures") {
  const auto& f = figure_presets();
  REQUIRE(f.size() == 8);
  const ChannelKind expect[] = {ChannelKind::ADC, ChannelKind::ADC, ChannelKind::ADC, ChannelKind::PDC,
                                ChannelKind::PDC, ChannelKind::PDC, ChannelKind::DEP, ChannelKind::DEP};
  for (int i = 0; i < 8; ++i) {
    CHECK(f[i].id == "fig" + std::to_string(i + 2));
    CHECK(f[i].kind == expect[i]);
  }
  CHECK_FALSE(find_figure("fig10").has_value());
  CHECK(find_figure("FIG9")->quantities == std::vector<Quantity>{Quantity::Probability});
  const SweepConfig m = figure_config(*find_figure("fig2"), Regime::Markovian);
  CHECK(m.bath().lambda() == 5.0);
  CHECK(m.t_max == 10.0);
  const SweepConfig nm = figure_config(*find_figure("fig2"), Regime::NonMarkovian);
  CHECK(nm.bath().lambda() == doctest::Approx(0.01));
  CHECK_THROWS_AS(figure_config(*find_figure("fig2"), Regime::Custom), DomainError);
}

TEST_CASE("fig2 shape: monotone decay (Markovian), collapse and revival (non-Markovian)") {
  for (Regime reg : {Regime::Markovian, Regime::NonMarkovian}) {
    const auto rows = parse(csv_of(figure_config(*find_figure("fig2"), reg)));
    std::vector<std::vector<double>> curves(5);
    std::vector<double> is;
    for (const auto& r : rows) {
      if (is.empty() || is.back() != r.i) is.push_back(r.i);
      curves[is.size() - 1].push_back(std::stod(r.c));
    }
    REQUIRE(is.size() == 5);
    for (std::size_t k = 0; k + 1 < is.size(); ++k) {
      INFO("regime " << to_string(reg) << " I=" << is[k]);
      if (reg == Regime::Markovian) {
        CHECK(derivative_sign_changes(curves[k]) == 0);
        CHECK(curves[k].back() < curves[k].front());
      } else {
        CHECK(derivative_sign_changes(curves[k]) >= 2);
      }
    }
    for (double c : curves[4]) CHECK(std::abs(c - 1.0) <= 1e-12);
  }
}

TEST_CASE("fig9: I=1 flat at one half") {
  for (Regime reg : {Regime::Markovian, Regime::NonMarkovian})
    for (const auto& r : parse(csv_of(figure_config(*find_figure("fig9"), reg))))
      if (r.i == 1.0) CHECK(std::abs(std::stod(r.prob) - 0.5) <= 1e-12);
}

TEST_CASE("gnuplot script references every I block") {
  SweepConfig c;
  c.outputs = {Quantity::Concurrence};
  const std::string s = gnuplot_script(c, "data.csv", "t");
  CHECK(s.find("set datafile separator ','") != std::string::npos);
  CHECK(s.find("using 1:6") != std::string::npos);
  CHECK(s.find("I=0.75") != std::string::npos);
  CHECK(s.find("using 1:8") == std::string::npos);
}

TEST_CASE("validate: deterministic and within tolerance") {
  const ValidationReport a = run_validate(42, 100);
  const ValidationReport b = run_validate(42, 100);
  CHECK(a.text() == b.text());
  CHECK(a.passed());
  CHECK(a.max_abs_dc <= 1e-9);
  CHECK(a.max_abs_dp <= 1e-9);
  CHECK(run_validate(7, 50).text() != a.text());
  CHECK_THROWS_AS(run_validate(42, 0), DomainError);
  // an impossible threshold is reported as failure
  CHECK_FALSE(run_validate(42, 20, -1.0).passed());
}

TEST_CASE("names round-trip") {
  for (Regime r : {Regime::Markovian, Regime::NonMarkovian, Regime::Custom}) CHECK(parse_regime(to_string(r)) == r);
  for (Quantity q : {Quantity::Concurrence, Quantity::DeltaC, Quantity::Probability, Quantity::POfT})
    CHECK(parse_quantity(to_string(q)) == q);
  CHECK_FALSE(parse_regime("weird").has_value());
}
