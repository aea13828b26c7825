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

#include "idrec/idrec.h"

#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "idrec/entanglement.hpp"
#include "idrec/errors.hpp"
#include "idrec/oracle.hpp"
#include "idrec/sweep.hpp"

struct idrec_spec {
  idrec::DeformationSpec value;
};
struct idrec_bath {
  idrec::LorentzianBath value;
};
struct idrec_sweep {
  idrec::SweepConfig value;
};

namespace {

thread_local std::string g_last_error;

idrec_status fail(idrec_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

struct BadArgument {
  const char* what;
};

template <class F>
idrec_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return IDREC_OK;
  } catch (const BadArgument& e) {
    return fail(IDREC_ERR_INVALID_ARGUMENT, e.what);
  } catch (const idrec::DomainError& e) {
    return fail(IDREC_ERR_DOMAIN, e.what());
  } catch (const idrec::ContractError& e) {
    return fail(IDREC_ERR_CONTRACT, e.what());
  } catch (const idrec::ZeroNormState& e) {
    return fail(IDREC_ERR_ZERO_NORM, e.what());
  } catch (const idrec::PostSelectionImpossible& e) {
    return fail(IDREC_ERR_POSTSELECTION, e.what());
  } catch (const idrec::NumericalError& e) {
    return fail(IDREC_ERR_NUMERICAL, e.what());
  } catch (const idrec::IoError& e) {
    return fail(IDREC_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(IDREC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(IDREC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(IDREC_ERR_INTERNAL, "unknown exception");
  }
}

template <class T>
T& need(T* p, const char* name) {
  if (!p) throw BadArgument{name};
  return *p;
}

const char* need(const char* s, const char* name) {
  if (!s) throw BadArgument{name};
  return s;
}

idrec::ChannelKind channel(idrec_channel c) {
  switch (c) {
    case IDREC_ADC: return idrec::ChannelKind::ADC;
    case IDREC_PDC: return idrec::ChannelKind::PDC;
    case IDREC_DEP: return idrec::ChannelKind::DEP;
  }
  throw BadArgument{"unknown channel"};
}

idrec::Statistics statistics(idrec_statistics s) {
  if (s == IDREC_FERMION) return idrec::Statistics::Fermion;
  if (s == IDREC_BOSON) return idrec::Statistics::Boson;
  throw BadArgument{"unknown statistics"};
}

idrec::Regime regime(idrec_regime r) {
  switch (r) {
    case IDREC_MARKOVIAN: return idrec::Regime::Markovian;
    case IDREC_NONMARKOVIAN: return idrec::Regime::NonMarkovian;
    case IDREC_CUSTOM: return idrec::Regime::Custom;
  }
  throw BadArgument{"unknown regime"};
}

idrec::Complex cx(idrec_complex z) { return {z.re, z.im}; }
idrec_complex cx(idrec::Complex z) { return {z.real(), z.imag()}; }

void copy_out(const std::string& s, char* buf, size_t len, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buf) {
    if (!needed) throw BadArgument{"buffer and size pointer are both NULL"};
    return;
  }
  if (len < s.size() + 1) throw BadArgument{"buffer too small"};
  std::memcpy(buf, s.c_str(), s.size() + 1);
}

idrec_record to_c(const idrec::EvalRecord& r) {
  return {r.p, r.indistinguishability, r.concurrence, r.delta_c, r.probability};
}

}  // namespace

extern "C" {

const char* idrec_last_error(void) { return g_last_error.c_str(); }

const char* idrec_status_string(idrec_status s) {
  switch (s) {
    case IDREC_OK: return "ok";
    case IDREC_ERR_DOMAIN: return "domain error";
    case IDREC_ERR_CONTRACT: return "contract violation";
    case IDREC_ERR_ZERO_NORM: return "zero-norm state";
    case IDREC_ERR_POSTSELECTION: return "post-selection impossible";
    case IDREC_ERR_NUMERICAL: return "numerical failure";
    case IDREC_ERR_IO: return "i/o error";
    case IDREC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case IDREC_ERR_VALIDATION: return "validation failure";
    case IDREC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* idrec_version(void) { return "0.1.0"; }

idrec_status idrec_parse_channel(const char* name, idrec_channel* out) {
  return guard([&] {
    const auto k = idrec::parse_channel(need(name, "name"));
    if (!k) throw idrec::DomainError(std::string("unknown channel '") + name + "' (ADC, PDC, DEP)");
    need(out, "out") = static_cast<idrec_channel>(static_cast<int>(*k));
  });
}

idrec_status idrec_parse_statistics(const char* name, idrec_statistics* out) {
  return guard([&] {
    const std::string s = need(name, "name");
    if (s == "fermion" || s == "fermions" || s == "f")
      need(out, "out") = IDREC_FERMION;
    else if (s == "boson" || s == "bosons" || s == "b")
      need(out, "out") = IDREC_BOSON;
    else
      throw idrec::DomainError("unknown statistics '" + s + "' (fermion, boson)");
  });
}

idrec_status idrec_parse_regime(const char* name, idrec_regime* out) {
  return guard([&] {
    const auto r = idrec::parse_regime(need(name, "name"));
    if (!r)
      throw idrec::DomainError(std::string("unknown regime '") + name +
                               "' (markovian, nonmarkovian, custom)");
    need(out, "out") = static_cast<idrec_regime>(static_cast<int>(*r));
  });
}

const char* idrec_channel_name(idrec_channel c) {
  switch (c) {
    case IDREC_ADC: return "ADC";
    case IDREC_PDC: return "PDC";
    case IDREC_DEP: return "DEP";
  }
  return "?";
}

const char* idrec_statistics_name(idrec_statistics s) {
  return s == IDREC_BOSON ? "boson" : s == IDREC_FERMION ? "fermion" : "?";
}

idrec_status idrec_spec_create(idrec_complex l, idrec_complex r, idrec_complex lp,
                               idrec_complex rp, idrec_statistics stats, idrec_spec** out) {
  return guard([&] {
    need(out, "out") = nullptr;
    *out = new idrec_spec{
        idrec::DeformationSpec::make(cx(l), cx(r), cx(lp), cx(rp), statistics(stats))};
  });
}

idrec_status idrec_spec_from_target(double target_i, idrec_statistics stats, idrec_spec** out) {
  return guard([&] {
    need(out, "out") = nullptr;
    *out = new idrec_spec{idrec::spec_for_target_i(target_i, statistics(stats))};
  });
}

idrec_status idrec_spec_preset(double target_i, idrec_statistics stats, idrec_spec** out) {
  return guard([&] {
    need(out, "out") = nullptr;
    *out = new idrec_spec{idrec::preset_spec(target_i, statistics(stats))};
  });
}

idrec_status idrec_spec_dual(const idrec_spec* spec, idrec_spec** out) {
  return guard([&] {
    need(out, "out") = nullptr;
    *out = new idrec_spec{idrec::statistics_dual(need(spec, "spec").value)};
  });
}

void idrec_spec_destroy(idrec_spec* spec) { delete spec; }

idrec_status idrec_spec_indistinguishability(const idrec_spec* spec, double* out) {
  return guard([&] { need(out, "out") = idrec::indistinguishability(need(spec, "spec").value); });
}

idrec_status idrec_spec_coefficients(const idrec_spec* spec, idrec_complex out[4],
                                     idrec_statistics* stats) {
  return guard([&] {
    const auto& s = need(spec, "spec").value;
    need(out, "out");
    out[0] = cx(s.l);
    out[1] = cx(s.r);
    out[2] = cx(s.lp);
    out[3] = cx(s.rp);
    if (stats) *stats = static_cast<idrec_statistics>(static_cast<int>(s.stats));
  });
}

idrec_status idrec_bath_create(double gamma, double lambda, idrec_bath** out) {
  return guard([&] {
    need(out, "out") = nullptr;
    *out = new idrec_bath{idrec::LorentzianBath(gamma, lambda)};
  });
}

idrec_status idrec_bath_preset(idrec_regime r, double gamma, idrec_bath** out) {
  return guard([&] {
    need(out, "out") = nullptr;
    switch (regime(r)) {
      case idrec::Regime::Markovian: *out = new idrec_bath{idrec::LorentzianBath::markovian(gamma)}; break;
      case idrec::Regime::NonMarkovian:
        *out = new idrec_bath{idrec::LorentzianBath::non_markovian(gamma)};
        break;
      case idrec::Regime::Custom: throw BadArgument{"custom regime needs idrec_bath_create"};
    }
  });
}

void idrec_bath_destroy(idrec_bath* bath) { delete bath; }

idrec_status idrec_p_analytic(const idrec_bath* bath, double gamma_t, double* out) {
  return guard([&] {
    const auto& b = need(bath, "bath").value;
    need(out, "out") = idrec::p_analytic(gamma_t / b.gamma(), b);
  });
}

idrec_status idrec_p_numeric(const idrec_bath* bath, double gamma_t, double* out) {
  return guard([&] {
    const auto& b = need(bath, "bath").value;
    need(out, "out") = idrec::p_numeric(gamma_t / b.gamma(), b);
  });
}

idrec_status idrec_concurrence(idrec_channel c, const idrec_spec* spec, double p, double* out) {
  return guard(
      [&] { need(out, "out") = idrec::concurrence_closed(channel(c), need(spec, "spec").value, p); });
}

idrec_status idrec_delta_c(idrec_channel c, const idrec_spec* spec, double p, double* out) {
  return guard([&] { need(out, "out") = idrec::delta_c(channel(c), need(spec, "spec").value, p); });
}

idrec_status idrec_success_probability(idrec_channel c, const idrec_spec* spec, double p,
                                       double* out) {
  return guard([&] {
    need(out, "out") = idrec::success_probability_closed(channel(c), need(spec, "spec").value, p);
  });
}

idrec_status idrec_c_infinity(idrec_channel c, const idrec_spec* spec, double* out) {
  return guard([&] { need(out, "out") = idrec::c_infinity(channel(c), need(spec, "spec").value); });
}

idrec_status idrec_pipeline(idrec_channel c, const idrec_spec* spec, double p, double* concurrence,
                            double* probability, idrec_complex* rho_lr) {
  return guard([&] {
    const auto r = idrec::run_pipeline(channel(c), need(spec, "spec").value, p);
    if (concurrence) *concurrence = r.concurrence;
    if (probability) *probability = r.probability;
    if (rho_lr)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rho_lr[4 * i + j] = cx(r.rho_lr(i, j));
  });
}

idrec_status idrec_oracle(idrec_channel c, const idrec_spec* spec, double p, double* concurrence,
                          double* probability) {
  return guard([&] {
    const auto r = idrec::oracle::pipeline_at_p(channel(c), p, need(spec, "spec").value);
    if (concurrence) *concurrence = r.concurrence;
    if (probability) *probability = r.probability;
  });
}

idrec_status idrec_eval(idrec_channel c, const idrec_bath* bath, double gamma_t,
                        const idrec_spec* spec, idrec_record* out) {
  return guard([&] {
    need(out, "out") =
        to_c(idrec::run_eval(channel(c), need(bath, "bath").value, gamma_t, need(spec, "spec").value));
  });
}

idrec_status idrec_eval_at_p(idrec_channel c, double p, const idrec_spec* spec, idrec_record* out) {
  return guard(
      [&] { need(out, "out") = to_c(idrec::evaluate_at_p(channel(c), p, need(spec, "spec").value)); });
}

idrec_status idrec_record_format(const idrec_record* r, char* buf, size_t len, size_t* needed) {
  return guard([&] {
    const auto& x = need(r, "record");
    copy_out(idrec::format_record({x.p, x.indistinguishability, x.concurrence, x.delta_c,
                                   x.probability}),
             buf, len, needed);
  });
}

idrec_status idrec_sweep_create(idrec_sweep** out) {
  return guard([&] {
    need(out, "out") = nullptr;
    *out = new idrec_sweep{};
  });
}

void idrec_sweep_destroy(idrec_sweep* sweep) { delete sweep; }

idrec_status idrec_sweep_set_channel(idrec_sweep* s, idrec_channel c) {
  return guard([&] { need(s, "sweep").value.kind = channel(c); });
}

idrec_status idrec_sweep_set_bath(idrec_sweep* s, idrec_regime r, double gamma, double lambda) {
  return guard([&] {
    auto& v = need(s, "sweep").value;
    auto copy = v;
    copy.regime = regime(r);
    copy.gamma = gamma;
    copy.lambda = lambda;
    (void)copy.bath();  // throws on bad parameters
    v = copy;
  });
}

idrec_status idrec_sweep_set_statistics(idrec_sweep* s, idrec_statistics stats) {
  return guard([&] { need(s, "sweep").value.stats = statistics(stats); });
}

idrec_status idrec_sweep_set_i_values(idrec_sweep* s, const double* values, size_t n) {
  return guard([&] {
    auto& v = need(s, "sweep").value;
    if (n && !values) throw BadArgument{"values"};
    for (size_t k = 0; k < n; ++k)
      if (!(values[k] >= 0.0 && values[k] <= 1.0))
        throw idrec::DomainError("I values must lie in [0,1]");
    v.i_values.assign(values, values + n);
  });
}

idrec_status idrec_sweep_set_time_grid(idrec_sweep* s, double t_max, int n_points) {
  return guard([&] {
    auto& v = need(s, "sweep").value;
    if (n_points < 2) throw idrec::DomainError("sweep needs at least 2 time points");
    if (!(t_max > 0.0)) throw idrec::DomainError("t_max must be positive");
    v.t_max = t_max;
    v.n_points = n_points;
  });
}

idrec_status idrec_sweep_set_outputs(idrec_sweep* s, unsigned flags) {
  return guard([&] {
    auto& v = need(s, "sweep").value;
    if (flags & ~unsigned(IDREC_OUT_ALL)) throw BadArgument{"unknown output flag"};
    v.outputs.clear();
    if (flags & IDREC_OUT_CONCURRENCE) v.outputs.push_back(idrec::Quantity::Concurrence);
    if (flags & IDREC_OUT_DELTA_C) v.outputs.push_back(idrec::Quantity::DeltaC);
    if (flags & IDREC_OUT_PROBABILITY) v.outputs.push_back(idrec::Quantity::Probability);
    if (flags & IDREC_OUT_P_OF_T) v.outputs.push_back(idrec::Quantity::POfT);
  });
}

idrec_status idrec_sweep_set_threads(idrec_sweep* s, unsigned threads) {
  return guard([&] { need(s, "sweep").value.threads = threads; });
}

idrec_status idrec_sweep_from_figure(const char* id, idrec_regime r, idrec_sweep** out) {
  return guard([&] {
    need(out, "out") = nullptr;
    const auto f = idrec::find_figure(need(id, "id"));
    if (!f) throw idrec::DomainError(std::string("unknown figure '") + id + "' (fig2..fig9)");
    *out = new idrec_sweep{idrec::figure_config(*f, regime(r))};
  });
}

idrec_status idrec_sweep_write_csv(const idrec_sweep* s, const char* path) {
  return guard([&] { idrec::run_sweep(need(s, "sweep").value, need(path, "path")); });
}

idrec_status idrec_sweep_write_gnuplot(const idrec_sweep* s, const char* csv_path, const char* title,
                                       const char* script_path) {
  return guard([&] {
    const std::string text =
        idrec::gnuplot_script(need(s, "sweep").value, need(csv_path, "csv_path"), title ? title : "");
    std::ofstream f(need(script_path, "script_path"), std::ios::binary | std::ios::trunc);
    if (!f) throw idrec::IoError(std::string("cannot open ") + script_path + " for writing");
    f << text;
    f.close();
    if (!f) throw idrec::IoError(std::string("failed writing ") + script_path);
  });
}

size_t idrec_figure_count(void) { return idrec::figure_presets().size(); }

const char* idrec_figure_id(size_t index) {
  const auto& f = idrec::figure_presets();
  return index < f.size() ? f[index].id.c_str() : nullptr;
}

const char* idrec_figure_title(size_t index) {
  const auto& f = idrec::figure_presets();
  return index < f.size() ? f[index].title.c_str() : nullptr;
}

idrec_status idrec_validate(uint64_t seed, int cases, double threshold, idrec_validation* out) {
  bool passed = true;
  const idrec_status st = guard([&] {
    need(out, "out");
    const auto r = idrec::run_validate(seed, cases, threshold);
    *out = {r.seed, r.cases, r.failures, r.worst_case, r.threshold, r.max_abs_dc, r.max_abs_dp};
    passed = r.passed();
  });
  if (st != IDREC_OK) return st;
  if (!passed) return fail(IDREC_ERR_VALIDATION, "oracle deviation above threshold");
  return IDREC_OK;
}

idrec_status idrec_validation_format(const idrec_validation* v, char* buf, size_t len,
                                     size_t* needed) {
  return guard([&] {
    const auto& x = need(v, "validation");
    idrec::ValidationReport r;
    r.seed = x.seed;
    r.cases = x.cases;
    r.failures = x.failures;
    r.worst_case = x.worst_case;
    r.threshold = x.threshold;
    r.max_abs_dc = x.max_abs_dc;
    r.max_abs_dp = x.max_abs_dp;
    copy_out(r.text(), buf, len, needed);
  });
}

}  // extern "C"
