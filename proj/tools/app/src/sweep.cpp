/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "satcuma_app/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <thread>

#include "satcuma/baselines.hpp"
#include "satcuma/error.hpp"
#include "satcuma/metrics.hpp"
#include "satcuma/montecarlo.hpp"
#include "satcuma/rng.hpp"

namespace satcuma::app {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const std::map<std::string, SweepParam>& param_table() {
  static const std::map<std::string, SweepParam> t = {
      {"mu", SweepParam::kMu},       {"K", SweepParam::kK},
      {"U", SweepParam::kU},         {"B", SweepParam::kB},
      {"gamma", SweepParam::kGamma}, {"W", SweepParam::kW},
      {"threshold", SweepParam::kThreshold}, {"psi_tilde", SweepParam::kPsiTilde}};
  return t;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

int as_int(const std::string& key, double x) {
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-9 || std::abs(r) > 1e9) {
    throw ConfigError(key, "grid value " + std::to_string(x) + " is not an integer");
  }
  return static_cast<int>(r);
}

std::string int_string(int v) { return std::to_string(v); }

std::string double_string(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::pair<std::string, std::string>> parse_overrides(const std::string& key,
                                                                 const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto semi = text.find(';', pos);
    const std::string item = trim(text.substr(pos, semi == std::string::npos ? semi : semi - pos));
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ConfigError(key, "override '" + item + "' is not key=value");
      out.emplace_back(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
    }
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return out;
}

bool is_known_key(const std::string& key) {
  const auto& sk = ScenarioConfig::keys();
  const auto& wk = SweepSpec::sweep_keys();
  return std::find(sk.begin(), sk.end(), key) != sk.end() ||
         std::find(wk.begin(), wk.end(), key) != wk.end();
}

// Everything one grid point needs, resolved from the document.
struct Point {
  Scenario scenario;
  double gamma = 0.35;
  int antennas = 0;
  double epsilon = 7.0;
  double threshold = 1.0;
  std::optional<double> psi_tilde;
  long long trials = 0;
  long long zf_trials = 2000;
  double zf_spread = 0.0;
};

double optional_double(const KeyValueDoc& doc, const char* key, double fallback) {
  return doc.contains(key) ? doc.get_double(key) : fallback;
}

long long optional_int(const KeyValueDoc& doc, const char* key, long long fallback) {
  return doc.contains(key) ? doc.get_int(key) : fallback;
}

Point resolve_point(KeyValueDoc doc, const SeriesSpec* series, SweepParam param, double x) {
  if (series != nullptr) {
    for (const auto& [k, v] : series->overrides) {
      if (!is_known_key(k) || k.rfind("series", 0) == 0 || k == "sweep" || k == "grid" ||
          k == "metrics") {
        throw ConfigError("series." + series->name, "key '" + k + "' cannot be overridden");
      }
      doc.set(k, v);
    }
  }
  std::optional<double> gamma_x;
  std::optional<double> threshold_x;
  std::optional<double> psi_tilde_x;
  switch (param) {
    case SweepParam::kMu: {
      const long long w = optional_int(doc, "W", 2);
      const double k = x * static_cast<double>(w) + 1.0;
      const double r = std::round(k);
      if (std::abs(k - r) > 1e-9) {
        throw ConfigError("grid", "mu = " + double_string(x) + " with W = " + std::to_string(w) +
                                      " gives a non-integer port count");
      }
      doc.set("K", int_string(static_cast<int>(r)));
      break;
    }
    case SweepParam::kK: doc.set("K", int_string(as_int("grid", x))); break;
    case SweepParam::kU: doc.set("U", int_string(as_int("grid", x))); break;
    case SweepParam::kW: doc.set("W", int_string(as_int("grid", x))); break;
    case SweepParam::kB: doc.set("B_hz", double_string(x)); break;
    case SweepParam::kGamma: gamma_x = x; break;
    case SweepParam::kThreshold: threshold_x = x; break;
    case SweepParam::kPsiTilde: psi_tilde_x = x; break;
  }

  Scenario scenario = build_scenario(ScenarioConfig::from_doc(doc, true));
  if (doc.contains("psi_u")) {
    const double psi_u = doc.get_double("psi_u");
    if (!(psi_u > 0.0 && psi_u < kTwoPi)) throw ConfigError("psi_u", "must lie in (0, 2 pi)");
    UserField users = scenario.users;
    users.psi.front() = psi_u;
    scenario = Scenario::assemble(scenario.antenna, scenario.budget, std::move(users), scenario.seed);
  }

  Point p{std::move(scenario), 0.35, 0, 7.0, 1.0, std::nullopt, 0, 2000, 0.0};
  p.gamma = gamma_x.value_or(optional_double(doc, "gamma", 0.35));
  if (!(p.gamma > 0.0)) throw ConfigError("gamma", "threshold must be positive");
  const long long m = optional_int(doc, "M", 3LL * p.scenario.users.users());
  if (m < 1 || m > 4096) throw ConfigError("M", "antenna count must be in [1, 4096]");
  p.antennas = static_cast<int>(m);
  p.epsilon = optional_double(doc, "epsilon", 7.0);
  if (!(p.epsilon > 0.0)) throw ConfigError("epsilon", "must be positive");
  p.threshold = threshold_x.value_or(optional_double(doc, "threshold", 1.0));
  if (psi_tilde_x) {
    p.psi_tilde = psi_tilde_x;
  } else if (doc.contains("psi_tilde")) {
    p.psi_tilde = doc.get_double("psi_tilde");
  }
  p.trials = optional_int(doc, "trials", 0);
  if (p.trials < 0) throw ConfigError("trials", "must be >= 0");
  p.zf_trials = optional_int(doc, "zf_trials", 2000);
  if (p.zf_trials < 1) throw ConfigError("zf_trials", "must be >= 1");
  p.zf_spread = optional_double(doc, "zf_spread", 0.0);
  if (p.zf_spread < 0.0 || p.zf_spread > 2.0) throw ConfigError("zf_spread", "must be in [0, 2]");
  return p;
}

std::string join_warnings(WarningSet w, const std::vector<std::string>& extra) {
  std::string s = w.to_string();
  for (const auto& e : extra) {
    if (!s.empty()) s += '|';
    s += e;
  }
  return s;
}

struct MeanCi {
  double mean = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

MeanCi mean_ci(const std::vector<double>& v) {
  MeanCi r;
  if (v.empty()) return r;
  double sum = 0.0;
  for (double x : v) sum += x;
  const double n = static_cast<double>(v.size());
  r.mean = sum / n;
  double ss = 0.0;
  for (double x : v) ss += (x - r.mean) * (x - r.mean);
  const double se = v.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  r.lo = r.mean - 1.96 * se;
  r.hi = r.mean + 1.96 * se;
  return r;
}

// Evaluates one metric; `batch` is non-null when Monte-Carlo trials were requested.
void evaluate_metric(const std::string& metric, const Point& p, const SinrModel& model,
                     const TrialBatch* batch, std::uint64_t point_seed, SweepRow& row) {
  const Scenario& sc = p.scenario;
  WarningSet w = sc.warnings;
  std::vector<std::string> extra;
  const double bandwidth = sc.budget.bandwidth_hz;
  const int users = sc.users.users();

  auto take = [&](const MetricResult& r) {
    row.value = r.value;
    row.est_error = r.est_error;
    w.merge(r.warnings);
  };
  auto set_ci = [&](const MeanCi& c) {
    row.empirical = c.mean;
    row.ci_lo = c.lo;
    row.ci_hi = c.hi;
  };
  auto set_outage = [&]() {
    if (!batch) return;
    const OutageEstimate e = empirical_outage(batch->sinr, p.gamma);
    row.empirical = e.value;
    row.ci_lo = e.ci_lo;
    row.ci_hi = e.ci_hi;
  };
  auto set_fraction_below = [&](const std::vector<double>& samples, double x) {
    if (!batch || samples.empty()) return;
    const OutageEstimate e = empirical_outage(samples, std::nextafter(x, INFINITY));
    row.empirical = e.value;
    row.ci_lo = e.ci_lo;
    row.ci_hi = e.ci_hi;
  };

  if (metric == "outage_exact") {
    take(outage_exact(p.gamma, model));
    set_outage();
  } else if (metric == "outage_compact") {
    take(outage_compact(p.gamma, model));
    set_outage();
  } else if (metric == "mean_sinr") {
    take(mean_sinr(model));
    if (batch) set_ci(mean_ci(batch->sinr));
  } else if (metric == "mean_snr" || metric == "mean_snr_large_mu") {
    take(metric == "mean_snr" ? mean_snr(model) : mean_snr_large_mu(model));
    if (batch && metric == "mean_snr") {
      std::vector<double> snr(batch->alpha.size());
      for (std::size_t i = 0; i < snr.size(); ++i) {
        snr[i] = 2.0 * model.gamma * batch->alpha[i] / batch->activated[i];
      }
      set_ci(mean_ci(snr));
    }
  } else if (metric == "rate_exact" || metric == "rate_compact") {
    take(ergodic_rate(model, bandwidth, users,
                      metric == "rate_exact" ? OutageForm::kExact : OutageForm::kCompact));
    if (batch) {
      std::vector<double> c(batch->sinr.size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = users * bandwidth * std::log2(1.0 + batch->sinr[i]);
      set_ci(mean_ci(c));
    }
  } else if (metric == "rate_ocuma") {
    take(ocuma_rate(sc));
    if (batch) {
      std::vector<double> c(batch->alpha.size());
      for (std::size_t i = 0; i < c.size(); ++i) {
        const double snr = 2.0 * model.gamma * batch->alpha[i] / batch->activated[i];
        c[i] = bandwidth * std::log2(1.0 + snr);
      }
      set_ci(mean_ci(c));
    }
  } else if (metric == "mrc_sinr") {
    row.value = mrc_sinr(p.antennas, model.zeta_u, model.interferer_zeta, model.gamma);
  } else if (metric == "mrc_snr") {
    row.value = mrc_snr(p.antennas, model.zeta_u, model.gamma);
  } else if (metric == "zf_sinr") {
    const ZfStats st = zf_sinr_mc(p.antennas, sc, p.zf_trials, point_seed,
                                  ZfOptions{.cutoff = 1e-8, .direction_cosine_spread = p.zf_spread});
    row.value = st.mean_sinr;
    row.est_error = std::sqrt(st.variance / static_cast<double>(st.trials));
    if (st.failures > 0) extra.push_back("zf_failures=" + std::to_string(st.failures));
  } else if (metric == "cdf_alpha") {
    const double a = p.threshold * model.alpha_max();
    row.value = signal_cdf(a, model.zeta_u, model.mu(), model.v);
    if (batch) set_fraction_below(batch->alpha, a);
  } else if (metric == "cdf_y") {
    const double zeta = model.has_interference() ? model.interferer_zeta.front() : model.zeta_u;
    const double y = p.threshold * zeta / (model.v * model.v);
    row.value = interference_cdf_per_user(y, zeta, model.v);
    if (batch) set_fraction_below(batch->y, y);
  } else if (metric == "interferer_gain" || metric == "signal_gain" || metric == "suppression") {
    double psi_tilde = 0.0;
    if (p.psi_tilde) {
      psi_tilde = *p.psi_tilde;
    } else if (users >= 2) {
      psi_tilde = sc.users.psi[1];
    } else {
      throw ConfigError("psi_tilde", "needs psi_tilde or at least one interferer");
    }
    const double pt[] = {psi_tilde};
    const BeamformingGains g = cuma_beamforming_gains(sc.antenna, pt, sc.derived.t);
    w.merge(g.warnings);
    row.value = metric == "signal_gain"   ? g.signal_gain
                : metric == "suppression" ? g.suppression.front()
                                          : g.interferer_gains.front();
  } else {
    throw ConfigError("metrics", "unknown metric '" + metric + "'");
  }
  if (batch) {
    const bool degenerate =
        std::any_of(batch->degenerate.begin(), batch->degenerate.end(), [](auto d) { return d != 0; });
    if (degenerate) w.set(Warning::kDegeneratePhase);
  }
  row.warnings = join_warnings(w, extra);
}

struct PointJob {
  const SeriesSpec* series = nullptr;
  double x = 0.0;
  std::size_t index = 0;
};

std::vector<SweepRow> evaluate_point(const SweepSpec& spec, const KeyValueDoc& base,
                                     const PointJob& job, int& failed) {
  const Point p = resolve_point(base, job.series, spec.param, job.x);
  const SinrModel model = make_sinr_model(p.scenario);
  const std::uint64_t point_seed = trial_seed(p.scenario.seed, job.index);
  std::optional<TrialBatch> batch;
  if (p.trials > 0) batch = run_trials(p.scenario, p.trials, point_seed);

  std::vector<SweepRow> rows;
  for (const auto& metric : spec.metrics) {
    SweepRow row;
    row.series = job.series ? job.series->name : "";
    row.param = sweep_param_name(spec.param);
    row.x = job.x;
    row.metric = metric;
    try {
      evaluate_metric(metric, p, model, batch ? &*batch : nullptr, point_seed, row);
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      row.value = std::nan("");
      row.est_error = std::nan("");
      row.empirical.reset();
      row.ci_lo.reset();
      row.ci_hi.reset();
      row.warnings = join_warnings(p.scenario.warnings, {"failed"});
      ++failed;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

SweepParam parse_sweep_param(const std::string& name) {
  const auto it = param_table().find(name);
  if (it == param_table().end()) {
    throw ConfigError("sweep", "unknown parameter '" + name +
                                   "' (expected mu, K, U, B, gamma, W, threshold or psi_tilde)");
  }
  return it->second;
}

std::string sweep_param_name(SweepParam p) {
  for (const auto& [name, value] : param_table()) {
    if (value == p) return name;
  }
  return "?";
}

const std::vector<std::string>& metric_names() {
  static const std::vector<std::string> m = {
      "outage_exact", "outage_compact", "mean_sinr",  "mean_snr",       "mean_snr_large_mu",
      "rate_exact",   "rate_compact",   "rate_ocuma", "mrc_sinr",       "mrc_snr",
      "zf_sinr",      "cdf_alpha",      "cdf_y",      "interferer_gain", "signal_gain",
      "suppression"};
  return m;
}

const std::vector<std::string>& SweepSpec::sweep_keys() {
  static const std::vector<std::string> k = {
      "name",   "sweep",     "grid",      "metrics", "series",    "gamma",    "M",
      "epsilon", "psi_u",    "psi_tilde", "threshold", "trials",  "zf_trials", "zf_spread"};
  return k;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    const KeyValueDoc d = KeyValueDoc::parse("grid = " + [&] {
      std::string s = text;
      std::replace(s.begin(), s.end(), ':', ',');
      return s;
    }());
    const auto parts = d.get_doubles("grid");
    if (parts.size() != 3) throw ConfigError("grid", "range must be start:step:stop");
    const double start = parts[0], step = parts[1], stop = parts[2];
    if (!(step > 0.0) || stop < start) throw ConfigError("grid", "range needs step > 0 and stop >= start");
    const double span = (stop - start) / step;
    const double n = std::round(span);
    if (std::abs(span - n) > 1e-9 * std::max(1.0, span)) {
      throw ConfigError("grid", "stop is not reached by a whole number of steps");
    }
    if (n > 1e6) throw ConfigError("grid", "more than 10^6 points");
    for (long long i = 0; i <= static_cast<long long>(n); ++i) grid.push_back(start + i * step);
    grid.back() = stop;
  } else {
    grid = KeyValueDoc::parse("grid = " + text).get_doubles("grid");
  }
  if (grid.empty()) throw ConfigError("grid", "grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw ConfigError("grid", "grid must be strictly increasing");
  }
  return grid;
}

SweepSpec SweepSpec::from_doc(const KeyValueDoc& doc) {
  for (const auto& [key, value] : doc.entries()) {
    if (key.rfind("series.", 0) == 0) continue;
    if (!is_known_key(key)) throw ConfigError(key, "unknown key");
  }
  SweepSpec s;
  s.name = doc.contains("name") ? doc.at("name") : "sweep";
  s.param = parse_sweep_param(doc.at("sweep"));
  s.grid = parse_grid(doc.at("grid"));
  s.metrics = doc.contains("metrics") ? doc.get_strings("metrics") : std::vector<std::string>{};
  if (s.metrics.empty()) throw ConfigError("metrics", "at least one metric is required");
  for (const auto& m : s.metrics) {
    const auto& known = metric_names();
    if (std::find(known.begin(), known.end(), m) == known.end()) {
      throw ConfigError("metrics", "unknown metric '" + m + "'");
    }
  }
  if (doc.contains("series")) {
    for (const auto& name : doc.get_strings("series")) {
      const std::string key = "series." + name;
      SeriesSpec ser{name, doc.contains(key) ? parse_overrides(key, doc.at(key))
                                             : std::vector<std::pair<std::string, std::string>>{}};
      s.series.push_back(std::move(ser));
    }
  }
  for (const auto& [key, value] : doc.entries()) {
    if (key.rfind("series.", 0) != 0) continue;
    const std::string name = key.substr(7);
    if (std::none_of(s.series.begin(), s.series.end(), [&](const auto& x) { return x.name == name; })) {
      throw ConfigError(key, "series '" + name + "' is not listed in 'series'");
    }
  }
  s.base = doc;
  for (const auto& [key, value] : doc.entries()) {
    if (key.rfind("series", 0) == 0 || key == "sweep" || key == "grid" || key == "metrics" ||
        key == "name") {
      s.base.erase(key);
    }
  }

  // Every point must resolve to a valid scenario.
  std::vector<const SeriesSpec*> series;
  for (const auto& ser : s.series) series.push_back(&ser);
  if (series.empty()) series.push_back(nullptr);
  for (const auto* ser : series) {
    for (double x : s.grid) resolve_point(s.base, ser, s.param, x);
  }
  return s;
}

SweepResult run_sweep(const SweepSpec& spec, const RunOptions& options) {
  KeyValueDoc base = spec.base;
  if (options.trials) base.set("trials", std::to_string(*options.trials));
  if (options.seed) base.set("seed", std::to_string(*options.seed));

  std::vector<PointJob> jobs;
  std::vector<const SeriesSpec*> series;
  for (const auto& ser : spec.series) series.push_back(&ser);
  if (series.empty()) series.push_back(nullptr);
  for (const auto* ser : series) {
    for (double x : spec.grid) jobs.push_back({ser, x, jobs.size()});
  }

  std::vector<std::vector<SweepRow>> rows(jobs.size());
  std::vector<int> failed(jobs.size(), 0);
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        rows[i] = evaluate_point(spec, base, jobs[i], failed[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int workers = std::clamp(options.workers, 1, static_cast<int>(std::max<std::size_t>(1, jobs.size())));
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SweepResult result;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    result.failed_rows += failed[i];
    for (auto& r : rows[i]) result.rows.push_back(std::move(r));
  }
  return result;
}

}  // namespace satcuma::app
