/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "satcuma/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

#include "satcuma/cuma.hpp"
#include "satcuma/error.hpp"
#include "satcuma/rng.hpp"

namespace satcuma {

namespace {

void draw_phases(std::uint64_t master_seed, long long index, std::span<double> psi) {
  SplitMix64 rng(trial_seed(master_seed, static_cast<std::uint64_t>(index)));
  for (auto& p : psi) p = rng.phase();
}

void run_range(const Scenario& sc, const PortTable& table, const TrialOptions& opt,
               TrialBatch& b, long long begin, long long end) {
  const int users = sc.users.users();
  const int m = users - 1;
  const double two_gamma = 2.0 * sc.derived.gamma;
  const auto& zeta = sc.users.zeta;
  std::vector<double> psi(static_cast<std::size_t>(users));
  for (long long i = begin; i < end; ++i) {
    draw_phases(b.master_seed, i, psi);
    const auto idx = static_cast<std::size_t>(i);

    const PortTable::Sums k1 = table.sums(psi[0]);
    const double a = k1.amplitude(psi[0]);
    b.alpha[idx] = zeta[0] * a * a;
    double beta = 0.0;
    for (int j = 0; j < m; ++j) {
      const double s = k1.amplitude(psi[j + 1]);
      const double yj = zeta[j + 1] * s * s;
      b.y[idx * m + j] = yj;
      beta += yj;
    }
    b.beta[idx] = beta;
    b.activated[idx] = k1.count;
    b.degenerate[idx] = k1.degenerate ? 1 : 0;
    b.sinr[idx] = b.alpha[idx] / (beta + k1.count / two_gamma);

    if (opt.collect_k2) {
      const PortTable::Sums k2 = table.sums(psi[0], PortSetKind::kNegativeInPhase);
      const double a2 = k2.amplitude(psi[0]);
      double beta2 = 0.0;
      for (int j = 0; j < m; ++j) {
        const double s = k2.amplitude(psi[j + 1]);
        beta2 += zeta[j + 1] * s * s;
      }
      b.alpha_k2[idx] = zeta[0] * a2 * a2;
      b.sinr_k2[idx] = b.alpha_k2[idx] / (beta2 + k2.count / two_gamma);
    }
  }
}

}  // namespace

std::vector<double> trial_phases(std::uint64_t master_seed, long long index, int users) {
  std::vector<double> psi(static_cast<std::size_t>(users));
  draw_phases(master_seed, index, psi);
  return psi;
}

std::vector<double> TrialBatch::y_column(int j) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_trials));
  for (long long i = 0; i < n_trials; ++i) out.push_back(y_at(i, j));
  return out;
}

TrialBatch run_trials(const Scenario& scenario, long long n, std::uint64_t master_seed,
                      const TrialOptions& options) {
  if (n < 1) throw DomainError("run_trials: n must be >= 1");
  if (options.workers < 1) throw DomainError("run_trials: workers must be >= 1");
  TrialBatch b;
  b.n_trials = n;
  b.master_seed = master_seed;
  b.users = scenario.users.users();
  const auto rows = static_cast<std::size_t>(n);
  b.alpha.resize(rows);
  b.y.resize(rows * static_cast<std::size_t>(b.interferers()));
  b.beta.resize(rows);
  b.sinr.resize(rows);
  b.activated.resize(rows);
  b.degenerate.resize(rows);
  if (options.collect_k2) {
    b.alpha_k2.resize(rows);
    b.sinr_k2.resize(rows);
  }

  const PortTable table(scenario.antenna);
  const long long workers = std::min<long long>(options.workers, n);
  if (workers == 1) {
    run_range(scenario, table, options, b, 0, n);
    return b;
  }
  // Each worker fills a disjoint contiguous block; no shared mutable state.
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (long long w = 0; w < workers; ++w) {
    const long long begin = n * w / workers;
    const long long end = n * (w + 1) / workers;
    pool.emplace_back([&, begin, end] { run_range(scenario, table, options, b, begin, end); });
  }
  return b;
}

long long Histogram::total() const {
  long long t = 0;
  for (long long c : counts) t += c;
  return t;
}

double Histogram::density(std::size_t i) const {
  const long long t = total();
  const double width = edges[i + 1] - edges[i];
  return t > 0 && width > 0.0 ? static_cast<double>(counts[i]) / (static_cast<double>(t) * width) : 0.0;
}

Histogram make_histogram(std::span<const double> sorted, double lo, double hi,
                         std::optional<int> bins) {
  if (sorted.empty()) throw DomainError("make_histogram: empty sample");
  if (!(hi > lo)) hi = lo + 1.0;
  int nb = 1;
  if (bins) {
    if (*bins < 1) throw DomainError("make_histogram: bins must be >= 1");
    nb = *bins;
  } else {
    const auto q = [&](double p) {
      return sorted[static_cast<std::size_t>(p * static_cast<double>(sorted.size() - 1))];
    };
    const double iqr = q(0.75) - q(0.25);
    const double width = 2.0 * iqr / std::cbrt(static_cast<double>(sorted.size()));
    nb = width > 0.0 ? static_cast<int>(std::clamp(std::ceil((hi - lo) / width), 1.0, 1e6)) : 1;
  }
  Histogram h;
  h.edges.resize(static_cast<std::size_t>(nb) + 1);
  for (int i = 0; i <= nb; ++i) h.edges[i] = lo + (hi - lo) * i / nb;
  h.counts.assign(static_cast<std::size_t>(nb), 0);
  for (double x : sorted) {
    if (x < lo || x > hi) continue;
    auto i = static_cast<long long>((x - lo) / (hi - lo) * nb);
    h.counts[static_cast<std::size_t>(std::clamp<long long>(i, 0, nb - 1))] += 1;
  }
  return h;
}

EmpiricalDist::EmpiricalDist(std::vector<double> samples, std::optional<int> bins)
    : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw DomainError("EmpiricalDist: empty sample");
  std::sort(sorted_.begin(), sorted_.end());
  histogram_ = make_histogram(sorted_, sorted_.front(), sorted_.back(), bins);
  double s = 0.0;
  for (double x : sorted_) s += x;
  mean_ = s / static_cast<double>(sorted_.size());
  double ss = 0.0;
  for (double x : sorted_) ss += (x - mean_) * (x - mean_);
  variance_ = sorted_.size() > 1 ? ss / static_cast<double>(sorted_.size() - 1) : 0.0;
}

double EmpiricalDist::cdf(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

std::vector<double> empirical_cdf(std::span<const double> samples,
                                  std::span<const double> thresholds) {
  if (samples.empty()) throw DomainError("empirical_cdf: empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> out;
  out.reserve(thresholds.size());
  for (double t : thresholds) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), t);
    out.push_back(static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size()));
  }
  return out;
}

double ks_distance_sorted(std::span<const double> sorted, const CdfFunction& cdf) {
  if (sorted.empty()) throw DomainError("ks_distance: empty sample");
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_distance(std::span<const double> samples, const CdfFunction& cdf) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  return ks_distance_sorted(sorted, cdf);
}

TabulatedCdf::TabulatedCdf(const CdfFunction& cdf, double lo, double hi, int points)
    : lo_(lo), step_((hi - lo) / std::max(1, points - 1)) {
  if (points < 2 || !(hi > lo)) throw DomainError("TabulatedCdf: need points >= 2 and hi > lo");
  values_.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) values_.push_back(cdf(lo + step_ * i));
}

double TabulatedCdf::operator()(double x) const {
  if (x <= lo_) return values_.front() * (x == lo_ ? 1.0 : 0.0);
  const double pos = (x - lo_) / step_;
  const auto i = static_cast<std::size_t>(pos);
  if (i + 1 >= values_.size()) return 1.0;
  const double w = pos - static_cast<double>(i);
  return values_[i] + w * (values_[i + 1] - values_[i]);
}

OutageEstimate empirical_outage(std::span<const double> sinr, double gamma) {
  if (sinr.empty()) throw DomainError("empirical_outage: empty sample");
  if (!(gamma > 0.0)) throw DomainError("empirical_outage: threshold must be positive");
  OutageEstimate e;
  e.n = static_cast<long long>(sinr.size());
  for (double s : sinr) e.below += s < gamma ? 1 : 0;
  const auto n = static_cast<double>(e.n);
  const double p = static_cast<double>(e.below) / n;
  constexpr double z = 1.959963984540054;
  const double denom = 1.0 + z * z / n;
  const double centre = (p + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
  e.value = p;
  e.ci_lo = std::max(0.0, centre - half);
  e.ci_hi = std::min(1.0, centre + half);
  return e;
}

double correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) throw DomainError("correlation: size mismatch or empty");
  const auto n = static_cast<double>(a.size());
  double ma = 0.0;
  double mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

FsdResult fsd_check(std::span<const double> alpha, std::span<const double> y, int points,
                    double sigmas) {
  if (alpha.empty() || y.empty()) throw DomainError("fsd_check: empty sample");
  if (points < 2) throw DomainError("fsd_check: points must be >= 2");
  const auto [amin, amax] = std::minmax_element(alpha.begin(), alpha.end());
  const auto [ymin, ymax] = std::minmax_element(y.begin(), y.end());
  const double lo = std::min(*amin, *ymin);
  const double hi = std::max(*amax, *ymax);
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid[i] = lo + (hi - lo) * i / (points - 1);
  const auto fa = empirical_cdf(alpha, grid);
  const auto fy = empirical_cdf(y, grid);
  const auto na = static_cast<double>(alpha.size());
  const auto ny = static_cast<double>(y.size());
  FsdResult r;
  r.thresholds = points;
  r.worst_z = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double diff = fa[i] - fy[i];
    const double sigma =
        std::sqrt(fa[i] * (1.0 - fa[i]) / na + fy[i] * (1.0 - fy[i]) / ny);
    // Where both CDFs are 0 or 1 the difference is exact.
    const double z = sigma > 0.0 ? diff / sigma : (diff > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    if (z > r.worst_z) {
      r.worst_z = z;
      r.worst_threshold = grid[i];
    }
  }
  r.dominates = r.worst_z <= sigmas;
  return r;
}

void write_batch_csv(std::ostream& out, const TrialBatch& batch) {
  out << "trial_index,alpha";
  for (int j = 1; j <= batch.interferers(); ++j) out << ",y_" << j;
  out << ",beta,sinr\n";
  const auto old_precision = out.precision(12);
  for (long long i = 0; i < batch.n_trials; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out << i << ',' << batch.alpha[idx];
    for (int j = 0; j < batch.interferers(); ++j) out << ',' << batch.y_at(i, j);
    out << ',' << batch.beta[idx] << ',' << batch.sinr[idx] << '\n';
  }
  out.precision(old_precision);
}

}  // namespace satcuma
