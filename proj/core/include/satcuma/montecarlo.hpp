/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "satcuma/scenario.hpp"

namespace satcuma {

struct TrialOptions {
  int workers = 1;
  /// Also evaluate the negative in-phase set for every trial.
  bool collect_k2 = false;
};

/// Brute-force port-sum samples, one row per trial. Interference powers are
/// stored row-major, (U - 1) values per trial.
struct TrialBatch {
  long long n_trials = 0;
  std::uint64_t master_seed = 0;
  int users = 1;

  std::vector<double> alpha;
  std::vector<double> y;
  std::vector<double> beta;
  std::vector<double> sinr;
  std::vector<int> activated;
  std::vector<std::uint8_t> degenerate;

  std::vector<double> alpha_k2;  // filled when collect_k2
  std::vector<double> sinr_k2;

  int interferers() const { return users - 1; }
  double y_at(long long trial, int j) const {
    return y[static_cast<std::size_t>(trial) * interferers() + j];
  }
  std::vector<double> y_column(int j) const;
  /// All interferer powers pooled; each is an identically distributed draw.
  const std::vector<double>& y_pooled() const { return y; }
};

/// Reference phases of all users in trial `index`, desired user first. This is
/// exactly the draw run_trials makes.
std::vector<double> trial_phases(std::uint64_t master_seed, long long index, int users);

/// Draws n trials. Trial i uses the stream trial_seed(master_seed, i), so the
/// batch is identical for any worker count.
TrialBatch run_trials(const Scenario& scenario, long long n, std::uint64_t master_seed,
                      const TrialOptions& options = {});

struct Histogram {
  std::vector<double> edges;
  std::vector<long long> counts;

  long long total() const;
  /// Normalized density of bin i (count / (total * width)).
  double density(std::size_t i) const;
};

/// Histogram over [lo, hi]. With `bins` unset the Freedman-Diaconis rule is used.
Histogram make_histogram(std::span<const double> sorted, double lo, double hi,
                         std::optional<int> bins = std::nullopt);

class EmpiricalDist {
 public:
  explicit EmpiricalDist(std::vector<double> samples, std::optional<int> bins = std::nullopt);

  const std::vector<double>& sorted() const { return sorted_; }
  const Histogram& histogram() const { return histogram_; }
  std::size_t size() const { return sorted_.size(); }
  double mean() const { return mean_; }
  double variance() const { return variance_; }
  /// Fraction of samples <= x.
  double cdf(double x) const;

 private:
  std::vector<double> sorted_;
  Histogram histogram_;
  double mean_ = 0.0;
  double variance_ = 0.0;
};

/// Fraction of samples <= each threshold. Throws DomainError on empty input.
std::vector<double> empirical_cdf(std::span<const double> samples, std::span<const double> thresholds);

using CdfFunction = std::function<double(double)>;

/// Two-sided Kolmogorov-Smirnov statistic sup |F_n - F|. `sorted` must be ascending.
double ks_distance_sorted(std::span<const double> sorted, const CdfFunction& cdf);
double ks_distance(std::span<const double> samples, const CdfFunction& cdf);

/// Piecewise-linear table of an expensive monotone CDF on [lo, hi]; 0 below, 1 above.
class TabulatedCdf {
 public:
  TabulatedCdf(const CdfFunction& cdf, double lo, double hi, int points);
  double operator()(double x) const;

 private:
  double lo_;
  double step_;
  std::vector<double> values_;
};

struct OutageEstimate {
  double value = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  long long below = 0;
  long long n = 0;
};

/// Fraction of samples strictly below gamma, with a Wilson 95% interval.
OutageEstimate empirical_outage(std::span<const double> sinr, double gamma);

/// Pearson correlation; 0 when either side is constant.
double correlation(std::span<const double> a, std::span<const double> b);

struct FsdResult {
  bool dominates = true;
  /// max over thresholds of (F_alpha - F_y) / sigma, sigma the binomial error of the difference.
  double worst_z = 0.0;
  double worst_threshold = 0.0;
  int thresholds = 0;
};

/// Checks F_alpha(x) <= F_y(x) + sigmas * sigma(x) on `points` equispaced thresholds
/// spanning both samples.
FsdResult fsd_check(std::span<const double> alpha, std::span<const double> y, int points = 1000,
                    double sigmas = 3.0);

/// Columnar CSV: trial_index, alpha, y_1 .. y_{U-1}, beta, sinr.
void write_batch_csv(std::ostream& out, const TrialBatch& batch);

}  // namespace satcuma
