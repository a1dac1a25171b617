/*
 * Copyright 2026 The snt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace snt {

/// Default tolerance for approximate equalities; min/max/threshold-based
/// identities are asserted exactly (tolerance 0).
inline constexpr double kDefaultTolerance = 1e-9;

namespace detail {

/// Uniform axis over [0,1] with round(1/step) intervals, generated symmetric
/// about 1/2: the upper half is k*step, the lower half the mirror 1 - x.
/// Invariant: the axis is closed under x -> 1-x, exactly (fl(1-a) is again an
/// axis member for every member a). 0 and 1 are always members.
inline std::vector<double> symmetric_axis(double step) {
  const auto m = static_cast<std::size_t>(std::llround(1.0 / step));
  std::vector<double> pts(m + 1);
  pts.front() = 0.0;
  pts.back() = 1.0;
  for (std::size_t k = m - m / 2; k < m; ++k) {
    pts[k] = static_cast<double>(k) * step;
  }
  if (m % 2 == 0 && m >= 2) {
    pts[m / 2] = 0.5;
  }
  for (std::size_t k = 1; k < m - m / 2; ++k) {
    pts[k] = 1.0 - pts[m - k];
  }
  return pts;
}

}  // namespace detail

/// Deterministic sample points for falsification scans: the symmetric uniform
/// grid, caller-supplied critical points (0 and 1 always included), and a
/// fixed-seed batch of random singles/pairs/triples appended as whole tuples.
/// Identical parameters always yield identical samples; in particular the
/// random tuples do not depend on the critical points.
class SampleSet {
 public:
  struct Params {
    double grid_step = 0.01;          ///< 2-variable scans: 101 points per axis
    double triple_grid_step = 0.05;   ///< 3-variable scans: 21 points per axis
    int random_count = 256;
    std::uint64_t seed = 42;
    std::vector<double> critical_points;
  };

  SampleSet() : SampleSet(Params{}) {}

  explicit SampleSet(Params params) : params_(std::move(params)) {
    check_step(params_.grid_step, "grid_step");
    check_step(params_.triple_grid_step, "triple_grid_step");
    if (params_.random_count < 0) {
      throw std::invalid_argument("SampleSet: random_count must be >= 0");
    }
    for (double c : params_.critical_points) {
      if (!(c >= 0.0 && c <= 1.0)) {
        throw std::invalid_argument("SampleSet: critical points must lie in [0,1]");
      }
    }
    axis_ = merge(detail::symmetric_axis(params_.grid_step), params_.critical_points);
    triple_axis_ =
        merge(detail::symmetric_axis(params_.triple_grid_step), params_.critical_points);

    std::mt19937_64 rng(params_.seed);
    // (rng() >> 11) * 2^-53 is uniform on [0,1) and identical on every
    // platform, unlike uniform_real_distribution.
    auto u01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const auto n = static_cast<std::size_t>(params_.random_count);
    random_points_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) random_points_.push_back(u01());
    random_pairs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) random_pairs_.push_back({u01(), u01()});
    random_triples_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) random_triples_.push_back({u01(), u01(), u01()});
  }

  /// Same parameters plus extra critical points (e.g. a crisp negation's
  /// threshold and its +-1e-6 neighbours).
  SampleSet with_extra_critical(std::span<const double> pts) const {
    if (pts.empty()) return *this;
    Params p = params_;
    p.critical_points.insert(p.critical_points.end(), pts.begin(), pts.end());
    return SampleSet(std::move(p));
  }

  const Params& params() const { return params_; }

  /// Sorted, duplicate-free per-axis points for 1- and 2-variable scans.
  const std::vector<double>& axis() const { return axis_; }

  /// Coarser per-axis points for 3-variable scans.
  const std::vector<double>& triple_axis() const { return triple_axis_; }

  const std::vector<double>& random_points() const { return random_points_; }
  const std::vector<std::array<double, 2>>& random_pairs() const { return random_pairs_; }
  const std::vector<std::array<double, 3>>& random_triples() const { return random_triples_; }

 private:
  static void check_step(double step, const char* name) {
    if (!(step > 0.0) || step > 0.5) {
      throw std::invalid_argument(std::string("SampleSet: ") + name +
                                  " must be in (0, 0.5]");
    }
  }

  static std::vector<double> merge(std::vector<double> base,
                                   const std::vector<double>& extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    return base;
  }

  Params params_;
  std::vector<double> axis_;
  std::vector<double> triple_axis_;
  std::vector<double> random_points_;
  std::vector<std::array<double, 2>> random_pairs_;
  std::vector<std::array<double, 3>> random_triples_;
};

/// The plain uniform grid used for CSV tables: same symmetric construction,
/// no critical or random points.
inline std::vector<double> uniform_axis(double step) {
  if (!(step > 0.0) || step > 0.5) {
    throw std::invalid_argument("uniform_axis: step must be in (0, 0.5]");
  }
  return detail::symmetric_axis(step);
}

}  // namespace snt
