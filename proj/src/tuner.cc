// Copyright 2026 The crossgame Authors.
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

#include "crossgame/tuner.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace crossgame {
namespace {

void CheckMuL(double mu, double L) {
  if (!std::isfinite(mu) || !std::isfinite(L) || !(mu > 0.0) || !(mu <= L)) {
    throw std::invalid_argument("need 0 < mu <= L");
  }
}

std::vector<double> Axis(double lo, double hi, double step) {
  if (!(step > 0.0) || !(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("grid axis needs lo <= hi and step > 0");
  }
  const long n = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(n);
  for (long i = 0; i < n; ++i) {
    // Snap to the decimal grid so 0.005 + 5 * 0.001 reads back as 0.01.
    out.push_back(std::round((lo + i * step) * 1e12) / 1e12);
  }
  return out;
}

}  // namespace

Hyperparams OptimalEgm(double mu, double L, double c) {
  CheckMuL(mu, L);
  if (!std::isfinite(c) || !(c >= 0.0)) throw std::invalid_argument("need c >= 0");
  const double sum = mu + L;
  const double s = std::sqrt(4.0 * c * c + sum * sum);
  const double q = std::sqrt(4.0 * mu * L);
  const double ratio = (s - q) / (s + q);
  return Hyperparams{16.0 * sum / ((s + q) * (s + q)), 1.0 / sum, ratio * ratio};
}

Hyperparams OptimalEgmEqualLength(double mu, double L) {
  CheckMuL(mu, L);
  const double sum = mu + L;
  const double r = std::sqrt(mu * mu + L * L);
  const double q = std::sqrt(2.0 * mu * L);
  const double ratio = (r - q) / (r + q);
  return Hyperparams{8.0 * sum / ((r + q) * (r + q)), 1.0 / sum, ratio * ratio};
}

RateExpansion EgmRateExpansion(double mu, double L, double c) {
  const Hyperparams p = OptimalEgm(mu, L, c);
  RateExpansion e;
  e.tau = mu / L;
  e.exact = AsymptoticRate(p.m);
  const double shape = 2.0 * c / L;
  e.first_order = 1.0 - 2.0 * std::sqrt(e.tau) / std::sqrt(shape * shape + 1.0);
  e.applicable = e.tau < 1.0;
  return e;
}

double GdTheoryStep(const Spectrum& s) { return Extremes(s).min_re_inv; }

RateReport GdRateBound(const Spectrum& s) {
  const SpectralExtremes e = Extremes(s);
  RateReport r;
  r.method = Method::kGd;
  r.rho_squared = std::max(0.0, 1.0 - e.min_re_inv * e.min_re);
  r.per_iter_bound = std::sqrt(r.rho_squared);
  r.per_eval_bound = r.per_iter_bound;
  r.tau = e.tau;
  r.notes = "h = min Re(1/lambda); rho^2 <= 1 - min Re(1/lambda) min Re(lambda)";
  return r;
}

double EgTheoryStep(const Spectrum& s) { return 1.0 / (4.0 * Extremes(s).max_abs); }

double EgEqualLengthRhoSquared(double mu, double L) {
  CheckMuL(mu, L);
  const double second = L >= (std::sqrt(2.0) + 1.0) * mu
                            ? mu * mu / (16.0 * L * L)
                            : (L - mu) * (L - mu) / (16.0 * L * L);
  return 1.0 - 0.25 * (mu / L + second);
}

EgRateBounds EgRateBound(const Spectrum& s, const std::optional<SpectrumModel>& cross) {
  const SpectralExtremes e = Extremes(s);
  EgRateBounds out;
  RateReport& r = out.general;
  r.method = Method::kEg;
  r.rho_squared = std::max(
      0.0, 1.0 - 0.25 * (e.min_re / e.max_abs + e.min_abs_sq / (e.max_abs * e.max_abs)));
  r.per_iter_bound = std::sqrt(r.rho_squared);
  r.per_eval_bound = std::sqrt(r.per_iter_bound);
  r.tau = e.tau;
  r.notes = "h = 1/(4 max|lambda|); rho^2 <= 1 - (min Re/max|.| + min|.|^2/max|.|^2)/4";
  if (cross) {
    const double half = (cross->L - cross->mu) / 2.0;
    if (std::abs(cross->c - half) <= 1e-12 * std::max(1.0, half)) {
      out.equal_length_rho_squared = EgEqualLengthRhoSquared(cross->mu, cross->L);
    }
  }
  return out;
}

GdmRate GdmRateBound(double tau, double theta) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("gdm rate needs tau in (0, 1)");
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("gdm rate needs theta > 0");
  }
  if (theta > 0.5) return {1.0 - 2.0 * std::sqrt(tau), "theta>1/2"};
  if (theta == 0.5) {
    return {1.0 - 2.0 * (std::sqrt(2.0) - 1.0) * std::sqrt(tau), "theta=1/2"};
  }
  return {1.0 - std::pow(tau, 1.0 - theta), "theta<1/2"};
}

bool GdmAccelerationThreshold(double mu, double L) {
  CheckMuL(mu, L);
  // Note: (L - mu)/2 > sqrt(mu L) itself only holds once L/mu > 3 + 2 sqrt 2;
  // sqrt(5) is the published (weaker) threshold and is what is reported here.
  return L / mu > std::sqrt(5.0);
}

std::vector<double> GridSpec::HValues() const { return Axis(h_lo, h_hi, h_step); }
std::vector<double> GridSpec::MValues() const { return Axis(m_lo, m_hi, m_step); }

GridSpec DefaultGdmGrid() { return {0.005, 0.015, 1e-3, 0.01, 0.99, 1e-2}; }
GridSpec DefaultGdGrid() { return {0.005, 0.015, 1e-3, 0.0, 0.0, 1.0}; }
GridSpec DefaultEgGrid() { return {0.001, 0.05, 1e-4, 0.0, 0.0, 1.0}; }

GridSpec DefaultGrid(Method method) {
  switch (method) {
    case Method::kGd:
      return DefaultGdGrid();
    case Method::kGdm:
      return DefaultGdmGrid();
    case Method::kEg:
      return DefaultEgGrid();
    case Method::kEgm:
      break;
  }
  throw std::invalid_argument("no default grid for egm (it has closed-form parameters)");
}

GridResult GridSearch(const QuadraticGame& game, Method method, const GridSpec& spec,
                      int iters, int threads) {
  return GridSearchFrom(game, method, spec, iters, Vector(game.dim()), threads);
}

GridResult GridSearchFrom(const QuadraticGame& game, Method method,
                          const GridSpec& spec, int iters, const Vector& w0,
                          int threads) {
  if (method == Method::kEgm) {
    throw std::invalid_argument("grid search supports gd, gdm and eg");
  }
  if (iters < 1) throw std::invalid_argument("iters must be >= 1");
  const std::vector<double> hs = spec.HValues();
  const std::vector<double> ms =
      method == Method::kGdm ? spec.MValues() : std::vector<double>{0.0};

  std::vector<Hyperparams> candidates;
  candidates.reserve(hs.size() * ms.size());
  for (double h : hs) {
    for (double m : ms) {
      const double gamma = method == Method::kEg ? h : 0.0;
      candidates.push_back({h, gamma, m});
    }
  }

  const double kNotRun = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> finals(candidates.size(), kNotRun);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      const RunTrace trace = RunOnGame(game, method, candidates[i], w0, iters);
      if (!trace.diverged) finals[i] = trace.distances.back();
    }
  };
  int n_threads = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
  n_threads = std::clamp<int>(n_threads, 1, static_cast<int>(candidates.size()));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }

  // Candidates are ordered by h, then m, so a strict comparison in index
  // order realizes the tie-break.
  GridResult result;
  result.candidates = static_cast<int>(candidates.size());
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (std::isnan(finals[i])) {
      ++result.diverged;
      continue;
    }
    if (!best || finals[i] < finals[*best]) best = i;
  }
  if (!best) throw std::runtime_error("grid search: every candidate diverged");
  result.best = candidates[*best];
  result.final_distance = finals[*best];
  return result;
}

}  // namespace crossgame
