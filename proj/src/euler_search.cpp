// Copyright 2026 The su2pol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "su2pol/euler_search.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>
#include <vector>

#include "su2pol/errors.hpp"

namespace su2pol {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

struct GridAxes {
  std::vector<double> beta;
  std::vector<double> theta;
  std::vector<double> alpha;
};

GridAxes make_grid(const OptimizerOptions& opts) {
  GridAxes g;
  const auto [nb, nt, na] = opts.grid_counts;
  for (int i = 0; i < nb; ++i) g.beta.push_back(kTwoPi * i / nb);
  for (int j = 0; j < nt; ++j) {
    g.theta.push_back(nt == 1 ? 0.0 : std::numbers::pi * j / (nt - 1));
  }
  for (int k = 0; k < na; ++k) g.alpha.push_back(kTwoPi * k / na);
  return g;
}

struct RefineContext {
  int n_photons;
  const EulerObjective* objective;
};

double gsl_objective(const gsl_vector* x, void* params) {
  const auto* ctx = static_cast<const RefineContext*>(params);
  const double beta = gsl_vector_get(x, 0);
  const double theta = gsl_vector_get(x, 1);
  const double alpha = gsl_vector_get(x, 2);
  return (*ctx->objective)(beta, rotation_matrix(ctx->n_photons, theta), alpha);
}

struct GslVectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct GslMinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

EulerSearchResult nelder_mead(int n_photons, const EulerObjective& objective,
                              const EulerAngles& start,
                              const std::array<double, 3>& step,
                              const OptimizerOptions& opts) {
  RefineContext ctx{n_photons, &objective};
  gsl_multimin_function fn;
  fn.n = 3;
  fn.f = &gsl_objective;
  fn.params = &ctx;

  std::unique_ptr<gsl_vector, GslVectorDeleter> x(gsl_vector_alloc(3));
  std::unique_ptr<gsl_vector, GslVectorDeleter> steps(gsl_vector_alloc(3));
  gsl_vector_set(x.get(), 0, start.beta);
  gsl_vector_set(x.get(), 1, start.theta);
  gsl_vector_set(x.get(), 2, start.alpha);
  for (size_t i = 0; i < 3; ++i) gsl_vector_set(steps.get(), i, step[i]);

  std::unique_ptr<gsl_multimin_fminimizer, GslMinimizerDeleter> minimizer(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 3));
  gsl_multimin_fminimizer_set(minimizer.get(), &fn, x.get(), steps.get());

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    if (gsl_multimin_fminimizer_iterate(minimizer.get()) != GSL_SUCCESS) break;
    const double size = gsl_multimin_fminimizer_size(minimizer.get());
    if (gsl_multimin_test_size(size, opts.refine_tolerance) == GSL_SUCCESS) break;
  }
  const gsl_vector* best = gsl_multimin_fminimizer_x(minimizer.get());
  return {{gsl_vector_get(best, 0), gsl_vector_get(best, 1), gsl_vector_get(best, 2)},
          gsl_multimin_fminimizer_minimum(minimizer.get())};
}

// GSL's default handler aborts; errors here surface as non-success codes.
struct GslHandlerScope {
  GslHandlerScope() : previous(gsl_set_error_handler_off()) {}
  ~GslHandlerScope() { gsl_set_error_handler(previous); }
  gsl_error_handler_t* previous;
};

}  // namespace

void OptimizerOptions::validate() const {
  for (int c : grid_counts) {
    if (c <= 0) throw Error(ErrorCode::kInvalidOptions, "grid counts must be positive");
  }
  if (refine_starts <= 0) {
    throw Error(ErrorCode::kInvalidOptions, "refine_starts must be positive");
  }
  if (!(refine_tolerance > 0.0)) {
    throw Error(ErrorCode::kInvalidOptions, "refine_tolerance must be positive");
  }
  if (max_iterations <= 0) {
    throw Error(ErrorCode::kInvalidOptions, "max_iterations must be positive");
  }
}

Complex euler_matrix_element(const ComplexVector& u, double beta,
                             const RealMatrix& rotation, double alpha,
                             const ComplexVector& v) {
  const Eigen::Index d = v.size();
  const double half_n = 0.5 * static_cast<double>(d - 1);
  ComplexVector right(d);
  for (Eigen::Index n = 0; n < d; ++n) {
    right(n) = std::polar(1.0, -alpha * (static_cast<double>(n) - half_n)) * v(n);
  }
  Complex total = 0.0;
  for (Eigen::Index m = 0; m < d; ++m) {
    Complex row = 0.0;
    for (Eigen::Index n = 0; n < d; ++n) row += rotation(m, n) * right(n);
    total += std::conj(u(m)) *
             std::polar(1.0, -beta * (static_cast<double>(m) - half_n)) * row;
  }
  return total;
}

EulerSearchResult minimize_over_euler_angles(int n_photons,
                                             const EulerObjective& objective,
                                             const OptimizerOptions& opts) {
  opts.validate();
  if (n_photons < 0) throw Error(ErrorCode::kInvalidArgument, "photon number must be >= 0");
  const GridAxes grid = make_grid(opts);
  const auto [nb, nt, na] = opts.grid_counts;
  const auto flat = [&](int i, int j, int k) {
    return (static_cast<size_t>(i) * nt + j) * na + k;
  };

  std::vector<double> values(static_cast<size_t>(nb) * nt * na);
  for (int j = 0; j < nt; ++j) {
    const RealMatrix rotation = rotation_matrix(n_photons, grid.theta[j]);
    for (int i = 0; i < nb; ++i) {
      for (int k = 0; k < na; ++k) {
        values[flat(i, j, k)] = objective(grid.beta[i], rotation, grid.alpha[k]);
      }
    }
  }

  // Flat index order is lexicographic in (beta, theta, alpha), so the
  // index breaks ties.
  std::vector<size_t> order(values.size());
  std::iota(order.begin(), order.end(), size_t{0});
  const size_t starts = std::min(order.size(), static_cast<size_t>(opts.refine_starts));
  std::partial_sort(order.begin(), order.begin() + starts, order.end(),
                    [&](size_t a, size_t b) {
                      return values[a] < values[b] || (values[a] == values[b] && a < b);
                    });

  const auto angles_at = [&](size_t idx) {
    const size_t k = idx % na;
    const size_t j = (idx / na) % nt;
    const size_t i = idx / (static_cast<size_t>(na) * nt);
    return EulerAngles{grid.beta[i], grid.theta[j], grid.alpha[k]};
  };

  EulerSearchResult best{angles_at(order[0]), values[order[0]]};
  const std::array<double, 3> step{
      0.5 * kTwoPi / nb, 0.5 * std::numbers::pi / std::max(nt - 1, 1),
      0.5 * kTwoPi / na};

  GslHandlerScope handler;
  for (size_t s = 0; s < starts; ++s) {
    const EulerSearchResult refined =
        nelder_mead(n_photons, objective, angles_at(order[s]), step, opts);
    if (std::isfinite(refined.value) && refined.value < best.value) best = refined;
  }
  best.angles.beta = wrap_two_pi(best.angles.beta);
  best.angles.alpha = wrap_two_pi(best.angles.alpha);
  return best;
}

}  // namespace su2pol
