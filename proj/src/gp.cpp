// Copyright 2026 The Hydrotwin Authors
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

#include "hydrotwin/gp.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "hydrotwin/errors.hpp"
#include "hydrotwin/logging.hpp"

namespace hydrotwin {

namespace {

// Optimizer box in log space (standardized data): wide enough to never
// bind for sensible fits, tight enough to keep line-search iterates finite.
constexpr double kMinLogLengthscale = -6.9077552789821368;   // ln 1e-3
constexpr double kMaxLogLengthscale = 6.9077552789821368;    // ln 1e3
constexpr double kMinLogSignalVar = -18.420680743952367;     // ln 1e-8
constexpr double kMaxLogSignalVar = 9.2103403719761836;      // ln 1e4
constexpr double kMinLogNoiseVar = -23.025850929940457;      // ln 1e-10
constexpr double kMaxLogNoiseVar = 4.6051701859880918;       // ln 1e2

// Jitter escalation policy for failed factorizations, relative to the
// mean diagonal of K + sigma_n^2 I.
constexpr double kJitterStart = 1e-10;
constexpr double kJitterMax = 1e-6;

Eigen::VectorXd clamp_packed(Eigen::VectorXd packed) {
  const int d = static_cast<int>(packed.size()) - 2;
  for (int k = 0; k < d; ++k)
    packed[k] = std::clamp(packed[k], kMinLogLengthscale, kMaxLogLengthscale);
  packed[d] = std::clamp(packed[d], kMinLogSignalVar, kMaxLogSignalVar);
  packed[d + 1] = std::clamp(packed[d + 1], kMinLogNoiseVar, kMaxLogNoiseVar);
  return packed;
}

// Noise-free SE-ARD Gram matrix of x against itself.
Eigen::MatrixXd se_gram(const Eigen::MatrixXd& x,
                        const GPHyperparameters& hyper) {
  return kernel_matrix(x, x, hyper);
}

Eigen::LLT<Eigen::MatrixXd> cholesky_with_jitter(const Eigen::MatrixXd& k) {
  Eigen::LLT<Eigen::MatrixXd> llt(k);
  if (llt.info() == Eigen::Success) return llt;
  const double mean_diag = k.diagonal().mean();
  for (double rel = kJitterStart; rel <= kJitterMax * (1.0 + 1e-12);
       rel *= 10.0) {
    Eigen::MatrixXd jittered = k;
    jittered.diagonal().array() += rel * mean_diag;
    llt.compute(jittered);
    if (llt.info() == Eigen::Success) {
      log_debug("cholesky succeeded with relative jitter " +
                std::to_string(rel));
      return llt;
    }
  }
  throw ConditioningError(
      "cholesky factorization failed after maximum jitter (1e-6 * mean "
      "diagonal)");
}

void check_finite(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
  if (!x.allFinite() || !y.allFinite())
    throw DomainError("training data must be finite");
}

}  // namespace

double GPHyperparameters::signal_variance() const {
  return std::exp(log_signal_variance);
}

double GPHyperparameters::noise_variance() const {
  return std::exp(log_noise_variance);
}

Eigen::VectorXd GPHyperparameters::pack() const {
  const int d = static_cast<int>(log_lengthscales.size());
  Eigen::VectorXd packed(d + 2);
  packed.head(d) = log_lengthscales;
  packed[d] = log_signal_variance;
  packed[d + 1] = log_noise_variance;
  return packed;
}

GPHyperparameters GPHyperparameters::unpack(const Eigen::VectorXd& packed,
                                            int dims) {
  GPHyperparameters hyper;
  hyper.log_lengthscales = packed.head(dims);
  hyper.log_signal_variance = packed[dims];
  hyper.log_noise_variance = packed[dims + 1];
  return hyper;
}

Eigen::MatrixXd Scaler::transform(const Eigen::MatrixXd& x) const {
  return (x.rowwise() - mean.transpose()).array().rowwise() /
         std.transpose().array();
}

Scaler Scaler::fit(const Eigen::MatrixXd& x) {
  Scaler s;
  s.mean = x.colwise().mean();
  Eigen::MatrixXd centered = x.rowwise() - s.mean.transpose();
  s.std = (centered.array().square().colwise().mean()).sqrt();
  for (int k = 0; k < s.std.size(); ++k)
    if (s.std[k] < 1e-12) s.std[k] = 1.0;  // constant column
  return s;
}

Eigen::MatrixXd kernel_matrix(const Eigen::MatrixXd& x,
                              const Eigen::MatrixXd& x2,
                              const GPHyperparameters& hyper) {
  const int d = static_cast<int>(hyper.log_lengthscales.size());
  if (x.cols() != d || x2.cols() != d) {
    throw DomainError("kernel input dimension mismatch: " +
                      std::to_string(x.cols()) + " / " +
                      std::to_string(x2.cols()) + " columns vs " +
                      std::to_string(d) + " lengthscales");
  }
  const Eigen::VectorXd inv_ell = (-hyper.log_lengthscales).array().exp();
  const Eigen::MatrixXd xs = x * inv_ell.asDiagonal();
  const Eigen::MatrixXd x2s = x2 * inv_ell.asDiagonal();
  const Eigen::VectorXd xn = xs.rowwise().squaredNorm();
  const Eigen::VectorXd x2n = x2s.rowwise().squaredNorm();
  Eigen::MatrixXd sq = -2.0 * xs * x2s.transpose();
  sq.colwise() += xn;
  sq.rowwise() += x2n.transpose();
  sq = sq.cwiseMax(0.0);  // guard round-off
  return hyper.signal_variance() * (-0.5 * sq.array()).exp().matrix();
}

std::pair<double, Eigen::VectorXd> log_marginal_likelihood(
    const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
    const GPHyperparameters& hyper) {
  check_finite(x, y);
  if (y.size() != x.rows())
    throw DomainError("target count does not match input rows");
  const int n = static_cast<int>(x.rows());
  const int d = static_cast<int>(x.cols());

  const Eigen::MatrixXd kse = se_gram(x, hyper);
  Eigen::MatrixXd k = kse;
  k.diagonal().array() += hyper.noise_variance();
  const auto llt = cholesky_with_jitter(k);

  const Eigen::VectorXd alpha = llt.solve(y);
  const double half_quad = 0.5 * y.dot(alpha);
  const double log_det =
      llt.matrixLLT().diagonal().array().log().sum();  // sum log L_ii
  const double value =
      -half_quad - log_det - 0.5 * n * std::log(2.0 * std::numbers::pi);

  // d(lml)/d(eta) = 1/2 tr((alpha alpha^T - K^-1) dK/deta)
  Eigen::MatrixXd kinv = llt.solve(Eigen::MatrixXd::Identity(n, n));
  Eigen::MatrixXd a = alpha * alpha.transpose() - kinv;

  Eigen::VectorXd grad(d + 2);
  const Eigen::VectorXd ell = hyper.lengthscales();
  for (int kdim = 0; kdim < d; ++kdim) {
    const Eigen::VectorXd col = x.col(kdim) / ell[kdim];
    // dK/dlog ell_k = Kse .* sq_dist_k
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double diff = col[i] - col[j];
        acc += a(i, j) * kse(i, j) * diff * diff;
      }
    }
    grad[kdim] = 0.5 * acc;
  }
  grad[d] = 0.5 * (a.array() * kse.array()).sum();          // dK/dlog sf2
  grad[d + 1] = 0.5 * hyper.noise_variance() * a.trace();   // dK/dlog sn2
  return {value, grad};
}

void GPModel::factorize() {
  Eigen::MatrixXd k = se_gram(train_inputs_, hyper_);
  k.diagonal().array() += hyper_.noise_variance();
  const auto llt = cholesky_with_jitter(k);
  chol_ = llt.matrixL();
  alpha_ = llt.solve(train_targets_);
}

GPModel GPModel::restore(Eigen::MatrixXd train_inputs,
                         Eigen::VectorXd train_targets,
                         GPHyperparameters hyper, Scaler input_scaler,
                         double output_mean, double output_std) {
  GPModel m;
  m.train_inputs_ = std::move(train_inputs);
  m.train_targets_ = std::move(train_targets);
  m.hyper_ = std::move(hyper);
  m.input_scaler_ = std::move(input_scaler);
  m.output_mean_ = output_mean;
  m.output_std_ = output_std;
  m.factorize();
  return m;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> GPModel::predict(
    const Eigen::MatrixXd& queries) const {
  if (queries.cols() != dims())
    throw DomainError("query dimension " + std::to_string(queries.cols()) +
                      " does not match training dimension " +
                      std::to_string(dims()));
  const Eigen::MatrixXd q = input_scaler_.transform(queries);
  const Eigen::MatrixXd ks = kernel_matrix(train_inputs_, q, hyper_);
  const Eigen::VectorXd mean_std = ks.transpose() * alpha_;

  const Eigen::MatrixXd v =
      chol_.triangularView<Eigen::Lower>().solve(ks);
  Eigen::VectorXd var_std =
      hyper_.signal_variance() - v.colwise().squaredNorm().transpose().array();
  for (int i = 0; i < var_std.size(); ++i) {
    if (var_std[i] < 0.0) {
      if (var_std[i] > -1e-12) {
        log_warn("posterior variance clamped to 0 (round-off " +
                 std::to_string(var_std[i]) + ")");
      } else {
        log_warn("posterior variance unexpectedly negative: " +
                 std::to_string(var_std[i]) + ", clamped to 0");
      }
      var_std[i] = 0.0;
    }
  }
  const double ys2 = output_std_ * output_std_;
  return {mean_std.array() * output_std_ + output_mean_, var_std * ys2};
}

std::pair<double, double> GPModel::predict_one(
    const Eigen::RowVectorXd& query) const {
  const auto [mean, var] = predict(query);
  return {mean[0], var[0]};
}

GPModel fit_gp(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
               const GPFitOptions& opts) {
  check_finite(x, y);
  const int n = static_cast<int>(x.rows());
  const int d = static_cast<int>(x.cols());
  if (n < 2) throw DomainError("fit_gp requires at least 2 training points");
  if (y.size() != n) throw DomainError("target count does not match inputs");
  if (n > opts.max_training_points) {
    throw DomainError("training set of " + std::to_string(n) +
                      " points exceeds the exact-inference cap of " +
                      std::to_string(opts.max_training_points));
  }

  GPModel model;
  model.input_scaler_ = Scaler::fit(x);
  model.train_inputs_ = model.input_scaler_.transform(x);
  model.output_mean_ = y.mean();
  const double ystd =
      std::sqrt((y.array() - model.output_mean_).square().mean());
  model.output_std_ = ystd < 1e-12 ? 1.0 : ystd;
  model.train_targets_ =
      (y.array() - model.output_mean_) / model.output_std_;

  const auto objective = [&](const Eigen::VectorXd& packed) {
    return log_marginal_likelihood(model.train_inputs_, model.train_targets_,
                                   GPHyperparameters::unpack(packed, d));
  };

  // Deterministic start list: one heuristic start plus seeded log-space
  // perturbations.
  std::vector<Eigen::VectorXd> starts;
  {
    Eigen::VectorXd s0(d + 2);
    s0.head(d).setZero();       // ell = 1 in standardized space
    s0[d] = 0.0;                // sigma_f^2 = 1
    s0[d + 1] = std::log(1e-2); // sigma_n^2 = 0.01
    starts.push_back(s0);
    std::mt19937_64 rng(opts.seed * 6364136223846793005ULL + 1442695040888963407ULL);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int r = 1; r < opts.restarts; ++r) {
      Eigen::VectorXd s(d + 2);
      for (int k = 0; k < d; ++k) s[k] = 1.5 * u(rng);
      s[d] = u(rng);
      s[d + 1] = -5.5 + 3.5 * u(rng);  // sigma_n^2 in ~[1e-4, 0.13]
      starts.push_back(s);
    }
  }

  double best_value = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_packed;
  bool any_success = false;

  for (const auto& start : starts) {
    Eigen::VectorXd eta = clamp_packed(start);
    double value;
    Eigen::VectorXd grad;
    try {
      std::tie(value, grad) = objective(eta);
    } catch (const ConditioningError&) {
      continue;
    }
    any_success = true;

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
      if (grad.lpNorm<Eigen::Infinity>() < opts.gradient_tolerance) break;
      const double gnorm2 = grad.squaredNorm();
      double step = 1.0;
      bool accepted = false;
      Eigen::VectorXd eta_next;
      double value_next = 0.0;
      Eigen::VectorXd grad_next;
      while (step > 1e-12) {
        eta_next = clamp_packed(eta + step * grad);
        try {
          std::tie(value_next, grad_next) = objective(eta_next);
          if (value_next >= value + 1e-4 * step * gnorm2) {
            accepted = true;
            break;
          }
        } catch (const ConditioningError&) {
          // treat as rejected step
        }
        step *= 0.5;
      }
      if (!accepted) break;  // line search exhausted: local optimum
      eta = eta_next;
      value = value_next;
      grad = grad_next;
    }

    if (value > best_value) {
      best_value = value;
      best_packed = eta;
    }
  }

  if (!any_success) {
    throw ConditioningError(
        "hyperparameter optimization failed: no start factorized");
  }

  model.hyper_ = GPHyperparameters::unpack(best_packed, d);
  model.factorize();
  return model;
}

}  // namespace hydrotwin
