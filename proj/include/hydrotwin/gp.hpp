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

#pragma once

#include <cstdint>
#include <utility>

#include <Eigen/Core>

namespace hydrotwin {

/// Squared-exponential ARD kernel hyperparameters, stored in log space
/// (all quantities strictly positive).
struct GPHyperparameters {
  Eigen::VectorXd log_lengthscales;   // one per input dimension
  double log_signal_variance = 0.0;   // log sigma_f^2
  double log_noise_variance = -4.0;   // log sigma_n^2

  Eigen::VectorXd lengthscales() const {
    return log_lengthscales.array().exp();
  }
  double signal_variance() const;
  double noise_variance() const;

  /// Flattened (log ell_1..d, log sigma_f^2, log sigma_n^2).
  Eigen::VectorXd pack() const;
  static GPHyperparameters unpack(const Eigen::VectorXd& packed, int dims);
};

/// Per-dimension affine standardization x -> (x - mean) / std.
struct Scaler {
  Eigen::VectorXd mean;
  Eigen::VectorXd std;

  Eigen::MatrixXd transform(const Eigen::MatrixXd& x) const;
  static Scaler fit(const Eigen::MatrixXd& x);
};

struct GPFitOptions {
  int restarts = 5;
  int max_iterations = 200;
  double gradient_tolerance = 1e-6;
  std::uint64_t seed = 0;
  int max_training_points = 4000;  // exact inference cap
};

/// K(X, X2) for the SE-ARD kernel:
///   K_ij = sigma_f^2 * exp(-1/2 sum_k ((x_ik - x2_jk)/ell_k)^2)
/// Throws DomainError on input/lengthscale dimension mismatch.
Eigen::MatrixXd kernel_matrix(const Eigen::MatrixXd& x,
                              const Eigen::MatrixXd& x2,
                              const GPHyperparameters& hyper);

/// Log marginal likelihood of (X, y) under the kernel plus noise, and its
/// gradient with respect to the packed log-hyperparameters. Throws
/// ConditioningError if Cholesky fails after the maximum jitter.
std::pair<double, Eigen::VectorXd> log_marginal_likelihood(
    const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
    const GPHyperparameters& hyper);

/// Exact GP regressor: standardized copies of the training data, fitted
/// hyperparameters and the cached Cholesky factorization. Immutable after
/// fitting; safe to share across threads for prediction.
class GPModel {
 public:
  GPModel() = default;

  /// Posterior mean and variance (de-standardized) at query rows.
  /// Variance is of the latent function; tiny negative values from
  /// round-off are clamped to zero.
  std::pair<Eigen::VectorXd, Eigen::VectorXd> predict(
      const Eigen::MatrixXd& queries) const;

  std::pair<double, double> predict_one(const Eigen::RowVectorXd& query) const;

  const GPHyperparameters& hyper() const { return hyper_; }
  const Scaler& input_scaler() const { return input_scaler_; }
  double output_mean() const { return output_mean_; }
  double output_std() const { return output_std_; }
  int dims() const { return static_cast<int>(train_inputs_.cols()); }
  int size() const { return static_cast<int>(train_inputs_.rows()); }
  const Eigen::MatrixXd& train_inputs() const { return train_inputs_; }
  const Eigen::VectorXd& train_targets() const { return train_targets_; }
  const Eigen::MatrixXd& chol_factor() const { return chol_; }

  /// Rebuilds a model from persisted pieces (standardized data + hypers);
  /// refactorizes deterministically.
  static GPModel restore(Eigen::MatrixXd train_inputs,
                         Eigen::VectorXd train_targets,
                         GPHyperparameters hyper, Scaler input_scaler,
                         double output_mean, double output_std);

  friend GPModel fit_gp(const Eigen::MatrixXd&, const Eigen::VectorXd&,
                        const GPFitOptions&);

 private:
  void factorize();

  Eigen::MatrixXd train_inputs_;   // standardized
  Eigen::VectorXd train_targets_;  // standardized
  GPHyperparameters hyper_;
  Scaler input_scaler_;
  double output_mean_ = 0.0;
  double output_std_ = 1.0;
  Eigen::MatrixXd chol_;   // lower factor of K + sigma_n^2 I
  Eigen::VectorXd alpha_;  // (K + sigma_n^2 I)^-1 y
};

/// Fits hyperparameters by maximizing log marginal likelihood with
/// multi-start gradient ascent in log space (deterministic seeded starts,
/// backtracking line search). Throws DomainError for non-finite data or
/// n < 2, ConditioningError on irrecoverable factorization failure.
GPModel fit_gp(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
               const GPFitOptions& opts = {});

}  // namespace hydrotwin
