/* Copyright (c) 2026 higp Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>
#include <vector>

#include "higp/errors.hpp"

namespace higp {

/// Matern 3/2 correlation between two points with per-dimension length
/// scales: prod_k (1 + sqrt(3)|dx_k|/theta_k) exp(-sqrt(3)|dx_k|/theta_k).
double matern32(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                const Eigen::VectorXd& theta);

/// Gradient of matern32 with respect to x; zero at x == y.
Eigen::VectorXd matern32_grad(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                              const Eigen::VectorXd& theta);

struct GprConfig {
  double nugget = 1e-10;     // escalated x10 up to 1e-6 on factorization failure
  int n_starts = 8;          // multistart count for the likelihood search
  int max_evals = 200;       // objective evaluations per start
  double theta_lo = 1e-3;    // search box in normalized input units
  double theta_hi = 1e3;
};

/// Interpolating Gaussian-process regressor with independent outputs,
/// constant mean per output and profile-likelihood length-scale fitting.
/// Inputs are normalized to [0,1] per dimension and outputs standardized;
/// both transforms are stored in the model. Fitting is deterministic.
class GprModel {
 public:
  static GprModel fit(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                      const GprConfig& cfg = {});

  /// Fit with length scales supplied in raw input units (no search).
  static GprModel fit_fixed_theta(const Eigen::MatrixXd& X,
                                  const Eigen::MatrixXd& Y,
                                  const Eigen::MatrixXd& theta_raw,
                                  const GprConfig& cfg = {});

  /// Fit with the likelihood search started from the given raw scales
  /// only (warm start; skips the multistart ladder).
  static GprModel fit_warm(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                           const Eigen::MatrixXd& theta_raw_start,
                           const GprConfig& cfg = {});

  Eigen::VectorXd predict(const Eigen::VectorXd& x) const;

  /// D x J matrix of mean-prediction derivatives at x.
  Eigen::MatrixXd predict_grad(const Eigen::VectorXd& x) const;

  int n() const { return static_cast<int>(X_.rows()); }
  int input_dim() const { return static_cast<int>(X_.cols()); }
  int output_dim() const { return static_cast<int>(Y_.cols()); }
  const Eigen::MatrixXd& inputs() const { return X_; }
  const Eigen::MatrixXd& outputs() const { return Y_; }
  double nugget_used() const { return nugget_used_; }

  /// Per-output length scales in raw input units (D x J).
  Eigen::MatrixXd theta_raw() const;

  /// Estimated constant mean per output, in raw output units.
  Eigen::VectorXd gls_mean() const;

  void save(std::ostream& os) const;
  static GprModel load(std::istream& is);

 private:
  GprModel() = default;
  static GprModel fit_impl(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                           const GprConfig& cfg,
                           const Eigen::MatrixXd* theta_raw_fixed,
                           const Eigen::MatrixXd* theta_raw_warm);
  void factorize();

  Eigen::MatrixXd X_, Y_;    // raw training data
  Eigen::MatrixXd Xn_;       // normalized inputs
  Eigen::VectorXd x_lo_, x_range_;
  Eigen::VectorXd y_mean_, y_std_;
  Eigen::MatrixXd theta_;    // D x J, normalized units
  Eigen::VectorXd mu_;       // per-output mean, standardized units
  Eigen::MatrixXd alpha_;    // N x D, R^-1 (y_n - mu 1)
  double nugget_used_ = 0.0;
  GprConfig cfg_;
};

struct LaGprConfig {
  int n_inducing = 60;
  enum class Refit { PerQuery, ReuseGlobalTheta } refit = Refit::PerQuery;
  int n_switch = 400;        // global model below this many rows
  int theta_subsample = 150; // rows for the shared-theta fit
};

/// Local approximate GPR: a model fitted on the n_inducing Euclidean-
/// nearest training rows of the query. theta_raw, when given, skips the
/// per-query likelihood search (ReuseGlobalTheta); warm_theta, when given,
/// seeds the search and receives the fitted scales back.
Eigen::VectorXd lagpr_predict(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                              const Eigen::VectorXd& x, const LaGprConfig& lcfg,
                              const GprConfig& gcfg = {},
                              const Eigen::MatrixXd* theta_raw = nullptr,
                              Eigen::MatrixXd* warm_theta = nullptr);

/// The local model itself, for gradient queries.
GprModel lagpr_local_model(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                           const Eigen::VectorXd& x, const LaGprConfig& lcfg,
                           const GprConfig& gcfg = {},
                           const Eigen::MatrixXd* theta_raw = nullptr,
                           Eigen::MatrixXd* warm_theta = nullptr);

/// Indices of the n nearest rows of X to x (ascending row order).
std::vector<int> nearest_rows(const Eigen::MatrixXd& X, const Eigen::VectorXd& x,
                              int n);

}  // namespace higp
