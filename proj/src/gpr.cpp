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

#include "higp/gpr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "higp/kernels.hpp"

namespace higp {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

}  // namespace

double matern32(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                const Eigen::VectorXd& theta) {
  double s = 0.0, p = 1.0;
  for (int k = 0; k < x.size(); ++k) {
    const double a = kSqrt3 * std::abs(x(k) - y(k)) / theta(k);
    s += a;
    p *= 1.0 + a;
  }
  return p * std::exp(-s);
}

Eigen::VectorXd matern32_grad(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                              const Eigen::VectorXd& theta) {
  const double r = matern32(x, y, theta);
  Eigen::VectorXd g(x.size());
  for (int k = 0; k < x.size(); ++k) {
    const double dx = x(k) - y(k);
    const double a = kSqrt3 * std::abs(dx) / theta(k);
    const double sign = dx > 0.0 ? 1.0 : (dx < 0.0 ? -1.0 : 0.0);
    g(k) = -r * (a / (1.0 + a)) * kSqrt3 * sign / theta(k);
  }
  return g;
}

namespace {

// Correlation matrix from precomputed per-dimension |dx| tables.
Eigen::MatrixXd correlation(const std::vector<Eigen::MatrixXd>& absdiff,
                            const Eigen::VectorXd& theta, double nugget) {
  const int n = static_cast<int>(absdiff.empty() ? 1 : absdiff[0].rows());
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd P = Eigen::MatrixXd::Ones(n, n);
  for (std::size_t k = 0; k < absdiff.size(); ++k) {
    const Eigen::MatrixXd a = (kSqrt3 / theta(k)) * absdiff[k];
    S += a;
    P = P.cwiseProduct(Eigen::MatrixXd::Ones(n, n) + a);
  }
  Eigen::MatrixXd R = P.cwiseProduct((-S).array().exp().matrix());
  R.diagonal().array() += nugget;
  return R;
}

struct ProfileFit {
  double nll = std::numeric_limits<double>::infinity();
  double mu = 0.0;
  Eigen::VectorXd alpha;
  bool ok = false;
};

// Profile restricted log-likelihood with the process variance eliminated:
// nll = (n-1) log s2 + log|R| + log(1' R^-1 1),
// s2 = r' R^-1 r / (n-1), r = y - mu 1.
ProfileFit profile_fit(const Eigen::MatrixXd& R, const Eigen::VectorXd& y) {
  ProfileFit out;
  const int n = static_cast<int>(y.size());
  Eigen::LLT<Eigen::MatrixXd> llt(R);
  if (llt.info() != Eigen::Success) return out;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  const Eigen::VectorXd u = llt.solve(ones);
  const Eigen::VectorXd v = llt.solve(y);
  const double denom = ones.dot(u);
  if (!(denom > 0.0)) return out;
  out.mu = y.dot(u) / denom;
  out.alpha = v - out.mu * u;
  const double s2 =
      std::max((y - out.mu * ones).dot(out.alpha) / std::max(n - 1, 1), 1e-300);
  double logdet = 0.0;
  const auto& L = llt.matrixLLT();
  for (int i = 0; i < n; ++i) logdet += 2.0 * std::log(L(i, i));
  out.nll = std::max(n - 1, 1) * std::log(s2) + logdet + std::log(denom);
  out.ok = std::isfinite(out.nll);
  return out;
}

// Derivative-free compass search in log-theta space.
Eigen::VectorXd compass_search(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& start, double lo, double hi, int max_evals,
    double* best_value) {
  const int dim = static_cast<int>(start.size());
  Eigen::VectorXd x = start;
  double fx = f(x);
  int evals = 1;
  double step = 1.0;  // natural-log units
  while (evals < max_evals && step > 1e-3) {
    bool improved = false;
    for (int k = 0; k < dim && evals < max_evals; ++k) {
      for (double sgn : {+1.0, -1.0}) {
        if (evals >= max_evals) break;
        Eigen::VectorXd cand = x;
        cand(k) = std::clamp(cand(k) + sgn * step, lo, hi);
        if (cand(k) == x(k)) continue;
        const double fc = f(cand);
        ++evals;
        if (fc < fx) {
          x = cand;
          fx = fc;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  if (best_value) *best_value = fx;
  return x;
}

}  // namespace

GprModel GprModel::fit(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                       const GprConfig& cfg) {
  return fit_impl(X, Y, cfg, nullptr, nullptr);
}

GprModel GprModel::fit_fixed_theta(const Eigen::MatrixXd& X,
                                   const Eigen::MatrixXd& Y,
                                   const Eigen::MatrixXd& theta_raw,
                                   const GprConfig& cfg) {
  if (theta_raw.rows() != Y.cols() || theta_raw.cols() != X.cols())
    throw DimensionMismatch("theta_raw must be D x J");
  return fit_impl(X, Y, cfg, &theta_raw, nullptr);
}

GprModel GprModel::fit_warm(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                            const Eigen::MatrixXd& theta_raw_start,
                            const GprConfig& cfg) {
  if (theta_raw_start.rows() != Y.cols() || theta_raw_start.cols() != X.cols())
    throw DimensionMismatch("theta_raw_start must be D x J");
  return fit_impl(X, Y, cfg, nullptr, &theta_raw_start);
}

GprModel GprModel::fit_impl(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                            const GprConfig& cfg,
                            const Eigen::MatrixXd* theta_raw_fixed,
                            const Eigen::MatrixXd* theta_raw_warm) {
  if (X.rows() < 1) throw Error("GprModel: empty training set");
  if (X.rows() != Y.rows()) throw DimensionMismatch("X and Y row counts differ");

  GprModel m;
  m.cfg_ = cfg;
  m.X_ = X;
  m.Y_ = Y;
  const int n = static_cast<int>(X.rows());
  const int J = static_cast<int>(X.cols());
  const int D = static_cast<int>(Y.cols());

  m.x_lo_ = X.colwise().minCoeff();
  m.x_range_ = (X.colwise().maxCoeff() - X.colwise().minCoeff()).cwiseMax(1e-12);
  m.Xn_ = (X.rowwise() - m.x_lo_.transpose()).array().rowwise() /
          m.x_range_.transpose().array();
  m.y_mean_ = Y.colwise().mean();
  m.y_std_.resize(D);
  for (int d = 0; d < D; ++d) {
    const double var =
        (Y.col(d).array() - m.y_mean_(d)).square().sum() / std::max(n - 1, 1);
    m.y_std_(d) = var > 1e-30 ? std::sqrt(var) : 1.0;
  }

  std::vector<Eigen::MatrixXd> absdiff(J);
  for (int k = 0; k < J; ++k) {
    absdiff[k].resize(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        absdiff[k](i, j) = std::abs(m.Xn_(i, k) - m.Xn_(j, k));
  }

  // Inputs closer than 1e-10 (normalized) poison the factorization.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double dist = 0.0;
      for (int k = 0; k < J; ++k) dist += absdiff[k](i, j);
      if (dist < 1e-10)
        throw DuplicateInputs("rows " + std::to_string(i) + " and " +
                              std::to_string(j));
    }

  m.theta_.resize(D, J);
  m.mu_.resize(D);
  m.alpha_.resize(n, D);
  m.nugget_used_ = cfg.nugget;

  const double loglo = std::log(cfg.theta_lo), loghi = std::log(cfg.theta_hi);
  for (int d = 0; d < D; ++d) {
    Eigen::VectorXd yn = (Y.col(d).array() - m.y_mean_(d)) / m.y_std_(d);

    Eigen::VectorXd theta(J);
    if (theta_raw_fixed) {
      theta = theta_raw_fixed->row(d).transpose().cwiseQuotient(m.x_range_);
      theta = theta.cwiseMax(cfg.theta_lo).cwiseMin(cfg.theta_hi);
    } else if (n == 1) {
      theta.setOnes();
    } else {
      const auto objective = [&](const Eigen::VectorXd& logtheta) {
        const Eigen::VectorXd th = logtheta.array().exp();
        return profile_fit(correlation(absdiff, th, cfg.nugget), yn).nll;
      };
      std::vector<Eigen::VectorXd> starts;
      if (theta_raw_warm) {
        Eigen::VectorXd w =
            theta_raw_warm->row(d).transpose().cwiseQuotient(m.x_range_);
        starts.push_back(w.array().max(cfg.theta_lo).min(cfg.theta_hi).log());
      } else {
        // Fixed ladder of equal-scale starting points.
        const double kStartScales[] = {0.03, 0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0};
        const int n_starts = std::max(1, std::min(cfg.n_starts, 8));
        for (int s = 0; s < n_starts; ++s)
          starts.push_back(Eigen::VectorXd::Constant(
              J, std::clamp(std::log(kStartScales[s]), loglo, loghi)));
      }
      double best_nll = std::numeric_limits<double>::infinity();
      Eigen::VectorXd best = Eigen::VectorXd::Zero(J);
      for (const Eigen::VectorXd& x0 : starts) {
        double val = 0.0;
        const Eigen::VectorXd xs =
            compass_search(objective, x0, loglo, loghi, cfg.max_evals, &val);
        if (val < best_nll) {
          best_nll = val;
          best = xs;
        }
      }
      theta = best.array().exp();
    }
    m.theta_.row(d) = theta.transpose();

    // Final factorization with nugget escalation.
    double nugget = cfg.nugget;
    for (;;) {
      const ProfileFit pf = profile_fit(correlation(absdiff, theta, nugget), yn);
      if (pf.ok || n == 1) {
        if (n == 1) {
          m.mu_(d) = yn(0);
          m.alpha_.col(d).setZero();
        } else {
          m.mu_(d) = pf.mu;
          m.alpha_.col(d) = pf.alpha;
        }
        m.nugget_used_ = std::max(m.nugget_used_, nugget);
        break;
      }
      if (nugget >= 1e-6)
        throw IllConditioned("correlation factorization failed at max nugget");
      nugget = std::min(nugget * 10.0, 1e-6);
    }
  }
  return m;
}

Eigen::VectorXd GprModel::predict(const Eigen::VectorXd& x) const {
  if (x.size() != input_dim()) throw DimensionMismatch("query dimension");
  const int n_rows = n();
  const int J = input_dim();
  Eigen::VectorXd xn = (x - x_lo_).cwiseQuotient(x_range_);
  Eigen::VectorXd out(output_dim());

  std::vector<const double*> cols(J);
  for (int k = 0; k < J; ++k) cols[k] = Xn_.col(k).data();
  Eigen::VectorXd row(n_rows);
  Eigen::VectorXd inv_theta(J);
  for (int d = 0; d < output_dim(); ++d) {
    for (int k = 0; k < J; ++k) inv_theta(k) = 1.0 / theta_(d, k);
    kernels::matern32_row(cols.data(), J, n_rows, xn.data(), inv_theta.data(),
                          row.data());
    out(d) = y_mean_(d) + y_std_(d) * (mu_(d) + row.dot(alpha_.col(d)));
  }
  return out;
}

Eigen::MatrixXd GprModel::predict_grad(const Eigen::VectorXd& x) const {
  if (x.size() != input_dim()) throw DimensionMismatch("query dimension");
  const int n_rows = n();
  const int J = input_dim();
  Eigen::VectorXd xn = (x - x_lo_).cwiseQuotient(x_range_);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(output_dim(), J);

  for (int d = 0; d < output_dim(); ++d) {
    const Eigen::VectorXd theta = theta_.row(d).transpose();
    for (int i = 0; i < n_rows; ++i) {
      const double a = alpha_(i, d);
      if (a == 0.0) continue;
      const Eigen::VectorXd gi = matern32_grad(xn, Xn_.row(i).transpose(), theta);
      g.row(d) += a * gi.transpose();
    }
    g.row(d) *= y_std_(d);
  }
  // Chain rule through the input normalization.
  for (int k = 0; k < J; ++k) g.col(k) /= x_range_(k);
  return g;
}

Eigen::MatrixXd GprModel::theta_raw() const {
  Eigen::MatrixXd t = theta_;
  for (int d = 0; d < t.rows(); ++d)
    t.row(d) = t.row(d).cwiseProduct(x_range_.transpose());
  return t;
}

namespace {

void write_matrix(std::ostream& os, const char* tag, const Eigen::MatrixXd& M) {
  os << tag << ' ' << M.rows() << ' ' << M.cols() << '\n';
  os << std::setprecision(17);
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) os << (j ? " " : "") << M(i, j);
    os << '\n';
  }
}

Eigen::MatrixXd read_matrix(std::istream& is, const std::string& expect_tag) {
  std::string tag;
  long rows = 0, cols = 0;
  is >> tag >> rows >> cols;
  if (!is || tag != expect_tag)
    throw IoError("gpr model: expected block '" + expect_tag + "'");
  Eigen::MatrixXd M(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) is >> M(i, j);
  if (!is) throw IoError("gpr model: truncated block '" + expect_tag + "'");
  return M;
}

}  // namespace

void GprModel::save(std::ostream& os) const {
  os << "higp-gpr 1\n";
  os << std::setprecision(17);
  os << "dims " << n() << ' ' << input_dim() << ' ' << output_dim() << '\n';
  os << "nugget " << nugget_used_ << '\n';
  write_matrix(os, "xlo", x_lo_.transpose());
  write_matrix(os, "xrange", x_range_.transpose());
  write_matrix(os, "ymean", y_mean_.transpose());
  write_matrix(os, "ystd", y_std_.transpose());
  write_matrix(os, "theta", theta_);
  write_matrix(os, "mu", mu_.transpose());
  write_matrix(os, "X", X_);
  write_matrix(os, "Y", Y_);
}

GprModel GprModel::load(std::istream& is) {
  std::string magic;
  int version = 0;
  is >> magic >> version;
  if (!is || magic != "higp-gpr" || version != 1)
    throw IoError("gpr model: bad header");
  std::string tag;
  long n = 0, J = 0, D = 0;
  is >> tag >> n >> J >> D;
  if (!is || tag != "dims") throw IoError("gpr model: bad dims");
  GprModel m;
  is >> tag >> m.nugget_used_;
  if (!is || tag != "nugget") throw IoError("gpr model: bad nugget");
  m.x_lo_ = read_matrix(is, "xlo").transpose();
  m.x_range_ = read_matrix(is, "xrange").transpose();
  m.y_mean_ = read_matrix(is, "ymean").transpose();
  m.y_std_ = read_matrix(is, "ystd").transpose();
  m.theta_ = read_matrix(is, "theta");
  m.mu_ = read_matrix(is, "mu").transpose();
  m.X_ = read_matrix(is, "X");
  m.Y_ = read_matrix(is, "Y");
  if (m.X_.rows() != n || m.X_.cols() != J || m.Y_.cols() != D)
    throw IoError("gpr model: inconsistent dimensions");
  m.Xn_ = (m.X_.rowwise() - m.x_lo_.transpose()).array().rowwise() /
          m.x_range_.transpose().array();
  m.factorize();
  return m;
}

void GprModel::factorize() {
  const int n_rows = n();
  const int D = output_dim();
  alpha_.resize(n_rows, D);
  for (int d = 0; d < D; ++d) {
    Eigen::VectorXd yn = (Y_.col(d).array() - y_mean_(d)) / y_std_(d);
    if (n_rows == 1) {
      mu_(d) = yn(0);
      alpha_.col(d).setZero();
      continue;
    }
    Eigen::MatrixXd R(n_rows, n_rows);
    const Eigen::VectorXd theta = theta_.row(d).transpose();
    for (int i = 0; i < n_rows; ++i)
      for (int j = 0; j < n_rows; ++j)
        R(i, j) = matern32(Xn_.row(i).transpose(), Xn_.row(j).transpose(), theta);
    R.diagonal().array() += nugget_used_;
    Eigen::LLT<Eigen::MatrixXd> llt(R);
    if (llt.info() != Eigen::Success)
      throw IllConditioned("stored model failed to refactorize");
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n_rows);
    const Eigen::VectorXd u = llt.solve(ones);
    const Eigen::VectorXd v = llt.solve(yn);
    mu_(d) = yn.dot(u) / ones.dot(u);
    alpha_.col(d) = v - mu_(d) * u;
  }
}

std::vector<int> nearest_rows(const Eigen::MatrixXd& X, const Eigen::VectorXd& x,
                              int n_wanted) {
  const int n = static_cast<int>(X.rows());
  const int J = static_cast<int>(X.cols());
  std::vector<const double*> cols(J);
  for (int k = 0; k < J; ++k) cols[k] = X.col(k).data();
  std::vector<double> d(n);
  kernels::sqdist_batch(cols.data(), J, n, x.data(), d.data());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  const int keep = std::min(n_wanted, n);
  std::partial_sort(idx.begin(), idx.begin() + keep, idx.end(),
                    [&](int a, int b) { return d[a] < d[b] || (d[a] == d[b] && a < b); });
  idx.resize(keep);
  std::sort(idx.begin(), idx.end());
  return idx;
}

GprModel lagpr_local_model(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                           const Eigen::VectorXd& x, const LaGprConfig& lcfg,
                           const GprConfig& gcfg, const Eigen::MatrixXd* theta_raw,
                           Eigen::MatrixXd* warm_theta) {
  if (lcfg.n_inducing < 2) throw ConfigError("n_inducing must be >= 2");
  if (X.rows() < lcfg.n_inducing)
    throw Error("laGPR: fewer training rows than inducing points");
  const std::vector<int> idx = nearest_rows(X, x, lcfg.n_inducing);
  Eigen::MatrixXd Xs(idx.size(), X.cols()), Ys(idx.size(), Y.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    Xs.row(i) = X.row(idx[i]);
    Ys.row(i) = Y.row(idx[i]);
  }
  if (theta_raw) return GprModel::fit_fixed_theta(Xs, Ys, *theta_raw, gcfg);
  if (warm_theta && warm_theta->size() > 0) {
    GprModel m = GprModel::fit_warm(Xs, Ys, *warm_theta, gcfg);
    *warm_theta = m.theta_raw();
    return m;
  }
  GprModel m = GprModel::fit(Xs, Ys, gcfg);
  if (warm_theta) *warm_theta = m.theta_raw();
  return m;
}

Eigen::VectorXd lagpr_predict(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                              const Eigen::VectorXd& x, const LaGprConfig& lcfg,
                              const GprConfig& gcfg, const Eigen::MatrixXd* theta_raw,
                              Eigen::MatrixXd* warm_theta) {
  return lagpr_local_model(X, Y, x, lcfg, gcfg, theta_raw, warm_theta).predict(x);
}

}  // namespace higp
