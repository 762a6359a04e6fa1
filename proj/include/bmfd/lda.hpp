#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bmfd/features.hpp"

namespace bmfd {

struct HoldoutSplit {
  FeatureMatrix train;
  FeatureMatrix test;
};

/// Stratified hold-out: each class sends floor(fraction * n_c) samples,
/// clamped to [1, n_c - 1], to training and the rest to testing. Selection
/// is a Fisher-Yates shuffle driven by a 64-bit Mersenne Twister seeded with
/// `seed`; both halves keep the input row order.
HoldoutSplit holdout_split(const FeatureMatrix& features, double fraction, std::uint64_t seed);

/// Linear discriminant model with a pooled within-class covariance.
struct LdaModel {
  Eigen::MatrixXd class_means;        // C x d
  Eigen::MatrixXd pooled_covariance;  // d x d, ridge included
  Eigen::VectorXd priors;             // C
  double ridge = 0.0;                 // absolute ridge added to the diagonal

  // With Sigma = L L^T and z = L^-1 x, the linear discriminant
  //   x' Sigma^-1 mu_c - mu_c' Sigma^-1 mu_c / 2 + log prior_c
  // equals -|z - L^-1 mu_c|^2 / 2 + log prior_c up to a term shared by all
  // classes. The distance form keeps symmetric ties exact.
  Eigen::MatrixXd whitening;       // L^-1, d x d
  Eigen::MatrixXd whitened_means;  // C x d
  Eigen::VectorXd log_priors;      // C

  int class_count() const noexcept { return static_cast<int>(class_means.rows()); }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(class_means.cols()); }
};

/// Fits class means, empirical priors and the pooled covariance
/// S_w / (n - C) + ridge_factor * trace(S_w / (n - C)) / d * I.
/// Throws SingularCovariance when the regularized matrix is not safely
/// invertible.
LdaModel lda_fit(const FeatureMatrix& train, double ridge_factor);

/// Arg-max of the linear discriminants; ties go to the lowest class id.
std::vector<int> lda_predict(const LdaModel& model, const FeatureMatrix& features);
int lda_predict_one(const LdaModel& model, const std::vector<double>& x);

}  // namespace bmfd
