#include "bmfd/lda.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "bmfd/error.hpp"

namespace bmfd {

HoldoutSplit holdout_split(const FeatureMatrix& features, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "hold-out fraction must lie in (0, 1)");
  }
  const int classes = features.class_count();
  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(std::max(classes, 0)));
  for (std::size_t i = 0; i < features.size(); ++i) {
    members[static_cast<std::size_t>(features.rows()[i].class_id)].push_back(i);
  }

  std::mt19937_64 rng(seed);
  std::vector<bool> to_train(features.size(), false);
  for (int c = 0; c < classes; ++c) {
    auto& idx = members[static_cast<std::size_t>(c)];
    if (idx.size() < 2) {
      throw Error(ErrorCode::ClassTooSmall, "class " + std::to_string(c) + " has " +
                                                std::to_string(idx.size()) +
                                                " samples; hold-out needs at least 2");
    }
    // Fisher-Yates with explicit draws; std::shuffle's sequence is
    // implementation-defined.
    for (std::size_t i = idx.size() - 1; i > 0; --i) {
      const auto j = static_cast<std::size_t>(rng() % (i + 1));
      std::swap(idx[i], idx[j]);
    }
    const auto n = idx.size();
    const auto wanted = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n)));
    const auto n_train = std::clamp<std::size_t>(wanted, 1, n - 1);
    for (std::size_t k = 0; k < n_train; ++k) to_train[idx[k]] = true;
  }

  std::vector<FeatureRow> train;
  std::vector<FeatureRow> test;
  for (std::size_t i = 0; i < features.size(); ++i) {
    (to_train[i] ? train : test).push_back(features.rows()[i]);
  }
  return HoldoutSplit{FeatureMatrix(std::move(train)), FeatureMatrix(std::move(test))};
}

LdaModel lda_fit(const FeatureMatrix& train, double ridge_factor) {
  if (!(ridge_factor >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "ridge factor must be >= 0");
  }
  const int classes = train.class_count();
  const auto d = static_cast<Eigen::Index>(train.dimension());
  if (classes < 2) throw Error(ErrorCode::InvalidArgument, "LDA needs at least 2 classes");

  Eigen::MatrixXd means = Eigen::MatrixXd::Zero(classes, d);
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(classes);
  for (const auto& row : train.rows()) {
    means.row(row.class_id) += Eigen::Map<const Eigen::RowVectorXd>(row.values.data(), d);
    counts(row.class_id) += 1.0;
  }
  for (int c = 0; c < classes; ++c) {
    if (counts(c) == 0.0) {
      throw Error(ErrorCode::ClassTooSmall, "class " + std::to_string(c) + " has no training samples");
    }
    means.row(c) /= counts(c);
  }

  Eigen::MatrixXd scatter = Eigen::MatrixXd::Zero(d, d);
  for (const auto& row : train.rows()) {
    const Eigen::VectorXd centered =
        Eigen::Map<const Eigen::VectorXd>(row.values.data(), d) - means.row(row.class_id).transpose();
    scatter.selfadjointView<Eigen::Lower>().rankUpdate(centered);
  }
  scatter = scatter.selfadjointView<Eigen::Lower>();

  const auto dof = static_cast<double>(train.size()) - classes;
  if (dof <= 0.0) {
    throw Error(ErrorCode::SingularCovariance,
                "no within-class degrees of freedom (one training sample per class)");
  }
  LdaModel model;
  model.pooled_covariance = scatter / dof;
  model.ridge = ridge_factor * model.pooled_covariance.trace() / static_cast<double>(d);
  model.pooled_covariance.diagonal().array() += model.ridge;

  const Eigen::LLT<Eigen::MatrixXd> llt(model.pooled_covariance);
  const double tiny = static_cast<double>(d) * std::numeric_limits<double>::epsilon();
  if (llt.info() != Eigen::Success || !(llt.rcond() > tiny)) {
    throw Error(ErrorCode::SingularCovariance,
                "pooled covariance is not invertible (rcond " +
                    std::to_string(llt.info() == Eigen::Success ? llt.rcond() : 0.0) +
                    "); increase ridge_factor");
  }

  model.class_means = std::move(means);
  model.priors = counts / counts.sum();
  model.whitening = llt.matrixL().solve(Eigen::MatrixXd::Identity(d, d));
  model.whitened_means = model.class_means * model.whitening.transpose();
  model.log_priors = model.priors.array().log();
  return model;
}

int lda_predict_one(const LdaModel& model, const std::vector<double>& x) {
  if (x.size() != model.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "feature dimension " + std::to_string(x.size()) +
                                                  " does not match model dimension " +
                                                  std::to_string(model.dimension()));
  }
  const Eigen::Map<const Eigen::VectorXd> v(x.data(), static_cast<Eigen::Index>(x.size()));
  const Eigen::RowVectorXd z = (model.whitening * v).transpose();
  int best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (int c = 0; c < model.class_count(); ++c) {
    const double score = -0.5 * (z - model.whitened_means.row(c)).squaredNorm() + model.log_priors(c);
    if (score > best_score) {
      best = c;
      best_score = score;
    }
  }
  return best;
}

std::vector<int> lda_predict(const LdaModel& model, const FeatureMatrix& features) {
  std::vector<int> out;
  out.reserve(features.size());
  for (const auto& row : features.rows()) out.push_back(lda_predict_one(model, row.values));
  return out;
}

}  // namespace bmfd
