#pragma once

#include <span>
#include <string>
#include <vector>

#include "it2mabac/fuzzy.hpp"
#include "it2mabac/matrix.hpp"

namespace it2mabac {

/// Per-expert criteria weights: weights[k][j] is expert k's weight for
/// criterion j.
struct ExpertWeightSet {
  std::vector<std::string> experts;
  std::vector<std::vector<IT2TrFN>> weights;
};

/// Per-expert p x q rating matrices.
struct ExpertRatingSet {
  std::vector<std::string> experts;
  std::vector<Matrix<IT2TrFN>> ratings;
};

/// Exponents of the geometric Bonferroni mean. r, s >= 0 and r + s > 0.
struct BonferroniParams {
  double r = 1.0;
  double s = 1.0;

  /// InvalidParams when the constraints above do not hold.
  void validate() const;
};

/// Endpoint-wise average over experts, heights min-combined.
std::vector<IT2TrFN> average_weights(const ExpertWeightSet& ws);
Matrix<IT2TrFN> average_ratings(const ExpertRatingSet& rs);

/// Plain average of K values: (v1 + ... + vK) scaled by 1/K.
IT2TrFN average(std::span<const IT2TrFN> values);

/// Geometric Bonferroni mean of n >= 2 non-negative values. For each of the
/// eight endpoint positions e:
///
///   out_e = 1/(r+s) * prod_{i != j} (r * x_ie + s * x_je) ^ (1 / (n (n-1)))
///
/// Heights are the per-level minimum over the inputs.
IT2TrFN tit2fgbm(std::span<const IT2TrFN> values, const BonferroniParams& params = {});

/// Endpoint-wise geometric mean of n >= 1 non-negative values.
IT2TrFN geometric_mean(std::span<const IT2TrFN> values);

}  // namespace it2mabac
