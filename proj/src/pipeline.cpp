#include "it2mabac/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "it2mabac/error.hpp"

namespace it2mabac {

std::string_view to_string(BaaOperator op) {
  return op == BaaOperator::Bonferroni ? "bonferroni" : "geomean";
}

BaaOperator parse_baa_operator(std::string_view name) {
  if (name == "bonferroni") return BaaOperator::Bonferroni;
  if (name == "geomean") return BaaOperator::GeometricMean;
  throw Error(ErrorCode::InvalidParams,
              fmt::format("unknown BAA operator '{}' (expected bonferroni or geomean)", name));
}

void PipelineParams::validate() const {
  rank.validate();
  bonferroni.validate();
}

std::string_view to_string(Area a) {
  switch (a) {
    case Area::Upper: return "UAA";
    case Area::Border: return "BAA";
    case Area::Lower: return "LAA";
  }
  return "?";
}

ColumnRange column_range(const Matrix<IT2TrFN>& avg, std::size_t j) {
  if (avg.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "no alternatives");
  if (j >= avg.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("column {} out of range ({} columns)", j, avg.cols()));
  }
  ColumnRange r{avg(0, j).upper().a1(), avg(0, j).upper().a4()};
  for (std::size_t i = 1; i < avg.rows(); ++i) {
    r.a_minus = std::min(r.a_minus, avg(i, j).upper().a1());
    r.a_plus = std::max(r.a_plus, avg(i, j).upper().a4());
  }
  if (r.a_plus == r.a_minus) {
    throw Error(ErrorCode::DegenerateRange,
                fmt::format("column {} is constant ({}); its range is zero", j, r.a_plus));
  }
  return r;
}

Matrix<IT2TrFN> normalize(const Matrix<IT2TrFN>& avg, const std::vector<CriterionSpec>& specs) {
  if (specs.size() != avg.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("{} criteria declared for a matrix with {} columns", specs.size(),
                            avg.cols()));
  }
  Matrix<IT2TrFN> out(avg.rows(), avg.cols());
  for (std::size_t j = 0; j < avg.cols(); ++j) {
    ColumnRange range;
    try {
      range = column_range(avg, j);
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("criterion '{}': {}", specs[j].name, e.detail()));
    }
    const double width = range.width();
    const bool cost = specs[j].sense == CriterionSense::Cost;
    auto map_level = [&](const GeneralizedTrapezoid& t) {
      GeneralizedTrapezoid n;
      n.height = t.height;
      for (std::size_t k = 0; k < 4; ++k) {
        n.points[k] = cost ? (range.a_plus - t.points[3 - k]) / width
                           : (t.points[k] - range.a_minus) / width;
      }
      return n;
    };
    for (std::size_t i = 0; i < avg.rows(); ++i) {
      out(i, j) = IT2TrFN::unchecked(map_level(avg(i, j).upper()), map_level(avg(i, j).lower()));
    }
  }
  return out;
}

Matrix<IT2TrFN> weight(const Matrix<IT2TrFN>& normalized, const std::vector<IT2TrFN>& weights) {
  if (weights.size() != normalized.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("{} weights for {} criteria", weights.size(), normalized.cols()));
  }
  const IT2TrFN unit = IT2TrFN::one();
  Matrix<IT2TrFN> out(normalized.rows(), normalized.cols());
  for (std::size_t i = 0; i < normalized.rows(); ++i) {
    for (std::size_t j = 0; j < normalized.cols(); ++j) {
      out(i, j) = mul(weights[j], add(normalized(i, j), unit));
    }
  }
  return out;
}

std::vector<IT2TrFN> baa(const Matrix<IT2TrFN>& weighted, const PipelineParams& params) {
  if (weighted.rows() < 2) {
    throw Error(ErrorCode::TooFewValues,
                fmt::format("border approximation needs at least 2 alternatives, got {}",
                            weighted.rows()));
  }
  std::vector<IT2TrFN> out;
  out.reserve(weighted.cols());
  for (std::size_t j = 0; j < weighted.cols(); ++j) {
    const auto column = weighted.column(j);
    out.push_back(params.baa == BaaOperator::Bonferroni ? tit2fgbm(column, params.bonferroni)
                                                        : geometric_mean(column));
  }
  return out;
}

CrispMatrices crisp_matrices(const Matrix<IT2TrFN>& weighted, const std::vector<IT2TrFN>& border,
                             const RankParams& params) {
  if (border.size() != weighted.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("{} border values for {} criteria", border.size(), weighted.cols()));
  }
  CrispMatrices cm;
  cm.q = Matrix<double>(weighted.rows(), weighted.cols());
  cm.delta = Matrix<double>(weighted.rows(), weighted.cols());
  cm.g.reserve(border.size());
  for (const auto& g : border) cm.g.push_back(std::abs(rank_to_one(g, params)));
  for (std::size_t i = 0; i < weighted.rows(); ++i) {
    for (std::size_t j = 0; j < weighted.cols(); ++j) {
      cm.q(i, j) = std::abs(rank_to_one(weighted(i, j), params));
      cm.delta(i, j) = cm.q(i, j) - cm.g[j];
    }
  }
  return cm;
}

RankingResult classify_and_score(const CrispMatrices& cm) {
  const auto& delta = cm.delta;
  RankingResult r;
  r.classification = Matrix<Area>(delta.rows(), delta.cols(), Area::Border);
  r.scores.assign(delta.rows(), 0.0);
  for (std::size_t i = 0; i < delta.rows(); ++i) {
    for (std::size_t j = 0; j < delta.cols(); ++j) {
      const double d = delta(i, j);
      r.classification(i, j) =
          std::abs(d) < kTolerance ? Area::Border : (d > 0 ? Area::Upper : Area::Lower);
      r.scores[i] += d;
    }
  }
  r.order.resize(delta.rows());
  std::iota(r.order.begin(), r.order.end(), std::size_t{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](std::size_t a, std::size_t b) { return r.scores[a] > r.scores[b]; });
  return r;
}

namespace {

template <class F>
auto stage(std::string_view label, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", label, e.detail()));
  }
}

}  // namespace

PipelineTrace run_pipeline(const ExpertWeightSet& weights, const ExpertRatingSet& ratings,
                           const std::vector<CriterionSpec>& criteria,
                           const PipelineParams& params) {
  params.validate();
  PipelineTrace t;
  t.aggregated_weights = stage("Step 1 (aggregate weights)", [&] { return average_weights(weights); });
  t.aggregated_decisions =
      stage("Step 2 (aggregate ratings)", [&] { return average_ratings(ratings); });
  t.normalized = stage("Step 3 (normalize)", [&] { return normalize(t.aggregated_decisions, criteria); });
  t.weighted = stage("Step 4 (weight)", [&] { return weight(t.normalized, t.aggregated_weights); });
  t.border = stage("Step 5 (border approximation area)", [&] { return baa(t.weighted, params); });
  t.crisp = stage("Step 6 (distance matrices)",
                  [&] { return crisp_matrices(t.weighted, t.border, params.rank); });
  t.ranking = stage("Step 7 (rank)", [&] { return classify_and_score(t.crisp); });
  return t;
}

}  // namespace it2mabac
