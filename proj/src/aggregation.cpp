#include "it2mabac/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "it2mabac/error.hpp"

namespace it2mabac {

void BonferroniParams::validate() const {
  if (!(r >= 0.0) || !(s >= 0.0) || !std::isfinite(r) || !std::isfinite(s)) {
    throw Error(ErrorCode::InvalidParams,
                fmt::format("Bonferroni exponents must be finite and non-negative (r = {}, s = {})", r, s));
  }
  if (!(r + s > 0.0)) {
    throw Error(ErrorCode::InvalidParams, "Bonferroni exponents must satisfy r + s > 0");
  }
}

IT2TrFN average(std::span<const IT2TrFN> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "cannot average zero values");
  IT2TrFN sum = values.front();
  for (std::size_t k = 1; k < values.size(); ++k) sum = add(sum, values[k]);
  return scale(sum, 1.0 / static_cast<double>(values.size()));
}

std::vector<IT2TrFN> average_weights(const ExpertWeightSet& ws) {
  if (ws.weights.empty()) throw Error(ErrorCode::EmptyInput, "no expert weight vectors");
  if (ws.experts.size() != ws.weights.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("{} experts named but {} weight vectors given", ws.experts.size(),
                            ws.weights.size()));
  }
  const std::size_t q = ws.weights.front().size();
  if (q == 0) throw Error(ErrorCode::DimensionMismatch, "weight vectors are empty");
  for (std::size_t k = 0; k < ws.weights.size(); ++k) {
    if (ws.weights[k].size() != q) {
      throw Error(ErrorCode::DimensionMismatch,
                  fmt::format("expert '{}' gives {} weights, expected {}", ws.experts[k],
                              ws.weights[k].size(), q));
    }
  }
  std::vector<IT2TrFN> out;
  out.reserve(q);
  std::vector<IT2TrFN> column(ws.weights.size());
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t k = 0; k < ws.weights.size(); ++k) column[k] = ws.weights[k][j];
    out.push_back(average(column));
  }
  return out;
}

Matrix<IT2TrFN> average_ratings(const ExpertRatingSet& rs) {
  if (rs.ratings.empty()) throw Error(ErrorCode::EmptyInput, "no expert rating matrices");
  if (rs.experts.size() != rs.ratings.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("{} experts named but {} rating matrices given", rs.experts.size(),
                            rs.ratings.size()));
  }
  const std::size_t p = rs.ratings.front().rows();
  const std::size_t q = rs.ratings.front().cols();
  if (p == 0 || q == 0) throw Error(ErrorCode::DimensionMismatch, "rating matrices are empty");
  for (std::size_t k = 0; k < rs.ratings.size(); ++k) {
    if (rs.ratings[k].rows() != p || rs.ratings[k].cols() != q) {
      throw Error(ErrorCode::DimensionMismatch,
                  fmt::format("expert '{}' rating matrix is {}x{}, expected {}x{}", rs.experts[k],
                              rs.ratings[k].rows(), rs.ratings[k].cols(), p, q));
    }
  }
  Matrix<IT2TrFN> out(p, q);
  std::vector<IT2TrFN> cell(rs.ratings.size());
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t k = 0; k < rs.ratings.size(); ++k) cell[k] = rs.ratings[k](i, j);
      out(i, j) = average(cell);
    }
  }
  return out;
}

namespace {

void require_nonnegative(std::span<const IT2TrFN> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].nonnegative()) {
      throw Error(ErrorCode::NegativeOperand,
                  fmt::format("input {} has a negative endpoint", i));
    }
  }
}

double min_height(std::span<const IT2TrFN> values, Level level) {
  double h = std::numeric_limits<double>::infinity();
  for (const auto& v : values) h = std::min(h, v.level(level).height);
  return h;
}

IT2TrFN assemble(const std::array<double, 8>& e, std::span<const IT2TrFN> values) {
  return IT2TrFN::unchecked(
      GeneralizedTrapezoid{{e[0], e[1], e[2], e[3]}, min_height(values, Level::Upper)},
      GeneralizedTrapezoid{{e[4], e[5], e[6], e[7]}, min_height(values, Level::Lower)});
}

}  // namespace

IT2TrFN tit2fgbm(std::span<const IT2TrFN> values, const BonferroniParams& params) {
  params.validate();
  const std::size_t n = values.size();
  if (n < 2) {
    throw Error(ErrorCode::TooFewValues,
                fmt::format("the geometric Bonferroni mean needs at least 2 values, got {}", n));
  }
  require_nonnegative(values);

  const double exponent = 1.0 / static_cast<double>(n * (n - 1));
  const double coefficient = 1.0 / (params.r + params.s);
  std::array<double, 8> out{};
  for (std::size_t e = 0; e < 8; ++e) {
    // Accumulate in log space; a single zero factor zeroes the product.
    double log_sum = 0.0;
    bool zero = false;
    for (std::size_t i = 0; i < n && !zero; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const double factor = params.r * values[i].endpoint(e) + params.s * values[j].endpoint(e);
        if (factor == 0.0) {
          zero = true;
          break;
        }
        log_sum += std::log(factor);
      }
    }
    out[e] = zero ? 0.0 : coefficient * std::exp(exponent * log_sum);
  }
  return assemble(out, values);
}

IT2TrFN geometric_mean(std::span<const IT2TrFN> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "geometric mean of zero values");
  require_nonnegative(values);
  if (values.size() == 1) return values.front();
  const double exponent = 1.0 / static_cast<double>(values.size());
  std::array<double, 8> out{};
  for (std::size_t e = 0; e < 8; ++e) {
    double log_sum = 0.0;
    bool zero = false;
    for (const auto& v : values) {
      if (v.endpoint(e) == 0.0) {
        zero = true;
        break;
      }
      log_sum += std::log(v.endpoint(e));
    }
    out[e] = zero ? 0.0 : std::exp(exponent * log_sum);
  }
  return assemble(out, values);
}

}  // namespace it2mabac
