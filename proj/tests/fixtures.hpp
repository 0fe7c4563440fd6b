// Reference data for the system-analyst hiring example, as printed
// (two decimals unless noted).
#pragma once

#include <array>
#include <string>
#include <vector>

#include "it2mabac/aggregation.hpp"
#include "it2mabac/fuzzy.hpp"
#include "it2mabac/linguistic.hpp"
#include "it2mabac/matrix.hpp"

namespace fixtures {

using Endpoints = std::array<double, 8>;  // upper a1..a4, lower a1..a4

inline it2mabac::IT2TrFN fuzzy(const Endpoints& e, double hu = 1.0, double hl = 0.9) {
  return it2mabac::IT2TrFN::make({e[0], e[1], e[2], e[3], hu}, {e[4], e[5], e[6], e[7], hl});
}

inline const std::vector<std::string> kAlternatives{"A1", "A2", "A3"};
inline const std::vector<std::string> kCriteria{"C1", "C2", "C3", "C4", "C5"};
inline const std::vector<std::string> kExperts{"DM1", "DM2", "DM3"};

// Criteria weights, [criterion][expert].
inline const std::array<std::array<const char*, 3>, 5> kWeightTerms{{
    {"H", "VH", "MH"},
    {"VH", "VH", "VH"},
    {"VH", "H", "H"},
    {"VH", "VH", "VH"},
    {"M", "MH", "MH"},
}};

using RatingTerms = std::array<std::array<std::array<const char*, 3>, 5>, 3>;

// Expert ratings as printed, [alternative][criterion][expert].
inline const RatingTerms kRatingTermsPrinted{{
    {{{"MG", "G", "MG"}, {"G", "MG", "F"}, {"F", "G", "G"}, {"VG", "G", "VG"}, {"F", "F", "F"}}},
    {{{"G", "G", "MG"}, {"VG", "VG", "VG"}, {"VG", "VG", "G"}, {"VG", "VG", "VG"}, {"VG", "MG", "G"}}},
    {{{"VG", "G", "F"}, {"G", "G", "VG"}, {"G", "MG", "VG"}, {"G", "VG", "MG"}, {"MG", "G", "MG"}}},
}};

// Ratings consistent with the aggregated matrix kAggregatedDecisions: one term changed in
// each of A3/C2, A2/C3, A2/C4, A2/C5, A3/C5.
inline const RatingTerms kRatingTermsReconstructed{{
    {{{"MG", "G", "MG"}, {"G", "MG", "F"}, {"F", "G", "G"}, {"VG", "G", "VG"}, {"F", "F", "F"}}},
    {{{"G", "G", "MG"}, {"VG", "VG", "VG"}, {"VG", "VG", "VG"}, {"VG", "VG", "MG"}, {"VG", "MG", "MG"}}},
    {{{"VG", "G", "F"}, {"MG", "G", "VG"}, {"G", "MG", "VG"}, {"G", "VG", "MG"}, {"G", "G", "MG"}}},
}};

// Aggregated weights, upper trapezoids only.
inline const std::array<std::array<double, 4>, 5> kAggregatedWeightsUpper{{
    {0.70, 0.87, 0.87, 0.97},
    {0.90, 1.00, 1.00, 1.00},
    {0.77, 0.93, 0.93, 1.00},
    {0.90, 1.00, 1.00, 1.00},
    {0.43, 0.63, 0.63, 0.83},
}};

// Aggregated decision matrix, [criterion][alternative].
inline const std::array<std::array<Endpoints, 3>, 5> kAggregatedDecisions{{
    {{{5.67, 7.67, 7.67, 9.33, 6.67, 7.67, 7.67, 8.50},
      {6.33, 8.33, 8.33, 9.67, 7.33, 8.33, 8.33, 9.00},
      {6.33, 8.00, 8.00, 9.00, 7.17, 8.00, 8.00, 8.50}}},
    {{{5.00, 7.00, 7.00, 8.67, 6.00, 7.00, 7.00, 7.83},
      {9.00, 10.00, 10.00, 10.00, 9.50, 10.00, 10.00, 10.00},
      {7.00, 8.67, 8.67, 9.67, 7.83, 8.67, 8.67, 9.17}}},
    {{{5.67, 7.67, 7.67, 9.00, 6.67, 7.67, 7.67, 8.33},
      {9.00, 10.00, 10.00, 10.00, 9.50, 10.00, 10.00, 10.00},
      {7.00, 8.67, 8.67, 9.67, 7.83, 8.67, 8.67, 9.17}}},
    {{{8.33, 9.67, 9.67, 10.00, 9.00, 9.67, 9.67, 9.83},
      {7.67, 9.00, 9.00, 9.67, 8.33, 9.00, 9.00, 9.33},
      {7.00, 8.67, 8.67, 9.67, 7.83, 8.67, 8.67, 9.17}}},
    {{{3.00, 5.00, 5.00, 7.00, 4.00, 5.00, 5.00, 6.00},
      {6.33, 8.00, 8.00, 9.33, 7.17, 8.00, 8.00, 8.67},
      {6.33, 8.33, 8.33, 9.67, 7.33, 8.33, 8.33, 9.00}}},
}};

// Weighted matrix, [criterion][alternative].
inline const std::array<std::array<Endpoints, 3>, 5> kWeighted{{
    {{{0.70, 1.30, 1.30, 2.00, 0.88, 1.30, 1.30, 1.94},
      {0.82, 1.44, 1.44, 1.89, 0.99, 1.44, 1.44, 1.78},
      {0.82, 1.37, 1.37, 1.89, 0.96, 1.37, 1.37, 1.72}}},
    {{{0.90, 1.40, 1.40, 1.73, 1.08, 1.40, 1.40, 1.57},
      {1.62, 2.00, 2.00, 2.00, 1.71, 2.00, 2.00, 2.00},
      {1.26, 1.73, 1.73, 1.93, 1.41, 1.73, 1.73, 1.83}}},
    {{{0.77, 1.36, 1.36, 1.77, 0.95, 1.36, 1.36, 1.62},
      {1.36, 1.87, 1.87, 2.00, 1.45, 1.86, 1.86, 2.00},
      {1.00, 1.58, 1.58, 1.92, 1.16, 1.57, 1.57, 1.81}}},
    {{{1.30, 1.89, 1.89, 2.00, 1.50, 1.89, 1.89, 1.94},
      {1.10, 1.67, 1.67, 1.89, 1.30, 1.67, 1.67, 1.78},
      {0.90, 1.56, 1.56, 1.89, 1.15, 1.56, 1.56, 1.72}}},
    {{{0.43, 0.82, 0.82, 1.33, 0.49, 0.82, 0.82, 1.20},
      {0.65, 1.11, 1.11, 1.63, 0.70, 1.10, 1.10, 1.54},
      {0.65, 1.14, 1.14, 1.67, 0.71, 1.13, 1.13, 1.58}}},
}};

// Border approximation area, [criterion].
inline const std::array<Endpoints, 5> kBorder{{
    {0.78, 1.37, 1.37, 1.85, 0.94, 1.37, 1.37, 1.70},
    {1.22, 1.69, 1.69, 1.89, 1.38, 1.69, 1.69, 1.79},
    {1.01, 1.59, 1.59, 1.89, 1.17, 1.58, 1.58, 1.80},
    {1.09, 1.70, 1.70, 1.93, 1.31, 1.70, 1.70, 1.81},
    {0.57, 1.01, 1.01, 1.53, 0.63, 1.01, 1.01, 1.43},
}};

// Distance matrix Q, [alternative][criterion]. Only its within-column
// ordering is reproducible.
inline const std::array<std::array<double, 5>, 3> kDistanceQ{{
    {1.75, 1.94, 1.85, 2.90, 0.75},
    {2.03, 3.11, 2.81, 2.46, 1.32},
    {1.87, 2.60, 2.27, 2.26, 1.39},
}};

// Q - G, [alternative][criterion], and the printed scores.
inline const std::array<std::array<double, 5>, 3> kDelta{{
    {-0.13, -0.58, -0.44, 0.37, -0.38},
    {0.15, 0.59, 0.52, -0.07, 0.19},
    {-0.01, 0.08, -0.02, -0.27, 0.25},
}};
inline const std::array<double, 3> kScores{-1.16, 1.39, 0.03};

inline it2mabac::ExpertWeightSet weight_set() {
  const auto scale = it2mabac::builtin_weight_scale();
  it2mabac::ExpertWeightSet ws{kExperts, {}};
  for (std::size_t k = 0; k < 3; ++k) {
    auto& row = ws.weights.emplace_back();
    for (std::size_t j = 0; j < 5; ++j) row.push_back(scale.resolve(kWeightTerms[j][k]));
  }
  return ws;
}

inline it2mabac::ExpertRatingSet rating_set(const RatingTerms& terms) {
  const auto scale = it2mabac::builtin_rating_scale();
  it2mabac::ExpertRatingSet rs{kExperts, {}};
  for (std::size_t k = 0; k < 3; ++k) {
    it2mabac::Matrix<it2mabac::IT2TrFN> m(3, 5);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = scale.resolve(terms[i][j][k]);
    }
    rs.ratings.push_back(std::move(m));
  }
  return rs;
}

/// Printed weighted matrix as a 3 x 5 matrix.
inline it2mabac::Matrix<it2mabac::IT2TrFN> weighted_matrix() {
  it2mabac::Matrix<it2mabac::IT2TrFN> m(3, 5);
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = fuzzy(kWeighted[j][i]);
  }
  return m;
}

}  // namespace fixtures
