#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "it2mabac/aggregation.hpp"
#include "it2mabac/fuzzy.hpp"
#include "it2mabac/matrix.hpp"
#include "it2mabac/rank_distance.hpp"

namespace it2mabac {

enum class CriterionSense { Benefit, Cost };

struct CriterionSpec {
  std::string name;
  CriterionSense sense = CriterionSense::Benefit;
};

enum class BaaOperator { Bonferroni, GeometricMean };

std::string_view to_string(BaaOperator op);
/// "bonferroni" or "geomean"; InvalidParams otherwise.
BaaOperator parse_baa_operator(std::string_view name);

struct PipelineParams {
  RankParams rank;
  BonferroniParams bonferroni;
  BaaOperator baa = BaaOperator::Bonferroni;

  void validate() const;
};

/// Reference endpoints of one column, taken over upper trapezoids only:
/// a_minus = min a1U, a_plus = max a4U.
struct ColumnRange {
  double a_minus = 0.0;
  double a_plus = 0.0;

  double width() const { return a_plus - a_minus; }
};

/// DegenerateRange when a_plus == a_minus.
ColumnRange column_range(const Matrix<IT2TrFN>& avg, std::size_t j);

/// Benefit columns map x -> (x - a_minus) / range on all eight endpoints.
/// Cost columns map x -> (a_plus - x) / range and reverse the endpoint order
/// within each trapezoid. Lower endpoints use the upper-derived range and
/// are not clipped.
Matrix<IT2TrFN> normalize(const Matrix<IT2TrFN>& avg, const std::vector<CriterionSpec>& specs);

/// v_ij = w_j * (n_ij + 1).
Matrix<IT2TrFN> weight(const Matrix<IT2TrFN>& normalized, const std::vector<IT2TrFN>& weights);

/// Border approximation area per column; needs at least two alternatives.
std::vector<IT2TrFN> baa(const Matrix<IT2TrFN>& weighted, const PipelineParams& params = {});

struct CrispMatrices {
  Matrix<double> q;          // |R_d(v_ij, 1)|
  std::vector<double> g;     // |R_d(g_j, 1)|
  Matrix<double> delta;      // q_ij - g_j
};

CrispMatrices crisp_matrices(const Matrix<IT2TrFN>& weighted, const std::vector<IT2TrFN>& border,
                             const RankParams& params = {});

/// Position of a cell relative to the border approximation area.
enum class Area { Upper, Border, Lower };

std::string_view to_string(Area a);

struct RankingResult {
  Matrix<Area> classification;
  std::vector<double> scores;
  /// Alternative indices by decreasing score; ties keep declaration order.
  std::vector<std::size_t> order;
};

/// |delta| < kTolerance counts as the border area.
RankingResult classify_and_score(const CrispMatrices& cm);

/// All intermediate results of one run.
struct PipelineTrace {
  std::vector<IT2TrFN> aggregated_weights;
  Matrix<IT2TrFN> aggregated_decisions;
  Matrix<IT2TrFN> normalized;
  Matrix<IT2TrFN> weighted;
  std::vector<IT2TrFN> border;
  CrispMatrices crisp;
  RankingResult ranking;

  friend bool operator==(const PipelineTrace&, const PipelineTrace&) = default;
};

inline bool operator==(const CrispMatrices& a, const CrispMatrices& b) {
  return a.q == b.q && a.g == b.g && a.delta == b.delta;
}
inline bool operator==(const RankingResult& a, const RankingResult& b) {
  return a.classification == b.classification && a.scores == b.scores && a.order == b.order;
}

/// Runs aggregation and the ranking steps in order. Errors are rethrown with
/// the failing step prefixed to the message.
PipelineTrace run_pipeline(const ExpertWeightSet& weights, const ExpertRatingSet& ratings,
                           const std::vector<CriterionSpec>& criteria,
                           const PipelineParams& params = {});

}  // namespace it2mabac
