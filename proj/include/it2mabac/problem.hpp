#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "it2mabac/fuzzy.hpp"
#include "it2mabac/linguistic.hpp"
#include "it2mabac/matrix.hpp"
#include "it2mabac/pipeline.hpp"

namespace it2mabac {

/// One weight or rating as written in a problem file: a scale term, or an
/// inline value (term empty).
struct Judgement {
  std::string term;
  IT2TrFN value;

  friend bool operator==(const Judgement&, const Judgement&) = default;
};

struct Criterion {
  std::string name;
  CriterionSense sense = CriterionSense::Benefit;
  std::string label;

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

/// A fully validated group decision problem.
struct DecisionProblem {
  std::string name;
  std::vector<std::string> alternatives;
  std::vector<Criterion> criteria;
  std::vector<std::string> experts;
  LinguisticScale weight_scale;
  LinguisticScale rating_scale;
  /// expert_weights[k][j]
  std::vector<std::vector<Judgement>> expert_weights;
  /// expert_ratings[k](i, j)
  std::vector<Matrix<Judgement>> expert_ratings;
  PipelineParams params;

  std::vector<CriterionSpec> criterion_specs() const;
  ExpertWeightSet weight_set() const;
  ExpertRatingSet rating_set() const;
};

/// Parses a problem document. Relative scale file references resolve
/// against base_dir. Errors carry the line/column of the offending node.
DecisionProblem parse_problem(std::string_view source,
                              const std::filesystem::path& base_dir = {});
DecisionProblem load_problem(const std::filesystem::path& path);

/// Scale documents: a name plus an ordered list of terms.
LinguisticScale parse_scale(std::string_view source);
LinguisticScale load_scale(const std::filesystem::path& path);
std::string render_scale(const LinguisticScale& scale);

/// Runs the whole method on a problem.
PipelineTrace run(const DecisionProblem& problem);

}  // namespace it2mabac
