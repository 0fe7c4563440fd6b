#include "it2mabac/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "it2mabac/error.hpp"

namespace it2mabac {

namespace {

std::string where(const YAML::Node& node) {
  const auto mark = node.Mark();
  if (mark.is_null()) return "document";
  return fmt::format("line {}, column {}", mark.line + 1, mark.column + 1);
}

[[noreturn]] void fail(const YAML::Node& node, ErrorCode code, const std::string& message) {
  throw Error(code, fmt::format("{}: {}", where(node), message));
}

YAML::Node load_yaml(std::string_view source) {
  try {
    return YAML::Load(std::string(source));
  } catch (const YAML::ParserException& e) {
    throw Error(ErrorCode::SyntaxError, fmt::format("line {}, column {}: {}", e.mark.line + 1,
                                                    e.mark.column + 1, e.msg));
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, fmt::format("cannot open '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_keys(const YAML::Node& map, std::initializer_list<std::string_view> allowed) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) fail(kv.first, ErrorCode::SyntaxError, fmt::format("unknown key '{}'", key));
  }
}

YAML::Node require(const YAML::Node& map, const char* key, YAML::NodeType::value type) {
  const auto node = map[key];
  if (!node) fail(map, ErrorCode::SyntaxError, fmt::format("missing required key '{}'", key));
  if (node.Type() != type) {
    static constexpr const char* names[] = {"undefined", "null", "scalar", "sequence", "map"};
    fail(node, ErrorCode::SyntaxError,
         fmt::format("'{}' must be a {}", key, names[static_cast<int>(type)]));
  }
  return node;
}

std::string scalar(const YAML::Node& node, std::string_view what) {
  if (!node.IsScalar()) fail(node, ErrorCode::SyntaxError, fmt::format("{} must be a scalar", what));
  return node.as<std::string>();
}

double number(const YAML::Node& node, std::string_view what) {
  if (!node.IsScalar()) fail(node, ErrorCode::SyntaxError, fmt::format("{} must be a number", what));
  try {
    return node.as<double>();
  } catch (const YAML::BadConversion&) {
    fail(node, ErrorCode::SyntaxError,
         fmt::format("{} must be a number, got '{}'", what, node.as<std::string>()));
  }
}

std::vector<std::string> name_list(const YAML::Node& map, const char* key) {
  const auto seq = require(map, key, YAML::NodeType::Sequence);
  if (seq.size() == 0) fail(seq, ErrorCode::DimensionMismatch, fmt::format("'{}' is empty", key));
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& item : seq) {
    auto name = scalar(item, fmt::format("an entry of '{}'", key));
    if (name.empty()) fail(item, ErrorCode::SyntaxError, "names must be non-empty");
    if (!seen.insert(name).second) {
      fail(item, ErrorCode::SyntaxError, fmt::format("duplicate name '{}' in '{}'", name, key));
    }
    out.push_back(std::move(name));
  }
  return out;
}

std::array<double, 5> five_tuple(const YAML::Node& node, std::string_view what) {
  if (!node.IsSequence() || node.size() != 5) {
    fail(node, ErrorCode::SyntaxError,
         fmt::format("{} must be a list of five numbers [a1, a2, a3, a4, h]", what));
  }
  std::array<double, 5> out{};
  for (std::size_t k = 0; k < 5; ++k) out[k] = number(node[k], what);
  return out;
}

IT2TrFN parse_value(const YAML::Node& node, std::string_view what) {
  if (!node.IsSequence() || node.size() != 2) {
    fail(node, ErrorCode::SyntaxError,
         fmt::format("{} must be a term or [[upper a1..a4, h], [lower a1..a4, h]]", what));
  }
  const auto upper = five_tuple(node[0], fmt::format("{} (upper)", what));
  const auto lower = five_tuple(node[1], fmt::format("{} (lower)", what));
  try {
    return IT2TrFN::make(upper, lower);
  } catch (const Error& e) {
    fail(node, e.code(), fmt::format("{}: {}", what, e.detail()));
  }
}

Judgement parse_judgement(const YAML::Node& node, const LinguisticScale& scale,
                          const std::string& cell) {
  if (node.IsScalar()) {
    const auto term = node.as<std::string>();
    try {
      return {term, scale.resolve(term)};
    } catch (const Error& e) {
      fail(node, e.code(), fmt::format("{}: {}", cell, e.detail()));
    }
  }
  return {"", parse_value(node, cell)};
}

LinguisticScale scale_from_node(const YAML::Node& node) {
  if (!node.IsMap()) fail(node, ErrorCode::SyntaxError, "a scale must be a map with 'name' and 'terms'");
  check_keys(node, {"name", "terms"});
  const auto name = scalar(require(node, "name", YAML::NodeType::Scalar), "scale name");
  const auto terms = require(node, "terms", YAML::NodeType::Sequence);
  std::vector<LinguisticScale::Entry> entries;
  std::set<std::string> seen;
  for (const auto& t : terms) {
    if (!t.IsMap()) fail(t, ErrorCode::SyntaxError, "a scale entry must be a map {term, upper, lower}");
    check_keys(t, {"term", "upper", "lower"});
    auto term = scalar(require(t, "term", YAML::NodeType::Scalar), "term");
    if (!seen.insert(term).second) {
      fail(t, ErrorCode::SyntaxError, fmt::format("scale '{}' declares term '{}' twice", name, term));
    }
    const auto what = fmt::format("term '{}'", term);
    const auto upper = five_tuple(require(t, "upper", YAML::NodeType::Sequence), what);
    const auto lower = five_tuple(require(t, "lower", YAML::NodeType::Sequence), what);
    try {
      entries.emplace_back(term, IT2TrFN::make(upper, lower));
    } catch (const Error& e) {
      fail(t, e.code(), fmt::format("{}: {}", what, e.detail()));
    }
  }
  if (entries.empty()) fail(terms, ErrorCode::SyntaxError, fmt::format("scale '{}' has no terms", name));
  return LinguisticScale(name, std::move(entries));
}

LinguisticScale scale_ref(const YAML::Node& node, const std::filesystem::path& base_dir) {
  if (node.IsScalar()) {
    const auto id = node.as<std::string>();
    try {
      return builtin_scale(id);
    } catch (const Error& e) {
      fail(node, e.code(), e.detail());
    }
  }
  if (node.IsMap() && node["file"]) {
    check_keys(node, {"file"});
    const std::filesystem::path file = scalar(node["file"], "scale file");
    const auto resolved = file.is_absolute() ? file : base_dir / file;
    try {
      return load_scale(resolved);
    } catch (const Error& e) {
      fail(node, e.code(), fmt::format("in '{}': {}", resolved.string(), e.detail()));
    }
  }
  return scale_from_node(node);
}

PipelineParams parse_params(const YAML::Node& node) {
  PipelineParams p;
  if (!node) return p;
  if (!node.IsMap()) fail(node, ErrorCode::SyntaxError, "'params' must be a map");
  check_keys(node, {"lambda", "r", "s", "baa"});
  if (node["lambda"]) p.rank.lambda = number(node["lambda"], "lambda");
  if (node["r"]) p.bonferroni.r = number(node["r"], "r");
  if (node["s"]) p.bonferroni.s = number(node["s"], "s");
  try {
    if (node["baa"]) p.baa = parse_baa_operator(scalar(node["baa"], "baa"));
    p.validate();
  } catch (const Error& e) {
    fail(node, e.code(), e.detail());
  }
  return p;
}

YAML::Node expert_entry(const YAML::Node& map, const std::vector<std::string>& experts,
                               const char* section) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (std::find(experts.begin(), experts.end(), key) == experts.end()) {
      fail(kv.first, ErrorCode::DimensionMismatch,
           fmt::format("'{}' lists unknown expert '{}'", section, key));
    }
  }
  return map;
}

}  // namespace

std::vector<CriterionSpec> DecisionProblem::criterion_specs() const {
  std::vector<CriterionSpec> out;
  out.reserve(criteria.size());
  for (const auto& c : criteria) out.push_back({c.name, c.sense});
  return out;
}

ExpertWeightSet DecisionProblem::weight_set() const {
  ExpertWeightSet ws{experts, {}};
  for (const auto& row : expert_weights) {
    auto& out = ws.weights.emplace_back();
    for (const auto& j : row) out.push_back(j.value);
  }
  return ws;
}

ExpertRatingSet DecisionProblem::rating_set() const {
  ExpertRatingSet rs{experts, {}};
  for (const auto& m : expert_ratings) {
    Matrix<IT2TrFN> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).value;
    }
    rs.ratings.push_back(std::move(out));
  }
  return rs;
}

DecisionProblem parse_problem(std::string_view source, const std::filesystem::path& base_dir) {
  const auto root = load_yaml(source);
  if (!root.IsMap()) fail(root, ErrorCode::SyntaxError, "a problem document must be a map");
  check_keys(root, {"name", "alternatives", "criteria", "experts", "scales", "weights", "ratings",
                    "params"});

  DecisionProblem p;
  if (root["name"]) p.name = scalar(root["name"], "name");
  p.alternatives = name_list(root, "alternatives");
  p.experts = name_list(root, "experts");

  const auto criteria = require(root, "criteria", YAML::NodeType::Sequence);
  if (criteria.size() == 0) fail(criteria, ErrorCode::DimensionMismatch, "'criteria' is empty");
  std::set<std::string> seen;
  for (const auto& c : criteria) {
    Criterion crit;
    if (c.IsScalar()) {
      crit.name = c.as<std::string>();
    } else if (c.IsMap()) {
      check_keys(c, {"name", "sense", "label"});
      crit.name = scalar(require(c, "name", YAML::NodeType::Scalar), "criterion name");
      if (c["sense"]) {
        const auto sense = scalar(c["sense"], "sense");
        if (sense == "benefit") {
          crit.sense = CriterionSense::Benefit;
        } else if (sense == "cost") {
          crit.sense = CriterionSense::Cost;
        } else {
          fail(c["sense"], ErrorCode::SyntaxError,
               fmt::format("sense must be 'benefit' or 'cost', got '{}'", sense));
        }
      }
      if (c["label"]) crit.label = scalar(c["label"], "label");
    } else {
      fail(c, ErrorCode::SyntaxError, "a criterion must be a name or a map {name, sense, label}");
    }
    if (crit.name.empty()) fail(c, ErrorCode::SyntaxError, "criterion names must be non-empty");
    if (!seen.insert(crit.name).second) {
      fail(c, ErrorCode::SyntaxError, fmt::format("duplicate criterion '{}'", crit.name));
    }
    p.criteria.push_back(std::move(crit));
  }

  const auto scales = require(root, "scales", YAML::NodeType::Map);
  check_keys(scales, {"weights", "ratings"});
  if (!scales["weights"]) fail(scales, ErrorCode::SyntaxError, "missing 'scales.weights'");
  if (!scales["ratings"]) fail(scales, ErrorCode::SyntaxError, "missing 'scales.ratings'");
  p.weight_scale = scale_ref(scales["weights"], base_dir);
  p.rating_scale = scale_ref(scales["ratings"], base_dir);

  const std::size_t q = p.criteria.size();
  const std::size_t rows = p.alternatives.size();

  const auto weights = expert_entry(require(root, "weights", YAML::NodeType::Map), p.experts, "weights");
  for (const auto& expert : p.experts) {
    const auto row = weights[expert];
    if (!row) {
      fail(weights, ErrorCode::DimensionMismatch, fmt::format("no weights for expert '{}'", expert));
    }
    if (!row.IsSequence() || row.size() != q) {
      fail(row, ErrorCode::DimensionMismatch,
           fmt::format("Step 1: expert '{}' gives {} weights for {} criteria", expert,
                       row.IsSequence() ? row.size() : 1, q));
    }
    auto& out = p.expert_weights.emplace_back();
    for (std::size_t j = 0; j < q; ++j) {
      out.push_back(parse_judgement(
          row[j], p.weight_scale,
          fmt::format("Step 1: weight of expert '{}', criterion '{}'", expert, p.criteria[j].name)));
    }
  }

  const auto ratings = expert_entry(require(root, "ratings", YAML::NodeType::Map), p.experts, "ratings");
  for (const auto& expert : p.experts) {
    const auto m = ratings[expert];
    if (!m) {
      fail(ratings, ErrorCode::DimensionMismatch, fmt::format("no ratings for expert '{}'", expert));
    }
    if (!m.IsMap()) {
      fail(m, ErrorCode::SyntaxError,
           fmt::format("ratings of expert '{}' must map each alternative to a row", expert));
    }
    for (const auto& kv : m) {
      const auto alt = kv.first.as<std::string>();
      if (std::find(p.alternatives.begin(), p.alternatives.end(), alt) == p.alternatives.end()) {
        fail(kv.first, ErrorCode::DimensionMismatch,
             fmt::format("expert '{}' rates unknown alternative '{}'", expert, alt));
      }
    }
    Matrix<Judgement> out(rows, q);
    for (std::size_t i = 0; i < rows; ++i) {
      const auto& alt = p.alternatives[i];
      const auto row = m[alt];
      if (!row) {
        fail(m, ErrorCode::DimensionMismatch,
             fmt::format("Step 2: expert '{}' has no row for alternative '{}'", expert, alt));
      }
      if (!row.IsSequence() || row.size() != q) {
        fail(row, ErrorCode::DimensionMismatch,
             fmt::format("Step 2: expert '{}', alternative '{}' (row {}): {} ratings for {} criteria",
                         expert, alt, i + 1, row.IsSequence() ? row.size() : 1, q));
      }
      for (std::size_t j = 0; j < q; ++j) {
        out(i, j) = parse_judgement(
            row[j], p.rating_scale,
            fmt::format("Step 2: rating of expert '{}', alternative '{}', criterion '{}'", expert,
                        alt, p.criteria[j].name));
      }
    }
    p.expert_ratings.push_back(std::move(out));
  }

  p.params = parse_params(root["params"]);
  return p;
}

DecisionProblem load_problem(const std::filesystem::path& path) {
  return parse_problem(read_file(path), path.parent_path());
}

LinguisticScale parse_scale(std::string_view source) { return scale_from_node(load_yaml(source)); }

LinguisticScale load_scale(const std::filesystem::path& path) { return parse_scale(read_file(path)); }

namespace {

std::string yaml_quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string render_scale(const LinguisticScale& scale) {
  auto tuple = [](const GeneralizedTrapezoid& t) {
    return fmt::format("[{}, {}, {}, {}, {}]", t.a1(), t.a2(), t.a3(), t.a4(), t.height);
  };
  std::string out = fmt::format("name: {}\nterms:\n", yaml_quoted(scale.name()));
  for (const auto& [term, v] : scale.entries()) {
    out += fmt::format("  - {{term: {}, upper: {}, lower: {}}}\n", yaml_quoted(term), tuple(v.upper()),
                       tuple(v.lower()));
  }
  return out;
}

PipelineTrace run(const DecisionProblem& problem) {
  return run_pipeline(problem.weight_set(), problem.rating_set(), problem.criterion_specs(),
                      problem.params);
}

}  // namespace it2mabac
