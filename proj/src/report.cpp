#include "it2mabac/report.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <json.hpp>

#include "it2mabac/error.hpp"

namespace it2mabac {

using nlohmann::json;

namespace {

constexpr int kTraceVersion = 1;

// ---- text -----------------------------------------------------------------

std::string fuzzy_text(const IT2TrFN& v) {
  const auto& u = v.upper();
  const auto& l = v.lower();
  return fmt::format("[({:.2f}, {:.2f}, {:.2f}, {:.2f}; {:.2f}), ({:.2f}, {:.2f}, {:.2f}, {:.2f}; {:.2f})]",
                     u.a1(), u.a2(), u.a3(), u.a4(), u.height, l.a1(), l.a2(), l.a3(), l.a4(),
                     l.height);
}

std::string heading(std::string_view title) {
  return fmt::format("{}\n{}\n", title, std::string(title.size(), '-'));
}

std::size_t name_width(const std::vector<std::string>& names) {
  std::size_t w = 0;
  for (const auto& n : names) w = std::max(w, n.size());
  return w;
}

std::vector<std::string> criterion_names(const DecisionProblem& p) {
  std::vector<std::string> out;
  for (const auto& c : p.criteria) out.push_back(c.name);
  return out;
}

std::string fuzzy_vector_text(std::string_view title, const std::vector<std::string>& names,
                              const std::vector<IT2TrFN>& values) {
  std::string out = heading(title);
  const auto w = name_width(names);
  for (std::size_t j = 0; j < values.size(); ++j) {
    out += fmt::format("{:<{}}  {}\n", names[j], w, fuzzy_text(values[j]));
  }
  return out;
}

std::string fuzzy_matrix_text(std::string_view title, const DecisionProblem& p,
                              const Matrix<IT2TrFN>& m) {
  std::string out = heading(title);
  const auto w = name_width(p.alternatives);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    out += fmt::format("{}\n", p.criteria[j].name);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      out += fmt::format("  {:<{}}  {}\n", p.alternatives[i], w, fuzzy_text(m(i, j)));
    }
  }
  return out;
}

std::string grid_text(const std::vector<std::string>& row_names,
                      const std::vector<std::string>& col_names,
                      const std::vector<std::vector<std::string>>& cells) {
  const auto w0 = name_width(row_names);
  std::vector<std::size_t> widths;
  for (std::size_t j = 0; j < col_names.size(); ++j) {
    std::size_t w = col_names[j].size();
    for (const auto& row : cells) w = std::max(w, row[j].size());
    widths.push_back(w);
  }
  std::string out = fmt::format("{:<{}}", "", w0);
  for (std::size_t j = 0; j < col_names.size(); ++j) {
    out += fmt::format("  {:>{}}", col_names[j], widths[j]);
  }
  out += '\n';
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out += fmt::format("{:<{}}", row_names[i], w0);
    for (std::size_t j = 0; j < col_names.size(); ++j) {
      out += fmt::format("  {:>{}}", cells[i][j], widths[j]);
    }
    out += '\n';
  }
  return out;
}

std::string crisp_matrix_text(std::string_view title, const DecisionProblem& p,
                              const Matrix<double>& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) cells[i].push_back(fmt::format("{:.2f}", m(i, j)));
  }
  return heading(title) + grid_text(p.alternatives, criterion_names(p), cells);
}

std::string g_text(const DecisionProblem& p, const PipelineTrace& t) {
  std::vector<std::vector<std::string>> cells(1);
  for (double g : t.crisp.g) cells[0].push_back(fmt::format("{:.2f}", g));
  return heading("BAA distances G") + grid_text({"g"}, criterion_names(p), cells);
}

std::string ranking_text(const DecisionProblem& p, const PipelineTrace& t) {
  const auto& r = t.ranking;
  std::vector<std::size_t> rank(r.order.size());
  for (std::size_t pos = 0; pos < r.order.size(); ++pos) rank[r.order[pos]] = pos + 1;

  auto cols = criterion_names(p);
  cols.push_back("S(A)");
  cols.push_back("Rank");
  std::vector<std::vector<std::string>> cells(p.alternatives.size());
  for (std::size_t i = 0; i < p.alternatives.size(); ++i) {
    for (std::size_t j = 0; j < p.criteria.size(); ++j) {
      cells[i].push_back(fmt::format("{:.2f} {}", t.crisp.delta(i, j),
                                     to_string(r.classification(i, j))));
    }
    cells[i].push_back(fmt::format("{:.2f}", r.scores[i]));
    cells[i].push_back(fmt::format("{}", rank[i]));
  }
  std::string order;
  for (std::size_t pos = 0; pos < r.order.size(); ++pos) {
    if (pos) order += " > ";
    order += p.alternatives[r.order[pos]];
  }
  return heading("Scores and ranking") +
         grid_text(p.alternatives, cols, cells) + fmt::format("\nOrder: {}\n", order);
}

std::string table_text(const DecisionProblem& p, const PipelineTrace& t, std::string_view name) {
  if (name == "weights") {
    return fuzzy_vector_text("Aggregated weights", criterion_names(p),
                             t.aggregated_weights);
  }
  if (name == "decisions") {
    return fuzzy_matrix_text("Aggregated decision matrix", p, t.aggregated_decisions);
  }
  if (name == "normalized") return fuzzy_matrix_text("Normalized decision matrix", p, t.normalized);
  if (name == "weighted") {
    return fuzzy_matrix_text("Weighted normalized matrix", p, t.weighted);
  }
  if (name == "baa") {
    return fuzzy_vector_text("Border approximation area", criterion_names(p), t.border);
  }
  if (name == "q") return crisp_matrix_text("Distance matrix Q", p, t.crisp.q);
  if (name == "g") return g_text(p, t);
  if (name == "delta") return crisp_matrix_text("Differences Q - G", p, t.crisp.delta);
  if (name == "ranking") return ranking_text(p, t);
  throw Error(ErrorCode::InvalidParams, fmt::format("unknown table '{}'", name));
}

// ---- machine --------------------------------------------------------------

json fuzzy_json(const IT2TrFN& v) {
  const auto& u = v.upper();
  const auto& l = v.lower();
  return json::array({json::array({u.a1(), u.a2(), u.a3(), u.a4(), u.height}),
                      json::array({l.a1(), l.a2(), l.a3(), l.a4(), l.height})});
}

json fuzzy_vector_json(const std::vector<IT2TrFN>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(fuzzy_json(v));
  return out;
}

template <class T, class F>
json matrix_json(const Matrix<T>& m, F&& cell) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cell(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json header_json(const DecisionProblem& p) {
  json criteria = json::array();
  for (const auto& c : p.criteria) {
    criteria.push_back({{"name", c.name},
                        {"sense", c.sense == CriterionSense::Benefit ? "benefit" : "cost"}});
  }
  return {{"format", "it2mabac-trace"},
          {"version", kTraceVersion},
          {"problem", p.name},
          {"alternatives", p.alternatives},
          {"criteria", criteria},
          {"params",
           {{"lambda", p.params.rank.lambda},
            {"r", p.params.bonferroni.r},
            {"s", p.params.bonferroni.s},
            {"baa", std::string(to_string(p.params.baa))}}}};
}

json table_json(const DecisionProblem& p, const PipelineTrace& t, std::string_view name) {
  auto fz = [](const IT2TrFN& v) { return fuzzy_json(v); };
  auto num = [](double x) { return json(x); };
  if (name == "weights") return fuzzy_vector_json(t.aggregated_weights);
  if (name == "decisions") return matrix_json(t.aggregated_decisions, fz);
  if (name == "normalized") return matrix_json(t.normalized, fz);
  if (name == "weighted") return matrix_json(t.weighted, fz);
  if (name == "baa") return fuzzy_vector_json(t.border);
  if (name == "q") return matrix_json(t.crisp.q, num);
  if (name == "g") return t.crisp.g;
  if (name == "delta") return matrix_json(t.crisp.delta, num);
  if (name == "ranking") {
    json order = json::array();
    for (auto i : t.ranking.order) order.push_back(p.alternatives[i]);
    return {{"classification",
             matrix_json(t.ranking.classification, [](Area a) { return json(to_string(a)); })},
            {"scores", t.ranking.scores},
            {"order", order}};
  }
  throw Error(ErrorCode::InvalidParams, fmt::format("unknown table '{}'", name));
}

// ---- machine parse --------------------------------------------------------

IT2TrFN fuzzy_from_json(const json& j) {
  const auto u = j.at(0).get<std::array<double, 5>>();
  const auto l = j.at(1).get<std::array<double, 5>>();
  return IT2TrFN::unchecked(GeneralizedTrapezoid{{u[0], u[1], u[2], u[3]}, u[4]},
                            GeneralizedTrapezoid{{l[0], l[1], l[2], l[3]}, l[4]});
}

std::vector<IT2TrFN> fuzzy_vector_from_json(const json& j) {
  std::vector<IT2TrFN> out;
  for (const auto& v : j) out.push_back(fuzzy_from_json(v));
  return out;
}

template <class T, class F>
Matrix<T> matrix_from_json(const json& j, F&& cell) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw Error(ErrorCode::SyntaxError, "ragged matrix in trace");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = cell(j.at(i).at(k));
  }
  return m;
}

Area area_from_string(const std::string& s) {
  if (s == "UAA") return Area::Upper;
  if (s == "BAA") return Area::Border;
  if (s == "LAA") return Area::Lower;
  throw Error(ErrorCode::SyntaxError, fmt::format("unknown area '{}'", s));
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "machine") return Format::Machine;
  throw Error(ErrorCode::InvalidParams,
              fmt::format("unknown format '{}' (expected text or machine)", name));
}

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names{"weights", "decisions", "normalized", "weighted", "baa",
                                              "q",       "g",         "delta",      "ranking"};
  return names;
}

std::string render(const DecisionProblem& problem, const PipelineTrace& trace, Format format) {
  if (format == Format::Machine) {
    json doc = header_json(problem);
    doc["aggregated_weights"] = table_json(problem, trace, "weights");
    doc["aggregated_decisions"] = table_json(problem, trace, "decisions");
    doc["normalized"] = table_json(problem, trace, "normalized");
    doc["weighted"] = table_json(problem, trace, "weighted");
    doc["border"] = table_json(problem, trace, "baa");
    doc["q"] = table_json(problem, trace, "q");
    doc["g"] = table_json(problem, trace, "g");
    doc["delta"] = table_json(problem, trace, "delta");
    const auto ranking = table_json(problem, trace, "ranking");
    doc["classification"] = ranking["classification"];
    doc["scores"] = ranking["scores"];
    doc["order"] = ranking["order"];
    return doc.dump(2) + "\n";
  }
  std::string out;
  if (!problem.name.empty()) out += fmt::format("Problem: {}\n", problem.name);
  out += fmt::format("Parameters: lambda = {}, r = {}, s = {}, BAA operator = {}\n\n",
                     problem.params.rank.lambda, problem.params.bonferroni.r,
                     problem.params.bonferroni.s, to_string(problem.params.baa));
  for (std::size_t k = 0; k < table_names().size(); ++k) {
    if (k) out += '\n';
    out += table_text(problem, trace, table_names()[k]);
  }
  return out;
}

std::string render_table(const DecisionProblem& problem, const PipelineTrace& trace,
                         std::string_view name, Format format) {
  if (format == Format::Machine) {
    json doc = header_json(problem);
    doc["table"] = name;
    doc["values"] = table_json(problem, trace, name);
    return doc.dump(2) + "\n";
  }
  return table_text(problem, trace, name);
}

MachineTrace parse_machine_trace(std::string_view text) {
  try {
    const auto doc = json::parse(text);
    if (doc.at("format") != "it2mabac-trace" || doc.at("version") != kTraceVersion) {
      throw Error(ErrorCode::SyntaxError, "not an it2mabac trace document (version 1)");
    }
    MachineTrace m;
    m.problem = doc.at("problem").get<std::string>();
    m.alternatives = doc.at("alternatives").get<std::vector<std::string>>();
    for (const auto& c : doc.at("criteria")) m.criteria.push_back(c.at("name").get<std::string>());
    const auto& params = doc.at("params");
    m.params.rank.lambda = params.at("lambda").get<double>();
    m.params.bonferroni.r = params.at("r").get<double>();
    m.params.bonferroni.s = params.at("s").get<double>();
    m.params.baa = parse_baa_operator(params.at("baa").get<std::string>());

    auto& t = m.trace;
    auto fz = [](const json& j) { return fuzzy_from_json(j); };
    auto num = [](const json& j) { return j.get<double>(); };
    t.aggregated_weights = fuzzy_vector_from_json(doc.at("aggregated_weights"));
    t.aggregated_decisions = matrix_from_json<IT2TrFN>(doc.at("aggregated_decisions"), fz);
    t.normalized = matrix_from_json<IT2TrFN>(doc.at("normalized"), fz);
    t.weighted = matrix_from_json<IT2TrFN>(doc.at("weighted"), fz);
    t.border = fuzzy_vector_from_json(doc.at("border"));
    t.crisp.q = matrix_from_json<double>(doc.at("q"), num);
    t.crisp.g = doc.at("g").get<std::vector<double>>();
    t.crisp.delta = matrix_from_json<double>(doc.at("delta"), num);
    t.ranking.classification = matrix_from_json<Area>(
        doc.at("classification"), [](const json& j) { return area_from_string(j.get<std::string>()); });
    t.ranking.scores = doc.at("scores").get<std::vector<double>>();
    for (const auto& name : doc.at("order")) {
      const auto it = std::find(m.alternatives.begin(), m.alternatives.end(), name.get<std::string>());
      if (it == m.alternatives.end()) {
        throw Error(ErrorCode::SyntaxError, fmt::format("order names unknown alternative {}", name.dump()));
      }
      t.ranking.order.push_back(static_cast<std::size_t>(it - m.alternatives.begin()));
    }
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SyntaxError, fmt::format("malformed trace: {}", e.what()));
  }
}

}  // namespace it2mabac
