#include "it2mabac/linguistic.hpp"

#include <algorithm>
#include <unordered_set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "it2mabac/error.hpp"

namespace it2mabac {

LinguisticScale::LinguisticScale(std::string name, std::vector<Entry> entries)
    : name_(std::move(name)), entries_(std::move(entries)) {
  std::unordered_set<std::string> seen;
  for (const auto& [term, value] : entries_) {
    if (term.empty()) {
      throw Error(ErrorCode::InvalidParams, fmt::format("scale '{}' has an empty term name", name_));
    }
    if (!seen.insert(term).second) {
      throw Error(ErrorCode::InvalidParams,
                  fmt::format("scale '{}' declares term '{}' twice", name_, term));
    }
  }
}

bool LinguisticScale::contains(std::string_view term) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return e.first == term; });
}

const IT2TrFN& LinguisticScale::resolve(std::string_view term) const {
  for (const auto& [name, value] : entries_) {
    if (name == term) return value;
  }
  throw Error(ErrorCode::UnknownTerm, fmt::format("'{}' is not a term of scale '{}' (available: {})",
                                                  term, name_, fmt::join(terms(), ", ")));
}

std::vector<std::string> LinguisticScale::terms() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

namespace {

LinguisticScale weight_scale(double l, double ml, double m, double mh, std::string name) {
  return LinguisticScale(
      std::move(name),
      {
          {"VL", IT2TrFN::make({0, 0, 0, 0.1, 1}, {0, 0, 0, 0.05, 0.9})},
          {"L", IT2TrFN::make({0, 0.1, 0.1, 0.3, 1}, {0.05, 0.1, 0.1, l, 0.9})},
          {"ML", IT2TrFN::make({0.1, 0.3, 0.3, 0.5, 1}, {0.2, 0.3, 0.3, ml, 0.9})},
          {"M", IT2TrFN::make({0.3, 0.5, 0.5, 0.7, 1}, {0.4, 0.5, 0.5, m, 0.9})},
          {"MH", IT2TrFN::make({0.5, 0.7, 0.7, 0.9, 1}, {0.6, 0.7, 0.7, mh, 0.9})},
          {"H", IT2TrFN::make({0.7, 0.9, 0.9, 1, 1}, {0.8, 0.9, 0.9, 0.95, 0.9})},
          {"VH", IT2TrFN::make({0.9, 1, 1, 1, 1}, {0.95, 1, 1, 1, 0.9})},
      });
}

}  // namespace

LinguisticScale builtin_weight_scale() { return weight_scale(0.2, 0.4, 0.6, 0.8, "weights"); }

LinguisticScale builtin_weight_scale_as_printed() {
  return weight_scale(2, 4, 6, 8, "weights-as-printed");
}

std::vector<ScaleRepair> weight_scale_repairs() {
  return {
      {"L", "lower.a4", 2, 0.2},
      {"ML", "lower.a4", 4, 0.4},
      {"M", "lower.a4", 6, 0.6},
      {"MH", "lower.a4", 8, 0.8},
  };
}

LinguisticScale builtin_rating_scale() {
  return LinguisticScale(
      "ratings",
      {
          {"VP", IT2TrFN::make({0, 0, 0, 1, 1}, {0, 0, 0, 0.5, 0.9})},
          {"P", IT2TrFN::make({0, 1, 1, 3, 1}, {0.5, 1, 1, 2, 0.9})},
          {"MP", IT2TrFN::make({1, 3, 3, 5, 1}, {2, 3, 3, 4, 0.9})},
          {"F", IT2TrFN::make({3, 5, 5, 7, 1}, {4, 5, 5, 6, 0.9})},
          {"MG", IT2TrFN::make({5, 7, 7, 9, 1}, {6, 7, 7, 8, 0.9})},
          {"G", IT2TrFN::make({7, 9, 9, 10, 1}, {8, 9, 9, 9.5, 0.9})},
          {"VG", IT2TrFN::make({9, 10, 10, 10, 1}, {9.5, 10, 10, 10, 0.9})},
      });
}

LinguisticScale builtin_scale(std::string_view id) {
  if (id == "builtin:weights") return builtin_weight_scale();
  if (id == "builtin:ratings") return builtin_rating_scale();
  throw Error(ErrorCode::InvalidParams,
              fmt::format("unknown builtin scale '{}' (expected builtin:weights or builtin:ratings)", id));
}

std::vector<std::string> monotonicity_warnings(const LinguisticScale& scale) {
  std::vector<std::string> out;
  const auto& e = scale.entries();
  for (std::size_t k = 1; k < e.size(); ++k) {
    const double prev = e[k - 1].second.upper().a4();
    const double cur = e[k].second.upper().a4();
    if (cur < prev - kTolerance) {
      out.push_back(fmt::format("scale '{}': upper.a4 of '{}' ({}) is below that of '{}' ({})",
                                scale.name(), e[k].first, cur, e[k - 1].first, prev));
    }
  }
  return out;
}

}  // namespace it2mabac
