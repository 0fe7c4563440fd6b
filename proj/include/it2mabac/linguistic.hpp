#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "it2mabac/fuzzy.hpp"

namespace it2mabac {

/// Named mapping from linguistic terms to IT2TrFNs, in declared order.
class LinguisticScale {
 public:
  using Entry = std::pair<std::string, IT2TrFN>;

  LinguisticScale() = default;
  /// Throws InvalidParams on duplicate or empty term names.
  LinguisticScale(std::string name, std::vector<Entry> entries);

  const std::string& name() const { return name_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  bool contains(std::string_view term) const;
  /// UnknownTerm (listing the available terms) when absent.
  const IT2TrFN& resolve(std::string_view term) const;

  std::vector<std::string> terms() const;

  friend bool operator==(const LinguisticScale&, const LinguisticScale&) = default;

 private:
  std::string name_;
  std::vector<Entry> entries_;
};

inline const IT2TrFN& resolve(const LinguisticScale& scale, std::string_view term) {
  return scale.resolve(term);
}

/// Seven-term criteria-weight scale on [0,1] (VL, L, ML, M, MH, H, VH).
/// The lower a4 of L, ML, M, MH is 0.2, 0.4, 0.6, 0.8; the published table
/// dropped the leading decimal point (see weight_scale_repairs()).
LinguisticScale builtin_weight_scale();

/// Seven-term rating scale on [0,10] (VP, P, MP, F, MG, G, VG).
LinguisticScale builtin_rating_scale();

/// A correction applied to published scale data.
struct ScaleRepair {
  std::string term;
  std::string field;
  double printed;
  double repaired;
};

std::vector<ScaleRepair> weight_scale_repairs();

/// The weight scale with the published values, unrepaired. Each entry is a
/// valid IT2TrFN but fails the FOU lint.
LinguisticScale builtin_weight_scale_as_printed();

/// Resolves "builtin:weights" / "builtin:ratings". InvalidParams otherwise.
LinguisticScale builtin_scale(std::string_view id);

/// Lint: upper a4 must be non-decreasing along the declared term order.
std::vector<std::string> monotonicity_warnings(const LinguisticScale& scale);

}  // namespace it2mabac
