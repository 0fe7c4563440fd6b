#pragma once

#include "it2mabac/fuzzy.hpp"

namespace it2mabac {

/// Attitude weight of the rank-based distance, in [0, 1].
struct RankParams {
  double lambda = 0.5;

  void validate() const;
};

/// Signed rank-based distance R_d(v, 1) from v to the unit number:
///
///   R_d = 1 - a4L - lambda (a1L - a1U + a4U - a4L)
///         - 1/(2 hU hL) * [ hU (lambda (a2L - a1L - a2U + a1U) - (a4L - a3L - a2L + a1L))
///                           - hL (a4U - a3U - a4L + a3L) ]
///
/// Affine in the eight endpoints for fixed lambda and heights. Zero at the
/// unit number; 1 - c at a crisp constant c.
double rank_to_one(const IT2TrFN& v, const RankParams& params = {});

/// |rank_to_one(a) - rank_to_one(b)|; a pseudometric.
double distance(const IT2TrFN& a, const IT2TrFN& b, const RankParams& params = {});

}  // namespace it2mabac
