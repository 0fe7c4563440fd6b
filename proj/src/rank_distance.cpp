#include "it2mabac/rank_distance.hpp"

#include <cmath>

#include <fmt/format.h>

#include "it2mabac/error.hpp"

namespace it2mabac {

void RankParams::validate() const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::InvalidParams, fmt::format("lambda = {} is outside [0, 1]", lambda));
  }
}

double rank_to_one(const IT2TrFN& v, const RankParams& params) {
  params.validate();
  const auto& u = v.upper();
  const auto& l = v.lower();
  const double hu = u.height;
  const double hl = l.height;
  if (hu * hl == 0.0) {
    throw Error(ErrorCode::ZeroHeight, "rank-based distance needs non-zero heights on both levels");
  }
  const double lambda = params.lambda;

  const double support_spread = l.a1() - u.a1() + u.a4() - l.a4();
  const double left_spread = lambda * (l.a2() - l.a1() - u.a2() + u.a1());
  const double lower_shape = l.a4() - l.a3() - l.a2() + l.a1();
  const double right_spread = u.a4() - u.a3() - l.a4() + l.a3();

  return 1.0 - l.a4() - lambda * support_spread -
         (hu * (left_spread - lower_shape) - hl * right_spread) / (2.0 * hu * hl);
}

double distance(const IT2TrFN& a, const IT2TrFN& b, const RankParams& params) {
  return std::abs(rank_to_one(a, params) - rank_to_one(b, params));
}

}  // namespace it2mabac
