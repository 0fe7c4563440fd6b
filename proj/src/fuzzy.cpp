#include "it2mabac/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "it2mabac/error.hpp"

namespace it2mabac {

namespace {

const char* level_name(Level l) { return l == Level::Upper ? "upper" : "lower"; }

void validate_trapezoid(const GeneralizedTrapezoid& t, Level l) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (!std::isfinite(t.points[k])) {
      throw Error(ErrorCode::EndpointOrderViolation,
                  fmt::format("{}.a{} is not finite", level_name(l), k + 1));
    }
  }
  for (std::size_t k = 0; k + 1 < 4; ++k) {
    if (t.points[k] > t.points[k + 1] + kTolerance) {
      throw Error(ErrorCode::EndpointOrderViolation,
                  fmt::format("{}.a{} = {} exceeds {}.a{} = {}", level_name(l), k + 1,
                              t.points[k], level_name(l), k + 2, t.points[k + 1]));
    }
  }
  if (!(t.height > 0.0) || t.height > 1.0 + kTolerance) {
    throw Error(ErrorCode::HeightOutOfRange,
                fmt::format("{}.h = {} is outside (0, 1]", level_name(l), t.height));
  }
}

template <class Op>
GeneralizedTrapezoid combine(const GeneralizedTrapezoid& x, const GeneralizedTrapezoid& y, Op op) {
  GeneralizedTrapezoid out;
  for (std::size_t k = 0; k < 4; ++k) out.points[k] = op(x.points[k], y.points[k]);
  out.height = std::min(x.height, y.height);
  return out;
}

}  // namespace

double GeneralizedTrapezoid::membership(double x) const {
  const auto [p1, p2, p3, p4] = points;
  if (x < p1 || x > p4) return 0.0;
  if (x < p2) return (x - p1) * height / (p2 - p1);
  if (x <= p3) return height;
  return (p4 - x) * height / (p4 - p3);
}

IT2TrFN IT2TrFN::make(const GeneralizedTrapezoid& upper, const GeneralizedTrapezoid& lower,
                      bool check_fou) {
  validate_trapezoid(upper, Level::Upper);
  validate_trapezoid(lower, Level::Lower);
  if (lower.height > upper.height + kTolerance) {
    throw Error(ErrorCode::HeightOrderViolation,
                fmt::format("lower.h = {} exceeds upper.h = {}", lower.height, upper.height));
  }
  IT2TrFN v(upper, lower);
  if (check_fou) {
    if (auto w = fou_warnings(v); !w.empty()) {
      throw Error(ErrorCode::EndpointOrderViolation, w.front());
    }
  }
  return v;
}

IT2TrFN IT2TrFN::make(const std::array<double, 5>& upper, const std::array<double, 5>& lower,
                      bool check_fou) {
  return make(GeneralizedTrapezoid{{upper[0], upper[1], upper[2], upper[3]}, upper[4]},
              GeneralizedTrapezoid{{lower[0], lower[1], lower[2], lower[3]}, lower[4]}, check_fou);
}

IT2TrFN IT2TrFN::crisp(double c) {
  const GeneralizedTrapezoid t{{c, c, c, c}, 1.0};
  return IT2TrFN(t, t);
}

IT2TrFN IT2TrFN::unchecked(const GeneralizedTrapezoid& upper, const GeneralizedTrapezoid& lower) {
  return IT2TrFN(upper, lower);
}

double IT2TrFN::endpoint(std::size_t k) const {
  return k < 4 ? upper_.points[k] : lower_.points[k - 4];
}

std::array<double, 8> IT2TrFN::endpoints() const {
  std::array<double, 8> out{};
  for (std::size_t k = 0; k < 8; ++k) out[k] = endpoint(k);
  return out;
}

bool IT2TrFN::nonnegative() const {
  const auto e = endpoints();
  return std::all_of(e.begin(), e.end(), [](double x) { return x >= 0.0; });
}

double umf_at(const IT2TrFN& v, double x) { return v.umf(x); }
double lmf_at(const IT2TrFN& v, double x) { return v.lmf(x); }

IT2TrFN add(const IT2TrFN& a, const IT2TrFN& b) {
  auto plus = [](double x, double y) { return x + y; };
  return IT2TrFN::unchecked(combine(a.upper(), b.upper(), plus), combine(a.lower(), b.lower(), plus));
}

IT2TrFN scale(const IT2TrFN& a, double k) {
  if (!(k >= 0.0)) {
    throw Error(ErrorCode::NegativeScalar, fmt::format("scale factor {} is negative", k));
  }
  auto up = a.upper();
  auto lo = a.lower();
  for (auto& p : up.points) p *= k;
  for (auto& p : lo.points) p *= k;
  return IT2TrFN::unchecked(up, lo);
}

IT2TrFN mul(const IT2TrFN& a, const IT2TrFN& b) {
  if (!a.nonnegative() || !b.nonnegative()) {
    throw Error(ErrorCode::NegativeOperand,
                "multiplication is defined only for operands with non-negative endpoints");
  }
  auto times = [](double x, double y) { return x * y; };
  return IT2TrFN::unchecked(combine(a.upper(), b.upper(), times),
                            combine(a.lower(), b.lower(), times));
}

std::vector<std::string> fou_warnings(const IT2TrFN& v) {
  std::vector<std::string> out;
  const auto& u = v.upper();
  const auto& l = v.lower();
  if (l.a1() < u.a1() - kTolerance) {
    out.push_back(fmt::format("lower.a1 = {} lies left of upper.a1 = {}", l.a1(), u.a1()));
  }
  if (l.a4() > u.a4() + kTolerance) {
    out.push_back(fmt::format("lower.a4 = {} lies right of upper.a4 = {}", l.a4(), u.a4()));
  }
  return out;
}

bool approx_equal(const IT2TrFN& a, const IT2TrFN& b, double tol) {
  const auto ea = a.endpoints();
  const auto eb = b.endpoints();
  for (std::size_t k = 0; k < 8; ++k) {
    if (std::abs(ea[k] - eb[k]) > tol) return false;
  }
  return std::abs(a.upper().height - b.upper().height) <= tol &&
         std::abs(a.lower().height - b.lower().height) <= tol;
}

std::ostream& operator<<(std::ostream& os, const IT2TrFN& v) {
  const auto& u = v.upper();
  const auto& l = v.lower();
  return os << fmt::format("[({}, {}, {}, {}; {}), ({}, {}, {}, {}; {})]", u.a1(), u.a2(), u.a3(),
                           u.a4(), u.height, l.a1(), l.a2(), l.a3(), l.a4(), l.height);
}

}  // namespace it2mabac
