#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace it2mabac {

/// Absolute tolerance used by invariant checks on endpoints and heights.
inline constexpr double kTolerance = 1e-9;

/// One trapezoid (a1, a2, a3, a4; h) of an interval type-2 number.
struct GeneralizedTrapezoid {
  std::array<double, 4> points{};
  double height = 1.0;

  GeneralizedTrapezoid() = default;
  GeneralizedTrapezoid(const std::array<double, 4>& p, double h) : points(p), height(h) {}

  double a1() const { return points[0]; }
  double a2() const { return points[1]; }
  double a3() const { return points[2]; }
  double a4() const { return points[3]; }

  /// Piecewise-linear membership: rises on [a1,a2], plateau h on [a2,a3],
  /// falls on [a3,a4], zero elsewhere.
  double membership(double x) const;

  friend bool operator==(const GeneralizedTrapezoid&, const GeneralizedTrapezoid&) = default;
};

enum class Level { Upper = 0, Lower = 1 };

/// Interval type-2 trapezoidal fuzzy number: an upper and a lower trapezoid.
///
/// Instances built through make() satisfy
///   a1 <= a2 <= a3 <= a4 on both trapezoids,
///   0 < h <= 1 on both, and lower.h <= upper.h.
/// Containment of the lower trapezoid in the upper one is not required; see
/// fou_warnings().
class IT2TrFN {
 public:
  /// Crisp zero with unit heights.
  IT2TrFN() = default;

  /// Validating constructor. With check_fou the lower support must also lie
  /// inside the upper support (EndpointOrderViolation otherwise).
  static IT2TrFN make(const GeneralizedTrapezoid& upper, const GeneralizedTrapezoid& lower,
                      bool check_fou = false);

  /// Convenience overload: {a1,a2,a3,a4,h} for each level.
  static IT2TrFN make(const std::array<double, 5>& upper, const std::array<double, 5>& lower,
                      bool check_fou = false);

  /// Crisp constant c on both levels with unit heights.
  static IT2TrFN crisp(double c);

  /// The unit number (1,1,1,1;1),(1,1,1,1;1).
  static IT2TrFN one() { return crisp(1.0); }

  /// Skips validation. Used internally by arithmetic whose results are valid
  /// by construction.
  static IT2TrFN unchecked(const GeneralizedTrapezoid& upper, const GeneralizedTrapezoid& lower);

  const GeneralizedTrapezoid& upper() const { return upper_; }
  const GeneralizedTrapezoid& lower() const { return lower_; }
  const GeneralizedTrapezoid& level(Level l) const { return l == Level::Upper ? upper_ : lower_; }

  /// Endpoint at flat position 0..7 (upper a1..a4 then lower a1..a4).
  double endpoint(std::size_t k) const;
  /// All eight endpoints, upper first.
  std::array<double, 8> endpoints() const;

  double umf(double x) const { return upper_.membership(x); }
  double lmf(double x) const { return lower_.membership(x); }

  bool nonnegative() const;

  friend bool operator==(const IT2TrFN&, const IT2TrFN&) = default;

 private:
  IT2TrFN(const GeneralizedTrapezoid& upper, const GeneralizedTrapezoid& lower)
      : upper_(upper), lower_(lower) {}

  GeneralizedTrapezoid upper_{{0, 0, 0, 0}, 1.0};
  GeneralizedTrapezoid lower_{{0, 0, 0, 0}, 1.0};
};

double umf_at(const IT2TrFN& v, double x);
double lmf_at(const IT2TrFN& v, double x);

/// Endpoint-wise sum; heights combine by min per level.
IT2TrFN add(const IT2TrFN& a, const IT2TrFN& b);

/// Multiplies all eight endpoints by k >= 0. Heights are unchanged.
IT2TrFN scale(const IT2TrFN& a, double k);

/// Endpoint-wise product on the non-negative cone; heights combine by min.
IT2TrFN mul(const IT2TrFN& a, const IT2TrFN& b);

inline IT2TrFN operator+(const IT2TrFN& a, const IT2TrFN& b) { return add(a, b); }
inline IT2TrFN operator*(const IT2TrFN& a, const IT2TrFN& b) { return mul(a, b); }

/// Lint: reports where the lower trapezoid leaves the upper support.
std::vector<std::string> fou_warnings(const IT2TrFN& v);

bool approx_equal(const IT2TrFN& a, const IT2TrFN& b, double tol);

std::ostream& operator<<(std::ostream& os, const IT2TrFN& v);

}  // namespace it2mabac
