#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <map>
#include <vector>

#include "fixtures.hpp"
#include "it2mabac/aggregation.hpp"
#include "it2mabac/error.hpp"
#include "oracles.hpp"

namespace it2mabac {
namespace {

TEST(AverageWeights, ReproducesAggregatedUpperWeights) {
  const auto w = average_weights(fixtures::weight_set());
  ASSERT_EQ(w.size(), 5u);
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_NEAR(w[j].upper().points[k], fixtures::kAggregatedWeightsUpper[j][k], 0.01) << "C" << j + 1;
    }
  }
  EXPECT_NEAR(w[0].upper().a2(), 0.8666666666666667, 1e-12);
}

TEST(AverageWeights, LowerLevelIsAveragedToo) {
  // (0.8 + 0.95 + 0.6) / 3 for C1, not the upper 0.70.
  const auto w = average_weights(fixtures::weight_set());
  EXPECT_NEAR(w[0].lower().a1(), 0.7833333333333333, 1e-12);
  EXPECT_EQ(w[0].lower().height, 0.9);
}

TEST(AverageWeights, SingleExpertIsIdentity) {
  auto ws = fixtures::weight_set();
  ws.experts.resize(1);
  ws.weights.resize(1);
  const auto w = average_weights(ws);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_TRUE(approx_equal(w[j], ws.weights[0][j], 1e-15));
}

TEST(AverageWeights, DimensionMismatch) {
  auto ws = fixtures::weight_set();
  ws.weights[1].pop_back();
  try {
    average_weights(ws);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    EXPECT_NE(std::string(e.what()).find("DM2"), std::string::npos);
  }
}

TEST(AverageRatings, ReproducesAggregatedMatrixFromReconstructedRatings) {
  const auto d = average_ratings(fixtures::rating_set(fixtures::kRatingTermsReconstructed));
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto e = d(i, j).endpoints();
      for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(e[k], fixtures::kAggregatedDecisions[j][i][k], 0.01) << "A" << i + 1 << "/C" << j + 1;
      }
    }
  }
}

TEST(AverageRatings, PrintedRatingsDisagreeInExactlyFiveCells) {
  const auto d = average_ratings(fixtures::rating_set(fixtures::kRatingTermsPrinted));
  std::vector<std::pair<int, int>> bad;
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!approx_equal(d(i, j), fixtures::fuzzy(fixtures::kAggregatedDecisions[j][i]), 0.01)) {
        bad.emplace_back(i + 1, j + 1);
      }
    }
  }
  const std::vector<std::pair<int, int>> expected{{3, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 5}};
  EXPECT_EQ(bad, expected);
}

// Enumerate every multiset of three rating terms that averages to each
// aggregated cell. Symmetric cells such as (3, 5, 5, 7) have several; the
// one needing the fewest changes to the printed terms must be unique and
// equal to the reconstruction.
TEST(AverageRatings, ReconstructionIsTheClosestExplanation) {
  const auto scale = builtin_rating_scale();
  const auto terms = scale.terms();
  auto order = [&](const std::string& t) { return std::find(terms.begin(), terms.end(), t) - terms.begin(); };
  auto sorted = [&](const auto& cell) {
    std::vector<std::string> out(cell.begin(), cell.end());
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return order(x) < order(y); });
    return out;
  };
  auto changes = [](std::vector<std::string> a, std::vector<std::string> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<std::string> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return a.size() - common.size();
  };
  int edits = 0;
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto target = fixtures::fuzzy(fixtures::kAggregatedDecisions[j][i]);
      const auto printed = sorted(fixtures::kRatingTermsPrinted[i][j]);
      std::vector<std::vector<std::string>> best;
      std::size_t best_changes = 4;
      for (std::size_t a = 0; a < terms.size(); ++a) {
        for (std::size_t b = a; b < terms.size(); ++b) {
          for (std::size_t c = b; c < terms.size(); ++c) {
            const std::vector<IT2TrFN> v{scale.resolve(terms[a]), scale.resolve(terms[b]),
                                         scale.resolve(terms[c])};
            if (!approx_equal(average(v), target, 0.01)) continue;
            std::vector<std::string> m{terms[a], terms[b], terms[c]};
            const auto n = changes(m, printed);
            if (n < best_changes) {
              best_changes = n;
              best.clear();
            }
            if (n == best_changes) best.push_back(m);
          }
        }
      }
      ASSERT_EQ(best.size(), 1u) << "A" << i + 1 << "/C" << j + 1;
      EXPECT_LE(best_changes, 1u);
      edits += static_cast<int>(best_changes);
      EXPECT_EQ(sorted(fixtures::kRatingTermsReconstructed[i][j]), best.front()) << "A" << i + 1 << "/C" << j + 1;
    }
  }
  EXPECT_EQ(edits, 5);
}

TEST(AverageRatings, IdentityAndIdempotency) {
  const auto r = builtin_rating_scale();
  const auto vg = r.resolve("VG");
  const auto d = average_ratings(fixtures::rating_set(fixtures::kRatingTermsPrinted));
  EXPECT_TRUE(approx_equal(d(1, 1), vg, 1e-12));  // A2/C2 rated VG by everyone

  Matrix<IT2TrFN> m(1, 1, r.resolve("MP"));
  const auto same = average_ratings({{"a", "b", "c", "d"}, {m, m, m, m}});
  EXPECT_TRUE(approx_equal(same(0, 0), r.resolve("MP"), 1e-12));
}

TEST(AverageRatings, DimensionMismatchNamesExpert) {
  auto rs = fixtures::rating_set(fixtures::kRatingTermsPrinted);
  rs.ratings[2] = Matrix<IT2TrFN>(3, 4);
  try {
    average_ratings(rs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    EXPECT_NE(std::string(e.what()).find("DM3"), std::string::npos);
  }
}

IT2TrFN with_upper_a1(double x) {
  return IT2TrFN::make({x, 2, 2, 3, 1}, {1.5, 2, 2, 2.5, 0.9});
}

TEST(Tit2fgbm, WeightedColumnC1FirstEndpoint) {
  const std::vector<IT2TrFN> col{with_upper_a1(0.70), with_upper_a1(0.82), with_upper_a1(0.82)};
  EXPECT_NEAR(tit2fgbm(col).upper().a1(), 0.78, 0.01);
}

TEST(Tit2fgbm, FrozenOracleValue) {
  // 0.5744253868973916 from the direct double product over ordered pairs.
  const std::vector<IT2TrFN> col{with_upper_a1(0.43), with_upper_a1(0.65), with_upper_a1(0.65)};
  const double got = tit2fgbm(col).upper().a1();
  EXPECT_NEAR(got, 0.5744253868973916, 1e-12);
  EXPECT_NEAR(got, oracles::bonferroni({0.43, 0.65, 0.65}, 1, 1), 1e-12);
  EXPECT_NEAR(got, 0.57, 0.005);
}

TEST(Tit2fgbm, Idempotent) {
  const auto g = builtin_rating_scale().resolve("G");
  const std::vector<IT2TrFN> same(4, g);
  for (auto [r, s] : {std::pair{1.0, 1.0}, {0.0, 2.0}, {3.0, 0.5}}) {
    EXPECT_TRUE(approx_equal(tit2fgbm(same, {r, s}), g, 1e-9)) << r << "," << s;
  }
}

TEST(Tit2fgbm, HeightsAreMinimum) {
  const std::vector<IT2TrFN> v{IT2TrFN::make({1, 2, 2, 3, 0.8}, {1, 2, 2, 3, 0.7}),
                               IT2TrFN::make({1, 2, 2, 3, 1}, {1, 2, 2, 3, 0.9})};
  const auto g = tit2fgbm(v);
  EXPECT_EQ(g.upper().height, 0.8);
  EXPECT_EQ(g.lower().height, 0.7);
}

TEST(Tit2fgbm, Errors) {
  const auto g = builtin_rating_scale().resolve("G");
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::SyntaxError;
  };
  EXPECT_EQ(code([&] { tit2fgbm(std::vector<IT2TrFN>{g}); }), ErrorCode::TooFewValues);
  const auto neg = IT2TrFN::make({-1, 0, 0, 1, 1}, {-1, 0, 0, 1, 1});
  EXPECT_EQ(code([&] { tit2fgbm(std::vector<IT2TrFN>{g, neg}); }), ErrorCode::NegativeOperand);
  EXPECT_EQ(code([&] { tit2fgbm(std::vector<IT2TrFN>{g, g}, {0, 0}); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code([&] { tit2fgbm(std::vector<IT2TrFN>{g, g}, {-1, 2}); }), ErrorCode::InvalidParams);
}

TEST(Tit2fgbm, ZeroEndpointsStayZero) {
  const auto vp = builtin_rating_scale().resolve("VP");
  const auto g = tit2fgbm(std::vector<IT2TrFN>{vp, vp, vp});
  EXPECT_EQ(g.upper().a1(), 0.0);
  EXPECT_NEAR(g.upper().a4(), 1.0, 1e-12);
}

TEST(GeometricMean, Basics) {
  const std::vector<IT2TrFN> col{with_upper_a1(0.70), with_upper_a1(0.82), with_upper_a1(0.82)};
  EXPECT_NEAR(geometric_mean(col).upper().a1(), 0.78, 0.01);
  EXPECT_NEAR(geometric_mean(col).upper().a1(), std::cbrt(0.70 * 0.82 * 0.82), 1e-12);
  const auto g = builtin_rating_scale().resolve("G");
  EXPECT_EQ(geometric_mean(std::vector<IT2TrFN>{g}), g);
  const auto vp = builtin_rating_scale().resolve("VP");
  EXPECT_EQ(geometric_mean(std::vector<IT2TrFN>{vp, g}).upper().a2(), 0.0);
  EXPECT_THROW(geometric_mean(std::vector<IT2TrFN>{}), Error);
}

// On the printed weighted matrix the two operators are NOT within 0.01 of
// each other: Bonferroni dominates the geometric mean (AM >= GM inside each
// factor) and the gap reaches ~0.027 on C2.
TEST(Tit2fgbm, GapToGeometricMeanOnWeightedFixture) {
  const auto m = fixtures::weighted_matrix();
  double worst = 0.0;
  for (std::size_t j = 0; j < 5; ++j) {
    const auto col = m.column(j);
    const auto b = tit2fgbm(col).endpoints();
    const auto g = geometric_mean(col).endpoints();
    for (std::size_t k = 0; k < 8; ++k) {
      EXPECT_GE(b[k], g[k] - 1e-12);
      worst = std::max(worst, b[k] - g[k]);
    }
  }
  EXPECT_NEAR(worst, 0.02663, 1e-4);
}

}  // namespace
}  // namespace it2mabac
