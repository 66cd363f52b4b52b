#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tetrad/errors.hpp"
#include "tetrad/pg3.hpp"
#include "test_models.hpp"

namespace tetrad::pg3 {
namespace {

using tetrad::testing::pg;

// Determinant of a 4x4 matrix over GF(q) by cofactor expansion.
std::uint32_t det4(std::array<std::array<std::int64_t, 4>, 4> a, std::int64_t q) {
  std::int64_t det = 1;
  for (int c = 0; c < 4; ++c) {
    int pivot = -1;
    for (int r = c; r < 4; ++r)
      if (((a[r][c] % q) + q) % q != 0) pivot = r;
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    std::int64_t p = ((a[c][c] % q) + q) % q;
    std::int64_t pinv = 1;
    for (int k = 0; k < q - 2; ++k) pinv = pinv * p % q;
    det = det * p % q;
    for (int r = c + 1; r < 4; ++r) {
      const std::int64_t f = ((a[r][c] % q) + q) % q * pinv % q;
      for (int k = c; k < 4; ++k) a[r][k] = ((a[r][k] - f * a[c][k]) % q + q) % q;
    }
  }
  return static_cast<std::uint32_t>(((det % q) + q) % q);
}

TEST(Pg3PointsTest, CountsMatchProjectiveFormula) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const auto points = enumerate_points(gf::PrimeField(q));
    // Nonzero vectors of GF(q)^4 up to nonzero scalars.
    const std::size_t expected = (q * q * q * q - 1) / (q - 1);
    EXPECT_EQ(points.size(), expected) << "q=" << q;
    EXPECT_TRUE(std::is_sorted(points.begin(), points.end()));
    EXPECT_EQ(std::set<ProjPoint>(points.begin(), points.end()).size(), points.size());
  }
  EXPECT_EQ(enumerate_points(gf::PrimeField(2)).size(), 15u);
  EXPECT_EQ(enumerate_points(gf::PrimeField(3)).size(), 40u);
  EXPECT_EQ(enumerate_points(gf::PrimeField(5)).size(), 156u);
}

TEST(Pg3LinesTest, LineFromPointsExamples) {
  const gf::PrimeField f(5);
  EXPECT_EQ(line_from_points(make_point(f, {1, 0, 0, 0}), make_point(f, {0, 1, 0, 0})),
            make_line(f, {1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(line_from_points(make_point(f, {1, 0, 0, 0}), make_point(f, {0, 0, 0, 1})),
            make_line(f, {0, 0, 1, 0, 0, 0}));
  const auto p = make_point(f, {1, 2, 3, 4});
  EXPECT_THROW(line_from_points(p, p), DegenerateInput);
  EXPECT_THROW(line_from_points(p, make_point(f, {2, 4, 6, 8})), DegenerateInput);
}

// Oracle: every 2-dimensional subspace of GF(q)^4 has a unique 2x4 reduced
// row echelon basis; its 2x2 minors are the Plücker coordinates.
std::set<PluckerLine> lines_by_rref(std::uint32_t q) {
  const gf::PrimeField f(q);
  std::set<PluckerLine> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      std::vector<int> free1, free2;
      for (int k = i + 1; k < 4; ++k)
        if (k != j) free1.push_back(k);
      for (int k = j + 1; k < 4; ++k) free2.push_back(k);
      const std::size_t nfree = free1.size() + free2.size();
      std::size_t total = 1;
      for (std::size_t t = 0; t < nfree; ++t) total *= q;
      for (std::size_t code = 0; code < total; ++code) {
        std::array<std::int64_t, 4> r1{}, r2{};
        r1[i] = 1;
        r2[j] = 1;
        std::size_t c = code;
        for (int k : free1) { r1[k] = static_cast<std::int64_t>(c % q); c /= q; }
        for (int k : free2) { r2[k] = static_cast<std::int64_t>(c % q); c /= q; }
        auto mnr = [&](int a, int b) {
          return static_cast<std::uint32_t>((((r1[a] * r2[b] - r1[b] * r2[a]) % q) + q) % q);
        };
        out.insert(make_line(f, {mnr(0, 1), mnr(0, 2), mnr(0, 3), mnr(2, 3), mnr(3, 1), mnr(1, 2)}));
      }
    }
  }
  return out;
}

TEST(Pg3LinesTest, EnumerationMatchesRrefOracle) {
  const std::map<std::uint32_t, std::size_t> expected{{2, 35}, {3, 130}, {5, 806}};
  for (auto [q, count] : expected) {
    const auto lines = enumerate_lines(gf::PrimeField(q));
    const auto oracle = lines_by_rref(q);
    EXPECT_EQ(oracle.size(), count);
    EXPECT_EQ(lines.size(), count);
    EXPECT_EQ(std::vector<PluckerLine>(oracle.begin(), oracle.end()), lines) << "q=" << q;
    EXPECT_EQ(lines.size(), (q * q + 1) * (q * q + q + 1));
    for (const auto& l : lines) EXPECT_TRUE(satisfies_quadric(l));
  }
}

TEST(Pg3LinesTest, IncidenceExamples) {
  const gf::PrimeField f(2);
  const auto e01 = make_line(f, {1, 0, 0, 0, 0, 0});
  const auto e02 = make_line(f, {0, 1, 0, 0, 0, 0});
  const auto e23 = make_line(f, {0, 0, 0, 1, 0, 0});
  EXPECT_TRUE(lines_incident(e01, e02));
  EXPECT_FALSE(lines_incident(e01, e23));
  EXPECT_TRUE(lines_incident(e01, e01));
  EXPECT_THROW(lines_incident(e01, make_line(gf::PrimeField(3), {1, 0, 0, 0, 0, 0})), UsageError);
}

// Oracle: two lines meet iff their four spanning points are linearly dependent.
TEST(Pg3LinesTest, IncidenceMatchesDeterminantOracle) {
  for (std::uint32_t q : {2u, 3u}) {
    const auto& m = pg(q).model;
    for (LineId a = 0; a < m.lines.size(); ++a) {
      for (LineId b = 0; b < m.lines.size(); ++b) {
        const auto& pa = m.line_points[a];
        const auto& pb = m.line_points[b];
        std::array<std::array<std::int64_t, 4>, 4> mat{};
        const std::array<std::size_t, 4> rows{pa[0], pa[1], pb[0], pb[1]};
        for (int r = 0; r < 4; ++r)
          for (int c = 0; c < 4; ++c) mat[r][c] = m.points[rows[r]].coords[c].value();
        ASSERT_EQ(m.structure.incident(a, b), det4(mat, q) == 0) << a << " " << b;
      }
    }
  }
}

TEST(Pg3LinesTest, EveryLineMeetsTheExpectedNumberOfLines) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const auto& m = pg(q).model.structure;
    for (LineId l = 0; l < m.size(); ++l) {
      ASSERT_EQ(m.row(l).count(), q * (q + 1) * (q + 1) + 1) << "q=" << q;
    }
  }
  EXPECT_EQ(pg(2).model.structure.row(0).count(), 19u);
  EXPECT_EQ(pg(3).model.structure.row(0).count(), 49u);
}

TEST(Pg3LinesTest, CoordinatesIndependentOfSpanningPoints) {
  std::mt19937 rng(7);
  for (std::uint32_t q : {3u, 5u}) {
    const auto& m = pg(q).model;
    for (int trial = 0; trial < 300; ++trial) {
      const LineId l = static_cast<LineId>(rng() % m.lines.size());
      const auto& pts = m.line_points[l];
      ASSERT_EQ(pts.size(), q + 1);
      const std::size_t i = rng() % pts.size();
      std::size_t j = rng() % pts.size();
      if (i == j) j = (j + 1) % pts.size();
      EXPECT_EQ(line_from_points(m.points[pts[i]], m.points[pts[j]]), m.lines[l]);
    }
  }
}

TEST(Pg3DualTest, Examples) {
  const gf::PrimeField f(2);
  EXPECT_EQ(dual_line(make_line(f, {1, 0, 0, 0, 0, 0})), make_line(f, {0, 0, 0, 1, 0, 0}));
  for (const auto& l : pg(2).model.lines) EXPECT_EQ(dual_line(dual_line(l)), l);
}

TEST(Pg3DualTest, IncidenceMatrixInvariantAtQ3) {
  const auto& m = pg(3).model;
  std::vector<PluckerLine> duals;
  for (const auto& l : m.lines) duals.push_back(dual_line(l));
  for (std::size_t a = 0; a < duals.size(); ++a)
    for (std::size_t b = 0; b < duals.size(); ++b)
      ASSERT_EQ(lines_incident(duals[a], duals[b]), lines_incident(m.lines[a], m.lines[b]));
}

TEST(Pg3ModelTest, GroundTruthSizes) {
  for (std::uint32_t q : {2u, 3u}) {
    const auto& m = pg(q).model;
    EXPECT_EQ(m.structure.size(), (q * q + 1) * (q * q + q + 1));
    for (const auto& s : m.truth.point_stars) EXPECT_EQ(s.size(), q * q + q + 1);
    for (const auto& s : m.truth.plane_sets) EXPECT_EQ(s.size(), q * q + q + 1);
  }
  EXPECT_EQ(pg(2).model.truth.point_stars.front().size(), 7u);
  EXPECT_EQ(pg(3).model.truth.point_stars.front().size(), 13u);
}

TEST(Pg3ModelTest, StarMeetsPlaneSetInNothingOrAFlatPencil) {
  for (std::uint32_t q : {2u, 3u}) {
    const auto& t = pg(q).model.truth;
    std::size_t pencils = 0;
    for (const auto& star : t.point_stars) {
      for (const auto& plane : t.plane_sets) {
        std::vector<LineId> common;
        std::set_intersection(star.begin(), star.end(), plane.begin(), plane.end(),
                              std::back_inserter(common));
        ASSERT_TRUE(common.empty() || common.size() == q + 1);
        pencils += !common.empty();
      }
    }
    // Incident point-plane flags.
    EXPECT_EQ(pencils, t.point_stars.size() * (q * q + q + 1));
  }
}

}  // namespace
}  // namespace tetrad::pg3
