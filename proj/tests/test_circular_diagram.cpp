#include <cmath>
#include <numbers>
#include <set>

#include "common.hpp"
#include "stickforge/catalog.hpp"
#include "stickforge/circular_diagram.hpp"
#include "stickforge/random_presentation.hpp"

using namespace stickforge;

namespace {

CircularDiagram diagram(const std::string& name) { return to_circular(validate_presentation(catalog(name))); }

// Segment intersection of two chords from their boundary coordinates, by an
// exact parametric solve.  Touching at a shared end does not count.
bool chords_cross_geometrically(const CircularDiagram& cd, const Chord& c1, const Chord& c2) {
  const Rational2 p = cd.boundary[c1.a], q = cd.boundary[c1.b], r = cd.boundary[c2.a], s = cd.boundary[c2.b];
  const Rational ux = q.x - p.x, uy = q.y - p.y, vx = s.x - r.x, vy = s.y - r.y;
  const Rational det = ux * vy - uy * vx;
  if (det == 0) return false;
  const Rational wx = r.x - p.x, wy = r.y - p.y;
  const Rational t1 = (wx * vy - wy * vx) / det;
  const Rational t2 = (wx * uy - wy * ux) / det;
  return t1 > 0 && t1 < 1 && t2 > 0 && t2 < 1;
}

}  // namespace

TEST(BoundaryPositions, OnCircleClockwiseNearEvenAngles) {
  for (std::size_t m = 2; m <= 60; ++m) {
    const auto pts = boundary_positions(m);
    ASSERT_EQ(pts.size(), m);
    double previous = 10;
    for (std::size_t i = 0; i < m; ++i) {
      EXPECT_EQ(pts[i].x * pts[i].x + pts[i].y * pts[i].y, Rational(1)) << m << " " << i;
      const double target = std::numbers::pi / 2 - 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);
      double angle = std::atan2(pts[i].y.get_d(), pts[i].x.get_d());
      while (angle > std::numbers::pi / 2 + 1e-3) angle -= 2 * std::numbers::pi;
      while (angle < target - std::numbers::pi) angle += 2 * std::numbers::pi;
      EXPECT_NEAR(angle, target, 1e-3) << m << " " << i;
      EXPECT_LT(angle, previous);  // clockwise, strictly
      previous = angle;
    }
  }
}

TEST(ChordsInterleave, Symmetric) {
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      for (std::size_t c = 0; c < 6; ++c) {
        for (std::size_t d = 0; d < 6; ++d) {
          if (a == b || c == d) continue;
          EXPECT_EQ(chords_interleave(a, b, c, d), chords_interleave(c, d, a, b));
          EXPECT_EQ(chords_interleave(a, b, c, d), chords_interleave(b, a, d, c));
          if (a == c || a == d || b == c || b == d) { EXPECT_FALSE(chords_interleave(a, b, c, d)); }
        }
      }
    }
  }
}

TEST(ToCircular, Unknot) {
  const CircularDiagram cd = diagram("unknot");
  EXPECT_TRUE(cd.crossings.empty());
  EXPECT_EQ(cd.counts, (ChordCounts{1, 0, 1}));
}

TEST(ToCircular, TrefoilCrossings) {
  const CircularDiagram cd = diagram("trefoil");
  const std::vector<std::pair<int, int>> expected = {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}};
  EXPECT_EQ(cd.crossings, expected);
}

TEST(ToCircular, ThetaTrivialHasNoCrossings) {
  for (long n = 1; n <= 8; ++n) EXPECT_TRUE(to_circular(validate_presentation(catalog_theta_trivial(n))).crossings.empty());
}

TEST(ToCircular, CombinatorialMatchesGeometric) {
  for (const char* name : {"trefoil", "hopf", "unlink(3)", "theta_trivial(4)"}) {
    const CircularDiagram cd = diagram(name);
    std::set<std::pair<int, int>> combinatorial(cd.crossings.begin(), cd.crossings.end());
    for (std::size_t i = 0; i < cd.n(); ++i) {
      for (std::size_t j = i + 1; j < cd.n(); ++j) {
        const bool geometric = chords_cross_geometrically(cd, cd.chords[i], cd.chords[j]);
        EXPECT_EQ(geometric, combinatorial.count({cd.chords[i].page, cd.chords[j].page}) == 1) << name << " " << i + 1 << "," << j + 1;
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CircularDiagram cd = to_circular(validate_presentation(random_presentation(seed, RandomProfile::knot(14))));
    std::size_t geometric = 0;
    for (std::size_t i = 0; i < cd.n(); ++i) {
      for (std::size_t j = i + 1; j < cd.n(); ++j) geometric += chords_cross_geometrically(cd, cd.chords[i], cd.chords[j]);
    }
    EXPECT_EQ(geometric, cd.crossings.size()) << "seed " << seed;
  }
}

TEST(ToCircular, CrossingPointLiesOnBothChords) {
  const CircularDiagram cd = diagram("trefoil");
  for (auto [i, j] : cd.crossings) {
    const Rational2 x = crossing_point(cd, i, j);
    for (int page : {i, j}) {
      const Chord& ch = cd.chord(page);
      EXPECT_EQ(orient2d(cd.boundary[ch.a], cd.boundary[ch.b], x), 0);
    }
  }
}

TEST(InitiatingPages, Trefoil) {
  const CircularDiagram cd = diagram("trefoil");
  EXPECT_EQ(cd.initiating[1], 1);
  EXPECT_EQ(cd.initiating[0], 3);
  EXPECT_EQ(cd.initiating, (std::vector<int>{3, 1, 2, 1, 2}));
}

TEST(ClassifyChords, Trefoil) {
  const CircularDiagram cd = diagram("trefoil");
  EXPECT_EQ(cd.classes[0].kind, ChordKind::Bi);
  EXPECT_EQ(cd.classes[1].kind, ChordKind::Bi);
  EXPECT_EQ(cd.classes[2].kind, ChordKind::Uni);
  EXPECT_EQ(cd.classes[2].initiating_end, std::optional<std::size_t>(0));
  EXPECT_EQ(cd.classes[3].kind, ChordKind::Non);
  EXPECT_EQ(cd.classes[4].kind, ChordKind::Non);
  EXPECT_EQ(cd.counts, (ChordCounts{2, 1, 2}));
}

TEST(ClassifyChords, ThetaTrivial) {
  for (long n = 1; n <= 12; ++n) {
    const CircularDiagram cd = to_circular(validate_presentation(catalog_theta_trivial(n)));
    EXPECT_EQ(cd.counts, (ChordCounts{1, 0, static_cast<std::size_t>(n - 1)}));
    EXPECT_EQ(cd.classes[0].kind, ChordKind::Bi);
  }
}

TEST(ClassifyChords, IdentitiesOnRandomPresentations) {
  const RandomProfile profiles[] = {RandomProfile::knot(), RandomProfile::theta(3), RandomProfile::theta(5), RandomProfile::bouquet(),
                                    RandomProfile::multi()};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const ValidatedPresentation vp = validate_presentation(random_presentation(seed, profiles[seed % 5]));
    const CircularDiagram cd = to_circular(vp);
    const long n = static_cast<long>(vp.n()), e = static_cast<long>(vp.e()), v = static_cast<long>(vp.v());
    const long n2 = static_cast<long>(cd.counts.bi), n1 = static_cast<long>(cd.counts.uni), n0 = static_cast<long>(cd.counts.non);
    ASSERT_EQ(n2 + n1 + n0, n) << seed;
    ASSERT_EQ(2 * n2 + n1, n - e + v) << seed;
    ASSERT_EQ(static_cast<long>(vp.m()), n - e + v) << seed;
    ASSERT_LE(2 * n0, n + e - v) << seed;
    for (auto [i, j] : cd.crossings) {
      const Chord& a = cd.chord(i);
      const Chord& b = cd.chord(j);
      ASSERT_TRUE(a.a != b.a && a.a != b.b && a.b != b.a && a.b != b.b);
      ASSERT_LT(i, j);
    }
  }
}
