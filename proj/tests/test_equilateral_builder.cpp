#include <cmath>
#include <numbers>

#include "common.hpp"
#include "oracles.hpp"
#include "stickforge/stickforge.hpp"

using namespace stickforge;

namespace {

ValidatedPresentation vp_of(const std::string& name) { return validate_presentation(catalog(name)); }

double max_length_error(const std::vector<EqStick>& sticks, double M) {
  double worst = 0;
  for (const EqStick& s : sticks) worst = std::max(worst, std::abs(s.length() - M));
  return worst;
}

// Minimum clearance of all non-adjacent pairs, by the slow distance oracle.
// Pairs sharing a node are skipped: they meet by design.
double slow_min_clearance(const std::vector<EqStick>& sticks) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sticks.size(); ++i) {
    for (std::size_t j = i + 1; j < sticks.size(); ++j) {
      if (sticks[i].has_node(sticks[j].nodes[0]) || sticks[i].has_node(sticks[j].nodes[1])) continue;
      best = std::min(best, oracle::slow_segment_distance(sticks[i].a, sticks[i].b, sticks[j].a, sticks[j].b));
    }
  }
  return best;
}

}  // namespace

TEST(BuildTents, UnknotApexes) {
  const ValidatedPresentation vp = vp_of("unknot");
  const EquilateralEmbedding t = build_tents(vp, make_layout(vp, 10));
  ASSERT_EQ(t.sticks.size(), 4u);
  const double reach = std::sqrt(100 - 0.25);
  for (int page : {1, 2}) {
    const Vec3 apex = t.nodes.at("c0.apex" + std::to_string(page));
    EXPECT_DOUBLE_EQ(apex.z, 0.5);
    EXPECT_NEAR(std::hypot(apex.x, apex.y), reach, 1e-12);
  }
  EXPECT_LE(max_length_error(t.sticks, 10), 1e-9 * 10);
}

TEST(BuildTents, ThetaPagesAndResidual) {
  const ValidatedPresentation vp = vp_of("theta_trivial(3)");
  const OpenBookLayout layout = make_layout(vp, 10);
  const EquilateralEmbedding t = build_tents(vp, layout);
  ASSERT_EQ(t.sticks.size(), 6u);
  for (const EqStick& s : t.sticks) {
    const Vec3 apex = t.nodes.at("c0.apex" + std::to_string(s.page));
    EXPECT_DOUBLE_EQ(apex.z, 0.5);
    const double expected = 2 * std::numbers::pi * s.page / 3.0;
    double residual = std::remainder(std::atan2(apex.y, apex.x) - expected, 2 * std::numbers::pi);
    EXPECT_LE(std::abs(residual), 1e-12);
  }
}

TEST(BuildTents, PageResidualOnRandomPresentations) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ValidatedPresentation vp = validate_presentation(random_presentation(seed, RandomProfile::knot()));
    const OpenBookLayout layout = make_layout(vp, 4.0 * static_cast<double>(vp.m()));
    const EquilateralEmbedding t = build_tents(vp, layout);
    EXPECT_EQ(t.sticks.size(), 2 * vp.n());
    for (const EqStick& s : t.sticks) {
      for (const Vec3& p : {s.a, s.b}) {
        if (std::hypot(p.x, p.y) < 1e-9) continue;  // on the axis
        const double expected = 2 * std::numbers::pi * s.page / static_cast<double>(vp.n());
        EXPECT_LE(std::abs(std::remainder(std::atan2(p.y, p.x) - expected, 2 * std::numbers::pi)), 1e-12);
      }
    }
  }
}

TEST(BuildTents, MTooSmall) {
  const ValidatedPresentation vp = vp_of("trefoil");
  EXPECT_EQ(error_code([&] { build_tents(vp, make_layout(vp, 2.0)); }), ErrorCode::MTooSmall);
  EXPECT_EQ(error_code([&] { build_tents(vp, make_layout(vp, 1.0)); }), ErrorCode::MTooSmall);
  EXPECT_FALSE(error_code([&] { build_tents(vp, make_layout(vp, 2.001)); }).has_value());
}

TEST(ReduceTop, UnknotTriangle) {
  const ValidatedPresentation vp = vp_of("unknot");
  const OpenBookLayout layout = make_layout(vp, 8);
  const EquilateralEmbedding t = build_tents(vp, layout);
  const EquilateralEmbedding r = reduce_top(t, layout);
  ASSERT_EQ(r.sticks.size(), 3u);
  EXPECT_LE(max_length_error(r.sticks, 8), 1e-9 * 8);
  // an equilateral triangle: every pair of sticks shares exactly one node
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      int shared = r.sticks[i].has_node(r.sticks[j].nodes[0]) + r.sticks[i].has_node(r.sticks[j].nodes[1]);
      EXPECT_EQ(shared, 1);
    }
  }
}

TEST(ReduceTop, TrefoilNineSticks) {
  const ValidatedPresentation vp = vp_of("trefoil");
  const OpenBookLayout layout = make_layout(vp, 20);
  const EquilateralEmbedding t = build_tents(vp, layout);
  const EquilateralEmbedding r = reduce_top(t, layout);
  EXPECT_EQ(r.sticks.size(), 9u);
  EXPECT_EQ(r.components.front().top_degree, 2u);
  EXPECT_LE(max_length_error(r.sticks, 20), 1e-9 * 20);
  const double slow = slow_min_clearance(r.sticks);
  EXPECT_GE(slow, 1e-6 * 20);
}

TEST(ReduceTop, ThetaTrivial) {
  for (long n = 1; n <= 20; ++n) {
    const ValidatedPresentation vp = validate_presentation(catalog_theta_trivial(n));
    const OpenBookLayout layout = make_layout(vp, 8);
    const EquilateralEmbedding r = reduce_top(build_tents(vp, layout), layout);
    EXPECT_EQ(r.sticks.size(), static_cast<std::size_t>(2 * n - 1)) << n;
    EXPECT_EQ(r.components.front().top_degree, static_cast<std::size_t>(n));
    EXPECT_LE(max_length_error(r.sticks, 8), 1e-9 * 8);
  }
}

TEST(ReduceTop, HubIsCloseToAxisAndRotationCounterclockwise) {
  const ValidatedPresentation vp = vp_of("theta_trivial(5)");
  const OpenBookLayout layout = make_layout(vp, 8);
  const EquilateralEmbedding t = build_tents(vp, layout);
  const EquilateralEmbedding r = reduce_top(t, layout);
  const Vec3 hub = r.nodes.at("c0.hub");
  EXPECT_NEAR(std::hypot(hub.x, hub.y), 1e-3 * 8, 1e-12);
  // every rotated stick ends higher and closer to the axis than its tent
  for (const EqStick& s : r.sticks) {
    if (s.kind != EqStickKind::Rotated) continue;
    const Vec3 apex = t.nodes.at("c0.apex" + std::to_string(s.page));
    EXPECT_GT(s.b.z, apex.z);
    EXPECT_LT(std::hypot(s.b.x, s.b.y), std::hypot(apex.x, apex.y));
  }
  // only glued sticks may leave their page
  for (const EqStick& s : r.sticks) {
    if (s.kind == EqStickKind::Glued) continue;
    const Vec3 dir = layout.page_direction(s.page);
    for (const Vec3& p : {s.a, s.b}) {
      const double off_page = std::abs(p.x * dir.y - p.y * dir.x);
      EXPECT_LE(off_page, 1e-9 * 8);
      EXPECT_GE(p.x * dir.x + p.y * dir.y, -1e-12);
    }
  }
}

TEST(IsotopyCertificate, UnknotAndTrefoilPass) {
  for (const char* name : {"unknot", "trefoil", "hopf", "theta_trivial(6)"}) {
    const ValidatedPresentation vp = vp_of(name);
    const OpenBookLayout layout = make_layout(vp, default_stick_length({vp}));
    const EquilateralEmbedding t = build_tents(vp, layout);
    const EquilateralEmbedding r = reduce_top(t, layout);
    const CertificateReport c = isotopy_certificate(t, r, layout);
    EXPECT_TRUE(c.pass) << name;
    EXPECT_GT(c.final_min_clearance, 0) << name;
    for (const MoveRecord& m : c.moves) {
      EXPECT_GT(m.samples, 0u);
      EXPECT_GT(m.min_clearance, 0) << name << " " << m.move;
    }
  }
}

TEST(IsotopyCertificate, SweepOracle) {
  // Re-run the rotation of each e_i at coarse samples and check the distance
  // to every untouched stick with the slow oracle.
  const ValidatedPresentation vp = vp_of("trefoil");
  const OpenBookLayout layout = make_layout(vp, 20);
  const EquilateralEmbedding t = build_tents(vp, layout);
  const EquilateralEmbedding r = reduce_top(t, layout);
  const std::string top = layout.top_node();
  for (const EqStick& rot : r.sticks) {
    if (rot.kind != EqStickKind::Rotated) continue;
    const EqStick* e = nullptr;
    for (const EqStick& s : t.sticks) {
      if (s.page == rot.page && !s.has_node(top)) e = &s;
    }
    ASSERT_NE(e, nullptr);
    const Vec3 pivot = e->a;
    for (int k = 0; k <= 40; ++k) {
      const double lambda = k / 40.0;
      // interpolate the angle from the pivot's vertical
      auto angle = [&](Vec3 tip) {
        const Vec3 d = tip - pivot;
        return std::atan2(std::hypot(d.x, d.y), d.z);
      };
      const double psi = angle(e->b) + lambda * (angle(rot.b) - angle(e->b));
      const Vec3 tip = equilateral_detail::swung_tip(layout, pivot, rot.page, psi);
      for (const EqStick& other : t.sticks) {
        if (other.page == rot.page) continue;
        if (other.has_node(e->nodes[0])) continue;
        EXPECT_GT(oracle::slow_segment_distance(pivot, tip, other.a, other.b), 1e-12 * 20);
      }
    }
  }
}

TEST(IsotopyCertificate, AdversarialStickLength) {
  // Just above (m - 1)/2 the geometry has no slack.
  for (const char* name : {"unknot", "hopf", "theta_trivial(3)", "theta_trivial(8)"}) {
    const ValidatedPresentation vp = vp_of(name);
    const double M = (static_cast<double>(vp.m()) - 1) / 2 + 1e-6;
    const OpenBookLayout layout = make_layout(vp, M);
    std::optional<ErrorCode> code = error_code([&] {
      const EquilateralEmbedding t = build_tents(vp, layout);
      const EquilateralEmbedding r = reduce_top(t, layout);
      if (!isotopy_certificate(t, r, layout).pass) fail(ErrorCode::CertificateFailure, name);
    });
    ASSERT_TRUE(code.has_value()) << name;
    EXPECT_TRUE(*code == ErrorCode::NoRotationSolution || *code == ErrorCode::CertificateFailure || *code == ErrorCode::ClearanceViolation)
        << name << " " << to_string(*code);
  }
}

TEST(BuildEquilateral, RetriesDoubleM) {
  const ValidatedPresentation vp = vp_of("theta_trivial(3)");
  const EquilateralEmbedding emb = build_equilateral({vp}, 0.6);
  EXPECT_GT(emb.retries, 0u);
  EXPECT_DOUBLE_EQ(emb.M, 0.6 * std::pow(2.0, static_cast<double>(emb.retries)));
  EXPECT_EQ(emb.sticks.size(), 5u);
  Tolerances no_retry;
  no_retry.max_retries = 0;
  EXPECT_EQ(error_code([&] { build_equilateral({vp}, 0.6, no_retry); }), ErrorCode::NoRotationSolution);
}

TEST(BuildEquilateral, DefaultLength) {
  const ValidatedPresentation vp = vp_of("trefoil");
  EXPECT_EQ(default_stick_length({vp}), 20.0);
  const EquilateralEmbedding emb = build_equilateral({vp});
  EXPECT_EQ(emb.M, 20.0);
  EXPECT_EQ(emb.sticks.size(), 9u);
  ASSERT_EQ(emb.certificates.size(), 1u);
  EXPECT_TRUE(emb.certificates[0].pass);
}

TEST(AssembleSplit, UnlinkIsThreePerComponent) {
  for (long n = 1; n <= 8; ++n) {
    const EquilateralEmbedding emb = build_equilateral({validate_presentation(catalog_unlink(n))});
    EXPECT_EQ(emb.sticks.size(), static_cast<std::size_t>(3 * n));
    EXPECT_EQ(emb.components.size(), static_cast<std::size_t>(n));
    EXPECT_GE(emb.tolerance.min_clearance, 1e-6 * emb.M);
  }
}

TEST(AssembleSplit, SingleComponentIsIdentity) {
  const ValidatedPresentation vp = vp_of("trefoil");
  const OpenBookLayout layout = make_layout(vp, 20);
  const EquilateralEmbedding r = reduce_top(build_tents(vp, layout), layout);
  const EquilateralEmbedding a = assemble_split({r});
  ASSERT_EQ(a.sticks.size(), r.sticks.size());
  for (std::size_t i = 0; i < r.sticks.size(); ++i) {
    EXPECT_EQ(a.sticks[i].a, r.sticks[i].a);
    EXPECT_EQ(a.sticks[i].b, r.sticks[i].b);
    EXPECT_EQ(a.sticks[i].nodes, r.sticks[i].nodes);
  }
  EXPECT_EQ(a.nodes.size(), r.nodes.size());
}

TEST(AssembleSplit, TrefoilAndUnknot) {
  const EquilateralEmbedding emb = build_equilateral({vp_of("trefoil"), vp_of("unknot")});
  EXPECT_EQ(emb.sticks.size(), 12u);
  EXPECT_EQ(emb.components.size(), 2u);
  // components are at least M apart
  for (const EqStick& s : emb.sticks) {
    for (const EqStick& t : emb.sticks) {
      if (s.component != t.component) { EXPECT_GE(segment_distance(s.a, s.b, t.a, t.b), emb.M - 1e-9); }
    }
  }
}

TEST(SplitForEquilateral, AmbiguousSplit) {
  ArcPresentation ap = catalog_unlink(3);
  ap.params = SpatialParams{0, 3, 2, false};
  EXPECT_EQ(error_code([&] { split_for_equilateral({validate_presentation(ap)}); }), ErrorCode::AmbiguousSplit);
  EXPECT_EQ(split_for_equilateral({vp_of("unlink(3)")}).size(), 3u);
  EXPECT_EQ(split_for_equilateral({vp_of("hopf")}).size(), 1u);
}

TEST(BuildEquilateral, ChainAgainstMainBound) {
  const ValidatedPresentation vp = vp_of("unlink(5)");
  const EquilateralEmbedding emb = build_equilateral({vp});
  std::vector<long> arcs;
  for (const auto& piece : split_for_equilateral({vp})) arcs.push_back(static_cast<long>(piece.n()));
  const EquilateralChainCheck chain = check_equilateral_chain(0, 5, 5, 5, arcs);
  EXPECT_EQ(chain.construction_total, static_cast<long>(emb.sticks.size()));
  EXPECT_TRUE(chain.within_bound);
  EXPECT_EQ(chain.bound_value, 15);
}
