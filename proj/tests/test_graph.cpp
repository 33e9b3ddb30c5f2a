#include "common.hpp"

#include "stickforge/graph.hpp"

using namespace stickforge;

namespace {

AbstractGraph knot_graph() { return {{"v"}, {{"l", "v", "v"}}}; }
AbstractGraph theta_graph() { return {{"u", "w"}, {{"e1", "u", "w"}, {"e2", "u", "w"}, {"e3", "u", "w"}}}; }
AbstractGraph unlink_graph(int n) {
  AbstractGraph g;
  for (int i = 1; i <= n; ++i) {
    g.vertices.push_back("v" + std::to_string(i));
    g.edges.push_back({"l" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i)});
  }
  return g;
}

}  // namespace

TEST(ValidateGraph, KnotIsOneVertexOneLoop) {
  const ValidatedGraph g = validate_graph(knot_graph());
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.component_count(), 1u);
  EXPECT_EQ(g.degree(0), 2u);
}

TEST(ValidateGraph, ThetaCurve) {
  const ValidatedGraph g = validate_graph(theta_graph());
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.component_count(), 1u);
  EXPECT_EQ(g.degree(g.vertex_index("u")), 3u);
}

TEST(ValidateGraph, UnlinkShape) {
  for (int n = 1; n <= 6; ++n) {
    const ValidatedGraph g = validate_graph(unlink_graph(n));
    EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(n));
    EXPECT_EQ(g.vertex_count(), static_cast<std::size_t>(n));
    EXPECT_EQ(g.component_count(), static_cast<std::size_t>(n));
  }
}

TEST(ValidateGraph, Errors) {
  EXPECT_EQ(error_code([] { validate_graph({{"v", "v"}, {}}); }), ErrorCode::DuplicateId);
  EXPECT_EQ(error_code([] { validate_graph({{"v"}, {{"l", "v", "v"}, {"l", "v", "v"}}}); }), ErrorCode::DuplicateId);
  EXPECT_EQ(error_code([] { validate_graph({{"v"}, {{"l", "v", "x"}}}); }), ErrorCode::DanglingEndpoint);
}

TEST(ValidateGraph, ComponentsOfEdges) {
  const ValidatedGraph g = validate_graph({{"a", "b", "c"}, {{"x", "a", "b"}, {"y", "c", "c"}}});
  EXPECT_EQ(g.component_count(), 2u);
  EXPECT_EQ(g.component_of_edge(0), g.component_of_vertex(g.vertex_index("a")));
  EXPECT_NE(g.component_of_edge(0), g.component_of_edge(1));
}

TEST(IsAbstractBouquet, Examples) {
  EXPECT_TRUE(is_abstract_bouquet(validate_graph({{"v"}, {{"l1", "v", "v"}, {"l2", "v", "v"}}}), 0));
  EXPECT_FALSE(is_abstract_bouquet(validate_graph(theta_graph()), 0));
  EXPECT_TRUE(is_abstract_bouquet(validate_graph(knot_graph()), 0));
  EXPECT_EQ(error_code([] { is_abstract_bouquet(validate_graph(knot_graph()), 1); }), ErrorCode::ComponentOutOfRange);
}

TEST(IsAbstractBouquet, OnlySingleVertexComponents) {
  // a single vertex with no edges is not a bouquet of loops; a path is not either
  const ValidatedGraph g = validate_graph({{"a", "b", "c"}, {{"x", "a", "b"}, {"y", "c", "c"}}});
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    const bool single = g.component_vertices(c).size() == 1;
    if (!single) { EXPECT_FALSE(is_abstract_bouquet(g, c)); }
  }
}

TEST(DefaultSpatialParams, Examples) {
  const SpatialParams unlink = default_spatial_params(validate_graph(unlink_graph(4)));
  EXPECT_EQ(unlink.k, 4);
  EXPECT_EQ(unlink.b, 4);
  EXPECT_EQ(unlink.c, 0);
  EXPECT_TRUE(unlink.heuristic);

  const SpatialParams theta = default_spatial_params(validate_graph(theta_graph()));
  EXPECT_EQ(theta.k, 1);
  EXPECT_EQ(theta.b, 0);

  const SpatialParams knot = default_spatial_params(validate_graph(knot_graph()));
  EXPECT_EQ(knot.k, 1);
  EXPECT_EQ(knot.b, 1);
}

TEST(DefaultSpatialParams, BoundedByComponents) {
  const ValidatedGraph g = validate_graph({{"a", "b", "c", "d"}, {{"x", "a", "b"}, {"y", "c", "c"}, {"z", "d", "d"}, {"w", "d", "d"}}});
  const SpatialParams p = default_spatial_params(g);
  EXPECT_LE(static_cast<std::size_t>(p.k), g.component_count());
  EXPECT_LE(p.b, p.k);
  EXPECT_EQ(p, default_spatial_params(g));
}

TEST(CheckSpatialParams, Errors) {
  const ValidatedGraph g = validate_graph(unlink_graph(2));
  EXPECT_NO_THROW(check_spatial_params({0, 2, 2, false}, g));
  EXPECT_NO_THROW(check_spatial_params({3, 0, 1, false}, g));
  EXPECT_EQ(error_code([&] { check_spatial_params({-1, 0, 1, false}, g); }), ErrorCode::InvalidParams);
  EXPECT_EQ(error_code([&] { check_spatial_params({0, -1, 1, false}, g); }), ErrorCode::InvalidParams);
  EXPECT_EQ(error_code([&] { check_spatial_params({0, 0, 0, false}, g); }), ErrorCode::InvalidParams);
  EXPECT_EQ(error_code([&] { check_spatial_params({0, 0, 3, false}, g); }), ErrorCode::InvalidParams);
}
