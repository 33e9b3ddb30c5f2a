#pragma once

// Arc presentations: binding points in axis order and one arc per page.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stickforge/error.hpp"
#include "stickforge/graph.hpp"

namespace stickforge {

struct BindingPoint {
  enum class Kind { Vertex, Interior };
  Kind kind = Kind::Vertex;
  // Vertex id for Kind::Vertex, edge id for Kind::Interior.
  std::string label;

  static BindingPoint vertex(VertexId id) { return {Kind::Vertex, std::move(id)}; }
  static BindingPoint interior(EdgeId id) { return {Kind::Interior, std::move(id)}; }
  bool is_vertex() const { return kind == Kind::Vertex; }
  friend bool operator==(const BindingPoint&, const BindingPoint&) = default;
};

struct Arc {
  int page = 0;  // 1-based
  std::size_t end_a = 0;
  std::size_t end_b = 0;
  EdgeId edge;

  std::size_t other_end(std::size_t point) const { return point == end_a ? end_b : end_a; }
  bool touches(std::size_t point) const { return end_a == point || end_b == point; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct ArcPresentation {
  AbstractGraph graph;
  std::vector<BindingPoint> binding_points;  // axis order, index 0 lowest
  std::vector<Arc> arcs;                     // page order
  std::optional<SpatialParams> params;
  friend bool operator==(const ArcPresentation&, const ArcPresentation&) = default;
};

/// One edge's route through the book: `points[0]` is the start vertex point,
/// `points.back()` the end vertex point, and arc `arcs[i]` joins
/// `points[i]` and `points[i + 1]`.
struct EdgePath {
  std::vector<std::size_t> arcs;
  std::vector<std::size_t> points;
};

class ValidatedPresentation {
 public:
  const ArcPresentation& presentation() const { return ap_; }
  const ValidatedGraph& graph() const { return graph_; }
  const SpatialParams& params() const { return params_; }

  std::size_t n() const { return ap_.arcs.size(); }
  std::size_t e() const { return graph_.edge_count(); }
  std::size_t v() const { return graph_.vertex_count(); }
  std::size_t m() const { return ap_.binding_points.size(); }

  const std::vector<EdgePath>& edge_paths() const { return paths_; }
  std::size_t arcs_on_edge(std::size_t edge) const { return paths_[edge].arcs.size(); }

  /// Graph rebuilt from the arc paths alone.
  AbstractGraph reconstructed_graph() const {
    AbstractGraph g;
    for (const BindingPoint& bp : ap_.binding_points) {
      if (bp.is_vertex()) g.vertices.push_back(bp.label);
    }
    std::sort(g.vertices.begin(), g.vertices.end(), [&](const VertexId& a, const VertexId& b) {
      return graph_.vertex_index(a) < graph_.vertex_index(b);
    });
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      g.edges.push_back({ap_.graph.edges[i].id, ap_.binding_points[paths_[i].points.front()].label,
                         ap_.binding_points[paths_[i].points.back()].label});
    }
    return g;
  }

  friend ValidatedPresentation validate_presentation(ArcPresentation ap);

 private:
  ArcPresentation ap_;
  ValidatedGraph graph_;
  SpatialParams params_;
  std::vector<EdgePath> paths_;
};

inline ValidatedPresentation validate_presentation(ArcPresentation ap) {
  ValidatedPresentation out;
  out.graph_ = validate_graph(ap.graph);
  const ValidatedGraph& g = out.graph_;
  if (g.vertex_count() == 0) fail(ErrorCode::EmptyGraph, "presentation has no vertices");

  const std::size_t m = ap.binding_points.size();
  const std::size_t n = ap.arcs.size();

  for (std::size_t i = 0; i < n; ++i) {
    const Arc& arc = ap.arcs[i];
    if (arc.page != static_cast<int>(i) + 1) {
      fail(ErrorCode::PageGap, "arc at position " + std::to_string(i) + " has page " + std::to_string(arc.page) + ", expected " +
                                   std::to_string(i + 1));
    }
    if (arc.end_a >= m || arc.end_b >= m) fail(ErrorCode::UnknownLabel, "arc on page " + std::to_string(arc.page) + " ends off the axis");
    if (!g.find_edge(arc.edge)) fail(ErrorCode::UnknownLabel, "arc on page " + std::to_string(arc.page) + " names unknown edge '" + arc.edge + "'");
    if (arc.end_a == arc.end_b) fail(ErrorCode::SharedEndpoints, "arc on page " + std::to_string(arc.page) + " has equal ends");
  }

  std::vector<std::optional<std::size_t>> vertex_point(g.vertex_count());
  for (std::size_t i = 0; i < m; ++i) {
    const BindingPoint& bp = ap.binding_points[i];
    if (bp.is_vertex()) {
      auto v = g.find_vertex(bp.label);
      if (!v) fail(ErrorCode::UnknownLabel, "binding point " + std::to_string(i) + " names unknown vertex '" + bp.label + "'");
      if (vertex_point[*v]) fail(ErrorCode::DuplicateId, "vertex '" + bp.label + "' appears twice on the axis");
      vertex_point[*v] = i;
    } else if (!g.find_edge(bp.label)) {
      fail(ErrorCode::UnknownLabel, "binding point " + std::to_string(i) + " names unknown edge '" + bp.label + "'");
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!vertex_point[v]) fail(ErrorCode::DegreeMismatch, "vertex '" + g.graph().vertices[v] + "' has no binding point");
  }

  if (m + g.edge_count() != n + g.vertex_count()) {
    fail(ErrorCode::BindingCountMismatch, std::to_string(m) + " binding points, expected n - e + v = " + std::to_string(n) + " - " +
                                              std::to_string(g.edge_count()) + " + " + std::to_string(g.vertex_count()));
  }

  std::vector<std::vector<std::size_t>> incident(m);
  for (std::size_t i = 0; i < n; ++i) {
    incident[ap.arcs[i].end_a].push_back(i);
    incident[ap.arcs[i].end_b].push_back(i);
  }
  for (std::size_t p = 0; p < m; ++p) {
    const BindingPoint& bp = ap.binding_points[p];
    if (incident[p].empty()) fail(ErrorCode::IsolatedBindingPoint, "binding point " + std::to_string(p) + " has no arcs");
    if (bp.is_vertex()) {
      const std::size_t v = g.vertex_index(bp.label);
      if (incident[p].size() != g.degree(v)) {
        fail(ErrorCode::DegreeMismatch, "vertex '" + bp.label + "' has degree " + std::to_string(g.degree(v)) + " but " +
                                            std::to_string(incident[p].size()) + " arc ends on the axis");
      }
      for (std::size_t a : incident[p]) {
        const Edge& edge = g.graph().edges[*g.find_edge(ap.arcs[a].edge)];
        if (edge.from != bp.label && edge.to != bp.label) {
          fail(ErrorCode::BrokenEdgePath, "arc on page " + std::to_string(a + 1) + " of edge '" + edge.id + "' ends at vertex '" + bp.label + "'");
        }
      }
    } else {
      if (incident[p].size() != 2) {
        fail(ErrorCode::BrokenEdgePath, "interior point " + std::to_string(p) + " has " + std::to_string(incident[p].size()) + " arc ends");
      }
      for (std::size_t a : incident[p]) {
        if (ap.arcs[a].edge != bp.label) {
          fail(ErrorCode::BrokenEdgePath, "interior point " + std::to_string(p) + " of edge '" + bp.label + "' carries an arc of edge '" +
                                              ap.arcs[a].edge + "'");
        }
      }
    }
  }

  std::vector<std::size_t> arcs_per_edge(g.edge_count(), 0);
  for (const Arc& arc : ap.arcs) ++arcs_per_edge[*g.find_edge(arc.edge)];

  out.paths_.resize(g.edge_count());
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    const Edge& edge = g.graph().edges[ei];
    if (arcs_per_edge[ei] == 0) fail(ErrorCode::BrokenEdgePath, "edge '" + edge.id + "' has no arcs");
    EdgePath& path = out.paths_[ei];
    const std::size_t start = *vertex_point[g.vertex_index(edge.from)];
    const std::size_t finish = *vertex_point[g.vertex_index(edge.to)];
    std::vector<bool> used(n, false);
    std::size_t here = start;
    path.points.push_back(here);
    while (true) {
      std::optional<std::size_t> next_arc;
      for (std::size_t a : incident[here]) {
        if (!used[a] && ap.arcs[a].edge == edge.id) {
          next_arc = a;
          break;
        }
      }
      if (!next_arc) fail(ErrorCode::BrokenEdgePath, "edge '" + edge.id + "' stops at binding point " + std::to_string(here));
      used[*next_arc] = true;
      path.arcs.push_back(*next_arc);
      here = ap.arcs[*next_arc].other_end(here);
      path.points.push_back(here);
      if (ap.binding_points[here].is_vertex()) break;
    }
    if (here != finish) {
      fail(ErrorCode::BrokenEdgePath, "edge '" + edge.id + "' runs from '" + edge.from + "' to '" + ap.binding_points[here].label +
                                          "', declared '" + edge.to + "'");
    }
    if (path.arcs.size() != arcs_per_edge[ei]) {
      fail(ErrorCode::BrokenEdgePath, "edge '" + edge.id + "' has " + std::to_string(arcs_per_edge[ei] - path.arcs.size()) +
                                          " arcs off its path");
    }
  }

  if (ap.params) {
    check_spatial_params(*ap.params, g);
    out.params_ = *ap.params;
  } else {
    out.params_ = default_spatial_params(g);
  }
  out.ap_ = std::move(ap);
  return out;
}

/// The sub-presentation carried by one abstract connected component, with
/// binding points and pages renumbered in their original order.
inline ArcPresentation restrict_to_component(const ValidatedPresentation& vp, std::size_t component) {
  const ValidatedGraph& g = vp.graph();
  if (component >= g.component_count()) {
    fail(ErrorCode::ComponentOutOfRange, "component " + std::to_string(component) + " of " + std::to_string(g.component_count()));
  }
  const ArcPresentation& ap = vp.presentation();
  ArcPresentation out;
  for (std::size_t v : g.component_vertices(component)) out.graph.vertices.push_back(g.graph().vertices[v]);
  for (std::size_t e : g.component_edges(component)) out.graph.edges.push_back(g.graph().edges[e]);

  auto point_component = [&](const BindingPoint& bp) {
    if (bp.is_vertex()) return g.component_of_vertex(g.vertex_index(bp.label));
    return g.component_of_edge(*g.find_edge(bp.label));
  };
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t i = 0; i < ap.binding_points.size(); ++i) {
    if (point_component(ap.binding_points[i]) == component) {
      renumber[i] = out.binding_points.size();
      out.binding_points.push_back(ap.binding_points[i]);
    }
  }
  for (const Arc& arc : ap.arcs) {
    if (g.component_of_edge(*g.find_edge(arc.edge)) != component) continue;
    out.arcs.push_back({static_cast<int>(out.arcs.size()) + 1, renumber.at(arc.end_a), renumber.at(arc.end_b), arc.edge});
  }
  return out;
}

}  // namespace stickforge
