#pragma once

// Combinatorial multigraph with loops, plus the declared spatial parameters
// (crossing number, bouquet cut-components, non-splittable components).

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "stickforge/error.hpp"

namespace stickforge {

using VertexId = std::string;
using EdgeId = std::string;

struct Edge {
  EdgeId id;
  VertexId from;
  VertexId to;

  bool is_loop() const { return from == to; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct AbstractGraph {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  friend bool operator==(const AbstractGraph&, const AbstractGraph&) = default;
};

/// Declared spatial parameters.  `heuristic` marks values guessed from the
/// abstract graph rather than supplied by the user or a catalog entry.
struct SpatialParams {
  long c = 0;
  long b = 0;
  long k = 1;
  bool heuristic = false;
  friend bool operator==(const SpatialParams&, const SpatialParams&) = default;
};

class ValidatedGraph {
 public:
  const AbstractGraph& graph() const { return graph_; }
  std::size_t edge_count() const { return graph_.edges.size(); }
  std::size_t vertex_count() const { return graph_.vertices.size(); }
  std::size_t component_count() const { return component_vertices_.size(); }

  std::size_t vertex_index(const VertexId& id) const { return vertex_index_.at(id); }
  std::optional<std::size_t> find_vertex(const VertexId& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find_edge(const EdgeId& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  /// Degree with loops counted twice.
  std::size_t degree(std::size_t vertex) const { return degree_[vertex]; }

  std::size_t component_of_vertex(std::size_t vertex) const { return vertex_component_[vertex]; }
  std::size_t component_of_edge(std::size_t edge) const {
    return vertex_component_[vertex_index_.at(graph_.edges[edge].from)];
  }
  const std::vector<std::size_t>& component_vertices(std::size_t component) const {
    return component_vertices_.at(component);
  }
  const std::vector<std::size_t>& component_edges(std::size_t component) const {
    return component_edges_.at(component);
  }

  friend ValidatedGraph validate_graph(AbstractGraph g);

 private:
  AbstractGraph graph_;
  std::map<VertexId, std::size_t> vertex_index_;
  std::map<EdgeId, std::size_t> edge_index_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> vertex_component_;
  std::vector<std::vector<std::size_t>> component_vertices_;
  std::vector<std::vector<std::size_t>> component_edges_;
};

/// Checks id uniqueness and endpoint declarations, then computes degrees and
/// the connected-component partition.  Components are numbered by their
/// smallest vertex position.
inline ValidatedGraph validate_graph(AbstractGraph g) {
  ValidatedGraph out;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!out.vertex_index_.emplace(g.vertices[i], i).second) fail(ErrorCode::DuplicateId, "vertex '" + g.vertices[i] + "'");
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (!out.edge_index_.emplace(e.id, i).second) fail(ErrorCode::DuplicateId, "edge '" + e.id + "'");
    for (const VertexId& end : {e.from, e.to}) {
      if (!out.vertex_index_.count(end)) fail(ErrorCode::DanglingEndpoint, "edge '" + e.id + "' names unknown vertex '" + end + "'");
    }
  }

  const std::size_t nv = g.vertices.size();
  out.degree_.assign(nv, 0);
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges) {
    std::size_t a = out.vertex_index_[e.from];
    std::size_t b = out.vertex_index_[e.to];
    ++out.degree_[a];
    ++out.degree_[b];
    std::size_t ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }

  std::map<std::size_t, std::size_t> root_to_component;
  out.vertex_component_.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    auto [it, inserted] = root_to_component.emplace(find(v), out.component_vertices_.size());
    if (inserted) out.component_vertices_.emplace_back();
    out.vertex_component_[v] = it->second;
    out.component_vertices_[it->second].push_back(v);
  }
  out.component_edges_.resize(out.component_vertices_.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    out.component_edges_[out.vertex_component_[out.vertex_index_[g.edges[i].from]]].push_back(i);
  }
  out.graph_ = std::move(g);
  return out;
}

/// One vertex, every edge a loop.
inline bool is_abstract_bouquet(const ValidatedGraph& g, std::size_t component) {
  if (component >= g.component_count()) {
    fail(ErrorCode::ComponentOutOfRange, "component " + std::to_string(component) + " of " + std::to_string(g.component_count()));
  }
  if (g.component_vertices(component).size() != 1) return false;
  const auto& edges = g.graph().edges;
  return std::all_of(g.component_edges(component).begin(), g.component_edges(component).end(),
                     [&](std::size_t e) { return edges[e].is_loop(); });
}

/// Guesses k and b from the abstract graph.  They are sphere-based quantities
/// of the embedding (a Hopf link has two abstract components but k = 1), so
/// the result is always flagged heuristic.
inline SpatialParams default_spatial_params(const ValidatedGraph& g) {
  SpatialParams p;
  p.c = 0;
  p.k = static_cast<long>(g.component_count());
  p.b = 0;
  for (std::size_t i = 0; i < g.component_count(); ++i) {
    if (is_abstract_bouquet(g, i)) ++p.b;
  }
  p.heuristic = true;
  return p;
}

inline void check_spatial_params(const SpatialParams& p, const ValidatedGraph& g) {
  if (p.c < 0 || p.b < 0) fail(ErrorCode::InvalidParams, "c and b must be non-negative");
  if (p.k < 1) fail(ErrorCode::InvalidParams, "k must be at least 1");
  if (static_cast<std::size_t>(p.k) > g.component_count()) {
    fail(ErrorCode::InvalidParams, "k = " + std::to_string(p.k) + " exceeds the " + std::to_string(g.component_count()) +
                                       " connected components of the graph");
  }
}

}  // namespace stickforge
