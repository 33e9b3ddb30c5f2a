#pragma once

// Built-in arc presentations with their published spatial parameters.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "stickforge/arc_presentation.hpp"
#include "stickforge/error.hpp"

namespace stickforge {

namespace catalog_detail {

// Appends a vertex-plus-loop component with two arcs between a vertex point
// and an interior point.
inline void add_unknot(ArcPresentation& ap, const std::string& suffix) {
  const std::string v = "v" + suffix;
  const std::string l = "l" + suffix;
  ap.graph.vertices.push_back(v);
  ap.graph.edges.push_back({l, v, v});
  const std::size_t base = ap.binding_points.size();
  ap.binding_points.push_back(BindingPoint::vertex(v));
  ap.binding_points.push_back(BindingPoint::interior(l));
  for (int i = 0; i < 2; ++i) {
    ap.arcs.push_back({static_cast<int>(ap.arcs.size()) + 1, base, base + 1, l});
  }
}

inline std::optional<long> parse_argument(std::string_view name, std::string_view stem) {
  if (name.substr(0, stem.size()) != stem) return std::nullopt;
  std::string_view rest = name.substr(stem.size());
  if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') return std::nullopt;
  rest = rest.substr(1, rest.size() - 2);
  long value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
  return value;
}

}  // namespace catalog_detail

inline ArcPresentation catalog_unknot() {
  ArcPresentation ap;
  catalog_detail::add_unknot(ap, "");
  ap.params = SpatialParams{0, 1, 1, false};
  return ap;
}

/// Five binding points q_0..q_4 with the knot's vertex at q_0; the arc on
/// page k joins q_{k mod 5} and q_{(k+2) mod 5}.
inline ArcPresentation catalog_trefoil() {
  ArcPresentation ap;
  ap.graph.vertices = {"v"};
  ap.graph.edges = {{"l", "v", "v"}};
  ap.binding_points.push_back(BindingPoint::vertex("v"));
  for (int i = 1; i < 5; ++i) ap.binding_points.push_back(BindingPoint::interior("l"));
  for (int k = 1; k <= 5; ++k) {
    ap.arcs.push_back({k, static_cast<std::size_t>(k % 5), static_cast<std::size_t>((k + 2) % 5), "l"});
  }
  ap.params = SpatialParams{3, 1, 1, false};
  return ap;
}

/// Two unknots on the axis points {0, 2} and {1, 3}, pages alternating
/// between them.
inline ArcPresentation catalog_hopf() {
  ArcPresentation ap;
  ap.graph.vertices = {"a", "b"};
  ap.graph.edges = {{"la", "a", "a"}, {"lb", "b", "b"}};
  ap.binding_points = {BindingPoint::vertex("a"), BindingPoint::vertex("b"), BindingPoint::interior("la"),
                       BindingPoint::interior("lb")};
  ap.arcs = {{1, 0, 2, "la"}, {2, 1, 3, "lb"}, {3, 0, 2, "la"}, {4, 1, 3, "lb"}};
  ap.params = SpatialParams{2, 0, 1, false};
  return ap;
}

inline ArcPresentation catalog_theta_trivial(long edges) {
  if (edges < 1) fail(ErrorCode::UnknownCatalogEntry, "theta_trivial needs at least one edge");
  ArcPresentation ap;
  ap.graph.vertices = {"u", "w"};
  ap.binding_points = {BindingPoint::vertex("u"), BindingPoint::vertex("w")};
  for (long i = 1; i <= edges; ++i) {
    const std::string id = "e" + std::to_string(i);
    ap.graph.edges.push_back({id, "u", "w"});
    ap.arcs.push_back({static_cast<int>(i), 0, 1, id});
  }
  ap.params = SpatialParams{0, 0, 1, false};
  return ap;
}

inline ArcPresentation catalog_unlink(long components) {
  if (components < 1) fail(ErrorCode::UnknownCatalogEntry, "unlink needs at least one component");
  ArcPresentation ap;
  for (long i = 1; i <= components; ++i) catalog_detail::add_unknot(ap, std::to_string(i));
  ap.params = SpatialParams{0, components, components, false};
  return ap;
}

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"unknot", "trefoil", "hopf", "theta_trivial(n)", "unlink(n)"};
  return names;
}

/// Looks up `unknot`, `trefoil`, `hopf`, `theta_trivial(n)` or `unlink(n)`.
inline ArcPresentation catalog(std::string_view name) {
  if (name == "unknot") return catalog_unknot();
  if (name == "trefoil") return catalog_trefoil();
  if (name == "hopf") return catalog_hopf();
  if (auto n = catalog_detail::parse_argument(name, "theta_trivial")) return catalog_theta_trivial(*n);
  if (auto n = catalog_detail::parse_argument(name, "unlink")) return catalog_unlink(*n);
  fail(ErrorCode::UnknownCatalogEntry, "no catalog entry '" + std::string(name) + "'");
}

}  // namespace stickforge
