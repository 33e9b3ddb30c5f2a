#pragma once

// Seeded random arc presentations for property tests and the CLI.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "stickforge/arc_presentation.hpp"
#include "stickforge/error.hpp"

namespace stickforge {

struct RandomProfile {
  enum class Shape { Knot, Theta, Bouquet, Multi };
  Shape shape = Shape::Knot;
  std::size_t theta_edges = 3;  // Theta only
  std::size_t max_arcs = 12;    // cap on n

  static RandomProfile knot(std::size_t max_arcs = 12) { return {Shape::Knot, 0, max_arcs}; }
  static RandomProfile theta(std::size_t t, std::size_t max_arcs = 16) { return {Shape::Theta, t, max_arcs}; }
  static RandomProfile bouquet(std::size_t max_arcs = 12) { return {Shape::Bouquet, 0, max_arcs}; }
  static RandomProfile multi(std::size_t max_arcs = 18) { return {Shape::Multi, 0, max_arcs}; }
};

/// `knot`, `theta(t)`, `bouquet`, `multi`, each optionally followed by
/// `:<max_arcs>`.
inline RandomProfile parse_profile(const std::string& text) {
  std::string stem = text;
  std::optional<std::size_t> cap;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    stem = text.substr(0, colon);
    try {
      cap = std::stoul(text.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad arc cap in profile '" + text + "'");
    }
  }
  RandomProfile p;
  if (stem == "knot") {
    p = RandomProfile::knot();
  } else if (stem == "bouquet") {
    p = RandomProfile::bouquet();
  } else if (stem == "multi") {
    p = RandomProfile::multi();
  } else if (stem.rfind("theta(", 0) == 0 && stem.back() == ')') {
    std::size_t t = 0;
    try {
      t = std::stoul(stem.substr(6, stem.size() - 7));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad theta size in profile '" + text + "'");
    }
    if (t < 1) fail(ErrorCode::ParseError, "theta profile needs at least one edge");
    p = RandomProfile::theta(t, std::max<std::size_t>(16, 2 * t));
  } else {
    fail(ErrorCode::ParseError, "unknown profile '" + text + "' (knot, theta(t), bouquet, multi)");
  }
  if (cap) p.max_arcs = *cap;
  return p;
}

namespace random_detail {

// Portable draws: the standard distributions are implementation-defined.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = engine_.max() - engine_.max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::size_t>(x % span);
  }

  bool coin() { return between(0, 1) == 1; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[between(0, i - 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

// Builder for a presentation: edges are added as point sequences, then the
// axis order and page order are shuffled.
struct Sketch {
  AbstractGraph graph;
  std::vector<BindingPoint> points;
  struct PendingArc {
    std::size_t a, b;
    EdgeId edge;
  };
  std::vector<PendingArc> arcs;
  std::map<VertexId, std::size_t> vertex_point;

  void add_vertex(const VertexId& v) {
    graph.vertices.push_back(v);
    vertex_point[v] = points.size();
    points.push_back(BindingPoint::vertex(v));
  }

  // An edge made of `pieces` arcs.
  void add_edge(const EdgeId& id, const VertexId& from, const VertexId& to, std::size_t pieces) {
    graph.edges.push_back({id, from, to});
    std::size_t here = vertex_point.at(from);
    for (std::size_t i = 1; i < pieces; ++i) {
      const std::size_t next = points.size();
      points.push_back(BindingPoint::interior(id));
      arcs.push_back({here, next, id});
      here = next;
    }
    arcs.push_back({here, vertex_point.at(to), id});
  }

  ArcPresentation finish(Draw& draw) const {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    draw.shuffle(order);
    std::vector<std::size_t> position(points.size());
    ArcPresentation ap;
    ap.graph = graph;
    for (std::size_t i = 0; i < order.size(); ++i) {
      position[order[i]] = i;
      ap.binding_points.push_back(points[order[i]]);
    }
    std::vector<PendingArc> pages = arcs;
    draw.shuffle(pages);
    for (std::size_t p = 0; p < pages.size(); ++p) {
      std::size_t a = position[pages[p].a], b = position[pages[p].b];
      if (draw.coin()) std::swap(a, b);
      ap.arcs.push_back({static_cast<int>(p) + 1, a, b, pages[p].edge});
    }
    return ap;
  }
};

// Splits `total` arcs over `parts` edges, each getting at least `least`.
inline std::vector<std::size_t> split_arcs(Draw& draw, std::size_t total, std::size_t parts, std::size_t least) {
  std::vector<std::size_t> out(parts, least);
  for (std::size_t extra = total - parts * least; extra > 0; --extra) ++out[draw.between(0, parts - 1)];
  return out;
}

inline void add_knot(Sketch& s, Draw& draw, const std::string& tag, std::size_t max_arcs) {
  const VertexId v = "v" + tag;
  s.add_vertex(v);
  s.add_edge("l" + tag, v, v, draw.between(2, std::max<std::size_t>(2, max_arcs)));
}

inline void add_theta(Sketch& s, Draw& draw, const std::string& tag, std::size_t t, std::size_t max_arcs) {
  const VertexId u = "u" + tag, w = "w" + tag;
  s.add_vertex(u);
  s.add_vertex(w);
  const std::size_t total = draw.between(t, std::max(t, max_arcs));
  const auto pieces = split_arcs(draw, total, t, 1);
  for (std::size_t i = 0; i < t; ++i) s.add_edge("e" + tag + "_" + std::to_string(i + 1), u, w, pieces[i]);
}

inline void add_bouquet(Sketch& s, Draw& draw, const std::string& tag, std::size_t max_arcs) {
  const VertexId v = "v" + tag;
  s.add_vertex(v);
  const std::size_t loops = draw.between(1, std::max<std::size_t>(1, std::min<std::size_t>(4, max_arcs / 2)));
  const std::size_t total = draw.between(2 * loops, std::max(2 * loops, max_arcs));
  const auto pieces = split_arcs(draw, total, loops, 2);
  for (std::size_t i = 0; i < loops; ++i) s.add_edge("l" + tag + "_" + std::to_string(i + 1), v, v, pieces[i]);
}

inline ArcPresentation sample(Draw& draw, const RandomProfile& profile) {
  Sketch s;
  switch (profile.shape) {
    case RandomProfile::Shape::Knot: add_knot(s, draw, "", profile.max_arcs); break;
    case RandomProfile::Shape::Theta: add_theta(s, draw, "", profile.theta_edges, profile.max_arcs); break;
    case RandomProfile::Shape::Bouquet: add_bouquet(s, draw, "", profile.max_arcs); break;
    case RandomProfile::Shape::Multi: {
      const std::size_t parts = draw.between(2, 3);
      const std::size_t share = std::max<std::size_t>(4, profile.max_arcs / parts);
      for (std::size_t j = 0; j < parts; ++j) {
        const std::string tag = std::to_string(j + 1);
        switch (draw.between(0, 2)) {
          case 0: add_knot(s, draw, tag, share); break;
          case 1: add_theta(s, draw, tag, draw.between(2, 3), share); break;
          default: add_bouquet(s, draw, tag, share); break;
        }
      }
      break;
    }
  }
  return s.finish(draw);
}

}  // namespace random_detail

inline constexpr int kRandomAttempts = 100;

/// A validator-clean presentation drawn deterministically from `seed`.
inline ArcPresentation random_presentation(std::uint64_t seed, const RandomProfile& profile) {
  if (profile.shape == RandomProfile::Shape::Theta && profile.theta_edges < 1) fail(ErrorCode::InvalidParams, "theta profile needs t >= 1");
  random_detail::Draw draw(seed);
  for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
    ArcPresentation ap = random_detail::sample(draw, profile);
    try {
      validate_presentation(ap);
      return ap;
    } catch (const Error&) {
    }
  }
  fail(ErrorCode::GenerationExhausted, "no valid presentation after " + std::to_string(kRandomAttempts) + " samples");
}

}  // namespace stickforge
