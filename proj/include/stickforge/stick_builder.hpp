#pragma once

// Lifts the chords of a circular diagram into a 3D stick embedding with
// n + n_0 sticks.  Chords are placed in page order: bi-initiating chords stay
// horizontal one level above the previous chord, uni-initiating chords rise
// obliquely from the junction over their non-initiating end, and
// non-initiating chords are bent at their midpoint with both ends on existing
// junctions.  All coordinates are exact.

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "stickforge/circular_diagram.hpp"
#include "stickforge/error.hpp"
#include "stickforge/exact.hpp"

namespace stickforge {

enum class Piece { Whole, Left, Right };

constexpr const char* to_string(Piece p) {
  switch (p) {
    case Piece::Whole: return "whole";
    case Piece::Left: return "left";
    case Piece::Right: return "right";
  }
  return "?";
}

/// One straight segment of a chord's lift.  `nodes` names the two endpoints;
/// sticks sharing a node name meet there by construction.
struct Stick {
  Segment3 seg;
  int page = 0;
  EdgeId edge;
  Piece piece = Piece::Whole;
  std::array<std::string, 2> nodes;
};

struct StickEmbedding {
  std::vector<Stick> sticks;
  std::vector<Rational3> junctions;  // by binding point axis index
  std::vector<long> heights;         // z_k by page - 1
};

inline std::string junction_node(std::size_t point) { return "b" + std::to_string(point); }
inline std::string apex_node(int page) { return "apex" + std::to_string(page); }

/// A triangle that must stay free of earlier geometry, except for the
/// junction it is anchored at.
struct ClearanceTriangle {
  std::array<Rational3, 3> corners;
  Rational3 anchor;
};

/// The open region swept between a lifted chord and its horizontal copy at
/// height `z`: one triangle for a uni-initiating chord, two for a
/// non-initiating one, none for a bi-initiating one.
inline std::vector<ClearanceTriangle> lift_triangles(const CircularDiagram& cd, int page,
                                                     const std::vector<std::optional<Rational3>>& junctions, const Rational& z) {
  const Chord& ch = cd.chord(page);
  const ChordClass& cls = cd.classes[static_cast<std::size_t>(page) - 1];
  std::vector<ClearanceTriangle> out;
  if (cls.kind == ChordKind::Uni) {
    const std::size_t init = *cls.initiating_end;
    const std::size_t other = ch.a == init ? ch.b : ch.a;
    const Rational3& anchor = *junctions[other];
    out.push_back({{anchor, lift(cd.boundary[other], z), lift(cd.boundary[init], z)}, anchor});
  } else if (cls.kind == ChordKind::Non) {
    const Rational3 apex = lift(midpoint(cd.boundary[ch.a], cd.boundary[ch.b]), z);
    for (std::size_t end : {ch.a, ch.b}) {
      const Rational3& anchor = *junctions[end];
      out.push_back({{anchor, lift(cd.boundary[end], z), apex}, anchor});
    }
  }
  return out;
}

/// True when no earlier stick meets any clearance triangle of chord `page`
/// at height `z` outside the triangle's anchor junction.
inline bool lift_is_clear(const CircularDiagram& cd, int page, const std::vector<std::optional<Rational3>>& junctions,
                          const std::vector<Stick>& earlier, const Rational& z) {
  for (const ClearanceTriangle& tri : lift_triangles(cd, page, junctions, z)) {
    for (const Stick& s : earlier) {
      if (!touches_at_most(s.seg, clip_to_triangle(s.seg, tri.corners), tri.anchor)) return false;
    }
  }
  return true;
}

/// Smallest integer z > z_prev for which the lift of chord `page` is clear.
/// The predicate is monotone in z (raising the top corner only steepens the
/// lifted sides above every earlier point), so the linear scan is replaced by
/// galloping plus bisection, which returns the same minimum.
inline long clearance_height(const CircularDiagram& cd, int page, const std::vector<std::optional<Rational3>>& junctions,
                             const std::vector<Stick>& earlier, long z_prev) {
  auto clear = [&](long z) { return lift_is_clear(cd, page, junctions, earlier, Rational(z)); };
  long failing = z_prev;
  long step = 1;
  long candidate = z_prev + 1;
  while (!clear(candidate)) {
    failing = candidate;
    if (step > (1L << 40)) fail(ErrorCode::ClearanceSearchExhausted, "no clearance height for chord " + std::to_string(page));
    step *= 2;
    candidate = failing + step;
  }
  long passing = candidate;
  while (passing - failing > 1) {
    const long mid = failing + (passing - failing) / 2;
    (clear(mid) ? passing : failing) = mid;
  }
  return passing;
}

inline StickEmbedding build_stick_embedding(const CircularDiagram& cd) {
  StickEmbedding se;
  std::vector<std::optional<Rational3>> junctions(cd.m);
  long z_prev = 0;

  for (const Chord& ch : cd.chords) {
    const ChordClass& cls = cd.classes[static_cast<std::size_t>(ch.page) - 1];
    const Rational2& pa = cd.boundary[ch.a];
    const Rational2& pb = cd.boundary[ch.b];
    long z = z_prev + 1;

    auto require_junction = [&](std::size_t point) {
      if (!junctions[point]) {
        fail(ErrorCode::MissingJunction, "chord " + std::to_string(ch.page) + " needs the junction over binding point " + std::to_string(point));
      }
    };

    switch (cls.kind) {
      case ChordKind::Bi: {
        junctions[ch.a] = lift(pa, Rational(z));
        junctions[ch.b] = lift(pb, Rational(z));
        se.sticks.push_back({{*junctions[ch.a], *junctions[ch.b]}, ch.page, ch.edge, Piece::Whole, {junction_node(ch.a), junction_node(ch.b)}});
        break;
      }
      case ChordKind::Uni: {
        const std::size_t init = *cls.initiating_end;
        const std::size_t other = ch.a == init ? ch.b : ch.a;
        require_junction(other);
        z = clearance_height(cd, ch.page, junctions, se.sticks, z_prev);
        junctions[init] = lift(cd.boundary[init], Rational(z));
        se.sticks.push_back({{*junctions[ch.a], *junctions[ch.b]}, ch.page, ch.edge, Piece::Whole, {junction_node(ch.a), junction_node(ch.b)}});
        break;
      }
      case ChordKind::Non: {
        require_junction(ch.a);
        require_junction(ch.b);
        z = clearance_height(cd, ch.page, junctions, se.sticks, z_prev);
        const Rational3 apex = lift(midpoint(pa, pb), Rational(z));
        se.sticks.push_back({{*junctions[ch.a], apex}, ch.page, ch.edge, Piece::Left, {junction_node(ch.a), apex_node(ch.page)}});
        se.sticks.push_back({{apex, *junctions[ch.b]}, ch.page, ch.edge, Piece::Right, {apex_node(ch.page), junction_node(ch.b)}});
        break;
      }
    }
    se.heights.push_back(z);
    z_prev = z;
  }

  for (std::size_t i = 0; i < cd.m; ++i) {
    if (!junctions[i]) fail(ErrorCode::MissingJunction, "binding point " + std::to_string(i) + " was never reached");
    se.junctions.push_back(*junctions[i]);
  }
  return se;
}

/// Number of maximal straight sticks: two segments are merged when they are
/// the only segments at a shared endpoint and continue each other in a
/// straight line.
inline std::size_t count_sticks(const StickEmbedding& se) {
  using Key = std::tuple<Rational, Rational, Rational>;
  std::map<Key, std::vector<std::pair<std::size_t, int>>> at_point;
  for (std::size_t i = 0; i < se.sticks.size(); ++i) {
    const Segment3& s = se.sticks[i].seg;
    at_point[{s.a.x, s.a.y, s.a.z}].emplace_back(i, 0);
    at_point[{s.b.x, s.b.y, s.b.z}].emplace_back(i, 1);
  }
  std::vector<std::size_t> parent(se.sticks.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = se.sticks.size();
  for (const auto& [key, ends] : at_point) {
    if (ends.size() != 2) continue;
    auto outward = [&](std::pair<std::size_t, int> end) {
      const Segment3& s = se.sticks[end.first].seg;
      return end.second == 0 ? s.b - s.a : s.a - s.b;
    };
    const Rational3 u = outward(ends[0]);
    const Rational3 w = outward(ends[1]);
    if (cross(u, w) == Rational3{} && dot(u, w) < 0) {
      const std::size_t ra = find(ends[0].first), rb = find(ends[1].first);
      if (ra != rb) {
        parent[ra] = rb;
        --count;
      }
    }
  }
  return count;
}

}  // namespace stickforge
