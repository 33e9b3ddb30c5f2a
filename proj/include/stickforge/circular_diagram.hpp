#pragma once

// Circular form of an arc presentation: the binding axis closed up through
// the point at infinity becomes the boundary of the unit disk and every arc
// becomes a straight chord.  Lower pages pass under higher ones.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stickforge/arc_presentation.hpp"
#include "stickforge/exact.hpp"

namespace stickforge {

enum class ChordKind { Bi, Uni, Non };

constexpr const char* to_string(ChordKind k) {
  switch (k) {
    case ChordKind::Bi: return "Bi";
    case ChordKind::Uni: return "Uni";
    case ChordKind::Non: return "Non";
  }
  return "?";
}

struct ChordClass {
  ChordKind kind = ChordKind::Non;
  std::optional<std::size_t> initiating_end;  // set for Uni only
  friend bool operator==(const ChordClass&, const ChordClass&) = default;
};

struct Chord {
  int page = 0;
  std::size_t a = 0;  // binding point (axis index)
  std::size_t b = 0;
  EdgeId edge;
};

struct ChordCounts {
  std::size_t bi = 0;   // n_2
  std::size_t uni = 0;  // n_1
  std::size_t non = 0;  // n_0
  friend bool operator==(const ChordCounts&, const ChordCounts&) = default;
};

struct CircularDiagram {
  std::size_t m = 0;
  std::vector<Rational2> boundary;   // by axis index, clockwise from the top
  std::vector<Chord> chords;         // chords[k - 1] is l_k
  std::vector<std::pair<int, int>> crossings;  // (i, j), i < j: l_i under l_j
  std::vector<int> initiating;       // p(b) by axis index
  std::vector<ChordClass> classes;   // by page - 1
  ChordCounts counts;

  std::size_t n() const { return chords.size(); }
  const Chord& chord(int page) const { return chords.at(static_cast<std::size_t>(page) - 1); }
};

/// Rational points on the unit circle, one per binding point, clockwise from
/// the top with the point at infinity in the gap before index 0.  Each point
/// is the second intersection of the circle with a line through a rational
/// pivot in that gap, so the coordinates are exact while the angles match
/// the even layout to within about 2^-15 radians.
inline std::vector<Rational2> boundary_positions(std::size_t m) {
  if (m < 2) throw std::invalid_argument("a circular diagram needs at least two binding points");
  constexpr long kScale = 1L << 16;
  const double pi = std::numbers::pi;

  Rational2 pivot;
  if (m == 2) {
    pivot = {Rational(-1), Rational(0)};
  } else {
    const double gap = pi / 2 + pi / static_cast<double>(m);
    Rational t(std::lround(std::tan(gap / 2) * kScale), kScale);
    t.canonicalize();
    const Rational denom = 1 + t * t;
    pivot = {(1 - t * t) / denom, 2 * t / denom};
  }
  const double pivot_angle = std::atan2(pivot.y.get_d(), pivot.x.get_d());

  std::vector<Rational2> points;
  points.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double theta = pi / 2 - 2 * pi * static_cast<double>(i) / static_cast<double>(m);
    const double direction = (pivot_angle + theta) / 2 + pi / 2;
    const Rational wx(std::lround(std::cos(direction) * kScale));
    const Rational wy(std::lround(std::sin(direction) * kScale));
    const Rational lambda = -2 * (pivot.x * wx + pivot.y * wy) / (wx * wx + wy * wy);
    points.push_back({pivot.x + lambda * wx, pivot.y + lambda * wy});
  }

  // Clockwise angle from the pivot must increase strictly with the index.
  double previous = 0;
  for (std::size_t i = 0; i < m; ++i) {
    double angle = pivot_angle - std::atan2(points[i].y.get_d(), points[i].x.get_d());
    while (angle <= 0) angle += 2 * pi;
    while (angle > 2 * pi) angle -= 2 * pi;
    if (points[i].x * points[i].x + points[i].y * points[i].y != 1 || angle <= previous || angle >= 2 * pi) {
      throw std::logic_error("boundary placement lost the cyclic order at index " + std::to_string(i));
    }
    previous = angle;
  }
  return points;
}

/// True when the chords {a, b} and {c, d} have four distinct ends that
/// alternate around the circle.
inline bool chords_interleave(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  if (a == c || a == d || b == c || b == d) return false;
  if (a > b) std::swap(a, b);
  const bool c_inside = a < c && c < b;
  const bool d_inside = a < d && d < b;
  return c_inside != d_inside;
}

/// p(b): the smallest page among chords incident to each binding point.
inline std::vector<int> initiating_pages(const CircularDiagram& cd) {
  std::vector<int> p(cd.m, 0);
  for (const Chord& ch : cd.chords) {
    for (std::size_t end : {ch.a, ch.b}) {
      if (p[end] == 0 || ch.page < p[end]) p[end] = ch.page;
    }
  }
  return p;
}

inline std::pair<std::vector<ChordClass>, ChordCounts> classify_chords(const CircularDiagram& cd) {
  std::vector<ChordClass> classes;
  ChordCounts counts;
  for (const Chord& ch : cd.chords) {
    const bool a_init = cd.initiating[ch.a] == ch.page;
    const bool b_init = cd.initiating[ch.b] == ch.page;
    if (a_init && b_init) {
      classes.push_back({ChordKind::Bi, std::nullopt});
      ++counts.bi;
    } else if (a_init || b_init) {
      classes.push_back({ChordKind::Uni, a_init ? ch.a : ch.b});
      ++counts.uni;
    } else {
      classes.push_back({ChordKind::Non, std::nullopt});
      ++counts.non;
    }
  }
  return {std::move(classes), counts};
}

inline CircularDiagram to_circular(const ValidatedPresentation& vp) {
  const ArcPresentation& ap = vp.presentation();
  CircularDiagram cd;
  cd.m = vp.m();
  cd.boundary = boundary_positions(cd.m);
  for (const Arc& arc : ap.arcs) cd.chords.push_back({arc.page, arc.end_a, arc.end_b, arc.edge});
  for (std::size_t i = 0; i < cd.chords.size(); ++i) {
    for (std::size_t j = i + 1; j < cd.chords.size(); ++j) {
      const Chord& li = cd.chords[i];
      const Chord& lj = cd.chords[j];
      if (chords_interleave(li.a, li.b, lj.a, lj.b)) cd.crossings.emplace_back(li.page, lj.page);
    }
  }
  cd.initiating = initiating_pages(cd);
  std::tie(cd.classes, cd.counts) = classify_chords(cd);
  return cd;
}

/// Exact intersection point of two interleaving chords.
inline Rational2 crossing_point(const CircularDiagram& cd, int page_i, int page_j) {
  const Chord& ci = cd.chord(page_i);
  const Chord& cj = cd.chord(page_j);
  const Rational2& p = cd.boundary[ci.a];
  const Rational2& q = cd.boundary[ci.b];
  const Rational2& r = cd.boundary[cj.a];
  const Rational2& s = cd.boundary[cj.b];
  const Rational d1 = orient2d(r, s, p);
  const Rational d2 = orient2d(r, s, q);
  const Rational t = d1 / (d1 - d2);
  return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

}  // namespace stickforge
