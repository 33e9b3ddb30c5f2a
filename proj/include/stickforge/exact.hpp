#pragma once

// Exact rational geometry: points, segments and the clipping predicates used
// by the stick builder.

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>

namespace stickforge {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q" (or "p" for integers), canonical.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational q(text, 10);
  q.canonicalize();
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in rational '" + text + "'");
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

struct Rational2 {
  Rational x, y;
  friend bool operator==(const Rational2&, const Rational2&) = default;
};

struct Rational3 {
  Rational x, y, z;

  Rational& operator[](int axis) { return axis == 0 ? x : axis == 1 ? y : z; }
  const Rational& operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }

  Rational2 projected() const { return {x, y}; }

  friend bool operator==(const Rational3&, const Rational3&) = default;
  friend Rational3 operator+(const Rational3& a, const Rational3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Rational3 operator-(const Rational3& a, const Rational3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Rational3 operator*(const Rational& s, const Rational3& a) { return {s * a.x, s * a.y, s * a.z}; }
};

inline Rational3 lift(const Rational2& p, const Rational& z) { return {p.x, p.y, z}; }

inline Rational dot(const Rational3& a, const Rational3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Rational3 cross(const Rational3& a, const Rational3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Rational orient2d(const Rational2& a, const Rational2& b, const Rational2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline Rational2 midpoint(const Rational2& a, const Rational2& b) {
  return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

struct Segment3 {
  Rational3 a, b;
  Rational3 at(const Rational& t) const { return a + t * (b - a); }
};

/// A closed parameter interval [lo, hi] on a segment, possibly empty.  Each
/// constraint is affine in t, so clipping stays exact.
class ParamInterval {
 public:
  ParamInterval() : lo_(0), hi_(1) {}

  bool empty() const { return empty_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  /// Keep t with  c0 + c1 * t >= 0.
  void keep_nonnegative(const Rational& c0, const Rational& c1) {
    if (empty_) return;
    if (c1 == 0) {
      if (c0 < 0) empty_ = true;
      return;
    }
    Rational root = -c0 / c1;
    if (c1 > 0) {
      if (root > lo_) lo_ = root;
    } else {
      if (root < hi_) hi_ = root;
    }
    if (lo_ > hi_) empty_ = true;
  }

  /// Keep t with  c0 + c1 * t == 0.
  void keep_zero(const Rational& c0, const Rational& c1) {
    keep_nonnegative(c0, c1);
    keep_nonnegative(-c0, -c1);
  }

 private:
  Rational lo_, hi_;
  bool empty_ = false;
};

namespace detail {

// Coefficients (c0, c1) of  f(a + t(b - a))  for an affine f given as a
// callable on points: f(p) = f(a) + t (f(b) - f(a)).
template <typename F>
std::pair<Rational, Rational> affine_along(const Segment3& s, F&& f) {
  Rational fa = f(s.a);
  Rational fb = f(s.b);
  return {fa, fb - fa};
}

}  // namespace detail

/// Parameters t on `s` where s(t) lies on the closed segment `other`.
inline ParamInterval clip_to_segment(const Segment3& s, const Segment3& other) {
  ParamInterval iv;
  const Rational3 dir = other.b - other.a;
  for (int axis = 0; axis < 3; ++axis) {
    auto [c0, c1] = detail::affine_along(s, [&](const Rational3& p) { return cross(p - other.a, dir)[axis]; });
    iv.keep_zero(c0, c1);
  }
  {
    auto [c0, c1] = detail::affine_along(s, [&](const Rational3& p) { return dot(p - other.a, dir); });
    iv.keep_nonnegative(c0, c1);
  }
  {
    auto [c0, c1] = detail::affine_along(s, [&](const Rational3& p) { return dot(other.b - p, dir); });
    iv.keep_nonnegative(c0, c1);
  }
  return iv;
}

/// Parameters t on `s` where s(t) lies in the closed, non-degenerate triangle.
inline ParamInterval clip_to_triangle(const Segment3& s, const std::array<Rational3, 3>& tri) {
  ParamInterval iv;
  const Rational3 normal = cross(tri[1] - tri[0], tri[2] - tri[0]);
  {
    auto [c0, c1] = detail::affine_along(s, [&](const Rational3& p) { return dot(p - tri[0], normal); });
    iv.keep_zero(c0, c1);
  }
  for (int i = 0; i < 3; ++i) {
    const Rational3& from = tri[i];
    const Rational3& to = tri[(i + 1) % 3];
    auto [c0, c1] = detail::affine_along(s, [&](const Rational3& p) { return dot(cross(to - from, p - from), normal); });
    iv.keep_nonnegative(c0, c1);
  }
  return iv;
}

/// True when the clipped set is empty or is exactly the single point `allowed`.
inline bool touches_at_most(const Segment3& s, const ParamInterval& iv, const std::optional<Rational3>& allowed) {
  if (iv.empty()) return true;
  if (iv.lo() != iv.hi() || !allowed) return false;
  return s.at(iv.lo()) == *allowed;
}

}  // namespace stickforge
