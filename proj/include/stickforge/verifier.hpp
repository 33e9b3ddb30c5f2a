#pragma once

// Independent certification of built embeddings.  The exact predicates here
// are orientation-based and share nothing with the builders' clipping code;
// the verifier only sees the embedding and the circular diagram recomputed
// from the presentation.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stickforge/circular_diagram.hpp"
#include "stickforge/equilateral_builder.hpp"
#include "stickforge/exact.hpp"
#include "stickforge/stick_builder.hpp"
#include "stickforge/tolerances.hpp"
#include "stickforge/vec3.hpp"

namespace stickforge {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string summary;
  std::vector<std::string> witnesses;  // non-empty whenever pass is false

  CheckResult() = default;
  explicit CheckResult(std::string check) : name(std::move(check)) {}

  void fail_with(std::string witness) {
    pass = false;
    witnesses.push_back(std::move(witness));
  }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

namespace verify_detail {

inline Rational orient3d(const Rational3& a, const Rational3& b, const Rational3& c, const Rational3& d) {
  const Rational3 u = b - a, v = c - a, w = d - a;
  return u.x * (v.y * w.z - v.z * w.y) - u.y * (v.x * w.z - v.z * w.x) + u.z * (v.x * w.y - v.y * w.x);
}

inline std::string fmt(const Rational3& p) {
  return "(" + p.x.get_str() + ", " + p.y.get_str() + ", " + p.z.get_str() + ")";
}

// 1D overlap of collinear segments, measured along p.
struct Contact {
  enum class Kind { None, Point, Overlap } kind = Kind::None;
  Rational3 point;
};

inline Contact collinear_contact(const Segment3& p, const Segment3& q) {
  const Rational3 d = p.b - p.a;
  const Rational dd = dot(d, d);
  Rational t0 = dot(q.a - p.a, d) / dd;
  Rational t1 = dot(q.b - p.a, d) / dd;
  if (t0 > t1) std::swap(t0, t1);
  const Rational lo = t0 > 0 ? t0 : Rational(0);
  const Rational hi = t1 < 1 ? t1 : Rational(1);
  if (lo > hi) return {};
  if (lo == hi) return {Contact::Kind::Point, p.a + lo * d};
  return {Contact::Kind::Overlap, {}};
}

/// Exact contact of two non-degenerate closed segments in space.
inline Contact segment_contact(const Segment3& p, const Segment3& q) {
  if (orient3d(p.a, p.b, q.a, q.b) != 0) return {};
  const Rational3 d = p.b - p.a;
  Rational3 normal = cross(d, q.a - p.a);
  if (normal == Rational3{}) normal = cross(d, q.b - p.a);
  if (normal == Rational3{}) return collinear_contact(p, q);

  // Drop the coordinate where the common plane's normal is largest; the
  // projection is then injective on the plane.
  int drop = 0;
  for (int axis = 1; axis < 3; ++axis) {
    if (abs(normal[axis]) > abs(normal[drop])) drop = axis;
  }
  const int u = drop == 0 ? 1 : 0;
  const int w = drop == 2 ? 1 : 2;
  auto flat = [&](const Rational3& x) { return Rational2{x[u], x[w]}; };
  const Rational2 pa = flat(p.a), pb = flat(p.b), qa = flat(q.a), qb = flat(q.b);
  const int o1 = sign(orient2d(pa, pb, qa));
  const int o2 = sign(orient2d(pa, pb, qb));
  const int o3 = sign(orient2d(qa, qb, pa));
  const int o4 = sign(orient2d(qa, qb, pb));
  if (o1 == 0 && o2 == 0) return collinear_contact(p, q);
  if ((o1 * o2 > 0) || (o3 * o4 > 0)) return {};
  const Rational r3 = orient2d(qa, qb, pa);
  const Rational r4 = orient2d(qa, qb, pb);
  const Rational t = r3 / (r3 - r4);
  return {Contact::Kind::Point, p.at(t)};
}

inline std::string short_number(double x) {
  std::ostringstream out;
  out.precision(3);
  out << x;
  return out.str();
}

inline bool is_endpoint(const Segment3& s, const Rational3& x) { return s.a == x || s.b == x; }

// Parameter of the projection of x along the projected segment [a, b].
inline Rational projected_param(const Rational2& a, const Rational2& b, const Rational2& x) {
  const Rational dx = b.x - a.x, dy = b.y - a.y;
  return ((x.x - a.x) * dx + (x.y - a.y) * dy) / (dx * dx + dy * dy);
}

}  // namespace verify_detail

/// Pairwise exact intersection test.  Two sticks may only meet in a single
/// point that is an endpoint of both and carries the same node name in both.
inline CheckResult check_simplicity(const std::vector<Stick>& sticks) {
  using namespace verify_detail;
  CheckResult r{"simplicity"};
  for (std::size_t i = 0; i < sticks.size(); ++i) {
    if (sticks[i].seg.a == sticks[i].seg.b) r.fail_with("stick " + std::to_string(i) + " is degenerate");
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < sticks.size(); ++i) {
    for (std::size_t j = i + 1; j < sticks.size(); ++j) {
      const Stick& s = sticks[i];
      const Stick& t = sticks[j];
      if (s.seg.a == s.seg.b || t.seg.a == t.seg.b) continue;
      ++pairs;
      const Contact c = segment_contact(s.seg, t.seg);
      if (c.kind == Contact::Kind::None) continue;
      const std::string where = "sticks " + std::to_string(i) + " (page " + std::to_string(s.page) + ") and " + std::to_string(j) +
                                " (page " + std::to_string(t.page) + ")";
      if (c.kind == Contact::Kind::Overlap) {
        r.fail_with(where + " overlap along a segment");
        continue;
      }
      bool declared = false;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const Rational3& ea = a == 0 ? s.seg.a : s.seg.b;
          const Rational3& eb = b == 0 ? t.seg.a : t.seg.b;
          declared = declared || (s.nodes[a] == t.nodes[b] && ea == c.point && eb == c.point);
        }
      }
      if (!declared) r.fail_with(where + " meet at undeclared point " + fmt(c.point));
    }
  }
  r.summary = std::to_string(pairs) + " pairs checked exactly";
  return r;
}

/// Every stick of chord k projects into l_k, the projections of its sticks
/// tile l_k exactly, consecutive sticks meet, and the chord's ends sit on the
/// junctions over its binding points, which themselves project onto the
/// binding points.
inline CheckResult check_projection(const StickEmbedding& se, const CircularDiagram& cd) {
  using namespace verify_detail;
  CheckResult r{"projection"};
  if (!se.heights.empty() && se.heights.size() != cd.n()) r.fail_with("heights table has " + std::to_string(se.heights.size()) + " entries");
  if (se.junctions.size() != cd.m) {
    r.fail_with("embedding has " + std::to_string(se.junctions.size()) + " junctions, diagram has " + std::to_string(cd.m) + " binding points");
    return r;
  }
  for (std::size_t i = 0; i < cd.m; ++i) {
    if (se.junctions[i].projected() != cd.boundary[i]) r.fail_with("junction " + std::to_string(i) + " does not project onto its binding point");
  }

  std::map<int, std::vector<std::size_t>> by_page;
  for (std::size_t i = 0; i < se.sticks.size(); ++i) by_page[se.sticks[i].page].push_back(i);
  for (const auto& [page, ids] : by_page) {
    if (page < 1 || static_cast<std::size_t>(page) > cd.n()) r.fail_with("stick " + std::to_string(ids.front()) + " names page " + std::to_string(page));
  }

  for (const Chord& ch : cd.chords) {
    const std::string tag = "chord " + std::to_string(ch.page);
    auto it = by_page.find(ch.page);
    if (it == by_page.end()) {
      r.fail_with(tag + " has no sticks");
      continue;
    }
    const Rational2& A = cd.boundary[ch.a];
    const Rational2& B = cd.boundary[ch.b];
    struct Span {
      Rational lo, hi;
      Rational3 at_lo, at_hi;
    };
    std::vector<Span> spans;
    bool on_line = true;
    for (std::size_t id : it->second) {
      const Segment3& s = se.sticks[id].seg;
      for (const Rational3* p : {&s.a, &s.b}) {
        if (orient2d(A, B, p->projected()) != 0) {
          r.fail_with(tag + ": stick " + std::to_string(id) + " endpoint " + fmt(*p) + " projects off the chord line");
          on_line = false;
        }
      }
      Rational ta = projected_param(A, B, s.a.projected());
      Rational tb = projected_param(A, B, s.b.projected());
      if (ta <= tb) {
        spans.push_back({ta, tb, s.a, s.b});
      } else {
        spans.push_back({tb, ta, s.b, s.a});
      }
    }
    if (!on_line) continue;
    std::sort(spans.begin(), spans.end(), [](const Span& x, const Span& y) { return x.lo < y.lo; });
    Rational reach = 0;
    std::optional<Rational3> previous_end;
    for (const Span& sp : spans) {
      if (sp.lo != reach) r.fail_with(tag + ": projections leave a gap or overlap at parameter " + sp.lo.get_str());
      if (sp.hi <= sp.lo) r.fail_with(tag + ": a stick projects to a point");
      if (previous_end && *previous_end != sp.at_lo) r.fail_with(tag + ": consecutive sticks do not meet, " + fmt(*previous_end) + " vs " + fmt(sp.at_lo));
      reach = sp.hi;
      previous_end = sp.at_hi;
    }
    if (reach != 1) r.fail_with(tag + ": projections stop at parameter " + reach.get_str());
    if (spans.front().at_lo != se.junctions[ch.a]) r.fail_with(tag + ": end over binding point " + std::to_string(ch.a) + " is off its junction");
    if (spans.back().at_hi != se.junctions[ch.b]) r.fail_with(tag + ": end over binding point " + std::to_string(ch.b) + " is off its junction");
    if (se.heights.size() == cd.n()) {
      Rational top = spans.front().at_lo.z;
      for (const Span& sp : spans) top = std::max({top, sp.at_lo.z, sp.at_hi.z});
      const Rational listed(se.heights[static_cast<std::size_t>(ch.page) - 1]);
      if (top != listed) r.fail_with(tag + ": heights table gives " + listed.get_str() + ", sticks reach " + top.get_str());
    }
  }
  r.summary = std::to_string(cd.n()) + " chords, " + std::to_string(cd.m) + " junctions";
  return r;
}

/// Height of chord `page`'s lift over the planar point x (which must lie on
/// the chord).
inline std::optional<Rational> lift_height(const StickEmbedding& se, int page, const Rational2& x) {
  for (const Stick& s : se.sticks) {
    if (s.page != page) continue;
    const Rational2 a = s.seg.a.projected();
    const Rational2 b = s.seg.b.projected();
    if (a == b || orient2d(a, b, x) != 0) continue;
    const Rational t = verify_detail::projected_param(a, b, x);
    if (t < 0 || t > 1) continue;
    return s.seg.a.z + t * (s.seg.b.z - s.seg.a.z);
  }
  return std::nullopt;
}

/// At every crossing (i, j) with i < j, chord i's lift is strictly below
/// chord j's.
inline CheckResult check_crossing_order(const StickEmbedding& se, const CircularDiagram& cd) {
  CheckResult r{"crossing_order"};
  std::size_t verified = 0;
  for (const auto& [i, j] : cd.crossings) {
    const Rational2 x = crossing_point(cd, i, j);
    const auto hi = lift_height(se, i, x);
    const auto hj = lift_height(se, j, x);
    const std::string tag = "crossing (" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (!hi || !hj) {
      r.fail_with(tag + ": a chord has no stick over the crossing point");
      continue;
    }
    if (!(*hi < *hj)) {
      r.fail_with(tag + ": under-chord height " + hi->get_str() + " is not below over-chord height " + hj->get_str());
      continue;
    }
    ++verified;
  }
  r.summary = std::to_string(verified) + "/" + std::to_string(cd.crossings.size()) + " crossings in order";
  return r;
}

inline VerificationReport verify_stick_embedding(const StickEmbedding& se, const CircularDiagram& cd) {
  return {{check_simplicity(se.sticks), check_projection(se, cd), check_crossing_order(se, cd)}};
}

namespace verify_detail {

inline double clearance(const EqStick& s, const EqStick& t) {
  std::vector<std::pair<int, int>> shared;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (s.nodes[a] == t.nodes[b]) shared.emplace_back(a, b);
    }
  }
  if (shared.empty()) return segment_distance(s.a, s.b, t.a, t.b);
  if (shared.size() > 1) return 0.0;
  const Vec3 s_far = shared[0].first == 0 ? s.b : s.a;
  const Vec3 t_far = shared[0].second == 0 ? t.b : t.a;
  return std::min(point_segment_distance(s_far, t.a, t.b), point_segment_distance(t_far, s.a, s.b));
}

}  // namespace verify_detail

/// Lengths, node consistency, per-component stick counts and clearance of an
/// equilateral embedding.  `component_arcs[j]` is the arc count n_j of
/// component j; reduced components must have 2 n_j - 1 sticks, unreduced ones
/// 2 n_j (reported as pre-reduction).
inline VerificationReport verify_equilateral(const EquilateralEmbedding& emb, double M, const std::vector<std::size_t>& component_arcs,
                                             const Tolerances& tol = {}) {
  VerificationReport report;

  CheckResult lengths{"lengths"};
  double worst = 0;
  for (std::size_t i = 0; i < emb.sticks.size(); ++i) {
    const double dev = std::abs(emb.sticks[i].length() - M);
    worst = std::max(worst, dev / M);
    if (dev > tol.length_rel * M) {
      std::ostringstream w;
      w.precision(17);
      w << "stick " << i << " has length " << emb.sticks[i].length() << ", deviation " << dev / M << " M";
      lengths.fail_with(w.str());
    }
  }
  lengths.summary = "max relative deviation " + verify_detail::short_number(worst);
  report.checks.push_back(lengths);

  CheckResult nodes{"nodes"};
  for (std::size_t i = 0; i < emb.sticks.size(); ++i) {
    const EqStick& s = emb.sticks[i];
    for (int end = 0; end < 2; ++end) {
      auto it = emb.nodes.find(s.nodes[end]);
      if (it == emb.nodes.end()) {
        nodes.fail_with("stick " + std::to_string(i) + " names unknown node '" + s.nodes[end] + "'");
        continue;
      }
      const double off = distance(end == 0 ? s.a : s.b, it->second);
      if (off > tol.node_rel * M) {
        std::ostringstream w;
        w.precision(17);
        w << "stick " << i << " end " << end << " is " << off << " from node '" << s.nodes[end] << "'";
        nodes.fail_with(w.str());
      }
    }
  }
  nodes.summary = std::to_string(emb.nodes.size()) + " nodes";
  report.checks.push_back(nodes);

  CheckResult counts{"stick_count"};
  if (emb.components.size() != component_arcs.size()) {
    counts.fail_with("embedding has " + std::to_string(emb.components.size()) + " components, presentations give " +
                     std::to_string(component_arcs.size()));
  } else {
    std::vector<std::size_t> actual(component_arcs.size(), 0);
    for (const EqStick& s : emb.sticks) {
      if (s.component < actual.size()) ++actual[s.component];
    }
    std::ostringstream summary;
    for (std::size_t j = 0; j < component_arcs.size(); ++j) {
      const bool reduced = emb.components[j].reduced;
      const std::size_t expected = reduced ? 2 * component_arcs[j] - 1 : 2 * component_arcs[j];
      summary << (j ? ", " : "") << "c" << j << ": " << actual[j] << (reduced ? "" : " (pre-reduction)");
      if (actual[j] != expected) {
        counts.fail_with("component " + std::to_string(j) + " has " + std::to_string(actual[j]) + " sticks, expected " + std::to_string(expected));
      }
    }
    counts.summary = summary.str();
  }
  report.checks.push_back(counts);

  CheckResult clear{"clearance"};
  double min_clear = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < emb.sticks.size(); ++i) {
    for (std::size_t j = i + 1; j < emb.sticks.size(); ++j) {
      const double c = verify_detail::clearance(emb.sticks[i], emb.sticks[j]);
      min_clear = std::min(min_clear, c);
      if (c < tol.clearance_rel * M) {
        std::ostringstream w;
        w.precision(17);
        w << "sticks " << i << " and " << j << " are " << c << " apart";
        clear.fail_with(w.str());
      }
    }
  }
  clear.summary = "min clearance " + verify_detail::short_number(min_clear / M) + " M";
  report.checks.push_back(clear);
  return report;
}

}  // namespace stickforge
