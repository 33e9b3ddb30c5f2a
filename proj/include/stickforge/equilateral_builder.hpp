#pragma once

// Equilateral stick embeddings in an open book.  Every arc becomes a "tent"
// of two sticks of length M meeting at an apex in the arc's page; the sticks
// at the top binding point are then traded for one fewer stick by swinging
// their partners up around their axis ends and gluing new length-M sticks
// between the swung ends.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "stickforge/arc_presentation.hpp"
#include "stickforge/error.hpp"
#include "stickforge/tolerances.hpp"
#include "stickforge/vec3.hpp"

namespace stickforge {

/// Binding point i sits at height i on the z-axis; page p is the half-plane
/// at angle 2 pi p / n around it.
struct OpenBookLayout {
  std::size_t m = 0;
  std::size_t n = 0;
  double M = 0;
  std::string prefix = "c0.";  // node-name prefix of this component

  Vec3 axis_point(std::size_t point) const { return {0, 0, static_cast<double>(point)}; }
  Vec3 page_direction(int page) const {
    const double angle = 2 * std::numbers::pi * page / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle), 0};
  }
  std::string point_node(std::size_t point) const { return prefix + "b" + std::to_string(point); }
  std::string apex_node(int page) const { return prefix + "apex" + std::to_string(page); }
  std::string tip_node(int page) const { return prefix + "tip" + std::to_string(page); }
  std::string hub_node() const { return prefix + "hub"; }
  std::string top_node() const { return point_node(m - 1); }
};

enum class EqStickKind { Tent, Rotated, Glued };

constexpr const char* to_string(EqStickKind k) {
  switch (k) {
    case EqStickKind::Tent: return "tent";
    case EqStickKind::Rotated: return "rotated";
    case EqStickKind::Glued: return "glued";
  }
  return "?";
}

struct EqStick {
  Vec3 a, b;
  std::size_t component = 0;
  EqStickKind kind = EqStickKind::Tent;
  int page = 0;
  std::array<std::string, 2> nodes;

  double length() const { return distance(a, b); }
  bool has_node(const std::string& name) const { return nodes[0] == name || nodes[1] == name; }
};

struct ComponentInfo {
  std::size_t arcs = 0;
  std::size_t binding_points = 0;
  std::size_t sticks = 0;
  bool reduced = false;
  std::size_t top_degree = 0;
};

struct MoveRecord {
  std::string move;
  std::size_t samples = 0;
  double min_clearance = std::numeric_limits<double>::infinity();
  bool pass = true;
};

/// Sampled-sweep surrogate for the isotopy of the top-point reduction.
struct CertificateReport {
  std::vector<MoveRecord> moves;
  double final_min_clearance = std::numeric_limits<double>::infinity();
  bool final_simple = true;
  bool pass = true;
};

struct ToleranceReport {
  double max_length_deviation_rel = 0;
  double min_clearance = std::numeric_limits<double>::infinity();
  double min_clearance_rel = std::numeric_limits<double>::infinity();
};

struct EquilateralEmbedding {
  double M = 0;
  std::vector<EqStick> sticks;
  std::map<std::string, Vec3> nodes;
  std::vector<ComponentInfo> components;
  ToleranceReport tolerance;
  std::vector<CertificateReport> certificates;  // one per reduced component
  std::size_t retries = 0;
};

/// Distance between two sticks away from the nodes they share.  Sticks with
/// one common node can only meet elsewhere by overlapping, which brings the
/// far end of one of them onto the other.
inline double pair_clearance(const EqStick& s, const EqStick& t) {
  int shared = 0;
  std::optional<int> s_far, t_far;
  for (int i = 0; i < 2; ++i) {
    if (t.has_node(s.nodes[i])) {
      ++shared;
      s_far = 1 - i;
    }
    if (s.has_node(t.nodes[i])) t_far = 1 - i;
  }
  if (shared == 0) return segment_distance(s.a, s.b, t.a, t.b);
  if (shared > 1) return 0.0;
  const Vec3 sf = *s_far == 0 ? s.a : s.b;
  const Vec3 tf = *t_far == 0 ? t.a : t.b;
  return std::min(point_segment_distance(sf, t.a, t.b), point_segment_distance(tf, s.a, s.b));
}

inline ToleranceReport tolerance_report(const std::vector<EqStick>& sticks, double M) {
  ToleranceReport r;
  for (const EqStick& s : sticks) r.max_length_deviation_rel = std::max(r.max_length_deviation_rel, std::abs(s.length() - M) / M);
  for (std::size_t i = 0; i < sticks.size(); ++i) {
    for (std::size_t j = i + 1; j < sticks.size(); ++j) r.min_clearance = std::min(r.min_clearance, pair_clearance(sticks[i], sticks[j]));
  }
  r.min_clearance_rel = r.min_clearance / M;
  return r;
}

inline OpenBookLayout make_layout(const ValidatedPresentation& vp, double M, std::size_t component = 0) {
  return {vp.m(), vp.n(), M, "c" + std::to_string(component) + "."};
}

/// 2n sticks: the arc on page p between heights lo < hi becomes two sticks
/// meeting at height (lo + hi) / 2, at distance sqrt(M^2 - ((hi - lo)/2)^2)
/// from the axis inside page p.
inline EquilateralEmbedding build_tents(const ValidatedPresentation& vp, const OpenBookLayout& layout) {
  const double M = layout.M;
  if (!(M > (static_cast<double>(layout.m) - 1) / 2)) {
    fail(ErrorCode::MTooSmall, "M = " + std::to_string(M) + " must exceed (m - 1)/2 = " + std::to_string((static_cast<double>(layout.m) - 1) / 2));
  }
  EquilateralEmbedding out;
  out.M = M;
  for (std::size_t i = 0; i < layout.m; ++i) out.nodes[layout.point_node(i)] = layout.axis_point(i);
  for (const Arc& arc : vp.presentation().arcs) {
    const std::size_t lo = std::min(arc.end_a, arc.end_b);
    const std::size_t hi = std::max(arc.end_a, arc.end_b);
    const double half_gap = (static_cast<double>(hi) - static_cast<double>(lo)) / 2;
    const double reach = std::sqrt(M * M - half_gap * half_gap);
    const Vec3 apex = layout.axis_point(lo) + Vec3{0, 0, half_gap} + reach * layout.page_direction(arc.page);
    out.nodes[layout.apex_node(arc.page)] = apex;
    out.sticks.push_back({layout.axis_point(lo), apex, 0, EqStickKind::Tent, arc.page, {layout.point_node(lo), layout.apex_node(arc.page)}});
    out.sticks.push_back({apex, layout.axis_point(hi), 0, EqStickKind::Tent, arc.page, {layout.apex_node(arc.page), layout.point_node(hi)}});
  }
  out.components.push_back({vp.n(), vp.m(), out.sticks.size(), false, 0});
  out.tolerance = tolerance_report(out.sticks, M);
  return out;
}

namespace equilateral_detail {

// Tip of a stick of length M swung inside `page` about `pivot`, at angle psi
// from the upward axis.
inline Vec3 swung_tip(const OpenBookLayout& layout, Vec3 pivot, int page, double psi) {
  return pivot + layout.M * (std::sin(psi) * layout.page_direction(page) + Vec3{0, 0, std::cos(psi)});
}

inline double angle_from_axis(const OpenBookLayout& layout, Vec3 pivot, int page, Vec3 tip) {
  const Vec3 d = tip - pivot;
  return std::atan2(dot(d, layout.page_direction(page)), d.z);
}

// The sticks at the top binding point (d_i) and their tent partners (e_i),
// ordered by page.
struct TopStar {
  struct Spoke {
    int page = 0;
    std::size_t d = 0;
    std::size_t e = 0;
    std::string pivot_node;
    Vec3 pivot;
  };
  std::vector<Spoke> spokes;
};

inline TopStar find_top_star(const std::vector<EqStick>& sticks, const OpenBookLayout& layout) {
  TopStar star;
  const std::string top = layout.top_node();
  for (std::size_t i = 0; i < sticks.size(); ++i) {
    if (sticks[i].kind != EqStickKind::Tent || !sticks[i].has_node(top)) continue;
    TopStar::Spoke spoke;
    spoke.page = sticks[i].page;
    spoke.d = i;
    bool found = false;
    for (std::size_t j = 0; j < sticks.size(); ++j) {
      if (j != i && sticks[j].kind == EqStickKind::Tent && sticks[j].page == spoke.page) {
        spoke.e = j;
        spoke.pivot_node = sticks[j].nodes[0];
        spoke.pivot = sticks[j].a;
        found = true;
      }
    }
    if (!found) throw std::logic_error("tent on page " + std::to_string(spoke.page) + " has no partner stick");
    star.spokes.push_back(spoke);
  }
  std::sort(star.spokes.begin(), star.spokes.end(), [](const auto& x, const auto& y) { return x.page < y.page; });
  if (star.spokes.empty()) throw std::logic_error("top binding point has no sticks");
  return star;
}

}  // namespace equilateral_detail

/// Deletes the m sticks d_1..d_m at the top binding point, swings e_1 up
/// until its free end is within `axis_approach_rel * M` of the axis, swings
/// each other e_i until its free end is exactly M from e_1's, and glues a
/// length-M stick f_i between the two ends.  2n - 1 sticks remain.
inline EquilateralEmbedding reduce_top(const EquilateralEmbedding& tents, const OpenBookLayout& layout, const Tolerances& tol = {}) {
  using namespace equilateral_detail;
  const double M = layout.M;
  const TopStar star = find_top_star(tents.sticks, layout);

  const double psi_close = std::asin(tol.axis_approach_rel);
  const auto& first = star.spokes.front();
  const Vec3 hub = swung_tip(layout, first.pivot, first.page, psi_close);

  std::vector<double> psi(star.spokes.size(), psi_close);
  for (std::size_t i = 1; i < star.spokes.size(); ++i) {
    const auto& spoke = star.spokes[i];
    const Vec3 start_tip = tents.sticks[spoke.e].b;
    auto gap = [&](double angle) { return distance(swung_tip(layout, spoke.pivot, spoke.page, angle), hub) - M; };
    double lo = psi_close;
    double hi = angle_from_axis(layout, spoke.pivot, spoke.page, start_tip);
    if (!(gap(lo) < 0 && gap(hi) > 0)) {
      fail(ErrorCode::NoRotationSolution, "page " + std::to_string(spoke.page) + ": no bracket for |f| = M (gap " + std::to_string(gap(lo)) +
                                              " .. " + std::to_string(gap(hi)) + ")");
    }
    for (int iter = 0; iter < 200 && hi - lo > tol.bisection_rel * hi; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (gap(mid) < 0 ? lo : hi) = mid;
    }
    psi[i] = 0.5 * (lo + hi);
  }

  EquilateralEmbedding out;
  out.M = M;
  out.retries = tents.retries;
  out.nodes = tents.nodes;
  out.nodes.erase(layout.top_node());
  std::vector<bool> removed(tents.sticks.size(), false);
  for (const auto& spoke : star.spokes) {
    removed[spoke.d] = removed[spoke.e] = true;
    out.nodes.erase(layout.apex_node(spoke.page));
  }
  for (std::size_t i = 0; i < tents.sticks.size(); ++i) {
    if (!removed[i]) out.sticks.push_back(tents.sticks[i]);
  }
  out.nodes[layout.hub_node()] = hub;
  out.sticks.push_back({first.pivot, hub, 0, EqStickKind::Rotated, first.page, {first.pivot_node, layout.hub_node()}});
  for (std::size_t i = 1; i < star.spokes.size(); ++i) {
    const auto& spoke = star.spokes[i];
    const Vec3 tip = swung_tip(layout, spoke.pivot, spoke.page, psi[i]);
    out.nodes[layout.tip_node(spoke.page)] = tip;
    out.sticks.push_back({spoke.pivot, tip, 0, EqStickKind::Rotated, spoke.page, {spoke.pivot_node, layout.tip_node(spoke.page)}});
    out.sticks.push_back({hub, tip, 0, EqStickKind::Glued, spoke.page, {layout.hub_node(), layout.tip_node(spoke.page)}});
  }

  ComponentInfo info = tents.components.empty() ? ComponentInfo{} : tents.components.front();
  info.sticks = out.sticks.size();
  info.reduced = true;
  info.top_degree = star.spokes.size();
  out.components = {info};
  out.tolerance = tolerance_report(out.sticks, M);
  if (out.tolerance.max_length_deviation_rel > tol.length_rel) {
    fail(ErrorCode::ClearanceViolation, "stick length off by " + std::to_string(out.tolerance.max_length_deviation_rel) + " M");
  }
  if (out.tolerance.min_clearance < tol.clearance_rel * M) {
    fail(ErrorCode::ClearanceViolation, "clearance " + std::to_string(out.tolerance.min_clearance) + " below " +
                                            std::to_string(tol.clearance_rel * M));
  }
  return out;
}

/// Replays the reduction as a motion and samples it.  Each e_i is swung with
/// its d_i still tied to the top point (both stay inside page p_i), one page
/// at a time; then the tie point slides from the top point to e_1's free end,
/// carrying each d_i (i >= 2) onto its glued f_i.  No moving stick may come
/// within `sweep_floor_rel * M` of a stick it is not attached to, and the
/// final embedding must keep the full clearance.
inline CertificateReport isotopy_certificate(const EquilateralEmbedding& before, const EquilateralEmbedding& after,
                                             const OpenBookLayout& layout, const Tolerances& tol = {}) {
  using namespace equilateral_detail;
  const double M = layout.M;
  const double floor = tol.sweep_floor_rel * M;
  const TopStar star = find_top_star(before.sticks, layout);
  const Vec3 top = layout.axis_point(layout.m - 1);
  const std::string top_node = layout.top_node();

  auto after_tip = [&](const TopStar::Spoke& spoke) {
    for (const EqStick& s : after.sticks) {
      if (s.kind == EqStickKind::Rotated && s.page == spoke.page) return s.b;
    }
    throw std::logic_error("no rotated stick on page " + std::to_string(spoke.page));
  };

  CertificateReport report;
  std::vector<EqStick> current = before.sticks;

  for (std::size_t i = 0; i < star.spokes.size(); ++i) {
    const auto& spoke = star.spokes[i];
    const std::string tip_name = i == 0 ? layout.hub_node() : layout.tip_node(spoke.page);
    const double psi_from = angle_from_axis(layout, spoke.pivot, spoke.page, before.sticks[spoke.e].b);
    const double psi_to = angle_from_axis(layout, spoke.pivot, spoke.page, after_tip(spoke));
    const int samples = std::max(2, static_cast<int>(std::ceil(std::abs(psi_to - psi_from) / tol.sweep_step_rad)) + 1);
    MoveRecord rec;
    rec.move = "rotate e page " + std::to_string(spoke.page);
    for (int s = 0; s < samples; ++s) {
      const double psi = psi_from + (psi_to - psi_from) * s / (samples - 1);
      const Vec3 tip = swung_tip(layout, spoke.pivot, spoke.page, psi);
      const EqStick e{spoke.pivot, tip, 0, EqStickKind::Rotated, spoke.page, {spoke.pivot_node, tip_name}};
      const EqStick d{tip, top, 0, EqStickKind::Tent, spoke.page, {tip_name, top_node}};
      for (std::size_t k = 0; k < current.size(); ++k) {
        if (k == spoke.d || k == spoke.e) continue;
        rec.min_clearance = std::min({rec.min_clearance, pair_clearance(e, current[k]), pair_clearance(d, current[k])});
      }
      ++rec.samples;
      if (s + 1 == samples) {
        current[spoke.e] = e;
        current[spoke.d] = d;
      }
    }
    rec.pass = rec.min_clearance > floor;
    report.moves.push_back(rec);
  }

  // Glue slide: the tie point travels from the top point to e_1's free end.
  const Vec3 hub = after_tip(star.spokes.front());
  std::vector<EqStick> fixed;
  for (std::size_t k = 0; k < current.size(); ++k) {
    bool is_d = false;
    for (const auto& spoke : star.spokes) is_d = is_d || k == spoke.d;
    if (!is_d) fixed.push_back(current[k]);
  }
  const int slide_samples = std::max(tol.sweep_min_samples, static_cast<int>(std::ceil(distance(top, hub) / (tol.sweep_step_rad * M))) + 1);
  for (std::size_t i = 1; i < star.spokes.size(); ++i) {
    const auto& spoke = star.spokes[i];
    const Vec3 tip = after_tip(spoke);
    MoveRecord rec;
    rec.move = "glue f page " + std::to_string(spoke.page);
    for (int s = 0; s < slide_samples; ++s) {  // the end position is checked below
      const double lambda = static_cast<double>(s) / slide_samples;
      const Vec3 tie = top + lambda * (hub - top);
      const EqStick f{tie, tip, 0, EqStickKind::Glued, spoke.page, {layout.prefix + "slide", layout.tip_node(spoke.page)}};
      for (const EqStick& other : fixed) rec.min_clearance = std::min(rec.min_clearance, pair_clearance(f, other));
      for (std::size_t j = 1; j < star.spokes.size(); ++j) {
        if (j == i) continue;
        const Vec3 other_tip = after_tip(star.spokes[j]);
        const EqStick g{tie, other_tip, 0, EqStickKind::Glued, star.spokes[j].page, {layout.prefix + "slide", layout.tip_node(star.spokes[j].page)}};
        rec.min_clearance = std::min(rec.min_clearance, pair_clearance(f, g));
      }
      ++rec.samples;
    }
    rec.pass = rec.min_clearance > floor;
    report.moves.push_back(rec);
  }

  report.final_min_clearance = tolerance_report(after.sticks, M).min_clearance;
  report.final_simple = report.final_min_clearance >= tol.clearance_rel * M;
  report.pass = report.final_simple && std::all_of(report.moves.begin(), report.moves.end(), [](const MoveRecord& r) { return r.pass; });
  return report;
}

/// Places components side by side along x with gaps of at least M and
/// renames their nodes "c<j>.".  A single component is returned unchanged.
inline EquilateralEmbedding assemble_split(const std::vector<EquilateralEmbedding>& parts) {
  EquilateralEmbedding out;
  if (parts.empty()) return out;
  out.M = parts.front().M;
  double cursor = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const EquilateralEmbedding& part = parts[j];
    if (part.M != out.M) throw std::invalid_argument("components built with different M");
    double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
    for (const auto& [name, at] : part.nodes) {
      min_x = std::min(min_x, at.x);
      max_x = std::max(max_x, at.x);
    }
    const double shift = j == 0 ? 0.0 : cursor - min_x;
    const Vec3 offset{shift, 0, 0};
    cursor = max_x + shift + out.M;

    const std::string new_prefix = "c" + std::to_string(j) + ".";
    auto rename = [&](const std::string& name) {
      const auto dot_at = name.find('.');
      return dot_at == std::string::npos ? new_prefix + name : new_prefix + name.substr(dot_at + 1);
    };
    for (const auto& [name, at] : part.nodes) out.nodes[rename(name)] = at + offset;
    for (EqStick s : part.sticks) {
      s.a = s.a + offset;
      s.b = s.b + offset;
      s.component = j;
      s.nodes = {rename(s.nodes[0]), rename(s.nodes[1])};
      out.sticks.push_back(s);
    }
    out.components.insert(out.components.end(), part.components.begin(), part.components.end());
    out.certificates.insert(out.certificates.end(), part.certificates.begin(), part.certificates.end());
    out.retries = std::max(out.retries, part.retries);
  }
  out.tolerance = tolerance_report(out.sticks, out.M);
  return out;
}

/// The non-splittable pieces to build: a presentation declared with k = 1 is
/// one piece; one declared with k equal to its number of abstract components
/// is split along them.  Anything in between cannot be split from the
/// abstract graph alone.
inline std::vector<ValidatedPresentation> split_for_equilateral(const std::vector<ValidatedPresentation>& inputs) {
  std::vector<ValidatedPresentation> out;
  for (const ValidatedPresentation& vp : inputs) {
    const long k = vp.params().k;
    const std::size_t components = vp.graph().component_count();
    if (k == 1 || components == 1) {
      out.push_back(vp);
    } else if (static_cast<std::size_t>(k) == components) {
      for (std::size_t c = 0; c < components; ++c) out.push_back(validate_presentation(restrict_to_component(vp, c)));
    } else {
      fail(ErrorCode::AmbiguousSplit, "k = " + std::to_string(k) + " but the graph has " + std::to_string(components) +
                                          " abstract components; pass each non-splittable piece as its own presentation");
    }
  }
  return out;
}

inline double default_stick_length(const std::vector<ValidatedPresentation>& pieces) {
  std::size_t m = 0;
  for (const auto& vp : pieces) m = std::max(m, vp.m());
  return 4.0 * static_cast<double>(m);
}

/// Tents, top-point reduction and certificate for every piece, with M
/// doubling on failure.  All pieces share the final M.
inline EquilateralEmbedding build_equilateral(const std::vector<ValidatedPresentation>& inputs, std::optional<double> stick_length = {},
                                              const Tolerances& tol = {}) {
  const std::vector<ValidatedPresentation> pieces = split_for_equilateral(inputs);
  double M = stick_length.value_or(default_stick_length(pieces));
  for (int attempt = 0;; ++attempt) {
    try {
      std::vector<EquilateralEmbedding> parts;
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        const OpenBookLayout layout = make_layout(pieces[j], M, j);
        EquilateralEmbedding tents = build_tents(pieces[j], layout);
        EquilateralEmbedding reduced = reduce_top(tents, layout, tol);
        CertificateReport cert = isotopy_certificate(tents, reduced, layout, tol);
        if (!cert.pass) fail(ErrorCode::CertificateFailure, "component " + std::to_string(j) + " at M = " + std::to_string(M));
        reduced.certificates = {cert};
        reduced.retries = static_cast<std::size_t>(attempt);
        parts.push_back(std::move(reduced));
      }
      return assemble_split(parts);
    } catch (const Error& err) {
      const bool retryable = err.code() == ErrorCode::NoRotationSolution || err.code() == ErrorCode::ClearanceViolation ||
                             err.code() == ErrorCode::CertificateFailure;
      if (!retryable || attempt >= tol.max_retries) throw;
      M *= 2;
    }
  }
}

}  // namespace stickforge
