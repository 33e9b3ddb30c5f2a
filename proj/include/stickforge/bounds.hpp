#pragma once

// Stick-number, equilateral-stick-number and arc-index bounds, evaluated as
// exact rationals.  Floors are only taken where the bounded quantity is an
// integer (a number of sticks or pages).

#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stickforge/error.hpp"
#include "stickforge/exact.hpp"

namespace stickforge {

namespace bounds_detail {

inline void require_nonnegative(std::initializer_list<std::pair<const char*, long>> args) {
  for (const auto& [name, value] : args) {
    if (value < 0) fail(ErrorCode::NegativeInput, std::string(name) + " = " + std::to_string(value));
  }
}

}  // namespace bounds_detail

inline long floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

inline Rational arc_index_upper(long c, long e, long b) {
  bounds_detail::require_nonnegative({{"c", c}, {"e", e}, {"b", b}});
  return Rational(c + e + b);
}

inline Rational stick_upper_main(long c, long e, long v, long b) {
  bounds_detail::require_nonnegative({{"c", c}, {"e", e}, {"v", v}, {"b", b}});
  if (v < 1) fail(ErrorCode::NegativeInput, "v must be at least 1");
  return make_rational(3, 2) * c + 2 * e + make_rational(3, 2) * b - make_rational(v, 2);
}

inline Rational stick_upper_from_arc(long alpha, long e, long v) {
  bounds_detail::require_nonnegative({{"alpha", alpha}, {"e", e}, {"v", v}});
  return make_rational(3, 2) * alpha + make_rational(e, 2) - make_rational(v, 2);
}

inline Rational stick_upper_from_n0(long alpha, long n0) {
  bounds_detail::require_nonnegative({{"alpha", alpha}, {"n0", n0}});
  return Rational(alpha + n0);
}

inline Rational equilateral_upper_main(long c, long e, long b, long k) {
  bounds_detail::require_nonnegative({{"c", c}, {"e", e}, {"b", b}, {"k", k}});
  if (k < 1) fail(ErrorCode::NegativeInput, "k must be at least 1");
  return Rational(2 * c + 2 * e + 2 * b - k);
}

inline Rational equilateral_upper_from_arc(long alpha) {
  bounds_detail::require_nonnegative({{"alpha", alpha}});
  return Rational(2 * alpha - 1);
}

struct KnotFlags {
  bool two_bridge = false;
  std::optional<std::pair<long, long>> torus;  // (p, q)
};

/// Reference values for a nontrivial knot with crossing number c.
struct KnotReferenceBounds {
  double stick_lower = 0;              // (7 + sqrt(8c + 1)) / 2
  long stick_lower_ceil = 0;
  Rational stick_upper;                // 3/2 c + 3/2
  std::optional<Rational> two_bridge_upper;  // c + 2, c >= 6
  std::optional<long> torus_exact;     // 2q for 2 <= p <= q <= 2p
  Rational equilateral_upper;          // 2c + 2
};

inline KnotReferenceBounds knot_reference_bounds(long c, const KnotFlags& flags) {
  if (c < 3) fail(ErrorCode::FlagDomainError, "knot reference bounds need a nontrivial knot (c >= 3), got c = " + std::to_string(c));
  KnotReferenceBounds r;
  r.stick_lower = (7.0 + std::sqrt(8.0 * static_cast<double>(c) + 1.0)) / 2.0;
  // ceil of the lower bound, computed in integers: smallest s with
  // (2s - 7)^2 >= 8c + 1 and 2s >= 7.
  long s = 4;
  while ((2 * s - 7) * (2 * s - 7) < 8 * c + 1) ++s;
  r.stick_lower_ceil = s;
  r.stick_upper = make_rational(3, 2) * c + make_rational(3, 2);
  if (flags.two_bridge) {
    if (c < 6) fail(ErrorCode::FlagDomainError, "the 2-bridge bound needs c >= 6, got c = " + std::to_string(c));
    r.two_bridge_upper = Rational(c + 2);
  }
  if (flags.torus) {
    const auto [p, q] = *flags.torus;
    if (!(2 <= p && p <= q && q <= 2 * p) || std::gcd(p, q) != 1) {
      fail(ErrorCode::FlagDomainError, "torus knot T(" + std::to_string(p) + "," + std::to_string(q) +
                                           ") needs coprime 2 <= p <= q <= 2p");
    }
    r.torus_exact = 2 * q;
  }
  r.equilateral_upper = Rational(2 * c + 2);
  return r;
}

struct BoundsInputs {
  long c = 0, e = 0, v = 1, b = 0, k = 1;
  std::optional<long> alpha;
  std::optional<long> n0;
  bool c_declared = false, b_declared = false, k_declared = false;
  KnotFlags knot;
};

struct BoundEntry {
  std::string id;
  std::string formula;
  Rational value;
  std::optional<long> floor;  // present for stick and page counts
};

struct BoundsReport {
  BoundsInputs inputs;
  std::vector<BoundEntry> entries;
  std::optional<KnotReferenceBounds> knot;
  std::vector<std::string> notes;

  const BoundEntry* find(const std::string& id) const {
    for (const BoundEntry& b : entries) {
      if (b.id == id) return &b;
    }
    return nullptr;
  }
};

inline BoundsReport make_bounds_report(const BoundsInputs& in) {
  BoundsReport r;
  r.inputs = in;
  auto add = [&](std::string id, std::string formula, Rational value) {
    const long f = floor_of(value);
    r.entries.push_back({std::move(id), std::move(formula), std::move(value), f});
  };
  add("arc_index_upper", "c + e + b", arc_index_upper(in.c, in.e, in.b));
  add("stick_upper_main", "3/2 c + 2e + 3/2 b - v/2", stick_upper_main(in.c, in.e, in.v, in.b));
  add("equilateral_upper_main", "2c + 2e + 2b - k", equilateral_upper_main(in.c, in.e, in.b, in.k));
  if (in.alpha) {
    add("stick_upper_from_arc", "3/2 alpha + e/2 - v/2", stick_upper_from_arc(*in.alpha, in.e, in.v));
    add("equilateral_upper_from_arc", "2 alpha - 1", equilateral_upper_from_arc(*in.alpha));
    if (in.n0) add("stick_upper_from_n0", "alpha + n0", stick_upper_from_n0(*in.alpha, *in.n0));
    if (Rational(*in.alpha) > arc_index_upper(in.c, in.e, in.b)) {
      r.notes.push_back("alpha exceeds c + e + b: the declared c, b are inconsistent with this presentation");
    }
  } else if (in.n0) {
    fail(ErrorCode::FlagDomainError, "n0 needs alpha");
  }

  const bool is_knot = in.e == 1 && in.v == 1 && in.b == 1 && in.k == 1;
  if (is_knot) {
    add("knot_stick_upper", "3/2 c + 3", make_rational(3, 2) * in.c + 3);
    add("knot_equilateral_upper", "2c + 3", Rational(2 * in.c + 3));
  }
  if (in.knot.two_bridge || in.knot.torus || (is_knot && in.c >= 3)) {
    r.knot = knot_reference_bounds(in.c, in.knot);
  }
  if (!in.c_declared) r.notes.push_back("c was not declared; 0 assumed");
  if (!in.b_declared || !in.k_declared) r.notes.push_back("b or k not declared; heuristic values from the abstract graph are not certified");
  return r;
}

/// Compares per-component equilateral constructions (2 n_j - 1 sticks each)
/// against the global bound for the declared parameters.
struct EquilateralChainCheck {
  long construction_total = 0;
  long arcs_total = 0;
  Rational bound_value;
  bool chain_consistent = true;  // sum n_j <= c + e + b
  bool within_bound = true;      // construction_total <= bound_value
};

inline EquilateralChainCheck check_equilateral_chain(long c, long e, long b, long k, const std::vector<long>& component_arcs) {
  EquilateralChainCheck out;
  for (long n : component_arcs) {
    out.construction_total += 2 * n - 1;
    out.arcs_total += n;
  }
  out.bound_value = equilateral_upper_main(c, e, b, k);
  out.chain_consistent = out.arcs_total <= c + e + b;
  out.within_bound = Rational(out.construction_total) <= out.bound_value;
  return out;
}

}  // namespace stickforge
