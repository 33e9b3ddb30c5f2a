#pragma once

// Document formats: arc presentations and embeddings as JSON, OBJ export,
// and the line-oriented text reports printed by the CLI.

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "stickforge/arc_presentation.hpp"
#include "stickforge/bounds.hpp"
#include "stickforge/catalog.hpp"
#include "stickforge/circular_diagram.hpp"
#include "stickforge/equilateral_builder.hpp"
#include "stickforge/error.hpp"
#include "stickforge/stick_builder.hpp"
#include "stickforge/verifier.hpp"

namespace stickforge {

using json = nlohmann::ordered_json;

inline constexpr const char* kEmbeddingFormat = "stickforge-embedding";
inline constexpr int kEmbeddingVersion = 1;

namespace io_detail {

template <typename T>
T field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, where + ": missing '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, where + "." + key + ": " + e.what());
  }
}

inline json rational3_to_json(const Rational3& p) { return json::array({p.x.get_str(), p.y.get_str(), p.z.get_str()}); }

inline Rational3 rational3_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) fail(ErrorCode::ParseError, where + ": expected three \"p/q\" strings");
  Rational3 p;
  for (int axis = 0; axis < 3; ++axis) {
    if (!j[axis].is_string()) fail(ErrorCode::ParseError, where + ": coordinates must be \"p/q\" strings");
    try {
      p[axis] = parse_rational(j[axis].get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(ErrorCode::ParseError, where + ": bad rational '" + j[axis].get<std::string>() + "'");
    }
  }
  return p;
}

inline json vec3_to_json(const Vec3& p) { return json::array({p.x, p.y, p.z}); }

inline Vec3 vec3_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number()) {
    fail(ErrorCode::ParseError, where + ": expected three numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

inline std::array<std::string, 2> nodes_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) fail(ErrorCode::ParseError, where + ": expected two node names");
  return {j[0].get<std::string>(), j[1].get<std::string>()};
}

}  // namespace io_detail

// ---------------------------------------------------------------------------
// Arc presentations

inline json presentation_to_json(const ArcPresentation& ap) {
  json doc;
  json vertices = json::array();
  for (const auto& v : ap.graph.vertices) vertices.push_back(v);
  json edges = json::array();
  for (const auto& e : ap.graph.edges) edges.push_back(json::array({e.id, e.from, e.to}));
  doc["graph"] = {{"vertices", vertices}, {"edges", edges}};
  json points = json::array();
  for (const auto& bp : ap.binding_points) points.push_back(json{{bp.is_vertex() ? "vertex" : "interior", bp.label}});
  doc["binding_points"] = points;
  json arcs = json::array();
  for (const auto& a : ap.arcs) arcs.push_back(json::array({a.end_a, a.end_b, a.edge}));
  doc["arcs"] = arcs;
  if (ap.params) {
    doc["params"] = {{"c", ap.params->c}, {"b", ap.params->b}, {"k", ap.params->k}};
    if (ap.params->heuristic) doc["params"]["heuristic"] = true;
  }
  return doc;
}

inline ArcPresentation presentation_from_json(const json& doc) {
  using io_detail::field;
  ArcPresentation ap;
  const json graph = field<json>(doc, "graph", "presentation");
  for (const auto& v : field<json>(graph, "vertices", "graph")) {
    if (!v.is_string()) fail(ErrorCode::ParseError, "graph.vertices: ids must be strings");
    ap.graph.vertices.push_back(v.get<std::string>());
  }
  for (const auto& e : field<json>(graph, "edges", "graph")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string()) {
      fail(ErrorCode::ParseError, "graph.edges: each edge is [id, v1, v2]");
    }
    ap.graph.edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()});
  }
  for (const auto& bp : field<json>(doc, "binding_points", "presentation")) {
    if (bp.is_object() && bp.size() == 1 && bp.contains("vertex") && bp["vertex"].is_string()) {
      ap.binding_points.push_back(BindingPoint::vertex(bp["vertex"].get<std::string>()));
    } else if (bp.is_object() && bp.size() == 1 && bp.contains("interior") && bp["interior"].is_string()) {
      ap.binding_points.push_back(BindingPoint::interior(bp["interior"].get<std::string>()));
    } else {
      fail(ErrorCode::ParseError, "binding_points: each entry is {\"vertex\": id} or {\"interior\": edge_id}");
    }
  }
  int page = 1;
  for (const auto& a : field<json>(doc, "arcs", "presentation")) {
    if (!a.is_array() || a.size() != 3 || !a[0].is_number_unsigned() || !a[1].is_number_unsigned() || !a[2].is_string()) {
      fail(ErrorCode::ParseError, "arcs: each arc is [end_a_index, end_b_index, edge_id]");
    }
    ap.arcs.push_back({page++, a[0].get<std::size_t>(), a[1].get<std::size_t>(), a[2].get<std::string>()});
  }
  if (doc.contains("params")) {
    const json& p = doc["params"];
    if (!p.is_object()) fail(ErrorCode::ParseError, "params must be an object");
    SpatialParams params;
    bool partial = false;
    std::optional<SpatialParams> defaults;
    auto take = [&](const char* key, long& slot) {
      if (p.contains(key)) {
        if (!p[key].is_number_integer()) fail(ErrorCode::ParseError, std::string("params.") + key + " must be an integer");
        slot = p[key].get<long>();
        return;
      }
      partial = true;
      if (!defaults) defaults = default_spatial_params(validate_graph(ap.graph));
      slot = std::string(key) == "c" ? defaults->c : std::string(key) == "b" ? defaults->b : defaults->k;
    };
    take("c", params.c);
    take("b", params.b);
    take("k", params.k);
    params.heuristic = partial || p.value("heuristic", false);
    ap.params = params;
  }
  return ap;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

/// A file path, or `catalog:<name>`.
inline ArcPresentation load_presentation(const std::string& source) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return catalog(source.substr(prefix.size()));
  return presentation_from_json(read_json_file(source));
}

// ---------------------------------------------------------------------------
// Exact stick embeddings

inline json stick_embedding_to_json(const StickEmbedding& se) {
  json doc;
  doc["format"] = kEmbeddingFormat;
  doc["version"] = kEmbeddingVersion;
  doc["mode"] = "exact";
  json sticks = json::array();
  for (const Stick& s : se.sticks) {
    sticks.push_back({{"a", io_detail::rational3_to_json(s.seg.a)},
                      {"b", io_detail::rational3_to_json(s.seg.b)},
                      {"nodes", json::array({s.nodes[0], s.nodes[1]})},
                      {"page", s.page},
                      {"edge", s.edge},
                      {"piece", to_string(s.piece)}});
  }
  doc["sticks"] = sticks;
  json junctions = json::array();
  for (const auto& j : se.junctions) junctions.push_back(io_detail::rational3_to_json(j));
  doc["junctions"] = junctions;
  doc["heights"] = se.heights;
  doc["stick_count"] = count_sticks(se);
  return doc;
}

inline StickEmbedding stick_embedding_from_json(const json& doc) {
  using io_detail::field;
  if (field<std::string>(doc, "mode", "embedding") != "exact") fail(ErrorCode::ParseError, "embedding is not in exact mode");
  StickEmbedding se;
  std::size_t i = 0;
  const json sticks = field<json>(doc, "sticks", "embedding");
  for (const auto& s : sticks) {
    const std::string where = "sticks[" + std::to_string(i++) + "]";
    Stick st;
    st.seg.a = io_detail::rational3_from_json(field<json>(s, "a", where), where + ".a");
    st.seg.b = io_detail::rational3_from_json(field<json>(s, "b", where), where + ".b");
    st.nodes = io_detail::nodes_from_json(field<json>(s, "nodes", where), where + ".nodes");
    st.page = field<int>(s, "page", where);
    st.edge = field<std::string>(s, "edge", where);
    const std::string piece = field<std::string>(s, "piece", where);
    if (piece == "whole") {
      st.piece = Piece::Whole;
    } else if (piece == "left") {
      st.piece = Piece::Left;
    } else if (piece == "right") {
      st.piece = Piece::Right;
    } else {
      fail(ErrorCode::ParseError, where + ".piece: unknown piece '" + piece + "'");
    }
    se.sticks.push_back(std::move(st));
  }
  i = 0;
  const json junctions = field<json>(doc, "junctions", "embedding");
  for (const auto& j : junctions) {
    se.junctions.push_back(io_detail::rational3_from_json(j, "junctions[" + std::to_string(i++) + "]"));
  }
  se.heights = field<std::vector<long>>(doc, "heights", "embedding");
  return se;
}

// ---------------------------------------------------------------------------
// Decimal (equilateral) embeddings

inline json certificate_to_json(const CertificateReport& c) {
  json moves = json::array();
  for (const MoveRecord& m : c.moves) {
    moves.push_back({{"move", m.move}, {"samples", m.samples}, {"min_clearance", m.min_clearance}, {"pass", m.pass}});
  }
  return {{"kind", "sampled sweep"},
          {"moves", moves},
          {"final_min_clearance", c.final_min_clearance},
          {"final_simple", c.final_simple},
          {"pass", c.pass}};
}

inline json equilateral_to_json(const EquilateralEmbedding& emb) {
  json doc;
  doc["format"] = kEmbeddingFormat;
  doc["version"] = kEmbeddingVersion;
  doc["mode"] = "decimal";
  doc["M"] = emb.M;
  json sticks = json::array();
  for (const EqStick& s : emb.sticks) {
    sticks.push_back({{"a", io_detail::vec3_to_json(s.a)},
                      {"b", io_detail::vec3_to_json(s.b)},
                      {"nodes", json::array({s.nodes[0], s.nodes[1]})},
                      {"page", s.page},
                      {"component", s.component},
                      {"kind", to_string(s.kind)}});
  }
  doc["sticks"] = sticks;
  json nodes = json::object();
  for (const auto& [name, at] : emb.nodes) nodes[name] = io_detail::vec3_to_json(at);
  doc["nodes"] = nodes;
  json comps = json::array();
  for (const ComponentInfo& c : emb.components) {
    comps.push_back({{"arcs", c.arcs}, {"binding_points", c.binding_points}, {"sticks", c.sticks}, {"reduced", c.reduced}, {"top_degree", c.top_degree}});
  }
  doc["components"] = comps;
  doc["tolerance"] = {{"max_length_deviation_rel", emb.tolerance.max_length_deviation_rel},
                      {"min_clearance", emb.tolerance.min_clearance},
                      {"min_clearance_rel", emb.tolerance.min_clearance_rel}};
  json certs = json::array();
  for (const auto& c : emb.certificates) certs.push_back(certificate_to_json(c));
  doc["certificates"] = certs;
  doc["retries"] = emb.retries;
  return doc;
}

inline EquilateralEmbedding equilateral_from_json(const json& doc) {
  using io_detail::field;
  if (field<std::string>(doc, "mode", "embedding") != "decimal") fail(ErrorCode::ParseError, "embedding is not in decimal mode");
  EquilateralEmbedding emb;
  emb.M = field<double>(doc, "M", "embedding");
  std::size_t i = 0;
  const json sticks = field<json>(doc, "sticks", "embedding");
  for (const auto& s : sticks) {
    const std::string where = "sticks[" + std::to_string(i++) + "]";
    EqStick st;
    st.a = io_detail::vec3_from_json(field<json>(s, "a", where), where + ".a");
    st.b = io_detail::vec3_from_json(field<json>(s, "b", where), where + ".b");
    st.nodes = io_detail::nodes_from_json(field<json>(s, "nodes", where), where + ".nodes");
    st.page = field<int>(s, "page", where);
    st.component = field<std::size_t>(s, "component", where);
    const std::string kind = field<std::string>(s, "kind", where);
    st.kind = kind == "tent" ? EqStickKind::Tent : kind == "rotated" ? EqStickKind::Rotated : EqStickKind::Glued;
    if (kind != "tent" && kind != "rotated" && kind != "glued") fail(ErrorCode::ParseError, where + ".kind: unknown '" + kind + "'");
    emb.sticks.push_back(st);
  }
  const json nodes = field<json>(doc, "nodes", "embedding");
  for (const auto& [name, at] : nodes.items()) emb.nodes[name] = io_detail::vec3_from_json(at, "nodes." + name);
  const json comps = field<json>(doc, "components", "embedding");
  for (const auto& c : comps) {
    ComponentInfo info;
    info.arcs = field<std::size_t>(c, "arcs", "components");
    info.binding_points = field<std::size_t>(c, "binding_points", "components");
    info.sticks = field<std::size_t>(c, "sticks", "components");
    info.reduced = field<bool>(c, "reduced", "components");
    info.top_degree = field<std::size_t>(c, "top_degree", "components");
    emb.components.push_back(info);
  }
  if (doc.contains("retries")) emb.retries = doc["retries"].get<std::size_t>();
  return emb;
}

// ---------------------------------------------------------------------------
// Wavefront OBJ: one `v` record per stick endpoint, one `l` record per stick.

inline std::string to_obj(const std::vector<std::array<Vec3, 2>>& segments, const std::string& comment) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "# " << comment << "\n";
  for (const auto& seg : segments) {
    for (const Vec3& p : seg) out << "v " << p.x << ' ' << p.y << ' ' << p.z << "\n";
  }
  for (std::size_t i = 0; i < segments.size(); ++i) out << "l " << 2 * i + 1 << ' ' << 2 * i + 2 << "\n";
  return out.str();
}

inline std::string to_obj(const StickEmbedding& se) {
  std::vector<std::array<Vec3, 2>> segs;
  auto to_vec = [](const Rational3& p) { return Vec3{p.x.get_d(), p.y.get_d(), p.z.get_d()}; };
  for (const Stick& s : se.sticks) segs.push_back({to_vec(s.seg.a), to_vec(s.seg.b)});
  return to_obj(segs, "stickforge stick embedding, " + std::to_string(se.sticks.size()) + " sticks");
}

inline std::string to_obj(const EquilateralEmbedding& emb) {
  std::vector<std::array<Vec3, 2>> segs;
  for (const EqStick& s : emb.sticks) segs.push_back({s.a, s.b});
  return to_obj(segs, "stickforge equilateral embedding, " + std::to_string(emb.sticks.size()) + " sticks");
}

// ---------------------------------------------------------------------------
// Text reports

inline std::string params_line(const SpatialParams& p) {
  return "params c=" + std::to_string(p.c) + " b=" + std::to_string(p.b) + " k=" + std::to_string(p.k) +
         (p.heuristic ? " (heuristic)" : " (declared)");
}

inline void write_validation_report(std::ostream& out, const ValidatedPresentation& vp) {
  out << "valid\n";
  out << "n " << vp.n() << "\n";
  out << "e " << vp.e() << "\n";
  out << "v " << vp.v() << "\n";
  out << "m " << vp.m() << " (n - e + v = " << vp.n() + vp.v() - vp.e() << ")\n";
  for (std::size_t i = 0; i < vp.e(); ++i) out << "edge " << vp.graph().graph().edges[i].id << " arcs " << vp.arcs_on_edge(i) << "\n";
  out << "components " << vp.graph().component_count() << "\n";
  out << params_line(vp.params()) << "\n";
}

inline void write_classification(std::ostream& out, const ValidatedPresentation& vp, const CircularDiagram& cd) {
  out << "n " << cd.n() << "\n";
  out << "m " << cd.m << "\n";
  out << "e " << vp.e() << "\n";
  out << "v " << vp.v() << "\n";
  out << "initiating";
  for (int p : cd.initiating) out << ' ' << p;
  out << "\n";
  for (std::size_t k = 0; k < cd.n(); ++k) {
    const ChordClass& c = cd.classes[k];
    out << "chord " << k + 1 << ' ' << to_string(c.kind);
    if (c.initiating_end) out << " initiating_end " << *c.initiating_end;
    out << "\n";
  }
  out << "(n_2,n_1,n_0)=(" << cd.counts.bi << "," << cd.counts.uni << "," << cd.counts.non << ")\n";
  out << "crossings " << cd.crossings.size() << "\n";
  for (const auto& [i, j] : cd.crossings) out << "crossing " << i << ' ' << j << "\n";
}

inline std::string rational_text(const Rational& q) {
  std::string s = q.get_str();
  if (q.get_den() != 1) {
    std::ostringstream dec;
    dec << std::setprecision(17) << q.get_d();
    s += " (" + dec.str() + ")";
  }
  return s;
}

inline void write_bounds_report(std::ostream& out, const BoundsReport& r) {
  const BoundsInputs& in = r.inputs;
  out << "inputs c=" << in.c << (in.c_declared ? "" : " (assumed)") << " e=" << in.e << " v=" << in.v << " b=" << in.b
      << (in.b_declared ? "" : " (assumed)") << " k=" << in.k << (in.k_declared ? "" : " (assumed)");
  if (in.alpha) out << " alpha=" << *in.alpha;
  if (in.n0) out << " n0=" << *in.n0;
  out << "\n";
  for (const BoundEntry& b : r.entries) {
    out << b.id << " = " << b.formula << " = " << rational_text(b.value);
    if (b.floor) out << ", floor " << *b.floor;
    out << "\n";
  }
  if (r.knot) {
    std::ostringstream lower;
    lower << std::setprecision(17) << r.knot->stick_lower;
    out << "knot_stick_lower = (7 + sqrt(8c + 1))/2 = " << lower.str() << ", ceil " << r.knot->stick_lower_ceil << "\n";
    out << "knot_stick_upper_reference = 3/2 c + 3/2 = " << rational_text(r.knot->stick_upper) << "\n";
    if (r.knot->two_bridge_upper) out << "two_bridge_stick_upper = c + 2 = " << rational_text(*r.knot->two_bridge_upper) << "\n";
    if (r.knot->torus_exact) {
      out << "torus_stick_number = 2q = " << *r.knot->torus_exact << " for T(" << in.knot.torus->first << "," << in.knot.torus->second << ")\n";
    }
    out << "knot_equilateral_upper_reference = 2c + 2 = " << rational_text(r.knot->equilateral_upper) << "\n";
  }
  for (const std::string& note : r.notes) out << "note: " << note << "\n";
}

inline json bounds_report_to_json(const BoundsReport& r) {
  const BoundsInputs& in = r.inputs;
  json doc;
  doc["inputs"] = {{"c", in.c}, {"e", in.e}, {"v", in.v}, {"b", in.b}, {"k", in.k},
                   {"declared", {{"c", in.c_declared}, {"b", in.b_declared}, {"k", in.k_declared}}}};
  if (in.alpha) doc["inputs"]["alpha"] = *in.alpha;
  if (in.n0) doc["inputs"]["n0"] = *in.n0;
  json bounds = json::object();
  for (const BoundEntry& b : r.entries) {
    bounds[b.id] = {{"formula", b.formula}, {"exact", b.value.get_str()}, {"value", b.value.get_d()}};
    if (b.floor) bounds[b.id]["floor"] = *b.floor;
  }
  doc["bounds"] = bounds;
  if (r.knot) {
    json knot = {{"stick_lower", r.knot->stick_lower},
                 {"stick_lower_ceil", r.knot->stick_lower_ceil},
                 {"stick_upper_reference", r.knot->stick_upper.get_str()},
                 {"equilateral_upper_reference", r.knot->equilateral_upper.get_str()}};
    if (r.knot->two_bridge_upper) knot["two_bridge_stick_upper"] = r.knot->two_bridge_upper->get_str();
    if (r.knot->torus_exact) knot["torus_stick_number"] = *r.knot->torus_exact;
    doc["knot"] = knot;
  }
  doc["notes"] = r.notes;
  return doc;
}

inline void write_verification_report(std::ostream& out, const VerificationReport& report) {
  for (const CheckResult& c : report.checks) {
    out << "check " << c.name << ' ' << (c.pass ? "PASS" : "FAIL");
    if (!c.summary.empty()) out << ' ' << c.summary;
    out << "\n";
    for (const std::string& w : c.witnesses) out << "  witness: " << w << "\n";
  }
  out << "result " << (report.pass() ? "PASS" : "FAIL") << "\n";
}

}  // namespace stickforge
