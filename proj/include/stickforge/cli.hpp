#pragma once

// The `stickforge` command line.  run_cli() is the whole program; main() only
// forwards argv and the standard streams.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stickforge/stickforge.hpp"

namespace stickforge {

namespace cli_detail {

inline std::vector<ValidatedPresentation> load_all(const std::vector<std::string>& sources) {
  std::vector<ValidatedPresentation> out;
  for (const std::string& s : sources) out.push_back(validate_presentation(load_presentation(s)));
  return out;
}

inline void emit(std::ostream& out, const std::string& text, const std::string& path, const std::string& what) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
    out << "wrote " << what << " " << path << "\n";
  }
}

inline std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("STICKFORGE_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, std::string("STICKFORGE_SEED is not an unsigned integer: '") + raw + "'");
  }
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"stickforge: stick and equilateral stick embeddings of spatial graphs from arc presentations"};
  app.name("stickforge");
  app.require_subcommand(1);
  app.footer(
      "Presentation arguments <ap> are JSON files or catalog:<name> (see `stickforge catalog --list`).\n"
      "Exit status: 0 success, 1 invalid input or failed verification, 2 usage error.\n"
      "STICKFORGE_SEED overrides the seed of `random`.");

  std::string ap_path;
  std::vector<std::string> ap_paths;
  std::string out_path, obj_path;

  auto* validate = app.add_subcommand("validate", "Check an arc presentation and print its counts");
  validate->add_option("ap", ap_path, "Presentation file or catalog:<name>")->required();

  auto* classify = app.add_subcommand("classify", "Initiating page numbers, chord classes and crossings of the circular diagram");
  classify->add_option("ap", ap_path, "Presentation file or catalog:<name>")->required();

  auto* build_stick = app.add_subcommand("build-stick", "Exact stick embedding from the circular diagram");
  build_stick->add_option("ap", ap_path, "Presentation file or catalog:<name>")->required();
  build_stick->add_option("-o,--output", out_path, "Write the embedding document here instead of stdout");
  build_stick->add_option("--obj", obj_path, "Also write a Wavefront OBJ polyline file");

  double stick_length = 0;
  auto* build_eq = app.add_subcommand("build-eq", "Equilateral stick embedding, one presentation per non-splittable piece");
  build_eq->add_option("ap", ap_paths, "Presentation files or catalog:<name>")->required();
  auto* length_opt = build_eq->add_option("-M,--length", stick_length, "Stick length (default 4 * max m, doubled on retry)")->check(CLI::PositiveNumber);
  build_eq->add_option("-o,--output", out_path, "Write the embedding document here instead of stdout");
  build_eq->add_option("--obj", obj_path, "Also write a Wavefront OBJ polyline file");

  BoundsInputs bin;
  std::string bounds_from;
  std::vector<long> torus;
  bool bounds_json = false;
  auto* bounds = app.add_subcommand("bounds", "Upper bounds for the given spatial-graph parameters");
  auto* c_opt = bounds->add_option("--c", bin.c, "Crossing number c");
  auto* e_opt = bounds->add_option("--e", bin.e, "Number of edges e");
  auto* v_opt = bounds->add_option("--v", bin.v, "Number of vertices v (default 1)");
  auto* b_opt = bounds->add_option("--b", bin.b, "Number of bouquet cut-components b");
  auto* k_opt = bounds->add_option("--k", bin.k, "Number of non-splittable components k (default 1)");
  auto* alpha_opt = bounds->add_option("--alpha", "Arc index alpha (or any page count)");
  auto* n0_opt = bounds->add_option("--n0", "Non-initiating chord count n0 (needs --alpha)");
  bounds->add_flag("--two-bridge", bin.knot.two_bridge, "The knot is 2-bridge");
  bounds->add_option("--torus", torus, "Torus knot T(p,q) as p,q")->delimiter(',')->expected(2);
  bounds->add_option("--from", bounds_from, "Take e, v, alpha = n, n0 and declared c, b, k from a presentation");
  bounds->add_flag("--json", bounds_json, "JSON output");

  std::string emb_path;
  auto* verify = app.add_subcommand("verify", "Verify an embedding document against its presentation(s)");
  verify->add_option("embedding", emb_path, "Embedding document")->required();
  verify->add_option("ap", ap_paths, "Presentation files or catalog:<name>")->required();

  std::string catalog_name;
  bool catalog_list = false;
  auto* cat = app.add_subcommand("catalog", "Print a built-in presentation");
  cat->add_option("name", catalog_name, "unknot, trefoil, hopf, theta_trivial(n), unlink(n)");
  cat->add_flag("--list", catalog_list, "List the catalog");

  std::uint64_t seed = 1;
  std::string profile_text = "knot";
  auto* rnd = app.add_subcommand("random", "Print a seeded random presentation");
  rnd->add_option("--seed", seed, "Generator seed (STICKFORGE_SEED overrides)");
  rnd->add_option("--profile", profile_text, "knot | theta(t) | bouquet | multi, optionally :<max arcs>");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run `stickforge --help` for usage\n";
    return 2;
  }

  try {
    if (*validate) {
      write_validation_report(out, validate_presentation(load_presentation(ap_path)));
      return 0;
    }
    if (*classify) {
      const auto vp = validate_presentation(load_presentation(ap_path));
      write_classification(out, vp, to_circular(vp));
      return 0;
    }
    if (*build_stick) {
      const auto vp = validate_presentation(load_presentation(ap_path));
      const CircularDiagram cd = to_circular(vp);
      const StickEmbedding se = build_stick_embedding(cd);
      cli_detail::emit(out, stick_embedding_to_json(se).dump(2) + "\n", out_path, "embedding");
      if (!obj_path.empty()) cli_detail::emit(out, to_obj(se), obj_path, "OBJ");
      if (!out_path.empty()) out << "sticks " << count_sticks(se) << "\n";
      return 0;
    }
    if (*build_eq) {
      const auto vps = cli_detail::load_all(ap_paths);
      const EquilateralEmbedding emb = build_equilateral(vps, length_opt->count() ? std::optional<double>(stick_length) : std::nullopt);
      cli_detail::emit(out, equilateral_to_json(emb).dump(2) + "\n", out_path, "embedding");
      if (!obj_path.empty()) cli_detail::emit(out, to_obj(emb), obj_path, "OBJ");
      if (!out_path.empty()) out << "sticks " << emb.sticks.size() << " M " << emb.M << " retries " << emb.retries << "\n";
      return 0;
    }
    if (*bounds) {
      bin.c_declared = c_opt->count() > 0;
      bin.b_declared = b_opt->count() > 0;
      bin.k_declared = k_opt->count() > 0;
      if (alpha_opt->count()) bin.alpha = alpha_opt->as<long>();
      if (n0_opt->count()) bin.n0 = n0_opt->as<long>();
      if (torus.size() == 2) bin.knot.torus = std::make_pair(torus[0], torus[1]);
      if (!bounds_from.empty()) {
        const auto vp = validate_presentation(load_presentation(bounds_from));
        const CircularDiagram cd = to_circular(vp);
        if (!e_opt->count()) bin.e = static_cast<long>(vp.e());
        if (!v_opt->count()) bin.v = static_cast<long>(vp.v());
        if (!alpha_opt->count()) bin.alpha = static_cast<long>(vp.n());
        if (!n0_opt->count()) bin.n0 = static_cast<long>(cd.counts.non);
        const bool declared = vp.presentation().params && !vp.params().heuristic;
        if (!bin.c_declared) {
          bin.c = vp.params().c;
          bin.c_declared = declared;
        }
        if (!bin.b_declared) {
          bin.b = vp.params().b;
          bin.b_declared = declared;
        }
        if (!bin.k_declared) {
          bin.k = vp.params().k;
          bin.k_declared = declared;
        }
      }
      const BoundsReport report = make_bounds_report(bin);
      if (bounds_json) {
        out << bounds_report_to_json(report).dump(2) << "\n";
      } else {
        write_bounds_report(out, report);
      }
      return 0;
    }
    if (*verify) {
      const json doc = read_json_file(emb_path);
      const auto vps = cli_detail::load_all(ap_paths);
      VerificationReport report;
      const std::string mode = doc.value("mode", "");
      if (mode == "exact") {
        if (vps.size() != 1) fail(ErrorCode::ParseError, "an exact embedding is verified against exactly one presentation");
        report = verify_stick_embedding(stick_embedding_from_json(doc), to_circular(vps.front()));
      } else if (mode == "decimal") {
        const EquilateralEmbedding emb = equilateral_from_json(doc);
        std::vector<std::size_t> arcs;
        for (const auto& piece : split_for_equilateral(vps)) arcs.push_back(piece.n());
        report = verify_equilateral(emb, emb.M, arcs);
      } else {
        fail(ErrorCode::ParseError, "embedding mode must be \"exact\" or \"decimal\"");
      }
      write_verification_report(out, report);
      return report.pass() ? 0 : 1;
    }
    if (*cat) {
      if (catalog_list) {
        for (const std::string& name : catalog_names()) out << name << "\n";
        return 0;
      }
      if (catalog_name.empty()) {
        err << "usage error: catalog needs a name or --list\n";
        return 2;
      }
      out << presentation_to_json(catalog(catalog_name)).dump(2) << "\n";
      return 0;
    }
    if (*rnd) {
      if (auto s = cli_detail::env_seed()) seed = *s;
      out << presentation_to_json(random_presentation(seed, parse_profile(profile_text))).dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "error " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace stickforge
