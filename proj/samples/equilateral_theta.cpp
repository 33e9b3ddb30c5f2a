// Equilateral embedding of a trivial theta graph with n edges (default 4).

#include <iostream>
#include <string>

#include "stickforge/stickforge.hpp"

int main(int argc, char** argv) {
  using namespace stickforge;
  const long n = argc > 1 ? std::stol(argv[1]) : 4;
  const ValidatedPresentation vp = validate_presentation(catalog_theta_trivial(n));
  const EquilateralEmbedding emb = build_equilateral({vp});

  std::cout << "M " << emb.M << ", sticks " << emb.sticks.size() << " (2n - 1 = " << 2 * n - 1 << ")\n";
  std::cout << "max length deviation " << emb.tolerance.max_length_deviation_rel << " M\n";
  std::cout << "min clearance " << emb.tolerance.min_clearance_rel << " M\n";
  for (const MoveRecord& m : emb.certificates.front().moves) {
    std::cout << "  " << m.move << ": " << m.samples << " samples, min clearance " << m.min_clearance << "\n";
  }
  const VerificationReport report = verify_equilateral(emb, emb.M, {vp.n()});
  write_verification_report(std::cout, report);
  return report.pass() ? 0 : 1;
}
