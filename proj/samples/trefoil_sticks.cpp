// Builds the exact stick embedding of the catalog trefoil and verifies it.

#include <iostream>

#include "stickforge/stickforge.hpp"

int main() {
  using namespace stickforge;
  const ValidatedPresentation vp = validate_presentation(catalog("trefoil"));
  const CircularDiagram cd = to_circular(vp);
  write_classification(std::cout, vp, cd);

  const StickEmbedding se = build_stick_embedding(cd);
  std::cout << "sticks " << count_sticks(se) << "\n";
  for (const Stick& s : se.sticks) {
    std::cout << "  page " << s.page << ' ' << to_string(s.piece) << ": " << s.nodes[0] << " -> " << s.nodes[1] << "\n";
  }
  const VerificationReport report = verify_stick_embedding(se, cd);
  write_verification_report(std::cout, report);
  return report.pass() ? 0 : 1;
}
