// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <iomanip>
#include <iostream>

#include "pretzel/acceptance.hpp"

int main() {
  const pretzel::AcceptanceConfig cfg;  // s = 3..12, fixed seed, full fuzz sizes
  bool all = true;
  for (const auto& r : pretzel::run_acceptance(cfg)) {
    all = all && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << " (" << r.name << "): " << r.detail
              << "  [" << std::fixed << std::setprecision(2) << r.seconds << " s]\n";
  }
  return all ? 0 : 1;
}
