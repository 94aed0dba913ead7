#pragma once

// Randomised checks of the prover: semantic soundness on piecewise-linear
// homeomorphisms of the line, and certificate mutation against the
// independent verifier.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pretzel/word.hpp"

namespace pretzel::fuzz {

/// Increasing piecewise-linear bijection of R, slope 1 outside its breakpoints.
class PlMap {
 public:
  PlMap(std::vector<double> xs, std::vector<double> ys);
  double operator()(double x) const;
  double inverse(double x) const;
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }

 private:
  static double eval(const std::vector<double>& from, const std::vector<double>& to, double x);
  std::vector<double> xs_, ys_;
};

struct Assignment {
  std::vector<PlMap> maps;  // indexed by Gen
  double apply(const Word& w, double x) const;
  /// Points where w(x) - x can change slope, plus one point in each tail.
  std::vector<double> critical_points(const Word& w) const;
  /// min and max of w(x) - x over R, exact up to rounding.
  std::pair<double, double> displacement_range(const Word& w, const std::vector<double>& grid) const;
};

struct SoundnessReport {
  std::size_t instances = 0;  // kernel-accepted instances with true premises
  std::size_t violations = 0;
  std::size_t attempts = 0;
  std::vector<std::string> examples;  // first few violations
  std::map<std::string, std::size_t> per_rule;  // accepted instances by rule name
};

/// Grid of `points` evenly spaced values in [-20, 20].
std::vector<double> grid(std::size_t points);

SoundnessReport soundness_fuzz(std::uint64_t seed, std::size_t instances, std::size_t grid_points = 1000);

struct MutationReport {
  std::size_t originals = 0;
  std::size_t originals_accepted = 0;  // by the independent verifier
  std::size_t kept = 0;                // mutations the kernel rejects
  std::size_t rejected = 0;            // of those, rejected independently
  std::size_t attempts = 0;
  std::vector<std::string> escapes;    // mutations the independent verifier accepted
};

/// Mutates rule names, premise ids and word arguments of certificate JSON.
MutationReport mutation_fuzz(const std::vector<nlohmann::json>& certificates, std::uint64_t seed, std::size_t mutations);

}  // namespace pretzel::fuzz
