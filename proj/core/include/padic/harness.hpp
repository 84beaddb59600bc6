#pragma once

// Randomized checks of the polygon transformation laws. Each trial draws
// from its own RNG stream derived from (seed, trial index), so results do
// not depend on how trials are spread over threads.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "padic/exactnum.hpp"
#include "padic/poly.hpp"

namespace padic {

enum class Theorem { Stretch, Product, Sum, PowerPurity };

std::string to_string(Theorem theorem);
std::optional<Theorem> parse_theorem(std::string_view name);

/// mt19937_64 with distribution code of our own: the standard
/// distributions are implementation-defined, the engine is not.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : engine_(seed) {}
  static TrialRng for_trial(std::uint64_t seed, std::uint64_t trial);

  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(int percent) { return uniform(0, 99) < percent; }

 private:
  std::mt19937_64 engine_;
};

/// Nonzero rational with numerator and denominator prime to p.
BigRational random_unit(TrialRng& rng, const Prime& p);

/// p^r-pure polynomial of degree d: leading coefficient a p-unit, constant
/// term p^r times a unit, interior valuations on or above the segment.
Polynomial random_pr_pure(TrialRng& rng, const Prime& p, std::int64_t r, std::int64_t d);

struct RandomPolyShape {
  std::int64_t min_degree = 0;
  std::int64_t max_degree = 10;
  std::int64_t min_valuation = 0;
  std::int64_t max_valuation = 5;
  int density_percent = 60;
  bool nonzero_constant = false;
};

/// Nonzero polynomial with coefficients p^v * unit, v in the shape's range.
Polynomial random_polynomial(TrialRng& rng, const Prime& p, const RandomPolyShape& shape);

struct StretchSample {
  Prime prime;
  std::int64_t r;
  Polynomial f;
  Polynomial g;
};

/// Hypothesis-satisfying input for the stretch law: r in [1,4], deg g in
/// [2,6], deg f <= 12 with valuations in [-3,6] and every |slope| < r.
StretchSample sample_stretch(TrialRng& rng);

struct TrialFailure {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::string inputs;
  std::string detail;
};

struct HarnessOptions {
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct HarnessSummary {
  Theorem theorem;
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  std::optional<TrialFailure> first_failure;
};

/// Runs one trial; empty on success.
std::optional<TrialFailure> run_trial(Theorem theorem, std::uint64_t seed, std::uint64_t trial);

HarnessSummary run_property(Theorem theorem, const HarnessOptions& options);

}  // namespace padic
