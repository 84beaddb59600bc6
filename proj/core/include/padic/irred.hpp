#pragma once

// Irreducibility certificates read off Newton polygons: Eisenstein-Dumas,
// slope-denominator divisibility across several primes, iterates of Dumas
// polynomials, and Taylor polynomials of exp composed with such iterates.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padic/exactnum.hpp"
#include "padic/poly.hpp"
#include "padic/polygon.hpp"

namespace padic {

/// Evidence that f is pure at p with height h coprime to deg f. The
/// polygon belongs to the primitive integer scaling of f.
struct DumasCertificate {
  Prime prime;
  std::int64_t height = 0;
  std::int64_t degree = 0;
  NewtonPolygon evidence;
};

/// Throws Error(ZeroPolynomial, ConstantPolynomial, ZeroConstantTerm).
std::optional<DumasCertificate> dumas_certificate(const Polynomial& f, const Prime& p);

/// Recomputes the polygon of f and checks the certificate against it.
bool replay(const DumasCertificate& certificate, const Polynomial& f);

struct SlopeLength {
  BigRational slope;
  std::int64_t length = 0;
  friend bool operator==(const SlopeLength&, const SlopeLength&) = default;
};

/// Every irreducible factor of f over Q has degree divisible by
/// forced_divisor, the gcd of the slope denominators of NP_p(f).
struct FactorDivisorEvidence {
  Prime prime;
  std::vector<BigRational> slopes;
  std::int64_t forced_divisor = 1;
};

/// Throws Error(ZeroPolynomial, ConstantPolynomial, ZeroConstantTerm).
FactorDivisorEvidence forced_factor_divisor(const Polynomial& f, const Prime& p);

enum class Verdict { CertifiedIrreducible, FactorDegreesMultipleOf, Inconclusive };

std::string to_string(Verdict verdict);

struct IrreducibilityCertificate {
  std::string polynomial;
  std::int64_t degree = 0;
  std::vector<FactorDivisorEvidence> primes;
  /// lcm of the per-prime divisors; always divides degree.
  std::int64_t combined_divisor = 1;
  Verdict verdict = Verdict::Inconclusive;
};

/// `descriptor` labels the polynomial in the certificate; defaults to its
/// canonical text. Throws Error(InvalidArgument) on an empty prime set.
IrreducibilityCertificate certify_irreducible(const Polynomial& f, std::span<const Prime> primes,
                                              std::string descriptor = {});

struct DynamicalStep {
  unsigned long m = 0;
  std::int64_t degree = 0;
  BigRational expected_slope;
  std::optional<BigRational> slope;  // empty when the iterate is not pure
  bool certified = false;
};

struct DynamicalReport {
  Prime prime;
  std::int64_t r = 0;
  std::int64_t d = 0;
  std::vector<DynamicalStep> steps;
  bool all_certified = false;
};

/// Iterates a p^r-Dumas polynomial (p^r-pure with gcd(r, deg) = 1) and
/// certifies each iterate up to max_iter.
/// Throws Error(NotDumas, DegreeCapExceeded).
DynamicalReport certify_dynamical(const Polynomial& g, const Prime& p, unsigned long max_iter,
                                  std::size_t degree_cap = kDefaultDegreeCap);

/// 1 + x + x^2/2! + ... + x^n/n!. Throws Error(InvalidArgument) for n = 0.
Polynomial taylor_exp(unsigned long n);

/// Segments of NP_p(taylor_exp(n)) from the base-p digits of n, in
/// increasing slope order. Throws Error(InvalidArgument) for n = 0.
std::vector<SlopeLength> exp_slopes(unsigned long n, const Prime& p);

/// Distinct primes dividing n, ascending.
std::vector<Prime> prime_divisors(unsigned long n);

struct PrimeDumasStatus {
  Prime prime;
  std::optional<std::int64_t> r;  // when g is p^r-pure
  bool dumas = false;
};

struct ExpCompositionHypotheses {
  std::int64_t degree_g = 0;
  bool degree_is_prime = false;
  bool degree_exceeds_prime_divisors = false;
  std::vector<PrimeDumasStatus> per_prime;
  bool all_hold = false;
};

struct ExpSlopeComparison {
  Prime prime;
  std::vector<SlopeLength> predicted;
  std::vector<SlopeLength> actual;
  bool matches = false;
};

struct ExpCompositionReport {
  ExpCompositionHypotheses hypotheses;
  IrreducibilityCertificate certificate;
  std::vector<ExpSlopeComparison> slopes;
  /// The hypotheses hold yet the computed divisor falls short of the degree.
  bool divisor_degraded = false;
};

/// Builds taylor_exp(n) o g^{o m}, certifies it against the primes dividing
/// n, and reports the hypothesis checks separately from the verdict.
/// Throws Error(InvalidArgument, DegreeCapExceeded).
ExpCompositionReport certify_exp_composition(unsigned long n, const Polynomial& g, unsigned long m,
                                             std::size_t degree_cap = kDefaultDegreeCap);

}  // namespace padic
