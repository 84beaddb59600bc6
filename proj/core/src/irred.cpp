#include "padic/irred.hpp"

#include <algorithm>
#include <numeric>

namespace padic {

namespace {

void require_certifiable(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial");
  if (f.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "need a nonconstant polynomial");
  if (f.coefficient(0).is_zero()) throw Error(ErrorCode::ZeroConstantTerm, "f(0) = 0");
}

std::int64_t to_int64(const BigInt& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("value exceeds 64 bits");
  return n.get_si();
}

std::int64_t checked_pow(std::int64_t base, unsigned long exp, std::size_t cap) {
  std::int64_t out = 1;
  for (unsigned long i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out) || static_cast<std::size_t>(out) > cap) {
      throw Error(ErrorCode::DegreeCapExceeded,
                  std::to_string(base) + "^" + std::to_string(exp) + " exceeds the cap of " + std::to_string(cap));
    }
  }
  return out;
}

std::vector<SlopeLength> to_slope_lengths(const NewtonPolygon& np) {
  std::vector<SlopeLength> out;
  for (const auto& s : segments(np)) out.push_back({s.slope, s.length});
  return out;
}

}  // namespace

std::optional<DumasCertificate> dumas_certificate(const Polynomial& f, const Prime& p) {
  require_certifiable(f);
  PurityReport report = classify_purity(primitive_part(f), p);
  if (!report.dumas) return std::nullopt;
  return DumasCertificate{p, *report.height, static_cast<std::int64_t>(*f.degree()), std::move(report.evidence)};
}

bool replay(const DumasCertificate& certificate, const Polynomial& f) {
  if (f.is_constant() || f.coefficient(0).is_zero()) return false;
  const NewtonPolygon np = newton_polygon(primitive_part(f), certificate.prime);
  const auto& v = np.vertices();
  return np == certificate.evidence && v.size() == 2 && certificate.degree == v.back().x &&
         certificate.height == v.front().y - v.back().y && certificate.height >= 1 &&
         std::gcd(certificate.height, certificate.degree) == 1;
}

FactorDivisorEvidence forced_factor_divisor(const Polynomial& f, const Prime& p) {
  require_certifiable(f);
  FactorDivisorEvidence evidence{p, {}, 0};
  for (const auto& s : segments(newton_polygon(f, p))) {
    evidence.forced_divisor = std::gcd(evidence.forced_divisor, to_int64(s.slope.denominator()));
    evidence.slopes.push_back(s.slope);
  }
  return evidence;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::CertifiedIrreducible: return "certified_irreducible";
    case Verdict::FactorDegreesMultipleOf: return "factor_degrees_multiple_of";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

IrreducibilityCertificate certify_irreducible(const Polynomial& f, std::span<const Prime> primes,
                                              std::string descriptor) {
  require_certifiable(f);
  if (primes.empty()) throw Error(ErrorCode::InvalidArgument, "no primes given");
  IrreducibilityCertificate cert;
  cert.polynomial = descriptor.empty() ? format(f) : std::move(descriptor);
  cert.degree = static_cast<std::int64_t>(*f.degree());
  for (const Prime& p : primes) {
    cert.primes.push_back(forced_factor_divisor(f, p));
    cert.combined_divisor = std::lcm(cert.combined_divisor, cert.primes.back().forced_divisor);
  }
  if (cert.combined_divisor == cert.degree) {
    cert.verdict = Verdict::CertifiedIrreducible;
  } else if (cert.combined_divisor > 1) {
    cert.verdict = Verdict::FactorDegreesMultipleOf;
  } else {
    cert.verdict = Verdict::Inconclusive;
  }
  return cert;
}

DynamicalReport certify_dynamical(const Polynomial& g, const Prime& p, unsigned long max_iter,
                                  std::size_t degree_cap) {
  require_certifiable(g);
  const NewtonPolygon np = newton_polygon(g, p);
  const auto r = pr_pure_r(np);
  const std::int64_t d = np.top_degree();
  if (!r || std::gcd(*r, d) != 1) {
    throw Error(ErrorCode::NotDumas, format(g) + " is not p^r-Dumas at " + p.to_string());
  }
  checked_pow(d, max_iter, degree_cap);

  DynamicalReport report{p, *r, d, {}, true};
  Polynomial current = g;
  std::int64_t degree = d;
  for (unsigned long m = 1; m <= max_iter; ++m) {
    if (m > 1) {
      current = compose(g, current, degree_cap);
      degree *= d;
    }
    DynamicalStep step{m, degree, BigRational(BigInt(-*r), BigInt(static_cast<long>(degree))), std::nullopt, false};
    const PurityReport purity = classify_purity(current, p);
    step.slope = purity.slope;
    step.certified = purity.slope == step.expected_slope && dumas_certificate(current, p).has_value();
    report.all_certified = report.all_certified && step.certified;
    report.steps.push_back(std::move(step));
  }
  return report;
}

Polynomial taylor_exp(unsigned long n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "taylor_exp needs n >= 1");
  std::vector<BigRational> coeffs;
  coeffs.reserve(n + 1);
  BigInt factorial = 1;
  for (unsigned long k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    coeffs.emplace_back(BigInt(1), factorial);
  }
  return Polynomial(std::move(coeffs));
}

std::vector<SlopeLength> exp_slopes(unsigned long n, const Prime& p) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "exp_slopes needs n >= 1");
  std::vector<SlopeLength> out;
  BigInt rest = n;
  BigInt place = 1;  // p^position
  const BigInt& base = p.value();
  while (rest > 0) {
    const BigInt digit = rest % base;
    if (digit != 0) {
      out.push_back({BigRational(BigInt(1 - place), BigInt(place * (base - 1))), to_int64(digit * place)});
    }
    rest /= base;
    place *= base;
  }
  // Higher positions give steeper slopes.
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Prime> prime_divisors(unsigned long n) {
  std::vector<Prime> out;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.emplace_back(static_cast<long>(q));
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.emplace_back(static_cast<long>(n));
  return out;
}

ExpCompositionReport certify_exp_composition(unsigned long n, const Polynomial& g, unsigned long m,
                                             std::size_t degree_cap) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (g.is_zero() || *g.degree() < 2) throw Error(ErrorCode::InvalidArgument, "g must have degree >= 2");
  const auto d = static_cast<std::int64_t>(*g.degree());
  const std::int64_t stretch_factor = checked_pow(d, m, degree_cap);
  if (static_cast<std::size_t>(stretch_factor) > degree_cap / n) {
    throw Error(ErrorCode::DegreeCapExceeded, "taylor_exp(" + std::to_string(n) + ") o g^" + std::to_string(m) +
                                                  " exceeds the cap of " + std::to_string(degree_cap));
  }
  const std::vector<Prime> primes = prime_divisors(n);

  ExpCompositionHypotheses hyp;
  hyp.degree_g = d;
  hyp.degree_is_prime = is_prime(BigInt(static_cast<long>(d)));
  hyp.degree_exceeds_prime_divisors =
      std::all_of(primes.begin(), primes.end(), [&](const Prime& p) { return BigInt(static_cast<long>(d)) > p.value(); });
  bool all_dumas = true;
  for (const Prime& p : primes) {
    PrimeDumasStatus status{p, std::nullopt, false};
    if (!g.coefficient(0).is_zero()) {
      status.r = pr_pure_r(newton_polygon(g, p));
      status.dumas = status.r && std::gcd(*status.r, d) == 1;
    }
    all_dumas = all_dumas && status.dumas;
    hyp.per_prime.push_back(std::move(status));
  }
  hyp.all_hold = hyp.degree_is_prime && hyp.degree_exceeds_prime_divisors && all_dumas;

  const Polynomial composite = compose(taylor_exp(n), iterate(g, m, degree_cap), degree_cap);
  std::string descriptor = "taylor_exp(" + std::to_string(n) + ")";
  if (m > 0) descriptor += " o (" + format(g) + ")^[" + std::to_string(m) + "]";

  ExpCompositionReport report{std::move(hyp), {}, {}, false};
  if (primes.empty()) {
    // n = 1: no prime carries information; only a linear composite is settled.
    report.certificate.polynomial = descriptor;
    report.certificate.degree = static_cast<std::int64_t>(*composite.degree());
    report.certificate.verdict =
        report.certificate.degree == 1 ? Verdict::CertifiedIrreducible : Verdict::Inconclusive;
  } else {
    report.certificate = certify_irreducible(composite, primes, descriptor);
  }

  for (const Prime& p : primes) {
    ExpSlopeComparison cmp{p, exp_slopes(n, p), to_slope_lengths(newton_polygon(composite, p)), false};
    for (auto& s : cmp.predicted) {
      s.slope /= BigRational(BigInt(static_cast<long>(stretch_factor)));
      s.length *= stretch_factor;
    }
    cmp.matches = cmp.predicted == cmp.actual;
    report.slopes.push_back(std::move(cmp));
  }
  report.divisor_degraded =
      report.hypotheses.all_hold && report.certificate.verdict != Verdict::CertifiedIrreducible;
  return report;
}

}  // namespace padic
