#include "padic/poly.hpp"

#include <algorithm>

#include "padic/error.hpp"

namespace padic {

namespace {

const BigRational kZero{};

// Integer image of f: coefficients scaled by the lcm of their denominators.
struct ClearedPolynomial {
  std::vector<BigInt> coeffs;
  BigInt denominator;
};

ClearedPolynomial clear_denominators(const Polynomial& f) {
  ClearedPolynomial out{{}, BigInt(1)};
  for (const auto& c : f.coefficients()) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(),
            c.denominator().get_mpz_t());
  }
  out.coeffs.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) {
    BigInt scaled = out.denominator / c.denominator();
    scaled *= c.numerator();
    out.coeffs.push_back(std::move(scaled));
  }
  return out;
}

void check_cap(std::size_t degree, std::size_t cap, const char* what) {
  if (degree > cap) {
    throw Error(ErrorCode::DegreeCapExceeded,
                std::string(what) + " would have degree " + std::to_string(degree) +
                    ", above the cap of " + std::to_string(cap));
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial(std::vector{c}); }

Polynomial Polynomial::monomial(const BigRational& c, std::size_t exponent) {
  if (c.is_zero()) return {};
  std::vector<BigRational> coeffs(exponent + 1);
  coeffs[exponent] = c;
  return Polynomial(std::move(coeffs));
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const BigRational& Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

Polynomial add(const Polynomial& f, const Polynomial& g) {
  const auto& a = f.coefficients();
  const auto& b = g.coefficients();
  std::vector<BigRational> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return Polynomial(std::move(out));
}

Polynomial scale(const Polynomial& f, const BigRational& c) {
  std::vector<BigRational> out = f.coefficients();
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial sub(const Polynomial& f, const Polynomial& g) { return add(f, scale(g, BigRational(-1))); }

// Schoolbook convolution over the integer images; one gcd per output
// coefficient instead of one per partial product.
Polynomial mul(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const ClearedPolynomial a = clear_denominators(f);
  const ClearedPolynomial b = clear_denominators(g);
  std::vector<BigInt> product(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    const mpz_srcptr ai = a.coeffs[i].get_mpz_t();
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      mpz_addmul(product[i + j].get_mpz_t(), ai, b.coeffs[j].get_mpz_t());
    }
  }
  const BigInt denominator = a.denominator * b.denominator;
  std::vector<BigRational> out;
  out.reserve(product.size());
  for (const auto& c : product) out.emplace_back(c, denominator);
  return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& f, unsigned long k) {
  Polynomial result = Polynomial::constant(BigRational(1));
  Polynomial base = f;
  while (k > 0) {
    if (k & 1UL) result = mul(result, base);
    k >>= 1UL;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Polynomial compose(const Polynomial& f, const Polynomial& g, std::size_t degree_cap) {
  if (f.is_constant()) return f;
  if (!g.is_zero()) check_cap(*f.degree() * *g.degree(), degree_cap, "composition");
  const auto& a = f.coefficients();
  Polynomial result = Polynomial::constant(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    result = add(mul(result, g), Polynomial::constant(a[i]));
  }
  return result;
}

Polynomial iterate(const Polynomial& g, unsigned long m, std::size_t degree_cap) {
  if (m == 0) return Polynomial::x();
  if (!g.is_zero() && *g.degree() > 1) {
    std::size_t degree = 1;
    for (unsigned long i = 0; i < m; ++i) {
      if (__builtin_mul_overflow(degree, *g.degree(), &degree)) degree = SIZE_MAX;
      check_cap(degree, degree_cap, "iterate");
    }
  }
  Polynomial result = g;
  for (unsigned long i = 1; i < m; ++i) result = compose(g, result, degree_cap);
  return result;
}

BigRational eval(const Polynomial& f, const BigRational& a) {
  BigRational acc;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= a;
    acc += *it;
  }
  return acc;
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  ClearedPolynomial cleared = clear_denominators(f);
  BigInt content;
  for (const auto& c : cleared.coeffs) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  std::vector<BigRational> out;
  out.reserve(cleared.coeffs.size());
  for (const auto& c : cleared.coeffs) out.emplace_back(BigInt(c / content));
  return Polynomial(std::move(out));
}

std::string format(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    const bool negative = c[i].sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const BigRational magnitude = abs(c[i]);
    const bool unit = magnitude == BigRational(1);
    if (i == 0 || !unit) out += magnitude.to_string();
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace padic
