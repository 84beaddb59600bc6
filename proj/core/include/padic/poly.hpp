#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padic/exactnum.hpp"

namespace padic {

/// Largest degree compose/iterate/parse will build unless told otherwise.
inline constexpr std::size_t kDefaultDegreeCap = 100000;

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i; the
/// stored sequence never ends in zero, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients);
  Polynomial(std::initializer_list<BigRational> coefficients)
      : Polynomial(std::vector<BigRational>(coefficients)) {}

  static Polynomial constant(const BigRational& c);
  static Polynomial monomial(const BigRational& c, std::size_t exponent);
  static Polynomial x() { return monomial(BigRational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Empty for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  const BigRational& coefficient(std::size_t i) const;
  /// Precondition: !is_zero().
  const BigRational& leading() const { return coeffs_.back(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Polynomial& f, const BigRational& c);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial pow(const Polynomial& f, unsigned long k);

/// f(g(x)) by Horner's rule over the coefficients of f.
/// Throws Error(DegreeCapExceeded) when deg f * deg g > degree_cap.
Polynomial compose(const Polynomial& f, const Polynomial& g,
                   std::size_t degree_cap = kDefaultDegreeCap);

/// m-fold self-composition; iterate(g, 0) = x.
/// Throws Error(DegreeCapExceeded) when deg(g)^m > degree_cap.
Polynomial iterate(const Polynomial& g, unsigned long m,
                   std::size_t degree_cap = kDefaultDegreeCap);

BigRational eval(const Polynomial& f, const BigRational& a);

/// Multiplies by the positive rational that makes the coefficients coprime
/// integers (content 1). Returns the zero polynomial unchanged.
Polynomial primitive_part(const Polynomial& f);

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return sub(f, g); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return mul(f, g); }

/// Parses polynomial text:
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (['*'] factor)*
///   factor  := primary ['^' digits]
///   primary := integer ['/' integer] | 'x' | 'p' | '(' expr ')'
///
/// Whitespace is ignored. The symbol `p` is accepted only when `p_value` is
/// given and stands for it. Throws ParseError with the failing offset.
Polynomial parse_polynomial(std::string_view text,
                            const std::optional<BigInt>& p_value = std::nullopt,
                            std::size_t degree_cap = kDefaultDegreeCap);

/// Canonical text in ascending powers, e.g. `5 + x^2 + 125*x^6`. The result
/// parses back to the same polynomial.
std::string format(const Polynomial& f);

}  // namespace padic
