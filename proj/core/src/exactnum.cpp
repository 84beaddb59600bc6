#include "padic/exactnum.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "padic/error.hpp"

namespace padic {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

__extension__ typedef unsigned __int128 WideUnsigned;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<WideUnsigned>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// These twelve witnesses are deterministic for every n < 3.3e24.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw ParseError(0, "malformed integer literal '" + std::string(text) + "'");
  }
  BigInt value(std::string(digits), 10);
  if (negative) value = -value;
  return value;
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  value_.get_num() = num;
  value_.get_den() = den;
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_bigint(text));
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw ParseError(slash + 1, "denominator must be a positive integer in '" + std::string(text) + "'");
  }
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw ParseError(slash + 1, "zero denominator in '" + std::string(text) + "'");
  return BigRational(parse_bigint(text.substr(0, slash)), den);
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string BigRational::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigRational abs(const BigRational& q) { return q.sign() < 0 ? -q : q; }

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return Valuation::infinity();
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a.value_, b.value_, &sum)) {
    throw std::overflow_error("valuation overflow");
  }
  return Valuation(sum);
}

Valuation operator-(const Valuation& a, const Valuation& b) {
  if (b.infinite_) throw std::domain_error("cannot subtract an infinite valuation");
  if (a.infinite_) return Valuation::infinity();
  std::int64_t diff = 0;
  if (__builtin_sub_overflow(a.value_, b.value_, &diff)) {
    throw std::overflow_error("valuation overflow");
  }
  return Valuation(diff);
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

bool is_prime(const BigInt& n) {
  if (sgn(n) <= 0) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    std::uint64_t value = 0;
    mpz_export(&value, nullptr, -1, sizeof(value), 0, 0, n.get_mpz_t());
    return is_prime_u64(value);
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Prime::Prime(const BigInt& value) : value_(value) {
  if (!is_prime(value_)) throw Error(ErrorCode::NotPrime, value_.get_str() + " is not prime");
}

Prime Prime::parse(std::string_view text) { return Prime(parse_bigint(text)); }

Valuation ord(const BigInt& n, const Prime& p) {
  if (n == 0) return Valuation::infinity();
  BigInt rest;
  // The count is bounded by the bit length of n, far inside int64.
  const auto count = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.value().get_mpz_t());
  return Valuation(static_cast<std::int64_t>(count));
}

Valuation ord(const BigRational& q, const Prime& p) {
  if (q.is_zero()) return Valuation::infinity();
  return ord(q.numerator(), p) - ord(q.denominator(), p);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

}  // namespace padic
