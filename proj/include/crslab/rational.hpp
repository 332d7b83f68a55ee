#pragma once

// Exact integer and rational value types.
//
// BigInt is GMP's mpz_class. Rational wraps mpq_class and keeps it in lowest
// terms with a positive denominator at all times, so equality is structural
// and the "p/q" text form is canonical.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crslab {

using BigInt = mpz_class;

/// Raised when an exact computation produces a value that the algebra says
/// is impossible (non-integer power sum, inexact division, broken bound).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt pow(std::uint64_t base, unsigned long exponent);

/// Exact s-th root. Throws ConsistencyError if `value` is not a perfect power.
BigInt exact_root(const BigInt& value, unsigned long s);

/// Divides and throws ConsistencyError when the remainder is nonzero.
BigInt exact_div(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& v);

/// Parses a decimal integer. Throws std::invalid_argument on malformed text.
BigInt parse_bigint(std::string_view text);

/// True when `v` fits std::uint64_t.
bool fits_u64(const BigInt& v);
std::uint64_t to_u64(const BigInt& v);

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error for a zero denominator.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "n", "-n", "p/q". Throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_integer() const { return q_.get_den() == 1; }
  /// Returns the integer value; ConsistencyError if the denominator is not 1.
  BigInt to_integer() const;

  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  /// "p/q", or "n" when q = 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_{0};

  friend Rational abs(const Rational& r);
  friend Rational pow(const Rational& r, long exponent);
};

Rational abs(const Rational& r);
/// Integer power; negative exponents invert (zero base throws std::domain_error).
Rational pow(const Rational& r, long exponent);

}  // namespace crslab
