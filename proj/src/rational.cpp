#include "crslab/rational.hpp"

#include <ostream>

namespace crslab {

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt pow(std::uint64_t base, unsigned long exponent) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  return out;
}

BigInt exact_root(const BigInt& value, unsigned long s) {
  if (s == 0) throw std::invalid_argument("exact_root: s must be positive");
  BigInt root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), s) == 0) {
    throw ConsistencyError("exact_root: " + to_string(value) + " is not a perfect " +
                           std::to_string(s) + "-th power");
  }
  return root;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("exact_div: division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw ConsistencyError("exact_div: " + to_string(num) + " / " + to_string(den) +
                           " is not exact");
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

bool fits_u64(const BigInt& v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return v >= 0 && v.fits_ulong_p();
}

std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw std::out_of_range("value " + to_string(v) + " exceeds 64 bits");
  return v.get_ui();
}

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  const BigInt den = parse_bigint(den_text);
  if (den == 0) throw std::invalid_argument("malformed rational (zero denominator): " +
                                            std::string(text));
  return Rational(num, den);
}

BigInt Rational::to_integer() const {
  if (!is_integer()) throw ConsistencyError("expected an integer, got " + str());
  return q_.get_num();
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return Rational(mpq_class(::abs(r.q_))); }

Rational pow(const Rational& r, long exponent) {
  if (exponent < 0) {
    if (r.q_ == 0) throw std::domain_error("Rational: zero to a negative power");
    return pow(Rational(1) / r, -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), r.q_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), r.q_.get_den_mpz_t(), e);
  return Rational(num, den);
}

}  // namespace crslab
