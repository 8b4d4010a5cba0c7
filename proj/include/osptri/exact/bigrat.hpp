#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "osptri/exact/errors.hpp"

namespace osptri {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRat(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  explicit BigRat(const mpz_class& v) : q_(v) {}
  explicit BigRat(const mpq_class& v) : q_(v) { q_.canonicalize(); }

  /// num/den; throws ZeroDenominator when den == 0.
  BigRat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  BigRat(long num, long den) : BigRat(mpz_class(num), mpz_class(den)) {}

  /// Parses "p", "-p", "p/q", "+p/q" (decimal digits only).
  static BigRat parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "p/q" with the sign carried by p; integers print without "/1".
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  BigRat operator-() const { return BigRat(mpq_class(-q_)); }
  BigRat& operator+=(const BigRat& o) { q_ += o.q_; return *this; }
  BigRat& operator-=(const BigRat& o) { q_ -= o.q_; return *this; }
  BigRat& operator*=(const BigRat& o) { q_ *= o.q_; return *this; }
  BigRat& operator/=(const BigRat& o) {
    if (o.is_zero()) throw ZeroDenominator("division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (zero base then throws).
  BigRat pow(long e) const {
    if (e < 0) return (BigRat(1) / *this).pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return BigRat(mpq_class(n, d));
  }

  BigRat abs() const { return BigRat(mpq_class(::abs(q_))); }

  friend std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

inline BigRat BigRat::parse(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view t = text;
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  bool neg = false;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
    neg = t.front() == '-';
    t.remove_prefix(1);
  }
  auto slash = t.find('/');
  std::string_view p = t.substr(0, slash);
  std::string_view q = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
  if (!digits(p) || !digits(q)) throw ParseError("malformed rational: '" + std::string(text) + "'");
  mpz_class num{std::string(p)}, den{std::string(q)};
  if (den == 0) throw ZeroDenominator("zero denominator in '" + std::string(text) + "'");
  if (neg) num = -num;
  return BigRat(num, den);
}

}  // namespace osptri
