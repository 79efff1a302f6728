#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace apu {

using Int = mpz_class;

inline Int int_from(std::uint64_t v) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int floor_sqrt(const Int& n) {
  if (n < 0) throw std::domain_error("floor_sqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Int binomial2(const Int& n) { return n * (n - 1) / 2; }

/// Exact rational, canonical form: den > 0, gcd(|num|, den) = 1.
/// Census element values are additionally required to be positive by the
/// containers that hold them (FiniteSet, AP differences).
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long v) : q_(v) {}            // NOLINT(google-explicit-constructor)
  Rational(const Int& v) : q_(v) {}      // NOLINT(google-explicit-constructor)
  template <class U>                     // gmp integer expression templates
  Rational(const __gmp_expr<mpz_t, U>& e) : q_(Int(e)) {}  // NOLINT
  Rational(const Int& num, const Int& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  static Rational from_string(const std::string& s);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }

  bool is_positive() const { return sgn(q_) > 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational reciprocal() const {
    if (sgn(q_) == 0) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(q_.get_den(), q_.get_num());
  }

  double to_double() const { return q_.get_d(); }

  /// Canonical "num/den" form, e.g. "2/1", "-3/4".
  std::string to_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (sgn(b.q_) == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.q_ / b.q_);
  }
  Rational operator-() const { return Rational(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// Exact quotient a/b in lowest terms. ratio_of(x, x) == 1.
inline Rational ratio_of(const Rational& a, const Rational& b) { return a / b; }

std::string int_to_string(const Int& v);
Int int_from_string(const std::string& s);

}  // namespace apu
