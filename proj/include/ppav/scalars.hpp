#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "ppav/errors.hpp"

namespace ppav {

// Exact scalar tower: Integer < Rational < GaussianRational.
// All arithmetic is exact; nothing in the library ever rounds.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer int_from_string(const std::string& s) {
  try {
    return Integer(s);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a decimal integer: '" + s + "'");
  }
}

/// num/den in lowest terms with positive denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return make_rational(int_from_string(s), 1);
  return make_rational(int_from_string(s.substr(0, slash)),
                       int_from_string(s.substr(slash + 1)));
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

/// Canonical "p/q" form, denominator always spelled out.
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Floor/round integer division (operator/ on mpz truncates toward zero).
inline Integer div_floor(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer div_round(const Integer& a, const Integer& b) {
  return div_floor(2 * a + b, 2 * b);
}

inline Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianRational(const Rational& r) : re(r), im(0) {}
  explicit GaussianRational(const Integer& n) : re(n), im(0) {}
  explicit GaussianRational(long n) : re(n), im(0) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (n == 0) throw SingularMatrix("division by zero Gaussian rational");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline std::string to_string(const GaussianRational& z) {
  return to_string(z.re) + (sgn(z.im) < 0 ? "" : "+") + to_string(z.im) + "i";
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << to_string(z);
}

// Three-way compares used for deterministic orderings (sets, canonical forms).
inline int compare(const Integer& a, const Integer& b) { return cmp(a, b); }
inline int compare(const Rational& a, const Rational& b) { return cmp(a, b); }
inline int compare(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re, b.re);
  return c != 0 ? c : cmp(a.im, b.im);
}

}  // namespace ppav
