#pragma once

// Dense univariate polynomials over Z and Q, coefficient i is the coefficient
// of X^i. The zero polynomial has no coefficients.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "ball.hpp"

namespace singmod {

struct ZPoly {
  std::vector<mpz_class> c;

  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(); }
  static ZPoly monomial(const mpz_class& coeff, std::size_t deg);

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const mpz_class& lead() const { return c.back(); }
  mpz_class coeff(std::size_t i) const { return i < c.size() ? c[i] : mpz_class(0); }
  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  CBall eval(const CBall& z) const;
  ZPoly derivative() const;
  mpz_class content() const;
  ZPoly primitive() const;  // content removed, positive leading coefficient
  std::string to_string() const;

  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c == b.c; }
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }
};

struct QPoly {
  std::vector<mpq_class> c;

  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs) : c(std::move(coeffs)) { trim(); }
  explicit QPoly(const ZPoly& p);
  static QPoly constant(const mpq_class& v);
  static QPoly x();

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const mpq_class& lead() const { return c.back(); }
  mpq_class coeff(std::size_t i) const { return i < c.size() ? c[i] : mpq_class(0); }
  mpq_class eval(const mpq_class& x) const;
  CBall eval(const CBall& z) const;
  QPoly derivative() const;
  QPoly monic() const;
  // Primitive integer polynomial with the same roots, positive leading coefficient.
  ZPoly to_primitive_z() const;
  std::string to_string() const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }
};

ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const mpz_class& s);

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const mpq_class& s);

struct QDivMod {
  QPoly quot;
  QPoly rem;
};
QDivMod divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);

// Monic gcd over Q (zero if both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
// f / gcd(f, f'), as a primitive integer polynomial.
ZPoly squarefree_part(const ZPoly& f);
// Exact quotient a / b over Z; nullopt when b does not divide a in Z[X].
std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b);
// True when b divides a in Q[X].
bool divides(const ZPoly& b, const ZPoly& a);

// Composition a(b(X)).
QPoly compose(const QPoly& a, const QPoly& b);
// a(X) * b(X) mod m(X).
QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m);
QPoly powmod(const QPoly& a, unsigned long e, const QPoly& m);

// k-th cyclotomic polynomial.
ZPoly cyclotomic(unsigned k);
unsigned long euler_phi(unsigned long k);

// Determinant of a square integer matrix (fraction-free Bareiss).
mpz_class determinant(std::vector<std::vector<mpz_class>> m);
// Resultant of a and b taken with the formal degrees da >= deg a, db >= deg b.
mpz_class resultant(const ZPoly& a, const ZPoly& b, int da, int db);
mpz_class resultant(const ZPoly& a, const ZPoly& b);
mpz_class discriminant(const ZPoly& f);

// Polynomial in s whose coefficients are polynomials in t: coefficient i is
// the coefficient of s^i.
struct BiPoly {
  std::vector<ZPoly> c;
  int degree_s() const { return static_cast<int>(c.size()) - 1; }
  int degree_t() const;
  ZPoly at_t(const mpz_class& t) const;
};

// Res_s(a(s, t), b(s, t)) as a polynomial in t. Computed by evaluation at
// integer points and interpolation against the a-priori degree bound.
ZPoly eliminate(const BiPoly& a, const BiPoly& b);

// Interpolating polynomial through (x_i, y_i) over Q.
QPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

// Simplest rational in [lo, hi]; nullopt if its denominator exceeds max_den.
std::optional<mpq_class> simplest_rational(const mpq_class& lo, const mpq_class& hi,
                                           const mpz_class& max_den);
// Rational reconstruction of a real ball with denominator bound 2^(prec/4).
std::optional<mpq_class> reconstruct_rational(const Ball& x);

mpq_class to_mpq(mpfr_srcptr x);

}  // namespace singmod
