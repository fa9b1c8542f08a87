#pragma once

// Finite-precision arithmetic in tamely ramified extensions of Q_p.
//
// E = U(pi) where U is the unramified extension of degree f (generated by a
// root w of the first irreducible polynomial of degree f over F_p, lifted to
// Z) and pi^e = p * c for a unit c of U. Elements of O_E are stored as
// e*f integers mod p^M in the basis pi^i w^j; each element also carries an
// absolute precision in powers of pi.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <vector>

#include "finite_field.hpp"
#include "poly.hpp"

namespace singmod {

class LocalField;

struct LocalElement {
  std::vector<mpz_class> c;  // index i*f + j is the coefficient of pi^i w^j
  long absprec = 0;          // known modulo pi^absprec
};

class LocalField {
 public:
  // c_index selects the unit c as the c_index-th power of a generator of
  // the residue field (ignored when e = 1).
  LocalField(long p, int e, int f, unsigned c_index, long absprec);

  long p() const { return p_; }
  int e() const { return e_; }
  int f() const { return f_; }
  unsigned c_index() const { return c_index_; }
  long absprec() const { return absprec_; }
  int degree() const { return e_ * f_; }
  const FiniteField& residue_field() const { return k_; }
  const std::vector<mpz_class>& unit_c() const { return c_; }

  LocalElement zero() const;
  LocalElement one() const;
  LocalElement from_int(const mpz_class& v) const;
  LocalElement uniformizer() const;
  // Element whose residue is r (coordinates taken in [0, p)).
  LocalElement lift(const FiniteField::Elem& r) const;

  LocalElement add(const LocalElement& a, const LocalElement& b) const;
  LocalElement sub(const LocalElement& a, const LocalElement& b) const;
  LocalElement neg(const LocalElement& a) const;
  LocalElement mul(const LocalElement& a, const LocalElement& b) const;
  LocalElement pow(const LocalElement& a, unsigned long n) const;
  // a / pi^s; requires v(a) >= s.
  LocalElement div_pi(const LocalElement& a, long s) const;
  // a / b for v(a) >= v(b).
  LocalElement div(const LocalElement& a, const LocalElement& b) const;
  LocalElement inv_unit(const LocalElement& u) const;

  // Normalised valuation (v(pi) = 1). Returns nullopt when a vanishes to the
  // available precision.
  std::optional<long> valuation(const LocalElement& a) const;
  // Valuation, throwing PrecisionError when undecided.
  long val(const LocalElement& a) const;
  bool is_zero_to_precision(const LocalElement& a) const { return !valuation(a).has_value(); }
  FiniteField::Elem residue(const LocalElement& a) const;

  // Tr_{E/Q_p}(a) modulo p^(absprec digits available).
  mpz_class trace(const LocalElement& a) const;
  // Characteristic polynomial over Q_p (monic, degree e*f), coefficients
  // reduced mod p^k where k is returned through `digits`.
  std::vector<mpz_class> charpoly(const LocalElement& a, long* digits = nullptr) const;

  // Image of a rational number with p-adic valuation >= 0.
  LocalElement from_rational(const mpq_class& q) const;
  // p-adic digits available in the coefficient ring (M).
  long ring_digits() const { return m_digits_; }
  const mpz_class& modulus_pm() const { return pm_; }

 private:
  std::vector<mpz_class> u_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) const;
  std::vector<mpz_class> u_inv(const std::vector<mpz_class>& a) const;
  void reduce(std::vector<mpz_class>& v) const;

  long p_;
  int e_;
  int f_;
  unsigned c_index_;
  long absprec_;
  long m_digits_;
  mpz_class pm_;
  FiniteField k_;
  std::vector<mpz_class> omega_mod_;  // lifted modulus of w, monic degree f
  std::vector<mpz_class> c_;          // unit c in U
  std::vector<mpz_class> omega_traces_;
};

using LocalPoly = std::vector<LocalElement>;

LocalPoly to_local(const LocalField& k, const ZPoly& f);
LocalElement eval(const LocalField& k, const LocalPoly& f, const LocalElement& x);
LocalElement eval(const LocalField& k, const QPoly& f, const LocalElement& x);

// All roots of a polynomial with coefficients in O_E that lie in O_E, found
// from residue roots by Hensel lifting (simple roots) and by recursing on
// F(r + pi w) / pi^s (repeated residue roots).
std::vector<LocalElement> integral_roots(const LocalField& k, const LocalPoly& f);

// Tamely ramified field in which f splits completely, searched in order of
// e*f, then f, then e, then c. Returns nullptr if none of degree <= max_degree.
std::shared_ptr<LocalField> splitting_field(const ZPoly& f, long p, long absprec, int max_degree = 6);

// p-adic valuation of an integer (or rational numerator/denominator).
long vp(const mpz_class& v, long p);
long vp(const mpq_class& v, long p);

}  // namespace singmod
