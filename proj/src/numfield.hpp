#pragma once

#include <array>
#include <vector>

#include "ball.hpp"
#include "poly.hpp"
#include "quadforms.hpp"

namespace singmod {

// Certified isolating balls for all complex roots of a squarefree integer
// polynomial. Certified real roots have an exactly-zero imaginary part and
// conjugate roots are stored as exact conjugates of each other. Order: real
// roots by decreasing value, then conjugate pairs by decreasing real part with
// the upper half-plane member first.
std::vector<CBall> isolate_roots(const ZPoly& f, mpfr_prec_t prec = kDefaultPrecision,
                                 mpfr_prec_t cap = kDefaultPrecisionCap);

struct Factor {
  ZPoly poly;                       // primitive, irreducible over Q
  std::vector<std::size_t> roots;   // indices into the root list it was built from
};

// Irreducible factorization of a squarefree polynomial from its certified
// roots. A root subset S yields a factor when lead(f) * prod_{S}(X - r) rounds to
// an integer polynomial dividing f that is nonzero at every root outside S.
// The smallest such subset through a root is that root's minimal polynomial.
std::vector<Factor> factor_with_roots(const ZPoly& f, const std::vector<CBall>& roots);

struct AlgebraicNumber {
  ZPoly minpoly;             // primitive, irreducible, positive leading coefficient
  std::vector<CBall> roots;  // all conjugates, in isolate_roots order
  std::size_t index = 0;     // which conjugate this value is

  int degree() const { return minpoly.degree(); }
  const CBall& value() const { return roots[index]; }
  mpfr_prec_t prec() const { return roots.empty() ? kDefaultPrecision : roots.front().prec(); }
};

// The irreducible factor of f that vanishes at the unique root of f
// overlapping `approx`. Throws PrecisionError if `approx` meets no root or
// several roots.
AlgebraicNumber algebraic_from_poly(const ZPoly& f, const CBall& approx,
                                    mpfr_prec_t prec = kDefaultPrecision,
                                    mpfr_prec_t cap = kDefaultPrecisionCap);
AlgebraicNumber algebraic_from_rational(const mpq_class& q, mpfr_prec_t prec = kDefaultPrecision);
// Same number with all embeddings re-isolated at the given precision.
AlgebraicNumber refine(const AlgebraicNumber& a, mpfr_prec_t prec);

// (1/d)(log|lead| + sum log max(1, |root|)), refined until radius <= 1e-6.
Ball height(const AlgebraicNumber& a);

using Triple = std::array<AlgebraicNumber, 3>;

// x1 real (and dominant), x2 with Im > 0, x3 = conj(x2).
Triple label_conjugates(const ZPoly& h, mpfr_prec_t prec = kDefaultPrecision,
                        mpfr_prec_t cap = kDefaultPrecisionCap);

struct OrbitPairing {
  Triple x;
  Triple y;            // relabelled so that y[i] = P(x[i])
  QPoly relator;       // P, degree <= 2
  bool y_swapped = false;  // y2 / y3 exchanged relative to label_conjugates
  mpfr_prec_t precision = 0;
};

// Finds P in Q[t] of degree <= 2 with y_i = P(x_i) for the unique admissible
// labelling of y, and verifies H_y(P(t)) = 0 mod H_x exactly.
OrbitPairing pair_orbit(const Triple& x, const Triple& y, mpfr_prec_t cap = kDefaultPrecisionCap);

// Exact identity check H_y(P(t)) mod H_x(t) == 0.
bool relator_identity_holds(const ZPoly& hx, const ZPoly& hy, const QPoly& p);

// Minimal polynomials by resultant elimination.
ZPoly ratio_resultant(const ZPoly& f, const ZPoly& g);    // roots u_i / v_j
ZPoly product_resultant(const ZPoly& f, const ZPoly& g);  // roots u_i * v_j
ZPoly power_resultant(const ZPoly& f, unsigned n);        // roots u_i^n

AlgebraicNumber conjugate_ratio(const AlgebraicNumber& u, const AlgebraicNumber& v);
AlgebraicNumber product(const AlgebraicNumber& u, const AlgebraicNumber& v);
AlgebraicNumber inverse(const AlgebraicNumber& u);
AlgebraicNumber power(const AlgebraicNumber& u, unsigned n);

// Second route for ratios of conjugates: prod_{i != j}(r_j t - r_i) over the
// embeddings of one number, rounded to integers. Its primitive part must equal
// the primitive part of the resultant route with the factor (t - 1) removed.
ZPoly conjugate_ratio_poly_numeric(const AlgebraicNumber& u);

bool is_root_of_unity(const AlgebraicNumber& a);
int degree_of_power(const AlgebraicNumber& x, unsigned n);

}  // namespace singmod
