#pragma once

// Explicit lower bounds for |1 - alpha^m| with |alpha| = 1, alpha not a root
// of unity: 0.99 exp(-c1 (log m)^2) for m >= 13 and direct evaluation below.

#include "ball.hpp"
#include "numfield.hpp"

namespace singmod {

inline constexpr unsigned long kAsymptoticFrom = 13;

struct BakerConstant {
  int d = 0;
  Ball D;     // d / 2
  Ball h;     // height ball of alpha
  Ball c1p;   // c1'(d)
  Ball c1;    // evaluated at the upper edge of h
};

// D + max{0, (4.49 - 0.96 D) / log 13}.
Ball c1_prime(int d, mpfr_prec_t prec = kDefaultPrecision);

// Closed form of c1 from d and a height value.
Ball c1_formula(int d, const Ball& h, mpfr_prec_t prec = kDefaultPrecision);

// Exact check that |alpha| = 1: the conjugate of alpha and 1/alpha fall on
// the same certified root of a reciprocal minimal polynomial.
bool on_unit_circle(const AlgebraicNumber& alpha);

// c1(alpha) using the upper edge of h(alpha). Throws InvalidArgument when
// |alpha| != 1 or alpha is a root of unity.
BakerConstant c1(const AlgebraicNumber& alpha);

enum class BoundMode { Direct, Asymptotic };

struct LowerBoundResult {
  unsigned long m = 0;
  Ball bound;   // exact point, the certified lower bound (> 0)
  Ball value;   // enclosure of the quantity whose lower edge gave `bound`
  BoundMode mode = BoundMode::Direct;
};

// |1 - alpha^m| evaluated as a ball, refined until it excludes 0.
Ball one_minus_power_abs(const AlgebraicNumber& alpha, unsigned long m,
                         mpfr_prec_t cap = kDefaultPrecisionCap);

// 0.99 exp(-c1 (log m)^2), rounded down, with c1 taken at its upper edge.
Ball asymptotic_bound(const Ball& c1, unsigned long m, mpfr_prec_t prec = kDefaultPrecision);

LowerBoundResult lower_bound(const AlgebraicNumber& alpha, const BakerConstant& baker, unsigned long m);

// Point ball at the lower / upper edge of x.
Ball lower_point(const Ball& x);
Ball upper_point(const Ball& x);

}  // namespace singmod
