#pragma once

// Primitive element of the Galois closure of Q(x) = Q(y), with all six
// conjugates written as polynomials in it.

#include <array>
#include <vector>

#include "numfield.hpp"

namespace singmod {

struct SplittingField {
  ZPoly minpoly;               // monic, irreducible, degree 6
  long c = 0;                  // theta = x1 + c * x2
  std::array<QPoly, 3> x;      // x_i as polynomials in theta, degree < 6
  std::array<QPoly, 3> y;      // y_i = P(x_i) reduced mod minpoly
  std::vector<CBall> roots;    // embeddings of theta in isolate_roots order
  std::size_t index = 0;       // the embedding with theta = x1 + c x2
  mpfr_prec_t precision = 0;
};

// Searches c = 1, -1, 2, -2, ..., +-20 for a theta of degree 6 and expresses
// the conjugates through a gcd over Q(theta). Every expression is checked
// exactly (H_x(x_i) = H_y(y_i) = 0 mod minpoly) and numerically (round trip
// through the principal embedding).
SplittingField splitting_field_generator(const OrbitPairing& pairing);

// Arithmetic in Q[t]/(m).
QPoly field_inverse(const QPoly& a, const QPoly& m);

}  // namespace singmod
