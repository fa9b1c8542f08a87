#pragma once

// Places of the degree-6 splitting field above a rational prime, valuations
// of the conjugates there, and the multiplicative data of alpha = y3 / y2.

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "ball.hpp"
#include "localfield.hpp"
#include "numfield.hpp"
#include "splitting.hpp"

namespace singmod {

inline constexpr long kDefaultLocalPrecision = 20;
inline constexpr long kLocalPrecisionCap = 1280;

struct LocalPlace {
  long p = 0;
  int e = 0;
  int f = 0;
  std::size_t id = 0;                 // canonical position among the places above p
  std::vector<mpz_class> charpoly;    // local factor of minpoly(theta), mod p^digits
  long digits = 0;
  std::shared_ptr<const LocalField> field;  // completion, containing all roots
  LocalElement theta;                 // image of theta under one embedding
  std::vector<std::size_t> roots;     // root indices of the local factor
};

struct PlaceSet {
  long p = 0;
  long absprec = 0;
  std::shared_ptr<const LocalField> field;
  std::vector<LocalElement> roots;  // all six roots of minpoly(theta)
  std::vector<LocalPlace> places;   // canonical order
};

// Complete list of places above p via the local splitting field of the
// minimal polynomial of theta: roots are grouped by their characteristic
// polynomial over Q_p, and groups are ordered by the p-adic digits of that
// polynomial (digit k of every coefficient before digit k + 1). Precision is
// doubled on every undecided step.
PlaceSet places_above(const SplittingField& sf, long p, long absprec = kDefaultLocalPrecision);

// v(z(theta)) at the place, nullopt when z = 0 in Q(theta).
std::optional<long> valuation_at(const LocalPlace& place, const QPoly& z, const QPoly& modulus);
// z(theta) as an element of the completion; requires v(z) >= 0.
LocalElement value_at(const LocalPlace& place, const QPoly& z);

struct ConjugateValuations {
  std::array<long, 3> x{};
  std::array<long, 3> y{};
  friend bool operator==(const ConjugateValuations&, const ConjugateValuations&) = default;
};

ConjugateValuations conjugate_valuations(const SplittingField& sf, const LocalPlace& place);

// Second route: roots of H_x and H_y lifted directly in a splitting field of
// H_x, matched through P, and attached to places through the characteristic
// polynomial of r_a + c r_b. Returns the valuations per place (same order as
// `places`), throwing InvariantViolation on any disagreement between the
// ordered pairs that land on the same place or on a mismatch of (e, f).
std::vector<ConjugateValuations> conjugate_valuations_direct(const OrbitPairing& pairing,
                                                             const SplittingField& sf,
                                                             const PlaceSet& places);

struct ValuationPattern {
  long p = 0;
  std::size_t place_id = 0;
  int e = 0;
  int f = 0;
  ConjugateValuations valuations;
  unsigned long long m0 = 0;
  long v0 = 0;
  long absprec = 0;
  std::shared_ptr<const LocalField> field;
  LocalElement alpha;  // y3 / y2 at the place
};

bool is_pipeline_pattern(const ConjugateValuations& v);

// First prime p > 7 (and its first place in canonical order) at which
// v(x2) > 0, v(x3) > 0 and v(x1) = v(y2) = v(y3) = 0.
ValuationPattern find_valuation_pattern(const SplittingField& sf, long prime_limit = 200);
// The first place above p (canonical order) showing that pattern, if any.
std::optional<ValuationPattern> pattern_at_prime(const SplittingField& sf, long p);

// Least m0 >= 1 with v(1 - alpha^m0) > 0, tried over the divisors of q - 1.
unsigned long long order_in_residue_field(const LocalField& k, const LocalElement& alpha);

// 0 if m0 does not divide m, else s e + v0 with m = m0 p^s r, p not dividing r.
long prop_valuation(unsigned long long m, const ValuationPattern& pat, int global_degree = 6);
// v(1 - alpha^m) by m successive multiplications.
long direct_valuation(unsigned long long m, const ValuationPattern& pat);

// e log(n) / log(p) + v0 as a certified ball.
Ball padic_exponent_bound(unsigned long long n, const ValuationPattern& pat,
                          mpfr_prec_t prec = kDefaultPrecision);
// floor of the same quantity, computed with integer powers of p.
long padic_exponent_floor(unsigned long long n, const ValuationPattern& pat);

bool is_prime(long n);

}  // namespace singmod
