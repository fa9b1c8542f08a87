#include "places.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace singmod {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

mpz_class pow_p(long p, long k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return out;
}

std::vector<mpz_class> reduce_coeffs(std::vector<mpz_class> v, const mpz_class& m) {
  for (auto& x : v) mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return v;
}

// Digit k of every coefficient before digit k + 1.
std::vector<long> digit_key(const std::vector<mpz_class>& cp, long p, long digits) {
  std::vector<long> key;
  std::vector<mpz_class> rest = cp;
  for (long k = 0; k < digits; ++k) {
    for (auto& v : rest) {
      mpz_class d;
      mpz_fdiv_qr_ui(v.get_mpz_t(), d.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
      key.push_back(d.get_si());
    }
  }
  return key;
}

// Integer numerator and common denominator of a rational polynomial.
std::pair<ZPoly, mpz_class> clear_denominators(const QPoly& z) {
  mpz_class den = 1;
  for (const auto& v : z.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> num;
  for (const auto& v : z.c) num.push_back(mpz_class(v * den));
  return {ZPoly(num), den};
}

PlaceSet compute_places(const SplittingField& sf, long p, long absprec) {
  const int n = sf.minpoly.degree();
  auto field = splitting_field(sf.minpoly, p, absprec, n);
  if (!field) throw InvariantViolation("localfield", "no local splitting field of degree <= 6");
  auto roots = integral_roots(*field, to_local(*field, sf.minpoly));
  if (static_cast<int>(roots.size()) != n) throw InvariantViolation("localfield", "root count mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) field->val(field->sub(roots[i], roots[j]));

  std::vector<std::vector<mpz_class>> cps;
  long digits = field->ring_digits();
  for (const auto& r : roots) {
    long d = 0;
    cps.push_back(field->charpoly(r, &d));
    digits = std::min(digits, d);
  }
  const mpz_class pd = pow_p(p, digits);
  for (auto& cp : cps) cp = reduce_coeffs(cp, pd);

  PlaceSet out;
  out.p = p;
  out.absprec = absprec;
  out.field = field;
  out.roots = roots;
  std::map<std::vector<long>, LocalPlace> groups;
  for (int i = 0; i < n; ++i) {
    auto key = digit_key(cps[i], p, digits);
    auto [it, fresh] = groups.try_emplace(key);
    LocalPlace& pl = it->second;
    if (fresh) {
      pl.p = p;
      pl.e = field->e();
      pl.f = field->f();
      pl.charpoly = cps[i];
      pl.digits = digits;
      pl.field = field;
      pl.theta = roots[i];
    }
    pl.roots.push_back(static_cast<std::size_t>(i));
  }
  std::vector<mpz_class> prod{1};
  for (auto& [key, pl] : groups) {
    if (static_cast<int>(pl.roots.size()) > field->degree())
      throw PrecisionError("localfield", "places not separated at this precision");
    if (static_cast<int>(pl.roots.size()) != field->degree())
      throw InvariantViolation("localfield", "local factor degree differs from e f");
    std::vector<mpz_class> next(prod.size() + pl.charpoly.size() - 1, 0);
    for (std::size_t i = 0; i < prod.size(); ++i)
      for (std::size_t j = 0; j < pl.charpoly.size(); ++j) next[i + j] += prod[i] * pl.charpoly[j];
    prod = reduce_coeffs(next, pd);
    pl.id = out.places.size();
    out.places.push_back(pl);
  }
  if (prod != reduce_coeffs(sf.minpoly.c, pd))
    throw InvariantViolation("localfield", "local factors do not multiply to the global polynomial");
  return out;
}

}  // namespace

PlaceSet places_above(const SplittingField& sf, long p, long absprec) {
  if (!is_prime(p)) throw InvalidArgument("localfield", "p must be prime");
  if (p <= sf.minpoly.degree()) throw InvalidArgument("localfield", "p must exceed the field degree");
  for (long prec = absprec; prec <= kLocalPrecisionCap; prec *= 2) {
    try {
      return compute_places(sf, p, prec);
    } catch (const PrecisionError&) {
    }
  }
  throw PrecisionError("localfield", "places above p undecided at the precision cap");
}

std::optional<long> valuation_at(const LocalPlace& place, const QPoly& z, const QPoly& modulus) {
  QPoly zr = z % modulus;
  if (zr.is_zero()) return std::nullopt;
  auto [num, den] = clear_denominators(zr);
  const LocalField& k = *place.field;
  LocalElement v = eval(k, to_local(k, num), place.theta);
  return k.val(v) - static_cast<long>(k.e()) * vp(den, place.p);
}

LocalElement value_at(const LocalPlace& place, const QPoly& z) {
  auto [num, den] = clear_denominators(z);
  const LocalField& k = *place.field;
  LocalElement v = eval(k, to_local(k, num), place.theta);
  long s = vp(den, place.p);
  mpz_class unit = den;
  for (long i = 0; i < s; ++i) unit /= place.p;
  v = k.div_pi(v, s * k.e());
  return k.mul(v, k.from_rational(mpq_class(mpz_class(1), unit)));
}

ConjugateValuations conjugate_valuations(const SplittingField& sf, const LocalPlace& place) {
  ConjugateValuations out;
  QPoly m(sf.minpoly);
  for (int i = 0; i < 3; ++i) {
    auto vx = valuation_at(place, sf.x[i], m);
    auto vy = valuation_at(place, sf.y[i], m);
    if (!vx || !vy) throw InvariantViolation("localfield", "conjugate vanishes in the splitting field");
    out.x[i] = *vx;
    out.y[i] = *vy;
  }
  return out;
}

std::vector<ConjugateValuations> conjugate_valuations_direct(const OrbitPairing& pairing,
                                                             const SplittingField& sf,
                                                             const PlaceSet& places) {
  const ZPoly& hx = pairing.x[0].minpoly;
  const ZPoly& hy = pairing.y[0].minpoly;
  auto field = splitting_field(hx, places.p, places.absprec, 6);
  if (!field) throw InvariantViolation("localfield", "H_x does not split locally");
  const LocalField& k = *field;
  if (k.e() != places.field->e() || k.f() != places.field->f())
    throw InvariantViolation("localfield", "the two routes disagree on (e, f)");
  auto rx = integral_roots(k, to_local(k, hx));
  auto ry = integral_roots(k, to_local(k, hy));
  if (rx.size() != 3 || ry.size() != 3) throw InvariantViolation("localfield", "cubic roots missing locally");

  auto [qnum, qden] = clear_denominators(pairing.relator);
  LocalPoly qloc = to_local(k, qnum);
  LocalElement dloc = k.from_int(qden);
  std::array<long, 3> vy_of_x{};
  for (int i = 0; i < 3; ++i) {
    LocalElement qi = eval(k, qloc, rx[i]);
    std::vector<int> hits;
    for (int j = 0; j < 3; ++j)
      if (k.is_zero_to_precision(k.sub(k.mul(dloc, ry[j]), qi))) hits.push_back(j);
    if (hits.size() != 1) throw PrecisionError("localfield", "P(r) not matched to a unique root of H_y");
    long direct = k.val(ry[hits[0]]);
    if (direct != k.val(qi) - static_cast<long>(k.e()) * vp(qden, places.p))
      throw InvariantViolation("localfield", "valuation of P(r) disagrees with the matched root");
    vy_of_x[i] = direct;
  }

  std::vector<std::optional<ConjugateValuations>> result(places.places.size());
  LocalElement cc = k.from_int(mpz_class(sf.c));
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      int rest = 3 - a - b;
      LocalElement rho = k.add(rx[a], k.mul(cc, rx[b]));
      long digits = 0;
      auto cp = k.charpoly(rho, &digits);
      std::vector<std::size_t> match;
      for (const auto& pl : places.places) {
        long dd = std::min(digits, pl.digits);
        mpz_class pd = pow_p(places.p, dd);
        if (reduce_coeffs(cp, pd) == reduce_coeffs(pl.charpoly, pd)) match.push_back(pl.id);
      }
      if (match.size() != 1) throw PrecisionError("localfield", "ordered pair not attached to a unique place");
      ConjugateValuations v;
      v.x = {k.val(rx[a]), k.val(rx[b]), k.val(rx[rest])};
      v.y = {vy_of_x[a], vy_of_x[b], vy_of_x[rest]};
      auto& slot = result[match[0]];
      if (slot && !(*slot == v)) throw InvariantViolation("localfield", "ordered pairs on one place disagree");
      slot = v;
    }
  }
  std::vector<ConjugateValuations> out;
  for (const auto& r : result) {
    if (!r) throw InvariantViolation("localfield", "a place was not reached by the direct route");
    out.push_back(*r);
  }
  return out;
}

bool is_pipeline_pattern(const ConjugateValuations& v) {
  return v.x[1] > 0 && v.x[2] > 0 && v.x[0] == 0 && v.y[1] == 0 && v.y[2] == 0;
}

unsigned long long order_in_residue_field(const LocalField& k, const LocalElement& alpha) {
  if (k.val(alpha) != 0) throw InvalidArgument("localfield", "alpha must be a unit at the place");
  const FiniteField& kk = k.residue_field();
  FiniteField::Elem a = k.residue(alpha);
  const unsigned long long n = kk.order() - 1;
  for (unsigned long long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    if (kk.pow(a, d) == kk.one()) return d;
  }
  throw InvariantViolation("localfield", "residue order does not divide q - 1");
}

std::optional<ValuationPattern> pattern_at_prime(const SplittingField& sf, long p) {
  const int degree = sf.minpoly.degree();
  if (p <= degree + 1) throw InvalidArgument("localfield", "requires p > d + 1");
  for (long prec = kDefaultLocalPrecision;; prec *= 2) {
    try {
      PlaceSet ps = places_above(sf, p, prec);
      int total = 0;
      for (const auto& pl : ps.places) total += pl.e * pl.f;
      if (total != degree) throw InvariantViolation("localfield", "sum of e f differs from the degree");
      for (const auto& pl : ps.places) {
        ConjugateValuations v = conjugate_valuations(sf, pl);
        if (!is_pipeline_pattern(v)) continue;
        const LocalField& k = *pl.field;
        LocalElement alpha = k.div(value_at(pl, sf.y[2]), value_at(pl, sf.y[1]));
        ValuationPattern pat;
        pat.p = p;
        pat.place_id = pl.id;
        pat.e = pl.e;
        pat.f = pl.f;
        pat.valuations = v;
        pat.m0 = order_in_residue_field(k, alpha);
        pat.v0 = k.val(k.sub(k.one(), k.pow(alpha, pat.m0)));
        pat.absprec = ps.absprec;
        pat.field = pl.field;
        pat.alpha = alpha;
        return pat;
      }
      return std::nullopt;
    } catch (const PrecisionError&) {
      if (prec * 2 > kLocalPrecisionCap) throw;
    }
  }
}

ValuationPattern find_valuation_pattern(const SplittingField& sf, long prime_limit) {
  for (long p = sf.minpoly.degree() + 2; p <= prime_limit; ++p) {
    if (!is_prime(p)) continue;
    if (auto pat = pattern_at_prime(sf, p)) return *pat;
  }
  throw InvariantViolation("localfield", "no valuation pattern below the prime limit");
}

long prop_valuation(unsigned long long m, const ValuationPattern& pat, int global_degree) {
  if (m == 0) throw InvalidArgument("localfield", "m must be positive");
  if (pat.p <= global_degree + 1) throw InvalidArgument("localfield", "requires p > d + 1");
  if (pat.m0 == 0) throw InvalidArgument("localfield", "pattern has no residue order");
  if (m % pat.m0 != 0) return 0;
  unsigned long long rest = m / pat.m0;
  long s = 0;
  while (rest % static_cast<unsigned long long>(pat.p) == 0) {
    rest /= static_cast<unsigned long long>(pat.p);
    ++s;
  }
  return s * pat.e + pat.v0;
}

long direct_valuation(unsigned long long m, const ValuationPattern& pat) {
  const LocalField& k = *pat.field;
  LocalElement acc = k.one();
  for (unsigned long long i = 0; i < m; ++i) acc = k.mul(acc, pat.alpha);
  auto v = k.valuation(k.sub(k.one(), acc));
  if (!v) throw PrecisionError("localfield", "1 - alpha^m vanishes to the working precision");
  return *v;
}

Ball padic_exponent_bound(unsigned long long n, const ValuationPattern& pat, mpfr_prec_t prec) {
  if (n == 0) throw InvalidArgument("localfield", "n must be positive");
  Ball ln = log(Ball::from_mpz(mpz_class(static_cast<unsigned long>(n)), prec));
  Ball lp = log(Ball::from_int(pat.p, prec));
  return Ball::from_int(pat.e, prec) * ln / lp + Ball::from_int(pat.v0, prec);
}

long padic_exponent_floor(unsigned long long n, const ValuationPattern& pat) {
  if (n == 0) throw InvalidArgument("localfield", "n must be positive");
  // Largest t with p^t <= n^e.
  mpz_class ne;
  mpz_ui_pow_ui(ne.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(pat.e));
  long t = 0;
  mpz_class pw = pat.p;
  while (pw <= ne) {
    pw *= pat.p;
    ++t;
  }
  return t + pat.v0;
}

}  // namespace singmod
