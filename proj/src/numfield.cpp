#include "numfield.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "errors.hpp"

namespace singmod {

namespace {

double log2_abs(const mpz_class& v) {
  long e = 0;
  double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

// Starting points on circles read off the upper convex hull of
// (i, log|a_i|), one circle per hull edge.
std::vector<CBall> initial_points(const ZPoly& f, mpfr_prec_t prec) {
  std::vector<std::pair<int, double>> pts;
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.c[i] != 0) pts.emplace_back(i, log2_abs(f.c[i]));
  }
  std::vector<std::pair<int, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      double cross = (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  std::vector<CBall> out;
  const double two_pi = 6.283185307179586;
  int edge = 0;
  // A zero root of multiplicity k shows up as a hull starting at i = k.
  for (int i = 0; i < hull.front().first; ++i) out.push_back(CBall(prec));
  for (std::size_t e = 0; e + 1 < hull.size(); ++e, ++edge) {
    int i = hull[e].first;
    int j = hull[e + 1].first;
    int count = j - i;
    double log_r = (hull[e].second - hull[e + 1].second) / count;
    for (int k = 0; k < count; ++k) {
      double ang = two_pi * k / count + 0.4 + 0.9 * edge;
      Ball lr = Ball::from_mpq(mpq_class(std::round(log_r * 1024)) / 1024, prec) * Ball::log_const(2, prec);
      Ball r = exp(lr);
      Ball a = Ball::from_mpq(mpq_class(std::round(ang * 1e6)) / mpq_class(1000000), prec);
      out.push_back(midpoint(exp_i(a) * r));
    }
  }
  return out;
}

struct EvalPair {
  CBall f;
  CBall df;
};

EvalPair eval_with_derivative(const ZPoly& f, const CBall& z) {
  CBall p(z.prec());
  CBall dp(z.prec());
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + CBall::from_mpz(*it, z.prec());
  }
  return {p, dp};
}

Float upper_abs(const CBall& z) {
  Float out = abs(z).upper();
  return out;
}

bool aberth(const ZPoly& f, std::vector<CBall>& z, mpfr_prec_t prec) {
  const std::size_t n = z.size();
  const int max_iter = 200 + static_cast<int>(prec);
  Float tol(kRadiusPrecision);
  mpfr_set_ui_2exp(tol.get(), 1, -(prec - 12), MPFR_RNDN);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      EvalPair e = eval_with_derivative(f, z[i]);
      if (e.df.contains_zero() || e.f.contains_zero()) continue;
      CBall w = midpoint(e.f / e.df);
      CBall s(prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        CBall diff = z[i] - z[j];
        if (diff.contains_zero()) continue;
        s = s + inverse(diff);
      }
      CBall denom = CBall::from_mpz(1, prec) - w * s;
      CBall step = denom.contains_zero() ? w : midpoint(w / denom);
      z[i] = midpoint(z[i] - step);
      // relative step size
      Float sz = upper_abs(step);
      Float zz = upper_abs(z[i]);
      if (mpfr_cmp_ui(zz.get(), 1) < 0) mpfr_set_ui(zz.get(), 1, MPFR_RNDN);
      mpfr_div(sz.get(), sz.get(), zz.get(), MPFR_RNDU);
      if (mpfr_greater_p(sz.get(), tol.get())) done = false;
    }
    if (done) return true;
  }
  return false;
}

// Newton inclusion: the disk of radius n|f(z)/f'(z)| about z holds a root.
std::optional<Float> inclusion_radius(const ZPoly& f, const CBall& z) {
  EvalPair e = eval_with_derivative(f, z);
  Ball af = abs(e.f);
  Ball adf = abs(e.df);
  if (!adf.is_positive()) return std::nullopt;
  Ball r = af / adf * Ball::from_int(f.degree(), z.prec());
  Float up = r.upper();
  Float out(kRadiusPrecision);
  mpfr_set(out.get(), up.get(), MPFR_RNDU);
  return out;
}

// Lower bound on |a - b| exceeds ra + rb.
bool disks_apart(const CBall& a, const Float& ra, const CBall& b, const Float& rb) {
  Float lo = abs(a - b).lower();
  Float sum(kRadiusPrecision);
  mpfr_add(sum.get(), ra.get(), rb.get(), MPFR_RNDU);
  return mpfr_greater_p(lo.get(), sum.get()) != 0;
}

CBall box(const CBall& center, const Float& r) {
  CBall out = center;
  out.re.add_error(r.get());
  out.im.add_error(r.get());
  return out;
}

std::optional<std::vector<CBall>> try_isolate(const ZPoly& f, mpfr_prec_t prec) {
  const int n = f.degree();
  std::vector<CBall> z = initial_points(f, prec);
  if (static_cast<int>(z.size()) != n) throw InvariantViolation("numfield", "bad initial point count");
  if (!aberth(f, z, prec)) return std::nullopt;
  // A couple of plain Newton steps to settle the last bits.
  for (int it = 0; it < 2; ++it) {
    for (auto& zi : z) {
      EvalPair e = eval_with_derivative(f, zi);
      if (e.df.contains_zero()) continue;
      zi = midpoint(zi - e.f / e.df);
    }
  }
  std::vector<Float> rad;
  for (const auto& zi : z) {
    auto r = inclusion_radius(f, zi);
    if (!r) return std::nullopt;
    rad.push_back(*r);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!disks_apart(z[i], rad[i], z[j], rad[j])) return std::nullopt;

  // Real roots and conjugate pairs.
  std::vector<int> partner(n, -1);
  std::vector<bool> real(n, false);
  for (int i = 0; i < n; ++i) {
    CBall zc = conj(z[i]);
    std::vector<int> hits;
    for (int j = 0; j < n; ++j) {
      if (!disks_apart(zc, rad[i], z[j], rad[j])) hits.push_back(j);
    }
    if (hits.size() != 1) return std::nullopt;
    if (hits[0] == i) {
      real[i] = true;
    } else {
      Float im_lo = abs(z[i].im).lower();
      if (!mpfr_greater_p(im_lo.get(), rad[i].get())) return std::nullopt;
      partner[i] = hits[0];
    }
  }
  std::vector<CBall> reals;
  std::vector<CBall> uppers;
  for (int i = 0; i < n; ++i) {
    if (real[i]) {
      CBall b = box(z[i], rad[i]);
      b.im = Ball(prec);
      reals.push_back(b);
    } else if (mpfr_sgn(z[i].im.mid().get()) > 0) {
      Float r(kRadiusPrecision);
      mpfr_max(r.get(), rad[i].get(), rad[partner[i]].get(), MPFR_RNDU);
      uppers.push_back(box(z[i], r));
    }
  }
  if (reals.size() + 2 * uppers.size() != static_cast<std::size_t>(n)) return std::nullopt;
  auto by_re_desc = [](const CBall& a, const CBall& b) {
    return mpfr_greater_p(a.re.mid().get(), b.re.mid().get()) != 0;
  };
  std::sort(reals.begin(), reals.end(), by_re_desc);
  std::sort(uppers.begin(), uppers.end(), by_re_desc);
  std::vector<CBall> out = reals;
  for (const auto& u : uppers) {
    out.push_back(u);
    out.push_back(conj(u));
  }
  return out;
}

std::optional<ZPoly> subset_factor(const ZPoly& f, const std::vector<CBall>& roots,
                                   const std::vector<std::size_t>& subset) {
  const mpfr_prec_t prec = roots.front().prec();
  std::vector<CBall> coeffs{CBall::from_mpz(f.lead(), prec)};
  for (std::size_t idx : subset) {
    std::vector<CBall> next(coeffs.size() + 1, CBall(prec));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = next[i + 1] + coeffs[i];
      next[i] = next[i] - coeffs[i] * roots[idx];
    }
    coeffs = std::move(next);
  }
  std::vector<mpz_class> ints;
  for (const auto& c : coeffs) {
    if (!c.im.contains_zero()) return std::nullopt;
    auto v = c.re.unique_integer();
    if (!v) return std::nullopt;
    ints.push_back(*v);
  }
  ZPoly g(std::move(ints));
  if (g.degree() != static_cast<int>(subset.size()) || !divides(g, f)) return std::nullopt;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (std::find(subset.begin(), subset.end(), k) != subset.end()) continue;
    if (g.eval(roots[k]).contains_zero()) {
      throw PrecisionError("numfield", "cannot separate factor from a root outside the subset");
    }
  }
  return g.primitive();
}

// Smallest factor through root `target`, searching subsets of `pool`.
Factor factor_through(const ZPoly& f, const std::vector<CBall>& roots, std::size_t target,
                      const std::vector<std::size_t>& pool) {
  std::vector<std::size_t> rest;
  for (std::size_t k : pool)
    if (k != target) rest.push_back(k);
  for (std::size_t size = 0; size <= rest.size(); ++size) {
    std::vector<std::size_t> pick(size);
    std::optional<Factor> found;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
      if (found) return;
      if (depth == size) {
        std::vector<std::size_t> subset{target};
        subset.insert(subset.end(), pick.begin(), pick.end());
        std::sort(subset.begin(), subset.end());
        if (auto g = subset_factor(f, roots, subset)) found = Factor{*g, subset};
        return;
      }
      for (std::size_t i = start; i < rest.size(); ++i) {
        pick[depth] = rest[i];
        rec(i + 1, depth + 1);
        if (found) return;
      }
    };
    rec(0, 0);
    if (found) return *found;
  }
  throw InvariantViolation("numfield", "no rational factor through a root of " + f.to_string());
}

std::size_t unique_overlap(const std::vector<CBall>& roots, const CBall& approx) {
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].overlaps(approx)) {
      if (hit) throw PrecisionError("numfield", "approximation meets several roots");
      hit = i;
    }
  }
  if (!hit) throw PrecisionError("numfield", "approximation meets no root");
  return *hit;
}

}  // namespace

std::vector<CBall> isolate_roots(const ZPoly& f, mpfr_prec_t prec, mpfr_prec_t cap) {
  if (f.degree() < 1) return {};
  QPoly qf(f);
  if (gcd(qf, qf.derivative()).degree() > 0) {
    throw InvalidArgument("numfield", "isolate_roots needs a squarefree polynomial");
  }
  if (f.degree() == 1) {
    mpq_class r(-f.c[0], f.c[1]);
    r.canonicalize();
    return {CBall::from_mpq(r, prec)};
  }
  for (mpfr_prec_t p = prec; p <= std::max(cap, prec); p *= 2) {
    if (auto roots = try_isolate(f, p)) return *roots;
  }
  throw PrecisionError("numfield", "root isolation failed up to the precision cap for " + f.to_string());
}

std::vector<Factor> factor_with_roots(const ZPoly& f, const std::vector<CBall>& roots) {
  if (static_cast<int>(roots.size()) != f.degree()) {
    throw InvalidArgument("numfield", "root count does not match the degree");
  }
  std::vector<Factor> out;
  std::vector<std::size_t> pool(roots.size());
  std::iota(pool.begin(), pool.end(), 0);
  while (!pool.empty()) {
    Factor fac = factor_through(f, roots, pool.front(), pool);
    std::vector<std::size_t> next;
    for (std::size_t k : pool)
      if (std::find(fac.roots.begin(), fac.roots.end(), k) == fac.roots.end()) next.push_back(k);
    pool = std::move(next);
    out.push_back(std::move(fac));
  }
  return out;
}

AlgebraicNumber algebraic_from_poly(const ZPoly& f, const CBall& approx, mpfr_prec_t prec, mpfr_prec_t cap) {
  if (f.degree() < 1) throw InvalidArgument("numfield", "constant polynomial has no roots");
  ZPoly sf = squarefree_part(f);
  for (mpfr_prec_t p = prec; p <= std::max(cap, prec); p *= 2) {
    try {
      auto roots = isolate_roots(sf, p, p);
      std::size_t i = unique_overlap(roots, approx);
      std::vector<std::size_t> pool(roots.size());
      std::iota(pool.begin(), pool.end(), 0);
      Factor fac = factor_through(sf, roots, i, pool);
      AlgebraicNumber a;
      a.minpoly = fac.poly;
      a.roots = isolate_roots(fac.poly, p, p);
      a.index = unique_overlap(a.roots, roots[i]);
      return a;
    } catch (const PrecisionError&) {
      continue;
    }
  }
  throw PrecisionError("numfield", "could not pin down the algebraic number up to the precision cap");
}

AlgebraicNumber algebraic_from_rational(const mpq_class& q, mpfr_prec_t prec) {
  AlgebraicNumber a;
  a.minpoly = ZPoly(std::vector<mpz_class>{-q.get_num(), q.get_den()}).primitive();
  a.roots = {CBall::from_mpq(q, prec)};
  a.index = 0;
  return a;
}

AlgebraicNumber refine(const AlgebraicNumber& a, mpfr_prec_t prec) {
  AlgebraicNumber out;
  out.minpoly = a.minpoly;
  out.roots = isolate_roots(a.minpoly, prec, std::max(prec, kDefaultPrecisionCap));
  out.index = unique_overlap(out.roots, a.value());
  return out;
}

Ball height(const AlgebraicNumber& a) {
  AlgebraicNumber cur = a;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const mpfr_prec_t prec = cur.prec();
    Ball sum = log(abs(Ball::from_mpz(cur.minpoly.lead(), prec)));
    for (const auto& r : cur.roots) sum = sum + log(max_with_one(abs(r)));
    Ball h = sum / Ball::from_int(cur.degree(), prec);
    if (h.to_double() < 0 && !h.contains_zero()) throw InvariantViolation("numfield", "negative height");
    if (h.rad().to_double() <= 1e-6) return h;
    cur = refine(cur, prec * 2);
  }
  throw PrecisionError("numfield", "height radius above 1e-6");
}

Triple label_conjugates(const ZPoly& h, mpfr_prec_t prec, mpfr_prec_t cap) {
  if (h.degree() != 3) throw InvalidArgument("numfield", "label_conjugates expects a cubic");
  mpz_class disc = discriminant(h);
  if (disc >= 0) throw InvariantViolation("numfield", "cubic does not have exactly one real root");
  auto roots = isolate_roots(h, prec, cap);
  if (!roots[1].im.is_positive() || !roots[2].im.is_negative()) {
    throw InvariantViolation("numfield", "complex conjugates not separated from the real axis");
  }
  if (factor_with_roots(h, roots).size() != 1) throw InvariantViolation("numfield", "cubic is reducible");
  if (!certainly_less(abs(roots[1]), abs(roots[0]))) {
    throw InvariantViolation("numfield", "real conjugate is not dominant");
  }
  Triple t;
  for (std::size_t i = 0; i < 3; ++i) {
    t[i].minpoly = h.primitive();
    t[i].roots = roots;
    t[i].index = i;
  }
  return t;
}

bool relator_identity_holds(const ZPoly& hx, const ZPoly& hy, const QPoly& p) {
  return (compose(QPoly(hy), p) % QPoly(hx)).is_zero();
}

namespace {

std::optional<QPoly> interpolate_relator(const Triple& x, const std::array<CBall, 3>& target) {
  const mpfr_prec_t prec = x[0].prec();
  std::array<CBall, 3> coeff{CBall(prec), CBall(prec), CBall(prec)};
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    int k = (i + 2) % 3;
    const CBall& xi = x[i].value();
    const CBall& xj = x[j].value();
    const CBall& xk = x[k].value();
    CBall w = target[i] / ((xi - xj) * (xi - xk));
    coeff[0] = coeff[0] + w * (xj * xk);
    coeff[1] = coeff[1] - w * (xj + xk);
    coeff[2] = coeff[2] + w;
  }
  std::vector<mpq_class> q;
  for (const auto& c : coeff) {
    if (!c.im.contains_zero()) return std::nullopt;
    auto r = reconstruct_rational(c.re);
    if (!r) return std::nullopt;
    q.push_back(*r);
  }
  return QPoly(q);
}

Triple refine_triple(const Triple& t, mpfr_prec_t prec) {
  Triple out;
  auto roots = isolate_roots(t[0].minpoly, prec, prec);
  for (std::size_t i = 0; i < 3; ++i) {
    out[i].minpoly = t[i].minpoly;
    out[i].roots = roots;
    out[i].index = unique_overlap(roots, t[i].value());
  }
  return out;
}

}  // namespace

OrbitPairing pair_orbit(const Triple& x, const Triple& y, mpfr_prec_t cap) {
  const ZPoly& hx = x[0].minpoly;
  const ZPoly& hy = y[0].minpoly;
  for (mpfr_prec_t p = std::max(x[0].prec(), kDefaultPrecision); p <= cap; p *= 2) {
    Triple xr = refine_triple(x, p);
    Triple yr = refine_triple(y, p);
    std::vector<OrbitPairing> found;
    for (bool swapped : {false, true}) {
      std::array<CBall, 3> target{yr[0].value(), yr[swapped ? 2 : 1].value(), yr[swapped ? 1 : 2].value()};
      auto rel = interpolate_relator(xr, target);
      if (!rel || rel->degree() > 2) continue;
      if (!relator_identity_holds(hx, hy, *rel)) continue;
      bool numeric_ok = true;
      for (int i = 0; i < 3; ++i) numeric_ok = numeric_ok && rel->eval(xr[i].value()).overlaps(target[i]);
      if (!numeric_ok) continue;
      OrbitPairing op;
      op.x = xr;
      op.y = yr;
      if (swapped) {
        op.y[1].index = yr[2].index;
        op.y[2].index = yr[1].index;
      }
      op.relator = *rel;
      op.y_swapped = swapped;
      op.precision = p;
      found.push_back(op);
    }
    if (found.size() > 1) throw InvariantViolation("numfield", "both labellings admit a rational relator");
    if (found.size() == 1) return found.front();
  }
  throw PrecisionError("numfield", "no rational relator found up to the precision cap");
}

ZPoly ratio_resultant(const ZPoly& f, const ZPoly& g) {
  BiPoly a;
  for (const auto& v : g.c) a.c.push_back(ZPoly(std::vector<mpz_class>{v}));
  BiPoly b;
  for (std::size_t k = 0; k < f.c.size(); ++k) b.c.push_back(ZPoly::monomial(f.c[k], k));
  return eliminate(a, b);
}

ZPoly product_resultant(const ZPoly& f, const ZPoly& g) {
  BiPoly a;
  for (const auto& v : g.c) a.c.push_back(ZPoly(std::vector<mpz_class>{v}));
  const int df = f.degree();
  BiPoly b;
  b.c.assign(df + 1, ZPoly());
  for (int k = 0; k <= df; ++k) b.c[df - k] = ZPoly::monomial(f.c[k], k);
  return eliminate(a, b);
}

ZPoly power_resultant(const ZPoly& f, unsigned n) {
  if (n == 0) throw InvalidArgument("numfield", "power must be positive");
  BiPoly a;
  for (const auto& v : f.c) a.c.push_back(ZPoly(std::vector<mpz_class>{v}));
  BiPoly b;
  b.c.assign(n + 1, ZPoly());
  b.c[0] = ZPoly(std::vector<mpz_class>{0, 1});
  b.c[n] = b.c[n] - ZPoly(std::vector<mpz_class>{1});
  return eliminate(a, b);
}

AlgebraicNumber conjugate_ratio(const AlgebraicNumber& u, const AlgebraicNumber& v) {
  if (v.minpoly.degree() == 1 && v.minpoly.c[0] == 0) throw InvalidArgument("numfield", "division by zero");
  ZPoly r = ratio_resultant(u.minpoly, v.minpoly);
  return algebraic_from_poly(r, u.value() / v.value(), std::max(u.prec(), v.prec()));
}

AlgebraicNumber product(const AlgebraicNumber& u, const AlgebraicNumber& v) {
  ZPoly r = product_resultant(u.minpoly, v.minpoly);
  return algebraic_from_poly(r, u.value() * v.value(), std::max(u.prec(), v.prec()));
}

AlgebraicNumber inverse(const AlgebraicNumber& u) {
  if (u.minpoly.degree() == 1 && u.minpoly.c[0] == 0) throw InvalidArgument("numfield", "inverse of zero");
  std::vector<mpz_class> rev(u.minpoly.c.rbegin(), u.minpoly.c.rend());
  return algebraic_from_poly(ZPoly(rev), inverse(u.value()), u.prec());
}

AlgebraicNumber power(const AlgebraicNumber& u, unsigned n) {
  ZPoly r = power_resultant(u.minpoly, n);
  return algebraic_from_poly(r, pow(u.value(), n), u.prec());
}

ZPoly conjugate_ratio_poly_numeric(const AlgebraicNumber& u) {
  const std::size_t n = u.roots.size();
  const mpfr_prec_t prec = u.prec();
  CBall lead = CBall::from_mpz(u.minpoly.lead(), prec);
  std::vector<CBall> coeffs{CBall::from_mpz(1, prec)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // factor (a r_j) t - (a r_i)
      CBall c1 = lead * u.roots[j];
      CBall c0 = -(lead * u.roots[i]);
      std::vector<CBall> next(coeffs.size() + 1, CBall(prec));
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        next[k + 1] = next[k + 1] + coeffs[k] * c1;
        next[k] = next[k] + coeffs[k] * c0;
      }
      coeffs = std::move(next);
    }
  std::vector<mpz_class> ints;
  for (const auto& c : coeffs) {
    if (!c.im.contains_zero()) throw PrecisionError("numfield", "symmetric function not real");
    auto v = c.re.unique_integer();
    if (!v) throw InvariantViolation("numfield", "symmetric function not an integer");
    ints.push_back(*v);
  }
  return ZPoly(std::move(ints)).primitive();
}

bool is_root_of_unity(const AlgebraicNumber& a) {
  const unsigned long d = static_cast<unsigned long>(a.degree());
  // phi(k) >= sqrt(k/2), so phi(k) <= d forces k <= 2 d^2.
  for (unsigned long k = 1; k <= 2 * d * d + 2; ++k) {
    if (euler_phi(k) != d) continue;
    if (cyclotomic(static_cast<unsigned>(k)).primitive() == a.minpoly) return true;
  }
  return false;
}

int degree_of_power(const AlgebraicNumber& x, unsigned n) { return power(x, n).degree(); }

}  // namespace singmod
