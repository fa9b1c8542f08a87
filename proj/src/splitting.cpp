#include "splitting.hpp"

#include "errors.hpp"

namespace singmod {

QPoly field_inverse(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = a % m;
  QPoly s0, s1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    QDivMod qr = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(qr.rem);
    QPoly s2 = s0 - qr.quot * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw InvalidArgument("splitting", "element is not invertible");
  return (s0 * (1 / r0.c[0])) % m;
}

namespace {

// Polynomials in X over K = Q[t]/(m), coefficient i of X^i.
using KPoly = std::vector<QPoly>;

void ktrim(KPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly kmul(const KPoly& a, const KPoly& b, const QPoly& m) {
  if (a.empty() || b.empty()) return {};
  KPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  for (auto& v : out) v = v % m;
  ktrim(out);
  return out;
}

KPoly kmod(KPoly a, const KPoly& b, const QPoly& m) {
  QPoly inv_lead = field_inverse(b.back(), m);
  ktrim(a);
  while (a.size() >= b.size()) {
    QPoly factor = mulmod(a.back(), inv_lead, m);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] - factor * b[i]) % m;
    a.back() = QPoly();
    ktrim(a);
  }
  return a;
}

KPoly kgcd(KPoly a, KPoly b, const QPoly& m) {
  ktrim(a);
  ktrim(b);
  while (!b.empty()) {
    KPoly r = kmod(a, b, m);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  QPoly inv_lead = field_inverse(a.back(), m);
  for (auto& v : a) v = mulmod(v, inv_lead, m);
  return a;
}

BiPoly constant_in_t(const ZPoly& h) {
  BiPoly out;
  for (const auto& v : h.c) out.c.push_back(ZPoly(std::vector<mpz_class>{v}));
  return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// H(t - c s) as a polynomial in s with coefficients in Z[t].
BiPoly shifted(const ZPoly& h, long c) {
  const int d = h.degree();
  BiPoly out;
  out.c.assign(d + 1, ZPoly());
  for (int j = 0; j <= d; ++j) {
    mpz_class mc = -c;
    mpz_class cj;
    mpz_pow_ui(cj.get_mpz_t(), mc.get_mpz_t(), static_cast<unsigned long>(j));
    ZPoly acc;
    for (int k = j; k <= d; ++k) acc = acc + ZPoly::monomial(h.c[k] * binomial(k, j) * cj, k - j);
    out.c[j] = acc;
  }
  return out;
}

struct Candidate {
  ZPoly minpoly;
  bool ok = false;
};

Candidate theta_candidate(const ZPoly& h, long c) {
  ZPoly r = eliminate(constant_in_t(h), shifted(h, c));
  // Roots (1 + c) x_i come from the diagonal and are removed.
  const int d = h.degree();
  std::vector<mpz_class> g(d + 1);
  mpz_class base = 1 + c;
  for (int k = 0; k <= d; ++k) {
    mpz_pow_ui(g[k].get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(d - k));
    g[k] *= h.c[k];
  }
  ZPoly gp(g);
  if (r.lead() < 0) r = r * mpz_class(-1);
  auto q = exact_quotient(r, gp);
  if (!q) return {};
  Candidate out;
  out.minpoly = *q;
  if (out.minpoly.degree() != d * (d - 1) || out.minpoly.lead() != 1) return out;
  if (squarefree_part(out.minpoly).degree() != out.minpoly.degree()) return out;
  if (gcd(QPoly(out.minpoly), QPoly(gp)).degree() != 0) return out;
  out.ok = true;
  return out;
}

}  // namespace

SplittingField splitting_field_generator(const OrbitPairing& pairing) {
  const ZPoly& hx = pairing.x[0].minpoly;
  const ZPoly& hy = pairing.y[0].minpoly;
  if (hx.degree() != 3 || hx.lead() != 1) throw InvalidArgument("splitting", "expected a monic cubic");
  for (long k = 1; k <= 40; ++k) {
    long c = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
    Candidate cand = theta_candidate(hx, c);
    if (!cand.ok) continue;
    std::vector<CBall> roots;
    std::size_t factors = 0;
    for (mpfr_prec_t prec = pairing.precision;; prec *= 2) {
      try {
        roots = isolate_roots(cand.minpoly, prec);
        factors = factor_with_roots(cand.minpoly, roots).size();
        break;
      } catch (const PrecisionError&) {
        if (prec * 2 > kDefaultPrecisionCap) throw;
      }
    }
    if (factors != 1) continue;

    SplittingField sf;
    sf.minpoly = cand.minpoly;
    sf.c = c;
    sf.roots = roots;
    sf.precision = roots.front().prec();
    QPoly m(cand.minpoly);

    // x2 is the common root of H(X) and H(theta - c X).
    KPoly hk, lin = {QPoly::x(), QPoly::constant(mpq_class(-c))};
    for (const auto& v : hx.c) hk.push_back(QPoly::constant(mpq_class(v)));
    KPoly hs;
    for (auto it = hx.c.rbegin(); it != hx.c.rend(); ++it) {
      hs = kmul(hs, lin, m);
      if (hs.empty()) hs.push_back(QPoly());
      hs[0] = hs[0] + QPoly::constant(mpq_class(*it));
      ktrim(hs);
    }
    KPoly g = kgcd(hk, hs, m);
    if (g.size() != 2) throw InvariantViolation("splitting", "common root of the conjugate system is not unique");
    QPoly x2 = (-g[0]) % m;
    QPoly x1 = (QPoly::x() - x2 * mpq_class(c)) % m;
    QPoly x3 = (QPoly::constant(mpq_class(-hx.c[2])) - x1 - x2) % m;
    sf.x = {x1, x2, x3};
    for (int i = 0; i < 3; ++i) {
      sf.y[i] = compose(pairing.relator, sf.x[i]) % m;
      if (!(compose(QPoly(hx), sf.x[i]) % m).is_zero())
        throw InvariantViolation("splitting", "x_i(theta) is not a root of H_x");
      if (!(compose(QPoly(hy), sf.y[i]) % m).is_zero())
        throw InvariantViolation("splitting", "y_i(theta) is not a root of H_y");
    }

    // Principal embedding and numeric round trip.
    CBall theta0 = pairing.x[0].value() + pairing.x[1].value() * CBall::from_mpz(mpz_class(c));
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (roots[i].overlaps(theta0)) hits.push_back(i);
    if (hits.size() != 1) throw PrecisionError("splitting", "principal embedding of theta not isolated");
    sf.index = hits.front();
    for (int i = 0; i < 3; ++i) {
      if (!sf.x[i].eval(roots[sf.index]).overlaps(pairing.x[i].value()) ||
          !sf.y[i].eval(roots[sf.index]).overlaps(pairing.y[i].value())) {
        throw InvariantViolation("splitting", "round trip through theta does not reproduce the conjugates");
      }
    }
    return sf;
  }
  throw PrecisionError("splitting", "no primitive element with |c| <= 20");
}

}  // namespace singmod
