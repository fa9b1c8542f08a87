#include "localfield.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace singmod {

long vp(const mpz_class& v, long p) {
  if (v == 0) throw InvalidArgument("localfield", "valuation of zero");
  mpz_class t = v;
  mpz_class pp = p;
  return static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t()));
}

long vp(const mpq_class& v, long p) { return vp(v.get_num(), p) - vp(v.get_den(), p); }

namespace {

long vp_mod(const mpz_class& v, long p, long cap) {
  if (v == 0) return cap;
  return std::min(vp(v, p), cap);
}

}  // namespace

LocalField::LocalField(long p, int e, int f, unsigned c_index, long absprec)
    : p_(p), e_(e), f_(f), c_index_(c_index), absprec_(absprec), k_(p, f) {
  if (e < 1 || f < 1) throw InvalidArgument("localfield", "bad ramification data");
  if (e > 1 && p % e == 0) throw InvalidArgument("localfield", "wild ramification is not supported");
  m_digits_ = (absprec + e - 1) / e + 2;
  mpz_ui_pow_ui(pm_.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(m_digits_));
  for (long v : k_.modulus()) omega_mod_.emplace_back(v);
  c_.assign(f, 0);
  if (e == 1) {
    c_[0] = 1;
  } else {
    FiniteField::Elem g = k_.pow(k_.generator(), c_index);
    for (int j = 0; j < f; ++j) c_[j] = g[j];
  }
  omega_traces_.assign(f, 0);
  for (int j = 0; j < f; ++j) {
    mpz_class tr = 0;
    for (int i = 0; i < f; ++i) {
      std::vector<mpz_class> a(f, 0), b(f, 0);
      a[j] = 1;
      b[i] = 1;
      tr += u_mul(a, b)[i];
    }
    omega_traces_[j] = tr;
  }
}

void LocalField::reduce(std::vector<mpz_class>& v) const {
  for (auto& x : v) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), pm_.get_mpz_t());
  }
}

std::vector<mpz_class> LocalField::u_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) const {
  std::vector<mpz_class> prod(2 * f_ - 1, 0);
  for (int i = 0; i < f_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f_; ++j) prod[i + j] += a[i] * b[j];
  }
  for (int k = 2 * f_ - 2; k >= f_; --k) {
    if (prod[k] == 0) continue;
    mpz_class t = prod[k];
    for (int j = 0; j <= f_; ++j) prod[k - f_ + j] -= t * omega_mod_[j];
  }
  prod.resize(f_);
  reduce(prod);
  return prod;
}

std::vector<mpz_class> LocalField::u_inv(const std::vector<mpz_class>& a) const {
  FiniteField::Elem r(f_);
  for (int j = 0; j < f_; ++j) r[j] = mpz_class(a[j] % p_).get_si();
  for (auto& x : r) x = ((x % p_) + p_) % p_;
  if (k_.is_zero(r)) throw InvalidArgument("localfield", "inverse of a non-unit");
  FiniteField::Elem ri = k_.inv(r);
  std::vector<mpz_class> y(f_);
  for (int j = 0; j < f_; ++j) y[j] = ri[j];
  // Newton: y <- y (2 - a y), doubling correct digits each round.
  for (long digits = 1; digits < m_digits_; digits *= 2) {
    std::vector<mpz_class> ay = u_mul(a, y);
    for (auto& v : ay) v = -v;
    ay[0] += 2;
    reduce(ay);
    y = u_mul(y, ay);
  }
  return y;
}

LocalElement LocalField::zero() const { return {std::vector<mpz_class>(e_ * f_, 0), e_ * m_digits_}; }

LocalElement LocalField::one() const { return from_int(1); }

LocalElement LocalField::from_int(const mpz_class& v) const {
  LocalElement out = zero();
  out.c[0] = v;
  mpz_mod(out.c[0].get_mpz_t(), out.c[0].get_mpz_t(), pm_.get_mpz_t());
  return out;
}

LocalElement LocalField::uniformizer() const {
  LocalElement out = zero();
  if (e_ == 1) {
    out.c[0] = p_;
  } else {
    out.c[f_] = 1;
  }
  return out;
}

LocalElement LocalField::lift(const FiniteField::Elem& r) const {
  LocalElement out = zero();
  for (int j = 0; j < f_; ++j) out.c[j] = r[j];
  return out;
}

LocalElement LocalField::add(const LocalElement& a, const LocalElement& b) const {
  LocalElement out{std::vector<mpz_class>(e_ * f_), std::min(a.absprec, b.absprec)};
  for (int i = 0; i < e_ * f_; ++i) out.c[i] = a.c[i] + b.c[i];
  reduce(out.c);
  return out;
}

LocalElement LocalField::sub(const LocalElement& a, const LocalElement& b) const {
  LocalElement out{std::vector<mpz_class>(e_ * f_), std::min(a.absprec, b.absprec)};
  for (int i = 0; i < e_ * f_; ++i) out.c[i] = a.c[i] - b.c[i];
  reduce(out.c);
  return out;
}

LocalElement LocalField::neg(const LocalElement& a) const {
  LocalElement out{std::vector<mpz_class>(e_ * f_), a.absprec};
  for (int i = 0; i < e_ * f_; ++i) out.c[i] = -a.c[i];
  reduce(out.c);
  return out;
}

LocalElement LocalField::mul(const LocalElement& a, const LocalElement& b) const {
  LocalElement out = zero();
  for (int i = 0; i < e_; ++i) {
    std::vector<mpz_class> ui(a.c.begin() + i * f_, a.c.begin() + (i + 1) * f_);
    if (std::all_of(ui.begin(), ui.end(), [](const mpz_class& v) { return v == 0; })) continue;
    for (int j = 0; j < e_; ++j) {
      std::vector<mpz_class> vj(b.c.begin() + j * f_, b.c.begin() + (j + 1) * f_);
      std::vector<mpz_class> w = u_mul(ui, vj);
      int k = i + j;
      if (k >= e_) {
        w = u_mul(w, c_);
        for (auto& x : w) x *= p_;
        k -= e_;
      }
      for (int t = 0; t < f_; ++t) out.c[k * f_ + t] += w[t];
    }
  }
  reduce(out.c);
  long va = valuation(a).value_or(a.absprec);
  long vb = valuation(b).value_or(b.absprec);
  out.absprec = std::min({a.absprec + vb, b.absprec + va, static_cast<long>(e_) * m_digits_});
  return out;
}

LocalElement LocalField::pow(const LocalElement& a, unsigned long n) const {
  LocalElement result = one();
  LocalElement base = a;
  while (n > 0) {
    if (n & 1UL) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

LocalElement LocalField::div_pi(const LocalElement& a, long s) const {
  if (s < 0) throw InvalidArgument("localfield", "negative shift");
  LocalElement cur = a;
  std::vector<mpz_class> cinv = u_inv(c_);
  for (long step = 0; step < s; ++step) {
    std::vector<mpz_class> u0(cur.c.begin(), cur.c.begin() + f_);
    for (auto& x : u0) {
      if (x % p_ != 0) throw InvariantViolation("localfield", "division by pi of a unit");
      x /= p_;
    }
    LocalElement next = zero();
    for (int i = 1; i < e_; ++i)
      for (int j = 0; j < f_; ++j) next.c[(i - 1) * f_ + j] = cur.c[i * f_ + j];
    std::vector<mpz_class> top = e_ == 1 ? u0 : u_mul(u0, cinv);
    for (int j = 0; j < f_; ++j) next.c[(e_ - 1) * f_ + j] = top[j];
    reduce(next.c);
    next.absprec = cur.absprec - 1;
    cur = std::move(next);
  }
  return cur;
}

LocalElement LocalField::inv_unit(const LocalElement& u) const {
  if (val(u) != 0) throw InvalidArgument("localfield", "inv_unit of a non-unit");
  std::vector<mpz_class> u0(u.c.begin(), u.c.begin() + f_);
  LocalElement y = zero();
  std::vector<mpz_class> y0 = u_inv(u0);
  for (int j = 0; j < f_; ++j) y.c[j] = y0[j];
  LocalElement two = from_int(2);
  for (long digits = 1; digits < u.absprec + 2; digits *= 2) {
    y = mul(y, sub(two, mul(u, y)));
  }
  y.absprec = std::min(y.absprec, u.absprec);
  return y;
}

LocalElement LocalField::div(const LocalElement& a, const LocalElement& b) const {
  long vb = val(b);
  LocalElement bu = div_pi(b, vb);
  LocalElement au = div_pi(a, vb);
  return mul(au, inv_unit(bu));
}

std::optional<long> LocalField::valuation(const LocalElement& a) const {
  long best = a.absprec;
  for (int i = 0; i < e_; ++i) {
    long vi = m_digits_;
    for (int j = 0; j < f_; ++j) vi = std::min(vi, vp_mod(a.c[i * f_ + j], p_, m_digits_));
    if (vi < m_digits_) best = std::min(best, static_cast<long>(e_) * vi + i);
  }
  if (best >= a.absprec) return std::nullopt;
  return best;
}

long LocalField::val(const LocalElement& a) const {
  auto v = valuation(a);
  if (!v) throw PrecisionError("localfield", "valuation undecided at the working precision");
  return *v;
}

FiniteField::Elem LocalField::residue(const LocalElement& a) const {
  if (a.absprec < 1) throw PrecisionError("localfield", "residue undecided");
  FiniteField::Elem r(f_);
  for (int j = 0; j < f_; ++j) {
    mpz_class t;
    mpz_mod_ui(t.get_mpz_t(), a.c[j].get_mpz_t(), static_cast<unsigned long>(p_));
    r[j] = t.get_si();
  }
  return r;
}

mpz_class LocalField::trace(const LocalElement& a) const {
  mpz_class t = 0;
  for (int j = 0; j < f_; ++j) t += a.c[j] * omega_traces_[j];
  t *= e_;
  mpz_mod(t.get_mpz_t(), t.get_mpz_t(), pm_.get_mpz_t());
  return t;
}

std::vector<mpz_class> LocalField::charpoly(const LocalElement& a, long* digits) const {
  const int n = e_ * f_;
  std::vector<mpz_class> s(n + 1, 0);
  LocalElement power = one();
  long d = m_digits_;
  for (int k = 1; k <= n; ++k) {
    power = mul(power, a);
    s[k] = trace(power);
    d = std::min(d, (power.absprec + e_ - 1) / e_);
  }
  if (d < 1) throw PrecisionError("localfield", "characteristic polynomial undecided");
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(d));
  // Newton identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} s_i.
  std::vector<mpz_class> el(n + 1, 0);
  el[0] = 1;
  for (int k = 1; k <= n; ++k) {
    mpz_class acc = 0;
    for (int i = 1; i <= k; ++i) {
      mpz_class term = el[k - i] * s[i];
      if ((i - 1) % 2 == 0) acc += term;
      else acc -= term;
    }
    mpz_class kinv;
    mpz_class kk = k;
    if (mpz_invert(kinv.get_mpz_t(), kk.get_mpz_t(), pd.get_mpz_t()) == 0) {
      throw InvalidArgument("localfield", "Newton identities need p > degree");
    }
    el[k] = acc * kinv;
    mpz_mod(el[k].get_mpz_t(), el[k].get_mpz_t(), pd.get_mpz_t());
  }
  std::vector<mpz_class> out(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    mpz_class v = (k % 2 == 0) ? el[k] : mpz_class(-el[k]);
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), pd.get_mpz_t());
    out[n - k] = v;
  }
  if (digits) *digits = d;
  return out;
}

LocalElement LocalField::from_rational(const mpq_class& q) const {
  if (q == 0) return zero();
  if (vp(q, p_) < 0) throw InvalidArgument("localfield", "rational with negative valuation");
  mpz_class inv;
  mpz_class den = q.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pm_.get_mpz_t()) == 0) {
    throw InvariantViolation("localfield", "denominator not invertible");
  }
  return from_int(mpz_class(q.get_num() * inv));
}

// ---------------------------------------------------------------- polynomials

LocalPoly to_local(const LocalField& k, const ZPoly& f) {
  LocalPoly out;
  for (const auto& c : f.c) out.push_back(k.from_int(c));
  return out;
}

LocalElement eval(const LocalField& k, const LocalPoly& f, const LocalElement& x) {
  LocalElement acc = k.zero();
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = k.add(k.mul(acc, x), *it);
  return acc;
}

LocalElement eval(const LocalField& k, const QPoly& f, const LocalElement& x) {
  LocalElement acc = k.zero();
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = k.add(k.mul(acc, x), k.from_rational(*it));
  return acc;
}

namespace {

LocalPoly derivative(const LocalField& k, const LocalPoly& f) {
  LocalPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(k.mul(f[i], k.from_int(static_cast<long>(i))));
  return out;
}

// F(r + pi W) as a polynomial in W.
LocalPoly taylor_shift(const LocalField& k, const LocalPoly& f, const LocalElement& r) {
  LocalElement pi = k.uniformizer();
  LocalPoly acc;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    // acc <- acc * (r + pi W) + coefficient
    LocalPoly next(acc.size() + 1, k.zero());
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] = k.add(next[i], k.mul(acc[i], r));
      next[i + 1] = k.add(next[i + 1], k.mul(acc[i], pi));
    }
    next[0] = k.add(next[0], *it);
    acc = std::move(next);
  }
  return acc;
}

void roots_rec(const LocalField& k, LocalPoly f, std::vector<LocalElement>& out, int depth) {
  if (depth > 4 * k.absprec()) throw PrecisionError("localfield", "root recursion too deep");
  std::optional<long> s;
  for (const auto& c : f) {
    auto v = k.valuation(c);
    if (v && (!s || *v < *s)) s = v;
  }
  if (!s) throw PrecisionError("localfield", "polynomial vanishes to the working precision");
  FiniteField::Poly fbar;
  for (auto& c : f) {
    if (k.valuation(c)) {
      c = k.div_pi(c, *s);
    } else {
      LocalElement z = k.zero();
      z.absprec = c.absprec - *s;
      c = z;
    }
    if (c.absprec < 1) throw PrecisionError("localfield", "coefficients lost all precision");
    fbar.push_back(k.residue(c));
  }
  const FiniteField& kk = k.residue_field();
  kk.trim(fbar);
  if (fbar.size() <= 1) return;
  LocalPoly df = derivative(k, f);
  for (const auto& root : kk.roots(fbar)) {
    LocalElement r = k.lift(root.value);
    if (root.multiplicity == 1) {
      LocalElement x = r;
      long target = 1;
      for (const auto& c : f) target = std::max(target, c.absprec);
      for (long digits = 1; digits < target + 2; digits *= 2) {
        LocalElement fx = eval(k, f, x);
        LocalElement dfx = eval(k, df, x);
        x = k.sub(x, k.mul(fx, k.inv_unit(dfx)));
      }
      out.push_back(x);
    } else {
      LocalPoly g = taylor_shift(k, f, r);
      std::vector<LocalElement> ws;
      roots_rec(k, g, ws, depth + 1);
      for (const auto& w : ws) out.push_back(k.add(r, k.mul(k.uniformizer(), w)));
    }
  }
}

}  // namespace

std::vector<LocalElement> integral_roots(const LocalField& k, const LocalPoly& f) {
  std::vector<LocalElement> out;
  roots_rec(k, f, out, 0);
  return out;
}

std::shared_ptr<LocalField> splitting_field(const ZPoly& f, long p, long absprec, int max_degree) {
  const int deg = f.degree();
  for (int n = 1; n <= max_degree; ++n) {
    for (int fd = 1; fd <= n; ++fd) {
      if (n % fd != 0) continue;
      int e = n / fd;
      if (e > 1 && p % e == 0) continue;
      FiniteField k(p, fd);
      unsigned long long classes = e == 1 ? 1 : std::gcd(static_cast<unsigned long long>(e), k.order() - 1);
      for (unsigned ci = 0; ci < classes; ++ci) {
        auto field = std::make_shared<LocalField>(p, e, fd, ci, absprec);
        auto roots = integral_roots(*field, to_local(*field, f));
        if (static_cast<int>(roots.size()) == deg) return field;
      }
    }
  }
  return nullptr;
}

}  // namespace singmod
