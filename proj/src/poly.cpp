#include "poly.hpp"

#include <sstream>

#include "errors.hpp"

namespace singmod {

// ---------------------------------------------------------------- ZPoly

ZPoly ZPoly::monomial(const mpz_class& coeff, std::size_t deg) {
  std::vector<mpz_class> c(deg + 1, 0);
  c[deg] = coeff;
  return ZPoly(std::move(c));
}

void ZPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

mpz_class ZPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class ZPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

CBall ZPoly::eval(const CBall& z) const {
  CBall acc(z.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z + CBall::from_mpz(*it, z.prec());
  }
  return acc;
}

ZPoly ZPoly::derivative() const {
  if (c.size() <= 1) return ZPoly();
  std::vector<mpz_class> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<unsigned long>(i);
  return ZPoly(std::move(d));
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto& v : c) g = gcd(g, v);
  return g;
}

ZPoly ZPoly::primitive() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (lead() < 0) g = -g;
  std::vector<mpz_class> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c[i].get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(out));
}

namespace {

template <class T>
std::string poly_string(const std::vector<T>& c) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    T v = c[k];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    if (v < 0) v = -v;
    first = false;
    if (k == 0 || v != 1) os << v.get_str();
    if (k > 0) {
      if (v != 1) os << "*";
      os << "X";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace

std::string ZPoly::to_string() const { return poly_string(c); }

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<mpz_class> out(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
  return ZPoly(std::move(out));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  std::vector<mpz_class> out(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
  return ZPoly(std::move(out));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  std::vector<mpz_class> out(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
  return ZPoly(std::move(out));
}

ZPoly operator*(const ZPoly& a, const mpz_class& s) {
  std::vector<mpz_class> out(a.c);
  for (auto& v : out) v *= s;
  return ZPoly(std::move(out));
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(const ZPoly& p) {
  c.reserve(p.c.size());
  for (const auto& v : p.c) c.emplace_back(v);
}

QPoly QPoly::constant(const mpq_class& v) { return QPoly(std::vector<mpq_class>{v}); }

QPoly QPoly::x() { return QPoly(std::vector<mpq_class>{0, 1}); }

void QPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CBall QPoly::eval(const CBall& z) const {
  CBall acc(z.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z + CBall::from_mpq(*it, z.prec());
  }
  return acc;
}

QPoly QPoly::derivative() const {
  if (c.size() <= 1) return QPoly();
  std::vector<mpq_class> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<unsigned long>(i);
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  mpq_class l = lead();
  std::vector<mpq_class> out(c);
  for (auto& v : out) v /= l;
  return QPoly(std::move(out));
}

ZPoly QPoly::to_primitive_z() const {
  mpz_class den = 1;
  for (const auto& v : c) den = lcm(den, v.get_den());
  std::vector<mpz_class> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].get_num() * (den / c[i].get_den());
  return ZPoly(std::move(out)).primitive();
}

std::string QPoly::to_string() const { return poly_string(c); }

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<mpq_class> out(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<mpq_class> out(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a) {
  std::vector<mpq_class> out(a.c);
  for (auto& v : out) v = -v;
  return QPoly(std::move(out));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<mpq_class> out(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
  return QPoly(std::move(out));
}

QPoly operator*(const QPoly& a, const mpq_class& s) {
  std::vector<mpq_class> out(a.c);
  for (auto& v : out) v *= s;
  return QPoly(std::move(out));
}

QDivMod divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw InvalidArgument("poly", "division by the zero polynomial");
  std::vector<mpq_class> r(a.c);
  int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<mpq_class> q(a.c.size() - b.c.size() + 1, 0);
  mpq_class inv = 1 / b.lead();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    mpq_class f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c[j];
  }
  r.resize(db);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).rem; }

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a;
  QPoly y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    // Keep intermediate coefficients small.
    y = r.is_zero() ? r : QPoly(r.to_primitive_z());
  }
  return x.monic();
}

ZPoly squarefree_part(const ZPoly& f) {
  QPoly qf(f);
  QPoly g = gcd(qf, qf.derivative());
  return divmod(qf, g).quot.to_primitive_z();
}

std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b) {
  QDivMod qr = divmod(QPoly(a), QPoly(b));
  if (!qr.rem.is_zero()) return std::nullopt;
  std::vector<mpz_class> out;
  for (const auto& v : qr.quot.c) {
    if (v.get_den() != 1) return std::nullopt;
    out.push_back(v.get_num());
  }
  return ZPoly(std::move(out));
}

bool divides(const ZPoly& b, const ZPoly& a) { return (QPoly(a) % QPoly(b)).is_zero(); }

QPoly compose(const QPoly& a, const QPoly& b) {
  QPoly acc;
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * b + QPoly::constant(*it);
  return acc;
}

QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m) { return (a * b) % m; }

QPoly powmod(const QPoly& a, unsigned long e, const QPoly& m) {
  QPoly result = QPoly::constant(1) % m;
  QPoly base = a % m;
  while (e > 0) {
    if (e & 1UL) result = mulmod(result, base, m);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m);
  }
  return result;
}

// ---------------------------------------------------------------- cyclotomic

unsigned long euler_phi(unsigned long k) {
  unsigned long result = k;
  unsigned long n = k;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

ZPoly cyclotomic(unsigned k) {
  if (k == 0) throw InvalidArgument("poly", "cyclotomic order must be positive");
  // X^k - 1 divided by every Phi_d with d | k, d < k.
  ZPoly acc = ZPoly::monomial(1, k) - ZPoly(std::vector<mpz_class>{1});
  for (unsigned d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto q = exact_quotient(acc, cyclotomic(d));
    if (!q) throw InvariantViolation("poly", "cyclotomic division failed");
    acc = *q;
  }
  return acc;
}

// ---------------------------------------------------------------- resultants

mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

mpz_class resultant(const ZPoly& a, const ZPoly& b, int da, int db) {
  if (da < a.degree() || db < b.degree()) throw InvalidArgument("poly", "formal degree too small");
  const int n = da + db;
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[i][i + j] = a.coeff(da - j);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m[db + i][i + j] = b.coeff(db - j);
  return determinant(std::move(m));
}

mpz_class resultant(const ZPoly& a, const ZPoly& b) {
  return resultant(a, b, a.degree(), b.degree());
}

mpz_class discriminant(const ZPoly& f) {
  const int n = f.degree();
  mpz_class r = resultant(f, f.derivative(), n, n - 1);
  // disc = (-1)^(n(n-1)/2) Res(f, f') / lead(f)
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), f.lead().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 != 0) out = -out;
  return out;
}

int BiPoly::degree_t() const {
  int d = -1;
  for (const auto& p : c) d = std::max(d, p.degree());
  return d;
}

ZPoly BiPoly::at_t(const mpz_class& t) const {
  std::vector<mpz_class> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].eval(t);
  return ZPoly(std::move(out));
}

QPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<mpq_class> dd(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly acc;
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * QPoly(std::vector<mpq_class>{-xs[k], 1}) + QPoly::constant(dd[k]);
  }
  return acc;
}

ZPoly eliminate(const BiPoly& a, const BiPoly& b) {
  const int da = a.degree_s();
  const int db = b.degree_s();
  const int bound = da * std::max(b.degree_t(), 0) + db * std::max(a.degree_t(), 0);
  std::vector<mpq_class> xs;
  std::vector<mpq_class> ys;
  for (int i = 0; i <= bound; ++i) {
    mpz_class t = i;
    xs.emplace_back(t);
    ys.emplace_back(resultant(a.at_t(t), b.at_t(t), da, db));
  }
  QPoly r = interpolate(xs, ys);
  std::vector<mpz_class> out;
  for (const auto& v : r.c) {
    if (v.get_den() != 1) throw InvariantViolation("poly", "non-integral resultant interpolation");
    out.push_back(v.get_num());
  }
  return ZPoly(std::move(out));
}

// ---------------------------------------------------------------- reconstruction

mpq_class to_mpq(mpfr_srcptr x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

namespace {

mpz_class floor_q(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

mpz_class ceil_q(const mpq_class& q) {
  mpz_class f;
  mpz_cdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Simplest rational in [lo, hi] with 0 < lo <= hi, via continued fractions.
std::optional<mpq_class> simplest_positive(const mpq_class& lo, const mpq_class& hi,
                                           const mpz_class& max_den, int depth) {
  if (depth > 4096) return std::nullopt;
  mpz_class c = ceil_q(lo);
  if (c <= hi) return mpq_class(c);
  mpz_class f = floor_q(lo);
  mpq_class a = lo - f;
  mpq_class b = hi - f;
  auto inner = simplest_positive(1 / b, 1 / a, max_den, depth + 1);
  if (!inner) return std::nullopt;
  mpq_class out = mpq_class(f) + 1 / *inner;
  if (out.get_den() > max_den) return std::nullopt;
  return out;
}

}  // namespace

std::optional<mpq_class> simplest_rational(const mpq_class& lo, const mpq_class& hi,
                                           const mpz_class& max_den) {
  if (lo > hi) return std::nullopt;
  if (lo <= 0 && hi >= 0) return mpq_class(0);
  if (hi < 0) {
    auto r = simplest_positive(-hi, -lo, max_den, 0);
    if (!r) return std::nullopt;
    return mpq_class(-*r);
  }
  return simplest_positive(lo, hi, max_den, 0);
}

std::optional<mpq_class> reconstruct_rational(const Ball& x) {
  mpz_class max_den = 1;
  max_den <<= static_cast<mp_bitcnt_t>(x.prec() / 4);
  return simplest_rational(to_mpq(x.lower().get()), to_mpq(x.upper().get()), max_den);
}

}  // namespace singmod
