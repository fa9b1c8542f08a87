#include "finite_field.hpp"

#include <algorithm>

#include "errors.hpp"

namespace singmod {

namespace {

long mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

long mulmod(long a, long b, long p) { return static_cast<long>((static_cast<__int128>(a) * b) % p); }

}  // namespace

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + mulmod(a[i], b[j], p), p);
  fp_trim(out);
  return out;
}

long fp_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = mod(a, p);
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw InvalidArgument("finite_field", "element not invertible mod p");
  return mod(t, p);
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& m, long p) {
  FpPoly r = a;
  fp_trim(r);
  FpPoly mm = m;
  fp_trim(mm);
  if (mm.empty()) throw InvalidArgument("finite_field", "reduction by zero polynomial");
  long inv = fp_inv(mm.back(), p);
  const std::size_t dm = mm.size() - 1;
  while (r.size() > dm && !r.empty()) {
    long f = mulmod(r.back(), inv, p);
    std::size_t shift = r.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) r[shift + j] = mod(r[shift + j] - mulmod(f, mm[j], p), p);
    fp_trim(r);
  }
  return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long inv = fp_inv(a.back(), p);
    for (auto& v : a) v = mulmod(v, inv, p);
  }
  return a;
}

FpPoly fp_powmod(const FpPoly& a, unsigned long long e, const FpPoly& m, long p) {
  FpPoly result = fp_mod(FpPoly{1}, m, p);
  FpPoly base = fp_mod(a, m, p);
  while (e > 0) {
    if (e & 1ULL) result = fp_mod(fp_mul(result, base, p), m, p);
    e >>= 1;
    if (e > 0) base = fp_mod(fp_mul(base, base, p), m, p);
  }
  return result;
}

bool fp_is_irreducible(const FpPoly& g, long p) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n <= 0) return false;
  if (n == 1) return true;
  FpPoly x{0, 1};
  FpPoly xp = x;
  for (int i = 1; i <= n / 2; ++i) {
    xp = fp_powmod(xp, static_cast<unsigned long long>(p), g, p);
    FpPoly diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = mod(diff[1] - 1, p);
    fp_trim(diff);
    if (fp_gcd(g, diff, p).size() != 1) return false;
  }
  return true;
}

FpPoly first_irreducible(long p, int f) {
  if (f < 1) throw InvalidArgument("finite_field", "degree must be positive");
  unsigned long long count = 1;
  for (int i = 0; i < f; ++i) count *= static_cast<unsigned long long>(p);
  for (unsigned long long idx = 0; idx < count; ++idx) {
    FpPoly g(f + 1, 0);
    unsigned long long t = idx;
    for (int i = 0; i < f; ++i) {
      g[i] = static_cast<long>(t % p);
      t /= p;
    }
    g[f] = 1;
    if (fp_is_irreducible(g, p)) return g;
  }
  throw InvariantViolation("finite_field", "no irreducible polynomial found");
}

std::vector<unsigned long long> prime_factors(unsigned long long n) {
  std::vector<unsigned long long> out;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------- FiniteField

FiniteField::FiniteField(long p, int f) : p_(p), f_(f), q_(1) {
  if (p < 2 || f < 1) throw InvalidArgument("finite_field", "bad field parameters");
  for (int i = 0; i < f; ++i) q_ *= static_cast<unsigned long long>(p);
  modulus_ = first_irreducible(p, f);
}

FiniteField::Elem FiniteField::one() const { return from_int(1); }

FiniteField::Elem FiniteField::from_int(long v) const {
  Elem e(f_, 0);
  e[0] = mod(v, p_);
  return e;
}

FiniteField::Elem FiniteField::element(unsigned long long index) const {
  Elem e(f_, 0);
  for (int i = 0; i < f_; ++i) {
    e[i] = static_cast<long>(index % static_cast<unsigned long long>(p_));
    index /= static_cast<unsigned long long>(p_);
  }
  return e;
}

unsigned long long FiniteField::index_of(const Elem& a) const {
  unsigned long long idx = 0;
  for (int i = f_ - 1; i >= 0; --i) idx = idx * static_cast<unsigned long long>(p_) + static_cast<unsigned long long>(a[i]);
  return idx;
}

bool FiniteField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](long v) { return v == 0; });
}

FiniteField::Elem FiniteField::add(const Elem& a, const Elem& b) const {
  Elem out(f_);
  for (int i = 0; i < f_; ++i) out[i] = mod(a[i] + b[i], p_);
  return out;
}

FiniteField::Elem FiniteField::sub(const Elem& a, const Elem& b) const {
  Elem out(f_);
  for (int i = 0; i < f_; ++i) out[i] = mod(a[i] - b[i], p_);
  return out;
}

FiniteField::Elem FiniteField::neg(const Elem& a) const {
  Elem out(f_);
  for (int i = 0; i < f_; ++i) out[i] = mod(-a[i], p_);
  return out;
}

FiniteField::Elem FiniteField::mul(const Elem& a, const Elem& b) const {
  FpPoly pa(a.begin(), a.end());
  FpPoly pb(b.begin(), b.end());
  fp_trim(pa);
  fp_trim(pb);
  FpPoly r = fp_mod(fp_mul(pa, pb, p_), modulus_, p_);
  Elem out(f_, 0);
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i];
  return out;
}

FiniteField::Elem FiniteField::pow(const Elem& a, unsigned long long e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1ULL) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

FiniteField::Elem FiniteField::inv(const Elem& a) const {
  if (is_zero(a)) throw InvalidArgument("finite_field", "inverse of zero");
  return pow(a, q_ - 2);
}

unsigned long long FiniteField::order_of(const Elem& a) const {
  if (is_zero(a)) throw InvalidArgument("finite_field", "order of zero");
  unsigned long long n = q_ - 1;
  for (unsigned long long l : prime_factors(q_ - 1)) {
    while (n % l == 0 && pow(a, n / l) == one()) n /= l;
  }
  return n;
}

FiniteField::Elem FiniteField::generator() const {
  for (unsigned long long idx = 1; idx < q_; ++idx) {
    Elem g = element(idx);
    if (order_of(g) == q_ - 1) return g;
  }
  throw InvariantViolation("finite_field", "no generator found");
}

void FiniteField::trim(Poly& a) const {
  while (!a.empty() && is_zero(a.back())) a.pop_back();
}

FiniteField::Poly FiniteField::poly_mul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
  trim(out);
  return out;
}

namespace {

struct QR {
  FiniteField::Poly q;
  FiniteField::Poly r;
};

QR poly_divmod(const FiniteField& k, const FiniteField::Poly& a, const FiniteField::Poly& m) {
  FiniteField::Poly r = a;
  k.trim(r);
  FiniteField::Poly mm = m;
  k.trim(mm);
  if (mm.empty()) throw InvalidArgument("finite_field", "division by zero polynomial");
  const std::size_t dm = mm.size() - 1;
  FiniteField::Poly q(r.size() > dm ? r.size() - dm : 0, k.zero());
  FiniteField::Elem inv = k.inv(mm.back());
  while (r.size() > dm) {
    FiniteField::Elem f = k.mul(r.back(), inv);
    std::size_t shift = r.size() - 1 - dm;
    q[shift] = f;
    for (std::size_t j = 0; j <= dm; ++j) r[shift + j] = k.sub(r[shift + j], k.mul(f, mm[j]));
    r.pop_back();
    k.trim(r);
  }
  k.trim(q);
  return {q, r};
}

}  // namespace

FiniteField::Poly FiniteField::poly_mod(const Poly& a, const Poly& m) const { return poly_divmod(*this, a, m).r; }

FiniteField::Poly FiniteField::poly_div(const Poly& a, const Poly& m) const { return poly_divmod(*this, a, m).q; }

FiniteField::Poly FiniteField::poly_gcd(Poly a, Poly b) const {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Elem inv_lead = inv(a.back());
    for (auto& v : a) v = mul(v, inv_lead);
  }
  return a;
}

FiniteField::Poly FiniteField::poly_powmod(const Poly& a, unsigned long long e, const Poly& m) const {
  Poly result = poly_mod(Poly{one()}, m);
  Poly base = poly_mod(a, m);
  while (e > 0) {
    if (e & 1ULL) result = poly_mod(poly_mul(result, base), m);
    e >>= 1;
    if (e > 0) base = poly_mod(poly_mul(base, base), m);
  }
  return result;
}

FiniteField::Elem FiniteField::poly_eval(const Poly& a, const Elem& x) const {
  Elem acc = zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = add(mul(acc, x), *it);
  return acc;
}

std::vector<FiniteField::Root> FiniteField::roots(const Poly& a_in) const {
  Poly a = a_in;
  trim(a);
  std::vector<Root> out;
  if (a.size() <= 1) return out;
  // g = gcd(a, X^q - X) is the product of the distinct linear factors.
  Poly x{zero(), one()};
  Poly xq = poly_powmod(x, q_, a);
  xq.resize(std::max<std::size_t>(xq.size(), 2), zero());
  xq[1] = sub(xq[1], one());
  trim(xq);
  Poly g = poly_gcd(a, xq);
  std::vector<Elem> found;
  std::vector<Poly> stack{g};
  while (!stack.empty()) {
    Poly h = stack.back();
    stack.pop_back();
    if (h.size() <= 1) continue;
    if (h.size() == 2) {
      found.push_back(neg(mul(h[0], inv(h[1]))));
      continue;
    }
    bool split = false;
    for (unsigned long long idx = 0; idx < q_ && !split; ++idx) {
      Poly shifted{element(idx), one()};
      Poly t;
      if (p_ == 2) {
        // Trace map splitting for characteristic two.
        Poly acc = poly_mod(shifted, h);
        Poly tr = acc;
        for (int i = 1; i < f_; ++i) {
          acc = poly_mod(poly_mul(acc, acc), h);
          Poly sum(std::max(tr.size(), acc.size()), zero());
          for (std::size_t k = 0; k < tr.size(); ++k) sum[k] = add(sum[k], tr[k]);
          for (std::size_t k = 0; k < acc.size(); ++k) sum[k] = add(sum[k], acc[k]);
          trim(sum);
          tr = sum;
        }
        t = tr;
      } else {
        t = poly_powmod(shifted, (q_ - 1) / 2, h);
        if (t.empty()) t = Poly{zero()};
        t[0] = sub(t[0], one());
        trim(t);
      }
      Poly d = poly_gcd(h, t);
      if (d.size() > 1 && d.size() < h.size()) {
        stack.push_back(d);
        stack.push_back(poly_div(h, d));
        split = true;
      }
    }
    if (!split) throw InvariantViolation("finite_field", "equal-degree splitting failed");
  }
  for (const auto& r : found) {
    int mult = 0;
    Poly cur = a;
    Poly lin{neg(r), one()};
    while (true) {
      auto qr = poly_divmod(*this, cur, lin);
      if (!qr.r.empty()) break;
      cur = qr.q;
      ++mult;
    }
    out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(),
            [this](const Root& x, const Root& y) { return index_of(x.value) < index_of(y.value); });
  return out;
}

}  // namespace singmod
