#include "quadforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <mutex>
#include <sstream>

#include "errors.hpp"

namespace singmod {

void validate_discriminant(long d) {
  if (d >= 0) throw InvalidArgument("quadforms", "discriminant must be negative: " + std::to_string(d));
  long r = ((d % 4) + 4) % 4;
  if (r != 0 && r != 1) {
    throw InvalidArgument("quadforms", "discriminant must be 0 or 1 mod 4: " + std::to_string(d));
  }
}

std::string QuadraticForm::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::vector<QuadraticForm> reduced_forms(long d) {
  validate_discriminant(d);
  std::vector<QuadraticForm> out;
  // a <= sqrt(|d|/3) for reduced forms.
  for (long a = 1; 3 * a * a <= -d; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b - d;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadraticForm& x, const QuadraticForm& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  return out;
}

// ---------------------------------------------------------------- j series

namespace {

std::vector<mpz_class> mul_trunc(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                 std::size_t n) {
  std::vector<mpz_class> out(n + 1, 0);
  for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<mpz_class> compute_j_series(std::size_t n) {
  // Euler product prod (1 - q^k) from the pentagonal number theorem.
  std::vector<mpz_class> euler(n + 1, 0);
  for (long k = 0;; ++k) {
    bool any = false;
    for (long s : {k, -k}) {
      long e = s * (3 * s - 1) / 2;
      if (e < 0 || static_cast<std::size_t>(e) > n) continue;
      if (s == -k && k == 0) continue;
      euler[e] += (k % 2 == 0) ? 1 : -1;
      any = true;
    }
    if (!any && k * (3 * k - 1) / 2 > static_cast<long>(n)) break;
  }
  // Inverse power series.
  std::vector<mpz_class> inv(n + 1, 0);
  inv[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    mpz_class acc = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      if (euler[i] != 0) acc -= euler[i] * inv[m - i];
    }
    inv[m] = acc;
  }
  auto p2 = mul_trunc(inv, inv, n);
  auto p4 = mul_trunc(p2, p2, n);
  auto p8 = mul_trunc(p4, p4, n);
  auto p16 = mul_trunc(p8, p8, n);
  auto p24 = mul_trunc(p16, p8, n);
  // E4 = 1 + 240 sum sigma_3(k) q^k
  std::vector<mpz_class> e4(n + 1, 0);
  e4[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class s = 0;
    for (std::size_t dv = 1; dv <= k; ++dv) {
      if (k % dv == 0) s += mpz_class(dv) * dv * dv;
    }
    e4[k] = 240 * s;
  }
  auto e4_3 = mul_trunc(mul_trunc(e4, e4, n), e4, n);
  return mul_trunc(e4_3, p24, n);
}

std::mutex g_series_mutex;
std::vector<mpz_class> g_series;

// Rigorous upper bound for sum_{k>=1} c_k r^k, where c_k are the q-expansion
// coefficients of j. Uses sigma_3(n) <= n^4 and prod(1 - r^n) >= 1 - r/(1-r).
Ball tail_majorant(const Ball& r) {
  mpfr_prec_t prec = r.prec();
  Ball one = Ball::from_int(1, prec);
  Ball s4 = r * (one + Ball::from_int(11, prec) * r + Ball::from_int(11, prec) * sqr(r) + pow(r, 3)) /
            pow(one - r, 5);
  Ball e4 = one + Ball::from_int(240, prec) * s4;
  Ball prod_lower = one - r / (one - r);
  if (!prod_lower.is_positive()) throw PrecisionError("quadforms", "q too large for the tail bound");
  Ball j_upper = pow(e4, 3) / (r * pow(prod_lower, 24));
  return j_upper - one / r - Ball::from_int(744, prec);
}

struct TailPlan {
  std::size_t terms;
  Ball bound;
};

// q modulus as a ball: exp(-pi sqrt(|d|) / a).
Ball q_modulus(const QuadraticForm& f, mpfr_prec_t prec) {
  Ball s = sqrt(Ball::from_int(-f.discriminant(), prec));
  return exp(-(Ball::pi(prec) * s / Ball::from_int(f.a, prec)));
}

TailPlan plan_tail(const QuadraticForm& f, mpfr_prec_t prec) {
  const mpfr_prec_t bp = 128;
  Ball q = q_modulus(f, bp);
  Float qhi = q.upper();
  Ball rho = sqrt(Ball::from_endpoints(qhi.get(), qhi.get(), bp));
  Float rhi = rho.upper();
  rho = Ball::from_endpoints(rhi.get(), rhi.get(), bp);
  Ball t = tail_majorant(rho);
  Ball one = Ball::from_int(1, bp);
  Ball geo = t / (one - rho);
  // Aim at 2^(-prec - 8) so the rounding error of the summation dominates.
  double log2_rho = std::log2(rho.to_double());
  double need = (-static_cast<double>(prec) - 8.0 - std::log2(std::max(geo.to_double(), 1e-300))) / log2_rho;
  std::size_t n = static_cast<std::size_t>(std::max(1.0, std::ceil(need)));
  if (n > 20000) throw PrecisionError("quadforms", "series length exceeds budget");
  Ball bound = geo * pow(rho, static_cast<unsigned long>(n + 1));
  return {n, bound};
}

}  // namespace

std::vector<mpz_class> j_series(std::size_t n) {
  std::lock_guard<std::mutex> lock(g_series_mutex);
  if (g_series.size() < n + 1) {
    g_series = compute_j_series(std::max<std::size_t>(n, 2 * g_series.size()));
  }
  return std::vector<mpz_class>(g_series.begin(), g_series.begin() + static_cast<long>(n + 1));
}

std::size_t j_terms(const QuadraticForm& form, mpfr_prec_t prec) { return plan_tail(form, prec).terms; }

CBall eval_j(const QuadraticForm& form, mpfr_prec_t prec) {
  validate_discriminant(form.discriminant());
  if (form.a <= 0) throw InvalidArgument("quadforms", "form must be positive definite");
  TailPlan plan = plan_tail(form, prec);
  const std::size_t n = plan.terms;
  auto s = j_series(n + 1);

  Ball pi = Ball::pi(prec);
  Ball a = Ball::from_int(form.a, prec);
  Ball modulus_log = pi * sqrt(Ball::from_int(-form.discriminant(), prec)) / a;
  Ball angle = pi * Ball::from_int(form.b, prec) / a;
  // q = exp(-modulus_log) e^{-i angle}, 1/q = exp(modulus_log) e^{i angle}
  CBall q = exp_i(-angle) * exp(-modulus_log);
  CBall q_inv = exp_i(angle) * exp(modulus_log);

  CBall acc(prec);
  for (std::size_t k = n; k >= 1; --k) {
    acc = (acc + CBall::from_mpz(s[k + 1], prec)) * q;
  }
  CBall j = q_inv + CBall::from_mpz(744, prec) + acc;
  Float tail = plan.bound.upper();
  j.re.add_error(tail.get());
  j.im.add_error(tail.get());
  if (form.is_ambiguous()) j.im = Ball(prec);

  Float limit(kRadiusPrecision);
  mpfr_set_ui_2exp(limit.get(), 1, -(prec / 2), MPFR_RNDN);
  if (mpfr_greater_p(j.radius().get(), limit.get())) {
    throw PrecisionError("quadforms", "j radius above 2^(-prec/2) for form " + form.to_string());
  }
  return j;
}

// ---------------------------------------------------------------- class polynomials

namespace {

struct Rounded {
  ZPoly poly;
  std::vector<CBall> roots;
};

std::optional<Rounded> round_product(const std::vector<QuadraticForm>& forms, mpfr_prec_t prec) {
  Rounded out;
  std::vector<CBall> coeffs{CBall::from_mpz(1, prec)};
  for (const auto& f : forms) {
    CBall r = eval_j(f, prec);
    out.roots.push_back(r);
    std::vector<CBall> next(coeffs.size() + 1, CBall(prec));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = next[i + 1] + coeffs[i];
      next[i] = next[i] - coeffs[i] * r;
    }
    coeffs = std::move(next);
  }
  std::vector<mpz_class> ints;
  for (const auto& c : coeffs) {
    if (!c.im.contains_zero()) return std::nullopt;
    std::optional<mpz_class> v;
    try {
      v = c.re.unique_integer();
    } catch (const PrecisionError&) {
      return std::nullopt;
    }
    if (!v) return std::nullopt;
    ints.push_back(*v);
  }
  out.poly = ZPoly(std::move(ints));
  return out;
}

std::mutex g_cache_mutex;

std::filesystem::path cache_file(const std::string& dir) {
  return std::filesystem::path(dir) / "classpoly.txt";
}

std::map<long, std::string> read_cache(const std::string& dir) {
  std::map<long, std::string> lines;
  std::ifstream in(cache_file(dir));
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    try {
      long d = std::stol(line.substr(0, colon));
      lines[d] = line.substr(colon + 1);
    } catch (const std::exception&) {
      continue;
    }
  }
  return lines;
}

}  // namespace

std::optional<ZPoly> cache_lookup(const std::string& dir, long d) {
  if (dir.empty()) return std::nullopt;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto lines = read_cache(dir);
  auto it = lines.find(d);
  if (it == lines.end()) return std::nullopt;
  std::vector<mpz_class> coeffs;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t\r");
    if (first == std::string::npos) return std::nullopt;
    mpz_class v;
    if (v.set_str(item.substr(first, last - first + 1), 10) != 0) return std::nullopt;
    coeffs.push_back(v);
  }
  return ZPoly(std::move(coeffs));
}

void cache_store(const std::string& dir, long d, const ZPoly& poly) {
  if (dir.empty()) return;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  std::filesystem::create_directories(dir);
  auto lines = read_cache(dir);
  std::string body = " ";
  for (std::size_t i = 0; i < poly.c.size(); ++i) {
    if (i) body += ",";
    body += poly.c[i].get_str();
  }
  lines[d] = body;
  auto path = cache_file(dir);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) out << it->first << ":" << it->second << "\n";
  }
  std::filesystem::rename(tmp, path);
}

ClassPolynomial hilbert_class_poly(long d, mpfr_prec_t prec, mpfr_prec_t cap, const std::string& cache_dir) {
  validate_discriminant(d);
  if (prec > cap) throw InvalidArgument("quadforms", "base precision exceeds the cap");
  ClassPolynomial out;
  out.discriminant = d;
  out.forms = reduced_forms(d);

  mpfr_prec_t p = prec;
  for (;; p *= 2) {
    if (p > cap) {
      throw PrecisionError("quadforms", "class polynomial rounding ambiguous up to the precision cap");
    }
    std::optional<Rounded> r;
    try {
      r = round_product(out.forms, p);
    } catch (const PrecisionError&) {
      r.reset();
    }
    if (!r) continue;
    // Stability: the same integers must come out at twice the precision.
    std::optional<Rounded> check;
    try {
      check = round_product(out.forms, 2 * p);
    } catch (const PrecisionError&) {
      check.reset();
    }
    if (!check || check->poly != r->poly) continue;
    out.poly = r->poly;
    out.roots = r->roots;
    out.precision = p;
    out.stable = true;
    break;
  }

  for (const auto& root : out.roots) {
    if (!out.poly.eval(root).contains_zero()) {
      throw InvariantViolation("quadforms", "class polynomial does not vanish on a j-value ball");
    }
  }

  if (!cache_dir.empty()) {
    auto cached = cache_lookup(cache_dir, d);
    if (!cached) {
      out.cache_status = "miss, stored";
      cache_store(cache_dir, d, out.poly);
    } else if (*cached == out.poly) {
      out.cache_status = "hit, verified";
    } else {
      out.cache_status = "stale entry replaced";
      cache_store(cache_dir, d, out.poly);
    }
  }
  return out;
}

std::size_t dominant_root(const ClassPolynomial& h) {
  std::optional<std::size_t> real_index;
  for (std::size_t i = 0; i < h.forms.size(); ++i) {
    if (h.forms[i].a == 1) real_index = i;
  }
  if (!real_index) throw InvariantViolation("quadforms", "no principal form");
  Ball dom = abs(h.roots[*real_index]);
  for (std::size_t i = 0; i < h.roots.size(); ++i) {
    if (i == *real_index) continue;
    if (h.roots[i].im.contains_zero()) {
      throw InvariantViolation("quadforms", "a non-principal j-value is not certified non-real");
    }
    if (!certainly_less(abs(h.roots[i]), dom)) {
      throw InvariantViolation("quadforms", "principal j-value is not certified dominant");
    }
  }
  return *real_index;
}

}  // namespace singmod
