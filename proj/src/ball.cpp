#include "ball.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "errors.hpp"

namespace singmod {

// ---------------------------------------------------------------- Float

Float::Float(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Float::Float(const Float& other) {
  mpfr_init2(value_, other.prec());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Float::Float(Float&& other) noexcept {
  mpfr_init2(value_, other.prec());
  mpfr_swap(value_, other.value_);
}

Float& Float::operator=(const Float& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.prec());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Float& Float::operator=(Float&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

Float::~Float() { mpfr_clear(value_); }

std::string Float::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

// ---------------------------------------------------------------- helpers

namespace {

// Adds an upper bound for |exact - mid| to rad when the operation producing
// mid was inexact. For a correctly rounded result one ulp is more than enough.
void add_rounding(mpfr_ptr rad, mpfr_srcptr mid, int ternary) {
  if (ternary == 0) return;
  Float e(kRadiusPrecision);
  if (mpfr_zero_p(mid)) {
    mpfr_set_ui_2exp(e.get(), 1, mpfr_get_emin(), MPFR_RNDU);
  } else {
    mpfr_set_ui_2exp(e.get(), 1, mpfr_get_exp(mid) - mpfr_get_prec(mid), MPFR_RNDU);
  }
  mpfr_add(rad, rad, e.get(), MPFR_RNDU);
}

Float abs_up(mpfr_srcptr x) {
  Float out(kRadiusPrecision);
  mpfr_abs(out.get(), x, MPFR_RNDU);
  return out;
}

mpfr_prec_t join(const Ball& a, const Ball& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

class BallOps {
 public:
  static Float& mid(Ball& b) { return b.mid_; }
  static Float& rad(Ball& b) { return b.rad_; }
};

// ---------------------------------------------------------------- Ball

Ball::Ball(mpfr_prec_t prec) : mid_(prec), rad_(kRadiusPrecision) {}

Ball Ball::from_int(long value, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_si(b.mid_.get(), value, MPFR_RNDN);
  add_rounding(b.rad_.get(), b.mid_.get(), t);
  return b;
}

Ball Ball::from_mpz(const mpz_class& value, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_z(b.mid_.get(), value.get_mpz_t(), MPFR_RNDN);
  add_rounding(b.rad_.get(), b.mid_.get(), t);
  return b;
}

Ball Ball::from_mpq(const mpq_class& value, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_q(b.mid_.get(), value.get_mpq_t(), MPFR_RNDN);
  add_rounding(b.rad_.get(), b.mid_.get(), t);
  return b;
}

Ball Ball::from_decimal(std::string_view text, mpfr_prec_t prec) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  mpz_class num = 0;
  mpz_class den = 1;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if ((ch == 'e' || ch == 'E') && seen_digit) break;
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw InvalidArgument("ball", "malformed decimal literal: " + std::string(text));
    }
    seen_digit = true;
    num = num * 10 + (ch - '0');
    if (seen_point) den *= 10;
  }
  if (!seen_digit) throw InvalidArgument("ball", "empty decimal literal");
  if (i < text.size()) {
    std::string_view rest = text.substr(i + 1);
    bool neg_exp = false;
    std::size_t j = 0;
    if (j < rest.size() && (rest[j] == '-' || rest[j] == '+')) {
      neg_exp = rest[j] == '-';
      ++j;
    }
    if (j == rest.size()) throw InvalidArgument("ball", "malformed decimal literal: " + std::string(text));
    unsigned long e10 = 0;
    for (; j < rest.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(rest[j])) || e10 > 100000) {
        throw InvalidArgument("ball", "malformed decimal literal: " + std::string(text));
      }
      e10 = e10 * 10 + static_cast<unsigned long>(rest[j] - '0');
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, e10);
    if (neg_exp) den *= scale;
    else num *= scale;
  }
  mpq_class q(negative ? mpz_class(-num) : num, den);
  q.canonicalize();
  return from_mpq(q, prec);
}

Ball Ball::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
  Ball b(prec);
  mpfr_add(b.mid_.get(), lo, hi, MPFR_RNDN);
  mpfr_div_2ui(b.mid_.get(), b.mid_.get(), 1, MPFR_RNDN);
  Float up(kRadiusPrecision);
  Float down(kRadiusPrecision);
  mpfr_sub(up.get(), hi, b.mid_.get(), MPFR_RNDU);
  mpfr_sub(down.get(), b.mid_.get(), lo, MPFR_RNDU);
  mpfr_max(b.rad_.get(), up.get(), down.get(), MPFR_RNDU);
  if (mpfr_sgn(b.rad_.get()) < 0) mpfr_set_zero(b.rad_.get(), 1);
  return b;
}

Ball Ball::pi(mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_const_pi(b.mid_.get(), MPFR_RNDN);
  add_rounding(b.rad_.get(), b.mid_.get(), t);
  return b;
}

Ball Ball::log_const(unsigned long value, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_log_ui(b.mid_.get(), value, MPFR_RNDN);
  add_rounding(b.rad_.get(), b.mid_.get(), t);
  return b;
}

Float Ball::lower() const {
  Float out(prec());
  mpfr_sub(out.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return out;
}

Float Ball::upper() const {
  Float out(prec());
  mpfr_add(out.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return out;
}

bool Ball::contains_zero() const { return !is_positive() && !is_negative(); }

bool Ball::is_positive() const { return mpfr_sgn(lower().get()) > 0; }

bool Ball::is_negative() const { return mpfr_sgn(upper().get()) < 0; }

bool Ball::contains(const mpz_class& value) const {
  return mpfr_cmp_z(lower().get(), value.get_mpz_t()) <= 0 &&
         mpfr_cmp_z(upper().get(), value.get_mpz_t()) >= 0;
}

bool Ball::contains(const mpq_class& value) const {
  return mpfr_cmp_q(lower().get(), value.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(upper().get(), value.get_mpq_t()) >= 0;
}

bool Ball::overlaps(const Ball& other) const {
  return mpfr_lessequal_p(lower().get(), other.upper().get()) &&
         mpfr_lessequal_p(other.lower().get(), upper().get());
}

std::optional<mpz_class> Ball::unique_integer() const {
  if (!mpfr_number_p(mid_.get()) || !mpfr_number_p(rad_.get())) {
    throw PrecisionError("ball", "non-finite ball");
  }
  mpz_class lo;
  mpz_class hi;
  mpfr_get_z(lo.get_mpz_t(), lower().get(), MPFR_RNDU);
  mpfr_get_z(hi.get_mpz_t(), upper().get(), MPFR_RNDD);
  if (lo > hi) return std::nullopt;
  if (lo != hi) throw PrecisionError("ball", "ball contains several integers: " + to_string(10));
  return lo;
}

mpz_class Ball::certified_floor() const {
  mpz_class lo;
  mpz_class hi;
  mpfr_get_z(lo.get_mpz_t(), lower().get(), MPFR_RNDD);
  mpfr_get_z(hi.get_mpz_t(), upper().get(), MPFR_RNDD);
  if (lo != hi) throw PrecisionError("ball", "floor undecided for " + to_string(10));
  return lo;
}

std::string Ball::to_string(int digits) const {
  return "[" + mid_.to_string(digits) + " +/- " + rad_.to_string(3) + "]";
}

Ball& Ball::add_error(mpfr_srcptr err) {
  mpfr_add(rad_.get(), rad_.get(), err, MPFR_RNDU);
  return *this;
}

Ball Ball::with_precision(mpfr_prec_t prec) const {
  Ball b(prec);
  int t = mpfr_set(b.mid_.get(), mid_.get(), MPFR_RNDN);
  mpfr_set(b.rad_.get(), rad_.get(), MPFR_RNDU);
  add_rounding(b.rad_.get(), b.mid_.get(), t);
  return b;
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball r(join(a, b));
  int t = mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  add_rounding(r.rad_.get(), r.mid_.get(), t);
  return r;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball r(join(a, b));
  int t = mpfr_sub(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  add_rounding(r.rad_.get(), r.mid_.get(), t);
  return r;
}

Ball operator-(const Ball& a) {
  Ball r(a.prec());
  mpfr_neg(r.mid_.get(), a.mid_.get(), MPFR_RNDN);
  mpfr_set(r.rad_.get(), a.rad_.get(), MPFR_RNDU);
  return r;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball r(join(a, b));
  int t = mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  Float am = abs_up(a.mid_.get());
  Float bm = abs_up(b.mid_.get());
  Float tmp(kRadiusPrecision);
  mpfr_mul(r.rad_.get(), am.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_mul(tmp.get(), bm.get(), a.rad_.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), r.rad_.get(), tmp.get(), MPFR_RNDU);
  mpfr_mul(tmp.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), r.rad_.get(), tmp.get(), MPFR_RNDU);
  add_rounding(r.rad_.get(), r.mid_.get(), t);
  return r;
}

Ball operator/(const Ball& a, const Ball& b) {
  if (b.contains_zero()) throw PrecisionError("ball", "division by a ball containing zero");
  Ball r(join(a, b));
  int t = mpfr_div(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  if (!a.is_exact() || !b.is_exact()) {
    // |x/y - ma/mb| <= (ra + |ma/mb| rb) / (|mb| - rb)
    Float bm(kRadiusPrecision);
    mpfr_abs(bm.get(), b.mid_.get(), MPFR_RNDD);
    Float q(kRadiusPrecision);
    mpfr_div(q.get(), abs_up(a.mid_.get()).get(), bm.get(), MPFR_RNDU);
    Float num(kRadiusPrecision);
    mpfr_mul(num.get(), q.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(num.get(), num.get(), a.rad_.get(), MPFR_RNDU);
    Float den(kRadiusPrecision);
    mpfr_abs(den.get(), b.mid_.get(), MPFR_RNDD);
    mpfr_sub(den.get(), den.get(), b.rad_.get(), MPFR_RNDD);
    mpfr_div(r.rad_.get(), num.get(), den.get(), MPFR_RNDU);
  }
  add_rounding(r.rad_.get(), r.mid_.get(), t);
  return r;
}

// ---------------------------------------------------------------- functions

Ball sqr(const Ball& x) {
  Ball r(x.prec());
  Float& rm = BallOps::mid(r);
  Float& rr = BallOps::rad(r);
  int t = mpfr_sqr(rm.get(), x.mid().get(), MPFR_RNDN);
  Float am = abs_up(x.mid().get());
  Float tmp(kRadiusPrecision);
  mpfr_mul(rr.get(), am.get(), x.rad().get(), MPFR_RNDU);
  mpfr_mul_2ui(rr.get(), rr.get(), 1, MPFR_RNDU);
  mpfr_sqr(tmp.get(), x.rad().get(), MPFR_RNDU);
  mpfr_add(rr.get(), rr.get(), tmp.get(), MPFR_RNDU);
  add_rounding(rr.get(), rm.get(), t);
  if (x.contains_zero()) {
    // The square is non-negative: clip the enclosure at zero.
    Float lo(x.prec());
    Float hi = r.upper();
    return Ball::from_endpoints(lo.get(), hi.get(), x.prec());
  }
  return r;
}

Ball sqrt(const Ball& x) {
  if (x.is_negative()) throw InvalidArgument("ball", "sqrt of a negative ball");
  Float lo = x.lower();
  Float hi = x.upper();
  if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo.get(), 1);
  mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
  return Ball::from_endpoints(lo.get(), hi.get(), x.prec());
}

Ball exp(const Ball& x) {
  Float lo = x.lower();
  Float hi = x.upper();
  mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  return Ball::from_endpoints(lo.get(), hi.get(), x.prec());
}

Ball log(const Ball& x) {
  if (!x.is_positive()) throw PrecisionError("ball", "log of a ball not certified positive");
  Float lo = x.lower();
  Float hi = x.upper();
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  return Ball::from_endpoints(lo.get(), hi.get(), x.prec());
}

Ball cos(const Ball& x) {
  Ball r(x.prec());
  int t = mpfr_cos(BallOps::mid(r).get(), x.mid().get(), MPFR_RNDN);
  mpfr_set(BallOps::rad(r).get(), x.rad().get(), MPFR_RNDU);
  add_rounding(BallOps::rad(r).get(), BallOps::mid(r).get(), t);
  return r;
}

Ball sin(const Ball& x) {
  Ball r(x.prec());
  int t = mpfr_sin(BallOps::mid(r).get(), x.mid().get(), MPFR_RNDN);
  mpfr_set(BallOps::rad(r).get(), x.rad().get(), MPFR_RNDU);
  add_rounding(BallOps::rad(r).get(), BallOps::mid(r).get(), t);
  return r;
}

Ball abs(const Ball& x) {
  if (mpfr_sgn(x.mid().get()) >= 0) return x;
  return -x;
}

Ball pow(const Ball& x, unsigned long n) {
  Ball result = Ball::from_int(1, x.prec());
  Ball base = x;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = sqr(base);
  }
  return result;
}

Ball max_with_one(const Ball& x) {
  Float lo = x.lower();
  Float hi = x.upper();
  if (mpfr_cmp_ui(lo.get(), 1) < 0) mpfr_set_ui(lo.get(), 1, MPFR_RNDN);
  if (mpfr_cmp_ui(hi.get(), 1) < 0) mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
  return Ball::from_endpoints(lo.get(), hi.get(), x.prec());
}

Ball scale_2exp(const Ball& x, long e) {
  Ball r = x;
  mpfr_mul_2si(BallOps::mid(r).get(), x.mid().get(), e, MPFR_RNDN);
  mpfr_mul_2si(BallOps::rad(r).get(), x.rad().get(), e, MPFR_RNDU);
  return r;
}

bool certainly_less(const Ball& a, const Ball& b) {
  return mpfr_less_p(a.upper().get(), b.lower().get()) != 0;
}

bool certainly_less_equal(const Ball& a, const Ball& b) {
  return mpfr_lessequal_p(a.upper().get(), b.lower().get()) != 0;
}

// ---------------------------------------------------------------- CBall

CBall CBall::from_real(const Ball& x) { return CBall(x, Ball(x.prec())); }

CBall CBall::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
  return CBall(Ball::from_mpz(v, prec), Ball(prec));
}

CBall CBall::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
  return CBall(Ball::from_mpq(v, prec), Ball(prec));
}

Float CBall::radius() const {
  Float out(kRadiusPrecision);
  Float tmp(kRadiusPrecision);
  mpfr_sqr(out.get(), re.rad().get(), MPFR_RNDU);
  mpfr_sqr(tmp.get(), im.rad().get(), MPFR_RNDU);
  mpfr_add(out.get(), out.get(), tmp.get(), MPFR_RNDU);
  mpfr_sqrt(out.get(), out.get(), MPFR_RNDU);
  return out;
}

std::string CBall::to_string(int digits) const {
  return re.to_string(digits) + " + " + im.to_string(digits) + "*I";
}

CBall operator+(const CBall& a, const CBall& b) { return CBall(a.re + b.re, a.im + b.im); }

CBall operator-(const CBall& a, const CBall& b) { return CBall(a.re - b.re, a.im - b.im); }

CBall operator-(const CBall& a) { return CBall(-a.re, -a.im); }

CBall operator*(const CBall& a, const CBall& b) {
  if (b.im.is_exact() && mpfr_zero_p(b.im.mid().get())) return CBall(a.re * b.re, a.im * b.re);
  return CBall(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

CBall operator*(const CBall& a, const Ball& b) { return CBall(a.re * b, a.im * b); }

CBall conj(const CBall& z) { return CBall(z.re, -z.im); }

Ball norm(const CBall& z) { return sqr(z.re) + sqr(z.im); }

Ball abs(const CBall& z) { return sqrt(norm(z)); }

CBall inverse(const CBall& z) {
  Ball n = norm(z);
  if (n.contains_zero()) throw PrecisionError("ball", "inverse of a complex ball containing zero");
  return CBall(z.re / n, -(z.im / n));
}

CBall operator/(const CBall& a, const CBall& b) {
  if (b.im.is_exact() && mpfr_zero_p(b.im.mid().get())) return CBall(a.re / b.re, a.im / b.re);
  return a * inverse(b);
}

CBall pow(const CBall& z, unsigned long n) {
  CBall result = CBall::from_mpz(1, z.prec());
  CBall base = z;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

CBall exp_i(const Ball& theta) { return CBall(cos(theta), sin(theta)); }

CBall with_precision(const CBall& z, mpfr_prec_t prec) {
  return CBall(z.re.with_precision(prec), z.im.with_precision(prec));
}

CBall midpoint(const CBall& z) {
  CBall out(z.prec());
  Float re = z.re.mid();
  Float im = z.im.mid();
  out.re = Ball::from_endpoints(re.get(), re.get(), z.prec());
  out.im = Ball::from_endpoints(im.get(), im.get(), z.prec());
  return out;
}

}  // namespace singmod
