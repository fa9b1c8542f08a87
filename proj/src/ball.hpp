#pragma once

// Midpoint-radius ("ball") arithmetic over MPFR.
//
// A Ball is a midpoint m at working precision together with a radius r kept
// at 64 bits and always rounded upward; it denotes the closed interval
// [m - r, m + r]. Every operation returns a ball that contains the exact
// result of the operation applied to any points of the inputs.

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <string_view>

namespace singmod {

inline constexpr mpfr_prec_t kDefaultPrecision = 256;
inline constexpr mpfr_prec_t kRadiusPrecision = 64;

// Owning wrapper around mpfr_t.
class Float {
 public:
  explicit Float(mpfr_prec_t prec = kRadiusPrecision);
  Float(const Float& other);
  Float(Float&& other) noexcept;
  Float& operator=(const Float& other);
  Float& operator=(Float&& other) noexcept;
  ~Float();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t value_;
};

class Ball {
 public:
  explicit Ball(mpfr_prec_t prec = kDefaultPrecision);

  static Ball from_int(long value, mpfr_prec_t prec = kDefaultPrecision);
  static Ball from_mpz(const mpz_class& value, mpfr_prec_t prec = kDefaultPrecision);
  static Ball from_mpq(const mpq_class& value, mpfr_prec_t prec = kDefaultPrecision);
  // Exact decimal literal such as "4973.14" or "-0.96".
  static Ball from_decimal(std::string_view text, mpfr_prec_t prec = kDefaultPrecision);
  // Ball with the given endpoints (lo <= hi), outward rounded.
  static Ball from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec);
  static Ball pi(mpfr_prec_t prec = kDefaultPrecision);
  static Ball log_const(unsigned long value, mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t prec() const { return mid_.prec(); }
  const Float& mid() const { return mid_; }
  const Float& rad() const { return rad_; }

  // Outward-rounded endpoints at working precision.
  Float lower() const;
  Float upper() const;

  bool contains_zero() const;
  bool is_positive() const;  // every point > 0
  bool is_negative() const;  // every point < 0
  bool contains(const mpz_class& value) const;
  bool contains(const mpq_class& value) const;
  bool overlaps(const Ball& other) const;
  bool is_exact() const { return mpfr_zero_p(rad_.get()) != 0; }

  // The single integer in the ball, or nullopt if it holds none.
  // Throws PrecisionError when the ball holds two or more integers.
  std::optional<mpz_class> unique_integer() const;

  // Integer n with floor(x) = n for every point x of the ball.
  // Throws PrecisionError when the ball straddles an integer.
  mpz_class certified_floor() const;

  double to_double() const { return mid_.to_double(); }
  std::string to_string(int digits = 20) const;

  Ball& add_error(mpfr_srcptr err);
  Ball with_precision(mpfr_prec_t prec) const;

  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a);

 private:
  Float mid_;
  Float rad_;

  friend class BallOps;
};

Ball sqr(const Ball& x);
Ball sqrt(const Ball& x);
Ball exp(const Ball& x);
Ball log(const Ball& x);
Ball cos(const Ball& x);
Ball sin(const Ball& x);
Ball abs(const Ball& x);
Ball pow(const Ball& x, unsigned long n);
Ball max_with_one(const Ball& x);  // max(1, x)
Ball scale_2exp(const Ball& x, long e);

// Strict certified comparisons: true only if the relation holds for every
// pair of points; false when it fails or cannot be decided.
bool certainly_less(const Ball& a, const Ball& b);
bool certainly_less_equal(const Ball& a, const Ball& b);

// Complex ball as a pair of real balls (rectangular enclosure).
struct CBall {
  Ball re;
  Ball im;

  explicit CBall(mpfr_prec_t prec = kDefaultPrecision) : re(prec), im(prec) {}
  CBall(Ball real, Ball imag) : re(std::move(real)), im(std::move(imag)) {}

  static CBall from_real(const Ball& x);
  static CBall from_mpz(const mpz_class& v, mpfr_prec_t prec = kDefaultPrecision);
  static CBall from_mpq(const mpq_class& v, mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t prec() const { return re.prec(); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool overlaps(const CBall& o) const { return re.overlaps(o.re) && im.overlaps(o.im); }
  // Upper bound on the distance from the centre to any point of the box.
  Float radius() const;
  std::string to_string(int digits = 20) const;
};

CBall operator+(const CBall& a, const CBall& b);
CBall operator-(const CBall& a, const CBall& b);
CBall operator-(const CBall& a);
CBall operator*(const CBall& a, const CBall& b);
CBall operator*(const CBall& a, const Ball& b);
CBall operator/(const CBall& a, const CBall& b);
CBall conj(const CBall& z);
CBall inverse(const CBall& z);
CBall pow(const CBall& z, unsigned long n);
Ball norm(const CBall& z);  // |z|^2
Ball abs(const CBall& z);
CBall exp_i(const Ball& theta);  // cos(theta) + i sin(theta)
CBall with_precision(const CBall& z, mpfr_prec_t prec);
// Centre of z as an exact ball (radius dropped); used only for iterates that
// are certified separately.
CBall midpoint(const CBall& z);

}  // namespace singmod
