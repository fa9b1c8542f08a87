#pragma once

// Small finite fields F_q = F_p[w]/(g(w)), q = p^f, with p below 2^31.

#include <cstdint>
#include <vector>

namespace singmod {

using FpPoly = std::vector<long>;  // coefficients mod p, low degree first

void fp_trim(FpPoly& a);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p);
FpPoly fp_mod(const FpPoly& a, const FpPoly& m, long p);
FpPoly fp_gcd(FpPoly a, FpPoly b, long p);
FpPoly fp_powmod(const FpPoly& a, unsigned long long e, const FpPoly& m, long p);
long fp_inv(long a, long p);
bool fp_is_irreducible(const FpPoly& g, long p);
// First monic irreducible polynomial of degree f, ordered by sum c_i p^i.
FpPoly first_irreducible(long p, int f);

class FiniteField {
 public:
  using Elem = std::vector<long>;  // f coordinates in the basis 1, w, ..., w^(f-1)

  FiniteField(long p, int f);

  long p() const { return p_; }
  int degree() const { return f_; }
  unsigned long long order() const { return q_; }
  const FpPoly& modulus() const { return modulus_; }

  Elem zero() const { return Elem(f_, 0); }
  Elem one() const;
  Elem from_int(long v) const;
  // Element number `index` in the enumeration 0, 1, ..., q - 1 (base-p digits).
  Elem element(unsigned long long index) const;

  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, unsigned long long e) const;

  // Multiplicative order of a nonzero element.
  unsigned long long order_of(const Elem& a) const;
  Elem generator() const;

  // Polynomials over F_q, coefficients low degree first.
  using Poly = std::vector<Elem>;
  void trim(Poly& a) const;
  Poly poly_mul(const Poly& a, const Poly& b) const;
  Poly poly_mod(const Poly& a, const Poly& m) const;
  Poly poly_div(const Poly& a, const Poly& m) const;
  Poly poly_gcd(Poly a, Poly b) const;
  Poly poly_powmod(const Poly& a, unsigned long long e, const Poly& m) const;
  Elem poly_eval(const Poly& a, const Elem& x) const;

  struct Root {
    Elem value;
    int multiplicity;
  };
  // All roots in F_q with multiplicities, sorted by enumeration index.
  std::vector<Root> roots(const Poly& a) const;
  unsigned long long index_of(const Elem& a) const;

 private:
  long p_;
  int f_;
  unsigned long long q_;
  FpPoly modulus_;
};

std::vector<unsigned long long> prime_factors(unsigned long long n);

}  // namespace singmod
