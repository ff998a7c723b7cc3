#pragma once

#include <optional>
#include <vector>

#include "nlz/int_polynomial.hpp"

namespace nlz {

unsigned euler_phi(unsigned d);

/// d-th cyclotomic polynomial (memoized).
const IntPolynomial& cyclotomic_polynomial(unsigned d);

/// Largest order d with phi(d) <= bound (for trial-division loops).
std::vector<unsigned> cyclotomic_orders_up_to_phi(unsigned bound);

/// A primitive root of unity zeta = e^(2*pi*i*j/d), gcd(j, d) = 1.
struct CyclotomicPoint {
  unsigned order = 1;
  unsigned exponent = 0;  // reduced mod order
};

/// Element of Q[z]/Phi_d(z); coefficients indexed by power of z, length < phi(d).
class CycloElem {
 public:
  CycloElem() = default;
  CycloElem(unsigned order, std::vector<BigRational> coeffs);

  static CycloElem from_polynomial(const IntPolynomial& f, unsigned order);
  /// z^e mod Phi_d.
  static CycloElem power_of_root(unsigned order, unsigned long e);

  unsigned order() const { return order_; }
  bool is_zero() const;
  bool is_rational(BigRational* out = nullptr) const;

  CycloElem operator+(const CycloElem& rhs) const;
  CycloElem operator-(const CycloElem& rhs) const;
  CycloElem operator*(const CycloElem& rhs) const;
  CycloElem inverse() const;  // throws on zero
  CycloElem conjugate() const;  // z -> z^(-1)

  const std::vector<BigRational>& coeffs() const { return c_; }

 private:
  void reduce(std::vector<BigRational> raw);
  unsigned order_ = 1;
  std::vector<BigRational> c_;
};

/// Evaluate f at zeta = e^(2*pi*i*j/d) exactly: f(z^j) reduced mod Phi_d.
/// The result is zero iff zeta is a root of f.
CycloElem eval_at_root_of_unity(const IntPolynomial& f, const CyclotomicPoint& pt);

/// An exact real number q(2*cos(2*pi*j/d)) with q in Q[x], reduced modulo the
/// minimal polynomial of 2*cos(2*pi/d).  Supports exact sign comparisons.
class RealCycloValue {
 public:
  RealCycloValue() = default;
  RealCycloValue(unsigned d, unsigned j, std::vector<BigRational> cpoly);

  static RealCycloValue from_rational(const BigRational& q);

  bool is_rational(BigRational* out = nullptr) const;
  /// Sign of (value - q): -1, 0, +1.  Exact.
  int compare(const BigRational& q) const;
  double approx() const;

  unsigned order() const { return d_; }

 private:
  unsigned d_ = 1, j_ = 0;
  std::vector<BigRational> cpoly_;  // value = cpoly(2 cos(2 pi j / d))
};

/// Real part of elem under the embedding z -> e^(2*pi*i*j/d).
RealCycloValue real_part(const CycloElem& elem, const CyclotomicPoint& pt);

/// Minimal polynomial of 2*cos(2*pi/d) over Q (memoized).
const IntPolynomial& real_cyclotomic_polynomial(unsigned d);

/// For self-inversive f of even degree 2l (f == reciprocal(f)), the unique
/// G with f(z) = z^l * G(z + 1/z).  Throws if f is not self-inversive.
IntPolynomial half_transform(const IntPolynomial& f);

}  // namespace nlz
