#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace nlz {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dense univariate polynomial over Z, indexed by power of z.
///
/// The zero polynomial is the empty coefficient vector; otherwise the
/// trailing (leading-power) entry is nonzero and degree() == size()-1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial({1}); }
  static IntPolynomial monomial(const BigInt& c, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is reported as -1
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of z^i (zero outside the stored range).
  const BigInt& coeff(std::size_t i) const;
  std::span<const BigInt> coeffs() const { return coeffs_; }
  const BigInt& leading() const;
  const BigInt& constant() const;

  IntPolynomial operator-() const;
  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const BigInt& c) const;
  bool operator==(const IntPolynomial& rhs) const = default;

  /// Multiply by z^k.
  IntPolynomial shifted(std::size_t k) const;
  /// Substitute z -> z^k (k >= 1).
  IntPolynomial compose_power(std::size_t k) const;

  BigInt evaluate(const BigInt& x) const;
  BigRational evaluate(const BigRational& x) const;
  /// Sum of coefficients, i.e. f(1).
  BigInt value_at_one() const;
  BigInt value_at_minus_one() const;

  IntPolynomial derivative() const;

  /// Number of trailing origin zeros (largest k with z^k | f); 0 for f = 0.
  std::size_t origin_multiplicity() const;
  /// f / z^origin_multiplicity.
  IntPolynomial without_origin_zeros() const;

  /// gcd of all coefficients, positive; 0 for the zero polynomial.
  BigInt content() const;
  IntPolynomial primitive_part() const;
  /// Primitive part with positive leading coefficient.
  IntPolynomial normalized() const;

  std::size_t hash() const;

  std::string to_coeff_string() const;  // "110101" / "+-++" / "1,0,-2"
  std::string to_pretty_string() const; // "1 + z - 2z^3"

 private:
  void strip();
  std::vector<BigInt> coeffs_;
};

IntPolynomial operator*(const BigInt& c, const IntPolynomial& f);

/// Coefficient reversal z^deg(f) * f(1/z); involution when f(0) != 0.
IntPolynomial reciprocal(const IntPolynomial& f);

/// Cyclic shift of the coefficient vector, positive steps = forward
/// rotation.  Requires every coefficient nonzero (invertibility).
IntPolynomial rotate(const IntPolynomial& f, long steps);

bool is_self_reciprocal(const IntPolynomial& f);

/// Quotient and remainder over Q; divisor nonzero.
struct RationalDivision {
  std::vector<BigRational> quotient;
  std::vector<BigRational> remainder;
};
RationalDivision divide_rational(const IntPolynomial& f, const IntPolynomial& g);

/// Exact division in Z[z]; throws std::domain_error when g does not divide f.
IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g);
bool divides(const IntPolynomial& g, const IntPolynomial& f);

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g);

/// Primitive gcd with positive leading coefficient; gcd(0,0) is a domain error.
IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g);

/// Resultant of f and g (subresultant algorithm, exact).
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g);

/// Res_w(r(w), a(w) - z*b(w)) as a polynomial in z, computed by
/// evaluation-interpolation.  Degree bound deg_w r.
IntPolynomial resultant_linear_parameter(const IntPolynomial& r,
                                         const IntPolynomial& a,
                                         const IntPolynomial& b);

/// Squarefree (Yun) decomposition: f ~ prod parts[j]^(j+1) up to content.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& f);

/// Parse "110101", "+-++--", or a comma-separated integer list, low to high.
IntPolynomial parse_polynomial(const std::string& text);

}  // namespace nlz
