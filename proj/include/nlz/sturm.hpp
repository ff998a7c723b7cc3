#pragma once

#include <utility>
#include <vector>

#include "nlz/int_polynomial.hpp"

namespace nlz {

/// Signed remainder chain of (p, q): each element is a positive multiple of
/// the corresponding term of the classical sequence S0 = p, S1 = q,
/// S(k+1) = -rem(S(k-1), S(k)).  Stored as primitive integer polynomials.
std::vector<IntPolynomial> signed_remainder_chain(const IntPolynomial& p, const IntPolynomial& q);

int sign_variations_at(const std::vector<IntPolynomial>& chain, const BigRational& x);
int sign_variations_at_infinity(const std::vector<IntPolynomial>& chain, bool positive);

/// Cauchy index of q/p over the open interval (a, b); requires p(a), p(b) != 0.
long cauchy_index(const IntPolynomial& p, const IntPolynomial& q, const BigRational& a,
                  const BigRational& b);
/// Cauchy index of q/p over the whole real line.
long cauchy_index_real_line(const IntPolynomial& p, const IntPolynomial& q);

/// Number of distinct real roots of squarefree p in (a, b); p(a), p(b) != 0.
long count_distinct_roots(const IntPolynomial& squarefree, const BigRational& a, const BigRational& b);

/// Number of real roots of p in (a, b) counted with multiplicity.
long count_roots_with_multiplicity(const IntPolynomial& p, const BigRational& a, const BigRational& b);

/// Disjoint isolating intervals (lo, hi), one per distinct real root of the
/// squarefree polynomial in (a, b), ordered by increasing root.
std::vector<std::pair<BigRational, BigRational>> isolate_roots(const IntPolynomial& squarefree,
                                                               const BigRational& a,
                                                               const BigRational& b);

/// Halve an isolating interval for the unique root of squarefree p inside it.
std::pair<BigRational, BigRational> refine_root(const IntPolynomial& squarefree,
                                                std::pair<BigRational, BigRational> iv);

}  // namespace nlz
