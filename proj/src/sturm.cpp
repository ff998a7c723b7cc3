#include "nlz/sturm.hpp"

#include <stdexcept>

namespace nlz {

namespace {
int rational_sign(const BigRational& x) { return sgn(x); }

int sign_at(const IntPolynomial& p, const BigRational& x) {
  if (p.is_zero()) return 0;
  return rational_sign(p.evaluate(x));
}

int sign_at_infinity(const IntPolynomial& p, bool positive) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading());
  if (!positive && (p.degree() % 2 != 0)) s = -s;
  return s;
}

int count_variations(const std::vector<int>& signs) {
  int var = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}
}  // namespace

std::vector<IntPolynomial> signed_remainder_chain(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<IntPolynomial> chain;
  if (p.is_zero()) throw std::domain_error("signed_remainder_chain: zero leading polynomial");
  chain.push_back(p.primitive_part());
  if (q.is_zero()) return chain;
  chain.push_back(q.primitive_part());
  while (true) {
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem scales a by lc(b)^(delta+1); keep the chain a positive multiple of
    // the true signed remainder sequence
    long delta = a.degree() - b.degree();
    bool multiplier_negative = (sgn(b.leading()) < 0) && ((delta + 1) % 2 != 0);
    IntPolynomial next = multiplier_negative ? r.primitive_part() : (-r).primitive_part();
    chain.push_back(std::move(next));
  }
  return chain;
}

int sign_variations_at(const std::vector<IntPolynomial>& chain, const BigRational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_at(p, x));
  return count_variations(signs);
}

int sign_variations_at_infinity(const std::vector<IntPolynomial>& chain, bool positive) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_at_infinity(p, positive));
  return count_variations(signs);
}

long cauchy_index(const IntPolynomial& p, const IntPolynomial& q, const BigRational& a,
                  const BigRational& b) {
  if (p.is_zero()) throw std::domain_error("cauchy_index: zero denominator polynomial");
  if (q.is_zero()) return 0;
  if (sign_at(p, a) == 0 || sign_at(p, b) == 0)
    throw std::domain_error("cauchy_index: endpoint is a pole");
  auto chain = signed_remainder_chain(p, q);
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

long cauchy_index_real_line(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero()) throw std::domain_error("cauchy_index: zero denominator polynomial");
  if (q.is_zero()) return 0;
  auto chain = signed_remainder_chain(p, q);
  return sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
}

long count_distinct_roots(const IntPolynomial& squarefree, const BigRational& a, const BigRational& b) {
  if (squarefree.is_zero()) throw std::domain_error("count_distinct_roots: zero polynomial");
  if (squarefree.degree() == 0) return 0;
  return cauchy_index(squarefree, squarefree.derivative(), a, b);
}

long count_roots_with_multiplicity(const IntPolynomial& p, const BigRational& a, const BigRational& b) {
  long total = 0;
  auto parts = squarefree_decomposition(p);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].degree() < 1) continue;
    total += static_cast<long>(j + 1) * count_distinct_roots(parts[j], a, b);
  }
  return total;
}

std::vector<std::pair<BigRational, BigRational>> isolate_roots(const IntPolynomial& squarefree,
                                                               const BigRational& a,
                                                               const BigRational& b) {
  std::vector<std::pair<BigRational, BigRational>> out;
  if (squarefree.degree() < 1) return out;
  auto chain = signed_remainder_chain(squarefree, squarefree.derivative());
  auto var = [&](const BigRational& x) { return sign_variations_at(chain, x); };

  struct Seg {
    BigRational lo, hi;
    int vlo, vhi;
  };
  std::vector<Seg> stack{{a, b, var(a), var(b)}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    int n = s.vlo - s.vhi;
    if (n <= 0) continue;
    if (n == 1 && sign_at(squarefree, s.lo) != 0 && sign_at(squarefree, s.hi) != 0) {
      out.emplace_back(s.lo, s.hi);
      continue;
    }
    BigRational mid = (s.lo + s.hi) / 2;
    while (sign_at(squarefree, mid) == 0) mid = (s.lo + mid) / 2;  // nudge off a root
    int vm = var(mid);
    stack.push_back({mid, s.hi, vm, s.vhi});
    stack.push_back({s.lo, mid, s.vlo, vm});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::pair<BigRational, BigRational> refine_root(const IntPolynomial& squarefree,
                                                std::pair<BigRational, BigRational> iv) {
  BigRational mid = (iv.first + iv.second) / 2;
  int sm = sign_at(squarefree, mid);
  if (sm == 0) {
    // the root is exactly at mid; shrink symmetrically around it
    BigRational w = (iv.second - iv.first) / 4;
    return {mid - w, mid + w};
  }
  int slo = sign_at(squarefree, iv.first);
  if (slo != 0 && slo != sm) return {iv.first, mid};
  return {mid, iv.second};
}

}  // namespace nlz
