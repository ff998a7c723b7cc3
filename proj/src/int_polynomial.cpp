#include "nlz/int_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nlz {

namespace {
const BigInt kZero = 0;

int sign_of(const BigInt& x) { return sgn(x); }

BigInt int_gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  strip();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t power) {
  if (c == 0) return {};
  std::vector<BigInt> v(power + 1, BigInt(0));
  v[power] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

const BigInt& IntPolynomial::constant() const { return coeff(0); }

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> v(coeffs_);
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] -= rhs.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> v(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const BigInt& c) const {
  if (c == 0) return {};
  std::vector<BigInt> v(coeffs_);
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& f) { return f * c; }

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> v(coeffs_.size() + k, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::compose_power(std::size_t k) const {
  if (k == 0) throw std::domain_error("compose_power requires k >= 1");
  if (is_zero() || k == 1) return *this;
  std::vector<BigInt> v((coeffs_.size() - 1) * k + 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational IntPolynomial::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRational(*it);
  return acc;
}

BigInt IntPolynomial::value_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

BigInt IntPolynomial::value_at_minus_one() const {
  BigInt s = 0;
  bool neg = false;
  for (const auto& c : coeffs_) {
    if (neg)
      s -= c;
    else
      s += c;
    neg = !neg;
  }
  return s;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * BigInt(static_cast<long>(i));
  return IntPolynomial(std::move(v));
}

std::size_t IntPolynomial::origin_multiplicity() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k == coeffs_.size() ? 0 : k;
}

IntPolynomial IntPolynomial::without_origin_zeros() const {
  std::size_t k = origin_multiplicity();
  if (k == 0) return *this;
  return IntPolynomial(std::vector<BigInt>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (g == 1) return *this;
  std::vector<BigInt> v(coeffs_);
  for (auto& c : v) c /= g;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::normalized() const {
  IntPolynomial p = primitive_part();
  if (!p.is_zero() && sign_of(p.leading()) < 0) return -p;
  return p;
}

std::size_t IntPolynomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& c : coeffs_) {
    h ^= static_cast<std::size_t>(mpz_get_si(c.get_mpz_t()));
    h *= 1099511628211ull;
  }
  return h;
}

std::string IntPolynomial::to_coeff_string() const {
  bool binary01 = true, pm1 = true;
  for (const auto& c : coeffs_) {
    if (c != 0 && c != 1) binary01 = false;
    if (c != 1 && c != -1) pm1 = false;
  }
  std::ostringstream os;
  if (!is_zero() && binary01) {
    for (const auto& c : coeffs_) os << (c == 1 ? '1' : '0');
  } else if (!is_zero() && pm1) {
    for (const auto& c : coeffs_) os << (c == 1 ? '+' : '-');
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) os << ',';
      os << coeffs_[i].get_str();
    }
  }
  return os.str();
}

std::string IntPolynomial::to_pretty_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (first) {
      if (sign_of(c) < 0) os << "-";
      first = false;
    } else {
      os << (sign_of(c) < 0 ? " - " : " + ");
    }
    if (i == 0)
      os << a.get_str();
    else {
      if (a != 1) os << a.get_str();
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPolynomial reciprocal(const IntPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("reciprocal of the zero polynomial");
  std::vector<BigInt> v(f.coeffs().rbegin(), f.coeffs().rend());
  return IntPolynomial(std::move(v));
}

IntPolynomial rotate(const IntPolynomial& f, long steps) {
  if (f.is_zero()) throw std::domain_error("rotate: zero polynomial");
  for (const auto& c : f.coeffs())
    if (c == 0) throw std::domain_error("rotate: zero coefficient makes rotation non-invertible");
  const long n1 = f.degree() + 1;
  long s = steps % n1;
  if (s < 0) s += n1;
  std::vector<BigInt> v(static_cast<std::size_t>(n1));
  for (long i = 0; i < n1; ++i) v[static_cast<std::size_t>((i + s) % n1)] = f.coeff(static_cast<std::size_t>(i));
  return IntPolynomial(std::move(v));
}

bool is_self_reciprocal(const IntPolynomial& f) {
  if (f.is_zero()) return false;
  return f == reciprocal(f);
}

RationalDivision divide_rational(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<BigRational> rem(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) rem[i] = BigRational(f.coeff(i));
  const long dg = g.degree();
  std::vector<BigRational> quo;
  long dr = static_cast<long>(rem.size()) - 1;
  while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) --dr;
  if (dr >= dg) quo.assign(static_cast<std::size_t>(dr - dg + 1), BigRational(0));
  BigRational lg(g.leading());
  while (dr >= dg) {
    BigRational q = rem[static_cast<std::size_t>(dr)] / lg;
    quo[static_cast<std::size_t>(dr - dg)] = q;
    for (long i = 0; i <= dg; ++i)
      rem[static_cast<std::size_t>(dr - dg + i)] -= q * BigRational(g.coeff(static_cast<std::size_t>(i)));
    while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) --dr;
  }
  rem.resize(static_cast<std::size_t>(dr + 1));
  return {std::move(quo), std::move(rem)};
}

IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.is_zero()) return {};
  RationalDivision d = divide_rational(f, g);
  if (!d.remainder.empty()) throw std::domain_error("exact_divide: division is not exact");
  std::vector<BigInt> v(d.quotient.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (d.quotient[i].get_den() != 1) throw std::domain_error("exact_divide: non-integral quotient");
    v[i] = d.quotient[i].get_num();
  }
  return IntPolynomial(std::move(v));
}

bool divides(const IntPolynomial& g, const IntPolynomial& f) {
  if (g.is_zero()) return f.is_zero();
  if (f.is_zero()) return true;
  if (f.degree() < g.degree()) return false;
  return divide_rational(f, g).remainder.empty();
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  long df = f.degree(), dg = g.degree();
  if (df < dg) return f;
  std::vector<BigInt> rem(f.coeffs().begin(), f.coeffs().end());
  const BigInt& lg = g.leading();
  long dr = df;
  for (long k = df; k >= dg; --k) {
    // multiply the whole remainder by lc(g), then cancel the top term
    BigInt top = rem[static_cast<std::size_t>(k)];
    for (long i = 0; i <= dr; ++i)
      if (i != k) rem[static_cast<std::size_t>(i)] *= lg;
    rem[static_cast<std::size_t>(k)] = 0;
    if (top != 0)
      for (long i = 0; i < dg; ++i)
        rem[static_cast<std::size_t>(k - dg + i)] -= top * g.coeff(static_cast<std::size_t>(i));
  }
  rem.resize(static_cast<std::size_t>(dg));
  return IntPolynomial(std::move(rem));
}

IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0)");
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  IntPolynomial a = f.normalized(), b = g.normalized();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.normalized();
}

BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  if (f.degree() == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), f.leading().get_mpz_t(), static_cast<unsigned long>(g.degree()));
    return r;
  }
  if (g.degree() == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(f.degree()));
    return r;
  }
  // subresultant scheme (Cohen, Alg. 3.3.7)
  IntPolynomial A = f, B = g;
  int s = 1;
  if (A.degree() < B.degree()) {
    if ((A.degree() % 2) && (B.degree() % 2)) s = -s;
    std::swap(A, B);
  }
  BigInt ca = A.content(), cb = B.content();
  A = A.primitive_part();
  B = B.primitive_part();
  BigInt t, tmp;
  mpz_pow_ui(t.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(B.degree()));
  mpz_pow_ui(tmp.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(A.degree()));
  t *= tmp;
  BigInt gcoef = 1, h = 1;
  while (true) {
    long delta = A.degree() - B.degree();
    if ((A.degree() % 2) && (B.degree() % 2)) s = -s;
    IntPolynomial R = pseudo_remainder(A, B);
    if (R.is_zero()) return 0;  // deg B >= 1 here, so a common factor exists
    A = B;
    BigInt div = gcoef;
    mpz_pow_ui(tmp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    div *= tmp;
    {
      std::vector<BigInt> v(R.coeffs().begin(), R.coeffs().end());
      for (auto& c : v) {
        BigInt q, rr;
        mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
        if (rr != 0) throw std::logic_error("subresultant: non-exact division");
        c = q;
      }
      B = IntPolynomial(std::move(v));
    }
    gcoef = A.leading();
    if (delta > 0) {
      BigInt gd;
      mpz_pow_ui(gd.get_mpz_t(), gcoef.get_mpz_t(), static_cast<unsigned long>(delta));
      if (delta > 1) {
        BigInt hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
        BigInt q, rr;
        mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
        if (rr != 0) throw std::logic_error("subresultant: non-exact h update");
        h = q;
      } else {
        h = gd;
      }
    }
    if (B.degree() == 0) break;
  }
  // B is a nonzero constant now
  long l = A.degree();
  BigInt bl;
  mpz_pow_ui(bl.get_mpz_t(), B.leading().get_mpz_t(), static_cast<unsigned long>(l));
  BigInt hl1;
  if (l > 1) {
    mpz_pow_ui(hl1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(l - 1));
    BigInt q, rr;
    mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), bl.get_mpz_t(), hl1.get_mpz_t());
    if (rr != 0) throw std::logic_error("subresultant: non-exact final division");
    bl = q;
  }
  return s * t * bl;
}

IntPolynomial resultant_linear_parameter(const IntPolynomial& r, const IntPolynomial& a,
                                         const IntPolynomial& b) {
  if (r.is_zero()) return {};
  const long dz = r.degree();
  std::vector<BigInt> xs, ys;
  xs.reserve(static_cast<std::size_t>(dz + 1));
  for (long i = 0; i <= dz; ++i) {
    BigInt z0(i);
    xs.push_back(z0);
    ys.push_back(resultant(r, a - b * z0));
  }
  // Lagrange interpolation over Q; the result is an integer polynomial.
  std::vector<BigRational> acc(xs.size(), BigRational(0));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<BigRational> basis{BigRational(1)};
    BigRational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      std::vector<BigRational> nb(basis.size() + 1, BigRational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        nb[k] -= basis[k] * BigRational(xs[j]);
        nb[k + 1] += basis[k];
      }
      basis = std::move(nb);
      denom *= BigRational(xs[i]) - BigRational(xs[j]);
    }
    BigRational w = BigRational(ys[i]) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * w;
  }
  std::vector<BigInt> out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k].get_den() != 1) throw std::logic_error("resultant interpolation: non-integer result");
    out[k] = acc[k].get_num();
  }
  return IntPolynomial(std::move(out));
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& f) {
  std::vector<IntPolynomial> parts;
  if (f.is_zero() || f.degree() == 0) return parts;
  IntPolynomial p = f.normalized();
  IntPolynomial d = p.derivative();
  IntPolynomial g = gcd(p, d);
  IntPolynomial c = exact_divide(p, g);
  IntPolynomial w = exact_divide(d, g) - c.derivative();
  while (!(c.degree() == 0)) {
    IntPolynomial ai = gcd(c, w);
    parts.push_back(ai);
    c = exact_divide(c, ai);
    w = exact_divide(w, ai) - c.derivative();
  }
  return parts;
}

IntPolynomial parse_polynomial(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty polynomial string");
  bool has_comma = text.find(',') != std::string::npos;
  bool has_sign_alphabet = text.find_first_of("+-") != std::string::npos;
  std::vector<BigInt> v;
  if (has_comma) {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) v.emplace_back(tok);
  } else if (has_sign_alphabet) {
    for (char ch : text) {
      if (ch == '+')
        v.emplace_back(1);
      else if (ch == '-')
        v.emplace_back(-1);
      else
        throw std::invalid_argument("bad character in +/- coefficient string");
    }
  } else {
    for (char ch : text) {
      if (ch == '0')
        v.emplace_back(0);
      else if (ch == '1')
        v.emplace_back(1);
      else
        throw std::invalid_argument("bad character in 0/1 coefficient string");
    }
  }
  return IntPolynomial(std::move(v));
}

}  // namespace nlz
