#include "nlz/pattern.hpp"

#include <stdexcept>

namespace nlz {

Alphabet alphabet_of(CoeffClass cls) {
  return cls == CoeffClass::Newman ? Alphabet::Binary01 : Alphabet::PlusMinus;
}

CoeffClass class_of(Alphabet a) {
  return a == Alphabet::Binary01 ? CoeffClass::Newman : CoeffClass::Littlewood;
}

const char* class_name(CoeffClass cls) { return cls == CoeffClass::Newman ? "newman" : "littlewood"; }

bool is_class_member(const IntPolynomial& f, CoeffClass cls) {
  if (f.is_zero()) return false;
  if (cls == CoeffClass::Newman) {
    if (f.constant() != 1 || f.leading() != 1) return false;
    for (const auto& c : f.coeffs())
      if (c != 0 && c != 1) return false;
    return true;
  }
  for (const auto& c : f.coeffs())
    if (c != 1 && c != -1) return false;
  return true;
}

std::string pattern_word(const Pattern& p, std::size_t m) {
  if (p.period.empty() && m > 0) throw std::domain_error("pattern: empty period with m > 0");
  std::string w;
  w.reserve(p.prefix.size() + m * p.period.size() + p.suffix.size());
  w += p.prefix;
  for (std::size_t i = 0; i < m; ++i) w += p.period;
  w += p.suffix;
  return w;
}

IntPolynomial polynomial_from_word(const std::string& word, Alphabet a) {
  std::vector<BigInt> v;
  v.reserve(word.size());
  for (char ch : word) {
    if (a == Alphabet::Binary01) {
      if (ch == '0')
        v.emplace_back(0);
      else if (ch == '1')
        v.emplace_back(1);
      else
        throw std::invalid_argument("word: expected 0/1");
    } else {
      if (ch == '+')
        v.emplace_back(1);
      else if (ch == '-')
        v.emplace_back(-1);
      else
        throw std::invalid_argument("word: expected +/-");
    }
  }
  return IntPolynomial(std::move(v));
}

std::string word_from_polynomial(const IntPolynomial& f, Alphabet a) {
  std::string w;
  for (const auto& c : f.coeffs()) {
    if (a == Alphabet::Binary01) {
      if (c == 0)
        w += '0';
      else if (c == 1)
        w += '1';
      else
        throw std::invalid_argument("polynomial is not a 0/1 polynomial");
    } else {
      if (c == 1)
        w += '+';
      else if (c == -1)
        w += '-';
      else
        throw std::invalid_argument("polynomial is not a +/-1 polynomial");
    }
  }
  return w;
}

bool is_valid_class_word(const std::string& word, Alphabet a) {
  if (word.empty()) return false;
  if (a == Alphabet::Binary01) {
    if (word.front() != '1' || word.back() != '1') return false;
    for (char ch : word)
      if (ch != '0' && ch != '1') return false;
    return true;
  }
  for (char ch : word)
    if (ch != '+' && ch != '-') return false;
  return true;
}

IntPolynomial expand_pattern(const Pattern& p, std::size_t m) {
  return polynomial_from_word(pattern_word(p, m), p.alphabet);
}

Pattern parse_pattern(const std::string& text) {
  auto p1 = text.find('|');
  auto p2 = text.find('|', p1 == std::string::npos ? 0 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    throw std::invalid_argument("pattern: expected \"prefix|period|suffix\"");
  Pattern p;
  p.prefix = text.substr(0, p1);
  p.period = text.substr(p1 + 1, p2 - p1 - 1);
  p.suffix = text.substr(p2 + 1);
  std::string all = p.prefix + p.period + p.suffix;
  if (all.empty()) throw std::invalid_argument("pattern: all parts empty");
  p.alphabet = all.find_first_of("+-") != std::string::npos ? Alphabet::PlusMinus : Alphabet::Binary01;
  for (char ch : all) {
    bool ok = p.alphabet == Alphabet::Binary01 ? (ch == '0' || ch == '1') : (ch == '+' || ch == '-');
    if (!ok) throw std::invalid_argument("pattern: mixed alphabets");
  }
  return p;
}

std::string format_pattern(const Pattern& p) { return p.prefix + "|" + p.period + "|" + p.suffix; }

}  // namespace nlz
