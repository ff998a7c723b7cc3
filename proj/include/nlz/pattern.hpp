#pragma once

#include <string>

#include "nlz/int_polynomial.hpp"

namespace nlz {

enum class CoeffClass { Newman, Littlewood };
enum class Alphabet { Binary01, PlusMinus };

Alphabet alphabet_of(CoeffClass cls);
CoeffClass class_of(Alphabet a);
const char* class_name(CoeffClass cls);

/// Is `f` a member of the class (Newman: a0 = an = 1, all in {0,1};
/// Littlewood: all coefficients in {-1,1})?
bool is_class_member(const IntPolynomial& f, CoeffClass cls);

/// Coefficient word `prefix . period^m . suffix`, low power to high.
/// Newman words use characters 0/1, Littlewood words +/-.
struct Pattern {
  std::string prefix;
  std::string period;
  std::string suffix;
  Alphabet alphabet = Alphabet::Binary01;

  bool operator==(const Pattern&) const = default;
};

/// The coefficient word of expand_pattern(p, m).
std::string pattern_word(const Pattern& p, std::size_t m);

/// Polynomial whose coefficient word is prefix . period^m . suffix.
/// Throws when the period is empty and m > 0.
IntPolynomial expand_pattern(const Pattern& p, std::size_t m);

IntPolynomial polynomial_from_word(const std::string& word, Alphabet a);
std::string word_from_polynomial(const IntPolynomial& f, Alphabet a);
bool is_valid_class_word(const std::string& word, Alphabet a);

/// Parse "prefix|period|suffix"; alphabet inferred from the characters.
Pattern parse_pattern(const std::string& text);
std::string format_pattern(const Pattern& p);

}  // namespace nlz
