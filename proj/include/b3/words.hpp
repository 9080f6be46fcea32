#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace b3 {

// A free word in the band generators s1, s2 and their inverses.
// Letters are +1, -1, +2, -2; the empty word is the identity braid.
struct BraidWord {
  std::vector<int8_t> letters;

  BraidWord() = default;
  explicit BraidWord(std::vector<int8_t> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const BraidWord&) const = default;
};

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what + " (offending token: '" + token + "')"),
        offending(std::move(token)) {}
  std::string offending;
};

// Compact syntax: a=s1, A=s1^-1, b=s2, B=s2^-1, D=s1 s2 s1, d=its inverse;
// whitespace ignored. Numeric syntax: whitespace-separated integers in
// {1,-1,2,-2}. The two syntaxes cannot be mixed in one input.
BraidWord parse_word(std::string_view text);

// Compact rendering; the identity braid renders as "1".
std::string render_word(const BraidWord& w);

// Deletes adjacent inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

BraidWord invert(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b, const BraidWord& c);

// g^-1 w g
BraidWord conjugate(const BraidWord& w, const BraidWord& g);

// The automorphism flipping the sign of every letter.
BraidWord mirror_epsilon(const BraidWord& w);

long long exponent_sum(const BraidWord& w);

}  // namespace b3
