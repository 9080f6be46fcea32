#include "b3/words.hpp"

#include <cctype>
#include <sstream>

namespace b3 {

namespace {

void append_compact_letter(std::vector<int8_t>& out, char c) {
  switch (c) {
    case 'a': out.push_back(+1); break;
    case 'A': out.push_back(-1); break;
    case 'b': out.push_back(+2); break;
    case 'B': out.push_back(-2); break;
    case 'D': out.insert(out.end(), {+1, +2, +1}); break;
    case 'd': out.insert(out.end(), {-1, -2, -1}); break;
    default: throw ParseError("unknown character in braid word", std::string(1, c));
  }
}

}  // namespace

BraidWord parse_word(std::string_view text) {
  bool has_compact = false;
  bool has_numeric = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'a' || c == 'A' || c == 'b' || c == 'B' || c == 'D' || c == 'd') {
      has_compact = true;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      has_numeric = true;
    } else {
      throw ParseError("unknown character in braid word", std::string(1, c));
    }
  }
  if (has_compact && has_numeric)
    throw ParseError("mixed compact and numeric syntaxes", std::string(text));

  BraidWord w;
  if (has_numeric) {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      int v = 0;
      try {
        std::size_t pos = 0;
        v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("not an integer", tok);
      }
      if (v != 1 && v != -1 && v != 2 && v != -2)
        throw ParseError("integer outside {1,-1,2,-2}", tok);
      w.letters.push_back(static_cast<int8_t>(v));
    }
  } else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      append_compact_letter(w.letters, c);
    }
  }
  return w;
}

std::string render_word(const BraidWord& w) {
  if (w.empty()) return "1";
  std::string s;
  s.reserve(w.size());
  for (int8_t l : w.letters) {
    switch (l) {
      case +1: s += 'a'; break;
      case -1: s += 'A'; break;
      case +2: s += 'b'; break;
      case -2: s += 'B'; break;
      default: throw std::logic_error("corrupt braid word letter");
    }
  }
  return s;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int8_t> out;
  out.reserve(w.size());
  for (int8_t l : w.letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord{std::move(out)};
}

BraidWord invert(const BraidWord& w) {
  std::vector<int8_t> out(w.letters.rbegin(), w.letters.rend());
  for (auto& l : out) l = -l;
  return BraidWord{std::move(out)};
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  std::vector<int8_t> out = a.letters;
  out.insert(out.end(), b.letters.begin(), b.letters.end());
  return BraidWord{std::move(out)};
}

BraidWord concat(const BraidWord& a, const BraidWord& b, const BraidWord& c) {
  return concat(concat(a, b), c);
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  return concat(invert(g), w, g);
}

BraidWord mirror_epsilon(const BraidWord& w) {
  std::vector<int8_t> out = w.letters;
  for (auto& l : out) l = -l;
  return BraidWord{std::move(out)};
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (int8_t l : w.letters) s += (l > 0) ? 1 : -1;
  return s;
}

}  // namespace b3
