#include "b3/garside.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <sstream>

#include "b3/burau.hpp"

namespace b3 {

int first_letter(Simple s) {
  switch (s) {
    case Simple::S1: case Simple::S12: return 1;
    case Simple::S2: case Simple::S21: return 2;
  }
  throw std::logic_error("bad simple");
}

int last_letter(Simple s) {
  switch (s) {
    case Simple::S1: case Simple::S21: return 1;
    case Simple::S2: case Simple::S12: return 2;
  }
  throw std::logic_error("bad simple");
}

int factor_length(Simple s) {
  return (s == Simple::S1 || s == Simple::S2) ? 1 : 2;
}

Simple tau(Simple s) {
  switch (s) {
    case Simple::S1: return Simple::S2;
    case Simple::S2: return Simple::S1;
    case Simple::S12: return Simple::S21;
    case Simple::S21: return Simple::S12;
  }
  throw std::logic_error("bad simple");
}

Simple make_simple(int first, int length) {
  if (first != 1 && first != 2) throw std::logic_error("bad first crossing");
  if (length == 1) return first == 1 ? Simple::S1 : Simple::S2;
  if (length == 2) return first == 1 ? Simple::S12 : Simple::S21;
  throw std::logic_error("bad factor length");
}

std::string render_simple(Simple s) {
  switch (s) {
    case Simple::S1: return "a";
    case Simple::S2: return "b";
    case Simple::S12: return "ab";
    case Simple::S21: return "ba";
  }
  throw std::logic_error("bad simple");
}

namespace {

bool even(long long v) { return (v % 2) == 0; }

// Builds the factor chain of a positive word with no half-twist subword.
// Runs are (crossing, multiplicity) with alternating crossings; a junction
// between consecutive runs is one length-two factor, the remaining letters
// of each run are length-one factors.
std::vector<Simple> chain_of_runs(
    const std::vector<std::pair<int, long long>>& runs, bool flip) {
  std::vector<Simple> factors;
  if (runs.empty()) return factors;
  auto letter = [&](int c) { return flip ? 3 - c : c; };
  int cur = letter(runs.front().first);
  const std::size_t t = runs.size();
  for (std::size_t j = 0; j < t; ++j) {
    if (j >= 1) {
      factors.push_back(make_simple(cur, 2));
      cur = 3 - cur;
    }
    long long ones = runs[j].second;
    if (t > 1) ones -= (j == 0 || j + 1 == t) ? 1 : 2;
    for (long long m = 0; m < ones; ++m) factors.push_back(make_simple(cur, 1));
  }
  return factors;
}

}  // namespace

NormalForm normalize(const BraidWord& w) {
  long long d = 0;
  std::vector<std::pair<int, long long>> runs;  // pending positive word

  // Invariant: input prefix = Delta^d * tau^d(runs), with the stored word
  // free of half-twist subwords. Feeding a crossing either extends the
  // stack or completes sigma_c sigma_c' sigma_c at the top, which is
  // absorbed into d.
  auto feed = [&](int actual) {
    const int y = even(d) ? actual : 3 - actual;
    if (runs.size() >= 2 && runs.back().second == 1 && runs.back().first == 3 - y) {
      runs.pop_back();
      if (--runs.back().second == 0) runs.pop_back();
      ++d;
    } else if (!runs.empty() && runs.back().first == y) {
      ++runs.back().second;
    } else {
      runs.push_back({y, 1});
    }
  };

  for (int8_t l : w.letters) {
    if (l > 0) {
      feed(l);
    } else {
      --d;  // sigma_i^-1 = Delta^-1 sigma_i sigma_(3-i)
      feed(-l);
      feed(3 - (-l));
    }
  }

  NormalForm nf;
  nf.delta_power = d;
  nf.factors = chain_of_runs(runs, !even(d));
  return nf;
}

bool is_left_normal(const NormalForm& nf) {
  for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j)
    if (last_letter(nf.factors[j]) != first_letter(nf.factors[j + 1])) return false;
  return true;
}

BraidWord braid_word_of(const NormalForm& nf) {
  BraidWord w;
  const long long n = nf.delta_power;
  for (long long m = 0; m < std::llabs(n); ++m) {
    if (n > 0)
      w.letters.insert(w.letters.end(), {+1, +2, +1});
    else
      w.letters.insert(w.letters.end(), {-1, -2, -1});
  }
  for (Simple s : nf.factors) {
    w.letters.push_back(static_cast<int8_t>(first_letter(s)));
    if (factor_length(s) == 2) w.letters.push_back(static_cast<int8_t>(last_letter(s)));
  }
  return w;
}

GarsideTuple tuple_of(const NormalForm& nf) {
  GarsideTuple t;
  t.s = nf.delta_power;
  if (nf.factors.empty()) return t;  // (s; 1; 0,0)
  t.i = first_letter(nf.factors.front());
  t.runs.clear();
  long long p = 0, q = 0;
  bool in_q = false;
  for (Simple f : nf.factors) {
    if (factor_length(f) == 1) {
      if (in_q) {
        t.runs.push_back({p, q});
        p = q = 0;
        in_q = false;
      }
      ++p;
    } else {
      ++q;
      in_q = true;
    }
  }
  t.runs.push_back({p, q});
  return t;
}

namespace {

void validate_tuple(const GarsideTuple& t) {
  if (t.i != 1 && t.i != 2) throw TupleError("tuple: i must be 1 or 2");
  if (t.runs.empty()) throw TupleError("tuple: empty run list");
  if (t.runs.size() == 1 && t.runs[0] == std::pair<long long, long long>{0, 0}) {
    if (t.i != 1) throw TupleError("tuple: delta power must use i=1");
    return;
  }
  for (std::size_t j = 0; j < t.runs.size(); ++j) {
    auto [p, q] = t.runs[j];
    if (p < 0 || q < 0) throw TupleError("tuple: negative run length");
    if (p == 0 && j > 0) throw TupleError("tuple: interior zero p");
    if (q == 0 && j + 1 < t.runs.size()) throw TupleError("tuple: interior zero q");
    if (p == 0 && q == 0) throw TupleError("tuple: empty run");
  }
}

}  // namespace

NormalForm decode_tuple(const GarsideTuple& t) {
  validate_tuple(t);
  NormalForm nf;
  nf.delta_power = t.s;
  if (t.is_delta_power()) return nf;
  int cur = t.i;
  for (auto [p, q] : t.runs) {
    for (long long m = 0; m < p; ++m) nf.factors.push_back(make_simple(cur, 1));
    for (long long m = 0; m < q; ++m) {
      nf.factors.push_back(make_simple(cur, 2));
      cur = 3 - cur;
    }
  }
  return nf;
}

std::string tuple_to_string(const GarsideTuple& t) {
  std::ostringstream out;
  out << '(' << t.s << "; " << t.i << "; ";
  bool first = true;
  for (auto [p, q] : t.runs) {
    if (!first) out << ',';
    out << p << ',' << q;
    first = false;
  }
  out << ')';
  return out.str();
}

GarsideTuple tuple_from_string(std::string_view text) {
  std::string buf(text);
  for (char& c : buf)
    if (c == '(' || c == ')' || c == ';' || c == ',') c = ' ';
  std::istringstream in(buf);
  std::vector<long long> vals;
  long long v;
  while (in >> v) vals.push_back(v);
  if (in.fail() && !in.eof()) throw TupleError("tuple: malformed text");
  if (vals.size() < 4 || vals.size() % 2 != 0)
    throw TupleError("tuple: expected (s; i; p1,q1,...)");
  GarsideTuple t;
  t.s = vals[0];
  t.i = static_cast<int>(vals[1]);
  t.runs.clear();
  for (std::size_t j = 2; j < vals.size(); j += 2) t.runs.push_back({vals[j], vals[j + 1]});
  if (t.runs.size() == 1 && t.runs[0] == std::pair<long long, long long>{0, 0}) t.i = 1;
  validate_tuple(t);
  return t;
}

NormalForm tau(const NormalForm& nf) {
  NormalForm out;
  out.delta_power = nf.delta_power;
  out.factors.reserve(nf.factors.size());
  for (Simple s : nf.factors) out.factors.push_back(tau(s));
  return out;
}

GarsideTuple tau(const GarsideTuple& t) {
  GarsideTuple out = t;
  if (!t.is_delta_power()) out.i = 3 - t.i;
  return out;
}

bool is_rigid(const GarsideTuple& t) {
  if (t.is_delta_power()) return true;
  long long q_total = 0;
  for (auto& [p, q] : t.runs) q_total += q;
  return even(t.s + q_total);
}

bool is_rigid(const NormalForm& nf) { return is_rigid(tuple_of(nf)); }

NormalForm cycle_once(const NormalForm& nf) {
  if (nf.factors.empty())
    throw std::invalid_argument("cycle_once: undefined on delta powers");
  Simple head = nf.factors.front();
  Simple twisted = even(nf.delta_power) ? head : tau(head);
  NormalForm shifted;
  shifted.delta_power = nf.delta_power;
  shifted.factors.assign(nf.factors.begin() + 1, nf.factors.end());
  shifted.factors.push_back(twisted);
  // The shifted word need not be normal; renormalise.
  return normalize(braid_word_of(shifted));
}

bool is_periodic(const BraidWord& w) {
  NormalForm nf = normalize(w);
  if (nf.factors.empty()) return true;
  NormalForm sq = normalize(concat(w, w));
  if (sq.factors.empty() && even(sq.delta_power)) return true;
  NormalForm cb = normalize(concat(w, w, w));
  return cb.factors.empty() && even(cb.delta_power);
}

namespace {

// Periodic conjugacy classes are separated by the exponent sum; the
// canonical patterns are (s;1;0,0), odd s with (1,0), even s with (0,1).
GarsideTuple periodic_pattern(long long e) {
  GarsideTuple t;
  long long r = ((e % 3) + 3) % 3;
  if (r == 0) {
    t.s = e / 3;
  } else if (r == 1) {
    t.s = (e - 1) / 3;
    t.runs = {{1, 0}};
  } else {
    t.s = (e - 2) / 3;
    t.runs = {{0, 1}};
  }
  return t;
}

std::string lu_letters(const GarsideTuple& t) {
  std::string s;
  for (auto [p, q] : t.runs) {
    s.append(static_cast<std::size_t>(p), 'L');
    s.append(static_cast<std::size_t>(q), 'U');
  }
  return s;
}

bool cyclically_equal(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  return (a + a).find(b) != std::string::npos;
}

}  // namespace

GarsideTuple murasugi_rep(const BraidWord& w, const CyclingOptions& opts) {
  if (is_periodic(w)) return periodic_pattern(exponent_sum(w));

  NormalForm nf = normalize(w);
  const long long k0 = static_cast<long long>(nf.canonical_length());
  const long long cap = opts.max_iterations > 0
                            ? opts.max_iterations
                            : 10 * (k0 + std::llabs(nf.delta_power) + 4);
  std::set<std::pair<long long, std::vector<Simple>>> seen;
  long long iter = 0;
  while (true) {
    GarsideTuple t = tuple_of(nf);
    if (is_rigid(t)) return t;
    if (!seen.insert({nf.delta_power, nf.factors}).second)
      throw CyclingCapExceeded("cycling revisited a non-rigid form");
    if (++iter > cap) throw CyclingCapExceeded("cycling iteration cap exceeded");
    nf = cycle_once(nf);
  }
}

std::set<GarsideTuple> sss_orbit(const GarsideTuple& t) {
  if (!is_rigid(t)) throw std::invalid_argument("sss_orbit: input must be rigid");
  if (t.canonical_length() < 2)
    throw std::invalid_argument("sss_orbit: canonical length must be at least 2");
  std::set<GarsideTuple> out;
  std::vector<GarsideTuple> queue{t};
  while (!queue.empty()) {
    GarsideTuple cur = queue.back();
    queue.pop_back();
    if (!out.insert(cur).second) continue;
    queue.push_back(tau(cur));
    queue.push_back(tuple_of(cycle_once(decode_tuple(cur))));
  }
  return out;
}

NTClassification classify(const BraidWord& w) {
  NTClassification result;
  if (is_periodic(w)) {
    result.type = NTClassification::Type::Periodic;
    result.murasugi = periodic_pattern(exponent_sum(w));
    if (result.murasugi.is_delta_power())
      result.root_power = even(result.murasugi.s) ? 1 : 2;
    else
      result.root_power = 3;
    return result;
  }
  GarsideTuple rep = murasugi_rep(w);
  result.murasugi = rep;
  const std::string lu = lu_letters(rep);
  if (lu.find('U') == std::string::npos) {
    result.type = NTClassification::Type::Reducible;
    result.side = 1;
  } else if (lu.find('L') == std::string::npos) {
    result.type = NTClassification::Type::Reducible;
    result.side = 2;
  } else {
    result.type = NTClassification::Type::PseudoAnosov;
  }
  return result;
}

namespace {

bool conjugate_impl(const BraidWord& w1, const BraidWord& w2, bool mod_delta2) {
  // Necessary condition: exponent sums agree (exactly, or modulo 6 when
  // working modulo the full twist, whose exponent sum is 6).
  const long long e1 = exponent_sum(w1), e2 = exponent_sum(w2);
  if (mod_delta2 ? (((e1 - e2) % 6 + 6) % 6 != 0) : (e1 != e2)) return false;

  const bool p1 = is_periodic(w1), p2 = is_periodic(w2);
  if (p1 != p2) return false;
  if (p1) {
    GarsideTuple t1 = periodic_pattern(e1), t2 = periodic_pattern(e2);
    if (t1.runs != t2.runs) return false;
    return mod_delta2 ? even(t1.s - t2.s) : t1.s == t2.s;
  }

  GarsideTuple t1 = murasugi_rep(w1), t2 = murasugi_rep(w2);
  if (!cyclically_equal(lu_letters(t1), lu_letters(t2))) return false;
  // Rigidity ties the parity of s to the number of U letters, so equal
  // cyclic words already force equal parity; only the exact variant needs s.
  return mod_delta2 || t1.s == t2.s;
}

}  // namespace

bool is_conjugate(const BraidWord& w1, const BraidWord& w2) {
  return conjugate_impl(w1, w2, false);
}

bool is_conjugate_mod_delta2(const BraidWord& w1, const BraidWord& w2) {
  return conjugate_impl(w1, w2, true);
}

}  // namespace b3
