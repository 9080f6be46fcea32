#include "b3/bounds.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace b3 {

BigInt fib(long long n) {
  if (n < 0) throw std::domain_error("fib: negative index");
  // Fast doubling: F(2k) = F(k)(2F(k+1)-F(k)), F(2k+1) = F(k)^2+F(k+1)^2.
  BigInt a = 0, b = 1;  // F(0), F(1)
  for (int bit = 62; bit >= 0; --bit) {
    BigInt c = a * (2 * b - a);
    BigInt d = a * a + b * b;
    if ((n >> bit) & 1) {
      a = d;
      b = c + d;
    } else {
      a = c;
      b = d;
    }
  }
  return a;
}

namespace {

void require_ell(long long ell) {
  if (ell < 2) throw std::domain_error("bounds: canonical length must be at least 2");
}

}  // namespace

BigInt min_trace(long long ell) {
  require_ell(ell);
  return BigInt(ell) + 1;
}

BigInt max_trace(long long ell) {
  require_ell(ell);
  if (ell % 2 == 0) return fib(ell - 1) + fib(ell + 1);
  return 2 * fib(ell);
}

std::pair<LUWord, BraidWord> extremal_min(long long ell) {
  require_ell(ell);
  std::string letters = "L" + std::string(static_cast<std::size_t>(ell - 1), 'U');
  BraidWord braid;
  braid.letters.push_back(+1);
  for (long long j = 0; j < ell - 1; ++j) braid.letters.push_back(-2);
  return {lu_from_letters(letters), braid};
}

std::pair<LUWord, BraidWord> extremal_max(long long ell) {
  require_ell(ell);
  std::string letters;
  for (long long j = 0; j < ell; ++j) letters += (j % 2 == 0) ? 'L' : 'U';
  BraidWord braid;
  for (long long j = 0; j < ell / 2; ++j) braid.letters.insert(braid.letters.end(), {+1, -2});
  if (ell % 2 == 1) braid.letters.push_back(+1);
  return {lu_from_letters(letters), braid};
}

QuadraticValue lower_bound_lambda(long long ell) {
  return dilatation_of_trace(min_trace(ell));
}

QuadraticValue upper_bound_lambda(long long ell) {
  return dilatation_of_trace(max_trace(ell));
}

BoundsReport make_bounds(long long ell) {
  require_ell(ell);
  BoundsReport r;
  r.ell = ell;
  r.min_trace = min_trace(ell);
  r.max_trace = max_trace(ell);
  r.lower_lambda = lower_bound_lambda(ell);
  r.upper_lambda = upper_bound_lambda(ell);
  std::tie(r.argmin_word, r.argmin_braid) = extremal_min(ell);
  std::tie(r.argmax_word, r.argmax_braid) = extremal_max(ell);
  return r;
}

std::string bounds_csv_header() {
  return "ell,min_trace,max_trace,lower_lambda,upper_lambda,argmin_word,argmax_word";
}

std::string bounds_csv_row(const BoundsReport& r, int float_digits) {
  char buf[64];
  std::ostringstream out;
  out << r.ell << ',' << r.min_trace << ',' << r.max_trace << ',';
  std::snprintf(buf, sizeof buf, "%.*f", float_digits, r.lower_lambda.approx());
  out << buf << ',';
  std::snprintf(buf, sizeof buf, "%.*f", float_digits, r.upper_lambda.approx());
  out << buf << ',' << flatten_lu(r.argmin_word) << ',' << flatten_lu(r.argmax_word);
  return out.str();
}

}  // namespace b3
