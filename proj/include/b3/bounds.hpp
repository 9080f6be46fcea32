#pragma once

#include <string>

#include "b3/integers.hpp"
#include "b3/sl2.hpp"
#include "b3/words.hpp"

namespace b3 {

BigInt fib(long long n);

BigInt min_trace(long long ell);  // ell + 1
BigInt max_trace(long long ell);  // F(ell-1)+F(ell+1) even, 2 F(ell) odd

// Extremal word/braid witnesses: L U^(ell-1) with braid a B^(ell-1), and the
// alternating word with braid (aB)^(ell/2) resp. (aB)^((ell-1)/2) a.
std::pair<LUWord, BraidWord> extremal_min(long long ell);
std::pair<LUWord, BraidWord> extremal_max(long long ell);

QuadraticValue lower_bound_lambda(long long ell);
QuadraticValue upper_bound_lambda(long long ell);

struct BoundsReport {
  long long ell = 0;
  BigInt min_trace;
  BigInt max_trace;
  QuadraticValue lower_lambda;
  QuadraticValue upper_lambda;
  LUWord argmin_word, argmax_word;
  BraidWord argmin_braid, argmax_braid;
};

BoundsReport make_bounds(long long ell);  // throws std::domain_error for ell < 2

// ell,min_trace,max_trace,lower_lambda,upper_lambda,argmin_word,argmax_word
std::string bounds_csv_header();
std::string bounds_csv_row(const BoundsReport& r, int float_digits);

}  // namespace b3
