#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "b3/garside.hpp"
#include "b3/integers.hpp"

namespace b3 {

// 2x2 matrix with non-negative integer entries and determinant 1.
struct SL2Matrix {
  BigInt m11 = 1, m12 = 0, m21 = 0, m22 = 1;

  BigInt det() const { return m11 * m22 - m12 * m21; }
  bool is_identity() const { return m11 == 1 && m12 == 0 && m21 == 0 && m22 == 1; }
  bool operator==(const SL2Matrix&) const = default;
};

SL2Matrix sl2_L();  // [[1,0],[1,1]]
SL2Matrix sl2_U();  // [[1,1],[0,1]]
SL2Matrix mul(const SL2Matrix& a, const SL2Matrix& b);
std::string matrix_to_string(const SL2Matrix& m);  // [[a,b],[c,d]]

BigInt trace(const SL2Matrix& m);

// True iff some power has all entries positive; for determinant-1
// non-negative matrices this is just "no zero entry".
bool is_irreducible(const SL2Matrix& m);

// A word in the free monoid on L and U, stored as runs (p_j, q_j) in the
// same shape as the Garside tuple codification.
struct LUWord {
  std::vector<std::pair<long long, long long>> runs;  // empty = identity

  long long length() const {
    long long n = 0;
    for (auto& [p, q] : runs) n += p + q;
    return n;
  }
  bool empty() const { return length() == 0; }
  bool operator==(const LUWord&) const = default;
};

LUWord lu_from_letters(std::string_view letters);  // e.g. "LLUL"
// Accepts flattened ("LLLULULU") and run-length ("L3 U1 L1 U1 L1 U1") text.
LUWord parse_lu(std::string_view text);
std::string flatten_lu(const LUWord& w);          // canonical letter string
std::string lu_to_string(const LUWord& w);        // "1" when empty

SL2Matrix matrix_of_lu(const LUWord& w);
long long lu_length(const LUWord& w);

struct DecomposeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Unique factorisation over {L, U}: repeatedly split off the factor whose
// row is dominated, subtracting it from the other. Throws on det != 1 or a
// negative entry.
LUWord lu_decompose(const SL2Matrix& m);

// Runs of a rigid tuple, viewed as an LU word.
LUWord lu_of_tuple(const GarsideTuple& t);

// The two rigid tuples (i = 1 and i = 2) with these runs and the unique
// s in {0,1} giving a rigid braid; the empty word maps to the delta^0 and
// delta^1 classes.
std::pair<GarsideTuple, GarsideTuple> braid_preimages(const LUWord& w);

// Exact dilatation (T + sqrt(T^2-4))/2 for an integer trace T >= 3.
struct QuadraticValue {
  BigInt T;

  BigInt disc() const { return T * T - 4; }
  double approx() const;
  std::string form() const;  // "(T+sqrt(T^2-4))/2" with numbers substituted
  // -1, +1 for lambda < n, lambda > n; equality cannot occur since the
  // discriminant is never a perfect square for T >= 3.
  int cmp_integer(const BigInt& n) const;
  bool operator==(const QuadraticValue&) const = default;
};

QuadraticValue dilatation_of_trace(const BigInt& T);

// Exact element (p + q*sqrt(D))/den of a real quadratic field.
struct QuadExpr {
  BigInt p, q, den = 1, D;

  static QuadExpr rational(BigInt v, BigInt D);
  int sign() const;
  bool is_zero() const { return p == 0 && q == 0; }
  double approx() const;
  bool operator==(const QuadExpr&) const = default;
};

QuadExpr operator+(const QuadExpr& a, const QuadExpr& b);
QuadExpr operator-(const QuadExpr& a, const QuadExpr& b);
QuadExpr operator*(const QuadExpr& a, const QuadExpr& b);

// Unstable eigenvector (x, y) = (m12, lambda - m11) of an irreducible
// matrix, exact in the quadratic field, plus floats normalised to x+y=1.
struct Measure {
  QuadExpr x, y;
  double xf = 0, yf = 0;
};

Measure unstable_measure(const SL2Matrix& m);

// Splitting report: which carried graph the measure selects.
struct SplitReport {
  int graph;  // 1 or 2
  QuadExpr v1, u1;
  double v1f = 0, u1f = 0;
};

SplitReport split_measure(const QuadExpr& x, const QuadExpr& y);
SplitReport split_measure(double x, double y);

bool cyclic_equivalent(const LUWord& a, const LUWord& b);
LUWord j_conjugate(const LUWord& w);  // swaps the two letters

// Classification with the transition data attached.
struct FullClassification {
  NTClassification base;
  // Present for reducible and pseudo-Anosov braids.
  std::optional<LUWord> lu_word;
  std::optional<SL2Matrix> matrix;
  // Pseudo-Anosov only.
  std::optional<BigInt> trace;
  std::optional<QuadraticValue> dilatation;
  std::optional<Measure> measure;
  std::optional<SplitReport> carried;
};

FullClassification classify_full(const BraidWord& w);

}  // namespace b3
