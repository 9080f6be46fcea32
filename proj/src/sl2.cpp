#include "b3/sl2.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace b3 {

namespace mp = boost::multiprecision;

SL2Matrix sl2_L() { return {1, 0, 1, 1}; }
SL2Matrix sl2_U() { return {1, 1, 0, 1}; }

SL2Matrix mul(const SL2Matrix& a, const SL2Matrix& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

std::string matrix_to_string(const SL2Matrix& m) {
  std::ostringstream out;
  out << "[[" << m.m11 << ',' << m.m12 << "],[" << m.m21 << ',' << m.m22 << "]]";
  return out.str();
}

BigInt trace(const SL2Matrix& m) { return m.m11 + m.m22; }

bool is_irreducible(const SL2Matrix& m) {
  return m.m11 >= 1 && m.m12 >= 1 && m.m21 >= 1 && m.m22 >= 1;
}

LUWord lu_from_letters(std::string_view letters) {
  LUWord w;
  long long p = 0, q = 0;
  bool in_q = false;
  for (char c : letters) {
    if (c == 'L') {
      if (in_q) {
        w.runs.push_back({p, q});
        p = q = 0;
        in_q = false;
      }
      ++p;
    } else if (c == 'U') {
      ++q;
      in_q = true;
    } else {
      throw DecomposeError("LU word: letters must be L or U");
    }
  }
  if (p != 0 || q != 0) w.runs.push_back({p, q});
  return w;
}

LUWord parse_lu(std::string_view text) {
  std::string letters;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != 'L' && c != 'U') throw DecomposeError("LU word: letters must be L or U");
    ++i;
    long long count = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      count = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        count = count * 10 + (text[i] - '0');
        ++i;
      }
    }
    letters.append(static_cast<std::size_t>(count), c);
  }
  return lu_from_letters(letters);
}

std::string flatten_lu(const LUWord& w) {
  std::string s;
  for (auto [p, q] : w.runs) {
    s.append(static_cast<std::size_t>(p), 'L');
    s.append(static_cast<std::size_t>(q), 'U');
  }
  return s;
}

std::string lu_to_string(const LUWord& w) {
  return w.empty() ? "1" : flatten_lu(w);
}

SL2Matrix matrix_of_lu(const LUWord& w) {
  SL2Matrix m;
  for (auto [p, q] : w.runs) {
    // m * L^p: adds p times column 2 to column 1... rows: L^p = [[1,0],[p,1]]
    for (long long j = 0; j < p; ++j) m = mul(m, sl2_L());
    for (long long j = 0; j < q; ++j) m = mul(m, sl2_U());
  }
  return m;
}

long long lu_length(const LUWord& w) { return w.length(); }

LUWord lu_decompose(const SL2Matrix& m0) {
  if (m0.m11 < 0 || m0.m12 < 0 || m0.m21 < 0 || m0.m22 < 0)
    throw DecomposeError("decompose: negative entry");
  if (m0.det() != 1) throw DecomposeError("decompose: determinant must be 1");
  SL2Matrix m = m0;
  std::string letters;
  while (!m.is_identity()) {
    const bool row1_le = m.m11 <= m.m21 && m.m12 <= m.m22;
    const bool row2_le = m.m21 <= m.m11 && m.m22 <= m.m12;
    if (row1_le && !(m.m11 == m.m21 && m.m12 == m.m22)) {
      // Whole runs at once; the row comparison flips only when exhausted.
      BigInt k(-1);
      if (m.m11 > 0) k = m.m21 / m.m11;
      if (m.m12 > 0) {
        BigInt k2 = m.m22 / m.m12;
        if (k < 0 || k2 < k) k = k2;
      }
      if (k < 1) k = 1;
      m.m21 -= k * m.m11;
      m.m22 -= k * m.m12;
      // Over-subtraction cannot happen: k was bounded by both quotients.
      letters.append(static_cast<std::size_t>(k), 'L');
    } else if (row2_le) {
      BigInt k(-1);
      if (m.m21 > 0) k = m.m11 / m.m21;
      if (m.m22 > 0) {
        BigInt k2 = m.m12 / m.m22;
        if (k < 0 || k2 < k) k = k2;
      }
      if (k < 1) k = 1;
      m.m11 -= k * m.m21;
      m.m12 -= k * m.m22;
      letters.append(static_cast<std::size_t>(k), 'U');
    } else {
      throw DecomposeError("decompose: rows incomparable; input was not in the monoid");
    }
    if (m.m11 < 0 || m.m12 < 0 || m.m21 < 0 || m.m22 < 0)
      throw DecomposeError("decompose: run extraction overshot");
  }
  return lu_from_letters(letters);
}

LUWord lu_of_tuple(const GarsideTuple& t) {
  if (!is_rigid(t)) throw std::invalid_argument("lu_of_tuple: tuple must be rigid");
  LUWord w;
  if (!t.is_delta_power()) w.runs = t.runs;
  return w;
}

std::pair<GarsideTuple, GarsideTuple> braid_preimages(const LUWord& w) {
  GarsideTuple t1, t2;
  if (w.empty()) {
    t2.s = 1;  // the identity matrix lifts to 1 and the half twist
    return {t1, t2};
  }
  long long q_total = 0;
  for (auto& [p, q] : w.runs) q_total += q;
  const long long s = (q_total % 2 == 0) ? 0 : 1;
  t1.s = t2.s = s;
  t1.runs = t2.runs = w.runs;
  t1.i = 1;
  t2.i = 2;
  return {t1, t2};
}

double QuadraticValue::approx() const {
  const double t = static_cast<double>(T);
  return (t + std::sqrt(t * t - 4.0)) / 2.0;
}

std::string QuadraticValue::form() const {
  std::ostringstream out;
  out << '(' << T << "+sqrt(" << disc() << "))/2";
  return out.str();
}

int QuadraticValue::cmp_integer(const BigInt& n) const {
  // lambda lies strictly between T-1 and T.
  return (n <= T - 1) ? +1 : -1;
}

QuadraticValue dilatation_of_trace(const BigInt& T) {
  if (T < 3)
    throw std::domain_error("dilatation: trace must be at least 3");
  return QuadraticValue{T};
}

namespace {

BigInt gcd3(BigInt a, BigInt b, BigInt c) {
  return mp::gcd(mp::gcd(mp::abs(a), mp::abs(b)), mp::abs(c));
}

QuadExpr normalized(BigInt p, BigInt q, BigInt den, BigInt D) {
  if (den == 0) throw std::domain_error("quadratic: zero denominator");
  if (den < 0) {
    p = -p;
    q = -q;
    den = -den;
  }
  BigInt g = gcd3(p, q, den);
  if (g > 1) {
    p /= g;
    q /= g;
    den /= g;
  }
  if (p == 0 && q == 0) den = 1;
  return QuadExpr{std::move(p), std::move(q), std::move(den), std::move(D)};
}

void check_same_field(const QuadExpr& a, const QuadExpr& b) {
  if (a.D != b.D && !a.is_zero() && !b.is_zero())
    throw std::domain_error("quadratic: mixed discriminants");
}

}  // namespace

QuadExpr QuadExpr::rational(BigInt v, BigInt D) {
  return QuadExpr{std::move(v), 0, 1, std::move(D)};
}

int QuadExpr::sign() const {
  const int sp = p == 0 ? 0 : (p > 0 ? 1 : -1);
  const int sq = q == 0 ? 0 : (q > 0 ? 1 : -1);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 with q^2 D.
  BigInt lhs = p * p, rhs = q * q * D;
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sp : sq;
}

double QuadExpr::approx() const {
  return (static_cast<double>(p) + static_cast<double>(q) * std::sqrt(static_cast<double>(D))) /
         static_cast<double>(den);
}

QuadExpr operator+(const QuadExpr& a, const QuadExpr& b) {
  check_same_field(a, b);
  BigInt D = a.is_zero() ? b.D : a.D;
  return normalized(a.p * b.den + b.p * a.den, a.q * b.den + b.q * a.den, a.den * b.den, D);
}

QuadExpr operator-(const QuadExpr& a, const QuadExpr& b) {
  check_same_field(a, b);
  BigInt D = a.is_zero() ? b.D : a.D;
  return normalized(a.p * b.den - b.p * a.den, a.q * b.den - b.q * a.den, a.den * b.den, D);
}

QuadExpr operator*(const QuadExpr& a, const QuadExpr& b) {
  check_same_field(a, b);
  BigInt D = a.is_zero() ? b.D : a.D;
  return normalized(a.p * b.p + a.q * b.q * D, a.p * b.q + a.q * b.p, a.den * b.den, D);
}

Measure unstable_measure(const SL2Matrix& m) {
  if (!is_irreducible(m))
    throw std::domain_error("measure: matrix must be irreducible");
  const BigInt T = trace(m);
  const BigInt D = T * T - 4;
  Measure out;
  out.x = normalized(2 * m.m12, 0, 2, D);
  out.y = normalized(T - 2 * m.m11, 1, 2, D);  // lambda - m11
  const double xv = out.x.approx(), yv = out.y.approx();
  out.xf = xv / (xv + yv);
  out.yf = yv / (xv + yv);
  return out;
}

SplitReport split_measure(const QuadExpr& x, const QuadExpr& y) {
  const int s = (x - y).sign();
  if (s == 0) throw std::domain_error("split: equal coordinates");
  SplitReport r;
  if (s > 0) {
    r.graph = 1;
    r.v1 = y;
    r.u1 = x - y;
  } else {
    r.graph = 2;
    r.v1 = x;
    r.u1 = y - x;
  }
  r.v1f = r.v1.approx();
  r.u1f = r.u1.approx();
  return r;
}

SplitReport split_measure(double x, double y) {
  if (x == y) throw std::domain_error("split: equal coordinates");
  SplitReport r;
  r.graph = (x > y) ? 1 : 2;
  r.v1f = (x > y) ? y : x;
  r.u1f = (x > y) ? x - y : y - x;
  r.v1 = QuadExpr{};
  r.u1 = QuadExpr{};
  return r;
}

bool cyclic_equivalent(const LUWord& a, const LUWord& b) {
  const std::string sa = flatten_lu(a), sb = flatten_lu(b);
  if (sa.size() != sb.size()) return false;
  if (sa.empty()) return true;
  return (sa + sa).find(sb) != std::string::npos;
}

LUWord j_conjugate(const LUWord& w) {
  std::string s = flatten_lu(w);
  for (char& c : s) c = (c == 'L') ? 'U' : 'L';
  return lu_from_letters(s);
}

FullClassification classify_full(const BraidWord& w) {
  FullClassification out;
  out.base = classify(w);
  if (out.base.type == NTClassification::Type::Periodic) return out;
  LUWord lu = lu_of_tuple(out.base.murasugi);
  SL2Matrix m = matrix_of_lu(lu);
  out.lu_word = lu;
  out.matrix = m;
  if (out.base.type == NTClassification::Type::PseudoAnosov) {
    out.trace = trace(m);
    out.dilatation = dilatation_of_trace(*out.trace);
    out.measure = unstable_measure(m);
    out.carried = split_measure(out.measure->x, out.measure->y);
  }
  return out;
}

}  // namespace b3
