#pragma once

#include <vector>

#include "b3/integers.hpp"
#include "b3/words.hpp"

namespace b3 {

// Laurent polynomial in one variable t, dense coefficients over Int.
// Used only for the reduced Burau representation, which is faithful on
// three strands and therefore decides word equality.
template <typename Int>
class Laurent {
 public:
  Laurent() = default;

  static Laurent term(long exp, Int coeff) {
    Laurent p;
    if (coeff != 0) {
      p.lo_ = exp;
      p.c_ = {std::move(coeff)};
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.lo_, b.lo_);
    long hi = std::max(a.lo_ + static_cast<long>(a.c_.size()),
                       b.lo_ + static_cast<long>(b.c_.size()));
    Laurent r;
    r.lo_ = lo;
    r.c_.assign(static_cast<std::size_t>(hi - lo), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[a.lo_ - lo + i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[b.lo_ - lo + i] += b.c_[i];
    r.trim();
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent{};
    Laurent r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }

  bool operator==(const Laurent&) const = default;

 private:
  void trim() {
    std::size_t head = 0;
    while (head < c_.size() && c_[head] == 0) ++head;
    std::size_t tail = c_.size();
    while (tail > head && c_[tail - 1] == 0) --tail;
    if (head > 0 || tail < c_.size()) {
      c_ = std::vector<Int>(c_.begin() + head, c_.begin() + tail);
      lo_ += static_cast<long>(head);
    }
    if (c_.empty()) lo_ = 0;
  }

  long lo_ = 0;
  std::vector<Int> c_;
};

template <typename Int>
struct BurauMatrix {
  Laurent<Int> a, b, c, d;  // [[a,b],[c,d]]
  bool operator==(const BurauMatrix&) const = default;
};

// Reduced Burau image with the convention
//   s1 -> [[-t, 1], [0, 1]],   s2 -> [[1, 0], [t, -t]].
template <typename Int>
BurauMatrix<Int> burau(const BraidWord& w);

extern template BurauMatrix<long long> burau<long long>(const BraidWord&);
extern template BurauMatrix<BigInt> burau<BigInt>(const BraidWord&);

// True iff the two words represent the same element of the 3-strand braid
// group. Coefficients of the Burau image at most double per letter, so the
// 64-bit path is exact whenever both words fit comfortably; longer inputs
// take the big-integer path.
bool words_equal(const BraidWord& a, const BraidWord& b);

}  // namespace b3
