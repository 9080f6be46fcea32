#include "b3/burau.hpp"

namespace b3 {

namespace {

template <typename Int>
BurauMatrix<Int> mul(const BurauMatrix<Int>& m, const BurauMatrix<Int>& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

template <typename Int>
BurauMatrix<Int> generator_image(int letter) {
  using L = Laurent<Int>;
  const L one = L::term(0, Int(1));
  const L zero;
  switch (letter) {
    case +1:  // [[-t, 1], [0, 1]]
      return {L::term(1, Int(-1)), one, zero, one};
    case -1:  // [[-1/t, 1/t], [0, 1]]
      return {L::term(-1, Int(-1)), L::term(-1, Int(1)), zero, one};
    case +2:  // [[1, 0], [t, -t]]
      return {one, zero, L::term(1, Int(1)), L::term(1, Int(-1))};
    case -2:  // [[1, 0], [1, -1/t]]
      return {one, zero, one, L::term(-1, Int(-1))};
    default:
      throw std::logic_error("corrupt braid word letter");
  }
}

template <typename Int>
BurauMatrix<Int> identity_matrix() {
  using L = Laurent<Int>;
  return {L::term(0, Int(1)), L{}, L{}, L::term(0, Int(1))};
}

}  // namespace

template <typename Int>
BurauMatrix<Int> burau(const BraidWord& w) {
  BurauMatrix<Int> m = identity_matrix<Int>();
  for (int8_t l : w.letters) m = mul(m, generator_image<Int>(l));
  return m;
}

template BurauMatrix<long long> burau<long long>(const BraidWord&);
template BurauMatrix<BigInt> burau<BigInt>(const BraidWord&);

bool words_equal(const BraidWord& a, const BraidWord& b) {
  // |coefficient| <= 2^len after len letters; 58 leaves headroom in int64.
  if (a.size() <= 58 && b.size() <= 58)
    return burau<long long>(a) == burau<long long>(b);
  return burau<BigInt>(a) == burau<BigInt>(b);
}

}  // namespace b3
