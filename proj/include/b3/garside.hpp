#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "b3/words.hpp"

namespace b3 {

// The proper simple elements (prefixes of the Garside element other than
// the identity and the half twist itself).
enum class Simple : uint8_t { S1, S2, S12, S21 };

int first_letter(Simple s);  // 1 or 2
int last_letter(Simple s);
int factor_length(Simple s);  // 1 or 2
Simple tau(Simple s);         // swaps the two crossings
Simple make_simple(int first, int length);
std::string render_simple(Simple s);

// Left normal form: delta power plus a chain of proper simple factors where
// the last crossing of each factor equals the first crossing of the next.
struct NormalForm {
  long long delta_power = 0;
  std::vector<Simple> factors;

  std::size_t canonical_length() const { return factors.size(); }
  bool operator==(const NormalForm&) const = default;
};

// Run-length codification (s; i; p1,q1,...,pr,qr). Delta powers are stored
// as the single run (0,0) with i normalised to 1.
struct GarsideTuple {
  long long s = 0;
  int i = 1;
  std::vector<std::pair<long long, long long>> runs{{0, 0}};

  long long canonical_length() const {
    long long k = 0;
    for (auto& [p, q] : runs) k += p + q;
    return k;
  }
  bool is_delta_power() const { return canonical_length() == 0; }
  bool operator==(const GarsideTuple&) const = default;
  bool operator<(const GarsideTuple& o) const {
    return std::tie(s, i, runs) < std::tie(o.s, o.i, o.runs);
  }
};

struct TupleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when cycling exceeds its iteration cap; termination is guaranteed,
// so this indicates a bug rather than bad input.
struct CyclingCapExceeded : std::logic_error {
  using std::logic_error::logic_error;
};

// Left normal form, linear in the length of the input word.
NormalForm normalize(const BraidWord& w);
bool is_left_normal(const NormalForm& nf);  // chain condition on all factors
BraidWord braid_word_of(const NormalForm& nf);

GarsideTuple tuple_of(const NormalForm& nf);
NormalForm decode_tuple(const GarsideTuple& t);

// Bit-exact text format, e.g. "(-4; 1; 0,1,3,2)".
std::string tuple_to_string(const GarsideTuple& t);
GarsideTuple tuple_from_string(std::string_view text);

NormalForm tau(const NormalForm& nf);
GarsideTuple tau(const GarsideTuple& t);

// Delta powers are rigid; otherwise the criterion is that s plus the total
// number of length-two factors is even.
bool is_rigid(const GarsideTuple& t);
bool is_rigid(const NormalForm& nf);

// Conjugation by the (twisted) first factor. Requires canonical length >= 1.
NormalForm cycle_once(const NormalForm& nf);

bool is_periodic(const BraidWord& w);

struct CyclingOptions {
  long long max_iterations = 0;  // 0 means 10*(k + |s| + 4)
};

// Canonical conjugacy representative: the periodic pattern tuple for
// periodic braids, otherwise the first rigid tuple reached by cycling.
GarsideTuple murasugi_rep(const BraidWord& w, const CyclingOptions& opts = {});

// Full super summit set of a rigid braid with canonical length >= 2:
// the closure under cycling and tau.
std::set<GarsideTuple> sss_orbit(const GarsideTuple& t);

// Nielsen-Thurston verdict. The transition matrix and dilatation of a
// pseudo-Anosov braid are attached from its Murasugi tuple by the sl2
// module (see classify_full in sl2.hpp).
struct NTClassification {
  enum class Type { Periodic, Reducible, PseudoAnosov };
  Type type;
  GarsideTuple murasugi;
  int root_power = 0;  // periodic: least k in {1,2,3} with central k-th power
  int side = 0;        // reducible: 1 for the pure-L pattern, 2 for pure-U
};

NTClassification classify(const BraidWord& w);

bool is_conjugate(const BraidWord& w1, const BraidWord& w2);
bool is_conjugate_mod_delta2(const BraidWord& w1, const BraidWord& w2);

}  // namespace b3
