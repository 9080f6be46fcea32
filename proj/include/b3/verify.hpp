#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "b3/bounds.hpp"
#include "b3/sl2.hpp"

namespace b3 {

// All 2^ell words over {L,U} of length ell, lexicographic (L < U).
std::vector<LUWord> enum_lu_words(int ell);
void for_each_lu_word(int ell, const std::function<void(const LUWord&)>& fn);

// Canonical representative of the cyclic + letter-swap class: least rotation
// of the word and of its swapped image.
std::string cyclic_j_class_key(const LUWord& w);

struct SweepRow {
  int ell = 0;
  std::uint64_t count_words = 0;
  std::uint64_t count_irreducible = 0;
  BigInt min_trace;
  BigInt max_trace;
  std::vector<std::string> argmin_classes;
  std::vector<std::string> argmax_classes;
  bool ok = false;
};

// Exhausts all words of length ell, checks the extremal predictions and the
// length-versus-trace inequality for every irreducible word.
SweepRow trace_sweep(int ell);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& r);

struct VerifyReport {
  std::string name;
  bool ok = false;
  std::string details;
  std::string counterexample;  // empty when ok
};

// Pairwise-distinct matrices for all words up to max_len, with the
// decomposition inverting every product.
VerifyReport verify_free_monoid(int max_len);

// classify(a B^(T-2)) is pseudo-Anosov with trace exactly T for T=3..t_max,
// and the float dilatation matches the closed form to 1e-12 relative.
VerifyReport verify_spectrum(int t_max);

// For every rigid pseudo-Anosov tuple of length <= max_ell in graph-1 form,
// the graph-map transition matrix equals the L/U product and the map is
// efficient.
VerifyReport cross_check_han(int max_ell);

// Non-rigid tuples cycle to rigid-or-shorter; rigid tuples close up into
// one or two cycling orbits exchanged by tau.
VerifyReport verify_cycling_lemma(int max_ell);

// Randomised conjugacy and normal-form soundness (seeded).
VerifyReport verify_random_soundness(std::uint64_t seed, int word_count, int pair_count);

}  // namespace b3
