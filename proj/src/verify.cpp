#include "b3/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "b3/burau.hpp"
#include "b3/traintrack.hpp"

namespace b3 {

namespace {

LUWord word_of_mask(int ell, std::uint32_t mask) {
  std::string letters(static_cast<std::size_t>(ell), 'L');
  for (int j = 0; j < ell; ++j)
    if ((mask >> (ell - 1 - j)) & 1) letters[static_cast<std::size_t>(j)] = 'U';
  return lu_from_letters(letters);
}

std::string least_rotation(std::string s) {
  std::string best = s;
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::rotate(s.begin(), s.begin() + 1, s.end());
    if (s < best) best = s;
  }
  return best;
}

VerifyReport fail(std::string name, std::string details, std::string counterexample) {
  return VerifyReport{std::move(name), false, std::move(details), std::move(counterexample)};
}

VerifyReport pass(std::string name, std::string details) {
  return VerifyReport{std::move(name), true, std::move(details), {}};
}

}  // namespace

std::vector<LUWord> enum_lu_words(int ell) {
  std::vector<LUWord> out;
  out.reserve(1u << ell);
  for_each_lu_word(ell, [&](const LUWord& w) { out.push_back(w); });
  return out;
}

void for_each_lu_word(int ell, const std::function<void(const LUWord&)>& fn) {
  if (ell < 1 || ell > 30) throw std::domain_error("enum_lu_words: length out of range");
  for (std::uint32_t mask = 0; mask < (1u << ell); ++mask) fn(word_of_mask(ell, mask));
}

std::string cyclic_j_class_key(const LUWord& w) {
  std::string s = flatten_lu(w);
  if (s.empty()) return s;
  std::string a = least_rotation(s);
  std::string b = least_rotation(flatten_lu(j_conjugate(w)));
  return std::min(a, b);
}

SweepRow trace_sweep(int ell) {
  if (ell < 2) throw std::domain_error("trace_sweep: ell must be at least 2");
  SweepRow row;
  row.ell = ell;
  const BigInt want_min = min_trace(ell);
  const BigInt want_max = max_trace(ell);
  bool inequalities_ok = true;
  std::string bad;
  std::set<std::string> argmin, argmax;

  for_each_lu_word(ell, [&](const LUWord& w) {
    ++row.count_words;
    SL2Matrix m = matrix_of_lu(w);
    if (!is_irreducible(m)) return;
    ++row.count_irreducible;
    const BigInt t = trace(m);
    if (row.count_irreducible == 1 || t < row.min_trace) row.min_trace = t;
    if (row.count_irreducible == 1 || t > row.max_trace) row.max_trace = t;
    if (t == want_min) argmin.insert(cyclic_j_class_key(w));
    if (t == want_max) argmax.insert(cyclic_j_class_key(w));
    // Every word must sit inside the predicted trace window, decompose back
    // to itself, and satisfy the length bound.
    if (t < want_min || t > want_max || lu_decompose(m) != w ||
        lu_length(w) > t - 1) {
      inequalities_ok = false;
      if (bad.empty()) bad = flatten_lu(w);
    }
  });

  row.argmin_classes.assign(argmin.begin(), argmin.end());
  row.argmax_classes.assign(argmax.begin(), argmax.end());
  const std::string want_min_class = cyclic_j_class_key(extremal_min(ell).first);
  const std::string want_max_class = cyclic_j_class_key(extremal_max(ell).first);
  row.ok = inequalities_ok && row.min_trace == want_min && row.max_trace == want_max &&
           row.argmin_classes == std::vector<std::string>{want_min_class} &&
           row.argmax_classes == std::vector<std::string>{want_max_class};
  return row;
}

std::string sweep_csv_header() {
  return "ell,count_words,count_irreducible,min_trace,max_trace,argmin,argmax,ok";
}

std::string sweep_csv_row(const SweepRow& r) {
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += '|';
      out += s;
    }
    return out;
  };
  std::ostringstream out;
  out << r.ell << ',' << r.count_words << ',' << r.count_irreducible << ',' << r.min_trace
      << ',' << r.max_trace << ',' << join(r.argmin_classes) << ',' << join(r.argmax_classes)
      << ',' << (r.ok ? "true" : "false");
  return out.str();
}

VerifyReport verify_free_monoid(int max_len) {
  const std::string name = "free-monoid";
  if (max_len < 1) return fail(name, "max_len must be at least 1", "");
  std::unordered_set<std::string> seen;
  std::uint64_t total = 0;
  for (int ell = 1; ell <= max_len; ++ell) {
    std::string bad;
    for_each_lu_word(ell, [&](const LUWord& w) {
      SL2Matrix m = matrix_of_lu(w);
      if (!bad.empty()) return;
      if (lu_decompose(m) != w) {
        bad = flatten_lu(w) + " (decompose mismatch)";
        return;
      }
      if (!seen.insert(matrix_to_string(m)).second) bad = flatten_lu(w) + " (matrix collision)";
    });
    if (!bad.empty()) return fail(name, "failure at length " + std::to_string(ell), bad);
    total += 1ull << ell;
  }
  std::ostringstream d;
  d << seen.size() << " distinct matrices from " << total << " words; decompose inverts all";
  if (seen.size() != total) return fail(name, d.str(), "matrix count != word count");
  return pass(name, d.str());
}

VerifyReport verify_spectrum(int t_max) {
  const std::string name = "spectrum";
  if (t_max < 3) return fail(name, "t_max must be at least 3", "");
  for (long long T = 3; T <= t_max; ++T) {
    BraidWord w;
    w.letters.push_back(+1);
    for (long long j = 0; j < T - 2; ++j) w.letters.push_back(-2);
    FullClassification c = classify_full(w);
    if (c.base.type != NTClassification::Type::PseudoAnosov)
      return fail(name, "not pseudo-Anosov", render_word(w));
    if (*c.trace != T)
      return fail(name, "trace mismatch at T=" + std::to_string(T), render_word(w));
    const double lam = c.dilatation->approx();
    const double want = (static_cast<double>(T) + std::sqrt(static_cast<double>(T) * T - 4)) / 2;
    if (std::abs(lam - want) > 1e-12 * want)
      return fail(name, "float dilatation off at T=" + std::to_string(T), render_word(w));
  }
  return pass(name, "traces 3.." + std::to_string(t_max) + " all realised by a B^(T-2)");
}

VerifyReport cross_check_han(int max_ell) {
  const std::string name = "han";
  if (max_ell < 2) return fail(name, "max_ell must be at least 2", "");
  std::uint64_t checked = 0;
  for (int ell = 2; ell <= max_ell; ++ell) {
    std::string bad;
    for_each_lu_word(ell, [&](const LUWord& w) {
      if (!bad.empty()) return;
      SL2Matrix expected = matrix_of_lu(w);
      if (!is_irreducible(expected)) return;  // reducible patterns are not pA
      long long q_total = 0;
      for (auto& [p, q] : w.runs) q_total += q;
      GarsideTuple t;
      t.s = (q_total % 2 == 0) ? 0 : 1;
      t.i = (t.s == 0) ? 1 : 2;  // the graph-1 forms
      t.runs = w.runs;
      GraphMap f = map_of_word(braid_word_of(decode_tuple(t)), 1);
      if (transition_matrix(f) != expected) {
        bad = tuple_to_string(t) + " (matrix mismatch)";
        return;
      }
      if (!is_efficient(f).efficient) {
        bad = tuple_to_string(t) + " (map backtracks)";
        return;
      }
      ++checked;
    });
    if (!bad.empty()) return fail(name, "failure at length " + std::to_string(ell), bad);
  }
  std::ostringstream d;
  d << checked << " rigid pseudo-Anosov tuples: transition matrix equals the run product "
    << "and the map is efficient";
  return pass(name, d.str());
}

VerifyReport verify_cycling_lemma(int max_ell) {
  const std::string name = "cycling";
  if (max_ell < 2) return fail(name, "max_ell must be at least 2", "");
  std::uint64_t non_rigid = 0, rigid = 0;
  for (int ell = 2; ell <= max_ell; ++ell) {
    std::string bad;
    for_each_lu_word(ell, [&](const LUWord& w) {
      if (!bad.empty()) return;
      for (long long s = 0; s <= 1 && bad.empty(); ++s) {
        for (int i = 1; i <= 2 && bad.empty(); ++i) {
          GarsideTuple t;
          t.s = s;
          t.i = i;
          t.runs = w.runs;
          if (!is_rigid(t)) {
            NormalForm cycled = cycle_once(decode_tuple(t));
            if (!is_rigid(cycled) &&
                cycled.canonical_length() >= static_cast<std::size_t>(ell))
              bad = tuple_to_string(t) + " (cycling gave a non-rigid form of equal length)";
            ++non_rigid;
            continue;
          }
          ++rigid;
          // Closure under cycling alone.
          std::set<GarsideTuple> orbit1;
          GarsideTuple cur = t;
          while (orbit1.insert(cur).second)
            cur = tuple_of(cycle_once(decode_tuple(cur)));
          GarsideTuple tw = tau(t);
          std::set<GarsideTuple> sss = sss_orbit(t);
          if (orbit1.count(tw)) {
            if (sss != orbit1) {
              bad = tuple_to_string(t) + " (single orbit yet closure differs)";
              continue;
            }
          } else {
            std::set<GarsideTuple> orbit2;
            cur = tw;
            while (orbit2.insert(cur).second)
              cur = tuple_of(cycle_once(decode_tuple(cur)));
            std::set<GarsideTuple> both;
            both.insert(orbit1.begin(), orbit1.end());
            both.insert(orbit2.begin(), orbit2.end());
            if (both.size() != orbit1.size() + orbit2.size()) {
              bad = tuple_to_string(t) + " (orbits overlap)";
              continue;
            }
            std::set<GarsideTuple> tau_im;
            for (const auto& u : orbit1) tau_im.insert(tau(u));
            if (tau_im != orbit2 || sss != both)
              bad = tuple_to_string(t) + " (orbits not exchanged by tau)";
          }
        }
      }
    });
    if (!bad.empty()) return fail(name, "failure at length " + std::to_string(ell), bad);
  }
  std::ostringstream d;
  d << non_rigid << " non-rigid tuples cycle to rigid-or-shorter; " << rigid
    << " rigid tuples close into one or two cycling orbits exchanged by tau";
  return pass(name, d.str());
}

VerifyReport verify_random_soundness(std::uint64_t seed, int word_count, int pair_count) {
  const std::string name = "soundness";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(0, 40);
  std::uniform_int_distribution<int> letter_dist(0, 3);
  auto random_word = [&](int max_len) {
    static const int8_t alphabet[4] = {+1, -1, +2, -2};
    BraidWord w;
    int n = len_dist(rng) % (max_len + 1);
    for (int j = 0; j < n; ++j) w.letters.push_back(alphabet[letter_dist(rng)]);
    return w;
  };

  for (int j = 0; j < word_count; ++j) {
    BraidWord w = random_word(40);
    if (!words_equal(w, braid_word_of(normalize(w))))
      return fail(name, "normal form changed the braid", render_word(w));
  }
  for (int j = 0; j < pair_count; ++j) {
    BraidWord w = random_word(24);
    BraidWord g = random_word(16);
    BraidWord c = conjugate(w, g);
    if (!is_conjugate(w, c))
      return fail(name, "conjugate pair not recognised",
                  render_word(w) + " ~ " + render_word(c));
    NTClassification a = classify(w), b = classify(c);
    if (a.type != b.type)
      return fail(name, "classification not conjugation invariant", render_word(w));
    if (a.type == NTClassification::Type::PseudoAnosov) {
      LUWord la = lu_of_tuple(a.murasugi), lb = lu_of_tuple(b.murasugi);
      if (trace(matrix_of_lu(la)) != trace(matrix_of_lu(lb)))
        return fail(name, "trace not conjugation invariant", render_word(w));
    }
  }
  std::ostringstream d;
  d << word_count << " normal-form identities and " << pair_count
    << " conjugate pairs verified";
  return pass(name, d.str());
}

}  // namespace b3
