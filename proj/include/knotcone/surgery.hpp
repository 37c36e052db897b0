#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "knotcone/gf2.hpp"
#include "knotcone/graded_complex.hpp"
#include "knotcone/rank_calculus.hpp"

namespace knotcone {

// Per-Spin^c ranks of the knot Floer homology of the dual knot K_n in X_n(K).
struct ConeReport {
  std::int64_t n = 0;
  // Inclusive interval outside which every rank vanishes.
  std::int64_t window_lo = 0;
  std::int64_t window_hi = -1;
  // One entry per s in the window, zeros included.
  std::map<std::int64_t, Count> per_s;
  // Nonzero entries grouped by s mod |n|; empty when n = 0.
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, Count>>> by_class;
  Count total = 0;
  std::optional<Count> hf_rank;
  std::optional<bool> simple;

  // True when no residue class holds more than one nonzero entry.
  bool residues_distinct() const;
};

// dim H of C_n(s) = H{>=s} (+) H{>=n+1-s} (+) H with the projection-induced
// connecting map.
Count dual_knot_rank(const GradedComplex& c, std::int64_t n, std::int64_t s);

// Smallest interval [lo, hi] outside of which dual_knot_rank(c, n, .) is zero.
std::pair<std::int64_t, std::int64_t> dual_knot_window(const GradedComplex& c, std::int64_t n);

ConeReport dual_knot_table(const GradedComplex& c, std::int64_t n, std::optional<Count> hf_rank = std::nullopt);

// Fills total, by_class and simple from per_s, n and hf_rank.
void finalize_report(ConeReport& report);

// Rank of H of the mapping cone of d_n = h_n + v for a trivial-differential
// profile, with h_n^s : A_s -> (s - n, B). Throws Error(InvalidArgument) for n = 0.
Count integer_surgery_rank(const RankVector& ell, std::int64_t n);

// Matrix of the truncated cone map with A_s for s in [a_lo, a_hi] and B
// copies (t, B) for t in [b_lo, b_hi]; h_s lands in (s + shift, B).
// Columns are ordered by (s, basis element of B), rows by (t, basis element).
Gf2Matrix trivial_cone_map(const RankVector& ell, std::int64_t a_lo, std::int64_t a_hi, std::int64_t b_lo,
                           std::int64_t b_hi, std::int64_t shift);

// D_1 : (+)_{s=-g}^{g} A_s -> (+)_{s=-g}^{g+1} (s, B); h_s lands in (s + 1, B).
Gf2Matrix build_D1(const RankVector& ell);

}  // namespace knotcone
