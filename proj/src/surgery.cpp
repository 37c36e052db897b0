#include "knotcone/surgery.hpp"

#include <algorithm>

#include "knotcone/error.hpp"
#include "knotcone/spinc.hpp"

namespace knotcone {

bool ConeReport::residues_distinct() const {
  return std::all_of(by_class.begin(), by_class.end(), [](const auto& kv) { return kv.second.size() <= 1; });
}

Count dual_knot_rank(const GradedComplex& c, std::int64_t n, std::int64_t s) {
  const std::int64_t partner = cone_partner(n, RelSpinC{s}).j;
  const Count total = total_homology_rank(c);
  const Count connecting = restriction_rank(c, s, partner);
  return ell(c, s) + ell(c, partner) + total - 2 * connecting;
}

std::pair<std::int64_t, std::int64_t> dual_knot_window(const GradedComplex& c, std::int64_t n) {
  if (c.empty()) return {0, -1};
  const std::int64_t lo = *c.min_grading();
  const std::int64_t hi = *c.max_grading();
  // Below the window T_s is all of C and T_{n+1-s} is empty (and vice versa
  // above it), so the connecting map is an isomorphism onto H(T_s).
  return {std::min(lo, n + 1 - hi), std::max(hi, n + 1 - lo)};
}

void finalize_report(ConeReport& report) {
  report.total = 0;
  report.by_class.clear();
  for (const auto& [s, rank] : report.per_s) {
    report.total += rank;
    if (rank != 0 && report.n != 0) report.by_class[reduce_mod(s, report.n)].emplace_back(s, rank);
  }
  report.simple.reset();
  if (report.hf_rank) report.simple = report.total == *report.hf_rank;
}

ConeReport dual_knot_table(const GradedComplex& c, std::int64_t n, std::optional<Count> hf_rank) {
  ConeReport report;
  report.n = n;
  std::tie(report.window_lo, report.window_hi) = dual_knot_window(c, n);
  for (std::int64_t s = report.window_lo; s <= report.window_hi; ++s) report.per_s[s] = dual_knot_rank(c, n, s);
  report.hf_rank = hf_rank;
  finalize_report(report);
  return report;
}

namespace {

struct BasisElement {
  std::int64_t grading;
  std::size_t copy;
};

// Basis of B for a trivial-differential profile, ordered by grading g..-g.
std::vector<BasisElement> profile_basis(const RankVector& ell) {
  std::vector<BasisElement> basis;
  const auto g = static_cast<std::int64_t>(ell.top());
  for (std::int64_t j = g; j >= -g; --j) {
    const Count count = ell[static_cast<std::size_t>(j < 0 ? -j : j)];
    for (std::size_t k = 0; k < count; ++k) basis.push_back({j, k});
  }
  return basis;
}

std::size_t dual_index(const std::vector<BasisElement>& basis, std::size_t i) {
  const auto& e = basis[i];
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].grading == -e.grading && basis[k].copy == e.copy) return k;
  }
  throw Error(ErrorCode::Internal, "profile basis is not symmetric");
}

}  // namespace

Gf2Matrix trivial_cone_map(const RankVector& ell, std::int64_t a_lo, std::int64_t a_hi, std::int64_t b_lo,
                           std::int64_t b_hi, std::int64_t shift) {
  const auto basis = profile_basis(ell);
  const std::size_t dim = basis.size();
  const auto a_copies = static_cast<std::size_t>(std::max<std::int64_t>(0, a_hi - a_lo + 1));
  const auto b_copies = static_cast<std::size_t>(std::max<std::int64_t>(0, b_hi - b_lo + 1));
  std::vector<std::size_t> dual(dim);
  for (std::size_t i = 0; i < dim; ++i) dual[i] = dual_index(basis, i);

  Gf2Matrix m(b_copies * dim, a_copies * dim);
  auto row_of = [&](std::int64_t t, std::size_t i) -> std::optional<std::size_t> {
    if (t < b_lo || t > b_hi) return std::nullopt;
    return static_cast<std::size_t>(t - b_lo) * dim + i;
  };
  for (std::int64_t s = a_lo; s <= a_hi; ++s) {
    const std::size_t col0 = static_cast<std::size_t>(s - a_lo) * dim;
    for (std::size_t i = 0; i < dim; ++i) {
      const std::int64_t j = basis[i].grading;
      // v_s: identity on H{>=s}, zero below.
      if (j >= s) {
        if (auto r = row_of(s, i)) m.flip(*r, col0 + i);
      }
      // h_s: duality on H{<=s}, landing in H{>=-s} of the shifted copy.
      if (j <= s) {
        if (auto r = row_of(s + shift, dual[i])) m.flip(*r, col0 + i);
      }
    }
  }
  return m;
}

Count integer_surgery_rank(const RankVector& ell, std::int64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "integer surgery coefficient must be nonzero");
  const auto g = static_cast<std::int64_t>(ell.top());
  const std::int64_t abs_n = n < 0 ? -n : n;
  const std::int64_t a_lo = -g - abs_n - 1;
  const std::int64_t a_hi = g + abs_n + 1;
  // A_s with s < a_lo is matched isomorphically to (s, B) by v_s, and A_s with
  // s > a_hi to (s - n, B) by h_s. Quotienting by these acyclic pieces leaves
  // the copies (t, B) with a_lo <= t <= a_hi - n.
  const std::int64_t b_lo = a_lo;
  const std::int64_t b_hi = a_hi - n;
  const Gf2Matrix m = trivial_cone_map(ell, a_lo, a_hi, b_lo, b_hi, -n);
  return m.rows() + m.cols() - 2 * rank(m);
}

Gf2Matrix build_D1(const RankVector& ell) {
  const auto g = static_cast<std::int64_t>(ell.top());
  return trivial_cone_map(ell, -g, g, -g, g + 1, +1);
}

}  // namespace knotcone
