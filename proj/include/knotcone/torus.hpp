#pragma once

// The torus knots T(2, 2n+1) and their duals in m-surgery.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotcone/graded_complex.hpp"
#include "knotcone/rank_calculus.hpp"
#include "knotcone/surgery.hpp"

namespace knotcone {

// 2n+1 generators at gradings n, n-1, ..., -n; arrows from n-2i+1 to n-2i
// for i = 1..n. Throws Error(InvalidArgument) for n = 0.
GradedComplex staircase(std::int64_t n);

// 0 if s > n; 2 if |s| <= n and s - n is odd; 1 otherwise.
Count ell_closed(std::int64_t n, std::int64_t s);

// |ell(s) + ell(m+1-s) - 1|
Count hm_rank_closed(std::int64_t n, std::int64_t m, std::int64_t s);

// Dual-knot report computed by the cone engine and checked entry by entry
// against hm_rank_closed (a mismatch throws Error(Internal)). Without
// hf_rank the L-space value m is assumed when m >= 2n-1; otherwise the
// report carries no verdict.
ConeReport torus_report(std::int64_t n, std::int64_t m, std::optional<Count> hf_rank = std::nullopt);

struct ScanRow {
  std::int64_t n = 0;
  std::int64_t m = 0;
  Count total = 0;
  Count hf = 0;
  bool simple = false;
};

// Rows for 1 <= n <= n_max and 2n-1 <= m <= m_max, ordered by (n, m).
std::vector<ScanRow> simple_scan(std::int64_t n_max, std::int64_t m_max);

// Header "n\tm\ttotal\thf\tsimple" followed by one line per row.
std::string scan_to_tsv(const std::vector<ScanRow>& rows);

}  // namespace knotcone
