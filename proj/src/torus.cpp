#include "knotcone/torus.hpp"

#include <cstdlib>
#include <future>

#include "knotcone/error.hpp"

namespace knotcone {

GradedComplex staircase(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "staircase needs n >= 1; use a one-generator complex for n = 0");
  std::vector<Generator> gens;
  for (std::int64_t a = n; a >= -n; --a) gens.push_back({"x" + std::to_string(a), a});
  // Generator at grading a sits at index n - a.
  auto at = [n](std::int64_t a) { return static_cast<std::size_t>(n - a); };
  std::vector<Arrow> arrows;
  for (std::int64_t i = 1; i <= n; ++i) arrows.push_back({at(n - 2 * i + 1), at(n - 2 * i)});
  return GradedComplex("T(2," + std::to_string(2 * n + 1) + ")", std::move(gens), std::move(arrows));
}

Count ell_closed(std::int64_t n, std::int64_t s) {
  if (s > n) return 0;
  if (std::llabs(s) <= n && std::llabs(s - n) % 2 == 1) return 2;
  return 1;
}

Count hm_rank_closed(std::int64_t n, std::int64_t m, std::int64_t s) {
  const auto v = static_cast<std::int64_t>(ell_closed(n, s) + ell_closed(n, m + 1 - s)) - 1;
  return static_cast<Count>(v < 0 ? -v : v);
}

ConeReport torus_report(std::int64_t n, std::int64_t m, std::optional<Count> hf_rank) {
  if (!hf_rank && m >= 2 * n - 1) hf_rank = static_cast<Count>(m);
  ConeReport report = dual_knot_table(staircase(n), m, hf_rank);
  for (const auto& [s, rank] : report.per_s) {
    const Count closed = hm_rank_closed(n, m, s);
    if (closed != rank) {
      throw Error(ErrorCode::Internal, "closed form and cone engine disagree at n=" + std::to_string(n) +
                                           " m=" + std::to_string(m) + " s=" + std::to_string(s) + ": " +
                                           std::to_string(closed) + " vs " + std::to_string(rank));
    }
  }
  return report;
}

std::vector<ScanRow> simple_scan(std::int64_t n_max, std::int64_t m_max) {
  if (n_max < 1 || m_max < 1) throw Error(ErrorCode::InvalidArgument, "scan bounds must be at least 1");
  // One job per n; rows are collected in job order, never completion order.
  std::vector<std::future<std::vector<ScanRow>>> jobs;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    jobs.push_back(std::async(std::launch::async, [n, m_max] {
      std::vector<ScanRow> rows;
      for (std::int64_t m = 2 * n - 1; m <= m_max; ++m) {
        const ConeReport r = torus_report(n, m);
        rows.push_back({n, m, r.total, *r.hf_rank, *r.simple});
      }
      return rows;
    }));
  }
  std::vector<ScanRow> rows;
  for (auto& job : jobs) {
    for (auto& row : job.get()) rows.push_back(row);
  }
  return rows;
}

std::string scan_to_tsv(const std::vector<ScanRow>& rows) {
  std::string out = "n\tm\ttotal\thf\tsimple\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "\t" + std::to_string(r.m) + "\t" + std::to_string(r.total) + "\t" +
           std::to_string(r.hf) + "\t" + (r.simple ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace knotcone
