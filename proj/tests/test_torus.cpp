#include <doctest.h>

#include <set>
#include <string>

#include "knotcone/error.hpp"
#include "knotcone/report_io.hpp"
#include "knotcone/spinc.hpp"
#include "knotcone/torus.hpp"

using namespace knotcone;

namespace {

std::set<std::pair<Grading, Grading>> arrow_gradings(const GradedComplex& c) {
  std::set<std::pair<Grading, Grading>> out;
  for (const auto& a : c.arrows()) out.emplace(c.generators()[a.src].alexander, c.generators()[a.dst].alexander);
  return out;
}

}  // namespace

TEST_CASE("staircase") {
  const GradedComplex t1 = staircase(1);
  REQUIRE(t1.size() == 3);
  CHECK(t1.generators()[0].alexander == 1);
  CHECK(t1.generators()[2].alexander == -1);
  CHECK(arrow_gradings(t1) == std::set<std::pair<Grading, Grading>>{{0, -1}});

  const GradedComplex t2 = staircase(2);
  CHECK(t2.size() == 5);
  CHECK(arrow_gradings(t2) == std::set<std::pair<Grading, Grading>>{{1, 0}, {-1, -2}});

  for (std::int64_t n = 1; n <= 10; ++n) {
    const GradedComplex t = staircase(n);
    CHECK(t.size() == static_cast<std::size_t>(2 * n + 1));
    CHECK(t.arrows().size() == static_cast<std::size_t>(n));
    CHECK(validate(t).empty());
    CHECK(total_homology_rank(t) == 1);
  }
  CHECK_THROWS_AS(staircase(0), Error);
  CHECK_THROWS_AS(staircase(-2), Error);
}

TEST_CASE("ell_closed") {
  CHECK(ell_closed(1, 0) == 2);
  CHECK(ell_closed(1, 2) == 0);
  CHECK(ell_closed(3, -5) == 1);
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (std::int64_t s = -n - 2; s <= n + 2; ++s) CHECK(ell_closed(n, s) == ell(staircase(n), s));
  }
}

TEST_CASE("hm_rank_closed") {
  CHECK(hm_rank_closed(1, 5, 0) == 1);
  CHECK(hm_rank_closed(1, 5, -3) == 0);
  CHECK(hm_rank_closed(2, 5, 3) == 1);
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t m = -6; m <= 12; ++m) {
      for (std::int64_t s = -n - 8; s <= n + 14; ++s) {
        CHECK(hm_rank_closed(n, m, s) == dual_knot_rank(staircase(n), m, s));
        CHECK(hm_rank_closed(n, m, s) == hm_rank_closed(n, m, cone_partner(m, RelSpinC{s}).j));
      }
    }
  }
}

TEST_CASE("torus_report") {
  const ConeReport a = torus_report(1, 5);
  CHECK(a.total == 5);
  CHECK(a.simple == true);
  CHECK(a.residues_distinct());

  const ConeReport b = torus_report(1, 1);
  CHECK(b.total == 3);
  CHECK(b.simple == false);

  const ConeReport c = torus_report(2, 3);
  CHECK(c.total == 5);
  CHECK(c.simple == false);

  const ConeReport small = torus_report(3, 2);
  CHECK_FALSE(small.simple.has_value());
  const ConeReport given = torus_report(3, 2, 2);
  CHECK(given.simple.has_value());

  const ConeReport negative = torus_report(2, -4);
  CHECK_FALSE(negative.simple.has_value());
  CHECK(negative.total > 0);

  CHECK_THROWS_AS(torus_report(0, 3), Error);
}

TEST_CASE("L-space totals and simplicity") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t m = 2 * n; m <= 2 * n + 11; ++m) {
      const ConeReport r = torus_report(n, m);
      CHECK(r.total == static_cast<Count>(m));
      if (m % 2 == 1) {
        CHECK(r.simple == true);
        CHECK(r.residues_distinct());
      }
    }
    CHECK(torus_report(n, 2 * n - 1).total == static_cast<Count>(2 * n + 1));
  }
}

TEST_CASE("simple_scan") {
  const auto rows = simple_scan(3, 9);
  std::size_t expected = 0;
  for (std::int64_t n = 1; n <= 3; ++n) expected += static_cast<std::size_t>(9 - (2 * n - 1) + 1);
  REQUIRE(rows.size() == expected);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::make_pair(rows[i - 1].n, rows[i - 1].m) < std::make_pair(rows[i].n, rows[i].m));
  }
  for (const auto& row : rows) {
    if (row.m % 2 == 1 && row.m >= 2 * row.n) CHECK(row.simple);
    if (row.m == 2 * row.n - 1) CHECK(row.total == static_cast<Count>(row.m + 2));
    if (row.n == 1 && row.m == 2) {
      CHECK(row.total == 2);
      CHECK(row.simple);
    }
  }
  const std::string tsv = scan_to_tsv(rows);
  CHECK(tsv.rfind("n\tm\ttotal\thf\tsimple\n", 0) == 0);
  CHECK(scan_to_tsv(simple_scan(3, 9)) == tsv);
}

TEST_CASE("report output") {
  const ConeReport r = torus_report(1, 5);
  const std::string tsv = report_to_tsv(r);
  CHECK(tsv.rfind("s\trank\tresidue\n", 0) == 0);
  CHECK(tsv.find("total=5 simple=true") != std::string::npos);
  const std::string json = report_to_json(r);
  CHECK(json.find("\"total\": 5") != std::string::npos);
  CHECK(json.find("\"simple\": true") != std::string::npos);
  CHECK(report_to_tsv(torus_report(3, 2)).find("simple=none") != std::string::npos);
}
