#pragma once

// The Borromean knot B in #^2(S^1 x S^2) after -1 surgery: the grading-zero
// part of its knot Floer complex in the canonical Spin^c class.
//
// The twelve generators (i,j,k) of Alexander grading 0 are encoded with a
// two-level auxiliary filtration (arrow sources at level 1, everything else
// at level 0) so that every arrow strictly decreases the stored grading.
// Their true Alexander grading is 0; see BorromeanGenerator::h.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "knotcone/graded_complex.hpp"
#include "knotcone/rank_calculus.hpp"

namespace knotcone::borromean {

struct BorromeanGenerator {
  int x = 0;  // 1..5
  int y = 0;  // 1..6
  int z = 0;  // 1..6
  int h = 0;  // Alexander grading, -1..1

  std::string id() const;
  friend bool operator==(const BorromeanGenerator&, const BorromeanGenerator&) = default;
};

// All sixteen generators of the canonical class, grouped by h.
const std::vector<BorromeanGenerator>& generators();

using Triple = std::array<int, 3>;
// The five differentials among the grading-zero generators.
const std::vector<std::pair<Triple, Triple>>& arrows();

GradedComplex fixture();
// fixture() with arrows()[skip] left out; used to show the fifth arrow matters.
GradedComplex fixture_without(std::size_t skip);

Count grading_zero_rank();

struct Report {
  std::map<int, Count> ranks_by_grading;
  Count total = 0;
  Count prediction = 0;  // h_{-1} of the profile (2,1)
  bool discrepancy = false;
  std::string note;
};

Report report();
std::string report_to_json(const Report& r);

}  // namespace knotcone::borromean
