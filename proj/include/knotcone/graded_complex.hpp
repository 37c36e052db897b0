#pragma once

// Alexander-graded chain complexes over the two-element field.
//
// Convention: the differential strictly decreases the Alexander grading.
// Generators below a threshold s therefore span a subcomplex, and the
// truncation at s is the quotient complex on the generators with
// grading >= s.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotcone/gf2.hpp"

namespace knotcone {

using Grading = std::int64_t;

struct Generator {
  std::string id;
  Grading alexander = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// An arrow src -> dst is a differential coefficient of 1; indices refer to
// positions in the generator list.
struct Arrow {
  std::size_t src = 0;
  std::size_t dst = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

class GradedComplex {
 public:
  GradedComplex() = default;
  // Arrows are stored sorted. Indices must be in range and arrows distinct;
  // violations of the remaining invariants are reported by validate().
  GradedComplex(std::string name, std::vector<Generator> generators, std::vector<Arrow> arrows);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }

  std::optional<Grading> min_grading() const;
  std::optional<Grading> max_grading() const;

  // Square matrix with entry (dst, src) = 1 for every arrow.
  Gf2Matrix differential() const;

  friend bool operator==(const GradedComplex&, const GradedComplex&) = default;

 private:
  std::string name_;
  std::vector<Generator> generators_;
  std::vector<Arrow> arrows_;
};

// All invariant violations; empty means valid.
std::vector<std::string> validate(const GradedComplex& c);

GradedComplex truncate_ge(const GradedComplex& c, Grading s);

std::size_t total_homology_rank(const GradedComplex& c);

// Homology rank of truncate_ge(c, s).
std::size_t ell(const GradedComplex& c, Grading s);

// Rank of H(C) -> H(T_s1) (+) H(T_s2) induced by the two projections.
std::size_t restriction_rank(const GradedComplex& c, Grading s1, Grading s2);

// Reverses every arrow and negates every grading; ids are preserved.
GradedComplex dualize(const GradedComplex& c);

// Complex with no arrows; ell_by_grading[j] generators at grading j and at -j.
GradedComplex trivial_complex(const std::vector<std::size_t>& ell_by_grading, std::string name = "trivial");

}  // namespace knotcone
