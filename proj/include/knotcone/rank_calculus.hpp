#pragma once

// Closed-form rank bookkeeping for knots whose filtered complex has trivial
// differential, i.e. rank HFK = rank HF.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "knotcone/spinc.hpp"

namespace knotcone {

using Count = std::uint64_t;

// Ranks l_0, ..., l_g of knot Floer homology in Alexander gradings 0..g.
// Grading -j carries l_j implicitly.
class RankVector {
 public:
  // Throws Error(InvalidArgument) on an empty list or a trailing zero when
  // g > 0 (the top grading must be nonzero).
  explicit RankVector(std::vector<Count> ell);
  // Comma-separated text form, e.g. "2,1".
  static RankVector parse(std::string_view text);

  const std::vector<Count>& values() const noexcept { return ell_; }
  std::size_t top() const noexcept { return ell_.size() - 1; }
  Count operator[](std::size_t j) const { return j < ell_.size() ? ell_[j] : 0; }

  // Non-fatal oddities, currently only l_0 = 0.
  std::vector<std::string> warnings() const;

  std::string to_string() const;

  friend bool operator==(const RankVector&, const RankVector&) = default;

 private:
  std::vector<Count> ell_;
};

struct SimpleSurgeryParams {
  Count r = 0;  // sum of l_j over j >= 1
  Count s = 0;  // l_0
  Count x = 0;  // rank [Psi | Upsilon]
  Count w = 0;  // h_{-1} - 2r - s

  friend bool operator==(const SimpleSurgeryParams&, const SimpleSurgeryParams&) = default;
};

Count h_inf(const RankVector& ell);
Count h_minus_one(const RankVector& ell);
Count y_one(const RankVector& ell);
Count kernel_d1_size(const RankVector& ell);
// Throws Error(Domain) for the all-zero vector.
Count genus(const RankVector& ell);
// Requires p, q >= 1 (coprimality is enforced by FramedSlope).
Count y_pq(const RankVector& ell, const FramedSlope& slope);
Count simplicity_gap(const RankVector& ell);
// Throws Error(Domain) on a parity violation or when the recovered x falls
// outside [r, min(2r, h0_L)].
SimpleSurgeryParams surgery_params(const RankVector& ell, Count h0_L);

}  // namespace knotcone
