#pragma once

// Rational surgery cube complex assembled from the maps
//   phi, phibar : H_inf -> H_1,   psi, psibar : H_1 -> H_0,
// with eta = psi phi and etabar = psibar phibar.
//
// For slope P/Q the complex has Q copies of H_inf, |P - Q| copies of H_1 and
// P copies of H_0. With copies numbered from 1:
//
//   P >= Q:  eta^i    : H_inf(i) -> H_0(i + P - Q)   i = 1..Q
//            etabar^i : H_inf(i) -> H_0(i)
//            psi^j    : H_1(j)   -> H_0(j)           j = 1..P-Q
//            psibar^j : H_1(j)   -> H_0(j + Q)
//
//   Q > P:   etabar^i : H_inf(i)         -> H_0(i)   i = 1..P
//            eta^i    : H_inf(i + Q - P) -> H_0(i)
//            phi^j    : H_inf(j)         -> H_1(j)   j = 1..Q-P
//            phibar^j : H_inf(j + P)     -> H_1(j)

#include <cstdint>

#include "knotcone/gf2.hpp"
#include "knotcone/rank_calculus.hpp"

namespace knotcone {

struct SurgeryMaps {
  Gf2Matrix phi;
  Gf2Matrix phibar;
  Gf2Matrix psi;
  Gf2Matrix psibar;
};

class CubeInstance {
 public:
  // Throws Error(InvalidArgument) unless p, q >= 1 are coprime, and
  // Error(DimensionMismatch) when the four maps do not compose.
  CubeInstance(std::int64_t p, std::int64_t q, SurgeryMaps maps);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  const SurgeryMaps& maps() const noexcept { return maps_; }
  const Gf2Matrix& eta() const noexcept { return eta_; }
  const Gf2Matrix& etabar() const noexcept { return etabar_; }

  std::size_t dim_inf() const noexcept { return maps_.phi.cols(); }
  std::size_t dim_one() const noexcept { return maps_.phi.rows(); }
  std::size_t dim_zero() const noexcept { return maps_.psi.rows(); }

  std::size_t copies_inf() const noexcept { return static_cast<std::size_t>(q_); }
  std::size_t copies_one() const noexcept { return static_cast<std::size_t>(p_ > q_ ? p_ - q_ : q_ - p_); }
  std::size_t copies_zero() const noexcept { return static_cast<std::size_t>(p_); }
  std::size_t total_dim() const noexcept {
    return copies_inf() * dim_inf() + copies_one() * dim_one() + copies_zero() * dim_zero();
  }

  // Replaces eta/etabar; cube_assemble rejects instances where they no
  // longer equal the compositions.
  void override_compositions(Gf2Matrix eta, Gf2Matrix etabar);

 private:
  std::int64_t p_;
  std::int64_t q_;
  SurgeryMaps maps_;
  Gf2Matrix eta_;
  Gf2Matrix etabar_;
};

// Full differential, rows and columns ordered H_inf copies, H_1 copies,
// H_0 copies. Throws Error(Validation) if eta != psi phi or
// etabar != psibar phibar.
Gf2Matrix cube_assemble(const CubeInstance& inst);

// Block presentations for a knot with trivial differential, in bases adapted
// to the dual knot L of -1 surgery:
//   phi    = [[I_r,0,0,0],[0,I_s,0,0],[0,0,0,0]]
//   phibar = [[0,0,0,0],[0,Xi,0,0],[0,0,I_r,0]]
//   psi    = [Psi | 0 | 0],   psibar = [0 | 0 | Upsilon]
// Columns of phi split as (r, s, r, w); Xi is a random invertible s x s
// matrix; Psi, Upsilon are random injective h0 x r matrices with
// rank [Psi | Upsilon] = x. Deterministic in `seed`.
// Throws Error(Domain) unless r <= x <= min(2r, h0).
SurgeryMaps simple_blocks(const SimpleSurgeryParams& params, Count h0, std::uint64_t seed);

struct CubeSummary {
  std::size_t total_dim = 0;
  std::size_t rank = 0;
  std::size_t homology_rank = 0;
  bool squares_to_zero = false;
};

CubeSummary summarize(const CubeInstance& inst);

// Cube for p/q surgery on K, realized as p/(p+q) surgery on L.
CubeInstance knot_cube(const SimpleSurgeryParams& params, Count h0, std::int64_t p, std::int64_t q,
                       std::uint64_t seed);

}  // namespace knotcone
