#pragma once

// Relative Spin^c structures of a framed knot in a homology sphere, in
// integer coordinates j = (c1(s) - PD[mu]) / 2.

#include <cstdint>

namespace knotcone {

struct RelSpinC {
  std::int64_t j = 0;

  friend auto operator<=>(const RelSpinC&, const RelSpinC&) = default;
};

// Coprime surgery slope p/q with q >= 1. Integer surgery is (n, 1); the
// meridional slope 1/0 is the distinguished value infinity().
class FramedSlope {
 public:
  // Throws Error(InvalidArgument) unless q >= 1 and gcd(|p|, q) = 1.
  FramedSlope(std::int64_t p, std::int64_t q);
  static FramedSlope integer(std::int64_t n) { return FramedSlope(n, 1); }
  static FramedSlope infinity() { return FramedSlope(); }

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  bool is_infinity() const noexcept { return q_ == 0; }
  bool is_integer() const noexcept { return q_ == 1; }

  friend bool operator==(const FramedSlope&, const FramedSlope&) = default;

 private:
  FramedSlope() : p_(1), q_(0) {}
  std::int64_t p_;
  std::int64_t q_;
};

class SpinCQuotient {
 public:
  // Throws Error(InvalidArgument) for m = 0.
  explicit SpinCQuotient(std::int64_t m);
  std::int64_t modulus() const noexcept { return m_; }

 private:
  std::int64_t m_;
};

constexpr RelSpinC conj(RelSpinC s) noexcept { return {-s.j}; }

// Second truncation threshold of the dual-knot cone C_n(s): n + 1 - s.
constexpr RelSpinC cone_partner(std::int64_t n, RelSpinC s) noexcept { return {n + 1 - s.j}; }

// Residue of s.j in [0, |m|).
std::int64_t reduce_mod(RelSpinC s, const SpinCQuotient& q);
std::int64_t reduce_mod(std::int64_t s, std::int64_t m);

}  // namespace knotcone
