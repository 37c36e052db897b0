#include "knotcone/spinc.hpp"

#include <numeric>

#include "knotcone/error.hpp"

namespace knotcone {

FramedSlope::FramedSlope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (q < 1) throw Error(ErrorCode::InvalidArgument, "slope denominator must be positive");
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "slope " + std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms");
  }
}

SpinCQuotient::SpinCQuotient(std::int64_t m) : m_(m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "Spin^c modulus must be nonzero");
}

std::int64_t reduce_mod(RelSpinC s, const SpinCQuotient& q) {
  const std::int64_t m = q.modulus() < 0 ? -q.modulus() : q.modulus();
  const std::int64_t r = s.j % m;
  return r < 0 ? r + m : r;
}

std::int64_t reduce_mod(std::int64_t s, std::int64_t m) { return reduce_mod(RelSpinC{s}, SpinCQuotient(m)); }

}  // namespace knotcone
