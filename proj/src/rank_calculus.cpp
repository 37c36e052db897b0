#include "knotcone/rank_calculus.hpp"

#include <algorithm>
#include <charconv>

#include "knotcone/error.hpp"

namespace knotcone {

RankVector::RankVector(std::vector<Count> ell) : ell_(std::move(ell)) {
  if (ell_.empty()) throw Error(ErrorCode::InvalidArgument, "rank vector must have at least one entry");
  if (ell_.size() > 1 && ell_.back() == 0) {
    throw Error(ErrorCode::InvalidArgument, "rank vector has a trailing zero; the top grading must be nonzero");
  }
}

RankVector RankVector::parse(std::string_view text) {
  std::vector<Count> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    Count v = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw Error(ErrorCode::Parse, "bad rank vector entry \"" + std::string(field) + "\"");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return RankVector(std::move(values));
}

std::vector<std::string> RankVector::warnings() const {
  std::vector<std::string> out;
  if (ell_[0] == 0 && ell_.size() > 1) out.push_back("l_0 = 0: no knot in a homology sphere has this profile");
  return out;
}

std::string RankVector::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < ell_.size(); ++j) out += (j ? "," : "") + std::to_string(ell_[j]);
  return out;
}

Count h_inf(const RankVector& ell) {
  Count total = ell[0];
  for (std::size_t j = 1; j <= ell.top(); ++j) total += 2 * ell[j];
  return total;
}

Count h_minus_one(const RankVector& ell) {
  Count total = ell[0];
  for (std::size_t j = 1; j <= ell.top(); ++j) total += 4 * j * ell[j];
  return total;
}

Count y_one(const RankVector& ell) {
  Count total = ell[0];
  for (std::size_t i = 1; i <= ell.top(); ++i) total += 2 * (2 * i - 1) * ell[i];
  return total;
}

Count kernel_d1_size(const RankVector& ell) {
  Count total = 0;
  for (std::size_t j = 1; j <= ell.top(); ++j) total += 2 * (j - 1) * ell[j];
  return total;
}

Count genus(const RankVector& ell) {
  const auto& v = ell.values();
  for (std::size_t j = v.size(); j-- > 0;) {
    if (v[j] != 0) return j;
  }
  throw Error(ErrorCode::Domain, "genus of the zero rank vector is undefined");
}

Count y_pq(const RankVector& ell, const FramedSlope& slope) {
  if (slope.is_infinity() || slope.p() < 1) {
    throw Error(ErrorCode::InvalidArgument, "y_pq needs a positive finite slope");
  }
  const Count p = static_cast<Count>(slope.p());
  const Count q = static_cast<Count>(slope.q());
  return p * h_inf(ell) + q * (h_minus_one(ell) - h_inf(ell));
}

Count simplicity_gap(const RankVector& ell) { return h_minus_one(ell) - y_one(ell); }

SimpleSurgeryParams surgery_params(const RankVector& ell, Count h0_L) {
  SimpleSurgeryParams out;
  for (std::size_t j = 1; j <= ell.top(); ++j) out.r += ell[j];
  out.s = ell[0];
  const Count hm1 = h_minus_one(ell);
  const Count hinf = h_inf(ell);
  out.w = hm1 - 2 * out.r - out.s;
  const Count twice_x = hm1 + h0_L - hinf;
  if (twice_x % 2 != 0) {
    throw Error(ErrorCode::Domain, "parity violation: h_-1 + h0_L - h_inf = " + std::to_string(twice_x) +
                                       " is odd, so no integral x exists");
  }
  out.x = twice_x / 2;
  if (out.x < out.r || out.x > std::min(2 * out.r, h0_L)) {
    throw Error(ErrorCode::Domain, "x = " + std::to_string(out.x) + " outside [r, min(2r, h0_L)] = [" +
                                       std::to_string(out.r) + ", " + std::to_string(std::min(2 * out.r, h0_L)) +
                                       "]; h0_L is inconsistent with the profile");
  }
  return out;
}

}  // namespace knotcone
