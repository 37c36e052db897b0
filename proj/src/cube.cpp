#include "knotcone/cube.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "knotcone/error.hpp"

namespace knotcone {

CubeInstance::CubeInstance(std::int64_t p, std::int64_t q, SurgeryMaps maps) : p_(p), q_(q), maps_(std::move(maps)) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
    throw Error(ErrorCode::InvalidArgument, "cube slope must be a pair of coprime positive integers");
  }
  if (maps_.phi.rows() != maps_.phibar.rows() || maps_.phi.cols() != maps_.phibar.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "phi and phibar must have the same shape");
  }
  if (maps_.psi.rows() != maps_.psibar.rows() || maps_.psi.cols() != maps_.psibar.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "psi and psibar must have the same shape");
  }
  eta_ = mul(maps_.psi, maps_.phi);
  etabar_ = mul(maps_.psibar, maps_.phibar);
}

void CubeInstance::override_compositions(Gf2Matrix eta, Gf2Matrix etabar) {
  eta_ = std::move(eta);
  etabar_ = std::move(etabar);
}

Gf2Matrix cube_assemble(const CubeInstance& inst) {
  const auto& m = inst.maps();
  if (inst.eta() != mul(m.psi, m.phi)) throw Error(ErrorCode::Validation, "eta differs from psi * phi");
  if (inst.etabar() != mul(m.psibar, m.phibar)) throw Error(ErrorCode::Validation, "etabar differs from psibar * phibar");

  const std::size_t P = static_cast<std::size_t>(inst.p());
  const std::size_t Q = static_cast<std::size_t>(inst.q());
  const std::size_t dinf = inst.dim_inf();
  const std::size_t d1 = inst.dim_one();
  const std::size_t d0 = inst.dim_zero();
  const std::size_t base_one = inst.copies_inf() * dinf;
  const std::size_t base_zero = base_one + inst.copies_one() * d1;

  // Offsets of copy k (1-based) in each summand.
  auto inf_at = [&](std::size_t k) { return (k - 1) * dinf; };
  auto one_at = [&](std::size_t k) { return base_one + (k - 1) * d1; };
  auto zero_at = [&](std::size_t k) { return base_zero + (k - 1) * d0; };

  Gf2Matrix d(inst.total_dim(), inst.total_dim());
  if (P >= Q) {
    for (std::size_t i = 1; i <= Q; ++i) {
      d.add_block(zero_at(i + P - Q), inf_at(i), inst.eta());
      d.add_block(zero_at(i), inf_at(i), inst.etabar());
    }
    for (std::size_t j = 1; j <= P - Q; ++j) {
      d.add_block(zero_at(j), one_at(j), m.psi);
      d.add_block(zero_at(j + Q), one_at(j), m.psibar);
    }
  } else {
    for (std::size_t i = 1; i <= P; ++i) {
      d.add_block(zero_at(i), inf_at(i), inst.etabar());
      d.add_block(zero_at(i), inf_at(i + Q - P), inst.eta());
    }
    for (std::size_t j = 1; j <= Q - P; ++j) {
      d.add_block(one_at(j), inf_at(j), m.phi);
      d.add_block(one_at(j), inf_at(j + P), m.phibar);
    }
  }
  return d;
}

namespace {

class BitSource {
 public:
  explicit BitSource(std::uint64_t seed) : engine_(seed) {}

  bool next() {
    if (left_ == 0) {
      word_ = engine_();
      left_ = 64;
    }
    const bool bit = word_ & 1u;
    word_ >>= 1;
    --left_;
    return bit;
  }

  Gf2Matrix matrix(std::size_t rows, std::size_t cols) {
    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (next()) m.set(r, c);
      }
    }
    return m;
  }

  Gf2Matrix invertible(std::size_t n) {
    // A uniform random matrix is invertible with probability > 0.28.
    for (int attempt = 0; attempt < 512; ++attempt) {
      Gf2Matrix m = matrix(n, n);
      if (rank(m) == n) return m;
    }
    throw Error(ErrorCode::Internal, "failed to sample an invertible matrix");
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

Gf2Matrix columns(const Gf2Matrix& m, std::size_t first, std::size_t count) {
  Gf2Matrix out(m.rows(), count);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < count; ++c) out.set(r, c, m.get(r, first + c));
  }
  return out;
}

}  // namespace

SurgeryMaps simple_blocks(const SimpleSurgeryParams& params, Count h0, std::uint64_t seed) {
  const std::size_t r = params.r;
  const std::size_t s = params.s;
  const std::size_t x = params.x;
  const std::size_t w = params.w;
  if (x < r || x > 2 * r || x > h0) {
    throw Error(ErrorCode::Domain, "infeasible block parameters: need r <= x <= min(2r, h0), got r=" +
                                       std::to_string(r) + " x=" + std::to_string(x) + " h0=" + std::to_string(h0));
  }
  BitSource bits(seed);
  const std::size_t dim_inf = 2 * r + s + w;
  const std::size_t dim_one = 2 * r + s;

  SurgeryMaps maps;
  maps.phi = Gf2Matrix(dim_one, dim_inf);
  maps.phi.place(0, 0, Gf2Matrix::identity(r + s));
  maps.phibar = Gf2Matrix(dim_one, dim_inf);
  maps.phibar.place(r, r, bits.invertible(s));
  maps.phibar.place(r + s, r + s, Gf2Matrix::identity(r));

  // Columns of a random basis of F^h0: the first r span im Psi, the next
  // x - r complete im Psi + im Upsilon.
  const Gf2Matrix frame = bits.invertible(h0);
  const Gf2Matrix psi_block = mul(columns(frame, 0, r), bits.invertible(r));
  const std::size_t shared = 2 * r - x;
  const Gf2Matrix upsilon_basis =
      hstack(columns(mul(psi_block, bits.invertible(r)), 0, shared), columns(frame, r, x - r));
  const Gf2Matrix upsilon_block = mul(upsilon_basis, bits.invertible(r));

  maps.psi = Gf2Matrix(h0, dim_one);
  maps.psi.place(0, 0, psi_block);
  maps.psibar = Gf2Matrix(h0, dim_one);
  maps.psibar.place(0, r + s, upsilon_block);
  return maps;
}

CubeSummary summarize(const CubeInstance& inst) {
  const Gf2Matrix d = cube_assemble(inst);
  CubeSummary out;
  out.total_dim = d.rows();
  out.rank = rank(d);
  out.homology_rank = out.total_dim - 2 * out.rank;
  out.squares_to_zero = mul(d, d).is_zero();
  return out;
}

CubeInstance knot_cube(const SimpleSurgeryParams& params, Count h0, std::int64_t p, std::int64_t q,
                       std::uint64_t seed) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
    throw Error(ErrorCode::InvalidArgument, "surgery slope must be a pair of coprime positive integers");
  }
  return CubeInstance(p, p + q, simple_blocks(params, h0, seed));
}

}  // namespace knotcone
