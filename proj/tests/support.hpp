#pragma once

// Random inputs for property tests. All generators are seeded so failures
// reproduce.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "knotcone/gf2.hpp"
#include "knotcone/graded_complex.hpp"

namespace support {

using knotcone::Gf2Matrix;

inline Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  Gf2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (bit(rng)) m.set(r, c);
    }
  }
  return m;
}

// Invertible P together with its inverse, built from elementary row
// operations (each is its own inverse).
inline std::pair<Gf2Matrix, Gf2Matrix> random_invertible(std::mt19937_64& rng, std::size_t n) {
  Gf2Matrix p = Gf2Matrix::identity(n);
  Gf2Matrix inv = Gf2Matrix::identity(n);
  if (n < 2) return {p, inv};
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t step = 0; step < 4 * n; ++step) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    if (i == j) continue;
    Gf2Matrix e = Gf2Matrix::identity(n);
    e.set(j, i);
    p = knotcone::mul(e, p);
    inv = knotcone::mul(inv, e);
  }
  return {p, inv};
}

// A differential on F^n with `pairs` cancelling pairs, in a scrambled basis.
inline Gf2Matrix random_differential(std::mt19937_64& rng, std::size_t n, std::size_t pairs) {
  Gf2Matrix d0(n, n);
  for (std::size_t k = 0; k < pairs; ++k) d0.set(2 * k + 1, 2 * k);
  const auto [p, inv] = random_invertible(rng, n);
  return knotcone::mul(knotcone::mul(p, d0), inv);
}

// A valid graded complex: cancelling pairs across gradings, then a filtered
// change of basis that only adds strictly lower generators.
inline knotcone::GradedComplex random_complex(std::mt19937_64& rng, std::size_t size, std::int64_t lo,
                                              std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> grade(lo, hi);
  std::vector<knotcone::Generator> gens;
  for (std::size_t i = 0; i < size; ++i) gens.push_back({"g" + std::to_string(i), grade(rng)});
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.alexander > b.alexander; });

  Gf2Matrix d0(size, size);
  std::vector<bool> used(size, false);
  std::bernoulli_distribution coin(0.6);
  for (std::size_t i = 0; i < size; ++i) {
    if (used[i] || !coin(rng)) continue;
    for (std::size_t j = i + 1; j < size; ++j) {
      if (!used[j] && gens[j].alexander < gens[i].alexander) {
        d0.set(j, i);
        used[i] = used[j] = true;
        break;
      }
    }
  }

  // u = I + N with N strictly lower in grading; u^-1 = I + N + N^2 + ...
  Gf2Matrix nil(size, size);
  std::bernoulli_distribution sparse(0.3);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      if (gens[r].alexander < gens[c].alexander && sparse(rng)) nil.set(r, c);
    }
  }
  const Gf2Matrix u = knotcone::add(Gf2Matrix::identity(size), nil);
  Gf2Matrix inv = Gf2Matrix::identity(size);
  Gf2Matrix power = Gf2Matrix::identity(size);
  for (std::size_t k = 0; k < size; ++k) {
    power = knotcone::mul(power, nil);
    inv = knotcone::add(inv, power);
  }
  const Gf2Matrix d = knotcone::mul(knotcone::mul(u, d0), inv);

  std::vector<knotcone::Arrow> arrows;
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      if (d.get(r, c)) arrows.push_back({c, r});
    }
  }
  return knotcone::GradedComplex("random", std::move(gens), std::move(arrows));
}

}  // namespace support
