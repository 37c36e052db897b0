#include "knotcone/graded_complex.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_map>

#include "knotcone/error.hpp"

namespace knotcone {

GradedComplex::GradedComplex(std::string name, std::vector<Generator> generators, std::vector<Arrow> arrows)
    : name_(std::move(name)), generators_(std::move(generators)), arrows_(std::move(arrows)) {
  for (const auto& a : arrows_) {
    if (a.src >= generators_.size() || a.dst >= generators_.size()) {
      throw Error(ErrorCode::InvalidArgument, "arrow refers to a generator index out of range");
    }
  }
  std::sort(arrows_.begin(), arrows_.end());
  if (std::adjacent_find(arrows_.begin(), arrows_.end()) != arrows_.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate arrow");
  }
}

std::optional<Grading> GradedComplex::min_grading() const {
  if (generators_.empty()) return std::nullopt;
  return std::min_element(generators_.begin(), generators_.end(),
                          [](const Generator& a, const Generator& b) { return a.alexander < b.alexander; })
      ->alexander;
}

std::optional<Grading> GradedComplex::max_grading() const {
  if (generators_.empty()) return std::nullopt;
  return std::max_element(generators_.begin(), generators_.end(),
                          [](const Generator& a, const Generator& b) { return a.alexander < b.alexander; })
      ->alexander;
}

Gf2Matrix GradedComplex::differential() const {
  Gf2Matrix d(size(), size());
  for (const auto& a : arrows_) d.set(a.dst, a.src);
  return d;
}

std::vector<std::string> validate(const GradedComplex& c) {
  std::vector<std::string> errors;
  std::set<std::string> seen;
  for (const auto& g : c.generators()) {
    if (!seen.insert(g.id).second) errors.push_back("duplicate generator id \"" + g.id + "\"");
  }
  for (const auto& a : c.arrows()) {
    const auto& src = c.generators()[a.src];
    const auto& dst = c.generators()[a.dst];
    if (dst.alexander >= src.alexander) {
      errors.push_back("arrow must strictly decrease grading: " + src.id + " (" + std::to_string(src.alexander) +
                       ") -> " + dst.id + " (" + std::to_string(dst.alexander) + ")");
    }
  }
  const Gf2Matrix d = c.differential();
  const Gf2Matrix d2 = mul(d, d);
  for (std::size_t r = 0; r < d2.rows(); ++r) {
    for (std::size_t col = 0; col < d2.cols(); ++col) {
      if (d2.get(r, col)) {
        errors.push_back("d^2 != 0: " + c.generators()[col].id + " reaches " + c.generators()[r].id +
                         " along an odd number of paths of length 2");
      }
    }
  }
  return errors;
}

namespace {

// Generators retained by a truncation, as indices into the parent.
std::vector<std::size_t> retained(const GradedComplex& c, Grading s) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.generators()[i].alexander >= s) keep.push_back(i);
  }
  return keep;
}

// Matrix of the quotient projection C -> T_s.
Gf2Matrix projection(const GradedComplex& c, const std::vector<std::size_t>& keep) {
  Gf2Matrix p(keep.size(), c.size());
  for (std::size_t k = 0; k < keep.size(); ++k) p.set(k, keep[k]);
  return p;
}

}  // namespace

GradedComplex truncate_ge(const GradedComplex& c, Grading s) {
  const auto keep = retained(c, s);
  std::vector<std::size_t> new_index(c.size(), c.size());
  std::vector<Generator> gens;
  gens.reserve(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    new_index[keep[k]] = k;
    gens.push_back(c.generators()[keep[k]]);
  }
  std::vector<Arrow> arrows;
  for (const auto& a : c.arrows()) {
    if (new_index[a.src] < c.size() && new_index[a.dst] < c.size()) {
      arrows.push_back({new_index[a.src], new_index[a.dst]});
    }
  }
  return GradedComplex(c.name() + "{>=" + std::to_string(s) + "}", std::move(gens), std::move(arrows));
}

std::size_t total_homology_rank(const GradedComplex& c) { return homology_rank(c.differential()); }

std::size_t ell(const GradedComplex& c, Grading s) { return total_homology_rank(truncate_ge(c, s)); }

std::size_t restriction_rank(const GradedComplex& c, Grading s1, Grading s2) {
  const std::array<Grading, 2> thresholds{s1, s2};
  std::array<Gf2Matrix, 2> targets;
  Gf2Matrix combined(0, c.size());
  for (std::size_t k = 0; k < 2; ++k) {
    targets[k] = truncate_ge(c, thresholds[k]).differential();
    combined = vstack(combined, projection(c, retained(c, thresholds[k])));
  }
  return induced_homology_map_rank(c.differential(), block_diagonal(targets), combined);
}

GradedComplex dualize(const GradedComplex& c) {
  std::vector<Generator> gens = c.generators();
  for (auto& g : gens) g.alexander = -g.alexander;
  std::vector<Arrow> arrows;
  arrows.reserve(c.arrows().size());
  for (const auto& a : c.arrows()) arrows.push_back({a.dst, a.src});
  return GradedComplex(c.name() + "*", std::move(gens), std::move(arrows));
}

GradedComplex trivial_complex(const std::vector<std::size_t>& ell_by_grading, std::string name) {
  std::vector<Generator> gens;
  const auto g = static_cast<Grading>(ell_by_grading.size()) - 1;
  for (Grading j = g; j >= -g; --j) {
    const std::size_t count = ell_by_grading[static_cast<std::size_t>(j < 0 ? -j : j)];
    for (std::size_t k = 0; k < count; ++k) {
      gens.push_back({"b" + std::to_string(j) + "_" + std::to_string(k), j});
    }
  }
  return GradedComplex(std::move(name), std::move(gens), {});
}

}  // namespace knotcone
