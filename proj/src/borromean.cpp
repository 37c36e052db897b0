#include "knotcone/borromean.hpp"

#include <algorithm>

#include <json.hpp>

#include "knotcone/error.hpp"

namespace knotcone::borromean {

std::string BorromeanGenerator::id() const {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

const std::vector<BorromeanGenerator>& generators() {
  static const std::vector<BorromeanGenerator> list = {
      // h = 1
      {1, 4, 4, 1}, {2, 3, 4, 1}, {5, 4, 3, 1},
      // h = 0
      {1, 4, 5, 0}, {1, 5, 4, 0}, {2, 1, 6, 0}, {2, 2, 6, 0}, {2, 3, 5, 0}, {3, 3, 1, 0},
      {3, 3, 2, 0}, {4, 1, 3, 0}, {4, 2, 3, 0}, {5, 5, 3, 0}, {5, 6, 1, 0}, {5, 6, 2, 0},
      // h = -1
      {1, 5, 5, -1},
  };
  return list;
}

const std::vector<std::pair<Triple, Triple>>& arrows() {
  // Bigons y1-y2 and z1-z2 give (i,j,2)->(i,j,1) and (i,2,k)->(i,1,k); the
  // rectangle with corners x1, x2, y4, y3 gives (1,4,k)->(2,3,k).
  static const std::vector<std::pair<Triple, Triple>> list = {
      {{3, 3, 2}, {3, 3, 1}}, {{5, 6, 2}, {5, 6, 1}}, {{2, 2, 6}, {2, 1, 6}},
      {{4, 2, 3}, {4, 1, 3}}, {{1, 4, 5}, {2, 3, 5}},
  };
  return list;
}

namespace {

GradedComplex build(std::size_t skip) {
  std::vector<BorromeanGenerator> zero;
  for (const auto& g : generators()) {
    if (g.h == 0) zero.push_back(g);
  }
  auto index_of = [&](const Triple& t) {
    for (std::size_t i = 0; i < zero.size(); ++i) {
      if (zero[i].x == t[0] && zero[i].y == t[1] && zero[i].z == t[2]) return i;
    }
    throw Error(ErrorCode::Internal, "arrow endpoint outside the grading-zero generators");
  };
  std::vector<Generator> gens;
  for (const auto& g : zero) gens.push_back({g.id(), 0});
  std::vector<Arrow> list;
  for (std::size_t k = 0; k < arrows().size(); ++k) {
    if (k == skip) continue;
    const auto src = index_of(arrows()[k].first);
    const auto dst = index_of(arrows()[k].second);
    gens[src].alexander = 1;
    list.push_back({src, dst});
  }
  return GradedComplex("Borromean B_-1, Alexander grading 0", std::move(gens), std::move(list));
}

}  // namespace

GradedComplex fixture() { return build(arrows().size()); }

GradedComplex fixture_without(std::size_t skip) {
  if (skip >= arrows().size()) throw Error(ErrorCode::InvalidArgument, "no such arrow");
  return build(skip);
}

Count grading_zero_rank() { return total_homology_rank(fixture()); }

Report report() {
  Report r;
  // Gradings +-1: I_{-1} is a single generator, and the symmetry gives the
  // same rank at +1. The differential inside I_1 is not computed here.
  r.ranks_by_grading[-1] = 1;
  r.ranks_by_grading[0] = grading_zero_rank();
  r.ranks_by_grading[1] = 1;
  for (const auto& [_, rank] : r.ranks_by_grading) r.total += rank;
  r.prediction = h_minus_one(RankVector({2, 1}));
  r.discrepancy = r.total != r.prediction;
  r.note =
      "X = #^2(S^1 x S^2) has b_1 > 0; the homology-sphere surgery formula predicts rank " +
      std::to_string(r.prediction) + " but the knot Floer homology of B_-1 has rank " + std::to_string(r.total);
  return r;
}

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json doc;
  doc["discrepancy"] = r.discrepancy;
  doc["grading_zero_rank"] = r.ranks_by_grading.at(0);
  doc["note"] = r.note;
  doc["prediction"] = r.prediction;
  nlohmann::ordered_json ranks = nlohmann::ordered_json::object();
  for (const auto& [h, rank] : r.ranks_by_grading) ranks[std::to_string(h)] = rank;
  doc["ranks_by_grading"] = ranks;
  doc["total"] = r.total;
  return doc.dump(2) + "\n";
}

}  // namespace knotcone::borromean
