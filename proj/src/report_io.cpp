#include "knotcone/report_io.hpp"

#include <json.hpp>

#include "knotcone/spinc.hpp"

namespace knotcone {

std::string report_to_json(const ConeReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  ordered_json classes = ordered_json::object();
  for (const auto& [residue, entries] : r.by_class) {
    ordered_json list = ordered_json::array();
    for (const auto& [s, rank] : entries) list.push_back({s, rank});
    classes[std::to_string(residue)] = list;
  }
  doc["by_class"] = classes;
  doc["hf_rank"] = r.hf_rank ? ordered_json(*r.hf_rank) : ordered_json(nullptr);
  doc["n"] = r.n;
  ordered_json per_s = ordered_json::object();
  for (const auto& [s, rank] : r.per_s) per_s[std::to_string(s)] = rank;
  doc["per_s"] = per_s;
  doc["residues_distinct"] = r.residues_distinct();
  doc["simple"] = r.simple ? ordered_json(*r.simple) : ordered_json(nullptr);
  doc["total"] = r.total;
  doc["window"] = {r.window_lo, r.window_hi};
  return doc.dump(2) + "\n";
}

std::string report_to_tsv(const ConeReport& r) {
  std::string out = "s\trank\tresidue\n";
  for (const auto& [s, rank] : r.per_s) {
    if (rank == 0) continue;
    out += std::to_string(s) + "\t" + std::to_string(rank) + "\t" +
           (r.n == 0 ? std::string("-") : std::to_string(reduce_mod(s, r.n))) + "\n";
  }
  out += "total=" + std::to_string(r.total) + " simple=" + (r.simple ? (*r.simple ? "true" : "false") : "none") + "\n";
  return out;
}

}  // namespace knotcone
