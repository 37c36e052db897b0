#include "knotcone/complex_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "knotcone/error.hpp"

namespace knotcone {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::Parse, msg); }

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) fail("unknown field \"" + key + "\" in " + where);
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing field \"") + key + "\" in " + where);
  return *it;
}

}  // namespace

GradedComplex parse_complex(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be an object");
  reject_unknown_fields(doc, {"name", "generators", "arrows"}, "complex");

  const json& name = require(doc, "name", "complex");
  if (!name.is_string()) fail("\"name\" must be a string");

  const json& gens_json = require(doc, "generators", "complex");
  if (!gens_json.is_array()) fail("\"generators\" must be an array");
  std::vector<Generator> gens;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < gens_json.size(); ++i) {
    const json& g = gens_json[i];
    const std::string where = "generator #" + std::to_string(i);
    if (!g.is_object()) fail(where + " must be an object");
    reject_unknown_fields(g, {"id", "alexander"}, where);
    const json& id = require(g, "id", where);
    const json& a = require(g, "alexander", where);
    if (!id.is_string()) fail(where + ": \"id\" must be a string");
    if (!a.is_number_integer()) fail(where + ": \"alexander\" must be an integer");
    gens.push_back({id.get<std::string>(), a.get<Grading>()});
    // Duplicates are kept; validate() reports them and arrows bind to the first.
    index.emplace(gens.back().id, i);
  }

  const json& arrows_json = require(doc, "arrows", "complex");
  if (!arrows_json.is_array()) fail("\"arrows\" must be an array");
  std::vector<Arrow> arrows;
  std::set<Arrow> seen;
  for (std::size_t i = 0; i < arrows_json.size(); ++i) {
    const json& a = arrows_json[i];
    const std::string where = "arrow #" + std::to_string(i);
    if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string()) {
      fail(where + " must be a pair of generator ids");
    }
    const auto src = index.find(a[0].get<std::string>());
    const auto dst = index.find(a[1].get<std::string>());
    if (src == index.end()) fail(where + ": unknown generator \"" + a[0].get<std::string>() + "\"");
    if (dst == index.end()) fail(where + ": unknown generator \"" + a[1].get<std::string>() + "\"");
    const Arrow arrow{src->second, dst->second};
    if (!seen.insert(arrow).second) fail(where + ": duplicate arrow " + src->first + " -> " + dst->first);
    arrows.push_back(arrow);
  }
  return GradedComplex(name.get<std::string>(), std::move(gens), std::move(arrows));
}

std::string complex_to_json(const GradedComplex& c) {
  nlohmann::ordered_json doc;
  doc["name"] = c.name();
  doc["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : c.generators()) {
    nlohmann::ordered_json entry;
    entry["id"] = g.id;
    entry["alexander"] = g.alexander;
    doc["generators"].push_back(entry);
  }
  doc["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : c.arrows()) {
    doc["arrows"].push_back({c.generators()[a.src].id, c.generators()[a.dst].id});
  }
  return doc.dump(2) + "\n";
}

GradedComplex read_complex_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

GradedComplex load_complex(const std::filesystem::path& path) {
  GradedComplex c = read_complex_file(path);
  const auto errors = validate(c);
  if (!errors.empty()) {
    std::string msg;
    for (const auto& e : errors) msg += (msg.empty() ? "" : "\n") + e;
    throw Error(ErrorCode::Validation, msg);
  }
  return c;
}

}  // namespace knotcone
