#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

const std::string kCli = KNOTCONE_CLI;
const std::string kData = KNOTCONE_TEST_DATA;

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with the given arguments; stderr is folded into out when
// merge_stderr is set and discarded otherwise.
Run run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = "'" + kCli + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args) {
  const Run r = run(args);
  REQUIRE(r.status == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("ranks") {
  const auto doc = run_json("ranks --ell 2,1");
  CHECK(doc["h_inf"] == 4);
  CHECK(doc["h_minus_one"] == 6);
  CHECK(doc["y_one"] == 4);
  CHECK(doc["gap"] == 2);
  CHECK(doc["genus"] == 1);
  CHECK(doc["kernel_d1"] == 0);

  const Run tsv = run("ranks --ell 1,0,1 --format tsv");
  CHECK(tsv.status == 0);
  CHECK(tsv.out.find("kernel_d1\t2\n") != std::string::npos);
  CHECK(tsv.out.find("y_one\t7\n") != std::string::npos);
}

TEST_CASE("ypq") {
  CHECK(run_json("ypq --ell 1,1 -p 2 -q 3")["y_pq"] == 12);
  CHECK(run("ypq --ell 1 -p 4 -q 2").status == 1);
}

TEST_CASE("cone") {
  const auto single = run_json("cone --complex '" + kData + "/trefoil.json' -n 5 -s 0");
  CHECK(single["rank"] == 1);

  const auto table = run_json("cone --complex '" + kData + "/trefoil.json' -n 5 --hf 5");
  CHECK(table["total"] == 5);
  CHECK(table["simple"] == true);
  CHECK(table["residues_distinct"] == true);

  const Run tsv = run("cone --complex '" + kData + "/trefoil.json' -n 1 --format tsv");
  CHECK(tsv.status == 0);
  CHECK(tsv.out.rfind("s\trank\tresidue\n", 0) == 0);
  CHECK(tsv.out.find("total=3 simple=none") != std::string::npos);

  const Run empty = run("cone --complex '" + kData + "/empty.json' -n 3");
  CHECK(empty.status == 0);

  const Run bad = run("cone --complex '" + kData + "/grading_up.json' -n 3", true);
  CHECK(bad.status == 1);
  CHECK(bad.out.find("arrow must strictly decrease grading") != std::string::npos);
}

TEST_CASE("torus") {
  const Run tsv = run("torus -n 1 -m 5 --format tsv");
  CHECK(tsv.status == 0);
  CHECK(tsv.out.find("total=5 simple=true") != std::string::npos);

  const auto doc = run_json("torus -n 1 -m 1");
  CHECK(doc["total"] == 3);
  CHECK(doc["simple"] == false);

  const Run exported = run("torus -n 1 --export-complex");
  CHECK(exported.status == 0);
  std::FILE* f = std::fopen((kData + "/trefoil.json").c_str(), "r");
  REQUIRE(f != nullptr);
  std::string fixture;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0) fixture.append(buf.data(), got);
  std::fclose(f);
  CHECK(exported.out == fixture);

  CHECK(run("torus -n 1").status == 2);
}

TEST_CASE("torus-scan") {
  const Run r = run("torus-scan --n-max 2 --m-max 6");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("n\tm\ttotal\thf\tsimple\n", 0) == 0);
  CHECK(r.out.find("1\t2\t2\t2\ttrue\n") != std::string::npos);
}

TEST_CASE("cube") {
  const auto doc = run_json("cube --r 1 --s 2 --x 2 --h0 2 -p 1 -q 1 --seed 0");
  CHECK(doc["homology_rank"] == 6);
  CHECK(doc["rank"] == doc["rank_formula"]);
  CHECK(doc["squares_to_zero"] == true);
  const Run a = run("cube --r 2 --s 1 --x 3 --h0 4 -p 3 -q 5 --seed 17");
  const Run b = run("cube --r 2 --s 1 --x 3 --h0 4 -p 3 -q 5 --seed 17");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(run("cube --r 1 --s 0 --x 1 --h0 3 -p 1 -q 1").status == 1);
}

TEST_CASE("borromean") {
  const auto doc = run_json("borromean");
  CHECK(doc["total"] == 4);
  CHECK(doc["prediction"] == 6);
  CHECK(doc["discrepancy"] == true);

  const Run exported = run("borromean --export-complex");
  CHECK(exported.status == 0);
  const auto complex = nlohmann::json::parse(exported.out);
  CHECK(complex["generators"].size() == 12);
  CHECK(complex["arrows"].size() == 5);
}

TEST_CASE("check") {
  const auto ok = run_json("check --complex '" + kData + "/trefoil.json'");
  CHECK(ok["ok"] == true);

  const Run bad = run("check --complex '" + kData + "/grading_up.json'", true);
  CHECK(bad.status == 1);
  CHECK(bad.out.find("arrow must strictly decrease grading") != std::string::npos);

  const Run parse = run("check --complex '" + kData + "/unknown_field.json'", true);
  CHECK(parse.status == 1);
  CHECK(parse.out.find("unknown field") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("ranks").status == 2);
  CHECK(run("ranks --ell 1 --format xml").status == 2);
  CHECK(run("--help").status == 0);
  CHECK(run("ranks --ell 1,0").status == 1);
}
