// knotcone command-line front end. Talks to the engine only through the C API.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotcone.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int exit_code;
  std::string message;
};

void check(kc_status status) {
  if (status != KC_OK) throw Failure{kExitDomain, std::string(kc_status_name(status)) + ": " + kc_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { kc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ComplexDeleter {
  void operator()(kc_complex* c) const { kc_complex_free(c); }
};
using ComplexPtr = std::unique_ptr<kc_complex, ComplexDeleter>;

struct RankVectorDeleter {
  void operator()(kc_rank_vector* v) const { kc_rank_vector_free(v); }
};
using RankVectorPtr = std::unique_ptr<kc_rank_vector, RankVectorDeleter>;

struct ReportDeleter {
  void operator()(kc_cone_report* r) const { kc_cone_report_free(r); }
};
using ReportPtr = std::unique_ptr<kc_cone_report, ReportDeleter>;

RankVectorPtr parse_ell(const std::string& text) {
  kc_rank_vector* raw = nullptr;
  check(kc_rank_vector_parse(text.c_str(), &raw));
  return RankVectorPtr(raw);
}

ComplexPtr load(const std::string& path) {
  kc_complex* raw = nullptr;
  check(kc_complex_load_file(path.c_str(), &raw));
  return ComplexPtr(raw);
}

// Flat objects print as "key\tvalue" lines in TSV mode.
void emit(const ordered_json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    std::cout << key << "\t" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

void emit_report(const kc_cone_report* report, const std::string& format) {
  char* raw = nullptr;
  check(kc_cone_report_format(report, format == "json" ? KC_FORMAT_JSON : KC_FORMAT_TSV, &raw));
  OwnedString text(raw);
  std::cout << text.get();
}

// Calls fn(&out) and prints the returned string.
template <class Fn>
void print_string(Fn&& fn) {
  char* raw = nullptr;
  const kc_status status = fn(&raw);
  OwnedString text(raw);
  check(status);
  std::cout << text.get();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact GF(2) surgery-formula engine for knot Floer homology ranks", "knotcone"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

  std::string ell_text;
  std::string complex_path;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::optional<std::int64_t> s_opt;
  std::optional<std::uint64_t> hf_opt;
  std::int64_t n_max = 0;
  std::int64_t m_max = 0;
  std::uint64_t cube_r = 0, cube_s = 0, cube_x = 0, cube_h0 = 0, seed = 0;
  bool export_complex = false;

  auto* ranks = app.add_subcommand("ranks", "Closed-form ranks of a trivial-differential profile");
  ranks->add_option("--ell", ell_text, "Ranks l_0,...,l_g")->required();

  auto* ypq = app.add_subcommand("ypq", "Rank of HF of p/q surgery for a trivial-differential profile");
  ypq->add_option("--ell", ell_text, "Ranks l_0,...,l_g")->required();
  ypq->add_option("-p", p, "Numerator")->required();
  ypq->add_option("-q", q, "Denominator")->required();

  auto* cone = app.add_subcommand("cone", "Dual-knot ranks of n-surgery on a knot complex");
  cone->add_option("--complex", complex_path, "Knot complex JSON file")->required();
  cone->add_option("-n", n, "Surgery coefficient")->required();
  cone->add_option("-s", s_opt, "Single relative Spin^c structure");
  cone->add_option("--hf", hf_opt, "Rank of HF of the surgered manifold");

  auto* torus = app.add_subcommand("torus", "Dual knot of m-surgery on T(2,2n+1)");
  torus->add_option("-n", n, "Torus knot index (T(2,2n+1))")->required();
  torus->add_option("-m", m, "Surgery coefficient");
  torus->add_option("--hf", hf_opt, "Rank of HF of the surgered manifold");
  torus->add_flag("--export-complex", export_complex, "Print the staircase complex instead");

  auto* scan = app.add_subcommand("torus-scan", "Simplicity scan over T(2,2n+1) and m");
  scan->add_option("--n-max", n_max, "Largest n")->required();
  scan->add_option("--m-max", m_max, "Largest m")->required();

  auto* cube = app.add_subcommand("cube", "Assemble the rational surgery cube from seeded block forms");
  cube->add_option("--r", cube_r, "r = sum of l_j, j >= 1")->required();
  cube->add_option("--s", cube_s, "s = l_0")->required();
  cube->add_option("--x", cube_x, "x = rank [Psi | Upsilon]")->required();
  cube->add_option("--h0", cube_h0, "rank of H_0 of the dual knot")->required();
  cube->add_option("-p", p, "Numerator")->required();
  cube->add_option("-q", q, "Denominator")->required();
  cube->add_option("--seed", seed, "Sampling seed");

  auto* borromean = app.add_subcommand("borromean", "Borromean knot regression report");
  borromean->add_flag("--export-complex", export_complex, "Print the grading-zero complex instead");

  auto* check_cmd = app.add_subcommand("check", "Validate a knot complex file");
  check_cmd->add_option("--complex", complex_path, "Knot complex JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (ranks->parsed()) {
      auto v = parse_ell(ell_text);
      kc_rank_summary sum{};
      check(kc_rank_summary_compute(v.get(), &sum));
      ordered_json doc;
      doc["gap"] = sum.gap;
      doc["genus"] = sum.genus;
      doc["h_inf"] = sum.h_inf;
      doc["h_minus_one"] = sum.h_minus_one;
      doc["kernel_d1"] = sum.kernel_d1;
      doc["y_one"] = sum.y_one;
      emit(doc, format);
    } else if (ypq->parsed()) {
      auto v = parse_ell(ell_text);
      std::uint64_t y = 0;
      check(kc_y_pq(v.get(), p, q, &y));
      ordered_json doc;
      doc["ell"] = ell_text;
      doc["p"] = p;
      doc["q"] = q;
      doc["y_pq"] = y;
      emit(doc, format);
    } else if (cone->parsed()) {
      auto c = load(complex_path);
      if (s_opt) {
        std::uint64_t rank = 0;
        check(kc_dual_knot_rank(c.get(), n, *s_opt, &rank));
        ordered_json doc;
        doc["n"] = n;
        doc["rank"] = rank;
        doc["s"] = *s_opt;
        emit(doc, format);
      } else {
        kc_cone_report* raw = nullptr;
        const std::uint64_t hf = hf_opt.value_or(0);
        check(kc_dual_knot_table(c.get(), n, hf_opt ? &hf : nullptr, &raw));
        ReportPtr report(raw);
        emit_report(report.get(), format);
      }
    } else if (torus->parsed()) {
      if (export_complex) {
        kc_complex* raw = nullptr;
        check(kc_complex_staircase(n, &raw));
        ComplexPtr c(raw);
        print_string([&](char** out) { return kc_complex_to_json(c.get(), out); });
      } else {
        if (torus->count("-m") == 0) throw Failure{kExitUsage, "usage error: torus needs -m"};
        kc_cone_report* raw = nullptr;
        const std::uint64_t hf = hf_opt.value_or(0);
        check(kc_torus_report(n, m, hf_opt ? &hf : nullptr, &raw));
        ReportPtr report(raw);
        emit_report(report.get(), format);
      }
    } else if (scan->parsed()) {
      print_string([&](char** out) { return kc_torus_scan(n_max, m_max, out); });
    } else if (cube->parsed()) {
      const kc_cube_request request{cube_r, cube_s, cube_x, cube_h0, p, q, seed};
      kc_cube_result result{};
      check(kc_cube_run(&request, &result));
      ordered_json doc;
      doc["h0"] = cube_h0;
      doc["homology_rank"] = result.homology_rank;
      doc["p"] = p;
      doc["q"] = q;
      doc["r"] = cube_r;
      doc["rank"] = result.rank;
      doc["rank_formula"] = result.rank_formula;
      doc["s"] = cube_s;
      doc["seed"] = seed;
      doc["squares_to_zero"] = result.squares_to_zero != 0;
      doc["total_dim"] = result.total_dim;
      doc["w"] = result.w;
      doc["x"] = cube_x;
      doc["y_pq"] = result.y_pq;
      emit(doc, format);
    } else if (borromean->parsed()) {
      if (export_complex) {
        kc_complex* raw = nullptr;
        check(kc_complex_borromean(&raw));
        ComplexPtr c(raw);
        print_string([&](char** out) { return kc_complex_to_json(c.get(), out); });
      } else {
        print_string([](char** out) { return kc_borromean_report(out); });
      }
    } else if (check_cmd->parsed()) {
      kc_complex* raw = nullptr;
      check(kc_complex_read_file(complex_path.c_str(), &raw));
      ComplexPtr c(raw);
      std::size_t violations = 0;
      char* messages = nullptr;
      check(kc_complex_validate(c.get(), &violations, &messages));
      OwnedString text(messages);
      ordered_json doc;
      doc["ok"] = violations == 0;
      doc["violations"] = violations;
      emit(doc, format);
      if (violations != 0) {
        std::cerr << text.get();
        return kExitDomain;
      }
    }
  } catch (const Failure& f) {
    std::cerr << f.message << "\n";
    return f.exit_code;
  }
  return 0;
}
