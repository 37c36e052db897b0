#include "knotcone.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "knotcone/borromean.hpp"
#include "knotcone/complex_io.hpp"
#include "knotcone/cube.hpp"
#include "knotcone/error.hpp"
#include "knotcone/rank_calculus.hpp"
#include "knotcone/report_io.hpp"
#include "knotcone/surgery.hpp"
#include "knotcone/torus.hpp"

struct kc_complex {
  knotcone::GradedComplex value;
};

struct kc_rank_vector {
  knotcone::RankVector value;
};

struct kc_cone_report {
  knotcone::ConeReport value;
};

namespace {

thread_local std::string last_error;

kc_status to_status(knotcone::ErrorCode code) {
  using knotcone::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return KC_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return KC_ERR_DIMENSION;
    case ErrorCode::NotAChainMap: return KC_ERR_NOT_A_CHAIN_MAP;
    case ErrorCode::NotADifferential: return KC_ERR_NOT_A_DIFFERENTIAL;
    case ErrorCode::Parse: return KC_ERR_PARSE;
    case ErrorCode::Validation: return KC_ERR_VALIDATION;
    case ErrorCode::Domain: return KC_ERR_DOMAIN;
    case ErrorCode::Internal: return KC_ERR_INTERNAL;
  }
  return KC_ERR_INTERNAL;
}

kc_status fail(kc_status status, std::string msg) {
  last_error = std::move(msg);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
kc_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return KC_OK;
  } catch (const knotcone::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KC_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define KC_REQUIRE(ptr) \
  if ((ptr) == nullptr) return fail(KC_ERR_INVALID_ARGUMENT, #ptr " must not be NULL")

std::optional<knotcone::Count> optional_count(const uint64_t* p) {
  if (p == nullptr) return std::nullopt;
  return *p;
}

}  // namespace

extern "C" {

const char* kc_version(void) { return "1.0.0"; }

const char* kc_last_error(void) { return last_error.c_str(); }

const char* kc_status_name(kc_status status) {
  switch (status) {
    case KC_OK: return "ok";
    case KC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KC_ERR_PARSE: return "parse error";
    case KC_ERR_VALIDATION: return "validation error";
    case KC_ERR_DOMAIN: return "domain error";
    case KC_ERR_DIMENSION: return "dimension mismatch";
    case KC_ERR_NOT_A_CHAIN_MAP: return "not a chain map";
    case KC_ERR_NOT_A_DIFFERENTIAL: return "not a differential";
    case KC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void kc_string_free(char* s) { std::free(s); }

kc_status kc_complex_parse(const char* json_text, kc_complex** out) {
  KC_REQUIRE(json_text);
  KC_REQUIRE(out);
  return guarded([&] { *out = new kc_complex{knotcone::parse_complex(json_text)}; });
}

kc_status kc_complex_read_file(const char* path, kc_complex** out) {
  KC_REQUIRE(path);
  KC_REQUIRE(out);
  return guarded([&] { *out = new kc_complex{knotcone::read_complex_file(path)}; });
}

kc_status kc_complex_load_file(const char* path, kc_complex** out) {
  KC_REQUIRE(path);
  KC_REQUIRE(out);
  return guarded([&] { *out = new kc_complex{knotcone::load_complex(path)}; });
}

kc_status kc_complex_staircase(int64_t n, kc_complex** out) {
  KC_REQUIRE(out);
  return guarded([&] { *out = new kc_complex{knotcone::staircase(n)}; });
}

kc_status kc_complex_borromean(kc_complex** out) {
  KC_REQUIRE(out);
  return guarded([&] { *out = new kc_complex{knotcone::borromean::fixture()}; });
}

void kc_complex_free(kc_complex* c) { delete c; }

kc_status kc_complex_size(const kc_complex* c, size_t* out) {
  KC_REQUIRE(c);
  KC_REQUIRE(out);
  *out = c->value.size();
  return KC_OK;
}

kc_status kc_complex_validate(const kc_complex* c, size_t* violations, char** messages) {
  KC_REQUIRE(c);
  KC_REQUIRE(violations);
  return guarded([&] {
    const auto errors = knotcone::validate(c->value);
    std::string text;
    for (const auto& e : errors) text += e + "\n";
    if (messages != nullptr) *messages = copy_string(text);
    *violations = errors.size();
  });
}

kc_status kc_complex_to_json(const kc_complex* c, char** out) {
  KC_REQUIRE(c);
  KC_REQUIRE(out);
  return guarded([&] { *out = copy_string(knotcone::complex_to_json(c->value)); });
}

kc_status kc_complex_total_homology_rank(const kc_complex* c, uint64_t* out) {
  KC_REQUIRE(c);
  KC_REQUIRE(out);
  return guarded([&] { *out = knotcone::total_homology_rank(c->value); });
}

kc_status kc_complex_ell(const kc_complex* c, int64_t s, uint64_t* out) {
  KC_REQUIRE(c);
  KC_REQUIRE(out);
  return guarded([&] { *out = knotcone::ell(c->value, s); });
}

kc_status kc_complex_restriction_rank(const kc_complex* c, int64_t s1, int64_t s2, uint64_t* out) {
  KC_REQUIRE(c);
  KC_REQUIRE(out);
  return guarded([&] { *out = knotcone::restriction_rank(c->value, s1, s2); });
}

kc_status kc_rank_vector_parse(const char* text, kc_rank_vector** out) {
  KC_REQUIRE(text);
  KC_REQUIRE(out);
  return guarded([&] { *out = new kc_rank_vector{knotcone::RankVector::parse(text)}; });
}

kc_status kc_rank_vector_create(const uint64_t* ell, size_t len, kc_rank_vector** out) {
  KC_REQUIRE(out);
  if (len > 0) KC_REQUIRE(ell);
  return guarded([&] {
    std::vector<knotcone::Count> values(ell, ell + len);
    *out = new kc_rank_vector{knotcone::RankVector(std::move(values))};
  });
}

void kc_rank_vector_free(kc_rank_vector* v) { delete v; }

kc_status kc_rank_summary_compute(const kc_rank_vector* v, kc_rank_summary* out) {
  KC_REQUIRE(v);
  KC_REQUIRE(out);
  return guarded([&] {
    const auto& ell = v->value;
    kc_rank_summary r{};
    r.genus = knotcone::genus(ell);
    r.h_inf = knotcone::h_inf(ell);
    r.h_minus_one = knotcone::h_minus_one(ell);
    r.y_one = knotcone::y_one(ell);
    r.gap = knotcone::simplicity_gap(ell);
    r.kernel_d1 = knotcone::kernel_d1_size(ell);
    *out = r;
  });
}

kc_status kc_y_pq(const kc_rank_vector* v, int64_t p, int64_t q, uint64_t* out) {
  KC_REQUIRE(v);
  KC_REQUIRE(out);
  return guarded([&] { *out = knotcone::y_pq(v->value, knotcone::FramedSlope(p, q)); });
}

kc_status kc_integer_surgery_rank(const kc_rank_vector* v, int64_t n, uint64_t* out) {
  KC_REQUIRE(v);
  KC_REQUIRE(out);
  return guarded([&] { *out = knotcone::integer_surgery_rank(v->value, n); });
}

kc_status kc_surgery_params_compute(const kc_rank_vector* v, uint64_t h0, kc_surgery_params* out) {
  KC_REQUIRE(v);
  KC_REQUIRE(out);
  return guarded([&] {
    const auto p = knotcone::surgery_params(v->value, h0);
    *out = kc_surgery_params{p.r, p.s, p.x, p.w};
  });
}

kc_status kc_dual_knot_rank(const kc_complex* c, int64_t n, int64_t s, uint64_t* out) {
  KC_REQUIRE(c);
  KC_REQUIRE(out);
  return guarded([&] { *out = knotcone::dual_knot_rank(c->value, n, s); });
}

kc_status kc_dual_knot_table(const kc_complex* c, int64_t n, const uint64_t* hf_rank, kc_cone_report** out) {
  KC_REQUIRE(c);
  KC_REQUIRE(out);
  return guarded([&] { *out = new kc_cone_report{knotcone::dual_knot_table(c->value, n, optional_count(hf_rank))}; });
}

kc_status kc_torus_report(int64_t n, int64_t m, const uint64_t* hf_rank, kc_cone_report** out) {
  KC_REQUIRE(out);
  return guarded([&] { *out = new kc_cone_report{knotcone::torus_report(n, m, optional_count(hf_rank))}; });
}

void kc_cone_report_free(kc_cone_report* r) { delete r; }

kc_status kc_cone_report_total(const kc_cone_report* r, uint64_t* out) {
  KC_REQUIRE(r);
  KC_REQUIRE(out);
  *out = r->value.total;
  return KC_OK;
}

kc_status kc_cone_report_simple(const kc_cone_report* r, int* out) {
  KC_REQUIRE(r);
  KC_REQUIRE(out);
  *out = r->value.simple ? (*r->value.simple ? 1 : 0) : -1;
  return KC_OK;
}

kc_status kc_cone_report_format(const kc_cone_report* r, kc_format format, char** out) {
  KC_REQUIRE(r);
  KC_REQUIRE(out);
  if (format != KC_FORMAT_JSON && format != KC_FORMAT_TSV) return fail(KC_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    *out = copy_string(format == KC_FORMAT_JSON ? knotcone::report_to_json(r->value)
                                                : knotcone::report_to_tsv(r->value));
  });
}

kc_status kc_torus_scan(int64_t n_max, int64_t m_max, char** tsv_out) {
  KC_REQUIRE(tsv_out);
  return guarded([&] { *tsv_out = copy_string(knotcone::scan_to_tsv(knotcone::simple_scan(n_max, m_max))); });
}

kc_status kc_cube_run(const kc_cube_request* request, kc_cube_result* out) {
  KC_REQUIRE(request);
  KC_REQUIRE(out);
  const kc_cube_request& rq = *request;
  if (2 * rq.x < rq.h0) {
    return fail(KC_ERR_DOMAIN, "h0 = " + std::to_string(rq.h0) + " exceeds 2x = " + std::to_string(2 * rq.x) +
                                   "; the fourth column block would have negative size");
  }
  return guarded([&] {
    const knotcone::SimpleSurgeryParams params{rq.r, rq.s, rq.x, 2 * rq.x - rq.h0};
    const auto inst = knotcone::knot_cube(params, rq.h0, rq.p, rq.q, rq.seed);
    const auto summary = knotcone::summarize(inst);
    const uint64_t p = static_cast<uint64_t>(rq.p);
    const uint64_t q = static_cast<uint64_t>(rq.q);
    kc_cube_result r{};
    r.w = params.w;
    r.total_dim = summary.total_dim;
    r.rank = summary.rank;
    r.homology_rank = summary.homology_rank;
    r.rank_formula = q * (2 * rq.r + rq.s) + p * rq.x;
    r.y_pq = p * (2 * rq.r + rq.s) + q * params.w;
    r.squares_to_zero = summary.squares_to_zero ? 1 : 0;
    *out = r;
  });
}

kc_status kc_borromean_report(char** json_out) {
  KC_REQUIRE(json_out);
  return guarded([&] { *json_out = copy_string(knotcone::borromean::report_to_json(knotcone::borromean::report())); });
}

}  // extern "C"
