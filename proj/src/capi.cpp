#include "apolar/apolar.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "apolar/campaign.hpp"
#include "apolar/error.hpp"

using namespace apolar;
using Json = nlohmann::ordered_json;

struct apolar_form {
  BinaryForm value;
};

struct apolar_center {
  ProjectionCenter value;
};

namespace {

thread_local std::string last_error;

apolar_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return APOLAR_PARSE_ERROR;
    case ErrorCode::InvalidArgument: return APOLAR_INVALID_ARGUMENT;
    case ErrorCode::ZeroPolynomial: return APOLAR_ZERO_POLYNOMIAL;
    case ErrorCode::ZeroForm: return APOLAR_ZERO_FORM;
    case ErrorCode::ZeroPoint: return APOLAR_ZERO_POINT;
    case ErrorCode::DegreeMismatch: return APOLAR_DEGREE_MISMATCH;
    case ErrorCode::NotSplitOverQ: return APOLAR_NOT_SPLIT_OVER_Q;
    case ErrorCode::LengthTooLarge: return APOLAR_LENGTH_TOO_LARGE;
    case ErrorCode::InvalidCenter: return APOLAR_INVALID_CENTER;
    case ErrorCode::DegenerateMap: return APOLAR_DEGENERATE_MAP;
    case ErrorCode::RankDeficientCombo: return APOLAR_RANK_DEFICIENT_COMBO;
    case ErrorCode::RepeatedParams: return APOLAR_REPEATED_PARAMS;
    case ErrorCode::UnsupportedTheorem: return APOLAR_UNSUPPORTED_THEOREM;
    case ErrorCode::ParameterOutOfRange: return APOLAR_PARAMETER_OUT_OF_RANGE;
    case ErrorCode::IoError: return APOLAR_IO_ERROR;
  }
  return APOLAR_INTERNAL_ERROR;
}

apolar_status fail(apolar_status s, const std::string& what) {
  last_error = what;
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
apolar_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(APOLAR_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(APOLAR_INTERNAL_ERROR, e.what());
  }
}

#define APOLAR_REQUIRE(cond) \
  if (!(cond)) return fail(APOLAR_INVALID_ARGUMENT, "null argument: " #cond)

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Bundle bundle_of(apolar_bundle b) { return b == APOLAR_TANGENT ? Bundle::tangent : Bundle::normal; }

Json rationals(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

Json point_json(const ProjPoint& p) { return Json::array({p.s.get_str(), p.t.get_str()}); }

}  // namespace

extern "C" {

const char* apolar_status_name(apolar_status s) {
  switch (s) {
    case APOLAR_OK: return "Ok";
    case APOLAR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case APOLAR_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  if (s > APOLAR_OK && s <= APOLAR_IO_ERROR) return error_code_name(static_cast<ErrorCode>(s - 1));
  return "Unknown";
}

const char* apolar_last_error(void) { return last_error.c_str(); }

void apolar_string_free(char* s) { delete[] s; }

apolar_status apolar_form_parse(const char* literal, apolar_form** out) {
  APOLAR_REQUIRE(literal && out);
  return guarded([&] {
    *out = new apolar_form{parse_form(literal)};
    return APOLAR_OK;
  });
}

void apolar_form_free(apolar_form* f) { delete f; }

apolar_status apolar_form_degree(const apolar_form* f, unsigned* out) {
  APOLAR_REQUIRE(f && out);
  *out = f->value.degree();
  return APOLAR_OK;
}

apolar_status apolar_form_length(const apolar_form* f, unsigned* out) {
  APOLAR_REQUIRE(f && out);
  return guarded([&] {
    *out = length(f->value);
    return APOLAR_OK;
  });
}

apolar_status apolar_form_ideal_json(const apolar_form* f, char** out) {
  APOLAR_REQUIRE(f && out);
  return guarded([&] {
    ApolarIdeal I = apolar_ideal(f->value);
    Json j;
    j["n"] = I.n;
    j["s"] = I.s;
    j["alpha"] = rationals(I.alpha.coeffs());
    j["beta"] = rationals(I.beta.coeffs());
    j["hilbert"] = I.hilbert;
    *out = dup(j.dump());
    return APOLAR_OK;
  });
}

apolar_status apolar_form_decompose_json(const apolar_form* f, char** out) {
  APOLAR_REQUIRE(f && out);
  return guarded([&] {
    Gad g = canonical_form(f->value);
    Json j;
    j["n"] = g.n;
    j["length"] = g.length();
    j["terms"] = Json::array();
    for (const auto& t : g.terms)
      j["terms"].push_back({{"point", point_json(t.point)}, {"g", t.g}, {"G", rationals(t.G.coeffs())}});
    *out = dup(j.dump());
    return APOLAR_OK;
  });
}

apolar_status apolar_center_parse(const char* text, apolar_center** out) {
  APOLAR_REQUIRE(text && out);
  return guarded([&] {
    *out = new apolar_center{parse_center(text)};
    return APOLAR_OK;
  });
}

apolar_status apolar_center_load(const char* path, apolar_center** out) {
  APOLAR_REQUIRE(path && out);
  std::ifstream in(path);
  if (!in) return fail(APOLAR_IO_ERROR, std::string("cannot open ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return apolar_center_parse(buf.str().c_str(), out);
}

void apolar_center_free(apolar_center* c) { delete c; }

apolar_status apolar_center_dims(const apolar_center* c, unsigned* n, unsigned* k) {
  APOLAR_REQUIRE(c && n && k);
  *n = c->value.n();
  *k = c->value.k();
  return APOLAR_OK;
}

apolar_status apolar_center_format(const apolar_center* c, char** out) {
  APOLAR_REQUIRE(c && out);
  return guarded([&] {
    *out = dup(format_center(c->value));
    return APOLAR_OK;
  });
}

apolar_status apolar_splitting(const apolar_center* c, apolar_bundle which, int* buf, size_t capacity,
                               size_t* count) {
  APOLAR_REQUIRE(c && count && (buf || capacity == 0));
  return guarded([&] {
    auto s = bundle_splitting(c->value, bundle_of(which));
    *count = s.size();
    if (capacity < s.size()) return fail(APOLAR_BUFFER_TOO_SMALL, "splitting buffer too small");
    std::copy(s.begin(), s.end(), buf);
    return APOLAR_OK;
  });
}

apolar_status apolar_rank_at_twist_zero(const apolar_center* c, apolar_bundle which, unsigned* out) {
  APOLAR_REQUIRE(c && out);
  return guarded([&] {
    *out = rank_at_twist_zero(c->value, bundle_of(which));
    return APOLAR_OK;
  });
}

apolar_status apolar_section_dims(const apolar_center* c, apolar_bundle which, unsigned j, unsigned* kernel,
                                  unsigned* cokernel) {
  APOLAR_REQUIRE(c && kernel && cokernel);
  return guarded([&] {
    auto m = bundle_map(c->value, bundle_of(which));
    *kernel = section_kernel_dim(m, j);
    *cokernel = section_cokernel_dim(m, j);
    return APOLAR_OK;
  });
}

apolar_status apolar_immersion_check(const apolar_center* c, int* out) {
  APOLAR_REQUIRE(c && out);
  return guarded([&] {
    *out = immersion_check(c->value) ? 1 : 0;
    return APOLAR_OK;
  });
}

apolar_status apolar_codim2_class(const apolar_center* c, int* out) {
  APOLAR_REQUIRE(c && out);
  return guarded([&] {
    auto cls = classify_codim2(c->value);
    *out = cls == Codim2Class::unclassified ? 0 : static_cast<int>(cls);
    return APOLAR_OK;
  });
}

apolar_status apolar_profile_json(const apolar_center* c, char** out) {
  APOLAR_REQUIRE(c && out);
  return guarded([&] {
    auto p = secancy_profile(c->value);
    Json j;
    j["n"] = c->value.n();
    j["k"] = c->value.k();
    j["min_degree"] = p.min_degree;
    j["space_dim"] = p.space_dim;
    if (p.witness) {
      j["witness"] = rationals(p.witness->coeffs());
      auto roots = rational_roots(p.witness->symbol);
      Json r = Json::array();
      for (const auto& root : roots.roots) r.push_back({{"point", point_json(root.point)}, {"multiplicity", root.multiplicity}});
      j["witness_rational_roots"] = r;
    } else {
      j["witness"] = nullptr;
    }
    j["witness_squarefree"] = to_string(p.witness_squarefree);
    j["witness_splits"] = p.witness_splits;
    *out = dup(j.dump());
    return APOLAR_OK;
  });
}

apolar_status apolar_verify_json(const char* theorem_id, unsigned n, unsigned k, unsigned trials, uint64_t seed,
                                 unsigned height, int omit_timing, char** out, unsigned* counterexamples) {
  APOLAR_REQUIRE(theorem_id && out);
  return guarded([&] {
    auto r = run_verification(theorem_id, n, k, trials, seed, height == 0 ? kDefaultHeight : height);
    if (counterexamples) *counterexamples = static_cast<unsigned>(r.counterexamples.size());
    *out = dup(to_json(r, omit_timing != 0).dump(2));
    return APOLAR_OK;
  });
}

apolar_status apolar_sweep(unsigned n, unsigned k, unsigned trials, uint64_t seed, unsigned height, unsigned secant,
                           int omit_timing, char** json, char** csv, unsigned* disagreements) {
  APOLAR_REQUIRE(json || csv || disagreements);
  return guarded([&] {
    auto r = run_sweep(n, k, trials, seed, height == 0 ? kDefaultHeight : height, secant);
    if (disagreements) *disagreements = static_cast<unsigned>(r.disagreements.size());
    if (json) *json = dup(to_json(r, omit_timing != 0).dump(2));
    if (csv) *csv = dup(to_csv(r));
    return APOLAR_OK;
  });
}

apolar_status apolar_codim(const char* family, long n, long k, long r, long* out) {
  APOLAR_REQUIRE(family && out);
  return guarded([&] {
    *out = expected_codim(parse_codim_family(family), n, k, r);
    return APOLAR_OK;
  });
}

}  // extern "C"
