// Command-line front end over the C interface.
//
// Exit status: 0 success, 2 counterexample or disagreement found, 1 error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apolar/apolar.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;

struct Failure {
  apolar_status status;
  std::string message;
};

void check(apolar_status s) {
  if (s != APOLAR_OK) throw Failure{s, apolar_last_error()};
}

struct StringFree {
  void operator()(char* p) const { apolar_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringFree>;

struct FormFree {
  void operator()(apolar_form* p) const { apolar_form_free(p); }
};
struct CenterFree {
  void operator()(apolar_center* p) const { apolar_center_free(p); }
};

std::unique_ptr<apolar_form, FormFree> load_form(const std::string& literal) {
  apolar_form* f = nullptr;
  check(apolar_form_parse(literal.c_str(), &f));
  return std::unique_ptr<apolar_form, FormFree>(f);
}

// "-" reads the center from standard input.
std::unique_ptr<apolar_center, CenterFree> load_center(const std::string& path) {
  apolar_center* c = nullptr;
  if (path == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    check(apolar_center_parse(text.c_str(), &c));
  } else {
    check(apolar_center_load(path.c_str(), &c));
  }
  return std::unique_ptr<apolar_center, CenterFree>(c);
}

unsigned height_from_env() {
  const char* raw = std::getenv("APOLAR_HEIGHT");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v == 0 || v > 1000000)
    throw Failure{APOLAR_INVALID_ARGUMENT, std::string("APOLAR_HEIGHT must be a positive integer, got '") + raw + "'"};
  return static_cast<unsigned>(v);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{APOLAR_IO_ERROR, "cannot write " + path};
  out << text;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    write_file(out_path, text + "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apolarity, additive decompositions and splitting types of projected rational normal curves"};
  app.require_subcommand(1);

  std::string form_literal, center_path, out_path, csv_path;
  bool as_json = false, omit_timing = false;
  unsigned height = 0;

  auto* apolar_cmd = app.add_subcommand("apolar", "Apolar ideal: s, alpha, beta and Hilbert function");
  apolar_cmd->add_option("form", form_literal, "Form literal a_0,...,a_n")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Canonical generalized additive decomposition");
  decompose_cmd->add_option("form", form_literal, "Form literal a_0,...,a_n")->required();

  auto* split_cmd = app.add_subcommand("splitting", "Normal or restricted tangent splitting type");
  bool normal = false, tangent = false;
  auto* normal_flag = split_cmd->add_flag("--normal", normal, "Normal bundle");
  auto* tangent_flag = split_cmd->add_flag("--tangent", tangent, "Restricted tangent bundle");
  normal_flag->excludes(tangent_flag);
  split_cmd->add_flag("--json", as_json, "Structured output");
  split_cmd->add_option("center", center_path, "Center file, or - for stdin")->required();

  auto* profile_cmd = app.add_subcommand("profile", "Secancy profile of a center");
  profile_cmd->add_option("center", center_path, "Center file, or - for stdin")->required();

  std::string theorem;
  unsigned n = 0, k = 0, trials = 0, secant = 0;
  std::uint64_t seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Seeded verification campaign for one statement");
  verify_cmd->add_option("--theorem", theorem, "point, rank3, rank4, codim3-rank4, mainresult, mainresultTG, ci, sylvester")
      ->required();
  verify_cmd->add_option("--n", n)->required();
  verify_cmd->add_option("--k", k)->required();
  verify_cmd->add_option("--trials", trials)->required();
  verify_cmd->add_option("--seed", seed)->required();
  verify_cmd->add_option("--height", height, "Sampling height (overrides APOLAR_HEIGHT)");
  verify_cmd->add_flag("--omit-timing", omit_timing, "Report wall_time_ms as 0");
  verify_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* sweep_cmd = app.add_subcommand("sweep", "Splitting-type frequencies over random centers");
  sweep_cmd->add_option("--n", n)->required();
  sweep_cmd->add_option("--k", k)->required();
  sweep_cmd->add_option("--trials", trials)->required();
  sweep_cmd->add_option("--seed", seed)->required();
  sweep_cmd->add_option("--secant", secant, "Draw centers inside s-secant spaces");
  sweep_cmd->add_option("--height", height, "Sampling height (overrides APOLAR_HEIGHT)");
  sweep_cmd->add_option("--csv", csv_path, "Also write the frequency table as CSV");
  sweep_cmd->add_flag("--omit-timing", omit_timing, "Report wall_time_ms as 0");
  sweep_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  std::string family;
  long cn = 0, ck = 0, cr = 0;
  auto* codim_cmd = app.add_subcommand("codim", "Expected codimension of a stratum");
  codim_cmd->add_option("--family", family, "normal, tangent or ramella")->required();
  codim_cmd->add_option("--n", cn)->required();
  codim_cmd->add_option("--k", ck)->required();
  codim_cmd->add_option("--r", cr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (height == 0) height = height_from_env();

    if (apolar_cmd->parsed()) {
      auto f = load_form(form_literal);
      char* json = nullptr;
      check(apolar_form_ideal_json(f.get(), &json));
      std::cout << OwnedString(json).get() << "\n";
    } else if (decompose_cmd->parsed()) {
      auto f = load_form(form_literal);
      char* json = nullptr;
      check(apolar_form_decompose_json(f.get(), &json));
      std::cout << OwnedString(json).get() << "\n";
    } else if (split_cmd->parsed()) {
      if (!normal && !tangent) throw Failure{APOLAR_INVALID_ARGUMENT, "pass --normal or --tangent"};
      auto c = load_center(center_path);
      std::vector<int> buf(256);
      size_t count = 0;
      check(apolar_splitting(c.get(), tangent ? APOLAR_TANGENT : APOLAR_NORMAL, buf.data(), buf.size(), &count));
      std::string line;
      for (size_t i = 0; i < count; ++i) line += (i ? "," : "") + std::to_string(buf[i]);
      if (as_json) {
        std::cout << "{\"bundle\":\"" << (tangent ? "tangent" : "normal") << "\",\"splitting\":[" << line << "]}\n";
      } else {
        std::cout << line << "\n";
      }
    } else if (profile_cmd->parsed()) {
      auto c = load_center(center_path);
      char* json = nullptr;
      check(apolar_profile_json(c.get(), &json));
      std::cout << OwnedString(json).get() << "\n";
    } else if (verify_cmd->parsed()) {
      char* json = nullptr;
      unsigned bad = 0;
      check(apolar_verify_json(theorem.c_str(), n, k, trials, seed, height, omit_timing, &json, &bad));
      emit(OwnedString(json).get(), out_path);
      return bad == 0 ? 0 : kExitCounterexample;
    } else if (sweep_cmd->parsed()) {
      char* json = nullptr;
      char* csv = nullptr;
      unsigned bad = 0;
      check(apolar_sweep(n, k, trials, seed, height, secant, omit_timing, &json, &csv, &bad));
      OwnedString json_owned(json), csv_owned(csv);
      emit(json_owned.get(), out_path);
      if (!csv_path.empty()) write_file(csv_path, csv_owned.get());
      return bad == 0 ? 0 : kExitCounterexample;
    } else if (codim_cmd->parsed()) {
      long value = 0;
      check(apolar_codim(family.c_str(), cn, ck, cr, &value));
      std::cout << value << "\n";
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << apolar_status_name(f.status) << ": " << f.message << "\n";
    return kExitError;
  }
  return 0;
}
