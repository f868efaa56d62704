#pragma once

// Seeded verification campaigns for the splitting-type and apolarity
// statements, and stratum sweeps over random projection centers.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "apolar/secants.hpp"

namespace apolar {

struct Counterexample {
  std::string payload;  // center file text, or a form literal for form theorems
  std::string computed;
  std::string expected;
};

struct VerificationReport {
  std::string theorem_id;
  unsigned n = 0;
  unsigned k = 0;
  unsigned trials = 0;
  unsigned passes = 0;
  std::vector<Counterexample> counterexamples;
  nlohmann::ordered_json resolved_values = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;
  std::int64_t wall_time_ms = 0;
};

/// Known ids: point, rank3, rank4, codim3-rank4, mainresult, mainresultTG, ci, sylvester.
const std::vector<std::string>& theorem_ids();

/// Throws UnsupportedTheorem, ParameterOutOfRange.
VerificationReport run_verification(const std::string& theorem_id, unsigned n, unsigned k, unsigned trials,
                                    std::uint64_t seed, unsigned height = kDefaultHeight);

nlohmann::ordered_json to_json(const VerificationReport& r, bool omit_timing = false);

struct SweepReport {
  unsigned n = 0;
  unsigned k = 0;
  unsigned trials = 0;
  unsigned secant = 0;  // 0: unconstrained random centers
  std::uint64_t seed = 0;
  unsigned rejected = 0;  // DegenerateMap samples, resampled
  std::map<std::string, unsigned> splittings;
  std::map<std::string, unsigned> classes;  // k = 2 only
  std::vector<Counterexample> disagreements;
  std::int64_t wall_time_ms = 0;
};

/// Throws ParameterOutOfRange.
SweepReport run_sweep(unsigned n, unsigned k, unsigned trials, std::uint64_t seed,
                      unsigned height = kDefaultHeight, unsigned secant = 0);

nlohmann::ordered_json to_json(const SweepReport& r, bool omit_timing = false);
std::string to_csv(const SweepReport& r);

/// Random center with integer coordinates of height <= `height`.
ProjectionCenter random_center(unsigned n, unsigned k, Sampler& rng, unsigned height = kDefaultHeight);

}  // namespace apolar
