#pragma once

// Centers inside multisecant spaces of C_n, secancy diagnostics, and the
// expected-codimension formulas for the secant strata.

#include <cstdint>
#include <random>
#include <vector>

#include "apolar/bundles.hpp"

namespace apolar {

inline constexpr unsigned kDefaultHeight = 50;

/// Deterministic integer sampling on top of mt19937_64 (the standard
/// distributions are implementation-defined).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer applied to seed ^ index; per-trial seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// `count` distinct points of P^1 with coordinates of height <= `height`.
std::vector<ProjPoint> sample_params(unsigned count, std::uint64_t seed, unsigned height = kDefaultHeight);
std::vector<ProjPoint> sample_params(unsigned count, Sampler& rng, unsigned height = kDefaultHeight);

/// f_i = sum_j combo[i][j] nu_n(params_j): L inside the span of the s curve
/// points. Throws RepeatedParams, RankDeficientCombo, InvalidCenter.
ProjectionCenter secant_center(const std::vector<ProjPoint>& params, unsigned n,
                               const std::vector<RVector>& combo);

/// Random integer combo with `k` rows over `s` points, full support.
std::vector<RVector> random_combo(unsigned k, unsigned s, Sampler& rng, unsigned height = 9);

enum class Certificate { yes, no, not_certified };
const char* to_string(Certificate c);

struct SecancyProfile {
  unsigned min_degree = 0;  // n + 1 when no common apolar operator of degree <= n exists
  std::optional<DualOperator> witness;
  Certificate witness_squarefree = Certificate::no;
  bool witness_splits = false;
  unsigned space_dim = 0;  // dim of the common apolar space at min_degree
};

SecancyProfile secancy_profile(const ProjectionCenter& L);

enum class CodimFamily { normal, tangent, ramella };
/// normal: 2k + kr - n + r + 1; tangent: k - n + r + kr; ramella: (k-1)(n-k-1).
long expected_codim(CodimFamily family, long n, long k, long r);
CodimFamily parse_codim_family(const std::string& name);

}  // namespace apolar
