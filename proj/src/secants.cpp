#include "apolar/secants.hpp"

#include <algorithm>

#include "apolar/error.hpp"

namespace apolar {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed ^ (index * 0x9e3779b97f4a7c15ULL);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<ProjPoint> sample_params(unsigned count, Sampler& rng, unsigned height) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "sample_params needs count >= 1");
  if (height == 0) throw Error(ErrorCode::InvalidArgument, "height bound must be positive");
  const auto h = static_cast<std::int64_t>(height);
  // 2h(h+1)+... distinct points of height <= h; plenty for every count used here.
  if (static_cast<std::uint64_t>(count) > static_cast<std::uint64_t>(2 * h * h + 2))
    throw Error(ErrorCode::InvalidArgument, "height bound too small for the requested number of points");
  std::vector<ProjPoint> out;
  while (out.size() < count) {
    const std::int64_t s = rng.uniform(-h, h);
    const std::int64_t t = rng.uniform(0, h);
    if (s == 0 && t == 0) continue;
    ProjPoint p = ProjPoint::make(Rational(static_cast<long>(s)), Rational(static_cast<long>(t)));
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<ProjPoint> sample_params(unsigned count, std::uint64_t seed, unsigned height) {
  Sampler rng(seed);
  return sample_params(count, rng, height);
}

ProjectionCenter secant_center(const std::vector<ProjPoint>& raw, unsigned n,
                               const std::vector<RVector>& combo) {
  std::vector<ProjPoint> params;
  for (const auto& p : raw) params.push_back(ProjPoint::make(Rational(p.s), Rational(p.t)));
  const std::size_t s = params.size();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (params[i] == params[j]) throw Error(ErrorCode::RepeatedParams, "repeated curve parameter");
  if (s > n) throw Error(ErrorCode::InvalidArgument, "at most n curve points");
  for (const auto& row : combo)
    if (row.size() != s) throw Error(ErrorCode::InvalidArgument, "combo rows must have one entry per point");
  if (combo.empty() || rank(QMatrix::from_rows(combo, s)) != combo.size())
    throw Error(ErrorCode::RankDeficientCombo, "combination matrix has deficient rank");
  std::vector<BinaryForm> powers;
  for (const auto& p : params) powers.push_back(veronese(p, n));
  std::vector<BinaryForm> gens;
  for (const auto& row : combo) {
    BinaryForm f = BinaryForm::zero(n);
    for (std::size_t j = 0; j < s; ++j)
      if (sgn(row[j]) != 0) f = f + row[j] * powers[j];
    gens.push_back(normalized_point(f));
  }
  return ProjectionCenter(std::move(gens));
}

std::vector<RVector> random_combo(unsigned k, unsigned s, Sampler& rng, unsigned height) {
  const auto h = static_cast<std::int64_t>(height);
  for (;;) {
    std::vector<RVector> combo(k, RVector(s));
    for (auto& row : combo)
      for (auto& x : row) {
        std::int64_t v = 0;
        while (v == 0) v = rng.uniform(-h, h);
        x = static_cast<long>(v);
      }
    if (rank(QMatrix::from_rows(combo, s)) == k) return combo;
  }
}

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::yes: return "yes";
    case Certificate::no: return "no";
    case Certificate::not_certified: return "not_certified";
  }
  return "?";
}

SecancyProfile secancy_profile(const ProjectionCenter& L) {
  SecancyProfile prof;
  const unsigned n = L.n();
  for (unsigned d = 1; d <= n; ++d) {
    CommonApolar c = common_apolar(L, d);
    if (c.dim == 0) continue;
    prof.min_degree = d;
    prof.space_dim = c.dim;
    DualOperator witness = c.basis.front();
    if (c.dim == 1) {
      prof.witness_squarefree = squarefree(witness.symbol) ? Certificate::yes : Certificate::no;
    } else {
      prof.witness_squarefree = Certificate::not_certified;
      std::vector<DualOperator> candidates = c.basis;
      Sampler rng(derive_seed(0x5eca9c7ULL, d));
      for (unsigned trial = 0; trial < 32; ++trial) {
        RVector u(d + 1);
        for (const auto& b : c.basis) {
          const Rational w = static_cast<long>(rng.uniform(-7, 7));
          for (unsigned j = 0; j <= d; ++j) u[j] += w * b.coeffs()[j];
        }
        if (!is_zero(u)) candidates.emplace_back(normalize_integral(std::move(u)));
      }
      for (const auto& cand : candidates) {
        if (squarefree(cand.symbol)) {
          witness = cand;
          prof.witness_squarefree = Certificate::yes;
          break;
        }
      }
    }
    prof.witness_splits = rational_roots(witness.symbol).fully_split;
    prof.witness = std::move(witness);
    return prof;
  }
  prof.min_degree = n + 1;
  return prof;
}

long expected_codim(CodimFamily family, long n, long k, long r) {
  switch (family) {
    case CodimFamily::normal: return 2 * k + k * r - n + r + 1;
    case CodimFamily::tangent: return k - n + r + k * r;
    case CodimFamily::ramella: return (k - 1) * (n - k - 1);
  }
  return 0;
}

CodimFamily parse_codim_family(const std::string& name) {
  if (name == "normal") return CodimFamily::normal;
  if (name == "tangent") return CodimFamily::tangent;
  if (name == "ramella") return CodimFamily::ramella;
  throw Error(ErrorCode::InvalidArgument, "unknown codimension family '" + name + "'");
}

}  // namespace apolar
