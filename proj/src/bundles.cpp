#include "apolar/bundles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "apolar/error.hpp"

namespace apolar {

namespace {

HomPoly parameterization_component(const QMatrix& p, std::size_t row) {
  RVector c(p.cols());
  for (std::size_t i = 0; i < p.cols(); ++i) c[i] = p(row, i);
  return HomPoly(std::move(c));
}

HomPoly minus(const HomPoly& a, const HomPoly& b) {
  RVector c = a.coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs[i];
  return HomPoly(std::move(c));
}

}  // namespace

ProjectionCenter::ProjectionCenter(std::vector<BinaryForm> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw Error(ErrorCode::InvalidCenter, "a center needs at least one generator");
  n_ = gens_.front().degree();
  for (const auto& g : gens_)
    if (g.degree() != n_) throw Error(ErrorCode::InvalidCenter, "generators of different degree");
  const unsigned k = this->k();
  if (n_ < 4 || k > n_ - 3)
    throw Error(ErrorCode::InvalidCenter, "need 1 <= k <= n - 3");
  std::vector<RVector> rows;
  for (const auto& g : gens_) rows.push_back(g.coeffs());
  if (rank(QMatrix::from_rows(rows, n_ + 1)) != k)
    throw Error(ErrorCode::InvalidCenter, "generators are linearly dependent");
  for (const auto& g : gens_)
    if (length(g) < 2) throw Error(ErrorCode::InvalidCenter, "a generator lies on the rational normal curve");
  // L meets C_n iff the components of the projected parameterization share a root.
  const QMatrix p = projection();
  std::vector<HomPoly> comps;
  for (std::size_t r = 0; r < p.rows(); ++r) comps.push_back(parameterization_component(p, r));
  if (gcd(comps).degree() != 0)
    throw Error(ErrorCode::InvalidCenter, "the center meets the rational normal curve");
}

QMatrix ProjectionCenter::projection() const {
  std::vector<RVector> rows;
  for (const auto& g : gens_) rows.push_back(g.coeffs());
  return QMatrix::from_rows(kernel_basis(QMatrix::from_rows(rows, n_ + 1)), n_ + 1);
}

QMatrix GradedMap::section_matrix(unsigned j) const {
  const unsigned d = entry_degree;
  QMatrix mat(static_cast<std::size_t>(target_count) * (d + j + 1),
              static_cast<std::size_t>(domain_rank) * (j + 1));
  for (unsigned i = 0; i < target_count; ++i)
    for (unsigned m = 0; m < domain_rank; ++m) {
      const auto& e = entries[i][m].coeffs;
      for (unsigned r = 0; r <= d; ++r) {
        if (sgn(e[r]) == 0) continue;
        for (unsigned q = 0; q <= j; ++q) mat(i * (d + j + 1) + r + q, m * (j + 1) + q) = e[r];
      }
    }
  return mat;
}

QMatrix GradedMap::evaluate(const Rational& s, const Rational& t) const {
  QMatrix v(target_count, domain_rank);
  for (unsigned i = 0; i < target_count; ++i)
    for (unsigned m = 0; m < domain_rank; ++m) v(i, m) = entries[i][m].eval(s, t);
  return v;
}

GradedMap normal_map(const ProjectionCenter& L) {
  const unsigned n = L.n();
  GradedMap g{n - 1, L.k(), 2, {}};
  for (const auto& f : L.generators()) {
    std::vector<HomPoly> row;
    for (unsigned m = 0; m + 2 <= n; ++m) row.emplace_back(RVector{f[m], 2 * f[m + 1], f[m + 2]});
    g.entries.push_back(std::move(row));
  }
  return g;
}

GradedMap tangent_map(const ProjectionCenter& L) {
  const unsigned n = L.n();
  GradedMap g{n, L.k(), 1, {}};
  for (const auto& f : L.generators()) {
    std::vector<HomPoly> row;
    for (unsigned m = 0; m + 1 <= n; ++m) row.emplace_back(RVector{f[m], f[m + 1]});
    g.entries.push_back(std::move(row));
  }
  return g;
}

GradedMap bundle_map(const ProjectionCenter& L, Bundle which) {
  return which == Bundle::normal ? normal_map(L) : tangent_map(L);
}

unsigned section_kernel_dim(const GradedMap& m, unsigned j) {
  const QMatrix s = m.section_matrix(j);
  return static_cast<unsigned>(s.cols() - rank(s));
}

unsigned section_cokernel_dim(const GradedMap& m, unsigned j) {
  const QMatrix s = m.section_matrix(j).transposed();
  return static_cast<unsigned>(s.cols() - rank(s));
}

unsigned generic_rank(const GradedMap& m) {
  const unsigned cap = std::min(m.target_count, m.domain_rank);
  const unsigned points = m.entry_degree * m.target_count + 1;
  unsigned best = 0;
  for (unsigned p = 0; p < points && best < cap; ++p) {
    const QMatrix v = p == 0 ? m.evaluate(1, 0) : m.evaluate(Rational(p - 1), 1);
    best = std::max(best, static_cast<unsigned>(rank(v)));
  }
  return best;
}

SplittingType splitting_from_sections(const GradedMap& m, unsigned expected_rank, int expected_degree) {
  const unsigned kernel_rank = m.domain_rank - generic_rank(m);
  if (kernel_rank != expected_rank)
    throw Error(ErrorCode::DegenerateMap, "kernel sheaf has rank " + std::to_string(kernel_rank) +
                                              ", expected " + std::to_string(expected_rank));
  const unsigned stop = static_cast<unsigned>(std::abs(expected_degree)) + 1;
  std::vector<unsigned> counts;  // counts[j] = #{i : m_i >= -j}
  unsigned prev = 0;
  for (unsigned j = 0; j <= stop; ++j) {
    const unsigned h = section_kernel_dim(m, j);
    const unsigned c = h - prev;
    prev = h;
    if (c > expected_rank)
      throw Error(ErrorCode::DegenerateMap, "section growth exceeds the kernel rank");
    counts.push_back(c);
    if (c == expected_rank) break;
  }
  if (counts.back() != expected_rank)
    throw Error(ErrorCode::DegenerateMap, "twisted sections did not stabilize");
  SplittingType degrees;
  unsigned last = 0;
  for (unsigned j = 0; j < counts.size(); ++j) {
    for (unsigned c = last; c < counts[j]; ++c) degrees.push_back(-static_cast<int>(j));
    last = std::max(last, counts[j]);
  }
  const int sum = std::accumulate(degrees.begin(), degrees.end(), 0);
  if (sum != expected_degree)
    throw Error(ErrorCode::DegenerateMap, "kernel sheaf has degree " + std::to_string(sum) + ", expected " +
                                              std::to_string(expected_degree) +
                                              " (map not surjective: non-ordinary singularity)");
  return degrees;
}

namespace {

SplittingType shifted(const SplittingType& m, int base) {
  SplittingType out;
  for (int x : m) out.push_back(base - x);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

SplittingType normal_splitting(const ProjectionCenter& L) {
  const int n = static_cast<int>(L.n()), k = static_cast<int>(L.k());
  return shifted(splitting_from_sections(normal_map(L), L.n() - L.k() - 1, -2 * k), n + 2);
}

SplittingType tangent_splitting(const ProjectionCenter& L) {
  const int n = static_cast<int>(L.n()), k = static_cast<int>(L.k());
  return shifted(splitting_from_sections(tangent_map(L), L.n() - L.k(), -k), n + 1);
}

SplittingType bundle_splitting(const ProjectionCenter& L, Bundle which) {
  return which == Bundle::normal ? normal_splitting(L) : tangent_splitting(L);
}

unsigned rank_at_twist_zero(const ProjectionCenter& L, Bundle which) {
  const GradedMap m = bundle_map(L, which);
  return m.domain_rank - section_kernel_dim(m, 0);
}

bool immersion_check(const ProjectionCenter& L) {
  const QMatrix p = L.projection();
  const unsigned n = L.n();
  std::vector<HomPoly> ds, dt;
  for (std::size_t r = 0; r < p.rows(); ++r) {
    RVector cs(n), ct(n);
    for (unsigned j = 0; j < n; ++j) {
      cs[j] = p(r, j) * (n - j);
      ct[j] = p(r, j + 1) * (j + 1);
    }
    ds.emplace_back(std::move(cs));
    dt.emplace_back(std::move(ct));
  }
  std::vector<HomPoly> minors;
  for (std::size_t a = 0; a < ds.size(); ++a)
    for (std::size_t b = a + 1; b < ds.size(); ++b) minors.push_back(minus(ds[a] * dt[b], ds[b] * dt[a]));
  const HomPoly g = gcd(minors);
  return !g.coeffs.empty() && g.degree() == 0;
}

CommonApolar common_apolar(const ProjectionCenter& L, unsigned d) {
  return common_apolar(std::span<const BinaryForm>(L.generators()), d);
}

std::string to_string(Codim2Class c) {
  switch (c) {
    case Codim2Class::F1: return "F1";
    case Codim2Class::F2: return "F2";
    case Codim2Class::F3: return "F3";
    case Codim2Class::F4: return "F4";
    case Codim2Class::F5: return "F5";
    case Codim2Class::unclassified: break;
  }
  return "unclassified";
}

Codim2Class classify_codim2(const ProjectionCenter& L) {
  if (L.k() != 2 || L.n() < 7) throw Error(ErrorCode::InvalidArgument, "codim-2 classification needs k = 2, n >= 7");
  const unsigned n = L.n();
  const GradedMap m = normal_map(L);
  const unsigned r0 = m.domain_rank - section_kernel_dim(m, 0);
  switch (r0) {
    case 6: return Codim2Class::F1;
    case 5: return Codim2Class::F2;
    case 3: return Codim2Class::F5;
    case 4: {
      const unsigned h1 = section_kernel_dim(m, 1);
      if (h1 == 2 * (n - 7) + 4) return Codim2Class::F3;
      if (h1 == 2 * (n - 7) + 5) return Codim2Class::F4;
      return Codim2Class::unclassified;
    }
    default: return Codim2Class::unclassified;
  }
}

Codim2Class codim2_class_of(const SplittingType& normal, unsigned n) {
  if (normal.size() + 3 != n || n < 7) return Codim2Class::unclassified;
  const int b = static_cast<int>(n) + 2;
  std::vector<int> rest = normal;
  for (unsigned c = 0; c < n - 7; ++c) {
    auto it = std::find(rest.begin(), rest.end(), b);
    if (it == rest.end()) return Codim2Class::unclassified;
    rest.erase(it);
  }
  std::sort(rest.begin(), rest.end());
  const std::vector<std::vector<int>> table = {
      {b + 1, b + 1, b + 1, b + 1},  // F1
      {b, b + 1, b + 1, b + 2},      // F2
      {b, b, b + 2, b + 2},          // F3
      {b, b, b + 1, b + 3},          // F4
      {b, b, b, b + 4},              // F5
  };
  for (std::size_t i = 0; i < table.size(); ++i)
    if (rest == table[i]) return static_cast<Codim2Class>(i + 1);
  return Codim2Class::unclassified;
}

ProjectionCenter parse_center(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line)
      if (ch == ',' || ch == '\t' || ch == '\r') ch = ' ';
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  if (rows.empty() || rows.front().size() != 2) throw Error(ErrorCode::ParseError, "center file must start with \"n k\"");
  unsigned n = 0, k = 0;
  try {
    n = static_cast<unsigned>(std::stoul(rows[0][0]));
    k = static_cast<unsigned>(std::stoul(rows[0][1]));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "malformed center header");
  }
  if (rows.size() != static_cast<std::size_t>(k) + 1)
    throw Error(ErrorCode::ParseError, "center file has " + std::to_string(rows.size() - 1) + " generator rows, header says " +
                                           std::to_string(k));
  std::vector<BinaryForm> gens;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != n + 1)
      throw Error(ErrorCode::ParseError, "generator row " + std::to_string(i) + " needs " + std::to_string(n + 1) + " entries");
    RVector c;
    for (const auto& t : rows[i]) c.push_back(parse_rational(t));
    gens.emplace_back(std::move(c));
  }
  return ProjectionCenter(std::move(gens));
}

std::string format_center(const ProjectionCenter& L) {
  std::string out = std::to_string(L.n()) + " " + std::to_string(L.k()) + "\n";
  for (const auto& g : L.generators()) out += format_form(g) + "\n";
  return out;
}

std::string format_splitting(const SplittingType& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace apolar
