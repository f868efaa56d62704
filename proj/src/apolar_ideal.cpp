#include "apolar/apolar_ideal.hpp"

#include <algorithm>

#include "apolar/error.hpp"

namespace apolar {

namespace {

std::vector<DualOperator> to_operators(std::vector<RVector> vs) {
  std::vector<DualOperator> ops;
  ops.reserve(vs.size());
  for (auto& v : vs) ops.emplace_back(std::move(v));
  return ops;
}

void require_nonzero(const BinaryForm& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "the zero form has no apolar ideal");
}

}  // namespace

std::vector<DualOperator> apolar_space(const BinaryForm& f, unsigned e) {
  if (e > f.degree()) {
    std::vector<RVector> all;
    for (unsigned j = 0; j <= e; ++j) {
      RVector u(e + 1);
      u[j] = 1;
      all.push_back(std::move(u));
    }
    return to_operators(std::move(all));
  }
  return to_operators(kernel_basis(catalecticant(f, e)));
}

std::vector<RVector> multiples(const DualOperator& alpha, unsigned degree) {
  std::vector<RVector> out;
  const unsigned s = alpha.degree();
  if (degree < s) return out;
  const unsigned shift = degree - s;
  for (unsigned q = 0; q <= shift; ++q) {
    RVector v(degree + 1);
    for (unsigned j = 0; j <= s; ++j) v[q + j] = alpha.coeffs()[j];
    out.push_back(std::move(v));
  }
  return out;
}

ApolarIdeal apolar_ideal(const BinaryForm& f) {
  require_nonzero(f);
  ApolarIdeal ideal;
  const unsigned n = ideal.n = f.degree();
  ideal.hilbert.assign(n + 2, 0);
  for (unsigned e = 0; e <= n; ++e) ideal.hilbert[e] = static_cast<unsigned>(rank(catalecticant(f, e)));

  unsigned s = 0;
  while (s <= n && ideal.hilbert[s] == s + 1) ++s;
  ideal.s = s;
  ideal.alpha = apolar_space(f, s).front();

  const unsigned b = n + 2 - s;
  std::vector<RVector> span = multiples(ideal.alpha, b);
  const std::size_t base = span.empty() ? 0 : rank(QMatrix::from_rows(span, b + 1));
  for (auto& cand : apolar_space(f, b)) {
    span.push_back(cand.coeffs());
    if (rank(QMatrix::from_rows(span, b + 1)) > base) {
      ideal.beta = cand;
      break;
    }
    span.pop_back();
  }
  if (ideal.beta.coeffs().empty())
    throw Error(ErrorCode::InvalidArgument, "no second generator found (not a complete intersection?)");
  return ideal;
}

unsigned length(const BinaryForm& f) {
  require_nonzero(f);
  return static_cast<unsigned>(rank(catalecticant(f, f.degree() / 2)));
}

bool is_apolar(const DualOperator& phi, const BinaryForm& f) { return contract(phi, f).is_zero(); }

unsigned Gad::length() const {
  unsigned l = 0;
  for (const auto& t : terms) l += t.g;
  return l;
}

BinaryForm Gad::expand() const {
  BinaryForm sum = BinaryForm::zero(n);
  for (const auto& t : terms) sum = sum + t.G * veronese(t.point, n - t.g + 1);
  return sum;
}

bool Gad::is_normalized() const {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (terms[i].point == terms[j].point) return false;
    const auto& t = terms[i];
    if (t.G.is_zero()) return false;
    // L = s x + t y vanishes at (x:y) = (t : -s).
    if (t.g >= 2 && sgn(t.G.eval(Rational(t.point.t), Rational(-t.point.s))) == 0) return false;
  }
  return true;
}

QMatrix gad_map(std::span<const ProjPoint> points, std::span<const unsigned> g, unsigned n) {
  if (points.size() != g.size()) throw Error(ErrorCode::InvalidArgument, "gad_map: size mismatch");
  std::vector<RVector> columns;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (g[i] == 0 || g[i] > n + 1) throw Error(ErrorCode::InvalidArgument, "gad_map: multiplicity out of range");
    const BinaryForm power = veronese(points[i], n - g[i] + 1);
    for (unsigned r = 0; r < g[i]; ++r) {
      BinaryForm unit = BinaryForm::zero(g[i] - 1);
      RVector u = unit.coeffs();
      u[r] = 1;
      columns.push_back((BinaryForm(std::move(u)) * power).coeffs());
    }
  }
  return QMatrix::from_columns(columns, n + 1);
}

Gad gad_from_operator(const DualOperator& phi, const BinaryForm& f) {
  const unsigned n = f.degree();
  if (phi.degree() > n + 1) throw Error(ErrorCode::DegreeMismatch, "operator degree exceeds n + 1");
  const RootSet roots = rational_roots(phi.symbol);
  if (!roots.fully_split)
    throw Error(ErrorCode::NotSplitOverQ, "operator symbol does not split over Q");
  std::vector<ProjPoint> points;
  std::vector<unsigned> g;
  for (const auto& r : roots.roots) {
    points.push_back(r.point);
    g.push_back(r.multiplicity);
  }
  const auto x = solve(gad_map(points, g, n), f.coeffs());
  if (!x) throw Error(ErrorCode::InvalidArgument, "operator is not apolar to the form");
  Gad gad;
  gad.n = n;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RVector G(x->begin() + static_cast<std::ptrdiff_t>(pos), x->begin() + static_cast<std::ptrdiff_t>(pos + g[i]));
    pos += g[i];
    gad.terms.push_back({points[i], g[i], BinaryForm(std::move(G))});
  }
  return gad;
}

Gad canonical_form(const BinaryForm& f) {
  require_nonzero(f);
  const unsigned n = f.degree();
  const unsigned s = length(f);
  if (2 * s > n + 1)
    throw Error(ErrorCode::LengthTooLarge, "canonical form needs 2 l(f) <= n + 1");
  auto space = apolar_space(f, s);
  Gad gad = gad_from_operator(space.front(), f);
  if (!gad.is_normalized())
    throw Error(ErrorCode::InvalidArgument, "decomposition from the degree-l(f) generator is not normalized");
  return gad;
}

CommonApolar common_apolar(std::span<const BinaryForm> forms, unsigned d) {
  CommonApolar out;
  if (forms.empty()) throw Error(ErrorCode::InvalidArgument, "common_apolar of an empty family");
  const unsigned n = forms.front().degree();
  if (d > n) throw Error(ErrorCode::DegreeMismatch, "common_apolar degree exceeds n");
  QMatrix stacked;
  for (const auto& f : forms) {
    if (f.degree() != n) throw Error(ErrorCode::DegreeMismatch, "forms of different degree");
    stacked = stacked.stacked(catalecticant(f, d));
  }
  out.basis = to_operators(kernel_basis(stacked));
  out.dim = static_cast<unsigned>(out.basis.size());
  return out;
}

}  // namespace apolar
