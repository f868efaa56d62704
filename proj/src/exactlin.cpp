#include "apolar/exactlin.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "apolar/error.hpp"

namespace apolar {

namespace {

using IRow = std::vector<Integer>;

struct Echelon {
  std::vector<IRow> rows;          // integer row-echelon form, rank rows kept
  std::vector<std::size_t> pivots;  // pivot column of each kept row
  int sign = 1;                     // parity of row swaps
  Integer row_scale = 1;            // product of the per-row denominator clearings
};

IRow clear_denominators(const Rational* row, std::size_t cols, Integer& scale) {
  Integer l = 1;
  for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row[c].get_den_mpz_t());
  IRow out(cols);
  for (std::size_t c = 0; c < cols; ++c) out[c] = row[c].get_num() * (l / row[c].get_den());
  scale = l;
  return out;
}

// Fraction-free (Bareiss) elimination. Every stored entry is a minor of the
// row-scaled input, so each update divides exactly by the previous pivot.
Echelon bareiss(const QMatrix& m, std::size_t ncols) {
  const std::size_t rows = m.rows();
  std::vector<IRow> a;
  a.reserve(rows);
  Echelon e;
  for (std::size_t r = 0; r < rows; ++r) {
    Integer s;
    a.push_back(clear_denominators(&m(r, 0), m.cols(), s));
    e.row_scale *= s;
  }
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && sgn(a[piv][col]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      std::swap(a[piv], a[rank]);
      e.sign = -e.sign;
    }
    const Integer& p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      Integer& lead = a[i][col];
      if (sgn(lead) == 0) {
        for (std::size_t j = col + 1; j < m.cols(); ++j) {
          a[i][j] *= p;
          mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        Integer v = a[i][j] * p - lead * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = p;
    e.pivots.push_back(col);
    ++rank;
  }
  a.resize(rank);
  e.rows = std::move(a);
  return e;
}

// Back substitution on an echelon form; x already holds the free values.
void back_substitute(const Echelon& e, RVector& x, std::size_t ncols,
                     const RVector* rhs) {
  for (std::size_t i = e.rows.size(); i-- > 0;) {
    const std::size_t p = e.pivots[i];
    Rational sum = rhs ? (*rhs)[i] : Rational(0);
    for (std::size_t j = p + 1; j < ncols; ++j) {
      if (sgn(e.rows[i][j]) != 0 && sgn(x[j]) != 0) sum -= Rational(e.rows[i][j]) * x[j];
    }
    x[p] = sum / Rational(e.rows[i][p]);
  }
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols, RVector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw Error(ErrorCode::InvalidArgument, "matrix entry count does not match shape");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(std::span<const RVector> columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw Error(ErrorCode::InvalidArgument, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QMatrix QMatrix::from_rows(std::span<const RVector> rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::stacked(const QMatrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (below.cols_ != cols_) throw Error(ErrorCode::InvalidArgument, "stack: column mismatch");
  QMatrix out(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
  return out;
}

RVector QMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "apply: length mismatch");
  RVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::size_t rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(m, m.cols()).rows.size();
}

std::vector<RVector> kernel_basis(const QMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<RVector> basis;
  if (n == 0) return basis;
  Echelon e = m.rows() == 0 ? Echelon{} : bareiss(m, n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RVector x(n);
    x[f] = 1;
    back_substitute(e, x, n, nullptr);
    basis.push_back(normalize_integral(std::move(x)));
  }
  return basis;
}

std::optional<RVector> solve(const QMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::InvalidArgument, "solve: rhs length mismatch");
  const std::size_t n = m.cols();
  QMatrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  Echelon e = bareiss(aug, n + 1);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  RVector rhs(e.rows.size());
  for (std::size_t i = 0; i < e.rows.size(); ++i) rhs[i] = Rational(e.rows[i][n]);
  RVector x(n);
  back_substitute(e, x, n, &rhs);
  return x;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  Echelon e = bareiss(m, m.cols());
  if (e.rows.size() < m.rows()) return 0;
  Rational d(e.rows.back().back() * e.sign, e.row_scale);
  d.canonicalize();
  return d;
}

bool same_span(std::span<const RVector> a, std::span<const RVector> b, std::size_t dim) {
  QMatrix ma = QMatrix::from_rows(a, dim);
  QMatrix mb = QMatrix::from_rows(b, dim);
  const std::size_t ra = rank(ma);
  return ra == rank(mb) && ra == rank(ma.stacked(mb));
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RVector normalize_integral(RVector v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (const auto& x : v) {
    Integer num = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (sgn(g) == 0) return v;
  auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (sgn(*first) < 0) g = -g;
  Rational factor(l, g);
  factor.canonicalize();
  for (auto& x : v) x *= factor;
  return v;
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(RVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

QPoly QPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  RVector d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  RVector c = coeffs_;
  const Rational lc = c.back();
  for (auto& x : c) x /= lc;
  return QPoly(std::move(c));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  RVector c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  RVector c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RVector c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPoly(std::move(c));
}

QPolyDivision divmod(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  RVector r = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {QPoly{}, num};
  RVector q(static_cast<std::size_t>(num.degree() - dd + 1));
  for (int i = num.degree(); i >= dd; --i) {
    const Rational c = r[static_cast<std::size_t>(i)] / den.leading();
    q[static_cast<std::size_t>(i - dd)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= c * den.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(dd));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

// ---------------------------------------------------------------- HomPoly

bool HomPoly::is_zero() const { return apolar::is_zero(coeffs); }

Rational HomPoly::eval(const Rational& s, const Rational& t) const {
  Rational acc = 0;
  const std::size_t d = degree();
  for (std::size_t j = 0; j <= d && j < coeffs.size(); ++j) {
    if (sgn(coeffs[j]) == 0) continue;
    Rational term = coeffs[j];
    for (std::size_t p = 0; p < d - j; ++p) term *= s;
    for (std::size_t p = 0; p < j; ++p) term *= t;
    acc += term;
  }
  return acc;
}

QPoly HomPoly::chart_t() const { return QPoly(RVector(coeffs.rbegin(), coeffs.rend())); }
QPoly HomPoly::chart_s() const { return QPoly(coeffs); }

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  RVector c(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (sgn(a.coeffs[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return HomPoly(std::move(c));
}

ProjPoint ProjPoint::make(const Rational& s, const Rational& t) {
  if (sgn(s) == 0 && sgn(t) == 0) throw Error(ErrorCode::ZeroPoint, "(0:0) is not a projective point");
  Integer l;
  mpz_lcm(l.get_mpz_t(), s.get_den_mpz_t(), t.get_den_mpz_t());
  Integer a = s.get_num() * (l / s.get_den());
  Integer b = t.get_num() * (l / t.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  a /= g;
  b /= g;
  if (sgn(a) < 0 || (sgn(a) == 0 && sgn(b) < 0)) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

HomPoly vanishing_symbol(const ProjPoint& p) {
  return HomPoly(RVector{Rational(p.t), Rational(-p.s)});
}

namespace {

bool affine_squarefree(const QPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

// Sturm chain of a square-free polynomial.
std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(QPoly{} - r);
  }
  return chain;
}

int sign_changes(const std::vector<QPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    const int s = sgn(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Integer roots of a square-free monic integer polynomial, by Sturm bisection
// over half-integer endpoints so no endpoint is ever a root.
void integer_roots(const std::vector<QPoly>& chain, const QPoly& p, Integer lo, Integer hi,
                   int changes_lo, int changes_hi, std::vector<Integer>& out) {
  if (changes_lo - changes_hi == 0) return;
  if (hi - lo == 1) {
    if (sgn(p.eval(Rational(hi))) == 0) out.push_back(hi);
    return;
  }
  Integer mid = lo + (hi - lo) / 2;
  const int cm = sign_changes(chain, Rational(mid) + Rational(1, 2));
  integer_roots(chain, p, lo, mid, changes_lo, cm, out);
  integer_roots(chain, p, mid, hi, cm, changes_hi, out);
}

// Distinct rational roots of a nonzero affine polynomial.
std::vector<Rational> affine_rational_roots(const QPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  QPoly sf = divmod(p, gcd(p, p.derivative())).quotient;
  // Primitive integer form.
  Integer l = 1;
  for (const auto& c : sf.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ic;
  for (const auto& c : sf.coeffs()) ic.push_back(c.get_num() * (l / c.get_den()));
  const std::size_t m = ic.size() - 1;
  const Integer a = ic.back();
  // a^{m-1} sf(y/a) is monic with integer coefficients; its rational roots are integers.
  RVector mc(m + 1);
  Integer apow = 1;
  for (std::size_t i = m + 1; i-- > 0;) {
    // coefficient of y^i is ic[i] * a^{m-1-i} for i < m, 1 for i == m
    if (i == m) {
      mc[i] = 1;
      continue;
    }
    mc[i] = Rational(ic[i] * apow);
    apow *= a;
  }
  QPoly monic_int(mc);
  Integer bound = 1;
  for (const auto& c : mc) {
    Integer v = abs(c.get_num());
    if (v > bound) bound = v;
  }
  bound += 1;
  auto chain = sturm_chain(monic_int);
  std::vector<Integer> ys;
  Integer lo = -bound - 1, hi = bound;
  integer_roots(chain, monic_int, lo, hi, sign_changes(chain, Rational(lo) + Rational(1, 2)),
                sign_changes(chain, Rational(hi) + Rational(1, 2)), ys);
  for (const auto& y : ys) {
    Rational r(y, a);
    r.canonicalize();
    roots.push_back(r);
  }
  return roots;
}

}  // namespace

bool squarefree(const HomPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free test of the zero polynomial");
  return affine_squarefree(p.chart_t()) && affine_squarefree(p.chart_s());
}

RootSet rational_roots(const HomPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  RootSet out;
  const QPoly affine = p.chart_t();
  const unsigned at_infinity = static_cast<unsigned>(p.degree()) - static_cast<unsigned>(affine.degree());
  unsigned total = at_infinity;
  for (const auto& r : affine_rational_roots(affine)) {
    QPoly rest = affine;
    const QPoly lin(RVector{-r, Rational(1)});
    unsigned mult = 0;
    for (;;) {
      auto qr = divmod(rest, lin);
      if (!qr.remainder.is_zero()) break;
      rest = qr.quotient;
      ++mult;
    }
    out.roots.push_back({ProjPoint::make(r, 1), mult});
    total += mult;
  }
  if (at_infinity > 0) out.roots.push_back({ProjPoint{1, 0}, at_infinity});
  out.fully_split = total == p.degree();
  return out;
}

HomPoly gcd(std::span<const HomPoly> polys) {
  QPoly g;
  std::optional<std::size_t> mu;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    const QPoly a = p.chart_t();
    g = gcd(g, a);
    const std::size_t drop = p.degree() - static_cast<std::size_t>(a.degree());
    mu = mu ? std::min(*mu, drop) : drop;
  }
  if (!mu) return {};
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  const std::size_t d = dg + *mu;
  RVector c(d + 1);
  for (std::size_t i = 0; i <= dg; ++i) c[d - i] = g.coeffs()[i];
  return HomPoly(std::move(c));
}

Rational resultant(const HomPoly& a, const HomPoly& b) {
  const std::size_t p = a.degree(), q = b.degree();
  const std::size_t n = p + q;
  if (n == 0) return 1;
  QMatrix syl(n, n);
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t j = 0; j <= p; ++j) syl(r, r + j) = a.coeffs[j];
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t j = 0; j <= q; ++j) syl(q + r, r + j) = b.coeffs[j];
  return determinant(syl);
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace apolar
