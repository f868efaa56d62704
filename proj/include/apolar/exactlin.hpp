#pragma once

// Exact rational linear algebra and binary/univariate polynomial utilities.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace apolar {

using Integer = mpz_class;
using Rational = mpq_class;
using RVector = std::vector<Rational>;

/// Dense row-major matrix over Q. Entries are kept canonical by GMP
/// (lowest terms, positive denominator).
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, RVector entries);

  static QMatrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of equal length).
  static QMatrix from_columns(std::span<const RVector> columns, std::size_t rows);
  static QMatrix from_rows(std::span<const RVector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  QMatrix transposed() const;
  /// Vertical concatenation; column counts must agree.
  QMatrix stacked(const QMatrix& below) const;
  RVector apply(std::span<const Rational> v) const;
  bool is_zero() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RVector data_;
};

std::size_t rank(const QMatrix& m);

/// Basis of the right kernel. Each vector has integer entries with content 1
/// and a positive first nonzero entry; the set is the reduced-echelon basis,
/// so it depends only on the kernel and the column order.
std::vector<RVector> kernel_basis(const QMatrix& m);

/// A particular solution of m x = b (free variables set to 0), if consistent.
std::optional<RVector> solve(const QMatrix& m, std::span<const Rational> b);

Rational determinant(const QMatrix& m);

/// Span equality of two families of vectors of equal length.
bool same_span(std::span<const RVector> a, std::span<const RVector> b, std::size_t dim);

/// Scale a nonzero vector to integer entries, content 1, first nonzero positive.
RVector normalize_integral(RVector v);
bool is_zero(std::span<const Rational> v);

/// Univariate polynomial, coefficient index = power of the variable.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(RVector coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const RVector& coeffs() const noexcept { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational eval(const Rational& x) const;
  QPoly derivative() const;
  QPoly monic() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  RVector coeffs_;
};

struct QPolyDivision {
  QPoly quotient;
  QPoly remainder;
};
QPolyDivision divmod(const QPoly& num, const QPoly& den);
/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Homogeneous binary polynomial: coeffs[j] is the coefficient of s^{d-j} t^j.
struct HomPoly {
  RVector coeffs;

  HomPoly() = default;
  explicit HomPoly(RVector c) : coeffs(std::move(c)) {}

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool is_zero() const;
  Rational eval(const Rational& s, const Rational& t) const;
  /// Chart t = 1, as a polynomial in s.
  QPoly chart_t() const;
  /// Chart s = 1, as a polynomial in t.
  QPoly chart_s() const;

  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  friend bool operator==(const HomPoly&, const HomPoly&) = default;
};

/// A point (s:t) of P^1 with integer coordinates, content 1, first nonzero positive.
struct ProjPoint {
  Integer s;
  Integer t;

  static ProjPoint make(const Rational& s, const Rational& t);
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// The linear symbol t0*s - s0*t vanishing exactly at (s0:t0).
HomPoly vanishing_symbol(const ProjPoint& p);

struct RationalRoot {
  ProjPoint point;
  unsigned multiplicity = 0;
};

struct RootSet {
  std::vector<RationalRoot> roots;
  bool fully_split = false;
};

/// Square-free test on both affine charts. Throws ZeroPolynomial for p == 0.
bool squarefree(const HomPoly& p);

/// All rational projective roots with multiplicity; (1:0) is read off the
/// degree drop of the t = 1 chart. Throws ZeroPolynomial for p == 0.
RootSet rational_roots(const HomPoly& p);

/// Homogeneous gcd of a family, up to a scalar; zero family -> zero polynomial.
HomPoly gcd(std::span<const HomPoly> polys);

/// Resultant of two binary forms via the Sylvester matrix determinant.
Rational resultant(const HomPoly& a, const HomPoly& b);

Integer binomial(unsigned n, unsigned k);

}  // namespace apolar
