#pragma once

// Binary forms in the binomial basis, apolarity operators, and the contraction
// pairing between them.
//
// A form of degree n is f = sum_i a_i C(n,i) x^{n-i} y^i. With this basis the
// pure power (s x + t y)^n has coefficient vector (s^n, s^{n-1} t, ..., t^n),
// i.e. the Veronese point of (s:t). An operator of degree e is given by its
// symbol phi(s,t) = sum_j u_j s^{e-j} t^j and contracts as
// (phi o f)_m = sum_j u_j a_{m+j}, so that phi o L^n = phi(L) L^{n-e}.

#include <span>
#include <string>

#include "apolar/exactlin.hpp"

namespace apolar {

class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(RVector coeffs);

  static BinaryForm zero(unsigned degree);

  unsigned degree() const noexcept { return static_cast<unsigned>(a_.size() - 1); }
  const RVector& coeffs() const noexcept { return a_; }
  const Rational& operator[](std::size_t i) const { return a_[i]; }
  bool is_zero() const { return apolar::is_zero(a_); }

  /// Plain monomial coefficients: coefficient of x^{n-i} y^i.
  RVector monomial_coeffs() const;
  static BinaryForm from_monomial_coeffs(const RVector& plain);

  /// Value f(x, y).
  Rational eval(const Rational& x, const Rational& y) const;

  friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator*(const Rational& c, const BinaryForm& f);
  /// Product of forms (degrees add).
  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  RVector a_;
};

struct DualOperator {
  HomPoly symbol;

  DualOperator() = default;
  explicit DualOperator(HomPoly p) : symbol(std::move(p)) {}
  explicit DualOperator(RVector u) : symbol(std::move(u)) {}

  unsigned degree() const noexcept { return static_cast<unsigned>(symbol.degree()); }
  const RVector& coeffs() const noexcept { return symbol.coeffs; }

  friend DualOperator operator*(const DualOperator& a, const DualOperator& b) {
    return DualOperator(a.symbol * b.symbol);
  }
  friend bool operator==(const DualOperator&, const DualOperator&) = default;
};

/// Throws DegreeMismatch when deg(phi) > deg(f).
BinaryForm contract(const DualOperator& phi, const BinaryForm& f);

/// (n-e+1) x (e+1) Hankel matrix H[m][j] = a_{m+j}: the matrix of
/// phi -> phi o f on degree-e operators.
QMatrix catalecticant(const BinaryForm& f, unsigned e);

/// Coefficients of (s x + t y)^n. Throws ZeroPoint for (0, 0).
BinaryForm veronese(const Rational& s, const Rational& t, unsigned n);
inline BinaryForm veronese(const ProjPoint& p, unsigned n) {
  return veronese(Rational(p.s), Rational(p.t), n);
}

/// Content 1 and first nonzero coordinate positive (forms as points of P^n).
BinaryForm normalized_point(const BinaryForm& f);

/// f(a x + b y, c x + d y). Sends (s x + t y)^n to the power of
/// (a s + c t) x + (b s + d t) y, so it preserves the rational normal curve.
BinaryForm substitute(const BinaryForm& f, const Rational& a, const Rational& b,
                      const Rational& c, const Rational& d);

/// Comma separated exact rationals "p/q", a_0 .. a_n.
BinaryForm parse_form(const std::string& text);
std::string format_form(const BinaryForm& f);
std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& token);

}  // namespace apolar
