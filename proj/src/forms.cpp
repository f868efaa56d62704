#include "apolar/forms.hpp"

#include <sstream>

#include "apolar/error.hpp"

namespace apolar {

BinaryForm::BinaryForm(RVector coeffs) : a_(std::move(coeffs)) {
  if (a_.empty()) throw Error(ErrorCode::InvalidArgument, "a form needs at least one coefficient");
}

BinaryForm BinaryForm::zero(unsigned degree) { return BinaryForm(RVector(degree + 1)); }

RVector BinaryForm::monomial_coeffs() const {
  const unsigned n = degree();
  RVector plain(a_.size());
  for (unsigned i = 0; i <= n; ++i) plain[i] = a_[i] * Rational(binomial(n, i));
  return plain;
}

BinaryForm BinaryForm::from_monomial_coeffs(const RVector& plain) {
  const unsigned n = static_cast<unsigned>(plain.size() - 1);
  RVector a(plain.size());
  for (unsigned i = 0; i <= n; ++i) a[i] = plain[i] / Rational(binomial(n, i));
  return BinaryForm(std::move(a));
}

Rational BinaryForm::eval(const Rational& x, const Rational& y) const {
  // The plain coefficients read as a symbol in (x, y).
  return HomPoly(monomial_coeffs()).eval(x, y);
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) throw Error(ErrorCode::DegreeMismatch, "adding forms of different degree");
  RVector c = f.a_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += g.a_[i];
  return BinaryForm(std::move(c));
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
  return f + Rational(-1) * g;
}

BinaryForm operator*(const Rational& c, const BinaryForm& f) {
  RVector a = f.a_;
  for (auto& x : a) x *= c;
  return BinaryForm(std::move(a));
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  HomPoly p = HomPoly(f.monomial_coeffs()) * HomPoly(g.monomial_coeffs());
  return BinaryForm::from_monomial_coeffs(p.coeffs);
}

BinaryForm contract(const DualOperator& phi, const BinaryForm& f) {
  const unsigned e = phi.degree(), n = f.degree();
  if (e > n) throw Error(ErrorCode::DegreeMismatch, "operator degree exceeds form degree");
  const auto& u = phi.coeffs();
  RVector out(n - e + 1);
  for (unsigned m = 0; m <= n - e; ++m)
    for (unsigned j = 0; j <= e; ++j)
      if (sgn(u[j]) != 0) out[m] += u[j] * f[m + j];
  return BinaryForm(std::move(out));
}

QMatrix catalecticant(const BinaryForm& f, unsigned e) {
  const unsigned n = f.degree();
  if (e > n) throw Error(ErrorCode::DegreeMismatch, "catalecticant degree exceeds form degree");
  QMatrix h(n - e + 1, e + 1);
  for (unsigned m = 0; m <= n - e; ++m)
    for (unsigned j = 0; j <= e; ++j) h(m, j) = f[m + j];
  return h;
}

BinaryForm veronese(const Rational& s, const Rational& t, unsigned n) {
  if (sgn(s) == 0 && sgn(t) == 0) throw Error(ErrorCode::ZeroPoint, "veronese of (0,0)");
  RVector a(n + 1);
  // a_i = s^{n-i} t^i
  RVector spow(n + 1), tpow(n + 1);
  spow[0] = tpow[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    spow[i] = spow[i - 1] * s;
    tpow[i] = tpow[i - 1] * t;
  }
  for (unsigned i = 0; i <= n; ++i) a[i] = spow[n - i] * tpow[i];
  return BinaryForm(std::move(a));
}

BinaryForm normalized_point(const BinaryForm& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "the zero form is not a point");
  return BinaryForm(normalize_integral(f.coeffs()));
}

BinaryForm substitute(const BinaryForm& f, const Rational& a, const Rational& b,
                      const Rational& c, const Rational& d) {
  const unsigned n = f.degree();
  const RVector plain = f.monomial_coeffs();
  // x -> a x + b y, y -> c x + d y, as symbols in (x, y).
  const HomPoly lx(RVector{a, b}), ly(RVector{c, d});
  std::vector<HomPoly> px(n + 1), py(n + 1);
  px[0] = py[0] = HomPoly(RVector{Rational(1)});
  for (unsigned i = 1; i <= n; ++i) {
    px[i] = px[i - 1] * lx;
    py[i] = py[i - 1] * ly;
  }
  RVector out(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    if (sgn(plain[i]) == 0) continue;
    HomPoly term = px[n - i] * py[i];
    for (unsigned j = 0; j <= n; ++j) out[j] += plain[i] * term.coeffs[j];
  }
  return BinaryForm::from_monomial_coeffs(out);
}

Rational parse_rational(const std::string& raw) {
  std::string token;
  for (char ch : raw)
    if (ch != ' ' && ch != '\t' && ch != '\r' && ch != '\n') token.push_back(ch);
  if (token.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  if (token.front() == '+') token.erase(0, 1);
  const auto slash = token.find('/');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = (allow_sign && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::string num = token.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : token.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error(ErrorCode::ParseError, "malformed rational literal '" + raw + "'");
  const Integer d{den};
  if (sgn(d) == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + raw + "'");
  Rational q{Integer{num}, d};
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

BinaryForm parse_form(const std::string& text) {
  RVector coeffs;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) coeffs.push_back(parse_rational(token));
  if (coeffs.empty()) throw Error(ErrorCode::ParseError, "empty form literal");
  return BinaryForm(std::move(coeffs));
}

std::string format_form(const BinaryForm& f) {
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += format_rational(f[i]);
  }
  return out;
}

}  // namespace apolar
