#pragma once

// Reference computations written independently of the library: plain
// Gauss-Jordan over mpq, contraction by honest differentiation, and the
// section-count formula for a direct sum of line bundles.

#include <gmpxx.h>

#include <algorithm>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;

inline std::size_t rank(Mat a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Q f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline mpz_class factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline mpz_class choose(unsigned n, unsigned k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

/// Plain polynomial in x, y: p[i] = coefficient of x^{d-i} y^i.
inline std::vector<Q> to_plain(const std::vector<Q>& a) {
  const unsigned n = static_cast<unsigned>(a.size() - 1);
  std::vector<Q> p(a.size());
  for (unsigned i = 0; i <= n; ++i) p[i] = a[i] * Q(choose(n, i));
  return p;
}

inline std::vector<Q> from_plain(const std::vector<Q>& p) {
  const unsigned n = static_cast<unsigned>(p.size() - 1);
  std::vector<Q> a(p.size());
  for (unsigned i = 0; i <= n; ++i) a[i] = p[i] / Q(choose(n, i));
  return a;
}

/// d/dx and d/dy of a plain polynomial.
inline std::vector<Q> dx(const std::vector<Q>& p) {
  const unsigned d = static_cast<unsigned>(p.size() - 1);
  std::vector<Q> out(d);
  for (unsigned i = 0; i < d; ++i) out[i] = p[i] * Q(d - i);
  return out;
}
inline std::vector<Q> dy(const std::vector<Q>& p) {
  const unsigned d = static_cast<unsigned>(p.size() - 1);
  std::vector<Q> out(d);
  for (unsigned i = 1; i <= d; ++i) out[i - 1] = p[i] * Q(i);
  return out;
}

/// phi(d/dx, d/dy) f scaled by (n-e)!/n!, on binomial coefficient vectors.
inline std::vector<Q> contract(const std::vector<Q>& symbol, const std::vector<Q>& a) {
  const unsigned e = static_cast<unsigned>(symbol.size() - 1);
  const unsigned n = static_cast<unsigned>(a.size() - 1);
  std::vector<Q> acc(n - e + 1);
  const auto plain = to_plain(a);
  for (unsigned j = 0; j <= e; ++j) {
    auto p = plain;
    for (unsigned r = 0; r < e - j; ++r) p = dx(p);
    for (unsigned r = 0; r < j; ++r) p = dy(p);
    for (unsigned i = 0; i < acc.size(); ++i) acc[i] += symbol[j] * p[i];
  }
  Q scale(factorial(n - e), factorial(n));
  scale.canonicalize();
  for (auto& x : acc) x *= scale;
  return from_plain(acc);
}

/// h^0(sum O(m_i)(j)).
inline unsigned sections(const std::vector<int>& m, int j) {
  unsigned h = 0;
  for (int mi : m) h += static_cast<unsigned>(std::max(0, mi + j + 1));
  return h;
}

}  // namespace oracle
