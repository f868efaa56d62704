#pragma once

// Normal and restricted tangent bundles of projections of the rational normal
// curve C_n from a linear center L, through the graded maps
//   0 -> N^v(n+2) -> O^{n-1} -> O(2)^k -> 0
//   0 -> T^v(n+1) -> O^n     -> O(1)^k -> 0.
// Splitting types are recovered from dimensions of twisted global sections.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apolar/apolar_ideal.hpp"
#include "apolar/forms.hpp"

namespace apolar {

/// A (k-1)-plane of P^n spanned by k degree-n forms.
class ProjectionCenter {
 public:
  /// Validates 1 <= k <= n-3, independence of the generators, and that L
  /// misses C_n. Throws InvalidCenter.
  explicit ProjectionCenter(std::vector<BinaryForm> generators);

  unsigned n() const noexcept { return n_; }
  unsigned k() const noexcept { return static_cast<unsigned>(gens_.size()); }
  const std::vector<BinaryForm>& generators() const noexcept { return gens_; }

  /// Rows spanning the annihilator of L: a linear projection with kernel L.
  QMatrix projection() const;

 private:
  unsigned n_ = 0;
  std::vector<BinaryForm> gens_;
};

/// O^{domain_rank} -> O(d)^k, entry (i, m) a degree-d symbol.
struct GradedMap {
  unsigned domain_rank = 0;
  unsigned target_count = 0;
  unsigned entry_degree = 0;
  std::vector<std::vector<HomPoly>> entries;  // [i][m]

  /// H^0(O(j))^a -> H^0(O(d+j))^k, k(d+j+1) x a(j+1).
  QMatrix section_matrix(unsigned j) const;
  /// The k x a matrix of values at (s:t).
  QMatrix evaluate(const Rational& s, const Rational& t) const;
};

enum class Bundle { normal, tangent };

using SplittingType = std::vector<int>;  // descending

GradedMap normal_map(const ProjectionCenter& L);
GradedMap tangent_map(const ProjectionCenter& L);
GradedMap bundle_map(const ProjectionCenter& L, Bundle which);

unsigned section_kernel_dim(const GradedMap& m, unsigned j);
/// Cokernel dimension of the same section matrix, computed from its transpose.
unsigned section_cokernel_dim(const GradedMap& m, unsigned j);

/// Rank of the map over the function field, certified by evaluation at
/// d*k + 1 distinct points.
unsigned generic_rank(const GradedMap& m);

/// Kernel sheaf degrees {m_i} of E = ker M = sum O(m_i), from the first
/// differences of h(j) = dim ker at twist j. Throws DegenerateMap when the rank
/// or degree does not match.
SplittingType splitting_from_sections(const GradedMap& m, unsigned expected_rank, int expected_degree);

/// Splitting n_i of N_{pi_L(C_n)}; sum n(n-k+1) - 2.
SplittingType normal_splitting(const ProjectionCenter& L);
/// Splitting t_i of T P^{n-k} restricted to the curve; sum n(n-k+1).
SplittingType tangent_splitting(const ProjectionCenter& L);
SplittingType bundle_splitting(const ProjectionCenter& L, Bundle which);

unsigned rank_at_twist_zero(const ProjectionCenter& L, Bundle which);

/// True iff the 2x2 minors of the Jacobian of the projected parameterization
/// have constant gcd.
bool immersion_check(const ProjectionCenter& L);

CommonApolar common_apolar(const ProjectionCenter& L, unsigned d);

/// Codimension-two strata (k = 2, n >= 7) with the degree-consistent list
///   F1 = (n+3)^4, F2 = (n+2)(n+3)^2(n+4), F3 = (n+2)^2(n+4)^2,
///   F4 = (n+2)^2(n+3)(n+5), F5 = (n+2)^3(n+6)
/// completing (n+2)^{n-7}.
enum class Codim2Class { F1 = 1, F2, F3, F4, F5, unclassified };
std::string to_string(Codim2Class c);
/// Label from (rank at twist 0, kernel dimension at twist 1).
Codim2Class classify_codim2(const ProjectionCenter& L);
Codim2Class codim2_class_of(const SplittingType& normal, unsigned n);

/// Center file: "n k" then k rows of n+1 rationals (commas or blanks).
ProjectionCenter parse_center(const std::string& text);
std::string format_center(const ProjectionCenter& L);
std::string format_splitting(const SplittingType& s);

}  // namespace apolar
