#pragma once

// Apolar ideals of binary forms, length, and generalized additive
// decompositions f = sum_i G_i L_i^{n - g_i + 1}.

#include <span>
#include <vector>

#include "apolar/forms.hpp"

namespace apolar {

struct ApolarIdeal {
  unsigned n = 0;
  unsigned s = 0;  // initial degree, equal to the length of f
  DualOperator alpha;  // degree s
  DualOperator beta;   // degree n + 2 - s
  /// Hilbert function of T / Ann(f) in degrees 0 .. n+1.
  std::vector<unsigned> hilbert;
};

/// Degree-e part of Ann(f) as a canonical basis; all of T_e when e > deg f.
std::vector<DualOperator> apolar_space(const BinaryForm& f, unsigned e);

/// Basis of S_{degree - deg alpha} * alpha as symbol coefficient vectors.
std::vector<RVector> multiples(const DualOperator& alpha, unsigned degree);

/// Throws ZeroForm.
ApolarIdeal apolar_ideal(const BinaryForm& f);

/// Rank of the middle catalecticant. Throws ZeroForm.
unsigned length(const BinaryForm& f);

/// Throws DegreeMismatch when deg(phi) > deg(f).
bool is_apolar(const DualOperator& phi, const BinaryForm& f);

struct GadTerm {
  ProjPoint point;  // L = s x + t y for point (s:t)
  unsigned g = 1;
  BinaryForm G;     // degree g - 1
};

struct Gad {
  unsigned n = 0;
  std::vector<GadTerm> terms;

  unsigned length() const;
  BinaryForm expand() const;
  /// Pairwise distinct points and no G_i zero or divisible by L_i.
  bool is_normalized() const;
};

/// The (n+1) x sum(g_i) matrix of (G_1, ..., G_m) -> sum G_i L_i^{n-g_i+1},
/// with each G_i in the binomial basis of S_{g_i - 1}.
QMatrix gad_map(std::span<const ProjPoint> points, std::span<const unsigned> g, unsigned n);

/// Solves for the GAD supported on the prime factors of phi, where phi is
/// apolar to f and splits over Q. Throws NotSplitOverQ, or InvalidArgument when
/// phi is not apolar to f.
Gad gad_from_operator(const DualOperator& phi, const BinaryForm& f);

/// The unique normalized GAD of length l(f). Throws ZeroForm, LengthTooLarge
/// (2 l(f) > n + 1), NotSplitOverQ.
Gad canonical_form(const BinaryForm& f);

struct CommonApolar {
  unsigned dim = 0;
  std::vector<DualOperator> basis;
};

/// Degree-d part of the intersection of Ann(f_i), from the stacked catalecticants.
CommonApolar common_apolar(std::span<const BinaryForm> forms, unsigned d);

}  // namespace apolar
