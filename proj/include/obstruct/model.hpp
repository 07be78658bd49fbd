#pragma once

#include <optional>

#include "obstruct/chain.hpp"

namespace obstruct {

// Projective model structure on finitely supported complexes of finitely
// generated free modules:
//   cofibrations       degreewise split monos with free cokernel
//   fibrations         degreewise epimorphisms
//   weak equivalences  quasi-isomorphisms
// Every object is cofibrant and fibrant.

/// Splitting of a cofibration i : A -> B, computed once and reused by the
/// cofibre, the obstruction and the rigid theory. See QuotientData for the
/// identities the pieces satisfy.
struct CofibrationSplitting {
  ChainMap i;
  QuotientData quotient;

  const ChainComplex& cofibre() const { return quotient.quotient; }
  const ChainMap& projection() const { return quotient.projection; }
  /// Section C_n -> B_n (zero-column matrix where C_n = 0).
  Matrix section(int n) const;
  /// Retraction B_n -> A_n (zero-row matrix where A_n = 0).
  Matrix retraction(int n) const;
};

/// nullopt exactly when i is not a cofibration.
std::optional<CofibrationSplitting> split_cofibration(const ChainMap& i);

bool is_cofibration(const ChainMap& f);
bool is_fibration(const ChainMap& f);
bool is_weak_equivalence(const ChainMap& f);
bool is_acyclic_cofibration(const ChainMap& f);
bool is_acyclic_fibration(const ChainMap& f);

enum class FactorizationKind {
  AcyclicCofibrationThenFibration,
  CofibrationThenAcyclicFibration,
};

/// second ∘ first equals the factored map exactly.
struct Factorization {
  FactorizationKind kind;
  ChainComplex middle;
  ChainMap first;
  ChainMap second;
};

/// Mapping cocylinder: middle_n = X_n (+) Y_n (+) Y_{n+1}, the pullback of
/// the path object Y^I (d(y1, y2, z) = (dy1, dy2, y1 - y2 - dz)) along f.
/// first(x) = (x, f x, 0), second(x, y, z) = y.
Factorization factor_acyclic_cof_then_fib(const ChainMap& f);

/// Mapping cylinder: middle_n = X_n (+) X_{n-1} (+) Y_n with
/// d(x, x', y) = (dx - x', -dx', dy + f x'). first(x) = (x, 0, 0),
/// second(x, x', y) = f x + y.
Factorization factor_cof_then_acyclic_fib(const ChainMap& f);

/// Fibre of a fibration: degreewise kernel with its inclusion.
struct FibreData {
  ChainComplex fibre;
  ChainMap inclusion;
  /// Degreewise left inverse of the inclusion.
  std::map<int, Matrix> retraction;
};
/// Throws Error when p is not a fibration.
FibreData fibre(const ChainMap& p);
/// Throws Error when i is not a cofibration.
CofibrationSplitting cofibre(const ChainMap& i);

/// Homotopy fibre: the fibre of the second leg of the cocylinder
/// factorization, presented as hofib(f)_n = X_n (+) Y_{n+1} with
/// d(x, z) = (dx, f x - dz).
struct HomotopyFibre {
  ChainComplex complex;
  /// hofib(f) -> middle of factor_acyclic_cof_then_fib(f); (x, z) -> (x, 0, z).
  ChainMap inclusion;
};
HomotopyFibre hofib(const ChainMap& f);
/// Map hofib(f) -> hofib(g) induced by a commuting square
/// (top : X -> X', bottom : Y -> Y') from f to g: (x, z) -> (top x, bottom z).
ChainMap hofib_map(const ChainMap& f, const ChainMap& g, const ChainMap& top,
                   const ChainMap& bottom);
/// fib(p) -> hofib(p), x -> (x, 0); a quasi-isomorphism for fibrations.
ChainMap fibre_to_hofib(const ChainMap& p);

/// Σi: both complexes shifted by one, same matrices. Throws on
/// non-cofibrations.
ChainMap suspend_map(const ChainMap& i);

}  // namespace obstruct
