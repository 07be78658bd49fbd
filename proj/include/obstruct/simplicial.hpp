#pragma once

#include <optional>
#include <vector>

#include "obstruct/obstruction.hpp"

namespace obstruct {

/// Simplicial chains of the standard n-simplex: degree k has one basis
/// vector per (k+1)-subset of {0..n}, in lexicographic order, with
/// d[v0..vk] = sum_j (-1)^j [v0..^vj..vk].
ChainComplex simplex_chain(const Ring& ring, int n);

struct BoundaryChain {
  ChainComplex complex;
  /// Inclusion of the boundary into simplex_chain(n); a cofibration.
  ChainMap inclusion;
};
/// Chains of the boundary of the n-simplex (every face but the top one).
/// Throws Error for n < 1: the empty boundary of a point has no
/// obstruction theory.
BoundaryChain boundary_chain(const Ring& ring, int n);

/// Rank 1 in degree k, zero differential.
ChainComplex sphere(const Ring& ring, int k);
/// Rank 1 in degrees k and k-1 with identity differential.
ChainComplex disk(const Ring& ring, int k);
/// sphere(k-1) -> disk(k), the identity in degree k-1. Cofibre sphere(k).
ChainMap generating_cofibration(const Ring& ring, int k);

enum class GeneratorKind { SphereDisk, SimplexBoundary };

struct GeneratingCofibration {
  GeneratorKind kind;
  int n;

  /// sphere(n-1) -> disk(n) or boundary(Δ^n) -> Δ^n.
  ChainMap build(const Ring& ring) const;
};

struct RlpVerdict {
  /// H_{n-1} of the fibre of p.
  HomologyGroup obstruction_group;
  /// Decided by obstruction vanishing on a basis of the square module.
  bool rlp = false;
  std::vector<LiftingSquare> spanning_squares;
  /// Lifts extracted from the obstruction engine, one per spanning square,
  /// when rlp holds.
  std::vector<Lift> lifts;
  /// A square whose obstruction is nonzero, built from a cycle
  /// representing a nonzero class of H_{n-1}(F) with zero bottom map.
  std::optional<LiftingSquare> witness;
};

/// Right lifting property of a fibration against a generating cofibration,
/// decided by the obstruction engine and explained by H_{n-1}(fibre).
/// Throws Error when p is not a fibration or n < 1.
RlpVerdict rlp_equivalence_check(const ChainMap& p, const GeneratingCofibration& cof);

}  // namespace obstruct
