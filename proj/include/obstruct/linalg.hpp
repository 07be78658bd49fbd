#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "obstruct/matrix.hpp"

namespace obstruct {

/// u * a * v = s with u, v invertible over the ring and s diagonal. The
/// nonzero diagonal entries come first, are canonical associates and form
/// a divisibility chain. Inverses of u and v are carried along because the
/// splitting constructions need them.
struct SnfDecomposition {
  Matrix u;
  Matrix s;
  Matrix v;
  Matrix u_inverse;
  Matrix v_inverse;
  std::size_t rank = 0;

  std::vector<Scalar> invariant_factors() const;
};

SnfDecomposition snf(const Matrix& a);

/// Why a system a*x = b has no solution: after the change of basis y = v^-1 x
/// and c = u*b, row `row` reads `factor * y = value`, which is unsolvable.
/// `factor` is zero for rows beyond the rank.
struct InconsistencyCertificate {
  std::size_t row = 0;
  Scalar factor;
  Scalar value;
};

using SolveOutcome = std::variant<std::vector<Scalar>, InconsistencyCertificate>;

/// Solves a*x = b exactly. The returned solution sets every free coordinate
/// (in the SNF basis) to zero, so it is a deterministic function of (a, b).
SolveOutcome solve_certified(const Matrix& a, const std::vector<Scalar>& b);
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);
/// Solves a*x = b column by column; nullopt if any column is unsolvable.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

/// Columns form a basis of ker(a) (a saturated sublattice over ZZ).
Matrix kernel_basis(const Matrix& a);
std::size_t rank(const Matrix& a);

/// coker(a) = (+) R/d_i (+) R^free_rank, torsion listing only non-unit d_i.
struct CokernelInvariants {
  std::vector<Scalar> torsion;
  std::size_t free_rank = 0;

  friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

CokernelInvariants cokernel_invariants(const Matrix& a);

/// Injective with every invariant factor a unit: a split monomorphism with
/// free cokernel.
bool is_unit_embedding(const Matrix& a);
/// Surjective over the ring: rank equals the row count and every invariant
/// factor is a unit.
bool is_surjective(const Matrix& a);

/// Inverse of a square matrix invertible over the ring.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace obstruct
