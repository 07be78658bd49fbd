#pragma once

#include <cstddef>
#include <optional>

#include "obstruct/obstruction.hpp"

namespace obstruct {

/// Result of the global lifting solve. Exactly one of `lift` and
/// `certificate` is set.
struct OracleVerdict {
  std::optional<Lift> lift;
  std::optional<InconsistencyCertificate> certificate;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
};

/// Decides lift existence by one exact solve with no homotopy theory.
///
/// Unknowns are the entries of ℓ_n : B_n -> X_n for every degree n (ascending)
/// with B_n, X_n nonzero, each block row-major. Equations are assembled
/// degree-major in ascending n; within a degree:
///   1. d_X ℓ_n - ℓ_{n-1} d_B = 0     (X_{n-1} x B_n entries, row-major)
///   2. ℓ_n i_n = top_n               (X_n x A_n entries, row-major)
///   3. p_n ℓ_n = bottom_n            (Y_n x B_n entries, row-major)
OracleVerdict brute_lift(const LiftingSquare& sq);

/// Whether the degree-0 cycle theta : W -> F is d h + h d for some degree-1
/// h, from a directly assembled system (unknown blocks h_n : W_n -> F_{n+1},
/// ascending n; equations θ_n = d_F h_n + h_{n-1} d_W, ascending n).
/// Throws Error when theta is not a degree-0 cycle.
bool brute_homotopy_zero(const ChainMap& theta);

}  // namespace obstruct
