#pragma once

#include <optional>
#include <vector>

#include "obstruct/model.hpp"

namespace obstruct {

/// Commuting square
///
///     A --top--> X
///     |          |
///     i          p
///     v          v
///     B -bottom> Y
///
/// with i a cofibration and p a fibration.
struct LiftingSquare {
  ChainMap i;
  ChainMap p;
  ChainMap top;
  ChainMap bottom;
};

/// Throws Error naming the first violated condition.
void check_square(const LiftingSquare& sq);
bool is_lift(const LiftingSquare& sq, const ChainMap& ell);

/// Shift every object and map of the square by k.
LiftingSquare shift(const LiftingSquare& sq, int k);

/// A diagonal B -> X making both triangles commute.
struct Lift {
  ChainMap ell;
};

/// How an obstruction was produced: the degreewise lift sigma (a graded
/// map B -> X with sigma∘i = top and p∘sigma = bottom), the cofibre
/// projection q : B -> B/A and the fibre inclusion F -> X.
struct ObstructionProvenance {
  ChainMap sigma;
  ChainMap cofibre_projection;
  ChainMap fibre_inclusion;
};

/// Obstruction for a square i -> p: theta is a degree-0 cycle of Hom(W, F)
/// with W = cofibre(i)[-1] and F = fibre(p). Classes obtained by
/// pushforward carry no provenance.
struct ObstructionClass {
  ChainComplex w;
  ChainComplex f;
  ChainMap theta;
  std::optional<ObstructionProvenance> provenance;
};

/// The deterministic degreewise lift: sigma = top∘r + λ∘q where λ solves
/// p∘λ = bottom∘section column by column.
ChainMap degreewise_lift(const LiftingSquare& sq);

ObstructionClass obstruction(const LiftingSquare& sq);
/// Same construction from a caller-supplied degreewise lift. Throws when
/// sigma is not a degreewise lift of the square.
ObstructionClass obstruction_with_lift(const LiftingSquare& sq, const ChainMap& sigma);

/// true exactly when theta is a boundary, i.e. when the square has a lift.
bool obstruction_vanishes(const ObstructionClass& alpha);
/// h of degree 1 in Hom(W, F) with theta = d h + h d, if one exists.
std::optional<ChainMap> obstruction_null_homotopy(const ObstructionClass& alpha);

/// ell = sigma - incl∘h∘q for a null-homotopy h of theta. Throws when h
/// does not satisfy the homotopy equation.
Lift extract_lift(const LiftingSquare& sq, const ObstructionClass& alpha, const ChainMap& h);
/// obstruction + null-homotopy + extraction; nullopt when obstructed.
std::optional<Lift> lift_via_obstruction(const LiftingSquare& sq);

/// phi∘theta for a map phi : F -> F'; same W, no provenance.
ObstructionClass pushforward(const ObstructionClass& alpha, const ChainMap& phi);

/// true when theta_a - theta_b is a boundary in Hom(W, F). Both classes
/// must live in the same Hom-complex.
bool differ_by_boundary(const ChainMap& theta_a, const ChainMap& theta_b);

/// Map of fibrations p -> p' given by (upper : X -> X', lower : Y -> Y').
struct FibrationMap {
  ChainMap p;
  ChainMap p_prime;
  ChainMap upper;
  ChainMap lower;
};
/// Induced map fibre(p) -> fibre(p').
ChainMap induced_fibre_map(const FibrationMap& m);
/// The composite square i -> p -> p'.
LiftingSquare compose_square(const LiftingSquare& sq, const FibrationMap& m);

// ---- closure transports ------------------------------------------------------

/// Cobase change of a cofibration i : A -> B along attach : A -> A'.
/// i' : A' -> A' (+)_A B, with the pushout map j : B -> B' and the
/// canonical identification cofibre(i) -> cofibre(i') induced by j.
struct CobaseChange {
  ChainMap i;
  ChainMap attach;
  ChainMap i_prime;
  ChainMap pushout_map;
  ChainMap cofibre_identification;

  /// The square i -> i' -> p for a square i' -> p.
  LiftingSquare composite_square(const LiftingSquare& sq_prime) const;
  /// Obstruction of the composite square, living in Hom(W, F).
  ObstructionClass transported_obstruction(const LiftingSquare& sq_prime) const;
  /// Moves a representative in Hom(W', F) to Hom(W, F) along the
  /// identification.
  ChainMap pull_back_theta(const ChainMap& theta_prime) const;
  /// Lift for the i'-square from a lift of the composite square (pushout
  /// universal property).
  Lift lift_from_composite(const LiftingSquare& sq_prime, const Lift& composite_lift) const;
};
CobaseChange cobase_change(const ChainMap& i, const ChainMap& attach);

/// i' as a retract of i:
///   A' -sa-> A -ra-> A'   with ra∘sa = 1,
///   B' -sb-> B -rb-> B'   with rb∘sb = 1,
///   i∘sa = sb∘i' and i'∘ra = rb∘i.
struct RetractData {
  ChainMap i_prime;
  ChainMap i;
  ChainMap section_source;
  ChainMap section_target;
  ChainMap retraction_source;
  ChainMap retraction_target;
};

class RetractTransport {
 public:
  /// Throws Error when the retract equations fail.
  explicit RetractTransport(RetractData data);

  const RetractData& data() const { return data_; }
  LiftingSquare composite_square(const LiftingSquare& sq_prime) const;
  ObstructionClass transported_obstruction(const LiftingSquare& sq_prime) const;
  /// ell∘sb for a lift ell of the composite square.
  Lift lift_from_composite(const Lift& composite_lift) const;

 private:
  RetractData data_;
};

/// Weak equivalence of cofibrations i -> i': on_source : A -> A',
/// on_target : B -> B' with on_target∘i = i'∘on_source.
struct CofibrationEquivalence {
  ChainMap i;
  ChainMap i_prime;
  ChainMap on_source;
  ChainMap on_target;
};

class WeakEquivalenceTransport {
 public:
  /// Throws Error when a leg is not a weak equivalence, an arrow is not a
  /// cofibration, or the square does not commute.
  explicit WeakEquivalenceTransport(CofibrationEquivalence data);

  const CofibrationEquivalence& data() const { return data_; }
  LiftingSquare composite_square(const LiftingSquare& sq_prime) const;
  ObstructionClass transported_obstruction(const LiftingSquare& sq_prime) const;

 private:
  CofibrationEquivalence data_;
};

// ---- rigid obstruction theory -------------------------------------------------

/// a : W -> hofib(i) with W = cofibre(i)[-1]; on W_n = C_{n+1} it sends w to
/// (κ w, s w) in A_n (+) B_{n+1}, where s is the section of the cofibre
/// projection and i∘κ = d s - s d.
struct RigidTheory {
  ChainMap i;
  ChainComplex w;
  HomotopyFibre hofib_i;
  ChainMap a;
};
RigidTheory rigid_theory(const ChainMap& i);
/// Composite W -> hofib(i) -> hofib(p) for a square i -> p.
ChainMap rigid_obstruction(const RigidTheory& theory, const LiftingSquare& sq);
bool rigid_obstruction_vanishes(const RigidTheory& theory, const LiftingSquare& sq);

// ---- the space of squares -------------------------------------------------------

/// A basis of the module of pairs (top, bottom) making i -> p a commuting
/// square of chain maps. Obstructions are linear on this module, so a
/// basis decides the right lifting property.
std::vector<LiftingSquare> square_space_basis(const ChainMap& i, const ChainMap& p);

}  // namespace obstruct
