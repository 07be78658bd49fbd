#pragma once

#include <cstdint>
#include <random>

#include "obstruct/obstruction.hpp"

namespace obstruct {

struct GeneratorOptions {
  /// Supports of generated complexes lie in [min_degree, max_degree].
  int min_degree = -3;
  int max_degree = 3;
  /// Rank bound for the pieces glued into cofibrations and fibrations; the
  /// glued complexes have rank at most twice this.
  std::size_t piece_rank = 2;
  /// Entries are drawn from [-max_entry, max_entry].
  long max_entry = 3;
};

/// Seeded source of random complexes, maps, cofibrations, fibrations and
/// lifting squares. Every cofibration it builds is an extension
/// A -> B -> C with a random twisting cocycle, conjugated by a random
/// unimodular change of basis in each degree; fibrations are the
/// projections of such extensions.
class InstanceGenerator {
 public:
  InstanceGenerator(Ring ring, std::uint64_t seed, GeneratorOptions options = {});

  const Ring& ring() const { return ring_; }
  std::mt19937_64& engine() { return engine_; }

  long uniform(long lo, long hi);
  bool coin(double p_true = 0.5);
  Scalar scalar();
  Matrix matrix(std::size_t rows, std::size_t cols);

  ChainComplex complex(std::size_t max_rank);
  /// Random complex supported in [lo, hi].
  ChainComplex complex_in(int lo, int hi, std::size_t max_rank);
  /// Contractible complex: a sum of disks.
  ChainComplex contractible(std::size_t max_disks);
  /// Random element of the degree-0 cycles of Hom(a, b).
  ChainMap chain_map(const ChainComplex& a, const ChainComplex& b);
  /// Random graded map of the given degree (no chain condition).
  ChainMap graded_map(const ChainComplex& a, const ChainComplex& b, int degree);

  struct Extension {
    ChainMap inclusion;   // sub -> total, a cofibration
    ChainMap projection;  // total -> quotient, a fibration
  };
  Extension extension(const ChainComplex& sub, const ChainComplex& quotient);

  ChainMap cofibration();
  ChainMap fibration();

  struct Pair {
    ChainMap i;
    ChainMap p;
  };
  /// A cofibration and a fibration whose cofibre, shifted down by one,
  /// overlaps the fibre, so that the obstruction group is often nonzero:
  /// for a random m, cofibre(i) lives in [m, m+1] and fibre(p) in [m-1, m].
  Pair aligned_pair();

  /// Random square over (i, p). With `liftable` the square is built from
  /// a random chain map ℓ as (ℓ∘i, p∘ℓ); otherwise it is a random element
  /// of the square module.
  LiftingSquare square_over(const ChainMap& i, const ChainMap& p, bool liftable);
  /// Square over an aligned pair, liftable by construction with
  /// probability 0.3.
  LiftingSquare square();

 private:
  struct Unimodular {
    Matrix forward;
    Matrix backward;
  };
  Unimodular unimodular(std::size_t n);

  Ring ring_;
  std::mt19937_64 engine_;
  GeneratorOptions options_;
};

}  // namespace obstruct
