#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "obstruct/linalg.hpp"
#include "obstruct/matrix.hpp"

namespace obstruct {

/// Finitely supported complex of free modules, homological grading:
/// d_n : C_n -> C_{n-1} is a rank(n-1) x rank(n) matrix. Degrees outside
/// the support have rank 0; the zero complex has empty support.
class ChainComplex {
 public:
  explicit ChainComplex(Ring ring);
  /// Zero ranks are dropped. Missing differentials are zero. Throws on
  /// shape mismatches; d^2 = 0 is checked separately by validate().
  ChainComplex(Ring ring, std::map<int, std::size_t> ranks, std::map<int, Matrix> differentials = {});

  const Ring& ring() const { return ring_; }
  std::size_t rank(int n) const;
  /// Zero matrix of the right shape when not stored.
  Matrix differential(int n) const;
  /// Supported degrees, ascending.
  std::vector<int> support() const;
  const std::map<int, std::size_t>& ranks() const { return ranks_; }
  bool is_zero() const { return ranks_.empty(); }
  std::size_t total_rank() const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b);

 private:
  Ring ring_;
  std::map<int, std::size_t> ranks_;
  std::map<int, Matrix> differentials_;
};

/// Graded map of the given degree k: component n is a
/// target.rank(n+k) x source.rank(n) matrix. Components where either side
/// vanishes are not stored.
class ChainMap {
 public:
  ChainMap(ChainComplex source, ChainComplex target, int degree = 0,
           std::map<int, Matrix> components = {});

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  const Ring& ring() const { return source_.ring(); }
  int degree() const { return degree_; }
  Matrix component(int n) const;
  void set_component(int n, Matrix m);
  /// Degrees n where both source_n and target_{n+k} are nonzero.
  std::vector<int> active_degrees() const;
  bool is_zero() const;

  friend bool operator==(const ChainMap& a, const ChainMap& b);

 private:
  ChainComplex source_;
  ChainComplex target_;
  int degree_;
  std::map<int, Matrix> components_;
};

struct HomologyGroup {
  std::vector<Scalar> torsion;
  std::size_t free_rank = 0;

  bool is_zero() const { return torsion.empty() && free_rank == 0; }
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// ---- validation -----------------------------------------------------------

/// First degree n with d_{n-1} d_n != 0, if any.
std::optional<int> first_nonzero_square(const ChainComplex& c);
bool validate(const ChainComplex& c);
/// d f = (-1)^k f d for a map of degree k; for k = 0 this is the strict
/// chain map condition and in general it says f is a cycle of the
/// Hom-complex.
bool is_chain_map(const ChainMap& f);

// ---- elementary constructions -------------------------------------------

ChainComplex zero_complex(const Ring& ring);
ChainMap identity_map(const ChainComplex& c);
ChainMap zero_map(const ChainComplex& source, const ChainComplex& target, int degree = 0);
/// g after f. Degrees add.
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap subtract(const ChainMap& f, const ChainMap& g);
ChainMap negate(const ChainMap& f);
ChainMap scale(const ChainMap& f, const Scalar& factor);

/// Degreewise a (+) b, a-block first.
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);
ChainMap sum_inclusion_first(const ChainComplex& a, const ChainComplex& b);
ChainMap sum_inclusion_second(const ChainComplex& a, const ChainComplex& b);
ChainMap sum_projection_first(const ChainComplex& a, const ChainComplex& b);
ChainMap sum_projection_second(const ChainComplex& a, const ChainComplex& b);

/// (c[k])_n = c_{n-k} with differential (-1)^k d.
ChainComplex shift(const ChainComplex& c, int k);
/// Same matrices between shifted complexes; preserves the chain-map property.
ChainMap shift(const ChainMap& f, int k);

/// cone(f)_n = A_{n-1} (+) B_n, d(a, b) = (-d a, f a + d b).
ChainComplex cone(const ChainMap& f);

// ---- Hom-complex ------------------------------------------------------------

/// Hom(w, f) with degree-n part the product over k of Hom(w_k, f_{k+n}) and
/// differential dφ = d_f φ - (-1)^n φ d_w. Coordinates: blocks in
/// ascending k, each block row-major.
class HomComplex {
 public:
  HomComplex(ChainComplex w, ChainComplex f);

  const ChainComplex& complex() const { return complex_; }
  const ChainComplex& source() const { return w_; }
  const ChainComplex& target() const { return f_; }

  std::vector<Scalar> encode(const ChainMap& phi) const;
  ChainMap decode(int degree, const std::vector<Scalar>& coords) const;
  /// Boundary of a graded map, computed on maps directly.
  ChainMap boundary(const ChainMap& phi) const;

 private:
  struct Block {
    int source_degree;
    std::size_t rows;
    std::size_t cols;
    std::size_t offset;
  };
  const std::vector<Block>& blocks(int degree) const;

  ChainComplex w_;
  ChainComplex f_;
  std::map<int, std::vector<Block>> layout_;
  std::map<int, std::size_t> dims_;
  ChainComplex complex_;
};

ChainComplex hom_complex(const ChainComplex& w, const ChainComplex& f);

// ---- homology and homotopy --------------------------------------------------

HomologyGroup homology(const ChainComplex& c, int n);
bool is_acyclic(const ChainComplex& c);

/// h of degree 1 with f = d h + h d, or nullopt when f is not null-homotopic.
/// Decided by a single solve in the Hom-complex.
std::optional<ChainMap> null_homotopy(const ChainMap& f);
/// θ must be a degree-0 cycle of Hom(source, target); throws otherwise.
bool homotopy_class_is_zero(const ChainMap& theta);

// ---- degreewise kernels, quotients, pushouts, pullbacks ---------------------

/// Degreewise kernel of a strict map (free over a PID), with the inclusion
/// and a degreewise left inverse of it.
struct KernelData {
  ChainComplex kernel;
  ChainMap inclusion;
  std::map<int, Matrix> left_inverse;
};
KernelData degreewise_kernel(const ChainMap& f);

/// Quotient B/A for a map A -> B whose components are unit embeddings,
/// together with the splitting B_n = i(A_n) (+) section(C_n):
///   projection∘i = 0, projection∘section = 1, retraction∘i = 1,
///   retraction∘section = 0, i∘retraction + section∘projection = 1.
struct QuotientData {
  ChainComplex quotient;
  ChainMap projection;
  std::map<int, Matrix> section;
  std::map<int, Matrix> retraction;
};
std::optional<QuotientData> degreewise_quotient(const ChainMap& i);

/// Pushout of A' <-g- A -i-> B for i with unit-embedding components,
/// presented as B'_n = A'_n (+) C_n with C = B/A.
struct PushoutData {
  ChainComplex pushout;
  ChainMap from_source;  // A' -> B'
  ChainMap from_target;  // B  -> B'
  QuotientData quotient; // of i
};
PushoutData degreewise_pushout(const ChainMap& i, const ChainMap& g);

/// Pullback of X -p-> Y <-g- B as the kernel of (p, -g): X (+) B -> Y.
struct PullbackData {
  ChainComplex pullback;
  ChainMap to_source;  // P -> X
  ChainMap to_other;   // P -> B
};
PullbackData degreewise_pullback(const ChainMap& p, const ChainMap& g);

}  // namespace obstruct
