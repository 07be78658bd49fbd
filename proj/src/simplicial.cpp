#include "obstruct/simplicial.hpp"

#include <map>

namespace obstruct {

namespace {

using Face = std::vector<int>;

// (k+1)-subsets of {0..n} in lexicographic order.
std::vector<Face> faces(int n, int k) {
  std::vector<Face> out;
  Face cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Simplicial chains on all faces of Δ^n of dimension <= top.
ChainComplex face_chains(const Ring& ring, int n, int top) {
  std::map<int, std::size_t> ranks;
  std::map<int, Matrix> ds;
  std::vector<Face> lower;
  for (int k = 0; k <= top; ++k) {
    std::vector<Face> here = faces(n, k);
    ranks[k] = here.size();
    if (k > 0) {
      std::map<Face, std::size_t> index;
      for (std::size_t r = 0; r < lower.size(); ++r) index[lower[r]] = r;
      Matrix d(ring, lower.size(), here.size());
      for (std::size_t c = 0; c < here.size(); ++c) {
        for (int j = 0; j <= k; ++j) {
          Face face = here[c];
          face.erase(face.begin() + j);
          d.set(index.at(face), c, Scalar(j % 2 == 0 ? 1 : -1));
        }
      }
      ds.emplace(k, std::move(d));
    }
    lower = std::move(here);
  }
  return ChainComplex(ring, ranks, std::move(ds));
}

}  // namespace

ChainComplex simplex_chain(const Ring& ring, int n) {
  if (n < 0) throw Error("simplex_chain: negative dimension");
  return face_chains(ring, n, n);
}

BoundaryChain boundary_chain(const Ring& ring, int n) {
  if (n < 1) throw Error("boundary_chain: n must be at least 1 (the empty map into a point has no obstruction theory)");
  ChainComplex boundary = face_chains(ring, n, n - 1);
  ChainComplex simplex = simplex_chain(ring, n);
  ChainMap inclusion(boundary, simplex);
  for (int k : boundary.support()) {
    inclusion.set_component(k, Matrix::identity(ring, boundary.rank(k)));
  }
  return BoundaryChain{std::move(boundary), std::move(inclusion)};
}

ChainComplex sphere(const Ring& ring, int k) { return ChainComplex(ring, {{k, 1}}); }

ChainComplex disk(const Ring& ring, int k) {
  return ChainComplex(ring, {{k, 1}, {k - 1, 1}}, {{k, Matrix(ring, {{1}})}});
}

ChainMap generating_cofibration(const Ring& ring, int k) {
  ChainMap j(sphere(ring, k - 1), disk(ring, k));
  j.set_component(k - 1, Matrix(ring, {{1}}));
  return j;
}

ChainMap GeneratingCofibration::build(const Ring& ring) const {
  if (n < 1) throw Error("generating cofibration: n must be at least 1");
  if (kind == GeneratorKind::SphereDisk) return generating_cofibration(ring, n);
  return boundary_chain(ring, n).inclusion;
}

RlpVerdict rlp_equivalence_check(const ChainMap& p, const GeneratingCofibration& cof) {
  if (!is_fibration(p)) throw Error("rlp_equivalence_check: map is not a fibration");
  const Ring& ring = p.ring();
  const ChainMap j = cof.build(ring);
  const FibreData fib = fibre(p);
  const int n = cof.n;

  RlpVerdict verdict;
  verdict.obstruction_group = homology(fib.fibre, n - 1);
  verdict.spanning_squares = square_space_basis(j, p);
  verdict.rlp = true;
  for (const LiftingSquare& sq : verdict.spanning_squares) {
    const ObstructionClass alpha = obstruction(sq);
    auto h = obstruction_null_homotopy(alpha);
    if (!h) {
      verdict.rlp = false;
      verdict.lifts.clear();
      break;
    }
    verdict.lifts.push_back(extract_lift(sq, alpha, *h));
  }

  if (!verdict.obstruction_group.is_zero()) {
    // Some basis cycle of F_{n-1} is not a boundary; send the top cell of
    // the source to it and everything else to zero.
    const Matrix cycles = kernel_basis(fib.fibre.differential(n - 1));
    const Matrix boundaries = fib.fibre.differential(n);
    for (std::size_t c = 0; c < cycles.cols(); ++c) {
      const auto z = cycles.column_entries(c);
      if (solve(boundaries, z)) continue;
      const Matrix in_x = fib.inclusion.component(n - 1) * Matrix::column(ring, z);
      ChainMap top(j.source(), p.source());
      Matrix component(ring, p.source().rank(n - 1), j.source().rank(n - 1));
      component.place(0, 0, in_x);
      top.set_component(n - 1, std::move(component));
      verdict.witness = LiftingSquare{j, p, std::move(top), zero_map(j.target(), p.target())};
      break;
    }
  }
  return verdict;
}

}  // namespace obstruct
