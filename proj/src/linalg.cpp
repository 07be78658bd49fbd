#include "obstruct/linalg.hpp"

#include <algorithm>

namespace obstruct {

std::vector<Scalar> SnfDecomposition::invariant_factors() const {
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < rank; ++k) out.push_back(s.at(k, k));
  return out;
}

namespace {

// Elimination state. Row operations act on s and u (and inversely on
// u_inverse); column operations on s and v (and inversely on v_inverse).
struct SnfState {
  Matrix s;
  Matrix u;
  Matrix v;
  Matrix u_inv;
  Matrix v_inv;
  const Ring& ring;

  void swap_rows(std::size_t i, std::size_t j) {
    s.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    s.swap_cols(i, j);
    v.swap_cols(i, j);
    v_inv.swap_rows(i, j);
  }
  // row[target] += f * row[source]
  void add_row(std::size_t target, std::size_t source, const Scalar& f) {
    s.add_row_multiple(target, source, f);
    u.add_row_multiple(target, source, f);
    u_inv.add_col_multiple(source, target, ring.neg(f));
  }
  // col[target] += f * col[source]
  void add_col(std::size_t target, std::size_t source, const Scalar& f) {
    s.add_col_multiple(target, source, f);
    v.add_col_multiple(target, source, f);
    v_inv.add_row_multiple(source, target, ring.neg(f));
  }
  void scale_row(std::size_t i, const Scalar& unit) {
    s.scale_row(i, unit);
    u.scale_row(i, unit);
    u_inv.scale_col(i, ring.inverse(unit));
  }
};

}  // namespace

SnfDecomposition snf(const Matrix& a) {
  const Ring& ring = a.ring();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SnfState st{a, Matrix::identity(ring, m), Matrix::identity(ring, n), Matrix::identity(ring, m),
              Matrix::identity(ring, n), ring};

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    mpz_class best_size;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (st.s.at(i, j) == 0) continue;
        mpz_class sz = ring.euclidean_size(st.s.at(i, j));
        if (!best || sz < best_size) {
          best = {i, j};
          best_size = sz;
        }
      }
    }
    if (!best) break;
    st.swap_rows(t, best->first);
    st.swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (st.s.at(i, t) == 0) continue;
        auto [q, r] = ring.divmod(st.s.at(i, t), st.s.at(t, t));
        st.add_row(i, t, ring.neg(q));
        if (r != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (st.s.at(t, j) == 0) continue;
        auto [q, r] = ring.divmod(st.s.at(t, j), st.s.at(t, t));
        st.add_col(j, t, ring.neg(q));
        if (r != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived: move the smallest entry of row/column t into
        // the pivot position. Its size is strictly below the old pivot's.
        std::size_t bi = t;
        std::size_t bj = t;
        mpz_class bs = ring.euclidean_size(st.s.at(t, t));
        for (std::size_t i = t + 1; i < m; ++i) {
          if (st.s.at(i, t) != 0 && ring.euclidean_size(st.s.at(i, t)) < bs) {
            bi = i;
            bj = t;
            bs = ring.euclidean_size(st.s.at(i, t));
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (st.s.at(t, j) != 0 && ring.euclidean_size(st.s.at(t, j)) < bs) {
            bi = t;
            bj = j;
            bs = ring.euclidean_size(st.s.at(t, j));
          }
        }
        st.swap_rows(t, bi);
        st.swap_cols(t, bj);
        continue;
      }
      // Divisibility chain: fold in a row whose entries the pivot misses.
      bool folded = false;
      for (std::size_t i = t + 1; i < m && !folded; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!ring.divides(st.s.at(t, t), st.s.at(i, j))) {
            st.add_row(t, i, Scalar(1));
            folded = true;
            break;
          }
        }
      }
      if (!folded) break;
    }
    const Scalar unit = ring.unit_part(st.s.at(t, t));
    if (unit != 1) st.scale_row(t, ring.inverse(unit));
  }

  return SnfDecomposition{std::move(st.u), std::move(st.s), std::move(st.v), std::move(st.u_inv),
                          std::move(st.v_inv), t};
}

namespace {

SolveOutcome solve_with(const SnfDecomposition& d, const std::vector<Scalar>& b) {
  const Ring& ring = d.s.ring();
  const std::vector<Scalar> c = multiply(d.u, b);
  std::vector<Scalar> y(d.s.cols());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k < d.rank) {
      auto [q, r] = ring.divmod(c[k], d.s.at(k, k));
      if (r != 0) return InconsistencyCertificate{k, d.s.at(k, k), c[k]};
      y[k] = q;
    } else if (c[k] != 0) {
      return InconsistencyCertificate{k, Scalar(0), c[k]};
    }
  }
  return multiply(d.v, y);
}

}  // namespace

SolveOutcome solve_certified(const Matrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows()) throw Error("solve: right-hand side has wrong length");
  return solve_with(snf(a), b);
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
  auto outcome = solve_certified(a, b);
  if (auto* x = std::get_if<std::vector<Scalar>>(&outcome)) return std::move(*x);
  return std::nullopt;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows()) throw Error("solve: right-hand side has wrong row count");
  Matrix x(a.ring(), a.cols(), b.cols());
  if (b.cols() == 0) return x;
  const SnfDecomposition d = snf(a);
  for (std::size_t c = 0; c < b.cols(); ++c) {
    auto outcome = solve_with(d, b.column_entries(c));
    auto* col = std::get_if<std::vector<Scalar>>(&outcome);
    if (!col) return std::nullopt;
    for (std::size_t r = 0; r < col->size(); ++r) x.set(r, c, (*col)[r]);
  }
  return x;
}

Matrix kernel_basis(const Matrix& a) {
  const SnfDecomposition d = snf(a);
  return d.v.block(0, d.rank, a.cols(), a.cols() - d.rank);
}

std::size_t rank(const Matrix& a) { return snf(a).rank; }

CokernelInvariants cokernel_invariants(const Matrix& a) {
  const SnfDecomposition d = snf(a);
  CokernelInvariants out;
  for (const Scalar& f : d.invariant_factors()) {
    if (!a.ring().is_unit(f)) out.torsion.push_back(f);
  }
  out.free_rank = a.rows() - d.rank;
  return out;
}

bool is_unit_embedding(const Matrix& a) {
  const SnfDecomposition d = snf(a);
  if (d.rank != a.cols()) return false;
  const auto factors = d.invariant_factors();
  return std::all_of(factors.begin(), factors.end(),
                     [&](const Scalar& f) { return a.ring().is_unit(f); });
}

bool is_surjective(const Matrix& a) {
  const SnfDecomposition d = snf(a);
  if (d.rank != a.rows()) return false;
  const auto factors = d.invariant_factors();
  return std::all_of(factors.begin(), factors.end(),
                     [&](const Scalar& f) { return a.ring().is_unit(f); });
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) return std::nullopt;
  if (!is_unit_embedding(a)) return std::nullopt;
  return solve_matrix(a, Matrix::identity(a.ring(), a.rows()));
}

}  // namespace obstruct
