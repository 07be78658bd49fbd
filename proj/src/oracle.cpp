#include "obstruct/oracle.hpp"

#include <set>

namespace obstruct {

namespace {

// Row-major blocks of unknowns, looked up by degree.
struct UnknownLayout {
  struct Block {
    std::size_t rows;
    std::size_t cols;
    std::size_t offset;
  };
  std::map<int, Block> blocks;
  std::size_t total = 0;

  void add(int n, std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) return;
    blocks[n] = Block{rows, cols, total};
    total += rows * cols;
  }
  const Block* find(int n) const {
    auto it = blocks.find(n);
    return it == blocks.end() ? nullptr : &it->second;
  }
};

// Accumulates equations row by row into a dense coefficient list.
struct System {
  const Ring& ring;
  std::size_t unknowns;
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;

  std::vector<Scalar>& new_row(const Scalar& value) {
    rows.emplace_back(unknowns);
    rhs.push_back(value);
    return rows.back();
  }

  Matrix matrix() const {
    Matrix m(ring, rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < unknowns; ++c)
        if (rows[r][c] != 0) m.set(r, c, rows[r][c]);
    return m;
  }
};

// coefficient += factor, reduced in the ring
void bump(const Ring& ring, Scalar& slot, const Scalar& factor) { slot = ring.add(slot, factor); }

}  // namespace

OracleVerdict brute_lift(const LiftingSquare& sq) {
  check_square(sq);
  const ChainComplex& a = sq.i.source();
  const ChainComplex& b = sq.i.target();
  const ChainComplex& x = sq.p.source();
  const ChainComplex& y = sq.p.target();
  const Ring& ring = b.ring();

  UnknownLayout layout;
  for (int n : b.support()) layout.add(n, x.rank(n), b.rank(n));

  std::set<int> degrees;
  for (int n : b.support()) {
    degrees.insert(n);
    degrees.insert(n + 1);
  }

  System sys{ring, layout.total, {}, {}};
  for (int n : degrees) {
    // 1. (d_X ℓ_n - ℓ_{n-1} d_B)[r][c] = 0 over X_{n-1} x B_n
    {
      const Matrix dx = x.differential(n);
      const Matrix db = b.differential(n);
      const auto* here = layout.find(n);
      const auto* below = layout.find(n - 1);
      for (std::size_t r = 0; r < x.rank(n - 1); ++r) {
        for (std::size_t c = 0; c < b.rank(n); ++c) {
          auto& row = sys.new_row(0);
          if (here) {
            for (std::size_t k = 0; k < x.rank(n); ++k) {
              if (dx.at(r, k) != 0) bump(ring, row[here->offset + k * here->cols + c], dx.at(r, k));
            }
          }
          if (below) {
            for (std::size_t k = 0; k < b.rank(n - 1); ++k) {
              if (db.at(k, c) != 0)
                bump(ring, row[below->offset + r * below->cols + k], ring.neg(db.at(k, c)));
            }
          }
        }
      }
    }
    const auto* here = layout.find(n);
    // 2. (ℓ_n i_n)[r][c] = top_n[r][c] over X_n x A_n
    {
      const Matrix in = sq.i.component(n);
      const Matrix top = sq.top.component(n);
      for (std::size_t r = 0; r < x.rank(n); ++r) {
        for (std::size_t c = 0; c < a.rank(n); ++c) {
          auto& row = sys.new_row(top.at(r, c));
          if (!here) continue;
          for (std::size_t k = 0; k < b.rank(n); ++k) {
            if (in.at(k, c) != 0) bump(ring, row[here->offset + r * here->cols + k], in.at(k, c));
          }
        }
      }
    }
    // 3. (p_n ℓ_n)[r][c] = bottom_n[r][c] over Y_n x B_n
    {
      const Matrix pn = sq.p.component(n);
      const Matrix bottom = sq.bottom.component(n);
      for (std::size_t r = 0; r < y.rank(n); ++r) {
        for (std::size_t c = 0; c < b.rank(n); ++c) {
          auto& row = sys.new_row(bottom.at(r, c));
          if (!here) continue;
          for (std::size_t k = 0; k < x.rank(n); ++k) {
            if (pn.at(r, k) != 0) bump(ring, row[here->offset + k * here->cols + c], pn.at(r, k));
          }
        }
      }
    }
  }

  OracleVerdict verdict;
  verdict.unknowns = layout.total;
  verdict.equations = sys.rows.size();
  SolveOutcome outcome = solve_certified(sys.matrix(), sys.rhs);
  if (auto* cert = std::get_if<InconsistencyCertificate>(&outcome)) {
    verdict.certificate = *cert;
    return verdict;
  }
  const auto& sol = std::get<std::vector<Scalar>>(outcome);
  ChainMap ell(b, x);
  for (const auto& [n, blk] : layout.blocks) {
    Matrix m(ring, blk.rows, blk.cols);
    for (std::size_t r = 0; r < blk.rows; ++r)
      for (std::size_t c = 0; c < blk.cols; ++c) m.set(r, c, sol[blk.offset + r * blk.cols + c]);
    ell.set_component(n, std::move(m));
  }
  if (!is_lift(sq, ell)) throw Error("brute_lift: solver returned a non-lift");
  verdict.lift = Lift{std::move(ell)};
  return verdict;
}

bool brute_homotopy_zero(const ChainMap& theta) {
  if (theta.degree() != 0 || !is_chain_map(theta)) {
    throw Error("brute_homotopy_zero: theta is not a degree-0 cycle");
  }
  const ChainComplex& w = theta.source();
  const ChainComplex& f = theta.target();
  const Ring& ring = w.ring();

  UnknownLayout layout;
  for (int n : w.support()) layout.add(n, f.rank(n + 1), w.rank(n));

  System sys{ring, layout.total, {}, {}};
  for (int n : w.support()) {
    // θ_n[r][c] = (d_F h_n)[r][c] + (h_{n-1} d_W)[r][c] over F_n x W_n
    const Matrix t = theta.component(n);
    const Matrix df = f.differential(n + 1);
    const Matrix dw = w.differential(n);
    const auto* here = layout.find(n);
    const auto* below = layout.find(n - 1);
    for (std::size_t r = 0; r < f.rank(n); ++r) {
      for (std::size_t c = 0; c < w.rank(n); ++c) {
        auto& row = sys.new_row(t.at(r, c));
        if (here) {
          for (std::size_t k = 0; k < f.rank(n + 1); ++k) {
            if (df.at(r, k) != 0) bump(ring, row[here->offset + k * here->cols + c], df.at(r, k));
          }
        }
        if (below) {
          for (std::size_t k = 0; k < w.rank(n - 1); ++k) {
            if (dw.at(k, c) != 0) bump(ring, row[below->offset + r * below->cols + k], dw.at(k, c));
          }
        }
      }
    }
  }
  return solve(sys.matrix(), sys.rhs).has_value();
}

}  // namespace obstruct
