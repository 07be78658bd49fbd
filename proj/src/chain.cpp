#include "obstruct/chain.hpp"

#include <set>
#include <sstream>

namespace obstruct {

namespace {

Scalar sign(int k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
  if (!(a == b)) throw Error(std::string(where) + ": ring mismatch");
}

}  // namespace

// ---- ChainComplex -----------------------------------------------------------

ChainComplex::ChainComplex(Ring ring) : ring_(std::move(ring)) {}

ChainComplex::ChainComplex(Ring ring, std::map<int, std::size_t> ranks,
                           std::map<int, Matrix> differentials)
    : ring_(std::move(ring)) {
  for (auto [n, r] : ranks) {
    if (r > 0) ranks_[n] = r;
  }
  for (auto& [n, d] : differentials) {
    if (d.rows() != rank(n - 1) || d.cols() != rank(n)) {
      throw Error("complex: differential d_" + std::to_string(n) + " has shape " +
                  std::to_string(d.rows()) + "x" + std::to_string(d.cols()) + ", expected " +
                  std::to_string(rank(n - 1)) + "x" + std::to_string(rank(n)));
    }
    require_same_ring(d.ring(), ring_, "complex");
    if (d.rows() > 0 && d.cols() > 0 && !d.is_zero()) differentials_.emplace(n, std::move(d));
  }
}

std::size_t ChainComplex::rank(int n) const {
  auto it = ranks_.find(n);
  return it == ranks_.end() ? 0 : it->second;
}

Matrix ChainComplex::differential(int n) const {
  auto it = differentials_.find(n);
  if (it != differentials_.end()) return it->second;
  return Matrix(ring_, rank(n - 1), rank(n));
}

std::vector<int> ChainComplex::support() const {
  std::vector<int> out;
  for (const auto& [n, r] : ranks_) out.push_back(n);
  return out;
}

std::size_t ChainComplex::total_rank() const {
  std::size_t total = 0;
  for (const auto& [n, r] : ranks_) total += r;
  return total;
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
  return a.ring_ == b.ring_ && a.ranks_ == b.ranks_ && a.differentials_ == b.differentials_;
}

// ---- ChainMap ---------------------------------------------------------------

ChainMap::ChainMap(ChainComplex source, ChainComplex target, int degree,
                   std::map<int, Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
  require_same_ring(source_.ring(), target_.ring(), "map");
  for (auto& [n, m] : components) set_component(n, std::move(m));
}

Matrix ChainMap::component(int n) const {
  auto it = components_.find(n);
  if (it != components_.end()) return it->second;
  return Matrix(ring(), target_.rank(n + degree_), source_.rank(n));
}

void ChainMap::set_component(int n, Matrix m) {
  if (m.rows() != target_.rank(n + degree_) || m.cols() != source_.rank(n)) {
    throw Error("map: component " + std::to_string(n) + " has shape " + std::to_string(m.rows()) +
                "x" + std::to_string(m.cols()) + ", expected " +
                std::to_string(target_.rank(n + degree_)) + "x" + std::to_string(source_.rank(n)));
  }
  require_same_ring(m.ring(), ring(), "map");
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) {
    components_.erase(n);
  } else {
    components_.insert_or_assign(n, std::move(m));
  }
}

std::vector<int> ChainMap::active_degrees() const {
  std::vector<int> out;
  for (int n : source_.support()) {
    if (target_.rank(n + degree_) > 0) out.push_back(n);
  }
  return out;
}

bool ChainMap::is_zero() const { return components_.empty(); }

bool operator==(const ChainMap& a, const ChainMap& b) {
  return a.degree_ == b.degree_ && a.source_ == b.source_ && a.target_ == b.target_ &&
         a.components_ == b.components_;
}

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  os << "free rank " << free_rank;
  if (!torsion.empty()) {
    os << ", torsion (";
    for (std::size_t k = 0; k < torsion.size(); ++k) os << (k ? ", " : "") << torsion[k].get_str();
    os << ')';
  }
  return os.str();
}

// ---- validation -------------------------------------------------------------

std::optional<int> first_nonzero_square(const ChainComplex& c) {
  for (int n : c.support()) {
    if (c.rank(n - 1) == 0 || c.rank(n - 2) == 0) continue;
    if (!(c.differential(n - 1) * c.differential(n)).is_zero()) return n;
  }
  return std::nullopt;
}

bool validate(const ChainComplex& c) { return !first_nonzero_square(c).has_value(); }

bool is_chain_map(const ChainMap& f) {
  std::set<int> degrees;
  for (int n : f.source().support()) {
    degrees.insert(n);
    degrees.insert(n + 1);
  }
  const int k = f.degree();
  for (int n : degrees) {
    Matrix lhs = f.target().differential(n + k) * f.component(n);
    Matrix rhs = f.component(n - 1) * f.source().differential(n);
    if (!(lhs == rhs.scaled(sign(k)))) return false;
  }
  return true;
}

// ---- elementary constructions -------------------------------------------------

ChainComplex zero_complex(const Ring& ring) { return ChainComplex(ring); }

ChainMap identity_map(const ChainComplex& c) {
  ChainMap f(c, c, 0);
  for (int n : c.support()) f.set_component(n, Matrix::identity(c.ring(), c.rank(n)));
  return f;
}

ChainMap zero_map(const ChainComplex& source, const ChainComplex& target, int degree) {
  return ChainMap(source, target, degree);
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.target() == g.source())) throw Error("compose: target of f is not the source of g");
  ChainMap out(f.source(), g.target(), f.degree() + g.degree());
  for (int n : out.active_degrees()) {
    out.set_component(n, g.component(n + f.degree()) * f.component(n));
  }
  return out;
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()) || f.degree() != g.degree()) {
    throw Error("add: maps are not parallel");
  }
  ChainMap out(f.source(), f.target(), f.degree());
  for (int n : out.active_degrees()) out.set_component(n, f.component(n) + g.component(n));
  return out;
}

ChainMap negate(const ChainMap& f) {
  ChainMap out(f.source(), f.target(), f.degree());
  for (int n : out.active_degrees()) out.set_component(n, -f.component(n));
  return out;
}

ChainMap subtract(const ChainMap& f, const ChainMap& g) { return add(f, negate(g)); }

ChainMap scale(const ChainMap& f, const Scalar& factor) {
  ChainMap out(f.source(), f.target(), f.degree());
  for (int n : out.active_degrees()) out.set_component(n, f.component(n).scaled(factor));
  return out;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  require_same_ring(a.ring(), b.ring(), "direct_sum");
  std::map<int, std::size_t> ranks;
  for (int n : a.support()) ranks[n] += a.rank(n);
  for (int n : b.support()) ranks[n] += b.rank(n);
  std::map<int, Matrix> ds;
  for (const auto& [n, r] : ranks) {
    ds.emplace(n, Matrix::block_diagonal(a.differential(n), b.differential(n)));
  }
  return ChainComplex(a.ring(), ranks, std::move(ds));
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  if (f.degree() != g.degree()) throw Error("direct_sum: maps have different degrees");
  ChainMap out(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()), f.degree());
  for (int n : out.active_degrees()) {
    out.set_component(n, Matrix::block_diagonal(f.component(n), g.component(n)));
  }
  return out;
}

ChainMap sum_inclusion_first(const ChainComplex& a, const ChainComplex& b) {
  ChainMap out(a, direct_sum(a, b));
  for (int n : a.support()) {
    out.set_component(n, Matrix::vstack(Matrix::identity(a.ring(), a.rank(n)),
                                        Matrix(a.ring(), b.rank(n), a.rank(n))));
  }
  return out;
}

ChainMap sum_inclusion_second(const ChainComplex& a, const ChainComplex& b) {
  ChainMap out(b, direct_sum(a, b));
  for (int n : b.support()) {
    out.set_component(n, Matrix::vstack(Matrix(a.ring(), a.rank(n), b.rank(n)),
                                        Matrix::identity(a.ring(), b.rank(n))));
  }
  return out;
}

ChainMap sum_projection_first(const ChainComplex& a, const ChainComplex& b) {
  ChainMap out(direct_sum(a, b), a);
  for (int n : a.support()) {
    out.set_component(n, Matrix::hstack(Matrix::identity(a.ring(), a.rank(n)),
                                        Matrix(a.ring(), a.rank(n), b.rank(n))));
  }
  return out;
}

ChainMap sum_projection_second(const ChainComplex& a, const ChainComplex& b) {
  ChainMap out(direct_sum(a, b), b);
  for (int n : b.support()) {
    out.set_component(n, Matrix::hstack(Matrix(a.ring(), b.rank(n), a.rank(n)),
                                        Matrix::identity(a.ring(), b.rank(n))));
  }
  return out;
}

ChainComplex shift(const ChainComplex& c, int k) {
  std::map<int, std::size_t> ranks;
  std::map<int, Matrix> ds;
  for (int n : c.support()) {
    ranks[n + k] = c.rank(n);
    ds.emplace(n + k, c.differential(n).scaled(sign(k)));
  }
  return ChainComplex(c.ring(), ranks, std::move(ds));
}

ChainMap shift(const ChainMap& f, int k) {
  ChainMap out(shift(f.source(), k), shift(f.target(), k), f.degree());
  for (int n : f.active_degrees()) out.set_component(n + k, f.component(n));
  return out;
}

ChainComplex cone(const ChainMap& f) {
  if (f.degree() != 0) throw Error("cone: map must have degree 0");
  const ChainComplex& a = f.source();
  const ChainComplex& b = f.target();
  std::map<int, std::size_t> ranks;
  for (int n : a.support()) ranks[n + 1] += a.rank(n);
  for (int n : b.support()) ranks[n] += b.rank(n);
  std::map<int, Matrix> ds;
  for (const auto& [n, r] : ranks) {
    // rows: A_{n-2} (+) B_{n-1}; cols: A_{n-1} (+) B_n
    Matrix d(a.ring(), a.rank(n - 2) + b.rank(n - 1), a.rank(n - 1) + b.rank(n));
    d.place(0, 0, -a.differential(n - 1));
    d.place(a.rank(n - 2), 0, f.component(n - 1));
    d.place(a.rank(n - 2), a.rank(n - 1), b.differential(n));
    ds.emplace(n, std::move(d));
  }
  return ChainComplex(a.ring(), ranks, std::move(ds));
}

// ---- Hom-complex --------------------------------------------------------------

HomComplex::HomComplex(ChainComplex w, ChainComplex f)
    : w_(std::move(w)), f_(std::move(f)), complex_(w_.ring()) {
  require_same_ring(w_.ring(), f_.ring(), "hom_complex");
  std::set<int> degrees;
  for (int k : w_.support())
    for (int j : f_.support()) degrees.insert(j - k);
  for (int n : degrees) {
    std::size_t offset = 0;
    auto& blocks = layout_[n];
    for (int k : w_.support()) {
      const std::size_t rows = f_.rank(k + n);
      if (rows == 0) continue;
      blocks.push_back(Block{k, rows, w_.rank(k), offset});
      offset += rows * w_.rank(k);
    }
    dims_[n] = offset;
  }

  std::map<int, Matrix> ds;
  for (int n : degrees) {
    if (!dims_.count(n - 1)) continue;
    Matrix d(w_.ring(), dims_[n - 1], dims_[n]);
    const auto& lower = layout_[n - 1];
    auto find_lower = [&](int k) -> const Block* {
      for (const auto& b : lower)
        if (b.source_degree == k) return &b;
      return nullptr;
    };
    const Scalar eps = -sign(n);
    for (const Block& blk : layout_[n]) {
      const int k = blk.source_degree;
      const Matrix df = f_.differential(k + n);
      const Matrix dw = w_.differential(k + 1);
      const Block* same = find_lower(k);
      const Block* next = find_lower(k + 1);
      for (std::size_t r = 0; r < blk.rows; ++r) {
        for (std::size_t c = 0; c < blk.cols; ++c) {
          const std::size_t col = blk.offset + r * blk.cols + c;
          // (dφ)_k = d_f φ_k : entry (r', c) picks up d_f(r', r)
          if (same) {
            for (std::size_t r2 = 0; r2 < same->rows; ++r2) {
              const Scalar& v = df.at(r2, r);
              if (v != 0) d.set(same->offset + r2 * same->cols + c, col, v);
            }
          }
          // (dφ)_{k+1} = -(-1)^n φ_k d_w : entry (r, c') picks up d_w(c, c')
          if (next) {
            for (std::size_t c2 = 0; c2 < next->cols; ++c2) {
              const Scalar& v = dw.at(c, c2);
              if (v != 0) d.set(next->offset + r * next->cols + c2, col, eps * v);
            }
          }
        }
      }
    }
    ds.emplace(n, std::move(d));
  }
  complex_ = ChainComplex(w_.ring(), dims_, std::move(ds));
}

const std::vector<HomComplex::Block>& HomComplex::blocks(int degree) const {
  static const std::vector<Block> empty;
  auto it = layout_.find(degree);
  return it == layout_.end() ? empty : it->second;
}

std::vector<Scalar> HomComplex::encode(const ChainMap& phi) const {
  if (!(phi.source() == w_) || !(phi.target() == f_)) {
    throw Error("hom_complex: map does not belong to this Hom-complex");
  }
  auto it = dims_.find(phi.degree());
  std::vector<Scalar> out(it == dims_.end() ? 0 : it->second);
  for (const Block& blk : blocks(phi.degree())) {
    const Matrix m = phi.component(blk.source_degree);
    for (std::size_t r = 0; r < blk.rows; ++r)
      for (std::size_t c = 0; c < blk.cols; ++c) out[blk.offset + r * blk.cols + c] = m.at(r, c);
  }
  return out;
}

ChainMap HomComplex::decode(int degree, const std::vector<Scalar>& coords) const {
  auto it = dims_.find(degree);
  const std::size_t dim = it == dims_.end() ? 0 : it->second;
  if (coords.size() != dim) throw Error("hom_complex: coordinate vector has wrong length");
  ChainMap out(w_, f_, degree);
  for (const Block& blk : blocks(degree)) {
    Matrix m(w_.ring(), blk.rows, blk.cols);
    for (std::size_t r = 0; r < blk.rows; ++r)
      for (std::size_t c = 0; c < blk.cols; ++c) m.set(r, c, coords[blk.offset + r * blk.cols + c]);
    out.set_component(blk.source_degree, std::move(m));
  }
  return out;
}

ChainMap HomComplex::boundary(const ChainMap& phi) const {
  const int n = phi.degree();
  ChainMap out(w_, f_, n - 1);
  for (int k : out.active_degrees()) {
    Matrix m = f_.differential(k + n) * phi.component(k) -
               (phi.component(k - 1) * w_.differential(k)).scaled(sign(n));
    out.set_component(k, std::move(m));
  }
  return out;
}

ChainComplex hom_complex(const ChainComplex& w, const ChainComplex& f) {
  return HomComplex(w, f).complex();
}

// ---- homology and homotopy ----------------------------------------------------

HomologyGroup homology(const ChainComplex& c, int n) {
  const Matrix cycles = kernel_basis(c.differential(n));
  HomologyGroup h;
  if (cycles.cols() == 0) return h;
  // The cycle lattice is saturated, so boundaries have unique coordinates.
  auto coords = solve_matrix(cycles, c.differential(n + 1));
  if (!coords) throw Error("homology: boundaries escape the cycles; is d^2 = 0?");
  const CokernelInvariants inv = cokernel_invariants(*coords);
  h.torsion = inv.torsion;
  h.free_rank = inv.free_rank;
  return h;
}

bool is_acyclic(const ChainComplex& c) {
  for (int n : c.support()) {
    if (!homology(c, n).is_zero()) return false;
  }
  return true;
}

std::optional<ChainMap> null_homotopy(const ChainMap& f) {
  if (f.degree() != 0) throw Error("null_homotopy: map must have degree 0");
  const HomComplex hom(f.source(), f.target());
  const Matrix d1 = hom.complex().differential(1);
  auto x = solve(d1, hom.encode(f));
  if (!x) return std::nullopt;
  return hom.decode(1, *x);
}

bool homotopy_class_is_zero(const ChainMap& theta) {
  if (theta.degree() != 0 || !is_chain_map(theta)) {
    throw Error("homotopy_class_is_zero: representative is not a degree-0 cycle");
  }
  return null_homotopy(theta).has_value();
}

// ---- kernels, quotients, pushouts, pullbacks -----------------------------------

KernelData degreewise_kernel(const ChainMap& f) {
  if (f.degree() != 0) throw Error("kernel: map must have degree 0");
  const ChainComplex& x = f.source();
  std::map<int, Matrix> basis;
  std::map<int, Matrix> left_inv;
  std::map<int, std::size_t> ranks;
  for (int n : x.support()) {
    const SnfDecomposition d = snf(f.component(n));
    const std::size_t k = x.rank(n) - d.rank;
    basis.emplace(n, d.v.block(0, d.rank, x.rank(n), k));
    left_inv.emplace(n, d.v_inverse.block(d.rank, 0, k, x.rank(n)));
    ranks[n] = k;
  }
  auto basis_at = [&](int n) {
    auto it = basis.find(n);
    return it == basis.end() ? Matrix(x.ring(), 0, 0) : it->second;
  };
  auto left_at = [&](int n) {
    auto it = left_inv.find(n);
    return it == left_inv.end() ? Matrix(x.ring(), 0, 0) : it->second;
  };
  std::map<int, Matrix> ds;
  for (int n : x.support()) {
    if (ranks[n] == 0 || !ranks.count(n - 1) || ranks[n - 1] == 0) continue;
    ds.emplace(n, left_at(n - 1) * x.differential(n) * basis_at(n));
  }
  ChainComplex kernel(x.ring(), ranks, std::move(ds));
  ChainMap inclusion(kernel, x);
  for (int n : kernel.support()) inclusion.set_component(n, basis_at(n));
  std::map<int, Matrix> left;
  for (int n : kernel.support()) left.emplace(n, left_at(n));
  return KernelData{std::move(kernel), std::move(inclusion), std::move(left)};
}

std::optional<QuotientData> degreewise_quotient(const ChainMap& i) {
  if (i.degree() != 0) throw Error("quotient: map must have degree 0");
  const ChainComplex& a = i.source();
  const ChainComplex& b = i.target();
  const Ring& ring = b.ring();
  for (int n : a.support()) {
    if (b.rank(n) == 0) return std::nullopt;
  }
  std::map<int, Matrix> projection;
  std::map<int, Matrix> section;
  std::map<int, Matrix> retraction;
  std::map<int, std::size_t> ranks;
  for (int n : b.support()) {
    const std::size_t m = b.rank(n);
    const std::size_t r = a.rank(n);
    const SnfDecomposition d = snf(i.component(n));
    if (d.rank != r) return std::nullopt;
    Matrix pivots_inv(ring, r, r);
    for (std::size_t k = 0; k < r; ++k) {
      if (!ring.is_unit(d.s.at(k, k))) return std::nullopt;
      pivots_inv.set(k, k, ring.inverse(d.s.at(k, k)));
    }
    projection.emplace(n, d.u.block(r, 0, m - r, m));
    section.emplace(n, d.u_inverse.block(0, r, m, m - r));
    retraction.emplace(n, d.v * pivots_inv * d.u.block(0, 0, r, m));
    ranks[n] = m - r;
  }
  std::map<int, Matrix> ds;
  for (int n : b.support()) {
    if (ranks[n] == 0 || !ranks.count(n - 1) || ranks[n - 1] == 0) continue;
    ds.emplace(n, projection.at(n - 1) * b.differential(n) * section.at(n));
  }
  ChainComplex quotient(ring, ranks, std::move(ds));
  ChainMap proj(b, quotient);
  for (int n : quotient.support()) proj.set_component(n, projection.at(n));
  // Drop splitting data in degrees where the quotient vanishes.
  std::map<int, Matrix> sec;
  for (int n : quotient.support()) sec.emplace(n, section.at(n));
  std::map<int, Matrix> ret;
  for (int n : a.support()) ret.emplace(n, retraction.at(n));
  return QuotientData{std::move(quotient), std::move(proj), std::move(sec), std::move(ret)};
}

PushoutData degreewise_pushout(const ChainMap& i, const ChainMap& g) {
  if (!(i.source() == g.source())) throw Error("pushout: maps do not share a source");
  if (g.degree() != 0) throw Error("pushout: maps must have degree 0");
  auto quotient = degreewise_quotient(i);
  if (!quotient) throw Error("pushout: first leg is not degreewise split with free cokernel");
  const ChainComplex& a2 = g.target();
  const ChainComplex& c = quotient->quotient;
  const ChainComplex& b = i.target();
  const Ring& ring = b.ring();

  std::map<int, std::size_t> ranks;
  for (int n : a2.support()) ranks[n] += a2.rank(n);
  for (int n : c.support()) ranks[n] += c.rank(n);
  auto sec = [&](int n) {
    auto it = quotient->section.find(n);
    return it == quotient->section.end() ? Matrix(ring, b.rank(n), 0) : it->second;
  };
  auto ret = [&](int n) {
    auto it = quotient->retraction.find(n);
    return it == quotient->retraction.end() ? Matrix(ring, 0, b.rank(n)) : it->second;
  };
  std::map<int, Matrix> ds;
  for (const auto& [n, r] : ranks) {
    Matrix d(ring, a2.rank(n - 1) + c.rank(n - 1), a2.rank(n) + c.rank(n));
    d.place(0, 0, a2.differential(n));
    // twisting term g∘r∘d_B∘section : C_n -> A'_{n-1}
    d.place(0, a2.rank(n), g.component(n - 1) * ret(n - 1) * b.differential(n) * sec(n));
    d.place(a2.rank(n - 1), a2.rank(n), c.differential(n));
    ds.emplace(n, std::move(d));
  }
  ChainComplex pushout(ring, ranks, std::move(ds));

  ChainMap from_source(a2, pushout);
  for (int n : a2.support()) {
    from_source.set_component(
        n, Matrix::vstack(Matrix::identity(ring, a2.rank(n)), Matrix(ring, c.rank(n), a2.rank(n))));
  }
  ChainMap from_target(b, pushout);
  for (int n : b.support()) {
    from_target.set_component(
        n, Matrix::vstack(g.component(n) * ret(n), quotient->projection.component(n)));
  }
  return PushoutData{std::move(pushout), std::move(from_source), std::move(from_target),
                     std::move(*quotient)};
}

PullbackData degreewise_pullback(const ChainMap& p, const ChainMap& g) {
  if (!(p.target() == g.target())) throw Error("pullback: maps do not share a target");
  if (p.degree() != 0 || g.degree() != 0) throw Error("pullback: maps must have degree 0");
  const ChainComplex& x = p.source();
  const ChainComplex& b = g.source();
  const ChainMap difference =
      subtract(compose(p, sum_projection_first(x, b)), compose(g, sum_projection_second(x, b)));
  KernelData k = degreewise_kernel(difference);
  ChainMap to_source = compose(sum_projection_first(x, b), k.inclusion);
  ChainMap to_other = compose(sum_projection_second(x, b), k.inclusion);
  return PullbackData{std::move(k.kernel), std::move(to_source), std::move(to_other)};
}

}  // namespace obstruct
