#include "obstruct/random.hpp"

#include <algorithm>

namespace obstruct {

InstanceGenerator::InstanceGenerator(Ring ring, std::uint64_t seed, GeneratorOptions options)
    : ring_(std::move(ring)), engine_(seed), options_(options) {}

long InstanceGenerator::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

bool InstanceGenerator::coin(double p_true) { return std::bernoulli_distribution(p_true)(engine_); }

Scalar InstanceGenerator::scalar() {
  const long m = options_.max_entry;
  if (ring_.kind() == RingKind::Rationals && coin(0.25)) {
    Scalar q(uniform(-m, m), uniform(1, 3));
    q.canonicalize();
    return q;
  }
  return ring_.normalize(Scalar(uniform(-m, m)));
}

Matrix InstanceGenerator::matrix(std::size_t rows, std::size_t cols) {
  Matrix m(ring_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar());
  return m;
}

ChainComplex InstanceGenerator::complex(std::size_t max_rank) {
  const int lo = static_cast<int>(uniform(options_.min_degree, options_.max_degree));
  const int hi = std::min(options_.max_degree, lo + static_cast<int>(uniform(0, 2)));
  return complex_in(lo, hi, max_rank);
}

ChainComplex InstanceGenerator::complex_in(int lo, int hi, std::size_t max_rank) {
  if (max_rank == 0 || hi < lo) return ChainComplex(ring_);
  std::map<int, std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks[n] = static_cast<std::size_t>(uniform(1, static_cast<long>(max_rank)));
  // Columns of d_n are random combinations of a kernel basis of d_{n-1}.
  std::map<int, Matrix> ds;
  Matrix previous = Matrix(ring_, 0, ranks[lo]);
  for (int n = lo + 1; n <= hi; ++n) {
    const Matrix kernel = kernel_basis(previous);
    Matrix coeffs(ring_, kernel.cols(), ranks[n]);
    // Zero columns leave cycles behind, so homology survives often.
    for (std::size_t c = 0; c < coeffs.cols(); ++c) {
      if (coin(0.4)) continue;
      for (std::size_t r = 0; r < coeffs.rows(); ++r) coeffs.set(r, c, Scalar(uniform(-2, 2)));
    }
    Matrix d = kernel * coeffs;
    ds.emplace(n, d);
    previous = std::move(d);
  }
  return ChainComplex(ring_, ranks, std::move(ds));
}

ChainComplex InstanceGenerator::contractible(std::size_t max_disks) {
  ChainComplex out(ring_);
  const long count = uniform(1, static_cast<long>(std::max<std::size_t>(1, max_disks)));
  for (long k = 0; k < count; ++k) {
    const int top = static_cast<int>(uniform(options_.min_degree + 1, options_.max_degree));
    ChainComplex d(ring_, {{top, 1}, {top - 1, 1}}, {{top, Matrix(ring_, {{1}})}});
    out = direct_sum(out, d);
  }
  return out;
}

ChainMap InstanceGenerator::chain_map(const ChainComplex& a, const ChainComplex& b) {
  const HomComplex hom(a, b);
  const Matrix cycles = kernel_basis(hom.complex().differential(0));
  std::vector<Scalar> coords(hom.complex().rank(0));
  for (std::size_t c = 0; c < cycles.cols(); ++c) {
    const Scalar coeff = ring_.normalize(Scalar(uniform(-1, 1)));
    if (coeff == 0) continue;
    for (std::size_t r = 0; r < coords.size(); ++r)
      coords[r] = ring_.add(coords[r], ring_.mul(coeff, cycles.at(r, c)));
  }
  return hom.decode(0, coords);
}

ChainMap InstanceGenerator::graded_map(const ChainComplex& a, const ChainComplex& b, int degree) {
  ChainMap f(a, b, degree);
  for (int n : f.active_degrees()) f.set_component(n, matrix(b.rank(n + degree), a.rank(n)));
  return f;
}

InstanceGenerator::Unimodular InstanceGenerator::unimodular(std::size_t n) {
  Matrix forward = Matrix::identity(ring_, n);
  Matrix backward = Matrix::identity(ring_, n);
  if (n < 2) return {forward, backward};
  const long steps = uniform(1, static_cast<long>(n) + 1);
  for (long s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    if (coin(0.3)) {
      forward.swap_rows(i, j);
      backward.swap_cols(i, j);
    } else {
      const Scalar c = ring_.normalize(Scalar(coin() ? 1 : -1));
      // forward <- E forward, backward <- backward E^-1 with E = 1 + c e_ij
      forward.add_row_multiple(i, j, c);
      backward.add_col_multiple(j, i, ring_.neg(c));
    }
  }
  return {forward, backward};
}

InstanceGenerator::Extension InstanceGenerator::extension(const ChainComplex& sub,
                                                          const ChainComplex& quotient) {
  // Twisting cocycle t : C -> A of degree -1 with d t + t d = 0.
  const HomComplex hom(quotient, sub);
  const Matrix cocycles = kernel_basis(hom.complex().differential(-1));
  std::vector<Scalar> coords(hom.complex().rank(-1));
  for (std::size_t c = 0; c < cocycles.cols(); ++c) {
    const Scalar coeff = ring_.normalize(Scalar(uniform(-1, 1)));
    for (std::size_t r = 0; r < coords.size(); ++r)
      coords[r] = ring_.add(coords[r], ring_.mul(coeff, cocycles.at(r, c)));
  }
  const ChainMap twist = hom.decode(-1, coords);

  std::map<int, std::size_t> ranks;
  for (int n : sub.support()) ranks[n] += sub.rank(n);
  for (int n : quotient.support()) ranks[n] += quotient.rank(n);
  std::map<int, Unimodular> basis;
  for (const auto& [n, r] : ranks) basis.emplace(n, unimodular(r));
  auto fwd = [&](int n) {
    auto it = basis.find(n);
    return it == basis.end() ? Matrix(ring_, 0, 0) : it->second.forward;
  };
  auto bwd = [&](int n) {
    auto it = basis.find(n);
    return it == basis.end() ? Matrix(ring_, 0, 0) : it->second.backward;
  };

  std::map<int, Matrix> ds;
  for (const auto& [n, r] : ranks) {
    Matrix d(ring_, sub.rank(n - 1) + quotient.rank(n - 1), sub.rank(n) + quotient.rank(n));
    d.place(0, 0, sub.differential(n));
    d.place(0, sub.rank(n), twist.component(n));
    d.place(sub.rank(n - 1), sub.rank(n), quotient.differential(n));
    ds.emplace(n, fwd(n - 1) * d * bwd(n));
  }
  ChainComplex total(ring_, ranks, std::move(ds));

  ChainMap inclusion(sub, total);
  for (int n : sub.support()) {
    inclusion.set_component(
        n, fwd(n) * Matrix::vstack(Matrix::identity(ring_, sub.rank(n)),
                                   Matrix(ring_, quotient.rank(n), sub.rank(n))));
  }
  ChainMap projection(total, quotient);
  for (int n : quotient.support()) {
    projection.set_component(
        n, Matrix::hstack(Matrix(ring_, quotient.rank(n), sub.rank(n)),
                          Matrix::identity(ring_, quotient.rank(n))) * bwd(n));
  }
  return Extension{std::move(inclusion), std::move(projection)};
}

ChainMap InstanceGenerator::cofibration() {
  const std::size_t r = options_.piece_rank;
  ChainComplex a = coin(0.1) ? ChainComplex(ring_) : complex(r);
  ChainComplex c = coin(0.1) ? ChainComplex(ring_) : complex(r);
  return extension(a, c).inclusion;
}

ChainMap InstanceGenerator::fibration() {
  const std::size_t r = options_.piece_rank;
  ChainComplex f = coin(0.1) ? ChainComplex(ring_) : complex(r);
  ChainComplex y = coin(0.1) ? ChainComplex(ring_) : complex(r);
  return extension(f, y).projection;
}

InstanceGenerator::Pair InstanceGenerator::aligned_pair() {
  const std::size_t r = options_.piece_rank;
  const int m = static_cast<int>(uniform(options_.min_degree + 1, options_.max_degree - 1));
  auto piece = [&](int lo, int hi) {
    if (coin(0.1)) return ChainComplex(ring_);
    const int a = static_cast<int>(uniform(lo, hi));
    const int b = static_cast<int>(uniform(a, hi));
    return complex_in(a, b, r);
  };
  ChainComplex a = piece(m - 1, m + 1);
  ChainComplex c = piece(m, m + 1);
  ChainComplex f = piece(m - 1, m);
  ChainComplex y = piece(m - 1, m + 1);
  ChainMap i = extension(a, c).inclusion;
  ChainMap p = extension(f, y).projection;
  return Pair{std::move(i), std::move(p)};
}

LiftingSquare InstanceGenerator::square_over(const ChainMap& i, const ChainMap& p, bool liftable) {
  if (liftable) {
    const ChainMap ell = chain_map(i.target(), p.source());
    return LiftingSquare{i, p, compose(ell, i), compose(p, ell)};
  }
  const auto basis = square_space_basis(i, p);
  ChainMap top = zero_map(i.source(), p.source());
  ChainMap bottom = zero_map(i.target(), p.target());
  for (const LiftingSquare& sq : basis) {
    const Scalar c = ring_.normalize(Scalar(uniform(-2, 2)));
    if (c == 0) continue;
    top = add(top, scale(sq.top, c));
    bottom = add(bottom, scale(sq.bottom, c));
  }
  return LiftingSquare{i, p, std::move(top), std::move(bottom)};
}

LiftingSquare InstanceGenerator::square() {
  const Pair pair = aligned_pair();
  return square_over(pair.i, pair.p, coin(0.3));
}

}  // namespace obstruct
