#include "obstruct/model.hpp"

namespace obstruct {

Matrix CofibrationSplitting::section(int n) const {
  auto it = quotient.section.find(n);
  if (it != quotient.section.end()) return it->second;
  return Matrix(i.ring(), i.target().rank(n), 0);
}

Matrix CofibrationSplitting::retraction(int n) const {
  auto it = quotient.retraction.find(n);
  if (it != quotient.retraction.end()) return it->second;
  return Matrix(i.ring(), 0, i.target().rank(n));
}

std::optional<CofibrationSplitting> split_cofibration(const ChainMap& i) {
  if (i.degree() != 0 || !is_chain_map(i)) return std::nullopt;
  auto q = degreewise_quotient(i);
  if (!q) return std::nullopt;
  return CofibrationSplitting{i, std::move(*q)};
}

bool is_cofibration(const ChainMap& f) { return split_cofibration(f).has_value(); }

bool is_fibration(const ChainMap& f) {
  if (f.degree() != 0 || !is_chain_map(f)) return false;
  for (int n : f.target().support()) {
    if (!is_surjective(f.component(n))) return false;
  }
  return true;
}

bool is_weak_equivalence(const ChainMap& f) {
  if (f.degree() != 0 || !is_chain_map(f)) return false;
  return is_acyclic(cone(f));
}

bool is_acyclic_cofibration(const ChainMap& f) {
  return is_cofibration(f) && is_weak_equivalence(f);
}

bool is_acyclic_fibration(const ChainMap& f) { return is_fibration(f) && is_weak_equivalence(f); }

namespace {

void require_strict(const ChainMap& f, const char* where) {
  if (f.degree() != 0 || !is_chain_map(f)) {
    throw Error(std::string(where) + ": expected a strict chain map of degree 0");
  }
}

}  // namespace

Factorization factor_acyclic_cof_then_fib(const ChainMap& f) {
  require_strict(f, "factor_acyclic_cof_then_fib");
  const ChainComplex& x = f.source();
  const ChainComplex& y = f.target();
  const Ring& ring = x.ring();
  std::map<int, std::size_t> ranks;
  for (int n : x.support()) ranks[n] += x.rank(n);
  for (int n : y.support()) {
    ranks[n] += y.rank(n);
    ranks[n - 1] += y.rank(n);
  }
  auto dim = [&](int n) { return x.rank(n) + y.rank(n) + y.rank(n + 1); };
  std::map<int, Matrix> ds;
  for (const auto& [n, r] : ranks) {
    // cols: X_n, Y_n, Y_{n+1}; rows: X_{n-1}, Y_{n-1}, Y_n
    Matrix d(ring, dim(n - 1), dim(n));
    const std::size_t rx = x.rank(n - 1);
    const std::size_t ry = y.rank(n - 1);
    const std::size_t cx = x.rank(n);
    const std::size_t cy = y.rank(n);
    d.place(0, 0, x.differential(n));
    d.place(rx, cx, y.differential(n));
    d.place(rx + ry, 0, f.component(n));
    d.place(rx + ry, cx, -Matrix::identity(ring, y.rank(n)));
    d.place(rx + ry, cx + cy, -y.differential(n + 1));
    ds.emplace(n, std::move(d));
  }
  ChainComplex middle(ring, ranks, std::move(ds));

  ChainMap first(x, middle);
  for (int n : x.support()) {
    Matrix m(ring, dim(n), x.rank(n));
    m.place(0, 0, Matrix::identity(ring, x.rank(n)));
    m.place(x.rank(n), 0, f.component(n));
    first.set_component(n, std::move(m));
  }
  ChainMap second(middle, y);
  for (int n : y.support()) {
    Matrix m(ring, y.rank(n), dim(n));
    m.place(0, x.rank(n), Matrix::identity(ring, y.rank(n)));
    second.set_component(n, std::move(m));
  }
  return Factorization{FactorizationKind::AcyclicCofibrationThenFibration, std::move(middle),
                       std::move(first), std::move(second)};
}

Factorization factor_cof_then_acyclic_fib(const ChainMap& f) {
  require_strict(f, "factor_cof_then_acyclic_fib");
  const ChainComplex& x = f.source();
  const ChainComplex& y = f.target();
  const Ring& ring = x.ring();
  std::map<int, std::size_t> ranks;
  for (int n : x.support()) {
    ranks[n] += x.rank(n);
    ranks[n + 1] += x.rank(n);
  }
  for (int n : y.support()) ranks[n] += y.rank(n);
  auto dim = [&](int n) { return x.rank(n) + x.rank(n - 1) + y.rank(n); };
  std::map<int, Matrix> ds;
  for (const auto& [n, r] : ranks) {
    // cols: X_n, X_{n-1}, Y_n; rows: X_{n-1}, X_{n-2}, Y_{n-1}
    Matrix d(ring, dim(n - 1), dim(n));
    const std::size_t r0 = x.rank(n - 1);
    const std::size_t r1 = x.rank(n - 2);
    const std::size_t c0 = x.rank(n);
    const std::size_t c1 = x.rank(n - 1);
    d.place(0, 0, x.differential(n));
    d.place(0, c0, -Matrix::identity(ring, c1));
    d.place(r0, c0, -x.differential(n - 1));
    d.place(r0 + r1, c0, f.component(n - 1));
    d.place(r0 + r1, c0 + c1, y.differential(n));
    ds.emplace(n, std::move(d));
  }
  ChainComplex middle(ring, ranks, std::move(ds));

  ChainMap first(x, middle);
  for (int n : x.support()) {
    Matrix m(ring, dim(n), x.rank(n));
    m.place(0, 0, Matrix::identity(ring, x.rank(n)));
    first.set_component(n, std::move(m));
  }
  ChainMap second(middle, y);
  for (int n : y.support()) {
    Matrix m(ring, y.rank(n), dim(n));
    m.place(0, 0, f.component(n));
    m.place(0, x.rank(n) + x.rank(n - 1), Matrix::identity(ring, y.rank(n)));
    second.set_component(n, std::move(m));
  }
  return Factorization{FactorizationKind::CofibrationThenAcyclicFibration, std::move(middle),
                       std::move(first), std::move(second)};
}

FibreData fibre(const ChainMap& p) {
  if (!is_fibration(p)) throw Error("fibre: map is not a fibration");
  KernelData k = degreewise_kernel(p);
  return FibreData{std::move(k.kernel), std::move(k.inclusion), std::move(k.left_inverse)};
}

CofibrationSplitting cofibre(const ChainMap& i) {
  auto s = split_cofibration(i);
  if (!s) throw Error("cofibre: map is not a cofibration");
  return std::move(*s);
}

HomotopyFibre hofib(const ChainMap& f) {
  require_strict(f, "hofib");
  const ChainComplex& x = f.source();
  const ChainComplex& y = f.target();
  const Ring& ring = x.ring();
  std::map<int, std::size_t> ranks;
  for (int n : x.support()) ranks[n] += x.rank(n);
  for (int n : y.support()) ranks[n - 1] += y.rank(n);
  auto dim = [&](int n) { return x.rank(n) + y.rank(n + 1); };
  std::map<int, Matrix> ds;
  for (const auto& [n, r] : ranks) {
    // cols: X_n, Y_{n+1}; rows: X_{n-1}, Y_n
    Matrix d(ring, dim(n - 1), dim(n));
    d.place(0, 0, x.differential(n));
    d.place(x.rank(n - 1), 0, f.component(n));
    d.place(x.rank(n - 1), x.rank(n), -y.differential(n + 1));
    ds.emplace(n, std::move(d));
  }
  ChainComplex complex(ring, ranks, std::move(ds));

  const Factorization fac = factor_acyclic_cof_then_fib(f);
  ChainMap inclusion(complex, fac.middle);
  for (int n : complex.support()) {
    Matrix m(ring, x.rank(n) + y.rank(n) + y.rank(n + 1), dim(n));
    m.place(0, 0, Matrix::identity(ring, x.rank(n)));
    m.place(x.rank(n) + y.rank(n), x.rank(n), Matrix::identity(ring, y.rank(n + 1)));
    inclusion.set_component(n, std::move(m));
  }
  return HomotopyFibre{std::move(complex), std::move(inclusion)};
}

ChainMap hofib_map(const ChainMap& f, const ChainMap& g, const ChainMap& top,
                   const ChainMap& bottom) {
  if (!(compose(g, top) == compose(bottom, f))) {
    throw Error("hofib_map: square does not commute");
  }
  const ChainComplex source = hofib(f).complex;
  const ChainComplex target = hofib(g).complex;
  ChainMap out(source, target);
  for (int n : out.active_degrees()) {
    out.set_component(n, Matrix::block_diagonal(top.component(n), bottom.component(n + 1)));
  }
  return out;
}

ChainMap fibre_to_hofib(const ChainMap& p) {
  const FibreData fib = fibre(p);
  const ChainComplex target = hofib(p).complex;
  ChainMap out(fib.fibre, target);
  for (int n : out.active_degrees()) {
    out.set_component(n, Matrix::vstack(fib.inclusion.component(n),
                                         Matrix(p.ring(), p.target().rank(n + 1), fib.fibre.rank(n))));
  }
  return out;
}

ChainMap suspend_map(const ChainMap& i) {
  if (!is_cofibration(i)) throw Error("suspend_map: map is not a cofibration");
  return shift(i, 1);
}

}  // namespace obstruct
