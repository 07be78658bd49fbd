#include "obstruct/obstruction.hpp"

namespace obstruct {

namespace {

Matrix at_or_empty(const std::map<int, Matrix>& m, int n, const Ring& ring, std::size_t rows,
                   std::size_t cols) {
  auto it = m.find(n);
  return it == m.end() ? Matrix(ring, rows, cols) : it->second;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

}  // namespace

void check_square(const LiftingSquare& sq) {
  require(is_cofibration(sq.i), "square: i is not a cofibration");
  require(is_fibration(sq.p), "square: p is not a fibration");
  require(sq.top.degree() == 0 && is_chain_map(sq.top), "square: top is not a strict chain map");
  require(sq.bottom.degree() == 0 && is_chain_map(sq.bottom),
          "square: bottom is not a strict chain map");
  require(sq.top.source() == sq.i.source() && sq.top.target() == sq.p.source(),
          "square: top must map source(i) to source(p)");
  require(sq.bottom.source() == sq.i.target() && sq.bottom.target() == sq.p.target(),
          "square: bottom must map target(i) to target(p)");
  require(compose(sq.bottom, sq.i) == compose(sq.p, sq.top), "square: bottom∘i != p∘top");
}

bool is_lift(const LiftingSquare& sq, const ChainMap& ell) {
  if (ell.degree() != 0 || !(ell.source() == sq.i.target()) || !(ell.target() == sq.p.source())) {
    return false;
  }
  return is_chain_map(ell) && compose(ell, sq.i) == sq.top && compose(sq.p, ell) == sq.bottom;
}

LiftingSquare shift(const LiftingSquare& sq, int k) {
  return LiftingSquare{shift(sq.i, k), shift(sq.p, k), shift(sq.top, k), shift(sq.bottom, k)};
}

ChainMap degreewise_lift(const LiftingSquare& sq) {
  check_square(sq);
  const CofibrationSplitting split = cofibre(sq.i);
  const ChainComplex& b = sq.i.target();
  const ChainComplex& x = sq.p.source();
  ChainMap sigma(b, x);
  for (int n : sigma.active_degrees()) {
    const Matrix target = sq.bottom.component(n) * split.section(n);
    auto lambda = solve_matrix(sq.p.component(n), target);
    require(lambda.has_value(), "degreewise_lift: p is not surjective");
    sigma.set_component(n, sq.top.component(n) * split.retraction(n) +
                               *lambda * split.projection().component(n));
  }
  return sigma;
}

ObstructionClass obstruction_with_lift(const LiftingSquare& sq, const ChainMap& sigma) {
  check_square(sq);
  require(sigma.degree() == 0 && sigma.source() == sq.i.target() && sigma.target() == sq.p.source(),
          "obstruction: sigma must be a degree-0 graded map B -> X");
  require(compose(sigma, sq.i) == sq.top, "obstruction: sigma∘i != top");
  require(compose(sq.p, sigma) == sq.bottom, "obstruction: p∘sigma != bottom");

  const CofibrationSplitting split = cofibre(sq.i);
  const FibreData fib = fibre(sq.p);
  const ChainComplex& b = sq.i.target();
  const ChainComplex& x = sq.p.source();
  const Ring& ring = b.ring();
  const ChainComplex w = shift(split.cofibre(), -1);

  // Defect D = d σ - σ d vanishes on i(A) and lands in F, so
  // D = incl∘θ'∘q with θ' : C_n -> F_{n-1}. Then θ_n = θ'_{n+1} on W_n = C_{n+1}.
  ChainMap theta(w, fib.fibre);
  for (int n : theta.active_degrees()) {
    const int m = n + 1;
    const Matrix defect = x.differential(m) * sigma.component(m) - sigma.component(m - 1) * b.differential(m);
    const Matrix on_cofibre = defect * split.section(m);
    const Matrix left = at_or_empty(fib.retraction, n, ring, fib.fibre.rank(n), x.rank(n));
    Matrix component = left * on_cofibre;
    require(fib.inclusion.component(n) * component == on_cofibre,
            "obstruction: defect does not land in the fibre");
    theta.set_component(n, std::move(component));
  }
  return ObstructionClass{w, fib.fibre, std::move(theta),
                          ObstructionProvenance{sigma, split.projection(), fib.inclusion}};
}

ObstructionClass obstruction(const LiftingSquare& sq) {
  return obstruction_with_lift(sq, degreewise_lift(sq));
}

std::optional<ChainMap> obstruction_null_homotopy(const ObstructionClass& alpha) {
  return null_homotopy(alpha.theta);
}

bool obstruction_vanishes(const ObstructionClass& alpha) {
  return homotopy_class_is_zero(alpha.theta);
}

Lift extract_lift(const LiftingSquare& sq, const ObstructionClass& alpha, const ChainMap& h) {
  require(alpha.provenance.has_value(), "extract_lift: class carries no degreewise lift");
  require(h.degree() == 1 && h.source() == alpha.w && h.target() == alpha.f,
          "extract_lift: h must be a degree-1 map W -> F");
  const HomComplex hom(alpha.w, alpha.f);
  require(hom.boundary(h) == alpha.theta, "extract_lift: theta != d h + h d");
  const ObstructionProvenance& prov = *alpha.provenance;

  // ℓ_n = σ_n - incl_n h_{n-1} q_n   (q_n : B_n -> C_n = W_{n-1})
  ChainMap ell(sq.i.target(), sq.p.source());
  for (int n : ell.active_degrees()) {
    ell.set_component(n, prov.sigma.component(n) - prov.fibre_inclusion.component(n) *
                                                       h.component(n - 1) *
                                                       prov.cofibre_projection.component(n));
  }
  require(is_lift(sq, ell), "extract_lift: reconstructed map is not a lift");
  return Lift{std::move(ell)};
}

std::optional<Lift> lift_via_obstruction(const LiftingSquare& sq) {
  const ObstructionClass alpha = obstruction(sq);
  auto h = obstruction_null_homotopy(alpha);
  if (!h) return std::nullopt;
  return extract_lift(sq, alpha, *h);
}

ObstructionClass pushforward(const ObstructionClass& alpha, const ChainMap& phi) {
  require(phi.degree() == 0 && phi.source() == alpha.f, "pushforward: phi must start at the fibre");
  return ObstructionClass{alpha.w, phi.target(), compose(phi, alpha.theta), std::nullopt};
}

bool differ_by_boundary(const ChainMap& theta_a, const ChainMap& theta_b) {
  return homotopy_class_is_zero(subtract(theta_a, theta_b));
}

ChainMap induced_fibre_map(const FibrationMap& m) {
  require(compose(m.p_prime, m.upper) == compose(m.lower, m.p),
          "fibration map: square p -> p' does not commute");
  const FibreData f = fibre(m.p);
  const FibreData f2 = fibre(m.p_prime);
  ChainMap phi(f.fibre, f2.fibre);
  for (int n : phi.active_degrees()) {
    phi.set_component(n, f2.retraction.at(n) * m.upper.component(n) * f.inclusion.component(n));
  }
  return phi;
}

LiftingSquare compose_square(const LiftingSquare& sq, const FibrationMap& m) {
  require(sq.p == m.p, "compose_square: fibration mismatch");
  return LiftingSquare{sq.i, m.p_prime, compose(m.upper, sq.top), compose(m.lower, sq.bottom)};
}

// ---- cobase change --------------------------------------------------------------

CobaseChange cobase_change(const ChainMap& i, const ChainMap& attach) {
  require(is_cofibration(i), "cobase_change: i is not a cofibration");
  require(attach.degree() == 0 && is_chain_map(attach) && attach.source() == i.source(),
          "cobase_change: attach must be a strict chain map out of source(i)");
  PushoutData po = degreewise_pushout(i, attach);
  const CofibrationSplitting split_prime = cofibre(po.from_source);
  ChainMap ident(po.quotient.quotient, split_prime.cofibre());
  for (int n : ident.active_degrees()) {
    ident.set_component(n, split_prime.projection().component(n) * po.from_target.component(n) *
                               at_or_empty(po.quotient.section, n, i.ring(), i.target().rank(n), 0));
  }
  return CobaseChange{i, attach, std::move(po.from_source), std::move(po.from_target),
                      std::move(ident)};
}

LiftingSquare CobaseChange::composite_square(const LiftingSquare& sq_prime) const {
  require(sq_prime.i == i_prime, "cobase change: square is not over i'");
  return LiftingSquare{i, sq_prime.p, compose(sq_prime.top, attach),
                       compose(sq_prime.bottom, pushout_map)};
}

ObstructionClass CobaseChange::transported_obstruction(const LiftingSquare& sq_prime) const {
  return obstruction(composite_square(sq_prime));
}

ChainMap CobaseChange::pull_back_theta(const ChainMap& theta_prime) const {
  return compose(theta_prime, shift(cofibre_identification, -1));
}

Lift CobaseChange::lift_from_composite(const LiftingSquare& sq_prime, const Lift& composite) const {
  // B' = A' (+) C degreewise; ℓ' = (top', ℓ∘section).
  const CofibrationSplitting split = cofibre(i);
  ChainMap ell(i_prime.target(), sq_prime.p.source());
  for (int n : ell.active_degrees()) {
    ell.set_component(n, Matrix::hstack(sq_prime.top.component(n),
                                        composite.ell.component(n) * split.section(n)));
  }
  require(is_lift(sq_prime, ell), "cobase change: induced map is not a lift");
  return Lift{std::move(ell)};
}

// ---- retracts ---------------------------------------------------------------------

RetractTransport::RetractTransport(RetractData data) : data_(std::move(data)) {
  const RetractData& d = data_;
  for (const ChainMap* m : {&d.section_source, &d.section_target, &d.retraction_source,
                            &d.retraction_target}) {
    require(m->degree() == 0 && is_chain_map(*m), "retract: structure maps must be chain maps");
  }
  require(is_cofibration(d.i), "retract: i is not a cofibration");
  require(compose(d.retraction_source, d.section_source) == identity_map(d.i_prime.source()),
          "retract: ra∘sa != 1");
  require(compose(d.retraction_target, d.section_target) == identity_map(d.i_prime.target()),
          "retract: rb∘sb != 1");
  require(compose(d.i, d.section_source) == compose(d.section_target, d.i_prime),
          "retract: i∘sa != sb∘i'");
  require(compose(d.i_prime, d.retraction_source) == compose(d.retraction_target, d.i),
          "retract: i'∘ra != rb∘i");
}

LiftingSquare RetractTransport::composite_square(const LiftingSquare& sq_prime) const {
  require(sq_prime.i == data_.i_prime, "retract: square is not over i'");
  return LiftingSquare{data_.i, sq_prime.p, compose(sq_prime.top, data_.retraction_source),
                       compose(sq_prime.bottom, data_.retraction_target)};
}

ObstructionClass RetractTransport::transported_obstruction(const LiftingSquare& sq_prime) const {
  return obstruction(composite_square(sq_prime));
}

Lift RetractTransport::lift_from_composite(const Lift& composite_lift) const {
  return Lift{compose(composite_lift.ell, data_.section_target)};
}

// ---- weak equivalences ------------------------------------------------------------

WeakEquivalenceTransport::WeakEquivalenceTransport(CofibrationEquivalence data)
    : data_(std::move(data)) {
  const CofibrationEquivalence& d = data_;
  require(is_cofibration(d.i) && is_cofibration(d.i_prime),
          "weak equivalence transport: both arrows must be cofibrations");
  require(is_weak_equivalence(d.on_source), "weak equivalence transport: source leg is not a weak equivalence");
  require(is_weak_equivalence(d.on_target), "weak equivalence transport: target leg is not a weak equivalence");
  require(compose(d.on_target, d.i) == compose(d.i_prime, d.on_source),
          "weak equivalence transport: square i -> i' does not commute");
}

LiftingSquare WeakEquivalenceTransport::composite_square(const LiftingSquare& sq_prime) const {
  require(sq_prime.i == data_.i_prime, "weak equivalence transport: square is not over i'");
  return LiftingSquare{data_.i, sq_prime.p, compose(sq_prime.top, data_.on_source),
                       compose(sq_prime.bottom, data_.on_target)};
}

ObstructionClass WeakEquivalenceTransport::transported_obstruction(
    const LiftingSquare& sq_prime) const {
  return obstruction(composite_square(sq_prime));
}

// ---- rigid theory -------------------------------------------------------------------

RigidTheory rigid_theory(const ChainMap& i) {
  const CofibrationSplitting split = cofibre(i);
  const ChainComplex& b = i.target();
  const ChainComplex& c = split.cofibre();
  ChainComplex w = shift(c, -1);
  HomotopyFibre hf = hofib(i);
  ChainMap map(w, hf.complex);
  for (int n : map.active_degrees()) {
    const int m = n + 1;
    // i∘κ = d s - s d on C_{m}, and r∘i = 1 recovers κ.
    const Matrix defect = b.differential(m) * split.section(m) - split.section(m - 1) * c.differential(m);
    const Matrix kappa = split.retraction(n) * defect;
    map.set_component(n, Matrix::vstack(kappa, split.section(m)));
  }
  return RigidTheory{i, std::move(w), std::move(hf), std::move(map)};
}

ChainMap rigid_obstruction(const RigidTheory& theory, const LiftingSquare& sq) {
  require(sq.i == theory.i, "rigid_obstruction: square is not over the theory's cofibration");
  return compose(hofib_map(sq.i, sq.p, sq.top, sq.bottom), theory.a);
}

bool rigid_obstruction_vanishes(const RigidTheory& theory, const LiftingSquare& sq) {
  return null_homotopy(rigid_obstruction(theory, sq)).has_value();
}

// ---- square space ---------------------------------------------------------------------

std::vector<LiftingSquare> square_space_basis(const ChainMap& i, const ChainMap& p) {
  require(is_cofibration(i), "square_space_basis: i is not a cofibration");
  require(is_fibration(p), "square_space_basis: p is not a fibration");
  const ChainComplex& a = i.source();
  const ChainComplex& b = i.target();
  const ChainComplex& x = p.source();
  const ChainComplex& y = p.target();
  const HomComplex ax(a, x);
  const HomComplex by(b, y);
  const HomComplex ay(a, y);
  const Ring& ring = a.ring();

  const Matrix d_ax = ax.complex().differential(0);
  const Matrix d_by = by.complex().differential(0);
  const std::size_t n_top = ax.complex().rank(0);
  const std::size_t n_bottom = by.complex().rank(0);
  const std::size_t n_commute = ay.complex().rank(0);

  Matrix system(ring, d_ax.rows() + d_by.rows() + n_commute, n_top + n_bottom);
  system.place(0, 0, d_ax);
  system.place(d_ax.rows(), n_top, d_by);
  const std::size_t base = d_ax.rows() + d_by.rows();
  for (std::size_t k = 0; k < n_top; ++k) {
    std::vector<Scalar> e(n_top);
    e[k] = 1;
    const auto col = ay.encode(negate(compose(p, ax.decode(0, e))));
    for (std::size_t r = 0; r < col.size(); ++r) system.set(base + r, k, col[r]);
  }
  for (std::size_t k = 0; k < n_bottom; ++k) {
    std::vector<Scalar> e(n_bottom);
    e[k] = 1;
    const auto col = ay.encode(compose(by.decode(0, e), i));
    for (std::size_t r = 0; r < col.size(); ++r) system.set(base + r, n_top + k, col[r]);
  }

  const Matrix kernel = kernel_basis(system);
  std::vector<LiftingSquare> out;
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    const auto v = kernel.column_entries(c);
    std::vector<Scalar> top(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n_top));
    std::vector<Scalar> bottom(v.begin() + static_cast<std::ptrdiff_t>(n_top), v.end());
    out.push_back(LiftingSquare{i, p, ax.decode(0, top), by.decode(0, bottom)});
  }
  return out;
}

}  // namespace obstruct
