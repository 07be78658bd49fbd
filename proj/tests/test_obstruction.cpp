#include "doctest.h"
#include "obstruct/oracle.hpp"
#include "obstruct/random.hpp"
#include "obstruct/simplicial.hpp"

using namespace obstruct;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();

ChainMap disk_to_sphere(const Ring& ring, int n) {
  ChainMap p(disk(ring, n), sphere(ring, n));
  p.set_component(n, Matrix(ring, {{1}}));
  return p;
}

// S0 -> D1 against D1 -> S1 with top = a, bottom = c.
LiftingSquare worked_square(const Ring& ring, long a, long c) {
  const ChainMap i = generating_cofibration(ring, 1);
  const ChainMap p = disk_to_sphere(ring, 1);
  ChainMap top(i.source(), p.source());
  top.set_component(0, Matrix(ring, {{a}}));
  ChainMap bottom(i.target(), p.target());
  bottom.set_component(1, Matrix(ring, {{c}}));
  return LiftingSquare{i, p, top, bottom};
}

}  // namespace

TEST_CASE("worked square: theta is c - a") {
  for (long a = -2; a <= 2; ++a) {
    for (long c = -2; c <= 2; ++c) {
      const LiftingSquare sq = worked_square(Z, a, c);
      const ObstructionClass alpha = obstruction(sq);
      CHECK(alpha.w == sphere(Z, 0));
      CHECK(alpha.f == sphere(Z, 0));
      CHECK(alpha.theta.component(0) == Matrix(Z, {{c - a}}));
      CHECK(obstruction_vanishes(alpha) == (a == c));
      CHECK(brute_lift(sq).lift.has_value() == (a == c));
    }
  }
}

TEST_CASE("worked square: lifts and certificates") {
  const LiftingSquare good = worked_square(Z, 1, 1);
  const auto lift = lift_via_obstruction(good);
  REQUIRE(lift.has_value());
  CHECK(lift->ell == identity_map(disk(Z, 1)));
  const OracleVerdict oracle = brute_lift(good);
  REQUIRE(oracle.lift.has_value());
  CHECK(oracle.lift->ell == identity_map(disk(Z, 1)));

  for (const Ring& ring : {Z, Q}) {
    const OracleVerdict bad = brute_lift(worked_square(ring, 0, 1));
    CHECK(bad.unknowns == 2);
    CHECK_FALSE(bad.lift.has_value());
    REQUIRE(bad.certificate.has_value());
    CHECK(bad.certificate->factor == 0);
    CHECK(bad.certificate->value != 0);
  }
  CHECK_FALSE(lift_via_obstruction(worked_square(Z, 0, 1)).has_value());
}

TEST_CASE("zero square lifts to zero") {
  const ChainMap i = generating_cofibration(Z, 2);
  const ChainMap p = disk_to_sphere(Z, 2);
  const LiftingSquare sq{i, p, zero_map(i.source(), p.source()), zero_map(i.target(), p.target())};
  const auto lift = lift_via_obstruction(sq);
  REQUIRE(lift.has_value());
  CHECK(lift->ell.is_zero());
}

TEST_CASE("squares are validated") {
  const LiftingSquare sq = worked_square(Z, 1, 1);
  CHECK_NOTHROW(check_square(sq));
  LiftingSquare bad_i = sq;
  bad_i.i = scale(identity_map(sphere(Z, 0)), Scalar(2));
  CHECK_THROWS_AS(check_square(bad_i), Error);
  const ChainComplex s0 = sphere(Z, 0);
  const LiftingSquare not_commuting{identity_map(s0), identity_map(s0), identity_map(s0),
                                    scale(identity_map(s0), Scalar(2))};
  CHECK_THROWS_AS(check_square(not_commuting), Error);
  CHECK_THROWS_AS(obstruction_with_lift(sq, zero_map(sq.i.target(), sq.p.source())), Error);
}

TEST_CASE("acyclic fibrations always lift") {
  for (const Ring& ring : {Z, Q, Ring::prime_field(2)}) {
    InstanceGenerator gen(ring, 41);
    for (int k = 0; k < 20; ++k) {
      const ChainMap i = gen.cofibration();
      const ChainComplex y = gen.complex(2);
      const ChainMap p = gen.extension(gen.contractible(2), y).projection;
      REQUIRE(is_acyclic_fibration(p));
      const LiftingSquare sq = gen.square_over(i, p, false);
      CHECK(obstruction_vanishes(obstruction(sq)));
      CHECK(brute_lift(sq).lift.has_value());
    }
  }
}

TEST_CASE("extracted lifts recompose") {
  InstanceGenerator gen(Z, 42);
  int extracted = 0;
  for (int k = 0; k < 60; ++k) {
    const LiftingSquare sq = gen.square();
    const ObstructionClass alpha = obstruction(sq);
    const auto h = obstruction_null_homotopy(alpha);
    if (!h) continue;
    const Lift lift = extract_lift(sq, alpha, *h);
    CHECK(is_lift(sq, lift.ell));
    ++extracted;
  }
  CHECK(extracted > 0);
}

TEST_CASE("pushforward along identity and zero") {
  const ObstructionClass alpha = obstruction(worked_square(Z, 0, 1));
  const ChainComplex& f = alpha.f;
  CHECK(pushforward(alpha, identity_map(f)).theta == alpha.theta);
  CHECK(obstruction_vanishes(pushforward(alpha, zero_map(f, f))));
  CHECK_FALSE(pushforward(alpha, identity_map(f)).provenance.has_value());
}

TEST_CASE("pushforward matches a composite that kills the fibre") {
  // p' : S1 -> S1 after p : D1 -> S1, so fibre(p') = 0 and the class dies.
  const LiftingSquare sq = worked_square(Z, 0, 1);
  const ChainComplex s1 = sphere(Z, 1);
  const FibrationMap m{sq.p, identity_map(s1), sq.p, identity_map(s1)};
  const ObstructionClass pushed = pushforward(obstruction(sq), induced_fibre_map(m));
  const ObstructionClass direct = obstruction(compose_square(sq, m));
  CHECK(differ_by_boundary(pushed.theta, direct.theta));
  CHECK(obstruction_vanishes(direct));
}

TEST_CASE("cobase change examples") {
  const ChainMap i = generating_cofibration(Z, 1);
  SUBCASE("attach = identity") {
    const CobaseChange cc = cobase_change(i, identity_map(i.source()));
    CHECK(compose(cc.pushout_map, i) == cc.i_prime);
    for (int n : cc.pushout_map.active_degrees())
      CHECK(inverse(cc.pushout_map.component(n)).has_value());
    CHECK(cc.i_prime.target().ranks() == i.target().ranks());
  }
  SUBCASE("attach to zero") {
    const CobaseChange cc = cobase_change(i, zero_map(i.source(), zero_complex(Z)));
    CHECK(cc.i_prime.source().is_zero());
    CHECK(cc.i_prime.target() == cofibre(i).cofibre());
  }
  SUBCASE("attach along multiplication by 2") {
    const ChainMap two = scale(identity_map(i.source()), Scalar(2));
    const CobaseChange cc = cobase_change(i, two);
    const ChainComplex& b = cc.i_prime.target();
    CHECK(b.ranks() == std::map<int, std::size_t>{{0, 1}, {1, 1}});
    CHECK(homology(b, 0) == HomologyGroup{{Scalar(2)}, 0});
    CHECK(cofibre(cc.i_prime).cofibre() == sphere(Z, 1));
    CHECK(is_cofibration(cc.i_prime));

    InstanceGenerator gen(Z, 43);
    for (int k = 0; k < 20; ++k) {
      const ChainMap p = gen.fibration();
      const LiftingSquare sq = gen.square_over(cc.i_prime, p, gen.coin());
      const ObstructionClass transported = cc.transported_obstruction(sq);
      CHECK(differ_by_boundary(cc.pull_back_theta(obstruction(sq).theta), transported.theta));
      CHECK(obstruction_vanishes(transported) == brute_lift(sq).lift.has_value());
    }
  }
}

TEST_CASE("retract examples") {
  const ChainMap i = generating_cofibration(Z, 1);
  const LiftingSquare sq = worked_square(Z, 0, 1);
  SUBCASE("identity retract data") {
    RetractTransport rt(RetractData{i, i, identity_map(i.source()), identity_map(i.target()),
                                    identity_map(i.source()), identity_map(i.target())});
    CHECK(rt.transported_obstruction(sq).theta == obstruction(sq).theta);
  }
  SUBCASE("summand of i (+) (0 -> D1)") {
    const ChainMap extra = zero_map(zero_complex(Z), disk(Z, 1));
    const ChainMap big = direct_sum(i, extra);
    RetractTransport rt(RetractData{
        i, big, sum_inclusion_first(i.source(), extra.source()),
        sum_inclusion_first(i.target(), extra.target()),
        sum_projection_first(i.source(), extra.source()),
        sum_projection_first(i.target(), extra.target())});
    for (long a : {0, 1}) {
      const LiftingSquare s = worked_square(Z, a, 1);
      const bool verdict = obstruction_vanishes(rt.transported_obstruction(s));
      CHECK(verdict == brute_lift(s).lift.has_value());
      CHECK(verdict == brute_lift(rt.composite_square(s)).lift.has_value());
    }
  }
  SUBCASE("zero cofibration as a summand") {
    const ChainMap zero_cof = zero_map(zero_complex(Z), zero_complex(Z));
    const ChainMap big = direct_sum(zero_cof, i);
    RetractTransport rt(RetractData{
        zero_cof, big, sum_inclusion_first(zero_cof.source(), i.source()),
        sum_inclusion_first(zero_cof.target(), i.target()),
        sum_projection_first(zero_cof.source(), i.source()),
        sum_projection_first(zero_cof.target(), i.target())});
    const ChainMap p = disk_to_sphere(Z, 1);
    const LiftingSquare s{zero_cof, p, zero_map(zero_cof.source(), p.source()),
                          zero_map(zero_cof.target(), p.target())};
    CHECK(rt.transported_obstruction(s).theta.is_zero());
  }
  SUBCASE("bad retract data") {
    CHECK_THROWS_AS(RetractTransport(RetractData{i, i, identity_map(i.source()), identity_map(i.target()),
                                                 zero_map(i.source(), i.source()), identity_map(i.target())}),
                    Error);
  }
}

TEST_CASE("weak equivalence transport examples") {
  const ChainMap i = generating_cofibration(Z, 1);
  SUBCASE("identity") {
    WeakEquivalenceTransport we(
        CofibrationEquivalence{i, i, identity_map(i.source()), identity_map(i.target())});
    for (long a : {0, 1}) {
      const LiftingSquare s = worked_square(Z, a, 1);
      CHECK(we.transported_obstruction(s).theta == obstruction(s).theta);
    }
  }
  SUBCASE("0 -> D1 against 0 -> 0") {
    const ChainMap j = zero_map(zero_complex(Z), disk(Z, 1));
    const ChainMap j_prime = zero_map(zero_complex(Z), zero_complex(Z));
    WeakEquivalenceTransport we(CofibrationEquivalence{
        j, j_prime, identity_map(zero_complex(Z)), zero_map(disk(Z, 1), zero_complex(Z))});
    InstanceGenerator gen(Z, 44);
    for (int k = 0; k < 10; ++k) {
      const ChainMap p = gen.fibration();
      const LiftingSquare s = gen.square_over(j_prime, p, false);
      CHECK(obstruction_vanishes(we.transported_obstruction(s)));
      CHECK(brute_lift(s).lift.has_value());
      const LiftingSquare direct = gen.square_over(j, p, false);
      CHECK(obstruction_vanishes(obstruction(direct)));
      CHECK(brute_lift(direct).lift.has_value());
    }
  }
  SUBCASE("legs must be weak equivalences") {
    const ChainMap two = scale(identity_map(i.source()), Scalar(2));
    const ChainMap two_b = scale(identity_map(i.target()), Scalar(2));
    CHECK_THROWS_AS(WeakEquivalenceTransport(CofibrationEquivalence{i, i, two, two_b}), Error);
  }
}

TEST_CASE("rigid theory examples") {
  SUBCASE("0 -> B") {
    InstanceGenerator gen(Z, 45);
    for (int k = 0; k < 10; ++k) {
      const ChainComplex b = gen.complex(3);
      const RigidTheory t = rigid_theory(zero_map(zero_complex(Z), b));
      CHECK(t.w == shift(b, -1));
      CHECK(is_acyclic(cone(t.a)));
    }
  }
  SUBCASE("S0 -> D1") {
    const RigidTheory t = rigid_theory(generating_cofibration(Z, 1));
    CHECK(t.w == sphere(Z, 0));
    CHECK(is_weak_equivalence(t.a));
    for (long a : {0, 1}) {
      const LiftingSquare s = worked_square(Z, a, 1);
      CHECK(rigid_obstruction_vanishes(t, s) == (a == 1));
    }
  }
  SUBCASE("identity") {
    const ChainComplex d = disk(Z, 2);
    const RigidTheory t = rigid_theory(identity_map(d));
    CHECK(t.w.is_zero());
    CHECK(t.a.is_zero());
    CHECK(is_acyclic(t.hofib_i.complex));
  }
}

TEST_CASE("square module basis") {
  InstanceGenerator gen(Q, 46);
  for (int k = 0; k < 10; ++k) {
    const auto [i, p] = gen.aligned_pair();
    for (const LiftingSquare& sq : square_space_basis(i, p)) CHECK_NOTHROW(check_square(sq));
  }
  const auto basis = square_space_basis(generating_cofibration(Z, 1), disk_to_sphere(Z, 1));
  CHECK(basis.size() == 2);
}

TEST_CASE("oracle detects random boundaries") {
  InstanceGenerator gen(Z, 47);
  for (int k = 0; k < 20; ++k) {
    const ChainComplex w = gen.complex(2);
    const ChainComplex f = gen.complex(2);
    CHECK(brute_homotopy_zero(zero_map(w, f)));
    CHECK(brute_homotopy_zero(HomComplex(w, f).boundary(gen.graded_map(w, f, 1))));
  }
  CHECK_FALSE(brute_homotopy_zero(identity_map(sphere(Z, 0))));
}
