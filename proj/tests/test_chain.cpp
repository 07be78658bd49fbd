#include "doctest.h"
#include "obstruct/oracle.hpp"
#include "obstruct/random.hpp"
#include "obstruct/simplicial.hpp"

using namespace obstruct;

namespace {

const Ring Z = Ring::integers();

ChainMap multiplication(const ChainComplex& c, long factor) {
  return scale(identity_map(c), Scalar(factor));
}

HomologyGroup free_group(std::size_t r) { return HomologyGroup{{}, r}; }

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(sphere(Z, 0)));
  CHECK(validate(disk(Z, 1)));
  const ChainComplex bad(Z, {{2, 1}, {1, 1}, {0, 1}},
                         {{2, Matrix(Z, {{1}})}, {1, Matrix(Z, {{1}})}});
  CHECK_FALSE(validate(bad));
  CHECK(first_nonzero_square(bad) == 2);
  CHECK_THROWS_AS(ChainComplex(Z, {{1, 2}, {0, 1}}, {{1, Matrix(Z, {{1}})}}), Error);
}

TEST_CASE("shift") {
  CHECK(shift(sphere(Z, 0), 1) == sphere(Z, 1));
  const ChainComplex d = shift(disk(Z, 1), 1);
  CHECK(d.rank(2) == 1);
  CHECK(d.rank(1) == 1);
  CHECK(d.differential(2) == Matrix(Z, {{-1}}));

  InstanceGenerator gen(Z, 21);
  for (int k = 0; k < 20; ++k) {
    const ChainComplex c = gen.complex(3);
    CHECK(shift(shift(c, 1), -1) == c);
    CHECK(shift(c, 2) == shift(shift(c, 1), 1));
    const ChainMap f = gen.chain_map(c, gen.complex(3));
    CHECK(is_chain_map(shift(f, 1)));
    CHECK(shift(shift(f, -1), 1) == f);
  }
}

TEST_CASE("cone") {
  const ChainComplex s0 = sphere(Z, 0);
  CHECK(is_acyclic(cone(identity_map(s0))));
  const ChainComplex c0 = cone(zero_map(s0, s0));
  CHECK(homology(c0, 1) == free_group(1));
  CHECK(homology(c0, 0) == free_group(1));
  const ChainComplex c2 = cone(multiplication(s0, 2));
  CHECK(homology(c2, 0) == HomologyGroup{{Scalar(2)}, 0});
  CHECK(homology(c2, 1).is_zero());
}

TEST_CASE("hom complex") {
  const ChainComplex s0 = sphere(Z, 0);
  CHECK(hom_complex(s0, s0) == s0);
  for (int k = -2; k <= 2; ++k) CHECK(hom_complex(s0, sphere(Z, k)) == sphere(Z, k));
  CHECK(homology(hom_complex(disk(Z, 1), s0), 0).is_zero());

  InstanceGenerator gen(Z, 22);
  for (int k = 0; k < 20; ++k) {
    const ChainComplex w = gen.complex(2);
    const ChainComplex f = gen.complex(2);
    const HomComplex hom(w, f);
    CHECK(validate(hom.complex()));
    for (int degree = -2; degree <= 2; ++degree) {
      const ChainMap phi = gen.graded_map(w, f, degree);
      CHECK(hom.decode(degree, hom.encode(phi)) == phi);
      const ChainMap boundary = hom.boundary(phi);
      CHECK(hom.encode(boundary) ==
            multiply(hom.complex().differential(degree), hom.encode(phi)));
    }
    // degree-0 cycles are exactly the chain maps
    const ChainMap g = gen.chain_map(w, f);
    CHECK(is_chain_map(g));
    CHECK(hom.boundary(g).is_zero());
  }
}

TEST_CASE("homology") {
  CHECK(homology(sphere(Z, 0), 0).to_string() == "free rank 1");
  for (int n = -1; n <= 2; ++n) CHECK(homology(disk(Z, 1), n).is_zero());
}

TEST_CASE("null homotopies") {
  const ChainComplex d1 = disk(Z, 1);
  const ChainComplex s0 = sphere(Z, 0);
  auto h0 = null_homotopy(zero_map(d1, d1));
  REQUIRE(h0.has_value());
  CHECK(h0->is_zero());

  auto h = null_homotopy(identity_map(d1));
  REQUIRE(h.has_value());
  CHECK(HomComplex(d1, d1).boundary(*h) == identity_map(d1));
  CHECK_FALSE(null_homotopy(identity_map(s0)).has_value());

  CHECK(homotopy_class_is_zero(zero_map(s0, s0)));
  CHECK_FALSE(homotopy_class_is_zero(identity_map(s0)));
  const Ring f3 = Ring::prime_field(3);
  const ChainComplex s0_mod3 = sphere(f3, 0);
  CHECK(homotopy_class_is_zero(scale(identity_map(s0_mod3), Scalar(3))));
  CHECK_THROWS_AS(homotopy_class_is_zero(ChainMap(d1, d1, 0, {{1, Matrix(Z, {{1}})}})), Error);
}

TEST_CASE("homotopy decisions agree with the direct solve") {
  for (const Ring& ring : {Z, Ring::rationals(), Ring::prime_field(2)}) {
    InstanceGenerator gen(ring, 23);
    for (int k = 0; k < 30; ++k) {
      const ChainComplex w = gen.complex(2);
      const ChainComplex f = gen.complex(2);
      const ChainMap theta = gen.chain_map(w, f);
      CHECK(homotopy_class_is_zero(theta) == brute_homotopy_zero(theta));
      const ChainMap h = gen.graded_map(w, f, 1);
      const ChainMap boundary = HomComplex(w, f).boundary(h);
      CHECK(homotopy_class_is_zero(boundary));
      CHECK(brute_homotopy_zero(boundary));
    }
  }
}

TEST_CASE("direct sums and algebra of maps") {
  InstanceGenerator gen(Z, 24);
  for (int k = 0; k < 20; ++k) {
    const ChainComplex a = gen.complex(2);
    const ChainComplex b = gen.complex(2);
    const ChainComplex s = direct_sum(a, b);
    CHECK(validate(s));
    CHECK(compose(sum_projection_first(a, b), sum_inclusion_first(a, b)) == identity_map(a));
    CHECK(compose(sum_projection_second(a, b), sum_inclusion_second(a, b)) == identity_map(b));
    CHECK(compose(sum_projection_first(a, b), sum_inclusion_second(a, b)).is_zero());
    CHECK(add(compose(sum_inclusion_first(a, b), sum_projection_first(a, b)),
              compose(sum_inclusion_second(a, b), sum_projection_second(a, b))) == identity_map(s));
    const ChainMap f = gen.chain_map(a, b);
    CHECK(subtract(f, f).is_zero());
    CHECK(add(f, negate(f)).is_zero());
  }
}

TEST_CASE("degreewise kernels, quotients, pushouts and pullbacks") {
  InstanceGenerator gen(Z, 25);
  for (int k = 0; k < 20; ++k) {
    const ChainMap i = gen.cofibration();
    auto quotient = degreewise_quotient(i);
    REQUIRE(quotient.has_value());
    CHECK(is_chain_map(quotient->projection));
    CHECK(compose(quotient->projection, i).is_zero());

    const ChainMap p = gen.fibration();
    const KernelData kernel = degreewise_kernel(p);
    CHECK(is_chain_map(kernel.inclusion));
    CHECK(compose(p, kernel.inclusion).is_zero());

    const ChainMap g = gen.chain_map(i.source(), gen.complex(2));
    const PushoutData po = degreewise_pushout(i, g);
    CHECK(validate(po.pushout));
    CHECK(compose(po.from_source, g) == compose(po.from_target, i));

    const ChainMap h = gen.chain_map(gen.complex(2), p.target());
    const PullbackData pb = degreewise_pullback(p, h);
    CHECK(validate(pb.pullback));
    CHECK(compose(p, pb.to_source) == compose(h, pb.to_other));
  }
  CHECK_FALSE(degreewise_quotient(multiplication(sphere(Z, 0), 2)).has_value());
}
