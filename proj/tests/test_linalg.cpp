#include <numeric>

#include "doctest.h"
#include "obstruct/linalg.hpp"
#include "obstruct/random.hpp"

using namespace obstruct;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();

std::vector<Scalar> scalars(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Determinant by cofactor expansion; only for tiny matrices.
mpz_class det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const mpz_class term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t j = start; j < n; ++j) {
    cur.push_back(j);
    subsets(n, k, j + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors over Z from determinantal divisors: d_k = gcd of the
// k x k minors, factor_k = d_k / d_{k-1}.
std::vector<mpz_class> determinantal_factors(const Matrix& a) {
  std::vector<mpz_class> factors;
  mpz_class previous = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rows);
    subsets(a.cols(), k, 0, cur, cols);
    mpz_class g = 0;
    for (const auto& rs : rows) {
      for (const auto& cs : cols) {
        std::vector<std::vector<mpz_class>> m;
        for (std::size_t r : rs) {
          std::vector<mpz_class> row;
          for (std::size_t c : cs) row.push_back(a.at(r, c).get_num());
          m.push_back(row);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(abs(det(m))).get_mpz_t());
      }
    }
    if (g == 0) break;
    factors.push_back(g / previous);
    previous = g;
  }
  return factors;
}

}  // namespace

TEST_CASE("rings normalize and parse literals") {
  const Ring f5 = Ring::prime_field(5);
  CHECK(f5.normalize(Scalar(7)) == 2);
  CHECK(f5.normalize(Scalar(-1)) == 4);
  CHECK(f5.inverse(Scalar(2)) == 3);
  CHECK(Ring::parse("Z/7").characteristic() == 7);
  CHECK(Ring::parse("Q").is_field());
  CHECK_FALSE(Ring::parse("Z").is_field());
  CHECK_THROWS_AS(Ring::parse("Z/4"), Error);
  CHECK_THROWS_AS(Z.parse_scalar("1/2"), Error);
  CHECK_THROWS_AS(Q.parse_scalar("1/0"), Error);
  CHECK(Q.parse_scalar("-6/4") == Scalar(-3, 2));
  CHECK(Q.format(Scalar(3, 2)) == "3/2");
  CHECK(f5.format(f5.parse_scalar("-1")) == "4");
}

TEST_CASE("integer division is Euclidean") {
  auto [q, r] = Z.divmod(Scalar(7), Scalar(-3));
  CHECK(q * -3 + r == 7);
  CHECK(Z.euclidean_size(r) < Z.euclidean_size(Scalar(-3)));
  CHECK(Z.divides(Scalar(3), Scalar(-9)));
  CHECK_FALSE(Z.divides(Scalar(2), Scalar(3)));
  CHECK(Q.divides(Scalar(2), Scalar(3)));
}

TEST_CASE("snf of small examples") {
  SUBCASE("identity") {
    const SnfDecomposition d = snf(Matrix::identity(Z, 2));
    CHECK(d.s == Matrix::identity(Z, 2));
  }
  SUBCASE("zero 2x3") {
    const SnfDecomposition d = snf(Matrix(Z, 2, 3));
    CHECK(d.s.is_zero());
    CHECK(d.rank == 0);
  }
  SUBCASE("[[2,4],[6,8]]") {
    const Matrix a(Z, {{2, 4}, {6, 8}});
    const SnfDecomposition d = snf(a);
    CHECK(d.invariant_factors() == scalars({2, 4}));
    CHECK(d.u * a * d.v == d.s);
  }
}

TEST_CASE("snf agrees with determinantal divisors on random integer matrices") {
  InstanceGenerator gen(Z, 11);
  for (int k = 0; k < 60; ++k) {
    const Matrix a = gen.matrix(static_cast<std::size_t>(gen.uniform(1, 4)),
                                static_cast<std::size_t>(gen.uniform(1, 4)));
    const SnfDecomposition d = snf(a);
    CHECK(d.u * a * d.v == d.s);
    CHECK(d.u_inverse * d.u == Matrix::identity(Z, a.rows()));
    CHECK(d.v * d.v_inverse == Matrix::identity(Z, a.cols()));
    std::vector<Scalar> expected;
    for (const mpz_class& f : determinantal_factors(a)) expected.emplace_back(f);
    CHECK(d.invariant_factors() == expected);
  }
}

TEST_CASE("solve") {
  CHECK(solve(Matrix(Z, {{2}}), scalars({4})) == std::optional(scalars({2})));
  CHECK_FALSE(solve(Matrix(Z, {{2}}), scalars({3})).has_value());
  CHECK(solve(Matrix(Q, {{2}}), scalars({3})) == std::optional(std::vector<Scalar>{Scalar(3, 2)}));

  const SolveOutcome outcome = solve_certified(Matrix(Z, {{2}}), scalars({3}));
  REQUIRE(std::holds_alternative<InconsistencyCertificate>(outcome));
  const auto& cert = std::get<InconsistencyCertificate>(outcome);
  CHECK(cert.factor == 2);
  CHECK_FALSE(Z.divides(cert.factor, cert.value));
}

TEST_CASE("solve returns solutions of random consistent systems") {
  for (const Ring& ring : {Z, Q, Ring::prime_field(3)}) {
    InstanceGenerator gen(ring, 12);
    for (int k = 0; k < 40; ++k) {
      const Matrix a = gen.matrix(static_cast<std::size_t>(gen.uniform(1, 4)),
                                  static_cast<std::size_t>(gen.uniform(1, 4)));
      std::vector<Scalar> x(a.cols());
      for (auto& entry : x) entry = gen.scalar();
      const std::vector<Scalar> b = multiply(a, x);
      const auto sol = solve(a, b);
      REQUIRE(sol.has_value());
      CHECK(multiply(a, *sol) == b);
      const Matrix kernel = kernel_basis(a);
      CHECK((a * kernel).is_zero());
      CHECK(kernel.cols() + rank(a) == a.cols());
    }
  }
}

TEST_CASE("cokernel invariants") {
  CHECK(cokernel_invariants(Matrix(Z, 1, 1)) == CokernelInvariants{{}, 1});
  CHECK(cokernel_invariants(Matrix(Z, {{2}})) == CokernelInvariants{scalars({2}), 0});
  CHECK(cokernel_invariants(Matrix(Z, {{2, 0}, {0, 3}})) == CokernelInvariants{scalars({6}), 0});
  CHECK(cokernel_invariants(Matrix(Q, {{2, 0}, {0, 3}})) == CokernelInvariants{{}, 0});
}

TEST_CASE("unit embeddings and surjections") {
  CHECK(is_unit_embedding(Matrix(Z, {{1}, {0}})));
  CHECK_FALSE(is_unit_embedding(Matrix(Z, {{2}})));
  CHECK(is_unit_embedding(Matrix(Q, {{2}})));
  CHECK_FALSE(is_unit_embedding(Matrix(Z, {{1, 0}, {0, 2}, {0, 0}})));
  CHECK(is_surjective(Matrix(Z, {{1, 2}})));
  CHECK_FALSE(is_surjective(Matrix(Z, {{2, 4}})));
  CHECK(inverse(Matrix(Z, {{2, 1}, {1, 1}})) == std::optional(Matrix(Z, {{1, -1}, {-1, 2}})));
  CHECK_FALSE(inverse(Matrix(Z, {{2}})).has_value());
}
