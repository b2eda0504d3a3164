#include <algorithm>
#include <vector>

#include "doctest.h"
#include "monpow/errors.hpp"
#include "monpow/hypergraph.hpp"
#include "monpow/monomial.hpp"
#include "monpow/random.hpp"
#include "oracles.hpp"

using namespace monpow;

namespace {

MonomialIdeal ideal(std::size_t n, std::vector<ExponentVector> g) { return MonomialIdeal::minimalize(n, std::move(g)); }

MonomialIdeal triangle() { return ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}); }

MonomialIdeal random_squarefree(Rng& rng, int n) {
  return edge_ideal(random_hypergraph(rng, n, 6, n));
}

bool has(const MonomialIdeal& I, const ExponentVector& g) {
  const auto& G = I.generators();
  return std::find(G.begin(), G.end(), g) != G.end();
}

}  // namespace

TEST_CASE("exponent vectors") {
  const ExponentVector a{2, 0, 1};
  CHECK(a.degree() == 3);
  CHECK(a.support() == std::vector<std::size_t>{0, 2});
  CHECK(a.monomial_string() == "x1^2*x3");
  CHECK(ExponentVector(3).monomial_string() == "1");
  CHECK(a.tuple_string() == "(2,0,1)");
  CHECK(ExponentVector{1, 0, 1}.divides(a));
  CHECK_FALSE(a.divides(ExponentVector{1, 0, 1}));
  CHECK(lcm(ExponentVector{2, 0, 1}, ExponentVector{0, 3, 1}) == ExponentVector{2, 3, 1});
  CHECK(ExponentVector::incidence(4, {1, 4}) == ExponentVector{1, 0, 0, 1});
  CHECK_THROWS(a.shifted(1, -1));
  CHECK_THROWS(ExponentVector(std::vector<int>{1, -1}));
}

TEST_CASE("minimalize") {
  CHECK(ideal(2, {{1, 0}, {1, 1}}).generators() == std::vector<ExponentVector>{{1, 0}});
  CHECK(ideal(2, {{2, 0}, {0, 2}, {1, 1}}).size() == 3);
  CHECK(ideal(2, {{1, 1}, {1, 1}, {0, 3}}).size() == 2);
  CHECK_THROWS(ideal(2, {}));
  CHECK_THROWS(ideal(2, {{0, 0}}));
  CHECK_THROWS(ideal(2, {{1, 0, 0}}));
}

TEST_CASE("minimalize is idempotent and order independent") {
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    std::vector<ExponentVector> g;
    const int m = uniform_int(rng, 1, 8);
    for (int i = 0; i < m; ++i) {
      ExponentVector e = random_exponent(rng, 4, 2);
      if (e.is_zero()) e = ExponentVector::unit(4, 0);
      g.push_back(e);
    }
    const MonomialIdeal I = ideal(4, g);
    std::reverse(g.begin(), g.end());
    CHECK(ideal(4, g) == I);
    CHECK(ideal(4, I.generators()) == I);
  }
}

TEST_CASE("products and powers") {
  const MonomialIdeal m = ideal(2, {{1, 0}, {0, 1}});
  CHECK(power(m, 2).generators() == std::vector<ExponentVector>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(power(m, 1) == m);
  const MonomialIdeal T2 = power(triangle(), 2);
  CHECK(T2.size() == 6);
  for (const auto& g : T2.generators()) CHECK(g.degree() == 4);
  CHECK_THROWS(multiply(m, triangle()));
  CHECK_THROWS(power(m, 0));
  CHECK_THROWS_AS(power(ideal(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}}), 12, 100),
                  GuardError);
}

TEST_CASE("power associativity") {
  Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    const MonomialIdeal I = random_squarefree(rng, 4);
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) CHECK(multiply(power(I, j), power(I, k)) == power(I, j + k));
  }
}

TEST_CASE("intersections") {
  CHECK(intersect(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})).generators() == std::vector<ExponentVector>{{1, 1}});
  const MonomialIdeal A = power(ideal(3, {{1, 0, 0}, {0, 1, 0}}), 2);
  const MonomialIdeal B = power(ideal(3, {{1, 0, 0}, {0, 0, 1}}), 2);
  const MonomialIdeal C = intersect(A, B);
  CHECK(has(C, {2, 0, 0}));
  CHECK(has(C, {1, 1, 1}));
  CHECK(has(C, {0, 2, 2}));
  CHECK(C.generators() == oracle::intersection_by_pairs(A, B));
  CHECK(intersect(triangle(), triangle()) == triangle());
}

TEST_CASE("intersection laws against the pairwise oracle") {
  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    const MonomialIdeal I = random_squarefree(rng, 4);
    const MonomialIdeal J = power(random_squarefree(rng, 4), 2);
    const MonomialIdeal K = random_squarefree(rng, 4);
    CHECK(intersect(I, J).generators() == oracle::intersection_by_pairs(I, J));
    CHECK(intersect(I, J) == intersect(J, I));
    CHECK(intersect(intersect(I, J), K) == intersect(I, intersect(J, K)));
    CHECK(intersect(I, I) == I);
  }
}

TEST_CASE("prime powers") {
  const MonomialIdeal P = prime_power(3, {0, 2}, 2);
  CHECK(P.generators() == std::vector<ExponentVector>{{0, 0, 2}, {1, 0, 1}, {2, 0, 0}});
}

TEST_CASE("degree, mongrade and height") {
  CHECK(max_gen_degree(triangle()) == 2);
  CHECK(max_gen_degree(ideal(2, {{1, 0}, {0, 3}})) == 3);
  CHECK(mongrade(ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}})) == 2);
  CHECK(mongrade(triangle()) == 1);
  CHECK(mongrade(ideal(6, {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}})) == 3);
  CHECK(height(triangle()) == 2);
  CHECK(height(ideal(3, {{1, 1, 1}})) == 1);
  CHECK_THROWS(height(ideal(2, {{2, 0}})));
}

TEST_CASE("height is the covering optimum at the all-ones vector and bounds mongrade") {
  Rng rng(24);
  for (int t = 0; t < 60; ++t) {
    const int n = uniform_int(rng, 2, 6);
    const MonomialIdeal I = random_squarefree(rng, n);
    const ExponentVector one = ExponentVector::ones(I.vars());
    const auto ic = solve_ilp_covering(I.covering_program(one));
    CHECK(height(I) == ic.value);
    CHECK(height(I) == oracle::cover_number(ideal_to_hypergraph(I)));
    CHECK(mongrade(I) <= height(I));
    CHECK(mongrade(I) == oracle::matching_number(ideal_to_hypergraph(I)));
  }
}

TEST_CASE("naive power membership") {
  CHECK(naive_power_membership(ideal(2, {{1, 0}, {0, 1}}), 2, {1, 1}));
  CHECK_FALSE(naive_power_membership(ideal(2, {{1, 1}}), 2, {1, 1}));
}
