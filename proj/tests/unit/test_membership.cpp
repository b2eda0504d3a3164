#include <algorithm>
#include <vector>

#include "doctest.h"
#include "monpow/analysis.hpp"
#include "monpow/errors.hpp"
#include "monpow/io.hpp"
#include "monpow/membership.hpp"
#include "monpow/random.hpp"
#include "oracles.hpp"

using namespace monpow;

namespace {

MonomialIdeal ideal(std::size_t n, std::vector<ExponentVector> g) { return MonomialIdeal::minimalize(n, std::move(g)); }
MonomialIdeal triangle() { return ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}); }

MonomialIdeal five_subset_cover_ideal() {
  return edge_ideal(parse_hypergraph_json(read_file(MONPOW_DATA_DIR "/five_subsets_blocker.json")));
}

const ExponentVector kF{3, 2, 1, 1, 1, 1, 1, 1};

bool has(const MonomialIdeal& I, const ExponentVector& g) {
  const auto& G = I.generators();
  return std::find(G.begin(), G.end(), g) != G.end();
}

MonomialIdeal random_squarefree(Rng& rng, int n, int max_edges = 6) {
  return edge_ideal(random_hypergraph(rng, n, max_edges, n));
}

std::int64_t tau_oracle(const std::vector<monpow::Edge>& covers, const ExponentVector& a) {
  std::int64_t best = -1;
  for (const auto& F : covers) {
    std::int64_t s = 0;
    for (int v : F) s += a[static_cast<std::size_t>(v - 1)];
    if (best < 0 || s < best) best = s;
  }
  return best;
}

void for_each_point(std::size_t n, int box, const std::function<void(const ExponentVector&)>& f) {
  for_each_in_box(n, box, [&](const ExponentVector& a) {
    f(a);
    return true;
  });
}

}  // namespace

TEST_CASE("the four invariants") {
  const ExponentVector one = ExponentVector::ones(3);
  CHECK(nu_a(triangle(), one) == 1);
  CHECK(nu_star_a(triangle(), one) == Rational(3, 2));
  CHECK(tau_a(triangle(), one) == 2);
  CHECK(tau_star_a(triangle(), one) == Rational(3, 2));

  const MonomialIdeal x1 = ideal(1, {{1}});
  CHECK(nu_a(x1, {5}) == 5);
  CHECK(nu_star_a(x1, {5}) == Rational(5));
  CHECK(tau_a(x1, {5}) == 5);
  CHECK(tau_star_a(x1, {5}) == Rational(5));

  CHECK(tau_a(five_subset_cover_ideal(), kF) == 5);
}

TEST_CASE("tau by the blocker") {
  CHECK(tau_a_via_blocker(triangle(), {1, 1, 1}) == 2);
  CHECK(tau_a_via_blocker(triangle(), {0, 1, 1}) == 1);
  CHECK(tau_a_via_blocker(five_subset_cover_ideal(), kF) == 5);
  CHECK_THROWS(tau_a_via_blocker(ideal(2, {{2, 1}}), {1, 1}));
  CHECK_THROWS(SquarefreeIdeal(ideal(2, {{2, 1}})));
}

TEST_CASE("membership examples") {
  const MonomialIdeal m = ideal(2, {{1, 0}, {0, 1}});
  CHECK(in_ordinary_power(m, 2, {1, 1}).member);

  const MonomialIdeal I = five_subset_cover_ideal();
  const MembershipVerdict o = in_ordinary_power(I, 3, kF);
  CHECK_FALSE(o.member);
  CHECK(o.value <= Rational(2));
  CHECK(in_symbolic_power(I, 5, kF).member);
  CHECK(in_symbolic_power(SquarefreeIdeal(I), 5, kF).member);

  const MembershipVerdict c = in_integral_closure(triangle(), 3, {2, 2, 2});
  CHECK(c.member);
  CHECK(c.value == Rational(3));
  CHECK_FALSE(in_integral_closure(triangle(), 2, {1, 1, 1}).member);

  const MonomialIdeal T = triangle();
  for (const auto& g : T.generators()) CHECK(in_symbolic_power(T, 1, g).member);
  CHECK_THROWS(in_symbolic_power(ideal(2, {{2, 0}}), 1, {2, 0}));
  CHECK(membership(PowerKind::symbolic, triangle(), 2, {1, 1, 1}).member);
}

TEST_CASE("symbolic powers") {
  const MonomialIdeal p = ideal(2, {{1, 1}});
  CHECK(symbolic_power(p, 2).generators.generators() == std::vector<ExponentVector>{{2, 2}});
  CHECK(symbolic_power(p, 2).generators == power(p, 2));
  const MonomialIdeal T2 = symbolic_power(triangle(), 2).generators;
  CHECK(has(T2, {1, 1, 1}));
  CHECK(has(T2, {2, 2, 0}));
  CHECK(T2.size() == 4);
  CHECK(symbolic_max_gen_degree(SquarefreeIdeal(triangle()), 2) == 4);
  CHECK(symbolic_max_gen_degree(SquarefreeIdeal(p), 2) == 4);

  const MonomialIdeal H = edge_ideal(blocker(triangle_with_leaves(2)));
  const SquarefreeIdeal sq(H);
  CHECK(has(symbolic_power(sq, 2).generators, ExponentVector::ones(9)));
  CHECK(is_minimal_symbolic_generator(sq, 2, ExponentVector::ones(9)));
  CHECK(symbolic_max_gen_degree(sq, 2) >= 9);
  CHECK_THROWS_AS(symbolic_power(sq, 6, 10), GuardError);
}

TEST_CASE("symbolic power generators are the minimal points of the cover condition") {
  Rng rng(41);
  for (int t = 0; t < 30; ++t) {
    const int n = uniform_int(rng, 1, 4);
    const MonomialIdeal I = random_squarefree(rng, n);
    const auto covers = oracle::minimal_transversals(ideal_to_hypergraph(I));
    const SquarefreeIdeal sq(I);
    for (int k = 1; k <= 3; ++k) {
      const MonomialIdeal S = symbolic_power(sq, k).generators;
      const auto expected = oracle::minimal_points(static_cast<std::size_t>(n), k, [&](const ExponentVector& a) {
        return tau_oracle(covers, a) >= k;
      });
      CHECK(S.generators() == expected);
      CHECK(symbolic_power_by_scan(sq, k) == S);
      for (const auto& g : S.generators()) {
        CHECK(tau_a(I, g) == k);
        CHECK(is_minimal_symbolic_generator(sq, k, g));
      }
    }
  }
}

TEST_CASE("closure generators") {
  const MonomialIdeal m = ideal(2, {{1, 0}, {0, 1}});
  CHECK(closure_power_generators(m, 2).generators() == std::vector<ExponentVector>{{0, 2}, {1, 1}, {2, 0}});
  const MonomialIdeal C = closure_power_generators(triangle(), 2);
  CHECK_FALSE(C.contains({1, 1, 1}));
  CHECK(C == power(triangle(), 2));
  CHECK_THROWS_AS(closure_power_generators(triangle(), 4, 3), GuardError);
}

TEST_CASE("closure generators are the minimal points of the fractional condition") {
  Rng rng(42);
  for (int t = 0; t < 20; ++t) {
    const int n = uniform_int(rng, 1, 4);
    const MonomialIdeal I = random_squarefree(rng, n, 4);
    const IntMatrix M = I.exponent_matrix();
    CHECK(closure_power_generators(I, 1) == I);
    for (int k = 1; k <= 2; ++k) {
      const MonomialIdeal C = closure_power_generators(I, k);
      const auto expected = oracle::minimal_points(static_cast<std::size_t>(n), k, [&](const ExponentVector& a) {
        return oracle::lp_packing(M, a.as_int64()) >= Rational(k);
      });
      CHECK(C.generators() == expected);
    }
  }
}

TEST_CASE("closure generators of a non-squarefree ideal") {
  const MonomialIdeal I = ideal(2, {{2, 0}, {0, 2}});
  const MonomialIdeal C = closure_power_generators(I, 1);
  CHECK(C.generators() == std::vector<ExponentVector>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("upset scan") {
  const auto member = [](const std::vector<int>& p) { return p[0] + 2 * p[1] >= 3 || p[2] >= 2; };
  const auto got = minimal_elements_of_upset({3, 3, 3}, member, 1000);
  const auto expected =
      oracle::minimal_points(3, 3, [&](const ExponentVector& a) { return member(a.entries()); });
  CHECK(got == expected);
  CHECK_THROWS_AS(minimal_elements_of_upset({3, 3, 3}, member, 4), GuardError);
}

TEST_CASE("scaling recovers the fractional packing") {
  const ScalingResult s = nu_star_via_scaling(triangle(), ExponentVector::ones(3));
  CHECK(s.q == 2);
  CHECK(s.nu_qa == 3);
  CHECK(s.value == Rational(3, 2));
  CHECK(nu_star_via_scaling(ideal(1, {{1}}), {4}).q == 1);
  Rng rng(43);
  for (int t = 0; t < 60; ++t) {
    const int n = uniform_int(rng, 1, 5);
    std::vector<ExponentVector> g;
    for (int i = 0, m = uniform_int(rng, 1, 5); i < m; ++i) {
      ExponentVector e = random_exponent(rng, static_cast<std::size_t>(n), 2);
      if (e.is_zero()) e = ExponentVector::unit(static_cast<std::size_t>(n), 0);
      g.push_back(e);
    }
    const MonomialIdeal I = ideal(static_cast<std::size_t>(n), g);
    const ExponentVector a = random_exponent(rng, static_cast<std::size_t>(n), 4);
    CHECK(nu_star_via_scaling(I, a).value == nu_star_a(I, a));
  }
}

TEST_CASE("generator lemmas") {
  CHECK(check_generator_lemmas(SquarefreeIdeal(triangle()), 2).all_ok);
  const GeneratorLemmaReport p = check_generator_lemmas(SquarefreeIdeal(ideal(2, {{1, 1}})), 3);
  REQUIRE(p.entries.size() == 1);
  CHECK(p.entries[0].generator == ExponentVector{3, 3});
  CHECK(p.entries[0].tau == 3);

  const SquarefreeIdeal sq(edge_ideal(blocker(triangle_with_leaves(2))));
  const GeneratorLemmaReport h = check_generator_lemmas(sq, 2);
  CHECK(h.all_ok);
  const auto it = std::find_if(h.entries.begin(), h.entries.end(),
                               [](const GeneratorLemmaEntry& e) { return e.generator == ExponentVector::ones(9); });
  REQUIRE(it != h.entries.end());
  CHECK(it->tau == 2);
  CHECK(it->parallel_height == 2);
}

TEST_CASE("criteria agree with expansion and divisibility oracles") {
  Rng rng(44);
  for (int t = 0; t < 12; ++t) {
    const int n = uniform_int(rng, 2, 5);
    const MonomialIdeal I = random_squarefree(rng, n);
    const SquarefreeIdeal sq(I);
    for (int k = 1; k <= 3; ++k) {
      const MonomialIdeal Ik = power(I, k);
      const MonomialIdeal Sk = symbolic_power(sq, k).generators;
      for_each_point(static_cast<std::size_t>(n), 3, [&](const ExponentVector& a) {
        const bool ord = in_ordinary_power(I, k, a).member;
        const bool cl = in_integral_closure(I, k, a).member;
        const bool sym = in_symbolic_power(sq, k, a).member;
        CHECK(ord == Ik.contains(a));
        CHECK(sym == Sk.contains(a));
        CHECK((!ord || cl));
        CHECK((!cl || sym));
      });
    }
  }
}

TEST_CASE("verdicts are monotone in the exponent") {
  Rng rng(45);
  for (int t = 0; t < 20; ++t) {
    const int n = uniform_int(rng, 2, 5);
    const MonomialIdeal I = random_squarefree(rng, n);
    const int k = uniform_int(rng, 1, 3);
    for (int s = 0; s < 20; ++s) {
      const ExponentVector a = random_exponent(rng, static_cast<std::size_t>(n), 3);
      ExponentVector b = a;
      for (std::size_t i = 0; i < b.size(); ++i) b = b.shifted(i, uniform_int(rng, 0, 2));
      for (PowerKind kind : {PowerKind::ordinary, PowerKind::closure, PowerKind::symbolic})
        if (membership(kind, I, k, a).member) CHECK(membership(kind, I, k, b).member);
    }
  }
}
