#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "doctest.h"
#include "monpow/errors.hpp"
#include "monpow/hypergraph.hpp"
#include "monpow/io.hpp"
#include "monpow/membership.hpp"
#include "monpow/random.hpp"
#include "oracles.hpp"

using namespace monpow;

namespace {

Hypergraph triangle() { return Hypergraph(3, {{1, 2}, {1, 3}, {2, 3}}); }
Hypergraph figure1() { return Hypergraph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

Hypergraph star(int p) {
  std::vector<Edge> e;
  for (int j = 2; j <= p + 1; ++j) e.push_back({1, j});
  return Hypergraph(p + 1, e);
}

Hypergraph five_subsets() {
  std::vector<Edge> e{{1, 2}};
  std::function<void(int, Edge&)> rec = [&](int v, Edge& cur) {
    if (cur.size() == 5) {
      if (!(std::count(cur.begin(), cur.end(), 1) && std::count(cur.begin(), cur.end(), 2))) e.push_back(cur);
      return;
    }
    for (int u = v; u <= 8; ++u) {
      cur.push_back(u);
      rec(u + 1, cur);
      cur.pop_back();
    }
  };
  Edge cur;
  rec(1, cur);
  return Hypergraph(8, e);
}

// Edges of H contained in supp(a), on the same vertex set.
Hypergraph restriction(const Hypergraph& H, const ExponentVector& a) {
  std::vector<Edge> e;
  for (const auto& f : H.edges())
    if (std::all_of(f.begin(), f.end(), [&](int v) { return a[static_cast<std::size_t>(v - 1)] > 0; })) e.push_back(f);
  return Hypergraph(H.vertices(), e);
}

ExponentVector bounded_exponent(Rng& rng, std::size_t n, int hi) { return random_exponent(rng, n, hi); }

}  // namespace

TEST_CASE("construction validates simplicity") {
  CHECK_THROWS(Hypergraph(3, {{1, 2}, {1, 2, 3}}));
  CHECK_THROWS(Hypergraph(3, {{}}));
  CHECK_THROWS(Hypergraph(3, {{1, 4}}));
  CHECK_THROWS(Hypergraph(3, {{1, 2}, {1, 2}}));
  CHECK(Hypergraph::from_minimal(3, {{1, 2}, {1, 2, 3}, {3}}).edges() == std::vector<Edge>{{1, 2}, {3}});
}

TEST_CASE("edge ideal round trip") {
  const MonomialIdeal I = edge_ideal(triangle());
  CHECK(I.generators() == std::vector<ExponentVector>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(edge_ideal(figure1()).size() == 4);
  const MonomialIdeal F = edge_ideal(figure1());
  for (const auto& g : F.generators()) CHECK(g.degree() == 2);
  CHECK_THROWS(ideal_to_hypergraph(MonomialIdeal::minimalize(2, {{2, 0}})));
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const Hypergraph H = random_hypergraph(rng, uniform_int(rng, 1, 7), 6, 4);
    CHECK(ideal_to_hypergraph(edge_ideal(H)) == H);
  }
}

TEST_CASE("blocker examples") {
  CHECK(blocker(triangle()) == triangle());
  const Hypergraph B = blocker(five_subsets());
  CHECK(B.edge_count() == 55);
  std::set<Edge> expected;
  for (int i = 3; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) {
      expected.insert({1, 2, i, j});
      for (int t = j + 1; t <= 8; ++t) {
        expected.insert({1, i, j, t});
        expected.insert({2, i, j, t});
      }
    }
  CHECK(std::set<Edge>(B.edges().begin(), B.edges().end()) == expected);
  CHECK(B == parse_hypergraph_json(read_file(MONPOW_DATA_DIR "/five_subsets_blocker.json")));
  CHECK(five_subsets() == parse_hypergraph_json(read_file(MONPOW_DATA_DIR "/five_subsets.json")));
  CHECK(tau(B) == 2);
  const auto w = solve_ilp_covering(CoveringProgram(B.incidence_matrix(), std::vector<std::int64_t>(8, 1)));
  CHECK(w.value == 2);
  CHECK(w.witness == std::vector<std::int64_t>{1, 1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("blocker agrees with subset enumeration and is an involution") {
  Rng rng(32);
  for (int t = 0; t < 80; ++t) {
    const Hypergraph H = random_hypergraph(rng, uniform_int(rng, 1, 8), 7, 4);
    const Hypergraph B = blocker(H);
    CHECK(B.edges() == oracle::minimal_transversals(H));
    CHECK(blocker(B) == H);
  }
}

TEST_CASE("parallelization") {
  const ParallelHypergraph P = parallelization(figure1(), {1, 1, 2, 2});
  CHECK(P.graph.vertices() == 6);
  CHECK(P.graph.edge_count() == 9);
  CHECK(P.labels == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}});
  CHECK(parallelization(figure1(), ExponentVector::ones(4)).graph == figure1());
  const ParallelHypergraph D = parallelization(figure1(), {1, 1, 1, 0});
  CHECK(D.graph == Hypergraph(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(parallelization(figure1(), ExponentVector(4)).graph.empty());
}

TEST_CASE("blocker of a parallelization lifts the covers of the restriction") {
  Rng rng(33);
  int done = 0;
  while (done < 60) {
    const int n = uniform_int(rng, 1, 5);
    const Hypergraph H = random_hypergraph(rng, n, 5, 3);
    const ExponentVector a = bounded_exponent(rng, static_cast<std::size_t>(n), 3);
    const Hypergraph HA = restriction(H, a);
    if (HA.empty()) continue;
    ++done;
    const ParallelHypergraph P = parallelization(H, a);
    std::vector<Edge> lifted;
    for (const auto& D : oracle::minimal_transversals(HA)) {
      Edge C;
      for (int v = 1; v <= P.graph.vertices(); ++v)
        if (std::binary_search(D.begin(), D.end(), P.project(v))) C.push_back(v);
      lifted.push_back(C);
    }
    std::sort(lifted.begin(), lifted.end());
    CHECK(blocker(P.graph).edges() == lifted);
    CHECK(P.graph.rank() <= H.rank());
  }
}

TEST_CASE("invariants of the ideal equal those of the parallelization") {
  Rng rng(34);
  int done = 0;
  while (done < 50) {
    const int n = uniform_int(rng, 1, 5);
    const Hypergraph H = random_hypergraph(rng, n, 5, 3);
    const ExponentVector a = bounded_exponent(rng, static_cast<std::size_t>(n), 3);
    const Hypergraph G = parallelization(H, a).graph;
    if (G.empty()) continue;
    ++done;
    const MonomialIdeal I = edge_ideal(H);
    CHECK(nu_a(I, a) == nu(G));
    CHECK(tau_a(I, a) == tau(G));
    CHECK(nu_star_a(I, a) == nu_star(G));
    CHECK(tau_star_a(I, a) == tau_star(G));
    if (G.edge_count() > 8 || G.vertices() > 8) continue;
    const std::vector<std::int64_t> ones(static_cast<std::size_t>(G.vertices()), 1);
    CHECK(nu(G) == oracle::matching_number(G));
    CHECK(tau(G) == oracle::cover_number(G));
    CHECK(nu_star(G) == oracle::lp_packing(G.incidence_matrix(), ones));
    CHECK(tau_star(G) == oracle::lp_covering(G.incidence_matrix(), ones));
  }
}

TEST_CASE("minors") {
  const Minor same = minor(triangle(), {}, {});
  CHECK(same.kind == MinorKind::regular);
  CHECK(same.graph == triangle());
  const Minor del = minor(triangle(), {}, {3});
  CHECK(del.graph.edges() == std::vector<Edge>{{1, 2}});
  CHECK(del.vertex_map == std::vector<int>{1, 2});
  const Minor con = minor(triangle(), {3}, {});
  CHECK(con.kind == MinorKind::regular);
  CHECK(con.graph.edges() == std::vector<Edge>{{1}, {2}});
  CHECK(minor(triangle(), {1, 2}, {}).kind == MinorKind::unit);
  CHECK(minor(triangle(), {}, {1, 2}).kind == MinorKind::zero);
  CHECK_THROWS(minor(triangle(), {1}, {1}));
}

TEST_CASE("matching and covering numbers") {
  CHECK(nu(triangle()) == 1);
  CHECK(tau(triangle()) == 2);
  CHECK(nu_star(triangle()) == Rational(3, 2));
  CHECK(tau_star(triangle()) == Rational(3, 2));
  const Hypergraph pm(6, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(nu(pm) == 3);
  CHECK(tau(pm) == 3);
  CHECK(nu(Hypergraph(3, {})) == 0);
  CHECK(tau_star(Hypergraph(3, {})) == Rational(0));
}

TEST_CASE("konig and packing") {
  const Hypergraph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(is_konig(c4));
  CHECK_FALSE(is_konig(triangle()));
  CHECK(has_packing_property(Hypergraph(2, {{1, 2}})).holds);
  CHECK(has_packing_property(c4).holds);
  const auto t = has_packing_property(triangle());
  CHECK_FALSE(t.holds);
  REQUIRE(t.violation);
  std::vector<int> many(13);
  for (int i = 0; i < 13; ++i) many[static_cast<std::size_t>(i)] = i + 1;
  CHECK_THROWS_AS(has_packing_property(Hypergraph(13, {many})), GuardError);
}

TEST_CASE("tau is at most rank times nu") {
  Rng rng(35);
  for (int t = 0; t < 100; ++t) {
    const Hypergraph H = random_hypergraph(rng, uniform_int(rng, 1, 8), 8, 4);
    CHECK(tau(H) <= H.rank() * nu(H));
    CHECK(nu(H) == oracle::matching_number(H));
    CHECK(tau(H) == oracle::cover_number(H));
  }
}

TEST_CASE("clone decomposition") {
  const CloneDecomposition s = clone_decomposition(star(4));
  CHECK(s.classes == std::vector<std::vector<int>>{{1}, {2, 3, 4, 5}});
  CHECK(s.reduced == Hypergraph(2, {{1, 2}}));
  CHECK(s.multiplicities == ExponentVector{1, 4});

  const CloneDecomposition f = clone_decomposition(figure1());
  CHECK(f.reduced == figure1());
  CHECK(f.multiplicities == ExponentVector::ones(4));

  const CloneDecomposition p = clone_decomposition(parallelization(figure1(), {1, 1, 2, 2}).graph);
  CHECK(p.reduced == figure1());
  CHECK(p.multiplicities == ExponentVector{1, 1, 2, 2});
}

TEST_CASE("clone reduction round trip") {
  Rng rng(36);
  for (int t = 0; t < 60; ++t) {
    const Hypergraph H = random_hypergraph(rng, uniform_int(rng, 1, 4), 4, 3);
    const Hypergraph G = parallelization(H, bounded_exponent(rng, static_cast<std::size_t>(H.vertices()), 2)).graph;
    if (G.empty()) continue;
    const CloneDecomposition c = clone_decomposition(G);
    const ParallelHypergraph P = parallelization(c.reduced, c.multiplicities);
    std::vector<Edge> mapped;
    for (const auto& e : P.graph.edges()) {
      Edge m;
      for (int v : e) {
        const auto [cls, copy] = P.labels[static_cast<std::size_t>(v - 1)];
        m.push_back(c.classes[static_cast<std::size_t>(cls - 1)][static_cast<std::size_t>(copy - 1)]);
      }
      std::sort(m.begin(), m.end());
      mapped.push_back(m);
    }
    int used = 0;
    for (const auto& cl : c.classes) used += static_cast<int>(cl.size());
    CHECK(used == G.vertices());
    CHECK(Hypergraph::from_minimal(G.vertices(), mapped) == G);
  }
}

TEST_CASE("partiteness") {
  const Hypergraph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(is_r_partite(c4, 2, {0, 1, 0, 1}));
  CHECK_FALSE(is_r_partite(c4, 2, {0, 0, 1, 1}));
  CHECK_FALSE(find_r_partition(triangle(), 2));
  const auto p = find_r_partition(triangle(), 3);
  REQUIRE(p);
  CHECK(is_r_partite(triangle(), 3, *p));
}

TEST_CASE("maximal minimal cover size") {
  CHECK(max_min_cover_size(star(5)) == 5);
  CHECK(max_min_cover_size_reduced(star(5)) == 1);
  CHECK(max_min_cover_size(triangle()) == 2);
  CHECK(max_min_cover_size(Hypergraph(2, {{1, 2}})) == 1);
}
