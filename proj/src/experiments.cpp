#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "monpow/analysis.hpp"
#include "monpow/errors.hpp"
#include "monpow/random.hpp"

namespace monpow {

void for_each_in_box(std::size_t n, int box, const std::function<bool(const ExponentVector&)>& visit) {
  if (box < 0) throw std::invalid_argument("box bound must be >= 0");
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(box) + 1;
    if (total > kMaxBoxPoints) {
      throw GuardError("box [0," + std::to_string(box) + "]^" + std::to_string(n) + " exceeds " +
                       std::to_string(kMaxBoxPoints) + " points");
    }
  }
  std::vector<int> e(n, 0);
  for (;;) {
    if (!visit(ExponentVector(e))) return;
    std::size_t i = n;
    while (i > 0 && e[i - 1] == box) e[--i] = 0;
    if (i == 0) return;
    ++e[i - 1];
  }
}

namespace {

template <typename Check>
BoxVerdict box_check(const char* name, const MonomialIdeal& I, int box, Check check) {
  BoxVerdict v{name, true, box, 0, std::nullopt, {}};
  for_each_in_box(I.vars(), box, [&](const ExponentVector& a) {
    ++v.points_checked;
    std::string detail;
    if (check(a, detail)) return true;
    v.holds = false;
    v.violation = a;
    v.detail = std::move(detail);
    return false;
  });
  return v;
}

}  // namespace

BoxVerdict check_normal(const MonomialIdeal& I, int box) {
  return box_check("normal", I, box, [&](const ExponentVector& a, std::string& detail) {
    const std::int64_t nu = nu_a(I, a);
    const Rational ns = nu_star_a(I, a);
    if (nu == ns.floor_int()) return true;
    detail = "nu=" + std::to_string(nu) + " nu*=" + ns.str();
    return false;
  });
}

BoxVerdict check_mengerian(const MonomialIdeal& I, int box) {
  return box_check("mengerian", I, box, [&](const ExponentVector& a, std::string& detail) {
    const std::int64_t nu = nu_a(I, a);
    const std::int64_t t = tau_a(I, a);
    if (nu == t) return true;
    detail = "nu=" + std::to_string(nu) + " tau=" + std::to_string(t);
    return false;
  });
}

BoxVerdict check_fulkersonian(const MonomialIdeal& I, int box) {
  return box_check("fulkersonian", I, box, [&](const ExponentVector& a, std::string& detail) {
    const Rational ts = tau_star_a(I, a);
    const std::int64_t t = tau_a(I, a);
    if (ts == Rational(t)) return true;
    detail = "tau*=" + ts.str() + " tau=" + std::to_string(t);
    return false;
  });
}

ConfortiCornuejolsReport conforti_cornuejols_experiment(const MonomialIdeal& I, int box) {
  const Hypergraph H = ideal_to_hypergraph(I);
  const int n = H.vertices();
  if (n > kMaxMinorVertices) {
    throw GuardError("minor enumeration is limited to " + std::to_string(kMaxMinorVertices) + " vertices");
  }
  ConfortiCornuejolsReport rep;
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 free, 1 set to one, 2 set to zero
  for (;;) {
    std::vector<int> ones, zeros;
    for (int v = 1; v <= n; ++v) {
      const int s = state[static_cast<std::size_t>(v - 1)];
      if (s == 1) ones.push_back(v);
      if (s == 2) zeros.push_back(v);
    }
    const Minor mi = minor(H, ones, zeros);
    if (mi.kind == MinorKind::regular) {
      ++rep.minors_checked;
      const MonomialIdeal J = edge_ideal(mi.graph);
      if (mongrade(J) != height(J)) {
        rep.hypothesis_holds = false;
        rep.violating_minor = std::make_pair(ones, zeros);
        break;
      }
    }
    int i = n;
    while (i > 0 && state[static_cast<std::size_t>(i - 1)] == 2) state[static_cast<std::size_t>(--i)] = 0;
    if (i == 0) break;
    ++state[static_cast<std::size_t>(i - 1)];
  }
  if (has_packing_property(H).holds != rep.hypothesis_holds) {
    throw InvariantViolation("mongrade/height minors disagree with the packing property check");
  }
  if (rep.hypothesis_holds) rep.normality = check_normal(I, box);
  return rep;
}

bool RyserReport::no_violation() const {
  if (ryser_violation) return false;
  return std::all_of(conjectured.begin(), conjectured.end(), [](const ContainmentReport& c) { return c.holds; });
}

RyserReport ryser_experiment(const Hypergraph& H, int r, const std::vector<int>& parts, int box, int k_max) {
  if (r < 2) throw std::invalid_argument("ryser: r must be >= 2");
  if (H.empty()) throw std::invalid_argument("ryser: the hypergraph has no edges");
  if (H.rank() > r) throw std::invalid_argument("ryser: rank exceeds r");
  if (!is_r_partite(H, r, parts)) throw std::invalid_argument("ryser: the partition is not valid for the hypergraph");
  const MonomialIdeal I = edge_ideal(H);
  RyserReport rep{r, box, k_max, 0, std::nullopt, {}, {}};
  for_each_in_box(I.vars(), box, [&](const ExponentVector& a) {
    ++rep.points_checked;
    if (tau_a(I, a) <= (r - 1) * nu_a(I, a)) return true;
    rep.ryser_violation = a;
    return false;
  });
  for (int k = 1; k <= k_max; ++k) {
    rep.conjectured.push_back(check_containment(PowerExpression{PowerKind::symbolic, (r - 1) * (k - 1) + 1, I},
                                                PowerExpression{PowerKind::ordinary, k, I}));
  }
  rep.proven = verify_partite_containments(I, r, k_max);
  return rep;
}

GapSuiteReport gap_property_suite(std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  GapSuiteReport rep{seed, samples, 0, 0, 0};
  for (std::size_t s = 0; s < samples; ++s) {
    const auto rows = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    const auto cols = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    const PackingProgram p(random_matrix(rng, rows, cols, 3), random_capacity(rng, rows, 5));
    const Rational ns = solve_lp_packing(p).value;
    const std::int64_t nu = solve_ilp_packing(p).value;
    if (!(ns < Rational(nu + static_cast<std::int64_t>(std::min(rows, cols))))) {
      throw InvariantViolation("nu* < nu + min(m,n) fails: nu*=" + ns.str() + " nu=" + std::to_string(nu));
    }
    ++rep.bs_checked;
  }
  for (std::size_t s = 0; s < samples; ++s) {
    const Hypergraph H = random_hypergraph(rng, uniform_int(rng, 2, 6), 6, 3);
    const MonomialIdeal I = edge_ideal(H);
    const int h = max_min_cover_size(H);
    const ExponentVector a = random_exponent(rng, I.vars(), 3);
    const std::int64_t t = tau_a(I, a), nu = nu_a(I, a);
    if (t > h * nu) {
      throw InvariantViolation("tau_a <= h nu_a fails at " + a.tuple_string() + " for " + I.str());
    }
    ++rep.ha_checked;
  }
  for (std::size_t s = 0; s < samples; ++s) {
    const Hypergraph H = random_hypergraph(rng, uniform_int(rng, 2, 4), 4, 3);
    ExponentVector a = random_exponent(rng, static_cast<std::size_t>(H.vertices()), 2);
    const ParallelHypergraph P = parallelization(H, a);
    if (P.graph.empty()) {
      --s;
      continue;
    }
    const int hstar = max_min_cover_size_reduced(P.graph);
    const std::int64_t t = tau(P.graph), nu = monpow::nu(P.graph);
    if (t > hstar * nu) throw InvariantViolation("tau <= h* nu fails on a parallelization by " + a.tuple_string());
    ++rep.tauhnu_checked;
  }
  return rep;
}

Hypergraph triangle_with_leaves(int m) {
  if (m < 0) throw std::invalid_argument("triangle_with_leaves: m must be >= 0");
  std::vector<Edge> edges{{1, 2}, {1, 3}, {2, 3}};
  for (int t = 0; t < 3; ++t)
    for (int j = 1; j <= m; ++j) edges.push_back({t + 1, 3 + t * m + j});
  return Hypergraph(3 * (m + 1), std::move(edges));
}

HunekeReport huneke_counterexample(int m, bool materialize) {
  if (m < 2) throw std::invalid_argument("huneke counterexample needs m >= 2");
  const Hypergraph G = triangle_with_leaves(m);
  const SquarefreeIdeal sq(edge_ideal(blocker(G)));
  const int n = G.vertices();
  HunekeReport rep{m, n, G, sq.ideal(), 0, 0, false, std::nullopt, 0, false};
  rep.height = height(sq.ideal());
  rep.d = max_gen_degree(sq.ideal());
  rep.ones_is_minimal_generator = is_minimal_symbolic_generator(sq, 2, ExponentVector::ones(static_cast<std::size_t>(n)));
  if (materialize) {
    try {
      rep.symbolic_degree = symbolic_max_gen_degree(sq, 2);
    } catch (const GuardError&) {
    }
  }
  rep.gap_lower_bound = n - 2 * rep.d;
  rep.ok = rep.height == 2 && rep.d == m + 2 && n > 2 * (m + 2) && rep.ones_is_minimal_generator &&
           rep.gap_lower_bound >= m - 1 && (!rep.symbolic_degree || *rep.symbolic_degree - 2 * rep.d >= m - 1);
  return rep;
}

EquiReport equi_condition_check(const MonomialIdeal& I, const std::function<std::int64_t(std::int64_t)>& f) {
  const SquarefreeIdeal sq(I);
  EquiReport rep;
  rep.n = static_cast<int>(I.vars());
  rep.height = height(I);
  rep.d = max_gen_degree(I);
  std::vector<bool> seen(I.vars(), false);
  for (const Edge& C : sq.covers().edges()) {
    if (static_cast<int>(C.size()) != rep.height) continue;
    for (int v : C) seen[static_cast<std::size_t>(v - 1)] = true;
  }
  rep.hypothesis_holds = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  rep.f_of_d = f(rep.d);
  rep.inequality_holds = rep.n <= rep.height * rep.f_of_d;
  return rep;
}

namespace {

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw std::invalid_argument("expected a comma-separated integer list, got '" + std::string(text) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::function<std::int64_t(std::int64_t)> parse_numeric_function(std::string_view spec) {
  if (spec == "identity") return [](std::int64_t d) { return d; };
  if (spec.starts_with("affine:")) {
    const auto c = parse_int_list(spec.substr(7));
    if (c.size() != 2) throw std::invalid_argument("affine function needs two coefficients A,B");
    return [A = c[0], B = c[1]](std::int64_t d) { return A * d + B; };
  }
  if (spec.starts_with("table:")) {
    auto table = parse_int_list(spec.substr(6));
    return [table = std::move(table)](std::int64_t d) {
      if (d < 1 || d > static_cast<std::int64_t>(table.size())) {
        throw std::invalid_argument("function table has no value at " + std::to_string(d));
      }
      return table[static_cast<std::size_t>(d - 1)];
    };
  }
  throw std::invalid_argument("unknown function '" + std::string(spec) + "' (identity, affine:A,B, table:v1,...)");
}

}  // namespace monpow
