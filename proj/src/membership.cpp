#include "monpow/membership.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "monpow/errors.hpp"

namespace monpow {

namespace {

void require_length(const MonomialIdeal& I, const ExponentVector& a) {
  if (a.size() != I.vars()) throw std::invalid_argument("exponent vector length differs from variable count");
}

void require_order(int k) {
  if (k < 1) throw std::invalid_argument("power order must be >= 1");
}

void require_squarefree(const MonomialIdeal& I) {
  if (!I.is_squarefree()) {
    throw std::invalid_argument(
        "symbolic powers are supported only for squarefree ideals (non-squarefree input needs a primary "
        "decomposition)");
  }
}

std::vector<Rational> to_rationals(const std::vector<std::int64_t>& v) {
  return {v.begin(), v.end()};
}

std::int64_t min_generator_degree(const MonomialIdeal& I) {
  std::int64_t d = I.generators().front().degree();
  for (const auto& g : I.generators()) d = std::min(d, g.degree());
  return d;
}

}  // namespace

std::int64_t nu_a(const MonomialIdeal& I, const ExponentVector& a) {
  return solve_ilp_packing(I.packing_program(a)).value;
}

Rational nu_star_a(const MonomialIdeal& I, const ExponentVector& a) {
  return solve_lp_packing(I.packing_program(a)).value;
}

std::int64_t tau_a(const MonomialIdeal& I, const ExponentVector& a) {
  return solve_ilp_covering(I.covering_program(a)).value;
}

Rational tau_star_a(const MonomialIdeal& I, const ExponentVector& a) {
  return solve_lp_covering(I.covering_program(a)).value;
}

std::int64_t tau_a_via_blocker(const MonomialIdeal& I, const ExponentVector& a) {
  require_length(I, a);
  return SquarefreeIdeal(I).tau_by_covers(a);
}

SquarefreeIdeal::SquarefreeIdeal(MonomialIdeal I)
    : ideal_((require_squarefree(I), std::move(I))),
      hypergraph_(ideal_to_hypergraph(ideal_)),
      covers_(blocker(hypergraph_)) {}

std::int64_t SquarefreeIdeal::tau_by_covers(const ExponentVector& a) const {
  require_length(ideal_, a);
  std::int64_t best = -1;
  for (const Edge& F : covers_.edges()) {
    std::int64_t s = 0;
    for (int v : F) s += a[static_cast<std::size_t>(v - 1)];
    if (best < 0 || s < best) best = s;
  }
  return best;
}

const char* to_string(PowerKind k) {
  switch (k) {
    case PowerKind::ordinary: return "ordinary";
    case PowerKind::closure: return "closure";
    case PowerKind::symbolic: return "symbolic";
  }
  return "?";
}

MembershipVerdict in_ordinary_power(const MonomialIdeal& I, int k, const ExponentVector& a) {
  require_order(k);
  const IlpSolution s = solve_ilp_packing(I.packing_program(a));
  return {s.value >= k, Rational(s.value), k, to_rationals(s.witness)};
}

MembershipVerdict in_integral_closure(const MonomialIdeal& I, int k, const ExponentVector& a) {
  require_order(k);
  LpSolution s = solve_lp_packing(I.packing_program(a));
  const bool member = s.value >= Rational(k);
  return {member, std::move(s.value), k, std::move(s.primal)};
}

MembershipVerdict in_symbolic_power(const MonomialIdeal& I, int k, const ExponentVector& a) {
  require_order(k);
  require_squarefree(I);
  const IlpSolution s = solve_ilp_covering(I.covering_program(a));
  return {s.value >= k, Rational(s.value), k, to_rationals(s.witness)};
}

MembershipVerdict in_symbolic_power(const SquarefreeIdeal& I, int k, const ExponentVector& a) {
  MembershipVerdict v = in_symbolic_power(I.ideal(), k, a);
  const std::int64_t by_covers = I.tau_by_covers(a);
  if (Rational(by_covers) != v.value) {
    throw InvariantViolation("tau_a disagrees: covering program gives " + v.value.str() +
                             ", minimal covers give " + std::to_string(by_covers) + " at " + a.tuple_string());
  }
  return v;
}

MembershipVerdict membership(PowerKind kind, const MonomialIdeal& I, int k, const ExponentVector& a) {
  switch (kind) {
    case PowerKind::ordinary: return in_ordinary_power(I, k, a);
    case PowerKind::closure: return in_integral_closure(I, k, a);
    case PowerKind::symbolic: return in_symbolic_power(I, k, a);
  }
  throw std::invalid_argument("unknown power kind");
}

namespace {

// Generators of J ∩ P_F^k: a generator g with sum_F g >= k survives; any
// other is raised on F by every composition of the missing degree.
std::vector<ExponentVector> meet_prime_power(const std::vector<ExponentVector>& gens, const Edge& F, int k,
                                             std::size_t max_candidates) {
  std::vector<ExponentVector> out;
  std::vector<std::size_t> vars;
  for (int v : F) vars.push_back(static_cast<std::size_t>(v - 1));
  for (const auto& g : gens) {
    int s = 0;
    for (std::size_t v : vars) s += g[v];
    if (s >= k) {
      out.push_back(g);
      continue;
    }
    std::vector<int> e = g.entries();
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
      if (pos + 1 == vars.size()) {
        e[vars[pos]] += left;
        out.emplace_back(e);
        e[vars[pos]] -= left;
        return;
      }
      for (int d = left; d >= 0; --d) {
        e[vars[pos]] += d;
        self(self, pos + 1, left - d);
        e[vars[pos]] -= d;
      }
    };
    rec(rec, 0, k - s);
    if (out.size() > max_candidates) {
      throw GuardError("symbolic power: more than " + std::to_string(max_candidates) +
                       " candidate generators in an intermediate intersection");
    }
  }
  return out;
}

}  // namespace

SymbolicPower symbolic_power(const SquarefreeIdeal& I, int k, std::size_t max_generators) {
  require_order(k);
  const std::size_t n = I.ideal().vars();
  std::vector<Edge> covers = I.covers().edges();
  std::stable_sort(covers.begin(), covers.end(),
                   [](const Edge& x, const Edge& y) { return x.size() < y.size(); });
  std::vector<std::size_t> first;
  for (int v : covers.front()) first.push_back(static_cast<std::size_t>(v - 1));
  std::vector<ExponentVector> acc = prime_power(n, first, k).generators();
  const std::size_t max_candidates = max_generators * 8;
  for (std::size_t c = 1; c < covers.size(); ++c) {
    acc = minimal_elements(meet_prime_power(acc, covers[c], k, max_candidates));
    if (acc.size() > max_generators) {
      throw GuardError("symbolic power: intermediate intersection has more than " +
                       std::to_string(max_generators) + " generators");
    }
  }
  return {I.ideal(), k, MonomialIdeal::minimalize(n, std::move(acc))};
}

SymbolicPower symbolic_power(const MonomialIdeal& I, int k, std::size_t max_generators) {
  return symbolic_power(SquarefreeIdeal(I), k, max_generators);
}

std::vector<ExponentVector> minimal_elements_of_upset(const std::vector<int>& bounds, const UpsetMembership& member,
                                                      std::size_t max_prefixes) {
  if (bounds.empty()) throw std::invalid_argument("upset scan: empty box");
  for (int b : bounds)
    if (b < 0) throw std::invalid_argument("upset scan: negative bound");
  const std::size_t d = bounds.size() - 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= static_cast<std::size_t>(bounds[i]) + 1;
    if (total > max_prefixes) {
      throw GuardError("upset scan: the prefix box exceeds " + std::to_string(max_prefixes) + " points");
    }
  }
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t i = d; i-- > 1;) stride[i - 1] = stride[i] * (static_cast<std::size_t>(bounds[i]) + 1);

  constexpr int kNone = -1;
  std::vector<int> threshold(total, kNone);
  std::vector<int> point(bounds.size(), 0);
  const int top = bounds[d];
  std::vector<ExponentVector> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    int upper = kNone;
    for (std::size_t i = 0; i < d; ++i) {
      if (point[i] == 0) continue;
      const int t = threshold[idx - stride[i]];
      if (t != kNone && (upper == kNone || t < upper)) upper = t;
    }
    if (upper == kNone) {
      point[d] = top;
      if (member(point)) upper = top;
    }
    if (upper != kNone) {
      int lo = 0, hi = upper;
      while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        point[d] = mid;
        if (member(point)) hi = mid;
        else lo = mid + 1;
      }
      threshold[idx] = lo;
      bool minimal = true;
      for (std::size_t i = 0; i < d && minimal; ++i) {
        if (point[i] == 0) continue;
        const int t = threshold[idx - stride[i]];
        if (t != kNone && t <= lo) minimal = false;
      }
      if (minimal) {
        point[d] = lo;
        out.emplace_back(point);
      }
    }
    for (std::size_t i = d; i-- > 0;) {
      if (++point[i] <= bounds[i]) break;
      point[i] = 0;
    }
  }
  return out;
}

MonomialIdeal closure_power_generators(const MonomialIdeal& I, int k, std::size_t max_prefixes) {
  require_order(k);
  const std::size_t n = I.vars();
  std::vector<int> bounds(n, 0);
  for (const auto& g : I.generators())
    for (std::size_t j = 0; j < n; ++j) bounds[j] = std::max(bounds[j], g[j] * k);
  const IntMatrix M = I.exponent_matrix();
  const std::int64_t need = min_generator_degree(I) * k;
  const Rational target(k);
  auto member = [&](const std::vector<int>& point) {
    std::int64_t deg = std::accumulate(point.begin(), point.end(), std::int64_t{0});
    if (deg < need) return false;
    PackingProgram p(M, std::vector<std::int64_t>(point.begin(), point.end()));
    return solve_lp_packing(p).value >= target;
  };
  return MonomialIdeal::minimalize(n, minimal_elements_of_upset(bounds, member, max_prefixes));
}

MonomialIdeal symbolic_power_by_scan(const SquarefreeIdeal& I, int k, std::size_t max_prefixes) {
  require_order(k);
  const std::size_t n = I.ideal().vars();
  std::vector<int> bounds(n, 0);
  for (const Edge& F : I.covers().edges())
    for (int v : F) bounds[static_cast<std::size_t>(v - 1)] = k;
  auto member = [&](const std::vector<int>& point) {
    return I.tau_by_covers(ExponentVector(point)) >= k;
  };
  return MonomialIdeal::minimalize(n, minimal_elements_of_upset(bounds, member, max_prefixes));
}

ScalingResult nu_star_via_scaling(const MonomialIdeal& I, const ExponentVector& a) {
  const LpSolution lp = solve_lp_packing(I.packing_program(a));
  Rational::Integer q = 1;
  for (const Rational& y : lp.primal) {
    Rational::Integer den = y.denominator();
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), den.get_mpz_t());
  }
  const std::int64_t q64 = to_int64(q);
  if (q64 > std::numeric_limits<int>::max()) throw GuardError("scaling: witness denominator too large");
  const ExponentVector qa = a.scaled(static_cast<int>(q64));
  const std::int64_t nu_qa = nu_a(I, qa);
  ScalingResult r{Rational(nu_qa, q64), q64, nu_qa};
  if (r.value != lp.value) {
    throw InvariantViolation("scaling: nu_{qa}/q = " + r.value.str() + " differs from nu*_a = " + lp.value.str());
  }
  return r;
}

std::int64_t symbolic_max_gen_degree(const SquarefreeIdeal& I, int k) {
  return max_gen_degree(symbolic_power(I, k).generators);
}

GeneratorLemmaReport check_generator_lemmas(const SquarefreeIdeal& I, int k) {
  GeneratorLemmaReport report;
  report.k = k;
  const SymbolicPower P = symbolic_power(I, k);
  for (const auto& a : P.generators.generators()) {
    GeneratorLemmaEntry e;
    e.generator = a;
    e.tau = in_symbolic_power(I, k, a).value.floor_int();
    const ParallelHypergraph par = parallelization(I.hypergraph(), a);
    if (!par.graph.empty()) {
      e.parallel_height = height(edge_ideal(par.graph));
      const Hypergraph B = blocker(par.graph);
      std::vector<bool> seen(static_cast<std::size_t>(par.graph.vertices()), false);
      for (const Edge& C : B.edges()) {
        if (static_cast<int>(C.size()) != e.parallel_height) continue;
        for (int v : C) seen[static_cast<std::size_t>(v - 1)] = true;
      }
      e.every_vertex_in_min_cover = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }
    e.ok = e.tau == k && e.parallel_height == k && e.every_vertex_in_min_cover;
    report.all_ok = report.all_ok && e.ok;
    report.entries.push_back(std::move(e));
  }
  return report;
}

bool is_minimal_symbolic_generator(const SquarefreeIdeal& I, int k, const ExponentVector& a) {
  require_order(k);
  if (!in_symbolic_power(I, k, a).member) return false;
  for (std::size_t i : a.support())
    if (I.tau_by_covers(a.shifted(i, -1)) >= k) return false;
  return true;
}

}  // namespace monpow
