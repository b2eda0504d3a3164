#pragma once

// Containments between powers, resurgence bounds, box-bounded property
// checks and the hypergraph experiments built on the membership criteria.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monpow/hypergraph.hpp"
#include "monpow/membership.hpp"
#include "monpow/monomial.hpp"
#include "monpow/rational.hpp"

namespace monpow {

struct PowerExpression {
  PowerKind kind = PowerKind::ordinary;
  int k = 1;
  MonomialIdeal base;

  /// "ord:3", "sym:5", "cl:4".
  std::string str() const;
};

/// Parses "ord:K", "sym:K" or "cl:K" (K >= 1). Throws std::invalid_argument.
PowerExpression parse_power_expression(std::string_view text, const MonomialIdeal& base);

struct ContainmentReport {
  PowerExpression lhs;
  PowerExpression rhs;
  bool holds = true;
  std::optional<ExponentVector> counterexample;
  // Invariants at the counterexample: mu for the lhs kind, rho for the rhs kind.
  std::optional<Rational> mu;
  std::optional<Rational> rho;
  std::vector<Rational> rhs_witness;
  std::size_t lhs_generators = 0;
  std::size_t generators_checked = 0;
};

/// Tests every minimal generator of lhs against the rhs membership
/// criterion; stops at the first failure. Both sides must share the base.
ContainmentReport check_containment(const PowerExpression& lhs, const PowerExpression& rhs);

struct TheoremContainmentReport {
  int r = 0;  // d(I)
  int k_max = 0;
  std::vector<ContainmentReport> checks;
};

/// For k = 1..k_max with r = d(I):
///   closure(I^{(r-1)(k-1)+ceil(k/r)}) in I^k,
///   I^(ceil(H_r k)) in closure(I^k) with H_r = 1 + 1/2 + ... + 1/r,
///   I^(rk-r+1) in I^k.
/// A failing containment throws InvariantViolation.
TheoremContainmentReport verify_containment_theorem(const MonomialIdeal& I, int k_max);

/// The two containments valid for r-partite edge ideals, k = 1..k_max:
///   closure(I^{(r-1)(k-1)+1}) in I^k and I^(ceil(r(k-1)/2)+1) in closure(I^k).
/// Requires r >= 2. A failure throws InvariantViolation.
TheoremContainmentReport verify_partite_containments(const MonomialIdeal& I, int r, int k_max);

struct ResurgenceReport {
  Rational lower_bound;  // max(1, max h/k over violations)
  Rational upper_bound;  // d(I)
  std::vector<std::pair<int, int>> violations;  // (h, k), h >= k
  int h_max = 0;
  int k_max = 0;
};

/// Records every (h, k) with k <= h <= h_max, k <= k_max and I^(h) not in I^k.
/// Pairs with h < k always fail and only support the trivial bound 1.
ResurgenceReport resurgence_bounds(const MonomialIdeal& I, int h_max, int k_max);

inline constexpr std::size_t kMaxBoxPoints = 2'000'000;

struct BoxVerdict {
  std::string property;
  bool holds = true;
  int box = 0;
  std::size_t points_checked = 0;
  std::optional<ExponentVector> violation;
  std::string detail;  // the disagreeing values at the violation
};

/// nu_a = floor(nu*_a) for all a in [0, box]^n.
BoxVerdict check_normal(const MonomialIdeal& I, int box);
/// nu_a = tau_a for all a in [0, box]^n.
BoxVerdict check_mengerian(const MonomialIdeal& I, int box);
/// tau*_a = tau_a for all a in [0, box]^n.
BoxVerdict check_fulkersonian(const MonomialIdeal& I, int box);

/// Visits [0, box]^n in lexicographic order. Throws GuardError when the box
/// has more than kMaxBoxPoints points.
void for_each_in_box(std::size_t n, int box, const std::function<bool(const ExponentVector&)>& visit);

struct ConfortiCornuejolsReport {
  bool hypothesis_holds = true;  // mongrade = height on every regular minor
  std::size_t minors_checked = 0;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> violating_minor;  // (V1, V2)
  std::optional<BoxVerdict> normality;  // gathered only when the hypothesis holds
};

ConfortiCornuejolsReport conforti_cornuejols_experiment(const MonomialIdeal& I, int box);

struct RyserReport {
  int r = 0;
  int box = 0;
  int k_max = 0;
  std::size_t points_checked = 0;
  std::optional<ExponentVector> ryser_violation;  // tau(H^a) > (r-1) nu(H^a)
  std::vector<ContainmentReport> conjectured;     // I^((r-1)(k-1)+1) in I^k
  TheoremContainmentReport proven;
  bool no_violation() const;
};

/// parts[v-1] is the 0-based part of vertex v. Throws std::invalid_argument
/// when r < 2, rank(H) > r or the partition is not valid for H.
RyserReport ryser_experiment(const Hypergraph& H, int r, const std::vector<int>& parts, int box, int k_max);

struct GapSuiteReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t bs_checked = 0;
  std::size_t ha_checked = 0;
  std::size_t tauhnu_checked = 0;
};

/// Random instances of nu* < nu + min(m, n), tau_a <= h nu_a and
/// tau(G) <= h* nu(G). A violation throws InvariantViolation.
GapSuiteReport gap_property_suite(std::size_t samples, std::uint64_t seed);

/// Triangle 1,2,3 with leaves 4..m+3 on 1, m+4..2m+3 on 2, 2m+4..3m+3 on 3.
Hypergraph triangle_with_leaves(int m);

struct HunekeReport {
  int m = 0;
  int n = 0;
  Hypergraph graph;
  MonomialIdeal ideal;  // cover ideal of the graph
  int height = 0;
  std::int64_t d = 0;
  bool ones_is_minimal_generator = false;
  std::optional<std::int64_t> symbolic_degree;  // d(I^(2)) when it could be materialized
  std::int64_t gap_lower_bound = 0;             // n - 2 d(I)
  bool ok = false;
};

/// Throws std::invalid_argument for m < 2.
HunekeReport huneke_counterexample(int m, bool materialize = true);

struct EquiReport {
  bool hypothesis_holds = false;  // every variable lies in a minimum minimal cover
  int n = 0;
  int height = 0;
  std::int64_t d = 0;
  std::int64_t f_of_d = 0;
  bool inequality_holds = false;  // n <= height * f(d)
};

EquiReport equi_condition_check(const MonomialIdeal& I, const std::function<std::int64_t(std::int64_t)>& f);

/// "identity", "affine:A,B" (f(d) = A d + B) or "table:v1,v2,..." (f(d) = v_d,
/// 1-based). Throws std::invalid_argument.
std::function<std::int64_t(std::int64_t)> parse_numeric_function(std::string_view spec);

}  // namespace monpow
