#include "monpow/analysis.hpp"

#include <charconv>
#include <map>
#include <memory>
#include <stdexcept>

#include "monpow/errors.hpp"

namespace monpow {

std::string PowerExpression::str() const {
  const char* tag = kind == PowerKind::ordinary ? "ord" : kind == PowerKind::symbolic ? "sym" : "cl";
  return std::string(tag) + ":" + std::to_string(k);
}

PowerExpression parse_power_expression(std::string_view text, const MonomialIdeal& base) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("power expression '" + std::string(text) + "' must look like ord:K, sym:K or cl:K");
  }
  const std::string_view tag = text.substr(0, colon);
  const std::string_view num = text.substr(colon + 1);
  PowerKind kind;
  if (tag == "ord") kind = PowerKind::ordinary;
  else if (tag == "sym") kind = PowerKind::symbolic;
  else if (tag == "cl") kind = PowerKind::closure;
  else throw std::invalid_argument("unknown power kind '" + std::string(tag) + "'");
  int k = 0;
  const auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
  if (ec != std::errc() || end != num.data() + num.size() || k < 1) {
    throw std::invalid_argument("power order in '" + std::string(text) + "' must be an integer >= 1");
  }
  if (kind == PowerKind::symbolic && !base.is_squarefree()) {
    throw std::invalid_argument("symbolic powers are supported only for squarefree ideals");
  }
  return {kind, k, base};
}

namespace {

// Materialized lhs generators and the cover data of one base ideal, shared
// across the containments of a single report.
class ContainmentContext {
 public:
  explicit ContainmentContext(const MonomialIdeal& I) : I_(I) {}

  const SquarefreeIdeal& squarefree() {
    if (!sq_) sq_ = std::make_unique<SquarefreeIdeal>(I_);
    return *sq_;
  }

  const MonomialIdeal& generators(PowerKind kind, int k) {
    const auto key = std::make_pair(static_cast<int>(kind), k);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    switch (kind) {
      case PowerKind::ordinary:
        it = cache_.emplace(key, power(I_, k)).first;
        break;
      case PowerKind::symbolic:
        it = cache_.emplace(key, symbolic_power(squarefree(), k).generators).first;
        break;
      case PowerKind::closure:
        it = cache_.emplace(key, closure_power_generators(I_, k)).first;
        break;
    }
    return it->second;
  }

  MembershipVerdict decide(PowerKind kind, int k, const ExponentVector& a) {
    if (kind == PowerKind::symbolic) return in_symbolic_power(squarefree(), k, a);
    return membership(kind, I_, k, a);
  }

  Rational invariant(PowerKind kind, const ExponentVector& a) {
    switch (kind) {
      case PowerKind::ordinary: return Rational(nu_a(I_, a));
      case PowerKind::closure: return nu_star_a(I_, a);
      case PowerKind::symbolic: return Rational(squarefree().tau_by_covers(a));
    }
    return {};
  }

  ContainmentReport check(const PowerExpression& lhs, const PowerExpression& rhs) {
    ContainmentReport rep{lhs, rhs, true, std::nullopt, std::nullopt, std::nullopt, {}, 0, 0};
    const MonomialIdeal& gens = generators(lhs.kind, lhs.k);
    rep.lhs_generators = gens.size();
    for (const auto& a : gens.generators()) {
      ++rep.generators_checked;
      MembershipVerdict v = decide(rhs.kind, rhs.k, a);
      if (!v.member) {
        rep.holds = false;
        rep.counterexample = a;
        rep.mu = invariant(lhs.kind, a);
        rep.rho = v.value;
        rep.rhs_witness = std::move(v.witness);
        break;
      }
    }
    return rep;
  }

  ContainmentReport check(PowerKind lk, int lo, PowerKind rk, int ro) {
    return check(PowerExpression{lk, lo, I_}, PowerExpression{rk, ro, I_});
  }

 private:
  const MonomialIdeal& I_;
  std::unique_ptr<SquarefreeIdeal> sq_;
  std::map<std::pair<int, int>, MonomialIdeal> cache_;
};

void require_theorem(const ContainmentReport& rep, const char* name) {
  if (rep.holds) return;
  throw InvariantViolation(std::string(name) + ": " + rep.lhs.str() + " is not contained in " + rep.rhs.str() +
                           "; generator " + rep.counterexample->tuple_string() + " fails");
}

}  // namespace

ContainmentReport check_containment(const PowerExpression& lhs, const PowerExpression& rhs) {
  if (!(lhs.base == rhs.base)) throw std::invalid_argument("containment: the two sides have different base ideals");
  ContainmentContext ctx(lhs.base);
  return ctx.check(lhs, rhs);
}

TheoremContainmentReport verify_containment_theorem(const MonomialIdeal& I, int k_max) {
  if (!I.is_squarefree()) throw std::invalid_argument("containment theorem: the ideal must be squarefree");
  if (k_max < 1) throw std::invalid_argument("containment theorem: k_max must be >= 1");
  const int r = static_cast<int>(max_gen_degree(I));
  Rational harmonic(0);
  for (int i = 1; i <= r; ++i) harmonic += Rational(1, i);
  TheoremContainmentReport rep{r, k_max, {}};
  ContainmentContext ctx(I);
  for (int k = 1; k <= k_max; ++k) {
    const int e1 = (r - 1) * (k - 1) + (k + r - 1) / r;
    const int e2 = static_cast<int>((harmonic * Rational(k)).ceil_int());
    const int e3 = r * k - r + 1;
    rep.checks.push_back(ctx.check(PowerKind::closure, e1, PowerKind::ordinary, k));
    require_theorem(rep.checks.back(), "containment theorem (i)");
    rep.checks.push_back(ctx.check(PowerKind::symbolic, e2, PowerKind::closure, k));
    require_theorem(rep.checks.back(), "containment theorem (ii)");
    rep.checks.push_back(ctx.check(PowerKind::symbolic, e3, PowerKind::ordinary, k));
    require_theorem(rep.checks.back(), "containment theorem (iii)");
  }
  return rep;
}

TheoremContainmentReport verify_partite_containments(const MonomialIdeal& I, int r, int k_max) {
  if (!I.is_squarefree()) throw std::invalid_argument("partite containments: the ideal must be squarefree");
  if (r < 2) throw std::invalid_argument("partite containments: r must be >= 2");
  if (k_max < 1) throw std::invalid_argument("partite containments: k_max must be >= 1");
  TheoremContainmentReport rep{r, k_max, {}};
  ContainmentContext ctx(I);
  for (int k = 1; k <= k_max; ++k) {
    const int e1 = (r - 1) * (k - 1) + 1;
    const int e2 = (r * (k - 1) + 1) / 2 + 1;
    rep.checks.push_back(ctx.check(PowerKind::closure, e1, PowerKind::ordinary, k));
    require_theorem(rep.checks.back(), "partite containment (i)");
    rep.checks.push_back(ctx.check(PowerKind::symbolic, e2, PowerKind::closure, k));
    require_theorem(rep.checks.back(), "partite containment (ii)");
  }
  return rep;
}

ResurgenceReport resurgence_bounds(const MonomialIdeal& I, int h_max, int k_max) {
  if (!I.is_squarefree()) throw std::invalid_argument("resurgence: the ideal must be squarefree");
  if (h_max < 1 || k_max < 1) throw std::invalid_argument("resurgence: h_max and k_max must be >= 1");
  ResurgenceReport rep;
  rep.h_max = h_max;
  rep.k_max = k_max;
  rep.upper_bound = Rational(max_gen_degree(I));
  rep.lower_bound = Rational(1);
  ContainmentContext ctx(I);
  for (int k = 1; k <= k_max; ++k) {
    // I^(h+1) lies in I^(h), so the first h that works settles all larger h.
    for (int h = k; h <= h_max; ++h) {
      if (ctx.check(PowerKind::symbolic, h, PowerKind::ordinary, k).holds) break;
      rep.violations.emplace_back(h, k);
      const Rational q(h, k);
      if (q > rep.lower_bound) rep.lower_bound = q;
    }
  }
  if (rep.lower_bound > rep.upper_bound) {
    throw InvariantViolation("resurgence: lower bound " + rep.lower_bound.str() + " exceeds d(I) = " +
                             rep.upper_bound.str());
  }
  return rep;
}

}  // namespace monpow
