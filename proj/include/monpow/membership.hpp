#pragma once

// Membership of x^a in I^k, in the integral closure of I^k, and in the
// symbolic power I^(k), decided by the packing/covering invariants of the
// exponent matrix of I:
//   x^a in I^k          iff  nu_a(I)  >= k
//   x^a in closure(I^k) iff  nu*_a(I) >= k
//   x^a in I^(k)        iff  tau_a(I) >= k   (I squarefree)

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monpow/hypergraph.hpp"
#include "monpow/monomial.hpp"
#include "monpow/optim.hpp"
#include "monpow/rational.hpp"

namespace monpow {

std::int64_t nu_a(const MonomialIdeal& I, const ExponentVector& a);
Rational nu_star_a(const MonomialIdeal& I, const ExponentVector& a);
std::int64_t tau_a(const MonomialIdeal& I, const ExponentVector& a);
Rational tau_star_a(const MonomialIdeal& I, const ExponentVector& a);

/// min over minimal covers F of a . e_F. Squarefree only.
std::int64_t tau_a_via_blocker(const MonomialIdeal& I, const ExponentVector& a);

/// A squarefree ideal together with its minimal primes, computed once at
/// construction. Immutable afterwards.
class SquarefreeIdeal {
 public:
  /// Throws std::invalid_argument for non-squarefree I.
  explicit SquarefreeIdeal(MonomialIdeal I);

  const MonomialIdeal& ideal() const { return ideal_; }
  const Hypergraph& hypergraph() const { return hypergraph_; }
  /// Minimal covers of the hypergraph, i.e. the supports of the minimal primes.
  const Hypergraph& covers() const { return covers_; }
  /// tau_a by the minimal-cover formula.
  std::int64_t tau_by_covers(const ExponentVector& a) const;

 private:
  MonomialIdeal ideal_;
  Hypergraph hypergraph_;
  Hypergraph covers_;
};

enum class PowerKind { ordinary, closure, symbolic };

const char* to_string(PowerKind k);

struct MembershipVerdict {
  bool member = false;
  Rational value;        // nu_a, nu*_a or tau_a
  int threshold = 0;     // k
  std::vector<Rational> witness;  // y for ordinary/closure, z for symbolic
};

MembershipVerdict in_ordinary_power(const MonomialIdeal& I, int k, const ExponentVector& a);
MembershipVerdict in_integral_closure(const MonomialIdeal& I, int k, const ExponentVector& a);
/// Throws std::invalid_argument for non-squarefree I.
MembershipVerdict in_symbolic_power(const MonomialIdeal& I, int k, const ExponentVector& a);
/// Same, and cross-checks tau_a against the cover formula; disagreement
/// throws InvariantViolation.
MembershipVerdict in_symbolic_power(const SquarefreeIdeal& I, int k, const ExponentVector& a);

MembershipVerdict membership(PowerKind kind, const MonomialIdeal& I, int k, const ExponentVector& a);

struct SymbolicPower {
  MonomialIdeal base;
  int k = 1;
  MonomialIdeal generators;
};

inline constexpr std::size_t kDefaultGeneratorCap = 500'000;

/// I^(k) as the intersection of P_F^k over the minimal covers F.
/// Throws GuardError when an intermediate result exceeds max_generators.
SymbolicPower symbolic_power(const SquarefreeIdeal& I, int k, std::size_t max_generators = kDefaultGeneratorCap);
SymbolicPower symbolic_power(const MonomialIdeal& I, int k, std::size_t max_generators = kDefaultGeneratorCap);

/// Minimal elements of an upward-closed set of exponent vectors inside the
/// box prod [0, bound_i]. For every prefix (all coordinates but the last)
/// the least admissible last coordinate is found by bisection; a point is
/// minimal iff no predecessor prefix admits the same last coordinate.
/// Throws GuardError when the prefix box exceeds max_prefixes.
using UpsetMembership = std::function<bool(const std::vector<int>& point)>;
std::vector<ExponentVector> minimal_elements_of_upset(const std::vector<int>& bounds,
                                                      const UpsetMembership& member,
                                                      std::size_t max_prefixes);

inline constexpr std::size_t kDefaultBoxCap = 4'000'000;

/// Minimal generators of closure(I^k): the minimal a with nu*_a(I) >= k in
/// the box a_j <= k * max_l (a_l)_j. Throws GuardError when the scanned
/// prefix box exceeds max_prefixes.
MonomialIdeal closure_power_generators(const MonomialIdeal& I, int k, std::size_t max_prefixes = kDefaultBoxCap);

/// I^(k) by the same box scan over tau_a (box [0, k]^n); an independent
/// route to symbolic_power.
MonomialIdeal symbolic_power_by_scan(const SquarefreeIdeal& I, int k, std::size_t max_prefixes = kDefaultBoxCap);

struct ScalingResult {
  Rational value;       // nu_{qa}(I) / q
  std::int64_t q = 1;   // lcm of the LP witness denominators
  std::int64_t nu_qa = 0;
};

ScalingResult nu_star_via_scaling(const MonomialIdeal& I, const ExponentVector& a);

/// d(I^(k)).
std::int64_t symbolic_max_gen_degree(const SquarefreeIdeal& I, int k);

struct GeneratorLemmaEntry {
  ExponentVector generator;
  std::int64_t tau = 0;             // tau_a(I); must equal k
  int parallel_height = 0;          // height of I_a; must equal k
  bool every_vertex_in_min_cover = false;
  bool ok = false;
};

struct GeneratorLemmaReport {
  int k = 1;
  std::vector<GeneratorLemmaEntry> entries;
  bool all_ok = true;
};

/// For every minimal generator a of I^(k): tau_a(I) = k, height(I_a) = k,
/// and every vertex of H^a lies in a minimum-size minimal cover.
GeneratorLemmaReport check_generator_lemmas(const SquarefreeIdeal& I, int k);

/// x^a is a minimal generator of I^(k), decided by membership alone.
bool is_minimal_symbolic_generator(const SquarefreeIdeal& I, int k, const ExponentVector& a);

}  // namespace monpow
