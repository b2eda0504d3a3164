#include "monpow/monomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "monpow/errors.hpp"

namespace monpow {

ExponentVector::ExponentVector(std::initializer_list<int> entries) : ExponentVector(std::vector<int>(entries)) {}

ExponentVector::ExponentVector(std::vector<int> entries) : e_(std::move(entries)) {
  for (int v : e_) {
    if (v < 0) throw std::invalid_argument("ExponentVector: negative exponent");
  }
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("ExponentVector::unit: index out of range");
  ExponentVector v(n);
  v.e_[i] = 1;
  return v;
}

ExponentVector ExponentVector::incidence(std::size_t n, const std::vector<int>& one_based) {
  ExponentVector v(n);
  for (int i : one_based) {
    if (i < 1 || static_cast<std::size_t>(i) > n) throw std::out_of_range("incidence: vertex out of range");
    v.e_[i - 1] = 1;
  }
  return v;
}

std::int64_t ExponentVector::degree() const { return std::accumulate(e_.begin(), e_.end(), std::int64_t{0}); }

std::vector<std::size_t> ExponentVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0) s.push_back(i);
  return s;
}

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

bool ExponentVector::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v <= 1; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
  if (other.e_.size() != e_.size()) throw std::invalid_argument("divides: length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

ExponentVector ExponentVector::scaled(int q) const {
  if (q < 0) throw std::invalid_argument("scaled: negative factor");
  ExponentVector v(*this);
  for (int& x : v.e_) x *= q;
  return v;
}

ExponentVector ExponentVector::shifted(std::size_t i, int delta) const {
  ExponentVector v(*this);
  v.e_.at(i) += delta;
  if (v.e_[i] < 0) throw std::invalid_argument("shifted: negative exponent");
  return v;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent sum: length mismatch");
  ExponentVector v(a);
  for (std::size_t i = 0; i < a.size(); ++i) v.e_[i] += b.e_[i];
  return v;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lcm: length mismatch");
  ExponentVector v(a);
  for (std::size_t i = 0; i < a.size(); ++i) v.e_[i] = std::max(a.e_[i], b.e_[i]);
  return v;
}

std::int64_t dot(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::int64_t{a.e_[i]} * b.e_[i];
  return s;
}

std::string ExponentVector::monomial_string() const {
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

std::string ExponentVector::tuple_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e_[i]);
  }
  return out + ")";
}

namespace {

// Folded support mask: supp(a) subset supp(b) implies mask(a) subset mask(b).
std::uint64_t support_mask(const ExponentVector& a) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) m |= std::uint64_t{1} << (i % 64);
  return m;
}

boost::dynamic_bitset<> support_bits(const ExponentVector& a) {
  boost::dynamic_bitset<> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) b.set(i);
  return b;
}

}  // namespace

std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> gens) {
  struct Item {
    std::int64_t degree;
    std::uint64_t mask;
    ExponentVector v;
  };
  std::vector<Item> items;
  items.reserve(gens.size());
  for (auto& g : gens) items.push_back({g.degree(), support_mask(g), std::move(g)});
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    return x.degree != y.degree ? x.degree < y.degree : x.v < y.v;
  });
  std::vector<Item> kept;
  for (std::size_t idx = 0; idx < items.size(); ++idx) {
    const Item& c = items[idx];
    if (idx > 0 && items[idx - 1].v == c.v) continue;
    bool redundant = false;
    for (const Item& k : kept) {
      if (k.degree >= c.degree) break;  // kept is degree-sorted
      if ((k.mask & ~c.mask) != 0) continue;
      if (k.v.divides(c.v)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(c);
  }
  std::vector<ExponentVector> out;
  out.reserve(kept.size());
  for (auto& k : kept) out.push_back(std::move(k.v));
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal MonomialIdeal::minimalize(std::size_t n, std::vector<ExponentVector> gens) {
  if (gens.empty()) throw std::invalid_argument("MonomialIdeal: no generators");
  for (const auto& g : gens) {
    if (g.size() != n) throw std::invalid_argument("MonomialIdeal: generator length differs from variable count");
    if (g.is_zero()) throw std::invalid_argument("MonomialIdeal: the unit monomial is not allowed");
  }
  return MonomialIdeal(n, minimal_elements(std::move(gens)));
}

bool MonomialIdeal::contains(const ExponentVector& a) const {
  if (a.size() != n_) throw std::invalid_argument("contains: length mismatch");
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(a); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const ExponentVector& g) { return g.is_squarefree(); });
}

IntMatrix MonomialIdeal::exponent_matrix() const {
  IntMatrix M(n_, gens_.size());
  for (std::size_t l = 0; l < gens_.size(); ++l)
    for (std::size_t i = 0; i < n_; ++i) M(i, l) = gens_[l][i];
  return M;
}

PackingProgram MonomialIdeal::packing_program(const ExponentVector& a) const {
  if (a.size() != n_) throw std::invalid_argument("exponent vector length differs from variable count");
  return PackingProgram(exponent_matrix(), a.as_int64());
}

CoveringProgram MonomialIdeal::covering_program(const ExponentVector& a) const {
  if (a.size() != n_) throw std::invalid_argument("exponent vector length differs from variable count");
  return CoveringProgram(exponent_matrix(), a.as_int64());
}

std::string MonomialIdeal::str() const {
  std::string out = "(";
  for (std::size_t l = 0; l < gens_.size(); ++l) {
    if (l) out += ", ";
    out += gens_[l].monomial_string();
  }
  return out + ")";
}

namespace {

void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J, const char* op) {
  if (I.vars() != J.vars()) {
    throw std::invalid_argument(std::string(op) + ": ideals live in rings with different variable counts");
  }
}

}  // namespace

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J, "multiply");
  std::vector<ExponentVector> prods;
  prods.reserve(I.size() * J.size());
  for (const auto& g : I.generators())
    for (const auto& h : J.generators()) prods.push_back(g + h);
  return MonomialIdeal::minimalize(I.vars(), std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& I, int k, std::size_t max_generators) {
  if (k < 1) throw std::invalid_argument("power: exponent must be >= 1");
  MonomialIdeal acc = I;
  for (int step = 1; step < k; ++step) {
    if (acc.size() * I.size() > max_generators) {
      throw GuardError("power: expansion of I^" + std::to_string(k) + " exceeds " +
                       std::to_string(max_generators) + " candidate generators");
    }
    acc = multiply(acc, I);
  }
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J, "intersect");
  std::vector<ExponentVector> cands;
  std::vector<const ExponentVector*> rest_i, rest_j;
  for (const auto& g : I.generators()) {
    if (J.contains(g)) cands.push_back(g);
    else rest_i.push_back(&g);
  }
  for (const auto& h : J.generators()) {
    if (I.contains(h)) cands.push_back(h);
    else rest_j.push_back(&h);
  }
  // A pair involving a generator already in the other ideal only yields
  // multiples of that generator.
  for (const auto* g : rest_i)
    for (const auto* h : rest_j) cands.push_back(lcm(*g, *h));
  return MonomialIdeal::minimalize(I.vars(), std::move(cands));
}

MonomialIdeal prime_power(std::size_t n, const std::vector<std::size_t>& vars, int k) {
  if (vars.empty()) throw std::invalid_argument("prime_power: empty variable set");
  if (k < 1) throw std::invalid_argument("prime_power: exponent must be >= 1");
  std::vector<ExponentVector> gens;
  ExponentVector cur(n);
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == vars.size()) {
      e[vars[pos]] = left;
      gens.emplace_back(e);
      e[vars[pos]] = 0;
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[vars[pos]] = v;
      rec(pos + 1, left - v);
    }
    e[vars[pos]] = 0;
  };
  rec(0, k);
  return MonomialIdeal::minimalize(n, std::move(gens));
}

std::int64_t max_gen_degree(const MonomialIdeal& I) {
  std::int64_t d = 0;
  for (const auto& g : I.generators()) d = std::max(d, g.degree());
  return d;
}

int mongrade(const MonomialIdeal& I) {
  const std::size_t m = I.size();
  std::vector<boost::dynamic_bitset<>> supp;
  std::size_t min_support = I.vars();
  for (const auto& g : I.generators()) {
    supp.push_back(support_bits(g));
    min_support = std::min(min_support, supp.back().count());
  }
  int best = 0;
  boost::dynamic_bitset<> used(I.vars());
  std::function<void(std::size_t, int)> rec = [&](std::size_t next, int chosen) {
    best = std::max(best, chosen);
    if (next >= m) return;
    const std::size_t free_vars = I.vars() - used.count();
    const int cap = chosen + static_cast<int>(std::min(m - next, free_vars / min_support));
    if (cap <= best) return;
    for (std::size_t l = next; l < m; ++l) {
      if (supp[l].intersects(used)) continue;
      used |= supp[l];
      rec(l + 1, chosen + 1);
      used -= supp[l];
      const std::size_t fv = I.vars() - used.count();
      if (chosen + static_cast<int>(std::min(m - l - 1, fv / min_support)) <= best) return;
    }
  };
  rec(0, 0);
  return best;
}

int height(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw std::invalid_argument("height: only squarefree ideals are supported");
  std::vector<boost::dynamic_bitset<>> supp;
  for (const auto& g : I.generators()) supp.push_back(support_bits(g));
  int best = static_cast<int>(I.vars()) + 1;
  boost::dynamic_bitset<> chosen(I.vars());
  // Classic hitting-set branching: pick an unhit edge, branch on its vertices.
  std::function<void(int)> rec = [&](int size) {
    if (size >= best) return;
    // disjoint unhit edges give a lower bound on what is still needed
    boost::dynamic_bitset<> seen(I.vars());
    int disjoint = 0;
    const boost::dynamic_bitset<>* pick = nullptr;
    for (const auto& s : supp) {
      if (s.intersects(chosen)) continue;
      if (pick == nullptr || s.count() < pick->count()) pick = &s;
      if (!s.intersects(seen)) {
        seen |= s;
        ++disjoint;
      }
    }
    if (pick == nullptr) {
      best = size;
      return;
    }
    if (size + disjoint >= best) return;
    const boost::dynamic_bitset<> edge = *pick;
    for (std::size_t v = edge.find_first(); v != boost::dynamic_bitset<>::npos; v = edge.find_next(v)) {
      chosen.set(v);
      rec(size + 1);
      chosen.reset(v);
    }
  };
  rec(0);
  return best;
}

bool naive_power_membership(const MonomialIdeal& I, int k, const ExponentVector& a) {
  return power(I, k).contains(a);
}

}  // namespace monpow
