#include "monpow/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "monpow/errors.hpp"

namespace monpow {

namespace {

using Bits = boost::dynamic_bitset<>;

Bits to_bits(int n, const Edge& e) {
  Bits b(static_cast<std::size_t>(n) + 1);
  for (int v : e) b.set(static_cast<std::size_t>(v));
  return b;
}

Edge to_edge(const Bits& b) {
  Edge e;
  for (auto v = b.find_first(); v != Bits::npos; v = b.find_next(v)) e.push_back(static_cast<int>(v));
  return e;
}

bool is_subset(const Edge& a, const Edge& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// Inclusion-minimal members, bitset version; also drops duplicates.
std::vector<Bits> minimal_bits(std::vector<Bits> sets) {
  std::sort(sets.begin(), sets.end(), [](const Bits& x, const Bits& y) {
    const auto cx = x.count(), cy = y.count();
    return cx != cy ? cx < cy : x < y;
  });
  std::vector<Bits> kept;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0 && sets[i] == sets[i - 1]) continue;
    bool redundant = false;
    for (const auto& k : kept) {
      if (k.is_subset_of(sets[i])) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(sets[i]);
  }
  return kept;
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (e.empty()) throw std::invalid_argument("Hypergraph: empty edge");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("Hypergraph: repeated vertex in an edge");
    }
    if (e.front() < 1 || e.back() > n) {
      throw std::invalid_argument("Hypergraph: vertex outside 1.." + std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("Hypergraph: duplicate edge");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i != j && is_subset(edges[i], edges[j])) {
        throw std::invalid_argument("Hypergraph: edges are not an antichain (not simple)");
      }
    }
  }
  edges_ = std::move(edges);
}

std::vector<Edge> minimal_sets(std::vector<Edge> sets) {
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(sets.begin(), sets.end(), [](const Edge& x, const Edge& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Edge> kept;
  for (const auto& s : sets) {
    if (std::none_of(kept.begin(), kept.end(), [&](const Edge& k) { return is_subset(k, s); })) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

Hypergraph Hypergraph::from_minimal(int n, std::vector<Edge> edges) {
  return Hypergraph(n, minimal_sets(std::move(edges)));
}

int Hypergraph::rank() const {
  std::size_t r = 0;
  for (const auto& e : edges_) r = std::max(r, e.size());
  return static_cast<int>(r);
}

IntMatrix Hypergraph::incidence_matrix() const {
  IntMatrix M(static_cast<std::size_t>(n_), edges_.size());
  for (std::size_t l = 0; l < edges_.size(); ++l)
    for (int v : edges_[l]) M(static_cast<std::size_t>(v - 1), l) = 1;
  return M;
}

MonomialIdeal edge_ideal(const Hypergraph& H) {
  if (H.empty()) throw std::invalid_argument("edge_ideal: hypergraph has no edges (zero ideal)");
  std::vector<ExponentVector> gens;
  for (const auto& e : H.edges()) gens.push_back(ExponentVector::incidence(static_cast<std::size_t>(H.vertices()), e));
  return MonomialIdeal::minimalize(static_cast<std::size_t>(H.vertices()), std::move(gens));
}

Hypergraph ideal_to_hypergraph(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw std::invalid_argument("ideal_to_hypergraph: ideal is not squarefree");
  std::vector<Edge> edges;
  for (const auto& g : I.generators()) {
    Edge e;
    for (auto i : g.support()) e.push_back(static_cast<int>(i) + 1);
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(I.vars()), std::move(edges));
}

Hypergraph blocker(const Hypergraph& H) {
  if (H.empty()) throw std::invalid_argument("blocker: an edgeless hypergraph is blocked by the empty set");
  const int n = H.vertices();
  std::vector<Edge> order = H.edges();
  std::stable_sort(order.begin(), order.end(), [](const Edge& x, const Edge& y) { return x.size() < y.size(); });
  std::vector<Bits> partial{Bits(static_cast<std::size_t>(n) + 1)};
  for (const auto& e : order) {
    const Bits eb = to_bits(n, e);
    std::vector<Bits> next;
    next.reserve(partial.size() * 2);
    for (const auto& t : partial) {
      if (t.intersects(eb)) {
        next.push_back(t);
        continue;
      }
      for (int v : e) {
        Bits ext = t;
        ext.set(static_cast<std::size_t>(v));
        next.push_back(std::move(ext));
      }
    }
    partial = minimal_bits(std::move(next));
  }
  std::vector<Edge> edges;
  edges.reserve(partial.size());
  for (const auto& t : partial) edges.push_back(to_edge(t));
  return Hypergraph(n, std::move(edges));
}

ParallelHypergraph parallelization(const Hypergraph& H, const ExponentVector& a) {
  if (a.size() != static_cast<std::size_t>(H.vertices())) {
    throw std::invalid_argument("parallelization: multiplicity vector length differs from vertex count");
  }
  ParallelHypergraph P;
  P.base = H;
  P.multiplicity = a;
  std::vector<int> offset(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    offset[i + 1] = offset[i] + a[i];
    for (int j = 1; j <= a[i]; ++j) P.labels.emplace_back(static_cast<int>(i) + 1, j);
  }
  const int s = offset.back();
  std::vector<Edge> edges;
  for (const auto& F : H.edges()) {
    if (std::any_of(F.begin(), F.end(), [&](int v) { return a[static_cast<std::size_t>(v - 1)] == 0; })) continue;
    Edge cur(F.size());
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == F.size()) {
        edges.push_back(cur);
        return;
      }
      const auto i = static_cast<std::size_t>(F[pos] - 1);
      for (int j = 1; j <= a[i]; ++j) {
        cur[pos] = offset[i] + j;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  P.graph = Hypergraph(s, std::move(edges));
  return P;
}

Minor minor(const Hypergraph& H, const std::vector<int>& ones, const std::vector<int>& zeros) {
  const int n = H.vertices();
  std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);  // 0 free, 1 contracted, 2 deleted
  for (int v : ones) {
    if (v < 1 || v > n) throw std::invalid_argument("minor: vertex out of range");
    state[static_cast<std::size_t>(v)] = 1;
  }
  for (int v : zeros) {
    if (v < 1 || v > n) throw std::invalid_argument("minor: vertex out of range");
    if (state[static_cast<std::size_t>(v)] == 1) throw std::invalid_argument("minor: V1 and V2 must be disjoint");
    state[static_cast<std::size_t>(v)] = 2;
  }
  Minor out;
  std::vector<int> relabel(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    if (state[static_cast<std::size_t>(v)] != 0) continue;
    out.vertex_map.push_back(v);
    relabel[static_cast<std::size_t>(v)] = static_cast<int>(out.vertex_map.size());
  }
  std::vector<Edge> edges;
  bool any = false;
  for (const auto& F : H.edges()) {
    if (std::any_of(F.begin(), F.end(), [&](int v) { return state[static_cast<std::size_t>(v)] == 2; })) continue;
    any = true;
    Edge e;
    for (int v : F)
      if (state[static_cast<std::size_t>(v)] == 0) e.push_back(relabel[static_cast<std::size_t>(v)]);
    if (e.empty()) {
      out.kind = MinorKind::unit;
      out.graph = Hypergraph(static_cast<int>(out.vertex_map.size()), {});
      return out;
    }
    edges.push_back(std::move(e));
  }
  out.kind = any ? MinorKind::regular : MinorKind::zero;
  out.graph = Hypergraph::from_minimal(static_cast<int>(out.vertex_map.size()), std::move(edges));
  return out;
}

std::int64_t nu(const Hypergraph& H) {
  if (H.empty()) return 0;
  const std::vector<std::int64_t> ones(static_cast<std::size_t>(H.vertices()), 1);
  return solve_ilp_packing(PackingProgram(H.incidence_matrix(), ones)).value;
}

std::int64_t tau(const Hypergraph& H) {
  if (H.empty()) return 0;
  const std::vector<std::int64_t> ones(static_cast<std::size_t>(H.vertices()), 1);
  return solve_ilp_covering(CoveringProgram(H.incidence_matrix(), ones)).value;
}

Rational nu_star(const Hypergraph& H) {
  if (H.empty()) return Rational(0);
  const std::vector<std::int64_t> ones(static_cast<std::size_t>(H.vertices()), 1);
  return solve_lp_packing(PackingProgram(H.incidence_matrix(), ones)).value;
}

Rational tau_star(const Hypergraph& H) {
  if (H.empty()) return Rational(0);
  const std::vector<std::int64_t> ones(static_cast<std::size_t>(H.vertices()), 1);
  return solve_lp_covering(CoveringProgram(H.incidence_matrix(), ones)).value;
}

bool is_konig(const Hypergraph& H) { return nu(H) == tau(H); }

PackingPropertyReport has_packing_property(const Hypergraph& H) {
  const int n = H.vertices();
  if (n > kMaxMinorVertices) {
    throw GuardError("packing property: 3^" + std::to_string(n) + " minors exceeds the guard of 3^" +
                     std::to_string(kMaxMinorVertices));
  }
  PackingPropertyReport rep;
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<int> ones, zeros;
    for (int v = 1; v <= n; ++v) {
      if (state[static_cast<std::size_t>(v - 1)] == 1) ones.push_back(v);
      if (state[static_cast<std::size_t>(v - 1)] == 2) zeros.push_back(v);
    }
    const Minor mi = minor(H, ones, zeros);
    if (mi.kind == MinorKind::unit) {
      ++rep.unit_skipped;
    } else if (mi.kind == MinorKind::zero) {
      ++rep.zero_skipped;
    } else {
      ++rep.minors_checked;
      if (!is_konig(mi.graph)) {
        rep.holds = false;
        rep.violation = std::make_pair(ones, zeros);
        return rep;
      }
    }
    // next ternary counter value
    int pos = 0;
    while (pos < n && state[static_cast<std::size_t>(pos)] == 2) state[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
    ++state[static_cast<std::size_t>(pos)];
  }
  return rep;
}

CloneDecomposition clone_decomposition(const Hypergraph& G) {
  const int n = G.vertices();
  // u and v are clones exactly when {F - u : u in F} = {F - v : v in F}.
  std::vector<std::set<Edge>> link(static_cast<std::size_t>(n) + 1);
  for (const auto& F : G.edges()) {
    for (int u : F) {
      Edge rest;
      for (int w : F)
        if (w != u) rest.push_back(w);
      link[static_cast<std::size_t>(u)].insert(std::move(rest));
    }
  }
  std::map<std::set<Edge>, std::size_t> class_of_link;
  CloneDecomposition out;
  std::vector<int> class_index(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    auto [it, inserted] = class_of_link.try_emplace(link[static_cast<std::size_t>(v)], out.classes.size());
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(v);
    class_index[static_cast<std::size_t>(v)] = static_cast<int>(it->second) + 1;
  }
  std::set<Edge> reduced_edges;
  for (const auto& F : G.edges()) {
    Edge e;
    for (int u : F) e.push_back(class_index[static_cast<std::size_t>(u)]);
    std::sort(e.begin(), e.end());
    reduced_edges.insert(std::move(e));
  }
  out.reduced = Hypergraph(static_cast<int>(out.classes.size()), {reduced_edges.begin(), reduced_edges.end()});
  std::vector<int> sizes;
  for (const auto& c : out.classes) sizes.push_back(static_cast<int>(c.size()));
  out.multiplicities = ExponentVector(std::move(sizes));
  return out;
}

bool is_r_partite(const Hypergraph& H, int r, const std::vector<int>& parts) {
  if (parts.size() != static_cast<std::size_t>(H.vertices())) {
    throw std::invalid_argument("is_r_partite: partition must assign every vertex");
  }
  for (int p : parts) {
    if (p < 0 || p >= r) throw std::invalid_argument("is_r_partite: part index outside 0..r-1");
  }
  for (const auto& F : H.edges()) {
    std::set<int> seen;
    for (int v : F) {
      if (!seen.insert(parts[static_cast<std::size_t>(v - 1)]).second) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> find_r_partition(const Hypergraph& H, int r) {
  const int n = H.vertices();
  if (n > kMaxPartitionSearchVertices) {
    throw GuardError("partition search: " + std::to_string(n) + " vertices exceeds the guard of " +
                     std::to_string(kMaxPartitionSearchVertices) + "; supply a partition instead");
  }
  if (r < 1) return std::nullopt;
  std::vector<std::vector<const Edge*>> incident(static_cast<std::size_t>(n) + 1);
  for (const auto& F : H.edges())
    for (int v : F) incident[static_cast<std::size_t>(v)].push_back(&F);
  std::vector<int> part(static_cast<std::size_t>(n) + 1, -1);
  std::function<bool(int, int)> rec = [&](int v, int used) -> bool {
    if (v > n) return true;
    // parts are interchangeable: only open one new part at a time
    for (int p = 0; p < std::min(r, used + 1); ++p) {
      bool ok = true;
      for (const Edge* F : incident[static_cast<std::size_t>(v)]) {
        for (int w : *F) {
          if (w < v && part[static_cast<std::size_t>(w)] == p) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) continue;
      part[static_cast<std::size_t>(v)] = p;
      if (rec(v + 1, std::max(used, p + 1))) return true;
    }
    part[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  if (!rec(1, 0)) return std::nullopt;
  return std::vector<int>(part.begin() + 1, part.end());
}

int max_min_cover_size(const Hypergraph& H) {
  if (H.empty()) return 0;
  return blocker(H).rank();
}

int max_min_cover_size_reduced(const Hypergraph& H) { return max_min_cover_size(clone_decomposition(H).reduced); }

}  // namespace monpow
