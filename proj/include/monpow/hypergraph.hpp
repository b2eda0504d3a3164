#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "monpow/monomial.hpp"
#include "monpow/rational.hpp"

namespace monpow {

/// Sorted set of 1-based vertex labels.
using Edge = std::vector<int>;

/// Simple hypergraph (clutter) on the vertices 1..n. Edges are nonempty,
/// pairwise incomparable under inclusion, and kept in canonical order
/// (sorted by their sorted vertex lists).
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws std::invalid_argument if an edge is empty, out of range, or
  /// the edge set is not an antichain. Duplicate edges are rejected.
  Hypergraph(int n, std::vector<Edge> edges);
  /// Keeps only the inclusion-minimal edges. Empty edges are rejected.
  static Hypergraph from_minimal(int n, std::vector<Edge> edges);

  int vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  int rank() const;

  /// n x m matrix whose columns are the edge incidence vectors.
  IntMatrix incidence_matrix() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Inclusion-minimal members of a family of vertex sets (may include the empty set).
std::vector<Edge> minimal_sets(std::vector<Edge> sets);

/// Edge ideal I(H). Throws if H has no edges.
MonomialIdeal edge_ideal(const Hypergraph& H);
/// Inverse of edge_ideal. Throws std::invalid_argument for non-squarefree I.
Hypergraph ideal_to_hypergraph(const MonomialIdeal& I);

/// H^v: the minimal transversals of H, by incremental edge-by-edge extension.
Hypergraph blocker(const Hypergraph& H);

/// H^a. Vertex (i, j) means copy j of base vertex i, both 1-based; vertices
/// are numbered 1..s in order (i asc, j asc).
struct ParallelHypergraph {
  Hypergraph base;
  ExponentVector multiplicity;
  std::vector<std::pair<int, int>> labels;  // labels[v-1] = (i, j)
  Hypergraph graph;

  int project(int v) const { return labels.at(static_cast<std::size_t>(v - 1)).first; }
};

ParallelHypergraph parallelization(const Hypergraph& H, const ExponentVector& a);

enum class MinorKind {
  regular,  // at least one edge, none empty
  unit,     // some edge lies inside V1: the minor's edge ideal is the unit ideal
  zero,     // no edge avoids V2: the minor's edge ideal is zero
};

struct Minor {
  MinorKind kind = MinorKind::regular;
  Hypergraph graph;            // relabeled to 1..n'; empty unless regular
  std::vector<int> vertex_map; // vertex_map[v-1] = original label
};

/// Minor with V1 set to one (contracted) and V2 set to zero (deleted).
/// Throws std::invalid_argument when V1 and V2 overlap.
Minor minor(const Hypergraph& H, const std::vector<int>& ones, const std::vector<int>& zeros);

/// Matching and covering numbers; an edgeless hypergraph has all four equal to 0.
std::int64_t nu(const Hypergraph& H);
std::int64_t tau(const Hypergraph& H);
Rational nu_star(const Hypergraph& H);
Rational tau_star(const Hypergraph& H);

bool is_konig(const Hypergraph& H);

struct PackingPropertyReport {
  bool holds = true;
  std::size_t minors_checked = 0;
  std::size_t unit_skipped = 0;  // minors containing the empty edge
  std::size_t zero_skipped = 0;  // minors with no edge
  std::optional<std::pair<std::vector<int>, std::vector<int>>> violation;  // (V1, V2)
};

inline constexpr int kMaxMinorVertices = 12;

/// Every regular (V1, V2) minor is Konig. Throws GuardError for n > 12.
PackingPropertyReport has_packing_property(const Hypergraph& H);

struct CloneDecomposition {
  std::vector<std::vector<int>> classes;  // sorted classes, ordered by least member
  Hypergraph reduced;                     // vertex c is classes[c-1]
  ExponentVector multiplicities;          // class sizes
};

CloneDecomposition clone_decomposition(const Hypergraph& G);

inline constexpr int kMaxPartitionSearchVertices = 12;

/// parts[v-1] is the part (0-based) of vertex v.
bool is_r_partite(const Hypergraph& H, int r, const std::vector<int>& parts);
/// Searches for a partition; returns it if one exists. Throws GuardError
/// for more than kMaxPartitionSearchVertices vertices.
std::optional<std::vector<int>> find_r_partition(const Hypergraph& H, int r);

/// h: maximum size of a minimal cover.
int max_min_cover_size(const Hypergraph& H);
/// h*: the same quantity for the reduced clone-free hypergraph.
int max_min_cover_size_reduced(const Hypergraph& H);

}  // namespace monpow
