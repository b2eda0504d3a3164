#include "monpow/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace monpow {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_entry) {
  if (rows == 0 || cols == 0 || max_entry < 1) throw std::invalid_argument("random_matrix: empty shape");
  IntMatrix M(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    bool nonzero = false;
    while (!nonzero) {
      for (std::size_t i = 0; i < rows; ++i) {
        M(i, j) = uniform_int(rng, 0, max_entry);
        nonzero = nonzero || M(i, j) != 0;
      }
    }
  }
  return M;
}

std::vector<std::int64_t> random_capacity(Rng& rng, std::size_t n, int max_entry) {
  std::vector<std::int64_t> a(n);
  for (auto& x : a) x = uniform_int(rng, 0, max_entry);
  return a;
}

ExponentVector random_exponent(Rng& rng, std::size_t n, int max_entry) {
  std::vector<int> e(n);
  for (auto& x : e) x = uniform_int(rng, 0, max_entry);
  return ExponentVector(std::move(e));
}

Hypergraph random_hypergraph(Rng& rng, int n, int max_edges, int max_rank) {
  if (n < 1 || max_edges < 1 || max_rank < 1) throw std::invalid_argument("random_hypergraph: bad shape");
  const int count = uniform_int(rng, 1, max_edges);
  std::vector<Edge> sets;
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v + 1;
  for (int e = 0; e < count; ++e) {
    std::shuffle(verts.begin(), verts.end(), rng);
    const int size = uniform_int(rng, 1, std::min(max_rank, n));
    Edge edge(verts.begin(), verts.begin() + size);
    std::sort(edge.begin(), edge.end());
    sets.push_back(std::move(edge));
  }
  return Hypergraph::from_minimal(n, std::move(sets));
}

Hypergraph random_graph(Rng& rng, int n, double p) {
  if (n < 2) throw std::invalid_argument("random_graph: need two vertices");
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  if (edges.empty()) {
    const int i = uniform_int(rng, 1, n - 1);
    edges.push_back({i, uniform_int(rng, i + 1, n)});
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_partite_hypergraph(Rng& rng, int r, int part_size, int max_edges, std::vector<int>& parts) {
  if (r < 1 || part_size < 1 || max_edges < 1) throw std::invalid_argument("random_partite_hypergraph: bad shape");
  const int n = r * part_size;
  parts.assign(static_cast<std::size_t>(n), 0);
  for (int v = 1; v <= n; ++v) parts[static_cast<std::size_t>(v - 1)] = (v - 1) / part_size;
  const int count = uniform_int(rng, 1, max_edges);
  std::vector<Edge> sets;
  for (int e = 0; e < count; ++e) {
    Edge edge;
    for (int p = 0; p < r; ++p) {
      const int pick = uniform_int(rng, 0, part_size);  // part_size means "skip this part"
      if (pick < part_size) edge.push_back(p * part_size + pick + 1);
    }
    if (edge.empty()) edge.push_back(uniform_int(rng, 1, n));
    sets.push_back(std::move(edge));
  }
  return Hypergraph::from_minimal(n, std::move(sets));
}

}  // namespace monpow
