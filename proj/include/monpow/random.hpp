#pragma once

// Seeded random instances for experiments and property suites.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "monpow/hypergraph.hpp"
#include "monpow/monomial.hpp"
#include "monpow/optim.hpp"

namespace monpow {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);

/// Entries in [0, max_entry], no all-zero column.
IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_entry);
std::vector<std::int64_t> random_capacity(Rng& rng, std::size_t n, int max_entry);
ExponentVector random_exponent(Rng& rng, std::size_t n, int max_entry);

/// Simple hypergraph on n vertices with 1..max_edges edges of size 1..max_rank.
Hypergraph random_hypergraph(Rng& rng, int n, int max_edges, int max_rank);
/// Simple graph on n >= 2 vertices, each pair an edge with probability p; never edgeless.
Hypergraph random_graph(Rng& rng, int n, double p);
/// Hypergraph whose edges pick at most one vertex from each part;
/// parts[v-1] receives the part of v.
Hypergraph random_partite_hypergraph(Rng& rng, int r, int part_size, int max_edges, std::vector<int>& parts);

}  // namespace monpow
