#pragma once

// Text formats.
//
// Ideal document:       {"vars": n, "gens": [[e_1, ..., e_n], ...]}
//   A generator may also be a monomial string:
//     monomial := "1" | factor ("*" factor)*
//     factor   := "x" INDEX ["^" EXPONENT]     INDEX in 1..n, EXPONENT >= 0
//   Repeated factors multiply ("x1*x1" is x1^2). Blanks are ignored.
//   "vars" may be omitted when every generator is a string; n is then the
//   largest index used.
//
// Hypergraph document:  {"vertices": n, "edges": [[1, 2], [3, 4], ...]}
//   Vertices are 1-based; the edges must form an antichain.
//
// Vectors on the command line: "3,2,1"; vertex sets: "1,4" (empty string
// for the empty set).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monpow/hypergraph.hpp"
#include "monpow/monomial.hpp"

namespace monpow {

/// Throws std::invalid_argument on malformed input.
ExponentVector parse_monomial(std::string_view text, std::size_t n);
/// Largest variable index mentioned in a monomial string (0 for "1").
std::size_t max_variable_index(std::string_view text);

MonomialIdeal parse_ideal_json(std::string_view text);
std::string emit_ideal_json(const MonomialIdeal& I);

Hypergraph parse_hypergraph_json(std::string_view text);
std::string emit_hypergraph_json(const Hypergraph& H);

/// Comma- or whitespace-separated monomial strings, e.g. "x1*x2, x2*x3".
/// When vars is absent the largest index decides the ring.
MonomialIdeal parse_generator_list(std::string_view text, std::optional<std::size_t> vars);

/// "3,2,1" -> (3,2,1). Throws when the length differs from n (if n is given).
ExponentVector parse_vector(std::string_view text, std::optional<std::size_t> n = std::nullopt);
/// "1,4" -> {1,4}; "" -> {}.
std::vector<int> parse_int_set(std::string_view text);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace monpow
