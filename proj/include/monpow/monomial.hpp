#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "monpow/optim.hpp"

namespace monpow {

/// Exponent vector a of the monomial x^a = x_1^{a_1} ... x_n^{a_n}.
/// Coordinate i (0-based) is the exponent of variable x_{i+1}.
/// Ordering is lexicographic on the entries.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<int> entries);
  explicit ExponentVector(std::vector<int> entries);

  static ExponentVector unit(std::size_t n, std::size_t i);
  /// Incidence vector e_F of a set of 1-based variable indices.
  static ExponentVector incidence(std::size_t n, const std::vector<int>& one_based);
  static ExponentVector ones(std::size_t n) { return ExponentVector(std::vector<int>(n, 1)); }

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  const std::vector<int>& entries() const { return e_; }
  std::vector<std::int64_t> as_int64() const { return {e_.begin(), e_.end()}; }

  std::int64_t degree() const;
  /// 0-based indices of the nonzero coordinates.
  std::vector<std::size_t> support() const;
  bool is_zero() const;
  bool is_squarefree() const;

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;

  ExponentVector scaled(int q) const;
  /// Copy with coordinate i changed by delta; throws if it would go negative.
  ExponentVector shifted(std::size_t i, int delta) const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  /// Exponent of the least common multiple (componentwise max).
  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
  friend std::int64_t dot(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.e_ <=> b.e_; }

  /// "x1^2*x3"; the zero vector prints as "1".
  std::string monomial_string() const;
  /// "(2,0,1)"
  std::string tuple_string() const;

 private:
  std::vector<int> e_;
};

/// A monomial ideal stored as its divisibility antichain of minimal
/// generators, sorted lexicographically. Never empty; no generator is 1.
class MonomialIdeal {
 public:
  /// Minimal generators of the ideal generated by gens. Throws
  /// std::invalid_argument on empty input, wrong lengths or a zero vector.
  static MonomialIdeal minimalize(std::size_t n, std::vector<ExponentVector> gens);

  std::size_t vars() const { return n_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  /// x^a lies in the ideal, i.e. some generator divides it.
  bool contains(const ExponentVector& a) const;
  bool is_squarefree() const;

  /// n x m matrix whose columns are the generators in canonical order.
  IntMatrix exponent_matrix() const;
  PackingProgram packing_program(const ExponentVector& a) const;
  CoveringProgram covering_program(const ExponentVector& a) const;

  std::string str() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t n, std::vector<ExponentVector> gens) : n_(n), gens_(std::move(gens)) {}

  std::size_t n_ = 0;
  std::vector<ExponentVector> gens_;
};

/// Generators of the antichain-minimal subset of gens; may be empty.
std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> gens);

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^k for k >= 1. Throws GuardError when an intermediate generator set
/// exceeds max_generators.
MonomialIdeal power(const MonomialIdeal& I, int k, std::size_t max_generators = 2'000'000);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// P_F^k: all degree-k monomials in the variables of F (0-based indices).
MonomialIdeal prime_power(std::size_t n, const std::vector<std::size_t>& vars, int k);

/// d(I), the maximum degree of a minimal generator.
std::int64_t max_gen_degree(const MonomialIdeal& I);

/// Largest number of generators with pairwise disjoint supports.
int mongrade(const MonomialIdeal& I);

/// Minimum size of a transversal of the generator supports. Squarefree only.
int height(const MonomialIdeal& I);

/// Expands I^k and tests divisibility of x^a.
bool naive_power_membership(const MonomialIdeal& I, int k, const ExponentVector& a);

}  // namespace monpow
