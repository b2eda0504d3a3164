#pragma once

// Exact packing and covering programs over a nonnegative integer matrix M:
//   packing   max 1.y  s.t. M y <= a, y >= 0
//   covering  min a.z  s.t. M^T z >= 1, z >= 0
// with integer variants. No floating point is used anywhere.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "monpow/rational.hpp"

namespace monpow {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<std::int64_t>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transposed() const;
  IntMatrix select_columns(std::span<const std::size_t> cols) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

class PackingProgram {
 public:
  /// Throws std::invalid_argument on a negative entry, an all-zero column,
  /// an empty matrix or a capacity of the wrong length.
  PackingProgram(IntMatrix matrix, std::vector<std::int64_t> capacity);

  const IntMatrix& matrix() const { return matrix_; }
  const std::vector<std::int64_t>& capacity() const { return capacity_; }
  std::size_t rows() const { return matrix_.rows(); }
  std::size_t cols() const { return matrix_.cols(); }

  /// Per-variable bound y_l <= min over rows i with M_il > 0 of floor(a_i / M_il).
  std::vector<std::int64_t> variable_bounds() const;

 private:
  IntMatrix matrix_;
  std::vector<std::int64_t> capacity_;
};

class CoveringProgram {
 public:
  CoveringProgram(IntMatrix matrix, std::vector<std::int64_t> cost);

  const IntMatrix& matrix() const { return matrix_; }
  const std::vector<std::int64_t>& cost() const { return cost_; }
  std::size_t rows() const { return matrix_.rows(); }
  std::size_t cols() const { return matrix_.cols(); }

 private:
  IntMatrix matrix_;
  std::vector<std::int64_t> cost_;
};

enum class LpStatus { optimal, unbounded, infeasible };

const char* to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
};

struct IlpSolution {
  std::int64_t value = 0;
  std::vector<std::int64_t> witness;
};

/// nu*_a(M); primal is y (length m), dual is a covering z (length n).
LpSolution solve_lp_packing(const PackingProgram& p);
/// tau*_a(M); primal is z (length n), dual is a packing y (length m).
LpSolution solve_lp_covering(const CoveringProgram& c);

/// nu_a(M) with the lexicographically least optimal witness.
IlpSolution solve_ilp_packing(const PackingProgram& p);
/// tau_a(M); the witness is the lexicographically least optimal 0/1 vector,
/// whose support is a minimal transversal of the column supports.
IlpSolution solve_ilp_covering(const CoveringProgram& c);

/// Re-checks primal feasibility, dual feasibility and equality of both
/// objectives with sol.value, in exact arithmetic.
bool verify_certificates(const LpSolution& sol, const PackingProgram& p);
bool verify_certificates(const LpSolution& sol, const CoveringProgram& c);

namespace detail {

/// maximize c.x subject to A x <= b, x >= 0 (b of either sign).
/// Two-phase primal simplex with Bland's rule on a fraction-free integer
/// tableau. primal has A.cols() entries, dual has A.rows() entries.
LpSolution maximize_leq(const IntMatrix& A, std::span<const std::int64_t> b,
                        std::span<const std::int64_t> c);

}  // namespace detail

}  // namespace monpow
