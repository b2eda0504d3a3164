#include "monpow/optim.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace monpow {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<std::int64_t>>& cols) {
  IntMatrix out(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("IntMatrix: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = cols[j][i];
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
  IntMatrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) out(i, k) = (*this)(i, cols[k]);
  return out;
}

namespace {

void validate(const IntMatrix& M, const std::vector<std::int64_t>& vec, const char* what) {
  if (M.cols() == 0 || M.rows() == 0) {
    throw std::invalid_argument(std::string(what) + ": empty matrix");
  }
  if (vec.size() != M.rows()) {
    throw std::invalid_argument(std::string(what) + ": vector length must equal the row count");
  }
  for (auto v : vec) {
    if (v < 0) throw std::invalid_argument(std::string(what) + ": negative vector entry");
  }
  for (std::size_t j = 0; j < M.cols(); ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (M(i, j) < 0) throw std::invalid_argument(std::string(what) + ": negative matrix entry");
      nonzero = nonzero || M(i, j) > 0;
    }
    if (!nonzero) {
      throw std::invalid_argument(std::string(what) + ": column " + std::to_string(j) + " is all zero");
    }
  }
}

}  // namespace

PackingProgram::PackingProgram(IntMatrix matrix, std::vector<std::int64_t> capacity)
    : matrix_(std::move(matrix)), capacity_(std::move(capacity)) {
  validate(matrix_, capacity_, "PackingProgram");
}

std::vector<std::int64_t> PackingProgram::variable_bounds() const {
  std::vector<std::int64_t> u(cols());
  for (std::size_t l = 0; l < cols(); ++l) {
    std::int64_t best = -1;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (matrix_(i, l) == 0) continue;
      const std::int64_t q = capacity_[i] / matrix_(i, l);
      best = best < 0 ? q : std::min(best, q);
    }
    u[l] = best;
  }
  return u;
}

CoveringProgram::CoveringProgram(IntMatrix matrix, std::vector<std::int64_t> cost)
    : matrix_(std::move(matrix)), cost_(std::move(cost)) {
  validate(matrix_, cost_, "CoveringProgram");
}

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::infeasible: return "infeasible";
  }
  return "?";
}

LpSolution solve_lp_packing(const PackingProgram& p) {
  const std::vector<std::int64_t> ones(p.cols(), 1);
  LpSolution sol = detail::maximize_leq(p.matrix(), p.capacity(), ones);
  if (sol.status != LpStatus::optimal) throw std::logic_error("packing LP must be optimal");
  return sol;
}

LpSolution solve_lp_covering(const CoveringProgram& c) {
  // max -a.z  s.t.  -M^T z <= -1
  IntMatrix A = c.matrix().transposed();
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) A(i, j) = -A(i, j);
  const std::vector<std::int64_t> b(A.rows(), -1);
  std::vector<std::int64_t> obj(c.cost());
  for (auto& v : obj) v = -v;
  LpSolution sol = detail::maximize_leq(A, b, obj);
  if (sol.status != LpStatus::optimal) throw std::logic_error("covering LP must be optimal");
  sol.value = -sol.value;
  return sol;
}

namespace {

// -1, 0, 1 comparing prefix[0, len) of x against y.
int lex_prefix_compare(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y,
                       std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (x[i] < y[i]) return -1;
    if (x[i] > y[i]) return 1;
  }
  return 0;
}

class PackingSearch {
 public:
  explicit PackingSearch(const PackingProgram& p) : p_(p), m_(p.cols()), n_(p.rows()) {}

  IlpSolution run() {
    greedy_incumbent();
    std::vector<std::int64_t> cap(p_.capacity());
    std::vector<std::int64_t> prefix(m_, 0);
    descend(0, cap, prefix, 0);
    return best_;
  }

 private:
  std::int64_t bound_for(std::size_t l, const std::vector<std::int64_t>& cap) const {
    return std::max<std::int64_t>(0, upper_bound_rest(l, cap));
  }

  std::int64_t var_bound(std::size_t l, const std::vector<std::int64_t>& cap) const {
    std::int64_t u = -1;
    for (std::size_t i = 0; i < n_; ++i) {
      const auto e = p_.matrix()(i, l);
      if (e == 0) continue;
      const std::int64_t q = cap[i] / e;
      u = u < 0 ? q : std::min(u, q);
    }
    return u;
  }

  // floor of the LP optimum over variables l..m-1 with capacity cap.
  std::int64_t upper_bound_rest(std::size_t l, const std::vector<std::int64_t>& cap) const {
    std::vector<std::size_t> cols;
    for (std::size_t j = l; j < m_; ++j) {
      if (var_bound(j, cap) > 0) cols.push_back(j);
    }
    if (cols.empty()) return 0;
    if (cols.size() == 1) return var_bound(cols[0], cap);
    const IntMatrix sub = p_.matrix().select_columns(cols);
    const std::vector<std::int64_t> ones(cols.size(), 1);
    return detail::maximize_leq(sub, cap, ones).value.floor_int();
  }

  void greedy_incumbent() {
    const LpSolution lp = solve_lp_packing(p_);
    std::vector<std::int64_t> y(m_);
    std::vector<std::int64_t> cap(p_.capacity());
    for (std::size_t l = 0; l < m_; ++l) {
      y[l] = lp.primal[l].floor_int();
      for (std::size_t i = 0; i < n_; ++i) cap[i] -= p_.matrix()(i, l) * y[l];
    }
    for (std::size_t l = m_; l-- > 0;) {
      const std::int64_t extra = var_bound(l, cap);
      y[l] += extra;
      for (std::size_t i = 0; i < n_; ++i) cap[i] -= p_.matrix()(i, l) * extra;
    }
    best_.value = std::accumulate(y.begin(), y.end(), std::int64_t{0});
    best_.witness = std::move(y);
  }

  void offer(const std::vector<std::int64_t>& y, std::int64_t value) {
    if (value > best_.value || (value == best_.value && y < best_.witness)) {
      best_.value = value;
      best_.witness = y;
    }
  }

  bool worth_exploring(std::size_t depth, const std::vector<std::int64_t>& prefix, std::int64_t ub) const {
    if (ub > best_.value) return true;
    if (ub < best_.value) return false;
    return lex_prefix_compare(prefix, best_.witness, depth) <= 0;
  }

  void descend(std::size_t l, std::vector<std::int64_t>& cap, std::vector<std::int64_t>& prefix,
               std::int64_t sum) {
    if (l == m_) {
      offer(prefix, sum);
      return;
    }
    if (!worth_exploring(l, prefix, sum + bound_for(l, cap))) return;
    const std::int64_t u = var_bound(l, cap);
    for (std::int64_t v = 0; v <= u; ++v) {
      prefix[l] = v;
      for (std::size_t i = 0; i < n_; ++i) cap[i] -= p_.matrix()(i, l) * v;
      descend(l + 1, cap, prefix, sum + v);
      for (std::size_t i = 0; i < n_; ++i) cap[i] += p_.matrix()(i, l) * v;
    }
    prefix[l] = 0;
  }

  const PackingProgram& p_;
  std::size_t m_, n_;
  IlpSolution best_;
};

class CoveringSearch {
 public:
  explicit CoveringSearch(const CoveringProgram& c) : c_(c), n_(c.rows()), m_(c.cols()) {
    supports_.resize(m_);
    for (std::size_t l = 0; l < m_; ++l)
      for (std::size_t i = 0; i < n_; ++i)
        if (c.matrix()(i, l) > 0) supports_[l].push_back(i);
  }

  IlpSolution run() {
    greedy_incumbent();
    std::vector<std::int64_t> z(n_, 0);
    std::vector<int> hits(m_, 0);
    descend(0, z, hits, 0);
    return best_;
  }

 private:
  bool covers(const std::vector<std::int64_t>& z) const {
    for (const auto& s : supports_) {
      if (std::none_of(s.begin(), s.end(), [&](std::size_t i) { return z[i] > 0; })) return false;
    }
    return true;
  }

  void greedy_incumbent() {
    std::vector<std::int64_t> z(n_, 1);
    for (std::size_t i = 0; i < n_; ++i) {
      z[i] = 0;
      if (!covers(z)) z[i] = 1;
    }
    best_.witness = z;
    best_.value = cost_of(z);
  }

  std::int64_t cost_of(const std::vector<std::int64_t>& z) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += z[i] * c_.cost()[i];
    return s;
  }

  // ceil of the LP relaxation restricted to free vertices i >= first and
  // the columns not yet hit. Returns -1 when some column cannot be hit.
  std::int64_t lower_bound_rest(std::size_t first, const std::vector<int>& hits) const {
    std::vector<std::size_t> open;
    for (std::size_t l = 0; l < m_; ++l) {
      if (hits[l] > 0) continue;
      if (supports_[l].back() < first) return -1;
      open.push_back(l);
    }
    if (open.empty()) return 0;
    const std::size_t free_count = n_ - first;
    // max -a.z s.t. -M_open^T z <= -1 over the free vertices
    IntMatrix A(open.size(), free_count);
    for (std::size_t r = 0; r < open.size(); ++r)
      for (std::size_t i = first; i < n_; ++i) A(r, i - first) = -c_.matrix()(i, open[r]);
    const std::vector<std::int64_t> b(open.size(), -1);
    std::vector<std::int64_t> obj(free_count);
    for (std::size_t i = first; i < n_; ++i) obj[i - first] = -c_.cost()[i];
    const LpSolution lp = detail::maximize_leq(A, b, obj);
    return (-lp.value).ceil_int();
  }

  void offer(const std::vector<std::int64_t>& z, std::int64_t value) {
    if (value < best_.value || (value == best_.value && z < best_.witness)) {
      best_.value = value;
      best_.witness = z;
    }
  }

  void descend(std::size_t i, std::vector<std::int64_t>& z, std::vector<int>& hits, std::int64_t cost) {
    const std::int64_t lb = lower_bound_rest(i, hits);
    if (lb < 0) return;
    if (std::all_of(hits.begin(), hits.end(), [](int h) { return h > 0; })) {
      // Every column is hit; zeros complete the cheapest and lex-least vector.
      offer(z, cost);
      return;
    }
    const std::int64_t bound = cost + lb;
    if (bound > best_.value) return;
    if (bound == best_.value && lex_prefix_compare(z, best_.witness, i) > 0) return;
    if (i == n_) return;
    descend(i + 1, z, hits, cost);
    z[i] = 1;
    for (std::size_t l = 0; l < m_; ++l)
      if (c_.matrix()(i, l) > 0) ++hits[l];
    descend(i + 1, z, hits, cost + c_.cost()[i]);
    for (std::size_t l = 0; l < m_; ++l)
      if (c_.matrix()(i, l) > 0) --hits[l];
    z[i] = 0;
  }

  const CoveringProgram& c_;
  std::size_t n_, m_;
  std::vector<std::vector<std::size_t>> supports_;
  IlpSolution best_;
};

}  // namespace

IlpSolution solve_ilp_packing(const PackingProgram& p) { return PackingSearch(p).run(); }

IlpSolution solve_ilp_covering(const CoveringProgram& c) { return CoveringSearch(c).run(); }

namespace {

bool nonnegative(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.sign() >= 0; });
}

// Checks y >= 0, M y <= a, z >= 0, M^T z >= 1, 1.y = value = a.z.
bool check_pair(const IntMatrix& M, const std::vector<std::int64_t>& a, const std::vector<Rational>& y,
                const std::vector<Rational>& z, const Rational& value) {
  if (y.size() != M.cols() || z.size() != M.rows()) return false;
  if (!nonnegative(y) || !nonnegative(z)) return false;
  Rational ysum(0);
  for (const auto& v : y) ysum += v;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Rational row(0);
    for (std::size_t l = 0; l < M.cols(); ++l) row += Rational(M(i, l)) * y[l];
    if (row > Rational(a[i])) return false;
  }
  for (std::size_t l = 0; l < M.cols(); ++l) {
    Rational col(0);
    for (std::size_t i = 0; i < M.rows(); ++i) col += Rational(M(i, l)) * z[i];
    if (col < Rational(1)) return false;
  }
  Rational zcost(0);
  for (std::size_t i = 0; i < M.rows(); ++i) zcost += Rational(a[i]) * z[i];
  return ysum == value && zcost == value;
}

}  // namespace

bool verify_certificates(const LpSolution& sol, const PackingProgram& p) {
  if (sol.status != LpStatus::optimal) return false;
  return check_pair(p.matrix(), p.capacity(), sol.primal, sol.dual, sol.value);
}

bool verify_certificates(const LpSolution& sol, const CoveringProgram& c) {
  if (sol.status != LpStatus::optimal) return false;
  return check_pair(c.matrix(), c.cost(), sol.dual, sol.primal, sol.value);
}

}  // namespace monpow
