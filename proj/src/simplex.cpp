// Two-phase primal simplex, Bland's rule, on an integer-preserving tableau.
//
// Every tableau entry is an integer; the represented value is entry / det
// where det is the current basis determinant (kept positive). A pivot on
// (r, s) replaces each entry outside row r by
//   (T[i][j] * T[r][s] - T[i][s] * T[r][j]) / det,
// which is an exact division. The 64-bit instantiation detects overflow and
// the solve is retried with GMP integers.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "monpow/optim.hpp"

namespace monpow::detail {

namespace {

struct WordOverflow {};

constexpr std::int64_t kWordLimit = std::int64_t{1} << 62;

struct Int64Word {
  using T = std::int64_t;

  static T from(std::int64_t v) {
    if (v >= kWordLimit || v <= -kWordLimit) throw WordOverflow{};
    return v;
  }
  static T combine(T a, T b, T c, T d, T det) {
    __int128 v = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
    v /= det;
    if (v >= kWordLimit || v <= -kWordLimit) throw WordOverflow{};
    return static_cast<T>(v);
  }
  // a/b < c/d for b, d > 0
  static bool ratio_less(T a, T b, T c, T d) {
    return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
  }
  static bool ratio_equal(T a, T b, T c, T d) {
    return static_cast<__int128>(a) * d == static_cast<__int128>(c) * b;
  }
  static int sign(T v) { return (v > 0) - (v < 0); }
  static void negate(T& v) { v = -v; }
  static mpz_class to_mpz(T v) { return mpz_class(static_cast<long>(v)); }
};

struct MpzWord {
  using T = mpz_class;

  static T from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
  static T combine(const T& a, const T& b, const T& c, const T& d, const T& det) {
    T v = a * b - c * d;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), det.get_mpz_t());
    return v;
  }
  static bool ratio_less(const T& a, const T& b, const T& c, const T& d) { return a * d < c * b; }
  static bool ratio_equal(const T& a, const T& b, const T& c, const T& d) { return a * d == c * b; }
  static int sign(const T& v) { return sgn(v); }
  static void negate(T& v) { v = -v; }
  static mpz_class to_mpz(const T& v) { return v; }
};

template <typename W>
class Tableau {
  using T = typename W::T;

 public:
  Tableau(const IntMatrix& A, std::span<const std::int64_t> b, std::span<const std::int64_t> c)
      : m_(A.rows()), n_(A.cols()) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (b[i] < 0) needs_phase1_ = true;
    }
    cols_ = n_ + m_ + (needs_phase1_ ? 1 : 0) + 1;
    rows_ = m_ + 1 + (needs_phase1_ ? 1 : 0);
    artificial_ = needs_phase1_ ? n_ + m_ : kNone;
    rhs_ = cols_ - 1;
    obj_ = m_;
    aux_ = needs_phase1_ ? m_ + 1 : kNone;

    t_.assign(rows_ * cols_, W::from(0));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = W::from(A(i, j));
      at(i, n_ + i) = W::from(1);
      if (needs_phase1_) at(i, artificial_) = W::from(-1);
      at(i, rhs_) = W::from(b[i]);
    }
    for (std::size_t j = 0; j < n_; ++j) at(obj_, j) = W::from(-c[j]);
    if (needs_phase1_) at(aux_, artificial_) = W::from(1);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
    det_ = W::from(1);
  }

  LpSolution solve() {
    LpSolution out;
    if (needs_phase1_) {
      // Bring the artificial variable in on the most violated row.
      std::size_t r = 0;
      for (std::size_t i = 1; i < m_; ++i) {
        if (W::ratio_less(at(i, rhs_), det_, at(r, rhs_), det_)) r = i;
      }
      pivot(r, artificial_);
      if (!run(aux_, kNone)) throw std::logic_error("phase one cannot be unbounded");
      if (W::sign(at(aux_, rhs_)) != 0) {
        out.status = LpStatus::infeasible;
        return out;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] != artificial_) continue;
        for (std::size_t j = 0; j < artificial_; ++j) {
          if (W::sign(at(i, j)) != 0) {
            pivot(i, j);
            break;
          }
        }
      }
    }
    if (!run(obj_, artificial_)) {
      out.status = LpStatus::unbounded;
      return out;
    }
    out.status = LpStatus::optimal;
    const mpz_class det = W::to_mpz(det_);
    out.value = Rational(W::to_mpz(at(obj_, rhs_)), det);
    out.primal.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) out.primal[basis_[i]] = Rational(W::to_mpz(at(i, rhs_)), det);
    }
    out.dual.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) out.dual[i] = Rational(W::to_mpz(at(obj_, n_ + i)), det);
    return out;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  T& at(std::size_t i, std::size_t j) { return t_[i * cols_ + j]; }

  // Returns false when the objective in `row` is unbounded.
  bool run(std::size_t row, std::size_t banned) {
    for (;;) {
      std::size_t s = kNone;
      for (std::size_t j = 0; j < rhs_; ++j) {
        if (j == banned) continue;
        if (W::sign(at(row, j)) < 0) {
          s = j;
          break;
        }
      }
      if (s == kNone) return true;
      std::size_t r = kNone;
      for (std::size_t i = 0; i < m_; ++i) {
        if (W::sign(at(i, s)) <= 0) continue;
        if (r == kNone) {
          r = i;
          continue;
        }
        const T& ai = at(i, rhs_);
        const T& bi = at(i, s);
        const T& ar = at(r, rhs_);
        const T& br = at(r, s);
        if (W::ratio_less(ai, bi, ar, br) ||
            (W::ratio_equal(ai, bi, ar, br) && basis_[i] < basis_[r])) {
          r = i;
        }
      }
      if (r == kNone) return false;
      pivot(r, s);
    }
  }

  void pivot(std::size_t r, std::size_t s) {
    const T p = at(r, s);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const T f = at(i, s);
      if (W::sign(f) == 0 && p == det_) continue;  // row unchanged
      for (std::size_t j = 0; j < cols_; ++j) at(i, j) = W::combine(at(i, j), p, f, at(r, j), det_);
    }
    det_ = p;
    basis_[r] = s;
    if (W::sign(det_) < 0) {
      for (auto& v : t_) W::negate(v);
      W::negate(det_);
    }
  }

  std::size_t m_, n_;
  std::size_t rows_ = 0, cols_ = 0;
  std::size_t artificial_ = kNone, rhs_ = 0, obj_ = 0, aux_ = kNone;
  bool needs_phase1_ = false;
  std::vector<T> t_;
  std::vector<std::size_t> basis_;
  T det_;
};

}  // namespace

LpSolution maximize_leq(const IntMatrix& A, std::span<const std::int64_t> b,
                        std::span<const std::int64_t> c) {
  if (b.size() != A.rows() || c.size() != A.cols()) {
    throw std::invalid_argument("maximize_leq: dimension mismatch");
  }
  try {
    return Tableau<Int64Word>(A, b, c).solve();
  } catch (const WordOverflow&) {
    return Tableau<MpzWord>(A, b, c).solve();
  }
}

}  // namespace monpow::detail
