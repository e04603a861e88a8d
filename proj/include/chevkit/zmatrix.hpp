#pragma once

// Exact linear algebra over the integers for small matrices (rank <= 8):
// Bareiss determinants, Smith normal form, and solving A*x = b over Z.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace chevkit {

using ZVec = std::vector<long long>;
using ZMat = std::vector<ZVec>;

inline ZMat zmat_identity(std::size_t n) {
  ZMat m(n, ZVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  const std::size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  ZMat out(n, ZVec(c, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

/// Fraction-free Gaussian elimination; exact for any integer matrix whose
/// intermediate minors fit in long long (trivially true at our sizes).
inline long long det_bareiss(ZMat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long long prev = 1;
  long long sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct SmithResult {
  ZVec diag;  // d_1 | d_2 | ... , nonnegative, padded with zeros to min(rows, cols)
  ZMat V;     // accumulated column operations: U*A*V = diag for some unimodular U
};

/// Smith normal form. Row operations are applied without tracking; column
/// operations accumulate into V so that kernels mod m can be reconstructed.
inline SmithResult smith_normal_form(ZMat a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  ZMat v = zmat_identity(cols);

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
  };
  auto addmul_col = [&](std::size_t dst, std::size_t src, long long f) {
    for (std::size_t r = 0; r < rows; ++r) a[r][dst] += f * a[r][src];
    for (std::size_t r = 0; r < cols; ++r) v[r][dst] += f * v[r][src];
  };
  auto negate_col = [&](std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) a[r][j] = -a[r][j];
    for (std::size_t r = 0; r < cols; ++r) v[r][j] = -v[r][j];
  };

  const std::size_t t_max = std::min(rows, cols);
  for (std::size_t t = 0; t < t_max; ++t) {
    for (;;) {
      // locate an entry of minimal absolute value in the remaining block
      std::size_t pi = t, pj = t;
      long long best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
            best = std::llabs(a[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) break;  // block is zero
      if (pi != t) std::swap(a[t], a[pi]);
      if (pj != t) swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const long long q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const long long q = a[t][j] / a[t][t];
        addmul_col(j, t, -q);
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) continue;

      bool clean = true;
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        if (a[i][t] != 0) clean = false;
      for (std::size_t j = t + 1; j < cols && clean; ++j)
        if (a[t][j] != 0) clean = false;
      if (!clean) continue;

      // pivot must divide every remaining entry; if not, fold the offender in
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
            divides = false;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) negate_col(t);
  }

  ZVec d(t_max, 0);
  for (std::size_t t = 0; t < t_max; ++t) d[t] = a[t][t];
  return {std::move(d), std::move(v)};
}

namespace detail {
struct Frac {
  long long n = 0, d = 1;
  void normalize() {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const long long g = std::gcd(std::llabs(n), d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
  }
};
inline Frac fsub(Frac a, Frac b) {
  Frac r{a.n * b.d - b.n * a.d, a.d * b.d};
  r.normalize();
  return r;
}
inline Frac fmul(Frac a, Frac b) {
  Frac r{a.n * b.n, a.d * b.d};
  r.normalize();
  return r;
}
inline Frac fdiv(Frac a, Frac b) {
  if (b.n == 0) throw std::domain_error("division by zero fraction");
  Frac r{a.n * b.d, a.d * b.n};
  r.normalize();
  return r;
}
}  // namespace detail

/// Solves a*x = b exactly; returns nullopt when the system is inconsistent or
/// the solution is not integral. Columns of `a` may be fewer than rows.
inline std::optional<ZVec> solve_integer(const ZMat& a, const ZVec& b) {
  using detail::Frac;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) throw std::invalid_argument("solve_integer: size mismatch");

  std::vector<std::vector<Frac>> m(rows, std::vector<Frac>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = Frac{a[i][j], 1};
    m[i][cols] = Frac{b[i], 1};
  }

  std::vector<std::size_t> pivot_row(cols, rows);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col].n == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[row], m[piv]);
    const Frac pv = m[row][col];
    for (std::size_t j = col; j <= cols; ++j) m[row][j] = detail::fdiv(m[row][j], pv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col].n == 0) continue;
      const Frac f = m[i][col];
      for (std::size_t j = col; j <= cols; ++j)
        m[i][j] = detail::fsub(m[i][j], detail::fmul(f, m[row][j]));
    }
    pivot_row[col] = row;
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (m[i][cols].n != 0) return std::nullopt;  // inconsistent

  ZVec x(cols, 0);
  for (std::size_t col = 0; col < cols; ++col) {
    if (pivot_row[col] == rows) return std::nullopt;  // underdetermined column
    const Frac val = m[pivot_row[col]][cols];
    if (val.d != 1) return std::nullopt;  // rational, not integral
    x[col] = val.n;
  }
  return x;
}

}  // namespace chevkit
