#include "cremona/linalg.hpp"

#include <cstddef>
#include <utility>

#include "cremona/errors.hpp"

namespace cremona {

QMatrix qmat_identity(int n) {
  QMatrix m(n, std::vector<Scalar>(n, Scalar(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool qmat_is_square(const QMatrix &a) {
  for (const auto &row : a)
    if (row.size() != a.size()) return false;
  return true;
}

QMatrix qmat_mul(const QMatrix &a, const QMatrix &b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  QMatrix r(n, std::vector<Scalar>(m, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) fail(Errc::ArityMismatch, "matrix product shapes");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  }
  return r;
}

QMatrix qmat_pow(const QMatrix &a, unsigned e) {
  QMatrix r = qmat_identity(static_cast<int>(a.size()));
  QMatrix b = a;
  while (e > 0) {
    if (e & 1) r = qmat_mul(r, b);
    e >>= 1;
    if (e) b = qmat_mul(b, b);
  }
  return r;
}

bool qmat_is_zero(const QMatrix &a) {
  for (const auto &row : a)
    for (const auto &e : row)
      if (e != 0) return false;
  return true;
}

Scalar qmat_det(QMatrix a) {
  std::size_t n = a.size();
  Scalar det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Scalar factor = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return det;
}

std::optional<QMatrix> qmat_inverse(QMatrix a) {
  std::size_t n = a.size();
  QMatrix inv = qmat_identity(static_cast<int>(n));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      std::swap(inv[pivot], inv[k]);
    }
    Scalar p = a[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] /= p;
      inv[k][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Scalar factor = a[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= factor * a[k][j];
        inv[i][j] -= factor * inv[k][j];
      }
    }
  }
  return inv;
}

} // namespace cremona
