#include "hyperlat/matrix.hpp"

#include <stdexcept>

namespace hyperlat {

SVector zero_vector(Ring ring, int n) { return SVector(n, Scalar(ring, 0)); }

SMatrix zero_matrix(Ring ring, int rows, int cols) { return SMatrix(rows, zero_vector(ring, cols)); }

SMatrix identity(Ring ring, int n) {
  SMatrix m = zero_matrix(ring, n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Scalar(ring, 1);
  return m;
}

SMatrix mul(const SMatrix& a, const SMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  if (a[0].size() != k) throw std::invalid_argument("mul: shape mismatch");
  const Ring ring = a[0][0].ring();
  SMatrix out = zero_matrix(ring, static_cast<int>(n), static_cast<int>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[t][j].is_zero()) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

SVector act(const SMatrix& a, const SVector& v) {
  if (a.empty()) return {};
  if (a[0].size() != v.size()) throw std::invalid_argument("apply: shape mismatch");
  SVector out = zero_vector(v.empty() ? a[0][0].ring() : v[0].ring(), static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
  return out;
}

SMatrix adjoint(const SMatrix& a) {
  if (a.empty()) return {};
  SMatrix out(a[0].size(), SVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j].conj();
  return out;
}

SMatrix inverse(const SMatrix& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return {};
  const Ring ring = a[0][0].ring();
  SMatrix m = a;
  SMatrix inv = identity(ring, n);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    const Scalar p = m[c][c].inverse();
    for (int t = 0; t < n; ++t) {
      m[c][t] = p * m[c][t];
      inv[c][t] = p * inv[c][t];
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Scalar f = m[r][c];
      for (int t = 0; t < n; ++t) {
        m[r][t] -= f * m[c][t];
        inv[r][t] -= f * inv[c][t];
      }
    }
  }
  return inv;
}

SVector add(const SVector& a, const SVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  SVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

SVector sub(const SVector& a, const SVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
  SVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

SVector neg(const SVector& a) {
  SVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

SVector right_mul(const SVector& v, const Scalar& s) {
  SVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

SVector left_mul(const Scalar& s, const SVector& v) {
  SVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Scalar hermitian(const SMatrix& gram, const SVector& x, const SVector& y) {
  const std::size_t n = gram.size();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("hermitian: length mismatch");
  Scalar acc(gram.empty() ? (x.empty() ? Ring::Gauss : x[0].ring()) : gram[0][0].ring(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    const Scalar xi = x[i].conj();
    for (std::size_t j = 0; j < n; ++j)
      if (!gram[i][j].is_zero() && !y[j].is_zero()) acc += xi * gram[i][j] * y[j];
  }
  return acc;
}

bool is_integral(const SVector& v) {
  for (const auto& s : v)
    if (!s.is_integral()) return false;
  return true;
}

bool is_integral(const SMatrix& m) {
  for (const auto& row : m)
    if (!is_integral(row)) return false;
  return true;
}

bool is_zero(const SVector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Scalar content(const SVector& v) {
  if (v.empty()) throw std::invalid_argument("content of empty vector");
  Scalar g(v[0].ring(), 0);
  for (const auto& s : v) {
    if (!s.is_integral()) throw std::domain_error("content of non-integral vector");
    g = left_gcd(g, s);
  }
  return g;
}

int column_rank(const SMatrix& a) {
  if (a.empty()) return 0;
  // Row reduction on the transpose-conjugate keeps the right span of columns.
  SMatrix m = a;
  const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    const Scalar p = m[rank][c].inverse();
    for (int t = 0; t < cols; ++t) m[rank][t] = p * m[rank][t];
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Scalar f = m[r][c];
      for (int t = 0; t < cols; ++t) m[r][t] -= f * m[rank][t];
    }
    ++rank;
  }
  return rank;
}

std::string str(const SVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

}  // namespace hyperlat
