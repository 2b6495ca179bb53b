#include "hyperlat/zlattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hyperlat {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow");
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t lcm_den(std::int64_t acc, const Rational& q) {
  std::int64_t d = to_int64(denominator(q));
  return checked_mul(acc / std::gcd(acc, d), d);
}

BigInt to_big(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<unsigned long long>(mag >> 64);
  out <<= 64;
  out += static_cast<unsigned long long>(mag & 0xFFFFFFFFFFFFFFFFULL);
  return neg ? BigInt(-out) : out;
}

__int128 to_int128(const BigInt& z) {
  const BigInt bound = BigInt(1) << 120;
  if (z >= bound || z <= -bound) throw std::overflow_error("value exceeds 120 bits");
  const bool neg = z < 0;
  BigInt mag = neg ? BigInt(-z) : z;
  const auto hi = static_cast<unsigned long long>(mag >> 64);
  const auto lo = static_cast<unsigned long long>(mag & BigInt(0xFFFFFFFFFFFFFFFFULL));
  __int128 v = (static_cast<__int128>(hi) << 64) | lo;
  return neg ? -v : v;
}

}  // namespace

IntMatrix hermite_basis(const std::vector<IntVector>& columns, int m) {
  std::vector<IntVector> active;
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != m) throw std::invalid_argument("hermite_basis: length mismatch");
    if (std::any_of(c.begin(), c.end(), [](std::int64_t v) { return v != 0; })) active.push_back(c);
  }
  IntMatrix h(m, IntVector(m, 0));
  for (int r = 0; r < m; ++r) {
    while (true) {
      int piv = -1;
      for (int a = 0; a < static_cast<int>(active.size()); ++a) {
        if (active[a][r] == 0) continue;
        if (piv < 0 || std::llabs(active[a][r]) < std::llabs(active[piv][r])) piv = a;
      }
      if (piv < 0) throw std::invalid_argument("hermite_basis: generators do not have full rank");
      bool done = true;
      for (int a = 0; a < static_cast<int>(active.size()); ++a) {
        if (a == piv || active[a][r] == 0) continue;
        const std::int64_t q = active[a][r] / active[piv][r];
        for (int t = r; t < m; ++t)
          active[a][t] = checked_sub(active[a][t], checked_mul(q, active[piv][t]));
        if (active[a][r] != 0) done = false;
      }
      if (!done) continue;
      IntVector col = active[piv];
      if (col[r] < 0)
        for (auto& v : col) v = -v;
      for (int t = 0; t < m; ++t) h[t][r] = col[t];
      active.erase(active.begin() + piv);
      std::erase_if(active, [](const IntVector& c) {
        return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
      });
      break;
    }
  }
  return h;
}

IntVector reduce_by_hermite(const IntMatrix& hermite, IntVector x) {
  const int m = static_cast<int>(hermite.size());
  for (int k = 0; k < m; ++k) {
    const std::int64_t q = floor_div(x[k], hermite[k][k]);
    if (q == 0) continue;
    for (int t = k; t < m; ++t) x[t] = checked_sub(x[t], checked_mul(q, hermite[t][k]));
  }
  return x;
}

std::vector<IntVector> hermite_box(const IntMatrix& hermite) {
  const int m = static_cast<int>(hermite.size());
  std::vector<IntVector> out;
  IntVector cur(m, 0);
  while (true) {
    out.push_back(cur);
    int k = m - 1;
    while (k >= 0) {
      if (++cur[k] < hermite[k][k]) break;
      cur[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

LinearSolution solve_functional(const IntVector& f, std::int64_t rhs) {
  const int d = static_cast<int>(f.size());
  IntVector a = f;
  IntMatrix u(d, IntVector(d, 0));  // columns of a unimodular matrix
  for (int i = 0; i < d; ++i) u[i][i] = 1;
  auto col_axpy = [&](int dst, int src, std::int64_t q) {
    a[dst] = checked_sub(a[dst], checked_mul(q, a[src]));
    for (int t = 0; t < d; ++t) u[t][dst] = checked_sub(u[t][dst], checked_mul(q, u[t][src]));
  };
  while (true) {
    int piv = -1;
    for (int i = 0; i < d; ++i)
      if (a[i] != 0 && (piv < 0 || std::llabs(a[i]) < std::llabs(a[piv]))) piv = i;
    if (piv < 0) break;
    bool done = true;
    for (int i = 0; i < d; ++i) {
      if (i == piv || a[i] == 0) continue;
      col_axpy(i, piv, a[i] / a[piv]);
      if (a[i] != 0) done = false;
    }
    if (done) {
      std::swap(a[0], a[piv]);
      for (int t = 0; t < d; ++t) std::swap(u[t][0], u[t][piv]);
      break;
    }
  }
  LinearSolution sol;
  if (a[0] == 0) {
    for (int c = 0; c < d; ++c) {
      IntVector e(d, 0);
      e[c] = 1;
      sol.kernel.push_back(e);
    }
    if (rhs == 0) sol.particular = IntVector(d, 0);
    return sol;
  }
  for (int c = 1; c < d; ++c) {
    IntVector col(d);
    for (int t = 0; t < d; ++t) col[t] = u[t][c];
    sol.kernel.push_back(col);
  }
  if (rhs % a[0] == 0) {
    const std::int64_t s = rhs / a[0];
    IntVector p(d);
    for (int t = 0; t < d; ++t) p[t] = checked_mul(u[t][0], s);
    sol.particular = p;
  }
  return sol;
}

RatMatrix rat_inverse(const RatMatrix& a) {
  const int n = static_cast<int>(a.size());
  RatMatrix m = a;
  RatMatrix inv(n, RatVector(n, Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    const Rational p = m[c][c];
    for (int t = 0; t < n; ++t) {
      m[c][t] /= p;
      inv[c][t] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (int t = 0; t < n; ++t) {
        m[r][t] -= f * m[c][t];
        inv[r][t] -= f * inv[c][t];
      }
    }
  }
  return inv;
}

Rational rat_determinant(RatMatrix a) {
  const int n = static_cast<int>(a.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[c], a[piv]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (int t = c; t < n; ++t) a[r][t] -= f * a[c][t];
    }
  }
  return det;
}

QuadForm::QuadForm(const RatMatrix& gram) : m_(static_cast<int>(gram.size())), gram_(gram), scale_(1) {
  for (int i = 0; i < m_; ++i) {
    if (static_cast<int>(gram_[i].size()) != m_) throw std::invalid_argument("QuadForm: gram not square");
    for (int j = 0; j < m_; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("QuadForm: gram not symmetric");
      scale_ = lcm_den(scale_, gram_[i][j]);
    }
  }
  scaled_.assign(m_, IntVector(m_, 0));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) scaled_[i][j] = to_int64(numerator(Rational(gram_[i][j] * scale_)));

  RatVector d(m_);
  RatMatrix u(m_, RatVector(m_, Rational(0)));
  for (int i = 0; i < m_; ++i) {
    u[i][i] = 1;
    Rational di = gram_[i][i];
    for (int k = 0; k < i; ++k) di -= u[k][i] * u[k][i] * d[k];
    if (di <= 0) throw std::domain_error("QuadForm: form is not positive definite");
    d[i] = di;
    for (int j = i + 1; j < m_; ++j) {
      Rational s = gram_[i][j];
      for (int k = 0; k < i; ++k) s -= u[k][i] * u[k][j] * d[k];
      u[i][j] = s / di;
    }
  }
  diag_.resize(m_);
  u_.assign(m_, std::vector<double>(m_, 0.0));
  for (int i = 0; i < m_; ++i) {
    diag_[i] = to_double(d[i]);
    for (int j = 0; j < m_; ++j) u_[i][j] = to_double(u[i][j]);
  }
}

Rational QuadForm::value(const IntVector& x) const {
  __int128 acc = 0;
  for (int i = 0; i < m_; ++i) {
    if (x[i] == 0) continue;
    __int128 row = 0;
    for (int j = 0; j < m_; ++j) row += static_cast<__int128>(scaled_[i][j]) * x[j];
    acc += row * x[i];
  }
  return Rational(to_big(acc), scale_);
}

Rational QuadForm::distance2(const IntVector& x, const RatVector& center) const {
  Rational acc = 0;
  RatVector y(m_);
  for (int i = 0; i < m_; ++i) y[i] = Rational(x[i]) - center[i];
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      if (gram_[i][j] != 0) acc += y[i] * gram_[i][j] * y[j];
  return acc;
}

namespace {

struct ScaledCenter {
  std::int64_t q = 1;  // common denominator
  IntVector p;         // numerators
};

ScaledCenter scale_center(const RatVector& c) {
  ScaledCenter s;
  for (const auto& v : c) s.q = lcm_den(s.q, v);
  for (const auto& v : c) s.p.push_back(to_int64(numerator(Rational(v * s.q))));
  return s;
}

}  // namespace

void QuadForm::enumerate(const RatVector& center, const Rational& bound, bool strict,
                         const Visitor& visit) const {
  if (static_cast<int>(center.size()) != m_) throw std::invalid_argument("enumerate: center size");
  if (bound < 0) return;
  const ScaledCenter sc = scale_center(center);
  const BigInt denom = BigInt(scale_) * sc.q * sc.q;
  // Exact test: integer value v = y^T S y with y = q x - p, compared to bound*denom.
  const Rational thr = bound * Rational(denom);
  BigInt limit = strict ? BigInt(ceil_int(thr) - 1) : BigInt(floor_int(thr));
  if (limit < 0) return;
  const __int128 limit128 = to_int128(limit);

  std::vector<double> c(m_);
  for (int i = 0; i < m_; ++i) c[i] = to_double(center[i]);
  const double bnd = to_double(bound);
  const double slack = 1e-7 * (1.0 + bnd);

  IntVector x(m_, 0);
  std::vector<double> y(m_, 0.0);
  std::vector<__int128> ys(m_);

  auto leaf = [&]() {
    for (int i = 0; i < m_; ++i) ys[i] = static_cast<__int128>(sc.q) * x[i] - sc.p[i];
    __int128 acc = 0;
    for (int i = 0; i < m_; ++i) {
      if (ys[i] == 0) continue;
      __int128 row = 0;
      for (int j = 0; j < m_; ++j) row += scaled_[i][j] * ys[j];
      acc += row * ys[i];
    }
    if (acc > limit128) return;
    visit(x, Rational(to_big(acc), denom));
  };

  std::function<void(int, double)> rec = [&](int i, double used) {
    double t = 0.0;
    for (int j = i + 1; j < m_; ++j) t += u_[i][j] * y[j];
    const double mid = c[i] - t;
    const double rem = bnd - used + slack;
    if (rem < 0) return;
    const double rad = std::sqrt(rem / diag_[i]);
    const auto lo = static_cast<std::int64_t>(std::ceil(mid - rad));
    const auto hi = static_cast<std::int64_t>(std::floor(mid + rad));
    for (std::int64_t v = lo; v <= hi; ++v) {
      x[i] = v;
      y[i] = static_cast<double>(v) - c[i];
      const double diff = static_cast<double>(v) - mid;
      const double nu = used + diag_[i] * diff * diff;
      if (i == 0)
        leaf();
      else
        rec(i - 1, nu);
    }
  };
  if (m_ == 0) {
    if (bound > 0 || (!strict && bound == 0)) visit(x, Rational(0));
    return;
  }
  rec(m_ - 1, 0.0);
}

QuadForm::Closest QuadForm::closest(const RatVector& center) const {
  // Nearest-plane rounding gives a starting bound.
  IntVector x(m_, 0);
  std::vector<double> y(m_, 0.0);
  for (int i = m_ - 1; i >= 0; --i) {
    double t = 0.0;
    for (int j = i + 1; j < m_; ++j) t += u_[i][j] * y[j];
    const double mid = to_double(center[i]) - t;
    x[i] = static_cast<std::int64_t>(std::llround(mid));
    y[i] = static_cast<double>(x[i]) - to_double(center[i]);
  }
  Rational best = distance2(x, center);
  Closest out;
  out.dist2 = best;
  enumerate(center, best, false, [&](const IntVector& p, const Rational& v) {
    if (v < out.dist2) {
      out.dist2 = v;
      out.points.clear();
    }
    if (v == out.dist2) out.points.push_back(p);
  });
  std::sort(out.points.begin(), out.points.end());
  return out;
}

}  // namespace hyperlat
