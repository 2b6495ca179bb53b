#include <stdexcept>

#include "hyperlat/claims.hpp"

namespace hyperlat {

namespace {

using F3Vector = std::vector<int>;
using F3Matrix = std::vector<std::vector<int>>;  // columns

int mod3(long long x) { return static_cast<int>(((x % 3) + 3) % 3); }

// Inverses in F_3: 1 -> 1, 2 -> 2.
int inv3(int x) { return x; }

F3Vector axpy(const F3Vector& y, int a, const F3Vector& x) {
  F3Vector out(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) out[k] = mod3(y[k] + a * x[k]);
  return out;
}

F3Vector image_of(const F3Matrix& m, const F3Vector& x) {
  F3Vector out(x.size(), 0);
  for (std::size_t c = 0; c < m.size(); ++c)
    for (std::size_t r = 0; r < x.size(); ++r) out[r] = mod3(out[r] + m[c][r] * x[c]);
  return out;
}

}  // namespace

int mod_theta(const Scalar& x) {
  if (x.ring() != Ring::Eisenstein) throw std::invalid_argument("reduction mod theta needs Eisenstein scalars");
  const auto c = x.coords();
  return mod3(c[0] + c[1]);
}

SpinorContext::SpinorContext(const Lattice& lattice) : lattice_(lattice) {
  if (lattice.ring() != Ring::Eisenstein) throw std::invalid_argument("spinor norm needs Eisenstein scalars");
  if (!is_integral(lattice.gram())) throw std::invalid_argument("Gram matrix is not integral");
  const int n = lattice.rank();
  form_.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) form_[a][b] = mod_theta(lattice.gram()[a][b]);

  std::vector<F3Vector> rest;
  for (int k = 0; k < n; ++k) {
    F3Vector e(n, 0);
    e[k] = 1;
    rest.push_back(e);
  }
  while (!rest.empty()) {
    std::size_t pick = rest.size();
    for (std::size_t k = 0; k < rest.size() && pick == rest.size(); ++k)
      if (inner(rest[k], rest[k]) != 0) pick = k;
    if (pick == rest.size()) {
      // All remaining vectors are isotropic; a + b is not when <a|b> != 0.
      for (std::size_t a = 0; a < rest.size() && pick == rest.size(); ++a)
        for (std::size_t b = a + 1; b < rest.size(); ++b)
          if (inner(rest[a], rest[b]) != 0) {
            rest[a] = axpy(rest[a], 1, rest[b]);
            pick = a;
            break;
          }
      if (pick == rest.size()) throw std::invalid_argument("form is degenerate modulo theta");
    }
    const F3Vector x = rest[pick];
    rest.erase(rest.begin() + static_cast<long>(pick));
    const int q = inner(x, x);
    for (auto& y : rest) y = axpy(y, mod3(-inner(y, x) * inv3(q)), x);
    basis_.push_back(x);
    norms_.push_back(q);
  }
}

int SpinorContext::count_norm(int value) const {
  int c = 0;
  for (int q : norms_) c += q == value;
  return c;
}

std::vector<int> SpinorContext::reduce(const SVector& v) const {
  std::vector<int> out;
  for (const auto& x : v) out.push_back(mod_theta(x));
  return out;
}

std::vector<std::vector<int>> SpinorContext::reduce(const SMatrix& m) const {
  std::vector<std::vector<int>> out(m.size(), std::vector<int>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out[r][c] = mod_theta(m[r][c]);
  return out;
}

int SpinorContext::inner(const std::vector<int>& a, const std::vector<int>& b) const {
  long long s = 0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c) s += a[r] * form_[r][c] * b[c];
  return mod3(s);
}

int SpinorContext::spinor_norm(const SMatrix& m) const {
  const int n = dim();
  if (static_cast<int>(m.size()) != n || !is_integral(m) || !preserves_form(lattice_, m))
    throw std::invalid_argument("matrix does not preserve the lattice");
  const auto rows = reduce(m);
  F3Matrix g(n, F3Vector(n));
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) g[c][r] = rows[r][c];

  // Peel off reflections s_w with s_w g x = x for each basis vector x in
  // turn; each s_w fixes the vectors already handled.
  int product = 1;
  auto reflect = [&](const F3Vector& w) {
    const int q = inner(w, w);
    product = mod3(product * q);
    for (auto& col : g) col = axpy(col, mod3(-2 * inner(w, col) * inv3(q)), w);
  };
  for (const auto& x : basis_) {
    const F3Vector gx = image_of(g, x);
    if (gx == x) continue;
    const F3Vector w = axpy(gx, -1, x);
    if (inner(w, w) != 0) {
      reflect(w);
    } else {
      reflect(axpy(gx, 1, x));
      reflect(x);
    }
    if (image_of(g, x) != x) throw std::logic_error("reflection did not fix the basis vector");
  }
  return product == 1 ? 1 : -1;
}

}  // namespace hyperlat
