#include "hyperlat/scalar_lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperlat {

ScalarLattice::ScalarLattice(Ring ring, std::vector<Scalar> basis) : ring_(ring), basis_(std::move(basis)) {
  const std::size_t m = basis_.size();
  for (auto& b : basis_) b = b.with_ring(ring_);
  gram_.assign(m, RatVector(m, Rational(0)));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) gram_[s][t] = (basis_[s].conj() * basis_[t]).re();
  if (m > 0) {
    gram_inv_ = rat_inverse(gram_);
    form_ = std::make_shared<const QuadForm>(gram_);
  }
}

Scalar ScalarLattice::combine(const IntVector& c) const {
  Scalar out(ring_, 0);
  for (std::size_t s = 0; s < c.size(); ++s)
    if (c[s] != 0) out += basis_[s] * Scalar(ring_, c[s]);
  return out;
}

std::pair<RatVector, Rational> ScalarLattice::project(const Scalar& t) const {
  const std::size_t m = basis_.size();
  RatVector b(m);
  for (std::size_t s = 0; s < m; ++s) b[s] = (basis_[s].conj() * t).re();
  RatVector c(m, Rational(0));
  Rational along = 0;
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t u = 0; u < m; ++u) c[s] += gram_inv_[s][u] * b[u];
    along += b[s] * c[s];
  }
  return {c, t.norm() - along};
}

ScalarLattice::Closest ScalarLattice::closest(const Scalar& target) const {
  const Scalar t = target.with_ring(ring_);
  if (basis_.empty()) return {t.norm(), {Scalar(ring_, 0)}};
  const auto [c, perp] = project(t);
  const QuadForm::Closest q = form_->closest(c);
  Closest out{q.dist2 + perp, {}};
  for (const auto& x : q.points) out.points.push_back(combine(x));
  std::sort(out.points.begin(), out.points.end());
  return out;
}

void ScalarLattice::enumerate(const Scalar& target, const Rational& bound,
                              const std::function<void(const Scalar&, const Rational&)>& visit) const {
  const Scalar t = target.with_ring(ring_);
  if (basis_.empty()) {
    if (t.norm() <= bound) visit(Scalar(ring_, 0), t.norm());
    return;
  }
  const auto [c, perp] = project(t);
  if (perp > bound) return;
  form_->enumerate(c, bound - perp, false,
                   [&](const IntVector& x, const Rational& value) { visit(combine(x), value + perp); });
}

bool ScalarLattice::contains(const Scalar& x) const {
  const Scalar t = x.with_ring(ring_);
  if (basis_.empty()) return t.is_zero();
  const auto [c, perp] = project(t);
  if (perp != 0) return false;
  for (const auto& q : c)
    if (!is_integer(q)) return false;
  return true;
}

}  // namespace hyperlat
