#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "hyperlat/scalar.hpp"
#include "hyperlat/zlattice.hpp"

namespace hyperlat {

/// A Z-lattice of scalars (of rank at most the ring degree) with the inner
/// product (x,y) = Re(conj(x) y).  Targets need not lie in its real span.
class ScalarLattice {
 public:
  ScalarLattice(Ring ring, std::vector<Scalar> basis);

  Ring ring() const { return ring_; }
  const std::vector<Scalar>& basis() const { return basis_; }
  Scalar combine(const IntVector& c) const;

  struct Closest {
    Rational dist2;
    std::vector<Scalar> points;  // sorted
  };
  Closest closest(const Scalar& target) const;
  /// Every lattice point x with |x - target|^2 <= bound.
  void enumerate(const Scalar& target, const Rational& bound,
                 const std::function<void(const Scalar&, const Rational&)>& visit) const;
  bool contains(const Scalar& x) const;

 private:
  // Coefficients of the orthogonal projection of t and the squared distance
  // from t to the real span.
  std::pair<RatVector, Rational> project(const Scalar& t) const;

  Ring ring_;
  std::vector<Scalar> basis_;
  RatMatrix gram_;
  RatMatrix gram_inv_;
  std::shared_ptr<const QuadForm> form_;
};

}  // namespace hyperlat
