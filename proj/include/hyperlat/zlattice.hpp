#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hyperlat/rational.hpp"

namespace hyperlat {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

/// Lower-triangular column Hermite form of the Z-span of `columns` (each of
/// length m).  The result has exactly m columns with positive diagonal, so
/// the span must have full rank.
IntMatrix hermite_basis(const std::vector<IntVector>& columns, int m);

/// Reduce x modulo the lattice spanned by the columns of a Hermite basis so
/// that 0 <= x[k] < H[k][k].
IntVector reduce_by_hermite(const IntMatrix& hermite, IntVector x);
/// All representatives 0 <= x[k] < H[k][k].
std::vector<IntVector> hermite_box(const IntMatrix& hermite);

/// Solutions of f . x = rhs over Z: a particular solution (if any) and a
/// basis of the kernel.
struct LinearSolution {
  std::optional<IntVector> particular;
  std::vector<IntVector> kernel;
};
LinearSolution solve_functional(const IntVector& f, std::int64_t rhs);

RatMatrix rat_inverse(const RatMatrix& a);  // throws on singular input
Rational rat_determinant(RatMatrix a);

/// Positive definite quadratic form on Z^m with rational Gram matrix.
///
/// Enumeration is Fincke-Pohst style over an exact rational LDL factorisation.
/// Branch bounds use the factorisation rounded to double precision and widened
/// by a relative margin; every reported point is then tested exactly in scaled
/// integer arithmetic, so outputs are exact.
class QuadForm {
 public:
  explicit QuadForm(const RatMatrix& gram);

  int dim() const { return m_; }
  const RatMatrix& gram() const { return gram_; }

  Rational value(const IntVector& x) const;
  Rational distance2(const IntVector& x, const RatVector& center) const;

  using Visitor = std::function<void(const IntVector&, const Rational&)>;
  /// Visit every x with (x-c)^T G (x-c) <= bound (< bound when strict), in
  /// unspecified order, together with its exact value.
  void enumerate(const RatVector& center, const Rational& bound, bool strict,
                 const Visitor& visit) const;

  struct Closest {
    Rational dist2;
    std::vector<IntVector> points;  // sorted lexicographically
  };
  Closest closest(const RatVector& center) const;

 private:
  int m_;
  RatMatrix gram_;
  IntMatrix scaled_;       // scale_ * gram_
  std::int64_t scale_;
  std::vector<double> diag_;            // D_i
  std::vector<std::vector<double>> u_;  // unit upper triangular factor
};

}  // namespace hyperlat
