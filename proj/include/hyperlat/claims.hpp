#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperlat/lorentz.hpp"

namespace hyperlat {

// ---------------------------------------------------------------------------
// Covering radius evidence.  Sampling can refute a claimed radius but never
// prove it; reports say so.

struct CoveringReport {
  Rational claimed;
  std::vector<Rational> hole_distances;  // exact, one per supplied hole
  bool holes_exact = false;              // every hole at exactly the claim
  std::size_t grid_points = 0;
  std::size_t random_points = 0;
  Rational max_sampled;  // largest distance^2 seen over grid and samples
  SVector worst;         // a point attaining it
  bool pass() const { return holes_exact && max_sampled <= claimed; }
};
/// Checks each hole (rational coordinates) and then a deterministic grid of
/// at most grid_cap points and `samples` seeded random points in the real
/// fundamental domain.  The lattice must be definite.
CoveringReport verify_covering_radius(const Lattice& lattice, const Rational& claimed,
                                      const std::vector<SVector>& holes, std::size_t samples,
                                      std::uint64_t seed, std::size_t grid_cap = 4096);

// ---------------------------------------------------------------------------
// The quaternionic Barnes-Wall lattice.

struct BarnesWallReport {
  bool selfdual = false;
  Rational min_norm;
  std::size_t norm2_count = 0;
  int norm2_rank = 0;  // rank of the span of the norm 2 vectors
  std::size_t classes = 0;  // classes of L / L(1+i)
  std::map<Rational, std::size_t> class_min_norms;
  std::size_t holes_checked = 0;
  std::vector<Rational> hole_distances;  // exact distance^2 of each hole point
  bool holes_ok = false;      // lambda (1+i)^-1, lambda of norm 3, at distance^2 3/2 and accepted
  bool controls_ok = false;   // lambda (1+i)^-1, lambda of norm 2, rejected and nearer
  bool pass() const;
};
/// `holes` is the number of norm 3 vectors lambda turned into hole points.
BarnesWallReport verify_barnes_wall(const Lattice& bw, std::size_t holes = 20);

// ---------------------------------------------------------------------------
// Spinor norm on L / L theta for Eisenstein lattices.  Modulo theta the
// Hermitian form becomes a symmetric bilinear form over F_3 (omega = 1).

class SpinorContext {
 public:
  /// Throws std::invalid_argument unless the lattice is over the Eisenstein
  /// integers and its form is nondegenerate modulo theta.
  explicit SpinorContext(const Lattice& lattice);

  int dim() const { return static_cast<int>(form_.size()); }
  const std::vector<std::vector<int>>& form() const { return form_; }
  /// Orthogonal basis found by Gram-Schmidt over F_3, and its norms (1 or 2).
  const std::vector<std::vector<int>>& orthogonal_basis() const { return basis_; }
  const std::vector<int>& basis_norms() const { return norms_; }
  int count_norm(int value) const;

  std::vector<int> reduce(const SVector& v) const;
  std::vector<std::vector<int>> reduce(const SMatrix& m) const;
  int inner(const std::vector<int>& a, const std::vector<int>& b) const;  // in {0,1,2}

  /// +1 or -1.  The induced map is written as a product of reflections by
  /// fixing the orthogonal basis vectors in turn; the result is the product of
  /// the reflection vectors' norms modulo squares.  Throws std::invalid_argument
  /// unless m preserves the lattice.
  int spinor_norm(const SMatrix& m) const;

 private:
  Lattice lattice_;
  std::vector<std::vector<int>> form_;
  std::vector<std::vector<int>> basis_;
  std::vector<int> norms_;
};

/// Eisenstein integers modulo theta, in {0,1,2}.
int mod_theta(const Scalar& x);

// ---------------------------------------------------------------------------
// Null quotients v^perp / <v>.

struct NullQuotient {
  SVector partner;             // w with <v|w> = 1
  std::vector<SVector> basis;  // in v^perp, classes forming a basis of v^perp / <v>
  Lattice quotient;
};
/// L must be selfdual and v a primitive null vector; throws
/// std::invalid_argument otherwise.
NullQuotient null_quotient(const Lattice& lattice, const SVector& v);

// ---------------------------------------------------------------------------
// Even sublattices of odd selfdual Gaussian lattices.

struct EvenConstruction {
  std::vector<SVector> even_basis;  // M_e = {x : |x|^2 even}, in coordinates of M
  struct Between {
    std::vector<SVector> basis;  // N with M_e < N < M_e^*, index 2 over M_e
    Lattice lattice;
    bool original = false;  // N = M
    bool integral = false;
    bool even = false;
    bool selfdual = false;
  };
  std::vector<Between> between;
  int even_selfdual() const;
};
/// Throws std::invalid_argument unless M is Gaussian, odd and selfdual.
EvenConstruction even_sublattice_constructions(const Lattice& m);

// ---------------------------------------------------------------------------
// Reflections of selfdual lattices.

struct ReflectionClass {
  bool reflection = false;
  SVector root;  // primitive
  Scalar xi;
  Rational root_norm;
  /// Root of norm +-1, or of norm +-2 with xi = -1.
  bool short_or_biflection = false;
  std::string reason;  // when not a reflection
};
ReflectionClass classify_reflection(const Lattice& lattice, const SMatrix& m);

// ---------------------------------------------------------------------------
// Cone angles along the strata where two points collide.  Angles are rational
// multiples of pi.

struct ConeAngle {
  int i = 0, j = 0;
  Rational angle;            // multiple of pi
  std::optional<int> order;  // 2 / angle when that is an integer >= 2
};
/// alpha: multiples of pi, each in (0, 2), summing to 4.  Pairs with
/// alpha_i + alpha_j < 2 only.  Throws std::invalid_argument otherwise.
std::vector<ConeAngle> cone_angles(const std::vector<Rational>& alpha);
std::set<int> reflection_orders(const std::vector<ConeAngle>& angles);

}  // namespace hyperlat
