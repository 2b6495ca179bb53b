#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperlat/matrix.hpp"
#include "hyperlat/zlattice.hpp"

namespace hyperlat {

/// Hermitian lattice given by the Gram matrix of a basis of a free right module.
class Lattice {
 public:
  Lattice(Ring ring, SMatrix gram, std::string name = "");

  Ring ring() const { return ring_; }
  int rank() const { return static_cast<int>(gram_.size()); }
  const SMatrix& gram() const { return gram_; }
  const std::string& name() const { return name_; }

  Scalar inner(const SVector& x, const SVector& y) const { return hermitian(gram_, x, y); }
  Rational norm(const SVector& x) const { return inner(x, x).re(); }

  bool is_definite() const { return form_ != nullptr; }
  /// The real quadratic form; throws std::domain_error if indefinite.
  const QuadForm& form() const;

  /// Gram of (x,y) = Re<x|y> on the Z-basis e_k u_s, index k*d + s.
  const RatMatrix& real_gram() const { return real_gram_; }
  RatVector to_real(const SVector& v) const;
  SVector from_real(const IntVector& z) const;
  SVector from_real(const RatVector& z) const;

 private:
  Ring ring_;
  SMatrix gram_;
  std::string name_;
  RatMatrix real_gram_;
  std::shared_ptr<const QuadForm> form_;
};

/// Orthogonal sum.
Lattice direct_sum(const Lattice& a, const Lattice& b, std::string name = "");
/// Gram of the sublattice spanned by the given coordinate columns.
SMatrix gram_of(const SMatrix& gram, const std::vector<SVector>& columns);

/// Right-module basis of the span of integral column vectors (length n), in
/// lower-triangular echelon form.  Columns must span a rank-n module.
std::vector<SVector> module_basis(Ring ring, int n, std::vector<SVector> columns);
/// Coordinates c with v = sum_k basis[k] c_k for a triangular basis from
/// module_basis; nullopt if v is not in the span.
std::optional<SVector> module_coords(const std::vector<SVector>& basis, const SVector& v);

using ShortVectors = std::map<Rational, std::vector<SVector>>;
/// All nonzero vectors of norm <= max_norm, grouped by norm and sorted.
ShortVectors short_vectors(const Lattice& lattice, const Rational& max_norm);

struct ClosestPoints {
  Rational dist2;
  std::vector<SVector> points;  // sorted
};
ClosestPoints closest_points(const Lattice& lattice, const SVector& target);

bool is_selfdual(const Lattice& lattice);
bool is_even(const Lattice& lattice);
bool is_integral_lattice(const Lattice& lattice);
bool is_primitive(const SVector& v);
/// Dual basis columns: the k-th column d_k satisfies <e_l|d_k> = delta.
std::vector<SVector> dual_basis(const Lattice& lattice);
/// Whether t (rational coordinates) has integral inner product with every basis vector.
bool in_dual(const Lattice& lattice, const SVector& t);

/// Counts of vectors (including zero) of norm 0, 1, ..., max_norm.  Vectors of
/// non-integral norm are not counted.
std::vector<std::int64_t> theta_prefix(const Lattice& lattice, int max_norm);

struct ResidueClass {
  SVector residue;         // coordinates reduced mod m
  Rational min_norm;
  SVector representative;  // a vector of minimal norm in the class
};
/// Every class of L/Lm with a vector of minimal norm, sorted by residue.
std::vector<ResidueClass> residue_census(const Lattice& lattice, const Scalar& m);

/// True iff t = lambda (1+i)^-1 for some lambda in the lattice of odd norm.
bool deep_hole_predicate_bw(const Lattice& bw, const SVector& t);

struct Fingerprint {
  int rank = 0;
  Ring ring = Ring::Gauss;
  bool definite = true;
  std::vector<std::int64_t> theta;  // norms 0..4, definite lattices only
  Rational det;                     // of the real form
  bool even = false;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const Lattice& lattice);
std::string str(const Fingerprint& f);

}  // namespace hyperlat
