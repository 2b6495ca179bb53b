#pragma once

#include <string>
#include <vector>

#include "hyperlat/lattice.hpp"

namespace hyperlat {

/// L = base + II_{1,1}.  Vectors are (lambda; mu, nu) with lambda in base
/// coordinates, so that <(l1;m1,n1)|(l2;m2,n2)> = <l1|l2> + conj(m1) n2 + conj(n1) m2.
class LorentzLattice {
 public:
  explicit LorentzLattice(Lattice base);

  const Lattice& base() const { return base_; }
  const Lattice& lattice() const { return full_; }
  Ring ring() const { return base_.ring(); }
  int n() const { return base_.rank(); }
  int dim() const { return base_.rank() + 2; }

  SVector make(const SVector& lambda, const Scalar& mu, const Scalar& nu) const;
  SVector lambda(const SVector& v) const;
  const Scalar& mu(const SVector& v) const { return v[n()]; }
  const Scalar& nu(const SVector& v) const { return v[n() + 1]; }
  SVector rho() const;  // (0;0,1)

  Scalar inner(const SVector& v, const SVector& w) const { return full_.inner(v, w); }
  Rational norm(const SVector& v) const { return full_.norm(v); }
  /// <rho|v>, which is the mu component.
  Scalar height(const SVector& v) const;
  /// lambda * mu^-1; throws std::domain_error at height zero.
  SVector lies_over(const SVector& v) const;
  /// Whether v is a right multiple rho * s.
  bool is_rho_multiple(const SVector& v) const;

 private:
  Lattice base_;
  Lattice full_;
};

/// One step of an isometry word.
struct Generator {
  enum class Kind { Reflection, Translation, Linear };
  Kind kind = Kind::Linear;
  SVector root;  // reflection: root and xi
  Scalar xi;
  SVector x;  // translation T_{x,z}
  Scalar z;
  SMatrix matrix;  // linear: explicit matrix with a label
  std::string label;
};

/// A matrix together with the word of generators that produced it, listed in
/// the order they are applied.
struct Isometry {
  SMatrix matrix;
  std::vector<Generator> word;
};

/// The xi-reflection v -> v - r (1-xi) <r|v> / r^2.  Throws std::invalid_argument
/// for a null root, a non-unit xi or xi = 1.
SMatrix reflection_matrix(const Lattice& lattice, const SVector& root, const Scalar& xi);
/// Translation T_{x,z}: (lambda; mu, nu) -> (lambda + x mu; mu; nu - <x|lambda> + (z - x^2/2) mu).
/// Throws std::invalid_argument when z is not imaginary.
SMatrix translation_matrix(const LorentzLattice& lorentz, const SVector& x, const Scalar& z);

Isometry identity_isometry(Ring ring, int dim);
Isometry reflection(const Lattice& lattice, const SVector& root, const Scalar& xi);
Isometry translation(const LorentzLattice& lorentz, const SVector& x, const Scalar& z);
Isometry linear_isometry(SMatrix matrix, std::string label);
/// Acts on the base by s and trivially on II_{1,1}.
SMatrix extend_to_lorentz(const LorentzLattice& lorentz, const SMatrix& s);

/// a o b: apply b first.
Isometry compose(const Isometry& a, const Isometry& b);
Isometry inverse(const Isometry& a);
SVector act(const Isometry& a, const SVector& v);

Generator inverse(const Generator& g);
SMatrix generator_matrix(const LorentzLattice& lorentz, const Generator& g);
/// Rebuild a word's matrix from its generators alone.
SMatrix word_matrix(const LorentzLattice& lorentz, const std::vector<Generator>& word);
/// Apply the generators one at a time.
SVector replay(const LorentzLattice& lorentz, const std::vector<Generator>& word, const SVector& v);

/// M* G M = G.
bool preserves_form(const Lattice& lattice, const SMatrix& m);
/// M and M^-1 both integral.
bool preserves_lattice(const SMatrix& m);
/// T_{x,z} preserves L iff x is integral and z - x^2/2 is in the ring.
bool translation_is_integral(const LorentzLattice& lorentz, const SVector& x, const Scalar& z);

struct HeisenbergReport {
  bool composition = false;  // T_{x,z} T_{x',z'} = T_{x+x', z+z'+Im<x'|x>}
  bool inverse = false;      // T_{x,z}^-1 = T_{-x,-z}
  bool commutator = false;   // [T_{x,0}, T_{x',0}] = T_{0, 2 Im<x'|x>}
  bool conjugation = false;  // S T_{x,z} S^-1 = T_{Sx,z}
  bool ok() const { return composition && inverse && commutator && conjugation; }
};
/// s must be a unitary matrix of the base lattice.
HeisenbergReport verify_heisenberg(const LorentzLattice& lorentz, const SVector& x, const Scalar& z,
                                   const SVector& x2, const Scalar& z2, const SMatrix& s);

enum class RootLength { Short, Long };  // norm 1 or 2
Rational root_norm(RootLength length);
std::string str(RootLength length);

/// Roots (lambda; h, nu) of the given length, for every integral nu with
/// |nu - nu_c|^2 <= radius2 where nu_c = h (N - lambda^2) / (2|h|^2) is the
/// smallest real solution of the norm equation.  Empty when no nu is integral.
std::vector<SVector> roots_of_height(const LorentzLattice& lorentz, const Scalar& h, const SVector& lambda,
                                     RootLength length, const Rational& radius2);

/// Z-basis of {z in R : Re(conj(h) z) = 0}.
std::vector<Scalar> orthogonal_sublattice(Ring ring, const Scalar& h);
/// An integral nu with Re(conj(h) nu) = target, if any.
std::optional<Scalar> solve_real_part(Ring ring, const Scalar& h, const Rational& target);

}  // namespace hyperlat
