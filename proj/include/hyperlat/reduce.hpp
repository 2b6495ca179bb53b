#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperlat/lorentz.hpp"

namespace hyperlat {

/// One row of the height table: roots of a given length and height h lying
/// over lambda h^-1 can reduce any null vector over a point within R of that
/// centre, except for the listed inner products at distance exactly R.
struct ReductionRule {
  Ring ring = Ring::Gauss;
  RootLength length = RootLength::Short;
  Scalar h;
  Rational radius2;    // R^2; unused when sqrt3 is set
  bool sqrt3 = false;  // R^2 = sqrt(3), compared through D^4 < 3
  std::vector<Scalar> exceptional;
  bool proved = false;  // covered by the two reduction lemmas; otherwise a generalisation
  std::string name() const;
  /// Whether D^2 lies within the rule's radius.
  bool covers(const Rational& d2) const;
  bool on_boundary(const Rational& d2) const;
};

/// Rows for a ring sorted by |h|^2, short before long on ties.
const std::vector<ReductionRule>& reduction_rules(Ring ring);

enum class RuleFilter { All, ShortOnly, ProvedOnly };
bool admits(RuleFilter filter, const ReductionRule& rule);

enum class OutcomeKind { Reduced, StuckOrthogonal, StuckExceptional, AtRho, Unresolved };
std::string str(OutcomeKind kind);

struct ReductionOutcome {
  OutcomeKind kind = OutcomeKind::Unresolved;
  SVector vector;  // the vector the step was applied to
  SVector result;  // Reduced: its image
  std::optional<ReductionRule> rule;
  SVector center;  // lambda, so the root lies over lambda h^-1
  Rational d2;
  SVector root;    // the reducing root, or the stuck certificate r'
  Scalar xi;       // Reduced only
  Scalar inner;    // stuck: <r'|v mu^-1>
  std::string note;
};

/// Search the roots (lambda; h, nu) of one rule for a reflection reducing
/// the height of v, which must be null with nonzero height but may have
/// rational entries.  Reports StuckOrthogonal or StuckExceptional when no
/// reflection reduces, D^2 = R^2 and a root realises a listed inner product.
ReductionOutcome attempt_center(const LorentzLattice& lorentz, const SVector& v, const ReductionRule& rule,
                                const SVector& lambda);

/// One reduction step on an integral primitive null vector of nonzero height.
ReductionOutcome reduction_step(const LorentzLattice& lorentz, const SVector& v, RuleFilter filter = RuleFilter::All);

struct ReductionResult {
  SVector input;
  SVector start;  // input divided by its content
  ReductionOutcome terminal;
  std::vector<Generator> word;  // carries start to terminal.vector
  int steps = 0;
};
/// Iterate reduction_step until the vector is a multiple of rho or stuck.
/// Throws std::runtime_error if the iteration cap 10 |ht|^2 is exceeded.
ReductionResult reduce_null_vector(const LorentzLattice& lorentz, const SVector& v,
                                   RuleFilter filter = RuleFilter::All);

/// T^-1 R T R^-1 for T = T_{x,z}, checked against T_{Rx-x, -Im<Rx|x>}.  The
/// word consists of the reflection R^-1 followed by the reflection in T^-1 r.
struct TranslationWitness {
  Isometry isometry;
  SVector x;  // translation part Rx - x
  Scalar z;   // central part -Im<Rx|x>
  bool verified = false;
};
TranslationWitness translation_from_reflections(const LorentzLattice& lorentz, const SVector& base_root,
                                                const Scalar& xi, const SVector& x, const Scalar& z);

/// Translations certified to lie in the group generated by short-root (and,
/// when allowed, long-root) reflections.
struct TranslationSubgroupReport {
  std::vector<TranslationWitness> lattice_part;  // generators of Lambda_0
  std::vector<Scalar> central;                   // generators of S, from commutators
  bool spans_base = false;                       // Lambda_0 = Lambda as a Z-module
};
/// Witnesses for x = e_k u_s (every Z-basis vector of the base) from
/// (-omega)-reflections in the coordinate roots.  Needs the standard base
/// lattice over the Eisenstein or Hurwitz integers.
TranslationSubgroupReport coordinate_translations(const LorentzLattice& lorentz);

struct BraidReport {
  Scalar rescale;            // s with <r|r' s> = 1
  bool braid_holds = false;  // R R' R = R' R R' on the standard basis
  Isometry conjugator;       // g = R R', with g r = r' s u
  Scalar unit;               // u
};
/// (-omega)-reflections R in r and R' in r' s, for short roots r, r' with
/// |<r|r'>| = 1.  Throws std::invalid_argument when the hypotheses fail.
BraidReport braid_equivalence(const Lattice& lattice, const SVector& r, const SVector& r2);

struct ScalarElementReport {
  Isometry f;  // (-omega)-reflection in (0;1,-omega) after T_{0,-theta}
  Isometry b;  // biflection in (0;1,1)
  Isometry j;  // F^3 B
  bool trivial_on_base = false;
  bool f_matrix_ok = false;    // F acts on II_{1,1} as [[0, conj w],[conj w, 0]]
  bool f_squared_scalar = false;  // F^2 acts as the scalar omega
  bool j_central = false;      // J acts as -1 on II_{1,1}
};
ScalarElementReport hyperbolic_scalar_element(Ring ring, int n);

}  // namespace hyperlat
