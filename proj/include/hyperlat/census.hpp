#pragma once

#include <cstddef>
#include <vector>

#include "hyperlat/reduce.hpp"

namespace hyperlat {

/// A word g carrying a short root of unit height to a multiple of (e_k; 0, 0)
/// by two braid moves, so that g v lies in the hyperplane lambda_k = 0 for
/// any v orthogonal to the root.  Needs the standard base over the
/// Eisenstein or Hurwitz integers; ok is false when a hypothesis fails.
struct HyperplaneEscape {
  bool ok = false;
  Isometry move;
  int coordinate = 0;
};
HyperplaneEscape escape_to_hyperplane(const LorentzLattice& lorentz, const SVector& v, const SVector& root);

/// A word in short-root reflections carrying a primitive null vector to
/// rho * unit, found by height reduction.  Stuck vectors orthogonal to a
/// short root are moved by braid moves into a coordinate hyperplane and
/// reduced there.
struct Resolution {
  bool resolved = false;
  Scalar unit;                  // resolved: v goes to rho * unit
  std::vector<Generator> word;  // applied to v in order
  int escapes = 0;              // braid escapes into smaller rank
  ReductionOutcome stuck;       // unresolved: the last outcome
};
/// v must be a primitive null vector of a Lorentzian lattice over the
/// standard base lattice.  The filter must exclude long roots for the word to
/// stay in the short-root group.
Resolution resolve_null_vector(const LorentzLattice& lorentz, const SVector& v,
                               RuleFilter filter = RuleFilter::ShortOnly);

/// rho ~ rho * unit under the group, witnessed by a word W with W(rho) = rho * unit.
/// Right multiplication commutes with the group, so rho u ~ rho unit u for every u.
struct UnitWitness {
  Scalar unit;
  std::vector<Generator> word;
};

struct TerminalClass {
  std::vector<Scalar> units;  // the v whose terminal vector is rho * u, u in units
  std::size_t count = 0;      // enumerated vectors in the class
  SVector representative;     // least enumerated vector by height, then coordinates
};

struct CensusOptions {
  std::size_t budget = 2'000'000;  // maximum number of enumerated vectors
  unsigned threads = 0;            // 0: hardware concurrency
  RuleFilter filter = RuleFilter::ShortOnly;
};

struct CensusReport {
  Ring ring = Ring::Eisenstein;
  int n = 0;
  Rational bound;
  TranslationSubgroupReport translations;
  std::vector<Scalar> central;  // generators of S used for the nu window
  std::size_t representatives = 0;  // enumerated vectors up to right units
  std::size_t vectors = 0;          // representatives times the number of units
  std::size_t escapes = 0;          // representatives needing a braid escape
  std::size_t unresolved = 0;
  std::size_t max_word = 0;
  std::vector<SVector> unresolved_examples;
  std::vector<UnitWitness> witnesses;
  std::vector<TerminalClass> classes;
};

/// Partition the primitive null vectors of height |mu|^2 <= bound into
/// classes of the short-root reflection group.  Vectors are enumerated up to
/// right units, translations T_{x,z} with x in the base lattice and central
/// translations from the certified subgroup S, so each mu contributes lambda
/// modulo the left ideal R mu and nu modulo S mu.  Every representative is
/// resolved by an explicit word that is replayed before it is counted.
/// Needs Eisenstein or Hurwitz scalars and the standard base of rank 1..3;
/// throws std::invalid_argument otherwise and std::length_error when the
/// enumeration exceeds the budget.
CensusReport orbit_census(const LorentzLattice& lorentz, const Rational& bound, const CensusOptions& options = {});

}  // namespace hyperlat
