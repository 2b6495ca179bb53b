#pragma once

#include <string>
#include <vector>

#include "hyperlat/lattice.hpp"

namespace hyperlat {

/// A lattice defined as a congruence subset of R^n, optionally scaled on the
/// left, with its explicit basis.
struct CatalogEntry {
  std::string name;
  Ring ring;
  std::string definition;
  std::vector<SVector> basis;  // columns in R^n with the standard form
  SMatrix gram;
  Fingerprint fingerprint;
};

/// Build the congruence-defined entries from their definitions: every residue
/// tuple mod M satisfying the congruences, together with M e_k, is fed to
/// module_basis, and the result is scaled on the left.
std::vector<CatalogEntry> build_congruence_catalog();

/// Path of the catalog data file: $HYPERLAT_CATALOG or the installed default.
std::string catalog_path();
std::vector<CatalogEntry> load_catalog(const std::string& path);
void save_catalog(const std::string& path, const std::vector<CatalogEntry>& entries);

/// Names of the fixed entries plus representative members of each family.
std::vector<std::string> catalog_names();

/// Look up a lattice by name.  Families are parsed from the name:
///   R<n>_<r>        R^n with the standard form
///   I_<n>_<m>_<r>   diag(+1 x n, -1 x m)
///   II_1_1_<r>      [[0,1],[1,0]]
///   II_<p>_<q>_G    E8_G^((p-q)/4) + II_1_1_G^q
/// where <r> is G, E or H.  Other names are read from the data file.
Lattice catalog(const std::string& name);

}  // namespace hyperlat
