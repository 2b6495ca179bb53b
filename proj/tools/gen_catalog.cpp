// Regenerates the catalog data file from the congruence definitions.
#include <iostream>

#include "hyperlat/catalog.hpp"

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : hyperlat::catalog_path();
  const auto entries = hyperlat::build_congruence_catalog();
  hyperlat::save_catalog(path, entries);
  for (const auto& e : entries) std::cout << e.name << ": " << hyperlat::str(e.fingerprint) << "\n";
  std::cout << "wrote " << path << "\n";
  return 0;
}
