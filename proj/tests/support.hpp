#pragma once

#include <random>
#include <vector>

#include "hyperlat/matrix.hpp"

namespace hyperlat::testing {

// Integral elements of norm <= max_norm, by brute force over Z-coordinates.
inline std::vector<Scalar> small_elements(Ring ring, int max_norm) {
  std::vector<Scalar> out;
  const int d = degree(ring);
  int r = 1;
  while (r * r <= max_norm) ++r;
  r = 2 * r + 1;
  std::vector<std::int64_t> z(d, -r);
  while (true) {
    const Scalar x = Scalar::from_zcoords(ring, z);
    if (x.norm() <= max_norm) out.push_back(x);
    int k = 0;
    while (k < d && z[k] == r) z[k++] = -r;
    if (k == d) break;
    ++z[k];
  }
  return out;
}

inline Scalar random_element(std::mt19937_64& rng, Ring ring, int range) {
  std::uniform_int_distribution<std::int64_t> dist(-range, range);
  std::vector<std::int64_t> z;
  for (int s = 0; s < degree(ring); ++s) z.push_back(dist(rng));
  return Scalar::from_zcoords(ring, z);
}

inline SVector random_vector(std::mt19937_64& rng, Ring ring, int n, int range) {
  SVector v;
  for (int k = 0; k < n; ++k) v.push_back(random_element(rng, ring, range));
  return v;
}

inline Scalar random_unit(std::mt19937_64& rng, Ring ring) {
  const auto us = units(ring);
  return us[std::uniform_int_distribution<std::size_t>(0, us.size() - 1)(rng)];
}

// Imaginary part of a random element, so z is imaginary with denominators of the ring.
inline Scalar random_imaginary(std::mt19937_64& rng, Ring ring, int range) {
  return random_element(rng, ring, range).imag_part();
}

// Monomial unitary matrix for the standard form: a permutation with unit entries.
inline SMatrix random_monomial(std::mt19937_64& rng, Ring ring, int n) {
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  SMatrix s = zero_matrix(ring, n, n);
  for (int k = 0; k < n; ++k) s[perm[k]][k] = random_unit(rng, ring);
  return s;
}

}  // namespace hyperlat::testing
