#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlat/rational.hpp"

namespace hyperlat {

enum class Ring { Gauss, Eisenstein, Hurwitz };

// Rank of the ring as a Z-module: 2, 2, 4.
int degree(Ring ring);
char ring_letter(Ring ring);
Ring parse_ring(std::string_view text);
std::string ring_name(Ring ring);

/// An element of the rational span of one of the three orders.
///
/// Every value is stored as a rational quaternion (n0 + n1 i + n2 j + n3 k)/d
/// in lowest terms.  Gaussian values live in Q(i); Eisenstein values live in
/// Q(i+j+k) through omega = (-1+i+j+k)/2, so the embedding of the Eisenstein
/// integers into the Hurwitz integers is the identity on storage.
///
/// Arithmetic is exact.  Intermediate products use 128-bit integers and
/// results that do not fit 62 bits throw std::overflow_error.
class Scalar {
 public:
  Scalar();
  Scalar(Ring ring, std::int64_t value);

  static Scalar from_parts(Ring ring, const std::array<std::int64_t, 4>& num, std::int64_t den);
  /// Integral element from ring coordinates: (a,b) = a+bi, (a,b) = a+b*omega,
  /// or doubled Hurwitz coordinates (2a,2b,2c,2d).
  static Scalar from_coords(Ring ring, const std::vector<std::int64_t>& coords);
  static Scalar from_rational_coords(Ring ring, const std::vector<Rational>& coords);
  static Scalar from_rational(Ring ring, const Rational& q);
  /// Coordinates with respect to the Z-basis {1,i}, {1,omega} or {1,i,j,(1+i+j+k)/2}.
  static Scalar from_zcoords(Ring ring, const std::vector<std::int64_t>& z);

  static Scalar i(Ring ring);  // Gauss or Hurwitz
  static Scalar j();
  static Scalar k();
  static Scalar omega(Ring ring);  // Eisenstein or Hurwitz
  static Scalar theta(Ring ring);  // omega - conj(omega)

  Ring ring() const { return ring_; }
  const std::array<std::int64_t, 4>& num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_real() const;
  bool is_imaginary() const;
  bool is_integral() const;
  bool is_unit() const;

  Scalar conj() const;
  Rational norm() const;  // x * conj(x)
  Rational re() const;
  Scalar real_part() const;
  Scalar imag_part() const;
  Scalar inverse() const;

  /// Ring coordinates; throws std::domain_error for non-integral values.
  std::vector<std::int64_t> coords() const;
  std::vector<Rational> rational_coords() const;
  /// Coordinates in the Z-basis used by real forms.
  std::vector<Rational> zcoords() const;
  std::vector<std::int64_t> int_zcoords() const;
  /// Quaternion components a, b, c, d.
  std::array<Rational, 4> components() const;

  Scalar with_ring(Ring ring) const;  // retag, checking membership
  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Lexicographic order on ring coordinates (numerical comparison).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  Scalar(Ring ring, const std::array<__int128, 4>& num, __int128 den);
  Ring ring_;
  std::array<std::int64_t, 4> num_;
  std::int64_t den_;
};

Scalar scale(const Scalar& x, const Rational& q);
Scalar right_divide(const Scalar& x, const Scalar& y);  // x * y^-1
Scalar left_divide(const Scalar& y, const Scalar& x);   // y^-1 * x

/// Nearest element of the order (ties resolved deterministically).
Scalar nearest_integral(const Scalar& x);

std::vector<Scalar> units(Ring ring);
std::vector<Scalar> zbasis(Ring ring);
Scalar embed_eisenstein_in_hurwitz(const Scalar& x);

/// Representatives of the cosets x + R*m, one per coset, taken from the
/// Hermite box of the Z-lattice R*m.
std::vector<Scalar> residues_mod(Ring ring, const Scalar& m);
/// The representative from residues_mod congruent to x.
Scalar reduce_mod(const Scalar& x, const Scalar& m);

/// Cached residue system for repeated reduction modulo the left ideal R*m.
class ResidueSystem {
 public:
  ResidueSystem(Ring ring, const Scalar& m);
  Scalar reduce(const Scalar& x) const;
  std::size_t size() const;  // index of R*m in R
  std::vector<Scalar> representatives() const;

 private:
  Ring ring_;
  std::vector<std::vector<std::int64_t>> hermite_;
};

/// Z-basis of Im(h R) = (h R) intersected with the imaginary quaternions.
std::vector<Scalar> imaginary_sublattice(Ring ring, const Scalar& h);

/// Left gcd: a generator g of the left ideal R*a + R*b.
Scalar left_gcd(const Scalar& a, const Scalar& b);

}  // namespace hyperlat
