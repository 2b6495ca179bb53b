#include <set>

#include "doctest.h"
#include "hyperlat/matrix.hpp"
#include "hyperlat/scalar.hpp"

using namespace hyperlat;

namespace {

// Every integral element with small Z-coordinates.
std::vector<Scalar> box(Ring ring, int r) {
  std::vector<Scalar> out;
  const int d = degree(ring);
  std::vector<std::int64_t> z(d, -r);
  while (true) {
    out.push_back(Scalar::from_zcoords(ring, z));
    int k = 0;
    while (k < d && z[k] == r) z[k++] = -r;
    if (k == d) break;
    ++z[k];
  }
  return out;
}

bool congruent(const Scalar& x, const Scalar& y, const Scalar& m) {
  return right_divide(x - y, m).is_integral();
}

}  // namespace

TEST_CASE("named elements") {
  const Scalar w = Scalar::omega(Ring::Eisenstein);
  const Scalar t = Scalar::theta(Ring::Eisenstein);
  CHECK(w * w == w.conj());
  CHECK(w * w * w == Scalar(Ring::Eisenstein, 1));
  CHECK(t * t == Scalar(Ring::Eisenstein, -3));
  CHECK(t == w - w.conj());
  CHECK(Scalar::i(Ring::Hurwitz) * Scalar::j() == Scalar::k());
  CHECK(Scalar::j() * Scalar::i(Ring::Hurwitz) == -Scalar::k());
  CHECK(Scalar::i(Ring::Gauss).norm() == 1);
  CHECK(t.norm() == 3);
}

TEST_CASE("unit groups match brute force") {
  for (Ring ring : {Ring::Gauss, Ring::Eisenstein, Ring::Hurwitz}) {
    std::set<Scalar> found;
    for (const auto& x : box(ring, 2))
      if (x.norm() == 1) found.insert(x);
    const auto us = units(ring);
    CHECK(std::set<Scalar>(us.begin(), us.end()) == found);
    CHECK(std::is_sorted(us.begin(), us.end()));
  }
  CHECK(units(Ring::Gauss).size() == 4);
  CHECK(units(Ring::Eisenstein).size() == 6);
  CHECK(units(Ring::Hurwitz).size() == 24);
}

TEST_CASE("coordinates round trip") {
  for (Ring ring : {Ring::Gauss, Ring::Eisenstein, Ring::Hurwitz})
    for (const auto& x : box(ring, 2)) {
      CHECK(Scalar::from_coords(ring, x.coords()) == x);
      CHECK(Scalar::from_zcoords(ring, x.int_zcoords()) == x);
      CHECK(x.is_integral());
    }
  const Scalar half = Scalar::from_coords(Ring::Hurwitz, {1, 1, 1, 1});
  CHECK(half.is_integral());
  CHECK(half.norm() == 1);
  CHECK_THROWS(Scalar::from_coords(Ring::Hurwitz, {1, 0, 0, 0}));
}

TEST_CASE("arithmetic properties") {
  for (Ring ring : {Ring::Gauss, Ring::Eisenstein, Ring::Hurwitz}) {
    const auto xs = box(ring, 1);
    for (std::size_t a = 0; a < xs.size(); a += 3)
      for (std::size_t b = 0; b < xs.size(); b += 5) {
        const Scalar& x = xs[a];
        const Scalar& y = xs[b];
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK((x * y).conj() == y.conj() * x.conj());
        CHECK((x * y).is_integral());
        if (!y.is_zero()) {
          CHECK(right_divide(x * y, y) == x);
          CHECK(left_divide(y, y * x) == x);
          const Scalar q = nearest_integral(right_divide(x, y));
          CHECK((x - q * y).norm() < y.norm());
        }
      }
  }
}

TEST_CASE("residue systems match brute force") {
  const std::vector<std::pair<Ring, Scalar>> cases = {
      {Ring::Gauss, Scalar::from_coords(Ring::Gauss, {1, 1})},
      {Ring::Gauss, Scalar(Ring::Gauss, 2)},
      {Ring::Gauss, Scalar::from_coords(Ring::Gauss, {2, 1})},
      {Ring::Eisenstein, Scalar::theta(Ring::Eisenstein)},
      {Ring::Eisenstein, Scalar(Ring::Eisenstein, 2)},
      {Ring::Hurwitz, Scalar::from_coords(Ring::Hurwitz, {2, 2, 0, 0})},
      {Ring::Hurwitz, Scalar(Ring::Hurwitz, 2)},
  };
  for (const auto& [ring, m] : cases) {
    std::vector<Scalar> classes;
    for (const auto& x : box(ring, 2)) {
      bool seen = false;
      for (const auto& c : classes)
        if (congruent(x, c, m)) seen = true;
      if (!seen) classes.push_back(x);
    }
    const auto reps = residues_mod(ring, m);
    CHECK(reps.size() == classes.size());
    for (const auto& x : box(ring, 1)) {
      const Scalar r = reduce_mod(x, m);
      CHECK(congruent(x, r, m));
      CHECK(std::find(reps.begin(), reps.end(), r) != reps.end());
    }
  }
}

TEST_CASE("imaginary sublattice of (1+i)H") {
  const Scalar h = Scalar::from_coords(Ring::Hurwitz, {2, 2, 0, 0});
  const auto basis = imaginary_sublattice(Ring::Hurwitz, h);
  CHECK(basis.size() == 3);
  // Brute force: imaginary elements of (1+i)H with small coordinates are
  // integral a i + b j + c k with a + b + c even.
  for (const auto& x : box(Ring::Hurwitz, 2)) {
    const Scalar y = h * x;
    if (!y.is_imaginary()) continue;
    const auto c = y.components();
    CHECK(is_integer(c[1]));
    const auto a = static_cast<std::int64_t>(c[1]), b = static_cast<std::int64_t>(c[2]),
               d = static_cast<std::int64_t>(c[3]);
    CHECK((a + b + d) % 2 == 0);
  }
  for (const auto& b : basis) {
    CHECK(b.is_imaginary());
    CHECK(right_divide(b, h).is_integral());
  }
}

TEST_CASE("left gcd and content") {
  const Ring h = Ring::Hurwitz;
  const Scalar a = Scalar::from_coords(h, {2, 2, 0, 0});
  const Scalar b = Scalar(h, 2);
  const Scalar g = left_gcd(a, b);
  CHECK(g.norm() == 2);
  CHECK(right_divide(a, g).is_integral());
  CHECK(right_divide(b, g).is_integral());
  CHECK(content({Scalar(h, 3), Scalar(h, 5)}).is_unit());
}

TEST_CASE("matrix inverse over the quaternions") {
  const Ring h = Ring::Hurwitz;
  const SMatrix m = {{Scalar(h, 1), Scalar::i(h)}, {Scalar::j(), Scalar(h, 2)}};
  const SMatrix inv = inverse(m);
  CHECK(mul(m, inv) == identity(h, 2));
  CHECK(mul(inv, m) == identity(h, 2));
}
