#include <algorithm>
#include <set>

#include "doctest.h"
#include "hyperlat/catalog.hpp"
#include "hyperlat/claims.hpp"
#include "hyperlat/reduce.hpp"
#include "support.hpp"

using namespace hyperlat;
using namespace hyperlat::testing;

namespace {

LorentzLattice standard(Ring ring, int n) { return LorentzLattice(Lattice(ring, identity(ring, n))); }

SMatrix minus_identity(Ring ring, int n) {
  SMatrix m = identity(ring, n);
  for (int k = 0; k < n; ++k) m[k][k] = Scalar(ring, -1);
  return m;
}

// A random root of norm in {1,-1,2,-2} (just 1 when short_only) with a unit
// xi for which the reflection is integral: any xi != 1 in norm +-1, xi = -1
// in norm +-2.
struct RootSpec {
  SVector root;
  Scalar xi;
};

RootSpec random_root(std::mt19937_64& rng, const Lattice& l, bool short_only) {
  const Ring ring = l.ring();
  while (true) {
    const SVector r = random_vector(rng, ring, l.rank(), 2);
    if (is_zero(r) || !is_primitive(r)) continue;
    const Rational nr = l.norm(r);
    const bool is_short = nr == 1 || (nr == -1 && !short_only);
    const bool is_long = nr == 2 || nr == -2;
    if (!is_short && !(is_long && !short_only)) continue;
    Scalar xi(ring, -1);
    if (is_short)
      while ((xi = random_unit(rng, ring)).is_one()) {
      }
    if (!preserves_lattice(reflection_matrix(l, r, xi))) continue;
    return {r, xi};
  }
}

int norm_mod3(const Lattice& l, const SVector& r) {
  const std::int64_t n = to_int64(numerator(l.norm(r)));
  return static_cast<int>(((n % 3) + 3) % 3);
}

// Random image of rho under translations and reflections in the short root
// (e_0; 1, 0), each of which preserves the lattice.
SVector random_null_in_orbit(std::mt19937_64& rng, const LorentzLattice& l) {
  const Ring ring = l.ring();
  const Scalar one(ring, 1);
  SVector e0 = zero_vector(ring, l.n());
  e0[0] = one;
  const SVector root = l.make(e0, one, Scalar(ring, 0));
  Isometry g = identity_isometry(ring, l.dim());
  for (int step = 0; step < 3; ++step) {
    while (true) {
      const SVector x = random_vector(rng, ring, l.n(), 2);
      const auto y = solve_real_part(ring, one, -l.base().norm(x) / 2);
      if (!y) continue;
      const Scalar z = y->imag_part() + random_imaginary(rng, ring, 2) * Scalar(ring, 2);
      if (!translation_is_integral(l, x, z)) continue;
      g = compose(translation(l, x, z), g);
      break;
    }
    g = compose(reflection(l.lattice(), root, Scalar(ring, -1)), g);
  }
  return act(g, l.rho());
}

}  // namespace

TEST_CASE("spinor norm on L / L theta") {
  for (int n = 1; n <= 3; ++n) {
    const LorentzLattice l = standard(Ring::Eisenstein, n);
    const SpinorContext ctx(l.lattice());
    CHECK(ctx.dim() == n + 2);
    CHECK(ctx.count_norm(1) + ctx.count_norm(2) == n + 2);
    // Orthogonal basis really is orthogonal with the recorded norms.
    for (int a = 0; a < ctx.dim(); ++a)
      for (int b = 0; b < ctx.dim(); ++b)
        CHECK(ctx.inner(ctx.orthogonal_basis()[a], ctx.orthogonal_basis()[b]) ==
              (a == b ? ctx.basis_norms()[a] : 0));
    CHECK(ctx.spinor_norm(identity(Ring::Eisenstein, n + 2)) == 1);
    CHECK(ctx.spinor_norm(minus_identity(Ring::Eisenstein, n + 2)) == -1);

    std::mt19937_64 rng(100 + n);
    for (int trial = 0; trial < 40; ++trial) {
      const RootSpec s = random_root(rng, l.lattice(), true);
      CHECK(ctx.spinor_norm(reflection_matrix(l.lattice(), s.root, s.xi)) == 1);
    }
    // Products of mixed reflections against the prediction from their reductions.
    for (int trial = 0; trial < 30; ++trial) {
      SMatrix m = identity(Ring::Eisenstein, n + 2);
      int expected = 1;
      const int len = 1 + static_cast<int>(rng() % 5);
      for (int k = 0; k < len; ++k) {
        const RootSpec s = random_root(rng, l.lattice(), false);
        m = mul(reflection_matrix(l.lattice(), s.root, s.xi), m);
        if (mod_theta(s.xi) != 1) expected *= norm_mod3(l.lattice(), s.root) == 1 ? 1 : -1;
      }
      CHECK(ctx.spinor_norm(m) == expected);
      const RootSpec s = random_root(rng, l.lattice(), false);
      const SMatrix r = reflection_matrix(l.lattice(), s.root, s.xi);
      CHECK(ctx.spinor_norm(mul(m, r)) == ctx.spinor_norm(m) * ctx.spinor_norm(r));
    }
  }
}

TEST_CASE("spinor preconditions") {
  CHECK_THROWS_AS(SpinorContext(Lattice(Ring::Gauss, identity(Ring::Gauss, 2))), std::invalid_argument);
  SMatrix g = identity(Ring::Eisenstein, 1);
  g[0][0] = Scalar(Ring::Eisenstein, 3);
  CHECK_THROWS_AS(SpinorContext(Lattice(Ring::Eisenstein, g)), std::invalid_argument);
  const LorentzLattice l = standard(Ring::Eisenstein, 1);
  const SpinorContext ctx(l.lattice());
  SMatrix bad = identity(Ring::Eisenstein, 3);
  bad[0][1] = Scalar(Ring::Eisenstein, 1);
  CHECK_THROWS_AS(ctx.spinor_norm(bad), std::invalid_argument);
}

TEST_CASE("null quotients of R^n + II_{1,1}") {
  std::mt19937_64 rng(7);
  for (Ring ring : {Ring::Gauss, Ring::Eisenstein, Ring::Hurwitz})
    for (int n = 1; n <= 3; ++n) {
      const LorentzLattice l = standard(ring, n);
      const Fingerprint want = fingerprint(l.base());
      const NullQuotient q = null_quotient(l.lattice(), l.rho());
      CHECK(l.inner(l.rho(), q.partner).is_one());
      CHECK(fingerprint(q.quotient) == want);
      for (int trial = 0; trial < 5; ++trial) {
        const SVector v = random_null_in_orbit(rng, l);
        REQUIRE(l.norm(v) == 0);
        const NullQuotient r = null_quotient(l.lattice(), v);
        CHECK(l.inner(v, r.partner).is_one());
        for (const auto& b : r.basis) {
          CHECK(l.inner(v, b).is_zero());
        }
        CHECK(is_selfdual(r.quotient));
        CHECK(r.quotient.is_definite());
        CHECK(fingerprint(r.quotient) == want);
      }
    }
}

TEST_CASE("null quotient of II_{5,1} over the Gaussian integers") {
  const Lattice l = catalog("II_5_1_G");
  SVector v = zero_vector(Ring::Gauss, l.rank());
  v[4] = Scalar(Ring::Gauss, 1);
  REQUIRE(l.norm(v) == 0);
  const NullQuotient q = null_quotient(l, v);
  CHECK(is_selfdual(q.quotient));
  CHECK(is_even(q.quotient));
  CHECK(fingerprint(q.quotient) == fingerprint(catalog("E8_G")));
}

TEST_CASE("null quotient preconditions") {
  const LorentzLattice l = standard(Ring::Eisenstein, 1);
  const Scalar two(Ring::Eisenstein, 2);
  CHECK_THROWS_AS(null_quotient(l.lattice(), right_mul(l.rho(), two)), std::invalid_argument);
  CHECK_THROWS_AS(null_quotient(l.lattice(), l.make({Scalar(Ring::Eisenstein, 1)}, Scalar(Ring::Eisenstein, 0),
                                                    Scalar(Ring::Eisenstein, 0))),
                  std::invalid_argument);
  CHECK_THROWS_AS(null_quotient(l.base(), {Scalar(Ring::Eisenstein, 1)}), std::invalid_argument);
}

TEST_CASE("null quotient of two hyperbolic planes") {
  // II_{1,1} + II_{1,1} modulo a null vector of the first plane is II_{1,1}.
  const Lattice h = catalog("II_1_1_G");
  const Lattice l = direct_sum(h, h);
  const Ring G = Ring::Gauss;
  const Scalar one(G, 1), zero(G, 0);
  for (const SVector& v : {SVector{one, zero, zero, zero}, SVector{one, zero, one, zero},
                           SVector{one, Scalar(G, 0), Scalar(G, 3), zero}}) {
    if (l.norm(v) != 0 || !is_primitive(v)) continue;
    const NullQuotient q = null_quotient(l, v);
    CHECK(l.inner(v, q.partner).is_one());
    CHECK_FALSE(q.quotient.is_definite());
    CHECK(is_selfdual(q.quotient));
    CHECK(is_even(q.quotient));
    for (const auto& b : q.basis) CHECK(l.inner(v, b).is_zero());
  }
}

TEST_CASE("even sublattices of odd Gaussian lattices") {
  const EvenConstruction c11 = even_sublattice_constructions(catalog("I_1_1_G"));
  CHECK(c11.even_selfdual() >= 1);
  for (const auto& b : c11.between)
    if (b.even && b.selfdual) CHECK(fingerprint(b.lattice) == fingerprint(catalog("II_1_1_G")));
  CHECK(std::any_of(c11.between.begin(), c11.between.end(), [](const auto& b) { return b.original; }));

  const EvenConstruction c51 = even_sublattice_constructions(catalog("I_5_1_G"));
  CHECK(c51.even_selfdual() >= 1);
  for (const auto& b : c51.between) {
    if (!(b.even && b.selfdual)) continue;
    CHECK(fingerprint(b.lattice).det == fingerprint(catalog("II_5_1_G")).det);
  }

  CHECK(even_sublattice_constructions(catalog("I_2_1_G")).even_selfdual() == 0);
  CHECK(even_sublattice_constructions(catalog("I_3_1_G")).even_selfdual() == 0);
  CHECK_THROWS_AS(even_sublattice_constructions(catalog("II_1_1_G")), std::invalid_argument);
  CHECK_THROWS_AS(even_sublattice_constructions(catalog("I_1_1_E")), std::invalid_argument);
}

TEST_CASE("reflection classifier") {
  const Ring E = Ring::Eisenstein;
  const Lattice e2(E, identity(E, 2));
  const Scalar one(E, 1), w = Scalar::omega(E);

  const ReflectionClass bi = classify_reflection(e2, reflection_matrix(e2, {one, -one}, Scalar(E, -1)));
  CHECK(bi.reflection);
  CHECK(bi.root_norm == 2);
  CHECK(bi.xi == Scalar(E, -1));
  CHECK(bi.short_or_biflection);

  const ReflectionClass hexa = classify_reflection(e2, reflection_matrix(e2, {one, Scalar(E, 0)}, -w));
  CHECK(hexa.reflection);
  CHECK(hexa.root_norm == 1);
  CHECK(hexa.xi == -w);
  CHECK(hexa.short_or_biflection);

  const SMatrix rot = mul(reflection_matrix(e2, {one, Scalar(E, 0)}, Scalar(E, -1)),
                          reflection_matrix(e2, {Scalar(E, 0), one}, Scalar(E, -1)));
  CHECK_FALSE(classify_reflection(e2, rot).reflection);
  CHECK_FALSE(classify_reflection(e2, identity(E, 2)).reflection);

  // A triflection in a norm 3 root is a reflection outside the dichotomy.
  const Lattice e3(E, identity(E, 3));
  const ReflectionClass tri = classify_reflection(e3, reflection_matrix(e3, {one, one, one}, w));
  CHECK(tri.reflection);
  CHECK(tri.root_norm == 3);
  CHECK_FALSE(tri.short_or_biflection);

  // Round trip on random integral reflections of Lorentzian lattices.
  std::mt19937_64 rng(11);
  for (Ring ring : {Ring::Gauss, Ring::Eisenstein}) {
    const LorentzLattice l = standard(ring, 2);
    for (int trial = 0; trial < 40; ++trial) {
      const RootSpec s = random_root(rng, l.lattice(), false);
      const SMatrix m = reflection_matrix(l.lattice(), s.root, s.xi);
      const ReflectionClass c = classify_reflection(l.lattice(), m);
      REQUIRE(c.reflection);
      CHECK(reflection_matrix(l.lattice(), c.root, c.xi) == m);
      CHECK(c.root_norm == l.norm(s.root));
      CHECK(c.short_or_biflection);
    }
  }
}

TEST_CASE("cone angles") {
  const Rational a(2, 3), b(1, 3);
  std::vector<Rational> alpha{a, a, b, b, b, b, b, b, b, b};
  const auto angles = cone_angles(alpha);
  CHECK(reflection_orders(angles) == std::set<int>{6, 3, 2});
  CHECK(angles.size() == 45);
  std::set<Rational> seen;
  for (const auto& c : angles) seen.insert(c.angle);
  CHECK(seen == std::set<Rational>{Rational(1, 3), Rational(2, 3), Rational(1)});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(alpha.begin(), alpha.end(), rng);
    const auto shuffled = cone_angles(alpha);
    CHECK(reflection_orders(shuffled) == std::set<int>{6, 3, 2});
    std::multiset<Rational> x, y;
    for (const auto& c : angles) x.insert(c.angle);
    for (const auto& c : shuffled) y.insert(c.angle);
    CHECK(x == y);
  }

  // Pairs summing to 2 are excluded; 7/6 gives no order.
  const auto edge = cone_angles({Rational(1), Rational(1), Rational(1, 2), Rational(3, 2)});
  CHECK(edge.size() == 2);
  CHECK(std::none_of(edge.begin(), edge.end(), [](const ConeAngle& c) { return c.i == 0 && c.j == 1; }));
  const auto mixed = cone_angles({Rational(1, 2), Rational(1, 3), Rational(19, 12), Rational(19, 12)});
  CHECK(mixed.front().angle == Rational(7, 6));
  CHECK_FALSE(mixed.front().order);

  CHECK_THROWS_AS(cone_angles({Rational(1), Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(cone_angles({Rational(2), Rational(1), Rational(1)}), std::invalid_argument);
}

TEST_CASE("covering radius evidence") {
  const Ring E = Ring::Eisenstein, H = Ring::Hurwitz;
  const Lattice e1(E, identity(E, 1));
  const Scalar hole = scale(Scalar(E, 2) + Scalar::omega(E), Rational(1, 3));
  const CoveringReport ok = verify_covering_radius(e1, Rational(1, 3), {{hole}}, 200, 1);
  CHECK(ok.holes_exact);
  CHECK(ok.pass());
  CHECK(ok.max_sampled == Rational(1, 3));  // the grid hits the hole

  // A hole at the wrong distance is never a pass.
  const CoveringReport wrong = verify_covering_radius(e1, Rational(1, 3), {{scale(Scalar(E, 1), Rational(1, 2))}}, 50, 1);
  CHECK_FALSE(wrong.holes_exact);
  CHECK_FALSE(wrong.pass());
  // An understated radius is refuted by sampling.
  CHECK_FALSE(verify_covering_radius(e1, Rational(1, 4), {}, 200, 1).pass());

  const Lattice h1(H, identity(H, 1));
  const Scalar hh = scale(Scalar(H, 1) + Scalar::i(H), Rational(1, 2));
  const CoveringReport hr = verify_covering_radius(h1, Rational(1, 2), {{hh}}, 500, 2);
  CHECK(hr.pass());
  CHECK_THROWS_AS(verify_covering_radius(catalog("II_1_1_E"), Rational(1), {}, 1, 1), std::invalid_argument);
}

TEST_CASE("Barnes-Wall lattice") {
  const BarnesWallReport r = verify_barnes_wall(catalog("BW4_H"), 20);
  CHECK(r.selfdual);
  CHECK(r.min_norm == 2);
  CHECK(r.norm2_count == 4320);
  CHECK(r.norm2_rank == 4);
  CHECK(r.classes == 256);
  CHECK(r.class_min_norms == std::map<Rational, std::size_t>{{0, 1}, {2, 135}, {3, 120}});
  CHECK(r.holes_checked == 20);
  CHECK(r.hole_distances == std::vector<Rational>(20, Rational(3, 2)));
  CHECK(r.controls_ok);
  CHECK(r.pass());
  CHECK_THROWS_AS(verify_barnes_wall(catalog("E8_G")), std::invalid_argument);
}
