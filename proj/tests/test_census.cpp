#include <array>
#include <set>

#include "doctest.h"
#include "hyperlat/census.hpp"
#include "support.hpp"

using namespace hyperlat;
using namespace hyperlat::testing;

namespace {

LorentzLattice standard(Ring ring, int n) { return LorentzLattice(Lattice(ring, identity(ring, n))); }

std::set<Scalar> unit_set(const TerminalClass& c) { return {c.units.begin(), c.units.end()}; }

// Eisenstein integers modulo theta, where omega = 1.
int mod_theta(const Scalar& x) {
  const auto c = x.coords();
  return static_cast<int>((((c[0] + c[1]) % 3) + 3) % 3);
}

using F3Vector = std::array<int, 3>;

// lambda^2 + 2 mu nu on F_3^3, the reduction of E + II_{1,1} modulo theta.
int f3_form(const F3Vector& a, const F3Vector& b) { return (a[0] * b[0] + a[1] * b[2] + a[2] * b[1]) % 3; }

// Orbit of rho under the reflections in norm 1 vectors of F_3^3.
std::set<F3Vector> f3_orbit_of_rho() {
  std::vector<F3Vector> mirrors;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (f3_form({a, b, c}, {a, b, c}) == 1) mirrors.push_back({a, b, c});
  std::set<F3Vector> seen{{0, 0, 1}};
  std::vector<F3Vector> todo{{0, 0, 1}};
  while (!todo.empty()) {
    const F3Vector v = todo.back();
    todo.pop_back();
    for (const auto& r : mirrors) {
      const int t = 2 * f3_form(v, r) % 3;  // 2 <v|r> / <r|r>
      F3Vector w;
      for (int k = 0; k < 3; ++k) w[k] = ((v[k] - t * r[k]) % 3 + 3) % 3;
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("braid escape into a coordinate hyperplane") {
  std::mt19937_64 rng(41);
  for (Ring ring : {Ring::Eisenstein, Ring::Hurwitz}) {
    const LorentzLattice l = standard(ring, 3);
    const Scalar one(ring, 1), th = Scalar::theta(ring), w = Scalar::omega(ring);
    const SVector root0 = l.make(zero_vector(ring, 3), one, -w.conj());
    const SVector v0 = l.make({one, one, one}, th, w * th);
    REQUIRE(l.norm(root0) == 1);
    REQUIRE(l.norm(v0) == 0);
    REQUIRE(l.inner(root0, v0).is_zero());
    for (int trial = 0; trial < 20; ++trial) {
      const SVector x = random_vector(rng, ring, 3, 2);
      const auto y = solve_real_part(ring, one, -l.base().norm(x) / 2);
      REQUIRE(y);
      const Isometry t = compose(translation(l, x, y->imag_part()),
                                 linear_isometry(extend_to_lorentz(l, random_monomial(rng, ring, 3)), "S"));
      const SVector root = act(t, root0), v = act(t, v0);
      const HyperplaneEscape esc = escape_to_hyperplane(l, v, root);
      REQUIRE(esc.ok);
      const SVector moved = replay(l, esc.move.word, v);
      CHECK(moved == act(esc.move, v));
      CHECK(moved[esc.coordinate].is_zero());
      CHECK(preserves_lattice(esc.move.matrix));
      SVector sub = moved;
      sub.erase(sub.begin() + esc.coordinate);
      const Resolution res = resolve_null_vector(standard(ring, 2), sub);
      CHECK(res.resolved);
    }
    // Hypotheses: the root must be orthogonal to v.
    CHECK_FALSE(escape_to_hyperplane(l, l.rho(), root0).ok);
  }
}

TEST_CASE("resolution words replay") {
  std::mt19937_64 rng(5);
  for (Ring ring : {Ring::Eisenstein, Ring::Hurwitz})
    for (int n = 1; n <= 3; ++n) {
      const LorentzLattice l = standard(ring, n);
      int done = 0;
      while (done < 15) {
        const SVector lambda = random_vector(rng, ring, n, 3);
        const Scalar mu = random_element(rng, ring, 3);
        if (mu.is_zero()) continue;
        const auto nu = solve_real_part(ring, mu, -l.base().norm(lambda) / 2);
        if (!nu) continue;
        const SVector v = l.make(lambda, mu, *nu + orthogonal_sublattice(ring, mu)[0]);
        if (!content(v).is_unit()) continue;
        const Resolution res = resolve_null_vector(l, v);
        REQUIRE(res.resolved);
        CHECK(res.unit.is_unit());
        CHECK(replay(l, res.word, v) == right_mul(l.rho(), res.unit));
        for (const auto& g : res.word) CHECK(l.norm(g.root) == 1);
        ++done;
      }
    }
}

TEST_CASE("Eisenstein census against the theta-adic invariant") {
  const Ring E = Ring::Eisenstein;
  const LorentzLattice l = standard(E, 1);
  const CensusReport rep = orbit_census(l, Rational(25));
  CHECK(rep.unresolved == 0);
  REQUIRE(rep.classes.size() == 2);
  const Scalar w = Scalar::omega(E);
  const std::set<Scalar> plus{Scalar(E, 1), w, w.conj()};
  const std::set<Scalar> minus{Scalar(E, -1), -w, -w.conj()};
  CHECK(((unit_set(rep.classes[0]) == plus && unit_set(rep.classes[1]) == minus) ||
         (unit_set(rep.classes[0]) == minus && unit_set(rep.classes[1]) == plus)));
  for (const auto& c : rep.classes) {
    CHECK(l.is_rho_multiple(c.representative));
    CHECK(c.count == rep.vectors / 2);
  }

  // Independently: reflections in short roots reduce mod theta to reflections
  // in norm 1 vectors of F_3^3 (or the identity), so the orbit of rho mod theta
  // is invariant.  It must separate rho from -rho and predict every class.
  const std::set<F3Vector> orbit = f3_orbit_of_rho();
  CHECK(orbit.count({0, 0, 1}) == 1);
  CHECK(orbit.count({0, 0, 2}) == 0);
  const auto small = small_elements(E, 7);
  int checked = 0;
  for (const auto& lambda : small)
    for (const auto& mu : small) {
      if (mu.is_zero()) continue;
      for (const auto& nu : small) {
        const SVector v = l.make({lambda}, mu, nu);
        if (l.norm(v) != 0 || !content(v).is_unit()) continue;
        const Resolution res = resolve_null_vector(l, v);
        REQUIRE(res.resolved);
        REQUIRE(replay(l, res.word, v) == right_mul(l.rho(), res.unit));
        const bool predicted = orbit.count({mod_theta(lambda), mod_theta(mu), mod_theta(nu)}) == 1;
        CHECK(predicted == (plus.count(res.unit) == 1));
        ++checked;
      }
    }
  CHECK(checked > 100);
  MESSAGE("brute-force vectors checked: " << checked);
}

TEST_CASE("small censuses are transitive") {
  const CensusReport e2 = orbit_census(standard(Ring::Eisenstein, 2), Rational(4));
  CHECK(e2.unresolved == 0);
  CHECK(e2.classes.size() == 1);
  const CensusReport h1 = orbit_census(standard(Ring::Hurwitz, 1), Rational(2));
  CHECK(h1.unresolved == 0);
  CHECK(h1.classes.size() == 1);
  CHECK(h1.classes[0].units.size() == 24);
  for (const auto& w : h1.witnesses) {
    const LorentzLattice l = standard(Ring::Hurwitz, 1);
    CHECK(replay(l, w.word, l.rho()) == right_mul(l.rho(), w.unit));
  }
}

TEST_CASE("census preconditions") {
  CHECK_THROWS_AS(orbit_census(standard(Ring::Gauss, 1), Rational(4)), std::invalid_argument);
  CHECK_THROWS_AS(orbit_census(standard(Ring::Eisenstein, 4), Rational(4)), std::invalid_argument);
  const Ring E = Ring::Eisenstein;
  SMatrix g = identity(E, 1);
  g[0][0] = Scalar(E, 2);
  CHECK_THROWS_AS(orbit_census(LorentzLattice(Lattice(E, g)), Rational(4)), std::invalid_argument);
  CensusOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(orbit_census(standard(E, 2), Rational(25), tiny), std::length_error);
  CensusOptions all;
  all.filter = RuleFilter::All;
  CHECK_THROWS_AS(orbit_census(standard(E, 1), Rational(4), all), std::invalid_argument);
}
