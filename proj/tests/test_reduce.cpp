#include <set>

#include "doctest.h"
#include "hyperlat/catalog.hpp"
#include "hyperlat/reduce.hpp"
#include "support.hpp"

using namespace hyperlat;
using namespace hyperlat::testing;

namespace {

const Ring kRings[] = {Ring::Gauss, Ring::Eisenstein, Ring::Hurwitz};

LorentzLattice standard(Ring ring, int n) { return LorentzLattice(Lattice(ring, identity(ring, n))); }

const ReductionRule& find_rule(Ring ring, RootLength length, const Scalar& h) {
  for (const auto& r : reduction_rules(ring))
    if (r.length == length && r.h == h) return r;
  throw std::out_of_range("no such rule");
}

Rational random_rational(std::mt19937_64& rng, int den, int range) {
  return Rational(static_cast<std::int64_t>(rng() % (2 * range * den + 1)) - range * den, den);
}

// A random element of the rational span with denominators dividing den.
Scalar random_point(std::mt19937_64& rng, Ring ring, int den, int range) {
  std::vector<Rational> c;
  for (int s = 0; s < degree(ring); ++s) c.push_back(random_rational(rng, den, range));
  Scalar out(ring, 0);
  const auto basis = zbasis(ring);
  for (int s = 0; s < degree(ring); ++s) out += scale(basis[s], c[s]);
  return out;
}

// Null vector of height 1 over ell with imaginary part w.
SVector null_over(const LorentzLattice& l, const SVector& ell, const Scalar& w) {
  const Ring ring = l.ring();
  return l.make(ell, Scalar(ring, 1), w - Scalar::from_rational(ring, l.base().norm(ell) / 2));
}

// Random product of lattice-preserving reflections in small short roots.
Isometry random_word(std::mt19937_64& rng, const LorentzLattice& l, int length) {
  const Ring ring = l.ring();
  Isometry g = identity_isometry(ring, l.dim());
  int made = 0;
  while (made < length) {
    const SVector r = l.make(random_vector(rng, ring, l.n(), 1), random_element(rng, ring, 1), random_element(rng, ring, 1));
    const Rational nr = l.norm(r);
    if (nr != 1 && nr != 2) continue;
    Scalar xi = nr == 2 ? Scalar(ring, -1) : random_unit(rng, ring);
    if (xi.is_one()) continue;
    g = compose(reflection(l.lattice(), r, xi), g);
    ++made;
  }
  return g;
}

}  // namespace

TEST_CASE("rule table") {
  for (Ring ring : kRings) {
    const auto& rules = reduction_rules(ring);
    for (std::size_t t = 1; t < rules.size(); ++t) {
      const auto& a = rules[t - 1];
      const auto& b = rules[t];
      CHECK((a.h.norm() < b.h.norm() || (a.h.norm() == b.h.norm() && a.length <= b.length)));
    }
    for (const auto& r : rules) {
      if (!r.sqrt3) CHECK(r.radius2 * r.h.norm() == 1);
      CHECK(r.covers(r.radius2));
    }
  }
  CHECK(reduction_rules(Ring::Gauss).size() == 4);
  CHECK(reduction_rules(Ring::Eisenstein).size() == 6);
  CHECK(reduction_rules(Ring::Hurwitz).size() == 4);
  const auto& lg = find_rule(Ring::Gauss, RootLength::Long, Scalar(Ring::Gauss, 1));
  CHECK(lg.sqrt3);
  CHECK(lg.covers(Rational(17, 10)));
  CHECK_FALSE(lg.covers(Rational(7, 4)));
}

TEST_CASE("the hyperbolic scalar element") {
  for (Ring ring : {Ring::Eisenstein, Ring::Hurwitz})
    for (int n : {1, 2}) {
      const ScalarElementReport rep = hyperbolic_scalar_element(ring, n);
      CHECK(rep.trivial_on_base);
      CHECK(rep.f_matrix_ok);
      CHECK(rep.f_squared_scalar);
      CHECK(rep.j_central);
      const LorentzLattice l = standard(ring, n);
      CHECK(word_matrix(l, rep.j.word) == rep.j.matrix);
      CHECK(preserves_lattice(rep.f.matrix));
    }
  CHECK_THROWS_AS(hyperbolic_scalar_element(Ring::Gauss, 1), std::invalid_argument);
}

TEST_CASE("translations built from reflections") {
  const Ring E = Ring::Eisenstein;
  const LorentzLattice l = standard(E, 2);
  const Scalar w = Scalar::omega(E);
  const SVector r{Scalar(E, 1), Scalar(E, 0)};
  // x = r omega under the (-omega)-reflection gives translation part r.
  const SVector x = right_mul(r, w);
  const TranslationWitness t = translation_from_reflections(l, r, -w, x, scale(Scalar::theta(E), Rational(1, 2)));
  CHECK(t.verified);
  CHECK(t.x == r);
  // A long root with its biflection and x = -r gives 2r.
  const SVector rl{Scalar(E, 1), Scalar(E, 1)};
  const TranslationWitness t2 = translation_from_reflections(l, rl, Scalar(E, -1), neg(rl), Scalar(E, 0));
  CHECK(t2.verified);
  CHECK(t2.x == right_mul(rl, Scalar(E, 2)));
  CHECK_THROWS_AS(translation_from_reflections(l, r, -w, x, Scalar(E, 0)), std::invalid_argument);

  for (Ring ring : {Ring::Eisenstein, Ring::Hurwitz})
    for (int n : {1, 2, 3}) {
      const LorentzLattice lo = standard(ring, n);
      const TranslationSubgroupReport rep = coordinate_translations(lo);
      CHECK(rep.spans_base);
      CHECK(rep.lattice_part.size() == static_cast<std::size_t>(n * degree(ring)));
      for (const auto& tw : rep.lattice_part) {
        CHECK(tw.verified);
        for (const auto& g : tw.isometry.word) CHECK(preserves_lattice(generator_matrix(lo, g)));
      }
      // Commutators of the witnesses are the central translations 2 Im<y|x>.
      for (std::size_t a = 0; a < rep.lattice_part.size(); ++a)
        for (std::size_t b = 0; b < rep.lattice_part.size(); ++b) {
          const auto& p = rep.lattice_part[a].isometry;
          const auto& q = rep.lattice_part[b].isometry;
          const SMatrix comm = mul(mul(p.matrix, q.matrix), mul(inverse(p.matrix), inverse(q.matrix)));
          const Scalar im = lo.base().inner(rep.lattice_part[b].x, rep.lattice_part[a].x).imag_part();
          CHECK(comm == translation_matrix(lo, zero_vector(ring, n), im + im));
        }
    }
  const TranslationSubgroupReport re = coordinate_translations(standard(E, 1));
  CHECK(re.central == std::vector<Scalar>{Scalar::theta(E)});
  const TranslationSubgroupReport rh = coordinate_translations(standard(Ring::Hurwitz, 1));
  // 2i, 2j, 2k and i+j+k up to sign span {ai+bj+ck : a = b = c mod 2}.
  for (const auto& c : rh.central) {
    const auto p = c.components();
    CHECK(p[0] == 0);
    CHECK(is_integer(p[1]));
    CHECK(is_integer((p[1] - p[2]) / 2));
    CHECK(is_integer((p[1] - p[3]) / 2));
  }
  CHECK(std::find(rh.central.begin(), rh.central.end(), Scalar(Ring::Hurwitz, 2) * Scalar::i(Ring::Hurwitz)) != rh.central.end());
}

TEST_CASE("braid moves") {
  const Ring E = Ring::Eisenstein;
  const LorentzLattice l = standard(E, 3);
  const Scalar w = Scalar::omega(E);
  const SVector r1 = l.make(zero_vector(E, 3), Scalar(E, 1), -w);
  const SVector r2 = l.make({Scalar(E, 0), Scalar(E, 0), Scalar(E, 1)}, Scalar(E, 0), Scalar(E, 1));
  CHECK(l.inner(r1, r2).is_one());
  const BraidReport b = braid_equivalence(l.lattice(), r1, r2);
  CHECK(b.braid_holds);
  CHECK(b.unit.is_unit());
  CHECK(b.rescale.is_one());
  CHECK(act(b.conjugator, r1) == right_mul(r2, b.unit));
  const SVector r3 = l.make({Scalar(E, 0), Scalar(E, 1), Scalar(E, 0)}, Scalar(E, 0), Scalar(E, 0));
  CHECK_THROWS_AS(braid_equivalence(l.lattice(), r2, r3), std::invalid_argument);

  for (Ring ring : {Ring::Eisenstein, Ring::Hurwitz}) {
    const LorentzLattice lo = standard(ring, 2);
    std::mt19937_64 rng(21);
    int tested = 0;
    while (tested < 100) {
      const Isometry g = random_word(rng, lo, 3);
      // A fixed pair with unit inner product, moved by a random isometry.
      const SVector a = act(g, lo.make({Scalar(ring, 1), Scalar(ring, 0)}, Scalar(ring, 0), Scalar(ring, 0)));
      const Scalar u = random_unit(rng, ring);
      const SVector b = act(g, right_mul(lo.make({Scalar(ring, 1), Scalar(ring, 0)}, Scalar(ring, 1), Scalar(ring, 0)), u));
      REQUIRE(lo.inner(a, b) == u);
      ++tested;
      const BraidReport rep = braid_equivalence(lo.lattice(), a, b);
      CHECK(rep.braid_holds);
      CHECK(act(rep.conjugator, a) == right_mul(b, rep.rescale * rep.unit));
    }
  }
}

TEST_CASE("Gaussian long roots reduce inside sqrt 3") {
  const Ring G = Ring::Gauss;
  const Scalar g1i = Scalar(G, 1) + Scalar::i(G);
  const std::vector<Lattice> bases{Lattice(G, identity(G, 1)), Lattice(G, identity(G, 2)),
                                   Lattice(G, {{Scalar(G, 2), g1i}, {g1i.conj(), Scalar(G, 2)}})};
  const ReductionRule& rule = find_rule(G, RootLength::Long, Scalar(G, 1));
  std::mt19937_64 rng(52);
  int done = 0;
  while (done < 300) {
    const LorentzLattice l(bases[rng() % bases.size()]);
    const SVector lambda = random_vector(rng, G, l.n(), 2);
    if (!is_integer(l.base().norm(lambda) / 2)) continue;
    SVector delta;
    for (int k = 0; k < l.n(); ++k) delta.push_back(random_point(rng, G, 12, 1));
    const Rational d2 = l.base().norm(delta);
    if (d2 * d2 >= 3) continue;
    const SVector v = null_over(l, add(lambda, delta), random_point(rng, G, 12, 2).imag_part());
    const ReductionOutcome o = attempt_center(l, v, rule, lambda);
    CHECK(o.kind == OutcomeKind::Reduced);
    if (o.kind == OutcomeKind::Reduced) {
      CHECK(o.xi == Scalar(G, -1));
      CHECK(l.norm(o.root) == 2);
      CHECK(l.height(o.root).is_one());
      CHECK(l.height(o.result).norm() < 1);
    }
    ++done;
  }
}

TEST_CASE("short root trichotomy on proved rows") {
  for (Ring ring : kRings)
    for (const auto& rule : reduction_rules(ring)) {
      if (!rule.proved || rule.length != RootLength::Short) continue;
      std::mt19937_64 rng(53);
      std::map<OutcomeKind, int> seen;
      std::set<Scalar> inners;
      int done = 0, attempts = 0;
      while (done < 200 && ++attempts < 100000) {
        const LorentzLattice l = standard(ring, 1 + static_cast<int>(rng() % 2));
        const SVector lambda = random_vector(rng, ring, l.n(), 2);
        if (!solve_real_part(ring, rule.h, (1 - l.base().norm(lambda)) / 2)) continue;
        // Offsets on the boundary half of the time.
        SVector delta;
        if (rng() % 2) {
          delta = zero_vector(ring, l.n());
          const auto us = units(ring);
          delta[rng() % l.n()] = scale(us[rng() % us.size()], Rational(1));
        } else {
          for (int k = 0; k < l.n(); ++k) delta.push_back(random_point(rng, ring, 6, 1));
        }
        const SVector offset = right_mul(delta, rule.h.inverse());
        if (!rule.covers(l.base().norm(offset))) continue;
        const SVector ell = add(right_mul(lambda, rule.h.inverse()), offset);
        const Scalar w = random_point(rng, ring, 2 * static_cast<int>(to_double(rule.h.norm()) + 0.5), 2).imag_part();
        const ReductionOutcome o = attempt_center(l, null_over(l, ell, w), rule, lambda);
        ++seen[o.kind];
        const bool ok = o.kind == OutcomeKind::Reduced || o.kind == OutcomeKind::StuckOrthogonal ||
                        o.kind == OutcomeKind::StuckExceptional;
        const std::string what = rule.name() + " " + o.note;
        CHECK_MESSAGE(ok, what);
        if (o.kind == OutcomeKind::StuckOrthogonal || o.kind == OutcomeKind::StuckExceptional) {
          CHECK(o.d2 == rule.radius2);
          CHECK(std::find(rule.exceptional.begin(), rule.exceptional.end(), o.inner) != rule.exceptional.end());
          CHECK(l.inner(o.root, right_mul(o.vector, l.height(o.vector).inverse())) == o.inner);
          inners.insert(o.inner);
        }
        ++done;
      }
      CHECK(done == 200);
      MESSAGE(rule.name() << ": reduced " << seen[OutcomeKind::Reduced] << ", orthogonal "
                          << seen[OutcomeKind::StuckOrthogonal] << ", exceptional "
                          << seen[OutcomeKind::StuckExceptional]);
    }
}

TEST_CASE("reduction of null vectors") {
  for (Ring ring : kRings)
    for (int n : {1, 2}) {
      if (ring == Ring::Gauss && n == 1) continue;
      const LorentzLattice l = standard(ring, n);
      std::mt19937_64 rng(61);
      for (int t = 0; t < 40; ++t) {
        const Isometry g = random_word(rng, l, 1 + t % 4);
        const SVector v = act(g, right_mul(l.rho(), random_unit(rng, ring)));
        const ReductionResult res = reduce_null_vector(l, v);
        CHECK(res.terminal.kind == OutcomeKind::AtRho);
        CHECK(replay(l, res.word, res.start) == res.terminal.vector);
        for (const auto& gen : res.word) CHECK(preserves_lattice(generator_matrix(l, gen)));
        SVector cur = res.start;
        for (const auto& gen : res.word) {
          const SVector next = act(generator_matrix(l, gen), cur);
          CHECK(l.height(next).norm() < l.height(cur).norm());
          cur = next;
        }
      }
    }
  const LorentzLattice l = standard(Ring::Eisenstein, 1);
  const ReductionResult at = reduce_null_vector(l, right_mul(l.rho(), Scalar::omega(Ring::Eisenstein)));
  CHECK(at.terminal.kind == OutcomeKind::AtRho);
  CHECK(at.word.empty());
  CHECK_THROWS_AS(reduce_null_vector(l, l.make({Scalar(Ring::Eisenstein, 1)}, Scalar(Ring::Eisenstein, 0),
                                               Scalar(Ring::Eisenstein, 0))),
                  std::invalid_argument);
}
