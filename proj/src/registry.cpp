#include "hyperlat/registry.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "hyperlat/catalog.hpp"
#include "hyperlat/claims.hpp"

namespace hyperlat {

namespace {

using Rng = std::mt19937_64;

struct Outcome {
  bool pass = false;
  Json evidence;
  std::vector<std::string> citations;
};
using Check = std::function<Outcome(const ClaimConfig&)>;

std::size_t samples_or(const ClaimConfig& c, std::size_t fallback) { return c.samples ? c.samples : fallback; }

LorentzLattice standard(Ring ring, int n) { return LorentzLattice(Lattice(ring, identity(ring, n))); }

Json coords(const Scalar& x) { return to_json(x).at("coords"); }

// ---------------------------------------------------------------------------
// Seeded generators.

Scalar random_element(Rng& rng, Ring ring, int range) {
  std::uniform_int_distribution<std::int64_t> dist(-range, range);
  std::vector<std::int64_t> z;
  for (int s = 0; s < degree(ring); ++s) z.push_back(dist(rng));
  return Scalar::from_zcoords(ring, z);
}

SVector random_vector(Rng& rng, Ring ring, int n, int range) {
  SVector v;
  for (int k = 0; k < n; ++k) v.push_back(random_element(rng, ring, range));
  return v;
}

Scalar random_unit(Rng& rng, Ring ring) {
  const auto us = units(ring);
  return us[std::uniform_int_distribution<std::size_t>(0, us.size() - 1)(rng)];
}

Scalar random_imaginary(Rng& rng, Ring ring, int range) { return random_element(rng, ring, range).imag_part(); }

SMatrix random_monomial(Rng& rng, Ring ring, int n) {
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  SMatrix s = zero_matrix(ring, n, n);
  for (int k = 0; k < n; ++k) s[perm[k]][k] = random_unit(rng, ring);
  return s;
}

// An element of the rational span with denominators dividing den.
Scalar random_point(Rng& rng, Ring ring, int den, int range) {
  Scalar out(ring, 0);
  const auto basis = zbasis(ring);
  for (int s = 0; s < degree(ring); ++s) {
    const auto num = static_cast<std::int64_t>(rng() % (2 * range * den + 1)) - range * den;
    out += scale(basis[s], Rational(num, den));
  }
  return out;
}

// Null vector of height 1 over ell with imaginary part w.
SVector null_over(const LorentzLattice& l, const SVector& ell, const Scalar& w) {
  const Ring ring = l.ring();
  return l.make(ell, Scalar(ring, 1), w - Scalar::from_rational(ring, l.base().norm(ell) / 2));
}

// Product of lattice-preserving reflections in small roots of norm 1 or 2.
Isometry random_word(Rng& rng, const LorentzLattice& l, int length) {
  const Ring ring = l.ring();
  Isometry g = identity_isometry(ring, l.dim());
  int made = 0;
  while (made < length) {
    const SVector r = l.make(random_vector(rng, ring, l.n(), 1), random_element(rng, ring, 1), random_element(rng, ring, 1));
    const Rational nr = l.norm(r);
    if (nr != 1 && nr != 2) continue;
    const Scalar xi = nr == 2 ? Scalar(ring, -1) : random_unit(rng, ring);
    if (xi.is_one()) continue;
    g = compose(reflection(l.lattice(), r, xi), g);
    ++made;
  }
  return g;
}

// A root of norm 1 (or also -1, 2, -2 unless short_only) with an xi making
// the reflection integral.
std::pair<SVector, Scalar> random_root(Rng& rng, const Lattice& l, bool short_only) {
  const Ring ring = l.ring();
  while (true) {
    const SVector r = random_vector(rng, ring, l.rank(), 2);
    if (is_zero(r) || !is_primitive(r)) continue;
    const Rational nr = l.norm(r);
    const bool is_short = nr == 1 || (nr == -1 && !short_only);
    const bool is_long = !short_only && (nr == 2 || nr == -2);
    if (!is_short && !is_long) continue;
    Scalar xi(ring, -1);
    if (is_short)
      while ((xi = random_unit(rng, ring)).is_one()) {
      }
    if (!preserves_lattice(reflection_matrix(l, r, xi))) continue;
    return {r, xi};
  }
}

// Image of rho under translations and reflections in the short root (e_0; 1, 0).
SVector random_null_in_orbit(Rng& rng, const LorentzLattice& l) {
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

const Ring kRings[] = {Ring::Gauss, Ring::Eisenstein, Ring::Hurwitz};

// ---------------------------------------------------------------------------
// Claims.

Outcome d3theta_roots(const ClaimConfig&) {
  const auto theta = theta_prefix(catalog("D3theta"), 3);
  Outcome o;
  o.evidence = Json{{"lattice", "D3theta"}, {"norm2", theta[2]}, {"norm3", theta[3]}, {"expected", {54, 72}}};
  o.pass = theta[2] == 54 && theta[3] == 72;
  o.citations = {"catalog", "theta_prefix"};
  return o;
}

Outcome barnes_wall(const ClaimConfig& c) {
  const BarnesWallReport r = verify_barnes_wall(catalog("BW4_H"), samples_or(c, 20));
  Json mins = Json::object();
  for (const auto& [norm, count] : r.class_min_norms) mins[to_string(norm)] = count;
  Json holes = Json::array();
  for (const auto& d : r.hole_distances) holes.push_back(to_string(d));
  Outcome o;
  o.evidence = Json{{"selfdual", r.selfdual},
                    {"min_norm", to_string(r.min_norm)},
                    {"norm2_count", r.norm2_count},
                    {"norm2_rank", r.norm2_rank},
                    {"classes_mod_1_plus_i", r.classes},
                    {"class_min_norms", mins},
                    {"holes_checked", r.holes_checked},
                    {"hole_distances", holes},
                    {"holes_ok", r.holes_ok},
                    {"controls_ok", r.controls_ok}};
  o.pass = r.pass();
  o.citations = {"is_selfdual", "short_vectors", "column_rank", "residue_census", "closest_points",
                 "deep_hole_predicate_bw"};
  return o;
}

Outcome heisenberg(const ClaimConfig& c) {
  const std::size_t n = samples_or(c, 1000);
  Outcome o{true, Json::object(), {"verify_heisenberg", "translation_matrix"}};
  for (Ring ring : kRings) {
    const LorentzLattice l = standard(ring, 2);
    Rng rng(c.seed + static_cast<std::uint64_t>(ring));
    std::size_t comp = 0, inv = 0, comm = 0, conj = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const SVector x = random_vector(rng, ring, 2, 4);
      const Scalar z = random_imaginary(rng, ring, 4);
      const SVector x2 = random_vector(rng, ring, 2, 4);
      const Scalar z2 = random_imaginary(rng, ring, 4);
      const HeisenbergReport r = verify_heisenberg(l, x, z, x2, z2, random_monomial(rng, ring, 2));
      comp += r.composition;
      inv += r.inverse;
      comm += r.commutator;
      conj += r.conjugation;
    }
    o.evidence[ring_name(ring)] =
        Json{{"instances", n}, {"composition", comp}, {"inverse", inv}, {"commutator", comm}, {"conjugation", conj}};
    o.pass = o.pass && comp == n && inv == n && comm == n && conj == n;
  }
  return o;
}

const ReductionRule& find_rule(Ring ring, RootLength length, const Scalar& h) {
  for (const auto& r : reduction_rules(ring))
    if (r.length == length && r.h == h) return r;
  throw std::logic_error("missing reduction rule");
}

Outcome gauss_long_roots(const ClaimConfig& c) {
  const Ring G = Ring::Gauss;
  const Scalar g1i = Scalar(G, 1) + Scalar::i(G);
  const std::vector<Lattice> bases{Lattice(G, identity(G, 1)), Lattice(G, identity(G, 2)),
                                   Lattice(G, {{Scalar(G, 2), g1i}, {g1i.conj(), Scalar(G, 2)}})};
  const ReductionRule& rule = find_rule(G, RootLength::Long, Scalar(G, 1));
  const std::size_t n = samples_or(c, 500);
  Rng rng(c.seed);
  std::size_t done = 0, reduced = 0;
  Json failures = Json::array();
  while (done < n) {
    const LorentzLattice l(bases[rng() % bases.size()]);
    const SVector lambda = random_vector(rng, G, l.n(), 2);
    if (!is_integer(l.base().norm(lambda) / 2)) continue;
    SVector delta;
    for (int k = 0; k < l.n(); ++k) delta.push_back(random_point(rng, G, 12, 1));
    const Rational d2 = l.base().norm(delta);
    if (d2 * d2 >= 3) continue;
    const SVector v = null_over(l, add(lambda, delta), random_point(rng, G, 12, 2).imag_part());
    const ReductionOutcome out = attempt_center(l, v, rule, lambda);
    const bool ok = out.kind == OutcomeKind::Reduced && out.xi == Scalar(G, -1) && l.norm(out.root) == 2 &&
                    l.height(out.root).is_one() && l.height(out.result).norm() < 1;
    reduced += ok;
    if (!ok && failures.size() < 5) failures.push_back(Json{{"vector", lorentz_vector_json(l, v)}, {"outcome", to_json(out)}});
    ++done;
  }
  Outcome o;
  o.evidence = Json{{"rule", rule.name()}, {"instances", done}, {"reduced_by_biflection", reduced}, {"failures", failures}};
  o.pass = reduced == n;
  o.citations = {"attempt_center", "roots_of_height", "reflection_matrix"};
  return o;
}

Outcome short_root_trichotomy(const ClaimConfig& c) {
  const std::size_t n = samples_or(c, 500);
  Outcome o{true, Json::array(), {"reduction_rules", "attempt_center", "roots_of_height"}};
  for (Ring ring : kRings)
    for (const auto& rule : reduction_rules(ring)) {
      if (!rule.proved || rule.length != RootLength::Short) continue;
      Rng rng(c.seed);
      std::map<std::string, std::size_t> seen;
      std::set<Scalar> inners;
      std::size_t done = 0, attempts = 0, bad = 0;
      const auto us = units(ring);
      while (done < n && ++attempts < 1000 * n) {
        const LorentzLattice l = standard(ring, 1 + static_cast<int>(rng() % 2));
        const SVector lambda = random_vector(rng, ring, l.n(), 2);
        if (!solve_real_part(ring, rule.h, (1 - l.base().norm(lambda)) / 2)) continue;
        // Offsets on the boundary half of the time.
        SVector delta;
        if (rng() % 2) {
          delta = zero_vector(ring, l.n());
          delta[rng() % l.n()] = us[rng() % us.size()];
        } else {
          for (int k = 0; k < l.n(); ++k) delta.push_back(random_point(rng, ring, 6, 1));
        }
        const SVector offset = right_mul(delta, rule.h.inverse());
        if (!rule.covers(l.base().norm(offset))) continue;
        const SVector ell = add(right_mul(lambda, rule.h.inverse()), offset);
        const int den = 2 * static_cast<int>(to_double(rule.h.norm()) + 0.5);
        const SVector v = null_over(l, ell, random_point(rng, ring, den, 2).imag_part());
        const ReductionOutcome out = attempt_center(l, v, rule, lambda);
        ++seen[str(out.kind)];
        bool ok = out.kind == OutcomeKind::Reduced;
        if (out.kind == OutcomeKind::StuckOrthogonal || out.kind == OutcomeKind::StuckExceptional) {
          ok = out.d2 == rule.radius2 &&
               std::find(rule.exceptional.begin(), rule.exceptional.end(), out.inner) != rule.exceptional.end() &&
               l.inner(out.root, right_mul(out.vector, l.height(out.vector).inverse())) == out.inner;
          inners.insert(out.inner);
        }
        bad += !ok;
        ++done;
      }
      Json kinds = Json::object();
      for (const auto& [k, count] : seen) kinds[k] = count;
      Json listed = Json::array(), observed = Json::array();
      for (const auto& x : rule.exceptional) listed.push_back(coords(x));
      for (const auto& x : inners) observed.push_back(coords(x));
      o.evidence.push_back(Json{{"rule", rule.name()},
                                {"instances", done},
                                {"outcomes", kinds},
                                {"listed_inner_products", listed},
                                {"observed_inner_products", observed},
                                {"violations", bad}});
      o.pass = o.pass && done == n && bad == 0;
    }
  return o;
}

Outcome braid(const ClaimConfig& c) {
  const std::size_t n = samples_or(c, 200);
  Outcome o{true, Json::object(), {"braid_equivalence", "reflection_matrix"}};
  for (Ring ring : {Ring::Eisenstein, Ring::Hurwitz}) {
    const LorentzLattice l = standard(ring, 2);
    Rng rng(c.seed + static_cast<std::uint64_t>(ring));
    const Scalar zero(ring, 0), one(ring, 1);
    std::size_t holds = 0, moved = 0, rescaled = 0;
    for (std::size_t t = 0; t < n; ++t) {
      // A fixed pair with unit inner product, moved by a random isometry.
      const Isometry g = random_word(rng, l, 3);
      const Scalar u = random_unit(rng, ring);
      const SVector a = act(g, l.make({one, zero}, zero, zero));
      const SVector b = act(g, right_mul(l.make({one, zero}, one, zero), u));
      const BraidReport r = braid_equivalence(l.lattice(), a, b);
      holds += r.braid_holds;
      moved += act(r.conjugator, a) == right_mul(b, r.rescale * r.unit);
      rescaled += !r.rescale.is_one();
    }
    o.evidence[ring_name(ring)] =
        Json{{"pairs", n}, {"braid_holds", holds}, {"conjugator_moves_root", moved}, {"rescaled_pairs", rescaled}};
    o.pass = o.pass && holds == n && moved == n;
  }
  return o;
}

SMatrix minus_identity(Ring ring, int n) {
  SMatrix m = identity(ring, n);
  for (int k = 0; k < n; ++k) m[k][k] = Scalar(ring, -1);
  return m;
}

Outcome spinor(const ClaimConfig& c) {
  const std::size_t n = samples_or(c, 200);
  const Ring E = Ring::Eisenstein;
  Outcome o{true, Json::object(), {"SpinorContext", "reflection_matrix", "preserves_form"}};
  for (int rank = 1; rank <= 3; ++rank) {
    const LorentzLattice l = standard(E, rank);
    const SpinorContext ctx(l.lattice());
    Rng rng(c.seed + static_cast<std::uint64_t>(rank));
    const int minus = ctx.spinor_norm(minus_identity(E, l.dim()));
    std::size_t plus = 0, products = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const auto [r, xi] = random_root(rng, l.lattice(), true);
      plus += ctx.spinor_norm(reflection_matrix(l.lattice(), r, xi)) == 1;
    }
    const std::size_t pairs = std::max<std::size_t>(1, n / 4);
    for (std::size_t t = 0; t < pairs; ++t) {
      const auto [r1, xi1] = random_root(rng, l.lattice(), false);
      const auto [r2, xi2] = random_root(rng, l.lattice(), false);
      const SMatrix m1 = reflection_matrix(l.lattice(), r1, xi1), m2 = reflection_matrix(l.lattice(), r2, xi2);
      products += ctx.spinor_norm(mul(m1, m2)) == ctx.spinor_norm(m1) * ctx.spinor_norm(m2);
    }
    o.evidence["n=" + std::to_string(rank)] = Json{{"basis_norms", ctx.basis_norms()},
                                                   {"minus_identity", minus},
                                                   {"short_reflections", n},
                                                   {"short_reflections_plus_one", plus},
                                                   {"product_pairs", pairs},
                                                   {"multiplicative_pairs", products}};
    o.pass = o.pass && minus == -1 && plus == n && products == pairs;
  }
  return o;
}

Outcome quotient(const ClaimConfig& c) {
  const std::size_t n = samples_or(c, 50);
  Outcome o{true, Json::object(), {"null_quotient", "fingerprint", "is_selfdual", "even_sublattice_constructions"}};
  Json cases = Json::array();
  for (Ring ring : kRings)
    for (int rank = 1; rank <= 3; ++rank) {
      const LorentzLattice l = standard(ring, rank);
      const Fingerprint want = fingerprint(l.base());
      const bool at_rho = fingerprint(null_quotient(l.lattice(), l.rho()).quotient) == want;
      Rng rng(c.seed + 10 * static_cast<std::uint64_t>(ring) + static_cast<std::uint64_t>(rank));
      std::size_t matched = 0;
      for (std::size_t t = 0; t < n; ++t) {
        const NullQuotient q = null_quotient(l.lattice(), random_null_in_orbit(rng, l));
        matched += is_selfdual(q.quotient) && q.quotient.is_definite() && fingerprint(q.quotient) == want;
      }
      cases.push_back(Json{{"ring", ring_name(ring)},
                           {"n", rank},
                           {"fingerprint", str(want)},
                           {"rho", at_rho},
                           {"random_vectors", n},
                           {"matched", matched}});
      o.pass = o.pass && at_rho && matched == n;
    }
  o.evidence["standard"] = cases;

  // II_{5,1} over G has the null vector e_4 in its hyperbolic summand.
  const Lattice ii51 = catalog("II_5_1_G");
  SVector v = zero_vector(Ring::Gauss, ii51.rank());
  v[4] = Scalar(Ring::Gauss, 1);
  const Lattice q = null_quotient(ii51, v).quotient;
  const bool even_selfdual = is_even(q) && is_selfdual(q);
  const bool e8 = fingerprint(q) == fingerprint(catalog("E8_G"));
  o.evidence["II_5_1_G"] = Json{{"fingerprint", str(fingerprint(q))}, {"even_selfdual", even_selfdual}, {"matches_E8_G", e8}};
  o.pass = o.pass && even_selfdual && e8;

  // Even selfdual lattices between M_e and its dual exist iff n - m = 0 mod 4.
  Json even = Json::object();
  for (const auto& [name, expect] : std::vector<std::pair<std::string, bool>>{
           {"I_1_1_G", true}, {"I_2_1_G", false}, {"I_3_1_G", false}, {"I_5_1_G", true}}) {
    const EvenConstruction ec = even_sublattice_constructions(catalog(name));
    even[name] = Json{{"candidates", ec.between.size()}, {"even_selfdual", ec.even_selfdual()}};
    o.pass = o.pass && (ec.even_selfdual() > 0) == expect;
  }
  o.evidence["even_constructions"] = even;
  return o;
}

Outcome cone(const ClaimConfig&) {
  const Rational a(2, 3), b(1, 3);
  const std::vector<Rational> alpha{a, a, b, b, b, b, b, b, b, b};
  const auto angles = cone_angles(alpha);
  std::map<Rational, std::size_t> counts;
  for (const auto& x : angles) ++counts[x.angle];
  Json strata = Json::array();
  for (const auto& [angle, count] : counts) {
    const Rational m = Rational(2) / angle;
    Json s{{"angle", to_string(angle)}, {"pairs", count}};
    if (is_integer(m)) s["order"] = to_int64(numerator(m));
    strata.push_back(s);
  }
  const std::set<int> orders = reflection_orders(angles);
  Json in = Json::array();
  for (const auto& x : alpha) in.push_back(to_string(x));
  Outcome o;
  o.evidence = Json{{"alpha", in}, {"strata", strata}, {"orders", orders}};
  o.pass = orders == std::set<int>{6, 3, 2};
  o.citations = {"cone_angles", "reflection_orders"};
  return o;
}

Outcome reflections(const ClaimConfig& c) {
  const std::size_t n = samples_or(c, 100);
  Outcome o{true, Json::object(), {"classify_reflection", "reflection_matrix"}};
  for (Ring ring : {Ring::Gauss, Ring::Eisenstein}) {
    const LorentzLattice l = standard(ring, 2);
    Rng rng(c.seed + static_cast<std::uint64_t>(ring));
    std::size_t round_trip = 0, dichotomy = 0, products = 0, rejected = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const auto [r, xi] = random_root(rng, l.lattice(), false);
      const SMatrix m = reflection_matrix(l.lattice(), r, xi);
      const ReflectionClass cls = classify_reflection(l.lattice(), m);
      round_trip += cls.reflection && reflection_matrix(l.lattice(), cls.root, cls.xi) == m;
      dichotomy += cls.short_or_biflection;
      // A product of reflections in independent roots moves a rank 2 space.
      const auto [r2, xi2] = random_root(rng, l.lattice(), false);
      if (column_rank(SMatrix{r, r2}) < 2) continue;
      ++products;
      rejected += !classify_reflection(l.lattice(), mul(m, reflection_matrix(l.lattice(), r2, xi2))).reflection;
    }
    o.evidence[ring_name(ring)] =
        Json{{"reflections", n}, {"round_trip", round_trip}, {"dichotomy", dichotomy},
             {"products", products}, {"products_rejected", rejected}};
    o.pass = o.pass && round_trip == n && dichotomy == n && rejected == products;
  }
  return o;
}

// Hole points are given in the coordinates of R^n and mapped into the basis.
struct CoveringCase {
  std::string lattice;
  Rational claimed;
  std::vector<SVector> holes;
};

SVector to_basis(const std::string& name, const SVector& ambient) {
  for (const auto& e : load_catalog(catalog_path()))
    if (e.name == name) {
      const int n = static_cast<int>(e.basis.size());
      SMatrix b = zero_matrix(e.ring, n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) b[r][c] = e.basis[c][r];
      return act(inverse(b), ambient);
    }
  return ambient;
}

CoveringCase covering_case(const std::string& which) {
  const Ring E = Ring::Eisenstein, H = Ring::Hurwitz, G = Ring::Gauss;
  const Scalar he = scale(Scalar(E, 2) + Scalar::omega(E), Rational(1, 3));
  const Scalar hh = scale(Scalar(H, 1) + Scalar::i(H), Rational(1, 2));
  if (which == "E1") return {"R1_E", Rational(1, 3), {{he}}};
  if (which == "E2") return {"R2_E", Rational(2, 3), {{he, he}}};
  if (which == "E3") return {"R3_E", Rational(1), {{he, he, he}}};
  if (which == "H1") return {"R1_H", Rational(1, 2), {{hh}}};
  if (which == "H2") return {"R2_H", Rational(1), {{hh, hh}}};
  if (which == "D4G") return {"D4_G", Rational(1), {to_basis("D4_G", {Scalar(G, 1), Scalar(G, 0)})}};
  throw std::invalid_argument("unknown covering case: " + which);
}

Outcome covering(const std::string& which, const ClaimConfig& c) {
  const CoveringCase cc = covering_case(which);
  const Lattice l = catalog(cc.lattice);
  const CoveringReport r = verify_covering_radius(l, cc.claimed, cc.holes, samples_or(c, 10000), c.seed);
  Json holes = Json::array();
  for (std::size_t k = 0; k < cc.holes.size(); ++k)
    holes.push_back(Json{{"point", to_json(cc.holes[k])}, {"distance2", to_string(r.hole_distances[k])}});
  Outcome o;
  o.evidence = Json{{"lattice", cc.lattice},
                    {"claimed_radius2", to_string(cc.claimed)},
                    {"holes", holes},
                    {"holes_exact", r.holes_exact},
                    {"grid_points", r.grid_points},
                    {"random_points", r.random_points},
                    {"max_sampled_distance2", to_string(r.max_sampled)},
                    {"worst_point", to_json(r.worst)},
                    {"note", "sampling evidence, not a proof of the covering radius"}};
  o.pass = r.pass();
  o.citations = {"closest_points", "verify_covering_radius"};
  return o;
}

Outcome census(Ring ring, int n, const Rational& bound, std::size_t classes, const ClaimConfig& c) {
  CensusOptions opt;
  opt.budget = c.budget;
  opt.threads = c.threads;
  const CensusReport r = orbit_census(standard(ring, n), c.bound.value_or(bound), opt);
  Outcome o;
  o.evidence = to_json(r);
  o.evidence["expected_classes"] = classes;
  o.pass = r.unresolved == 0 && r.classes.size() == classes;
  if (o.pass && ring == Ring::Eisenstein && n == 1) {
    // The classes are rho {1, w, w^2} and its negative.
    const Scalar w = Scalar::omega(ring);
    const std::set<Scalar> plus{Scalar(ring, 1), w, w.conj()}, minus{Scalar(ring, -1), -w, -w.conj()};
    std::set<std::set<Scalar>> got;
    for (const auto& cls : r.classes) got.insert({cls.units.begin(), cls.units.end()});
    o.pass = got == std::set<std::set<Scalar>>{plus, minus};
  }
  o.citations = {"orbit_census", "resolve_null_vector", "reduction_step", "escape_to_hyperplane",
                 "coordinate_translations", "replay"};
  return o;
}

const std::map<std::string, Check>& registry() {
  static const std::map<std::string, Check> table = [] {
    std::map<std::string, Check> t;
    t["d3theta-roots"] = d3theta_roots;
    t["barnes-wall"] = barnes_wall;
    t["heisenberg"] = heisenberg;
    t["gauss-long-roots"] = gauss_long_roots;
    t["short-root-trichotomy"] = short_root_trichotomy;
    t["braid"] = braid;
    t["spinor"] = spinor;
    t["quotient"] = quotient;
    t["cone-angles"] = cone;
    t["reflections"] = reflections;
    for (const std::string which : {"E1", "E2", "E3", "H1", "H2", "D4G"})
      t["covering-" + which] = [which](const ClaimConfig& c) { return covering(which, c); };
    const Ring E = Ring::Eisenstein, H = Ring::Hurwitz;
    t["census-E1"] = [=](const ClaimConfig& c) { return census(E, 1, Rational(25), 2, c); };
    t["census-E2"] = [=](const ClaimConfig& c) { return census(E, 2, Rational(9), 1, c); };
    t["census-E3"] = [=](const ClaimConfig& c) { return census(E, 3, Rational(9), 1, c); };
    t["census-H1"] = [=](const ClaimConfig& c) { return census(H, 1, Rational(9), 1, c); };
    return t;
  }();
  return table;
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> out;
  for (const auto& [id, check] : registry()) out.push_back(id);
  return out;
}

bool is_claim(const std::string& id) { return registry().count(id) > 0; }

ClaimReport run_claim(const std::string& id, const ClaimConfig& config) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown claim id: " + id);
  const auto start = std::chrono::steady_clock::now();
  Outcome o = it->second(config);
  ClaimReport r;
  r.claim = id;
  r.pass = o.pass;
  r.evidence = std::move(o.evidence);
  r.citations = std::move(o.citations);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json to_json(const ClaimReport& r) {
  return Json{{"format", 1},
              {"claim", r.claim},
              {"status", r.pass ? "pass" : "fail"},
              {"evidence", r.evidence},
              {"citations", r.citations}};
}

}  // namespace hyperlat
