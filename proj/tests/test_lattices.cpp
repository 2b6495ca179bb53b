#include <functional>
#include <optional>
#include <random>

#include "doctest.h"
#include "hyperlat/catalog.hpp"

using namespace hyperlat;

namespace {

// Integral elements of norm <= max_norm, by brute force over Z-coordinates.
std::vector<Scalar> small_elements(Ring ring, int max_norm) {
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

bool divides(const Scalar& m, const Scalar& x) { return right_divide(x, m).is_integral(); }

// Count x in R^n with sum |x_i|^2 == target, all x_i congruent mod `same`
// (when given), and leaf(x), by budgeted recursion.
std::int64_t count_ambient(Ring ring, int n, int target, const std::function<bool(const SVector&)>& leaf,
                           std::optional<Scalar> same = std::nullopt) {
  const auto elems = small_elements(ring, target);
  std::vector<int> norms, cls;
  std::vector<Scalar> reps;
  for (const auto& e : elems) {
    norms.push_back(static_cast<int>(e.norm()));
    int c = 0;
    if (same) {
      c = -1;
      for (std::size_t t = 0; t < reps.size() && c < 0; ++t)
        if (divides(*same, e - reps[t])) c = static_cast<int>(t);
      if (c < 0) {
        c = static_cast<int>(reps.size());
        reps.push_back(e);
      }
    }
    cls.push_back(c);
  }
  std::int64_t count = 0;
  SVector x;
  int first_class = 0;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(x.size()) == n) {
      if (left == 0 && leaf(x)) ++count;
      return;
    }
    for (std::size_t t = 0; t < elems.size(); ++t) {
      if (norms[t] > left) continue;
      if (x.empty()) first_class = cls[t];
      else if (cls[t] != first_class) continue;
      x.push_back(elems[t]);
      rec(left - norms[t]);
      x.pop_back();
    }
  };
  rec(target);
  return count;
}

Scalar total(const SVector& x) {
  Scalar s(x[0].ring(), 0);
  for (const auto& v : x) s += v;
  return s;
}

Scalar random_rational(std::mt19937_64& rng, Ring ring, int den) {
  std::uniform_int_distribution<int> num(-3 * den, 3 * den);
  std::vector<Rational> c;
  for (int t = 0; t < degree(ring); ++t) c.emplace_back(num(rng), den);
  return Scalar::from_rational_coords(ring, c);
}

}  // namespace

TEST_CASE("inner products") {
  const Lattice e2 = catalog("R2_E");
  const Ring E = Ring::Eisenstein;
  CHECK(e2.inner({Scalar(E, 1), Scalar(E, 0)}, {Scalar(E, 0), Scalar(E, 1)}) == Scalar(E, 0));
  const Lattice h = catalog("II_1_1_G");
  CHECK(h.inner({Scalar(Ring::Gauss, 1), Scalar(Ring::Gauss, 0)}, {Scalar(Ring::Gauss, 0), Scalar(Ring::Gauss, 1)}) ==
        Scalar(Ring::Gauss, 1));
  // Sesquilinearity over the quaternions.
  const Lattice bw = catalog("BW4_H");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    SVector x, y;
    for (int k = 0; k < 4; ++k) {
      x.push_back(random_rational(rng, Ring::Hurwitz, 2));
      y.push_back(random_rational(rng, Ring::Hurwitz, 3));
    }
    const Scalar a = random_rational(rng, Ring::Hurwitz, 1);
    CHECK(bw.inner(x, right_mul(y, a)) == bw.inner(x, y) * a);
    CHECK(bw.inner(right_mul(x, a), y) == a.conj() * bw.inner(x, y));
    CHECK(bw.inner(x, y).conj() == bw.inner(y, x));
    CHECK(bw.norm(x) == [&] {
      const RatVector r = bw.to_real(x);
      Rational acc = 0;
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) acc += r[i] * bw.real_gram()[i][j] * r[j];
      return acc;
    }());
  }
}

TEST_CASE("real forms") {
  const Lattice e = catalog("R1_E");
  CHECK(e.real_gram() == RatMatrix{{1, Rational(-1, 2)}, {Rational(-1, 2), 1}});
  const Lattice h = catalog("R1_H");
  CHECK(rat_determinant(h.real_gram()) == Rational(1, 4));  // D4 scaled by 1/2 has det 4/16
  CHECK(theta_prefix(h, 2) == std::vector<std::int64_t>{1, 24, 24});
}

TEST_CASE("catalog counts agree with the congruence definitions") {
  const Ring G = Ring::Gauss, E = Ring::Eisenstein, H = Ring::Hurwitz;
  const Scalar theta = Scalar::theta(E);
  const Scalar g1i = Scalar(G, 1) + Scalar::i(G);
  const Scalar h1i = Scalar(H, 1) + Scalar::i(H);

  auto d3 = [&](const SVector& x) { return divides(theta, total(x)); };
  CHECK(count_ambient(E, 3, 2, d3) == 54);
  CHECK(count_ambient(E, 3, 3, d3) == 72);
  CHECK(theta_prefix(catalog("D3theta"), 3) == std::vector<std::int64_t>{1, 0, 54, 72});

  // Norm 2 in (1+i)^-1 X means norm 4 in X.
  auto e8g = [&](const SVector& x) { return divides(Scalar(G, 2), total(x)); };
  const std::int64_t e8g_count = count_ambient(G, 4, 4, e8g, g1i);
  CHECK(e8g_count == 240);
  CHECK(short_vectors(catalog("E8_G"), 2).at(Rational(2)).size() == static_cast<std::size_t>(e8g_count));
  CHECK(count_ambient(H, 2, 2, [&](const SVector& x) { return divides(h1i, total(x)); }) == 240);

  auto k12 = [&](const SVector& x) { return divides(Scalar(E, 3), total(x)); };
  CHECK(count_ambient(E, 6, 6, k12, theta) == 756);
  CHECK(theta_prefix(catalog("K12_E"), 2)[2] == 756);

  auto bw = [&](const SVector& x) { return divides(Scalar(H, 2), total(x)); };
  CHECK(count_ambient(H, 4, 4, bw, h1i) == 4320);
  CHECK(count_ambient(H, 4, 6, bw, h1i) == 61440);
  CHECK(theta_prefix(catalog("BW4_H"), 3) == std::vector<std::int64_t>{1, 0, 4320, 61440});
}

TEST_CASE("catalog data file matches regeneration") {
  const auto built = build_congruence_catalog();
  const auto loaded = load_catalog(catalog_path());
  REQUIRE(built.size() == loaded.size());
  for (std::size_t t = 0; t < built.size(); ++t) {
    CHECK(built[t].name == loaded[t].name);
    CHECK(built[t].basis == loaded[t].basis);
    CHECK(built[t].gram == loaded[t].gram);
    CHECK(built[t].fingerprint == loaded[t].fingerprint);
  }
  CHECK(catalog_names().size() >= 10);
  for (const auto& name : catalog_names()) CHECK(catalog(name).name() == name);
  CHECK_THROWS_AS(catalog("nope"), std::out_of_range);
}

TEST_CASE("selfduality and parity") {
  for (const auto& name : {"R1_G", "R3_E", "R2_H", "E8_G", "K12_E", "BW4_H", "I_1_1_G", "I_2_1_E",
                           "II_1_1_G", "II_1_1_H", "II_5_1_G", "II_9_1_G"})
    CHECK_MESSAGE(is_selfdual(catalog(name)), std::string(name));
  for (const auto& name : {"D4_G", "D6_G", "D3theta"}) CHECK_FALSE(is_selfdual(catalog(name)));
  // The quaternionic E8 has a unimodular real form, but its Hermitian dual
  // is strictly larger: the Hermitian dual of H^2 is H^2 itself, while the
  // real dual of H is four times larger than H.
  const Lattice e8h = catalog("E8_H");
  CHECK(rat_determinant(e8h.real_gram()) == 1);
  CHECK_FALSE(is_selfdual(e8h));
  CHECK(is_even(catalog("II_1_1_G")));
  CHECK_FALSE(is_even(catalog("I_1_1_G")));
  CHECK(is_even(catalog("E8_G")));
  CHECK(is_even(catalog("II_5_1_G")));
  const Ring E = Ring::Eisenstein;
  const Lattice ii = catalog("II_1_1_E");
  CHECK(ii.norm({Scalar(E, 1), -Scalar::omega(E)}) == 1);
  CHECK_FALSE(is_even(ii));
  const Ring G = Ring::Gauss;
  const Scalar g1i = Scalar(G, 1) + Scalar::i(G);
  CHECK_FALSE(is_primitive({g1i, g1i}));
  CHECK(is_primitive({g1i, Scalar(G, 1)}));
  CHECK_THROWS(is_selfdual(Lattice(G, zero_matrix(G, 2, 2))));
}

TEST_CASE("dual membership on selfdual lattices") {
  std::mt19937_64 rng(11);
  for (const auto& name : {"E8_G", "R2_H", "K12_E", "BW4_H"}) {
    const Lattice l = catalog(name);
    for (int trial = 0; trial < 200; ++trial) {
      const int den = 1 + trial % 6;
      SVector t;
      // Even trials draw lattice points, odd trials draw rational points.
      for (int k = 0; k < l.rank(); ++k)
        t.push_back(random_rational(rng, l.ring(), trial % 2 == 0 ? 1 : den));
      const std::string what = std::string(name) + " " + str(t);
      CHECK_MESSAGE(in_dual(l, t) == is_integral(t), what);
    }
  }
}

TEST_CASE("short vectors are symmetric and sorted") {
  for (const auto& name : {"R1_E", "D4_G", "D3theta", "E8_H"}) {
    const auto sv = short_vectors(catalog(name), 3);
    for (const auto& [norm, vs] : sv) {
      CHECK(vs.size() % 2 == 0);
      CHECK(std::is_sorted(vs.begin(), vs.end()));
      for (const auto& v : vs) CHECK(std::binary_search(vs.begin(), vs.end(), neg(v)));
    }
  }
  CHECK(short_vectors(catalog("R1_E"), 1).at(Rational(1)).size() == 6);
}

TEST_CASE("closest points agree with brute force") {
  std::mt19937_64 rng(3);
  for (const auto& name : {"R1_G", "R1_E", "R1_H", "R2_E", "D4_G", "R2_G"}) {
    const Lattice l = catalog(name);
    const int m = static_cast<int>(l.real_gram().size());
    for (int trial = 0; trial < 100; ++trial) {
      SVector t;
      for (int k = 0; k < l.rank(); ++k) t.push_back(random_rational(rng, l.ring(), 1 + trial % 5));
      const ClosestPoints cp = closest_points(l, t);
      // Brute force over a coordinate box around the target.
      const RatVector tr = l.to_real(t);
      std::int64_t bound = 0;
      for (const auto& c : tr) bound = std::max(bound, std::abs(floor_int(c)) + 1);
      bound += 2;
      Rational best = -1;
      std::vector<SVector> pts;
      IntVector z(m, -bound);
      while (true) {
        const SVector v = l.from_real(z);
        const Rational d = l.norm(sub(v, t));
        if (best < 0 || d < best) {
          best = d;
          pts = {v};
        } else if (d == best) {
          pts.push_back(v);
        }
        int k = 0;
        while (k < m && z[k] == bound) z[k++] = -bound;
        if (k == m) break;
        ++z[k];
      }
      std::sort(pts.begin(), pts.end());
      CHECK(cp.dist2 == best);
      CHECK(cp.points == pts);
    }
  }
  const Ring E = Ring::Eisenstein;
  const Scalar hole = scale(Scalar(E, 2) + Scalar::omega(E), Rational(1, 3));
  const ClosestPoints cp = closest_points(catalog("R1_E"), {hole});
  CHECK(cp.dist2 == Rational(1, 3));
  CHECK(cp.points.size() == 3);
  const ClosestPoints half = closest_points(catalog("R1_G"), {Scalar::from_rational(Ring::Gauss, Rational(1, 2))});
  CHECK(half.dist2 == Rational(1, 4));
  CHECK(half.points.size() == 2);
}

TEST_CASE("residue census") {
  const auto e = residue_census(catalog("R1_E"), Scalar::theta(Ring::Eisenstein));
  REQUIRE(e.size() == 3);
  std::vector<Rational> norms;
  for (const auto& c : e) norms.push_back(c.min_norm);
  std::sort(norms.begin(), norms.end());
  CHECK(norms == std::vector<Rational>{0, 1, 1});
}

TEST_CASE("fingerprints") {
  const Fingerprint a = fingerprint(catalog("R2_E"));
  for (int k = 0; k <= 4; ++k)
    CHECK(a.theta[k] == count_ambient(Ring::Eisenstein, 2, k, [](const SVector&) { return true; }));
  CHECK_FALSE(fingerprint(catalog("I_1_1_G")).definite);
  CHECK(fingerprint(catalog("II_1_1_G")).even);
}
