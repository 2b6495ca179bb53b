#include "hyperlat/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "hyperlat/scalar_lattice.hpp"

namespace hyperlat {

namespace {

SVector unit_vector(Ring ring, int n, int k) {
  SVector e = zero_vector(ring, n);
  e[k] = Scalar(ring, 1);
  return e;
}

SVector insert_zero(const SVector& v, int k) {
  SVector out = v;
  out.insert(out.begin() + k, Scalar(v.front().ring(), 0));
  return out;
}

// A generator of the lattice with coordinate k removed, acting trivially on e_k.
Generator embed(const Generator& g, int k) {
  Generator out = g;
  switch (g.kind) {
    case Generator::Kind::Reflection:
      out.root = insert_zero(g.root, k);
      break;
    case Generator::Kind::Translation:
      out.x = insert_zero(g.x, k);
      break;
    case Generator::Kind::Linear: {
      const Ring ring = g.matrix.front().front().ring();
      const int d = static_cast<int>(g.matrix.size()) + 1;
      SMatrix m = identity(ring, d);
      for (int i = 0, a = 0; i < d; ++i) {
        if (i == k) continue;
        for (int j = 0, b = 0; j < d; ++j) {
          if (j == k) continue;
          m[i][j] = g.matrix[a][b];
          ++b;
        }
        ++a;
      }
      out.matrix = std::move(m);
      break;
    }
  }
  return out;
}

void append(std::vector<Generator>& word, const std::vector<Generator>& more) {
  word.insert(word.end(), more.begin(), more.end());
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void merge(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Integer coordinates of y in the Z-basis b of a sublattice of the ring.
IntVector coordinates(const std::vector<Scalar>& b, const Scalar& y) {
  const std::size_t r = b.size();
  RatMatrix gram(r, RatVector(r));
  RatVector rhs(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = (b[i].conj() * b[j]).re();
    rhs[i] = (b[i].conj() * y).re();
  }
  const RatMatrix inv = rat_inverse(gram);
  IntVector c(r);
  Scalar back(y.ring(), 0);
  for (std::size_t i = 0; i < r; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < r; ++j) s += inv[i][j] * rhs[j];
    if (!is_integer(s)) throw std::logic_error("element is not in the sublattice");
    c[i] = to_int64(numerator(s));
    back += b[i] * Scalar(y.ring(), c[i]);
  }
  if (back != y) throw std::logic_error("element is not in the sublattice");
  return c;
}

// mu is canonical when it is the least element of mu U.
bool canonical_height(const Scalar& mu, const std::vector<Scalar>& us) {
  for (const auto& u : us)
    if (mu * u < mu) return false;
  return true;
}

struct Record {
  SVector v;
  Resolution res;
};

}  // namespace

HyperplaneEscape escape_to_hyperplane(const LorentzLattice& lorentz, const SVector& v, const SVector& root) {
  const Ring ring = lorentz.ring();
  const int n = lorentz.n();
  HyperplaneEscape out;
  if (ring == Ring::Gauss || n < 1 || lorentz.base().gram() != identity(ring, n)) return out;
  if (lorentz.norm(root) != 1 || !lorentz.inner(root, v).is_zero()) return out;
  const Scalar m1 = lorentz.mu(root);
  if (!m1.is_unit()) return out;
  // Braid moves carry root to r2 = (e_k; 0, nu2) with <root|r2> = 1 and then
  // r2 to r3 = (e_k; 0, 0).
  const int k = n - 1;
  const Scalar nu2 = m1.conj().inverse() * (Scalar(ring, 1) - lorentz.lambda(root)[k].conj());
  const SVector ek = unit_vector(ring, n, k);
  const SVector r2 = lorentz.make(ek, Scalar(ring, 0), nu2);
  const SVector r3 = lorentz.make(ek, Scalar(ring, 0), Scalar(ring, 0));
  const BraidReport b1 = braid_equivalence(lorentz.lattice(), root, r2);
  const BraidReport b2 = braid_equivalence(lorentz.lattice(), r2, r3);
  if (!b1.braid_holds || !b2.braid_holds) return out;
  out.move = compose(b2.conjugator, b1.conjugator);
  out.coordinate = k;
  out.ok = act(out.move, v)[k].is_zero();
  return out;
}

Resolution resolve_null_vector(const LorentzLattice& lorentz, const SVector& v, RuleFilter filter) {
  const Ring ring = lorentz.ring();
  const int n = lorentz.n();
  Resolution out;
  const ReductionResult red = reduce_null_vector(lorentz, v, filter);
  out.word = red.word;
  if (red.terminal.kind == OutcomeKind::AtRho) {
    out.resolved = true;
    out.unit = lorentz.nu(red.terminal.vector);
    return out;
  }
  out.stuck = red.terminal;
  if (red.terminal.kind != OutcomeKind::StuckOrthogonal || n < 2) return out;

  const HyperplaneEscape esc = escape_to_hyperplane(lorentz, red.terminal.vector, red.terminal.root);
  if (!esc.ok) return out;
  const int k = esc.coordinate;
  const Isometry& g = esc.move;
  const SVector moved = act(g, red.terminal.vector);

  SVector sub = moved;
  sub.erase(sub.begin() + k);
  const LorentzLattice smaller(Lattice(ring, identity(ring, n - 1)));
  const Resolution inner = resolve_null_vector(smaller, sub, filter);
  if (!inner.resolved) {
    out.stuck = inner.stuck;
    return out;
  }
  append(out.word, g.word);
  for (const auto& gen : inner.word) out.word.push_back(embed(gen, k));
  out.resolved = true;
  out.unit = inner.unit;
  out.escapes = inner.escapes + 1;
  return out;
}

CensusReport orbit_census(const LorentzLattice& lorentz, const Rational& bound, const CensusOptions& options) {
  const Ring ring = lorentz.ring();
  const int n = lorentz.n();
  if (ring == Ring::Gauss) throw std::invalid_argument("the census needs Eisenstein or Hurwitz scalars");
  if (n < 1 || n > 3) throw std::invalid_argument("the census needs a base of rank 1 to 3");
  if (lorentz.base().gram() != identity(ring, n)) throw std::invalid_argument("the census needs the standard base lattice");
  if (bound < 0) throw std::invalid_argument("negative height bound");
  if (options.filter == RuleFilter::All) throw std::invalid_argument("the census uses short roots only");

  CensusReport rep;
  rep.ring = ring;
  rep.n = n;
  rep.bound = bound;
  rep.translations = coordinate_translations(lorentz);
  if (!rep.translations.spans_base) throw std::logic_error("certified translations do not span the base");
  rep.central = rep.translations.central;
  const std::vector<Scalar> us = [&] {
    auto u = units(ring);
    std::sort(u.begin(), u.end());
    return u;
  }();

  // Heights up to right units.
  std::vector<Scalar> heights;
  ScalarLattice(ring, zbasis(ring)).enumerate(Scalar(ring, 0), bound, [&](const Scalar& mu, const Rational&) {
    if (!mu.is_zero() && canonical_height(mu, us)) heights.push_back(mu);
  });
  std::sort(heights.begin(), heights.end(), [](const Scalar& a, const Scalar& b) {
    return a.norm() != b.norm() ? a.norm() < b.norm() : a < b;
  });

  // Work items: one per (mu, lambda).
  struct Item {
    std::size_t height;
    SVector lambda;
  };
  std::vector<Item> items;
  std::vector<std::vector<Scalar>> nu_window(heights.size());
  std::size_t estimate = 1;
  for (std::size_t h = 0; h < heights.size(); ++h) {
    const Scalar& mu = heights[h];
    const std::vector<Scalar> kb = orthogonal_sublattice(ring, mu);
    std::vector<IntVector> cols;
    for (const auto& s : rep.central) cols.push_back(coordinates(kb, s * mu));
    const IntMatrix herm = hermite_basis(cols, static_cast<int>(kb.size()));
    for (const auto& c : hermite_box(herm)) {
      Scalar z(ring, 0);
      for (std::size_t i = 0; i < kb.size(); ++i) z += kb[i] * Scalar(ring, c[i]);
      nu_window[h].push_back(z);
    }
    const std::vector<Scalar> res = ResidueSystem(ring, mu).representatives();
    std::size_t count = 1;
    for (int i = 0; i < n; ++i) count *= res.size();
    estimate += count * nu_window[h].size();
    if (estimate > options.budget) throw std::length_error("census exceeds its budget");
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      SVector lambda(n);
      for (int i = 0; i < n; ++i) lambda[i] = res[idx[i]];
      items.push_back({h, std::move(lambda)});
      int i = n - 1;
      while (i >= 0 && ++idx[i] == res.size()) idx[i--] = 0;
      if (i < 0) break;
    }
  }

  std::vector<std::vector<Record>> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < items.size();) {
      const Item& it = items[t];
      const Scalar& mu = heights[it.height];
      const auto nu0 = solve_real_part(ring, mu, -lorentz.base().norm(it.lambda) / 2);
      if (!nu0) continue;
      for (const auto& z : nu_window[it.height]) {
        const SVector v = lorentz.make(it.lambda, mu, *nu0 + z);
        if (!content(v).is_unit()) continue;
        Record r{v, resolve_null_vector(lorentz, v, options.filter)};
        if (r.res.resolved && replay(lorentz, r.res.word, v) != right_mul(lorentz.rho(), r.res.unit))
          throw std::logic_error("census word does not replay");
        results[t].push_back(std::move(r));
      }
    }
  };
  const unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  // Height zero: rho itself.
  std::vector<Record> all;
  all.push_back({lorentz.rho(), Resolution{true, Scalar(ring, 1), {}, 0, {}}});
  for (auto& rs : results)
    for (auto& r : rs) all.push_back(std::move(r));

  // Unit classes from short-root reflections of rho.
  auto unit_index = [&](const Scalar& u) {
    return static_cast<int>(std::lower_bound(us.begin(), us.end(), u) - us.begin());
  };
  UnionFind uf(us.size());
  {
    // Short roots of heights 0 and 1 near the origin, and words of one or two
    // reflections in them applied to rho.
    std::vector<SVector> roots;
    const SVector zn = zero_vector(ring, n);
    std::vector<SVector> centers{zn};
    for (int k = 0; k < n; ++k) centers.push_back(unit_vector(ring, n, k));
    for (const SVector& lambda : centers)
      for (const auto& r : roots_of_height(lorentz, Scalar(ring, 1), lambda, RootLength::Short, Rational(1)))
        roots.push_back(r);
    for (int k = 0; k < n; ++k) {
      roots.push_back(lorentz.make(unit_vector(ring, n, k), Scalar(ring, 0), Scalar(ring, 0)));
      roots.push_back(lorentz.make(unit_vector(ring, n, k), Scalar(ring, 0), Scalar(ring, 1)));
    }
    std::vector<Isometry> moves;
    for (const auto& r : roots)
      for (const auto& xi : us)
        if (!xi.is_one()) moves.push_back(reflection(lorentz.lattice(), r, xi));
    auto witness = [&](const Isometry& g) {
      const SVector image = act(g, lorentz.rho());
      const Scalar unit = lorentz.is_rho_multiple(image) ? lorentz.nu(image) : Scalar(ring, 0);
      if (!unit.is_zero() && uf.find(unit_index(unit)) == uf.find(unit_index(Scalar(ring, 1)))) return;
      const Resolution res = resolve_null_vector(lorentz, image, options.filter);
      if (!res.resolved || uf.find(unit_index(res.unit)) == uf.find(unit_index(Scalar(ring, 1)))) return;
      UnitWitness w{res.unit, g.word};
      append(w.word, res.word);
      if (replay(lorentz, w.word, lorentz.rho()) != right_mul(lorentz.rho(), w.unit))
        throw std::logic_error("unit witness does not replay");
      for (const auto& u : us) uf.merge(unit_index(u), unit_index(w.unit * u));
      rep.witnesses.push_back(std::move(w));
    };
    // Stop once every unit is in one class.
    auto merged = [&] {
      for (std::size_t i = 0; i < us.size(); ++i)
        if (uf.find(static_cast<int>(i)) != 0) return false;
      return true;
    };
    for (const auto& a : moves) witness(a);
    for (std::size_t i = 0; i < moves.size() && !merged(); ++i)
      for (std::size_t j = 0; j < moves.size() && !merged(); ++j) witness(compose(moves[j], moves[i]));
  }

  auto precedes = [&](const SVector& a, const SVector& b) {
    const Rational ha = lorentz.mu(a).norm(), hb = lorentz.mu(b).norm();
    return ha != hb ? ha < hb : a < b;
  };
  std::map<int, TerminalClass> classes;
  for (std::size_t i = 0; i < us.size(); ++i) classes[uf.find(static_cast<int>(i))].units.push_back(us[i]);
  for (const auto& r : all) {
    ++rep.representatives;
    if (!r.res.resolved) {
      ++rep.unresolved;
      if (rep.unresolved_examples.size() < 10) rep.unresolved_examples.push_back(r.v);
      continue;
    }
    rep.escapes += r.res.escapes > 0;
    rep.max_word = std::max(rep.max_word, r.res.word.size());
    for (const auto& u : us) {
      ++rep.vectors;
      TerminalClass& c = classes[uf.find(unit_index(r.res.unit * u))];
      ++c.count;
      const SVector vu = right_mul(r.v, u);
      if (c.representative.empty() || precedes(vu, c.representative)) c.representative = vu;
    }
  }
  for (auto& [index, c] : classes)
    if (c.count > 0) rep.classes.push_back(std::move(c));
  return rep;
}

}  // namespace hyperlat
