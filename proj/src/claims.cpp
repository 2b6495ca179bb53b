#include "hyperlat/claims.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hyperlat {

namespace {

SVector basis_vector(Ring ring, int n, int k) {
  SVector e = zero_vector(ring, n);
  e[k] = Scalar(ring, 1);
  return e;
}

// Pairwise size reduction of vectors spanning a definite sublattice: replace
// b_i by b_i - b_j c, c nearest <b_j|b_i>/|b_j|^2, while some norm drops.
void pair_reduce(const Lattice& lattice, std::vector<SVector>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        const Rational nj = lattice.norm(basis[j]);
        const Scalar c = nearest_integral(scale(lattice.inner(basis[j], basis[i]), 1 / nj));
        if (c.is_zero()) continue;
        SVector cand = sub(basis[i], right_mul(basis[j], c));
        if (lattice.norm(cand) < lattice.norm(basis[i])) {
          basis[i] = std::move(cand);
          changed = true;
        }
      }
  }
  std::stable_sort(basis.begin(), basis.end(), [&](const SVector& a, const SVector& b) {
    return lattice.norm(a) < lattice.norm(b);
  });
}

// Number of negative squares of a nondegenerate symmetric rational form.
int negative_index(RatMatrix a) {
  const std::size_t n = a.size();
  int negative = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t r = k; r < n && piv == n; ++r)
      if (a[r][r] != 0) piv = r;
    if (piv == n) {
      // All diagonal entries vanish: e_k + e_r has norm 2 a_kr != 0.
      std::size_t r = k + 1;
      while (r < n && a[k][r] == 0) ++r;
      if (r == n) throw std::invalid_argument("form is degenerate");
      for (std::size_t c = 0; c < n; ++c) a[k][c] += a[r][c];
      for (std::size_t c = 0; c < n; ++c) a[c][k] += a[c][r];
      piv = k;
    }
    std::swap(a[k], a[piv]);
    for (auto& row : a) std::swap(row[k], row[piv]);
    if (a[k][k] < 0) ++negative;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational f = a[r][k] / a[k][k];
      for (std::size_t c = k + 1; c < n; ++c) a[r][c] -= f * a[k][c];
    }
    for (std::size_t r = k + 1; r < n; ++r) a[r][k] = a[k][r] = 0;
  }
  return negative;
}

}  // namespace

CoveringReport verify_covering_radius(const Lattice& lattice, const Rational& claimed,
                                      const std::vector<SVector>& holes, std::size_t samples,
                                      std::uint64_t seed, std::size_t grid_cap) {
  if (!lattice.is_definite()) throw std::invalid_argument("covering radius of an indefinite lattice");
  CoveringReport rep;
  rep.claimed = claimed;
  rep.holes_exact = true;
  for (const auto& h : holes) {
    const Rational d = closest_points(lattice, h).dist2;
    rep.hole_distances.push_back(d);
    rep.holes_exact = rep.holes_exact && d == claimed;
  }

  auto probe = [&](const RatVector& real) {
    const SVector t = lattice.from_real(real);
    const Rational d = closest_points(lattice, t).dist2;
    if (rep.worst.empty() || d > rep.max_sampled) {
      rep.max_sampled = d;
      rep.worst = t;
    }
  };
  const std::size_t dim = lattice.real_gram().size();
  // Grid step 1/g with g^dim <= grid_cap, preferring g divisible by 6 so
  // that halves and thirds are hit.
  auto fits = [&](std::size_t g) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < dim && total <= grid_cap; ++k) total *= g;
    return total <= grid_cap;
  };
  std::size_t g = 1;
  while (fits(g + 1)) ++g;
  if (g >= 6) g -= g % 6;
  if (g >= 2) {
    std::vector<std::size_t> idx(dim, 0);
    while (true) {
      RatVector real;
      for (auto i : idx) real.push_back(Rational(static_cast<std::int64_t>(i), static_cast<std::int64_t>(g)));
      probe(real);
      ++rep.grid_points;
      std::size_t k = 0;
      while (k < dim && ++idx[k] == g) idx[k++] = 0;
      if (k == dim) break;
    }
  }
  std::mt19937_64 rng(seed);
  constexpr std::int64_t den = 997;
  for (std::size_t s = 0; s < samples; ++s) {
    RatVector real;
    for (std::size_t k = 0; k < dim; ++k) real.push_back(Rational(static_cast<std::int64_t>(rng() % den), den));
    probe(real);
    ++rep.random_points;
  }
  return rep;
}

bool BarnesWallReport::pass() const {
  bool norms_ok = classes == 256;
  for (const auto& [norm, count] : class_min_norms) norms_ok = norms_ok && (norm == 0 || norm == 2 || norm == 3);
  return selfdual && min_norm == 2 && norm2_count == 4320 && norm2_rank == 4 && norms_ok && holes_ok &&
         controls_ok;
}

BarnesWallReport verify_barnes_wall(const Lattice& bw, std::size_t holes) {
  if (bw.ring() != Ring::Hurwitz || bw.rank() != 4) throw std::invalid_argument("expected a Hurwitz lattice of rank 4");
  const Ring H = Ring::Hurwitz;
  BarnesWallReport rep;
  rep.selfdual = is_selfdual(bw);
  const ShortVectors sv = short_vectors(bw, Rational(3));
  if (!sv.empty()) rep.min_norm = sv.begin()->first;
  const auto two = sv.find(Rational(2));
  if (two != sv.end()) {
    rep.norm2_count = two->second.size();
    SMatrix cols(bw.rank());
    for (const auto& v : two->second)
      for (int k = 0; k < bw.rank(); ++k) cols[k].push_back(v[k]);
    rep.norm2_rank = column_rank(cols);
  }

  const Scalar g = Scalar(H, 1) + Scalar::i(H);
  const auto census = residue_census(bw, g);
  rep.classes = census.size();
  for (const auto& c : census) ++rep.class_min_norms[c.min_norm];

  const Scalar ginv = g.inverse();
  const auto three = sv.find(Rational(3));
  rep.holes_ok = three != sv.end() && three->second.size() >= holes;
  for (std::size_t k = 0; rep.holes_ok && k < holes; ++k) {
    const SVector t = right_mul(three->second[k], ginv);
    // Deep holes nearest 0 are halves of norm 6 vectors: distance^2 3/2.
    const Rational d = closest_points(bw, t).dist2;
    rep.hole_distances.push_back(d);
    rep.holes_ok = d == Rational(3, 2) && deep_hole_predicate_bw(bw, t);
    ++rep.holes_checked;
  }
  rep.controls_ok = two != sv.end();
  for (std::size_t k = 0; rep.controls_ok && k < std::min<std::size_t>(holes, two->second.size()); ++k) {
    const SVector t = right_mul(two->second[k], ginv);
    rep.controls_ok = !deep_hole_predicate_bw(bw, t) && closest_points(bw, t).dist2 < Rational(3, 2);
  }
  return rep;
}

NullQuotient null_quotient(const Lattice& lattice, const SVector& v) {
  const Ring ring = lattice.ring();
  const int m = lattice.rank();
  if (static_cast<int>(v.size()) != m) throw std::invalid_argument("vector has the wrong length");
  if (m < 3) throw std::invalid_argument("null quotient needs rank at least 3");
  if (!is_selfdual(lattice)) throw std::invalid_argument("null quotient needs a selfdual lattice");
  if (!is_primitive(v)) throw std::invalid_argument("vector is not primitive");
  if (lattice.norm(v) != 0) throw std::invalid_argument("vector is not null");

  // Unimodular column operations on the standard basis x_j, first making
  // <v|x_j> vanish for all j but p, so that <v|x_p> is a unit.  The
  // coordinates c of v in the current basis are carried along.
  std::vector<Scalar> vals;
  std::vector<SVector> xs;
  std::vector<Scalar> c = v;
  for (int j = 0; j < m; ++j) {
    xs.push_back(basis_vector(ring, m, j));
    vals.push_back(lattice.inner(v, xs.back()));
  }
  auto pivot = [](const std::vector<Scalar>& a, std::size_t skip) {
    std::size_t p = a.size();
    for (std::size_t k = 0; k < a.size(); ++k)
      if (k != skip && !a[k].is_zero() && (p == a.size() || a[k].norm() < a[p].norm())) p = k;
    return p;
  };
  std::size_t p = 0;
  while (true) {
    p = pivot(vals, m);
    bool done = true;
    for (std::size_t k = 0; k < vals.size(); ++k) {
      if (k == p || vals[k].is_zero()) continue;
      const Scalar q = nearest_integral(left_divide(vals[p], vals[k]));
      vals[k] -= vals[p] * q;
      xs[k] = sub(xs[k], right_mul(xs[p], q));
      c[p] += q * c[k];
      if (!vals[k].is_zero()) done = false;
    }
    if (done) break;
  }
  if (!vals[p].is_unit()) throw std::invalid_argument("vector is not primitive in a selfdual lattice");
  const SVector w = right_mul(xs[p], vals[p].inverse());
  if (!lattice.inner(v, w).is_one()) throw std::logic_error("partner has the wrong inner product");

  // The x_k with k != p span v^perp and v = sum x_k c_k there.  Inner
  // products on v^perp only depend on classes mod v, so the quotient is read
  // off the x_k directly: Euclid on c until v = x_d c_d, then drop x_d.  The
  // classes can be large when projected to <v,w>^perp, so no projection is
  // made.  In the definite case the x_k are size reduced between rounds,
  // carrying c along (x_i -= x_j a moves a c_i into c_j).
  std::vector<SVector> gens;
  std::vector<Scalar> cs;
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (k != p) {
      gens.push_back(xs[k]);
      cs.push_back(c[k]);
    }
  const bool definite = negative_index(lattice.real_gram()) == degree(ring);
  auto drop = [&](std::size_t k) {
    gens.erase(gens.begin() + static_cast<long>(k));
    cs.erase(cs.begin() + static_cast<long>(k));
  };
  for (int round = 0;; ++round) {
    if (round > 10000) throw std::logic_error("null quotient basis reduction did not finish");
    if (definite) {
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i)
          for (std::size_t j = 0; j < gens.size(); ++j) {
            const Rational nj = lattice.norm(gens[j]);
            if (i == j || nj == 0) continue;
            const Scalar a = nearest_integral(scale(lattice.inner(gens[j], gens[i]), 1 / nj));
            if (a.is_zero()) continue;
            SVector cand = sub(gens[i], right_mul(gens[j], a));
            if (lattice.norm(cand) < lattice.norm(gens[i])) {
              gens[i] = std::move(cand);
              cs[j] += a * cs[i];
              changed = true;
            }
          }
      }
      // A generator of norm 0 lies in <v>; the others then span the quotient.
      const auto null = std::find_if(gens.begin(), gens.end(), [&](const SVector& x) { return lattice.norm(x) == 0; });
      if (null != gens.end()) {
        drop(static_cast<std::size_t>(null - gens.begin()));
        break;
      }
    }
    const std::size_t d = pivot(cs, cs.size());
    bool done = true;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (k == d || cs[k].is_zero()) continue;
      const Scalar q = nearest_integral(right_divide(cs[k], cs[d]));
      cs[k] -= q * cs[d];
      gens[d] = add(gens[d], right_mul(gens[k], q));
      if (!cs[k].is_zero()) done = false;
    }
    if (done) {
      if (!cs[d].is_unit()) throw std::logic_error("vector is not primitive in its orthogonal complement");
      drop(d);
      break;
    }
  }
  std::vector<SVector> basis = std::move(gens);
  Lattice q(ring, gram_of(lattice.gram(), basis));
  if (q.is_definite()) {
    pair_reduce(lattice, basis);
    q = Lattice(ring, gram_of(lattice.gram(), basis));
  }
  return NullQuotient{w, std::move(basis), std::move(q)};
}

int EvenConstruction::even_selfdual() const {
  return static_cast<int>(std::count_if(between.begin(), between.end(),
                                        [](const Between& b) { return b.even && b.selfdual; }));
}

EvenConstruction even_sublattice_constructions(const Lattice& m) {
  const Ring G = Ring::Gauss;
  if (m.ring() != G) throw std::invalid_argument("even sublattices need Gaussian scalars");
  if (!is_selfdual(m)) throw std::invalid_argument("lattice is not selfdual");
  if (is_even(m)) throw std::invalid_argument("lattice is already even");
  const int n = m.rank();
  const Scalar g = Scalar(G, 1) + Scalar::i(G);

  // |x|^2 mod 2 is additive and vanishes on M(1+i).
  std::vector<SVector> cols;
  int odd = -1;
  for (int k = 0; k < n; ++k) {
    const SVector e = basis_vector(G, n, k);
    cols.push_back(right_mul(e, g));
    if (is_integer(m.norm(e) / 2)) {
      cols.push_back(e);
    } else if (odd < 0) {
      odd = k;
    } else {
      cols.push_back(add(e, basis_vector(G, n, odd)));
    }
  }
  EvenConstruction out;
  out.even_basis = module_basis(G, n, cols);

  // Dual of M_e, expressed in the coordinates of M.
  const Lattice me(G, gram_of(m.gram(), out.even_basis));
  std::vector<SVector> dual;
  for (const auto& c : dual_basis(me)) {
    SVector d = zero_vector(G, n);
    for (int l = 0; l < n; ++l) d = add(d, right_mul(out.even_basis[l], c[l]));
    dual.push_back(d);
  }

  auto contains = [](const std::vector<SVector>& basis, const SVector& t) {
    return module_coords(basis, t).has_value();
  };
  const std::vector<Scalar> digits = residues_mod(G, Scalar(G, 2));
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    SVector t = zero_vector(G, n);
    for (int k = 0; k < n; ++k) t = add(t, right_mul(dual[k], digits[idx[k]]));
    // t spans a submodule of order 2 over M_e.
    const bool fresh = !contains(out.even_basis, t) && contains(out.even_basis, right_mul(t, g)) &&
                       contains(out.even_basis, sub(right_mul(t, Scalar::i(G)), t)) &&
                       std::none_of(out.between.begin(), out.between.end(),
                                    [&](const EvenConstruction::Between& b) { return contains(b.basis, t); });
    if (fresh) {
      std::vector<SVector> gens = out.even_basis;
      gens.push_back(t);
      std::vector<SVector> basis = module_basis(G, n, gens);
      Lattice lat(G, gram_of(m.gram(), basis));
      EvenConstruction::Between b{basis, lat};
      b.original = true;
      for (int k = 0; k < n; ++k) b.original = b.original && contains(basis, basis_vector(G, n, k));
      b.integral = is_integral_lattice(lat);
      b.even = b.integral && is_even(lat);
      b.selfdual = b.integral && is_selfdual(lat);
      out.between.push_back(std::move(b));
    }
    int k = 0;
    while (k < n && ++idx[k] == digits.size()) idx[k++] = 0;
    if (k == n) break;
  }
  return out;
}

ReflectionClass classify_reflection(const Lattice& lattice, const SMatrix& m) {
  ReflectionClass out;
  const int n = lattice.rank();
  if (static_cast<int>(m.size()) != n) {
    out.reason = "matrix has the wrong size";
    return out;
  }
  if (!preserves_form(lattice, m)) {
    out.reason = "matrix does not preserve the form";
    return out;
  }
  SMatrix d = m;
  for (int k = 0; k < n; ++k) d[k][k] -= Scalar(lattice.ring(), 1);
  const int rank = column_rank(d);
  if (rank != 1) {
    out.reason = "fixed space has corank " + std::to_string(rank);
    return out;
  }
  SVector col;
  for (int c = 0; c < n && col.empty(); ++c) {
    SVector v(n);
    for (int r = 0; r < n; ++r) v[r] = d[r][c];
    if (!is_zero(v)) col = v;
  }
  std::int64_t den = 1;
  for (const auto& x : col) den = std::lcm(den, x.den());
  col = right_mul(col, Scalar(lattice.ring(), den));
  const SVector root = right_mul(col, content(col).inverse());
  const SVector image = act(m, root);
  int k = 0;
  while (root[k].is_zero()) ++k;
  const Scalar xi = left_divide(root[k], image[k]);
  if (right_mul(root, xi) != image || !xi.is_unit() || xi.is_one()) {
    out.reason = "root is not an eigenvector with unit eigenvalue";
    return out;
  }
  const Rational nr = lattice.norm(root);
  if (nr == 0) {
    out.reason = "root is null";
    return out;
  }
  if (reflection_matrix(lattice, root, xi) != m) {
    out.reason = "matrix is not the reflection in its root";
    return out;
  }
  out.reflection = true;
  out.root = root;
  out.xi = xi;
  out.root_norm = nr;
  const Rational a = nr < 0 ? -nr : nr;
  out.short_or_biflection = a == 1 || (a == 2 && xi == Scalar(lattice.ring(), -1));
  return out;
}

std::vector<ConeAngle> cone_angles(const std::vector<Rational>& alpha) {
  Rational total;
  for (const auto& a : alpha) {
    if (a <= 0 || a >= 2) throw std::invalid_argument("curvatures must lie strictly between 0 and 2 pi");
    total += a;
  }
  if (total != 4) throw std::invalid_argument("curvatures must sum to 4 pi");
  std::vector<ConeAngle> out;
  for (int i = 0; i < static_cast<int>(alpha.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(alpha.size()); ++j) {
      if (alpha[i] + alpha[j] >= 2) continue;
      ConeAngle c;
      c.i = i;
      c.j = j;
      c.angle = alpha[i] == alpha[j] ? Rational(1 - alpha[i]) : Rational(2 - alpha[i] - alpha[j]);
      const Rational m = Rational(2) / c.angle;
      if (is_integer(m) && m >= 2) c.order = static_cast<int>(to_int64(numerator(m)));
      out.push_back(c);
    }
  return out;
}

std::set<int> reflection_orders(const std::vector<ConeAngle>& angles) {
  std::set<int> out;
  for (const auto& a : angles)
    if (a.order) out.insert(*a.order);
  return out;
}

}  // namespace hyperlat
