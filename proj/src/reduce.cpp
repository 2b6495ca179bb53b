#include "hyperlat/reduce.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "hyperlat/scalar_lattice.hpp"

namespace hyperlat {

namespace {

const std::vector<Scalar>& sorted_units(Ring ring) {
  static const std::vector<Scalar> table[3] = {units(Ring::Gauss), units(Ring::Eisenstein), units(Ring::Hurwitz)};
  return table[static_cast<int>(ring)];
}

ReductionRule rule(Ring ring, RootLength length, Scalar h, std::vector<Scalar> exceptional, bool proved) {
  ReductionRule r;
  r.ring = ring;
  r.length = length;
  r.h = h;
  r.radius2 = 1 / h.norm();
  r.exceptional = std::move(exceptional);
  r.proved = proved;
  return r;
}

std::vector<ReductionRule> build_rules(Ring ring) {
  const Scalar one(ring, 1), zero(ring, 0);
  std::vector<ReductionRule> out;
  const auto S = RootLength::Short, L = RootLength::Long;
  switch (ring) {
    case Ring::Gauss: {
      const Scalar i = Scalar::i(ring), g = one + i, two(ring, 2);
      out.push_back(rule(ring, S, one, {zero}, true));
      ReductionRule lg = rule(ring, L, one, {}, true);
      lg.sqrt3 = true;
      out.push_back(lg);
      out.push_back(rule(ring, S, g, {zero, g.inverse() * i}, false));
      out.push_back(rule(ring, S, two, {zero, two.inverse() * i}, false));
      break;
    }
    case Ring::Eisenstein: {
      const Scalar w = Scalar::omega(ring), th = Scalar::theta(ring), two(ring, 2), tt = two * th;
      out.push_back(rule(ring, S, one, {zero}, true));
      out.push_back(rule(ring, L, one, {-w.conj()}, false));
      out.push_back(rule(ring, S, th, {zero}, true));
      out.push_back(rule(ring, L, th, {-(th.inverse() * w.conj())}, false));
      out.push_back(rule(ring, S, two, {zero, two.inverse() * th}, false));
      out.push_back(rule(ring, S, tt, {zero, tt.inverse() * th}, false));
      break;
    }
    case Ring::Hurwitz: {
      const Scalar w = Scalar::omega(ring), g = one + Scalar::i(ring), two(ring, 2);
      out.push_back(rule(ring, S, one, {zero}, true));
      out.push_back(rule(ring, L, one, {-w.conj()}, false));
      out.push_back(rule(ring, S, g, {zero, scale(g, Rational(1, 2))}, true));
      std::vector<Scalar> halves;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c) halves.push_back(Scalar::from_parts(ring, {1, a, b, c}, 2));
      out.push_back(rule(ring, S, two, halves, false));
      break;
    }
  }
  return out;
}

std::string scalar_name(const Scalar& h) {
  const Ring ring = h.ring();
  if (h.is_one()) return "1";
  if (h == Scalar(ring, 2)) return "2";
  if (ring == Ring::Eisenstein && h == Scalar::theta(ring)) return "theta";
  if (ring == Ring::Eisenstein && h == Scalar(ring, 2) * Scalar::theta(ring)) return "2theta";
  if (ring != Ring::Eisenstein && h == Scalar(ring, 1) + Scalar::i(ring)) return "1+i";
  return h.str();
}

// conj(K) for K = {z : Re(conj(h) z) = 0}, shared across calls.
const ScalarLattice& conjugate_orthogonal(Ring ring, const Scalar& h) {
  static std::mutex lock;
  static std::map<std::pair<Ring, Scalar>, std::unique_ptr<ScalarLattice>> cache;
  const std::lock_guard<std::mutex> guard(lock);
  auto& slot = cache[{ring, h}];
  if (!slot) {
    std::vector<Scalar> kc;
    for (const auto& k : orthogonal_sublattice(ring, h)) kc.push_back(k.conj());
    slot = std::make_unique<ScalarLattice>(ring, kc);
  }
  return *slot;
}

void check_null_vector(const LorentzLattice& lorentz, const SVector& v) {
  if (static_cast<int>(v.size()) != lorentz.dim()) throw std::invalid_argument("vector has the wrong length");
  if (!is_integral(v)) throw std::invalid_argument("vector is not integral");
  if (lorentz.norm(v) != 0) throw std::invalid_argument("vector is not null");
  if (is_zero(v)) throw std::invalid_argument("zero vector");
}

}  // namespace

std::string ReductionRule::name() const {
  return std::string(1, ring_letter(ring)) + "/" + str(length) + "/" + scalar_name(h);
}

bool ReductionRule::covers(const Rational& d2) const { return sqrt3 ? d2 * d2 < 3 : d2 <= radius2; }

bool ReductionRule::on_boundary(const Rational& d2) const { return !sqrt3 && d2 == radius2; }

const std::vector<ReductionRule>& reduction_rules(Ring ring) {
  static const std::map<Ring, std::vector<ReductionRule>> table = {
      {Ring::Gauss, build_rules(Ring::Gauss)},
      {Ring::Eisenstein, build_rules(Ring::Eisenstein)},
      {Ring::Hurwitz, build_rules(Ring::Hurwitz)}};
  return table.at(ring);
}

bool admits(RuleFilter filter, const ReductionRule& rule) {
  switch (filter) {
    case RuleFilter::All:
      return true;
    case RuleFilter::ShortOnly:
      return rule.length == RootLength::Short;
    case RuleFilter::ProvedOnly:
      return rule.proved;
  }
  return false;
}

std::string str(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Reduced:
      return "Reduced";
    case OutcomeKind::StuckOrthogonal:
      return "StuckOrthogonal";
    case OutcomeKind::StuckExceptional:
      return "StuckExceptional";
    case OutcomeKind::AtRho:
      return "AtRho";
    case OutcomeKind::Unresolved:
      return "Unresolved";
  }
  return "?";
}

ReductionOutcome attempt_center(const LorentzLattice& lorentz, const SVector& v, const ReductionRule& rule,
                                const SVector& lambda) {
  const Ring ring = lorentz.ring();
  const Scalar mu = lorentz.height(v);
  if (mu.is_zero()) throw std::invalid_argument("vector of height zero");
  if (lorentz.norm(v) != 0) throw std::invalid_argument("vector is not null");
  const SVector v1 = right_mul(v, mu.inverse());
  const Scalar& h = rule.h;
  const Rational n = root_norm(rule.length);

  ReductionOutcome out;
  out.vector = v;
  out.rule = rule;
  out.center = lambda;
  out.d2 = lorentz.base().norm(sub(right_mul(lorentz.lambda(v1), h), lambda)) / h.norm();

  const auto nu = solve_real_part(ring, h, (n - lorentz.base().norm(lambda)) / 2);
  if (!nu) {
    out.note = "no root of this height and length over the centre";
    return out;
  }
  const SVector base_root = lorentz.make(lambda, h, *nu);
  const ScalarLattice& conj_k = conjugate_orthogonal(ring, h);
  const Scalar c0 = lorentz.inner(base_root, v1);
  auto root_for = [&](const Scalar& zbar) {
    SVector r = base_root;
    r[lorentz.n() + 1] += zbar.conj();
    return r;
  };

  for (const auto& xi : sorted_units(ring)) {
    if (xi.is_one()) continue;
    if (rule.length == RootLength::Long && xi != Scalar(ring, -1)) continue;
    // New height of v1 is 1 - A(c0 + zbar) = A(A^-1 - c0 - zbar).
    const Scalar a = scale(h * (Scalar(ring, 1) - xi), 1 / n);
    std::optional<std::pair<Rational, Scalar>> best;
    conj_k.enumerate(a.inverse() - c0, 1 / a.norm(), [&](const Scalar& z, const Rational& d2) {
      if (!best || d2 < best->first || (d2 == best->first && z < best->second)) best.emplace(d2, z);
    });
    if (!best || best->first * a.norm() >= 1) continue;
    const SVector r = root_for(best->second);
    const SVector image = act(reflection_matrix(lorentz.lattice(), r, xi), v);
    if (lorentz.height(image).norm() >= mu.norm()) throw std::logic_error("reflection failed to reduce the height");
    out.kind = OutcomeKind::Reduced;
    out.result = image;
    out.root = r;
    out.xi = xi;
    return out;
  }

  if (!rule.covers(out.d2)) {
    out.note = "centre lies outside the rule's radius";
    return out;
  }
  if (!rule.on_boundary(out.d2)) {
    out.note = "no reducing reflection inside the radius";
    return out;
  }
  if (conj_k.contains(-c0)) {
    out.kind = OutcomeKind::StuckOrthogonal;
    out.root = root_for(-c0);
    out.inner = Scalar(ring, 0);
    return out;
  }
  for (const auto& e : rule.exceptional) {
    if (e.is_zero() || !conj_k.contains(e - c0)) continue;
    out.kind = OutcomeKind::StuckExceptional;
    out.root = root_for(e - c0);
    out.inner = e;
    return out;
  }
  out.note = "stuck at the boundary with an unlisted inner product";
  return out;
}

ReductionOutcome reduction_step(const LorentzLattice& lorentz, const SVector& v, RuleFilter filter) {
  check_null_vector(lorentz, v);
  if (!is_primitive(v)) throw std::invalid_argument("vector is not primitive");
  const Scalar mu = lorentz.height(v);
  if (mu.is_zero()) throw std::invalid_argument("vector of height zero");
  const Lattice& base = lorentz.base();
  const SVector ell = lorentz.lies_over(v);

  std::optional<ReductionOutcome> stuck;
  for (const auto& rule : reduction_rules(lorentz.ring())) {
    if (!admits(filter, rule)) continue;
    const Scalar& h = rule.h;
    const Rational bound = (rule.sqrt3 ? Rational(2) : rule.radius2) * h.norm();
    std::vector<std::pair<Rational, SVector>> centers;
    base.form().enumerate(base.to_real(right_mul(ell, h)), bound, false,
                          [&](const IntVector& x, const Rational& value) {
                            const Rational d2 = value / h.norm();
                            if (rule.covers(d2)) centers.emplace_back(d2, base.from_real(x));
                          });
    std::sort(centers.begin(), centers.end());
    for (const auto& [d2, lambda] : centers) {
      ReductionOutcome o = attempt_center(lorentz, v, rule, lambda);
      if (o.kind == OutcomeKind::Reduced) return o;
      if (!stuck && (o.kind == OutcomeKind::StuckOrthogonal || o.kind == OutcomeKind::StuckExceptional))
        stuck = std::move(o);
    }
  }
  if (stuck) return *stuck;
  ReductionOutcome out;
  out.vector = v;
  out.note = "no rule reduces the vector and none certifies it as stuck";
  return out;
}

ReductionResult reduce_null_vector(const LorentzLattice& lorentz, const SVector& v, RuleFilter filter) {
  check_null_vector(lorentz, v);
  ReductionResult res;
  res.input = v;
  const Scalar c = content(v);
  res.start = c.is_unit() ? v : right_mul(v, c.inverse());
  SVector cur = res.start;
  const Rational h2 = lorentz.height(cur).norm();
  const int cap = 10 * std::max<std::int64_t>(1, ceil_int(h2));
  while (true) {
    if (lorentz.is_rho_multiple(cur)) {
      res.terminal = ReductionOutcome{};
      res.terminal.kind = OutcomeKind::AtRho;
      res.terminal.vector = cur;
      return res;
    }
    if (res.steps >= cap) throw std::runtime_error("reduction exceeded its iteration cap");
    ReductionOutcome o = reduction_step(lorentz, cur, filter);
    if (o.kind != OutcomeKind::Reduced) {
      res.terminal = std::move(o);
      return res;
    }
    Generator g;
    g.kind = Generator::Kind::Reflection;
    g.root = o.root;
    g.xi = o.xi;
    res.word.push_back(g);
    cur = o.result;
    ++res.steps;
  }
}

TranslationWitness translation_from_reflections(const LorentzLattice& lorentz, const SVector& base_root,
                                                const Scalar& xi, const SVector& x, const Scalar& z) {
  const Ring ring = lorentz.ring();
  if (!translation_is_integral(lorentz, x, z)) throw std::invalid_argument("translation does not preserve the lattice");
  SVector r = base_root;
  r.push_back(Scalar(ring, 0));
  r.push_back(Scalar(ring, 0));
  const SMatrix rm = reflection_matrix(lorentz.lattice(), r, xi);
  if (!preserves_lattice(rm)) throw std::invalid_argument("reflection does not preserve the lattice");
  const SMatrix t = translation_matrix(lorentz, x, z);
  const SMatrix ti = inverse(t);

  TranslationWitness w;
  const SVector rx = act(reflection_matrix(lorentz.base(), base_root, xi), x);
  w.x = sub(rx, x);
  w.z = -lorentz.base().inner(rx, x).imag_part();
  const Isometry first = reflection(lorentz.lattice(), r, xi.conj());
  const Isometry second = reflection(lorentz.lattice(), act(ti, r), xi);
  w.isometry = compose(second, first);
  const SMatrix direct = mul(mul(ti, rm), mul(t, inverse(rm)));
  w.verified = direct == w.isometry.matrix && direct == translation_matrix(lorentz, w.x, w.z) &&
               word_matrix(lorentz, w.isometry.word) == direct;
  return w;
}

TranslationSubgroupReport coordinate_translations(const LorentzLattice& lorentz) {
  const Ring ring = lorentz.ring();
  if (ring == Ring::Gauss) throw std::invalid_argument("coordinate translations need Eisenstein or Hurwitz scalars");
  if (lorentz.base().gram() != identity(ring, lorentz.n()))
    throw std::invalid_argument("coordinate translations need the standard base lattice");
  const Scalar w = Scalar::omega(ring);
  const Scalar xi = -w;
  TranslationSubgroupReport rep;
  rep.spans_base = true;
  for (int k = 0; k < lorentz.n(); ++k) {
    SVector e = zero_vector(ring, lorentz.n());
    e[k] = Scalar(ring, 1);
    for (const auto& u : zbasis(ring)) {
      // R(e s) - e s = e (xi - 1) s and xi - 1 = conj(omega), so s = omega u.
      const Scalar s = w * u;
      const SVector x = right_mul(e, s);
      const auto y = solve_real_part(ring, Scalar(ring, 1), -lorentz.base().norm(x) / 2);
      if (!y) throw std::logic_error("no central part makes the translation integral");
      TranslationWitness tw = translation_from_reflections(lorentz, e, xi, x, y->imag_part());
      SVector want = zero_vector(ring, lorentz.n());
      want[k] = u;
      rep.spans_base = rep.spans_base && tw.verified && tw.x == want;
      rep.lattice_part.push_back(std::move(tw));
    }
  }
  for (std::size_t a = 0; a < rep.lattice_part.size(); ++a)
    for (std::size_t b = a + 1; b < rep.lattice_part.size(); ++b) {
      const Scalar im = lorentz.base().inner(rep.lattice_part[b].x, rep.lattice_part[a].x).imag_part();
      Scalar c = im + im;
      if (c < -c) c = -c;
      if (!c.is_zero() && std::find(rep.central.begin(), rep.central.end(), c) == rep.central.end())
        rep.central.push_back(c);
    }
  std::sort(rep.central.begin(), rep.central.end());
  return rep;
}

BraidReport braid_equivalence(const Lattice& lattice, const SVector& r, const SVector& r2) {
  const Ring ring = lattice.ring();
  if (ring == Ring::Gauss) throw std::invalid_argument("braid moves need Eisenstein or Hurwitz scalars");
  if (lattice.norm(r) != 1 || lattice.norm(r2) != 1) throw std::invalid_argument("braid moves need short roots");
  if (lattice.inner(r, r2).norm() != 1) throw std::invalid_argument("roots do not have unit inner product");
  const Scalar xi = -Scalar::omega(ring);
  BraidReport rep;
  // Rescale r' so that <r|r'> = 1; over the Hurwitz integers the relation
  // needs the inner product to commute with omega.
  rep.rescale = lattice.inner(r, r2).inverse();
  const SVector r2n = right_mul(r2, rep.rescale);
  const Isometry a = reflection(lattice, r, xi);
  const Isometry b = reflection(lattice, r2n, xi);
  rep.braid_holds = mul(a.matrix, mul(b.matrix, a.matrix)) == mul(b.matrix, mul(a.matrix, b.matrix));
  rep.conjugator = compose(a, b);
  const SVector gr = act(rep.conjugator.matrix, r);
  for (std::size_t k = 0; k < r2.size(); ++k)
    if (!r2n[k].is_zero()) {
      rep.unit = left_divide(r2n[k], gr[k]);
      break;
    }
  if (right_mul(r2n, rep.unit) != gr || !rep.unit.is_unit()) rep.unit = Scalar(ring, 0);
  return rep;
}

ScalarElementReport hyperbolic_scalar_element(Ring ring, int n) {
  if (ring == Ring::Gauss) throw std::invalid_argument("the scalar element needs Eisenstein or Hurwitz scalars");
  const LorentzLattice lorentz(Lattice(ring, identity(ring, n)));
  const Scalar w = Scalar::omega(ring), one(ring, 1), zero(ring, 0);
  const SVector zn = zero_vector(ring, n);
  ScalarElementReport rep;
  rep.f = compose(reflection(lorentz.lattice(), lorentz.make(zn, one, -w), -w),
                  translation(lorentz, zn, -Scalar::theta(ring)));
  rep.b = reflection(lorentz.lattice(), lorentz.make(zn, one, one), Scalar(ring, -1));
  rep.j = compose(compose(rep.f, compose(rep.f, rep.f)), rep.b);

  auto block = [&](const SMatrix& m, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    return m[n][n] == a && m[n][n + 1] == b && m[n + 1][n] == c && m[n + 1][n + 1] == d;
  };
  auto trivial_on_base = [&](const SMatrix& m) {
    for (int i = 0; i < n + 2; ++i)
      for (int k = 0; k < n + 2; ++k) {
        if (i >= n && k >= n) continue;
        if (m[i][k] != (i == k ? one : zero)) return false;
      }
    return true;
  };
  const SMatrix& f = rep.f.matrix;
  rep.trivial_on_base = trivial_on_base(f) && trivial_on_base(rep.j.matrix);
  rep.f_matrix_ok = block(f, zero, w.conj(), w.conj(), zero);
  const SMatrix f2 = mul(f, f);
  rep.f_squared_scalar = block(f2, w, zero, zero, w);
  rep.j_central = block(rep.j.matrix, -one, zero, zero, -one);
  return rep;
}

}  // namespace hyperlat
