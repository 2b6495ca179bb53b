#include "hyperlat/lorentz.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperlat/scalar_lattice.hpp"

namespace hyperlat {

namespace {

Lattice hyperbolic_plane(Ring ring) {
  SMatrix g = zero_matrix(ring, 2, 2);
  g[0][1] = g[1][0] = Scalar(ring, 1);
  return Lattice(ring, std::move(g), std::string("II_1_1_") + ring_letter(ring));
}

}  // namespace

LorentzLattice::LorentzLattice(Lattice base)
    : base_(std::move(base)),
      full_(direct_sum(base_, hyperbolic_plane(base_.ring()),
                       (base_.name().empty() ? std::string("L") : base_.name()) + "+II_1_1")) {}

SVector LorentzLattice::make(const SVector& lambda, const Scalar& mu, const Scalar& nu) const {
  if (static_cast<int>(lambda.size()) != n()) throw std::invalid_argument("lambda has the wrong length");
  SVector v = lambda;
  v.push_back(mu.with_ring(ring()));
  v.push_back(nu.with_ring(ring()));
  for (auto& x : v) x = x.with_ring(ring());
  return v;
}

SVector LorentzLattice::lambda(const SVector& v) const { return SVector(v.begin(), v.begin() + n()); }

SVector LorentzLattice::rho() const {
  SVector v = zero_vector(ring(), dim());
  v[n() + 1] = Scalar(ring(), 1);
  return v;
}

Scalar LorentzLattice::height(const SVector& v) const {
  if (static_cast<int>(v.size()) != dim()) throw std::invalid_argument("vector has the wrong length");
  return mu(v);
}

SVector LorentzLattice::lies_over(const SVector& v) const {
  const Scalar h = height(v);
  if (h.is_zero()) throw std::domain_error("vector of height zero lies over no point");
  return right_mul(lambda(v), h.inverse());
}

bool LorentzLattice::is_rho_multiple(const SVector& v) const {
  for (int k = 0; k <= n(); ++k)
    if (!v[k].is_zero()) return false;
  return true;
}

SMatrix reflection_matrix(const Lattice& lattice, const SVector& root, const Scalar& xi) {
  const Ring ring = lattice.ring();
  const Rational nr = lattice.norm(root);
  if (nr == 0) throw std::invalid_argument("reflection in a null vector");
  if (!xi.is_unit()) throw std::invalid_argument("reflection multiplier must be a unit");
  if (xi.is_one()) throw std::invalid_argument("reflection multiplier must differ from 1");
  const int d = lattice.rank();
  // Row functional <r|e_j>, scaled by (1-xi)/r^2 on the left of it.
  const Scalar c = scale(Scalar(ring, 1) - xi.with_ring(ring), 1 / nr);
  SMatrix m = identity(ring, d);
  for (int j = 0; j < d; ++j) {
    Scalar f(ring, 0);
    for (int i = 0; i < d; ++i) f += root[i].conj() * lattice.gram()[i][j];
    if (f.is_zero()) continue;
    const Scalar cf = c * f;
    for (int i = 0; i < d; ++i) m[i][j] -= root[i] * cf;
  }
  return m;
}

SMatrix translation_matrix(const LorentzLattice& lorentz, const SVector& x, const Scalar& z) {
  const Ring ring = lorentz.ring();
  const int n = lorentz.n();
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("translation vector has the wrong length");
  if (!z.is_imaginary()) throw std::invalid_argument("central part of a translation must be imaginary");
  SMatrix m = identity(ring, n + 2);
  const SMatrix& g = lorentz.base().gram();
  for (int i = 0; i < n; ++i) m[i][n] = x[i].with_ring(ring);
  for (int j = 0; j < n; ++j) {
    Scalar f(ring, 0);
    for (int i = 0; i < n; ++i) f += x[i].conj() * g[i][j];
    m[n + 1][j] = -f;
  }
  m[n + 1][n] = z.with_ring(ring) - scale(Scalar(ring, 1), lorentz.base().norm(x) / 2);
  return m;
}

Isometry identity_isometry(Ring ring, int dim) { return {identity(ring, dim), {}}; }

Isometry reflection(const Lattice& lattice, const SVector& root, const Scalar& xi) {
  Generator g;
  g.kind = Generator::Kind::Reflection;
  g.root = root;
  g.xi = xi.with_ring(lattice.ring());
  return {reflection_matrix(lattice, root, xi), {g}};
}

Isometry translation(const LorentzLattice& lorentz, const SVector& x, const Scalar& z) {
  Generator g;
  g.kind = Generator::Kind::Translation;
  g.x = x;
  g.z = z.with_ring(lorentz.ring());
  return {translation_matrix(lorentz, x, z), {g}};
}

Isometry linear_isometry(SMatrix matrix, std::string label) {
  Generator g;
  g.kind = Generator::Kind::Linear;
  g.matrix = matrix;
  g.label = std::move(label);
  return {std::move(matrix), {g}};
}

SMatrix extend_to_lorentz(const LorentzLattice& lorentz, const SMatrix& s) {
  SMatrix m = identity(lorentz.ring(), lorentz.dim());
  for (int i = 0; i < lorentz.n(); ++i)
    for (int j = 0; j < lorentz.n(); ++j) m[i][j] = s[i][j];
  return m;
}

Isometry compose(const Isometry& a, const Isometry& b) {
  Isometry out{mul(a.matrix, b.matrix), b.word};
  out.word.insert(out.word.end(), a.word.begin(), a.word.end());
  return out;
}

Generator inverse(const Generator& g) {
  Generator out = g;
  switch (g.kind) {
    case Generator::Kind::Reflection:
      out.xi = g.xi.conj();
      break;
    case Generator::Kind::Translation:
      out.x = neg(g.x);
      out.z = -g.z;
      break;
    case Generator::Kind::Linear:
      out.matrix = hyperlat::inverse(g.matrix);
      out.label = g.label + "^-1";
      break;
  }
  return out;
}

Isometry inverse(const Isometry& a) {
  Isometry out{hyperlat::inverse(a.matrix), {}};
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) out.word.push_back(inverse(*it));
  return out;
}

SVector act(const Isometry& a, const SVector& v) { return act(a.matrix, v); }

SMatrix generator_matrix(const LorentzLattice& lorentz, const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Reflection:
      return reflection_matrix(lorentz.lattice(), g.root, g.xi);
    case Generator::Kind::Translation:
      return translation_matrix(lorentz, g.x, g.z);
    case Generator::Kind::Linear:
      return g.matrix;
  }
  throw std::logic_error("unknown generator kind");
}

SMatrix word_matrix(const LorentzLattice& lorentz, const std::vector<Generator>& word) {
  SMatrix m = identity(lorentz.ring(), lorentz.dim());
  for (const auto& g : word) m = mul(generator_matrix(lorentz, g), m);
  return m;
}

SVector replay(const LorentzLattice& lorentz, const std::vector<Generator>& word, const SVector& v) {
  SVector out = v;
  for (const auto& g : word) out = act(generator_matrix(lorentz, g), out);
  return out;
}

bool preserves_form(const Lattice& lattice, const SMatrix& m) {
  return mul(adjoint(m), mul(lattice.gram(), m)) == lattice.gram();
}

bool preserves_lattice(const SMatrix& m) { return is_integral(m) && is_integral(inverse(m)); }

bool translation_is_integral(const LorentzLattice& lorentz, const SVector& x, const Scalar& z) {
  if (!is_integral(x)) return false;
  return (z - Scalar::from_rational(lorentz.ring(), lorentz.base().norm(x) / 2)).is_integral();
}

HeisenbergReport verify_heisenberg(const LorentzLattice& lorentz, const SVector& x, const Scalar& z,
                                   const SVector& x2, const Scalar& z2, const SMatrix& s) {
  const Ring ring = lorentz.ring();
  const Lattice& base = lorentz.base();
  if (!preserves_form(base, s)) throw std::invalid_argument("conjugating matrix is not unitary");
  const SMatrix t = translation_matrix(lorentz, x, z);
  const SMatrix t2 = translation_matrix(lorentz, x2, z2);
  const SMatrix id = identity(ring, lorentz.dim());
  const SVector zero = zero_vector(ring, lorentz.n());
  const Scalar im = base.inner(x2, x).imag_part();

  HeisenbergReport r;
  r.composition = mul(t, t2) == translation_matrix(lorentz, add(x, x2), z + z2 + im);
  r.inverse = mul(t, translation_matrix(lorentz, neg(x), -z)) == id &&
              inverse(t) == translation_matrix(lorentz, neg(x), -z);
  const SMatrix a = translation_matrix(lorentz, x, Scalar(ring, 0));
  const SMatrix b = translation_matrix(lorentz, x2, Scalar(ring, 0));
  const SMatrix comm = mul(mul(a, b), mul(inverse(a), inverse(b)));
  r.commutator = comm == translation_matrix(lorentz, zero, im + im);
  const SMatrix se = extend_to_lorentz(lorentz, s);
  r.conjugation = mul(mul(se, t), inverse(se)) == translation_matrix(lorentz, act(s, x), z);
  return r;
}

Rational root_norm(RootLength length) { return length == RootLength::Short ? Rational(1) : Rational(2); }

std::string str(RootLength length) { return length == RootLength::Short ? "short" : "long"; }

namespace {

// Re(conj(h) u_s) for the Z-basis, doubled so the entries are integers.
IntVector doubled_functional(Ring ring, const Scalar& h) {
  IntVector f;
  for (const auto& u : zbasis(ring)) {
    const Rational v = 2 * (h.conj() * u).re();
    if (!is_integer(v)) throw std::logic_error("doubled real part is not integral");
    f.push_back(to_int64(numerator(v)));
  }
  return f;
}

}  // namespace

std::vector<Scalar> orthogonal_sublattice(Ring ring, const Scalar& h) {
  const LinearSolution sol = solve_functional(doubled_functional(ring, h), 0);
  std::vector<Scalar> out;
  for (const auto& k : sol.kernel) out.push_back(Scalar::from_zcoords(ring, k));
  return out;
}

std::optional<Scalar> solve_real_part(Ring ring, const Scalar& h, const Rational& target) {
  const Rational t2 = 2 * target;
  if (!is_integer(t2)) return std::nullopt;
  const LinearSolution sol = solve_functional(doubled_functional(ring, h), to_int64(numerator(t2)));
  if (!sol.particular) return std::nullopt;
  return Scalar::from_zcoords(ring, *sol.particular);
}

std::vector<SVector> roots_of_height(const LorentzLattice& lorentz, const Scalar& h, const SVector& lambda,
                                     RootLength length, const Rational& radius2) {
  const Ring ring = lorentz.ring();
  if (h.is_zero() || !h.is_integral()) throw std::invalid_argument("root height must be a nonzero ring element");
  if (!is_integral(lambda)) throw std::invalid_argument("lambda must be integral");
  const Rational n = root_norm(length);
  const Rational target = (n - lorentz.base().norm(lambda)) / 2;
  const auto particular = solve_real_part(ring, h, target);
  if (!particular) return {};
  const Scalar center = scale(h, target / h.norm());
  const ScalarLattice k(ring, orthogonal_sublattice(ring, h));
  std::vector<SVector> out;
  k.enumerate(center - *particular, radius2, [&](const Scalar& w, const Rational&) {
    out.push_back(lorentz.make(lambda, h, *particular + w));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperlat
