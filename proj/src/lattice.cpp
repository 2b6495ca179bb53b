#include "hyperlat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperlat {

Lattice::Lattice(Ring ring, SMatrix gram, std::string name)
    : ring_(ring), gram_(std::move(gram)), name_(std::move(name)) {
  const int n = rank();
  for (const auto& row : gram_)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("gram matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      gram_[i][j] = gram_[i][j].with_ring(ring_);
      if (gram_[i][j].conj() != gram_[j][i]) throw std::invalid_argument("gram matrix is not Hermitian");
    }
  const auto basis = zbasis(ring_);
  const int d = degree(ring_);
  real_gram_.assign(n * d, RatVector(n * d, Rational(0)));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t)
          real_gram_[k * d + s][l * d + t] = (basis[s].conj() * gram_[k][l] * basis[t]).re();
  if (n > 0) {
    try {
      form_ = std::make_shared<const QuadForm>(real_gram_);
    } catch (const std::domain_error&) {
      form_ = nullptr;
    }
  }
}

const QuadForm& Lattice::form() const {
  if (!form_) throw std::domain_error("lattice is not positive definite");
  return *form_;
}

RatVector Lattice::to_real(const SVector& v) const {
  if (static_cast<int>(v.size()) != rank()) throw std::invalid_argument("vector length does not match rank");
  RatVector out;
  for (const auto& x : v) {
    const auto z = x.with_ring(ring_).zcoords();
    out.insert(out.end(), z.begin(), z.end());
  }
  return out;
}

SVector Lattice::from_real(const IntVector& z) const {
  const int d = degree(ring_);
  SVector out;
  for (int k = 0; k < rank(); ++k)
    out.push_back(Scalar::from_zcoords(ring_, IntVector(z.begin() + k * d, z.begin() + (k + 1) * d)));
  return out;
}

SVector Lattice::from_real(const RatVector& z) const {
  const int d = degree(ring_);
  const auto basis = zbasis(ring_);
  SVector out;
  for (int k = 0; k < rank(); ++k) {
    Scalar s(ring_, 0);
    for (int t = 0; t < d; ++t) s += scale(basis[t], z[k * d + t]);
    out.push_back(s);
  }
  return out;
}

Lattice direct_sum(const Lattice& a, const Lattice& b, std::string name) {
  if (a.ring() != b.ring()) throw std::invalid_argument("direct_sum: ring mismatch");
  const int n = a.rank(), m = b.rank();
  SMatrix g = zero_matrix(a.ring(), n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = a.gram()[i][j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g[n + i][n + j] = b.gram()[i][j];
  return Lattice(a.ring(), std::move(g), std::move(name));
}

SMatrix gram_of(const SMatrix& gram, const std::vector<SVector>& columns) {
  const int n = static_cast<int>(columns.size());
  SMatrix out(n, SVector(n));
  for (int k = 0; k < n; ++k)
    for (int l = k; l < n; ++l) {
      out[k][l] = hermitian(gram, columns[k], columns[l]);
      out[l][k] = out[k][l].conj();
    }
  return out;
}

std::vector<SVector> module_basis(Ring ring, int n, std::vector<SVector> columns) {
  std::int64_t scale_den = 1;
  for (auto& c : columns) {
    if (static_cast<int>(c.size()) != n) throw std::invalid_argument("module_basis: column length");
    for (auto& x : c) {
      x = x.with_ring(ring);
      scale_den = std::lcm(scale_den, x.den());
    }
  }
  const Scalar up(ring, scale_den);
  for (auto& c : columns) c = right_mul(c, up);
  std::erase_if(columns, [](const SVector& c) { return is_zero(c); });

  std::vector<SVector> basis;
  for (int r = 0; r < n; ++r) {
    std::size_t piv = 0;
    while (true) {
      bool found = false;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c][r].is_zero()) continue;
        if (!found || columns[c][r].norm() < columns[piv][r].norm()) piv = c;
        found = true;
      }
      if (!found) throw std::domain_error("module_basis: columns do not span a full-rank module");
      bool done = true;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c == piv || columns[c][r].is_zero()) continue;
        const Scalar q = nearest_integral(left_divide(columns[piv][r], columns[c][r]));
        columns[c] = sub(columns[c], right_mul(columns[piv], q));
        if (!columns[c][r].is_zero()) done = false;
      }
      if (done) break;
    }
    basis.push_back(columns[piv]);
    columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(piv));
    std::erase_if(columns, [](const SVector& c) { return is_zero(c); });
  }
  const Scalar down = Scalar::from_rational(ring, Rational(1, scale_den));
  for (auto& b : basis) b = right_mul(b, down);
  return basis;
}

std::optional<SVector> module_coords(const std::vector<SVector>& basis, const SVector& v) {
  const std::size_t n = basis.size();
  SVector c;
  for (std::size_t k = 0; k < n; ++k) {
    Scalar acc = v[k];
    for (std::size_t l = 0; l < k; ++l) acc -= basis[l][k] * c[l];
    c.push_back(left_divide(basis[k][k], acc));
    if (!c.back().is_integral()) return std::nullopt;
  }
  return c;
}

ShortVectors short_vectors(const Lattice& lattice, const Rational& max_norm) {
  const QuadForm& q = lattice.form();
  ShortVectors out;
  const RatVector center(q.dim(), Rational(0));
  q.enumerate(center, max_norm, false, [&](const IntVector& z, const Rational& value) {
    if (value == 0) return;
    out[value].push_back(lattice.from_real(z));
  });
  for (auto& [norm, vs] : out) std::sort(vs.begin(), vs.end());
  return out;
}

ClosestPoints closest_points(const Lattice& lattice, const SVector& target) {
  const QuadForm::Closest c = lattice.form().closest(lattice.to_real(target));
  ClosestPoints out{c.dist2, {}};
  for (const auto& z : c.points) out.points.push_back(lattice.from_real(z));
  std::sort(out.points.begin(), out.points.end());
  return out;
}

bool is_integral_lattice(const Lattice& lattice) { return is_integral(lattice.gram()); }

bool is_selfdual(const Lattice& lattice) {
  return is_integral_lattice(lattice) && is_integral(inverse(lattice.gram()));
}

bool is_even(const Lattice& lattice) {
  const RatMatrix& g = lattice.real_gram();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!is_integer(g[i][j])) return false;
      if (i == j && numerator(g[i][i]) % 2 != 0) return false;
    }
  return true;
}

bool is_primitive(const SVector& v) {
  if (v.empty() || is_zero(v) || !is_integral(v)) return false;
  return content(v).is_unit();
}

std::vector<SVector> dual_basis(const Lattice& lattice) {
  const SMatrix x = inverse(lattice.gram());
  std::vector<SVector> out(lattice.rank());
  for (int k = 0; k < lattice.rank(); ++k)
    for (int l = 0; l < lattice.rank(); ++l) out[k].push_back(x[l][k]);
  return out;
}

bool in_dual(const Lattice& lattice, const SVector& t) {
  return is_integral(act(lattice.gram(), t));
}

std::vector<std::int64_t> theta_prefix(const Lattice& lattice, int max_norm) {
  std::vector<std::int64_t> counts(max_norm + 1, 0);
  const QuadForm& q = lattice.form();
  q.enumerate(RatVector(q.dim(), Rational(0)), Rational(max_norm), false,
              [&](const IntVector&, const Rational& value) {
                if (is_integer(value)) ++counts[static_cast<std::size_t>(numerator(value))];
              });
  return counts;
}

std::vector<ResidueClass> residue_census(const Lattice& lattice, const Scalar& m) {
  const ResidueSystem rs(lattice.ring(), m);
  std::size_t total = 1;
  for (int k = 0; k < lattice.rank(); ++k) total *= rs.size();
  std::map<SVector, ResidueClass> classes;
  const QuadForm& q = lattice.form();
  const RatVector center(q.dim(), Rational(0));
  for (int bound = 0; classes.size() < total; ++bound) {
    classes.clear();
    q.enumerate(center, Rational(bound), false, [&](const IntVector& z, const Rational& value) {
      SVector v = lattice.from_real(z);
      SVector key;
      for (const auto& x : v) key.push_back(rs.reduce(x));
      auto it = classes.find(key);
      if (it == classes.end()) {
        classes.emplace(key, ResidueClass{key, value, std::move(v)});
      } else if (value < it->second.min_norm ||
                 (value == it->second.min_norm && v < it->second.representative)) {
        it->second.min_norm = value;
        it->second.representative = std::move(v);
      }
    });
  }
  std::vector<ResidueClass> out;
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

bool deep_hole_predicate_bw(const Lattice& bw, const SVector& t) {
  if (bw.ring() != Ring::Hurwitz) throw std::invalid_argument("deep_hole_predicate_bw: Hurwitz lattice expected");
  const Scalar one_plus_i = Scalar(Ring::Hurwitz, 1) + Scalar::i(Ring::Hurwitz);
  const SVector lambda = right_mul(t, one_plus_i);
  if (!is_integral(lambda)) return false;
  const Rational n = bw.norm(lambda);
  return is_integer(n) && numerator(n) % 2 != 0;
}

Fingerprint fingerprint(const Lattice& lattice) {
  Fingerprint f;
  f.rank = lattice.rank();
  f.ring = lattice.ring();
  f.definite = lattice.is_definite();
  if (f.definite) f.theta = theta_prefix(lattice, 4);
  f.det = rat_determinant(lattice.real_gram());
  f.even = is_even(lattice);
  return f;
}

std::string str(const Fingerprint& f) {
  std::ostringstream os;
  os << "rank=" << f.rank << " ring=" << ring_letter(f.ring) << (f.definite ? " definite" : " indefinite");
  if (!f.theta.empty()) {
    os << " theta=[";
    for (std::size_t i = 0; i < f.theta.size(); ++i) os << (i ? "," : "") << f.theta[i];
    os << "]";
  }
  os << " det=" << to_string(f.det) << (f.even ? " even" : " odd");
  return os.str();
}

}  // namespace hyperlat
