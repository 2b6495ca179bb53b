#include "hyperlat/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hyperlat/zlattice.hpp"

namespace hyperlat {

namespace {

constexpr __int128 kLimit = static_cast<__int128>(1) << 62;

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

BigInt big(__int128 v) {
  const bool negative = v < 0;
  const unsigned __int128 a = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(a >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(a);
  return negative ? BigInt(-out) : out;
}

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void require_same(const Scalar& a, const Scalar& b) {
  if (a.ring() != b.ring())
    throw std::invalid_argument("ring mismatch: " + ring_name(a.ring()) + " vs " + ring_name(b.ring()));
}

bool in_subfield(Ring ring, const std::array<std::int64_t, 4>& n) {
  switch (ring) {
    case Ring::Gauss:
      return n[2] == 0 && n[3] == 0;
    case Ring::Eisenstein:
      return n[1] == n[2] && n[2] == n[3];
    case Ring::Hurwitz:
      return true;
  }
  return false;
}

Rational frac(std::int64_t n, std::int64_t d) { return Rational(n, d); }

}  // namespace

int degree(Ring ring) { return ring == Ring::Hurwitz ? 4 : 2; }

char ring_letter(Ring ring) {
  switch (ring) {
    case Ring::Gauss:
      return 'G';
    case Ring::Eisenstein:
      return 'E';
    case Ring::Hurwitz:
      return 'H';
  }
  return '?';
}

Ring parse_ring(std::string_view text) {
  if (text == "G" || text == "Gauss") return Ring::Gauss;
  if (text == "E" || text == "Eisenstein") return Ring::Eisenstein;
  if (text == "H" || text == "Hurwitz") return Ring::Hurwitz;
  throw std::invalid_argument("unknown ring '" + std::string(text) + "'");
}

std::string ring_name(Ring ring) {
  switch (ring) {
    case Ring::Gauss:
      return "Gauss";
    case Ring::Eisenstein:
      return "Eisenstein";
    case Ring::Hurwitz:
      return "Hurwitz";
  }
  return "?";
}

Scalar::Scalar() : ring_(Ring::Gauss), num_{0, 0, 0, 0}, den_(1) {}

Scalar::Scalar(Ring ring, std::int64_t value) : ring_(ring), num_{value, 0, 0, 0}, den_(1) {
  if (value >= kLimit || value <= -kLimit) throw std::overflow_error("scalar too large");
}

Scalar::Scalar(Ring ring, const std::array<__int128, 4>& num, __int128 den) : ring_(ring) {
  if (den == 0) throw std::domain_error("zero denominator");
  __int128 g = den;
  for (auto v : num) g = gcd128(g, v);
  if (den < 0) g = -g;
  for (int t = 0; t < 4; ++t) {
    const __int128 v = num[t] / g;
    if (abs128(v) >= kLimit) throw std::overflow_error("scalar numerator exceeds 62 bits");
    num_[t] = static_cast<std::int64_t>(v);
  }
  const __int128 d = den / g;
  if (d >= kLimit) throw std::overflow_error("scalar denominator exceeds 62 bits");
  den_ = static_cast<std::int64_t>(d);
}

Scalar Scalar::from_parts(Ring ring, const std::array<std::int64_t, 4>& num, std::int64_t den) {
  Scalar s(ring, {num[0], num[1], num[2], num[3]}, den);
  if (!in_subfield(ring, s.num_))
    throw std::invalid_argument("value does not lie in the fraction field of " + ring_name(ring));
  return s;
}

Scalar Scalar::from_coords(Ring ring, const std::vector<std::int64_t>& c) {
  const std::size_t want = ring == Ring::Hurwitz ? 4 : 2;
  if (c.size() != want) throw std::invalid_argument("wrong number of coordinates for " + ring_name(ring));
  switch (ring) {
    case Ring::Gauss:
      return from_parts(ring, {c[0], c[1], 0, 0}, 1);
    case Ring::Eisenstein:
      return from_parts(ring, {2 * c[0] - c[1], c[1], c[1], c[1]}, 2);
    case Ring::Hurwitz: {
      const bool odd = (c[0] & 1) != 0;
      for (auto v : c)
        if (((v & 1) != 0) != odd) throw std::invalid_argument("Hurwitz doubled coordinates must share parity");
      return from_parts(ring, {c[0], c[1], c[2], c[3]}, 2);
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::from_rational(Ring ring, const Rational& q) {
  return Scalar(ring, {static_cast<__int128>(to_int64(numerator(q))), 0, 0, 0}, to_int64(denominator(q)));
}

Scalar Scalar::from_rational_coords(Ring ring, const std::vector<Rational>& c) {
  const std::size_t want = ring == Ring::Hurwitz ? 4 : 2;
  if (c.size() != want) throw std::invalid_argument("wrong number of coordinates for " + ring_name(ring));
  auto r = [&](const Rational& q) { return from_rational(ring, q); };
  switch (ring) {
    case Ring::Gauss:
      return r(c[0]) + r(c[1]) * i(ring);
    case Ring::Eisenstein:
      return r(c[0]) + r(c[1]) * omega(ring);
    case Ring::Hurwitz: {
      Scalar out = r(c[0] / 2) + r(c[1] / 2) * i(ring) + r(c[2] / 2) * j() + r(c[3] / 2) * k();
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::from_zcoords(Ring ring, const std::vector<std::int64_t>& z) {
  const auto basis = zbasis(ring);
  if (z.size() != basis.size()) throw std::invalid_argument("wrong number of Z-coordinates");
  Scalar out(ring, 0);
  for (std::size_t s = 0; s < z.size(); ++s)
    if (z[s] != 0) out += basis[s] * Scalar(ring, z[s]);
  return out;
}

Scalar Scalar::i(Ring ring) {
  if (ring == Ring::Eisenstein) throw std::invalid_argument("i is not Eisenstein");
  return from_parts(ring, {0, 1, 0, 0}, 1);
}
Scalar Scalar::j() { return from_parts(Ring::Hurwitz, {0, 0, 1, 0}, 1); }
Scalar Scalar::k() { return from_parts(Ring::Hurwitz, {0, 0, 0, 1}, 1); }
Scalar Scalar::omega(Ring ring) {
  if (ring == Ring::Gauss) throw std::invalid_argument("omega is not Gaussian");
  return from_parts(ring, {-1, 1, 1, 1}, 2);
}
Scalar Scalar::theta(Ring ring) {
  if (ring == Ring::Gauss) throw std::invalid_argument("theta is not Gaussian");
  return from_parts(ring, {0, 1, 1, 1}, 1);
}

bool Scalar::is_zero() const { return num_[0] == 0 && num_[1] == 0 && num_[2] == 0 && num_[3] == 0; }
bool Scalar::is_one() const { return num_[0] == 1 && den_ == 1 && is_real(); }
bool Scalar::is_real() const { return num_[1] == 0 && num_[2] == 0 && num_[3] == 0; }
bool Scalar::is_imaginary() const { return num_[0] == 0; }

bool Scalar::is_integral() const {
  switch (ring_) {
    case Ring::Gauss:
      return den_ == 1;
    case Ring::Eisenstein:
      return (2 * static_cast<__int128>(num_[1])) % den_ == 0 &&
             (static_cast<__int128>(num_[0]) + num_[1]) % den_ == 0;
    case Ring::Hurwitz: {
      if (den_ > 2) return false;
      if (den_ == 1) return true;
      const bool odd = (num_[0] & 1) != 0;
      for (auto v : num_)
        if (((v & 1) != 0) != odd) return false;
      return true;
    }
  }
  return false;
}

bool Scalar::is_unit() const { return is_integral() && norm() == 1; }

Scalar Scalar::conj() const {
  Scalar out = *this;
  for (int t = 1; t < 4; ++t) out.num_[t] = -out.num_[t];
  return out;
}

Rational Scalar::norm() const {
  __int128 s = 0;
  for (auto v : num_) s += static_cast<__int128>(v) * v;
  const __int128 d2 = static_cast<__int128>(den_) * den_;
  return Rational(big(s), big(d2));
}

Rational Scalar::re() const { return frac(num_[0], den_); }

Scalar Scalar::real_part() const { return Scalar(ring_, {num_[0], 0, 0, 0}, den_); }

Scalar Scalar::imag_part() const { return Scalar(ring_, {0, num_[1], num_[2], num_[3]}, den_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // x^-1 = conj(x) / |x|^2 with |x|^2 = s / d^2, so x^-1 = conj(n) * d / s.
  __int128 s = 0;
  for (auto v : num_) s += static_cast<__int128>(v) * v;
  std::array<__int128, 4> n{};
  n[0] = static_cast<__int128>(num_[0]) * den_;
  for (int t = 1; t < 4; ++t) n[t] = -static_cast<__int128>(num_[t]) * den_;
  return Scalar(ring_, n, s);
}

std::vector<std::int64_t> Scalar::coords() const {
  if (!is_integral()) throw std::domain_error("coords() of non-integral scalar " + str());
  switch (ring_) {
    case Ring::Gauss:
      return {num_[0], num_[1]};
    case Ring::Eisenstein: {
      const __int128 b = 2 * static_cast<__int128>(num_[1]) / den_;
      const __int128 a = (static_cast<__int128>(num_[0]) + num_[1]) / den_;
      return {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)};
    }
    case Ring::Hurwitz: {
      std::vector<std::int64_t> out(4);
      for (int t = 0; t < 4; ++t) out[t] = num_[t] * (2 / den_);
      return out;
    }
  }
  return {};
}

std::vector<Rational> Scalar::rational_coords() const {
  switch (ring_) {
    case Ring::Gauss:
      return {frac(num_[0], den_), frac(num_[1], den_)};
    case Ring::Eisenstein:
      return {Rational(num_[0]) / den_ + Rational(num_[1]) / den_, Rational(2 * num_[1], den_)};
    case Ring::Hurwitz:
      return {Rational(2 * num_[0], den_), Rational(2 * num_[1], den_), Rational(2 * num_[2], den_),
              Rational(2 * num_[3], den_)};
  }
  return {};
}

std::vector<Rational> Scalar::zcoords() const {
  if (ring_ != Ring::Hurwitz) return rational_coords();
  const Rational a = frac(num_[0], den_), b = frac(num_[1], den_), c = frac(num_[2], den_),
                 d = frac(num_[3], den_);
  return {a - d, b - d, c - d, 2 * d};
}

std::vector<std::int64_t> Scalar::int_zcoords() const {
  std::vector<std::int64_t> out;
  for (const auto& q : zcoords()) {
    if (!is_integer(q)) throw std::domain_error("int_zcoords() of non-integral scalar " + str());
    out.push_back(to_int64(numerator(q)));
  }
  return out;
}

std::array<Rational, 4> Scalar::components() const {
  return {frac(num_[0], den_), frac(num_[1], den_), frac(num_[2], den_), frac(num_[3], den_)};
}

Scalar Scalar::with_ring(Ring ring) const {
  if (!in_subfield(ring, num_)) throw std::invalid_argument(str() + " is not in the field of " + ring_name(ring));
  Scalar out = *this;
  out.ring_ = ring;
  return out;
}

std::string Scalar::str() const {
  std::ostringstream os;
  const char* names[4] = {"", "i", "j", "k"};
  bool first = true;
  for (int t = 0; t < 4; ++t) {
    if (num_[t] == 0) continue;
    const Rational q = frac(num_[t], den_);
    if (!first) os << (q > 0 ? "+" : "");
    if (t == 0 || (q != 1 && q != -1))
      os << to_string(q);
    else if (q == -1)
      os << "-";
    os << names[t];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  const __int128 g = gcd128(a.den_, b.den_);
  const __int128 fa = b.den_ / g, fb = a.den_ / g;
  std::array<__int128, 4> n{};
  for (int t = 0; t < 4; ++t) n[t] = a.num_[t] * fa + b.num_[t] * fb;
  return Scalar(a.ring_, n, a.den_ * fa);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& v : out.num_) v = -v;
  return out;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  require_same(x, y);
  const __int128 a1 = x.num_[0], b1 = x.num_[1], c1 = x.num_[2], d1 = x.num_[3];
  const __int128 a2 = y.num_[0], b2 = y.num_[1], c2 = y.num_[2], d2 = y.num_[3];
  std::array<__int128, 4> n{a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
  return Scalar(x.ring_, n, static_cast<__int128>(x.den_) * y.den_);
}

namespace {

// Numerators of the ring coordinates over the common denominator den().
int coord_numerators(const Scalar& x, std::array<__int128, 4>& out) {
  const auto& n = x.num();
  switch (x.ring()) {
    case Ring::Gauss:
      out = {n[0], n[1], 0, 0};
      return 2;
    case Ring::Eisenstein:
      out = {static_cast<__int128>(n[0]) + n[1], 2 * static_cast<__int128>(n[1]), 0, 0};
      return 2;
    case Ring::Hurwitz:
      for (int t = 0; t < 4; ++t) out[t] = 2 * static_cast<__int128>(n[t]);
      return 4;
  }
  return 0;
}

}  // namespace

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  std::array<__int128, 4> na, nb;
  const int la = coord_numerators(a, na), lb = coord_numerators(b, nb);
  // Denominators are positive, so a/da < b/db iff a db < b da.
  const __int128 da = a.den(), db = b.den();
  for (int t = 0; t < std::min(la, lb); ++t) {
    const __int128 x = na[t] * db, y = nb[t] * da;
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return la <=> lb;
}

Scalar scale(const Scalar& x, const Rational& q) { return x * Scalar::from_rational(x.ring(), q); }

Scalar right_divide(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

Scalar left_divide(const Scalar& y, const Scalar& x) { return y.inverse() * x; }

Scalar nearest_integral(const Scalar& x) {
  const Ring ring = x.ring();
  std::vector<Scalar> cands;
  auto round_half = [](const Rational& q) { return floor_int(q + Rational(1, 2)); };
  switch (ring) {
    case Ring::Gauss: {
      const auto c = x.rational_coords();
      cands.push_back(Scalar::from_coords(ring, {round_half(c[0]), round_half(c[1])}));
      break;
    }
    case Ring::Eisenstein: {
      const auto c = x.rational_coords();
      for (auto a : {floor_int(c[0]), ceil_int(c[0])})
        for (auto b : {floor_int(c[1]), ceil_int(c[1])}) cands.push_back(Scalar::from_coords(ring, {a, b}));
      break;
    }
    case Ring::Hurwitz: {
      const auto q = x.components();
      std::vector<std::int64_t> even, odd;
      for (const auto& v : q) {
        even.push_back(2 * round_half(v));
        odd.push_back(2 * floor_int(v) + 1);
      }
      cands.push_back(Scalar::from_coords(ring, even));
      cands.push_back(Scalar::from_coords(ring, odd));
      break;
    }
  }
  Scalar best = cands.front();
  Rational bd = (x - best).norm();
  for (const auto& c : cands) {
    const Rational d = (x - c).norm();
    if (d < bd || (d == bd && c < best)) {
      best = c;
      bd = d;
    }
  }
  return best;
}

namespace {

std::vector<Scalar> build_units(Ring ring) {
  std::vector<Scalar> out;
  switch (ring) {
    case Ring::Gauss:
      for (auto c : std::vector<std::vector<std::int64_t>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
        out.push_back(Scalar::from_coords(ring, c));
      break;
    case Ring::Eisenstein:
      for (auto c : std::vector<std::vector<std::int64_t>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}, {1, 1}})
        out.push_back(Scalar::from_coords(ring, c));
      break;
    case Ring::Hurwitz:
      for (int t = 0; t < 4; ++t)
        for (int s : {2, -2}) {
          std::vector<std::int64_t> c(4, 0);
          c[t] = s;
          out.push_back(Scalar::from_coords(ring, c));
        }
      for (int mask = 0; mask < 16; ++mask) {
        std::vector<std::int64_t> c(4);
        for (int t = 0; t < 4; ++t) c[t] = (mask >> t) & 1 ? -1 : 1;
        out.push_back(Scalar::from_coords(ring, c));
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Scalar> units(Ring ring) {
  static const std::vector<Scalar> table[3] = {build_units(Ring::Gauss), build_units(Ring::Eisenstein),
                                               build_units(Ring::Hurwitz)};
  return table[static_cast<int>(ring)];
}

std::vector<Scalar> zbasis(Ring ring) {
  switch (ring) {
    case Ring::Gauss:
      return {Scalar(ring, 1), Scalar::i(ring)};
    case Ring::Eisenstein:
      return {Scalar(ring, 1), Scalar::omega(ring)};
    case Ring::Hurwitz:
      return {Scalar(ring, 1), Scalar::i(ring), Scalar::j(), Scalar::from_coords(ring, {1, 1, 1, 1})};
  }
  return {};
}

Scalar embed_eisenstein_in_hurwitz(const Scalar& x) {
  if (x.ring() != Ring::Eisenstein) throw std::invalid_argument("embed: expected an Eisenstein integer");
  return x.with_ring(Ring::Hurwitz);
}

namespace {

// Hermite basis (in Z-coordinates) of the left ideal R*m.
IntMatrix ideal_hermite(Ring ring, const Scalar& m) {
  if (m.is_zero()) throw std::domain_error("modulus must be nonzero");
  if (!m.is_integral()) throw std::invalid_argument("modulus must be integral");
  std::vector<IntVector> cols;
  for (const auto& u : zbasis(ring)) cols.push_back((u * m).int_zcoords());
  return hermite_basis(cols, degree(ring));
}

}  // namespace

std::vector<Scalar> residues_mod(Ring ring, const Scalar& m) {
  const IntMatrix h = ideal_hermite(ring, m.with_ring(ring));
  std::vector<Scalar> out;
  for (const auto& z : hermite_box(h)) out.push_back(Scalar::from_zcoords(ring, z));
  return out;
}

Scalar reduce_mod(const Scalar& x, const Scalar& m) {
  require_same(x, m);
  const IntMatrix h = ideal_hermite(x.ring(), m);
  return Scalar::from_zcoords(x.ring(), reduce_by_hermite(h, x.int_zcoords()));
}

ResidueSystem::ResidueSystem(Ring ring, const Scalar& m)
    : ring_(ring), hermite_(ideal_hermite(ring, m.with_ring(ring))) {}

Scalar ResidueSystem::reduce(const Scalar& x) const {
  return Scalar::from_zcoords(ring_, reduce_by_hermite(hermite_, x.with_ring(ring_).int_zcoords()));
}

std::size_t ResidueSystem::size() const {
  std::size_t n = 1;
  for (std::size_t k = 0; k < hermite_.size(); ++k) n *= static_cast<std::size_t>(hermite_[k][k]);
  return n;
}

std::vector<Scalar> ResidueSystem::representatives() const {
  std::vector<Scalar> out;
  for (const auto& z : hermite_box(hermite_)) out.push_back(Scalar::from_zcoords(ring_, z));
  return out;
}

std::vector<Scalar> imaginary_sublattice(Ring ring, const Scalar& h) {
  const Scalar hh = h.with_ring(ring);
  if (hh.is_zero() || !hh.is_integral()) throw std::invalid_argument("imaginary_sublattice: unsupported h");
  std::vector<Scalar> gens;
  for (const auto& u : zbasis(ring)) gens.push_back(hh * u);
  // Re(sum c_s g_s) = 0; real parts are in (1/2)Z.
  IntVector f;
  for (const auto& g : gens) f.push_back(to_int64(numerator(g.re() * 2)));
  const LinearSolution sol = solve_functional(f, 0);
  std::vector<Scalar> out;
  for (const auto& kv : sol.kernel) {
    Scalar s(ring, 0);
    for (std::size_t t = 0; t < kv.size(); ++t)
      if (kv[t] != 0) s += gens[t] * Scalar(ring, kv[t]);
    out.push_back(s);
  }
  return out;
}

Scalar left_gcd(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  Scalar x = a, y = b;
  while (!y.is_zero()) {
    const Scalar q = nearest_integral(right_divide(x, y));
    Scalar r = x - q * y;
    x = y;
    y = r;
  }
  return x;
}

}  // namespace hyperlat
