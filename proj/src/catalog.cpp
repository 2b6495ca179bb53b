#include "hyperlat/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <regex>
#include <stdexcept>

#include "hyperlat/json_io.hpp"

#ifndef HYPERLAT_DEFAULT_CATALOG
#define HYPERLAT_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace hyperlat {

namespace {

bool divisible(const Scalar& x, const Scalar& m) { return right_divide(x, m).is_integral(); }

struct Congruence {
  std::string name;
  Ring ring;
  int n;
  Scalar modulus;
  Scalar left_scale;
  std::string definition;
  std::function<bool(const SVector&)> holds;
};

Scalar sum(const SVector& x) {
  Scalar s(x[0].ring(), 0);
  for (const auto& v : x) s += v;
  return s;
}

bool all_congruent(const SVector& x, const Scalar& m) {
  for (std::size_t t = 1; t < x.size(); ++t)
    if (!divisible(x[t] - x[0], m)) return false;
  return true;
}

std::vector<Congruence> definitions() {
  const Ring G = Ring::Gauss, E = Ring::Eisenstein, H = Ring::Hurwitz;
  const Scalar g1i = Scalar(G, 1) + Scalar::i(G);
  const Scalar h1i = Scalar(H, 1) + Scalar::i(H);
  const Scalar theta = Scalar::theta(E);
  std::vector<Congruence> out;
  out.push_back({"E8_G", G, 4, Scalar(G, 2), g1i.inverse(),
                 "(1+i)^-1 {x in G^4 : x_i = x_j mod (1+i), sum x_i = 0 mod 2}",
                 [=](const SVector& x) { return all_congruent(x, g1i) && divisible(sum(x), Scalar(G, 2)); }});
  out.push_back({"E8_H", H, 2, h1i, Scalar(H, 1), "{x in H^2 : x_1 + x_2 = 0 mod (1+i)H}",
                 [=](const SVector& x) { return divisible(sum(x), h1i); }});
  for (int n : {2, 3, 4})
    out.push_back({"D" + std::to_string(2 * n) + "_G", G, n, g1i, Scalar(G, 1),
                   "{x in G^" + std::to_string(n) + " : sum x_i = 0 mod (1+i)}",
                   [=](const SVector& x) { return divisible(sum(x), g1i); }});
  out.push_back({"D3theta", E, 3, theta, Scalar(E, 1), "{x in E^3 : x_1 + x_2 + x_3 = 0 mod theta}",
                 [=](const SVector& x) { return divisible(sum(x), theta); }});
  out.push_back({"K12_E", E, 6, Scalar(E, 3), theta.inverse(),
                 "theta^-1 {x in E^6 : x_i = x_j mod theta, sum x_i = 0 mod 3}",
                 [=](const SVector& x) { return all_congruent(x, theta) && divisible(sum(x), Scalar(E, 3)); }});
  out.push_back({"BW4_H", H, 4, Scalar(H, 2), h1i.inverse(),
                 "(1+i)^-1 {x in H^4 : x_i = x_j mod (1+i)H, sum x_i in 2H}",
                 [=](const SVector& x) { return all_congruent(x, h1i) && divisible(sum(x), Scalar(H, 2)); }});
  return out;
}

CatalogEntry build_entry(const Congruence& c) {
  const auto residues = residues_mod(c.ring, c.modulus);
  std::vector<SVector> gens;
  for (int k = 0; k < c.n; ++k) {
    SVector e = zero_vector(c.ring, c.n);
    e[k] = c.modulus;
    gens.push_back(e);
  }
  std::vector<SVector> basis = module_basis(c.ring, c.n, gens);
  std::vector<std::size_t> idx(c.n, 0);
  while (true) {
    SVector x;
    for (int k = 0; k < c.n; ++k) x.push_back(residues[idx[k]]);
    if (c.holds(x) && !module_coords(basis, x)) {
      basis.push_back(x);
      basis = module_basis(c.ring, c.n, basis);
    }
    int k = 0;
    while (k < c.n && ++idx[k] == residues.size()) idx[k++] = 0;
    if (k == c.n) break;
  }
  for (auto& b : basis) b = left_mul(c.left_scale, b);
  CatalogEntry e{c.name, c.ring, c.definition, basis, gram_of(identity(c.ring, c.n), basis), {}};
  e.fingerprint = fingerprint(Lattice(c.ring, e.gram, c.name));
  return e;
}

Lattice family(const std::string& name) {
  static const std::regex r_n(R"(R(\d+)_([GEH]))");
  static const std::regex i_nm(R"(I_(\d+)_(\d+)_([GEH]))");
  static const std::regex ii_11(R"(II_1_1_([GEH]))");
  static const std::regex ii_pq(R"(II_(\d+)_(\d+)_G)");
  std::smatch m;
  if (std::regex_match(name, m, r_n)) {
    const int n = std::stoi(m[1]);
    if (n < 1) throw std::invalid_argument("rank must be positive: " + name);
    const Ring ring = parse_ring(m[2].str());
    return Lattice(ring, identity(ring, n), name);
  }
  if (std::regex_match(name, m, i_nm)) {
    const int n = std::stoi(m[1]), k = std::stoi(m[2]);
    if (n + k < 1) throw std::invalid_argument("rank must be positive: " + name);
    const Ring ring = parse_ring(m[3].str());
    SMatrix g = identity(ring, n + k);
    for (int t = n; t < n + k; ++t) g[t][t] = Scalar(ring, -1);
    return Lattice(ring, std::move(g), name);
  }
  if (std::regex_match(name, m, ii_11)) {
    const Ring ring = parse_ring(m[1].str());
    SMatrix g = zero_matrix(ring, 2, 2);
    g[0][1] = g[1][0] = Scalar(ring, 1);
    return Lattice(ring, std::move(g), name);
  }
  if (std::regex_match(name, m, ii_pq)) {
    const int p = std::stoi(m[1]), q = std::stoi(m[2]);
    if (p < q || (p - q) % 4 != 0 || q < 1) throw std::invalid_argument("II_p_q_G needs p - q = 4m >= 0 and q >= 1: " + name);
    const Lattice e8 = catalog("E8_G");
    const Lattice h = catalog("II_1_1_G");
    std::optional<Lattice> out;
    for (int t = 0; t < (p - q) / 4; ++t) out = out ? direct_sum(*out, e8) : e8;
    for (int t = 0; t < q; ++t) out = out ? direct_sum(*out, h) : h;
    return Lattice(Ring::Gauss, out->gram(), name);
  }
  throw std::out_of_range("unknown lattice: " + name);
}

std::mutex cache_mutex;
std::map<std::string, std::vector<CatalogEntry>> cache;

}  // namespace

std::vector<CatalogEntry> build_congruence_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& c : definitions()) out.push_back(build_entry(c));
  return out;
}

std::string catalog_path() {
  if (const char* env = std::getenv("HYPERLAT_CATALOG"); env && *env) return env;
  return HYPERLAT_DEFAULT_CATALOG;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file " + path);
  const Json doc = Json::parse(in);
  if (doc.value("format", 0) != 1) throw std::runtime_error("unsupported catalog format in " + path);
  std::vector<CatalogEntry> out;
  for (const auto& j : doc.at("entries")) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.ring = parse_ring(j.at("ring").get<std::string>());
    e.definition = j.value("definition", "");
    const int n = j.at("rank").get<int>();
    for (const auto& col : j.at("basis")) e.basis.push_back(vector_from_json(col, e.ring));
    e.gram = matrix_from_json(j.at("gram"), e.ring);
    e.fingerprint = fingerprint_from_json(j.at("fingerprint"));
    if (static_cast<int>(e.basis.size()) != n || static_cast<int>(e.gram.size()) != n)
      throw std::runtime_error("catalog entry " + e.name + ": rank mismatch");
    if (gram_of(identity(e.ring, n), e.basis) != e.gram)
      throw std::runtime_error("catalog entry " + e.name + ": gram does not match basis");
    out.push_back(std::move(e));
  }
  return out;
}

void save_catalog(const std::string& path, const std::vector<CatalogEntry>& entries) {
  Json doc{{"format", 1}, {"entries", Json::array()}};
  for (const auto& e : entries) {
    Json basis = Json::array();
    for (const auto& b : e.basis) basis.push_back(to_json(b));
    doc["entries"].push_back(Json{{"name", e.name},
                                  {"ring", std::string(1, ring_letter(e.ring))},
                                  {"definition", e.definition},
                                  {"rank", e.basis.size()},
                                  {"basis", basis},
                                  {"gram", to_json(e.gram)},
                                  {"fingerprint", to_json(e.fingerprint)}});
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write catalog file " + path);
  out << doc.dump(1) << "\n";
}

std::vector<std::string> catalog_names() {
  return {"R1_G",   "R2_G",    "R3_G",    "R1_E",     "R2_E",     "R3_E",     "R1_H",     "R2_H",
          "E8_G",   "E8_H",    "D4_G",    "D6_G",     "D8_G",     "D3theta",  "K12_E",    "BW4_H",
          "I_1_1_G", "I_1_1_E", "I_1_1_H", "II_1_1_G", "II_1_1_E", "II_1_1_H", "II_5_1_G"};
}

Lattice catalog(const std::string& name) {
  try {
    return family(name);
  } catch (const std::out_of_range&) {
  }
  const std::string path = catalog_path();
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(path);
  if (it == cache.end()) it = cache.emplace(path, load_catalog(path)).first;
  for (const auto& e : it->second)
    if (e.name == name) return Lattice(e.ring, e.gram, e.name);
  throw std::out_of_range("unknown lattice: " + name);
}

}  // namespace hyperlat
