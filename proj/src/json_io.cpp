#include "hyperlat/json_io.hpp"

#include <stdexcept>

namespace hyperlat {

namespace {

Json coords_json(const Scalar& x) {
  Json out = Json::array();
  if (x.is_integral()) {
    for (auto c : x.coords()) out.push_back(c);
  } else {
    for (const auto& q : x.rational_coords()) out.push_back(to_string(q));
  }
  return out;
}

Scalar coords_from_json(const Json& j, Ring ring) {
  if (!j.is_array()) throw std::invalid_argument("scalar coordinates must be an array");
  std::vector<Rational> c;
  bool integral = true;
  for (const auto& e : j) {
    if (e.is_number_integer()) {
      c.emplace_back(e.get<std::int64_t>());
    } else if (e.is_string()) {
      c.push_back(parse_rational(e.get<std::string>()));
      integral = false;
    } else {
      throw std::invalid_argument("scalar coordinate must be an integer or a \"p/q\" string");
    }
  }
  if (integral) {
    std::vector<std::int64_t> ints;
    for (const auto& q : c) ints.push_back(to_int64(numerator(q)));
    return Scalar::from_coords(ring, ints);
  }
  return Scalar::from_rational_coords(ring, c);
}

}  // namespace

Json to_json(const Scalar& x) {
  return Json{{"ring", std::string(1, ring_letter(x.ring()))}, {"coords", coords_json(x)}};
}

Scalar scalar_from_json(const Json& j, std::optional<Ring> ring) {
  if (j.is_object()) {
    const Ring r = parse_ring(j.at("ring").get<std::string>());
    if (ring && *ring != r) throw std::invalid_argument("scalar ring does not match the lattice");
    return coords_from_json(j.at("coords"), r);
  }
  if (!ring) throw std::invalid_argument("scalar without a ring tag");
  return coords_from_json(j, *ring);
}

Json to_json(const SVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(coords_json(x));
  return out;
}

SVector vector_from_json(const Json& j, Ring ring) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  SVector out;
  for (const auto& e : j) out.push_back(scalar_from_json(e, ring));
  return out;
}

Json to_json(const SMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

SMatrix matrix_from_json(const Json& j, Ring ring) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array");
  SMatrix out;
  for (const auto& row : j) out.push_back(vector_from_json(row, ring));
  return out;
}

Json to_json(const Fingerprint& f) {
  Json out{{"rank", f.rank}, {"ring", std::string(1, ring_letter(f.ring))}, {"definite", f.definite}};
  if (f.definite) out["theta"] = f.theta;
  out["det"] = to_string(f.det);
  out["even"] = f.even;
  return out;
}

Fingerprint fingerprint_from_json(const Json& j) {
  Fingerprint f;
  f.rank = j.at("rank").get<int>();
  f.ring = parse_ring(j.at("ring").get<std::string>());
  f.definite = j.at("definite").get<bool>();
  if (f.definite) f.theta = j.at("theta").get<std::vector<std::int64_t>>();
  f.det = parse_rational(j.at("det").get<std::string>());
  f.even = j.at("even").get<bool>();
  return f;
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return parse_rational(j.get<std::string>());
}

Json lorentz_vector_json(const LorentzLattice& lorentz, const SVector& v) {
  return Json{{"lambda", to_json(lorentz.lambda(v))},
              {"mu", coords_json(lorentz.mu(v))},
              {"nu", coords_json(lorentz.nu(v))}};
}

SVector lorentz_vector_from_json(const LorentzLattice& lorentz, const Json& j) {
  const Ring ring = lorentz.ring();
  SVector v;
  if (j.is_object()) {
    v = lorentz.make(vector_from_json(j.at("lambda"), ring), scalar_from_json(j.at("mu"), ring),
                     scalar_from_json(j.at("nu"), ring));
  } else {
    v = vector_from_json(j, ring);
  }
  if (static_cast<int>(v.size()) != lorentz.dim()) throw std::invalid_argument("Lorentzian vector has the wrong length");
  return v;
}

Json to_json(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Reflection:
      return Json{{"kind", "reflection"}, {"root", to_json(g.root)}, {"xi", coords_json(g.xi)}};
    case Generator::Kind::Translation:
      return Json{{"kind", "translation"}, {"x", to_json(g.x)}, {"z", coords_json(g.z)}};
    case Generator::Kind::Linear:
      break;
  }
  return Json{{"kind", "linear"}, {"label", g.label}, {"matrix", to_json(g.matrix)}};
}

Generator generator_from_json(const Json& j, Ring ring) {
  Generator g;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "reflection") {
    g.kind = Generator::Kind::Reflection;
    g.root = vector_from_json(j.at("root"), ring);
    g.xi = scalar_from_json(j.at("xi"), ring);
  } else if (kind == "translation") {
    g.kind = Generator::Kind::Translation;
    g.x = vector_from_json(j.at("x"), ring);
    g.z = scalar_from_json(j.at("z"), ring);
  } else if (kind == "linear") {
    g.kind = Generator::Kind::Linear;
    g.label = j.at("label").get<std::string>();
    g.matrix = matrix_from_json(j.at("matrix"), ring);
  } else {
    throw std::invalid_argument("unknown generator kind: " + kind);
  }
  return g;
}

Json to_json(const std::vector<Generator>& word) {
  Json out = Json::array();
  for (const auto& g : word) out.push_back(to_json(g));
  return out;
}

std::vector<Generator> word_from_json(const Json& j, Ring ring) {
  if (!j.is_array()) throw std::invalid_argument("word must be an array");
  std::vector<Generator> out;
  for (const auto& g : j) out.push_back(generator_from_json(g, ring));
  return out;
}

Json to_json(const ReductionOutcome& o) {
  Json out{{"kind", str(o.kind)}};
  if (o.rule) out["rule"] = o.rule->name();
  if (!o.center.empty()) out["center"] = to_json(o.center);
  if (o.kind == OutcomeKind::Reduced || o.kind == OutcomeKind::StuckOrthogonal ||
      o.kind == OutcomeKind::StuckExceptional) {
    out["d2"] = to_string(o.d2);
    out["root"] = to_json(o.root);
  }
  if (o.kind == OutcomeKind::Reduced) out["xi"] = coords_json(o.xi);
  if (o.kind == OutcomeKind::StuckOrthogonal || o.kind == OutcomeKind::StuckExceptional)
    out["inner"] = coords_json(o.inner);
  if (!o.note.empty()) out["note"] = o.note;
  return out;
}

Json certificate_json(const LorentzLattice& lorentz, const ReductionResult& result) {
  Json heights = Json::array();
  SVector cur = result.start;
  heights.push_back(to_string(lorentz.mu(cur).norm()));
  for (const auto& g : result.word) {
    cur = act(generator_matrix(lorentz, g), cur);
    heights.push_back(to_string(lorentz.mu(cur).norm()));
  }
  return Json{{"input", lorentz_vector_json(lorentz, result.input)},
              {"start", lorentz_vector_json(lorentz, result.start)},
              {"word", to_json(result.word)},
              {"terminal", lorentz_vector_json(lorentz, result.terminal.vector)},
              {"outcome", to_json(result.terminal)},
              {"heights", heights}};
}

std::string check_certificate(const LorentzLattice& lorentz, const Json& c) {
  try {
    const Ring ring = lorentz.ring();
    SVector cur = lorentz_vector_from_json(lorentz, c.at("start"));
    const SVector terminal = lorentz_vector_from_json(lorentz, c.at("terminal"));
    const auto word = word_from_json(c.at("word"), ring);
    const Json& heights = c.at("heights");
    if (heights.size() != word.size() + 1) return "height trace has the wrong length";
    if (lorentz.norm(cur) != 0) return "start vector is not null";
    auto height_at = [&](std::size_t k) { return parse_rational(heights[k].get<std::string>()); };
    if (lorentz.mu(cur).norm() != height_at(0)) return "height trace does not match the start";
    for (std::size_t k = 0; k < word.size(); ++k) {
      const SMatrix m = generator_matrix(lorentz, word[k]);
      if (!preserves_form(lorentz.lattice(), m) || !preserves_lattice(m)) return "generator is not a lattice isometry";
      cur = act(m, cur);
      if (lorentz.mu(cur).norm() != height_at(k + 1)) return "height trace does not match the word";
      if (!(height_at(k + 1) < height_at(k))) return "height does not strictly decrease";
    }
    if (cur != terminal) return "word does not reach the terminal vector";
  } catch (const std::exception& e) {
    return std::string("malformed certificate: ") + e.what();
  }
  return "";
}

Json to_json(const CensusReport& r) {
  const LorentzLattice lorentz(Lattice(r.ring, identity(r.ring, r.n)));
  Json central = Json::array();
  for (const auto& c : r.central) central.push_back(coords_json(c));
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json units = Json::array();
    for (const auto& u : c.units) units.push_back(coords_json(u));
    classes.push_back(Json{{"units", units},
                           {"count", c.count},
                           {"representative", lorentz_vector_json(lorentz, c.representative)}});
  }
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(Json{{"unit", coords_json(w.unit)}, {"word", to_json(w.word)}});
  Json unresolved = Json::array();
  for (const auto& v : r.unresolved_examples) unresolved.push_back(lorentz_vector_json(lorentz, v));
  return Json{{"ring", std::string(1, ring_letter(r.ring))},
              {"n", r.n},
              {"bound", to_string(r.bound)},
              {"central", central},
              {"representatives", r.representatives},
              {"vectors", r.vectors},
              {"escapes", r.escapes},
              {"unresolved", r.unresolved},
              {"max_word", r.max_word},
              {"unresolved_examples", unresolved},
              {"classes", classes},
              {"witnesses", witnesses}};
}

}  // namespace hyperlat
