#pragma once

#include "json.hpp"

#include "hyperlat/census.hpp"

namespace hyperlat {

using Json = nlohmann::ordered_json;

/// {"ring": "G"|"E"|"H", "coords": [...]}; integral values use integers,
/// other values use "p/q" strings.  Hurwitz coordinates are doubled.
Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j, std::optional<Ring> ring = std::nullopt);

/// Compact form: a list of coordinate lists, the ring given separately.
Json to_json(const SVector& v);
SVector vector_from_json(const Json& j, Ring ring);
Json to_json(const SMatrix& m);
SMatrix matrix_from_json(const Json& j, Ring ring);

Json to_json(const Fingerprint& f);
Fingerprint fingerprint_from_json(const Json& j);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"lambda": [...], "mu": coords, "nu": coords}.  Reading also accepts a
/// flat list of n + 2 coordinate lists.
Json lorentz_vector_json(const LorentzLattice& lorentz, const SVector& v);
SVector lorentz_vector_from_json(const LorentzLattice& lorentz, const Json& j);

/// {"kind": "reflection", "root", "xi"}, {"kind": "translation", "x", "z"}
/// or {"kind": "linear", "label", "matrix"}.
Json to_json(const Generator& g);
Generator generator_from_json(const Json& j, Ring ring);
Json to_json(const std::vector<Generator>& word);
std::vector<Generator> word_from_json(const Json& j, Ring ring);

Json to_json(const ReductionOutcome& o);

/// Reduction certificate: the primitive start vector, the word, the terminal
/// vector and the |height|^2 of the start vector and after each generator.
Json certificate_json(const LorentzLattice& lorentz, const ReductionResult& result);
/// Replays the word from the start vector and checks the terminal vector,
/// the height trace, that it strictly decreases, and that the terminal
/// vector is null.  Returns an empty string when valid, else the first problem.
std::string check_certificate(const LorentzLattice& lorentz, const Json& certificate);

Json to_json(const CensusReport& report);

}  // namespace hyperlat
