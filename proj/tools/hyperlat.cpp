// Command-line front end: catalog listings, certified reduction of null
// vectors, and the claim verification suite.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage or
// input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "hyperlat/catalog.hpp"
#include "hyperlat/json_io.hpp"
#include "hyperlat/registry.hpp"

using namespace hyperlat;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump() + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

Rational parse_bound(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("not a rational number: " + text);
  }
}

Lattice lookup(const std::string& name) {
  try {
    return catalog(name);
  } catch (const std::out_of_range&) {
    throw UsageError("unknown lattice: " + name);
  }
}

// A JSON literal, a file name, or "-" for standard input.
Json read_json_argument(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) {
    text = arg;
  } else {
    std::ifstream f(arg);
    if (!f) throw UsageError("cannot read " + arg);
    std::ostringstream s;
    s << f.rdbuf();
    text = s.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

Json lattice_summary(const std::string& name, const Lattice& l) {
  return Json{{"name", name},
              {"ring", std::string(1, ring_letter(l.ring()))},
              {"rank", l.rank()},
              {"fingerprint", to_json(fingerprint(l))}};
}

int cmd_catalog(const std::string& name, const std::string& out) {
  if (name.empty()) {
    Json entries = Json::array();
    for (const auto& n : catalog_names()) entries.push_back(lattice_summary(n, catalog(n)));
    emit(Json{{"format", 1}, {"catalog", catalog_path()}, {"entries", entries}}, out);
    return kPass;
  }
  const Lattice l = lookup(name);
  Json j = lattice_summary(name, l);
  j["gram"] = to_json(l.gram());
  j["definite"] = l.is_definite();
  j["selfdual"] = is_selfdual(l);
  j["even"] = is_even(l);
  Json full{{"format", 1}};
  full.update(j);
  emit(full, out);
  return kPass;
}

int cmd_reduce(const std::string& name, const std::string& vector_arg, const std::string& filter,
               const std::string& out, const std::string& trace) {
  const LorentzLattice lorentz(lookup(name));
  SVector v;
  try {
    v = lorentz_vector_from_json(lorentz, read_json_argument(vector_arg));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad vector: ") + e.what());
  }
  if (is_zero(v)) throw UsageError("vector is zero");
  if (lorentz.norm(v) != 0) throw UsageError("vector is not null: norm " + to_string(lorentz.norm(v)));

  const RuleFilter f = filter == "short" ? RuleFilter::ShortOnly
                       : filter == "proved" ? RuleFilter::ProvedOnly
                                            : RuleFilter::All;
  const ReductionResult result = reduce_null_vector(lorentz, v, f);
  Json cert = certificate_json(lorentz, result);
  // Never write a certificate that does not replay.
  const std::string problem = check_certificate(lorentz, Json::parse(cert.dump()));
  if (!problem.empty()) throw std::logic_error("certificate failed to replay: " + problem);

  Json full{{"format", 1}, {"lattice", name}};
  full.update(cert);
  emit(full, out);
  if (!trace.empty()) {
    std::ofstream csv(trace);
    if (!csv) throw UsageError("cannot write " + trace);
    csv << "step,generator,height2\n";
    const Json& heights = cert.at("heights");
    for (std::size_t k = 0; k < heights.size(); ++k)
      csv << k << "," << (k == 0 ? "start" : cert.at("word").at(k - 1).at("kind").get<std::string>()) << ","
          << heights.at(k).get<std::string>() << "\n";
  }
  const OutcomeKind kind = result.terminal.kind;
  return kind == OutcomeKind::AtRho || kind == OutcomeKind::StuckOrthogonal || kind == OutcomeKind::StuckExceptional
             ? kPass
             : kFail;
}

int cmd_verify(const std::string& id, const ClaimConfig& config, const std::string& out) {
  if (id == "list") {
    emit(Json{{"format", 1}, {"claims", claim_ids()}}, out);
    return kPass;
  }
  if (id != "all" && !is_claim(id)) throw UsageError("unknown claim id: " + id + " (try: verify list)");
  if (id != "all") {
    const ClaimReport r = run_claim(id, config);
    std::cerr << id << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.seconds << " s)\n";
    emit(to_json(r), out);
    return r.pass ? kPass : kFail;
  }
  Json reports = Json::array();
  bool pass = true;
  for (const auto& claim : claim_ids()) {
    const ClaimReport r = run_claim(claim, config);
    std::cerr << claim << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.seconds << " s)\n";
    pass = pass && r.pass;
    reports.push_back(to_json(r));
  }
  emit(Json{{"format", 1}, {"status", pass ? "pass" : "fail"}, {"reports", reports}}, out);
  return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian and Lorentzian lattices over the Gaussian, Eisenstein and Hurwitz integers"};
  app.require_subcommand(1);
  std::string out, lattice, name, vector_arg, trace, filter = "all", claim, bound;
  ClaimConfig config;

  auto* catalog_cmd = app.add_subcommand("catalog", "list catalog lattices, or print one with its Gram matrix");
  catalog_cmd->add_option("name", name, "lattice name");
  catalog_cmd->add_option("--lattice", name, "lattice name");
  catalog_cmd->add_option("--out", out, "output file (default stdout)");

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a null vector of L = lattice + II_{1,1} and certify it");
  reduce_cmd->add_option("--lattice", lattice, "base lattice name, e.g. R1_E or K12_E")->required();
  reduce_cmd->add_option("vector", vector_arg, "vector JSON, a file holding it, or - for stdin")->required();
  reduce_cmd->add_option("--rules", filter, "reduction rules to use")->check(CLI::IsMember({"all", "short", "proved"}));
  reduce_cmd->add_option("--out", out, "certificate file (default stdout)");
  reduce_cmd->add_option("--dump-trace", trace, "write the height trace as CSV");

  auto* verify_cmd = app.add_subcommand("verify", "run a claim check, 'all', or 'list' the claim ids");
  verify_cmd->add_option("claim", claim, "claim id")->required();
  verify_cmd->add_option("--seed", config.seed, "seed for randomized checks");
  verify_cmd->add_option("--samples", config.samples, "instances per randomized check (0: default)");
  verify_cmd->add_option("--bound", bound, "|height|^2 bound for census claims");
  verify_cmd->add_option("--budget", config.budget, "enumeration budget for census claims");
  verify_cmd->add_option("--threads", config.threads, "census worker threads (0: all cores)");
  verify_cmd->add_option("--out", out, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*catalog_cmd) return cmd_catalog(name, out);
    if (*reduce_cmd) return cmd_reduce(lattice, vector_arg, filter, out, trace);
    if (!bound.empty()) config.bound = parse_bound(bound);
    return cmd_verify(claim, config, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
