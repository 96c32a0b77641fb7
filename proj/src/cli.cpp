#include "salemforge/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include <nlohmann/json.hpp>

#include "salemforge/coxeter.hpp"
#include "salemforge/errors.hpp"
#include "salemforge/mau.hpp"
#include "salemforge/mcmullen.hpp"
#include "salemforge/product.hpp"
#include "salemforge/relation.hpp"
#include "salemforge/report.hpp"
#include "salemforge/toric.hpp"

namespace salemforge {

namespace {

// Thrown by a command that produced a full report but must still fail.
struct ReportedFailure {
  nlohmann::json report;
  std::string message;
  std::string type = "ConsistencyError";
  int code = kExitConsistency;
};

nlohmann::json config_json(const RunConfig& c, const std::string& command) {
  return {{"command", command},
          {"precision_bits", c.precision_bits},
          {"relation_bound", c.relation_bound},
          {"output", c.output.empty() ? "stdout" : c.output}};
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

nlohmann::json factorization_json(const SalemFactorization& f) {
  nlohmann::json j = to_json(f);
  j["cyclotomic_product"] = to_json(f.cyclotomic_product());
  return j;
}

nlohmann::json coxeter_poly(unsigned long n) {
  IntPoly e = en_from_formula(n);
  return {{"n", n}, {"degree", e.deg()}, {"e_n", to_json(e)}};
}

nlohmann::json coxeter_factor(unsigned long n) {
  SalemFactorization f = salem_factor(n);
  nlohmann::json j{{"n", n}, {"residue_class", f.residue_class}, {"formula_route", factorization_json(f)}};
  j["trace_poly"] = to_json(salem_trace(f.salem_candidate));
  if (n <= kMatrixRouteLimit) {
    IntPoly em = en_from_matrix(n);
    SalemFactorization fm = salem_factor(em, n);
    j["matrix_route"] = factorization_json(fm);
    bool agree = fm.cyclotomic_part == f.cyclotomic_part && fm.salem_candidate == f.salem_candidate;
    j["routes_agree"] = agree;
    if (!agree) throw ReportedFailure{j, "formula and matrix factorizations differ"};
  } else {
    j["matrix_route"] = "skipped for n > " + std::to_string(kMatrixRouteLimit);
  }
  return j;
}

nlohmann::json coxeter_oracle(unsigned long n) {
  IntPoly a = en_from_formula(n);
  IntPoly b = en_from_matrix(n);
  nlohmann::json j{{"n", n}, {"match", a == b}, {"e_n_formula", to_json(a)}, {"e_n_matrix", to_json(b)}};
  if (!(a == b)) throw ReportedFailure{j, "matrix route differs from the closed formula"};
  return j;
}

nlohmann::json mcmullen_certificate(unsigned long n) {
  nlohmann::json j = to_json(integrality_certificate(n));
  if (!j.at("passed").get<bool>()) throw ReportedFailure{j, "integrality certificate fails for n = " + std::to_string(n)};
  return j;
}

nlohmann::json toric_check(const std::string& path) {
  FanCertificate c = check_fan(load_fan(path));
  nlohmann::json j = to_json(c);
  if (!c.valid()) throw ReportedFailure{j, c.failure + ": " + c.detail, "FanError", kExitPrecondition};
  return j;
}

nlohmann::json toric_fixed_points(const std::string& fan_path, const std::string& mau_path, const RunConfig& cfg) {
  Fan fan = load_fan(fan_path);
  require_valid(fan);
  auto d = static_cast<std::size_t>(fan.dim);
  MAUSequence seq = mau_path.empty() ? truncate(mau_build(d + d % 2, cfg.precision_bits, cfg.relation_bound), d)
                                     : mau_from_json(read_json_file(mau_path));
  if (seq.length() < d) throw PreconditionError("toric fixed-points: the MAU has fewer entries than the fan dimension");
  TorusElement a;
  for (std::size_t i = 0; i < d; ++i) {
    a.arguments.push_back(seq.entries[i].argument);
    a.provenance.push_back("mau[" + std::to_string(i) + "] (" + to_string(seq.entries[i].role) +
                           ", n=" + std::to_string(seq.entries[i].source_n) + ")");
  }
  IndependenceEvidence ev = audit_independence(a, cfg.relation_bound, seq.precision_bits);
  ev.source = "relation audit of the MAU coordinates";
  auto pts = fixed_points(fan, a, ev);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : pts) {
    nlohmann::json eig = nlohmann::json::array();
    for (const auto& t : p.eigen_arguments) eig.push_back(ball_json(t));
    arr.push_back({{"cone", p.cone}, {"K", p.K}, {"eigenvalue_arguments", eig}});
  }
  nlohmann::json coords = nlohmann::json::array();
  for (std::size_t i = 0; i < d; ++i) coords.push_back({{"argument", ball_json(a.arguments[i])}, {"provenance", a.provenance[i]}});
  return {{"fan", to_json(fan)},
          {"N", pts.size()},
          {"torus_element", coords},
          {"independence", to_json(ev.audit)},
          {"fixed_points", arr}};
}

nlohmann::json product_classify(const std::string& path, const RunConfig& cfg) {
  ProductSpec spec = load_product_spec(path, cfg.precision_bits, cfg.relation_bound);
  SiegelCount c = siegel_count(spec, cfg.relation_bound, cfg.precision_bits);
  nlohmann::json j = to_json(c);
  j["entropy"] = to_json(product_entropy(spec));
  return j;
}

nlohmann::json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"type", kind}, {"message", message}}}};
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const NotMonicError*>(&e)) return "NotMonicError";
  if (dynamic_cast<const NotSalemError*>(&e)) return "NotSalemError";
  if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
  if (dynamic_cast<const FanError*>(&e)) return "FanError";
  if (dynamic_cast<const PreconditionError*>(&e)) return "PreconditionError";
  if (dynamic_cast<const NoSiegelRootError*>(&e)) return "NoSiegelRootError";
  if (dynamic_cast<const DegreeCertificateFailure*>(&e)) return "DegreeCertificateFailure";
  if (dynamic_cast<const WitnessFailure*>(&e)) return "WitnessFailure";
  if (dynamic_cast<const IndependenceFalsified*>(&e)) return "IndependenceFalsified";
  if (dynamic_cast<const ConsistencyError*>(&e)) return "ConsistencyError";
  if (dynamic_cast<const PrecisionTooLow*>(&e)) return "PrecisionTooLow";
  if (dynamic_cast<const PrecisionError*>(&e)) return "PrecisionError";
  return "InternalError";
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("SALEMFORGE_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 64) {
      err << "SALEMFORGE_PRECISION must be an integer >= 64\n";
      return kExitUsage;
    }
    cfg.precision_bits = static_cast<Bits>(v);
  }

  CLI::App app{"Salem numbers, McMullen pairs, MAU sequences and Siegel disks of product automorphisms", "salemforge"};
  app.require_subcommand(1);
  unsigned long n = 0;
  std::size_t length = 4;
  std::string file, mau_file;
  std::string command;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("--precision", cfg.precision_bits, "working precision in bits")->check(CLI::Range(64, 1 << 20));
    sub->add_option("--bound", cfg.relation_bound, "relation exponent bound")->check(CLI::Range(1, 1 << 20));
    sub->add_option("--out", cfg.output, "write the report to this file");
    sub->callback([&command, parent, name] { command = parent->get_name() + " " + name; });
    return sub;
  };
  auto need_n = [&](CLI::App* s) { s->add_option("--n", n, "lattice rank")->required(); };

  CLI::App* cox = app.add_subcommand("coxeter", "Coxeter polynomials E_n");
  cox->require_subcommand(1);
  need_n(leaf(cox, "poly", "E_n from the closed formula"));
  need_n(leaf(cox, "factor", "cyclotomic part and Salem factor of E_n"));
  need_n(leaf(cox, "oracle", "reflection-matrix route against the closed formula"));

  CLI::App* mc = app.add_subcommand("mcmullen", "eigenvalue data of McMullen pairs");
  mc->require_subcommand(1);
  need_n(leaf(mc, "data", "all circle roots, both branches, certificate and entropy"));
  need_n(leaf(mc, "certificate", "exact integrality certificate"));

  CLI::App* mau = app.add_subcommand("mau", "multiplicatively independent sequences");
  mau->require_subcommand(1);
  leaf(mau, "build", "build a sequence")->add_option("--length", length, "even length >= 2");
  leaf(mau, "audit", "re-run the relation search on a stored sequence")->add_option("seq", file, "sequence JSON")->required();

  CLI::App* tor = app.add_subcommand("toric", "fans and torus fixed points");
  tor->require_subcommand(1);
  leaf(tor, "check", "smoothness and completeness of a fan")->add_option("fan", file, "fan JSON")->required();
  CLI::App* fp = leaf(tor, "fixed-points", "fixed points and eigenvalues of a torus element from a MAU");
  fp->add_option("fan", file, "fan JSON")->required();
  fp->add_option("--mau", mau_file, "sequence JSON (default: build one)");

  CLI::App* prod = app.add_subcommand("product", "product automorphisms");
  prod->require_subcommand(1);
  leaf(prod, "classify", "classify every fixed point")->add_option("spec", file, "product spec JSON")->required();
  leaf(prod, "entropy", "topological entropy")->add_option("spec", file, "product spec JSON")->required();

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  nlohmann::json report{{"config", config_json(cfg, command)}};
  int code = kExitOk;
  try {
    nlohmann::json result;
    if (command == "coxeter poly") {
      result = coxeter_poly(n);
    } else if (command == "coxeter factor") {
      result = coxeter_factor(n);
    } else if (command == "coxeter oracle") {
      result = coxeter_oracle(n);
    } else if (command == "mcmullen data") {
      result = to_json(mcmullen_data(n, cfg.precision_bits), true);
    } else if (command == "mcmullen certificate") {
      result = mcmullen_certificate(n);
    } else if (command == "mau build") {
      result = to_json(mau_build(length, cfg.precision_bits, cfg.relation_bound));
    } else if (command == "mau audit") {
      MAUSequence seq = mau_from_json(read_json_file(file));
      result = to_json(mau_audit(seq, cfg.relation_bound, cfg.precision_bits));
    } else if (command == "toric check") {
      result = toric_check(file);
    } else if (command == "toric fixed-points") {
      result = toric_fixed_points(file, mau_file, cfg);
    } else if (command == "product classify") {
      result = product_classify(file, cfg);
    } else if (command == "product entropy") {
      result = to_json(product_entropy(load_product_spec(file, cfg.precision_bits, cfg.relation_bound)));
    } else {
      err << app.help();
      return kExitUsage;
    }
    report["result"] = std::move(result);
  } catch (const ReportedFailure& f) {
    report["result"] = f.report;
    report.update(error_json(f.type, f.message));
    code = f.code;
  } catch (const ConsistencyError& e) {
    report.update(error_json(error_kind(e), e.what()));
    code = kExitConsistency;
  } catch (const PreconditionError& e) {
    report.update(error_json(error_kind(e), e.what()));
    code = kExitPrecondition;
  } catch (const PrecisionError& e) {
    report.update(error_json(error_kind(e), e.what()));
    report["error"]["suggested_precision_bits"] = e.suggested_bits();
    code = kExitPrecondition;
  } catch (const std::exception& e) {
    report.update(error_json(error_kind(e), e.what()));
    code = kExitConsistency;
  }

  std::string text = report.dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
      err << "cannot write " << cfg.output << "\n";
      return kExitPrecondition;
    }
    f << text;
  }
  if (code != kExitOk) err << report["error"]["type"].get<std::string>() << ": " << report["error"]["message"].get<std::string>() << "\n";
  return code;
}

}  // namespace salemforge
