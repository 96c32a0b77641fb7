#include "salemforge/product.hpp"

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "salemforge/errors.hpp"
#include "salemforge/report.hpp"

namespace salemforge {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::SiegelArithmetic: return "SiegelArithmetic";
    case Classification::NonSiegel: return "NonSiegel";
    case Classification::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

std::string to_string(const AddressPart& a) {
  switch (a.kind) {
    case AddressPart::Kind::P: return "P";
    case AddressPart::Kind::Q: return "Q";
    case AddressPart::Kind::cone: return "Q_" + std::to_string(a.cone + 1);
  }
  return "?";
}

std::vector<FactorBinding> bind_factors(const ProductSpec& spec) {
  const MAUSequence& mau = spec.mau;
  std::vector<FactorBinding> out(spec.factors.size());
  std::vector<bool> used(mau.entries.size(), false);
  std::size_t toric = 0;
  for (std::size_t f = 0; f < spec.factors.size(); ++f) {
    if (const auto* m = std::get_if<McMullenFactor>(&spec.factors[f])) {
      const ExtensionCertificate* cert = nullptr;
      for (const auto& c : mau.certificates)
        if (c.n == m->n) cert = &c;
      if (!cert) throw PreconditionError("product: the MAU has no pair for n = " + std::to_string(m->n));
      if (m->branch != cert->branch_sign)
        throw PreconditionError("product: factor n = " + std::to_string(m->n) + " asks for branch " +
                                std::to_string(m->branch) + " but the MAU uses branch " + std::to_string(cert->branch_sign));
      if (m->delta_index && *m->delta_index != cert->delta_root_index)
        throw PreconditionError("product: factor n = " + std::to_string(m->n) + " asks for delta root " +
                                std::to_string(*m->delta_index) + " but the MAU uses root " +
                                std::to_string(cert->delta_root_index));
      for (MauRole role : {MauRole::alpha, MauRole::beta}) {
        std::size_t hit = mau.entries.size();
        for (std::size_t i = 0; i < mau.entries.size(); ++i)
          if (mau.entries[i].source_n == m->n && mau.entries[i].role == role) hit = i;
        if (hit == mau.entries.size())
          throw PreconditionError("product: the MAU lacks the " + to_string(role) + " entry of n = " + std::to_string(m->n));
        if (used[hit]) throw PreconditionError("product: MAU entry " + std::to_string(hit) + " claimed twice");
        used[hit] = true;
        out[f].entries.push_back(hit);
      }
      out[f].certificate = cert;
    } else {
      if (++toric > 1) throw PreconditionError("product: at most one toric factor");
      require_valid(std::get<ToricFactor>(spec.factors[f]).fan);
    }
  }
  for (std::size_t f = 0; f < spec.factors.size(); ++f) {
    const auto* t = std::get_if<ToricFactor>(&spec.factors[f]);
    if (!t) continue;
    for (std::size_t i = 0; i < mau.entries.size(); ++i) {
      if (!used[i]) {
        used[i] = true;
        out[f].entries.push_back(i);
      }
    }
    if (out[f].entries.size() != static_cast<std::size_t>(t->fan.dim))
      throw PreconditionError("product: toric factor of dimension " + std::to_string(t->fan.dim) + " receives " +
                              std::to_string(out[f].entries.size()) + " MAU entries");
    out[f].K = dual_bases(t->fan);
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw PreconditionError("product: MAU entry " + std::to_string(i) + " is not used by any factor");
  return out;
}

namespace {

struct FactorData {
  std::vector<NamedCheck> q_checks;
  std::vector<RealBall> q_args;
  std::vector<std::string> q_labels;
  std::vector<ToricFixedPoint> cones;
  std::vector<NamedCheck> cone_checks;
};

FactorData mcmullen_factor_data(const MAUSequence& mau, const FactorBinding& b) {
  const ExtensionCertificate& c = *b.certificate;
  const MauEntry& ea = mau.entries[b.entries[0]];
  const MauEntry& eb = mau.entries[b.entries[1]];
  FactorData d;
  std::string tag = "n=" + std::to_string(c.n) + ": ";
  Bits p = c.delta.precision();
  CertifiedRoot delta{c.delta, 1, RootTag::on_circle, false};
  bool matches = false, siegel = false;
  try {
    for (const Branch& br : eigenvalue_branches(c.phi, delta, p)) {
      if (br.sign != c.branch_sign) continue;
      matches = br.alpha.overlaps(ea.value) && br.beta.overlaps(eb.value);
      siegel = br.cls == BranchClass::siegel && br.alpha_circle.contains_zero() && br.beta_circle.contains_zero();
    }
  } catch (const std::exception&) {
    matches = false;
  }
  d.q_checks.push_back({tag + "delta is a root of phi and its branch reproduces the MAU entries", matches});
  d.q_checks.push_back({tag + "Siegel branch (s^2/delta < 4), alpha and beta on the unit circle", siegel});
  d.q_checks.push_back({tag + "algebraic integers (integrality certificate)", c.integrality_passed});
  d.q_args = {ea.argument, eb.argument};
  d.q_labels = {"alpha(n=" + std::to_string(c.n) + ")", "beta(n=" + std::to_string(c.n) + ")"};
  return d;
}

FactorData toric_factor_data(const MAUSequence& mau, const ToricFactor& t, const FactorBinding& b) {
  FactorData d;
  TorusElement a;
  bool integral = true;
  for (std::size_t i : b.entries) {
    a.arguments.push_back(mau.entries[i].argument);
    a.provenance.push_back("mau[" + std::to_string(i) + "]");
    integral = integral && mau.certificate_for(mau.entries[i].source_n).integrality_passed;
  }
  IndependenceEvidence ev = audit_independence(a, mau.bound, mau.precision_bits);
  ev.source = "MAU entries";
  d.cones = fixed_points(t.fan, a, ev);
  d.cone_checks.push_back({"toric eigenvalues on the unit circle (argument representation)", true});
  d.cone_checks.push_back({"toric eigenvalues are algebraic integers (monomials in MAU entries)", integral});
  return d;
}

}  // namespace

std::vector<FixedPoint> enumerate_fixed_points(const ProductSpec& spec) {
  std::vector<FactorBinding> bindings = bind_factors(spec);
  std::vector<FactorData> data;
  std::vector<std::size_t> radix;
  for (std::size_t f = 0; f < spec.factors.size(); ++f) {
    if (std::holds_alternative<McMullenFactor>(spec.factors[f])) {
      data.push_back(mcmullen_factor_data(spec.mau, bindings[f]));
      radix.push_back(2);
    } else {
      data.push_back(toric_factor_data(spec.mau, std::get<ToricFactor>(spec.factors[f]), bindings[f]));
      radix.push_back(data.back().cones.size());
    }
  }
  std::vector<FixedPoint> out;
  std::vector<std::size_t> digit(radix.size(), 0);
  while (true) {
    FixedPoint fp;
    for (std::size_t f = 0; f < radix.size(); ++f) {
      const FactorData& d = data[f];
      AddressPart part;
      if (std::holds_alternative<McMullenFactor>(spec.factors[f])) {
        part.kind = digit[f] == 0 ? AddressPart::Kind::P : AddressPart::Kind::Q;
        if (part.kind == AddressPart::Kind::Q) {
          fp.eigen_arguments.insert(fp.eigen_arguments.end(), d.q_args.begin(), d.q_args.end());
          fp.eigen_labels.insert(fp.eigen_labels.end(), d.q_labels.begin(), d.q_labels.end());
          fp.checks.insert(fp.checks.end(), d.q_checks.begin(), d.q_checks.end());
        }
      } else {
        part.kind = AddressPart::Kind::cone;
        part.cone = digit[f];
        const ToricFixedPoint& c = d.cones[digit[f]];
        for (std::size_t i = 0; i < c.eigen_arguments.size(); ++i) {
          fp.eigen_arguments.push_back(c.eigen_arguments[i]);
          fp.eigen_labels.push_back("a^K" + std::to_string(i + 1) + "(" + std::to_string(digit[f] + 1) + ")");
        }
        fp.checks.insert(fp.checks.end(), d.cone_checks.begin(), d.cone_checks.end());
      }
      fp.address.push_back(part);
    }
    out.push_back(std::move(fp));
    std::size_t f = radix.size();
    while (f > 0 && ++digit[f - 1] == radix[f - 1]) digit[--f] = 0;
    if (f == 0) break;
  }
  return out;
}

FixedPointReport classify(const FixedPoint& fp, long bound, Bits precision_bits) {
  FixedPointReport r;
  r.point = fp;
  for (std::size_t f = 0; f < fp.address.size(); ++f) {
    if (fp.address[f].kind == AddressPart::Kind::P) {
      r.classification = Classification::NonSiegel;
      r.fatal_flag = "factor " + std::to_string(f) + " at P: the eigenvalues there are not multiplicatively independent";
      return r;
    }
  }
  if (fp.eigen_arguments.empty()) {
    r.classification = Classification::NonSiegel;
    r.fatal_flag = "no eigenvalues: the product has dimension 0";
    return r;
  }
  for (const auto& c : fp.checks) {
    if (!c.passed) {
      r.classification = Classification::Undetermined;
      r.hint = "certificate check failed: " + c.name;
      return r;
    }
  }
  try {
    r.audit = relation_search(fp.eigen_arguments, bound, precision_bits);
  } catch (const PrecisionError& e) {
    r.classification = Classification::Undetermined;
    r.suggested_bits = e.suggested_bits();
    r.hint = std::string("raise the precision: ") + e.what();
    return r;
  }
  switch (r.audit->outcome) {
    case RelationOutcome::NoRelationFound:
      r.classification = Classification::SiegelArithmetic;
      break;
    case RelationOutcome::Candidate:
      r.classification = Classification::NonSiegel;
      r.fatal_flag = "verified multiplicative relation among the eigenvalues";
      break;
    case RelationOutcome::Inconclusive:
      r.classification = Classification::Undetermined;
      r.suggested_bits = 2 * precision_bits;
      r.hint = "raise the precision or lower the bound: the lattice gap does not exclude relations up to the bound";
      break;
  }
  return r;
}

SiegelCount siegel_count(const ProductSpec& spec, long bound, Bits precision_bits) {
  SiegelCount c;
  for (const auto& fp : enumerate_fixed_points(spec)) {
    FixedPointReport r = classify(fp, bound, precision_bits);
    switch (r.classification) {
      case Classification::SiegelArithmetic: ++c.count; break;
      case Classification::NonSiegel: ++c.nonsiegel; break;
      case Classification::Undetermined: ++c.undetermined; break;
    }
    c.reports.push_back(std::move(r));
  }
  return c;
}

ProductEntropy product_entropy(const ProductSpec& spec) {
  std::vector<FactorBinding> bindings = bind_factors(spec);
  ProductEntropy e;
  Bits p = mau_value_bits(spec.mau.precision_bits);
  e.value = RealBall::exact(mpz_class(0), p);
  bool any = false;
  for (std::size_t f = 0; f < spec.factors.size(); ++f) {
    if (bindings[f].certificate) {
      e.contributions.push_back(bindings[f].certificate->log_eta);
      e.value = e.value + bindings[f].certificate->log_eta;
      any = true;
    } else {
      e.contributions.push_back(RealBall::exact(mpz_class(0), p));
    }
  }
  e.certified_positive = e.value.is_positive();
  if (!any) e.warnings.push_back("no McMullen factor: entropy is 0 and positivity does not hold");
  return e;
}

namespace {

std::string resolve(const std::string& base_dir, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
  return p.string();
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

}  // namespace

ProductSpec product_spec_from_json(const nlohmann::json& j, const std::string& base_dir, Bits precision_bits,
                                   long bound) {
  if (!j.is_object() || !j.contains("factors") || !j.contains("mau"))
    throw PreconditionError("product spec needs \"factors\" and \"mau\"");
  ProductSpec spec;
  try {
    for (const auto& f : j.at("factors")) {
      std::string type = f.at("type").get<std::string>();
      if (type == "mcmullen") {
        McMullenFactor m;
        m.n = f.at("n").get<unsigned long>();
        if (f.contains("delta_index") && !f.at("delta_index").is_null()) m.delta_index = f.at("delta_index").get<std::size_t>();
        m.branch = f.value("branch", 1);
        spec.factors.emplace_back(m);
      } else if (type == "toric") {
        ToricFactor t;
        if (f.contains("standard_fan")) {
          t.fan = standard_fan(f.at("standard_fan").get<std::string>());
        } else if (f.at("fan").is_string()) {
          t.fan = load_fan(resolve(base_dir, f.at("fan").get<std::string>()));
        } else {
          t.fan = fan_from_json(f.at("fan"));
        }
        spec.factors.emplace_back(std::move(t));
      } else {
        throw PreconditionError("product spec: unknown factor type \"" + type + "\"");
      }
    }
    const auto& m = j.at("mau");
    if (m.is_string()) {
      spec.mau = mau_from_json(read_json(resolve(base_dir, m.get<std::string>())));
    } else if (m.contains("entries")) {
      spec.mau = mau_from_json(m);
    } else {
      std::size_t length = m.at("length").get<std::size_t>();
      spec.mau = m.contains("k0") ? mau_build_from(m.at("k0").get<std::uint64_t>(), length, precision_bits, bound)
                                  : mau_build(length, precision_bits, bound);
      if (m.contains("truncate")) spec.mau = truncate(spec.mau, m.at("truncate").get<std::size_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("product spec: ") + e.what());
  }
  bind_factors(spec);
  return spec;
}

ProductSpec load_product_spec(const std::string& path, Bits precision_bits, long bound) {
  return product_spec_from_json(read_json(path), std::filesystem::path(path).parent_path().string(), precision_bits, bound);
}

nlohmann::json to_json(const FixedPointReport& r) {
  nlohmann::json address = nlohmann::json::array();
  for (const auto& a : r.point.address) address.push_back(to_string(a));
  nlohmann::json eig = nlohmann::json::array();
  for (std::size_t i = 0; i < r.point.eigen_arguments.size(); ++i)
    eig.push_back({{"label", r.point.eigen_labels[i]}, {"argument", ball_json(r.point.eigen_arguments[i])}});
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.point.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
  nlohmann::json evidence = nlohmann::json::object();
  if (!r.fatal_flag.empty()) evidence["fatal_flag"] = r.fatal_flag;
  if (r.audit) evidence["relation_audit"] = to_json(*r.audit);
  nlohmann::json j{{"address", address},
                   {"eigenvalue_arguments", eig},
                   {"checks", checks},
                   {"classification", to_string(r.classification)},
                   {"evidence", evidence}};
  if (r.classification == Classification::Undetermined) {
    j["remediation"] = {{"hint", r.hint}};
    if (r.suggested_bits) j["remediation"]["suggested_precision_bits"] = *r.suggested_bits;
  }
  return j;
}

nlohmann::json to_json(const SiegelCount& c) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& r : c.reports) pts.push_back(to_json(r));
  return {{"fixed_points", pts},
          {"fixed_point_count", c.reports.size()},
          {"siegel_count", c.count},
          {"nonsiegel_count", c.nonsiegel},
          {"undetermined_count", c.undetermined},
          {"assumption",
           "Siegel classification is arithmetic classification of the linearization data; analytic linearization at "
           "points with multiplicatively independent algebraic-integer eigenvalues on the unit circle is assumed"}};
}

nlohmann::json to_json(const ProductEntropy& e) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& c : e.contributions) parts.push_back(ball_json(c));
  return {{"entropy", ball_json(e.value)},
          {"contributions", parts},
          {"certified_positive", e.certified_positive},
          {"warnings", e.warnings}};
}

}  // namespace salemforge
