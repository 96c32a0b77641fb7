#include "salemforge/mau.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "salemforge/errors.hpp"
#include "salemforge/report.hpp"

namespace salemforge {

std::string to_string(MauRole r) { return r == MauRole::alpha ? "alpha" : "beta"; }

Bits mau_value_bits(Bits relation_bits) { return 2 * relation_bits + 64; }

std::vector<RealBall> MAUSequence::arguments() const {
  std::vector<RealBall> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.argument);
  return out;
}

const ExtensionCertificate& MAUSequence::certificate_for(unsigned long source_n) const {
  for (const auto& c : certificates) {
    if (c.n == source_n) return c;
  }
  throw PreconditionError("MAU: no certificate for source n = " + std::to_string(source_n));
}

namespace {

const char* kNote =
    "degree_bound is the product of 2 deg(phi) over sources, an upper bound for the degree of the field generated by "
    "the entries; each new q exceeds it. Independence rests on the extension argument; the relation audit is numeric "
    "falsification evidence.";

const std::vector<CyclotomicFactor>& class19_cyclotomic_part() {
  static const std::vector<CyclotomicFactor> part = salem_factor(19).cyclotomic_part;
  return part;
}

mpz_class recompute_bound(const std::vector<ExtensionCertificate>& certs) {
  mpz_class b = 1;
  std::set<unsigned long> seen;
  for (const auto& c : certs) {
    if (seen.insert(c.n).second) b *= 2 * static_cast<unsigned long>(c.deg_phi);
  }
  return b;
}

}  // namespace

RelationReport mau_audit(const MAUSequence& seq, long bound, Bits precision_bits) {
  return relation_search(seq.arguments(), bound, precision_bits);
}

MAUSequence mau_extend_at(const MAUSequence& seq, std::uint64_t k, Bits precision_bits, long bound) {
  ExtensionCertificate cert;
  cert.k = k;
  cert.q = d_of_k(k);
  cert.n = static_cast<unsigned long>(n_of_k(k));
  for (const auto& c : seq.certificates) {
    if (c.n == cert.n) throw PreconditionError("mau_extend: source n = " + std::to_string(cert.n) + " already used");
  }
  cert.primality = primality_witness(cert.q);
  if (!cert.primality.prime) throw PreconditionError("mau_extend: d(k) = " + std::to_string(cert.q) + " is not prime");
  cert.degree_bound_before = seq.degree_bound;
  cert.q_exceeds_bound = mpz_class(static_cast<unsigned long>(cert.q)) > seq.degree_bound;
  if (!cert.q_exceeds_bound) throw PreconditionError("mau_extend: q does not exceed the degree bound");

  Bits vbits = mau_value_bits(precision_bits);
  McMullenPairData data = [&] {
    try {
      return mcmullen_data(cert.n, vbits);
    } catch (const NoSiegelRootError& e) {
      throw WitnessFailure(std::string("mau_extend: ") + e.what());
    }
  }();
  const SalemFactorization& sf = data.factorization;
  cert.phi = sf.salem_candidate;
  cert.deg_phi = cert.phi.deg();
  cert.deg_r = data.trace_poly.deg();
  cert.cyclotomic_part = sf.cyclotomic_part;
  cert.cyclotomic_matches_class = sf.cyclotomic_part == class19_cyclotomic_part();
  if (cert.deg_phi != 360 * k + 14)
    throw DegreeCertificateFailure("mau_extend: deg phi = " + std::to_string(cert.deg_phi) + ", expected " +
                                   std::to_string(360 * k + 14));
  if (cert.deg_r != cert.q)
    throw DegreeCertificateFailure("mau_extend: deg r = " + std::to_string(cert.deg_r) + " differs from q = " +
                                   std::to_string(cert.q));
  if (!cert.cyclotomic_matches_class || sf.e_n.deg() - cert.deg_phi != 5)
    throw DegreeCertificateFailure("mau_extend: cyclotomic part differs from the residue class of 19");
  if (data.scan.nonsiegel.empty()) throw WitnessFailure("mau_extend: no non-Siegel root for n = " + std::to_string(cert.n));
  cert.delta = data.delta().value;
  cert.delta_root_index = data.scan.circle[data.delta_circle_index].root_index;
  cert.branch_sign = data.branch_sign;
  const auto& dp = data.scan.circle[*data.delta_prime_circle_index];
  cert.delta_prime = dp.delta.value;
  cert.delta_prime_ratio_gap = data.delta_prime_branch()->ratio_gap;
  cert.siegel_roots = data.scan.siegel.size();
  cert.nonsiegel_roots = data.scan.nonsiegel.size();
  cert.integrality_passed = data.certificate.passed();
  cert.integrality_residual = data.integrality_residual;
  cert.log_eta = data.entropy;

  MAUSequence out = seq;
  out.precision_bits = precision_bits;
  out.bound = bound;
  out.note = kNote;
  const Branch& b = data.branch();
  out.entries.push_back(MauEntry{b.alpha, turns(b.alpha), cert.n, MauRole::alpha});
  out.entries.push_back(MauEntry{b.beta, turns(b.beta), cert.n, MauRole::beta});
  out.certificates.push_back(std::move(cert));
  out.degree_bound = recompute_bound(out.certificates);
  out.relation_audit = mau_audit(out, bound, precision_bits);
  if (out.relation_audit.outcome == RelationOutcome::Candidate) {
    std::string m;
    for (long x : out.relation_audit.exponents) m += std::to_string(x) + " ";
    throw IndependenceFalsified("mau_extend: verified relation among the entries: " + m);
  }
  return out;
}

MAUSequence mau_extend(const MAUSequence& seq, Bits precision_bits, long bound) {
  std::uint64_t k = 1;
  if (seq.degree_bound > 7) {
    mpz_class lo = (seq.degree_bound - 7) / 180;
    if (lo.fits_ulong_p()) k = std::max<std::uint64_t>(1, lo.get_ui());
  }
  while (true) {
    k = dk_prime_search(k, 1).front();
    if (mpz_class(static_cast<unsigned long>(d_of_k(k))) > seq.degree_bound) break;
    ++k;
  }
  return mau_extend_at(seq, k, precision_bits, bound);
}

MAUSequence mau_build(std::size_t length, Bits precision_bits, long bound) {
  if (length < 2 || length % 2 != 0) throw PreconditionError("mau_build: length must be even and at least 2");
  MAUSequence seq;
  seq.precision_bits = precision_bits;
  seq.bound = bound;
  while (seq.length() < length) seq = mau_extend(seq, precision_bits, bound);
  return seq;
}

MAUSequence mau_build_from(std::uint64_t k0, std::size_t length, Bits precision_bits, long bound) {
  if (length < 2 || length % 2 != 0) throw PreconditionError("mau_build: length must be even and at least 2");
  MAUSequence seq;
  seq = mau_extend_at(seq, k0, precision_bits, bound);
  while (seq.length() < length) seq = mau_extend(seq, precision_bits, bound);
  return seq;
}

MAUSequence truncate(const MAUSequence& seq, std::size_t length) {
  if (length > seq.length()) throw PreconditionError("truncate: length exceeds the sequence");
  MAUSequence out;
  out.precision_bits = seq.precision_bits;
  out.bound = seq.bound;
  out.note = seq.note;
  out.entries.assign(seq.entries.begin(), seq.entries.begin() + static_cast<std::ptrdiff_t>(length));
  for (const auto& c : seq.certificates) {
    bool used = std::any_of(out.entries.begin(), out.entries.end(), [&](const MauEntry& e) { return e.source_n == c.n; });
    if (used) out.certificates.push_back(c);
  }
  out.degree_bound = recompute_bound(out.certificates);
  out.relation_audit = mau_audit(out, out.bound, out.precision_bits);
  return out;
}

namespace {

nlohmann::json factors_json(const std::vector<CyclotomicFactor>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : v) a.push_back({{"d", c.d}, {"multiplicity", c.multiplicity}});
  return a;
}

nlohmann::json cert_json(const ExtensionCertificate& c) {
  nlohmann::json prim{{"n", c.primality.n},
                      {"prime", c.primality.prime},
                      {"trial_limit", c.primality.trial_limit},
                      {"strong_pseudoprime_bases", c.primality.bases}};
  return {{"k", c.k},
          {"q", c.q},
          {"n", c.n},
          {"primality", prim},
          {"degree_bound_before", c.degree_bound_before.get_str()},
          {"q_exceeds_bound", c.q_exceeds_bound},
          {"deg_phi", c.deg_phi},
          {"deg_r", c.deg_r},
          {"cyclotomic_part", factors_json(c.cyclotomic_part)},
          {"cyclotomic_matches_class", c.cyclotomic_matches_class},
          {"phi", to_json(c.phi)},
          {"delta", ball_json(c.delta)},
          {"delta_root_index", c.delta_root_index},
          {"branch_sign", c.branch_sign},
          {"delta_prime", ball_json(c.delta_prime)},
          {"delta_prime_ratio_modulus_minus_1", ball_json(c.delta_prime_ratio_gap)},
          {"siegel_roots", c.siegel_roots},
          {"nonsiegel_roots", c.nonsiegel_roots},
          {"integrality_passed", c.integrality_passed},
          {"integrality_residual", ball_json(c.integrality_residual)},
          {"log_eta", ball_json(c.log_eta)}};
}

template <class T>
T get(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw PreconditionError(std::string("MAU JSON: missing field \"") + key + "\"");
  return j.at(key).get<T>();
}

}  // namespace

nlohmann::json to_json(const MAUSequence& s) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : s.entries) {
    entries.push_back({{"value", ball_json(e.value)},
                       {"argument", ball_json(e.argument)},
                       {"source_n", e.source_n},
                       {"role", to_string(e.role)},
                       {"minimal_poly_of_delta", "certificates[n=" + std::to_string(e.source_n) + "].phi"}});
  }
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : s.certificates) certs.push_back(cert_json(c));
  return {{"length", s.length()},
          {"precision_bits", s.precision_bits},
          {"value_bits", mau_value_bits(s.precision_bits)},
          {"bound", s.bound},
          {"degree_bound", s.degree_bound.get_str()},
          {"entries", entries},
          {"certificates", certs},
          {"relation_audit", to_json(s.relation_audit)},
          {"note", s.note}};
}

MAUSequence mau_from_json(const nlohmann::json& doc) {
  // accept a CLI report envelope as well as the bare sequence
  const nlohmann::json& j = doc.contains("result") && !doc.contains("entries") ? doc.at("result") : doc;
  MAUSequence s;
  s.precision_bits = get<Bits>(j, "precision_bits");
  s.bound = get<long>(j, "bound");
  Bits vbits = get<Bits>(j, "value_bits");
  s.note = j.value("note", std::string());
  for (const auto& c : get<nlohmann::json>(j, "certificates")) {
    ExtensionCertificate e;
    e.k = get<std::uint64_t>(c, "k");
    e.q = get<std::uint64_t>(c, "q");
    e.n = get<unsigned long>(c, "n");
    e.primality = primality_witness(e.q);
    e.degree_bound_before = mpz_class(get<std::string>(c, "degree_bound_before"));
    e.q_exceeds_bound = get<bool>(c, "q_exceeds_bound");
    e.deg_phi = get<std::size_t>(c, "deg_phi");
    e.deg_r = get<std::size_t>(c, "deg_r");
    for (const auto& f : get<nlohmann::json>(c, "cyclotomic_part"))
      e.cyclotomic_part.push_back({get<unsigned long>(f, "d"), get<int>(f, "multiplicity")});
    e.cyclotomic_matches_class = get<bool>(c, "cyclotomic_matches_class");
    e.phi = poly_from_json(get<nlohmann::json>(c, "phi"));
    if (e.phi.deg() != e.deg_phi) throw PreconditionError("MAU JSON: phi degree mismatch");
    e.delta = complex_ball_from_json(get<nlohmann::json>(c, "delta"), vbits);
    e.delta_root_index = get<std::size_t>(c, "delta_root_index");
    e.branch_sign = get<int>(c, "branch_sign");
    e.delta_prime = complex_ball_from_json(get<nlohmann::json>(c, "delta_prime"), vbits);
    e.delta_prime_ratio_gap = real_ball_from_json(get<nlohmann::json>(c, "delta_prime_ratio_modulus_minus_1"), vbits);
    e.siegel_roots = get<std::size_t>(c, "siegel_roots");
    e.nonsiegel_roots = get<std::size_t>(c, "nonsiegel_roots");
    e.integrality_passed = get<bool>(c, "integrality_passed");
    e.integrality_residual = real_ball_from_json(get<nlohmann::json>(c, "integrality_residual"), vbits);
    e.log_eta = real_ball_from_json(get<nlohmann::json>(c, "log_eta"), vbits);
    s.certificates.push_back(std::move(e));
  }
  for (const auto& e : get<nlohmann::json>(j, "entries")) {
    MauEntry m;
    m.value = complex_ball_from_json(get<nlohmann::json>(e, "value"), vbits);
    m.argument = turns(m.value);
    m.source_n = get<unsigned long>(e, "source_n");
    std::string role = get<std::string>(e, "role");
    if (role != "alpha" && role != "beta") throw PreconditionError("MAU JSON: role must be alpha or beta");
    m.role = role == "alpha" ? MauRole::alpha : MauRole::beta;
    s.certificate_for(m.source_n);
    s.entries.push_back(std::move(m));
  }
  s.degree_bound = recompute_bound(s.certificates);
  if (j.contains("degree_bound") && mpz_class(get<std::string>(j, "degree_bound")) != s.degree_bound)
    throw PreconditionError("MAU JSON: degree_bound does not match the certificates");
  s.relation_audit = mau_audit(s, s.bound, s.precision_bits);
  return s;
}

}  // namespace salemforge
