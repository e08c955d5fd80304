#include "pds/report.hpp"

#include <algorithm>
#include <sstream>

#include "pds/error.hpp"
#include "pds/literal.hpp"

namespace pds {

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string get_string(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  const Json& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw ParseError(where + ": \"" + key + "\" must be a string");
}

}  // namespace

StepFunction parse_step_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", line, col);
  }
  if (!j.is_object()) throw ParseError("step function: expected an object");
  int L = 1;
  if (j.contains("zeta_order")) {
    if (!j["zeta_order"].is_number_integer() || j["zeta_order"].get<long>() < 1)
      throw ParseError("step function: zeta_order must be a positive integer");
    L = j["zeta_order"].get<int>();
  }
  if (!j.contains("pieces") || !j["pieces"].is_array()) throw ParseError("step function: missing \"pieces\" array");
  std::vector<StepPiece> pieces;
  std::size_t idx = 0;
  for (const auto& p : j["pieces"]) {
    std::string where = "pieces[" + std::to_string(idx++) + "]";
    try {
      pieces.push_back({parse_rational(get_string(p, "from", where)), parse_rational(get_string(p, "to", where)),
                        parse_cyclo(get_string(p, "value", where), L)});
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return make_step(pieces, L);
}

Json cyclo_to_json(const CycloNumber& x) {
  if (x.is_rational()) return to_string(x.to_rational());
  return Json{{"zeta_order", x.order()}, {"literal", format_cyclo(x, x.order())}};
}

Json step_to_json(const StepFunction& phi) {
  Json pieces = Json::array();
  for (const auto& p : phi.pieces())
    pieces.push_back({{"from", to_string(p.from)}, {"to", to_string(p.to)}, {"value", format_cyclo(p.value, phi.value_order())}});
  return {{"zeta_order", phi.value_order()}, {"pieces", pieces}};
}

Json interval_to_json(const Interval& x) { return Json::array({to_string(x.lo), to_string(x.hi)}); }

Json interval_to_json(const ComplexInterval& z) { return {{"re", interval_to_json(z.re)}, {"im", interval_to_json(z.im)}}; }

Json poly_to_json(const DirichletPoly& p) {
  Json terms = Json::array();
  for (const auto& [n, c] : p.terms()) terms.push_back({{"n", n}, {"coeff", cyclo_to_json(c)}});
  return {{"terms", terms}, {"text", p.debug_string()}};
}

Json poly_to_json(const BohrPoly& q) {
  Json terms = Json::array();
  for (const auto& [e, c] : q.terms()) terms.push_back({{"exponents", e}, {"coeff", cyclo_to_json(c)}});
  return {{"primes", q.primes()}, {"terms", terms}};
}

Json character_to_json(const DirichletCharacter& psi) {
  Json values = Json::array();
  for (long n = 1; n <= psi.modulus(); ++n) values.push_back(cyclo_to_json(psi(n)));
  return {{"modulus", psi.modulus()},
          {"conductor", psi.conductor()},
          {"index", psi.index()},
          {"order", psi.order()},
          {"parity", psi.parity()},
          {"values", values}};
}

Json certificate_to_json(const Certificate& c) {
  Json j{{"kind", to_string(c.kind)}};
  if (!c.reason.empty()) j["reason"] = c.reason;
  switch (c.kind) {
    case CertificateKind::Dominance:
      j["leading_abs"] = interval_to_json(c.leading_abs);
      j["tail_abs"] = interval_to_json(c.tail_abs);
      break;
    case CertificateKind::SeparableFactorization: {
      Json f = Json::array(), parts = Json::array();
      for (const auto& q : c.factors) f.push_back(poly_to_json(q));
      for (const auto& p : c.parts) parts.push_back(certificate_to_json(p));
      j["factors"] = f;
      j["parts"] = parts;
      break;
    }
    case CertificateKind::UnivariateRootBound: {
      j["variable"] = c.variable;
      Json roots = Json::array();
      for (const auto& r : c.roots)
        roots.push_back({{"center", Json::array({to_string(r.disk.re), to_string(r.disk.im)})},
                         {"radius", to_string(r.disk.radius)},
                         {"location", r.location}});
      j["roots"] = roots;
      break;
    }
    case CertificateKind::NegativityTwist: {
      Json rho = Json::object();
      for (const auto& [p, v] : c.rho) rho[std::to_string(p)] = v;
      j["rho"] = rho;
      j["idempotent_zero"] = c.idempotent_zero;
      j["sum"] = cyclo_to_json(c.sum);
      j["twisted_constant"] = cyclo_to_json(c.twisted_constant);
      break;
    }
    case CertificateKind::InteriorWitness: {
      Json pt = Json::array();
      for (const auto& z : c.point) pt.push_back(interval_to_json(z));
      j["point"] = pt;
      j["residual_bound"] = to_string(c.residual_bound);
      j["certified"] = c.certified;
      if (c.exact_point) {
        Json ex = Json::array();
        for (const auto& z : *c.exact_point) ex.push_back(cyclo_to_json(z));
        j["exact_point"] = ex;
      }
      break;
    }
    case CertificateKind::AffineReduction: {
      j["affine_variable"] = c.affine_variable;
      j["base_variable"] = c.base_variable;
      Json s = Json::array();
      for (const auto& [re, im] : c.circle_samples) s.push_back(Json::array({to_string(re), to_string(im)}));
      j["circle_samples"] = s;
      break;
    }
    case CertificateKind::None: break;
  }
  if (!c.removed.empty()) {
    Json r = Json::array();
    for (const auto& q : c.removed) r.push_back(poly_to_json(q));
    j["removed"] = r;
  }
  return j;
}

Json zero_verdict_to_json(const ZeroFreeVerdict& v) {
  return {{"status", to_string(v.status)}, {"lifted", poly_to_json(v.lifted)}, {"certificate", certificate_to_json(v.certificate)}};
}

Json verdict_to_json(const CompletenessVerdict& v) {
  Json j{{"status", to_string(v.status)}, {"t", v.t}};
  j["character"] = v.character ? character_to_json(*v.character) : Json(nullptr);
  j["polynomial"] = v.theorem_polynomial ? poly_to_json(*v.theorem_polynomial) : Json(nullptr);
  if (v.zero_verdict) {
    j["zero_status"] = to_string(v.zero_verdict->status);
    j["lifted"] = poly_to_json(v.zero_verdict->lifted);
    j["certificate"] = certificate_to_json(v.zero_verdict->certificate);
  } else {
    j["certificate"] = nullptr;
  }
  Json reasons = Json::array();
  if (v.reason) reasons.push_back(to_string(*v.reason));
  for (const auto& x : v.violations) reasons.push_back(x.name + ": " + x.detail);
  j["reasons"] = reasons;
  return j;
}

namespace {

std::string cert_kind(const CompletenessVerdict& v) {
  if (v.zero_verdict) return to_string(v.zero_verdict->certificate.kind);
  if (v.reason) return to_string(*v.reason);
  return "None";
}

}  // namespace

std::string scan_summary(const ScanReport& r) {
  return "examined=" + std::to_string(r.entries.size()) +
         " complete=" + std::to_string(r.count(CompletenessStatus::Complete)) +
         " incomplete=" + std::to_string(r.count(CompletenessStatus::Incomplete)) +
         " undetermined=" + std::to_string(r.count(CompletenessStatus::Undetermined));
}

Json scan_to_json(const ScanReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x{{"descriptor", e.descriptor}, {"function", step_to_json(e.phi)}, {"verdict", verdict_to_json(e.verdict)}};
    if (e.expected) x["expected_complete"] = *e.expected;
    entries.push_back(x);
  }
  return {{"kind", r.kind},
          {"examined", r.entries.size()},
          {"complete", r.complete()},
          {"undetermined", r.undetermined},
          {"mismatches", r.mismatches()},
          {"entries", entries}};
}

std::string scan_to_csv(const ScanReport& r) {
  std::string out = "descriptor,status,certificate\n";
  for (const auto& e : r.entries)
    out += "\"" + e.descriptor + "\"," + to_string(e.verdict.status) + "," + cert_kind(e.verdict) + "\n";
  return out;
}

std::string scan_to_table(const ScanReport& r) {
  std::size_t w = 10;
  for (const auto& e : r.entries) w = std::max(w, e.descriptor.size());
  std::ostringstream s;
  auto row = [&](const std::string& a, const std::string& b, const std::string& c) {
    s << a << std::string(w + 2 - a.size(), ' ') << b << std::string(14 - std::min<std::size_t>(13, b.size()), ' ') << c
      << "\n";
  };
  row("descriptor", "status", "certificate");
  for (const auto& e : r.entries) row(e.descriptor, to_string(e.verdict.status), cert_kind(e.verdict));
  s << scan_summary(r) << "\n";
  return s.str();
}

}  // namespace pds
