#include "superjac/tools/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace superjac::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorCode::ParseError, what, "parse"); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

// A non-negative or signed integer given as a JSON number or a decimal string.
std::int64_t integer(const json& j, const char* what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const auto& t = j.get_ref<const std::string&>();
    std::size_t used = 0;
    try {
      const auto v = std::stoll(t, &used);
      if (used == t.size()) return v;
    } catch (const std::exception&) {
    }
  }
  parse_fail(std::string(what) + " must be an integer or a decimal string");
}

std::uint64_t positive(const json& j, const char* what) {
  const auto v = integer(j, what);
  if (v <= 0) parse_fail(std::string(what) + " must be positive");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

json to_json(const FieldElement& z) {
  json a = json::array();
  for (auto c : z.coeffs()) a.push_back(std::to_string(c));
  return a;
}

json to_json(const FieldCtx& F) {
  json m = json::array();
  for (auto c : F.modulus()) m.push_back(std::to_string(c));
  return {{"p", std::to_string(F.characteristic())}, {"k", F.degree()}, {"modulus", m}};
}

json to_json(const UniPoly& a) {
  json out = json::array();
  const bool prime = a.field().valid() && a.field().is_prime_field();
  for (const auto& c : a.coeffs()) out.push_back(prime ? json(std::to_string(c.coeff(0))) : to_json(c));
  return out;
}

json to_json(const SuperellipticCurve& c) {
  json j = {{"p", std::to_string(c.field().characteristic())}, {"k", c.field().degree()}, {"n", c.n()},
            {"f", to_json(c.f())}};
  if (c.relaxed()) j["relaxed"] = true;
  return j;
}

json to_json(const AffinePoint& P) { return json::array({to_json(P.x), to_json(P.y)}); }

json to_json(const ReducedDivisor& D) {
  json pts = json::array();
  for (const auto& P : D.points()) pts.push_back(to_json(P));
  return {{"schema", kSchemaVersion}, {"curve", to_json(D.curve())}, {"field", to_json(D.field())}, {"points", pts}};
}

json to_json(const MumfordDivisor& A) {
  return {{"field", to_json(A.field())}, {"u", to_json(A.u)}, {"v", to_json(A.v)}};
}

json to_json(const InterpolationCurve& ic) {
  json monos = json::array(), coeffs = json::array();
  for (const auto& m : ic.monomials) monos.push_back(m.to_string());
  for (const auto& c : ic.coeffs) coeffs.push_back(to_json(c));
  return {{"monomials", monos}, {"coeffs", coeffs}, {"rank_deficient", ic.rank_deficient}};
}

json to_json(const StepCertificate& cert) {
  return {{"m", cert.m},
          {"field", to_json(cert.working_field)},
          {"interpolation_curve", to_json(cert.ic)},
          {"F", to_json(cert.F)},
          {"known", to_json(cert.known)},
          {"residual", to_json(cert.residual)},
          {"restarts", cert.restarts}};
}

json to_json(const AddCertificate& cert) {
  return {{"f1", to_json(cert.f1)}, {"f2", to_json(cert.f2)}, {"f3", to_json(cert.f3())},
          {"f4", to_json(cert.f4())}, {"chord", to_json(cert.chord)}, {"flip", to_json(cert.flip)}};
}

json to_json(const LPolynomial& L) {
  json a = json::array(), counts = json::array();
  for (const auto& x : L.a) a.push_back(x.str());
  for (auto n : L.counts) counts.push_back(n);
  return {{"coefficients", a}, {"point_counts", counts}, {"order", L.at_one().str()}};
}

FieldCtx field_from_json(const json& j) {
  const auto p = positive(require(j, "p"), "field 'p'");
  const unsigned k = j.contains("k") ? static_cast<unsigned>(positive(j["k"], "field 'k'")) : 1;
  const FieldCtx F = FieldCtx::make(p, k);
  if (j.contains("modulus")) {
    const auto& m = j["modulus"];
    if (!m.is_array()) parse_fail("modulus must be an array");
    std::vector<std::uint64_t> given;
    for (const auto& c : m) given.push_back(static_cast<std::uint64_t>(integer(c, "modulus coefficient")));
    const auto mod = F.modulus();
    if (!std::equal(given.begin(), given.end(), mod.begin(), mod.end()))
      parse_fail("modulus does not match the canonical one for " + F.name());
  }
  return F;
}

FieldElement element_from_json(const json& j, const FieldCtx& F) {
  const auto p = static_cast<std::int64_t>(F.characteristic());
  auto reduce = [p](std::int64_t v) { return static_cast<std::uint64_t>(((v % p) + p) % p); };
  if (!j.is_array()) return F.from_coeffs(std::vector<std::uint64_t>{reduce(integer(j, "field element"))});
  std::vector<std::uint64_t> cs;
  for (const auto& c : j) cs.push_back(reduce(integer(c, "element coefficient")));
  if (cs.size() > F.degree()) parse_fail("element has more coefficients than the field degree");
  return F.from_coeffs(cs);
}

UniPoly poly_from_json(const json& j, const FieldCtx& F) {
  if (!j.is_array()) parse_fail("polynomial must be an array of coefficients");
  std::vector<FieldElement> cs;
  for (const auto& c : j) cs.push_back(element_from_json(c, F));
  return UniPoly(F, cs);
}

// Either {"p", "k", "n", "f"} or {"field": {...}, "n", "f"}.
SuperellipticCurve curve_from_json(const json& j) {
  const FieldCtx F = field_from_json(j.is_object() && j.contains("field") ? j["field"] : j);
  const auto n = integer(require(j, "n"), "'n'");
  const UniPoly f = poly_from_json(require(j, "f"), F);
  const bool relaxed = j.contains("relaxed") && j["relaxed"].is_boolean() && j["relaxed"].get<bool>();
  return SuperellipticCurve::make(F, static_cast<int>(n), f, relaxed ? Validation::Relaxed : Validation::Strict);
}

ReducedDivisor divisor_from_json(const json& j, const SuperellipticCurve* fallback) {
  SuperellipticCurve c;
  if (j.is_object() && j.contains("curve"))
    c = curve_from_json(j["curve"]);
  else if (fallback)
    c = *fallback;
  else
    parse_fail("divisor has no curve and none was supplied");
  const FieldCtx F = j.contains("field") ? field_from_json(j["field"]) : c.field();
  if (F.characteristic() != c.field().characteristic() || F.degree() % c.field().degree())
    parse_fail("divisor field " + F.name() + " does not contain the curve field");
  std::vector<AffinePoint> pts;
  for (const auto& P : require(j, "points")) {
    if (!P.is_array() || P.size() != 2) parse_fail("a point is a pair [x, y]");
    pts.push_back({element_from_json(P[0], F), element_from_json(P[1], F)});
  }
  return ReducedDivisor::make(c, pts);
}

json load_json(const std::string& text_or_path) {
  std::string text = text_or_path;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) {
    std::ifstream in(text_or_path);
    if (!in) parse_fail("cannot read '" + text_or_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
}

}  // namespace superjac::io
