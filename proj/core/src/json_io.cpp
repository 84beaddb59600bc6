#include "padic/json_io.hpp"

namespace padic {

namespace {

constexpr std::int64_t kMaxSafeInteger = (std::int64_t{1} << 53) - 1;

nlohmann::json vertices_json(const std::vector<Point>& vertices) {
  auto out = nlohmann::json::array();
  for (const Point& v : vertices) out.push_back({json_integer(v.x), json_integer(v.y)});
  return out;
}

nlohmann::json segments_json(std::span<const Point> chain) {
  auto out = nlohmann::json::array();
  for (const auto& s : segments(chain)) {
    out.push_back({{"slope", s.slope.to_string()}, {"length", json_integer(s.length)}});
  }
  return out;
}

nlohmann::json slope_lengths_json(const std::vector<SlopeLength>& list) {
  auto out = nlohmann::json::array();
  for (const auto& s : list) out.push_back({{"slope", s.slope.to_string()}, {"length", json_integer(s.length)}});
  return out;
}

std::int64_t read_integer(const nlohmann::json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const BigInt n = parse_bigint(j.get<std::string>());
    if (n.fits_slong_p()) return n.get_si();
  }
  throw ParseError(0, "expected an integer, got " + j.dump());
}

}  // namespace

nlohmann::json json_integer(std::int64_t n) {
  if (n > kMaxSafeInteger || n < -kMaxSafeInteger) return std::to_string(n);
  return n;
}

nlohmann::json json_integer(const BigInt& n) {
  if (n.fits_slong_p()) return json_integer(static_cast<std::int64_t>(n.get_si()));
  return n.get_str();
}

nlohmann::json to_json(const Polynomial& f) {
  auto out = nlohmann::json::array();
  for (const auto& c : f.coefficients()) out.push_back(c.to_string());
  return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError(0, "polynomial JSON must be an array of rational strings");
  std::vector<BigRational> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw ParseError(i, "coefficient must be a string");
    coeffs.push_back(BigRational::parse(j[i].get<std::string>()));
  }
  return Polynomial(std::move(coeffs));
}

nlohmann::json to_json(const NewtonPolygon& np) {
  return {{"prime", np.prime().to_string()},
          {"x_offset", json_integer(np.x_offset())},
          {"vertices", vertices_json(np.vertices())},
          {"segments", segments_json(np.vertices())}};
}

NewtonPolygon polygon_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("prime") || !j.contains("vertices")) {
    throw ParseError(0, "polygon JSON needs \"prime\" and \"vertices\"");
  }
  const auto& prime = j.at("prime");
  const Prime p = prime.is_string() ? Prime::parse(prime.get<std::string>()) : Prime(BigInt(static_cast<long>(read_integer(prime))));
  std::vector<Point> vertices;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_array() || v.size() != 2) throw ParseError(0, "vertex must be a pair [x, y]");
    vertices.push_back({read_integer(v[0]), read_integer(v[1])});
  }
  return NewtonPolygon(p, std::move(vertices));
}

nlohmann::json to_json(const LowerBoundRegion& region) {
  return {{"vertices", vertices_json(region.vertices())}, {"segments", segments_json(region.vertices())}};
}

nlohmann::json to_json(const PurityReport& report) {
  nlohmann::json out{{"classification", to_string(report.classification)},
                     {"pure", report.slope.has_value()},
                     {"dumas", report.dumas}};
  if (report.slope) out["slope"] = report.slope->to_string();
  if (report.pr_pure_r) out["pr_pure_r"] = json_integer(*report.pr_pure_r);
  if (report.height) out["height"] = json_integer(*report.height);
  return out;
}

nlohmann::json to_json(const std::vector<RootValuation>& roots) {
  auto out = nlohmann::json::array();
  for (const auto& r : roots) {
    out.push_back({{"valuation", r.valuation ? r.valuation->to_string() : std::string("inf")},
                   {"multiplicity", json_integer(r.multiplicity)}});
  }
  return out;
}

nlohmann::json to_json(const CompositionReport& report) {
  nlohmann::json out{{"hypotheses_hold", report.hypotheses_hold}, {"actual", to_json(report.actual)}};
  if (report.violation) {
    out["violation"] = {{"kind", to_string(*report.violation)}, {"message", report.violation_message}};
  }
  if (report.predicted) out["predicted"] = to_json(*report.predicted);
  if (report.matches) out["matches"] = *report.matches;
  return out;
}

nlohmann::json to_json(const IrreducibilityCertificate& certificate) {
  auto primes = nlohmann::json::array();
  for (const auto& e : certificate.primes) {
    auto slopes = nlohmann::json::array();
    for (const auto& s : e.slopes) slopes.push_back(s.to_string());
    primes.push_back({{"p", e.prime.to_string()}, {"slopes", slopes}, {"forced_divisor", json_integer(e.forced_divisor)}});
  }
  return {{"polynomial", certificate.polynomial},
          {"degree", json_integer(certificate.degree)},
          {"primes", primes},
          {"combined_divisor", json_integer(certificate.combined_divisor)},
          {"verdict", to_string(certificate.verdict)}};
}

nlohmann::json to_json(const DynamicalReport& report) {
  auto steps = nlohmann::json::array();
  for (const auto& s : report.steps) {
    steps.push_back({{"m", s.m},
                     {"degree", json_integer(s.degree)},
                     {"expected_slope", s.expected_slope.to_string()},
                     {"slope", s.slope ? nlohmann::json(s.slope->to_string()) : nlohmann::json(nullptr)},
                     {"certified", s.certified}});
  }
  return {{"prime", report.prime.to_string()},
          {"r", json_integer(report.r)},
          {"degree", json_integer(report.d)},
          {"steps", steps},
          {"all_certified", report.all_certified}};
}

nlohmann::json to_json(const ExpCompositionReport& report) {
  const auto& h = report.hypotheses;
  auto per_prime = nlohmann::json::array();
  for (const auto& s : h.per_prime) {
    per_prime.push_back({{"p", s.prime.to_string()},
                         {"pr_pure_r", s.r ? json_integer(*s.r) : nlohmann::json(nullptr)},
                         {"dumas", s.dumas}});
  }
  auto slopes = nlohmann::json::array();
  for (const auto& c : report.slopes) {
    slopes.push_back({{"p", c.prime.to_string()},
                      {"predicted", slope_lengths_json(c.predicted)},
                      {"actual", slope_lengths_json(c.actual)},
                      {"matches", c.matches}});
  }
  return {{"hypotheses",
           {{"degree_g", json_integer(h.degree_g)},
            {"degree_is_prime", h.degree_is_prime},
            {"degree_exceeds_prime_divisors", h.degree_exceeds_prime_divisors},
            {"per_prime", per_prime},
            {"all_hold", h.all_hold}}},
          {"certificate", to_json(report.certificate)},
          {"slope_comparison", slopes},
          {"divisor_degraded", report.divisor_degraded}};
}

}  // namespace padic
