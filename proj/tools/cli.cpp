#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "padic/error.hpp"
#include "padic/exactnum.hpp"
#include "padic/harness.hpp"
#include "padic/irred.hpp"
#include "padic/json_io.hpp"
#include "padic/poly.hpp"
#include "padic/polygon.hpp"
#include "padic/render.hpp"

namespace padic::cli {

namespace {

constexpr int kJsonSchema = 1;
// Longer composites are summarized in text output; --json has them in full.
constexpr std::size_t kPrintableDegree = 40;

enum class OutputFormat { Text, Json, Svg, Ascii };

struct CliConfig {
  std::size_t degree_cap = kDefaultDegreeCap;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::Text;
  std::string svg_path;
};

struct GlobalFlags {
  bool json = false;
  bool ascii = false;
  std::string svg_path;
  std::uint64_t seed = 0;
  std::optional<std::size_t> cap;
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string show_point(const Point& v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

void print_polygon(std::ostream& out, const std::string& title, const NewtonPolygon& np) {
  out << title << ":\n  vertices:";
  for (const Point& v : np.vertices()) out << ' ' << show_point(v);
  out << '\n';
  const auto segs = segments(np);
  if (segs.empty()) {
    out << "  no segments\n";
    return;
  }
  for (const auto& s : segs) out << "  segment: slope " << s.slope << ", length " << s.length << '\n';
}

void print_composite(std::ostream& out, const std::string& title, const Polynomial& f) {
  out << title << ": ";
  if (f.is_zero() || *f.degree() <= kPrintableDegree) {
    out << format(f) << '\n';
  } else {
    out << "(degree " << *f.degree() << ", omitted; use --json for coefficients)\n";
  }
}

PlotSpec plot(std::vector<PlotLayer> layers) {
  PlotSpec spec;
  spec.layers = std::move(layers);
  return spec;
}

nlohmann::json envelope() { return {{"schema", kJsonSchema}}; }

void write_svg(const PlotSpec& spec, const CliConfig& config, std::ostream& out) {
  std::ofstream file(config.svg_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + config.svg_path + " for writing");
  file << render_svg(spec);
  if (!file) throw Error(ErrorCode::InvalidArgument, "failed writing " + config.svg_path);
  out << "wrote " << config.svg_path << '\n';
}

// Emits a picture when --svg or --ascii was requested; false otherwise.
bool emit_picture(const PlotSpec& spec, const CliConfig& config, std::ostream& out) {
  if (config.format == OutputFormat::Svg) {
    write_svg(spec, config, out);
    return true;
  }
  if (config.format == OutputFormat::Ascii) {
    out << render_ascii(spec);
    return true;
  }
  return false;
}

Polynomial read_polynomial(const std::string& text, const std::optional<Prime>& p, const CliConfig& config) {
  std::optional<BigInt> symbol;
  if (p) symbol = p->value();
  return parse_polynomial(text, symbol, config.degree_cap);
}

Polynomial read_polynomial_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "invalid JSON");
  }
  return polynomial_from_json(j);
}

// Rejects f o g^[m] up front when its degree would pass the cap, so that no
// oversized iterate gets built first.
void check_composite_degree(const Polynomial& f, const Polynomial& g, unsigned long m, std::size_t cap) {
  if (f.is_zero() || g.is_zero()) return;
  std::size_t degree = *f.degree();
  for (unsigned long i = 0; i < m && degree > 0 && *g.degree() != 1; ++i) {
    if (__builtin_mul_overflow(degree, *g.degree(), &degree)) degree = SIZE_MAX;
    if (degree > cap) {
      throw Error(ErrorCode::DegreeCapExceeded, "composition would have degree above the cap of " + std::to_string(cap));
    }
  }
}

// ---------------------------------------------------------------- np

struct NpArgs {
  std::string prime;
  std::string poly;
  std::string poly_json;
};

int cmd_np(const NpArgs& args, const CliConfig& config, std::ostream& out) {
  if (args.poly.empty() == args.poly_json.empty()) throw UsageError("np needs exactly one of --poly or --poly-json");
  const Prime p = Prime::parse(args.prime);
  const Polynomial f = args.poly_json.empty() ? read_polynomial(args.poly, p, config) : read_polynomial_json(args.poly_json);
  const NewtonPolygon np = newton_polygon(f, p);

  std::optional<PurityReport> purity;
  std::string purity_note;
  try {
    purity = classify_purity(f, p);
  } catch (const Error& e) {
    purity_note = e.code() == ErrorCode::ZeroConstantTerm ? "n/a (f(0) = 0)" : "n/a (constant polynomial)";
  }

  if (emit_picture(plot({make_layer(np, LineStyle::Solid, "NP_" + p.to_string() + "(f)")}), config, out)) return kOk;

  if (config.format == OutputFormat::Json) {
    auto j = envelope();
    j["polynomial"] = format(f);
    j["coefficients"] = to_json(f);
    j["polygon"] = to_json(np);
    j["purity"] = purity ? to_json(*purity) : nlohmann::json(purity_note);
    j["root_valuations"] = to_json(root_valuations(np));
    out << j.dump(2) << '\n';
    return kOk;
  }

  print_composite(out, "polynomial", f);
  out << "prime: " << p.to_string() << '\n';
  print_polygon(out, "newton polygon", np);
  out << "purity: " << (purity ? to_string(purity->classification) : purity_note);
  if (purity && purity->slope) out << " (slope " << *purity->slope << ")";
  out << '\n' << "root valuations:";
  for (const auto& r : root_valuations(np)) {
    out << ' ' << (r.valuation ? r.valuation->to_string() : std::string("+inf")) << " x" << r.multiplicity;
  }
  out << '\n';
  return kOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string prime;
  std::string poly;
};

int cmd_check(const CheckArgs& args, const CliConfig& config, std::ostream& out) {
  const Prime p = Prime::parse(args.prime);
  const Polynomial f = read_polynomial(args.poly, p, config);
  const PurityReport report = classify_purity(f, p);
  const auto cert = dumas_certificate(f, p);

  if (config.format == OutputFormat::Json) {
    auto j = envelope();
    j["polynomial"] = format(f);
    j["prime"] = p.to_string();
    j["purity"] = to_json(report);
    j["polygon"] = to_json(report.evidence);
    if (cert) {
      j["dumas_certificate"] = {{"height", json_integer(cert->height)},
                                {"degree", json_integer(cert->degree)},
                                {"evidence", to_json(cert->evidence)}};
    } else {
      j["dumas_certificate"] = nullptr;
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  if (emit_picture(plot({make_layer(report.evidence, LineStyle::Solid, "NP_" + p.to_string() + "(f)")}), config, out)) {
    return kOk;
  }

  print_composite(out, "polynomial", f);
  out << "prime: " << p.to_string() << '\n';
  out << "classification: " << to_string(report.classification) << '\n';
  if (report.slope) out << "slope: " << *report.slope << '\n';
  if (report.height) out << "height: " << *report.height << '\n';
  if (report.pr_pure_r) out << "p^r-pure with r = " << *report.pr_pure_r << '\n';
  if (cert) {
    out << "Eisenstein-Dumas: irreducible over Q (height " << cert->height << ", degree " << cert->degree
        << ", gcd 1)\n";
  } else {
    out << "Eisenstein-Dumas: no certificate\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- compose

struct ComposeArgs {
  std::string prime;
  std::string f;
  std::string g;
  unsigned long iterate = 1;
};

int cmd_compose(const ComposeArgs& args, const CliConfig& config, std::ostream& out) {
  const Prime p = Prime::parse(args.prime);
  const Polynomial f = read_polynomial(args.f, p, config);
  const Polynomial g = read_polynomial(args.g, p, config);
  check_composite_degree(f, g, args.iterate, config.degree_cap);
  const Polynomial inner = iterate(g, args.iterate, config.degree_cap);
  const CompositionReport report = verify_composition(f, inner, p, config.degree_cap);

  PlotSpec spec = plot({make_layer(newton_polygon(f, p), LineStyle::Solid, "NP(f)"),
                         make_layer(report.actual, LineStyle::Bold, "NP(f o g) actual")});
  if (report.predicted) spec.layers.push_back(make_layer(*report.predicted, LineStyle::Dashed, "NP(f o g) predicted"));
  if (emit_picture(spec, config, out)) return kOk;

  if (config.format == OutputFormat::Json) {
    auto j = envelope();
    j["f"] = format(f);
    j["g"] = format(g);
    j["iterate"] = args.iterate;
    j["composite"] = to_json(report.composite);
    j["report"] = to_json(report);
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "f: " << format(f) << '\n' << "g: " << format(g) << '\n' << "iterate: " << args.iterate << '\n';
  print_composite(out, "composite", report.composite);
  print_polygon(out, "actual polygon", report.actual);
  if (report.predicted) {
    print_polygon(out, "predicted polygon", *report.predicted);
    out << "verdict: " << (*report.matches ? "prediction matches" : "prediction differs") << '\n';
  } else {
    std::string reason = report.violation_message;
    if (report.violation == ErrorCode::HypothesisViolation) {
      reason = reason.substr(reason.find(": ") + 2);
    }
    out << "hypotheses violated: " << reason << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- certify

struct CertifyArgs {
  std::string poly;
  unsigned long exp_n = 0;
  std::vector<std::string> primes;
  std::string compose;
  unsigned long iterate = 1;
};

void print_certificate(std::ostream& out, const IrreducibilityCertificate& cert) {
  out << "polynomial: " << cert.polynomial << '\n' << "degree: " << cert.degree << '\n';
  for (const auto& e : cert.primes) {
    out << "p=" << e.prime.to_string() << ": slopes";
    for (const auto& s : e.slopes) out << ' ' << s;
    out << " -> forced divisor " << e.forced_divisor << '\n';
  }
  out << "combined divisor: " << cert.combined_divisor << '\n' << "verdict: ";
  switch (cert.verdict) {
    case Verdict::CertifiedIrreducible: out << "certified irreducible over Q\n"; break;
    case Verdict::FactorDegreesMultipleOf:
      out << "every irreducible factor has degree divisible by " << cert.combined_divisor << '\n';
      break;
    case Verdict::Inconclusive: out << "inconclusive\n"; break;
  }
}

int cmd_certify(const CertifyArgs& args, const CliConfig& config, std::ostream& out) {
  if (args.poly.empty() == (args.exp_n == 0)) throw UsageError("certify needs exactly one of --poly or --exp-n");
  std::vector<Prime> primes;
  for (const auto& text : args.primes) primes.push_back(Prime::parse(text));

  auto j = envelope();
  IrreducibilityCertificate cert;
  std::optional<ExpCompositionReport> exp_report;
  if (args.exp_n > 0) {
    if (primes.empty()) primes = prime_divisors(args.exp_n);
    if (!args.compose.empty()) {
      const Polynomial g = read_polynomial(args.compose, std::nullopt, config);
      check_composite_degree(Polynomial::monomial(BigRational(1), args.exp_n), g, args.iterate, config.degree_cap);
      exp_report = certify_exp_composition(args.exp_n, g, args.iterate, config.degree_cap);
      cert = exp_report->certificate;
      std::vector<Prime> divisors = prime_divisors(args.exp_n);
      if (!(primes == divisors)) {
        const Polynomial composite =
            compose(taylor_exp(args.exp_n), iterate(g, args.iterate, config.degree_cap), config.degree_cap);
        cert = certify_irreducible(composite, primes, cert.polynomial);
      }
    } else {
      if (primes.empty()) throw UsageError("taylor_exp(1) has no prime divisor to use; pass --primes");
      cert = certify_irreducible(taylor_exp(args.exp_n), primes, "taylor_exp(" + std::to_string(args.exp_n) + ")");
    }
  } else {
    if (primes.empty()) throw UsageError("--primes is required with --poly");
    Polynomial f = read_polynomial(args.poly, std::nullopt, config);
    std::string descriptor = format(f);
    if (!args.compose.empty()) {
      const Polynomial g = read_polynomial(args.compose, std::nullopt, config);
      check_composite_degree(f, g, args.iterate, config.degree_cap);
      descriptor = "(" + descriptor + ") o (" + format(g) + ")^[" + std::to_string(args.iterate) + "]";
      f = compose(f, iterate(g, args.iterate, config.degree_cap), config.degree_cap);
    }
    cert = certify_irreducible(f, primes, descriptor);
  }
  const int code = cert.verdict == Verdict::CertifiedIrreducible ? kOk : kNotCertified;

  if (config.format == OutputFormat::Json) {
    j.update(to_json(cert));
    if (exp_report) {
      const auto full = to_json(*exp_report);
      j["hypotheses"] = full["hypotheses"];
      j["slope_comparison"] = full["slope_comparison"];
      j["divisor_degraded"] = full["divisor_degraded"];
    }
    out << j.dump(2) << '\n';
    return code;
  }

  print_certificate(out, cert);
  if (exp_report) {
    const auto& h = exp_report->hypotheses;
    out << "hypotheses: deg g = " << h.degree_g << (h.degree_is_prime ? " is prime" : " is not prime") << ", "
        << (h.degree_exceeds_prime_divisors ? "exceeds" : "does not exceed") << " every prime divisor of n\n";
    for (const auto& s : h.per_prime) {
      out << "  p=" << s.prime.to_string() << ": "
          << (s.r ? "p^" + std::to_string(*s.r) + "-pure" : std::string("not p^r-pure"))
          << (s.dumas ? ", Dumas" : ", not Dumas") << '\n';
    }
    out << "hypotheses " << (h.all_hold ? "hold" : "do not all hold") << '\n';
    for (const auto& c : exp_report->slopes) {
      out << "slopes at p=" << c.prime.to_string() << ": " << (c.matches ? "match" : "differ from") << " prediction\n";
    }
    if (exp_report->divisor_degraded) out << "note: hypotheses hold but the forced divisor is below the degree\n";
  }
  return code;
}

// ---------------------------------------------------------------- exp-taylor

struct ExpArgs {
  unsigned long n = 0;
  std::string prime;
};

int cmd_exp_taylor(const ExpArgs& args, const CliConfig& config, std::ostream& out) {
  const Polynomial f = taylor_exp(args.n);
  if (args.prime.empty()) {
    if (config.format == OutputFormat::Json) {
      auto j = envelope();
      j["n"] = args.n;
      j["coefficients"] = to_json(f);
      out << j.dump(2) << '\n';
    } else {
      out << format(f) << '\n';
    }
    return kOk;
  }
  const Prime p = Prime::parse(args.prime);
  const auto predicted = exp_slopes(args.n, p);
  const NewtonPolygon np = newton_polygon(f, p);
  std::vector<SlopeLength> actual;
  for (const auto& s : segments(np)) actual.push_back({s.slope, s.length});

  if (emit_picture(plot({make_layer(np, LineStyle::Solid, "NP_" + p.to_string() + "(f_" + std::to_string(args.n) + ")")}),
                   config, out)) {
    return kOk;
  }
  if (config.format == OutputFormat::Json) {
    auto j = envelope();
    j["n"] = args.n;
    j["prime"] = p.to_string();
    auto slopes = nlohmann::json::array();
    for (const auto& s : predicted) slopes.push_back({{"slope", s.slope.to_string()}, {"length", s.length}});
    j["digit_slopes"] = slopes;
    j["polygon"] = to_json(np);
    j["matches"] = predicted == actual;
    out << j.dump(2) << '\n';
    return kOk;
  }
  print_composite(out, "f_" + std::to_string(args.n), f);
  out << "slopes from base-" << p.to_string() << " digits:";
  for (const auto& s : predicted) out << ' ' << s.slope << " (len " << s.length << ")";
  out << '\n';
  print_polygon(out, "newton polygon", np);
  out << "digit formula " << (predicted == actual ? "matches" : "differs from") << " the polygon\n";
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string theorem;
  std::uint64_t trials = 100;
};

int cmd_verify(const VerifyArgs& args, const CliConfig& config, std::ostream& out) {
  const auto theorem = parse_theorem(args.theorem);
  if (!theorem) throw UsageError("unknown theorem '" + args.theorem + "' (stretch, product, sum, power-purity)");
  const HarnessSummary summary = run_property(*theorem, {args.trials, config.seed, config.jobs});
  const std::uint64_t failed = summary.trials - summary.passed;

  if (config.format == OutputFormat::Json) {
    auto j = envelope();
    j["theorem"] = to_string(*theorem);
    j["seed"] = std::to_string(config.seed);
    j["trials"] = summary.trials;
    j["passed"] = summary.passed;
    j["failed"] = failed;
    if (summary.first_failure) {
      j["first_failure"] = {{"trial", summary.first_failure->trial},
                            {"inputs", summary.first_failure->inputs},
                            {"detail", summary.first_failure->detail}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << "theorem: " << to_string(*theorem) << '\n'
        << "seed: " << config.seed << '\n'
        << "trials: " << summary.trials << '\n'
        << "passed: " << summary.passed << '\n'
        << "failed: " << failed << '\n';
    if (summary.first_failure) {
      const auto& f = *summary.first_failure;
      out << "first counterexample: trial " << f.trial << " (reproduce with --seed " << f.seed << ")\n"
          << "  inputs: " << f.inputs << '\n'
          << "  " << f.detail << '\n';
    }
  }
  return failed == 0 ? kOk : kNotCertified;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
  std::string prime;
  std::vector<std::string> polys;
  std::vector<std::string> styles;
  bool with_union = false;
};

LineStyle parse_style(const std::string& s) {
  if (s == "solid") return LineStyle::Solid;
  if (s == "dashed") return LineStyle::Dashed;
  if (s == "bold") return LineStyle::Bold;
  throw UsageError("unknown style '" + s + "' (solid, dashed, bold)");
}

int cmd_render(const RenderArgs& args, const CliConfig& config, std::ostream& out) {
  if (args.polys.empty()) throw UsageError("render needs at least one --poly");
  if (!args.styles.empty() && args.styles.size() != args.polys.size()) {
    throw UsageError("give one --style per --poly, or none");
  }
  const Prime p = Prime::parse(args.prime);
  PlotSpec spec;
  std::vector<NewtonPolygon> polygons;
  for (std::size_t i = 0; i < args.polys.size(); ++i) {
    const Polynomial f = read_polynomial(args.polys[i], p, config);
    polygons.push_back(newton_polygon(f, p));
    const LineStyle style = args.styles.empty() ? (i % 2 == 0 ? LineStyle::Solid : LineStyle::Dashed) : parse_style(args.styles[i]);
    spec.layers.push_back(make_layer(polygons.back(), style, format(f)));
  }
  if (args.with_union) spec.layers.push_back(make_layer(union_lower_bound(polygons), LineStyle::Bold, "lower convex hull of union"));

  if (config.format == OutputFormat::Json) {
    auto j = envelope();
    auto layers = nlohmann::json::array();
    for (const auto& np : polygons) layers.push_back(to_json(np));
    j["polygons"] = layers;
    if (args.with_union) j["union"] = to_json(union_lower_bound(polygons));
    out << j.dump(2) << '\n';
    return kOk;
  }
  if (config.format == OutputFormat::Svg) {
    write_svg(spec, config, out);
  } else {
    out << render_ascii(spec);
  }
  return kOk;
}

std::size_t parse_cap(const std::string& text, const char* source) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used == text.size() && v >= 1) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(source) + " must be a positive integer, got '" + text + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& cap_env) {
  CLI::App app{"p-adic Newton polygons, composition laws and irreducibility certificates", "padic-newton"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags global;
  auto* json_flag = app.add_flag("--json", global.json, "Emit JSON");
  auto* ascii_flag = app.add_flag("--ascii", global.ascii, "Draw the polygon(s) as ASCII art");
  auto* svg_flag = app.add_option("--svg", global.svg_path, "Write an SVG picture to PATH");
  json_flag->excludes(ascii_flag)->excludes(svg_flag);
  ascii_flag->excludes(svg_flag);
  app.add_option("--seed", global.seed, "RNG seed for verify");
  std::string cap_text;
  app.add_option("--cap", cap_text, "Degree cap for compositions (env PADIC_NEWTON_CAP)");
  app.add_option("--jobs", global.jobs, "Worker threads for verify")->check(CLI::PositiveNumber);

  NpArgs np_args;
  auto* np = app.add_subcommand("np", "Newton polygon, purity and root valuations");
  np->add_option("--prime", np_args.prime, "Prime p")->required();
  auto* np_poly = np->add_option("--poly", np_args.poly, "Polynomial text (the symbol p stands for the prime)");
  auto* np_json = np->add_option("--poly-json", np_args.poly_json, "Polynomial as a JSON coefficient array");
  np_poly->excludes(np_json);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Purity classification and Eisenstein-Dumas certificate");
  check->add_option("--prime", check_args.prime)->required();
  check->add_option("--poly", check_args.poly)->required();

  ComposeArgs compose_args;
  auto* comp = app.add_subcommand("compose", "Polygon of f o g^[m] against the stretch prediction");
  comp->add_option("--prime", compose_args.prime)->required();
  comp->add_option("--f", compose_args.f)->required();
  comp->add_option("--g", compose_args.g)->required();
  comp->add_option("--iterate", compose_args.iterate, "Number m of g iterates (default 1)");

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "Irreducibility certificate from slope denominators");
  certify->add_option("--poly", certify_args.poly);
  certify->add_option("--exp-n", certify_args.exp_n, "Use the Taylor polynomial of exp of degree N")
      ->check(CLI::PositiveNumber);
  certify->add_option("--primes", certify_args.primes, "Primes to use")->delimiter(',');
  certify->add_option("--compose", certify_args.compose, "Compose with iterates of this polynomial");
  certify->add_option("--iterate", certify_args.iterate, "Number m of iterates (default 1)");

  ExpArgs exp_args;
  auto* exp = app.add_subcommand("exp-taylor", "Taylor polynomial of exp and its slopes");
  exp->add_option("--n", exp_args.n)->required()->check(CLI::PositiveNumber);
  exp->add_option("--prime", exp_args.prime);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Randomized check of a polygon law");
  verify->add_option("--theorem", verify_args.theorem, "stretch, product, sum or power-purity")->required();
  verify->add_option("--trials", verify_args.trials);

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "Draw Newton polygons (ASCII by default, --svg PATH)");
  render->add_option("--prime", render_args.prime)->required();
  render->add_option("--poly", render_args.polys, "Polynomial; repeat for overlays");
  render->add_option("--style", render_args.styles, "solid, dashed or bold; one per --poly")->delimiter(',');
  render->add_flag("--union", render_args.with_union, "Add the lower convex hull of the union in bold");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    CliConfig config;
    if (cap_env) config.degree_cap = parse_cap(*cap_env, "PADIC_NEWTON_CAP");
    if (!cap_text.empty()) config.degree_cap = parse_cap(cap_text, "--cap");
    config.seed = global.seed;
    config.jobs = global.jobs;
    if (global.json) config.format = OutputFormat::Json;
    if (global.ascii) config.format = OutputFormat::Ascii;
    if (!global.svg_path.empty()) {
      config.format = OutputFormat::Svg;
      config.svg_path = global.svg_path;
    }

    if (np->parsed()) return cmd_np(np_args, config, out);
    if (check->parsed()) return cmd_check(check_args, config, out);
    if (comp->parsed()) return cmd_compose(compose_args, config, out);
    if (certify->parsed()) return cmd_certify(certify_args, config, out);
    if (exp->parsed()) return cmd_exp_taylor(exp_args, config, out);
    if (verify->parsed()) return cmd_verify(verify_args, config, out);
    if (render->parsed()) return cmd_render(render_args, config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace padic::cli
