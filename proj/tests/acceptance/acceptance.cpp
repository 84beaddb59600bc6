// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <iostream>
#include <sstream>

#include "padic/harness.hpp"
#include "padic/irred.hpp"
#include "padic/poly.hpp"
#include "padic/polygon.hpp"
#include "padic/render.hpp"
#include "../support/oracles.hpp"
#include "../support/svg_decode.hpp"

namespace padic {
namespace {

using Clock = std::chrono::steady_clock;
using Pts = std::vector<Point>;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) why << what;
    ok = ok && condition;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

BigRational q(const char* text) { return BigRational::parse(text); }

std::vector<SlopeLength> slope_list(std::span<const Point> chain) {
  std::vector<SlopeLength> out;
  for (const auto& s : segments(chain)) out.push_back({s.slope, s.length});
  return out;
}

void worked_example(Check& c) {
  const Polynomial f = parse_polynomial("5 + x^2 + 125x^6");
  const Prime p(5);
  newton_polygon(f, p);  // warm-up
  // Best of several runs, so a scheduler hiccup does not decide the outcome.
  double best = 1e9;
  std::optional<NewtonPolygon> np;
  for (int i = 0; i < 20; ++i) {
    const auto start = Clock::now();
    np = newton_polygon(f, p);
    best = std::min(best, seconds_since(start));
  }
  c.expect(np->vertices() == Pts{{0, 1}, {2, 0}, {6, 3}}, "vertices differ");
  c.expect(slope_list(np->vertices()) == std::vector<SlopeLength>{{q("-1/2"), 2}, {q("3/4"), 4}}, "segments differ");
  c.expect(best < 1e-3, "took " + std::to_string(best) + " s");
}

void product_example(Check& c) {
  const Prime p(2);
  const Polynomial a = parse_polynomial("x^2 - 2"), b = parse_polynomial("x^3 - 2"), d = parse_polynomial("x^4 - 2");
  const NewtonPolygon actual = newton_polygon(a * b * d, p);
  c.expect(slope_list(actual.vertices()) ==
               std::vector<SlopeLength>{{q("-1/2"), 2}, {q("-1/3"), 3}, {q("-1/4"), 4}},
           "slopes differ");
  const NewtonPolygon predicted =
      predict_product(predict_product(newton_polygon(a, p), newton_polygon(b, p)), newton_polygon(d, p));
  c.expect(predicted == actual, "prediction differs");
}

void sum_example(Check& c) {
  const Prime p(3);
  const Polynomial f1 = parse_polynomial("3 + x^2 + 9x^3"), f2 = parse_polynomial("9 + x + 3x^3");
  const std::vector<NewtonPolygon> parts{newton_polygon(f1, p), newton_polygon(f2, p)};
  const LowerBoundRegion bound = union_lower_bound(parts);
  const NewtonPolygon sum = newton_polygon(f1 + f2, p);
  c.expect(sum.vertices() == Pts{{0, 1}, {1, 0}, {2, 0}, {3, 1}}, "sum polygon vertices differ");
  c.expect(LowerBoundRegion(sum) == bound, "sum polygon differs from the union hull");
}

void stretch_fuzz(Check& c) {
  const auto start = Clock::now();
  const HarnessSummary s = run_property(Theorem::Stretch, {1000, 20240101, 1});
  const double elapsed = seconds_since(start);
  c.expect(s.passed == 1000, std::to_string(s.passed) + "/1000 passed" +
                                 (s.first_failure ? " first failure: " + s.first_failure->inputs : ""));
  c.expect(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
}

void hypothesis_sharpness(Check& c) {
  const Prime p(5);
  const Polynomial f = parse_polynomial("25 + x + 25x^2"), g = parse_polynomial("5 + x^2");
  bool violated = false;
  try {
    predict_composition(newton_polygon(f, p), newton_polygon(g, p));
  } catch (const HypothesisViolation&) {
    violated = true;
  }
  c.expect(violated, "no HypothesisViolation");
  const NewtonPolygon actual = newton_polygon(compose(f, g), p);
  c.expect(actual != stretch(newton_polygon(f, p), 2), "actual polygon equals the naive stretch");
}

void dynamical(Check& c) {
  const Prime p(2);
  const Polynomial g = parse_polynomial("x^2 + 2");
  for (unsigned long m = 1; m <= 6; ++m) {
    const Polynomial gm = iterate(g, m);
    const PurityReport r = classify_purity(gm, p);
    const BigRational expected(BigInt(-1), pow(BigInt(2), m));
    c.expect(r.slope && *r.slope == expected, "m=" + std::to_string(m) + " slope differs");
    const auto cert = dumas_certificate(gm, p);
    c.expect(cert && replay(*cert, gm), "m=" + std::to_string(m) + " not Dumas-certified");
  }
  const auto report = certify_dynamical(g, p, 6);
  c.expect(report.all_certified, "certify_dynamical disagrees");
}

void digit_slopes(Check& c) {
  const auto start = Clock::now();
  for (long pv : {2L, 3L, 5L, 7L}) {
    const Prime p(pv);
    for (unsigned long n = 1; n <= 200; ++n) {
      const auto direct = slope_list(newton_polygon(taylor_exp(n), p).vertices());
      if (exp_slopes(n, p) != direct) {
        c.expect(false, "n=" + std::to_string(n) + " p=" + std::to_string(pv));
        return;
      }
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
}

void taylor_irreducible(Check& c) {
  for (unsigned long n = 2; n <= 60; ++n) {
    const auto cert = certify_irreducible(taylor_exp(n), prime_divisors(n));
    c.expect(cert.verdict == Verdict::CertifiedIrreducible, "n=" + std::to_string(n) + " not certified");
  }
}

void exp_composition(Check& c) {
  const auto start = Clock::now();
  const Polynomial g = parse_polynomial("x^5 + 8");
  std::int64_t expected = 4;
  for (unsigned long m = 0; m <= 2; ++m, expected *= 5) {
    const auto report = certify_exp_composition(4, g, m);
    c.expect(report.certificate.verdict == Verdict::CertifiedIrreducible, "m=" + std::to_string(m) + " not certified");
    c.expect(report.certificate.combined_divisor == expected && report.certificate.degree == expected,
             "m=" + std::to_string(m) + " divisor " + std::to_string(report.certificate.combined_divisor));
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 10.0, "took " + std::to_string(elapsed) + " s");
}

void hull_oracle(Check& c) {
  std::mt19937_64 engine(777);
  std::uniform_int_distribution<std::int64_t> count(1, 40), coord(-50, 50);
  int agree = 0;
  for (int i = 0; i < 10000; ++i) {
    Pts pts(static_cast<std::size_t>(count(engine)));
    for (auto& pt : pts) pt = {coord(engine), coord(engine)};
    if (lower_convex_hull(pts) == oracle::brute_lower_hull(pts)) ++agree;
  }
  c.expect(agree == 10000, std::to_string(agree) + "/10000 agree");
}

void render_determinism(Check& c) {
  PlotSpec spec;
  spec.layers.push_back(
      make_layer(newton_polygon(parse_polynomial("5 + x^2 + 125x^6"), Prime(5)), LineStyle::Solid, "NP_5(f)"));
  const std::string first = render_svg(spec), second = render_svg(spec);
  c.expect(first == second, "SVG bytes differ between renders");
  const auto decoded = testing::decode_svg(first);
  const std::vector<std::pair<double, double>> expected{{0, 1}, {2, 0}, {6, 3}};
  c.expect(decoded.polylines_data.size() == 1 && decoded.polylines_data[0].size() == 3, "polyline not found");
  if (!c.ok) return;
  const Viewport vp = svg_viewport(spec);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [sx, sy] = vp.to_screen(BigRational(static_cast<long>(expected[i].first)),
                                       BigRational(static_cast<long>(expected[i].second)));
    const auto& got = decoded.polylines_screen[0][i];
    c.expect(std::abs(got.first - sx.raw().get_d()) <= 0.0005 + 1e-12 &&
                 std::abs(got.second - sy.raw().get_d()) <= 0.0005 + 1e-12,
             "screen coordinates off by more than the quantum");
    const auto& data = decoded.polylines_data[0][i];
    c.expect(std::abs(data.first - expected[i].first) < 1e-3 && std::abs(data.second - expected[i].second) < 1e-3,
             "decoded vertex differs");
  }
}

}  // namespace
}  // namespace padic

int main() {
  using padic::Check;
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"01 worked example polygon", padic::worked_example},
      {"02 product example", padic::product_example},
      {"03 sum example", padic::sum_example},
      {"04 stretch fuzz 1000 trials", padic::stretch_fuzz},
      {"05 hypothesis sharpness", padic::hypothesis_sharpness},
      {"06 iterates of x^2+2", padic::dynamical},
      {"07 digit slope formula", padic::digit_slopes},
      {"08 Taylor polynomials n<=60", padic::taylor_irreducible},
      {"09 exp composition m=0,1,2", padic::exp_composition},
      {"10 hull oracle 10000 sets", padic::hull_oracle},
      {"11 SVG determinism", padic::render_determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Check check;
    try {
      run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok ? "PASS " : "FAIL ") << name;
    if (!check.ok) std::cout << " (" << check.why.str() << ")";
    std::cout << '\n';
    failures += check.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
