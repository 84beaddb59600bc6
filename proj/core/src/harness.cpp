#include "padic/harness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "padic/polygon.hpp"

namespace padic {

namespace {

constexpr long kPrimes[] = {2, 3, 5, 7};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

Prime random_prime(TrialRng& rng) { return Prime(kPrimes[rng.uniform(0, 3)]); }

BigRational p_power(const Prime& p, std::int64_t v) {
  const BigInt magnitude = pow(p.value(), static_cast<unsigned long>(v < 0 ? -v : v));
  return v < 0 ? BigRational(BigInt(1), magnitude) : BigRational(magnitude);
}

// ceil(a / b) for b > 0.
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

std::string describe(const Prime& p, std::initializer_list<std::pair<const char*, const Polynomial*>> polys) {
  std::string out = "p=" + p.to_string();
  for (const auto& [name, poly] : polys) out += std::string(" ") + name + "=\"" + format(*poly) + "\"";
  return out;
}

std::string describe_polygon(const NewtonPolygon& np) {
  std::string out = "[";
  for (std::size_t i = 0; i < np.vertices().size(); ++i) {
    const Point& v = np.vertices()[i];
    out += (i ? " (" : "(") + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
  }
  return out + "]";
}

std::optional<TrialFailure> stretch_trial(TrialRng& rng) {
  const StretchSample s = sample_stretch(rng);
  const std::string inputs =
      describe(s.prime, {{"f", &s.f}, {"g", &s.g}}) + " r=" + std::to_string(s.r);
  try {
    const NewtonPolygon predicted = predict_composition(newton_polygon(s.f, s.prime), newton_polygon(s.g, s.prime));
    const NewtonPolygon actual = newton_polygon(compose(s.f, s.g), s.prime);
    if (predicted == actual) return std::nullopt;
    return TrialFailure{0, 0, inputs, "predicted " + describe_polygon(predicted) + " but got " + describe_polygon(actual)};
  } catch (const Error& e) {
    return TrialFailure{0, 0, inputs, std::string("sampler produced an invalid instance: ") + e.what()};
  }
}

std::optional<TrialFailure> product_trial(TrialRng& rng) {
  const Prime p = random_prime(rng);
  const RandomPolyShape shape{0, 30, -5, 10, 60, false};
  const Polynomial f = random_polynomial(rng, p, shape);
  const Polynomial g = random_polynomial(rng, p, shape);
  const NewtonPolygon predicted = predict_product(newton_polygon(f, p), newton_polygon(g, p));
  const NewtonPolygon actual = newton_polygon(mul(f, g), p);
  if (predicted == actual) return std::nullopt;
  return TrialFailure{0, 0, describe(p, {{"f", &f}, {"g", &g}}),
                      "predicted " + describe_polygon(predicted) + " but got " + describe_polygon(actual)};
}

std::optional<TrialFailure> sum_trial(TrialRng& rng) {
  const Prime p = random_prime(rng);
  const RandomPolyShape shape{0, 20, -5, 10, 60, false};
  for (;;) {
    const auto k = rng.uniform(2, 4);
    std::vector<Polynomial> terms;
    std::vector<NewtonPolygon> polygons;
    Polynomial sum;
    for (std::int64_t i = 0; i < k; ++i) {
      terms.push_back(random_polynomial(rng, p, shape));
      polygons.push_back(newton_polygon(terms.back(), p));
      sum = add(sum, terms.back());
    }
    if (sum.is_zero()) continue;
    if (region_contains(newton_polygon(sum, p), union_lower_bound(polygons))) return std::nullopt;
    std::string inputs = "p=" + p.to_string();
    for (const auto& t : terms) inputs += " f=\"" + format(t) + "\"";
    return TrialFailure{0, 0, inputs, "sum polygon " + describe_polygon(newton_polygon(sum, p)) + " dips below the union hull"};
  }
}

std::optional<TrialFailure> power_purity_trial(TrialRng& rng) {
  const Prime p = random_prime(rng);
  const auto r = rng.uniform(1, 4);
  const auto d = rng.uniform(2, 6);
  const auto k = rng.uniform(1, 5);
  const Polynomial g = random_pr_pure(rng, p, r, d);
  const NewtonPolygon np = newton_polygon(pow(g, static_cast<unsigned long>(k)), p);
  const auto segs = segments(np);
  const BigRational expected(BigInt(static_cast<long>(-r)), BigInt(static_cast<long>(d)));
  if (np.x_offset() == 0 && segs.size() == 1 && segs.front().slope == expected) return std::nullopt;
  return TrialFailure{0, 0, describe(p, {{"g", &g}}) + " k=" + std::to_string(k),
                      "power polygon " + describe_polygon(np) + " is not pure of slope " + expected.to_string()};
}

}  // namespace

std::string to_string(Theorem theorem) {
  switch (theorem) {
    case Theorem::Stretch: return "stretch";
    case Theorem::Product: return "product";
    case Theorem::Sum: return "sum";
    case Theorem::PowerPurity: return "power-purity";
  }
  return "unknown";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : {Theorem::Stretch, Theorem::Product, Theorem::Sum, Theorem::PowerPurity}) {
    if (name == to_string(t)) return t;
  }
  return std::nullopt;
}

TrialRng TrialRng::for_trial(std::uint64_t seed, std::uint64_t trial) {
  return TrialRng(splitmix64(seed ^ splitmix64(trial)));
}

std::int64_t TrialRng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(engine_());
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

BigRational random_unit(TrialRng& rng, const Prime& p) {
  const auto prime_to_p = [&](std::int64_t lo, std::int64_t hi) {
    for (;;) {
      const BigInt v(static_cast<long>(rng.uniform(lo, hi)));
      if (v % p.value() != 0) return v;
    }
  };
  const BigInt num = prime_to_p(1, 30);
  const BigInt den = prime_to_p(1, 9);
  return BigRational(rng.chance(50) ? BigInt(-num) : num, den);
}

Polynomial random_pr_pure(TrialRng& rng, const Prime& p, std::int64_t r, std::int64_t d) {
  std::vector<BigRational> coeffs(static_cast<std::size_t>(d + 1));
  coeffs[0] = p_power(p, r) * random_unit(rng, p);
  coeffs[d] = rng.chance(50) ? BigRational(1) : random_unit(rng, p);
  for (std::int64_t i = 1; i < d; ++i) {
    if (!rng.chance(50)) continue;
    const std::int64_t floor_v = ceil_div(r * (d - i), d);
    coeffs[i] = p_power(p, floor_v + rng.uniform(0, 2)) * random_unit(rng, p);
  }
  return Polynomial(std::move(coeffs));
}

Polynomial random_polynomial(TrialRng& rng, const Prime& p, const RandomPolyShape& shape) {
  const auto degree = rng.uniform(shape.min_degree, shape.max_degree);
  std::vector<BigRational> coeffs(static_cast<std::size_t>(degree + 1));
  for (std::int64_t i = 0; i <= degree; ++i) {
    const bool forced = i == degree || (i == 0 && shape.nonzero_constant);
    if (!forced && !rng.chance(shape.density_percent)) continue;
    coeffs[i] = p_power(p, rng.uniform(shape.min_valuation, shape.max_valuation)) * random_unit(rng, p);
  }
  return Polynomial(std::move(coeffs));
}

StretchSample sample_stretch(TrialRng& rng) {
  const Prime p = random_prime(rng);
  const auto r = rng.uniform(1, 4);
  const auto d = rng.uniform(2, 6);
  Polynomial g = random_pr_pure(rng, p, r, d);
  for (;;) {
    // A random valuation window keeps steep slopes from dominating when r is small.
    const auto lo = rng.uniform(-3, 6);
    const auto hi = std::min<std::int64_t>(6, lo + rng.uniform(0, 9));
    const RandomPolyShape shape{1, 12, lo, hi, 60, true};
    Polynomial f = random_polynomial(rng, p, shape);
    if (max_abs_slope(newton_polygon(f, p)) < BigRational(r)) return {p, r, std::move(f), std::move(g)};
  }
}

std::optional<TrialFailure> run_trial(Theorem theorem, std::uint64_t seed, std::uint64_t trial) {
  TrialRng rng = TrialRng::for_trial(seed, trial);
  std::optional<TrialFailure> failure;
  switch (theorem) {
    case Theorem::Stretch: failure = stretch_trial(rng); break;
    case Theorem::Product: failure = product_trial(rng); break;
    case Theorem::Sum: failure = sum_trial(rng); break;
    case Theorem::PowerPurity: failure = power_purity_trial(rng); break;
  }
  if (failure) {
    failure->trial = trial;
    failure->seed = seed;
  }
  return failure;
}

HarnessSummary run_property(Theorem theorem, const HarnessOptions& options) {
  std::vector<std::optional<TrialFailure>> results(options.trials);
  std::atomic<std::uint64_t> next{0};
  const auto worker = [&] {
    for (std::uint64_t t = next++; t < options.trials; t = next++) results[t] = run_trial(theorem, options.seed, t);
  };
  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  HarnessSummary summary{theorem, options.trials, 0, std::nullopt};
  for (auto& r : results) {
    if (!r) {
      ++summary.passed;
    } else if (!summary.first_failure) {
      summary.first_failure = std::move(r);
    }
  }
  return summary;
}

}  // namespace padic
