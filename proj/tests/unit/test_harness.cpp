#include <gtest/gtest.h>

#include "padic/harness.hpp"
#include "padic/polygon.hpp"

namespace padic {
namespace {

TEST(TrialRng, DeterministicStreams) {
  TrialRng a = TrialRng::for_trial(7, 3), b = TrialRng::for_trial(7, 3), c = TrialRng::for_trial(7, 4);
  std::vector<std::int64_t> xa, xb, xc;
  for (int i = 0; i < 50; ++i) {
    xa.push_back(a.uniform(-1000, 1000));
    xb.push_back(b.uniform(-1000, 1000));
    xc.push_back(c.uniform(-1000, 1000));
  }
  EXPECT_EQ(xa, xb);
  EXPECT_NE(xa, xc);
}

TEST(TrialRng, UniformStaysInRange) {
  TrialRng rng(1);
  std::array<int, 5> hits{};
  for (int i = 0; i < 10000; ++i) {
    const auto v = rng.uniform(3, 7);
    ASSERT_GE(v, 3);
    ASSERT_LE(v, 7);
    ++hits[static_cast<std::size_t>(v - 3)];
  }
  for (int h : hits) EXPECT_GT(h, 1500);
}

TEST(Sampler, StretchSamplesSatisfyHypotheses) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    TrialRng rng = TrialRng::for_trial(5, t);
    const StretchSample s = sample_stretch(rng);
    const NewtonPolygon npg = newton_polygon(s.g, s.prime);
    ASSERT_EQ(pr_pure_r(npg), s.r);
    EXPECT_GE(*s.g.degree(), 2u);
    EXPECT_LE(*s.g.degree(), 6u);
    EXPECT_LE(*s.f.degree(), 12u);
    EXPECT_FALSE(s.f.coefficient(0).is_zero());
    EXPECT_LT(max_abs_slope(newton_polygon(s.f, s.prime)), BigRational(s.r));
  }
}

TEST(Harness, TheoremNames) {
  for (auto t : {Theorem::Stretch, Theorem::Product, Theorem::Sum, Theorem::PowerPurity}) {
    EXPECT_EQ(parse_theorem(to_string(t)), t);
  }
  EXPECT_FALSE(parse_theorem("pythagoras").has_value());
}

TEST(Harness, AllLawsHold) {
  for (auto t : {Theorem::Stretch, Theorem::Product, Theorem::Sum, Theorem::PowerPurity}) {
    const auto summary = run_property(t, {200, 42, 2});
    EXPECT_EQ(summary.passed, 200u) << to_string(t);
    EXPECT_FALSE(summary.first_failure.has_value());
  }
}

TEST(Harness, ResultsIndependentOfJobs) {
  for (std::uint64_t t = 0; t < 40; ++t) {
    EXPECT_FALSE(run_trial(Theorem::Product, 9, t).has_value());
  }
  const auto one = run_property(Theorem::Sum, {120, 9, 1});
  const auto four = run_property(Theorem::Sum, {120, 9, 4});
  EXPECT_EQ(one.passed, four.passed);
  EXPECT_EQ(one.trials, four.trials);
}

}  // namespace
}  // namespace padic
