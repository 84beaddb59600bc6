#include <gtest/gtest.h>

#include <cmath>

#include "padic/error.hpp"
#include "padic/poly.hpp"
#include "padic/render.hpp"
#include "../support/golden.hpp"
#include "../support/svg_decode.hpp"

namespace padic {
namespace {

NewtonPolygon np_of(const char* text, long p) { return newton_polygon(parse_polynomial(text), Prime(p)); }

PlotSpec single(const NewtonPolygon& np, const char* label) {
  PlotSpec spec;
  spec.layers.push_back(make_layer(np, LineStyle::Solid, label));
  return spec;
}

TEST(FormatDecimal, RoundsHalfToEven) {
  EXPECT_EQ(format_decimal(BigRational::parse("1/8")), "0.125");
  EXPECT_EQ(format_decimal(BigRational::parse("1/16")), "0.062");   // 0.0625 -> even
  EXPECT_EQ(format_decimal(BigRational::parse("3/16")), "0.188");   // 0.1875 -> even
  EXPECT_EQ(format_decimal(BigRational::parse("-1/16")), "-0.062");
  EXPECT_EQ(format_decimal(BigRational::parse("2/3")), "0.667");
  EXPECT_EQ(format_decimal(BigRational(7)), "7.000");
  EXPECT_EQ(format_decimal(BigRational::parse("-1/3000")), "0.000");  // no negative zero
  EXPECT_EQ(format_decimal(BigRational::parse("1/3"), 0), "0");
}

TEST(Svg, DeterministicAndDecodable) {
  const PlotSpec spec = single(np_of("5 + x^2 + 125x^6", 5), "NP_5");
  const std::string a = render_svg(spec), b = render_svg(spec);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.starts_with("<?xml version=\"1.0\""));
  EXPECT_NE(a.find("version=\"1.1\""), std::string::npos);

  const auto decoded = testing::decode_svg(a);
  ASSERT_EQ(decoded.polylines_data.size(), 1u);
  const std::vector<std::pair<double, double>> expected{{0, 1}, {2, 0}, {6, 3}};
  ASSERT_EQ(decoded.polylines_data[0].size(), expected.size());
  const Viewport vp = svg_viewport(spec);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    // Screen coordinates are the exact images rounded to 3 places.
    const auto [sx, sy] = vp.to_screen(BigRational(static_cast<long>(expected[i].first)),
                                       BigRational(static_cast<long>(expected[i].second)));
    EXPECT_LE(std::abs(decoded.polylines_screen[0][i].first - std::stod(format_decimal(sx))), 1e-9);
    EXPECT_LE(std::abs(decoded.polylines_screen[0][i].second - std::stod(format_decimal(sy))), 1e-9);
    EXPECT_LE(std::abs(decoded.polylines_screen[0][i].first - sx.raw().get_d()), 0.0005 + 1e-9);
    EXPECT_LE(std::abs(decoded.polylines_screen[0][i].second - sy.raw().get_d()), 0.0005 + 1e-9);
    // Tick-based decoding recovers data coordinates to within quantization.
    EXPECT_NEAR(decoded.polylines_data[0][i].first, expected[i].first, 0.001);
    EXPECT_NEAR(decoded.polylines_data[0][i].second, expected[i].second, 0.001);
  }
}

TEST(Svg, ViewportRoundTrip) {
  const Viewport vp = svg_viewport(single(np_of("5 + x^2 + 125x^6", 5), ""));
  for (long x = 0; x <= 6; ++x) {
    for (long y = -1; y <= 3; ++y) {
      const auto [sx, sy] = vp.to_screen(BigRational(x), BigRational(y));
      const auto [dx, dy] = vp.from_screen(sx.raw().get_d(), sy.raw().get_d());
      EXPECT_NEAR(dx, x, 1e-9);
      EXPECT_NEAR(dy, y, 1e-9);
    }
  }
  // Larger valuations are drawn higher on the page.
  EXPECT_LT(vp.to_screen(BigRational(0), BigRational(3)).second, vp.to_screen(BigRational(0), BigRational(0)).second);
}

TEST(Svg, OverlayStylesDiffer) {
  const Polynomial g = parse_polynomial("x^2 + 2");
  PlotSpec spec;
  spec.layers.push_back(make_layer(newton_polygon(compose(parse_polynomial("2 + x + x^2"), g), Prime(2)), LineStyle::Solid, "f1 o g"));
  spec.layers.push_back(make_layer(newton_polygon(compose(parse_polynomial("4 + 2x + x^3"), g), Prime(2)),
                                   LineStyle::Dashed, "f2 o g"));
  const auto decoded = testing::decode_svg(render_svg(spec));
  ASSERT_EQ(decoded.dash_attributes.size(), 2u);
  EXPECT_EQ(decoded.dash_attributes[0], "");
  EXPECT_FALSE(decoded.dash_attributes[1].empty());
  EXPECT_TRUE(testing::matches_golden("overlay.svg", render_svg(spec)));
}

TEST(Svg, Golden) {
  EXPECT_TRUE(testing::matches_golden("example.svg", render_svg(single(np_of("5 + x^2 + 125x^6", 5), "NP_5(f)"))));
}

TEST(Render, Errors) {
  PlotSpec empty;
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Parse;
  };
  EXPECT_EQ(code([&] { render_svg(empty); }), ErrorCode::EmptySpec);
  EXPECT_EQ(code([&] { render_ascii(empty); }), ErrorCode::EmptySpec);

  PlotSpec mixed;
  mixed.layers.push_back(make_layer(np_of("2 + x", 2), LineStyle::Solid, "a"));
  mixed.layers.push_back(make_layer(np_of("2 + x", 3), LineStyle::Solid, "b"));
  EXPECT_EQ(code([&] { render_svg(mixed); }), ErrorCode::PrimeMismatch);

  PlotSpec far = single(np_of("2 + x", 2), "a");
  far.x_ticks = {0, 50};
  EXPECT_EQ(code([&] { render_svg(far); }), ErrorCode::InvalidArgument);
}

TEST(Ascii, WorkedExample) {
  const std::string art = render_ascii(single(np_of("5 + x^2 + 125x^6", 5), "NP_5(f)"));
  EXPECT_EQ(std::count(art.begin(), art.end(), '*'), 3);
  EXPECT_NE(art.find("-1/2 (len 2)"), std::string::npos);
  EXPECT_NE(art.find("3/4 (len 4)"), std::string::npos);
  EXPECT_TRUE(testing::matches_golden("example.txt", art));
  EXPECT_EQ(art, render_ascii(single(np_of("5 + x^2 + 125x^6", 5), "NP_5(f)")));
}

TEST(Ascii, SingleVertex) {
  const std::string art = render_ascii(single(np_of("x^3", 2), "x^3"));
  EXPECT_EQ(std::count(art.begin(), art.end(), '*'), 1);
  EXPECT_NE(art.find("no segments"), std::string::npos);
}

TEST(Ascii, TwoLayersUseDistinctGlyphs) {
  PlotSpec spec;
  spec.layers.push_back(make_layer(np_of("2 + x^2", 2), LineStyle::Solid, "first"));
  spec.layers.push_back(make_layer(np_of("8 + x^3", 2), LineStyle::Dashed, "second"));
  const std::string art = render_ascii(spec);
  EXPECT_NE(art.find('\\'), std::string::npos);
  EXPECT_NE(art.find('.'), std::string::npos);
  EXPECT_TRUE(testing::matches_golden("two_layers.txt", art));
}

}  // namespace
}  // namespace padic
