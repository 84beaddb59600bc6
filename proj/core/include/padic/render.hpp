#pragma once

// Deterministic ASCII and SVG pictures of Newton polygons, in the style of
// textbook figures: vertices, edges, slope labels and axis ticks.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic/exactnum.hpp"
#include "padic/polygon.hpp"

namespace padic {

enum class LineStyle { Solid, Dashed, Bold };

std::string to_string(LineStyle style);

struct PlotLayer {
  std::vector<Point> vertices;
  LineStyle style = LineStyle::Solid;
  std::string label;
  std::optional<Prime> prime;  // regions carry none
};

PlotLayer make_layer(const NewtonPolygon& np, LineStyle style, std::string label);
PlotLayer make_layer(const LowerBoundRegion& region, LineStyle style, std::string label);

struct PlotSpec {
  std::vector<PlotLayer> layers;
  /// Empty selects ticks automatically.
  std::vector<std::int64_t> x_ticks;
  std::vector<std::int64_t> y_ticks;
  int svg_width = 480;
  int svg_height = 320;
  int ascii_columns = 72;
  int ascii_rows = 20;
};

/// Data-space window and the affine map onto SVG pixels (y flipped so that
/// larger valuations sit higher on the page).
struct Viewport {
  std::int64_t x_min = 0;
  std::int64_t x_max = 1;
  std::int64_t y_min = 0;
  std::int64_t y_max = 1;
  int width = 0;
  int height = 0;
  int margin = 0;

  std::pair<BigRational, BigRational> to_screen(const BigRational& x, const BigRational& y) const;
  std::pair<double, double> from_screen(double sx, double sy) const;
  BigRational x_scale() const;
  BigRational y_scale() const;
};

/// Throws Error(EmptySpec, PrimeMismatch, InvalidArgument).
Viewport svg_viewport(const PlotSpec& spec);

/// Fixed-point text of q rounded half-to-even at `places` decimals.
std::string format_decimal(const BigRational& q, int places = 3);

/// Throws Error(EmptySpec, PrimeMismatch, InvalidArgument).
std::string render_ascii(const PlotSpec& spec);
/// Throws Error(EmptySpec, PrimeMismatch, InvalidArgument).
std::string render_svg(const PlotSpec& spec);

}  // namespace padic
