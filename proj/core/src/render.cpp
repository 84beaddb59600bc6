#include "padic/render.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

namespace {

constexpr int kSvgMargin = 40;

struct Bounds {
  std::int64_t x_min, x_max, y_min, y_max;
};

BigInt round_half_even(const BigRational& q) {
  BigInt floor_q;
  mpz_fdiv_q(floor_q.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
  const BigRational frac = q - BigRational(floor_q);
  const auto cmp = frac <=> BigRational(BigInt(1), BigInt(2));
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(floor_q.get_mpz_t()))) floor_q += 1;
  return floor_q;
}

long to_long(const BigInt& n) { return n.get_si(); }

BigRational rat(std::int64_t v) { return BigRational(static_cast<long>(v)); }

// Validates the PlotSpec and returns the data window, which always contains the
// origin so both axes are visible.
Bounds validate(const PlotSpec& spec) {
  if (spec.layers.empty()) throw Error(ErrorCode::EmptySpec, "nothing to plot");
  std::optional<Prime> prime;
  Bounds b{0, 0, 0, 0};
  for (const auto& layer : spec.layers) {
    if (layer.vertices.empty()) throw Error(ErrorCode::InvalidArgument, "layer '" + layer.label + "' has no vertices");
    if (layer.prime) {
      if (prime && !(*prime == *layer.prime)) {
        throw Error(ErrorCode::PrimeMismatch, "layers use primes " + prime->to_string() + " and " + layer.prime->to_string());
      }
      prime = layer.prime;
    }
    for (const Point& v : layer.vertices) {
      b.x_min = std::min(b.x_min, v.x);
      b.x_max = std::max(b.x_max, v.x);
      b.y_min = std::min(b.y_min, v.y);
      b.y_max = std::max(b.y_max, v.y);
    }
  }
  if (b.x_max == b.x_min) b.x_max += 1;
  if (b.y_max == b.y_min) b.y_max += 1;
  for (auto t : spec.x_ticks) {
    if (t < b.x_min || t > b.x_max) throw Error(ErrorCode::InvalidArgument, "x tick " + std::to_string(t) + " outside the plot");
  }
  for (auto t : spec.y_ticks) {
    if (t < b.y_min || t > b.y_max) throw Error(ErrorCode::InvalidArgument, "y tick " + std::to_string(t) + " outside the plot");
  }
  if (spec.svg_width <= 2 * kSvgMargin || spec.svg_height <= 2 * kSvgMargin || spec.ascii_columns < 16 ||
      spec.ascii_rows < 4) {
    throw Error(ErrorCode::InvalidArgument, "output size too small");
  }
  return b;
}

// Multiples of 1, 2 or 5 times a power of ten, at most ten of them.
std::vector<std::int64_t> auto_ticks(std::int64_t lo, std::int64_t hi) {
  std::int64_t step = 1;
  for (std::int64_t decade = 1;; decade *= 10) {
    bool found = false;
    for (std::int64_t m : {1, 2, 5}) {
      if ((hi - lo) / (m * decade) <= 10) {
        step = m * decade;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  std::vector<std::int64_t> ticks;
  std::int64_t first = lo >= 0 ? (lo + step - 1) / step * step : -((-lo) / step * step);
  for (std::int64_t t = first; t <= hi; t += step) ticks.push_back(t);
  return ticks;
}

char glyph(LineStyle style, int slope_sign) {
  switch (style) {
    case LineStyle::Dashed: return '.';
    case LineStyle::Bold: return '#';
    case LineStyle::Solid: break;
  }
  return slope_sign < 0 ? '\\' : slope_sign > 0 ? '/' : '_';
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_string(LineStyle style) {
  switch (style) {
    case LineStyle::Solid: return "solid";
    case LineStyle::Dashed: return "dashed";
    case LineStyle::Bold: return "bold";
  }
  return "solid";
}

PlotLayer make_layer(const NewtonPolygon& np, LineStyle style, std::string label) {
  return {np.vertices(), style, std::move(label), np.prime()};
}

PlotLayer make_layer(const LowerBoundRegion& region, LineStyle style, std::string label) {
  return {region.vertices(), style, std::move(label), std::nullopt};
}

std::string format_decimal(const BigRational& q, int places) {
  const BigInt scale = pow(BigInt(10), static_cast<unsigned long>(places));
  BigInt scaled = round_half_even(q * BigRational(scale));
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = negative ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

BigRational Viewport::x_scale() const { return BigRational(width - 2 * margin) / rat(x_max - x_min); }
BigRational Viewport::y_scale() const { return BigRational(height - 2 * margin) / rat(y_max - y_min); }

std::pair<BigRational, BigRational> Viewport::to_screen(const BigRational& x, const BigRational& y) const {
  return {BigRational(margin) + (x - rat(x_min)) * x_scale(),
          BigRational(height - margin) - (y - rat(y_min)) * y_scale()};
}

std::pair<double, double> Viewport::from_screen(double sx, double sy) const {
  const double kx = x_scale().raw().get_d();
  const double ky = y_scale().raw().get_d();
  return {static_cast<double>(x_min) + (sx - margin) / kx, static_cast<double>(y_min) + (height - margin - sy) / ky};
}

Viewport svg_viewport(const PlotSpec& spec) {
  const Bounds b = validate(spec);
  return {b.x_min, b.x_max, b.y_min, b.y_max, spec.svg_width, spec.svg_height, kSvgMargin};
}

std::string render_ascii(const PlotSpec& spec) {
  const Bounds b = validate(spec);
  const std::int64_t x_span = b.x_max - b.x_min;
  const std::int64_t y_span = b.y_max - b.y_min;
  const auto y_ticks = spec.y_ticks.empty() ? auto_ticks(b.y_min, b.y_max) : spec.y_ticks;
  const auto x_ticks = spec.x_ticks.empty() ? auto_ticks(b.x_min, b.x_max) : spec.x_ticks;

  std::size_t label_width = 1;
  for (auto t : y_ticks) label_width = std::max(label_width, std::to_string(t).size());
  const std::int64_t cols = std::min<std::int64_t>(spec.ascii_columns - static_cast<int>(label_width) - 2, x_span * 6 + 1);
  const std::int64_t rows = std::min<std::int64_t>(spec.ascii_rows, y_span * 2 + 1);

  const auto col_of = [&](const BigRational& x) {
    return to_long(round_half_even((x - rat(b.x_min)) * rat(cols - 1) / rat(x_span)));
  };
  const auto row_of = [&](const BigRational& y) {
    return to_long(round_half_even((y - rat(b.y_min)) * rat(rows - 1) / rat(y_span)));
  };

  // grid[row][col], row 0 at the bottom.
  std::vector<std::string> grid(rows, std::string(cols, ' '));
  for (const auto& layer : spec.layers) {
    for (const auto& seg : segments(std::span(layer.vertices))) {
      const long c0 = col_of(rat(seg.start.x));
      const long c1 = col_of(rat(seg.end.x));
      for (long c = c0; c <= c1; ++c) {
        const BigRational x = rat(b.x_min) + BigRational(c) * rat(x_span) / rat(cols - 1);
        const BigRational y = rat(seg.start.y) + seg.slope * (x - rat(seg.start.x));
        grid[row_of(y)][c] = glyph(layer.style, seg.slope.sign());
      }
    }
  }
  for (const auto& layer : spec.layers) {
    for (const Point& v : layer.vertices) grid[row_of(rat(v.y))][col_of(rat(v.x))] = '*';
  }

  std::ostringstream out;
  for (std::int64_t r = rows - 1; r >= 0; --r) {
    std::string label;
    for (auto t : y_ticks) {
      if (row_of(rat(t)) == r) label = std::to_string(t);
    }
    out << std::string(label_width - label.size(), ' ') << label << " |" << grid[r] << '\n';
  }
  out << std::string(label_width + 1, ' ') << '+' << std::string(cols, '-') << '\n';
  std::string tick_line(label_width + 2 + cols + 8, ' ');
  for (auto t : x_ticks) {
    const std::string text = std::to_string(t);
    const std::size_t at = label_width + 2 + col_of(rat(t));
    tick_line.replace(at, text.size(), text);
  }
  while (!tick_line.empty() && tick_line.back() == ' ') tick_line.pop_back();
  out << tick_line << '\n';

  for (const auto& layer : spec.layers) {
    out << "  " << glyph(layer.style, -1) << ' ' << (layer.label.empty() ? "(unlabeled)" : layer.label) << " ["
        << to_string(layer.style) << "]";
    const auto segs = segments(std::span(layer.vertices));
    if (segs.empty()) {
      out << " no segments";
    } else {
      out << " slopes";
      for (const auto& s : segs) out << ' ' << s.slope << " (len " << s.length << ")";
    }
    out << '\n';
  }
  return out.str();
}

std::string render_svg(const PlotSpec& spec) {
  const Viewport vp = svg_viewport(spec);
  const auto x_ticks = spec.x_ticks.empty() ? auto_ticks(vp.x_min, vp.x_max) : spec.x_ticks;
  const auto y_ticks = spec.y_ticks.empty() ? auto_ticks(vp.y_min, vp.y_max) : spec.y_ticks;
  const auto screen = [&](const BigRational& x, const BigRational& y) {
    const auto [sx, sy] = vp.to_screen(x, y);
    return std::pair{format_decimal(sx), format_decimal(sy)};
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << vp.width << "\" height=\""
      << vp.height << "\" viewBox=\"0 0 " << vp.width << ' ' << vp.height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << vp.width << "\" height=\"" << vp.height << "\" fill=\"white\"/>\n";

  out << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\" font-family=\"serif\" font-size=\"11\">\n";
  {
    const auto [x0, y0] = screen(rat(vp.x_min), BigRational(0));
    const auto [x1, y1] = screen(rat(vp.x_max), BigRational(0));
    out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1 << "\"/>\n";
    const auto [x2, y2] = screen(BigRational(0), rat(vp.y_min));
    const auto [x3, y3] = screen(BigRational(0), rat(vp.y_max));
    out << "<line x1=\"" << x2 << "\" y1=\"" << y2 << "\" x2=\"" << x3 << "\" y2=\"" << y3 << "\"/>\n";
  }
  for (auto t : x_ticks) {
    const auto [sx, sy] = vp.to_screen(rat(t), BigRational(0));
    out << "<line x1=\"" << format_decimal(sx) << "\" y1=\"" << format_decimal(sy - BigRational(3)) << "\" x2=\""
        << format_decimal(sx) << "\" y2=\"" << format_decimal(sy + BigRational(3)) << "\"/>\n"
        << "<text x=\"" << format_decimal(sx) << "\" y=\"" << format_decimal(sy + BigRational(15))
        << "\" stroke=\"none\" text-anchor=\"middle\">" << t << "</text>\n";
  }
  for (auto t : y_ticks) {
    const auto [sx, sy] = vp.to_screen(BigRational(0), rat(t));
    out << "<line x1=\"" << format_decimal(sx - BigRational(3)) << "\" y1=\"" << format_decimal(sy) << "\" x2=\""
        << format_decimal(sx + BigRational(3)) << "\" y2=\"" << format_decimal(sy) << "\"/>\n"
        << "<text x=\"" << format_decimal(sx - BigRational(6)) << "\" y=\"" << format_decimal(sy + BigRational(4))
        << "\" stroke=\"none\" text-anchor=\"end\">" << t << "</text>\n";
  }
  out << "</g>\n";

  for (std::size_t i = 0; i < spec.layers.size(); ++i) {
    const auto& layer = spec.layers[i];
    out << "<g id=\"layer-" << i << "\" class=\"" << to_string(layer.style) << "\">\n";
    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << (layer.style == LineStyle::Bold ? "2.5" : "1")
        << '"';
    if (layer.style == LineStyle::Dashed) out << " stroke-dasharray=\"6,4\"";
    out << " points=\"";
    for (std::size_t k = 0; k < layer.vertices.size(); ++k) {
      const auto [sx, sy] = screen(rat(layer.vertices[k].x), rat(layer.vertices[k].y));
      out << (k ? " " : "") << sx << ',' << sy;
    }
    out << "\"/>\n";
    for (const Point& v : layer.vertices) {
      const auto [sx, sy] = screen(rat(v.x), rat(v.y));
      out << "<circle cx=\"" << sx << "\" cy=\"" << sy << "\" r=\"3\" fill=\"black\"/>\n";
    }
    for (const auto& s : segments(std::span(layer.vertices))) {
      const BigRational mx = (rat(s.start.x) + rat(s.end.x)) / BigRational(2);
      const BigRational my = (rat(s.start.y) + rat(s.end.y)) / BigRational(2);
      const auto [sx, sy] = vp.to_screen(mx, my);
      out << "<text x=\"" << format_decimal(sx + BigRational(4)) << "\" y=\"" << format_decimal(sy - BigRational(4))
          << "\" font-family=\"serif\" font-size=\"11\">" << s.slope << "</text>\n";
    }
    out << "</g>\n";
  }

  for (std::size_t i = 0; i < spec.layers.size(); ++i) {
    const auto& layer = spec.layers[i];
    out << "<text x=\"" << vp.width - kSvgMargin << "\" y=\"" << 16 + 14 * static_cast<int>(i)
        << "\" font-family=\"serif\" font-size=\"11\" text-anchor=\"end\">" << xml_escape(layer.label) << " ("
        << to_string(layer.style) << ")</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace padic
