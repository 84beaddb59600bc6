#include "padic/polygon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace padic {

namespace {

__extension__ typedef __int128 Wide;

// > 0 when o -> a -> b turns counterclockwise.
Wide cross(const Point& o, const Point& a, const Point& b) {
  return Wide(a.x - o.x) * Wide(b.y - o.y) - Wide(a.y - o.y) * Wide(b.x - o.x);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("polygon coordinate overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("polygon coordinate overflow");
  return out;
}

BigRational slope_of(const Point& a, const Point& b) {
  return BigRational(BigInt(static_cast<long>(b.y - a.y)), BigInt(static_cast<long>(b.x - a.x)));
}

void require_same_prime(const Prime& a, const Prime& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::PrimeMismatch, "polygons over " + a.to_string() + " and " + b.to_string());
  }
}

// Strictly increasing x and convex turns; `strict` forbids collinear vertices.
void validate_chain(const std::vector<Point>& v, bool strict) {
  if (v.empty()) throw Error(ErrorCode::InvalidArgument, "empty vertex chain");
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].x <= v[i - 1].x) {
      throw Error(ErrorCode::InvalidArgument, "vertex x-coordinates must strictly increase");
    }
  }
  for (std::size_t i = 2; i < v.size(); ++i) {
    const Wide turn = cross(v[i - 2], v[i - 1], v[i]);
    if (strict ? turn <= 0 : turn < 0) {
      throw Error(ErrorCode::InvalidArgument, "vertex chain is not convex");
    }
  }
}

}  // namespace

std::vector<Point> lower_convex_hull(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points to hull");
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  // After sorting, the first point of each x-run has the least y.
  sorted.erase(std::unique(sorted.begin(), sorted.end(),
                           [](const Point& a, const Point& b) { return a.x == b.x; }),
               sorted.end());
  std::vector<Point> hull;
  hull.reserve(sorted.size());
  for (const Point& pt : sorted) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  return hull;
}

NewtonPolygon::NewtonPolygon(Prime prime, std::vector<Point> vertices)
    : prime_(std::move(prime)), vertices_(std::move(vertices)) {
  validate_chain(vertices_, true);
  if (vertices_.front().x < 0) throw Error(ErrorCode::InvalidArgument, "negative x-offset");
}

LowerBoundRegion::LowerBoundRegion(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  validate_chain(vertices_, false);
}

HypothesisViolation::HypothesisViolation(BigRational slope, std::int64_t r)
    : Error(ErrorCode::HypothesisViolation,
            "|slope " + slope.to_string() + "| >= r=" + std::to_string(r)),
      slope_(std::move(slope)),
      r_(r) {}

NewtonPolygon newton_polygon(const Polynomial& f, const Prime& p) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial has no Newton polygon");
  std::vector<Point> points;
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    points.push_back({static_cast<std::int64_t>(i), ord(c[i], p).value()});
  }
  return NewtonPolygon(p, lower_convex_hull(points));
}

std::vector<Segment> segments(std::span<const Point> chain) {
  std::vector<Segment> out;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    out.push_back({slope_of(chain[i - 1], chain[i]), chain[i].x - chain[i - 1].x, chain[i - 1], chain[i]});
  }
  return out;
}

std::vector<Segment> segments(const NewtonPolygon& np) { return segments(std::span(np.vertices())); }

BigRational max_abs_slope(const NewtonPolygon& np) {
  BigRational best;
  for (const auto& s : segments(np)) best = std::max(best, abs(s.slope));
  return best;
}

std::string to_string(Purity purity) {
  switch (purity) {
    case Purity::NotPure: return "not pure";
    case Purity::Pure: return "pure";
    case Purity::PrPure: return "p^r-pure";
    case Purity::Dumas: return "p^r-Dumas";
  }
  return "unknown";
}

std::optional<std::int64_t> pr_pure_r(const NewtonPolygon& np) {
  const auto& v = np.vertices();
  if (v.size() != 2 || v.front().x != 0 || v.back().y != 0 || v.front().y < 1) return std::nullopt;
  return v.front().y;
}

PurityReport classify_purity(const Polynomial& f, const Prime& p) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot classify the zero polynomial");
  if (f.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "purity needs a nonconstant polynomial");
  if (f.coefficient(0).is_zero()) throw Error(ErrorCode::ZeroConstantTerm, "f(0) = 0");

  PurityReport report{Purity::NotPure, std::nullopt, std::nullopt, std::nullopt, false, newton_polygon(f, p)};
  const auto& v = report.evidence.vertices();
  if (v.size() != 2) return report;

  report.classification = Purity::Pure;
  report.slope = slope_of(v.front(), v.back());
  report.height = v.front().y - v.back().y;
  report.pr_pure_r = pr_pure_r(report.evidence);
  if (report.pr_pure_r) report.classification = Purity::PrPure;

  const std::int64_t degree = v.back().x;
  if (*report.height >= 1 && std::gcd(*report.height, degree) == 1) {
    report.dumas = true;
    report.classification = Purity::Dumas;
  }
  return report;
}

NewtonPolygon predict_product(const NewtonPolygon& a, const NewtonPolygon& b) {
  require_same_prime(a.prime(), b.prime());
  struct Edge {
    std::int64_t dx;
    std::int64_t dy;
  };
  std::vector<Edge> edges;
  for (const auto* np : {&a, &b}) {
    const auto& v = np->vertices();
    for (std::size_t i = 1; i < v.size(); ++i) edges.push_back({v[i].x - v[i - 1].x, v[i].y - v[i - 1].y});
  }
  const auto less = [](const Edge& e, const Edge& f) { return Wide(e.dy) * f.dx < Wide(f.dy) * e.dx; };
  std::stable_sort(edges.begin(), edges.end(), less);

  std::vector<Point> vertices{{checked_add(a.x_offset(), b.x_offset()),
                               checked_add(a.vertices().front().y, b.vertices().front().y)}};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Point next{checked_add(vertices.back().x, edges[i].dx), checked_add(vertices.back().y, edges[i].dy)};
    // Equal slopes coalesce: drop the collinear vertex between them.
    if (i > 0 && !less(edges[i - 1], edges[i])) vertices.pop_back();
    vertices.push_back(next);
  }
  return NewtonPolygon(a.prime(), std::move(vertices));
}

LowerBoundRegion union_lower_bound(std::span<const NewtonPolygon> polygons) {
  if (polygons.empty()) throw Error(ErrorCode::EmptyInput, "no polygons to unite");
  std::vector<Point> points;
  for (const auto& np : polygons) {
    require_same_prime(polygons.front().prime(), np.prime());
    points.insert(points.end(), np.vertices().begin(), np.vertices().end());
  }
  return LowerBoundRegion(lower_convex_hull(points));
}

bool region_contains(const NewtonPolygon& np, const LowerBoundRegion& region) {
  if (np.x_offset() < region.x_min() || np.top_degree() > region.x_max()) {
    throw Error(ErrorCode::SpanMismatch, "polygon spans [" + std::to_string(np.x_offset()) + ", " +
                                             std::to_string(np.top_degree()) + "], region spans [" +
                                             std::to_string(region.x_min()) + ", " +
                                             std::to_string(region.x_max()) + "]");
  }
  const auto& r = region.vertices();
  for (const Point& pt : np.vertices()) {
    // First region vertex at or right of pt.x.
    const auto hi = std::lower_bound(r.begin(), r.end(), pt.x, [](const Point& q, std::int64_t x) { return q.x < x; });
    if (hi->x == pt.x) {
      if (pt.y < hi->y) return false;
      continue;
    }
    const Point& lo = *(hi - 1);
    // pt on or above the line lo -> hi.
    if (Wide(pt.y - lo.y) * Wide(hi->x - lo.x) < Wide(hi->y - lo.y) * Wide(pt.x - lo.x)) return false;
  }
  return true;
}

NewtonPolygon stretch(const NewtonPolygon& np, std::int64_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "stretch factor must be positive");
  std::vector<Point> vertices;
  vertices.reserve(np.vertices().size());
  for (const Point& v : np.vertices()) vertices.push_back({checked_mul(d, v.x), v.y});
  return NewtonPolygon(np.prime(), std::move(vertices));
}

NewtonPolygon predict_composition(const NewtonPolygon& np_f, const NewtonPolygon& np_g) {
  require_same_prime(np_f.prime(), np_g.prime());
  if (np_f.x_offset() != 0) throw Error(ErrorCode::ZeroConstantTerm, "f(0) = 0");
  const auto r = pr_pure_r(np_g);
  if (!r) throw Error(ErrorCode::NotPrPure, "g is not p^r-pure at " + np_g.prime().to_string());
  for (const auto& s : segments(np_f)) {
    if (abs(s.slope) >= BigRational(*r)) throw HypothesisViolation(s.slope, *r);
  }
  return stretch(np_f, np_g.top_degree());
}

std::vector<RootValuation> root_valuations(const NewtonPolygon& np) {
  std::vector<RootValuation> out;
  if (np.x_offset() > 0) out.push_back({std::nullopt, np.x_offset()});
  for (const auto& s : segments(np)) out.push_back({-s.slope, s.length});
  return out;
}

CompositionReport verify_composition(const Polynomial& f, const Polynomial& g, const Prime& p,
                                     std::size_t degree_cap) {
  if (f.is_constant() || g.is_constant()) {
    throw Error(ErrorCode::ConstantPolynomial, "verify_composition needs nonconstant f and g");
  }
  Polynomial composite = compose(f, g, degree_cap);
  NewtonPolygon actual = newton_polygon(composite, p);
  CompositionReport report{std::move(composite), std::move(actual), false, std::nullopt, {}, std::nullopt, std::nullopt};
  try {
    report.predicted = predict_composition(newton_polygon(f, p), newton_polygon(g, p));
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::ZeroConstantTerm:
      case ErrorCode::NotPrPure:
      case ErrorCode::HypothesisViolation:
        report.violation = e.code();
        report.violation_message = e.what();
        return report;
      default:
        throw;
    }
  }
  report.hypotheses_hold = true;
  report.matches = *report.predicted == report.actual;
  return report;
}

}  // namespace padic
