#pragma once

// p-adic Newton polygons and how they transform under products, sums and
// composition with p^r-pure polynomials.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padic/error.hpp"
#include "padic/exactnum.hpp"
#include "padic/poly.hpp"

namespace padic {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Vertex chain of the lower convex hull, left to right. Points sharing an
/// x-coordinate are first collapsed to the lowest one; collinear interior
/// points are dropped. Throws Error(EmptyInput).
std::vector<Point> lower_convex_hull(std::span<const Point> points);

struct Segment {
  BigRational slope;
  std::int64_t length = 0;
  Point start;
  Point end;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Lower boundary of NP_p(f): vertices with strictly increasing x and
/// strictly increasing slopes. A monomial has a single vertex.
class NewtonPolygon {
 public:
  /// Throws Error(InvalidArgument) if the chain is empty, not strictly
  /// convex, or starts at negative x.
  NewtonPolygon(Prime prime, std::vector<Point> vertices);

  const Prime& prime() const { return prime_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::int64_t x_offset() const { return vertices_.front().x; }
  std::int64_t top_degree() const { return vertices_.back().x; }

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  Prime prime_;
  std::vector<Point> vertices_;
};

/// LCH of a union of polygons. Consecutive slopes are nondecreasing.
class LowerBoundRegion {
 public:
  explicit LowerBoundRegion(std::vector<Point> vertices);
  explicit LowerBoundRegion(const NewtonPolygon& np) : LowerBoundRegion(np.vertices()) {}

  const std::vector<Point>& vertices() const { return vertices_; }
  std::int64_t x_min() const { return vertices_.front().x; }
  std::int64_t x_max() const { return vertices_.back().x; }

  friend bool operator==(const LowerBoundRegion&, const LowerBoundRegion&) = default;

 private:
  std::vector<Point> vertices_;
};

/// Thrown by predict_composition when a slope of NP(f) is at least r in
/// absolute value.
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(BigRational slope, std::int64_t r);
  const BigRational& slope() const { return slope_; }
  std::int64_t r() const { return r_; }

 private:
  BigRational slope_;
  std::int64_t r_;
};

/// Throws Error(ZeroPolynomial).
NewtonPolygon newton_polygon(const Polynomial& f, const Prime& p);

std::vector<Segment> segments(const NewtonPolygon& np);
std::vector<Segment> segments(std::span<const Point> chain);

/// Largest |slope| over the segments; zero for a single vertex.
BigRational max_abs_slope(const NewtonPolygon& np);

enum class Purity { NotPure, Pure, PrPure, Dumas };

std::string to_string(Purity purity);

/// Classification holds the strongest label that applies. The flags are
/// kept separately because Dumas (read off the height) does not require
/// the p^r-pure normalization ord(a_n) = 0.
struct PurityReport {
  Purity classification = Purity::NotPure;
  std::optional<BigRational> slope;         // when pure
  std::optional<std::int64_t> pr_pure_r;    // ord(a_0) when p^r-pure
  std::optional<std::int64_t> height;       // ord(a_0) - ord(a_n) when pure
  bool dumas = false;                       // pure, height >= 1, gcd(height, deg) = 1
  NewtonPolygon evidence;
};

/// Throws Error(ZeroPolynomial, ConstantPolynomial, ZeroConstantTerm).
PurityReport classify_purity(const Polynomial& f, const Prime& p);

/// r when the polygon is p^r-pure: one segment from (0, r) to (deg, 0), r >= 1.
std::optional<std::int64_t> pr_pure_r(const NewtonPolygon& np);

/// NP(fg) from NP(f) and NP(g): segments merged by slope.
/// Throws Error(PrimeMismatch).
NewtonPolygon predict_product(const NewtonPolygon& a, const NewtonPolygon& b);

/// Throws Error(EmptyInput, PrimeMismatch).
LowerBoundRegion union_lower_bound(std::span<const NewtonPolygon> polygons);

/// True iff every vertex of np is on or above the region's boundary.
/// Throws Error(SpanMismatch) if np's x-range leaves the region's.
bool region_contains(const NewtonPolygon& np, const LowerBoundRegion& region);

/// Vertices (d*i, m) for each vertex (i, m) of np. No hypotheses checked.
NewtonPolygon stretch(const NewtonPolygon& np, std::int64_t d);

/// Predicted NP(f o g) for p^r-pure g with every |slope of NP(f)| < r.
/// Throws Error(PrimeMismatch, ZeroConstantTerm, NotPrPure) or
/// HypothesisViolation.
NewtonPolygon predict_composition(const NewtonPolygon& np_f, const NewtonPolygon& np_g);

struct RootValuation {
  std::optional<BigRational> valuation;  // empty means +infinity (the root 0)
  std::int64_t multiplicity = 0;
  friend bool operator==(const RootValuation&, const RootValuation&) = default;
};

/// One entry (-slope, length) per segment, preceded by (+inf, x_offset)
/// when x_offset > 0.
std::vector<RootValuation> root_valuations(const NewtonPolygon& np);

struct CompositionReport {
  Polynomial composite;
  NewtonPolygon actual;
  bool hypotheses_hold = false;
  std::optional<ErrorCode> violation;
  std::string violation_message;
  std::optional<NewtonPolygon> predicted;
  /// Set only when a prediction exists.
  std::optional<bool> matches;
};

/// Builds f o g, its polygon, and the prediction when the hypotheses hold.
/// Throws Error(ConstantPolynomial, DegreeCapExceeded).
CompositionReport verify_composition(const Polynomial& f, const Polynomial& g, const Prime& p,
                                     std::size_t degree_cap = kDefaultDegreeCap);

}  // namespace padic
