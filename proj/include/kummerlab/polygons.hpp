#pragma once

#include "kummerlab/arith.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace kummerlab {

/// One Hodge number h(i, j) = mult.
struct HodgeNumber {
  long i;
  long j;
  long mult;

  friend bool operator==(const HodgeNumber&, const HodgeNumber&) = default;
};

using PolygonVertex = std::pair<Rational, Rational>;

/// Lower convex piecewise-linear function on [0, terminal_x()], starting at the origin.
class ConvexPolygon {
 public:
  /// Validates the origin start, strictly increasing x and nondecreasing
  /// slopes; collinear interior vertices are dropped.
  explicit ConvexPolygon(std::vector<PolygonVertex> vertices);

  const std::vector<PolygonVertex>& vertices() const { return vertices_; }
  const Rational& terminal_x() const { return vertices_.back().first; }
  /// Slope of each segment.
  std::vector<Rational> slopes() const;
  /// Slopes repeated by segment length; segment lengths must be integers.
  std::vector<Rational> slope_multiset() const;

  std::string str() const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  std::vector<PolygonVertex> vertices_;
};

/// Lower convex hull of (i, v_i) over the finite v_i.  v_0 must be 0.  An
/// infinite v_d throws std::domain_error("polygon of deficient degree")
/// unless allow_short is set.
ConvexPolygon newton_polygon(const std::vector<Valuation>& valuations, bool allow_short = false);

/// Segments of slope i and length h(i, j), by ascending i.
ConvexPolygon hodge_polygon(const std::vector<HodgeNumber>& hodge);

/// Throws std::invalid_argument outside [0, terminal_x].
Rational eval_polygon(const ConvexPolygon& polygon, const Rational& u);

/// P_newton(d+) - P_hodge(d+), signed.
Rational slope_invariant(const ConvexPolygon& newton, const ConvexPolygon& hodge, long dplus);
bool is_admissible(const ConvexPolygon& newton, const ConvexPolygon& hodge, long dplus);

/// Smallest integer abscissa where the polygons differ, if any.
std::optional<long> first_disagreement(const ConvexPolygon& newton, const ConvexPolygon& hodge);
bool is_polygon_ordinary(const ConvexPolygon& newton, const ConvexPolygon& hodge);

/// Whether exactly dplus of the root valuations are negative.
bool critical_root_count_check(const std::vector<Rational>& root_valuations, long dplus);

/// Minimum value of the polygon over its vertices; for a Hodge polygon this
/// is r(M) = sum over negative slopes of slope times length.
Rational polygon_minimum(const ConvexPolygon& polygon);

}  // namespace kummerlab
