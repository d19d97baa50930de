#include "kummerlab/polygons.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kummerlab {

namespace {

// Cross product sign of (b - a) x (c - a); <= 0 means b is on or above segment a-c.
Rational cross(const PolygonVertex& a, const PolygonVertex& b, const PolygonVertex& c) {
  return (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
}

void require_same_span(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.terminal_x() != b.terminal_x())
    throw std::invalid_argument("polygon spans differ: [0, " + a.terminal_x().str() + "] vs [0, " +
                                b.terminal_x().str() + "]");
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<PolygonVertex> vertices) {
  if (vertices.empty() || !vertices.front().first.is_zero() || !vertices.front().second.is_zero())
    throw std::invalid_argument("polygon must start at (0, 0)");
  for (size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i].first <= vertices[i - 1].first) throw std::invalid_argument("polygon abscissae must increase");
  for (const auto& v : vertices) {
    while (vertices_.size() >= 2) {
      const Rational turn = cross(vertices_[vertices_.size() - 2], vertices_.back(), v);
      if (turn < Rational(0)) throw std::invalid_argument("polygon slopes must be nondecreasing");
      if (!turn.is_zero()) break;
      vertices_.pop_back();
    }
    vertices_.push_back(v);
  }
}

std::vector<Rational> ConvexPolygon::slopes() const {
  std::vector<Rational> out;
  for (size_t i = 1; i < vertices_.size(); ++i)
    out.push_back((vertices_[i].second - vertices_[i - 1].second) / (vertices_[i].first - vertices_[i - 1].first));
  return out;
}

std::vector<Rational> ConvexPolygon::slope_multiset() const {
  std::vector<Rational> out;
  const auto s = slopes();
  for (size_t i = 1; i < vertices_.size(); ++i) {
    const Rational len = vertices_[i].first - vertices_[i - 1].first;
    if (!len.is_integer()) throw std::domain_error("segment of non-integral length " + len.str());
    for (long n = len.num().get_si(); n > 0; --n) out.push_back(s[i - 1]);
  }
  return out;
}

std::string ConvexPolygon::str() const {
  std::string out;
  for (const auto& [x, y] : vertices_) {
    if (!out.empty()) out += ",";
    out += "(" + x.str() + "," + y.str() + ")";
  }
  return out;
}

ConvexPolygon newton_polygon(const std::vector<Valuation>& valuations, bool allow_short) {
  if (valuations.empty() || valuations.front() != Valuation(0))
    throw std::invalid_argument("Newton polygon needs v_0 = 0");
  if (valuations.back().is_infinite() && !allow_short) throw std::domain_error("polygon of deficient degree");

  // Lower hull by a monotone chain over the finite points.
  std::vector<PolygonVertex> hull;
  for (size_t i = 0; i < valuations.size(); ++i) {
    if (valuations[i].is_infinite()) continue;
    const PolygonVertex pt{Rational(static_cast<long>(i)), Rational(valuations[i].value())};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= Rational(0)) hull.pop_back();
    hull.push_back(pt);
  }
  return ConvexPolygon(std::move(hull));
}

ConvexPolygon hodge_polygon(const std::vector<HodgeNumber>& hodge) {
  std::map<long, long> by_slope;
  for (const auto& h : hodge) {
    if (h.mult < 1) throw std::invalid_argument("Hodge multiplicities must be >= 1");
    by_slope[h.i] += h.mult;
  }
  std::vector<PolygonVertex> v{{Rational(0), Rational(0)}};
  for (const auto& [slope, len] : by_slope)
    v.emplace_back(v.back().first + Rational(len), v.back().second + Rational(slope * len));
  return ConvexPolygon(std::move(v));
}

Rational eval_polygon(const ConvexPolygon& polygon, const Rational& u) {
  const auto& v = polygon.vertices();
  if (u < Rational(0) || u > polygon.terminal_x())
    throw std::invalid_argument("abscissa " + u.str() + " outside [0, " + polygon.terminal_x().str() + "]");
  for (size_t i = 1; i < v.size(); ++i) {
    if (u <= v[i].first) {
      const Rational slope = (v[i].second - v[i - 1].second) / (v[i].first - v[i - 1].first);
      return v[i - 1].second + slope * (u - v[i - 1].first);
    }
  }
  return v.front().second;  // single-vertex polygon, u = 0
}

Rational slope_invariant(const ConvexPolygon& newton, const ConvexPolygon& hodge, long dplus) {
  require_same_span(newton, hodge);
  if (dplus < 0 || Rational(dplus) > newton.terminal_x())
    throw std::invalid_argument("d+ = " + std::to_string(dplus) + " outside [0, " + newton.terminal_x().str() + "]");
  return eval_polygon(newton, Rational(dplus)) - eval_polygon(hodge, Rational(dplus));
}

bool is_admissible(const ConvexPolygon& newton, const ConvexPolygon& hodge, long dplus) {
  return slope_invariant(newton, hodge, dplus).is_zero();
}

std::optional<long> first_disagreement(const ConvexPolygon& newton, const ConvexPolygon& hodge) {
  require_same_span(newton, hodge);
  const Rational& end = newton.terminal_x();
  for (long x = 0; Rational(x) <= end; ++x)
    if (eval_polygon(newton, Rational(x)) != eval_polygon(hodge, Rational(x))) return x;
  return std::nullopt;
}

bool is_polygon_ordinary(const ConvexPolygon& newton, const ConvexPolygon& hodge) {
  return !first_disagreement(newton, hodge).has_value();
}

bool critical_root_count_check(const std::vector<Rational>& root_valuations, long dplus) {
  const auto negative = std::count_if(root_valuations.begin(), root_valuations.end(),
                                      [](const Rational& v) { return v < Rational(0); });
  return negative == dplus;
}

Rational polygon_minimum(const ConvexPolygon& polygon) {
  Rational best(0);
  for (const auto& [x, y] : polygon.vertices()) best = std::min(best, y);
  return best;
}

}  // namespace kummerlab
