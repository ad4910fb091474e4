#pragma once

#include "qindex/exactint.hpp"
#include "qindex/polyring.hpp"

#include <string>
#include <vector>

namespace qindex {

/// Lattice point (abscissa, ordinate); ordinates are p-adic valuations, so
/// points for vanishing coefficients (infinite ordinate) are simply omitted.
struct PolygonPoint {
  long x = 0;
  long y = 0;
  friend bool operator==(const PolygonPoint& a, const PolygonPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const PolygonPoint& a, const PolygonPoint& b) { return !(a == b); }
};

/// One segment of a lower polygon, oriented left to right. For sides of
/// negative slope: length l, height drop h, degree d = gcd(l, h) and
/// ramification e = l / d, with slope = -(h/d)/e in lowest terms.
struct Side {
  PolygonPoint from;
  PolygonPoint to;

  long length() const { return to.x - from.x; }
  long drop() const { return from.y - to.y; }
  long d() const;
  long e() const { return length() / d(); }
  /// Slope as an exact reduced fraction (numerator, positive denominator).
  std::pair<long, long> slope() const;
  bool has_negative_slope() const { return drop() > 0; }
  /// Whether the lattice point (x, y) lies exactly on this segment.
  bool contains(long x, long y) const;
  /// Ordinate of the segment over abscissa x as an exact check helper:
  /// returns floor of the segment value at x (x within [from.x, to.x]).
  long floor_value_at(long x) const;
  /// True when the segment value at x is an integer.
  bool integral_at(long x) const;

  std::string to_string() const;
};

/// Lower Newton polygon of a set of valuation points, plus its principal
/// part (the sides of negative slope, ending at the leftmost point of
/// minimal ordinate).
struct NewtonPolygon {
  std::vector<PolygonPoint> points;  ///< finite input points, sorted by x
  std::vector<PolygonPoint> hull;    ///< lower convex hull vertices
  std::vector<Side> principal;       ///< negative-slope sides, left to right
  long min_ordinate = 0;
  long principal_end_x = 0;  ///< abscissa where the principal part ends

  std::string to_string() const;
};

/// Lower convex hull of points (sorted internally; for equal abscissas only
/// the lowest ordinate matters). Monotone-chain, O(n log n).
std::vector<PolygonPoint> lower_hull(std::vector<PolygonPoint> pts);

/// Independent reference implementation of the same hull (gift-wrapping,
/// O(n^2)); used to cross-check lower_hull.
std::vector<PolygonPoint> lower_hull_giftwrap(std::vector<PolygonPoint> pts);

/// Polygon of the valuation sequence: ordinates[i] is the valuation of the
/// coefficient of phi^i in a phi-adic development. Throws std::domain_error
/// when every ordinate is infinite.
NewtonPolygon build_polygon(const std::vector<Valuation>& ordinates);

/// Polygon of the phi-adic development of f with respect to the Gauss
/// valuation extending val_p.
NewtonPolygon phi_polygon(const IntPoly& f, const IntPoly& phi, const BigInt& p);

/// Polygon of an already-computed development.
NewtonPolygon principal_polygon(const PhiExpansion& exp, const BigInt& p);

/// Independent hull reference (see lower_hull_giftwrap), for cross-checks.
inline std::vector<PolygonPoint> hull_oracle(std::vector<PolygonPoint> pts) {
  return lower_hull_giftwrap(std::move(pts));
}

/// Number of lattice points (x, y), x >= 1, y >= 1, lying on or below the
/// principal part of the polygon. Throws std::domain_error when the
/// development has no point at abscissa 0 (the constant coefficient
/// vanishes, making the count meaningless).
long lattice_point_count(const NewtonPolygon& np);

/// deg(phi) * lattice_point_count: the phi-contribution to the valuation of
/// the index form.
long polygon_index_contribution(const NewtonPolygon& np, long deg_phi);

/// Alias for the weighted count above (weight 1 for a bare polygon).
inline long lattice_index(const NewtonPolygon& np, long deg_phi = 1) {
  return polygon_index_contribution(np, deg_phi);
}

}  // namespace qindex
