#include "qindex/newton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qindex {

long Side::d() const {
  if (length() <= 0) throw std::domain_error("Side: nonpositive length");
  if (drop() <= 0) throw std::domain_error("Side::d requires negative slope");
  return std::gcd(length(), drop());
}

std::pair<long, long> Side::slope() const {
  long l = length();
  if (l <= 0) throw std::domain_error("Side: nonpositive length");
  long rise = to.y - from.y;
  long g = std::gcd(std::abs(rise), l);
  if (g == 0) g = 1;
  return {rise / g, l / g};
}

bool Side::contains(long x, long y) const {
  if (x < from.x || x > to.x) return false;
  // (x, y) on the segment iff (y - from.y) * length == rise * (x - from.x).
  return (y - from.y) * length() == (to.y - from.y) * (x - from.x);
}

long Side::floor_value_at(long x) const {
  if (x < from.x || x > to.x) throw std::domain_error("Side::floor_value_at: x outside segment");
  long l = length();
  long num = from.y * l + (to.y - from.y) * (x - from.x);
  // Floor division with positive denominator.
  long q = num / l;
  if (num % l != 0 && num < 0) --q;
  return q;
}

bool Side::integral_at(long x) const {
  if (x < from.x || x > to.x) return false;
  return ((to.y - from.y) * (x - from.x)) % length() == 0;
}

std::string Side::to_string() const {
  std::ostringstream os;
  auto [num, den] = slope();
  os << "(" << from.x << "," << from.y << ")-(" << to.x << "," << to.y << ") slope " << num << "/"
     << den;
  return os.str();
}

std::string NewtonPolygon::to_string() const {
  std::ostringstream os;
  os << "hull:";
  for (const auto& p : hull) os << " (" << p.x << "," << p.y << ")";
  os << "; principal sides: " << principal.size();
  return os.str();
}

namespace {

/// Keep only the lowest point per abscissa, sorted by x.
std::vector<PolygonPoint> dedupe_lowest(std::vector<PolygonPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const PolygonPoint& a, const PolygonPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  std::vector<PolygonPoint> out;
  for (const auto& p : pts) {
    if (!out.empty() && out.back().x == p.x) continue;
    out.push_back(p);
  }
  return out;
}

/// Cross product z-component of (b - a) x (c - a).
long cross(const PolygonPoint& a, const PolygonPoint& b, const PolygonPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

std::vector<PolygonPoint> lower_hull(std::vector<PolygonPoint> pts) {
  auto sorted = dedupe_lowest(std::move(pts));
  if (sorted.size() <= 2) return sorted;
  std::vector<PolygonPoint> hull;
  for (const auto& p : sorted) {
    // Pop while the last three make a non-left turn (keep the lower boundary;
    // collinear middle points are dropped).
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

std::vector<PolygonPoint> lower_hull_giftwrap(std::vector<PolygonPoint> pts) {
  auto sorted = dedupe_lowest(std::move(pts));
  if (sorted.size() <= 1) return sorted;
  std::vector<PolygonPoint> hull;
  PolygonPoint cur = sorted.front();
  hull.push_back(cur);
  const PolygonPoint last = sorted.back();
  while (cur != last) {
    // Among points strictly to the right, pick the one minimizing the slope
    // from cur; ties go to the farthest (skips collinear intermediates).
    bool have = false;
    PolygonPoint best{};
    for (const auto& q : sorted) {
      if (q.x <= cur.x) continue;
      if (!have) {
        best = q;
        have = true;
        continue;
      }
      // slope(q) < slope(best) <=> (q.y-cur.y)*(best.x-cur.x) < (best.y-cur.y)*(q.x-cur.x)
      long lhs = (q.y - cur.y) * (best.x - cur.x);
      long rhs = (best.y - cur.y) * (q.x - cur.x);
      if (lhs < rhs || (lhs == rhs && q.x > best.x)) best = q;
    }
    hull.push_back(best);
    cur = best;
  }
  return hull;
}

NewtonPolygon build_polygon(const std::vector<Valuation>& ordinates) {
  std::vector<PolygonPoint> pts;
  for (size_t i = 0; i < ordinates.size(); ++i) {
    if (ordinates[i].is_finite())
      pts.push_back({static_cast<long>(i), ordinates[i].get()});
  }
  if (pts.empty()) throw std::domain_error("build_polygon: all ordinates infinite");

  NewtonPolygon np;
  np.points = pts;
  np.hull = lower_hull(pts);

  np.min_ordinate = np.hull.front().y;
  for (const auto& p : np.hull) np.min_ordinate = std::min(np.min_ordinate, p.y);

  // Principal part: hull sides strictly left of the first minimal-ordinate
  // vertex; by convexity these are exactly the negative-slope sides.
  size_t end = 0;
  while (np.hull[end].y != np.min_ordinate) ++end;
  np.principal_end_x = np.hull[end].x;
  for (size_t i = 0; i < end; ++i) np.principal.push_back({np.hull[i], np.hull[i + 1]});
  return np;
}

NewtonPolygon principal_polygon(const PhiExpansion& exp, const BigInt& p) {
  std::vector<Valuation> ords;
  ords.reserve(exp.coeff.size());
  for (const auto& a : exp.coeff) ords.push_back(a.val_p(p));
  return build_polygon(ords);
}

NewtonPolygon phi_polygon(const IntPoly& f, const IntPoly& phi, const BigInt& p) {
  return principal_polygon(phi_expand(f, phi), p);
}

long lattice_point_count(const NewtonPolygon& np) {
  if (np.points.empty() || np.points.front().x != 0)
    throw std::domain_error(
        "lattice_point_count: development has no constant term; count undefined");
  long count = 0;
  for (long x = 1; x <= np.principal_end_x; ++x) {
    for (const auto& side : np.principal) {
      if (x < side.from.x || x > side.to.x) continue;
      long fv = side.floor_value_at(x);
      if (fv >= 1) count += fv;
      break;  // shared vertices agree across sides; count each column once
    }
  }
  return count;
}

long polygon_index_contribution(const NewtonPolygon& np, long deg_phi) {
  return deg_phi * lattice_point_count(np);
}

}  // namespace qindex
