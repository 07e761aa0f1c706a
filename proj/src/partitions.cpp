#include "echkit/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "echkit/cz.hpp"

namespace echkit::partitions {

namespace {

Int cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Int iabs(Int v) { return v < 0 ? -v : v; }

// Monotone-chain hull over points sorted by x. `upper` keeps clockwise
// turns only; collinear points are dropped so the result lists corners.
std::vector<Point> hull(const std::vector<Point>& pts, bool upper) {
  std::vector<Point> h;
  for (const Point& p : pts) {
    while (h.size() >= 2) {
      const Int c = cross(h[h.size() - 2], h.back(), p);
      if ((upper && c >= 0) || (!upper && c <= 0)) {
        h.pop_back();
      } else {
        break;
      }
    }
    h.push_back(p);
  }
  return h;
}

std::vector<Point> subdivide(const std::vector<Point>& corners) {
  std::vector<Point> out;
  if (corners.empty()) return out;
  out.push_back(corners.front());
  for (std::size_t i = 1; i < corners.size(); ++i) {
    const Int dx = corners[i].x - corners[i - 1].x;
    const Int dy = corners[i].y - corners[i - 1].y;
    const Int g = std::gcd(iabs(dx), iabs(dy));
    for (Int s = 1; s <= g; ++s) {
      out.push_back({corners[i - 1].x + dx / g * s, corners[i - 1].y + dy / g * s});
    }
  }
  return out;
}

Partition table_partition(const Orbit& orbit, Int m) {
  if (orbit.kind() == OrbitKind::PositiveHyperbolic) {
    return Partition(std::vector<Int>(static_cast<std::size_t>(m), 1));
  }
  std::vector<Int> parts(static_cast<std::size_t>(m / 2), 2);
  if (m % 2 == 1) parts.push_back(1);
  return Partition(std::move(parts));
}

void require_positive(Int m) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "multiplicity must be positive");
}

}  // namespace

// Partition

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  for (Int p : parts_) {
    if (p < 1) throw Error(ErrorCode::InvalidInput, "partition parts must be positive");
    total_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(Int m) {
  std::vector<Partition> out;
  if (m < 0) return out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int remaining, Int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (Int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      self(self, remaining - k, k);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

// Paths

std::vector<Point> LatticePath::corners() const {
  std::vector<Point> out;
  for (const Point& p : vertices) {
    while (out.size() >= 2 && cross(out[out.size() - 2], out.back(), p) == 0) out.pop_back();
    out.push_back(p);
  }
  return out;
}

LatticePath outgoing_path(const MonodromyAngle& theta, Int m) {
  require_positive(m);
  std::vector<Point> tops;
  tops.reserve(static_cast<std::size_t>(m + 1));
  for (Int x = 0; x <= m; ++x) tops.push_back({x, x == 0 ? 0 : theta.floor_mul(x)});
  return {subdivide(hull(tops, true)), PathShape::Concave};
}

LatticePath incoming_path(const MonodromyAngle& theta, Int m) {
  require_positive(m);
  std::vector<Point> bottoms;
  bottoms.reserve(static_cast<std::size_t>(m + 1));
  for (Int x = 0; x <= m; ++x) bottoms.push_back({x, x == 0 ? 0 : theta.ceil_mul(x)});
  return {subdivide(hull(bottoms, false)), PathShape::Convex};
}

Partition partition_of_path(const LatticePath& path) {
  std::vector<Int> parts;
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    parts.push_back(path.vertices[i].x - path.vertices[i - 1].x);
  }
  return Partition(std::move(parts));
}

PartitionResult p_out(const Orbit& orbit, Int m) {
  require_positive(m);
  if (orbit.is_hyperbolic()) return {table_partition(orbit, m), std::nullopt};
  LatticePath path = outgoing_path(orbit.angle(), m);
  Partition part = partition_of_path(path);
  return {std::move(part), std::move(path)};
}

PartitionResult p_in(const Orbit& orbit, Int m) {
  require_positive(m);
  if (orbit.is_hyperbolic()) return {table_partition(orbit, m), std::nullopt};
  LatticePath path = incoming_path(orbit.angle(), m);
  Partition part = partition_of_path(path);
  return {std::move(part), std::move(path)};
}

// Staircase and Pick

StaircaseRegion staircase(const Partition& qs, const MonodromyAngle& theta) {
  if (qs.size() == 0) throw Error(ErrorCode::InvalidInput, "staircase needs a non-empty partition");
  struct Step {
    Int q;
    Int h;
  };
  std::vector<Step> steps;
  for (Int q : qs.parts()) steps.push_back({q, theta.floor_mul(q)});
  if (qs.total() > theta.horizon()) {
    throw Error(ErrorCode::HorizonExceeded, "partition total exceeds angle horizon", qs.total());
  }
  // ⌊q_1θ⌋/q_1 ≥ ⌊q_2θ⌋/q_2 ≥ ...; ties broken by larger q first.
  std::stable_sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) {
    const Int lhs = a.h * b.q;
    const Int rhs = b.h * a.q;
    if (lhs != rhs) return lhs > rhs;
    return a.q > b.q;
  });

  StaircaseRegion r;
  r.degenerate = std::all_of(steps.begin(), steps.end(), [](const Step& s) { return s.h == 0; });
  Point cur{0, 0};
  r.path.push_back(cur);
  for (const Step& s : steps) {
    r.ordered_parts.push_back(s.q);
    cur = {cur.x + s.q, cur.y + s.h};
    r.path.push_back(cur);
  }
  r.polygon = r.path;
  const Point foot{cur.x, 0};
  if (!(foot == cur)) r.polygon.push_back(foot);
  return r;
}

PickStats pick_stats(const std::vector<Point>& polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) throw Error(ErrorCode::DegenerateRegion, "polygon has fewer than three vertices");
  Int twice = 0;
  Int min_x = polygon[0].x, max_x = polygon[0].x, min_y = polygon[0].y, max_y = polygon[0].y;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
    min_x = std::min(min_x, a.x);
    max_x = std::max(max_x, a.x);
    min_y = std::min(min_y, a.y);
    max_y = std::max(max_y, a.y);
  }
  twice = iabs(twice);
  if (twice == 0) throw Error(ErrorCode::DegenerateRegion, "region has zero area");

  auto on_segment = [](const Point& a, const Point& b, const Point& p) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
  };

  PickStats s;
  s.twice_area = twice;
  for (Int x = min_x; x <= max_x; ++x) {
    for (Int y = min_y; y <= max_y; ++y) {
      const Point p{x, y};
      bool boundary = false;
      bool inside = false;
      for (std::size_t i = 0; i < n; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        if (on_segment(a, b, p)) {
          boundary = true;
          break;
        }
        // Half-open crossing rule on edges straddling the horizontal ray.
        if ((a.y > y) != (b.y > y)) {
          const Int c = cross(a, b, p);
          if ((b.y > a.y) ? (c > 0) : (c < 0)) inside = !inside;
        }
      }
      if (boundary) {
        ++s.boundary_points;
        ++s.lattice_points;
      } else if (inside) {
        ++s.lattice_points;
      }
    }
  }
  if (s.twice_area != 2 * s.lattice_points - s.boundary_points - 2) {
    throw Error(ErrorCode::InconsistentData, "Pick identity fails; polygon is not simple");
  }
  return s;
}

PickStats pick_stats(const StaircaseRegion& region) {
  if (region.degenerate) throw Error(ErrorCode::DegenerateRegion, "staircase region has zero area");
  return pick_stats(region.polygon);
}

Ce1Sides ce1_sides(const Partition& qs, const MonodromyAngle& theta) {
  const Int m = qs.total();
  const Int n = static_cast<Int>(qs.size());
  if (m > theta.horizon()) {
    throw Error(ErrorCode::HorizonExceeded, "partition total exceeds angle horizon", m);
  }
  Ce1Sides out;
  for (Int qi : qs.parts()) {
    for (Int qj : qs.parts()) {
      out.lhs += std::max(qi * theta.floor_mul(qj), qj * theta.floor_mul(qi));
    }
  }
  Int floor_parts = 0;
  for (Int q : qs.parts()) floor_parts += theta.floor_mul(q);
  out.rhs = 2 * sum_to(m, [&](Int k) { return theta.floor_mul(k); }) - floor_parts + m - n;
  out.equality = out.lhs == out.rhs;
  if (m >= 1) out.matches_outgoing = partition_of_path(outgoing_path(theta, m)) == qs;
  return out;
}

PickChain pick_chain(const Partition& qs, const MonodromyAngle& theta) {
  if (theta.num() <= 0) {
    throw Error(ErrorCode::InvalidInput, "lattice counting bounds need a positive angle");
  }
  const StaircaseRegion region = staircase(qs, theta);
  PickChain c;
  c.stats = pick_stats(region);
  c.ce1_lhs = ce1_sides(qs, theta).lhs;

  const Int m = qs.total();
  const Int n = static_cast<Int>(qs.size());
  c.lattice_bound = 1 + sum_to(m, [&](Int k) { return theta.floor_mul(k) + 1; });
  Int floor_parts = 0;
  c.no_divisible_edge = true;
  for (Int q : qs.parts()) {
    const Int h = theta.floor_mul(q);
    floor_parts += h;
    if (std::gcd(q, iabs(h)) != 1) c.no_divisible_edge = false;
  }
  c.boundary_bound = m + n + floor_parts;

  LatticePath stair{region.path, PathShape::Concave};
  c.same_image_as_outgoing = stair.corners() == outgoing_path(theta, m).corners();
  return c;
}

}  // namespace echkit::partitions
