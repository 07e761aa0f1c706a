#pragma once

// Incoming/outgoing partitions from extremal lattice paths, and the
// staircase-region / Pick machinery behind the sharp combinatorial
// inequality Σ max(q_i⌊q_jθ⌋, q_j⌊q_iθ⌋) ≤ 2Σ⌊kθ⌋ − Σ⌊q_iθ⌋ + m − n.

#include <compare>
#include <optional>
#include <vector>

#include "echkit/core.hpp"

namespace echkit::partitions {

struct Point {
  Int x = 0;
  Int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Multiset of positive integers, stored in descending order.
class Partition {
 public:
  Partition() = default;
  /// Sorts; throws InvalidInput on non-positive parts.
  explicit Partition(std::vector<Int> parts);

  const std::vector<Int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  Int total() const noexcept { return total_; }
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Int> parts_;
  Int total_ = 0;
};

/// Every partition of m, each in canonical (descending) form, in reverse
/// lexicographic order.
std::vector<Partition> partitions_of(Int m);

enum class PathShape { Concave, Convex };

/// Polygonal lattice path from (0,0), subdivided at every lattice point it
/// passes through.
struct LatticePath {
  std::vector<Point> vertices;
  PathShape shape = PathShape::Concave;

  /// Vertices where the slope actually changes, plus both endpoints.
  std::vector<Point> corners() const;
};

/// Highest concave path from (0,0) to (m, ⌊mθ⌋) staying below y = θx.
LatticePath outgoing_path(const MonodromyAngle& theta, Int m);
/// Lowest convex path from (0,0) to (m, ⌈mθ⌉) staying above y = θx.
LatticePath incoming_path(const MonodromyAngle& theta, Int m);

/// Horizontal displacements of the lattice-point-to-lattice-point segments.
Partition partition_of_path(const LatticePath& path);

struct PartitionResult {
  Partition partition;
  std::optional<LatticePath> path;  // elliptic orbits only
};

PartitionResult p_out(const Orbit& orbit, Int m);
PartitionResult p_in(const Orbit& orbit, Int m);

/// Region bounded by the ordered path through Σ_{i≤j}(q_i, ⌊q_iθ⌋), the
/// horizontal segment from the origin and the closing vertical segment.
struct StaircaseRegion {
  std::vector<Int> ordered_parts;  // by ⌊qθ⌋/q descending
  std::vector<Point> path;         // j = 0..n partial sums
  std::vector<Point> polygon;      // closed boundary, no repeated vertices
  bool degenerate = false;         // every ⌊q_iθ⌋ = 0
};

StaircaseRegion staircase(const Partition& qs, const MonodromyAngle& theta);

struct PickStats {
  Int twice_area = 0;
  Int lattice_points = 0;   // L, closed region
  Int boundary_points = 0;  // B
  friend bool operator==(const PickStats&, const PickStats&) = default;
};

/// Shoelace area and lattice-point counts by direct enumeration. Throws
/// DegenerateRegion for zero area and InconsistentData if 2A ≠ 2L − B − 2
/// (the polygon was not simple).
PickStats pick_stats(const StaircaseRegion& region);
PickStats pick_stats(const std::vector<Point>& polygon);

struct Ce1Sides {
  Int lhs = 0;
  Int rhs = 0;
  bool equality = false;
  /// qs equals P^out_θ(m).
  bool matches_outgoing = false;
};

Ce1Sides ce1_sides(const Partition& qs, const MonodromyAngle& theta);

/// The four links of the Pick argument for one non-degenerate staircase.
struct PickChain {
  PickStats stats;
  Int ce1_lhs = 0;
  Int lattice_bound = 0;   // 1 + Σ_{k≤m}(⌊kθ⌋ + 1)
  Int boundary_bound = 0;  // m + n + Σ⌊q_iθ⌋
  bool same_image_as_outgoing = false;
  bool no_divisible_edge = false;

  bool area_matches_lhs() const { return ce1_lhs == stats.twice_area; }
  bool pick_identity() const {
    return stats.twice_area == 2 * stats.lattice_points - stats.boundary_points - 2;
  }
  bool lattice_bound_holds() const { return stats.lattice_points <= lattice_bound; }
  bool lattice_equality_matches() const {
    return (stats.lattice_points == lattice_bound) == same_image_as_outgoing;
  }
  bool boundary_bound_holds() const { return stats.boundary_points >= boundary_bound; }
  bool boundary_equality_matches() const {
    return (stats.boundary_points == boundary_bound) == no_divisible_edge;
  }
  bool all_hold() const {
    return area_matches_lhs() && pick_identity() && lattice_bound_holds() &&
           lattice_equality_matches() && boundary_bound_holds() && boundary_equality_matches();
  }
};

/// Throws DegenerateRegion when every ⌊q_iθ⌋ vanishes.
PickChain pick_chain(const Partition& qs, const MonodromyAngle& theta);

}  // namespace echkit::partitions
