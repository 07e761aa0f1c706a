#include <doctest.h>

#include <algorithm>

#include "echkit/partitions.hpp"
#include "echkit/verify.hpp"

using namespace echkit;
using namespace echkit::partitions;

namespace {
const MonodromyAngle t310 = validate_angle(3, 10, 9);
const MonodromyAngle t710 = validate_angle(7, 10, 9);
const Orbit e310 = Orbit::elliptic("e", t310);

std::vector<std::string> sorted_cases(const verify::SweepReport& r) {
  auto v = r.equality_cases;
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("partition canonical form") {
  const Partition p({1, 3, 2});
  CHECK(p.parts() == std::vector<Int>{3, 2, 1});
  CHECK(p.total() == 6);
  CHECK(p.str() == "(3,2,1)");
  CHECK_THROWS_AS(Partition({2, 0}), Error);
}

TEST_CASE("partition counts") {
  CHECK(partitions_of(1).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(10).size() == 42);
  for (const auto& p : partitions_of(7)) CHECK(p.total() == 7);
}

TEST_CASE("outgoing partitions") {
  CHECK(p_out(e310, 3).partition == Partition({1, 1, 1}));
  CHECK(p_out(e310, 4).partition == Partition({4}));
  CHECK(p_out(Orbit::negative_hyperbolic("h", 1), 5).partition == Partition({2, 2, 1}));
  CHECK(p_out(Orbit::negative_hyperbolic("h", 1), 4).partition == Partition({2, 2}));
  CHECK(p_out(Orbit::positive_hyperbolic("h", 0), 3).partition == Partition({1, 1, 1}));
  CHECK_FALSE(p_out(Orbit::positive_hyperbolic("h", 0), 3).path.has_value());
}

TEST_CASE("incoming partitions") {
  CHECK(p_in(e310, 3).partition == Partition({3}));
  CHECK(p_in(e310, 4).partition == Partition({3, 1}));
  CHECK(p_in(Orbit::positive_hyperbolic("h", 4), 4).partition == Partition({1, 1, 1, 1}));
}

TEST_CASE("extremal paths") {
  const auto out = outgoing_path(t310, 4);
  CHECK(out.vertices == std::vector<Point>{{0, 0}, {4, 1}});
  const auto in = incoming_path(t310, 4);
  CHECK(in.corners() == std::vector<Point>{{0, 0}, {3, 1}, {4, 2}});
  // A path through intermediate lattice points is subdivided there.
  const auto three = outgoing_path(t310, 3);
  CHECK(three.vertices == std::vector<Point>{{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  CHECK(three.corners() == std::vector<Point>{{0, 0}, {3, 0}});
}

TEST_CASE("outgoing and incoming partitions depend only on the angle mod 1") {
  for (Int m = 1; m <= 9; ++m) {
    const Orbit shifted = Orbit::elliptic("e", t310.shifted(-2));
    CHECK(p_out(shifted, m).partition == p_out(e310, m).partition);
    CHECK(p_in(shifted, m).partition == p_in(e310, m).partition);
  }
}

TEST_CASE("incoming at theta is outgoing at minus theta") {
  for (Int m = 1; m <= 9; ++m) {
    CHECK(p_in(e310, m).partition == p_out(Orbit::elliptic("e", t310.negated()), m).partition);
  }
}

TEST_CASE("staircase regions") {
  const auto r = staircase(Partition({2, 1}), t710);
  CHECK_FALSE(r.degenerate);
  CHECK(sorted(r.polygon) == sorted({{0, 0}, {2, 1}, {3, 1}, {3, 0}}));

  CHECK(staircase(Partition({1, 1, 1}), t310).degenerate);

  const auto tri = staircase(Partition({3}), t710);
  CHECK(sorted(tri.polygon) == sorted({{0, 0}, {3, 2}, {3, 0}}));
}

TEST_CASE("Pick statistics") {
  CHECK(pick_stats(staircase(Partition({2, 1}), t710)) == PickStats{4, 6, 6});
  CHECK(pick_stats(staircase(Partition({3}), t710)) == PickStats{6, 7, 6});
  CHECK(pick_stats(std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}) == PickStats{2, 4, 4});
  CHECK_THROWS_AS(pick_stats(staircase(Partition({1, 1, 1}), t310)), Error);
}

TEST_CASE("sides of the combinatorial inequality") {
  auto sides = ce1_sides(Partition({1, 1, 1}), t310);
  CHECK(sides.lhs == 0);
  CHECK(sides.rhs == 0);
  CHECK(sides.equality);
  CHECK(sides.matches_outgoing);

  sides = ce1_sides(Partition({3}), t310);
  CHECK(sides.lhs == 0);
  CHECK(sides.rhs == 2);
  CHECK_FALSE(sides.equality);
  CHECK_FALSE(sides.matches_outgoing);

  sides = ce1_sides(Partition({4}), t310);
  CHECK(sides.lhs == 4);
  CHECK(sides.rhs == 4);
  CHECK(sides.equality);
  CHECK(sides.matches_outgoing);
}

TEST_CASE("Pick chain on a worked region") {
  const auto chain = pick_chain(Partition({2, 1}), t710);
  CHECK(chain.all_hold());
  CHECK(chain.ce1_lhs == 4);
  CHECK(chain.stats.twice_area == 4);
  CHECK_THROWS_AS(pick_chain(Partition({1, 1, 1}), t310), Error);
}

TEST_CASE("small ce1 sweeps reproduce the equality sets") {
  auto r = verify::sweep_ce1(4, {t310});
  CHECK(r.ok());
  CHECK(r.instances_checked == 11);

  CHECK(sorted_cases(r) == std::vector<std::string>{"3/10 (1)", "3/10 (1,1)", "3/10 (1,1,1)", "3/10 (4)"});

  r = verify::sweep_ce1(3, {t710});
  CHECK(r.ok());
  CHECK(sorted_cases(r) == std::vector<std::string>{"7/10 (1)", "7/10 (2)", "7/10 (3)"});

  r = verify::sweep_ce1(1, {validate_angle(5, 11, 10)});
  CHECK(r.instances_checked == 1);
  CHECK(r.equality_cases.size() == 1);
}
