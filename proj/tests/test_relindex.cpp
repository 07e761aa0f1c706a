#include <doctest.h>

#include "echkit/relindex.hpp"

using namespace echkit;
using namespace echkit::relindex;

namespace {
const Orbit e310 = Orbit::elliptic("e", validate_angle(3, 10, 9));

Trivialization at(const std::string& id, Int o) {
  Trivialization t;
  t.set(id, o);
  return t;
}

RelClass rel(std::vector<OrbitSet::Entry> a, std::vector<OrbitSet::Entry> b, Int c, Int q,
             std::string name = "Z") {
  RelClass z;
  z.name = std::move(name);
  z.alpha = OrbitSet(std::move(a), Side::Plus);
  z.beta = OrbitSet(std::move(b), Side::Minus);
  z.c_ref = c;
  z.q_ref = q;
  return z;
}
}  // namespace

TEST_CASE("framing laws for c and Q") {
  const auto z = rel({{e310, 2}}, {}, 1, 2);
  CHECK(transform_relclass(z, at("e", 1)) == Framed{3, 6});
  CHECK(transform_relclass(z, {}) == Framed{1, 2});

  const auto cyl = rel({{e310, 1}}, {{e310, 1}}, 0, 7);
  CHECK(transform_relclass(cyl, at("e", 1)) == Framed{0, 7});
  CHECK_THROWS_AS(transform_relclass(z, Trivialization(std::map<std::string, Int>{})), Error);
}

TEST_CASE("ECH index") {
  const auto z = rel({{e310, 2}}, {}, 1, 2);
  CHECK(ech_index(z) == 5);
  CHECK(ech_index(z, at("e", 1)) == 5);
  CHECK(ech_index(rel({{e310, 3}}, {{e310, 3}}, 0, 0)) == 0);
}

TEST_CASE("J indices") {
  CHECK(j_indices(rel({{e310, 2}}, {}, 1, 2)) == JIndices{2, 3, 1});
  CHECK(j_indices(rel({{e310, 2}}, {{e310, 2}}, 0, 0)) == JIndices{0, 0, 0});
  CHECK(j_indices(rel({{Orbit::negative_hyperbolic("h", 1), 5}}, {}, 0, 0)) == JIndices{10, 13, 7});
}

TEST_CASE("size measure") {
  CHECK(size_measure(OrbitSet({{e310, 5}}, Side::Plus)) == 1);
  CHECK(size_measure(OrbitSet({{Orbit::positive_hyperbolic("h", 0), 5}}, Side::Plus)) == 5);
  CHECK(size_measure(OrbitSet({{Orbit::negative_hyperbolic("h", 1), 5}}, Side::Plus)) == 3);
  CHECK(size_measure(OrbitSet({{Orbit::negative_hyperbolic("h", 1), 4}}, Side::Plus)) == 2);
}

TEST_CASE("composition is additive") {
  const auto h = Orbit::positive_hyperbolic("h", 2);
  const auto z = rel({{e310, 2}}, {{h, 1}}, 1, 3, "Z");
  const auto w = rel({{h, 1}}, {}, -2, 1, "W");
  const auto zw = compose(z, w);
  CHECK(ech_index(zw) == ech_index(z) + ech_index(w));
  CHECK(j_indices(zw).j0 == j_indices(z).j0 + j_indices(w).j0);
  CHECK_THROWS_AS(compose(w, z), Error);
}

TEST_CASE("union of classes") {
  auto z = rel({{e310, 1}}, {}, 1, 2, "Z");
  auto z2 = rel({{e310, 2}}, {}, 0, 1, "Y");
  CHECK_THROWS_AS(union_class(z, z2), Error);
  z.q_cross["Y"] = 3;
  const auto u = union_class(z, z2);
  CHECK(u.alpha.multiplicity("e") == 3);
  CHECK(u.q_ref == 2 + 6 + 1);
  z2.q_cross["Z"] = 4;
  CHECK_THROWS_AS(union_class(z, z2), Error);
}

TEST_CASE("quadratic union") {
  CHECK(quadratic_union(2, 2, 0) == 4);
  CHECK(quadratic_union(0, 0, 3) == 6);
  CHECK(quadratic_union(1, 4, -2) == 1);
}

TEST_CASE("index ambiguity") {
  const auto z = rel({{e310, 2}}, {}, 0, 0, "Z");
  AmbiguityInput zero{{1}, {1}, {0}, {{1}}};
  CHECK(index_ambiguity(z, z, zero) == 0);

  // ⟨c₁ + 2PD(Γ), Z₁ − Z₂⟩ = 2 + 2 = 4.
  AmbiguityInput in{{2}, {1}, {1}, {{1}}};
  const auto z1 = rel({{e310, 2}}, {}, 2, 2, "Z1");
  CHECK(index_ambiguity(z1, z, in) == 4);
  CHECK(index_ambiguity(z1, z, in, IndexKind::J) == 0);

  AmbiguityInput in2{{2}, {3}, {1}, {{1}}};
  const auto z3 = rel({{e310, 2}}, {}, 2, 6, "Z3");
  CHECK(index_ambiguity(z3, z, in2) == 8);
  CHECK(index_ambiguity(z3, z, in2, IndexKind::J) == 4);
  CHECK_THROWS_AS(index_ambiguity(z1, z, in2), Error);
}

TEST_CASE("divisibility") {
  const HomologyModel z2({0, 0});
  CHECK(divisibility({2, 4}, z2) == 2);
  CHECK(divisibility({0, 0}, z2) == 0);
  const HomologyModel mixed({0, 6});
  CHECK(divisibility({0, 3}, mixed) == 0);
  CHECK(divisibility({-6, 1}, mixed) == 6);
}

TEST_CASE("Q from nice representatives") {
  NiceRepData one;
  one.ends.push_back({"e", Side::Plus, 0, 2, 0, 0});
  CHECK(q_from_nice_rep(one) == -2);
  CHECK(q_from_nice_rep(NiceRepData{}) == 0);

  NiceRepData shared;
  shared.ends.push_back({"e", Side::Plus, 1, 1, 0, 0});
  shared.shared["e"] = SharedOrbit{2, 0};
  CHECK(q_from_nice_rep(shared) == -6);

  NiceRepData bad;
  bad.ends.push_back({"e", Side::Plus, 0, 0, 1, 0});
  bad.ends.push_back({"e", Side::Minus, 0, 0, 2, 0});
  try {
    q_from_nice_rep(bad);
    FAIL("mismatched trivializations must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MismatchedTrivializations);
  }
}

TEST_CASE("absolute versus relative grading") {
  CHECK(check_abs_vs_rel(NiceRepData{}, 0));

  NiceRepData d;
  d.ends.push_back({"e", Side::Plus, 0, 1, 0, 0});
  d.c_conormal = 2;
  const auto sides = abs_vs_rel_sides(d, 3);
  CHECK(sides.lhs == 2);
  CHECK(sides.rhs == 2);
  CHECK(check_abs_vs_rel(d, 3));

  auto off = d;
  off.ends[0].eta_hat = 2;
  CHECK_FALSE(check_abs_vs_rel(off, 3));
  CHECK_FALSE(check_abs_vs_rel(d, 4));
}

TEST_CASE("absolute gradings") {
  GradingContext ctx;
  const auto empty = abs_grading(ctx, OrbitSet(), IndexValue::make(0, 0), {});
  CHECK(empty.gamma.empty());
  CHECK(empty.offset == IndexValue{0, 0});

  ctx.orbit_class["e"] = {};
  const OrbitSet a({{e310, 2}}, Side::Plus);
  const auto flat = abs_grading(ctx, a, IndexValue::make(0, 0), {{"e", 0}});
  CHECK(flat.offset.value == 2);

  // One fusion raises P by one and the braid writhe by one: same class.
  const auto fused = abs_grading(ctx, a, p_fused(IndexValue::make(0, 0), 1), {{"e", 1}});
  CHECK(fused == flat);

  // Reframing by one moves P by 2m = 4, the writhe by −m(m−1) = −2 and μ by −6.
  const auto tau = at("e", 1);
  const auto moved = abs_grading(ctx, a, p_reframed(IndexValue::make(0, 0), a, {}, tau), {{"e", -2}}, tau);
  CHECK(moved == flat);
}

TEST_CASE("spin-c part and modulus of gradings") {
  GradingContext ctx;
  ctx.h = HomologyModel({0});
  ctx.c1 = {2};
  ctx.orbit_class["e"] = {1};
  const OrbitSet a({{e310, 1}}, Side::Plus);
  CHECK(ctx.modulus_for(ctx.homology_of(a), IndexKind::I) == 4);
  CHECK(ctx.modulus_for(ctx.homology_of(a), IndexKind::J) == 0);

  const auto g = abs_grading(ctx, a, IndexValue::make(5, 4), {});
  CHECK(g.gamma == HomologyModel::Element{1});
  CHECK(g.offset == IndexValue{2, 4});
  CHECK(abs_grading(ctx, a, IndexValue::make(0, 0), {}, {}, IndexKind::J).gamma ==
        HomologyModel::Element{-1});
  try {
    abs_grading(ctx, a, IndexValue::make(0, 3), {});
    FAIL("wrong modulus must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModulusMismatch);
  }
}

TEST_CASE("index values reduce into the canonical range") {
  CHECK(IndexValue::make(-1, 4) == IndexValue{3, 4});
  CHECK(IndexValue::make(-1, 0) == IndexValue{-1, 0});
  CHECK_THROWS_AS(IndexValue::make(0, -2), Error);
}
