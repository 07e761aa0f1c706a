#include <doctest.h>

#include "echkit/core.hpp"

using namespace echkit;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an echkit::Error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("floor and ceiling division are exact for negative numerators") {
  CHECK(floor_div(7, 10) == 0);
  CHECK(floor_div(-7, 10) == -1);
  CHECK(floor_div(-10, 10) == -1);
  CHECK(ceil_div(-7, 10) == 0);
  CHECK(ceil_div(7, 10) == 1);
  CHECK(ceil_div(20, 10) == 2);
}

TEST_CASE("angle validation") {
  const auto a = validate_angle(3, 10, 9);
  CHECK(a.num() == 3);
  CHECK(a.den() == 10);
  CHECK(a.horizon() == 9);

  const auto b = validate_angle(7, 97, 50);
  CHECK(b.horizon() == 50);

  try {
    validate_angle(1, 2, 3);
    FAIL("1/2 with horizon 3 must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IntegerMultiple);
    CHECK(e.detail() == 2);
  }
  CHECK(code_of([] { validate_angle(2, 4, 1); }) == ErrorCode::NonCoprime);
  CHECK(code_of([] { validate_angle(1, 0, 1); }) == ErrorCode::InvalidInput);
}

TEST_CASE("floors stop at the horizon") {
  const auto a = validate_angle(3, 10, 9);
  CHECK(a.floor_mul(4) == 1);
  CHECK(a.ceil_mul(4) == 2);
  CHECK(a.floor_mul(9) == 2);
  CHECK(code_of([&] { a.floor_mul(10); }) == ErrorCode::HorizonExceeded);
}

TEST_CASE("angle shifts, negation and normalization") {
  const auto a = validate_angle(3, 10, 9);
  CHECK(a.shifted(1).num() == -7);
  CHECK(a.negated().num() == -3);
  CHECK(validate_angle(-7, 10, 9).normalized().num() == 3);
  CHECK(validate_angle(23, 10, 9).normalized().num() == 3);
  CHECK(a.str() == "3/10");
  CHECK(parse_angle("3/10", 9) == a);
  CHECK(parse_angle("-3/10", 9) == a.negated());
  CHECK(code_of([] { parse_angle("3:10", 9); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_angle("3/x", 9); }) == ErrorCode::InvalidInput);
}

TEST_CASE("orbit kinds enforce rotation parity") {
  CHECK(Orbit::positive_hyperbolic("h", 2).rotation() == 2);
  CHECK(Orbit::negative_hyperbolic("h", -1).rotation() == -1);
  CHECK(code_of([] { Orbit::positive_hyperbolic("h", 1); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { Orbit::negative_hyperbolic("h", 2); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { Orbit::positive_hyperbolic("h", 0).angle(); }) == ErrorCode::InvalidInput);
}

TEST_CASE("reframing and mirroring orbits") {
  const auto e = Orbit::elliptic("e", validate_angle(3, 10, 9));
  CHECK(e.reframed(1).angle().num() == -7);
  CHECK(e.mirrored().angle().num() == -3);
  CHECK(e.reframed(2).reframed(-2) == e);
  const auto h = Orbit::negative_hyperbolic("h", 1);
  CHECK(h.reframed(1).rotation() == -1);
  CHECK(h.mirrored().rotation() == -1);
  CHECK(e.horizon() == 9);
  CHECK_FALSE(h.horizon().has_value());
}

TEST_CASE("trivializations") {
  const Trivialization ref;
  CHECK(ref.offset("anything") == 0);
  Trivialization strict(std::map<std::string, Int>{{"a", 2}});
  CHECK(strict.offset("a") == 2);
  CHECK_FALSE(strict.covers("b"));
  CHECK(code_of([&] { strict.offset("b"); }) == ErrorCode::MissingOffset);

  Trivialization t1(std::map<std::string, Int>{{"a", 2}, {"b", -1}});
  Trivialization t2(std::map<std::string, Int>{{"a", 3}, {"b", 1}});
  const auto sum = t1 + t2;
  CHECK(sum.offset("a") == 5);
  CHECK(sum.offset("b") == 0);
}

TEST_CASE("orbit sets") {
  const auto e = Orbit::elliptic("e", validate_angle(3, 10, 9));
  const auto h = Orbit::positive_hyperbolic("h", 2);
  const OrbitSet a({{e, 2}, {h, 1}}, Side::Plus);
  CHECK(a.multiplicity("e") == 2);
  CHECK(a.multiplicity("x") == 0);
  CHECK(a.total_multiplicity() == 3);
  CHECK(a.find("h") != nullptr);
  CHECK(code_of([&] { OrbitSet({{e, 1}, {e, 2}}, Side::Plus); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { OrbitSet({{e, 0}}, Side::Plus); }) == ErrorCode::InvalidInput);

  const OrbitSet b({{e, 1}}, Side::Plus);
  const auto p = OrbitSet::product(a, b);
  CHECK(p.multiplicity("e") == 3);
  CHECK(p.multiplicity("h") == 1);
}

TEST_CASE("homology model reduces torsion coordinates") {
  const HomologyModel h({0, 4});
  CHECK(h.reduce({3, 6}) == HomologyModel::Element{3, 2});
  CHECK(h.reduce({-1, -1}) == HomologyModel::Element{-1, 3});
  CHECK(h.add({1, 3}, {1, 3}) == HomologyModel::Element{2, 2});
  CHECK(h.scale(2, {1, 3}) == HomologyModel::Element{2, 2});
  CHECK(h.is_torsion_only({0, 3}));
  CHECK_FALSE(h.is_torsion_only({1, 0}));
}

TEST_CASE("relative classes keep alpha positive and beta negative") {
  RelClass z;
  z.alpha = OrbitSet({}, Side::Minus);
  CHECK(code_of([&] { z.validate(); }) == ErrorCode::InvalidInput);
}
