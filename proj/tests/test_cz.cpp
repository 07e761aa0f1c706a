#include <doctest.h>

#include "echkit/cz.hpp"

using namespace echkit;

namespace {
const Orbit e310 = Orbit::elliptic("e", validate_angle(3, 10, 9));
Trivialization at(const std::string& id, Int o) {
  Trivialization t;
  t.set(id, o);
  return t;
}
}  // namespace

TEST_CASE("Conley-Zehnder index of iterates") {
  CHECK(cz::cz(e310, {}, 4) == 3);
  CHECK(cz::cz(Orbit::positive_hyperbolic("h", 2), {}, 3) == 6);
  CHECK(cz::cz(e310, at("e", 1), 1) == -1);
  // Changing the framing by one shifts CZ(γ) by 2·1·1.
  CHECK(cz::cz(e310, {}, 1) - cz::cz(e310, at("e", 1), 1) == 2);
  CHECK(cz::cz(Orbit::negative_hyperbolic("h", 1), {}, 5) == 5);
}

TEST_CASE("framing shift law holds for every iterate and offset") {
  const Orbit h = Orbit::negative_hyperbolic("h", -3);
  for (Int k = 1; k <= 9; ++k) {
    for (Int o = -4; o <= 4; ++o) {
      CHECK(cz::cz(e310, at("e", o), k) == cz::cz(e310, {}, k) - 2 * k * o);
      CHECK(cz::cz(h, at("h", o), k) == cz::cz(h, {}, k) - 2 * k * o);
    }
  }
}

TEST_CASE("mu and mu prime") {
  CHECK(cz::mu_total(OrbitSet({{e310, 3}}, Side::Plus), {}) == 3);
  CHECK(cz::mu_total(OrbitSet({{e310, 2}}, Side::Plus), at("e", 1)) == -4);
  CHECK(cz::mu_total(OrbitSet(), {}) == 0);

  CHECK(cz::mu_prime(OrbitSet({{e310, 3}}, Side::Plus), {}) == 2);
  CHECK(cz::mu_prime(OrbitSet({{e310, 1}}, Side::Plus), at("e", 5)) == 0);
  CHECK(cz::mu_prime(OrbitSet({{Orbit::positive_hyperbolic("h", 2), 3}}, Side::Plus), {}) == 6);
}

TEST_CASE("mu zero over ends") {
  using cz::End;
  CHECK(cz::mu_zero({End{Side::Plus, e310, 2}, End{Side::Plus, e310, 1}}, {}) == 2);
  CHECK(cz::mu_zero({End{Side::Plus, e310, 1}, End{Side::Minus, e310, 1}}, at("e", 3)) == 0);
  CHECK(cz::mu_zero({End{Side::Minus, Orbit::negative_hyperbolic("h", 1), 2}}, {}) == -2);
}

TEST_CASE("partial sums and rho") {
  CHECK(cz::cz_partial_sum(e310, 0) == 0);
  CHECK(cz::cz_partial_sum(e310, 4) == 1 + 1 + 1 + 3);
  CHECK(cz::rho(e310, 4) == 1);
  CHECK(cz::rho(Orbit::negative_hyperbolic("h", 1), 3) == 1);
  CHECK(cz::rho(Orbit::negative_hyperbolic("h", -1), 3) == -2);
}

TEST_CASE("missing offsets are reported") {
  Trivialization strict(std::map<std::string, Int>{{"x", 0}});
  CHECK_THROWS_AS(cz::cz(e310, strict, 1), Error);
}
