// Property tests driven by small hand-rolled generators. Each generator is
// seeded so failures reproduce.

#include <doctest.h>

#include <numeric>
#include <random>

#include "echkit/braid.hpp"
#include "echkit/curves.hpp"
#include "echkit/cz.hpp"
#include "echkit/partitions.hpp"
#include "echkit/relindex.hpp"

using namespace echkit;

namespace {

using Rng = std::mt19937_64;

Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

const std::vector<Int> kPrimes = {11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

MonodromyAngle any_angle(Rng& rng) {
  const Int q = kPrimes[uniform(rng, 0, static_cast<Int>(kPrimes.size()) - 1)];
  Int p = uniform(rng, 1, q - 1) + q * uniform(rng, -2, 2);
  return validate_angle(p, q, q - 1);
}

Orbit any_orbit(Rng& rng, const std::string& id) {
  switch (uniform(rng, 0, 2)) {
    case 0: return Orbit::elliptic(id, any_angle(rng));
    case 1: return Orbit::positive_hyperbolic(id, 2 * uniform(rng, -3, 3));
    default: return Orbit::negative_hyperbolic(id, 2 * uniform(rng, -3, 3) + 1);
  }
}

partitions::Partition any_partition(Rng& rng, Int m) {
  std::vector<Int> parts;
  while (m > 0) {
    const Int q = uniform(rng, 1, m);
    parts.push_back(q);
    m -= q;
  }
  return partitions::Partition(parts);
}

// Partition numbers by Euler's pentagonal recurrence, independent of the
// enumeration under test.
Int partition_number(Int n) {
  std::vector<Int> p(n + 1, 0);
  p[0] = 1;
  for (Int k = 1; k <= n; ++k) {
    for (Int j = 1;; ++j) {
      const Int g1 = j * (3 * j - 1) / 2;
      const Int g2 = j * (3 * j + 1) / 2;
      if (g1 > k) break;
      const Int sign = j % 2 == 1 ? 1 : -1;
      p[k] += sign * p[k - g1];
      if (g2 <= k) p[k] += sign * p[k - g2];
    }
  }
  return p[n];
}

}  // namespace

TEST_CASE("partition enumeration matches the pentagonal recurrence") {
  for (Int n = 1; n <= 20; ++n) CHECK(static_cast<Int>(partitions::partitions_of(n).size()) == partition_number(n));
}

TEST_CASE("CZ framing law on random orbits") {
  Rng rng(101);
  for (int t = 0; t < 500; ++t) {
    const Orbit o = any_orbit(rng, "g");
    const Int k = uniform(rng, 1, 10);
    const Int off = uniform(rng, -5, 5);
    Trivialization tau;
    tau.set("g", off);
    CHECK(cz::cz(o, tau, k) == cz::cz(o, {}, k) - 2 * k * off);
    CHECK(cz::cz(o.reframed(off), {}, k) == cz::cz(o, tau, k));
    // Hyperbolic CZ is linear in k; elliptic CZ is odd.
    if (o.is_hyperbolic()) CHECK(cz::cz(o, {}, k) == k * o.rotation());
    else CHECK(cz::cz(o, {}, k) % 2 != 0);
  }
}

TEST_CASE("index invariance on random classes and offsets") {
  Rng rng(202);
  for (int t = 0; t < 300; ++t) {
    RelClass z;
    std::vector<OrbitSet::Entry> a, b;
    for (int i = 0; i < uniform(rng, 0, 3); ++i) a.push_back({any_orbit(rng, "a" + std::to_string(i)), uniform(rng, 1, 6)});
    for (int i = 0; i < uniform(rng, 0, 3); ++i) b.push_back({any_orbit(rng, "b" + std::to_string(i)), uniform(rng, 1, 6)});
    z.alpha = OrbitSet(a, Side::Plus);
    z.beta = OrbitSet(b, Side::Minus);
    z.c_ref = uniform(rng, -10, 10);
    z.q_ref = uniform(rng, -10, 10);
    Trivialization tau(std::map<std::string, Int>{});
    for (const auto& e : a) tau.set(e.orbit.id(), uniform(rng, -4, 4));
    for (const auto& e : b) tau.set(e.orbit.id(), uniform(rng, -4, 4));
    CHECK(relindex::ech_index(z, tau) == relindex::ech_index(z));
    CHECK(relindex::j_indices(z, tau) == relindex::j_indices(z));
    // I − J0 = 2c_τ + Σ CZ_τ of the top iterates of α minus those of β.
    Int top = 0;
    for (const auto& e : z.alpha.entries()) top += cz::cz(e.orbit, tau, e.mult);
    for (const auto& e : z.beta.entries()) top -= cz::cz(e.orbit, tau, e.mult);
    CHECK(relindex::ech_index(z, tau) - relindex::j_indices(z, tau).j0 ==
          2 * relindex::transform_relclass(z, tau).c + top);
  }
}

TEST_CASE("combinatorial inequality on random partitions") {
  Rng rng(303);
  for (int t = 0; t < 2000; ++t) {
    const auto theta = any_angle(rng);
    const Int m = uniform(rng, 1, 10);
    const auto qs = any_partition(rng, m);
    const auto s = partitions::ce1_sides(qs, theta);
    CHECK(s.lhs <= s.rhs);
    CHECK(s.equality == (s.lhs == s.rhs));
    CHECK(s.equality == s.matches_outgoing);
    const auto region = partitions::staircase(qs, theta.normalized());
    if (!region.degenerate) {
      const auto chain = partitions::pick_chain(qs, theta.normalized());
      CHECK(chain.all_hold());
    }
  }
}

TEST_CASE("duality and extremal path shape on random angles") {
  Rng rng(404);
  for (int t = 0; t < 500; ++t) {
    const auto theta = any_angle(rng);
    const Int m = uniform(rng, 1, 10);
    const Orbit o = Orbit::elliptic("g", theta);
    const auto pin = partitions::p_in(o, m);
    CHECK(pin.partition == partitions::p_out(Orbit::elliptic("g", theta.negated()), m).partition);
    const auto pout = partitions::p_out(o, m);
    CHECK(pout.partition.total() == m);
    const auto& v = pout.path->vertices;
    CHECK(v.back() == partitions::Point{m, theta.floor_mul(m)});
    // Every vertex of the outgoing path lies on or below y = θx.
    for (const auto& p : v) CHECK(p.y * theta.den() <= p.x * theta.num());
    const auto& w = pin.path->vertices;
    CHECK(w.back() == partitions::Point{m, theta.ceil_mul(m)});
    for (const auto& p : w) CHECK(p.y * theta.den() >= p.x * theta.num());
  }
}

TEST_CASE("braid reframing composes additively") {
  Rng rng(505);
  for (int t = 0; t < 300; ++t) {
    const Int m = uniform(rng, 1, 5);
    braid::BraidWord b;
    b.m = m;
    // Pure braid: squares of generators keep every strand in place.
    for (int i = 0; i < uniform(rng, 0, 12); ++i) {
      const Int pos = uniform(rng, 0, m - 1);
      const int sign = uniform(rng, 0, 1) ? 1 : -1;
      b.letters.push_back({pos, sign});
      b.letters.push_back({pos, sign});
    }
    for (Int s = 1; s <= m; ++s) b.components["c" + std::to_string(uniform(rng, 0, 1))].push_back(s);
    REQUIRE_NOTHROW(braid::validate(b));
    const auto invs = braid::braid_invariants(b);
    const auto counts = braid::strand_counts(b);
    const Int d1 = uniform(rng, -3, 3);
    const Int d2 = uniform(rng, -3, 3);
    CHECK(braid::reframe(braid::reframe(invs, counts, d1), counts, d2) == braid::reframe(invs, counts, d1 + d2));
    CHECK(braid::reframe(invs, counts, 0) == invs);

    // A positive full twist on all strands adds m(m−1) to the total writhe.
    Int before = 0;
    for (const auto& [name, w] : invs.w) before += w;
    for (const auto& [key, l] : invs.link) before += 2 * l;
    const auto twisted = braid::braid_invariants(braid::insert_full_twist(b, true));
    Int after = 0;
    for (const auto& [name, w] : twisted.w) after += w;
    for (const auto& [key, l] : twisted.link) after += 2 * l;
    CHECK(after - before == m * (m - 1));
  }
}

TEST_CASE("self intersection is an integer exactly when ind + h is even") {
  for (Int g = 0; g <= 3; ++g) {
    for (Int ind = -3; ind <= 5; ++ind) {
      for (Int h = 0; h <= 4; ++h) {
        const auto v = curves::self_intersection(g, ind, h, 0);
        CHECK(v.is_integer() == ((ind + h) % 2 == 0));
      }
    }
  }
}

TEST_CASE("homology model arithmetic") {
  Rng rng(606);
  const HomologyModel h({0, 3, 0, 8});
  auto any = [&] {
    HomologyModel::Element x(4);
    for (auto& v : x) v = uniform(rng, -20, 20);
    return h.reduce(x);
  };
  for (int t = 0; t < 300; ++t) {
    const auto a = any(), b = any(), c = any();
    CHECK(h.add(a, b) == h.add(b, a));
    CHECK(h.add(h.add(a, b), c) == h.add(a, h.add(b, c)));
    CHECK(h.add(a, h.scale(-1, a)) == h.zero());
    CHECK(h.reduce(a) == a);
    const Int k = uniform(rng, -5, 5);
    CHECK(relindex::divisibility(h.scale(k, a), h) ==
          (k < 0 ? -k : k) * relindex::divisibility(a, h));
  }
}

TEST_CASE("size identity on random orbit-set pairs") {
  Rng rng(707);
  for (int t = 0; t < 500; ++t) {
    std::vector<Orbit> pool;
    for (int i = 0; i < 3; ++i) pool.push_back(any_orbit(rng, "o" + std::to_string(i)));
    auto any_set = [&] {
      std::vector<OrbitSet::Entry> e;
      for (const auto& o : pool) {
        if (uniform(rng, 0, 1)) e.push_back({o, uniform(rng, 1, 5)});
      }
      return OrbitSet(e, Side::Plus);
    };
    CHECK(curves::size_identity(any_set(), any_set()).holds());
  }
}
