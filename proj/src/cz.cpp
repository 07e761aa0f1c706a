#include "echkit/cz.hpp"

namespace echkit::cz {

Int cz_stored(const Orbit& orbit, Int k) {
  if (k < 1) throw Error(ErrorCode::InvalidInput, "iterate must be positive");
  if (orbit.is_elliptic()) return 2 * orbit.angle().floor_mul(k) + 1;
  return k * orbit.rotation();
}

Int cz(const Orbit& orbit, const Trivialization& tau, Int k) {
  return cz_stored(orbit.reframed(tau.offset(orbit.id())), k);
}

Int cz_partial_sum(const Orbit& orbit, Int n) {
  if (orbit.is_hyperbolic()) {
    return n > 0 ? orbit.rotation() * n * (n + 1) / 2 : 0;
  }
  return sum_to(n, [&](Int k) { return cz_stored(orbit, k); });
}

Int rho(const Orbit& orbit, Int q) { return floor_div(cz_stored(orbit, q), 2); }

namespace {

Int mu_with_limit(const OrbitSet& a, const Trivialization& tau, Int drop) {
  Int total = 0;
  for (const auto& e : a.entries()) {
    const Orbit framed = e.orbit.reframed(tau.offset(e.orbit.id()));
    total += cz_partial_sum(framed, e.mult - drop);
  }
  return total;
}

}  // namespace

Int mu_total(const OrbitSet& a, const Trivialization& tau) { return mu_with_limit(a, tau, 0); }

Int mu_prime(const OrbitSet& a, const Trivialization& tau) { return mu_with_limit(a, tau, 1); }

Int mu_zero(const std::vector<End>& ends, const Trivialization& tau) {
  Int total = 0;
  for (const auto& e : ends) {
    const Int v = cz(e.orbit, tau, e.mult);
    total += e.side == Side::Plus ? v : -v;
  }
  return total;
}

}  // namespace echkit::cz
