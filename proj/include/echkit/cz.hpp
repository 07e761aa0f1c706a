#pragma once

// Conley-Zehnder indices of iterates and the μ, μ′, μ⁰ aggregates.

#include <vector>

#include "echkit/core.hpp"

namespace echkit::cz {

/// CZ of the k-fold iterate in the orbit's stored trivialization:
/// k·n for hyperbolic orbits, 2⌊kθ⌋ + 1 for elliptic ones.
Int cz_stored(const Orbit& orbit, Int k);

/// CZ_τ(γ^k). Changing τ by Δ shifts the value by -2kΔ.
Int cz(const Orbit& orbit, const Trivialization& tau, Int k);

/// Σ_{k=1}^{n} CZ(γ^k) in the stored trivialization; zero for n <= 0.
Int cz_partial_sum(const Orbit& orbit, Int n);

/// ⌊CZ(γ^q)/2⌋ in the stored trivialization.
Int rho(const Orbit& orbit, Int q);

/// μ_τ(α) = Σ_i Σ_{k=1}^{m_i} CZ_τ(α_i^k).
Int mu_total(const OrbitSet& a, const Trivialization& tau);

/// μ′_τ(α): as mu_total with upper limit m_i - 1.
Int mu_prime(const OrbitSet& a, const Trivialization& tau);

struct End {
  Side side;
  Orbit orbit;
  Int mult;
  friend bool operator==(const End&, const End&) = default;
};

/// μ⁰_τ: CZ of the positive ends minus CZ of the negative ends.
Int mu_zero(const std::vector<End>& ends, const Trivialization& tau);

}  // namespace echkit::cz
