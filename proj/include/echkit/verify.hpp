#pragma once

// Brute-force oracles, exhaustive desk-scale sweeps and seeded randomized
// property checks. Every sweep returns a report whose violation list is
// empty when the checked statement holds on the whole parameter range.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "echkit/braid.hpp"
#include "echkit/core.hpp"
#include "echkit/curves.hpp"
#include "echkit/partitions.hpp"
#include "echkit/relindex.hpp"

namespace echkit::verify {

struct SweepReport {
  std::string name;
  std::map<std::string, std::string> parameters;
  Int instances_checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> equality_cases;
  /// Named tallies, e.g. how many instances fell in each case.
  std::map<std::string, Int> counters;

  bool ok() const { return violations.empty(); }
  /// Sorts lists so that reports compare equal regardless of sharding.
  void canonicalize();
  void merge(const SweepReport& other);
};

/// All p/q with 1 <= p < q and gcd(p, q) = 1, horizon q − 1.
std::vector<MonodromyAngle> theta_grid(const std::vector<Int>& denominators);
/// Rotation integers in [lo, hi] of the given parity (0 even, 1 odd).
std::vector<Int> rotation_grid(Int lo, Int hi, int parity);

/// Number of worker threads used by sweeps; 0 picks the hardware count.
void set_worker_count(unsigned workers);
unsigned worker_count();

// Oracles

/// Extremal path by exhaustive enumeration of all concave (outgoing) or
/// convex (incoming) lattice paths on the admissible side of y = θx.
partitions::LatticePath brute_force_path(const MonodromyAngle& theta, Int m, bool outgoing);

// Sweeps over the combinatorial inequalities

SweepReport sweep_ce1(Int m_max, const std::vector<MonodromyAngle>& thetas);
SweepReport sweep_pick(Int m_max, const std::vector<MonodromyAngle>& thetas);

struct OrbitGrid {
  std::vector<MonodromyAngle> thetas;
  std::vector<Int> positive_rotations;  // even
  std::vector<Int> negative_rotations;  // odd
  std::vector<Orbit> orbits() const;
};

SweepReport sweep_cli(Int m_total_max, const OrbitGrid& grid);
SweepReport sweep_cli_strict(Int m_total_max, const OrbitGrid& grid);
SweepReport sweep_neg_hyp(Int m_max);
SweepReport sweep_jbound_cases(Int m_max, const OrbitGrid& grid);
SweepReport sweep_huge(Int m_max, const OrbitGrid& grid);
SweepReport sweep_duality(Int m_max, const std::vector<MonodromyAngle>& thetas);
SweepReport sweep_path_oracle(Int m_max, const std::vector<MonodromyAngle>& thetas);

// Randomized properties (seeded, deterministic)

using Rng = std::mt19937_64;

Orbit random_orbit(Rng& rng, const std::string& id, Int horizon);
RelClass random_relclass(Rng& rng, Int max_mult);
braid::BraidWord random_braid_word(Rng& rng, Int m, Int max_length);
relindex::NiceRepData random_nice_rep(Rng& rng, Int& c_ref);

SweepReport check_invariance(std::uint64_t seed, Int trials);
SweepReport check_braid_identities(std::uint64_t seed, Int trials, Int max_strands,
                                   Int max_length);
SweepReport check_index_equivalence(std::uint64_t seed, Int trials);
SweepReport check_union_routes(std::uint64_t seed, Int trials);
SweepReport check_j_plus(std::uint64_t seed, Int trials);
SweepReport check_size_identity(std::uint64_t seed, Int trials);
SweepReport check_abs_vs_rel(std::uint64_t seed, Int trials);
SweepReport check_additivity(std::uint64_t seed, Int trials);

}  // namespace echkit::verify
