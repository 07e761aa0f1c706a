#include "echkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "echkit/cz.hpp"

namespace echkit::verify {

namespace {

constexpr std::size_t kMaxStoredViolations = 1000;

std::atomic<unsigned> g_workers{0};

void fail(SweepReport& r, const std::string& msg) {
  ++r.counters["violations_total"];
  if (r.violations.size() < kMaxStoredViolations) r.violations.push_back(msg);
}

std::string join(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string orbit_label(const Orbit& o) {
  switch (o.kind()) {
    case OrbitKind::Elliptic: return "e " + o.angle().str();
    case OrbitKind::PositiveHyperbolic: return "h+ n=" + std::to_string(o.rotation());
    case OrbitKind::NegativeHyperbolic: return "h- n=" + std::to_string(o.rotation());
  }
  return "?";
}

Int sum(const std::vector<Int>& v) { return std::accumulate(v.begin(), v.end(), Int{0}); }

// Runs body(item, shard_report) over items split across worker threads and
// folds the shard reports together. The result does not depend on the
// number of workers once canonicalized.
template <class Item, class Body>
SweepReport sharded(const std::string& name, const std::vector<Item>& items, Body body) {
  const unsigned workers =
      std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(items.size())));
  std::vector<SweepReport> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned t) {
    try {
      for (std::size_t i = t; i < items.size(); i += workers) body(items[i], parts[t]);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  SweepReport out;
  out.name = name;
  for (const auto& p : parts) out.merge(p);
  out.canonicalize();
  return out;
}

std::string theta_list(const std::vector<MonodromyAngle>& thetas) {
  std::ostringstream s;
  s << thetas.size() << " angles";
  if (!thetas.empty()) s << " from " << thetas.front().str() << " to " << thetas.back().str();
  return s.str();
}

}  // namespace

void SweepReport::canonicalize() {
  std::sort(violations.begin(), violations.end());
  std::sort(equality_cases.begin(), equality_cases.end());
}

void SweepReport::merge(const SweepReport& other) {
  instances_checked += other.instances_checked;
  for (const auto& v : other.violations) {
    if (violations.size() < kMaxStoredViolations) violations.push_back(v);
  }
  equality_cases.insert(equality_cases.end(), other.equality_cases.begin(),
                        other.equality_cases.end());
  for (const auto& [k, v] : other.counters) counters[k] += v;
  for (const auto& [k, v] : other.parameters) parameters.emplace(k, v);
}

std::vector<MonodromyAngle> theta_grid(const std::vector<Int>& denominators) {
  std::vector<MonodromyAngle> out;
  for (Int q : denominators) {
    for (Int p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1) out.push_back(validate_angle(p, q, q - 1));
    }
  }
  return out;
}

std::vector<Int> rotation_grid(Int lo, Int hi, int parity) {
  std::vector<Int> out;
  for (Int n = lo; n <= hi; ++n) {
    if (((n % 2) + 2) % 2 == parity) out.push_back(n);
  }
  return out;
}

void set_worker_count(unsigned workers) { g_workers = workers; }

unsigned worker_count() {
  const unsigned w = g_workers.load();
  if (w != 0) return w;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<Orbit> OrbitGrid::orbits() const {
  std::vector<Orbit> out;
  for (const auto& t : thetas) out.push_back(Orbit::elliptic("e" + t.str(), t));
  for (Int n : positive_rotations) out.push_back(Orbit::positive_hyperbolic("hp" + std::to_string(n), n));
  for (Int n : negative_rotations) out.push_back(Orbit::negative_hyperbolic("hn" + std::to_string(n), n));
  return out;
}

// Extremal path oracle

namespace {

// y-coordinate of a polyline at integer x, as the fraction num/den.
struct Frac {
  Int num;
  Int den;
};

Frac height_at(const std::vector<partitions::Point>& path, Int x) {
  for (std::size_t i = 1; i < path.size(); ++i) {
    const auto& a = path[i - 1];
    const auto& b = path[i];
    if (x >= a.x && x <= b.x) {
      const Int dx = b.x - a.x;
      return {a.y * dx + (b.y - a.y) * (x - a.x), dx};
    }
  }
  throw Error(ErrorCode::InvalidInput, "x outside the path");
}

int compare(Frac a, Frac b) {
  const Int l = a.num * b.den;
  const Int r = b.num * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

Int twice_area(const std::vector<partitions::Point>& path) {
  Int s = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    s += (path[i].x - path[i - 1].x) * (path[i].y + path[i - 1].y);
  }
  return s;
}

std::vector<partitions::Point> subdivide_corners(const std::vector<partitions::Point>& corners) {
  std::vector<partitions::Point> out{corners.front()};
  for (std::size_t i = 1; i < corners.size(); ++i) {
    const Int dx = corners[i].x - corners[i - 1].x;
    const Int dy = corners[i].y - corners[i - 1].y;
    const Int g = std::gcd(dx, dy < 0 ? -dy : dy);
    for (Int k = 1; k <= g; ++k) {
      out.push_back({corners[i - 1].x + dx / g * k, corners[i - 1].y + dy / g * k});
    }
  }
  return out;
}

}  // namespace

partitions::LatticePath brute_force_path(const MonodromyAngle& theta, Int m, bool outgoing) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "multiplicity must be positive");
  if (m > theta.horizon()) throw Error(ErrorCode::HorizonExceeded, "m exceeds the horizon", m);
  const Int p = theta.num();
  const Int q = theta.den();
  const Int end_y = outgoing ? theta.floor_mul(m) : theta.ceil_mul(m);
  // Admissible vertex heights at x: strictly on the correct side of y = θx
  // and on the correct side of the chord to the endpoint (forced by
  // concavity or convexity).
  auto y_range = [&](Int x) -> std::pair<Int, Int> {
    if (outgoing) return {ceil_div(x * end_y, m), floor_div(x * p, q)};
    return {ceil_div(x * p, q), floor_div(x * end_y, m)};
  };
  // Slope comparison s1 = dy1/dx1 versus s2 = dy2/dx2 with positive dx.
  auto turns = [&](Int dy1, Int dx1, Int dy2, Int dx2) {
    const Int l = dy2 * dx1;
    const Int r = dy1 * dx2;
    return outgoing ? l < r : l > r;  // strictly decreasing / increasing slopes
  };

  std::vector<std::vector<partitions::Point>> all;
  std::vector<partitions::Point> cur{{0, 0}};
  auto rec = [&](auto&& self, Int dy_prev, Int dx_prev) -> void {
    const auto last = cur.back();
    // Close the path at the endpoint.
    {
      const Int dy = end_y - last.y;
      const Int dx = m - last.x;
      if (dx_prev == 0 || turns(dy_prev, dx_prev, dy, dx)) {
        cur.push_back({m, end_y});
        all.push_back(cur);
        cur.pop_back();
      }
    }
    for (Int x = last.x + 1; x < m; ++x) {
      const auto [lo, hi] = y_range(x);
      for (Int y = lo; y <= hi; ++y) {
        const Int dy = y - last.y;
        const Int dx = x - last.x;
        if (dx_prev != 0 && !turns(dy_prev, dx_prev, dy, dx)) continue;
        cur.push_back({x, y});
        self(self, dy, dx);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0, 0);

  // Pick the extremal area, then confirm it dominates pointwise.
  std::size_t best = 0;
  for (std::size_t i = 1; i < all.size(); ++i) {
    const Int a = twice_area(all[i]);
    const Int b = twice_area(all[best]);
    if (outgoing ? a > b : a < b) best = i;
  }
  for (const auto& path : all) {
    for (Int x = 0; x <= m; ++x) {
      const int c = compare(height_at(path, x), height_at(all[best], x));
      if (outgoing ? c > 0 : c < 0) {
        throw Error(ErrorCode::InconsistentData, "no pointwise extremal path exists");
      }
    }
  }
  return {subdivide_corners(all[best]),
          outgoing ? partitions::PathShape::Concave : partitions::PathShape::Convex};
}

// Sweeps

SweepReport sweep_ce1(Int m_max, const std::vector<MonodromyAngle>& thetas) {
  for (const auto& t : thetas) {
    if (t.horizon() < m_max) {
      throw Error(ErrorCode::HorizonExceeded, "angle " + t.str() + " has horizon below m_max", m_max);
    }
  }
  std::vector<std::vector<partitions::Partition>> parts;
  for (Int m = 1; m <= m_max; ++m) parts.push_back(partitions::partitions_of(m));

  auto report = sharded("ce1", thetas, [&](const MonodromyAngle& theta, SweepReport& r) {
    const Orbit orbit = Orbit::elliptic("g", theta);
    for (Int m = 1; m <= m_max; ++m) {
      const auto expected = partitions::p_out(orbit, m).partition;
      bool expected_seen = false;
      for (const auto& qs : parts[static_cast<std::size_t>(m - 1)]) {
        const auto s = partitions::ce1_sides(qs, theta);
        ++r.instances_checked;
        const std::string tag = theta.str() + " " + qs.str();
        if (s.lhs > s.rhs) fail(r, tag + ": lhs " + std::to_string(s.lhs) + " > rhs " + std::to_string(s.rhs));
        if (s.equality) {
          r.equality_cases.push_back(tag);
          ++r.counters["equalities"];
        }
        const bool is_expected = qs == expected;
        expected_seen = expected_seen || is_expected;
        if (s.equality != is_expected) {
          fail(r, tag + ": equality " + (s.equality ? "holds" : "fails") +
                      " but the outgoing partition is " + expected.str());
        }
        if (s.matches_outgoing != is_expected) fail(r, tag + ": matches_outgoing disagrees");
      }
      if (!expected_seen) fail(r, theta.str() + " m=" + std::to_string(m) + ": outgoing partition not enumerated");
    }
  });
  report.parameters = {{"m_max", std::to_string(m_max)}, {"thetas", theta_list(thetas)}};
  return report;
}

SweepReport sweep_pick(Int m_max, const std::vector<MonodromyAngle>& thetas) {
  std::vector<std::vector<partitions::Partition>> parts;
  for (Int m = 1; m <= m_max; ++m) parts.push_back(partitions::partitions_of(m));
  auto report = sharded("pick", thetas, [&](const MonodromyAngle& theta, SweepReport& r) {
    for (Int m = 1; m <= m_max; ++m) {
      for (const auto& qs : parts[static_cast<std::size_t>(m - 1)]) {
        const auto region = partitions::staircase(qs, theta);
        if (region.degenerate) {
          ++r.counters["degenerate"];
          continue;
        }
        const auto chain = partitions::pick_chain(qs, theta);
        ++r.instances_checked;
        const std::string tag = theta.str() + " " + qs.str();
        if (!chain.pick_identity()) fail(r, tag + ": 2A != 2L - B - 2");
        if (!chain.area_matches_lhs()) fail(r, tag + ": ce1 lhs != 2A");
        if (!chain.lattice_bound_holds()) fail(r, tag + ": L exceeds its bound");
        if (!chain.lattice_equality_matches()) fail(r, tag + ": lattice equality characterization");
        if (!chain.boundary_bound_holds()) fail(r, tag + ": B below its bound");
        if (!chain.boundary_equality_matches()) fail(r, tag + ": boundary equality characterization");
        if (chain.stats.lattice_points == chain.lattice_bound) ++r.counters["lattice_equalities"];
        if (chain.stats.boundary_points == chain.boundary_bound) ++r.counters["boundary_equalities"];
      }
    }
  });
  report.parameters = {{"m_max", std::to_string(m_max)}, {"thetas", theta_list(thetas)}};
  return report;
}

namespace {

struct PartitionPair {
  std::size_t a;
  std::size_t b;  // index into the list, or npos for the empty list
};

std::vector<std::vector<Int>> all_partitions_up_to(Int m_max, bool include_empty) {
  std::vector<std::vector<Int>> out;
  if (include_empty) out.push_back({});
  for (Int m = 1; m <= m_max; ++m) {
    for (const auto& p : partitions::partitions_of(m)) out.push_back(p.parts());
  }
  return out;
}

SweepReport cli_sweep(Int m_total_max, const OrbitGrid& grid, bool strict_version) {
  const auto lists = all_partitions_up_to(m_total_max, true);
  const auto orbits = grid.orbits();
  for (const auto& o : orbits) {
    if (o.is_elliptic() && o.angle().horizon() < m_total_max) {
      throw Error(ErrorCode::HorizonExceeded, "angle " + o.angle().str() + " has horizon below m+m'",
                  m_total_max);
    }
  }
  const Int drop = strict_version ? 1 : 0;
  auto report = sharded(strict_version ? "cli-strict" : "cli", orbits,
                        [&](const Orbit& orbit, SweepReport& r) {
    auto s = [&](Int n) { return cz::cz_partial_sum(orbit, n - drop); };
    const std::string label = orbit_label(orbit);
    bool equality_outside = false;
    for (std::size_t i = 1; i < lists.size(); ++i) {  // m >= 1
      const Int m = sum(lists[i]);
      for (std::size_t j = 0; j < lists.size(); ++j) {  // m' >= 0
        const Int m2 = sum(lists[j]);
        if (m + m2 > m_total_max) continue;
        const Int lhs = 2 * curves::linking_bound(orbit, lists[i], lists[j]);
        const Int rhs = m2 == 0 ? 0 : s(m + m2) - s(m) - s(m2);
        ++r.instances_checked;
        const std::string tag = label + " " + join(lists[i]) + " " + join(lists[j]);
        if (lhs > rhs) {
          fail(r, tag + ": lhs " + std::to_string(lhs) + " > rhs " + std::to_string(rhs));
          continue;
        }
        if (!strict_version) {
          if (lhs == rhs) ++r.counters["equalities"];
          continue;
        }
        const bool stipulated =
            m2 > 0 && (orbit.is_elliptic() ||
                       (orbit.kind() == OrbitKind::NegativeHyperbolic && m % 2 == 1 && m2 % 2 == 1));
        if (stipulated) {
          ++r.counters["stipulated"];
          if (lhs == rhs) fail(r, tag + ": equality where strictness is required");
        } else if (lhs == rhs) {
          ++r.counters["equalities_outside_stipulated"];
          equality_outside = true;
        } else {
          ++r.counters["strict_outside_stipulated"];
        }
      }
    }
    if (strict_version && equality_outside) r.equality_cases.push_back(label);
  });
  report.parameters = {{"m_total_max", std::to_string(m_total_max)},
                       {"thetas", theta_list(grid.thetas)},
                       {"positive_rotations", join(grid.positive_rotations)},
                       {"negative_rotations", join(grid.negative_rotations)}};
  return report;
}

}  // namespace

SweepReport sweep_cli(Int m_total_max, const OrbitGrid& grid) {
  return cli_sweep(m_total_max, grid, false);
}

SweepReport sweep_cli_strict(Int m_total_max, const OrbitGrid& grid) {
  return cli_sweep(m_total_max, grid, true);
}

SweepReport sweep_neg_hyp(Int m_max) {
  std::vector<Int> ms;
  for (Int m = 1; m <= m_max; ++m) ms.push_back(m);
  const Orbit orbit = Orbit::negative_hyperbolic("h", 1);
  auto report = sharded("neg-hyp", ms, [&](Int m, SweepReport& r) {
    for (const auto& p : partitions::partitions_of(m)) {
      std::vector<Int> odd;
      for (Int q : p.parts()) {
        if (q % 2 != 0) odd.push_back(q);
      }  // already descending
      Int total = 0;
      for (std::size_t i = 0; i < odd.size(); ++i) {
        total += 1 - static_cast<Int>(i + 1) + (1 - odd[i]) / 2;
      }
      ++r.instances_checked;
      const std::string tag = p.str();
      if (total > 0) fail(r, tag + ": sum " + std::to_string(total) + " > 0");
      const bool predicted = odd.empty() || (odd.size() == 1 && odd[0] == 1);
      if ((total == 0) != predicted) fail(r, tag + ": equality does not match the characterization");
      if (total == 0) r.equality_cases.push_back(tag);
      // The same sum measures how far the pairwise writhe bound sits below
      // the upper writhe bound in the framing where CZ(γ^k) = k.
      const Int gap = curves::upper_writhe_bound(orbit, p.parts()) -
                      curves::lemma_writhe_bound(orbit, p.parts());
      if (gap < 0) fail(r, tag + ": pairwise writhe bound exceeds the upper writhe bound");
      if ((gap == 0) != predicted) {
        fail(r, tag + ": writhe bounds agree exactly when the characterization fails");
      }
    }
  });
  report.parameters = {{"m_max", std::to_string(m_max)}};
  return report;
}

SweepReport sweep_jbound_cases(Int m_max, const OrbitGrid& grid) {
  std::vector<std::vector<Int>> lists = all_partitions_up_to(m_max, false);
  const auto orbits = grid.orbits();
  auto report = sharded("jbound", orbits, [&](const Orbit& orbit, SweepReport& r) {
    const std::string label = orbit_label(orbit);
    for (const auto& qs : lists) {
      const Int m = sum(qs);
      const Int n = static_cast<Int>(qs.size());
      const Int s_prime = cz::cz_partial_sum(orbit, m - 1);
      const std::string tag = label + " " + join(qs);
      ++r.instances_checked;
      switch (orbit.kind()) {
        case OrbitKind::Elliptic: {
          const auto& theta = orbit.angle();
          const Int lhs = n + s_prime - curves::lemma_writhe_bound(orbit, qs);
          if (lhs < 2 * n - 1) fail(r, tag + ": case 1 bound fails");
          // The strengthened lattice count for the staircase region.
          const partitions::Partition part(qs);
          const auto region = partitions::staircase(part, theta);
          Int ce_lhs = 0;
          Int rhs = m - n;
          for (Int k = 1; k <= m - 1; ++k) rhs += 2 * theta.floor_mul(k);
          for (Int qi : qs) {
            rhs += theta.floor_mul(qi);
            for (Int qj : qs) ce_lhs += std::max(qi * theta.floor_mul(qj), qj * theta.floor_mul(qi));
          }
          if (ce_lhs > rhs) fail(r, tag + ": strengthened combinatorial inequality fails");
          if (!region.degenerate) {
            const auto stats = partitions::pick_stats(region);
            Int bound = 2;
            for (Int k = 1; k <= m - 1; ++k) bound += theta.floor_mul(k) + 1;
            for (Int qi : qs) bound += theta.floor_mul(qi);
            if (stats.lattice_points > bound) fail(r, tag + ": strengthened lattice count fails");
            ++r.counters["case1_regions"];
          }
          ++r.counters["case1"];
          break;
        }
        case OrbitKind::PositiveHyperbolic: {
          Int lhs = n - cz::cz_stored(orbit, m);
          for (Int qi : qs) lhs += cz::cz_stored(orbit, qi) + qi - 1;
          if (lhs != m) fail(r, tag + ": case 2 is not an equality");
          const Int via_bound = n + s_prime - curves::strengthened_writhe_bound(orbit, qs);
          if (via_bound != m) fail(r, tag + ": case 2 bound is not attained exactly");
          ++r.counters["case2"];
          break;
        }
        case OrbitKind::NegativeHyperbolic: {
          std::vector<Int> odd;
          for (Int qi : qs) {
            if (qi % 2 != 0) odd.push_back(qi);
          }
          const Int n_odd = static_cast<Int>(odd.size());
          Int rhs = (m + n_odd) / 2;
          for (std::size_t j = 0; j < odd.size(); ++j) rhs += static_cast<Int>(j) * odd[j];
          const Int lhs = n + s_prime - curves::strengthened_writhe_bound(orbit, qs);
          if (lhs < rhs) {
            fail(r, tag + ": case 3 lhs " + std::to_string(lhs) + " < " + std::to_string(rhs));
          }
          if (lhs < (m + n_odd) / 2) fail(r, tag + ": case 3 bound fails");
          ++r.counters["case3"];
          break;
        }
      }
    }
  });
  report.parameters = {{"m_max", std::to_string(m_max)},
                       {"thetas", theta_list(grid.thetas)},
                       {"positive_rotations", join(grid.positive_rotations)},
                       {"negative_rotations", join(grid.negative_rotations)}};
  return report;
}

namespace {

struct EndConfig {
  std::vector<Int> qs;
  Int d;
  Int d_prime;
  Int m() const { return sum(qs); }
  Int load() const { return (d + d_prime) * m(); }
};

std::vector<EndConfig> end_configs(Int m_max) {
  std::vector<EndConfig> out;
  for (const auto& qs : all_partitions_up_to(m_max, false)) {
    for (Int d = 0; d <= 2; ++d) {
      for (Int dp = 0; dp <= 2; ++dp) {
        if (d + dp == 0) continue;
        EndConfig c{qs, d, dp};
        if (c.load() <= m_max) out.push_back(c);
      }
    }
  }
  return out;
}

}  // namespace

SweepReport sweep_huge(Int m_max, const OrbitGrid& grid) {
  const auto configs = end_configs(m_max);
  const auto orbits = grid.orbits();
  for (const auto& o : orbits) {
    if (o.is_elliptic() && o.angle().horizon() < m_max) {
      throw Error(ErrorCode::HorizonExceeded, "angle " + o.angle().str() + " has horizon below m_max",
                  m_max);
    }
  }
  auto report = sharded("huge", orbits, [&](const Orbit& orbit, SweepReport& r) {
    const std::string label = orbit_label(orbit);
    Trivialization shifted;
    shifted.set(orbit.id(), 3);
    Int min_slack = std::numeric_limits<Int>::max();

    auto check = [&](const curves::HugeInput& in, const std::string& tag, Int big_m, Int big_m2) {
      const Int slack = curves::huge_slack(in);
      const Int slack_j = curves::huge_slack_j(in);
      const Int e_plus_n = curves::orbit_e_plus_n(orbit, big_m, big_m2);
      ++r.instances_checked;
      min_slack = std::min(min_slack, slack);
      if (slack < 0) {
        ++r.counters["i_slack_negative"];
        fail(r, tag + ": slack " + std::to_string(slack));
      }
      if (slack_j < e_plus_n) {
        ++r.counters["j_shortfall"];
        fail(r, tag + ": J slack " + std::to_string(slack_j) + " < E+N " + std::to_string(e_plus_n));
      }
      // Bound that the CLI′ argument does give at negative hyperbolic
      // orbits: odd-odd pairs across the two lists, minus those pairs that
      // come from one component meeting itself.
      if (orbit.kind() == OrbitKind::NegativeHyperbolic) {
        Int odd = 0;
        Int odd_prime = 0;
        Int self = 0;
        for (const auto& c : in.comps) {
          const Int k = static_cast<Int>(std::count_if(c.qs.begin(), c.qs.end(), [](Int q) { return q % 2 != 0; }));
          odd += c.d * k;
          odd_prime += c.d_prime * k;
          self += c.d * c.d_prime * k;
        }
        if (slack_j < odd * odd_prime - self) ++r.counters["j_odd_pair_bound_violations"];
      }
      if (curves::huge_slack(in, shifted) != slack || curves::huge_slack_j(in, shifted) != slack_j) {
        ++r.counters["trivialization_dependent"];
        fail(r, tag + ": slack depends on the trivialization");
      }
    };

    // One or two components; the pair loop takes b > a to avoid repeats.
    for (std::size_t a = 0; a < configs.size(); ++a) {
      for (std::size_t b = a; b <= configs.size(); ++b) {
        const bool single = b == configs.size();
        if (!single && b == a) continue;
        std::vector<EndConfig> cs{configs[a]};
        if (!single) cs.push_back(configs[b]);
        Int load = 0;
        Int big_m = 0;
        Int big_m2 = 0;
        for (const auto& c : cs) {
          load += c.load();
          big_m += c.d * c.m();
          big_m2 += c.d_prime * c.m();
        }
        if (load > m_max) continue;

        // Admissible writhes and linking: the bounds and one below.
        std::vector<Int> w_bound;
        for (const auto& c : cs) w_bound.push_back(curves::lemma_writhe_bound(orbit, c.qs));
        const Int ell_bound = single ? 0 : curves::linking_bound(orbit, cs[0].qs, cs[1].qs);
        const bool w_matters_0 = cs[0].d * cs[0].d_prime > 0;
        const bool w_matters_1 = !single && cs[1].d * cs[1].d_prime > 0;
        const bool ell_matters =
            !single && (cs[0].d * cs[1].d_prime + cs[1].d * cs[0].d_prime) > 0;
        for (Int dw0 = 0; dw0 <= (w_matters_0 ? 1 : 0); ++dw0) {
          for (Int dw1 = 0; dw1 <= (w_matters_1 ? 1 : 0); ++dw1) {
            for (Int dl = 0; dl <= (ell_matters ? 1 : 0); ++dl) {
              curves::HugeInput in{orbit, {}, {}};
              for (std::size_t k = 0; k < cs.size(); ++k) {
                in.comps.push_back({cs[k].qs, cs[k].d, cs[k].d_prime,
                                    w_bound[k] - (k == 0 ? dw0 : dw1)});
              }
              if (!single) in.ell[{0, 1}] = ell_bound - dl;
              std::string tag = label;
              for (const auto& c : in.comps) {
                tag += " " + join(c.qs) + "x(" + std::to_string(c.d) + "," +
                       std::to_string(c.d_prime) + ") w=" + std::to_string(c.w);
              }
              if (!single) tag += " l=" + std::to_string(in.ell.at({0, 1}));
              check(in, tag, big_m, big_m2);
            }
          }
        }

        // Saturation of the hyperbolic bounds: the upper writhe bound and
        // the linking value (S(m_a + m_b) − S(m_a) − S(m_b))/2.
        if (orbit.is_hyperbolic()) {
          curves::HugeInput in{orbit, {}, {}};
          for (const auto& c : cs) {
            in.comps.push_back({c.qs, c.d, c.d_prime, curves::upper_writhe_bound(orbit, c.qs)});
          }
          bool integral = true;
          if (!single) {
            const Int ma = cs[0].m();
            const Int mb = cs[1].m();
            const Int twice = cz::cz_partial_sum(orbit, ma + mb) - cz::cz_partial_sum(orbit, ma) -
                              cz::cz_partial_sum(orbit, mb);
            integral = twice % 2 == 0;
            in.ell[{0, 1}] = twice / 2;
          }
          if (!integral) {
            ++r.counters["saturation_nonintegral_linking"];
          } else {
            ++r.counters["saturation_checked"];
            const Int slack = curves::huge_slack(in);
            if (slack != 0) {
              ++r.counters["saturation_failures"];
              fail(r, label + " saturation " + join(cs[0].qs) +
                          (single ? "" : " " + join(cs[1].qs)) + ": slack " + std::to_string(slack));
            }
          }
        }
      }
    }
    if (min_slack == 0) r.equality_cases.push_back(label);
  });
  report.parameters = {{"m_max", std::to_string(m_max)},
                       {"thetas", theta_list(grid.thetas)},
                       {"positive_rotations", join(grid.positive_rotations)},
                       {"negative_rotations", join(grid.negative_rotations)}};
  return report;
}

SweepReport sweep_duality(Int m_max, const std::vector<MonodromyAngle>& thetas) {
  auto report = sharded("duality", thetas, [&](const MonodromyAngle& theta, SweepReport& r) {
    const Orbit orbit = Orbit::elliptic("g", theta);
    const Orbit mirror = Orbit::elliptic("g", theta.negated());
    const Int top = std::min(m_max, theta.horizon());
    r.counters["skipped_beyond_horizon"] += m_max - top;
    for (Int m = 1; m <= top; ++m) {
      ++r.instances_checked;
      const auto in = partitions::p_in(orbit, m);
      const auto out = partitions::p_out(mirror, m);
      const std::string tag = theta.str() + " m=" + std::to_string(m);
      if (!(in.partition == out.partition)) {
        fail(r, tag + ": incoming " + in.partition.str() + " vs mirrored outgoing " +
                    out.partition.str());
      }
      // The reflection (x, y) ↦ (x, −y) carries one path onto the other.
      const auto& a = in.path->vertices;
      const auto& b = out.path->vertices;
      bool same = a.size() == b.size();
      for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].x == b[i].x && a[i].y == -b[i].y;
      if (!same) fail(r, tag + ": paths are not mirror images");
    }
  });
  report.parameters = {{"m_max", std::to_string(m_max)}, {"thetas", theta_list(thetas)}};
  return report;
}

SweepReport sweep_path_oracle(Int m_max, const std::vector<MonodromyAngle>& thetas) {
  auto report = sharded("paths", thetas, [&](const MonodromyAngle& theta, SweepReport& r) {
    const Int top = std::min(m_max, theta.horizon());
    for (Int m = 1; m <= top; ++m) {
      const std::string tag = theta.str() + " m=" + std::to_string(m);
      ++r.instances_checked;
      const auto out = partitions::outgoing_path(theta, m);
      const auto brute_out = brute_force_path(theta, m, true);
      if (out.vertices != brute_out.vertices) fail(r, tag + ": outgoing hull differs from enumeration");
      const auto in = partitions::incoming_path(theta, m);
      const auto brute_in = brute_force_path(theta, m, false);
      if (in.vertices != brute_in.vertices) fail(r, tag + ": incoming hull differs from enumeration");
    }
  });
  report.parameters = {{"m_max", std::to_string(m_max)}, {"thetas", theta_list(thetas)}};
  return report;
}

// Random generators

namespace {

Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }
bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(v.size()) - 1))];
}

std::vector<Orbit> orbit_pool(Rng& rng, Int count, Int horizon) {
  std::vector<Orbit> pool;
  for (Int i = 0; i < count; ++i) pool.push_back(random_orbit(rng, "g" + std::to_string(i), horizon));
  return pool;
}

OrbitSet random_orbit_set(Rng& rng, const std::vector<Orbit>& pool, Side side, Int max_mult,
                          bool allow_empty = true) {
  std::vector<OrbitSet::Entry> entries;
  for (const auto& o : pool) {
    if (coin(rng)) entries.push_back({o, uniform(rng, 1, max_mult)});
  }
  if (entries.empty() && !allow_empty) entries.push_back({pick(rng, pool), uniform(rng, 1, max_mult)});
  return OrbitSet(std::move(entries), side);
}

Trivialization random_tau(Rng& rng, const std::vector<Orbit>& pool, Int spread) {
  Trivialization tau(std::map<std::string, Int>{});
  for (const auto& o : pool) tau.set(o.id(), uniform(rng, -spread, spread));
  return tau;
}

}  // namespace

Orbit random_orbit(Rng& rng, const std::string& id, Int horizon) {
  static const std::vector<Int> primes{11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                                        67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
  switch (uniform(rng, 0, 2)) {
    case 0: {
      std::vector<Int> ok;
      for (Int q : primes) {
        if (q > horizon) ok.push_back(q);
      }
      if (ok.empty()) throw Error(ErrorCode::HorizonExceeded, "no prime denominator above horizon", horizon);
      const Int q = pick(rng, ok);
      const Int p = uniform(rng, 1, q - 1) + q * uniform(rng, -1, 1);
      return Orbit::elliptic(id, validate_angle(p, q, horizon));
    }
    case 1: return Orbit::positive_hyperbolic(id, 2 * uniform(rng, -3, 3));
    default: return Orbit::negative_hyperbolic(id, 2 * uniform(rng, -3, 3) + 1);
  }
}

RelClass random_relclass(Rng& rng, Int max_mult) {
  const auto pool = orbit_pool(rng, uniform(rng, 1, 4), std::max<Int>(max_mult, 10));
  RelClass z;
  z.name = "Z";
  z.alpha = random_orbit_set(rng, pool, Side::Plus, max_mult);
  z.beta = random_orbit_set(rng, pool, Side::Minus, max_mult);
  z.c_ref = uniform(rng, -20, 20);
  z.q_ref = uniform(rng, -20, 20);
  return z;
}

braid::BraidWord random_braid_word(Rng& rng, Int m, Int max_length) {
  braid::BraidWord b;
  b.m = m;
  const Int body = uniform(rng, 0, std::max<Int>(0, max_length - m));
  Int axis = 0;
  for (Int i = 0; i < body; ++i) {
    const Int pos = uniform(rng, 0, m - 1);
    if (pos == axis) {
      axis = pos + 1;
    } else if (pos + 1 == axis) {
      axis = pos;
    }
    b.letters.push_back({pos, coin(rng) ? 1 : -1});
  }
  // Bring the axis home so the closure is an annular braid.
  for (Int p = axis - 1; p >= 0; --p) b.letters.push_back({p, coin(rng) ? 1 : -1});

  // Components are unions of cycles of the strand permutation.
  const auto slot = braid::final_slots(b);
  std::vector<Int> cycle_of(static_cast<std::size_t>(m + 1), -1);
  Int cycles = 0;
  for (Int s = 1; s <= m; ++s) {
    if (cycle_of[static_cast<std::size_t>(s)] >= 0) continue;
    for (Int t = s; cycle_of[static_cast<std::size_t>(t)] < 0; t = slot[static_cast<std::size_t>(t)]) {
      cycle_of[static_cast<std::size_t>(t)] = cycles;
    }
    ++cycles;
  }
  std::vector<Int> group(static_cast<std::size_t>(cycles));
  for (Int c = 0; c < cycles; ++c) group[static_cast<std::size_t>(c)] = uniform(rng, 0, c);
  for (Int s = 1; s <= m; ++s) {
    const Int g = group[static_cast<std::size_t>(cycle_of[static_cast<std::size_t>(s)])];
    b.components["c" + std::to_string(g)].push_back(s);
  }
  return b;
}

relindex::NiceRepData random_nice_rep(Rng& rng, Int& c_ref) {
  relindex::NiceRepData d;
  const Int orbits = uniform(rng, 1, 3);
  std::vector<Int> taus;
  for (Int i = 0; i < orbits; ++i) taus.push_back(uniform(rng, -3, 3));
  const Int ends = uniform(rng, 1, 5);
  Int eta = 0;
  for (Int i = 0; i < ends; ++i) {
    relindex::NiceRepEnd e;
    const Int k = uniform(rng, 0, orbits - 1);
    e.orbit = "g" + std::to_string(k);
    e.side = coin(rng) ? Side::Plus : Side::Minus;
    e.w_hat = uniform(rng, -6, 6);
    e.eta_hat = uniform(rng, -4, 4);
    e.tau = taus[static_cast<std::size_t>(k)];
    e.conormal_shift = e.eta_hat;
    eta += (e.side == Side::Plus ? 1 : -1) * e.eta_hat;
    d.ends.push_back(e);
  }
  for (Int k = 0; k < orbits; ++k) {
    if (coin(rng)) d.shared["g" + std::to_string(k)] = {uniform(rng, 1, 3), uniform(rng, -4, 4)};
  }
  c_ref = uniform(rng, -15, 15);
  d.c_conormal = c_ref + eta;
  return d;
}

// Randomized properties

SweepReport check_invariance(std::uint64_t seed, Int trials) {
  Rng rng(seed);
  SweepReport r;
  r.name = "invariance";
  for (Int t = 0; t < trials; ++t) {
    RelClass z = random_relclass(rng, 6);
    std::vector<Orbit> pool;
    for (const auto* set : {&z.alpha, &z.beta}) {
      for (const auto& e : set->entries()) {
        if (std::none_of(pool.begin(), pool.end(), [&](const Orbit& o) { return o.id() == e.orbit.id(); })) {
          pool.push_back(e.orbit);
        }
      }
    }
    const Trivialization tau = random_tau(rng, pool, 5);
    const Trivialization tau2 = random_tau(rng, pool, 5);
    ++r.instances_checked;
    const std::string tag = "trial " + std::to_string(t);
    const Int i0 = relindex::ech_index(z);
    if (relindex::ech_index(z, tau) != i0) fail(r, tag + ": I changes with the trivialization");
    if (relindex::ech_index(z, tau + tau2) != i0) fail(r, tag + ": I changes under a composite change");
    const auto j0 = relindex::j_indices(z);
    if (!(relindex::j_indices(z, tau) == j0)) fail(r, tag + ": J changes with the trivialization");
    // The framed pieces do move, by the stated laws.
    const auto f = relindex::transform_relclass(z, tau);
    const auto f2 = relindex::transform_relclass(z, tau + tau2);
    Int dc = 0;
    Int dq = 0;
    for (const auto& e : z.alpha.entries()) {
      dc += e.mult * tau2.offset(e.orbit.id());
      dq += e.mult * e.mult * tau2.offset(e.orbit.id());
    }
    for (const auto& e : z.beta.entries()) {
      dc -= e.mult * tau2.offset(e.orbit.id());
      dq -= e.mult * e.mult * tau2.offset(e.orbit.id());
    }
    if (f2.c - f.c != dc || f2.q - f.q != dq) fail(r, tag + ": c or Q does not shift additively");
  }
  return r;
}

SweepReport check_braid_identities(std::uint64_t seed, Int trials, Int max_strands, Int max_length) {
  Rng rng(seed);
  SweepReport r;
  r.name = "braid";
  for (Int t = 0; t < trials; ++t) {
    const Int m = uniform(rng, 1, max_strands);
    const auto b = random_braid_word(rng, m, max_length);
    const auto invs = braid::braid_invariants(b);
    const auto counts = braid::strand_counts(b);
    const std::string tag = "trial " + std::to_string(t) + " m=" + std::to_string(m);
    ++r.instances_checked;

    // Union writhe for every pair of components.
    for (auto a = b.components.begin(); a != b.components.end(); ++a) {
      for (auto c = std::next(a); c != b.components.end(); ++c) {
        const auto merged = braid::merge_components(b, a->first, c->first, "u");
        const auto mi = braid::braid_invariants(merged);
        if (mi.w.at("u") != braid::union_writhe(invs, a->first, c->first)) {
          fail(r, tag + ": union writhe identity fails");
        }
        if (mi.eta.at("u") != invs.eta.at(a->first) + invs.eta.at(c->first)) {
          fail(r, tag + ": winding is not additive");
        }
        ++r.counters["union_pairs"];
      }
    }

    // All strands as one braid: a full twist moves the writhe by ±m(m−1).
    braid::BraidWord whole = b;
    whole.components.clear();
    for (Int s = 1; s <= m; ++s) whole.components["all"].push_back(s);
    const Int w_whole = braid::braid_invariants(whole).w.at("all");
    for (bool positive : {true, false}) {
      const auto twisted = braid::insert_full_twist(whole, positive);
      const Int shift = braid::braid_invariants(twisted).w.at("all") - w_whole;
      if (shift != (positive ? 1 : -1) * m * (m - 1)) {
        fail(r, tag + ": full twist shifts the writhe by " + std::to_string(shift));
      }
    }

    // Framing change by delta equals −delta full twists around the axis.
    const Int delta = uniform(rng, -2, 2);
    braid::BraidWord twisted = b;
    for (Int k = 0; k < (delta < 0 ? -delta : delta); ++k) {
      twisted = braid::insert_full_twist(twisted, delta < 0, true);
    }
    const auto expected = braid::braid_invariants(twisted);
    const auto got = braid::reframe(invs, counts, delta);
    for (const auto& [c, n] : counts) {
      if (got.w.at(c) != expected.w.at(c) || got.eta.at(c) != expected.eta.at(c)) {
        fail(r, tag + ": reframe disagrees with twisting on '" + c + "'");
      }
      for (const auto& [c2, n2] : counts) {
        if (c < c2 && got.linking(c, c2) != expected.linking(c, c2)) {
          fail(r, tag + ": reframed linking disagrees for ('" + c + "', '" + c2 + "')");
        }
      }
    }
  }
  return r;
}

namespace {

// A random simple component whose braids are labelled by (side, orbit).
curves::CurveComponent random_component(Rng& rng, const std::vector<Orbit>& pool,
                                        const std::string& name, bool need_positive) {
  curves::CurveComponent c;
  c.name = name;
  c.genus = uniform(rng, 0, 1);
  c.delta = uniform(rng, 0, 1);
  const Int n_ends = uniform(rng, 1, 3);
  for (Int i = 0; i < n_ends; ++i) {
    const Side side = (need_positive && i == 0) || coin(rng) ? Side::Plus : Side::Minus;
    c.ends.push_back({side, pick(rng, pool), uniform(rng, 1, 3)});
  }
  c.c_ref = uniform(rng, -4, 6);
  return c;
}

Int admissible_writhe_bound(const Orbit& orbit, Side side, const std::vector<Int>& qs) {
  const Orbit o = curves::oriented(orbit, side);
  return std::min(curves::lemma_writhe_bound(o, qs), curves::strengthened_writhe_bound(o, qs));
}

// Writhe of every braid at or just below its admissible bound.
void assign_admissible_writhes(Rng& rng, curves::CurveComponent& c) {
  for (const auto& [key, qs] : c.end_groups()) {
    const Int bound = admissible_writhe_bound(c.orbit_of(key.second), key.first, qs) - uniform(rng, 0, 2);
    c.writhe[key] = key.first == Side::Plus ? bound : -bound;
  }
}

// Smallest c_ref at or above the current one that gives C·C ≥ 0.
void raise_c_for_self_intersection(curves::CurveComponent& c) {
  if (!curves::self_intersection(c).nonnegative_expected) return;
  while (curves::self_intersection(c).value.twice < 0) ++c.c_ref;
}

curves::CurveComponent trivial_cylinder(const Orbit& orbit, const std::string& name) {
  curves::CurveComponent c;
  c.name = name;
  c.ends = {{Side::Plus, orbit, 1}, {Side::Minus, orbit, 1}};
  return c;
}

struct RandomCurves {
  std::vector<curves::CurveComponent> comps;
  curves::PairTable q;
  curves::PairTable dots;
  // ℓ per pair of distinct components, needed to rebuild the per-orbit data.
  std::map<std::pair<std::string, std::string>, std::map<curves::BraidKey, Int>> ell;
};

RandomCurves random_curves(Rng& rng, Int count, bool with_cylinders) {
  const auto pool = orbit_pool(rng, uniform(rng, 1, 3), 100);
  RandomCurves out;
  std::set<std::string> cylinder_orbits;
  for (Int i = 0; i < count; ++i) {
    const std::string name = "C" + std::to_string(i);
    if (with_cylinders && uniform(rng, 0, 3) == 0) {
      const Orbit& o = pick(rng, pool);
      if (cylinder_orbits.insert(o.id()).second) {
        out.comps.push_back(trivial_cylinder(o, name));
        continue;
      }
    }
    auto c = random_component(rng, pool, name, true);
    if (c.is_trivial_cylinder()) c.genus = 1;  // cylinders are added deliberately
    assign_admissible_writhes(rng, c);
    raise_c_for_self_intersection(c);
    out.comps.push_back(c);
  }
  for (const auto& c : out.comps) out.q[curves::pair_key(c.name, c.name)] = curves::adjunction_q(c);
  for (std::size_t a = 0; a < out.comps.size(); ++a) {
    for (std::size_t b = a + 1; b < out.comps.size(); ++b) {
      const auto& ca = out.comps[a];
      const auto& cb = out.comps[b];
      const auto key = curves::pair_key(ca.name, cb.name);
      std::map<curves::BraidKey, Int> per;
      Int ell_tau = 0;
      const auto ga = ca.end_groups();
      const auto gb = cb.end_groups();
      for (const auto& [bk, qa] : ga) {
        auto it = gb.find(bk);
        if (it == gb.end()) continue;
        const Orbit o = curves::oriented(ca.orbit_of(bk.second), bk.first);
        const Int bound = curves::linking_bound(o, qa, it->second) - uniform(rng, 0, 1);
        // Store ℓ of the actual braids: mirrored back for negative ends.
        const Int ell = bk.first == Side::Plus ? bound : -bound;
        per[bk] = ell;
        ell_tau += bk.first == Side::Plus ? ell : -ell;
      }
      const Int d = uniform(rng, 0, 3);
      out.dots[key] = d;
      out.q[key] = d - ell_tau;
      out.ell[key] = per;
    }
  }
  return out;
}

curves::CurveData make_curve(const RandomCurves& rc, const std::vector<Int>& degrees) {
  curves::CurveData c;
  for (std::size_t a = 0; a < rc.comps.size(); ++a) {
    if (degrees[a] > 0) c.components.push_back({rc.comps[a], degrees[a]});
  }
  c.q_matrix = rc.q;
  c.dot_inputs = rc.dots;
  return c;
}

// Σ over (side, orbit) of the per-orbit union slack for degrees d, d′.
std::pair<Int, Int> per_orbit_slacks(const RandomCurves& rc, const std::vector<Int>& d,
                                     const std::vector<Int>& dp, Int& e_plus_n) {
  std::set<curves::BraidKey> keys;
  for (const auto& c : rc.comps) {
    for (const auto& [k, qs] : c.end_groups()) keys.insert(k);
  }
  Int total = 0;
  Int total_j = 0;
  e_plus_n = 0;
  for (const auto& key : keys) {
    curves::HugeInput in{Orbit::positive_hyperbolic("x", 0), {}, {}};
    std::vector<std::size_t> idx;
    bool have_orbit = false;
    Int big_m = 0;
    Int big_m2 = 0;
    for (std::size_t a = 0; a < rc.comps.size(); ++a) {
      const auto groups = rc.comps[a].end_groups();
      auto it = groups.find(key);
      if (it == groups.end()) continue;
      if (!have_orbit) {
        in.orbit = curves::oriented(rc.comps[a].orbit_of(key.second), key.first);
        have_orbit = true;
      }
      auto w = rc.comps[a].writhe.find(key);
      const Int raw = w == rc.comps[a].writhe.end() ? 0 : w->second;
      in.comps.push_back({it->second, d[a], dp[a], key.first == Side::Plus ? raw : -raw});
      idx.push_back(a);
      big_m += d[a] * sum(it->second);
      big_m2 += dp[a] * sum(it->second);
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        const auto pk = curves::pair_key(rc.comps[idx[i]].name, rc.comps[idx[j]].name);
        const Int ell = rc.ell.at(pk).at(key);
        in.ell[{i, j}] = key.first == Side::Plus ? ell : -ell;
      }
    }
    total += curves::huge_slack(in);
    total_j += curves::huge_slack_j(in);
    e_plus_n += curves::orbit_e_plus_n(in.orbit, big_m, big_m2);
  }
  return {total, total_j};
}

}  // namespace

SweepReport check_index_equivalence(std::uint64_t seed, Int trials) {
  Rng rng(seed);
  SweepReport r;
  r.name = "index-equivalence";
  for (Int t = 0; t < trials; ++t) {
    const auto pool = orbit_pool(rng, uniform(rng, 1, 3), 12);
    auto c = random_component(rng, pool, "C", false);
    c.genus = uniform(rng, 0, 2);
    c.delta = uniform(rng, 0, 2);
    // Writhes around the admissible bound, on both sides of it.
    for (const auto& [key, qs] : c.end_groups()) {
      const Int bound = admissible_writhe_bound(c.orbit_of(key.second), key.first, qs);
      const Int w = bound + uniform(rng, -3, 3);
      c.writhe[key] = key.first == Side::Plus ? w : -w;
    }
    const Trivialization tau = random_tau(rng, pool, 3);
    curves::CurveData data{{{c, 1}}, {{curves::pair_key("C", "C"), curves::adjunction_q(c)}}, {}};
    const std::string tag = "trial " + std::to_string(t);
    ++r.instances_checked;
    if (curves::adjunction_residual(c, curves::adjunction_q(c)) != 0) fail(r, tag + ": not adjunction-consistent");
    const auto rep = curves::index_inequality_report(data, tau);
    const Int mu = cz::mu_total(c.orbit_set(Side::Plus), tau) - cz::mu_total(c.orbit_set(Side::Minus), tau);
    const Int mu0 = cz::mu_zero(c.ends, tau);
    const Int w = c.w_tau(tau);
    const bool writhe_side = w <= mu - mu0;
    if (rep.holds != writhe_side) fail(r, tag + ": index inequality and writhe inequality disagree");
    if (rep.ech_index - 2 * rep.delta - rep.ind != mu - mu0 - w) fail(r, tag + ": slack identity fails");
    if (rep.writhe_slack != mu - mu0 - w) fail(r, tag + ": per-orbit slacks do not sum correctly");
    const auto ref = curves::index_inequality_report(data);
    if (ref.holds != rep.holds || ref.writhe_slack != rep.writhe_slack) {
      fail(r, tag + ": verdict depends on the trivialization");
    }
    ++r.counters[rep.holds ? "inequality_holds" : "inequality_fails"];
  }
  return r;
}

SweepReport check_union_routes(std::uint64_t seed, Int trials) {
  Rng rng(seed);
  SweepReport r;
  r.name = "union";
  for (Int t = 0; t < trials; ++t) {
    const Int count = uniform(rng, 1, 3);
    const auto rc = random_curves(rng, count, true);
    std::vector<Int> d(static_cast<std::size_t>(count));
    std::vector<Int> dp(static_cast<std::size_t>(count));
    for (Int a = 0; a < count; ++a) {
      d[static_cast<std::size_t>(a)] = uniform(rng, 0, 2);
      dp[static_cast<std::size_t>(a)] = uniform(rng, 0, 2);
    }
    if (sum(d) == 0) d[0] = 1;
    if (sum(dp) == 0) dp[0] = 1;
    const auto c = make_curve(rc, d);
    const auto c2 = make_curve(rc, dp);
    const std::string tag = "trial " + std::to_string(t);
    ++r.instances_checked;
    const Int slack = curves::union_index_slack(c, c2);
    const auto js = curves::j_union_slack(c, c2);
    Int e_plus_n = 0;
    const auto [orbit_sum, orbit_sum_j] = per_orbit_slacks(rc, d, dp, e_plus_n);
    if (slack != orbit_sum) {
      fail(r, tag + ": union slack " + std::to_string(slack) + " != per-orbit sum " + std::to_string(orbit_sum));
    }
    if (js.slack != orbit_sum_j - e_plus_n) fail(r, tag + ": J union slack != per-orbit sum");
    if (slack < 0) fail(r, tag + ": union slack " + std::to_string(slack) + " < 0");
    if (js.slack < 0) {
      ++r.counters["j_slack_negative"];
      r.equality_cases.push_back(tag + ": J slack " + std::to_string(js.slack));
    }
    const Trivialization tau = random_tau(rng, [&] {
      std::vector<Orbit> pool;
      for (const auto& comp : rc.comps) {
        for (const auto& e : comp.ends) pool.push_back(e.orbit);
      }
      return pool;
    }(), 3);
    if (curves::union_index_slack(c, c2, tau) != slack || curves::j_union_slack(c, c2, tau).slack != js.slack) {
      fail(r, tag + ": union slack depends on the trivialization");
    }
  }
  return r;
}

SweepReport check_j_plus(std::uint64_t seed, Int trials) {
  Rng rng(seed);
  SweepReport r;
  r.name = "j-plus";
  for (Int t = 0; t < trials; ++t) {
    const Int count = uniform(rng, 1, 3);
    const auto rc = random_curves(rng, count, true);
    std::vector<Int> d;
    for (Int a = 0; a < count; ++a) d.push_back(uniform(rng, 1, 3));
    const auto c = make_curve(rc, d);
    const std::string tag = "trial " + std::to_string(t);
    ++r.instances_checked;
    const auto rep = curves::j_plus_pipeline(c);
    if (rep.j_plus < 0) fail(r, tag + ": J+ = " + std::to_string(rep.j_plus));
    for (const auto& comp : rep.components) {
      if (comp.trivial_cylinder) {
        if (comp.j_plus != 0) fail(r, tag + ": trivial cylinder cover has J+ " + std::to_string(comp.j_plus));
        ++r.counters["cylinder_covers"];
      } else if (comp.j_plus < comp.lower_bound) {
        fail(r, tag + ": component '" + comp.name + "' below its J+ bound");
      }
    }
    for (const auto& step : rep.steps) {
      if (!step.size_identity_holds) fail(r, tag + ": size identity fails in a step");
      const Int gain = step.j_plus_after - step.j_plus_before - step.j_plus_piece - step.two_dot;
      if (gain < step.step_bound) {
        ++r.counters["steps_below_bound"];
        r.equality_cases.push_back(tag + " step " + step.added + ": gain " + std::to_string(gain) +
                                   " < " + std::to_string(step.step_bound));
      }
      if (step.two_dot < 0) fail(r, tag + ": negative intersection in a step");
      ++r.counters["steps"];
    }
    if (curves::curve_j_plus(c) != rep.j_plus) fail(r, tag + ": pipeline total disagrees");
  }
  return r;
}

SweepReport check_size_identity(std::uint64_t seed, Int trials) {
  Rng rng(seed);
  SweepReport r;
  r.name = "size-identity";
  for (Int t = 0; t < trials; ++t) {
    const auto pool = orbit_pool(rng, uniform(rng, 1, 5), 12);
    const Side side = coin(rng) ? Side::Plus : Side::Minus;
    const auto a = random_orbit_set(rng, pool, side, 5);
    const auto b = random_orbit_set(rng, pool, side, 5);
    ++r.instances_checked;
    // Independent count of E and N.
    Int e_n = 0;
    for (const auto& x : a.entries()) {
      const Int mb = b.multiplicity(x.orbit.id());
      if (mb == 0) continue;
      if (x.orbit.is_elliptic()) ++e_n;
      if (x.orbit.kind() == OrbitKind::NegativeHyperbolic && x.mult % 2 == 1 && mb % 2 == 1) ++e_n;
    }
    const Int lhs = relindex::size_measure(OrbitSet::product(a, b));
    const Int rhs = relindex::size_measure(a) + relindex::size_measure(b) - e_n;
    const auto s = curves::size_identity(a, b);
    if (lhs != rhs || s.lhs != lhs || s.rhs != rhs) {
      fail(r, "trial " + std::to_string(t) + ": |aa'| = " + std::to_string(lhs) + " but " + std::to_string(rhs));
    }
  }
  return r;
}

SweepReport check_abs_vs_rel(std::uint64_t seed, Int trials) {
  Rng rng(seed);
  SweepReport r;
  r.name = "abs-vs-rel";
  for (Int t = 0; t < trials; ++t) {
    Int c_ref = 0;
    const auto d = random_nice_rep(rng, c_ref);
    const std::string tag = "trial " + std::to_string(t);
    ++r.instances_checked;
    if (!relindex::check_abs_vs_rel(d, c_ref)) {
      fail(r, tag + ": consistent data rejected");
      continue;
    }
    auto expect = [&](bool want, const relindex::NiceRepData& x, Int c, const std::string& what) {
      const bool got = relindex::check_abs_vs_rel(x, c);
      if (got != want) {
        fail(r, tag + ": perturbing " + what + (want ? " broke" : " did not break") + " the identity");
      }
      ++r.counters[want ? "perturbations_invariant" : "perturbations_detected"];
    };
    for (int s : {1, -1}) {
      expect(false, d, c_ref + s, "c_ref");
      auto x = d;
      x.c_conormal += s;
      expect(false, x, c_ref, "c_conormal");
      for (std::size_t i = 0; i < d.ends.size(); ++i) {
        auto y = d;
        y.ends[i].conormal_shift += s;
        expect(false, y, c_ref, "conormal shift " + std::to_string(i));
        y = d;
        y.ends[i].eta_hat += s;
        expect(false, y, c_ref, "winding " + std::to_string(i));
        // The writhe of ζ̂ enters both sides alike.
        y = d;
        y.ends[i].w_hat += s;
        expect(true, y, c_ref, "writhe " + std::to_string(i));
      }
      for (const auto& [orbit, sh] : d.shared) {
        auto y = d;
        y.shared[orbit].writhe += s;
        expect(true, y, c_ref, "shared writhe at " + orbit);
        if (sh.mult + s >= 1) {
          y = d;
          y.shared[orbit].mult += s;
          expect(true, y, c_ref, "shared multiplicity at " + orbit);
        }
      }
    }
  }
  return r;
}

SweepReport check_additivity(std::uint64_t seed, Int trials) {
  Rng rng(seed);
  SweepReport r;
  r.name = "additivity";
  for (Int t = 0; t < trials; ++t) {
    const auto pool = orbit_pool(rng, uniform(rng, 1, 4), 12);
    RelClass z;
    z.name = "Z";
    z.alpha = random_orbit_set(rng, pool, Side::Plus, 4);
    z.beta = random_orbit_set(rng, pool, Side::Minus, 4);
    z.c_ref = uniform(rng, -10, 10);
    z.q_ref = uniform(rng, -10, 10);
    RelClass w;
    w.name = "W";
    w.alpha = OrbitSet(z.beta.entries(), Side::Plus);
    w.beta = random_orbit_set(rng, pool, Side::Minus, 4);
    w.c_ref = uniform(rng, -10, 10);
    w.q_ref = uniform(rng, -10, 10);
    const auto tau = random_tau(rng, pool, 4);
    const auto zw = relindex::compose(z, w);
    const std::string tag = "trial " + std::to_string(t);
    ++r.instances_checked;
    if (relindex::ech_index(zw, tau) != relindex::ech_index(z, tau) + relindex::ech_index(w, tau)) {
      fail(r, tag + ": I is not additive");
    }
    const auto jz = relindex::j_indices(z, tau);
    const auto jw = relindex::j_indices(w, tau);
    const auto jzw = relindex::j_indices(zw, tau);
    if (jzw.j0 != jz.j0 + jw.j0 || jzw.j_plus != jz.j_plus + jw.j_plus) fail(r, tag + ": J is not additive");
  }
  return r;
}

}  // namespace echkit::verify
