#pragma once

// Combinatorial holomorphic-curve data and the curve-level formulas:
// Fredholm index, relative adjunction, writhe and linking bounds, the
// index inequality, intersection numbers C·C′, and the union and J bounds.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "echkit/core.hpp"
#include "echkit/cz.hpp"

namespace echkit::curves {

/// Exact element of ½Z stored as twice its value.
struct HalfInt {
  Int twice = 0;

  static HalfInt from_int(Int v) { return {2 * v}; }
  bool is_integer() const { return twice % 2 == 0; }
  /// Throws InconsistentData if the value is not an integer.
  Int to_int() const;
  std::string str() const;

  friend HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return {a.twice - b.twice}; }
  friend HalfInt operator*(Int k, HalfInt a) { return {k * a.twice}; }
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

using End = cz::End;
using BraidKey = std::pair<Side, std::string>;  // (side, orbit id)

/// A simple irreducible curve. Writhes are those of the braid formed by all
/// ends at one orbit on one side, in the reference trivialization.
struct CurveComponent {
  std::string name;
  Int genus = 0;
  Int delta = 0;
  std::vector<End> ends;
  Int c_ref = 0;
  std::map<BraidKey, Int> writhe;

  Int chi() const { return 2 - 2 * genus - static_cast<Int>(ends.size()); }
  Int hyperbolic_ends() const;
  Int elliptic_ends() const;
  bool has_positive_end() const;
  /// R × γ: genus 0, one positive and one negative end of multiplicity 1
  /// at the same orbit, no singularities.
  bool is_trivial_cylinder() const;
  /// Orbits and end multiplicities grouped per side and orbit.
  std::map<BraidKey, std::vector<Int>> end_groups() const;
  const Orbit& orbit_of(const std::string& id) const;
  OrbitSet orbit_set(Side side) const;

  /// Σ⁺ w − Σ⁻ w in the framing τ.
  Int w_tau(const Trivialization& tau = {}) const;
  Int c_tau(const Trivialization& tau = {}) const;

  friend bool operator==(const CurveComponent&, const CurveComponent&) = default;
};

/// ind = −χ + 2c_τ + μ⁰_τ.
Int fredholm_index(const CurveComponent& c, const Trivialization& tau = {});

/// c − (χ + Q + w − 2δ); zero for adjunction-consistent data.
Int adjunction_residual(const CurveComponent& c, Int q_self);

/// The Q value that makes the component adjunction-consistent.
Int adjunction_q(const CurveComponent& c);

/// I = c_τ + Q_τ + μ_τ(α⁺) − μ_τ(α⁻) for a single simple component.
Int component_ech_index(const CurveComponent& c, Int q_self, const Trivialization& tau = {});
Int component_j0(const CurveComponent& c, Int q_self, const Trivialization& tau = {});

struct SelfIntersection {
  HalfInt value;
  /// In a symplectization C·C ≥ 0 unless C is an elliptic trivial cylinder.
  bool nonnegative_expected = false;
};

/// C·C = ½(2g − 2 + ind + h + 4δ).
SelfIntersection self_intersection(const CurveComponent& c, const Trivialization& tau = {});
HalfInt self_intersection(Int genus, Int ind, Int hyperbolic_ends, Int delta);

/// Symmetric table keyed by unordered name pairs.
using PairTable = std::map<std::pair<std::string, std::string>, Int>;
std::pair<std::string, std::string> pair_key(const std::string& a, const std::string& b);

/// Union of d_a-fold covers of distinct simple components C_a.
struct CurveData {
  struct Piece {
    CurveComponent comp;
    Int degree = 1;
  };
  std::vector<Piece> components;
  PairTable q_matrix;    // Q_τ(C_a, C_b) in the reference framing; (a, a) is Q_τ(C_a)
  PairTable dot_inputs;  // C_a·C_b for distinct components

  const Piece* find(const std::string& name) const;
  bool is_simple() const;
  /// Orbit set of ends on one side, weighted by covering degree.
  OrbitSet orbit_set(Side side) const;
  Int q_entry(const std::string& a, const std::string& b) const;
};

Int curve_ech_index(const CurveData& c, const Trivialization& tau = {});
Int curve_j0(const CurveData& c, const Trivialization& tau = {});
Int curve_j_plus(const CurveData& c, const Trivialization& tau = {});

/// C ∪ C′: degrees of common components add and the tables merge.
CurveData union_curves(const CurveData& c, const CurveData& c_prime);

/// Σ_a Σ_b d_a d′_b C_a·C_b, using self_intersection on common components.
HalfInt dot(const CurveData& c, const CurveData& c_prime);

/// δ(C) = Σδ_a + Σ_{a<b} C_a·C_b for a simple curve.
Int curve_delta(const CurveData& c);

// Writhe and linking bounds at one orbit, for ends on the positive side.
// Negative ends use the same bounds at the mirrored orbit with w ↦ −w.

/// Σ_{i,j} max(q_iρ_j, q_jρ_i) − Σ ρ_i.
Int lemma_writhe_bound(const Orbit& orbit, const std::vector<Int>& qs);
/// Σ_i Σ_j max(q_iρ′_j, q′_jρ_i).
Int linking_bound(const Orbit& orbit, const std::vector<Int>& qs, const std::vector<Int>& qs2);
/// Σ_{k≤m} CZ(γ^k) − Σ CZ(γ^{q_i}).
Int upper_writhe_bound(const Orbit& orbit, const std::vector<Int>& qs);
/// The sharper bounds behind the J₀ lower bound.
Int strengthened_writhe_bound(const Orbit& orbit, const std::vector<Int>& qs);

/// The orbit as seen by ends on `side`: itself for positive ends, the
/// mirror for negative ends.
Orbit oriented(const Orbit& orbit, Side side);

struct MaxWrithe {
  Int bound = 0;                         // upper writhe bound
  Int lemma_bound = 0;                   // from the per-end and pairwise tables
  std::vector<Int> per_end;              // ρ_i(q_i − 1)
  std::vector<std::vector<Int>> pairs;   // max(q_iρ_j, q_jρ_i)
};

MaxWrithe max_writhe(const std::vector<Int>& qs, const Orbit& orbit,
                     const Trivialization& tau = {});

struct OrbitVerdict {
  Side side = Side::Plus;
  std::string orbit;
  std::vector<Int> qs;
  Int writhe = 0;
  Int bound = 0;  // μ_τ − μ⁰_τ contribution of this braid
  Int slack = 0;  // bound − signed writhe
  bool partition_matches = false;
};

struct IndexInequalityReport {
  Int ind = 0;
  Int ech_index = 0;
  Int delta = 0;
  Int writhe_slack = 0;  // μ_τ − μ⁰_τ − w_τ
  bool holds = false;    // ind ≤ I − 2δ
  bool equality_admissible = false;
  std::vector<OrbitVerdict> orbits;
};

/// For a single simple component (degree 1). Equality in the index
/// inequality needs P^out partitions at positive ends and P^in at negative.
IndexInequalityReport index_inequality_report(const CurveData& c, const Trivialization& tau = {});

/// I(C∪C′) − I(C) − I(C′) − 2 C·C′.
Int union_index_slack(const CurveData& c, const CurveData& c_prime,
                      const Trivialization& tau = {});

/// Ends of one component at a single orbit, as they enter the per-orbit
/// union inequality.
struct OrbitComponent {
  std::vector<Int> qs;
  Int d = 0;
  Int d_prime = 0;
  Int w = 0;
};

struct HugeInput {
  Orbit orbit;
  std::vector<OrbitComponent> comps;
  /// ℓ(ζ_a, ζ_b) for a < b, keyed by index pair.
  std::map<std::pair<std::size_t, std::size_t>, Int> ell;
};

/// LHS − RHS of the per-orbit inequality behind the union bound. With
/// `j_version` the CZ sums stop one short (μ′ in place of μ).
Int huge_slack(const HugeInput& in, const Trivialization& tau = {}, bool j_version = false);
inline Int huge_slack_j(const HugeInput& in, const Trivialization& tau = {}) {
  return huge_slack(in, tau, true);
}

/// E + N contribution of one orbit: 1 if elliptic and both sides have ends
/// there; 1 if negative hyperbolic and both totals are odd.
Int orbit_e_plus_n(const Orbit& orbit, Int m, Int m_prime);

/// 2(g − 1 + δ) + Σ_γ {2n − 1 | m | (m + n_odd)/2}.
Int j_bound_rhs(const CurveComponent& c);

/// −χ ≤ J₀ − 2δ.
bool euler_bound_check(const CurveComponent& c, Int j0);

struct JUnionSlack {
  Int slack = 0;  // J₀(C∪C′) − J₀(C) − J₀(C′) − 2C·C′ − E − N
  Int e = 0;
  Int n = 0;
  Int e_plus = 0;
  Int n_plus = 0;
  Int e_minus = 0;
  Int n_minus = 0;
};

JUnionSlack j_union_slack(const CurveData& c, const CurveData& c_prime,
                          const Trivialization& tau = {});

struct JPlusComponent {
  std::string name;
  Int degree = 1;
  Int j_plus = 0;
  Int lower_bound = 0;  // 2(g − 1 + |α⁺| + δ) for simple components
  bool trivial_cylinder = false;
};

struct JPlusStep {
  std::string added;
  Int j_plus_before = 0;
  Int j_plus_piece = 0;
  Int j_plus_after = 0;
  Int two_dot = 0;
  Int step_bound = 0;  // 2(E₋ + N₋)
  bool size_identity_holds = false;
};

struct JPlusReport {
  std::vector<JPlusComponent> components;
  std::vector<JPlusStep> steps;
  Int j_plus = 0;
};

/// Builds C up one covered component at a time, checking the ingredients of
/// J₊ ≥ 0. Throws NoPositiveEnd when a non-cylinder component has no
/// positive end.
JPlusReport j_plus_pipeline(const CurveData& c, const Trivialization& tau = {});

struct SizeIdentity {
  Int lhs = 0;  // |αα′|
  Int rhs = 0;  // |α| + |α′| − E − N
  bool holds() const { return lhs == rhs; }
};

/// |αα′| against |α| + |α′| − E − N for two orbit sets on the same side.
SizeIdentity size_identity(const OrbitSet& a, const OrbitSet& b);

}  // namespace echkit::curves
