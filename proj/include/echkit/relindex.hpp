#pragma once

// Relative index algebra: the c_τ and Q_τ framing laws, the indices I,
// J₀ and J±, additivity and ambiguity, Q from nice-representative braid
// data, and absolute gradings modeled as torsor elements over Z/d.

#include <map>
#include <string>
#include <vector>

#include "echkit/core.hpp"

namespace echkit::relindex {

/// Integer reduced modulo `modulus`; a modulus of 0 means plain Z.
struct IndexValue {
  Int value = 0;
  Int modulus = 0;

  static IndexValue make(Int value, Int modulus);
  friend bool operator==(const IndexValue&, const IndexValue&) = default;
};

struct Framed {
  Int c = 0;
  Int q = 0;
  friend bool operator==(const Framed&, const Framed&) = default;
};

/// c_τ(Z) and Q_τ(Z) from the reference values. Throws MissingOffset.
Framed transform_relclass(const RelClass& z, const Trivialization& tau);

/// I = c_τ + Q_τ + μ_τ(α) − μ_τ(β).
Int ech_index(const RelClass& z, const Trivialization& tau = {});

struct JIndices {
  Int j0 = 0;
  Int j_plus = 0;
  Int j_minus = 0;
  friend bool operator==(const JIndices&, const JIndices&) = default;
};

/// J₀ = −c_τ + Q_τ + μ′_τ(α) − μ′_τ(β) and J± = J₀ ± (|α| − |β|).
JIndices j_indices(const RelClass& z, const Trivialization& tau = {});

/// |α|: 1 per elliptic orbit, m per positive hyperbolic, ⌈m/2⌉ per
/// negative hyperbolic.
Int size_measure(const OrbitSet& a);

/// Z + W for Z from α to β and W from β to γ. Throws InvalidInput when the
/// middle orbit sets differ.
RelClass compose(const RelClass& z, const RelClass& w);

/// Z + Z′ in H₂(αα′, ββ′); needs z.q_cross[z2.name] (or the reverse entry).
RelClass union_class(const RelClass& z, const RelClass& z2);

/// Q(Z + Z′) = Q(Z) + 2Q(Z, Z′) + Q(Z′).
Int quadratic_union(Int qa, Int qb, Int qab);

enum class IndexKind { I, J };

/// Pairing data for the ambiguity formula. `pairing[r][s]` pairs
/// coordinate r of H² with coordinate s of H₂.
struct AmbiguityInput {
  HomologyModel::Element c1;
  HomologyModel::Element pd_gamma;
  HomologyModel::Element difference;  // Z − Z′ in H₂
  std::vector<std::vector<Int>> pairing;
};

/// ⟨±c₁ + 2PD(Γ), Z − Z′⟩, asserted equal to the index difference of z1
/// and z2 (I, or J₀ for kind J). Throws InconsistentData otherwise.
Int index_ambiguity(const RelClass& z1, const RelClass& z2, const AmbiguityInput& in,
                    IndexKind kind = IndexKind::I);

/// gcd of the free coordinates of x; 0 when the free part vanishes.
Int divisibility(const HomologyModel::Element& x, const HomologyModel& h);

/// Braid data for one end of a nice representative Ŝ of the reduced class.
struct NiceRepEnd {
  std::string orbit;
  Side side = Side::Plus;
  Int w_hat = 0;           // writhe of the braid ζ̂
  Int eta_hat = 0;         // winding number of ζ̂ about its orbit
  Int tau = 0;             // trivialization offset used on this end
  Int conormal_shift = 0;  // conormal framing minus the τ framing along ζ̂
};

/// Common factor γ of α and β at one orbit.
struct SharedOrbit {
  Int mult = 0;     // m_i − m̂_i = n_j − n̂_j
  Int writhe = 0;   // writhe of the braid ζ_ij shared by both sides
};

struct NiceRepData {
  std::vector<NiceRepEnd> ends;
  std::map<std::string, SharedOrbit> shared;
  Int c_conormal = 0;  // c₁(ξ|_S) relative to the conormal framing
};

/// w_τ(Ŝ) and η_τ(Ŝ) (positive ends minus negative ends) and
/// ℓ_τ(Ŝ, R×γ).
struct NiceRepTotals {
  Int w = 0;
  Int eta = 0;
  Int ell = 0;
};

/// Throws MismatchedTrivializations when an orbit carries two different
/// trivialization offsets.
NiceRepTotals nice_rep_totals(const NiceRepData& d);

/// Q = −w(Ŝ) − η(Ŝ) − 2ℓ(Ŝ, R×γ).
Int q_from_nice_rep(const NiceRepData& d);

struct AbsRelSides {
  Int lhs = 0;       // P_τ₊(L₊) − P_τ₋(L₋) via the conormal framing
  Int rhs = 0;       // c_τ(Z) − η_τ(Ŝ)
  Int full_lhs = 0;  // lhs minus the writhes of the full braids
  Int full_rhs = 0;  // c_τ(Z) + Q_τ(Z)
  bool holds() const { return lhs == rhs && full_lhs == full_rhs; }
};

AbsRelSides abs_vs_rel_sides(const NiceRepData& d, Int c_ref);

/// Whether the absolute grading difference reproduces c_τ(Z) + Q_τ(Z).
bool check_abs_vs_rel(const NiceRepData& d, Int c_ref);

/// H¹ coordinates of c₁(ξ) and of each orbit's homology class, with PD
/// taken as the identity on coordinates.
struct GradingContext {
  HomologyModel h;
  HomologyModel::Element c1;
  std::map<std::string, HomologyModel::Element> orbit_class;

  HomologyModel::Element homology_of(const OrbitSet& a) const;
  /// d(±c₁ + 2·x).
  Int modulus_for(const HomologyModel::Element& x, IndexKind kind) const;
};

/// Torsor element: spin-c offset `gamma` from ξ and an integer offset
/// from the declared reference plane field of that spin-c class.
struct PlaneFieldClass {
  HomologyModel::Element gamma;
  IndexValue offset;
  friend bool operator==(const PlaneFieldClass&, const PlaneFieldClass&) = default;
};

/// I(α) = P_τ(L) − Σ w_τ(ζ_i) + μ_τ(α). For kind J, `p` is P′(L) and μ′
/// replaces μ. Throws ModulusMismatch when p.modulus is not d(±c₁ + 2PD[α]).
PlaneFieldClass abs_grading(const GradingContext& ctx, const OrbitSet& a, const IndexValue& p,
                            const std::map<std::string, Int>& braid_w,
                            const Trivialization& tau = {}, IndexKind kind = IndexKind::I);

/// P after changing the framing from τ′ to τ: adds 2·m_i·(τ_i − τ′_i).
IndexValue p_reframed(const IndexValue& p, const OrbitSet& a, const Trivialization& from,
                      const Trivialization& to);

/// P after fusing two strands into a crossing of the given sign.
IndexValue p_fused(const IndexValue& p, int sign);

}  // namespace echkit::relindex
