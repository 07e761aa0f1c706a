#include "echkit/relindex.hpp"

#include <numeric>

#include "echkit/cz.hpp"

namespace echkit::relindex {

IndexValue IndexValue::make(Int value, Int modulus) {
  if (modulus < 0) throw Error(ErrorCode::InvalidInput, "modulus must be non-negative");
  if (modulus > 0) value -= modulus * floor_div(value, modulus);
  return {value, modulus};
}

Framed transform_relclass(const RelClass& z, const Trivialization& tau) {
  Framed f{z.c_ref, z.q_ref};
  for (const auto& e : z.alpha.entries()) {
    const Int o = tau.offset(e.orbit.id());
    f.c += e.mult * o;
    f.q += e.mult * e.mult * o;
  }
  for (const auto& e : z.beta.entries()) {
    const Int o = tau.offset(e.orbit.id());
    f.c -= e.mult * o;
    f.q -= e.mult * e.mult * o;
  }
  return f;
}

Int ech_index(const RelClass& z, const Trivialization& tau) {
  const Framed f = transform_relclass(z, tau);
  return f.c + f.q + cz::mu_total(z.alpha, tau) - cz::mu_total(z.beta, tau);
}

JIndices j_indices(const RelClass& z, const Trivialization& tau) {
  const Framed f = transform_relclass(z, tau);
  JIndices j;
  j.j0 = -f.c + f.q + cz::mu_prime(z.alpha, tau) - cz::mu_prime(z.beta, tau);
  const Int size = size_measure(z.alpha) - size_measure(z.beta);
  j.j_plus = j.j0 + size;
  j.j_minus = j.j0 - size;
  return j;
}

Int size_measure(const OrbitSet& a) {
  Int s = 0;
  for (const auto& e : a.entries()) {
    switch (e.orbit.kind()) {
      case OrbitKind::Elliptic: s += 1; break;
      case OrbitKind::PositiveHyperbolic: s += e.mult; break;
      case OrbitKind::NegativeHyperbolic: s += (e.mult + 1) / 2; break;
    }
  }
  return s;
}

namespace {

bool same_orbits(const OrbitSet& a, const OrbitSet& b) {
  if (a.entries().size() != b.entries().size()) return false;
  for (const auto& e : a.entries()) {
    const auto* other = b.find(e.orbit.id());
    if (!other || other->mult != e.mult || !(other->orbit == e.orbit)) return false;
  }
  return true;
}

OrbitSet with_side(const OrbitSet& a, Side side) { return OrbitSet(a.entries(), side); }

}  // namespace

RelClass compose(const RelClass& z, const RelClass& w) {
  if (!same_orbits(z.beta, w.alpha)) {
    throw Error(ErrorCode::InvalidInput,
                "cannot compose '" + z.name + "' with '" + w.name + "': middle orbit sets differ");
  }
  RelClass out;
  out.name = z.name + "+" + w.name;
  out.alpha = z.alpha;
  out.beta = w.beta;
  out.c_ref = z.c_ref + w.c_ref;
  out.q_ref = z.q_ref + w.q_ref;
  return out;
}

RelClass union_class(const RelClass& z, const RelClass& z2) {
  Int cross = 0;
  if (auto it = z.q_cross.find(z2.name); it != z.q_cross.end()) {
    cross = it->second;
    if (auto back = z2.q_cross.find(z.name); back != z2.q_cross.end() && back->second != cross) {
      throw Error(ErrorCode::InconsistentData, "q_cross is not symmetric");
    }
  } else if (auto back = z2.q_cross.find(z.name); back != z2.q_cross.end()) {
    cross = back->second;
  } else {
    throw Error(ErrorCode::InvalidInput,
                "no cross term Q(" + z.name + ", " + z2.name + ") supplied");
  }
  RelClass out;
  out.name = z.name + "*" + z2.name;
  out.alpha = with_side(OrbitSet::product(z.alpha, z2.alpha), Side::Plus);
  out.beta = with_side(OrbitSet::product(z.beta, z2.beta), Side::Minus);
  out.c_ref = z.c_ref + z2.c_ref;
  out.q_ref = quadratic_union(z.q_ref, z2.q_ref, cross);
  return out;
}

Int quadratic_union(Int qa, Int qb, Int qab) { return qa + 2 * qab + qb; }

Int index_ambiguity(const RelClass& z1, const RelClass& z2, const AmbiguityInput& in,
                    IndexKind kind) {
  if (!same_orbits(z1.alpha, z2.alpha) || !same_orbits(z1.beta, z2.beta)) {
    throw Error(ErrorCode::InvalidInput, "ambiguity compares classes with the same orbit sets");
  }
  if (in.c1.size() != in.pd_gamma.size() || in.pairing.size() != in.c1.size()) {
    throw Error(ErrorCode::InvalidInput, "pairing table does not match cohomology rank");
  }
  const Int c_sign = kind == IndexKind::I ? 1 : -1;
  Int value = 0;
  for (std::size_t r = 0; r < in.c1.size(); ++r) {
    if (in.pairing[r].size() != in.difference.size()) {
      throw Error(ErrorCode::InvalidInput, "pairing table does not match homology rank");
    }
    const Int coeff = c_sign * in.c1[r] + 2 * in.pd_gamma[r];
    for (std::size_t s = 0; s < in.difference.size(); ++s) {
      value += coeff * in.pairing[r][s] * in.difference[s];
    }
  }
  const Int observed = kind == IndexKind::I ? ech_index(z1) - ech_index(z2)
                                            : j_indices(z1).j0 - j_indices(z2).j0;
  if (observed != value) {
    throw Error(ErrorCode::InconsistentData,
                "index difference " + std::to_string(observed) + " but pairing gives " +
                    std::to_string(value),
                observed - value);
  }
  return value;
}

Int divisibility(const HomologyModel::Element& x, const HomologyModel& h) {
  const auto reduced = h.reduce(x);
  Int g = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (h.invariant_factors()[i] == 0) g = std::gcd(g, reduced[i] < 0 ? -reduced[i] : reduced[i]);
  }
  return g;
}

// Nice representatives

NiceRepTotals nice_rep_totals(const NiceRepData& d) {
  std::map<std::string, Int> tau_of;
  NiceRepTotals t;
  for (const auto& e : d.ends) {
    auto [it, fresh] = tau_of.emplace(e.orbit, e.tau);
    if (!fresh && it->second != e.tau) {
      throw Error(ErrorCode::MismatchedTrivializations,
                  "orbit '" + e.orbit + "' has trivializations " + std::to_string(it->second) +
                      " and " + std::to_string(e.tau));
    }
    const Int sign = e.side == Side::Plus ? 1 : -1;
    t.w += sign * e.w_hat;
    t.eta += sign * e.eta_hat;
    if (auto s = d.shared.find(e.orbit); s != d.shared.end()) {
      t.ell += sign * s->second.mult * e.eta_hat;
    }
  }
  for (const auto& [orbit, s] : d.shared) {
    if (s.mult < 1) {
      throw Error(ErrorCode::InvalidInput, "common factor at '" + orbit + "' must be positive");
    }
  }
  return t;
}

Int q_from_nice_rep(const NiceRepData& d) {
  const NiceRepTotals t = nice_rep_totals(d);
  return -t.w - t.eta - 2 * t.ell;
}

AbsRelSides abs_vs_rel_sides(const NiceRepData& d, Int c_ref) {
  const NiceRepTotals t = nice_rep_totals(d);
  AbsRelSides s;
  // Conormal route, then move each braid back to its τ framing: the grading
  // shifts by twice the framing difference on every component.
  Int shift = 0;
  for (const auto& e : d.ends) shift += (e.side == Side::Plus ? 1 : -1) * e.conormal_shift;
  s.lhs = d.c_conormal - 2 * shift;
  s.rhs = c_ref - t.eta;

  // Writhes of the full braids ζ̂ ⊔ ζ_ij, expanded by the union formula.
  Int full_w = 0;
  for (const auto& e : d.ends) {
    const Int sign = e.side == Side::Plus ? 1 : -1;
    Int w = e.w_hat;
    if (auto sh = d.shared.find(e.orbit); sh != d.shared.end()) w += 2 * sh->second.mult * e.eta_hat;
    full_w += sign * w;
  }
  // Each shared braid ζ_ij sits in both L₊ and L₋ with the same framing.
  for (const auto& [orbit, sh] : d.shared) {
    full_w += sh.writhe;  // inside ζ_i⁺
    full_w -= sh.writhe;  // inside ζ_j⁻
  }
  s.full_lhs = s.lhs - full_w;
  s.full_rhs = c_ref + q_from_nice_rep(d);
  return s;
}

bool check_abs_vs_rel(const NiceRepData& d, Int c_ref) { return abs_vs_rel_sides(d, c_ref).holds(); }

// Absolute gradings

HomologyModel::Element GradingContext::homology_of(const OrbitSet& a) const {
  HomologyModel::Element x = h.zero();
  for (const auto& e : a.entries()) {
    auto it = orbit_class.find(e.orbit.id());
    if (it == orbit_class.end()) {
      throw Error(ErrorCode::InvalidInput, "no homology class for orbit '" + e.orbit.id() + "'");
    }
    x = h.add(x, h.scale(e.mult, it->second));
  }
  return x;
}

Int GradingContext::modulus_for(const HomologyModel::Element& x, IndexKind kind) const {
  const Int sign = kind == IndexKind::I ? 1 : -1;
  return divisibility(h.add(h.scale(sign, c1), h.scale(2, x)), h);
}

PlaneFieldClass abs_grading(const GradingContext& ctx, const OrbitSet& a, const IndexValue& p,
                            const std::map<std::string, Int>& braid_w, const Trivialization& tau,
                            IndexKind kind) {
  const auto pd = ctx.homology_of(a);
  const Int d = ctx.modulus_for(pd, kind);
  if (p.modulus != d) {
    throw Error(ErrorCode::ModulusMismatch,
                "plane field offset is taken mod " + std::to_string(p.modulus) + ", expected " +
                    std::to_string(d),
                d);
  }
  Int value = p.value;
  for (const auto& e : a.entries()) {
    auto it = braid_w.find(e.orbit.id());
    if (it != braid_w.end()) value -= it->second;
  }
  value += kind == IndexKind::I ? cz::mu_total(a, tau) : cz::mu_prime(a, tau);
  const auto gamma = kind == IndexKind::I ? pd : ctx.h.scale(-1, pd);
  return {gamma, IndexValue::make(value, d)};
}

IndexValue p_reframed(const IndexValue& p, const OrbitSet& a, const Trivialization& from,
                      const Trivialization& to) {
  Int value = p.value;
  for (const auto& e : a.entries()) {
    value += 2 * e.mult * (to.offset(e.orbit.id()) - from.offset(e.orbit.id()));
  }
  return IndexValue::make(value, p.modulus);
}

IndexValue p_fused(const IndexValue& p, int sign) {
  return IndexValue::make(p.value + (sign >= 0 ? 1 : -1), p.modulus);
}

}  // namespace echkit::relindex
