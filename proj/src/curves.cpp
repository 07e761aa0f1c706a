#include "echkit/curves.hpp"

#include <algorithm>
#include <set>

#include "echkit/partitions.hpp"
#include "echkit/relindex.hpp"

namespace echkit::curves {

// HalfInt

Int HalfInt::to_int() const {
  if (!is_integer()) throw Error(ErrorCode::InconsistentData, "expected an integer, got " + str());
  return twice / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

// CurveComponent

Int CurveComponent::hyperbolic_ends() const {
  return static_cast<Int>(
      std::count_if(ends.begin(), ends.end(), [](const End& e) { return e.orbit.is_hyperbolic(); }));
}

Int CurveComponent::elliptic_ends() const {
  return static_cast<Int>(ends.size()) - hyperbolic_ends();
}

bool CurveComponent::has_positive_end() const {
  return std::any_of(ends.begin(), ends.end(), [](const End& e) { return e.side == Side::Plus; });
}

bool CurveComponent::is_trivial_cylinder() const {
  if (genus != 0 || delta != 0 || ends.size() != 2) return false;
  const End& a = ends[0];
  const End& b = ends[1];
  return a.side != b.side && a.mult == 1 && b.mult == 1 && a.orbit == b.orbit;
}

std::map<BraidKey, std::vector<Int>> CurveComponent::end_groups() const {
  std::map<BraidKey, std::vector<Int>> out;
  for (const End& e : ends) out[{e.side, e.orbit.id()}].push_back(e.mult);
  for (auto& [key, qs] : out) std::sort(qs.begin(), qs.end(), std::greater<>());
  return out;
}

const Orbit& CurveComponent::orbit_of(const std::string& id) const {
  for (const End& e : ends) {
    if (e.orbit.id() == id) return e.orbit;
  }
  throw Error(ErrorCode::InvalidInput, "component '" + name + "' has no end at '" + id + "'");
}

OrbitSet CurveComponent::orbit_set(Side side) const {
  std::vector<OrbitSet::Entry> entries;
  for (const End& e : ends) {
    if (e.side != side) continue;
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const OrbitSet::Entry& x) { return x.orbit.id() == e.orbit.id(); });
    if (it == entries.end()) {
      entries.push_back({e.orbit, e.mult});
    } else {
      it->mult += e.mult;
    }
  }
  return OrbitSet(std::move(entries), side);
}

Int CurveComponent::w_tau(const Trivialization& tau) const {
  const auto groups = end_groups();
  for (const auto& [key, w] : writhe) {
    if (!groups.count(key)) {
      throw Error(ErrorCode::InvalidInput, "component '" + name + "' has a writhe at '" +
                                               key.second + "' but no ends there");
    }
  }
  Int total = 0;
  for (const auto& [key, qs] : groups) {
    Int m = 0;
    for (Int q : qs) m += q;
    auto it = writhe.find(key);
    const Int w = (it == writhe.end() ? 0 : it->second) - m * (m - 1) * tau.offset(key.second);
    total += key.first == Side::Plus ? w : -w;
  }
  return total;
}

Int CurveComponent::c_tau(const Trivialization& tau) const {
  Int c = c_ref;
  for (const End& e : ends) {
    const Int shift = e.mult * tau.offset(e.orbit.id());
    c += e.side == Side::Plus ? shift : -shift;
  }
  return c;
}

Int fredholm_index(const CurveComponent& c, const Trivialization& tau) {
  return -c.chi() + 2 * c.c_tau(tau) + cz::mu_zero(c.ends, tau);
}

Int adjunction_residual(const CurveComponent& c, Int q_self) {
  return c.c_ref - (c.chi() + q_self + c.w_tau() - 2 * c.delta);
}

Int adjunction_q(const CurveComponent& c) {
  return c.c_ref - c.chi() - c.w_tau() + 2 * c.delta;
}

namespace {

// Q_τ(C_a, C_b) from its reference value: Σ± m_a(γ)·m_b(γ)·offset(γ).
Int q_shift(const CurveComponent& a, const CurveComponent& b, const Trivialization& tau) {
  Int shift = 0;
  for (Side side : {Side::Plus, Side::Minus}) {
    const OrbitSet sa = a.orbit_set(side);
    const OrbitSet sb = b.orbit_set(side);
    for (const auto& e : sa.entries()) {
      const Int mb = sb.multiplicity(e.orbit.id());
      if (mb == 0) continue;
      const Int v = e.mult * mb * tau.offset(e.orbit.id());
      shift += side == Side::Plus ? v : -v;
    }
  }
  return shift;
}

Int mu_difference(const OrbitSet& plus, const OrbitSet& minus, const Trivialization& tau,
                  bool prime) {
  if (prime) return cz::mu_prime(plus, tau) - cz::mu_prime(minus, tau);
  return cz::mu_total(plus, tau) - cz::mu_total(minus, tau);
}

}  // namespace

Int component_ech_index(const CurveComponent& c, Int q_self, const Trivialization& tau) {
  return c.c_tau(tau) + q_self + q_shift(c, c, tau) +
         mu_difference(c.orbit_set(Side::Plus), c.orbit_set(Side::Minus), tau, false);
}

Int component_j0(const CurveComponent& c, Int q_self, const Trivialization& tau) {
  return -c.c_tau(tau) + q_self + q_shift(c, c, tau) +
         mu_difference(c.orbit_set(Side::Plus), c.orbit_set(Side::Minus), tau, true);
}

SelfIntersection self_intersection(const CurveComponent& c, const Trivialization& tau) {
  SelfIntersection s;
  s.value = self_intersection(c.genus, fredholm_index(c, tau), c.hyperbolic_ends(), c.delta);
  s.nonnegative_expected = !(c.is_trivial_cylinder() && c.ends[0].orbit.is_elliptic());
  return s;
}

HalfInt self_intersection(Int genus, Int ind, Int hyperbolic_ends, Int delta) {
  return {2 * genus - 2 + ind + hyperbolic_ends + 4 * delta};
}

// CurveData

std::pair<std::string, std::string> pair_key(const std::string& a, const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

const CurveData::Piece* CurveData::find(const std::string& name) const {
  for (const auto& p : components) {
    if (p.comp.name == name) return &p;
  }
  return nullptr;
}

bool CurveData::is_simple() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Piece& p) { return p.degree == 1; });
}

OrbitSet CurveData::orbit_set(Side side) const {
  std::vector<OrbitSet::Entry> entries;
  for (const auto& p : components) {
    const OrbitSet own = p.comp.orbit_set(side);
    for (const auto& e : own.entries()) {
      auto it = std::find_if(entries.begin(), entries.end(), [&](const OrbitSet::Entry& x) {
        return x.orbit.id() == e.orbit.id();
      });
      if (it == entries.end()) {
        entries.push_back({e.orbit, p.degree * e.mult});
      } else {
        it->mult += p.degree * e.mult;
      }
    }
  }
  return OrbitSet(std::move(entries), side);
}

Int CurveData::q_entry(const std::string& a, const std::string& b) const {
  auto it = q_matrix.find(pair_key(a, b));
  if (it == q_matrix.end()) {
    throw Error(ErrorCode::MissingIntersectionData, "no Q value for (" + a + ", " + b + ")");
  }
  return it->second;
}

namespace {

void validate_curve(const CurveData& c) {
  std::set<std::string> names;
  for (const auto& p : c.components) {
    if (p.degree < 1) throw Error(ErrorCode::InvalidInput, "covering degrees must be positive");
    if (p.comp.genus < 0 || p.comp.delta < 0) {
      throw Error(ErrorCode::InvalidInput, "genus and delta must be non-negative");
    }
    if (!names.insert(p.comp.name).second) {
      throw Error(ErrorCode::InvalidInput, "component '" + p.comp.name + "' listed twice");
    }
  }
}

Int curve_c(const CurveData& c, const Trivialization& tau) {
  Int total = 0;
  for (const auto& p : c.components) total += p.degree * p.comp.c_tau(tau);
  return total;
}

Int curve_q(const CurveData& c, const Trivialization& tau) {
  Int total = 0;
  for (const auto& a : c.components) {
    for (const auto& b : c.components) {
      const Int q = c.q_entry(a.comp.name, b.comp.name) + q_shift(a.comp, b.comp, tau);
      total += a.degree * b.degree * q;
    }
  }
  return total;
}

Int merge_table(PairTable& into, const PairTable& from, const char* what) {
  for (const auto& [key, v] : from) {
    auto [it, fresh] = into.emplace(key, v);
    if (!fresh && it->second != v) {
      throw Error(ErrorCode::InconsistentData, std::string("conflicting ") + what + " for (" +
                                                   key.first + ", " + key.second + ")");
    }
  }
  return static_cast<Int>(into.size());
}

}  // namespace

Int curve_ech_index(const CurveData& c, const Trivialization& tau) {
  validate_curve(c);
  return curve_c(c, tau) + curve_q(c, tau) +
         mu_difference(c.orbit_set(Side::Plus), c.orbit_set(Side::Minus), tau, false);
}

Int curve_j0(const CurveData& c, const Trivialization& tau) {
  validate_curve(c);
  return -curve_c(c, tau) + curve_q(c, tau) +
         mu_difference(c.orbit_set(Side::Plus), c.orbit_set(Side::Minus), tau, true);
}

Int curve_j_plus(const CurveData& c, const Trivialization& tau) {
  return curve_j0(c, tau) + relindex::size_measure(c.orbit_set(Side::Plus)) -
         relindex::size_measure(c.orbit_set(Side::Minus));
}

CurveData union_curves(const CurveData& c, const CurveData& c_prime) {
  CurveData out = c;
  for (const auto& p : c_prime.components) {
    auto it = std::find_if(out.components.begin(), out.components.end(),
                           [&](const CurveData::Piece& x) { return x.comp.name == p.comp.name; });
    if (it == out.components.end()) {
      out.components.push_back(p);
    } else {
      if (!(it->comp == p.comp)) {
        throw Error(ErrorCode::InconsistentData,
                    "component '" + p.comp.name + "' described differently in the two curves");
      }
      it->degree += p.degree;
    }
  }
  merge_table(out.q_matrix, c_prime.q_matrix, "Q values");
  merge_table(out.dot_inputs, c_prime.dot_inputs, "intersection counts");
  return out;
}

HalfInt dot(const CurveData& c, const CurveData& c_prime) {
  PairTable counts = c.dot_inputs;
  merge_table(counts, c_prime.dot_inputs, "intersection counts");
  HalfInt total;
  for (const auto& a : c.components) {
    for (const auto& b : c_prime.components) {
      HalfInt ab;
      if (a.comp.name == b.comp.name) {
        ab = self_intersection(a.comp).value;
      } else {
        auto it = counts.find(pair_key(a.comp.name, b.comp.name));
        if (it == counts.end()) {
          throw Error(ErrorCode::MissingIntersectionData,
                      "no intersection count for (" + a.comp.name + ", " + b.comp.name + ")");
        }
        ab = HalfInt::from_int(it->second);
      }
      total = total + (a.degree * b.degree) * ab;
    }
  }
  return total;
}

Int curve_delta(const CurveData& c) {
  if (!c.is_simple()) throw Error(ErrorCode::InvalidInput, "δ is defined for simple curves");
  Int total = 0;
  for (const auto& p : c.components) total += p.comp.delta;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    for (std::size_t j = i + 1; j < c.components.size(); ++j) {
      CurveData a{{c.components[i]}, {}, c.dot_inputs};
      CurveData b{{c.components[j]}, {}, {}};
      total += dot(a, b).to_int();
    }
  }
  return total;
}

// Bounds

namespace {

std::vector<Int> rhos(const Orbit& orbit, const std::vector<Int>& qs) {
  std::vector<Int> out;
  out.reserve(qs.size());
  for (Int q : qs) out.push_back(cz::rho(orbit, q));
  return out;
}

Int total(const std::vector<Int>& qs) {
  Int s = 0;
  for (Int q : qs) s += q;
  return s;
}

}  // namespace

Int lemma_writhe_bound(const Orbit& orbit, const std::vector<Int>& qs) {
  const auto r = rhos(orbit, qs);
  Int b = 0;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = 0; j < qs.size(); ++j) b += std::max(qs[i] * r[j], qs[j] * r[i]);
    b -= r[i];
  }
  return b;
}

Int linking_bound(const Orbit& orbit, const std::vector<Int>& qs, const std::vector<Int>& qs2) {
  const auto r = rhos(orbit, qs);
  const auto r2 = rhos(orbit, qs2);
  Int b = 0;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = 0; j < qs2.size(); ++j) b += std::max(qs[i] * r2[j], qs2[j] * r[i]);
  }
  return b;
}

Int upper_writhe_bound(const Orbit& orbit, const std::vector<Int>& qs) {
  Int b = cz::cz_partial_sum(orbit, total(qs));
  for (Int q : qs) b -= cz::cz_stored(orbit, q);
  return b;
}

Int strengthened_writhe_bound(const Orbit& orbit, const std::vector<Int>& qs) {
  switch (orbit.kind()) {
    case OrbitKind::Elliptic:
      return lemma_writhe_bound(orbit, qs);
    case OrbitKind::PositiveHyperbolic: {
      Int b = upper_writhe_bound(orbit, qs);
      for (Int q : qs) b -= q - 1;
      return b;
    }
    case OrbitKind::NegativeHyperbolic: {
      // Evaluate in the framing where CZ(γ^k) = k, then move back.
      const Int o = (orbit.rotation() - 1) / 2;
      Int b = 0;
      for (std::size_t i = 0; i < qs.size(); ++i) {
        b += ceil_div((qs[i] - 1) * (qs[i] - 1), 2);
        for (std::size_t j = i + 1; j < qs.size(); ++j) {
          b += 2 * std::max(qs[i] * (qs[j] / 2), qs[j] * (qs[i] / 2));
        }
      }
      const Int m = total(qs);
      return b + m * (m - 1) * o;
    }
  }
  return 0;
}

Orbit oriented(const Orbit& orbit, Side side) {
  return side == Side::Plus ? orbit : orbit.mirrored();
}

MaxWrithe max_writhe(const std::vector<Int>& qs, const Orbit& orbit, const Trivialization& tau) {
  const Orbit framed = orbit.reframed(tau.offset(orbit.id()));
  MaxWrithe out;
  out.bound = upper_writhe_bound(framed, qs);
  out.lemma_bound = lemma_writhe_bound(framed, qs);
  const auto r = rhos(framed, qs);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    out.per_end.push_back(r[i] * (qs[i] - 1));
    std::vector<Int> row;
    for (std::size_t j = 0; j < qs.size(); ++j) row.push_back(std::max(qs[i] * r[j], qs[j] * r[i]));
    out.pairs.push_back(std::move(row));
  }
  return out;
}

IndexInequalityReport index_inequality_report(const CurveData& c, const Trivialization& tau) {
  if (c.components.size() != 1 || c.components[0].degree != 1) {
    throw Error(ErrorCode::InvalidInput, "the index inequality report takes one simple component");
  }
  const CurveComponent& comp = c.components[0].comp;
  const Int q_self = c.q_entry(comp.name, comp.name);

  IndexInequalityReport r;
  r.ind = fredholm_index(comp, tau);
  r.ech_index = component_ech_index(comp, q_self, tau);
  r.delta = comp.delta;
  r.holds = r.ind <= r.ech_index - 2 * r.delta;
  r.equality_admissible = true;
  for (const auto& [key, qs] : comp.end_groups()) {
    const Orbit& orbit = comp.orbit_of(key.second);
    const Orbit framed = orbit.reframed(tau.offset(orbit.id()));
    const Int m = total(qs);
    OrbitVerdict v;
    v.side = key.first;
    v.orbit = key.second;
    v.qs = qs;
    auto it = comp.writhe.find(key);
    v.writhe = (it == comp.writhe.end() ? 0 : it->second) - m * (m - 1) * tau.offset(orbit.id());
    const Int sign = key.first == Side::Plus ? 1 : -1;
    v.bound = sign * upper_writhe_bound(framed, qs);
    v.slack = v.bound - sign * v.writhe;
    const partitions::Partition actual(qs);
    v.partition_matches = key.first == Side::Plus ? partitions::p_out(orbit, m).partition == actual
                                                  : partitions::p_in(orbit, m).partition == actual;
    r.equality_admissible = r.equality_admissible && v.partition_matches;
    r.writhe_slack += v.slack;
    r.orbits.push_back(std::move(v));
  }
  return r;
}

Int union_index_slack(const CurveData& c, const CurveData& c_prime, const Trivialization& tau) {
  const CurveData u = union_curves(c, c_prime);
  const HalfInt d = dot(c, c_prime);
  return curve_ech_index(u, tau) - curve_ech_index(c, tau) - curve_ech_index(c_prime, tau) -
         d.twice;
}

Int huge_slack(const HugeInput& in, const Trivialization& tau, bool j_version) {
  const Int o = tau.offset(in.orbit.id());
  const Orbit framed = in.orbit.reframed(o);
  const Int drop = j_version ? 1 : 0;
  const Int eps = framed.is_elliptic() ? 1 : 0;

  std::vector<Int> m(in.comps.size());
  Int big_m = 0;
  Int big_m_prime = 0;
  for (std::size_t a = 0; a < in.comps.size(); ++a) {
    const auto& c = in.comps[a];
    if (c.d < 0 || c.d_prime < 0) throw Error(ErrorCode::InvalidInput, "degrees must be >= 0");
    m[a] = total(c.qs);
    big_m += c.d * m[a];
    big_m_prime += c.d_prime * m[a];
  }
  auto s = [&](Int n) { return cz::cz_partial_sum(framed, n - drop); };
  Int slack = s(big_m + big_m_prime) - s(big_m) - s(big_m_prime);

  for (const auto& [key, ell_ref] : in.ell) {
    const auto [a, b] = key;
    if (a >= b || b >= in.comps.size()) {
      throw Error(ErrorCode::InvalidInput, "linking entries must be keyed by a < b");
    }
    const Int ell = ell_ref - m[a] * m[b] * o;
    const Int weight = in.comps[a].d * in.comps[b].d_prime + in.comps[b].d * in.comps[a].d_prime;
    slack -= 2 * weight * ell;
  }
  for (std::size_t a = 0; a < in.comps.size(); ++a) {
    const auto& c = in.comps[a];
    Int term = -eps * static_cast<Int>(c.qs.size()) + 2 * (c.w - m[a] * (m[a] - 1) * o);
    for (Int q : c.qs) term += cz::cz_stored(framed, q);
    slack -= c.d * c.d_prime * term;
  }
  // Pairs without an ℓ entry still carry the framing term of ℓ = 0.
  for (std::size_t a = 0; a < in.comps.size(); ++a) {
    for (std::size_t b = a + 1; b < in.comps.size(); ++b) {
      if (in.ell.count({a, b})) continue;
      const Int weight = in.comps[a].d * in.comps[b].d_prime + in.comps[b].d * in.comps[a].d_prime;
      slack -= 2 * weight * (-m[a] * m[b] * o);
    }
  }
  return slack;
}

Int orbit_e_plus_n(const Orbit& orbit, Int m, Int m_prime) {
  if (m <= 0 || m_prime <= 0) return 0;
  switch (orbit.kind()) {
    case OrbitKind::Elliptic: return 1;
    case OrbitKind::PositiveHyperbolic: return 0;
    case OrbitKind::NegativeHyperbolic: return (m % 2 == 1 && m_prime % 2 == 1) ? 1 : 0;
  }
  return 0;
}

Int j_bound_rhs(const CurveComponent& c) {
  Int rhs = 2 * (c.genus - 1 + c.delta);
  for (const auto& [key, qs] : c.end_groups()) {
    const Orbit& orbit = c.orbit_of(key.second);
    const Int n = static_cast<Int>(qs.size());
    const Int m = total(qs);
    switch (orbit.kind()) {
      case OrbitKind::Elliptic: rhs += 2 * n - 1; break;
      case OrbitKind::PositiveHyperbolic: rhs += m; break;
      case OrbitKind::NegativeHyperbolic: {
        const Int odd = static_cast<Int>(
            std::count_if(qs.begin(), qs.end(), [](Int q) { return q % 2 != 0; }));
        if ((m + odd) % 2 != 0) {
          throw Error(ErrorCode::InconsistentData, "m + n_odd must be even");
        }
        rhs += (m + odd) / 2;
        break;
      }
    }
  }
  return rhs;
}

bool euler_bound_check(const CurveComponent& c, Int j0) { return -c.chi() <= j0 - 2 * c.delta; }

JUnionSlack j_union_slack(const CurveData& c, const CurveData& c_prime, const Trivialization& tau) {
  const CurveData u = union_curves(c, c_prime);
  JUnionSlack out;
  const Int raw = curve_j0(u, tau) - curve_j0(c, tau) - curve_j0(c_prime, tau) -
                  dot(c, c_prime).twice;
  for (Side side : {Side::Plus, Side::Minus}) {
    const OrbitSet a = c.orbit_set(side);
    const OrbitSet b = c_prime.orbit_set(side);
    for (const auto& e : a.entries()) {
      const Int contribution = orbit_e_plus_n(e.orbit, e.mult, b.multiplicity(e.orbit.id()));
      if (contribution == 0) continue;
      const bool elliptic = e.orbit.is_elliptic();
      if (side == Side::Plus) {
        (elliptic ? out.e_plus : out.n_plus) += 1;
      } else {
        (elliptic ? out.e_minus : out.n_minus) += 1;
      }
    }
  }
  out.e = out.e_plus + out.e_minus;
  out.n = out.n_plus + out.n_minus;
  out.slack = raw - out.e - out.n;
  return out;
}

SizeIdentity size_identity(const OrbitSet& a, const OrbitSet& b) {
  SizeIdentity s;
  s.lhs = relindex::size_measure(OrbitSet::product(a, b));
  s.rhs = relindex::size_measure(a) + relindex::size_measure(b);
  for (const auto& e : a.entries()) s.rhs -= orbit_e_plus_n(e.orbit, e.mult, b.multiplicity(e.orbit.id()));
  return s;
}

JPlusReport j_plus_pipeline(const CurveData& c, const Trivialization& tau) {
  validate_curve(c);
  JPlusReport report;
  // Units of the induction: a whole cover of a trivial cylinder, or one
  // copy of any other simple component.
  std::vector<CurveData::Piece> units;
  for (const auto& p : c.components) {
    JPlusComponent jc;
    jc.name = p.comp.name;
    jc.degree = p.degree;
    jc.trivial_cylinder = p.comp.is_trivial_cylinder();
    if (jc.trivial_cylinder) {
      jc.j_plus = curve_j_plus(CurveData{{p}, c.q_matrix, c.dot_inputs}, tau);
      units.push_back(p);
    } else {
      if (!p.comp.has_positive_end()) {
        throw Error(ErrorCode::NoPositiveEnd,
                    "component '" + p.comp.name + "' has no positive end");
      }
      CurveData::Piece simple{p.comp, 1};
      jc.j_plus = curve_j_plus(CurveData{{simple}, c.q_matrix, c.dot_inputs}, tau);
      jc.lower_bound =
          2 * (p.comp.genus - 1 + relindex::size_measure(p.comp.orbit_set(Side::Plus)) +
               p.comp.delta);
      for (Int k = 0; k < p.degree; ++k) units.push_back(simple);
    }
    report.components.push_back(jc);
  }

  CurveData acc{{}, c.q_matrix, c.dot_inputs};
  for (const auto& unit : units) {
    CurveData piece{{unit}, c.q_matrix, c.dot_inputs};
    if (acc.components.empty()) {
      acc = piece;
      continue;
    }
    JPlusStep step;
    step.added = unit.comp.name;
    step.j_plus_before = curve_j_plus(acc, tau);
    step.j_plus_piece = curve_j_plus(piece, tau);
    const CurveData next = union_curves(acc, piece);
    step.j_plus_after = curve_j_plus(next, tau);
    step.two_dot = dot(acc, piece).twice;
    const JUnionSlack js = j_union_slack(acc, piece, tau);
    step.step_bound = 2 * (js.e_minus + js.n_minus);
    step.size_identity_holds = size_identity(acc.orbit_set(Side::Plus), piece.orbit_set(Side::Plus)).holds() &&
                               size_identity(acc.orbit_set(Side::Minus), piece.orbit_set(Side::Minus)).holds();
    report.steps.push_back(step);
    acc = next;
  }
  report.j_plus = curve_j_plus(c, tau);
  return report;
}

}  // namespace echkit::curves
