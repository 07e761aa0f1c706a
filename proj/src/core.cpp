#include "echkit/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace echkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::IntegerMultiple: return "IntegerMultiple";
    case ErrorCode::HorizonExceeded: return "HorizonExceeded";
    case ErrorCode::MissingOffset: return "MissingOffset";
    case ErrorCode::DegenerateRegion: return "DegenerateRegion";
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::InconsistentData: return "InconsistentData";
    case ErrorCode::MismatchedTrivializations: return "MismatchedTrivializations";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::MissingIntersectionData: return "MissingIntersectionData";
    case ErrorCode::NoPositiveEnd: return "NoPositiveEnd";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, Int detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(detail) {}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

// MonodromyAngle

Int MonodromyAngle::floor_mul(Int k) const {
  if (k > k_max_) {
    throw Error(ErrorCode::HorizonExceeded,
                "multiplicity " + std::to_string(k) + " exceeds horizon " +
                    std::to_string(k_max_) + " of angle " + str(),
                k);
  }
  return floor_div(k * p_, q_);
}

Int MonodromyAngle::ceil_mul(Int k) const {
  if (k > k_max_) {
    throw Error(ErrorCode::HorizonExceeded,
                "multiplicity " + std::to_string(k) + " exceeds horizon " +
                    std::to_string(k_max_) + " of angle " + str(),
                k);
  }
  return ceil_div(k * p_, q_);
}

MonodromyAngle MonodromyAngle::shifted(Int offset) const {
  return MonodromyAngle(p_ - offset * q_, q_, k_max_);
}

MonodromyAngle MonodromyAngle::negated() const { return MonodromyAngle(-p_, q_, k_max_); }

MonodromyAngle MonodromyAngle::normalized() const {
  return shifted(floor_div(p_, q_));
}

std::string MonodromyAngle::str() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

MonodromyAngle validate_angle(Int p, Int q, Int k_max) {
  if (q < 1) throw Error(ErrorCode::InvalidInput, "denominator must be positive");
  if (k_max < 1) throw Error(ErrorCode::InvalidInput, "horizon must be positive");
  const Int g = std::gcd(p < 0 ? -p : p, q);
  if (g != 1) {
    throw Error(ErrorCode::NonCoprime,
                std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms", g);
  }
  // With gcd(p, q) = 1, q | k·p iff q | k; the first integer multiple is k = q.
  if (q <= k_max) {
    throw Error(ErrorCode::IntegerMultiple,
                std::to_string(q) + "·" + std::to_string(p) + "/" + std::to_string(q) +
                    " is an integer",
                q);
  }
  return MonodromyAngle(p, q, k_max);
}

MonodromyAngle parse_angle(std::string_view text, Int k_max) {
  const auto slash = text.find('/');
  auto parse = [&](std::string_view s) {
    Int v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorCode::InvalidInput, "bad rational '" + std::string(text) + "'");
    }
    return v;
  };
  if (slash == std::string_view::npos) {
    throw Error(ErrorCode::InvalidInput, "expected p/q, got '" + std::string(text) + "'");
  }
  return validate_angle(parse(text.substr(0, slash)), parse(text.substr(slash + 1)), k_max);
}

// Orbit

std::string_view to_string(OrbitKind kind) {
  switch (kind) {
    case OrbitKind::Elliptic: return "elliptic";
    case OrbitKind::PositiveHyperbolic: return "hyp+";
    case OrbitKind::NegativeHyperbolic: return "hyp-";
  }
  return "?";
}

Orbit Orbit::elliptic(std::string id, MonodromyAngle angle) {
  return Orbit(std::move(id), OrbitKind::Elliptic, angle, 0);
}

Orbit Orbit::positive_hyperbolic(std::string id, Int n) {
  if (n % 2 != 0) {
    throw Error(ErrorCode::InvalidInput, "positive hyperbolic rotation must be even");
  }
  return Orbit(std::move(id), OrbitKind::PositiveHyperbolic, std::nullopt, n);
}

Orbit Orbit::negative_hyperbolic(std::string id, Int n) {
  if (n % 2 == 0) {
    throw Error(ErrorCode::InvalidInput, "negative hyperbolic rotation must be odd");
  }
  return Orbit(std::move(id), OrbitKind::NegativeHyperbolic, std::nullopt, n);
}

const MonodromyAngle& Orbit::angle() const {
  if (!angle_) throw Error(ErrorCode::InvalidInput, "orbit '" + id_ + "' is not elliptic");
  return *angle_;
}

Orbit Orbit::reframed(Int offset) const {
  Orbit o = *this;
  if (angle_) {
    o.angle_ = angle_->shifted(offset);
  } else {
    o.n_ = n_ - 2 * offset;
  }
  return o;
}

Orbit Orbit::mirrored() const {
  Orbit o = *this;
  if (angle_) {
    o.angle_ = angle_->negated();
  } else {
    o.n_ = -n_;
  }
  return o;
}

std::optional<Int> Orbit::horizon() const {
  if (angle_) return angle_->horizon();
  return std::nullopt;
}

// Trivialization

Int Trivialization::offset(const std::string& orbit_id) const {
  if (auto it = offsets_.find(orbit_id); it != offsets_.end()) return it->second;
  if (fallback_) return *fallback_;
  throw Error(ErrorCode::MissingOffset, "no trivialization offset for orbit '" + orbit_id + "'");
}

bool Trivialization::covers(const std::string& orbit_id) const {
  return fallback_.has_value() || offsets_.count(orbit_id) > 0;
}

Trivialization& Trivialization::set(const std::string& orbit_id, Int offset) {
  offsets_[orbit_id] = offset;
  return *this;
}

Trivialization Trivialization::operator+(const Trivialization& other) const {
  Trivialization out;
  out.fallback_.reset();
  if (fallback_ && other.fallback_) out.fallback_ = *fallback_ + *other.fallback_;
  std::set<std::string> ids;
  for (const auto& [id, v] : offsets_) ids.insert(id);
  for (const auto& [id, v] : other.offsets_) ids.insert(id);
  for (const auto& id : ids) {
    if (covers(id) && other.covers(id)) out.offsets_[id] = offset(id) + other.offset(id);
  }
  return out;
}

std::string_view to_string(Side side) { return side == Side::Plus ? "plus" : "minus"; }

// OrbitSet

OrbitSet::OrbitSet(std::vector<Entry> entries, Side side)
    : entries_(std::move(entries)), side_(side) {
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (e.mult < 1) {
      throw Error(ErrorCode::InvalidInput,
                  "multiplicity of '" + e.orbit.id() + "' must be positive");
    }
    if (!seen.insert(e.orbit.id()).second) {
      throw Error(ErrorCode::InvalidInput, "orbit '" + e.orbit.id() + "' repeated in orbit set");
    }
  }
}

const OrbitSet::Entry* OrbitSet::find(const std::string& orbit_id) const {
  for (const auto& e : entries_) {
    if (e.orbit.id() == orbit_id) return &e;
  }
  return nullptr;
}

Int OrbitSet::multiplicity(const std::string& orbit_id) const {
  const Entry* e = find(orbit_id);
  return e ? e->mult : 0;
}

Int OrbitSet::total_multiplicity() const {
  Int s = 0;
  for (const auto& e : entries_) s += e.mult;
  return s;
}

OrbitSet OrbitSet::product(const OrbitSet& a, const OrbitSet& b) {
  std::vector<Entry> out = a.entries_;
  for (const auto& e : b.entries_) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const Entry& x) { return x.orbit.id() == e.orbit.id(); });
    if (it == out.end()) {
      out.push_back(e);
    } else {
      if (!(it->orbit == e.orbit)) {
        throw Error(ErrorCode::InvalidInput,
                    "orbit '" + e.orbit.id() + "' has conflicting descriptions");
      }
      it->mult += e.mult;
    }
  }
  return OrbitSet(std::move(out), a.side_);
}

// HomologyModel

HomologyModel::HomologyModel(std::vector<Int> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (Int f : factors_) {
    if (f < 0) throw Error(ErrorCode::InvalidInput, "invariant factors must be non-negative");
  }
}

void HomologyModel::check(const Element& x) const {
  if (x.size() != factors_.size()) {
    throw Error(ErrorCode::InvalidInput, "element has " + std::to_string(x.size()) +
                                             " coordinates, group has rank " +
                                             std::to_string(factors_.size()));
  }
}

HomologyModel::Element HomologyModel::reduce(Element x) const {
  check(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (factors_[i] > 0) x[i] = x[i] - factors_[i] * floor_div(x[i], factors_[i]);
  }
  return x;
}

HomologyModel::Element HomologyModel::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return reduce(std::move(out));
}

HomologyModel::Element HomologyModel::scale(Int k, const Element& a) const {
  check(a);
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return reduce(std::move(out));
}

bool HomologyModel::is_torsion_only(const Element& x) const {
  check(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (factors_[i] == 0 && x[i] != 0) return false;
  }
  return true;
}

void RelClass::validate() const {
  if (alpha.side() != Side::Plus) {
    throw Error(ErrorCode::InvalidInput, "relative class '" + name + "': alpha must be side plus");
  }
  if (!beta.empty() && beta.side() != Side::Minus) {
    throw Error(ErrorCode::InvalidInput, "relative class '" + name + "': beta must be side minus");
  }
}

}  // namespace echkit
