#pragma once

// Foundational types: exact rational monodromy angles, Reeb orbit classes,
// trivializations as integer offsets, orbit sets, a finitely generated
// abelian group model and relative class surrogates.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace echkit {

using Int = std::int64_t;

enum class ErrorCode {
  NonCoprime,
  IntegerMultiple,
  HorizonExceeded,
  MissingOffset,
  DegenerateRegion,
  MalformedWord,
  InconsistentData,
  MismatchedTrivializations,
  ModulusMismatch,
  MissingIntersectionData,
  NoPositiveEnd,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, Int detail = 0);

  ErrorCode code() const noexcept { return code_; }
  /// Auxiliary integer, e.g. the offending k for IntegerMultiple.
  Int detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  Int detail_;
};

/// Floor of a/b for b > 0, exact for negative a.
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

/// Sum of f(k) for k = 1..n; zero when n <= 0.
template <class F>
Int sum_to(Int n, F&& f) {
  Int s = 0;
  for (Int k = 1; k <= n; ++k) s += f(k);
  return s;
}

/// Rational monodromy angle p/q with a guard horizon k_max: no k·θ with
/// 1 <= k <= k_max is an integer, so every floor used up to that horizon
/// behaves as it would for an irrational angle.
class MonodromyAngle {
 public:
  Int num() const noexcept { return p_; }
  Int den() const noexcept { return q_; }
  Int horizon() const noexcept { return k_max_; }

  /// ⌊kθ⌋; throws HorizonExceeded when k > horizon.
  Int floor_mul(Int k) const;
  Int ceil_mul(Int k) const;

  /// θ - offset. The horizon is unchanged.
  MonodromyAngle shifted(Int offset) const;
  MonodromyAngle negated() const;
  /// Representative of θ mod 1 in (0, 1).
  MonodromyAngle normalized() const;

  std::string str() const;

  friend bool operator==(const MonodromyAngle&, const MonodromyAngle&) = default;

 private:
  friend MonodromyAngle validate_angle(Int p, Int q, Int k_max);
  MonodromyAngle(Int p, Int q, Int k_max) : p_(p), q_(q), k_max_(k_max) {}

  Int p_;
  Int q_;
  Int k_max_;
};

/// Throws NonCoprime or IntegerMultiple(k) (k in Error::detail()).
MonodromyAngle validate_angle(Int p, Int q, Int k_max);

/// Parses "p/q" with the given horizon.
MonodromyAngle parse_angle(std::string_view text, Int k_max);

enum class OrbitKind { Elliptic, PositiveHyperbolic, NegativeHyperbolic };

std::string_view to_string(OrbitKind kind);

/// Symplectic type of an embedded Reeb orbit, stored in the orbit's
/// reference trivialization.
class Orbit {
 public:
  static Orbit elliptic(std::string id, MonodromyAngle angle);
  /// n must be even.
  static Orbit positive_hyperbolic(std::string id, Int n);
  /// n must be odd.
  static Orbit negative_hyperbolic(std::string id, Int n);

  const std::string& id() const noexcept { return id_; }
  OrbitKind kind() const noexcept { return kind_; }
  bool is_elliptic() const noexcept { return kind_ == OrbitKind::Elliptic; }
  bool is_hyperbolic() const noexcept { return !is_elliptic(); }
  /// Only meaningful for elliptic orbits.
  const MonodromyAngle& angle() const;
  /// Rotation integer; only meaningful for hyperbolic orbits.
  Int rotation() const noexcept { return n_; }

  /// The same orbit described in the trivialization shifted by `offset`
  /// from this one: θ ↦ θ - offset, n ↦ n - 2·offset.
  Orbit reframed(Int offset) const;

  /// Orientation-reversed model (θ ↦ -θ, n ↦ -n). Negative ends at an orbit
  /// obey the positive-end bounds of its mirror.
  Orbit mirrored() const;

  /// Largest multiplicity the stored data can evaluate exactly.
  std::optional<Int> horizon() const;

  friend bool operator==(const Orbit&, const Orbit&) = default;

 private:
  Orbit(std::string id, OrbitKind kind, std::optional<MonodromyAngle> angle, Int n)
      : id_(std::move(id)), kind_(kind), angle_(angle), n_(n) {}

  std::string id_;
  OrbitKind kind_;
  std::optional<MonodromyAngle> angle_;
  Int n_;
};

/// Trivialization choices as integer offsets from each orbit's reference
/// trivialization. The default-constructed value is the reference itself
/// (every orbit at offset 0); a trivialization built from an explicit map
/// is strict and throws MissingOffset for unknown orbits.
class Trivialization {
 public:
  Trivialization() : fallback_(0) {}
  explicit Trivialization(std::map<std::string, Int> offsets)
      : offsets_(std::move(offsets)) {}

  static Trivialization reference() { return Trivialization(); }

  Int offset(const std::string& orbit_id) const;
  bool covers(const std::string& orbit_id) const;
  Trivialization& set(const std::string& orbit_id, Int offset);
  const std::map<std::string, Int>& offsets() const noexcept { return offsets_; }

  /// Applying `a` then `b` equals applying `a + b`.
  Trivialization operator+(const Trivialization& other) const;

 private:
  std::map<std::string, Int> offsets_;
  std::optional<Int> fallback_;
};

enum class Side { Plus, Minus };

std::string_view to_string(Side side);

class OrbitSet {
 public:
  struct Entry {
    Orbit orbit;
    Int mult;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  OrbitSet() = default;
  /// Throws InvalidInput on duplicate ids or multiplicities < 1.
  OrbitSet(std::vector<Entry> entries, Side side);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  Side side() const noexcept { return side_; }
  bool empty() const noexcept { return entries_.empty(); }
  /// Zero when the orbit does not occur.
  Int multiplicity(const std::string& orbit_id) const;
  const Entry* find(const std::string& orbit_id) const;
  Int total_multiplicity() const;

  /// Orbit-set product: multiplicities of common orbits add.
  static OrbitSet product(const OrbitSet& a, const OrbitSet& b);

  friend bool operator==(const OrbitSet&, const OrbitSet&) = default;

 private:
  std::vector<Entry> entries_;
  Side side_ = Side::Plus;
};

/// Finitely generated abelian group ⊕ Z/f_i; a factor of 0 is a free Z
/// summand. Elements are coordinate vectors reduced mod each finite factor.
class HomologyModel {
 public:
  using Element = std::vector<Int>;

  HomologyModel() = default;
  explicit HomologyModel(std::vector<Int> invariant_factors);

  const std::vector<Int>& invariant_factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }

  Element zero() const { return Element(factors_.size(), 0); }
  Element reduce(Element x) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(Int k, const Element& a) const;
  bool is_torsion_only(const Element& x) const;

 private:
  void check(const Element& x) const;
  std::vector<Int> factors_;
};

/// Surrogate for Z in H_2(Y, α, β): the reference-trivialization values of
/// c_τ(Z) and Q_τ(Z) together with the bounding orbit sets.
struct RelClass {
  std::string name;
  OrbitSet alpha;  // side plus
  OrbitSet beta;   // side minus
  Int c_ref = 0;
  Int q_ref = 0;
  /// Q_τ(Z, Z') in the reference trivialization, keyed by the other class name.
  std::map<std::string, Int> q_cross;

  /// Throws InvalidInput if sides are wrong.
  void validate() const;
};

}  // namespace echkit
