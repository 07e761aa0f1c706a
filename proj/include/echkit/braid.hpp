#pragma once

// Closed annular braids around an orbit, encoded as words on slots 0..m
// where slot 0 initially holds the axis (the orbit itself). Writhe,
// linking and winding are signed crossing counts read off the word.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "echkit/core.hpp"

namespace echkit::braid {

struct Letter {
  Int position = 0;  // swaps the strands in slots position and position + 1
  int sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct BraidWord {
  Int m = 0;  // strands 1..m; strand 0 is the axis
  std::vector<Letter> letters;
  /// Named components, each a set of strand labels in 1..m.
  std::map<std::string, std::vector<Int>> components;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Strand occupying each slot after reading the whole word.
std::vector<Int> final_slots(const BraidWord& b);

/// Throws MalformedWord unless letters are in range, components partition
/// 1..m, the axis returns to slot 0 and every component is preserved.
void validate(const BraidWord& b);

struct Invariants {
  std::map<std::string, Int> w;
  /// Keyed by (a, b) with a < b; pairs with linking number 0 are omitted.
  std::map<std::pair<std::string, std::string>, Int> link;
  std::map<std::string, Int> eta;

  /// Symmetric lookup; zero for pairs never crossing.
  Int linking(const std::string& a, const std::string& b) const;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants braid_invariants(const BraidWord& b);

/// Invariants after changing the framing by delta = τ′ - τ.
Invariants reframe(const Invariants& invs, const std::map<std::string, Int>& strand_counts,
                   Int delta);

/// Strand count of every component of b.
std::map<std::string, Int> strand_counts(const BraidWord& b);

/// Appends Δ² on slots 1..m, all letters of one sign. With `include_axis`
/// the twist runs over slots 0..m and also links every strand with the axis.
BraidWord insert_full_twist(const BraidWord& b, bool positive, bool include_axis = false);

/// w(c1) + w(c2) + 2·ℓ(c1, c2).
Int union_writhe(const Invariants& invs, const std::string& c1, const std::string& c2);

/// Replaces components c1 and c2 by a single component named `merged`.
BraidWord merge_components(const BraidWord& b, const std::string& c1, const std::string& c2,
                           const std::string& merged);

}  // namespace echkit::braid
