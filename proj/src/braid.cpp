#include "echkit/braid.hpp"

#include <algorithm>
#include <numeric>

namespace echkit::braid {

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedWord, why); }

// Component name of every strand 1..m; index 0 (the axis) stays empty.
std::vector<std::string> owner_table(const BraidWord& b) {
  if (b.m < 0) malformed("negative strand count");
  std::vector<std::string> owner(static_cast<std::size_t>(b.m + 1));
  for (const auto& [name, strands] : b.components) {
    if (strands.empty()) malformed("component '" + name + "' has no strands");
    for (Int s : strands) {
      if (s < 1 || s > b.m) malformed("strand " + std::to_string(s) + " out of range");
      auto& slot = owner[static_cast<std::size_t>(s)];
      if (!slot.empty()) malformed("strand " + std::to_string(s) + " listed twice");
      slot = name;
    }
  }
  for (Int s = 1; s <= b.m; ++s) {
    if (owner[static_cast<std::size_t>(s)].empty()) {
      malformed("strand " + std::to_string(s) + " belongs to no component");
    }
  }
  return owner;
}

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

std::vector<Int> final_slots(const BraidWord& b) {
  std::vector<Int> slot(static_cast<std::size_t>(b.m + 1));
  std::iota(slot.begin(), slot.end(), Int{0});
  for (const Letter& l : b.letters) {
    if (l.position < 0 || l.position >= b.m) {
      malformed("letter position " + std::to_string(l.position) + " out of range");
    }
    if (l.sign != 1 && l.sign != -1) malformed("letter sign must be +1 or -1");
    std::swap(slot[static_cast<std::size_t>(l.position)],
              slot[static_cast<std::size_t>(l.position + 1)]);
  }
  return slot;
}

void validate(const BraidWord& b) {
  const auto owner = owner_table(b);
  const auto slot = final_slots(b);
  if (slot[0] != 0) malformed("axis does not return to slot 0");
  // Strand slot[i] ends where strand i started, so the closure joins them.
  for (std::size_t i = 1; i < slot.size(); ++i) {
    if (owner[static_cast<std::size_t>(slot[i])] != owner[i]) {
      malformed("closure mixes components '" + owner[i] + "' and '" +
                owner[static_cast<std::size_t>(slot[i])] + "'");
    }
  }
  // Letters that move the axis, wherever it currently sits.
  std::vector<Int> cur(static_cast<std::size_t>(b.m + 1));
  std::iota(cur.begin(), cur.end(), Int{0});
  Int axis_crossings = 0;
  for (const Letter& l : b.letters) {
    const auto i = static_cast<std::size_t>(l.position);
    if (cur[i] == 0 || cur[i + 1] == 0) ++axis_crossings;
    std::swap(cur[i], cur[i + 1]);
  }
  if (axis_crossings % 2 != 0) malformed("odd number of axis crossings");
}

Int Invariants::linking(const std::string& a, const std::string& b) const {
  auto it = link.find(ordered(a, b));
  return it == link.end() ? 0 : it->second;
}

Invariants braid_invariants(const BraidWord& b) {
  validate(b);
  const auto owner = owner_table(b);
  Invariants out;
  for (const auto& [name, strands] : b.components) {
    out.w[name] = 0;
    out.eta[name] = 0;
  }
  std::map<std::pair<std::string, std::string>, Int> twice_link;
  std::map<std::string, Int> twice_eta;

  std::vector<Int> slot(static_cast<std::size_t>(b.m + 1));
  std::iota(slot.begin(), slot.end(), Int{0});
  for (const Letter& l : b.letters) {
    const auto i = static_cast<std::size_t>(l.position);
    const Int s1 = slot[i];
    const Int s2 = slot[i + 1];
    if (s1 == 0 || s2 == 0) {
      twice_eta[owner[static_cast<std::size_t>(s1 == 0 ? s2 : s1)]] += l.sign;
    } else {
      const auto& c1 = owner[static_cast<std::size_t>(s1)];
      const auto& c2 = owner[static_cast<std::size_t>(s2)];
      if (c1 == c2) {
        out.w[c1] += l.sign;
      } else {
        twice_link[ordered(c1, c2)] += l.sign;
      }
    }
    std::swap(slot[i], slot[i + 1]);
  }
  for (const auto& [key, v] : twice_link) {
    if (v % 2 != 0) malformed("odd crossing count between two components");
    if (v != 0) out.link[key] = v / 2;
  }
  for (const auto& [name, v] : twice_eta) {
    if (v % 2 != 0) malformed("odd crossing count with the axis");
    out.eta[name] = v / 2;
  }
  return out;
}

Invariants reframe(const Invariants& invs, const std::map<std::string, Int>& counts, Int delta) {
  auto count = [&](const std::string& c) {
    auto it = counts.find(c);
    if (it == counts.end()) throw Error(ErrorCode::InvalidInput, "no strand count for '" + c + "'");
    return it->second;
  };
  Invariants out = invs;
  for (auto& [c, w] : out.w) w -= count(c) * (count(c) - 1) * delta;
  for (auto& [key, l] : out.link) l -= count(key.first) * count(key.second) * delta;
  // Pairs that never crossed still pick up the framing term.
  for (auto a = out.w.begin(); a != out.w.end(); ++a) {
    for (auto b = std::next(a); b != out.w.end(); ++b) {
      const auto key = ordered(a->first, b->first);
      if (!invs.link.count(key) && delta != 0) {
        out.link[key] = -count(a->first) * count(b->first) * delta;
      }
    }
  }
  for (auto& [c, e] : out.eta) e -= count(c) * delta;
  std::erase_if(out.link, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<std::string, Int> strand_counts(const BraidWord& b) {
  std::map<std::string, Int> out;
  for (const auto& [name, strands] : b.components) out[name] = static_cast<Int>(strands.size());
  return out;
}

BraidWord insert_full_twist(const BraidWord& b, bool positive, bool include_axis) {
  BraidWord out = b;
  const int sign = positive ? 1 : -1;
  const Int lo = include_axis ? 0 : 1;
  const Int hi = b.m;  // last slot in the twisted block
  // Δ = (σ_lo)(σ_{lo+1} σ_lo)...(σ_{hi-1} ... σ_lo); Δ² is two copies.
  for (int copy = 0; copy < 2; ++copy) {
    for (Int top = lo + 1; top <= hi; ++top) {
      for (Int p = top - 1; p >= lo; --p) out.letters.push_back({p, sign});
    }
  }
  return out;
}

Int union_writhe(const Invariants& invs, const std::string& c1, const std::string& c2) {
  auto w = [&](const std::string& c) {
    auto it = invs.w.find(c);
    if (it == invs.w.end()) throw Error(ErrorCode::InvalidInput, "unknown component '" + c + "'");
    return it->second;
  };
  return w(c1) + w(c2) + 2 * invs.linking(c1, c2);
}

BraidWord merge_components(const BraidWord& b, const std::string& c1, const std::string& c2,
                           const std::string& merged) {
  auto i1 = b.components.find(c1);
  auto i2 = b.components.find(c2);
  if (c1 == c2 || i1 == b.components.end() || i2 == b.components.end()) {
    throw Error(ErrorCode::InvalidInput, "merge needs two distinct existing components");
  }
  BraidWord out = b;
  std::vector<Int> strands = i1->second;
  strands.insert(strands.end(), i2->second.begin(), i2->second.end());
  std::sort(strands.begin(), strands.end());
  out.components.erase(c1);
  out.components.erase(c2);
  out.components[merged] = std::move(strands);
  return out;
}

}  // namespace echkit::braid
