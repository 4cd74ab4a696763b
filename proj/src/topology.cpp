#include "spectral/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "spectral/errors.hpp"

namespace spectral {

OpenFamily open_sets(const FinitePoset& p, std::size_t capacity) {
  return {p.size(), enumerate_down_sets(p, {.include_empty = true, .capacity = capacity}), p.labels()};
}

Subset closure(const FinitePoset& p, Subset s) { return up_closure(p, s); }

Subset constructible_closure(const FinitePoset&, Subset s) { return s; }

Subset inverse_closure(const FinitePoset& p, Subset s) {
  return down_closure(p, constructible_closure(p, s));
}

bool is_inverse_closed(const FinitePoset& p, Subset s) { return is_down_set(p, s); }

bool is_irreducible_inverse_closed(const FinitePoset& p, Subset c) {
  if (c.empty() || !is_down_set(p, c)) return false;
  // Any split C = C1 u C2 into down-sets puts each maximal element in one side;
  // C is reducible iff some maximal element can be separated from the rest.
  const Subset tops = maximal_elements(p, c);
  bool reducible = false;
  tops.for_each([&](std::size_t m) {
    const Subset one = p.down_set(m);
    const Subset rest = down_closure(p, tops - Subset::singleton(m));
    if (one != c && rest != c && (one | rest) == c) reducible = true;
  });
  return !reducible;
}

std::optional<std::size_t> generic_point(const FinitePoset& p, Subset c) {
  std::optional<std::size_t> out;
  c.for_each([&](std::size_t x) {
    if (!out && p.down_set(x) == c) out = x;
  });
  return out;
}

std::vector<IrreducibleSet> irreducible_inverse_closed(const FinitePoset& p, std::size_t capacity) {
  std::vector<IrreducibleSet> out;
  for (auto c : enumerate_down_sets(p, {.include_empty = false, .capacity = capacity})) {
    if (!is_irreducible_inverse_closed(p, c)) continue;
    const auto g = generic_point(p, c);
    if (!g) throw std::logic_error("irreducible inverse-closed set " + to_brace_string(c) + " has no generic point");
    out.push_back({c, *g});
  }
  std::sort(out.begin(), out.end(),
            [](const IrreducibleSet& a, const IrreducibleSet& b) { return a.generic_point < b.generic_point; });
  if (out.size() != p.size()) throw std::logic_error("irreducible sets are not in bijection with points");
  return out;
}

FinitePoset poset_of_topology(const OpenFamily& family) {
  const std::size_t n = family.element_count;
  if (n == 0 || n > kMaxElements) throw MalformedFamilyError("element count out of range");
  const Subset all = Subset::full(n);
  std::unordered_set<Subset::Word> members;
  for (auto u : family.opens) {
    if (!u.is_subset_of(all)) throw MalformedFamilyError("open " + to_brace_string(u) + " exceeds the space");
    members.insert(u.mask());
  }
  if (!members.contains(0) || !members.contains(all.mask())) {
    throw MalformedFamilyError("family must contain the empty set and the whole space");
  }
  for (auto a : family.opens) {
    for (auto b : family.opens) {
      if (!members.contains((a | b).mask()) || !members.contains((a & b).mask())) {
        throw MalformedFamilyError("family not closed under union and intersection at " +
                                   to_brace_string(a) + ", " + to_brace_string(b));
      }
    }
  }
  // Minimal open neighbourhood of each point; y is above x iff x lies in it.
  std::vector<Subset> up(n);
  for (std::size_t y = 0; y < n; ++y) {
    Subset nbhd = all;
    for (auto u : family.opens) {
      if (u.contains(y)) nbhd &= u;
    }
    nbhd.for_each([&](std::size_t x) { up[x].insert(y); });
  }
  try {
    return FinitePoset::from_up_sets(std::move(up), family.labels);
  } catch (const CycleError& e) {
    throw MalformedFamilyError(std::string("family is not T0: ") + e.what());
  }
}

}  // namespace spectral
