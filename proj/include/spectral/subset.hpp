#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace spectral {

/// Maximum number of elements of a FinitePoset. Subsets are single machine words.
inline constexpr std::size_t kMaxElements = 64;

/// A set of poset elements stored as a 64-bit mask. Bit i set iff element i is a member.
/// The owning poset is implied by context; only bits 0..n-1 may be set.
class Subset {
public:
  using Word = std::uint64_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Word mask) : mask_(mask) {}

  static constexpr Subset singleton(std::size_t i) { return Subset(Word{1} << i); }
  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~Word{0} : (Word{1} << n) - 1);
  }
  static Subset of(std::initializer_list<std::size_t> elems) {
    Subset s;
    for (auto e : elems) s.insert(e);
    return s;
  }

  constexpr Word mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool contains(std::size_t i) const { return (mask_ >> i) & 1U; }
  constexpr void insert(std::size_t i) { mask_ |= Word{1} << i; }
  constexpr void erase(std::size_t i) { mask_ &= ~(Word{1} << i); }

  constexpr bool is_subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(Subset other) const { return (mask_ & other.mask_) != 0; }

  /// Lowest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(mask_)); }

  constexpr Subset operator|(Subset o) const { return Subset(mask_ | o.mask_); }
  constexpr Subset operator&(Subset o) const { return Subset(mask_ & o.mask_); }
  constexpr Subset operator-(Subset o) const { return Subset(mask_ & ~o.mask_); }
  constexpr Subset& operator|=(Subset o) { mask_ |= o.mask_; return *this; }
  constexpr Subset& operator&=(Subset o) { mask_ &= o.mask_; return *this; }

  constexpr bool operator==(const Subset&) const = default;

  /// Member indices in increasing order.
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (Word m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (Word m = mask_; m != 0; m &= m - 1) f(static_cast<std::size_t>(std::countr_zero(m)));
  }

private:
  Word mask_ = 0;
};

/// Canonical point order: population count first, then numeric mask value.
struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const {
    const auto pa = a.size();
    const auto pb = b.size();
    return pa != pb ? pa < pb : a.mask() < b.mask();
  }
};

/// Brace notation, e.g. "{a1,a2,b}". Labels are used when given, indices otherwise.
std::string to_brace_string(Subset s, const std::vector<std::string>& labels = {});

}  // namespace spectral
