#include "spectral/poset.hpp"

#include <algorithm>
#include <sstream>

#include "spectral/errors.hpp"

namespace spectral {

std::string to_brace_string(Subset s, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) os << ',';
    first = false;
    if (i < labels.size()) os << labels[i];
    else os << i;
  });
  os << '}';
  return os.str();
}

FinitePoset::FinitePoset(std::vector<Subset> up, std::vector<std::string> labels)
    : up_(std::move(up)), down_(up_.size()), labels_(std::move(labels)) {
  for (std::size_t i = 0; i < up_.size(); ++i) {
    up_[i].for_each([&](std::size_t j) { down_[j].insert(i); });
  }
}

FinitePoset FinitePoset::from_cover_relations(std::size_t n, std::span<const Relation> pairs,
                                              std::vector<std::string> labels) {
  if (n == 0) throw RangeError("poset must have at least one element");
  if (n > kMaxElements) throw RangeError("poset exceeds " + std::to_string(kMaxElements) + " elements");
  if (!labels.empty() && labels.size() != n) throw RangeError("label count does not match element count");

  std::vector<Subset> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
  for (const auto& [i, j] : pairs) {
    if (i >= n || j >= n) {
      throw RangeError("relation (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    up[i].insert(j);
  }
  // Warshall on bit rows: whoever reaches k also reaches everything k reaches.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].contains(k)) up[i] |= up[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (up[i].contains(j) && up[j].contains(i)) {
        throw CycleError("elements " + std::to_string(i) + " and " + std::to_string(j) +
                         " lie on a cycle");
      }
    }
  }
  return FinitePoset(std::move(up), std::move(labels));
}

FinitePoset FinitePoset::from_up_sets(std::vector<Subset> up, std::vector<std::string> labels) {
  const std::size_t n = up.size();
  if (n == 0) throw RangeError("poset must have at least one element");
  if (n > kMaxElements) throw RangeError("poset exceeds " + std::to_string(kMaxElements) + " elements");
  if (!labels.empty() && labels.size() != n) throw RangeError("label count does not match element count");
  const Subset all = Subset::full(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!up[i].is_subset_of(all)) throw RangeError("relation row has bits beyond the element count");
    if (!up[i].contains(i)) throw RangeError("relation is not reflexive at " + std::to_string(i));
    up[i].for_each([&](std::size_t j) {
      if (j != i && up[j].contains(i)) {
        throw CycleError("elements " + std::to_string(i) + " and " + std::to_string(j) + " lie on a cycle");
      }
      if (!up[j].is_subset_of(up[i])) {
        throw RangeError("relation is not transitive through " + std::to_string(j));
      }
    });
  }
  return FinitePoset(std::move(up), std::move(labels));
}

std::string FinitePoset::label(std::size_t i) const {
  return i < labels_.size() ? labels_[i] : std::to_string(i);
}

std::vector<Relation> FinitePoset::covers() const {
  std::vector<Relation> out;
  for (std::size_t i = 0; i < size(); ++i) {
    const Subset strict_up = up_[i] - Subset::singleton(i);
    strict_up.for_each([&](std::size_t j) {
      // j covers i when nothing strictly between them.
      const Subset between = strict_up & (down_[j] - Subset::singleton(j));
      if (between.empty()) out.emplace_back(i, j);
    });
  }
  return out;
}

bool FinitePoset::is_chain() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if ((up_[i] | down_[i]) != all()) return false;
  }
  return true;
}

Subset down_closure(const FinitePoset& p, Subset s) {
  Subset out;
  s.for_each([&](std::size_t i) { out |= p.down_set(i); });
  return out;
}

Subset up_closure(const FinitePoset& p, Subset s) {
  Subset out;
  s.for_each([&](std::size_t i) { out |= p.up_set(i); });
  return out;
}

bool is_down_set(const FinitePoset& p, Subset s) {
  bool ok = true;
  s.for_each([&](std::size_t i) { ok = ok && p.down_set(i).is_subset_of(s); });
  return ok;
}

bool is_up_set(const FinitePoset& p, Subset s) {
  bool ok = true;
  s.for_each([&](std::size_t i) { ok = ok && p.up_set(i).is_subset_of(s); });
  return ok;
}

Subset maximal_elements(const FinitePoset& p, Subset s) {
  Subset out;
  s.for_each([&](std::size_t i) {
    if ((p.up_set(i) & s) == Subset::singleton(i)) out.insert(i);
  });
  return out;
}

Subset minimal_elements(const FinitePoset& p, Subset s) {
  Subset out;
  s.for_each([&](std::size_t i) {
    if ((p.down_set(i) & s) == Subset::singleton(i)) out.insert(i);
  });
  return out;
}

FinitePoset order_dual(const FinitePoset& p) {
  std::vector<Subset> up(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) up[i] = p.down_set(i);
  return FinitePoset::from_up_sets(std::move(up), p.labels());
}

FinitePoset induced_subposet(const FinitePoset& p, Subset selection) {
  const auto members = selection.elements();
  if (members.empty()) throw RangeError("induced sub-poset of the empty selection");
  std::vector<Subset> up(members.size());
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (p.leq(members[a], members[b])) up[a].insert(b);
    }
    if (!p.labels().empty()) labels.push_back(p.labels()[members[a]]);
  }
  return FinitePoset::from_up_sets(std::move(up), std::move(labels));
}

std::size_t dimension(const FinitePoset& p) {
  // height[x] = length of the longest chain ending at x, filled along a linear extension.
  std::vector<std::size_t> height(p.size(), 0);
  std::size_t best = 0;
  for (auto x : linear_extension(p)) {
    (p.down_set(x) - Subset::singleton(x)).for_each([&](std::size_t y) {
      height[x] = std::max(height[x], height[y] + 1);
    });
    best = std::max(best, height[x]);
  }
  return best;
}

std::optional<std::size_t> sup(const FinitePoset& p, Subset s) {
  if (s.empty()) return std::nullopt;
  Subset bounds = p.all();
  s.for_each([&](std::size_t i) { bounds &= p.up_set(i); });
  std::optional<std::size_t> least;
  bounds.for_each([&](std::size_t m) {
    if (!least && bounds.is_subset_of(p.up_set(m))) least = m;
  });
  return least;
}

std::vector<std::size_t> linear_extension(const FinitePoset& p) {
  std::vector<std::size_t> out;
  out.reserve(p.size());
  Subset placed;
  while (out.size() < p.size()) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!placed.contains(x) && (p.down_set(x) - Subset::singleton(x)).is_subset_of(placed)) {
        out.push_back(x);
        placed.insert(x);
        break;
      }
    }
  }
  return out;
}

namespace {

struct Signature {
  std::size_t below, above, height, depth;
  bool operator==(const Signature&) const = default;
};

std::vector<Signature> signatures(const FinitePoset& p) {
  std::vector<std::size_t> height(p.size(), 0), depth(p.size(), 0);
  const auto order = linear_extension(p);
  for (auto x : order) {
    (p.down_set(x) - Subset::singleton(x)).for_each([&](std::size_t y) {
      height[x] = std::max(height[x], height[y] + 1);
    });
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto x = *it;
    (p.up_set(x) - Subset::singleton(x)).for_each([&](std::size_t y) {
      depth[x] = std::max(depth[x], depth[y] + 1);
    });
  }
  std::vector<Signature> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = {p.down_set(i).size(), p.up_set(i).size(), height[i], depth[i]};
  }
  return out;
}

class IsoSearch {
public:
  IsoSearch(const FinitePoset& p, const FinitePoset& q,
            const std::function<bool(const Bijection&)>& visit)
      : p_(p), q_(q), visit_(visit), sig_p_(signatures(p)), sig_q_(signatures(q)),
        order_(linear_extension(p)), image_(p.size(), 0) {}

  std::size_t run() {
    if (p_.size() != q_.size()) return 0;
    auto sp = sig_p_, sq = sig_q_;
    auto key = [](const Signature& s) { return std::tuple(s.below, s.above, s.height, s.depth); };
    auto cmp = [&](const Signature& a, const Signature& b) { return key(a) < key(b); };
    std::sort(sp.begin(), sp.end(), cmp);
    std::sort(sq.begin(), sq.end(), cmp);
    if (sp != sq) return 0;
    extend(0);
    return found_;
  }

private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      ++found_;
      return visit_(image_);
    }
    const auto x = order_[depth];
    for (std::size_t y = 0; y < q_.size(); ++y) {
      if (used_.contains(y) || !(sig_p_[x] == sig_q_[y])) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const auto a = order_[k];
        const auto b = image_[a];
        consistent = p_.leq(a, x) == q_.leq(b, y) && p_.leq(x, a) == q_.leq(y, b);
      }
      if (!consistent) continue;
      image_[x] = y;
      used_.insert(y);
      const bool keep_going = extend(depth + 1);
      used_.erase(y);
      if (!keep_going) return false;
    }
    return true;
  }

  const FinitePoset& p_;
  const FinitePoset& q_;
  const std::function<bool(const Bijection&)>& visit_;
  std::vector<Signature> sig_p_, sig_q_;
  std::vector<std::size_t> order_;
  Bijection image_;
  Subset used_;
  std::size_t found_ = 0;
};

}  // namespace

std::size_t for_each_isomorphism(const FinitePoset& p, const FinitePoset& q,
                                 const std::function<bool(const Bijection&)>& visit) {
  return IsoSearch(p, q, visit).run();
}

std::optional<Bijection> find_isomorphism(const FinitePoset& p, const FinitePoset& q) {
  std::optional<Bijection> out;
  for_each_isomorphism(p, q, [&](const Bijection& b) {
    out = b;
    return false;
  });
  return out;
}

}  // namespace spectral
