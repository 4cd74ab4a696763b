#include "spectral/ideals.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include "spectral/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spectral {

std::size_t default_capacity() {
  if (const char* env = std::getenv("SPECTRAL_CAPACITY")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCapacity;
}

namespace {

[[noreturn]] void over_capacity(std::size_t capacity) {
  throw CapacityError("down-set count exceeds capacity " + std::to_string(capacity));
}

void check_filter_size(const FinitePoset& p) {
  if (p.size() > kMaxFilterElements) {
    throw CapacityError("mask filter limited to " + std::to_string(kMaxFilterElements) + " elements");
  }
}

// Predecessor masks indexed by element, for the inner filter loop.
std::vector<Subset::Word> strict_down_masks(const FinitePoset& p) {
  std::vector<Subset::Word> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = (p.down_set(i) - Subset::singleton(i)).mask();
  return out;
}

inline bool mask_is_down_set(Subset::Word m, const std::vector<Subset::Word>& below) {
  for (Subset::Word r = m; r != 0; r &= r - 1) {
    if ((below[static_cast<std::size_t>(std::countr_zero(r))] & ~m) != 0) return false;
  }
  return true;
}

void finish(std::vector<Subset>& out) { std::sort(out.begin(), out.end(), CanonicalLess{}); }

}  // namespace

std::vector<Subset> down_sets_filter_serial(const FinitePoset& p, IdealQuery q) {
  check_filter_size(p);
  const auto below = strict_down_masks(p);
  const Subset::Word limit = Subset::Word{1} << p.size();
  std::vector<Subset> out;
  for (Subset::Word m = q.include_empty ? 0 : 1; m < limit; ++m) {
    if (mask_is_down_set(m, below)) {
      if (out.size() == q.capacity) over_capacity(q.capacity);
      out.emplace_back(m);
    }
  }
  finish(out);
  return out;
}

std::vector<Subset> down_sets_filter_parallel(const FinitePoset& p, IdealQuery q) {
  check_filter_size(p);
  const auto below = strict_down_masks(p);
  const auto limit = static_cast<long long>(Subset::Word{1} << p.size());
  const long long start = q.include_empty ? 0 : 1;
  std::atomic<std::size_t> count{0};
  std::atomic<bool> overflow{false};
  std::vector<std::vector<Subset>> parts;

#pragma omp parallel
  {
#ifdef _OPENMP
    const auto nthreads = static_cast<std::size_t>(omp_get_num_threads());
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
#else
    const std::size_t nthreads = 1, tid = 0;
#endif
#pragma omp single
    parts.resize(nthreads);

    std::vector<Subset> local;
#pragma omp for schedule(static)
    for (long long m = start; m < limit; ++m) {
      if (overflow.load(std::memory_order_relaxed)) continue;
      const auto mask = static_cast<Subset::Word>(m);
      if (mask_is_down_set(mask, below)) {
        if (count.fetch_add(1, std::memory_order_relaxed) >= q.capacity) {
          overflow.store(true, std::memory_order_relaxed);
          continue;
        }
        local.emplace_back(mask);
      }
    }
    parts[tid] = std::move(local);
  }

  if (overflow) over_capacity(q.capacity);
  std::vector<Subset> out;
  out.reserve(count.load());
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  finish(out);
  return out;
}

namespace {

// One node of the include/exclude walk over a linear extension.
struct Frame {
  std::size_t depth;
  Subset included;
  Subset forbidden;
};

class ExtensionWalk {
public:
  ExtensionWalk(const FinitePoset& p, std::size_t capacity, std::atomic<std::size_t>& count,
                std::atomic<bool>& overflow)
      : p_(p), order_(linear_extension(p)), capacity_(capacity), count_(count), overflow_(overflow) {}

  std::size_t depth_limit() const { return order_.size(); }

  // Children of a frame; a frame at full depth is a finished down-set.
  void expand(const Frame& f, std::vector<Frame>& next) const {
    const auto x = order_[f.depth];
    if (f.forbidden.contains(x)) {
      next.push_back({f.depth + 1, f.included, f.forbidden});
      return;
    }
    // Every predecessor of x precedes it in the extension and is not forbidden, so it is included.
    next.push_back({f.depth + 1, f.included | Subset::singleton(x), f.forbidden});
    next.push_back({f.depth + 1, f.included, f.forbidden | p_.up_set(x)});
  }

  void run(const Frame& f, std::vector<Subset>& out) {
    if (overflow_.load(std::memory_order_relaxed)) return;
    if (f.depth == order_.size()) {
      emit(f.included, out);
      return;
    }
    const auto x = order_[f.depth];
    if (f.forbidden.contains(x)) {
      run({f.depth + 1, f.included, f.forbidden}, out);
      return;
    }
    run({f.depth + 1, f.included | Subset::singleton(x), f.forbidden}, out);
    run({f.depth + 1, f.included, f.forbidden | p_.up_set(x)}, out);
  }

  bool include_empty = false;

private:
  void emit(Subset s, std::vector<Subset>& out) {
    if (s.empty() && !include_empty) return;
    if (count_.fetch_add(1, std::memory_order_relaxed) >= capacity_) {
      overflow_.store(true, std::memory_order_relaxed);
      return;
    }
    out.push_back(s);
  }

  const FinitePoset& p_;
  std::vector<std::size_t> order_;
  std::size_t capacity_;
  std::atomic<std::size_t>& count_;
  std::atomic<bool>& overflow_;
};

}  // namespace

std::vector<Subset> down_sets_extension_serial(const FinitePoset& p, IdealQuery q) {
  std::atomic<std::size_t> count{0};
  std::atomic<bool> overflow{false};
  ExtensionWalk walk(p, q.capacity, count, overflow);
  walk.include_empty = q.include_empty;
  std::vector<Subset> out;
  walk.run({0, Subset{}, Subset{}}, out);
  if (overflow) over_capacity(q.capacity);
  finish(out);
  return out;
}

std::vector<Subset> down_sets_extension_parallel(const FinitePoset& p, IdealQuery q) {
  std::atomic<std::size_t> count{0};
  std::atomic<bool> overflow{false};
  ExtensionWalk walk(p, q.capacity, count, overflow);
  walk.include_empty = q.include_empty;

#ifdef _OPENMP
  const std::size_t target = 16 * static_cast<std::size_t>(omp_get_max_threads());
#else
  const std::size_t target = 1;
#endif
  // Breadth-first split until there are enough independent subtrees.
  std::vector<Frame> frontier{{0, Subset{}, Subset{}}};
  std::vector<Subset> out;
  while (frontier.size() < target) {
    std::vector<Frame> next;
    bool grew = false;
    for (const auto& f : frontier) {
      if (f.depth == walk.depth_limit()) {
        walk.run(f, out);
      } else {
        walk.expand(f, next);
        grew = true;
      }
    }
    frontier = std::move(next);
    if (!grew) break;
  }

  std::vector<std::vector<Subset>> parts(frontier.size());
  const auto tasks = static_cast<long long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long t = 0; t < tasks; ++t) {
    walk.run(frontier[static_cast<std::size_t>(t)], parts[static_cast<std::size_t>(t)]);
  }
  if (overflow) over_capacity(q.capacity);
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  finish(out);
  return out;
}

std::vector<Subset> enumerate_down_sets(const FinitePoset& p, IdealQuery q) {
  return p.size() <= kFilterCutoff ? down_sets_filter_parallel(p, q) : down_sets_extension_parallel(p, q);
}

}  // namespace spectral
