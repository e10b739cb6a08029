#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "gabriel/interval_set.hpp"

namespace gabriel {

/// Class membership of a set of intervals. Each flag implies the ones
/// listed before it, except that pre_division and congruence are
/// independent refinements of basic.
struct ClassFlags {
  bool abstract = false;
  bool basic = false;
  bool congruence = false;
  bool pre_division = false;
  bool division = false;

  bool operator==(const ClassFlags&) const = default;
};

enum class ClosureRule { similarity, subinterval, abutting, join };

/// A closure condition the set fails, with the interval it is missing.
struct Violation {
  ClosureRule rule;
  std::size_t missing;
};

namespace detail {

inline std::optional<Violation> similarity_violation(const IntervalSpace& space,
                                                     const IntervalSet& s) {
  const auto& lattice = space.lattice();
  for (Element l = 0; l < lattice.size(); ++l) {
    for (Element r = 0; r < lattice.size(); ++r) {
      auto [upper_side, lower_side] = transposes(lattice, l, r);
      auto u = space.table().index(upper_side);
      auto v = space.table().index(lower_side);
      if (s.contains(u) && !s.contains(v)) return Violation{ClosureRule::similarity, v};
      if (s.contains(v) && !s.contains(u)) return Violation{ClosureRule::similarity, u};
    }
  }
  return std::nullopt;
}

inline std::optional<Violation> subinterval_violation(const IntervalSpace& space,
                                                      const IntervalSet& s) {
  const auto& lattice = space.lattice();
  std::optional<Violation> found;
  s.for_each([&](std::size_t i) {
    if (found) return;
    const auto [a, b] = space[i];
    auto span = lattice.up_set(a) & lattice.down_set(b);
    for (auto c = span.find_first(); c != ElementSet::npos && !found; c = span.find_next(c)) {
      for (auto d = span.find_first(); d != ElementSet::npos; d = span.find_next(d)) {
        if (!lattice.leq(c, d)) continue;
        auto j = space.table().index(c, d);
        if (!s.contains(j)) {
          found = Violation{ClosureRule::subinterval, j};
          break;
        }
      }
    }
  });
  return found;
}

inline std::optional<Violation> abutting_violation(const IntervalSpace& space,
                                                   const IntervalSet& s) {
  std::optional<Violation> found;
  s.for_each([&](std::size_t i) {
    if (found) return;
    const auto [a, b] = space[i];
    for (auto k : space.starting_at(b)) {
      if (!s.contains(k)) continue;
      auto j = space.table().index(a, space[k].upper);
      if (!s.contains(j)) {
        found = Violation{ClosureRule::abutting, j};
        return;
      }
    }
  });
  return found;
}

inline std::optional<Violation> join_violation(const IntervalSpace& space,
                                               const IntervalSet& s) {
  const auto& lattice = space.lattice();
  std::optional<Violation> found;
  s.for_each([&](std::size_t i) {
    if (found) return;
    const auto [a, x] = space[i];
    for (auto k : space.starting_at(a)) {
      if (!s.contains(k)) continue;
      auto j = space.table().index(a, lattice.join(x, space[k].upper));
      if (!s.contains(j)) {
        found = Violation{ClosureRule::join, j};
        return;
      }
    }
  });
  return found;
}

}  // namespace detail

/// Decides each class by evaluating its closure condition exhaustively.
/// The join condition over arbitrary X is checked in its binary form, which
/// is equivalent on a finite lattice.
inline ClassFlags classify(const IntervalSpace& space, const IntervalSet& s) {
  ClassFlags flags;
  flags.abstract = !s.none() && !detail::similarity_violation(space, s);
  flags.basic = flags.abstract && !detail::subinterval_violation(space, s);
  flags.congruence = flags.basic && !detail::abutting_violation(space, s);
  flags.pre_division = flags.basic && !detail::join_violation(space, s);
  flags.division = flags.congruence && flags.pre_division;
  return flags;
}

/// First reason `s` is not a basic set, if any. An empty set reports
/// nothing here; check `classify` for that.
inline std::optional<Violation> basic_violation(const IntervalSpace& space,
                                                const IntervalSet& s) {
  if (auto v = detail::similarity_violation(space, s)) return v;
  return detail::subinterval_violation(space, s);
}

/// First reason `s` is not a division set, if any.
inline std::optional<Violation> division_violation(const IntervalSpace& space,
                                                   const IntervalSet& s) {
  if (auto v = basic_violation(space, s)) return v;
  if (auto v = detail::abutting_violation(space, s)) return v;
  return detail::join_violation(space, s);
}

inline bool is_basic(const IntervalSpace& space, const IntervalSet& s) {
  return classify(space, s).basic;
}

enum class Schedule {
  /// FIFO worklist; each newly added interval fires every rule once.
  worklist,
  /// Repeated passes over all members until a pass adds nothing.
  sweep,
};

struct ClosureOptions {
  Schedule schedule = Schedule::worklist;
  bool subinterval_rule = true;
  bool abutting_rule = true;
  bool join_rule = true;
};

namespace detail {

inline void require_nonempty(const IntervalSet& s, const char* op) {
  if (s.none()) throw Error(ErrorKind::invalid_argument, std::string(op) + " needs a nonempty set");
}

inline IntervalSet close_worklist(const IntervalSpace& space, IntervalSet s,
                                  const ClosureOptions& opts) {
  const auto& lattice = space.lattice();
  std::deque<std::size_t> pending;
  s.for_each([&](std::size_t i) { pending.push_back(i); });
  auto add = [&](std::size_t j) {
    if (s.insert(j)) pending.push_back(j);
  };
  while (!pending.empty()) {
    auto i = pending.front();
    pending.pop_front();
    const auto [a, b] = space[i];
    for (auto j : space.similar(i)) add(j);
    if (opts.subinterval_rule) {
      for (auto j : space.shrink_steps(i)) add(j);
    }
    if (opts.abutting_rule) {
      for (auto k : space.ending_at(a)) {
        if (s.contains(k)) add(space.table().index(space[k].lower, b));
      }
      for (auto k : space.starting_at(b)) {
        if (s.contains(k)) add(space.table().index(a, space[k].upper));
      }
    }
    if (opts.join_rule) {
      for (auto k : space.starting_at(a)) {
        if (s.contains(k)) add(space.table().index(a, lattice.join(b, space[k].upper)));
      }
    }
  }
  return s;
}

inline IntervalSet close_sweep(const IntervalSpace& space, IntervalSet s,
                               const ClosureOptions& opts) {
  const auto& lattice = space.lattice();
  bool changed = true;
  while (changed) {
    changed = false;
    // Descending order, so the visiting sequence differs from the worklist.
    for (std::size_t i = space.size(); i-- > 0;) {
      if (!s.contains(i)) continue;
      const auto [a, b] = space[i];
      for (auto j : space.similar(i)) changed |= s.insert(j);
      if (opts.subinterval_rule) {
        for (auto j : space.shrink_steps(i)) changed |= s.insert(j);
      }
      if (opts.abutting_rule) {
        for (auto k : space.starting_at(b)) {
          if (s.contains(k)) changed |= s.insert(space.table().index(a, space[k].upper));
        }
      }
      if (opts.join_rule) {
        for (auto k : space.starting_at(a)) {
          if (s.contains(k)) {
            changed |= s.insert(space.table().index(a, lattice.join(b, space[k].upper)));
          }
        }
      }
    }
  }
  return s;
}

inline IntervalSet close(const IntervalSpace& space, const IntervalSet& s,
                         const ClosureOptions& opts) {
  return opts.schedule == Schedule::worklist ? close_worklist(space, s, opts)
                                             : close_sweep(space, s, opts);
}

}  // namespace detail

/// Least basic set containing s: closed under similarity and subintervals.
inline IntervalSet basic_closure(const IntervalSpace& space, const IntervalSet& s,
                                 Schedule schedule = Schedule::worklist) {
  detail::require_nonempty(s, "basic_closure");
  return detail::close(space, s, {schedule, true, false, false});
}

/// Least division set containing s. For a non-basic s this is the least
/// division set containing basic_closure(s).
inline IntervalSet dvs(const IntervalSpace& space, const IntervalSet& s,
                       ClosureOptions opts = {}) {
  detail::require_nonempty(s, "dvs");
  opts.subinterval_rule = true;
  opts.abutting_rule = true;
  return detail::close(space, s, opts);
}

/// [a,b] is a member when every a <= x < b has some x < y <= b with [x,y] in c.
inline IntervalSet forall_exists(const IntervalSpace& space, const IntervalSet& c) {
  const auto& lattice = space.lattice();
  const auto n = lattice.size();
  // reach[x] = { y > x : [x,y] in c }
  std::vector<ElementSet> reach(n, ElementSet(n));
  c.for_each([&](std::size_t i) {
    const auto [x, y] = space[i];
    if (x != y) reach[x].set(y);
  });
  IntervalSet out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto [a, b] = space[i];
    auto below = lattice.down_set(b);
    auto span = lattice.up_set(a) & below;
    span.reset(b);
    bool ok = true;
    for (auto x = span.find_first(); x != ElementSet::npos; x = span.find_next(x)) {
      if (!reach[x].intersects(below)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(i);
  }
  return out;
}

namespace detail {

inline void require_basic(const IntervalSpace& space, const IntervalSet& b, const char* op) {
  if (!is_basic(space, b)) {
    throw Error(ErrorKind::not_basic, std::string(op) + " needs a basic set of intervals");
  }
}

}  // namespace detail

/// B-simple intervals: every a <= x <= b has [a,x] in B or [x,b] in B.
inline IntervalSet smp(const IntervalSpace& space, const IntervalSet& b) {
  detail::require_basic(space, b, "smp");
  const auto& lattice = space.lattice();
  const auto& table = space.table();
  IntervalSet out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto [lo, hi] = space[i];
    auto span = lattice.up_set(lo) & lattice.down_set(hi);
    bool ok = true;
    for (auto x = span.find_first(); x != ElementSet::npos && ok; x = span.find_next(x)) {
      ok = b.contains(table.index(lo, x)) || b.contains(table.index(x, hi));
    }
    if (ok) out.insert(i);
  }
  return out;
}

/// B-critical intervals: every a <= x <= b has a = x or [x,b] in B.
inline IntervalSet crt(const IntervalSpace& space, const IntervalSet& b) {
  detail::require_basic(space, b, "crt");
  const auto& lattice = space.lattice();
  const auto& table = space.table();
  IntervalSet out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto [lo, hi] = space[i];
    auto span = lattice.up_set(lo) & lattice.down_set(hi);
    bool ok = true;
    for (auto x = span.find_first(); x != ElementSet::npos && ok; x = span.find_next(x)) {
      ok = x == lo || b.contains(table.index(x, hi));
    }
    if (ok) out.insert(i);
  }
  return out;
}

/// The Gabriel pre-nucleus dvs(crt(B)).
inline IntervalSet gab(const IntervalSpace& space, const IntervalSet& b) {
  return dvs(space, crt(space, b));
}

inline constexpr std::size_t default_exhaustion_threshold = 14;

namespace detail {

template <class Keep>
std::vector<IntervalSet> filtered_powerset(const IntervalSpace& space, std::size_t threshold,
                                           Keep&& keep) {
  const auto n = space.size();
  if (n > threshold || n >= 63) {
    throw Error(ErrorKind::too_large, std::to_string(n) + " intervals exceed the exhaustion threshold " +
                                          std::to_string(threshold));
  }
  std::vector<IntervalSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    IntervalSet s(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) s.insert(i);
    }
    if (keep(s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

/// Every basic set, by filtering the powerset of I(A).
inline std::vector<IntervalSet> enumerate_basic_sets(
    const IntervalSpace& space, std::size_t threshold = default_exhaustion_threshold) {
  return detail::filtered_powerset(space, threshold, [&](const IntervalSet& s) {
    return classify(space, s).basic;
  });
}

/// Every division set, by filtering the powerset of I(A).
inline std::vector<IntervalSet> enumerate_division_sets(
    const IntervalSpace& space, std::size_t threshold = default_exhaustion_threshold) {
  return detail::filtered_powerset(space, threshold, [&](const IntervalSet& s) {
    return classify(space, s).division;
  });
}

}  // namespace gabriel
