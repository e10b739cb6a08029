#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gabriel/classes.hpp"

namespace gabriel {

// Ordinal indices are natural numbers here. A finite lattice stabilizes at a
// finite stage, so no limit ordinal is ever reached by iteration; the limit
// formulas are exposed as functions over an explicit prefix of stages.

inline void require_modular(const Lattice& lattice, bool allow_nonmodular) {
  if (allow_nonmodular || lattice.modular()) return;
  std::vector<std::size_t> witness;
  if (const auto& w = lattice.modularity().witness) witness.assign(w->begin(), w->end());
  throw Error(ErrorKind::not_modular, "the lattice is not modular", witness);
}

/// O <= Gab(O) <= Gab^2(O) <= ... up to the first repeated stage.
struct Filtration {
  /// stages[k] = Gab^k(dvs(seed)); the last entry is the fixed point.
  std::vector<IntervalSet> stages;
  /// Least k with Gab(stages[k]) == stages[k].
  std::size_t stabilization_index = 0;
  bool modularity_overridden = false;

  const IntervalSet& final_stage() const { return stages.back(); }
};

inline Filtration gab_filtration(const IntervalSpace& space, const IntervalSet& seed,
                                 bool allow_nonmodular = false) {
  require_modular(space.lattice(), allow_nonmodular);
  if (!is_basic(space, seed)) throw Error(ErrorKind::not_basic, "the filtration seed must be basic");
  Filtration f;
  f.modularity_overridden = !space.lattice().modular();
  f.stages.push_back(dvs(space, seed));
  for (;;) {
    auto next = gab(space, f.stages.back());
    if (next == f.stages.back()) break;
    f.stages.push_back(std::move(next));
  }
  f.stabilization_index = f.stages.size() - 1;
  return f;
}

inline Filtration gab_filtration(const IntervalSpace& space, bool allow_nonmodular = false) {
  return gab_filtration(space, IntervalSet::trivial(space), allow_nonmodular);
}

/// Stage at a limit index: dvs of the union of every earlier stage.
inline IntervalSet filtration_limit_stage(const IntervalSpace& space,
                                          std::span<const IntervalSet> earlier) {
  auto u = IntervalSet::empty(space);
  for (const auto& s : earlier) u |= s;
  return dvs(space, u);
}

/// [a,b] in S[alpha] iff every a < x <= b has [a,x] outside L(alpha) and
/// [x,b] inside it. Trivial intervals satisfy this vacuously.
inline IntervalSet accumulative_simples(const IntervalSpace& space, const IntervalSet& level) {
  const auto& lattice = space.lattice();
  const auto& table = space.table();
  IntervalSet out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto [a, b] = space[i];
    auto span = lattice.up_set(a) & lattice.down_set(b);
    span.reset(a);
    bool ok = true;
    for (auto x = span.find_first(); x != ElementSet::npos && ok; x = span.find_next(x)) {
      ok = !level.contains(table.index(a, x)) && level.contains(table.index(x, b));
    }
    if (ok) out.insert(i);
  }
  return out;
}

/// Successor step in its accumulative form: L(a') = L(a) u (AE)(D(a')).
inline IntervalSet next_level_accumulative(const IntervalSpace& space, const IntervalSet& level,
                                           const IntervalSet& next_division) {
  return level | forall_exists(space, next_division);
}

/// Successor step in its graded form: the new layer L[a'] holds the members
/// of (AE)(D(a')) not already in L(a), and L(a') = L(a) u L[a'].
inline IntervalSet next_level_graded(const IntervalSpace& space, const IntervalSet& level,
                                     const IntervalSet& next_division) {
  auto fresh = forall_exists(space, next_division);
  auto layer = IntervalSet::empty(space);
  fresh.for_each([&](std::size_t i) {
    if (!level.contains(i)) layer.insert(i);
  });
  return level | layer;
}

struct ConstructionLimit {
  IntervalSet division;     // D(lambda): union of the earlier D stages
  IntervalSet graded;       // earlier L stages u L[lambda], L[lambda] = (AE)(D(lambda))
  IntervalSet accumulative; // earlier L stages u (AE)(D(lambda))
};

inline ConstructionLimit construction_limit(const IntervalSpace& space,
                                            std::span<const IntervalSet> earlier_levels,
                                            std::span<const IntervalSet> earlier_divisions) {
  auto levels = IntervalSet::empty(space);
  for (const auto& s : earlier_levels) levels |= s;
  auto division = IntervalSet::empty(space);
  for (const auto& s : earlier_divisions) division |= s;

  auto layer = forall_exists(space, division);
  auto graded = levels | layer;
  auto accumulative = levels | forall_exists(space, division);
  return {std::move(division), std::move(graded), std::move(accumulative)};
}

/// The accumulative construction: chains L, D with the simples S and the
/// critical sets C = L u S at every index.
struct ConstructionChains {
  /// Indices 0..stabilization_index + 1 are stored for every chain, so the
  /// successor of the stable stage is available for comparison.
  std::vector<IntervalSet> level;      // L(alpha)
  std::vector<IntervalSet> division;   // D(alpha)
  std::vector<IntervalSet> simples;    // S[alpha]
  std::vector<IntervalSet> critical;   // C(alpha)
  /// Least alpha with L(alpha + 1) == L(alpha).
  std::size_t stabilization_index = 0;
  bool modularity_overridden = false;
};

inline ConstructionChains l_construction(const IntervalSpace& space,
                                         bool allow_nonmodular = false) {
  require_modular(space.lattice(), allow_nonmodular);
  ConstructionChains chains;
  chains.modularity_overridden = !space.lattice().modular();
  chains.level.push_back(IntervalSet::trivial(space));
  chains.division.push_back(IntervalSet::trivial(space));
  for (std::size_t alpha = 0;; ++alpha) {
    const auto& level = chains.level[alpha];
    auto simples = accumulative_simples(space, level);
    chains.critical.push_back(level | simples);
    chains.division.push_back(chains.division[alpha] | simples);
    chains.simples.push_back(std::move(simples));
    auto next = next_level_accumulative(space, chains.level[alpha], chains.division.back());
    bool stable = next == chains.level[alpha];
    chains.level.push_back(std::move(next));
    if (stable) {
      chains.stabilization_index = alpha;
      auto last = accumulative_simples(space, chains.level.back());
      chains.critical.push_back(chains.level.back() | last);
      chains.simples.push_back(std::move(last));
      break;
    }
  }
  return chains;
}

enum class Method { filtration, construction };

/// Gabriel dimension of every interval, indexed like the interval table.
struct DimensionTable {
  std::vector<std::size_t> dimension;
  /// Dimension of [bottom, top].
  std::size_t lattice_dimension = 0;
};

namespace detail {

inline constexpr std::size_t absent = static_cast<std::size_t>(-1);

// Intervals missing from every stage get `absent`.
inline DimensionTable dimensions_from_stages(const IntervalSpace& space,
                                             std::span<const IntervalSet> stages) {
  DimensionTable t;
  t.dimension.assign(space.size(), absent);
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t k = 0; k < stages.size(); ++k) {
      if (stages[k].contains(i)) {
        t.dimension[i] = k;
        break;
      }
    }
  }
  const auto& lattice = space.lattice();
  t.lattice_dimension = t.dimension[space.table().index(lattice.bottom(), lattice.top())];
  return t;
}

}  // namespace detail

inline DimensionTable dimension_table(const IntervalSpace& space, Method method,
                                      bool allow_nonmodular = false) {
  DimensionTable t;
  if (method == Method::filtration) {
    auto f = gab_filtration(space, allow_nonmodular);
    t = detail::dimensions_from_stages(space, f.stages);
  } else {
    auto chains = l_construction(space, allow_nonmodular);
    t = detail::dimensions_from_stages(
        space, std::span(chains.level).first(chains.stabilization_index + 1));
  }
  for (auto d : t.dimension) {
    // A finite lattice always reaches I(A); see the note on stabilization.
    if (d == detail::absent) throw Error(ErrorKind::invalid_argument, "interval absent from every stage");
  }
  return t;
}

inline std::size_t gdim(const IntervalSpace& space, Interval interval, Method method,
                        bool allow_nonmodular = false) {
  auto index = space.table().find(interval.lower, interval.upper);
  if (!index) throw Error(ErrorKind::invalid_argument, "not an interval: lower is not below upper");
  return dimension_table(space, method, allow_nonmodular).dimension[*index];
}

}  // namespace gabriel
