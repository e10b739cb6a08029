#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gabriel/lattice.hpp"

namespace gabriel {

/// The interval [lower, upper]; lower <= upper in the owning lattice.
struct Interval {
  Element lower = 0;
  Element upper = 0;

  bool trivial() const noexcept { return lower == upper; }
  auto operator<=>(const Interval&) const = default;
};

/// I -> J: I sits inside J.
inline bool is_subinterval(const Lattice& lattice, Interval inner, Interval outer) {
  return lattice.leq(outer.lower, inner.lower) && lattice.leq(inner.upper, outer.upper);
}

/// Every interval of a lattice, listed lexicographically by (lower, upper).
class IntervalTable {
 public:
  explicit IntervalTable(const Lattice& lattice)
      : elements_(lattice.size()), index_(elements_ * elements_, npos) {
    for (Element a = 0; a < elements_; ++a) {
      for (Element b = 0; b < elements_; ++b) {
        if (lattice.leq(a, b)) {
          index_[a * elements_ + b] = static_cast<std::uint32_t>(intervals_.size());
          intervals_.push_back({a, b});
        }
      }
    }
  }

  std::size_t size() const noexcept { return intervals_.size(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  auto begin() const noexcept { return intervals_.begin(); }
  auto end() const noexcept { return intervals_.end(); }

  /// Index of [a, b], or nullopt when a is not below b.
  std::optional<std::size_t> find(Element a, Element b) const {
    auto i = index_[a * elements_ + b];
    if (i == npos) return std::nullopt;
    return i;
  }
  /// Index of [a, b]; a <= b must hold.
  std::size_t index(Element a, Element b) const { return index_[a * elements_ + b]; }
  std::size_t index(Interval i) const { return index(i.lower, i.upper); }

 private:
  static constexpr std::uint32_t npos = UINT32_MAX;
  std::size_t elements_;
  std::vector<Interval> intervals_;
  std::vector<std::uint32_t> index_;
};

inline IntervalTable enumerate_intervals(const Lattice& lattice) {
  return IntervalTable(lattice);
}

/// The transposed pair generated by (l, r): [l, l v r] and [l ^ r, r].
inline std::pair<Interval, Interval> transposes(const Lattice& lattice, Element l, Element r) {
  return {{l, lattice.join(l, r)}, {lattice.meet(l, r), r}};
}

/// Searches every (l, r) for a pair whose transposes are {first, second}.
inline std::optional<std::pair<Element, Element>> similarity_witness(const Lattice& lattice,
                                                                     Interval first,
                                                                     Interval second) {
  for (Element l = 0; l < lattice.size(); ++l) {
    for (Element r = 0; r < lattice.size(); ++r) {
      auto [upper_side, lower_side] = transposes(lattice, l, r);
      if ((upper_side == first && lower_side == second) ||
          (upper_side == second && lower_side == first)) {
        return std::pair{l, r};
      }
    }
  }
  return std::nullopt;
}

inline bool similar(const Lattice& lattice, Interval first, Interval second) {
  return similarity_witness(lattice, first, second).has_value();
}

/// x -> x ^ r from [l, l v r] onto [l ^ r, r], with inverse y -> y v l.
struct Perspectivity {
  Interval source;
  Interval target;
  /// (x, x ^ r) for every x in the source, ascending by x.
  std::vector<std::pair<Element, Element>> pairs;
};

namespace detail {

inline std::vector<Element> members(const Lattice& lattice, Interval i) {
  std::vector<Element> out;
  auto span = lattice.up_set(i.lower) & lattice.down_set(i.upper);
  for (auto x = span.find_first(); x != ElementSet::npos; x = span.find_next(x)) {
    out.push_back(x);
  }
  return out;
}

}  // namespace detail

/// True when x -> x ^ r and y -> y v l are mutually inverse order
/// isomorphisms between the transposes of (l, r). Holds for every (l, r) in
/// a modular lattice; checked exhaustively here for any lattice.
inline bool perspectivity_is_isomorphism(const Lattice& lattice, Element l, Element r) {
  auto [source, target] = transposes(lattice, l, r);
  auto xs = detail::members(lattice, source);
  auto ys = detail::members(lattice, target);
  if (xs.size() != ys.size()) return false;
  for (auto x : xs) {
    auto y = lattice.meet(x, r);
    if (!is_subinterval(lattice, {y, y}, target) || lattice.join(y, l) != x) return false;
  }
  for (auto y : ys) {
    auto x = lattice.join(y, l);
    if (!is_subinterval(lattice, {x, x}, source) || lattice.meet(x, r) != y) return false;
  }
  for (auto x1 : xs) {
    for (auto x2 : xs) {
      if (lattice.leq(x1, x2) != lattice.leq(lattice.meet(x1, r), lattice.meet(x2, r))) {
        return false;
      }
    }
  }
  return true;
}

inline Perspectivity perspectivity_map(const Lattice& lattice, Element l, Element r) {
  if (!lattice.modular()) {
    throw Error(ErrorKind::not_modular, "perspectivity is only canonical on modular lattices",
                {});
  }
  if (!perspectivity_is_isomorphism(lattice, l, r)) {
    // Unreachable for a lattice that passed the modularity check.
    throw Error(ErrorKind::not_modular, "perspectivity failed to be an isomorphism", {l, r});
  }
  auto [source, target] = transposes(lattice, l, r);
  Perspectivity result{source, target, {}};
  for (auto x : detail::members(lattice, source)) {
    result.pairs.emplace_back(x, lattice.meet(x, r));
  }
  return result;
}

}  // namespace gabriel
