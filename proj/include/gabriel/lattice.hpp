#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gabriel/error.hpp"

namespace gabriel {

using Element = std::size_t;
using ElementSet = boost::dynamic_bitset<>;
using Cover = std::pair<Element, Element>;

struct ModularityVerdict {
  bool modular = true;
  /// First violating (a, b, c) with a <= c and a v (b ^ c) != (a v b) ^ c.
  std::optional<std::array<Element, 3>> witness;
};

/// A finite bounded lattice given by its Hasse diagram.
///
/// The order, meet and join are materialized as tables at construction and
/// the object is immutable afterwards. Finiteness makes the lattice complete
/// and upper-continuous, so a modular instance is an idiom.
class Lattice {
 public:
  std::size_t size() const noexcept { return size_; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element x, Element y) const { return up_[x].test(y); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * size_ + y]; }
  Element join(Element x, Element y) const { return join_[x * size_ + y]; }

  /// Elements y with x <= y.
  const ElementSet& up_set(Element x) const { return up_[x]; }
  /// Elements y with y <= x.
  const ElementSet& down_set(Element x) const { return down_[x]; }

  /// Hasse covers (lower, upper), sorted.
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  const std::vector<Element>& upper_covers(Element x) const { return upper_covers_[x]; }
  const std::vector<Element>& lower_covers(Element x) const { return lower_covers_[x]; }

  const ModularityVerdict& modularity() const noexcept { return modularity_; }
  bool modular() const noexcept { return modularity_.modular; }

  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Element> find(const std::string& name) const {
    for (Element x = 0; x < size_; ++x) {
      if (names_[x] == name) return x;
    }
    return std::nullopt;
  }

  friend Lattice build_lattice(std::size_t, const std::vector<Cover>&,
                               std::vector<std::string>);

 private:
  Lattice() = default;

  std::size_t size_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Cover> covers_;
  std::vector<std::vector<Element>> upper_covers_;
  std::vector<std::vector<Element>> lower_covers_;
  std::vector<std::string> names_;
  ModularityVerdict modularity_;
};

namespace detail {

// Least element of `bounds` with respect to `up`, if one exists.
inline std::optional<Element> least_of(const ElementSet& bounds,
                                       const std::vector<ElementSet>& up) {
  for (auto u = bounds.find_first(); u != ElementSet::npos; u = bounds.find_next(u)) {
    if (bounds.is_subset_of(up[u])) return u;
  }
  return std::nullopt;
}

inline ModularityVerdict find_modularity_violation(const Lattice& lattice) {
  const auto n = lattice.size();
  for (Element a = 0; a < n; ++a) {
    for (Element c = 0; c < n; ++c) {
      if (a == c || !lattice.leq(a, c)) continue;
      for (Element b = 0; b < n; ++b) {
        if (lattice.join(a, lattice.meet(b, c)) != lattice.meet(lattice.join(a, b), c)) {
          return {false, std::array<Element, 3>{a, b, c}};
        }
      }
    }
  }
  return {};
}

}  // namespace detail

/// Builds a lattice on elements 0..n-1 from a cover relation. The pairs need
/// not be exact Hasse covers; the stored covers are recomputed from the
/// closed order. Element names default to the decimal index.
inline Lattice build_lattice(std::size_t n, const std::vector<Cover>& covers,
                             std::vector<std::string> names = {}) {
  if (n == 0) {
    throw Error(ErrorKind::no_bounded_structure, "a lattice needs at least one element");
  }
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  if (names.size() != n) {
    throw Error(ErrorKind::invalid_argument, "name count does not match element count");
  }

  Lattice lattice;
  lattice.size_ = n;
  lattice.names_ = std::move(names);

  std::vector<ElementSet> up(n, ElementSet(n));
  for (Element x = 0; x < n; ++x) up[x].set(x);
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) {
      throw Error(ErrorKind::invalid_argument,
                  "cover (" + std::to_string(lo) + ", " + std::to_string(hi) +
                      ") references an element outside [0, " + std::to_string(n) + ")");
    }
    if (lo == hi) {
      throw Error(ErrorKind::cycle_in_covers,
                  "element " + lattice.names_[lo] + " covers itself", {lo, hi});
    }
    up[lo].set(hi);
  }
  // Warshall closure over rows.
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (i != k && up[i].test(k)) up[i] |= up[k];
    }
  }
  std::vector<ElementSet> down(n, ElementSet(n));
  for (Element x = 0; x < n; ++x) {
    for (auto y = up[x].find_first(); y != ElementSet::npos; y = up[x].find_next(y)) {
      down[y].set(x);
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (auto y = up[x].find_next(x); y != ElementSet::npos; y = up[x].find_next(y)) {
      if (up[y].test(x)) {
        throw Error(ErrorKind::cycle_in_covers,
                    "elements " + lattice.names_[x] + " and " + lattice.names_[y] +
                        " lie on a cycle",
                    {x, y});
      }
    }
  }

  lattice.meet_.assign(n * n, 0);
  lattice.join_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      auto lub = detail::least_of(up[x] & up[y], up);
      if (!lub) {
        throw Error(ErrorKind::not_a_lattice,
                    lattice.names_[x] + " and " + lattice.names_[y] + " have no join", {x, y});
      }
      auto glb = detail::least_of(down[x] & down[y], down);
      if (!glb) {
        throw Error(ErrorKind::not_a_lattice,
                    lattice.names_[x] + " and " + lattice.names_[y] + " have no meet", {x, y});
      }
      lattice.join_[x * n + y] = lattice.join_[y * n + x] = *lub;
      lattice.meet_[x * n + y] = lattice.meet_[y * n + x] = *glb;
    }
  }

  std::vector<Element> bottoms;
  std::vector<Element> tops;
  for (Element x = 0; x < n; ++x) {
    if (up[x].all()) bottoms.push_back(x);
    if (down[x].all()) tops.push_back(x);
  }
  if (bottoms.size() != 1 || tops.size() != 1) {
    throw Error(ErrorKind::no_bounded_structure, "no unique bottom and top");
  }
  lattice.bottom_ = bottoms.front();
  lattice.top_ = tops.front();

  lattice.upper_covers_.assign(n, {});
  lattice.lower_covers_.assign(n, {});
  for (Element x = 0; x < n; ++x) {
    for (auto y = up[x].find_next(x); y != ElementSet::npos; y = up[x].find_next(y)) {
      if ((up[x] & down[y]).count() == 2) {
        lattice.covers_.emplace_back(x, y);
        lattice.upper_covers_[x].push_back(y);
        lattice.lower_covers_[y].push_back(x);
      }
    }
  }
  lattice.up_ = std::move(up);
  lattice.down_ = std::move(down);
  lattice.modularity_ = detail::find_modularity_violation(lattice);
  return lattice;
}

inline const ModularityVerdict& is_modular(const Lattice& lattice) {
  return lattice.modularity();
}

}  // namespace gabriel
