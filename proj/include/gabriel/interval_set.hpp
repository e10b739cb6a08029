#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gabriel/interval.hpp"

namespace gabriel {

/// A lattice together with its interval table and the incidence data every
/// closure operator walks: similarity partners, one-step subintervals, and
/// intervals grouped by endpoint.
class IntervalSpace {
 public:
  explicit IntervalSpace(Lattice lattice)
      : lattice_(std::move(lattice)), table_(lattice_) {
    const auto count = table_.size();
    similar_.assign(count, {});
    shrink_steps_.assign(count, {});
    starting_at_.assign(lattice_.size(), {});
    ending_at_.assign(lattice_.size(), {});

    for (Element l = 0; l < lattice_.size(); ++l) {
      for (Element r = 0; r < lattice_.size(); ++r) {
        auto [upper_side, lower_side] = transposes(lattice_, l, r);
        auto u = table_.index(upper_side);
        auto v = table_.index(lower_side);
        similar_[u].push_back(v);
        similar_[v].push_back(u);
      }
    }
    for (auto& partners : similar_) {
      std::sort(partners.begin(), partners.end());
      partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
    }

    for (std::size_t i = 0; i < count; ++i) {
      const auto [a, b] = table_[i];
      starting_at_[a].push_back(i);
      ending_at_[b].push_back(i);
      for (auto c : lattice_.lower_covers(b)) {
        if (lattice_.leq(a, c)) shrink_steps_[i].push_back(table_.index(a, c));
      }
      for (auto c : lattice_.upper_covers(a)) {
        if (lattice_.leq(c, b)) shrink_steps_[i].push_back(table_.index(c, b));
      }
    }
  }

  const Lattice& lattice() const noexcept { return lattice_; }
  const IntervalTable& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return table_.size(); }
  const Interval& operator[](std::size_t i) const { return table_[i]; }

  /// Intervals similar to interval i (including i itself).
  const std::vector<std::size_t>& similar(std::size_t i) const { return similar_[i]; }
  /// Subintervals obtained by moving one endpoint across a single cover.
  /// Their reflexive-transitive closure is every subinterval.
  const std::vector<std::size_t>& shrink_steps(std::size_t i) const { return shrink_steps_[i]; }
  const std::vector<std::size_t>& starting_at(Element a) const { return starting_at_[a]; }
  const std::vector<std::size_t>& ending_at(Element b) const { return ending_at_[b]; }

 private:
  Lattice lattice_;
  IntervalTable table_;
  std::vector<std::vector<std::size_t>> similar_;
  std::vector<std::vector<std::size_t>> shrink_steps_;
  std::vector<std::vector<std::size_t>> starting_at_;
  std::vector<std::vector<std::size_t>> ending_at_;
};

/// A set of intervals, as membership over the canonical interval index.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::size_t universe) : bits_(universe) {}

  static IntervalSet empty(const IntervalSpace& space) { return IntervalSet(space.size()); }

  /// O(A): every trivial interval.
  static IntervalSet trivial(const IntervalSpace& space) {
    IntervalSet s(space.size());
    for (Element x = 0; x < space.lattice().size(); ++x) s.insert(space.table().index(x, x));
    return s;
  }

  /// I(A): every interval.
  static IntervalSet full(const IntervalSpace& space) {
    IntervalSet s(space.size());
    s.bits_.set();
    return s;
  }

  static IntervalSet of(const IntervalSpace& space, std::initializer_list<Interval> intervals) {
    return of(space, std::vector<Interval>(intervals));
  }
  static IntervalSet of(const IntervalSpace& space, const std::vector<Interval>& intervals) {
    IntervalSet s(space.size());
    for (auto i : intervals) {
      auto index = space.table().find(i.lower, i.upper);
      if (!index) throw Error(ErrorKind::invalid_argument, "not an interval: lower is not below upper");
      s.insert(*index);
    }
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool none() const noexcept { return bits_.none(); }
  bool contains(std::size_t i) const { return bits_.test(i); }
  bool contains(const IntervalSpace& space, Interval i) const {
    auto index = space.table().find(i.lower, i.upper);
    return index && contains(*index);
  }

  /// Returns true when i was not already present.
  bool insert(std::size_t i) {
    if (bits_.test(i)) return false;
    bits_.set(i);
    return true;
  }
  void erase(std::size_t i) { bits_.reset(i); }

  bool subset_of(const IntervalSet& other) const { return bits_.is_subset_of(other.bits_); }

  /// Lowest index in this set but not in `other`.
  std::optional<std::size_t> first_outside(const IntervalSet& other) const {
    auto diff = bits_ - other.bits_;
    auto i = diff.find_first();
    if (i == Bits::npos) return std::nullopt;
    return i;
  }

  /// Lowest index in exactly one of the two sets.
  std::optional<std::size_t> first_difference(const IntervalSet& other) const {
    auto diff = bits_ ^ other.bits_;
    auto i = diff.find_first();
    if (i == Bits::npos) return std::nullopt;
    return i;
  }

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) f(i);
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  IntervalSet& operator|=(const IntervalSet& o) { bits_ |= o.bits_; return *this; }
  IntervalSet& operator&=(const IntervalSet& o) { bits_ &= o.bits_; return *this; }
  friend IntervalSet operator|(IntervalSet a, const IntervalSet& b) { return a |= b; }
  friend IntervalSet operator&(IntervalSet a, const IntervalSet& b) { return a &= b; }
  friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.bits_ == b.bits_; }

 private:
  using Bits = boost::dynamic_bitset<>;
  Bits bits_;
};

}  // namespace gabriel
