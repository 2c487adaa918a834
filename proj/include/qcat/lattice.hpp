#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qcat/error.hpp"
#include "qcat/report.hpp"

namespace qcat {

/// Index of an element inside one lattice (or one hom of a table quantaloid).
struct Element {
  std::uint16_t index = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

/// Raw order data as read from a file, before it is known to be a lattice.
struct OrderTable {
  std::vector<std::string> names;
  std::vector<char> leq;  // leq[x * n + y] != 0 iff x <= y

  std::size_t size() const noexcept { return names.size(); }
  bool at(std::size_t x, std::size_t y) const { return leq[x * names.size() + y] != 0; }
  void set(std::size_t x, std::size_t y, bool v = true) { leq[x * names.size() + y] = v ? 1 : 0; }

  static OrderTable empty_order(std::vector<std::string> names) {
    OrderTable t{std::move(names), {}};
    t.leq.assign(t.names.size() * t.names.size(), 0);
    return t;
  }

  /// Adds reflexive pairs and closes transitively (Warshall).
  void close() {
    const auto n = size();
    for (std::size_t x = 0; x < n; ++x) set(x, x);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (at(i, k))
          for (std::size_t j = 0; j < n; ++j)
            if (at(k, j)) set(i, j);
  }
};

namespace detail {

inline std::optional<std::size_t> least_upper_bound(const OrderTable& t, std::span<const std::size_t> s) {
  const auto n = t.size();
  for (std::size_t u = 0; u < n; ++u) {
    bool upper = true;
    for (auto x : s) upper = upper && t.at(x, u);
    if (!upper) continue;
    bool least = true;
    for (std::size_t v = 0; v < n && least; ++v) {
      bool v_upper = true;
      for (auto x : s) v_upper = v_upper && t.at(x, v);
      if (v_upper && !t.at(u, v)) least = false;
    }
    if (least) return u;
  }
  return std::nullopt;
}

inline std::string braces(const OrderTable& t, std::initializer_list<std::size_t> xs) {
  std::string out = "{";
  bool first = true;
  for (auto x : xs) {
    if (!first) out += ",";
    out += t.names[x];
    first = false;
  }
  return out + "}";
}

}  // namespace detail

/// Lists every violated lattice axiom instance of `t`. Completeness of a finite
/// poset reduces to a bottom plus binary joins, so only those subsets are scanned.
inline Report validate_lattice(const OrderTable& t) {
  Report r;
  const auto n = t.size();
  if (t.leq.size() != n * n) {
    r.add("order table has wrong size");
    return r;
  }
  {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t x = 0; x < n; ++x)
      if (!seen.emplace(t.names[x], x).second) r.add("duplicate element id " + t.names[x]);
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!t.at(x, x)) r.add("leq(" + t.names[x] + "," + t.names[x] + ") false");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t.at(x, y) && t.at(y, z) && !t.at(x, z))
          r.add("transitivity: leq(" + t.names[x] + "," + t.names[y] + ") and leq(" + t.names[y] + "," +
                t.names[z] + ") but not leq(" + t.names[x] + "," + t.names[z] + ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (t.at(x, y) && t.at(y, x))
        r.add("antisymmetry: leq(" + t.names[x] + "," + t.names[y] + ") and leq(" + t.names[y] + "," +
              t.names[x] + ")");
  if (!r.ok()) return r;
  if (!detail::least_upper_bound(t, {})) r.add("join of {} undefined");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const std::size_t pair[] = {x, y};
      if (!detail::least_upper_bound(t, pair)) r.add("join of " + detail::braces(t, {x, y}) + " undefined");
    }
  return r;
}

/// A finite complete lattice with memoized binary joins and meets.
/// Immutable after construction.
class SupLattice {
 public:
  /// Throws ValidationError when `order` is not a complete lattice.
  explicit SupLattice(OrderTable order) : order_(std::move(order)) {
    if (auto r = validate_lattice(order_); !r.ok()) throw ValidationError("not a sup-lattice", r.violations);
    const auto n = size();
    if (n > 0xFFFF) throw Error("lattice too large");
    for (std::size_t i = 0; i < n; ++i) index_.emplace(order_.names[i], i);
    join_.resize(n * n);
    meet_.resize(n * n);
    bottom_ = Element{static_cast<std::uint16_t>(*detail::least_upper_bound(order_, {}))};
    for (std::size_t x = 0; x < n; ++x)
      if (order_.at(bottom_.index, x)) {
        bool is_top = true;
        for (std::size_t y = 0; y < n; ++y) is_top = is_top && order_.at(y, x);
        if (is_top) top_ = Element{static_cast<std::uint16_t>(x)};
      }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t pair[] = {x, y};
        join_[x * n + y] = Element{static_cast<std::uint16_t>(*detail::least_upper_bound(order_, pair))};
        // greatest lower bound: the largest element below both
        std::optional<std::size_t> glb;
        for (std::size_t z = 0; z < n; ++z)
          if (order_.at(z, x) && order_.at(z, y) && (!glb || order_.at(*glb, z))) glb = z;
        meet_[x * n + y] = Element{static_cast<std::uint16_t>(*glb)};
      }
  }

  /// Lattice from a list of elements and generating pairs; closes the relation
  /// reflexively and transitively before validating.
  static SupLattice from_pairs(std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto t = OrderTable::empty_order(std::move(names));
    auto find = [&](const std::string& id) {
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t.names[i] == id) return i;
      throw ElementNotInLattice("unknown element '" + id + "' in order pair");
    };
    for (const auto& [x, y] : pairs) t.set(find(x), find(y));
    t.close();
    return SupLattice(std::move(t));
  }

  /// The chain names[0] < names[1] < ...
  static SupLattice chain(std::vector<std::string> names) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i + 1 < names.size(); ++i) pairs.emplace_back(names[i], names[i + 1]);
    return from_pairs(std::move(names), pairs);
  }

  std::size_t size() const noexcept { return order_.size(); }
  const OrderTable& order() const noexcept { return order_; }
  const std::string& name(Element e) const { return order_.names.at(e.index); }

  bool contains(Element e) const noexcept { return e.index < size(); }

  Element element(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) throw ElementNotInLattice("element '" + std::string(id) + "' not in lattice");
    return Element{static_cast<std::uint16_t>(it->second)};
  }
  std::optional<Element> find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return Element{static_cast<std::uint16_t>(it->second)};
  }

  std::vector<Element> elements() const {
    std::vector<Element> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = Element{static_cast<std::uint16_t>(i)};
    return out;
  }

  bool leq(Element x, Element y) const { return order_.at(x.index, y.index); }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  Element join(Element x, Element y) const { return join_[x.index * size() + y.index]; }
  Element meet(Element x, Element y) const { return meet_[x.index * size() + y.index]; }

  Element join(std::span<const Element> s) const {
    Element acc = bottom_;
    for (auto e : s) acc = join(acc, checked(e));
    return acc;
  }
  Element meet(std::span<const Element> s) const {
    Element acc = top_;
    for (auto e : s) acc = meet(acc, checked(e));
    return acc;
  }
  Element join(std::initializer_list<Element> s) const { return join(std::span<const Element>(s.begin(), s.size())); }
  Element meet(std::initializer_list<Element> s) const { return meet(std::span<const Element>(s.begin(), s.size())); }

  friend bool operator==(const SupLattice& a, const SupLattice& b) {
    return a.order_.names == b.order_.names && a.order_.leq == b.order_.leq;
  }

 private:
  Element checked(Element e) const {
    if (!contains(e)) throw ElementNotInLattice("element index " + std::to_string(e.index) + " not in lattice");
    return e;
  }

  OrderTable order_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Element> join_, meet_;
  Element bottom_{}, top_{};
};

}  // namespace qcat
