#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>

#include "qcat/error.hpp"
#include "qcat/report.hpp"

namespace qcat {

/// Index of an object of a quantaloid.
using QObject = std::size_t;

/// A small quantaloid. Arrows X -> Y are values of hom(X, Y); every hom
/// operation takes the (source, target) objects as context.
///
///   compose(X, Y, Z, g, f)    g : Y -> Z after f : X -> Y
///   lifting(A, B, C, g, h)    largest x : A -> B with g o x <= h  (g : B -> C, h : A -> C)
///   extension(A, B, C, f, h)  largest x : B -> C with x o f <= h  (f : A -> B, h : A -> C)
///
/// `value_type` must be totally ordered structurally; that order is only used
/// for canonical sorting and has nothing to do with the quantale order `leq`.
template <class Q>
concept Quantaloid = requires(const Q& q, QObject x, const typename Q::value_type& v, std::string_view text) {
  typename Q::value_type;
  requires std::totally_ordered<typename Q::value_type>;
  { Q::is_enumerable } -> std::convertible_to<bool>;
  { q.object_count() } -> std::convertible_to<std::size_t>;
  { q.object_name(x) } -> std::convertible_to<std::string>;
  { q.identity(x) } -> std::same_as<typename Q::value_type>;
  { q.bottom(x, x) } -> std::same_as<typename Q::value_type>;
  { q.top(x, x) } -> std::same_as<typename Q::value_type>;
  { q.leq(x, x, v, v) } -> std::same_as<bool>;
  { q.join(x, x, v, v) } -> std::same_as<typename Q::value_type>;
  { q.meet(x, x, v, v) } -> std::same_as<typename Q::value_type>;
  { q.compose(x, x, x, v, v) } -> std::same_as<typename Q::value_type>;
  { q.lifting(x, x, x, v, v) } -> std::same_as<typename Q::value_type>;
  { q.extension(x, x, x, v, v) } -> std::same_as<typename Q::value_type>;
  { q.format(x, x, v) } -> std::convertible_to<std::string>;
  { q.parse(x, x, text) } -> std::same_as<typename Q::value_type>;
};

/// A quantaloid whose homs are finite lattices that can be listed.
template <class Q>
concept EnumerableQuantaloid = Quantaloid<Q> && Q::is_enumerable && requires(const Q& q, QObject x) {
  { q.elements(x, x) } -> std::convertible_to<std::span<const typename Q::value_type>>;
};

template <Quantaloid Q>
using value_t = typename Q::value_type;

template <Quantaloid Q, std::ranges::input_range R>
value_t<Q> join_of(const Q& q, QObject x, QObject y, R&& values) {
  auto acc = q.bottom(x, y);
  for (const auto& v : values) acc = q.join(x, y, acc, v);
  return acc;
}

template <Quantaloid Q, std::ranges::input_range R>
value_t<Q> meet_of(const Q& q, QObject x, QObject y, R&& values) {
  auto acc = q.top(x, y);
  for (const auto& v : values) acc = q.meet(x, y, acc, v);
  return acc;
}

/// A typed arrow src -> dst of a quantaloid.
template <class V>
struct Arrow {
  QObject src = 0;
  QObject dst = 0;
  V value{};

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

template <Quantaloid Q>
Arrow<value_t<Q>> identity_arrow(const Q& q, QObject x) {
  return {x, x, q.identity(x)};
}

template <Quantaloid Q>
bool leq(const Q& q, const Arrow<value_t<Q>>& a, const Arrow<value_t<Q>>& b) {
  if (a.src != b.src || a.dst != b.dst) throw TypeMismatch("comparing arrows of different types");
  return q.leq(a.src, a.dst, a.value, b.value);
}

/// g o f; requires f.dst == g.src.
template <Quantaloid Q>
Arrow<value_t<Q>> compose(const Q& q, const Arrow<value_t<Q>>& g, const Arrow<value_t<Q>>& f) {
  if (f.dst != g.src)
    throw TypeMismatch("compose: " + q.object_name(f.dst) + " != " + q.object_name(g.src));
  return {f.src, g.dst, q.compose(f.src, f.dst, g.dst, g.value, f.value)};
}

/// Lifting [g, h] of h : A -> C through g : B -> C.
template <Quantaloid Q>
Arrow<value_t<Q>> lifting(const Q& q, const Arrow<value_t<Q>>& g, const Arrow<value_t<Q>>& h) {
  if (g.dst != h.dst) throw TypeMismatch("lifting: targets differ");
  return {h.src, g.src, q.lifting(h.src, g.src, g.dst, g.value, h.value)};
}

/// Extension {f, h} of h : A -> C through f : A -> B.
template <Quantaloid Q>
Arrow<value_t<Q>> extension(const Q& q, const Arrow<value_t<Q>>& f, const Arrow<value_t<Q>>& h) {
  if (f.src != h.src) throw TypeMismatch("extension: sources differ");
  return {f.dst, h.dst, q.extension(f.src, f.dst, h.dst, f.value, h.value)};
}

/// Right adjoint of f : X -> Y, if any. The only candidate is the lifting of
/// 1_Y through f (it makes the counit automatic), so only the unit is checked.
template <Quantaloid Q>
std::optional<Arrow<value_t<Q>>> right_adjoint(const Q& q, const Arrow<value_t<Q>>& f) {
  const auto x = f.src, y = f.dst;
  auto g = q.lifting(y, x, y, f.value, q.identity(y));
  if (!q.leq(x, x, q.identity(x), q.compose(x, y, x, g, f.value))) return std::nullopt;
  return Arrow<value_t<Q>>{y, x, g};
}

/// Left adjoint of f : X -> Y, if any (dual of right_adjoint).
template <Quantaloid Q>
std::optional<Arrow<value_t<Q>>> left_adjoint(const Q& q, const Arrow<value_t<Q>>& f) {
  const auto x = f.src, y = f.dst;
  auto g = q.extension(x, y, x, f.value, q.identity(x));
  if (!q.leq(y, y, q.identity(y), q.compose(y, x, y, f.value, g))) return std::nullopt;
  return Arrow<value_t<Q>>{y, x, g};
}

/// Exhaustive check of associativity, unit laws and join preservation of
/// composition in each variable.
template <EnumerableQuantaloid Q>
Report validate_quantaloid(const Q& q) {
  Report r;
  const auto n = q.object_count();
  auto nm = [&](QObject x, QObject y, const auto& v) { return q.format(x, y, v); };
  auto objs = [&](std::initializer_list<QObject> os) {
    std::string s;
    for (auto o : os) s += (s.empty() ? "" : "|") + q.object_name(o);
    return s;
  };
  for (QObject x = 0; x < n; ++x)
    for (QObject y = 0; y < n; ++y) {
      for (const auto& f : q.elements(x, y)) {
        if (q.compose(x, y, y, q.identity(y), f) != f)
          r.add("left unit fails at " + nm(x, y, f) + " on " + objs({x, y}));
        if (q.compose(x, x, y, f, q.identity(x)) != f)
          r.add("right unit fails at " + nm(x, y, f) + " on " + objs({x, y}));
      }
    }
  for (QObject x = 0; x < n; ++x)
    for (QObject y = 0; y < n; ++y)
      for (QObject z = 0; z < n; ++z)
        for (QObject w = 0; w < n; ++w)
          for (const auto& f : q.elements(x, y))
            for (const auto& g : q.elements(y, z))
              for (const auto& h : q.elements(z, w)) {
                auto lhs = q.compose(x, z, w, h, q.compose(x, y, z, g, f));
                auto rhs = q.compose(x, y, w, q.compose(y, z, w, h, g), f);
                if (lhs != rhs)
                  r.add("associativity fails at (" + nm(z, w, h) + "," + nm(y, z, g) + "," + nm(x, y, f) + ") on " +
                        objs({x, y, z, w}));
              }
  for (QObject x = 0; x < n; ++x)
    for (QObject y = 0; y < n; ++y)
      for (QObject z = 0; z < n; ++z) {
        for (const auto& g : q.elements(y, z)) {
          if (q.compose(x, y, z, g, q.bottom(x, y)) != q.bottom(x, z))
            r.add("compose(" + nm(y, z, g) + ",-) does not preserve the empty join on " + objs({x, y, z}));
          auto fs = q.elements(x, y);
          for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = i + 1; j < fs.size(); ++j) {
              auto lhs = q.compose(x, y, z, g, q.join(x, y, fs[i], fs[j]));
              auto rhs = q.join(x, z, q.compose(x, y, z, g, fs[i]), q.compose(x, y, z, g, fs[j]));
              if (lhs != rhs)
                r.add("compose(" + nm(y, z, g) + ",-) does not preserve join of {" + nm(x, y, fs[i]) + "," +
                      nm(x, y, fs[j]) + "} on " + objs({x, y, z}));
            }
        }
        for (const auto& f : q.elements(x, y)) {
          if (q.compose(x, y, z, q.bottom(y, z), f) != q.bottom(x, z))
            r.add("compose(-," + nm(x, y, f) + ") does not preserve the empty join on " + objs({x, y, z}));
          auto gs = q.elements(y, z);
          for (std::size_t i = 0; i < gs.size(); ++i)
            for (std::size_t j = i + 1; j < gs.size(); ++j) {
              auto lhs = q.compose(x, y, z, q.join(y, z, gs[i], gs[j]), f);
              auto rhs = q.join(x, z, q.compose(x, y, z, gs[i], f), q.compose(x, y, z, gs[j], f));
              if (lhs != rhs)
                r.add("compose(-," + nm(x, y, f) + ") does not preserve join of {" + nm(y, z, gs[i]) + "," +
                      nm(y, z, gs[j]) + "} on " + objs({x, y, z}));
            }
        }
      }
  return r;
}

}  // namespace qcat
