#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcat/hausdorff.hpp"
#include "qcat/lawvere.hpp"
#include "qcat/random.hpp"
#include "qcat/table_quantaloid.hpp"

namespace qcat::fixtures {

/// Closes a raw matrix into a Q-category: raises the diagonal to the identity
/// and saturates under composition.
template <Quantaloid Q>
CategoryPtr<Q> close_category(std::shared_ptr<const Q> q, std::vector<std::string> names, std::vector<QObject> types,
                              std::vector<value_t<Q>> hom) {
  const auto n = names.size();
  for (std::size_t a = 0; a < n; ++a) hom[a * n + a] = q->join(types[a], types[a], hom[a * n + a], q->identity(types[a]));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < n; ++a) {
          auto& e = hom[c * n + a];
          auto next = q->join(types[a], types[c], e,
                              q->compose(types[a], types[b], types[c], hom[c * n + b], hom[b * n + a]));
          if (!(next == e)) {
            e = next;
            changed = true;
          }
        }
  }
  return make_category<Q>(std::move(q), std::move(names), std::move(types), std::move(hom));
}

inline std::vector<std::string> labels(std::size_t n, const std::string& prefix = "a") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// Random preorder on n elements over `q` (which must be bool).
inline CategoryPtr<TableQuantaloid> random_preorder(std::shared_ptr<const TableQuantaloid> q, std::size_t n, Rng& rng,
                                                    std::uint64_t density = 3) {
  std::vector<Element> hom(n * n, Element{0});
  for (auto& e : hom)
    if (coin(rng, 1, density)) e = Element{1};
  return close_category<TableQuantaloid>(std::move(q), labels(n), std::vector<QObject>(n, 0), std::move(hom));
}

/// Random category over an enumerable quantaloid; types and entries uniform.
template <EnumerableQuantaloid Q>
CategoryPtr<Q> random_category(std::shared_ptr<const Q> q, std::size_t n, Rng& rng) {
  std::vector<QObject> types;
  for (std::size_t i = 0; i < n; ++i) types.push_back(uniform_below(rng, q->object_count()));
  std::vector<value_t<Q>> hom;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      auto els = q->elements(types[a], types[b]);
      // bias towards bottom so that closure does not saturate everything
      hom.push_back(coin(rng, 1, 2) ? q->bottom(types[a], types[b]) : els[uniform_below(rng, els.size())]);
    }
  return close_category<Q>(std::move(q), labels(n), std::move(types), std::move(hom));
}

/// Random value in {0, 1/den, ..., max_num/den} or, with probability 1/inf_odds, infinity.
inline Extended random_extended(Rng& rng, std::uint64_t max_num, std::uint64_t den, std::uint64_t inf_odds = 0) {
  if (inf_odds && coin(rng, 1, inf_odds)) return Extended::infinity();
  return Extended(Rational(static_cast<long long>(uniform_below(rng, max_num + 1)), static_cast<long long>(den)));
}

/// Random generalized metric space: random distances, then shortest-path closure.
inline CategoryPtr<Lawvere> random_metric_space(std::size_t n, Rng& rng, bool symmetric = false,
                                                std::uint64_t inf_odds = 0) {
  std::vector<Extended> d(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      if (symmetric && y < x) {
        d[x * n + y] = d[y * n + x];
        continue;
      }
      d[x * n + y] = random_extended(rng, 12, 2, inf_odds);
    }
  return close_category<Lawvere>(lawvere(), labels(n, "p"), std::vector<QObject>(n, 0), std::move(d));
}

/// Points on a line with the absolute-difference metric.
inline CategoryPtr<Lawvere> line_space(const std::vector<long long>& xs) {
  std::vector<std::string> names;
  for (auto x : xs) names.push_back(std::to_string(x));
  std::vector<Extended> d;
  for (auto a : xs)
    for (auto b : xs) d.push_back(Extended(Rational(a > b ? a - b : b - a)));
  return make_category<Lawvere>(lawvere(), std::move(names), std::vector<QObject>(xs.size(), 0), std::move(d));
}

/// Random functor A -> B by randomized backtracking; nullopt if none was found.
template <Quantaloid Q>
std::optional<Functor<Q>> random_functor(const CategoryPtr<Q>& A, const CategoryPtr<Q>& B, Rng& rng,
                                         int tries = 16) {
  const auto& q = A->quantaloid();
  for (int t = 0; t < tries; ++t) {
    std::vector<std::size_t> map;
    bool dead = false;
    for (std::size_t a = 0; a < A->size() && !dead; ++a) {
      std::vector<std::size_t> ok;
      for (std::size_t b = 0; b < B->size(); ++b) {
        if (B->type(b) != A->type(a)) continue;
        bool fits = q.leq(A->type(a), A->type(a), A->hom(a, a), B->hom(b, b));
        for (std::size_t j = 0; j < map.size() && fits; ++j)
          fits = q.leq(A->type(a), A->type(j), A->hom(j, a), B->hom(map[j], b)) &&
                 q.leq(A->type(j), A->type(a), A->hom(a, j), B->hom(b, map[j]));
        if (fits) ok.push_back(b);
      }
      if (ok.empty())
        dead = true;
      else
        map.push_back(ok[uniform_below(rng, ok.size())]);
    }
    if (!dead) return Functor<Q>(A, B, std::move(map));
  }
  return std::nullopt;
}

/// Random distributor: a random matrix saturated under both actions.
template <EnumerableQuantaloid Q>
Distributor<Q> random_distributor(const CategoryPtr<Q>& A, const CategoryPtr<Q>& B, Rng& rng) {
  const auto& q = A->quantaloid();
  std::vector<value_t<Q>> m;
  for (std::size_t b = 0; b < B->size(); ++b)
    for (std::size_t a = 0; a < A->size(); ++a) {
      auto els = q.elements(A->type(a), B->type(b));
      m.push_back(coin(rng, 1, 2) ? q.bottom(A->type(a), B->type(b)) : els[uniform_below(rng, els.size())]);
    }
  Distributor<Q> raw(A, B, std::move(m));
  return dist_compose(identity_distributor(B), dist_compose(raw, identity_distributor(A)));
}

inline Distributor<Lawvere> random_metric_distributor(const CategoryPtr<Lawvere>& A, const CategoryPtr<Lawvere>& B,
                                                      Rng& rng) {
  std::vector<Extended> m;
  for (std::size_t i = 0; i < A->size() * B->size(); ++i) m.push_back(random_extended(rng, 12, 2, 6));
  Distributor<Lawvere> raw(A, B, std::move(m));
  return dist_compose(identity_distributor(B), dist_compose(raw, identity_distributor(A)));
}

/// Random presheaf on A of type x (columns of a random distributor from *_x).
template <EnumerableQuantaloid Q>
Presheaf<Q> random_presheaf(const CategoryPtr<Q>& A, QObject x, Rng& rng) {
  auto phi = random_distributor(singleton<Q>(A->quantaloid_ptr(), x), A, rng);
  return column(phi, 0);
}

inline Presheaf<Lawvere> random_metric_presheaf(const CategoryPtr<Lawvere>& A, Rng& rng) {
  return column(random_metric_distributor(singleton<Lawvere>(lawvere(), 0), A, rng), 0);
}

// ---- table quantaloids ----

/// Powerset quantaloid of a small category given by a thin shape (a preorder
/// on k objects) times a monoid M: hom(x, y) = subsets of {x <= y} x M.
/// `monoid` is a multiplication table over {0 = unit, 1, ...}.
inline TableQuantaloid powerset_quantaloid(const OrderTable& shape, const std::vector<std::vector<int>>& monoid,
                                           const std::string& label = {}) {
  const auto k = shape.size();
  const auto m = monoid.size();
  std::vector<std::string> objects = shape.names;
  // elements of hom(x, y): bitmasks over M (empty hom when x !<= y)
  auto width = [&](std::size_t x, std::size_t y) { return shape.at(x, y) ? m : std::size_t{0}; };
  auto mask_name = [&](unsigned mask, std::size_t w) {
    if (w == 0) return std::string("0");
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < w; ++i)
      if (mask >> i & 1) {
        s += (first ? "" : ",") + std::string(i == 0 ? "e" : "m" + std::to_string(i));
        first = false;
      }
    return s + "}";
  };
  std::vector<SupLattice> homs;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      const auto w = width(x, y);
      const unsigned count = 1u << w;
      auto t = OrderTable::empty_order({});
      for (unsigned s = 0; s < count; ++s) t.names.push_back(mask_name(s, w));
      t.leq.assign(count * count, 0);
      for (unsigned s = 0; s < count; ++s)
        for (unsigned u = 0; u < count; ++u)
          if ((s & u) == s) t.set(s, u);
      homs.push_back(SupLattice(std::move(t)));
    }
  std::vector<std::vector<Element>> compose;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z) {
        const unsigned cf = 1u << width(x, y), cg = 1u << width(y, z);
        std::vector<Element> t(cf * cg);
        for (unsigned g = 0; g < cg; ++g)
          for (unsigned f = 0; f < cf; ++f) {
            unsigned r = 0;
            for (std::size_t i = 0; i < m; ++i)
              for (std::size_t j = 0; j < m; ++j)
                if ((g >> i & 1) && (f >> j & 1)) r |= 1u << monoid[i][j];
            t[g * cf + f] = Element{static_cast<std::uint16_t>(r)};
          }
        compose.push_back(std::move(t));
      }
  std::vector<Element> ids(k, Element{1});
  return TableQuantaloid(std::move(objects), std::move(homs), std::move(compose), std::move(ids), label);
}

/// Two objects X, Y with Q(X,Y) = {0,u}, Q(Y,X) = {0,v} and v o u = 1_X, u o v = 1_Y.
inline TableQuantaloid split_quantaloid() {
  auto shape = OrderTable::empty_order({"X", "Y"});
  shape.close();
  shape.set(0, 1);
  shape.set(1, 0);
  return powerset_quantaloid(shape, {{0}});
}

/// Every quantale on the n-chain 0 < ... < n-1 with unit e: multiplication
/// monotone, 0-absorbing and associative. Tables are indexed g * n + f.
inline std::vector<TableQuantaloid> chain_quantales(std::size_t n) {
  std::vector<TableQuantaloid> out;
  if (n < 2) return out;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  const auto lattice = SupLattice::chain(names);
  for (std::size_t e = 1; e < n; ++e) {
    std::vector<int> t(n * n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      t[0 * n + i] = t[i * n + 0] = 0;
      t[e * n + i] = static_cast<int>(i);
      t[i * n + e] = static_cast<int>(i);
    }
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n * n; ++i)
      if (t[i] < 0) free.push_back(i);
    auto monotone_at = [&](std::size_t idx) {
      const auto g = idx / n, f = idx % n;
      const auto v = t[idx];
      // compare with already fixed neighbours
      for (std::size_t g2 = 0; g2 < n; ++g2) {
        const auto w = t[g2 * n + f];
        if (w < 0) continue;
        if (g2 < g && w > v) return false;
        if (g2 > g && w < v) return false;
      }
      for (std::size_t f2 = 0; f2 < n; ++f2) {
        const auto w = t[g * n + f2];
        if (w < 0) continue;
        if (f2 < f && w > v) return false;
        if (f2 > f && w < v) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == free.size()) {
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
              if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return;
        std::vector<Element> table;
        for (auto v : t) table.push_back(Element{static_cast<std::uint16_t>(v)});
        out.emplace_back(std::vector<std::string>{"*"}, std::vector<SupLattice>{lattice},
                         std::vector<std::vector<Element>>{table}, std::vector<Element>{Element{std::uint16_t(e)}});
        return;
      }
      for (std::size_t v = 0; v < n; ++v) {
        t[free[k]] = static_cast<int>(v);
        if (monotone_at(free[k])) self(self, k + 1);
      }
      t[free[k]] = -1;
    };
    rec(rec, 0);
  }
  return out;
}

/// A seeded random table quantaloid with homs of at most 5 elements, drawn
/// from powerset quantaloids of small categories and from quantales on chains.
inline TableQuantaloid random_table_quantaloid(Rng& rng) {
  static const std::vector<TableQuantaloid> chains = [] {
    std::vector<TableQuantaloid> all;
    for (std::size_t n = 2; n <= 5; ++n)
      for (auto& q : chain_quantales(n)) all.push_back(std::move(q));
    return all;
  }();
  if (coin(rng)) return chains[uniform_below(rng, chains.size())];
  static const std::vector<std::vector<std::vector<int>>> monoids = {
      {{0}},                    // trivial
      {{0, 1}, {1, 0}},         // Z/2
      {{0, 1}, {1, 1}},         // {1, 0} under multiplication
  };
  const auto& monoid = monoids[uniform_below(rng, monoids.size())];
  const auto shape_kind = uniform_below(rng, 4);
  OrderTable shape;
  if (shape_kind == 0) {
    shape = OrderTable::empty_order({"X"});
  } else {
    shape = OrderTable::empty_order({"X", "Y"});
    if (shape_kind == 2) shape.set(0, 1);
    if (shape_kind == 3) {
      shape.set(0, 1);
      shape.set(1, 0);
    }
  }
  shape.close();
  return powerset_quantaloid(shape, monoid);
}

}  // namespace qcat::fixtures
