#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcat/doctrine.hpp"
#include "qcat/lawvere.hpp"

namespace qcat {

/// A subset of the objects of type `type` in `base`.
template <Quantaloid Q>
struct SubsetWeight {
  CategoryPtr<Q> base;
  QObject type = 0;
  std::vector<std::size_t> members;
};

template <Quantaloid Q>
SubsetWeight<Q> make_subset(const CategoryPtr<Q>& base, QObject type, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (auto a : members) {
    if (a >= base->size()) throw Error("subset: object index out of range");
    if (base->type(a) != type) throw TypeMismatch("subset: object '" + base->name(a) + "' has another type");
  }
  return SubsetWeight<Q>{base, type, std::move(members)};
}

/// Join of the representables A(-, a) over the members; bottom when empty.
template <Quantaloid Q>
Presheaf<Q> conical_from_subset(const SubsetWeight<Q>& s) {
  auto phi = bottom_presheaf(s.base, s.type);
  for (auto a : s.members) phi = presheaf_join(phi, representable(s.base, a));
  return phi;
}

/// Canonical maximal generator set {a : t(a) = t(phi), A(-, a) <= phi}.
template <Quantaloid Q>
std::vector<std::size_t> canonical_generators(const Presheaf<Q>& phi) {
  std::vector<std::size_t> g;
  for (std::size_t a = 0; a < phi.base->size(); ++a)
    if (phi.base->type(a) == phi.type && presheaf_leq(representable(phi.base, a), phi)) g.push_back(a);
  return g;
}

template <Quantaloid Q>
struct ConicalCertificate {
  bool conical = false;
  std::vector<std::size_t> generators;

  explicit operator bool() const noexcept { return conical; }
};

/// phi is conical iff it is the join of the representables below it.
template <Quantaloid Q>
ConicalCertificate<Q> is_conical(const Presheaf<Q>& phi) {
  ConicalCertificate<Q> c;
  c.generators = canonical_generators(phi);
  c.conical = conical_from_subset(SubsetWeight<Q>{phi.base, phi.type, c.generators}) == phi;
  return c;
}

/// All conical presheaves on A: the closure of the bottoms under joins with
/// representables, in canonical order.
template <Quantaloid Q>
std::vector<Presheaf<Q>> conical_presheaves(const CategoryPtr<Q>& A, std::size_t budget = default_budget) {
  const auto& q = A->quantaloid();
  std::vector<Presheaf<Q>> out;
  std::vector<Presheaf<Q>> reps;
  for (std::size_t a = 0; a < A->size(); ++a) reps.push_back(representable(A, a));
  for (QObject x = 0; x < q.object_count(); ++x) {
    std::set<std::vector<value_t<Q>>> seen;
    std::deque<Presheaf<Q>> todo{bottom_presheaf(A, x)};
    seen.insert(todo.front().values);
    while (!todo.empty()) {
      auto phi = std::move(todo.front());
      todo.pop_front();
      for (std::size_t a = 0; a < A->size(); ++a) {
        if (A->type(a) != x) continue;
        auto next = presheaf_join(phi, reps[a]);
        if (seen.insert(next.values).second) todo.push_back(std::move(next));
      }
      if (out.size() >= budget) throw BudgetExceeded("conical presheaf enumeration", out.size() + 1);
      out.push_back(std::move(phi));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less<Q>);
  return out;
}

template <Quantaloid Q>
WeightClass<Q> weight_class_conical() {
  return WeightClass<Q>{"conical", [](const Presheaf<Q>& p) { return is_conical(p).conical; },
                        [](const CategoryPtr<Q>& A) { return conical_presheaves(A); }};
}

template <Quantaloid Q>
WeightClass<Q> weight_class_representable() {
  return WeightClass<Q>{"representable",
                        [](const Presheaf<Q>& p) {
                          for (std::size_t a = 0; a < p.base->size(); ++a)
                            if (representable(p.base, a) == p) return true;
                          return false;
                        },
                        [](const CategoryPtr<Q>& A) {
                          std::vector<Presheaf<Q>> out;
                          for (std::size_t a = 0; a < A->size(); ++a) out.push_back(representable(A, a));
                          std::sort(out.begin(), out.end(), canonical_less<Q>);
                          out.erase(std::unique(out.begin(), out.end()), out.end());
                          return out;
                        }};
}

/// psi := [phi, A], the largest psi with phi (x) psi <= A, as a row a -> psi(a) : t(a) -> X.
template <Quantaloid Q>
std::vector<value_t<Q>> cauchy_candidate(const Presheaf<Q>& phi) {
  auto adj = dist_lifting(as_distributor(phi), identity_distributor(phi.base));
  std::vector<value_t<Q>> row;
  for (std::size_t a = 0; a < phi.base->size(); ++a) row.push_back(adj(0, a));
  return row;
}

/// phi is a left adjoint in Dist(Q): 1_X <= join over a of psi(a) o phi(a) for psi = [phi, A].
template <Quantaloid Q>
bool is_cauchy(const Presheaf<Q>& phi) {
  const auto& A = *phi.base;
  const auto& q = A.quantaloid();
  const auto psi = cauchy_candidate(phi);
  auto acc = q.bottom(phi.type, phi.type);
  for (std::size_t a = 0; a < A.size(); ++a)
    acc = q.join(phi.type, phi.type, acc, q.compose(phi.type, A.type(a), phi.type, psi[a], phi(a)));
  return q.leq(phi.type, phi.type, q.identity(phi.type), acc);
}

template <Quantaloid Q>
WeightClass<Q> weight_class_cauchy() {
  WeightClass<Q> c{"cauchy", [](const Presheaf<Q>& p) { return is_cauchy(p); }, {}};
  if constexpr (EnumerableQuantaloid<Q>) {
    c.enumerate_on = [](const CategoryPtr<Q>& A) {
      std::vector<Presheaf<Q>> out;
      for (auto& p : enumerate_presheaves(A))
        if (is_cauchy(p)) out.push_back(std::move(p));
      return out;
    };
  }
  return c;
}

template <Quantaloid Q>
WeightClass<Q> weight_class_all() {
  WeightClass<Q> c{"all", [](const Presheaf<Q>&) { return true; }, {}};
  if constexpr (EnumerableQuantaloid<Q>) {
    c.enumerate_on = [](const CategoryPtr<Q>& A) { return enumerate_presheaves(A); };
  }
  return c;
}

/// H(A) with the canonical generator set of every object.
template <Quantaloid Q>
struct HausdorffCategory {
  Completion<Q> completion;
  std::vector<std::vector<std::size_t>> generators;

  const CategoryPtr<Q>& category() const noexcept { return completion.category(); }
  const PresheafCategory<Q>& objects() const noexcept { return *completion.objects; }
  std::size_t size() const noexcept { return generators.size(); }

  /// "{a,b}" for the object at index i.
  std::string generator_label(std::size_t i) const {
    const auto& A = *completion.base();
    std::string s = "{";
    for (std::size_t k = 0; k < generators[i].size(); ++k) s += (k ? "," : "") + A.name(generators[i][k]);
    return s + "}";
  }

  /// Object generated by a subset.
  std::size_t find_subset(const SubsetWeight<Q>& s) const { return objects().index(conical_from_subset(s)); }
};

template <Quantaloid Q>
HausdorffCategory<Q> hausdorff_category(const CategoryPtr<Q>& A) {
  HausdorffCategory<Q> h{build_subcategory(A, weight_class_conical<Q>()), {}};
  for (const auto& m : h.completion.objects->members()) h.generators.push_back(canonical_generators(m));
  return h;
}

/// H(F) : H(A) -> H(B), sending the object generated by S to the one generated by F(S).
template <Quantaloid Q>
Functor<Q> hausdorff_on_functor(const Functor<Q>& F, const HausdorffCategory<Q>& ha, const HausdorffCategory<Q>& hb) {
  if (!same_category<Q>(F.dom(), ha.completion.base()) || !same_category<Q>(F.cod(), hb.completion.base()))
    throw TypeMismatch("hausdorff_on_functor: categories do not match the functor");
  std::vector<std::size_t> map;
  for (std::size_t i = 0; i < ha.size(); ++i) {
    std::vector<std::size_t> image;
    for (auto a : ha.generators[i]) image.push_back(F(a));
    map.push_back(hb.find_subset(make_subset(F.cod(), ha.objects().member(i).type, std::move(image))));
  }
  return Functor<Q>(ha.category(), hb.category(), std::move(map));
}

/// H'(Phi)(psi, phi) = meet over t in T of join over s in S of Phi(t, s).
template <Quantaloid Q>
Distributor<Q> hausdorff_on_dist(const Distributor<Q>& Phi, const HausdorffCategory<Q>& ha,
                                 const HausdorffCategory<Q>& hb) {
  if (!same_category<Q>(Phi.dom(), ha.completion.base()) || !same_category<Q>(Phi.cod(), hb.completion.base()))
    throw TypeMismatch("hausdorff_on_dist: categories do not match the distributor");
  const auto& q = Phi.quantaloid();
  std::vector<value_t<Q>> m;
  m.reserve(ha.size() * hb.size());
  for (std::size_t j = 0; j < hb.size(); ++j)
    for (std::size_t i = 0; i < ha.size(); ++i) {
      const auto x = ha.objects().member(i).type;
      const auto y = hb.objects().member(j).type;
      auto acc = q.top(x, y);
      for (auto t : hb.generators[j]) {
        auto inner = q.bottom(x, y);
        for (auto s : ha.generators[i]) inner = q.join(x, y, inner, Phi(t, s));
        acc = q.meet(x, y, acc, inner);
      }
      m.push_back(std::move(acc));
    }
  return Distributor<Q>(ha.category(), hb.category(), std::move(m));
}

/// Meet over a2 in S2 of join over a in S of A(a2, a).
template <Quantaloid Q>
value_t<Q> directed_hausdorff(const SubsetWeight<Q>& s2, const SubsetWeight<Q>& s) {
  if (!same_category<Q>(s2.base, s.base)) throw BaseMismatch("directed_hausdorff: different bases");
  if (s2.type != s.type) throw TypeMismatch("directed_hausdorff: subsets of different types");
  const auto& A = *s.base;
  const auto& q = A.quantaloid();
  const auto x = s.type;
  auto acc = q.top(x, x);
  for (auto a2 : s2.members) {
    auto inner = q.bottom(x, x);
    for (auto a : s.members) inner = q.join(x, x, inner, A.hom(a2, a));
    acc = q.meet(x, x, acc, inner);
  }
  return acc;
}

/// max of the two directed distances. A convenience over Lawvere only; the
/// enriched construction itself is directed.
inline Extended symmetric_hausdorff(const SubsetWeight<Lawvere>& s, const SubsetWeight<Lawvere>& t) {
  return std::max(directed_hausdorff(s, t), directed_hausdorff(t, s));
}

/// The full subcategory of P(A) on the Cauchy presheaves, with a -> A(-, a).
template <EnumerableQuantaloid Q>
Completion<Q> cauchy_completion(const CategoryPtr<Q>& A) {
  return build_subcategory(A, weight_class_cauchy<Q>());
}

/// Free Q(X,X)-category on a preorder: I(i, j) = 1_X if i <= j, else bottom.
template <Quantaloid Q>
CategoryPtr<Q> free_qcategory_on_poset(std::shared_ptr<const Q> q, QObject x, const OrderTable& order) {
  std::vector<value_t<Q>> hom;
  const auto n = order.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hom.push_back(order.at(i, j) ? q->identity(x) : q->bottom(x, x));
  auto names = order.names;
  return make_category<Q>(q, std::move(names), std::vector<QObject>(n, x), std::move(hom));
}

/// gamma : *_X -|-> I with every value 1_X.
template <Quantaloid Q>
Presheaf<Q> constant_identity_weight(const CategoryPtr<Q>& I, QObject x) {
  return Presheaf<Q>{I, x, std::vector<value_t<Q>>(I->size(), I->quantaloid().identity(x))};
}

}  // namespace qcat
