#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcat/category.hpp"

namespace qcat {

inline constexpr std::size_t default_budget = 20000;

/// A presheaf phi : *_X -|-> A, stored as its column: phi(a) : X -> t(a).
template <Quantaloid Q>
struct Presheaf {
  CategoryPtr<Q> base;
  QObject type = 0;
  std::vector<value_t<Q>> values;

  const value_t<Q>& operator()(std::size_t a) const { return values[a]; }
  std::size_t size() const noexcept { return values.size(); }

  friend bool operator==(const Presheaf& x, const Presheaf& y) {
    return x.type == y.type && x.values == y.values && same_category<Q>(x.base, y.base);
  }
};

/// Canonical order used for sorting and deduplication: (type, values).
template <Quantaloid Q>
bool canonical_less(const Presheaf<Q>& x, const Presheaf<Q>& y) {
  return std::tie(x.type, x.values) < std::tie(y.type, y.values);
}

template <Quantaloid Q>
Presheaf<Q> make_presheaf(CategoryPtr<Q> base, QObject type, std::vector<value_t<Q>> values) {
  if (values.size() != base->size()) throw Error("presheaf: one value per object required");
  if (type >= base->quantaloid().object_count()) throw TypeMismatch("presheaf: type out of range");
  return Presheaf<Q>{std::move(base), type, std::move(values)};
}

/// Action axiom A(a2, a) o phi(a) <= phi(a2).
template <Quantaloid Q>
Report validate_presheaf(const Presheaf<Q>& phi) {
  Report r;
  const auto& A = *phi.base;
  const auto& q = A.quantaloid();
  const auto x = phi.type;
  for (std::size_t a2 = 0; a2 < A.size(); ++a2)
    for (std::size_t a = 0; a < A.size(); ++a)
      if (!q.leq(x, A.type(a2), q.compose(x, A.type(a), A.type(a2), A.hom(a2, a), phi(a)), phi(a2)))
        r.add("action axiom fails at (" + A.name(a2) + "," + A.name(a) + ")");
  return r;
}

/// Display form "[v0,v1,...]", prefixed with the type when Q has several objects.
template <Quantaloid Q>
std::string presheaf_label(const Presheaf<Q>& phi) {
  const auto& A = *phi.base;
  const auto& q = A.quantaloid();
  std::string s = q.object_count() > 1 ? std::string(q.object_name(phi.type)) + ":[" : "[";
  for (std::size_t a = 0; a < A.size(); ++a) {
    if (a) s += ",";
    s += q.format(phi.type, A.type(a), phi(a));
  }
  return s + "]";
}

/// A(-, a).
template <Quantaloid Q>
Presheaf<Q> representable(const CategoryPtr<Q>& A, std::size_t a) {
  std::vector<value_t<Q>> v;
  v.reserve(A->size());
  for (std::size_t b = 0; b < A->size(); ++b) v.push_back(A->hom(b, a));
  return Presheaf<Q>{A, A->type(a), std::move(v)};
}

template <Quantaloid Q>
Presheaf<Q> bottom_presheaf(const CategoryPtr<Q>& A, QObject x) {
  const auto& q = A->quantaloid();
  std::vector<value_t<Q>> v;
  for (std::size_t b = 0; b < A->size(); ++b) v.push_back(q.bottom(x, A->type(b)));
  return Presheaf<Q>{A, x, std::move(v)};
}

template <Quantaloid Q>
Presheaf<Q> presheaf_join(const Presheaf<Q>& x, const Presheaf<Q>& y) {
  if (!same_category<Q>(x.base, y.base)) throw BaseMismatch("presheaf_join: different bases");
  if (x.type != y.type) throw TypeMismatch("presheaf_join: different types");
  const auto& A = *x.base;
  auto out = x;
  for (std::size_t a = 0; a < A.size(); ++a) out.values[a] = A.quantaloid().join(x.type, A.type(a), x(a), y(a));
  return out;
}

/// Pointwise order of presheaves of one type.
template <Quantaloid Q>
bool presheaf_leq(const Presheaf<Q>& x, const Presheaf<Q>& y) {
  if (!same_category<Q>(x.base, y.base)) throw BaseMismatch("presheaf_leq: different bases");
  if (x.type != y.type) return false;
  const auto& A = *x.base;
  for (std::size_t a = 0; a < A.size(); ++a)
    if (!A.quantaloid().leq(x.type, A.type(a), x(a), y(a))) return false;
  return true;
}

/// P(A)(psi, phi) : t(phi) -> t(psi), the meet over a of [psi(a), phi(a)].
template <Quantaloid Q>
value_t<Q> presheaf_hom(const Presheaf<Q>& psi, const Presheaf<Q>& phi) {
  if (!same_category<Q>(psi.base, phi.base)) throw BaseMismatch("presheaf_hom: different bases");
  const auto& A = *psi.base;
  const auto& q = A.quantaloid();
  auto acc = q.top(phi.type, psi.type);
  for (std::size_t a = 0; a < A.size(); ++a)
    acc = q.meet(phi.type, psi.type, acc, q.lifting(phi.type, psi.type, A.type(a), psi(a), phi(a)));
  return acc;
}

/// Phi (x) phi : the presheaf b -> join over a of Phi(b, a) o phi(a).
template <Quantaloid Q>
Presheaf<Q> act(const Distributor<Q>& Phi, const Presheaf<Q>& phi) {
  if (!same_category<Q>(Phi.dom(), phi.base)) throw BaseMismatch("act: presheaf not on the distributor's domain");
  const auto& A = *Phi.dom();
  const auto& B = *Phi.cod();
  const auto& q = A.quantaloid();
  std::vector<value_t<Q>> v;
  v.reserve(B.size());
  for (std::size_t b = 0; b < B.size(); ++b) {
    auto acc = q.bottom(phi.type, B.type(b));
    for (std::size_t a = 0; a < A.size(); ++a)
      acc = q.join(phi.type, B.type(b), acc, q.compose(phi.type, A.type(a), B.type(b), Phi(b, a), phi(a)));
    v.push_back(std::move(acc));
  }
  return Presheaf<Q>{Phi.cod(), phi.type, std::move(v)};
}

/// The column Phi(-, b) of Phi : B -|-> A, a presheaf on A of type t(b).
template <Quantaloid Q>
Presheaf<Q> column(const Distributor<Q>& Phi, std::size_t b) {
  const auto& A = *Phi.cod();
  std::vector<value_t<Q>> v;
  v.reserve(A.size());
  for (std::size_t a = 0; a < A.size(); ++a) v.push_back(Phi(a, b));
  return Presheaf<Q>{Phi.cod(), Phi.dom()->type(b), std::move(v)};
}

/// phi viewed as a distributor *_X -|-> A.
template <Quantaloid Q>
Distributor<Q> as_distributor(const Presheaf<Q>& phi) {
  return Distributor<Q>(singleton<Q>(phi.base->quantaloid_ptr(), phi.type), phi.base, phi.values);
}

/// A full subcategory of P(A) on an explicit list of distinct presheaves.
template <Quantaloid Q>
class PresheafCategory {
 public:
  /// `members` must be distinct; empty `names` selects presheaf_label().
  PresheafCategory(CategoryPtr<Q> base, std::vector<Presheaf<Q>> members, std::vector<std::string> names = {})
      : base_(std::move(base)), members_(std::move(members)) {
    if (names.empty())
      for (const auto& m : members_) names.push_back(presheaf_label(m));
    std::vector<QObject> types;
    std::vector<value_t<Q>> hom;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      const auto& m = members_[i];
      if (!same_category<Q>(m.base, base_)) throw BaseMismatch("presheaf category: member on another base");
      if (!index_.emplace(std::make_pair(m.type, m.values), i).second)
        throw Error("presheaf category: duplicate member " + presheaf_label(m));
      types.push_back(m.type);
    }
    hom.reserve(members_.size() * members_.size());
    for (const auto& psi : members_)
      for (const auto& phi : members_) hom.push_back(presheaf_hom(psi, phi));
    category_ = make_category<Q>(base_->quantaloid_ptr(), std::move(names), std::move(types), std::move(hom));
  }

  const CategoryPtr<Q>& base() const noexcept { return base_; }
  const CategoryPtr<Q>& category() const noexcept { return category_; }
  const std::vector<Presheaf<Q>>& members() const noexcept { return members_; }
  const Presheaf<Q>& member(std::size_t i) const { return members_.at(i); }
  std::size_t size() const noexcept { return members_.size(); }

  std::optional<std::size_t> find(const Presheaf<Q>& phi) const {
    if (!same_category<Q>(phi.base, base_)) return std::nullopt;
    auto it = index_.find(std::make_pair(phi.type, phi.values));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index(const Presheaf<Q>& phi) const {
    if (auto i = find(phi)) return *i;
    throw NotInClass("presheaf " + presheaf_label(phi) + " is not an object here");
  }

 private:
  CategoryPtr<Q> base_;
  std::vector<Presheaf<Q>> members_;
  CategoryPtr<Q> category_;
  std::map<std::pair<QObject, std::vector<value_t<Q>>>, std::size_t> index_;
};

template <Quantaloid Q>
using PresheafCategoryPtr = std::shared_ptr<const PresheafCategory<Q>>;

/// Sorts canonically, drops duplicates, and builds the full subcategory.
template <Quantaloid Q>
PresheafCategoryPtr<Q> make_presheaf_category(CategoryPtr<Q> base, std::vector<Presheaf<Q>> members) {
  std::sort(members.begin(), members.end(), canonical_less<Q>);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return std::make_shared<const PresheafCategory<Q>>(std::move(base), std::move(members));
}

/// Every presheaf on A, of every type, in canonical order.
template <EnumerableQuantaloid Q>
std::vector<Presheaf<Q>> enumerate_presheaves(const CategoryPtr<Q>& A, std::size_t budget = default_budget) {
  const auto& q = A->quantaloid();
  const auto n = A->size();
  std::vector<Presheaf<Q>> out;
  for (QObject x = 0; x < q.object_count(); ++x) {
    std::vector<value_t<Q>> v(n);
    // assign v[0..k) then extend; constraints are checked as soon as both ends are fixed
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == n) {
        if (out.size() >= budget) throw BudgetExceeded("presheaf enumeration", out.size() + 1);
        out.push_back(Presheaf<Q>{A, x, v});
        return;
      }
      for (const auto& e : q.elements(x, A->type(k))) {
        v[k] = e;
        bool ok = true;
        for (std::size_t j = 0; j <= k && ok; ++j) {
          const auto tj = A->type(j), tk = A->type(k);
          ok = q.leq(x, tj, q.compose(x, tk, tj, A->hom(j, k), v[k]), v[j]) &&
               q.leq(x, tk, q.compose(x, tj, tk, A->hom(k, j), v[j]), v[k]);
        }
        if (ok) self(self, k + 1);
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end(), canonical_less<Q>);
  return out;
}

/// P(A), fully materialized.
template <EnumerableQuantaloid Q>
PresheafCategoryPtr<Q> presheaf_category(const CategoryPtr<Q>& A, std::size_t budget = default_budget) {
  return std::make_shared<const PresheafCategory<Q>>(A, enumerate_presheaves(A, budget));
}

/// b -> Phi(-, b) for Phi : B -|-> A, landing in `pa` (a full subcategory of P(A)).
template <Quantaloid Q>
Functor<Q> classify(const Distributor<Q>& Phi, const PresheafCategory<Q>& pa) {
  if (!same_category<Q>(Phi.cod(), pa.base())) throw TypeMismatch("classify: codomain is not the presheaf base");
  std::vector<std::size_t> map;
  for (std::size_t b = 0; b < Phi.dom()->size(); ++b) map.push_back(pa.index(column(Phi, b)));
  return Functor<Q>(Phi.dom(), pa.category(), std::move(map));
}

/// (a, b) -> (F b)(a) for F : B -> P(A).
template <Quantaloid Q>
Distributor<Q> declassify(const Functor<Q>& F, const PresheafCategory<Q>& pa) {
  if (!same_category<Q>(F.cod(), pa.category())) throw TypeMismatch("declassify: codomain is not a presheaf category");
  const auto& B = *F.dom();
  const auto& A = *pa.base();
  std::vector<value_t<Q>> m;
  m.reserve(A.size() * B.size());
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < B.size(); ++b) m.push_back(pa.member(F(b))(a));
  return Distributor<Q>(F.dom(), pa.base(), std::move(m));
}

/// Outcome of a colimit search: the chosen functor (if every column has a
/// witness) and the full witness set per column.
template <Quantaloid Q>
struct ColimResult {
  std::optional<Functor<Q>> functor;
  std::vector<std::vector<std::size_t>> witnesses;
  std::optional<std::size_t> missing;  // first column without a witness

  explicit operator bool() const noexcept { return functor.has_value(); }
  const Functor<Q>& value() const {
    if (!functor) throw NotCocomplete(*missing, weight_name);
    return *functor;
  }
  std::string weight_name;
};

/// The Phi-weighted colimit of F : B -> C, Phi : A -|-> B. Each column a is
/// solved by scanning C for k with C(k, -) = [Phi(-, a), C(F-, -)]; the
/// witness of smallest index wins.
template <Quantaloid Q>
ColimResult<Q> colim(const Distributor<Q>& Phi, const Functor<Q>& F) {
  if (!same_category<Q>(Phi.cod(), F.dom())) throw TypeMismatch("colim: weight codomain != functor domain");
  const auto target = dist_lifting(Phi, induced_right(F));  // C -|-> A, entry (a, c)
  const auto& A = *Phi.dom();
  const auto& C = *F.cod();
  ColimResult<Q> r;
  std::vector<std::size_t> map;
  for (std::size_t a = 0; a < A.size(); ++a) {
    std::vector<std::size_t> ws;
    for (std::size_t k = 0; k < C.size(); ++k) {
      if (C.type(k) != A.type(a)) continue;
      bool ok = true;
      for (std::size_t c = 0; c < C.size() && ok; ++c) ok = C.hom(k, c) == target(a, c);
      if (ok) ws.push_back(k);
    }
    if (ws.empty() && !r.missing) {
      r.missing = a;
      r.weight_name = A.name(a);
    }
    map.push_back(ws.empty() ? 0 : ws.front());
    r.witnesses.push_back(std::move(ws));
  }
  if (!r.missing) r.functor.emplace(Phi.dom(), F.cod(), std::move(map));
  return r;
}

/// Colimit into a presheaf category, computed as classify(declassify(F) (x) Phi).
template <Quantaloid Q>
Functor<Q> colim_in_presheaf(const Distributor<Q>& Phi, const Functor<Q>& F, const PresheafCategory<Q>& pc) {
  return classify(dist_compose(declassify(F, pc), Phi), pc);
}

/// Pointwise left Kan extension <F, G> : C -> B of F : A -> B along G : A -> C.
template <Quantaloid Q>
ColimResult<Q> kan_extension(const Functor<Q>& F, const Functor<Q>& G) {
  if (!same_category<Q>(F.dom(), G.dom())) throw TypeMismatch("kan_extension: functors on different domains");
  return colim(induced_right(G), F);
}

/// Y_A : A -> P(A).
template <Quantaloid Q>
Functor<Q> free_unit(const PresheafCategory<Q>& pa) {
  return classify(identity_distributor(pa.base()), pa);
}

/// M_A : P(P(A)) -> P(A), Sigma -> (a -> join over phi of phi(a) o Sigma(phi)).
template <Quantaloid Q>
Functor<Q> free_mult(const PresheafCategory<Q>& pa, const PresheafCategory<Q>& ppa) {
  if (!same_category<Q>(ppa.base(), pa.category())) throw TypeMismatch("free_mult: P(P(A)) not built on P(A)");
  const auto J = declassify(identity_functor(pa.category()), pa);
  std::vector<std::size_t> map;
  for (const auto& sigma : ppa.members()) map.push_back(pa.index(act(J, sigma)));
  return Functor<Q>(ppa.category(), pa.category(), std::move(map));
}

/// P(F) : P(A) -> P(B), phi -> B(-, F-) (x) phi.
template <Quantaloid Q>
Functor<Q> free_map(const Functor<Q>& F, const PresheafCategory<Q>& pa, const PresheafCategory<Q>& pb) {
  if (!same_category<Q>(F.dom(), pa.base()) || !same_category<Q>(F.cod(), pb.base()))
    throw TypeMismatch("free_map: presheaf categories do not match the functor");
  const auto L = induced_left(F);
  std::vector<std::size_t> map;
  for (const auto& phi : pa.members()) map.push_back(pb.index(act(L, phi)));
  return Functor<Q>(pa.category(), pb.category(), std::move(map));
}

/// Left adjoint to Y_C, if C is cocomplete. `pc` must be P(C) (or any full
/// subcategory of it containing the representables, for relative versions).
template <Quantaloid Q>
std::optional<Functor<Q>> cocompletion_adjoint(const CategoryPtr<Q>& C, const PresheafCategory<Q>& pc) {
  std::vector<std::size_t> map;
  for (const auto& phi : pc.members()) {
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < C->size() && !hit; ++k) {
      if (C->type(k) != phi.type) continue;
      bool ok = true;
      for (std::size_t c = 0; c < C->size() && ok; ++c) ok = C->hom(k, c) == presheaf_hom(phi, representable(C, c));
      if (ok) hit = k;
    }
    if (!hit) return std::nullopt;
    map.push_back(*hit);
  }
  Functor<Q> L(pc.category(), C, std::move(map));
  if (!validate_functor(L).ok()) return std::nullopt;
  return L;
}

template <EnumerableQuantaloid Q>
bool is_cocomplete(const CategoryPtr<Q>& C, std::size_t budget = default_budget) {
  auto pc = presheaf_category(C, budget);
  auto L = cocompletion_adjoint(C, *pc);
  return L && is_adjoint_pair(*L, free_unit(*pc));
}

}  // namespace qcat
