#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcat/quantaloid.hpp"

namespace qcat {

/// A Q-category: typed objects and a hom matrix with hom(a2, a) : t(a) -> t(a2).
///
/// Dense storage keyed by object index. Construction checks shapes only; the
/// identity and composition axioms are checked by validate_category().
/// Identity, or structural equality where Q provides it.
template <Quantaloid Q>
bool same_quantaloid(const Q& a, const Q& b) {
  if (&a == &b) return true;
  if constexpr (std::equality_comparable<Q>)
    return a == b;
  else
    return false;
}

template <Quantaloid Q>
class Category {
 public:
  using quantaloid_type = Q;
  using value_type = value_t<Q>;

  Category(std::shared_ptr<const Q> q, std::vector<std::string> names, std::vector<QObject> types,
           std::vector<value_type> hom)
      : q_(std::move(q)), names_(std::move(names)), types_(std::move(types)), hom_(std::move(hom)) {
    if (!q_) throw Error("category needs a quantaloid");
    if (types_.size() != names_.size()) throw Error("category: one type per object required");
    if (hom_.size() != names_.size() * names_.size()) throw Error("category: hom matrix has wrong size");
    for (auto t : types_)
      if (t >= q_->object_count()) throw TypeMismatch("category: object type out of range");
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (!index_.emplace(names_[i], i).second) throw Error("category: duplicate object id '" + names_[i] + "'");
  }

  const Q& quantaloid() const noexcept { return *q_; }
  const std::shared_ptr<const Q>& quantaloid_ptr() const noexcept { return q_; }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  QObject type(std::size_t a) const { return types_[a]; }
  const std::vector<QObject>& types() const noexcept { return types_; }

  /// A(a2, a) : t(a) -> t(a2).
  const value_type& hom(std::size_t a2, std::size_t a) const { return hom_[a2 * size() + a]; }
  const std::vector<value_type>& hom_matrix() const noexcept { return hom_; }

  std::optional<std::size_t> find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw Error("unknown object '" + std::string(id) + "'");
  }

  /// a <= a2 in the underlying order: same type and 1 <= A(a, a2).
  bool below(std::size_t a, std::size_t a2) const {
    return type(a) == type(a2) && q_->leq(type(a2), type(a), q_->identity(type(a)), hom(a, a2));
  }

  friend bool operator==(const Category& x, const Category& y) {
    return same_quantaloid(*x.q_, *y.q_) && x.names_ == y.names_ && x.types_ == y.types_ && x.hom_ == y.hom_;
  }

 private:
  std::shared_ptr<const Q> q_;
  std::vector<std::string> names_;
  std::vector<QObject> types_;
  std::vector<value_type> hom_;
  std::unordered_map<std::string, std::size_t> index_;
};

template <Quantaloid Q>
using CategoryPtr = std::shared_ptr<const Category<Q>>;

template <Quantaloid Q>
bool same_category(const CategoryPtr<Q>& a, const CategoryPtr<Q>& b) {
  return a == b || (a && b && *a == *b);
}

template <Quantaloid Q>
CategoryPtr<Q> make_category(std::shared_ptr<const Q> q, std::vector<std::string> names, std::vector<QObject> types,
                             std::vector<value_t<Q>> hom) {
  return std::make_shared<const Category<Q>>(std::move(q), std::move(names), std::move(types), std::move(hom));
}

/// The one-object category *_X with hom 1_X.
template <Quantaloid Q>
CategoryPtr<Q> singleton(std::shared_ptr<const Q> q, QObject x) {
  auto id = q->identity(x);
  return make_category<Q>(std::move(q), {"*"}, {x}, {id});
}

template <Quantaloid Q>
CategoryPtr<Q> full_subcategory(const CategoryPtr<Q>& a, std::span<const std::size_t> objects) {
  std::vector<std::string> names;
  std::vector<QObject> types;
  std::vector<value_t<Q>> hom;
  for (auto x : objects) {
    names.push_back(a->name(x));
    types.push_back(a->type(x));
  }
  for (auto x : objects)
    for (auto y : objects) hom.push_back(a->hom(x, y));
  return make_category<Q>(a->quantaloid_ptr(), std::move(names), std::move(types), std::move(hom));
}

/// A type-preserving object map between Q-categories.
template <Quantaloid Q>
class Functor {
 public:
  Functor(CategoryPtr<Q> dom, CategoryPtr<Q> cod, std::vector<std::size_t> map)
      : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
    if (map_.size() != dom_->size()) throw Error("functor: object map has wrong size");
    for (std::size_t a = 0; a < map_.size(); ++a) {
      if (map_[a] >= cod_->size()) throw Error("functor: image out of range");
      if (cod_->type(map_[a]) != dom_->type(a))
        throw TypeMismatch("functor: object '" + dom_->name(a) + "' sent to an object of another type");
    }
  }

  const CategoryPtr<Q>& dom() const noexcept { return dom_; }
  const CategoryPtr<Q>& cod() const noexcept { return cod_; }
  std::size_t operator()(std::size_t a) const { return map_[a]; }
  const std::vector<std::size_t>& map() const noexcept { return map_; }

  /// Same endpoints and the same object map (strict equality, not isomorphism).
  friend bool operator==(const Functor& f, const Functor& g) {
    return same_category<Q>(f.dom_, g.dom_) && same_category<Q>(f.cod_, g.cod_) && f.map_ == g.map_;
  }

 private:
  CategoryPtr<Q> dom_, cod_;
  std::vector<std::size_t> map_;
};

template <Quantaloid Q>
Functor<Q> identity_functor(const CategoryPtr<Q>& a) {
  std::vector<std::size_t> map(a->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return Functor<Q>(a, a, std::move(map));
}

/// g o f.
template <Quantaloid Q>
Functor<Q> compose(const Functor<Q>& g, const Functor<Q>& f) {
  if (!same_category<Q>(f.cod(), g.dom())) throw TypeMismatch("functor composite: codomain/domain differ");
  std::vector<std::size_t> map(f.dom()->size());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = g(f(a));
  return Functor<Q>(f.dom(), g.cod(), std::move(map));
}

/// A distributor Phi : A -|-> B, a matrix with Phi(b, a) : t(a) -> t(b).
template <Quantaloid Q>
class Distributor {
 public:
  using value_type = value_t<Q>;

  Distributor(CategoryPtr<Q> dom, CategoryPtr<Q> cod, std::vector<value_type> matrix)
      : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(matrix)) {
    if (!same_quantaloid(dom_->quantaloid(), cod_->quantaloid())) throw TypeMismatch("distributor over two quantaloids");
    if (matrix_.size() != dom_->size() * cod_->size()) throw Error("distributor: matrix has wrong size");
  }

  const CategoryPtr<Q>& dom() const noexcept { return dom_; }
  const CategoryPtr<Q>& cod() const noexcept { return cod_; }
  const Q& quantaloid() const noexcept { return dom_->quantaloid(); }

  const value_type& operator()(std::size_t b, std::size_t a) const { return matrix_[b * dom_->size() + a]; }
  const std::vector<value_type>& matrix() const noexcept { return matrix_; }

  friend bool operator==(const Distributor& x, const Distributor& y) {
    return same_category<Q>(x.dom_, y.dom_) && same_category<Q>(x.cod_, y.cod_) && x.matrix_ == y.matrix_;
  }

 private:
  CategoryPtr<Q> dom_, cod_;
  std::vector<value_type> matrix_;
};

namespace detail {

template <Quantaloid Q>
void require_same(const CategoryPtr<Q>& a, const CategoryPtr<Q>& b, const char* what) {
  if (!same_category<Q>(a, b)) throw TypeMismatch(what);
}

}  // namespace detail

/// The identity distributor A : A -|-> A.
template <Quantaloid Q>
Distributor<Q> identity_distributor(const CategoryPtr<Q>& a) {
  return Distributor<Q>(a, a, a->hom_matrix());
}

template <Quantaloid Q>
Distributor<Q> bottom_distributor(const CategoryPtr<Q>& a, const CategoryPtr<Q>& b) {
  const auto& q = a->quantaloid();
  std::vector<value_t<Q>> m;
  m.reserve(a->size() * b->size());
  for (std::size_t y = 0; y < b->size(); ++y)
    for (std::size_t x = 0; x < a->size(); ++x) m.push_back(q.bottom(a->type(x), b->type(y)));
  return Distributor<Q>(a, b, std::move(m));
}

/// (Psi (x) Phi)(c, a) = join over b of Psi(c, b) o Phi(b, a).
template <Quantaloid Q>
Distributor<Q> dist_compose(const Distributor<Q>& psi, const Distributor<Q>& phi) {
  detail::require_same<Q>(psi.dom(), phi.cod(), "dist_compose: Psi.dom != Phi.cod");
  const auto& q = phi.quantaloid();
  const auto& A = *phi.dom();
  const auto& B = *phi.cod();
  const auto& C = *psi.cod();
  std::vector<value_t<Q>> m;
  m.reserve(A.size() * C.size());
  for (std::size_t c = 0; c < C.size(); ++c)
    for (std::size_t a = 0; a < A.size(); ++a) {
      auto acc = q.bottom(A.type(a), C.type(c));
      for (std::size_t b = 0; b < B.size(); ++b)
        acc = q.join(A.type(a), C.type(c), acc, q.compose(A.type(a), B.type(b), C.type(c), psi(c, b), phi(b, a)));
      m.push_back(std::move(acc));
    }
  return Distributor<Q>(phi.dom(), psi.cod(), std::move(m));
}

/// Elementwise join of a family of parallel distributors A -|-> B.
template <Quantaloid Q>
Distributor<Q> dist_join(const CategoryPtr<Q>& a, const CategoryPtr<Q>& b, std::span<const Distributor<Q>> family) {
  auto out = bottom_distributor<Q>(a, b);
  const auto& q = a->quantaloid();
  auto m = out.matrix();
  for (const auto& phi : family) {
    detail::require_same<Q>(phi.dom(), a, "dist_join: domains differ");
    detail::require_same<Q>(phi.cod(), b, "dist_join: codomains differ");
    for (std::size_t y = 0; y < b->size(); ++y)
      for (std::size_t x = 0; x < a->size(); ++x) {
        auto& e = m[y * a->size() + x];
        e = q.join(a->type(x), b->type(y), e, phi(y, x));
      }
  }
  return Distributor<Q>(a, b, std::move(m));
}

template <Quantaloid Q>
Distributor<Q> dist_join(const Distributor<Q>& x, const Distributor<Q>& y) {
  const Distributor<Q> pair[] = {x, y};
  return dist_join<Q>(x.dom(), x.cod(), pair);
}

/// Elementwise order of parallel distributors.
template <Quantaloid Q>
bool dist_leq(const Distributor<Q>& x, const Distributor<Q>& y) {
  detail::require_same<Q>(x.dom(), y.dom(), "dist_leq: domains differ");
  detail::require_same<Q>(x.cod(), y.cod(), "dist_leq: codomains differ");
  const auto& q = x.quantaloid();
  const auto& A = *x.dom();
  const auto& B = *x.cod();
  for (std::size_t b = 0; b < B.size(); ++b)
    for (std::size_t a = 0; a < A.size(); ++a)
      if (!q.leq(A.type(a), B.type(b), x(b, a), y(b, a))) return false;
  return true;
}

/// Lifting [Psi, Theta] : A -|-> B of Theta : A -|-> C through Psi : B -|-> C;
/// entry (b, a) is the meet over c of [Psi(c, b), Theta(c, a)].
template <Quantaloid Q>
Distributor<Q> dist_lifting(const Distributor<Q>& psi, const Distributor<Q>& theta) {
  detail::require_same<Q>(psi.cod(), theta.cod(), "dist_lifting: codomains differ");
  const auto& q = psi.quantaloid();
  const auto& A = *theta.dom();
  const auto& B = *psi.dom();
  const auto& C = *psi.cod();
  std::vector<value_t<Q>> m;
  m.reserve(A.size() * B.size());
  for (std::size_t b = 0; b < B.size(); ++b)
    for (std::size_t a = 0; a < A.size(); ++a) {
      auto acc = q.top(A.type(a), B.type(b));
      for (std::size_t c = 0; c < C.size(); ++c)
        acc = q.meet(A.type(a), B.type(b), acc,
                     q.lifting(A.type(a), B.type(b), C.type(c), psi(c, b), theta(c, a)));
      m.push_back(std::move(acc));
    }
  return Distributor<Q>(theta.dom(), psi.dom(), std::move(m));
}

/// Extension {Phi, Theta} : B -|-> C of Theta : A -|-> C through Phi : A -|-> B;
/// entry (c, b) is the meet over a of {Phi(b, a), Theta(c, a)}.
template <Quantaloid Q>
Distributor<Q> dist_extension(const Distributor<Q>& phi, const Distributor<Q>& theta) {
  detail::require_same<Q>(phi.dom(), theta.dom(), "dist_extension: domains differ");
  const auto& q = phi.quantaloid();
  const auto& A = *phi.dom();
  const auto& B = *phi.cod();
  const auto& C = *theta.cod();
  std::vector<value_t<Q>> m;
  m.reserve(B.size() * C.size());
  for (std::size_t c = 0; c < C.size(); ++c)
    for (std::size_t b = 0; b < B.size(); ++b) {
      auto acc = q.top(B.type(b), C.type(c));
      for (std::size_t a = 0; a < A.size(); ++a)
        acc = q.meet(B.type(b), C.type(c), acc,
                     q.extension(A.type(a), B.type(b), C.type(c), phi(b, a), theta(c, a)));
      m.push_back(std::move(acc));
    }
  return Distributor<Q>(phi.cod(), theta.cod(), std::move(m));
}

/// Functoriality axiom A(a2, a) <= B(F a2, F a), as a report.
template <Quantaloid Q>
Report validate_functor(const Functor<Q>& f) {
  Report r;
  const auto& A = *f.dom();
  const auto& B = *f.cod();
  const auto& q = A.quantaloid();
  for (std::size_t a2 = 0; a2 < A.size(); ++a2)
    for (std::size_t a = 0; a < A.size(); ++a)
      if (!q.leq(A.type(a), A.type(a2), A.hom(a2, a), B.hom(f(a2), f(a))))
        r.add("functoriality fails at (" + A.name(a2) + "," + A.name(a) + ")");
  return r;
}

/// B(-, F-) : A -|-> B.
template <Quantaloid Q>
Distributor<Q> induced_left(const Functor<Q>& f) {
  if (auto r = validate_functor(f); !r.ok()) throw ValidationError("invalid functor", r.violations);
  const auto& A = *f.dom();
  const auto& B = *f.cod();
  std::vector<value_t<Q>> m;
  m.reserve(A.size() * B.size());
  for (std::size_t b = 0; b < B.size(); ++b)
    for (std::size_t a = 0; a < A.size(); ++a) m.push_back(B.hom(b, f(a)));
  return Distributor<Q>(f.dom(), f.cod(), std::move(m));
}

/// B(F-, -) : B -|-> A.
template <Quantaloid Q>
Distributor<Q> induced_right(const Functor<Q>& f) {
  if (auto r = validate_functor(f); !r.ok()) throw ValidationError("invalid functor", r.violations);
  const auto& A = *f.dom();
  const auto& B = *f.cod();
  std::vector<value_t<Q>> m;
  m.reserve(A.size() * B.size());
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < B.size(); ++b) m.push_back(B.hom(f(a), b));
  return Distributor<Q>(f.cod(), f.dom(), std::move(m));
}

/// F <= G iff B(-, F-) <= B(-, G-). A preorder: F <= G <= F does not force F == G.
template <Quantaloid Q>
bool functor_leq(const Functor<Q>& f, const Functor<Q>& g) {
  detail::require_same<Q>(f.dom(), g.dom(), "functor_leq: domains differ");
  detail::require_same<Q>(f.cod(), g.cod(), "functor_leq: codomains differ");
  const auto& A = *f.dom();
  const auto& B = *f.cod();
  const auto& q = A.quantaloid();
  for (std::size_t b = 0; b < B.size(); ++b)
    for (std::size_t a = 0; a < A.size(); ++a)
      if (!q.leq(A.type(a), B.type(b), B.hom(b, f(a)), B.hom(b, g(a)))) return false;
  return true;
}

/// Isomorphism in the functor preorder.
template <Quantaloid Q>
bool functor_iso(const Functor<Q>& f, const Functor<Q>& g) {
  return functor_leq(f, g) && functor_leq(g, f);
}

template <Quantaloid Q>
bool is_fully_faithful(const Functor<Q>& f) {
  const auto& A = *f.dom();
  const auto& B = *f.cod();
  for (std::size_t a2 = 0; a2 < A.size(); ++a2)
    for (std::size_t a = 0; a < A.size(); ++a)
      if (!(A.hom(a2, a) == B.hom(f(a2), f(a)))) return false;
  return true;
}

/// F : A -> B left adjoint to G : B -> A, i.e. B(F-, -) = A(-, G-).
template <Quantaloid Q>
bool is_adjoint_pair(const Functor<Q>& f, const Functor<Q>& g) {
  detail::require_same<Q>(f.dom(), g.cod(), "is_adjoint_pair: F.dom != G.cod");
  detail::require_same<Q>(f.cod(), g.dom(), "is_adjoint_pair: F.cod != G.dom");
  const auto& A = *f.dom();
  const auto& B = *f.cod();
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < B.size(); ++b)
      if (!(B.hom(f(a), b) == A.hom(a, g(b)))) return false;
  return true;
}

/// Every functor A -> B, by backtracking over type-matching images.
template <Quantaloid Q>
std::vector<Functor<Q>> enumerate_functors(const CategoryPtr<Q>& A, const CategoryPtr<Q>& B,
                                           std::size_t budget = 20000) {
  const auto& q = A->quantaloid();
  std::vector<Functor<Q>> out;
  std::vector<std::size_t> map;
  auto rec = [&](auto&& self) -> void {
    const auto a = map.size();
    if (a == A->size()) {
      if (out.size() >= budget) throw BudgetExceeded("functor enumeration", out.size() + 1);
      out.emplace_back(A, B, map);
      return;
    }
    for (std::size_t b = 0; b < B->size(); ++b) {
      if (B->type(b) != A->type(a)) continue;
      bool ok = q.leq(A->type(a), A->type(a), A->hom(a, a), B->hom(b, b));
      for (std::size_t j = 0; j < a && ok; ++j)
        ok = q.leq(A->type(a), A->type(j), A->hom(j, a), B->hom(map[j], b)) &&
             q.leq(A->type(j), A->type(a), A->hom(a, j), B->hom(b, map[j]));
      if (!ok) continue;
      map.push_back(b);
      self(self);
      map.pop_back();
    }
  };
  rec(rec);
  return out;
}

/// Objects b and b2 are isomorphic: same type, 1 <= B(b, b2) and 1 <= B(b2, b).
template <Quantaloid Q>
bool objects_isomorphic(const Category<Q>& B, std::size_t b, std::size_t b2) {
  return B.below(b, b2) && B.below(b2, b);
}

template <Quantaloid Q>
bool is_essentially_surjective(const Functor<Q>& f) {
  const auto& A = *f.dom();
  const auto& B = *f.cod();
  for (std::size_t b = 0; b < B.size(); ++b) {
    bool hit = false;
    for (std::size_t a = 0; a < A.size() && !hit; ++a) hit = objects_isomorphic(B, b, f(a));
    if (!hit) return false;
  }
  return true;
}

template <Quantaloid Q>
bool is_equivalence(const Functor<Q>& f) {
  return is_fully_faithful(f) && is_essentially_surjective(f);
}

/// Identity and composition axioms, every violated instance named.
template <Quantaloid Q>
Report validate_category(const Category<Q>& A) {
  Report r;
  const auto& q = A.quantaloid();
  for (std::size_t a = 0; a < A.size(); ++a)
    if (!q.leq(A.type(a), A.type(a), q.identity(A.type(a)), A.hom(a, a)))
      r.add("identity axiom fails at " + A.name(a));
  for (std::size_t a2 = 0; a2 < A.size(); ++a2)
    for (std::size_t a1 = 0; a1 < A.size(); ++a1)
      for (std::size_t a = 0; a < A.size(); ++a)
        if (!q.leq(A.type(a), A.type(a2), q.compose(A.type(a), A.type(a1), A.type(a2), A.hom(a2, a1), A.hom(a1, a)),
                   A.hom(a2, a)))
          r.add("composition axiom fails at (" + A.name(a2) + "," + A.name(a1) + "," + A.name(a) + ")");
  return r;
}

/// Both action axioms of a distributor, every violated instance named.
template <Quantaloid Q>
Report validate_distributor(const Distributor<Q>& phi) {
  Report r;
  const auto& q = phi.quantaloid();
  const auto& A = *phi.dom();
  const auto& B = *phi.cod();
  for (std::size_t b = 0; b < B.size(); ++b)
    for (std::size_t a2 = 0; a2 < A.size(); ++a2)
      for (std::size_t a = 0; a < A.size(); ++a)
        if (!q.leq(A.type(a), B.type(b), q.compose(A.type(a), A.type(a2), B.type(b), phi(b, a2), A.hom(a2, a)),
                   phi(b, a)))
          r.add("right action fails at (" + B.name(b) + "," + A.name(a2) + "," + A.name(a) + ")");
  for (std::size_t b = 0; b < B.size(); ++b)
    for (std::size_t b2 = 0; b2 < B.size(); ++b2)
      for (std::size_t a = 0; a < A.size(); ++a)
        if (!q.leq(A.type(a), B.type(b), q.compose(A.type(a), B.type(b2), B.type(b), B.hom(b, b2), phi(b2, a)),
                   phi(b, a)))
          r.add("left action fails at (" + B.name(b) + "," + B.name(b2) + "," + A.name(a) + ")");
  return r;
}

}  // namespace qcat
