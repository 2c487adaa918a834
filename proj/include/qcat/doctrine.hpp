#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcat/presheaf.hpp"
#include "qcat/random.hpp"

namespace qcat {

/// A class of presheaves given by a membership oracle, with an optional
/// enumerator listing the members on a given base.
template <Quantaloid Q>
struct WeightClass {
  std::string name;
  std::function<bool(const Presheaf<Q>&)> contains;
  std::function<std::vector<Presheaf<Q>>(const CategoryPtr<Q>&)> enumerate_on;

  bool enumerable() const noexcept { return static_cast<bool>(enumerate_on); }
};

/// A named test category.
template <Quantaloid Q>
struct Fixture {
  std::string name;
  CategoryPtr<Q> category;
};

/// C(A) as a full subcategory of P(A), together with the unit I_A : A -> C(A).
template <Quantaloid Q>
struct Completion {
  PresheafCategoryPtr<Q> objects;
  Functor<Q> unit;

  const CategoryPtr<Q>& category() const noexcept { return objects->category(); }
  const CategoryPtr<Q>& base() const noexcept { return objects->base(); }
};

/// Every column Phi(-, a) is a member.
template <Quantaloid Q>
bool dist_in_class(const Distributor<Q>& Phi, const WeightClass<Q>& c) {
  for (std::size_t a = 0; a < Phi.dom()->size(); ++a)
    if (!c.contains(column(Phi, a))) return false;
  return true;
}

template <Quantaloid Q>
Completion<Q> build_subcategory(const CategoryPtr<Q>& A, const WeightClass<Q>& c) {
  if (!c.enumerable()) throw NotEnumerable("class '" + c.name + "' has no enumerator");
  auto objects = make_presheaf_category<Q>(A, c.enumerate_on(A));
  std::vector<std::size_t> map;
  for (std::size_t a = 0; a < A->size(); ++a) map.push_back(objects->index(representable(A, a)));
  return Completion<Q>{objects, Functor<Q>(A, objects->category(), std::move(map))};
}

/// J_A : C(A) -> P(A), given a materialized P(A).
template <Quantaloid Q>
Functor<Q> class_embedding(const Completion<Q>& ca, const PresheafCategory<Q>& pa) {
  std::vector<std::size_t> map;
  for (const auto& s : ca.objects->members()) map.push_back(pa.index(s));
  return Functor<Q>(ca.category(), pa.category(), std::move(map));
}

/// The distributor C(A) -|-> A with entries (a, s) = s(a); declassification of J_A.
template <Quantaloid Q>
Distributor<Q> class_evaluation(const Completion<Q>& ca) {
  return declassify(identity_functor(ca.category()), *ca.objects);
}

/// I_Phi : A -> C(B) with J_B o I_Phi = classify(Phi); NotInClass when a column is not a member.
template <Quantaloid Q>
Functor<Q> factor_through(const Distributor<Q>& Phi, const Completion<Q>& cb, const WeightClass<Q>& c) {
  if (!same_category<Q>(Phi.cod(), cb.base())) throw TypeMismatch("factor_through: codomain is not the class base");
  std::vector<std::size_t> map;
  for (std::size_t a = 0; a < Phi.dom()->size(); ++a) {
    auto col = column(Phi, a);
    if (!c.contains(col)) throw NotInClass("column '" + Phi.dom()->name(a) + "' is not in class " + c.name);
    map.push_back(cb.objects->index(col));
  }
  return Functor<Q>(Phi.dom(), cb.category(), std::move(map));
}

/// C(F) : C(A) -> C(B), s -> B(-, F-) (x) s.
template <Quantaloid Q>
Functor<Q> class_map(const Functor<Q>& F, const Completion<Q>& ca, const Completion<Q>& cb) {
  if (!same_category<Q>(F.dom(), ca.base()) || !same_category<Q>(F.cod(), cb.base()))
    throw TypeMismatch("class_map: completions do not match the functor");
  const auto L = induced_left(F);
  std::vector<std::size_t> map;
  for (const auto& s : ca.objects->members()) map.push_back(cb.objects->index(act(L, s)));
  return Functor<Q>(ca.category(), cb.category(), std::move(map));
}

/// mu_A : C(C(A)) -> C(A), the J_A-colimit of each weight.
template <Quantaloid Q>
Functor<Q> class_mult(const Completion<Q>& ca, const Completion<Q>& cca) {
  if (!same_category<Q>(cca.base(), ca.category())) throw TypeMismatch("class_mult: C(C(A)) not built on C(A)");
  const auto J = class_evaluation(ca);
  std::vector<std::size_t> map;
  for (const auto& sigma : cca.objects->members()) map.push_back(ca.objects->index(act(J, sigma)));
  return Functor<Q>(cca.category(), ca.category(), std::move(map));
}

/// T'(Phi) : C(A) -|-> C(B), entry (t, s) = P(B)(t, Phi (x) s).
template <Quantaloid Q>
Distributor<Q> extend_to_dist(const Distributor<Q>& Phi, const Completion<Q>& ca, const Completion<Q>& cb) {
  if (!same_category<Q>(Phi.dom(), ca.base()) || !same_category<Q>(Phi.cod(), cb.base()))
    throw TypeMismatch("extend_to_dist: completions do not match the distributor");
  std::vector<Presheaf<Q>> images;
  for (const auto& s : ca.objects->members()) images.push_back(act(Phi, s));
  std::vector<value_t<Q>> m;
  m.reserve(ca.objects->size() * cb.objects->size());
  for (const auto& t : cb.objects->members())
    for (const auto& img : images) m.push_back(presheaf_hom(t, img));
  return Distributor<Q>(ca.category(), cb.category(), std::move(m));
}

/// Randomly assembles a distributor A -|-> B whose columns are drawn from
/// `members` (presheaves on B); columns are chosen one at a time among those
/// compatible with the columns already fixed. Gives up after `tries` restarts.
template <Quantaloid Q>
std::optional<Distributor<Q>> sample_distributor(const CategoryPtr<Q>& A, const CategoryPtr<Q>& B,
                                                 const std::vector<Presheaf<Q>>& members, Rng& rng,
                                                 int tries = 8) {
  const auto& q = A->quantaloid();
  for (int attempt = 0; attempt < tries; ++attempt) {
    std::vector<std::size_t> chosen;
    bool dead = false;
    for (std::size_t a = 0; a < A->size() && !dead; ++a) {
      std::vector<std::size_t> ok;
      for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& m = members[i];
        if (m.type != A->type(a)) continue;
        bool fits = true;
        for (std::size_t j = 0; j < chosen.size() && fits; ++j) {
          const auto& p = members[chosen[j]];
          // right action in both directions: A(j, a) <= P(B)(col j, col a) and vice versa
          fits = q.leq(A->type(a), A->type(j), A->hom(j, a), presheaf_hom(p, m)) &&
                 q.leq(A->type(j), A->type(a), A->hom(a, j), presheaf_hom(m, p));
        }
        if (fits) {
          // self-compatibility, a no-op when A(a, a) is the identity
          fits = q.leq(A->type(a), A->type(a), A->hom(a, a), presheaf_hom(m, m));
        }
        if (fits) ok.push_back(i);
      }
      if (ok.empty()) {
        dead = true;
        break;
      }
      chosen.push_back(ok[uniform_below(rng, ok.size())]);
    }
    if (dead) continue;
    std::vector<value_t<Q>> mat(A->size() * B->size());
    for (std::size_t a = 0; a < A->size(); ++a)
      for (std::size_t b = 0; b < B->size(); ++b) mat[b * A->size() + a] = members[chosen[a]](b);
    return Distributor<Q>(A, B, std::move(mat));
  }
  return std::nullopt;
}

/// Refutation sampling for saturation: representables are members, and
/// Psi (x) Phi stays in the class whenever Phi and Psi do.
template <Quantaloid Q>
Report saturation_check(const WeightClass<Q>& c, const std::vector<Fixture<Q>>& fixtures, std::size_t budget,
                        std::uint64_t seed) {
  Report r;
  std::vector<std::vector<Presheaf<Q>>> members;
  for (const auto& f : fixtures) {
    for (std::size_t a = 0; a < f.category->size(); ++a)
      if (!c.contains(representable(f.category, a)))
        r.add("representable " + f.category->name(a) + " of " + f.name + " not in class " + c.name);
    if (c.enumerable()) {
      members.push_back(c.enumerate_on(f.category));
    } else {
      members.emplace_back();
      for (std::size_t a = 0; a < f.category->size(); ++a) members.back().push_back(representable(f.category, a));
    }
  }
  if (fixtures.empty()) return r;
  Rng rng(seed);
  for (std::size_t n = 0; n < budget; ++n) {
    const auto i = uniform_below(rng, fixtures.size());
    const auto j = uniform_below(rng, fixtures.size());
    const auto k = uniform_below(rng, fixtures.size());
    auto phi = sample_distributor(fixtures[i].category, fixtures[j].category, members[j], rng);
    auto psi = sample_distributor(fixtures[j].category, fixtures[k].category, members[k], rng);
    if (!phi || !psi) continue;
    if (!dist_in_class(*phi, c) || !dist_in_class(*psi, c)) continue;
    auto comp = dist_compose(*psi, *phi);
    for (std::size_t a = 0; a < comp.dom()->size(); ++a)
      if (!c.contains(column(comp, a))) {
        r.add("sample " + std::to_string(n) + ": " + fixtures[i].name + " -> " + fixtures[j].name + " -> " +
              fixtures[k].name + ", column " + comp.dom()->name(a) + " of the composite is " +
              presheaf_label(column(comp, a)) + ", not in class " + c.name);
        break;
      }
  }
  return r;
}

namespace detail {

template <Quantaloid Q>
std::string functor_diff(const Functor<Q>& f, const Functor<Q>& g) {
  const auto& A = *f.dom();
  for (std::size_t a = 0; a < A.size(); ++a)
    if (!objects_isomorphic(*f.cod(), f(a), g(a)))
      return "at " + A.name(a) + ": " + f.cod()->name(f(a)) + " vs " + g.cod()->name(g(a));
  return "functors not isomorphic";
}

template <Quantaloid Q>
std::optional<Functor<Q>> left_adjoint_of(const Functor<Q>& I) {
  // L t must satisfy A(L t, a) = C(A)(t, I a) for all a
  const auto& A = *I.dom();
  const auto& C = *I.cod();
  std::vector<std::size_t> map;
  for (std::size_t t = 0; t < C.size(); ++t) {
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < A.size() && !hit; ++k) {
      if (A.type(k) != C.type(t)) continue;
      bool ok = true;
      for (std::size_t a = 0; a < A.size() && ok; ++a) ok = A.hom(k, a) == C.hom(t, I(a));
      if (ok) hit = k;
    }
    if (!hit) return std::nullopt;
    map.push_back(*hit);
  }
  Functor<Q> L(I.cod(), I.dom(), std::move(map));
  if (!validate_functor(L).ok() || !is_adjoint_pair(L, I)) return std::nullopt;
  return L;
}

}  // namespace detail

/// The seven laws characterizing (C, mu, I) as a full sub-KZ-doctrine of P,
/// checked on every fixture. Materializations beyond `budget` are skipped.
template <EnumerableQuantaloid Q>
LawReport doctrine_laws(const WeightClass<Q>& c, const std::vector<Fixture<Q>>& fixtures,
                        std::size_t budget = default_budget) {
  LawReport rep;
  rep.suite = "doctrine:" + c.name;
  static const char* const laws[] = {"unit fully faithful", "embedding is Kan extension", "multiplication in class",
                                     "monad laws",          "kz inequation",              "algebra correspondence",
                                     "class recovery"};
  for (const auto& fx : fixtures) {
    const auto& A = fx.category;
    auto skip_all = [&](std::size_t from, const std::string& why) {
      for (std::size_t i = from; i < 7; ++i) rep.skip(laws[i], fx.name, why);
    };
    auto fail_all = [&](std::size_t from, const std::string& why) {
      for (std::size_t i = from; i < 7; ++i) rep.fail(laws[i], fx.name, why);
    };
    PresheafCategoryPtr<Q> pa;
    std::optional<Completion<Q>> ca, cca, ccca;
    try {
      pa = presheaf_category(A, budget);
      ca = build_subcategory(A, c);
    } catch (const BudgetExceeded& e) {
      skip_all(0, e.what());
      continue;
    } catch (const Error& e) {
      fail_all(0, e.what());
      continue;
    }
    const auto& I = ca->unit;

    // (1)
    rep.check(is_fully_faithful(I), laws[0], fx.name, "I_A is not fully faithful");

    // (2)
    {
      std::string cex;
      auto J = class_embedding(*ca, *pa);
      auto K = kan_extension(free_unit(*pa), I);
      if (!K)
        cex = "<Y_A, I_A> does not exist";
      else if (!functor_iso(*K.functor, J))
        cex = "<Y_A, I_A> vs J_A " + detail::functor_diff(*K.functor, J);
      else if (!is_fully_faithful(J))
        cex = "J_A is not fully faithful";
      else
        for (std::size_t t = 0; t < ca->objects->size() && cex.empty(); ++t) {
          const auto& s = ca->objects->member(t);
          for (std::size_t a = 0; a < A->size(); ++a)
            if (!(s(a) == ca->category()->hom(I(a), t))) {
              cex = "J_A(" + ca->category()->name(t) + ") differs from C(A)(I_A-, t) at " + A->name(a);
              break;
            }
        }
      rep.check(cex.empty(), laws[1], fx.name, cex);
    }

    try {
      cca = build_subcategory(ca->category(), c);
    } catch (const BudgetExceeded& e) {
      skip_all(2, e.what());
      continue;
    } catch (const Error& e) {
      fail_all(2, e.what());
      continue;
    }

    // (3)
    {
      std::string cex;
      const auto ev = class_evaluation(*ca);
      for (const auto& sigma : cca->objects->members()) {
        auto m = act(ev, sigma);
        if (!c.contains(m) || !ca->objects->find(m)) {
          cex = "colimit of weight " + presheaf_label(sigma) + " is " + presheaf_label(m) + ", outside the class";
          break;
        }
      }
      rep.check(cex.empty(), laws[2], fx.name, cex);
      if (!cex.empty()) {
        fail_all(3, "multiplication undefined");
        continue;
      }
    }

    const auto mu = class_mult(*ca, *cca);
    const auto Icc = cca->unit;
    const auto CI = class_map(I, *ca, *cca);

    // (4)
    {
      std::string cex;
      bool skipped = false;
      const auto idc = identity_functor(ca->category());
      if (!functor_iso(compose(mu, Icc), idc))
        cex = "mu o I_C(A) != 1: " + detail::functor_diff(compose(mu, Icc), idc);
      else if (!functor_iso(compose(mu, CI), idc))
        cex = "mu o C(I_A) != 1: " + detail::functor_diff(compose(mu, CI), idc);
      else {
        try {
          ccca = build_subcategory(cca->category(), c);
          const auto mu2 = class_mult(*cca, *ccca);
          const auto Cmu = class_map(mu, *ccca, *cca);
          if (!functor_iso(compose(mu, mu2), compose(mu, Cmu)))
            cex = "mu o mu_C(A) != mu o C(mu): " + detail::functor_diff(compose(mu, mu2), compose(mu, Cmu));
        } catch (const BudgetExceeded& e) {
          rep.skip(laws[3], fx.name, std::string("associativity: ") + e.what());
          skipped = true;
        }
      }
      if (!skipped) rep.check(cex.empty(), laws[3], fx.name, cex);
    }

    // (5)
    rep.check(functor_leq(CI, Icc), laws[4], fx.name,
              "C(I_A) <= I_C(A) fails: " + detail::functor_diff(CI, Icc));

    // (6)
    {
      std::string cex;
      bool cocomplete = true;
      for (const auto& t : ca->objects->members())
        if (!colim(as_distributor(t), identity_functor(A))) {
          cocomplete = false;
          break;
        }
      const bool algebra = detail::left_adjoint_of(I).has_value();
      if (cocomplete != algebra)
        cex = std::string("A is ") + (cocomplete ? "" : "not ") + "C-cocomplete but I_A " +
              (algebra ? "has" : "has no") + " left adjoint";
      else if (!is_adjoint_pair(mu, Icc))
        cex = "mu_A is not left adjoint to I_C(A)";
      rep.check(cex.empty(), laws[5], fx.name, cex);
    }

    // (7)
    {
      std::string cex;
      std::vector<Presheaf<Q>> filtered;
      for (const auto& phi : pa->members())
        if (c.contains(phi)) filtered.push_back(phi);
      const auto& members = ca->objects->members();
      if (filtered.size() != members.size())
        cex = std::to_string(members.size()) + " objects in C(A) but " + std::to_string(filtered.size()) +
              " class members in P(A)";
      else
        for (std::size_t i = 0; i < members.size(); ++i)
          if (!(filtered[i] == members[i])) {
            cex = "member " + presheaf_label(filtered[i]) + " vs object " + presheaf_label(members[i]);
            break;
          }
      rep.check(cex.empty(), laws[6], fx.name, cex);
    }
  }
  rep.sort();
  return rep;
}

}  // namespace qcat
