#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcat/fixtures.hpp"
#include "qcat/hausdorff.hpp"

namespace qcat::laws {

struct Options {
  std::size_t budget = 200;  // random instances per law family
  std::uint64_t seed = 0;
  std::size_t materialization = default_budget;
};

/// Collects checks into one entry per (law, fixture): the first failing
/// instance becomes the counterexample.
class Runner {
 public:
  explicit Runner(std::string suite) : suite_(std::move(suite)) {}

  void check(const std::string& law, const std::string& fixture, bool ok, const std::string& cex = {}) {
    auto& e = slot(law, fixture);
    if (!ok && e.status != LawStatus::fail) {
      e.status = LawStatus::fail;
      e.counterexample = cex.empty() ? "violated" : cex;
    }
  }

  template <class F>
  void check_lazy(const std::string& law, const std::string& fixture, bool ok, F&& cex) {
    if (ok)
      check(law, fixture, true);
    else
      check(law, fixture, false, cex());
  }

  void skip(const std::string& law, const std::string& fixture, const std::string& reason) {
    auto& e = slot(law, fixture);
    if (e.status == LawStatus::pass && e.counterexample.empty()) {
      e.status = LawStatus::skipped;
      e.counterexample = reason;
    }
  }

  void absorb(const LawReport& r, const std::string& prefix) {
    for (const auto& e : r.entries) {
      if (e.status == LawStatus::skipped)
        skip(prefix + e.law, e.fixture, e.counterexample);
      else
        check(prefix + e.law, e.fixture, e.status == LawStatus::pass, e.counterexample);
    }
  }

  LawReport finish() const {
    LawReport r;
    r.suite = suite_;
    for (const auto& [key, e] : entries_) r.entries.push_back(e);
    r.sort();
    return r;
  }

 private:
  LawEntry& slot(const std::string& law, const std::string& fixture) {
    auto [it, fresh] = entries_.try_emplace({law, fixture});
    if (fresh) it->second = LawEntry{law, fixture, LawStatus::pass, {}};
    return it->second;
  }

  std::string suite_;
  std::map<std::pair<std::string, std::string>, LawEntry> entries_;
};

namespace detail {

inline std::shared_ptr<const TableQuantaloid> shared(TableQuantaloid q) {
  return std::make_shared<const TableQuantaloid>(std::move(q));
}

/// The named table quantaloids every suite draws from.
inline std::vector<std::pair<std::string, std::shared_ptr<const TableQuantaloid>>> quantaloids(const Options& o) {
  std::vector<std::pair<std::string, std::shared_ptr<const TableQuantaloid>>> out = {
      {"bool", shared(TableQuantaloid::boolean())},
      {"chain:2", shared(TableQuantaloid::chain(2))},
      {"chain:3", shared(TableQuantaloid::chain(3))},
      {"chain:4", shared(TableQuantaloid::chain(4))},
      {"split", shared(fixtures::split_quantaloid())},
  };
  Rng rng(o.seed ^ 0x51ed2701u);
  const std::size_t extra = std::max<std::size_t>(5, o.budget / 40);
  for (std::size_t i = 0; i < extra; ++i)
    out.emplace_back("random#" + std::to_string(i), shared(fixtures::random_table_quantaloid(rng)));
  return out;
}

template <EnumerableQuantaloid Q>
std::string arrow_str(const Q& q, QObject x, QObject y, const value_t<Q>& v) {
  return q.format(x, y, v) + ":" + q.object_name(x) + "->" + q.object_name(y);
}

template <Quantaloid Q>
std::string matrix_str(const Distributor<Q>& d) {
  const auto& q = d.quantaloid();
  std::string s = "[";
  for (std::size_t b = 0; b < d.cod()->size(); ++b) {
    if (b) s += ";";
    for (std::size_t a = 0; a < d.dom()->size(); ++a)
      s += (a ? "," : "") + q.format(d.dom()->type(a), d.cod()->type(b), d(b, a));
  }
  return s + "]";
}

}  // namespace detail

// ---- lattice ----

inline void lattice_laws(Runner& run, const std::string& fx, const SupLattice& l) {
  const auto els = l.elements();
  run.check("lattice axioms", fx, validate_lattice(l.order()).ok());
  for (auto x : els)
    for (auto y : els) {
      const auto j = l.join(x, y), m = l.meet(x, y);
      run.check_lazy("join is least upper bound", fx, l.leq(x, j) && l.leq(y, j), [&] { return l.name(x) + "," + l.name(y); });
      run.check_lazy("meet is greatest lower bound", fx, l.leq(m, x) && l.leq(m, y), [&] { return l.name(x) + "," + l.name(y); });
      for (auto u : els) {
        if (l.leq(x, u) && l.leq(y, u))
          run.check_lazy("join is least upper bound", fx, l.leq(j, u),
                         [&] { return l.name(x) + "," + l.name(y) + " below " + l.name(u); });
        if (l.leq(u, x) && l.leq(u, y))
          run.check_lazy("meet is greatest lower bound", fx, l.leq(u, m),
                         [&] { return l.name(u) + " below " + l.name(x) + "," + l.name(y); });
        run.check("join associative", fx, l.join(l.join(x, y), u) == l.join(x, l.join(y, u)));
        run.check("meet associative", fx, l.meet(l.meet(x, y), u) == l.meet(x, l.meet(y, u)));
      }
      run.check("join commutative", fx, j == l.join(y, x));
      run.check("meet commutative", fx, m == l.meet(y, x));
    }
  for (auto x : els) {
    run.check("join idempotent", fx, l.join(x, x) == x);
    run.check("meet idempotent", fx, l.meet(x, x) == x);
    run.check("empty join is bottom", fx, l.leq(l.bottom(), x) && l.join({}) == l.bottom());
    run.check("empty meet is top", fx, l.leq(x, l.top()) && l.meet({}) == l.top());
  }
}

/// Random lattice: unions of random subsets of {0..k-1}, plus the empty set.
inline SupLattice random_lattice(Rng& rng, std::size_t k = 3) {
  std::vector<unsigned> sets = {0};
  const auto gens = 1 + uniform_below(rng, 4);
  for (std::size_t i = 0; i < gens; ++i) {
    const auto s = static_cast<unsigned>(1 + uniform_below(rng, (1u << k) - 1));
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
  }
  for (bool grown = true; grown;) {
    grown = false;
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = 0; j < sets.size(); ++j) {
        auto u = sets[i] | sets[j];
        if (std::find(sets.begin(), sets.end(), u) == sets.end()) {
          sets.push_back(u);
          grown = true;
        }
      }
  }
  std::sort(sets.begin(), sets.end());
  std::vector<std::string> names;
  for (auto s : sets) names.push_back("s" + std::to_string(s));
  auto t = OrderTable::empty_order(names);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if ((sets[i] & sets[j]) == sets[i]) t.set(i, j);
  return SupLattice(std::move(t));
}

inline LawReport lattice_suite(const Options& o) {
  Runner run("lattice");
  lattice_laws(run, "chain:3", SupLattice::chain({"0", "1", "2"}));
  lattice_laws(run, "diamond", SupLattice::from_pairs({"bot", "x", "y", "top"},
                                                      {{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}}));
  Rng rng(o.seed);
  for (std::size_t i = 0; i < o.budget; ++i) lattice_laws(run, "random", random_lattice(rng));
  return run.finish();
}

// ---- quantaloid ----

template <EnumerableQuantaloid Q>
void residuation_laws(Runner& run, const std::string& fx, const Q& q) {
  using detail::arrow_str;
  const auto n = q.object_count();
  run.check_lazy("quantaloid axioms", fx, validate_quantaloid(q).ok(),
                 [&] { return validate_quantaloid(q).violations.front(); });
  for (QObject a = 0; a < n; ++a)
    for (QObject b = 0; b < n; ++b)
      for (QObject c = 0; c < n; ++c) {
        for (auto g : q.elements(b, c))
          for (auto h : q.elements(a, c)) {
            const auto lift = q.lifting(a, b, c, g, h);
            for (auto x : q.elements(a, b))
              run.check_lazy("lifting galois", fx,
                             q.leq(a, c, q.compose(a, b, c, g, x), h) == q.leq(a, b, x, lift),
                             [&] { return "g=" + arrow_str(q, b, c, g) + " h=" + arrow_str(q, a, c, h); });
          }
        for (auto f : q.elements(a, b))
          for (auto h : q.elements(a, c)) {
            const auto ext = q.extension(a, b, c, f, h);
            for (auto x : q.elements(b, c))
              run.check_lazy("extension galois", fx,
                             q.leq(a, c, q.compose(a, b, c, x, f), h) == q.leq(b, c, x, ext),
                             [&] { return "f=" + arrow_str(q, a, b, f) + " h=" + arrow_str(q, a, c, h); });
          }
      }
  // adjoints by exhaustive search, then lifting along them
  for (QObject x = 0; x < n; ++x)
    for (QObject y = 0; y < n; ++y)
      for (auto f : q.elements(x, y)) {
        std::optional<value_t<Q>> brute;
        for (auto g : q.elements(y, x))
          if (q.leq(x, x, q.identity(x), q.compose(x, y, x, g, f)) && q.leq(y, y, q.compose(y, x, y, f, g), q.identity(y)))
            brute = g;
        auto ra = right_adjoint(q, Arrow<value_t<Q>>{x, y, f});
        run.check_lazy("right adjoint", fx, ra.has_value() == brute.has_value() && (!ra || ra->value == *brute),
                       [&] { return arrow_str(q, x, y, f); });
        std::optional<value_t<Q>> brute_left;
        for (auto g : q.elements(y, x))
          if (q.leq(y, y, q.identity(y), q.compose(y, x, y, f, g)) && q.leq(x, x, q.compose(x, y, x, g, f), q.identity(x)))
            brute_left = g;
        auto la = left_adjoint(q, Arrow<value_t<Q>>{x, y, f});
        run.check_lazy("left adjoint", fx, la.has_value() == brute_left.has_value() && (!la || la->value == *brute_left),
                       [&] { return arrow_str(q, x, y, f); });
        if (!ra) continue;
        const auto fs = ra->value;
        // [f, h] = f* o h for f : x -> y, h : a -> y
        for (QObject a = 0; a < n; ++a)
          for (auto h : q.elements(a, y))
            run.check_lazy("lifting through left adjoint", fx, q.lifting(a, x, y, f, h) == q.compose(a, y, x, fs, h),
                           [&] { return "g=" + arrow_str(q, x, y, f) + " h=" + arrow_str(q, a, y, h); });
        // [f o u, f o v] = [u, v] when f* o f = 1
        if (q.compose(x, y, x, fs, f) != q.identity(x)) continue;
        for (QObject a = 0; a < n; ++a)
          for (auto u : q.elements(a, x))
            for (auto v : q.elements(a, x))
              run.check_lazy("lifting cancels split adjoint", fx,
                             q.lifting(a, a, y, q.compose(a, x, y, f, u), q.compose(a, x, y, f, v)) ==
                                 q.lifting(a, a, x, u, v),
                             [&] { return "f=" + arrow_str(q, x, y, f) + " x=" + arrow_str(q, a, x, u) +
                                          " y=" + arrow_str(q, a, x, v); });
      }
  // [i, h] o [g, f] <= [i, j o f] for f : A -> D, g : B -> D, i : C -> E, j : D -> E, h := j o g
  for (QObject A = 0; A < n; ++A)
    for (QObject B = 0; B < n; ++B)
      for (QObject C = 0; C < n; ++C)
        for (QObject D = 0; D < n; ++D)
          for (QObject E = 0; E < n; ++E)
            for (auto f : q.elements(A, D))
              for (auto g : q.elements(B, D))
                for (auto i : q.elements(C, E))
                  for (auto j : q.elements(D, E)) {
                    const auto h = q.compose(B, D, E, j, g);
                    const auto lhs = q.compose(A, B, C, q.lifting(B, C, E, i, h), q.lifting(A, B, D, g, f));
                    const auto rhs = q.lifting(A, C, E, i, q.compose(A, D, E, j, f));
                    auto cex = [&] {
                      return "f=" + arrow_str(q, A, D, f) + " g=" + arrow_str(q, B, D, g) + " i=" +
                             arrow_str(q, C, E, i) + " j=" + arrow_str(q, D, E, j);
                    };
                    run.check_lazy("lifting composition bound", fx, q.leq(A, C, lhs, rhs), cex);
                    auto is_left = [&](QObject s, QObject t, const value_t<Q>& v) {
                      return right_adjoint(q, Arrow<value_t<Q>>{s, t, v}).has_value();
                    };
                    if (is_left(A, D, f) && is_left(B, D, g) && is_left(B, E, h) && is_left(C, E, i) &&
                        is_left(D, E, j)) {
                      const auto gs = right_adjoint(q, Arrow<value_t<Q>>{B, D, g})->value;
                      if (q.compose(D, B, D, g, gs) == q.identity(D))
                        run.check_lazy("lifting composition exact", fx, lhs == rhs, cex);
                    }
                  }
}

inline void lawvere_residuation(Runner& run, const Options& o) {
  const Lawvere& q = *lawvere();
  Rng rng(o.seed ^ 0x1a3u);
  for (std::size_t s = 0; s < o.budget; ++s) {
    const auto g = fixtures::random_extended(rng, 20, 4, 8);
    const auto h = fixtures::random_extended(rng, 20, 4, 8);
    const auto x = fixtures::random_extended(rng, 20, 4, 8);
    auto cex = [&] { return "g=" + g.str() + " h=" + h.str() + " x=" + x.str(); };
    run.check_lazy("lifting galois", "lawvere", q.leq(0, 0, q.compose(0, 0, 0, g, x), h) == q.leq(0, 0, x, q.lifting(0, 0, 0, g, h)), cex);
    run.check_lazy("extension galois", "lawvere", q.leq(0, 0, q.compose(0, 0, 0, x, g), h) == q.leq(0, 0, x, q.extension(0, 0, 0, g, h)), cex);
    auto ra = right_adjoint(q, Arrow<Extended>{0, 0, g});
    run.check_lazy("right adjoint", "lawvere", ra.has_value() == g.is_zero(), cex);
  }
}

inline LawReport quantaloid_suite(const Options& o) {
  Runner run("quantaloid");
  for (const auto& [name, q] : detail::quantaloids(o)) residuation_laws(run, name, *q);
  lawvere_residuation(run, o);
  return run.finish();
}

// ---- distributors ----

template <Quantaloid Q>
void dist_laws(Runner& run, const std::string& fx, const Distributor<Q>& phi, const Distributor<Q>& phi2,
               const Distributor<Q>& psi, const Distributor<Q>& chi) {
  // phi, phi2 : A -> B, psi : B -> C, chi : C -> D
  using detail::matrix_str;
  const auto A = phi.dom(), B = phi.cod();
  run.check_lazy("distributor axioms", fx, validate_distributor(phi).ok() && validate_distributor(psi).ok(),
                 [&] { return matrix_str(phi); });
  run.check_lazy("composition associative", fx,
                 dist_compose(chi, dist_compose(psi, phi)) == dist_compose(dist_compose(chi, psi), phi),
                 [&] { return matrix_str(phi) + " " + matrix_str(psi) + " " + matrix_str(chi); });
  run.check_lazy("identity neutral", fx,
                 dist_compose(phi, identity_distributor(A)) == phi && dist_compose(identity_distributor(B), phi) == phi,
                 [&] { return matrix_str(phi); });
  const auto j = dist_join(phi, phi2);
  run.check_lazy("composition preserves joins", fx,
                 dist_compose(psi, j) == dist_join(dist_compose(psi, phi), dist_compose(psi, phi2)),
                 [&] { return matrix_str(phi) + " v " + matrix_str(phi2); });
  run.check_lazy("composite is a distributor", fx, validate_distributor(dist_compose(psi, phi)).ok(),
                 [&] { return matrix_str(phi) + " " + matrix_str(psi); });
  // Galois: psi (x) X <= theta iff X <= [psi, theta], with theta := psi (x) phi2 and X := phi
  const auto theta = dist_compose(psi, phi2);
  const auto lift = dist_lifting(psi, theta);
  run.check_lazy("lifting galois", fx, dist_leq(dist_compose(psi, phi), theta) == dist_leq(phi, lift),
                 [&] { return matrix_str(psi) + " theta=" + matrix_str(theta) + " X=" + matrix_str(phi); });
  run.check_lazy("lifting is a distributor", fx, validate_distributor(lift).ok(), [&] { return matrix_str(lift); });
  const auto theta2 = dist_compose(chi, psi);
  // X (x) psi <= theta2' iff X <= {psi, theta2'} with theta2' := chi2 (x) psi, chi2 := chi v random
  const auto ext = dist_extension(psi, theta2);
  run.check_lazy("extension galois", fx, dist_leq(dist_compose(chi, psi), theta2) == dist_leq(chi, ext) && dist_leq(chi, ext),
                 [&] { return matrix_str(psi) + " theta=" + matrix_str(theta2); });
  run.check_lazy("extension is a distributor", fx, validate_distributor(ext).ok(), [&] { return matrix_str(ext); });
  run.check_lazy("lifting through identity", fx, dist_lifting(identity_distributor(B), phi) == phi,
                 [&] { return matrix_str(phi); });
  run.check_lazy("extension through identity", fx, dist_extension(identity_distributor(A), phi) == phi,
                 [&] { return matrix_str(phi); });
}

template <Quantaloid Q>
void functor_laws(Runner& run, const std::string& fx, const Functor<Q>& F, const Functor<Q>& G) {
  // F : A -> B, G : B -> C
  const auto L = induced_left(F), R = induced_right(F);
  run.check("induced unit", fx, dist_leq(identity_distributor(F.dom()), dist_compose(R, L)));
  run.check("induced counit", fx, dist_leq(dist_compose(L, R), identity_distributor(F.cod())));
  run.check("induced functoriality", fx, induced_left(compose(G, F)) == dist_compose(induced_left(G), L));
  run.check("functor order reflexive", fx, functor_leq(F, F));
  run.check("identity fully faithful", fx, is_fully_faithful(identity_functor(F.dom())) && is_equivalence(identity_functor(F.dom())));
  run.check("identity adjoint pair", fx, is_adjoint_pair(identity_functor(F.dom()), identity_functor(F.dom())));
}

inline LawReport dist_suite(const Options& o) {
  Runner run("dist");
  Rng rng(o.seed ^ 0xd157u);
  const auto qs = detail::quantaloids(o);
  for (std::size_t s = 0; s < o.budget; ++s) {
    const auto& [name, q] = qs[s % qs.size()];
    auto cat = [&] { return fixtures::random_category(q, 1 + uniform_below(rng, 3), rng); };
    auto A = cat(), B = cat(), C = cat(), D = cat();
    auto phi = fixtures::random_distributor(A, B, rng);
    auto phi2 = fixtures::random_distributor(A, B, rng);
    auto psi = fixtures::random_distributor(B, C, rng);
    auto chi = fixtures::random_distributor(C, D, rng);
    dist_laws(run, name, phi, phi2, psi, chi);
    auto F = fixtures::random_functor(A, B, rng);
    auto G = fixtures::random_functor(B, C, rng);
    if (F && G) functor_laws(run, name, *F, *G);
    run.check("category axioms", name, validate_category(*A).ok());
  }
  for (std::size_t s = 0; s < o.budget; ++s) {
    auto sp = [&] { return fixtures::random_metric_space(1 + uniform_below(rng, 4), rng, false, 5); };
    auto A = sp(), B = sp(), C = sp(), D = sp();
    dist_laws(run, "lawvere", fixtures::random_metric_distributor(A, B, rng),
              fixtures::random_metric_distributor(A, B, rng), fixtures::random_metric_distributor(B, C, rng),
              fixtures::random_metric_distributor(C, D, rng));
    auto F = fixtures::random_functor(A, B, rng);
    auto G = fixtures::random_functor(B, C, rng);
    if (F && G) functor_laws(run, "lawvere", *F, *G);
    run.check("category axioms", "lawvere", validate_category(*A).ok());
  }
  return run.finish();
}

// ---- presheaves ----

template <Quantaloid Q>
void yoneda_laws(Runner& run, const std::string& fx, const CategoryPtr<Q>& A, const Presheaf<Q>& phi) {
  for (std::size_t a = 0; a < A->size(); ++a)
    run.check_lazy("yoneda", fx, presheaf_hom(representable(A, a), phi) == phi(a),
                   [&] { return presheaf_label(phi) + " at " + A->name(a); });
  run.check("presheaf action axiom", fx, validate_presheaf(phi).ok());
}

template <EnumerableQuantaloid Q>
void presheaf_fixture_laws(Runner& run, const std::string& fx, const CategoryPtr<Q>& A, Rng& rng, const Options& o) {
  PresheafCategoryPtr<Q> pa;
  try {
    pa = presheaf_category(A, o.materialization);
  } catch (const BudgetExceeded& e) {
    run.skip("yoneda", fx, e.what());
    return;
  }
  for (const auto& phi : pa->members()) {
    yoneda_laws(run, fx, A, phi);
    const auto& q = A->quantaloid();
    for (const auto& psi : pa->members()) {
      const auto hom = presheaf_hom(psi, phi);
      for (auto x : q.elements(phi.type, psi.type)) {
        bool below = true;
        for (std::size_t a = 0; a < A->size() && below; ++a)
          below = q.leq(phi.type, A->type(a), q.compose(phi.type, psi.type, A->type(a), psi(a), x), phi(a));
        run.check_lazy("presheaf hom galois", fx, below == q.leq(phi.type, psi.type, x, hom),
                       [&] { return presheaf_label(psi) + " -> " + presheaf_label(phi); });
      }
    }
  }
  const auto Y = free_unit(*pa);
  run.check("yoneda embedding fully faithful", fx, is_fully_faithful(Y));
  run.check("classify identity is yoneda", fx, classify(identity_distributor(A), *pa) == Y);
  // classification round trip on a random distributor B -> A
  auto B = fixtures::random_category(A->quantaloid_ptr(), 1 + uniform_below(rng, 3), rng);
  auto Phi = fixtures::random_distributor(B, A, rng);
  const auto F = classify(Phi, *pa);
  run.check_lazy("classify round trip", fx, declassify(F, *pa) == Phi, [&] { return detail::matrix_str(Phi); });
  run.check("classify round trip", fx, classify(declassify(F, *pa), *pa) == F);
  // colimits: weight Phi : B -> A, diagram Y_A into P(A), and the same search-based
  auto W = fixtures::random_distributor(B, A, rng);
  auto viaP = colim_in_presheaf(W, Y, *pa);
  auto viaSearch = colim(W, Y);
  run.check_lazy("colim in presheaf agrees", fx, viaSearch && functor_iso(*viaSearch.functor, viaP),
                 [&] { return detail::matrix_str(W); });
  auto G = fixtures::random_functor(A, B, rng);
  if (G) {
    auto Wt = fixtures::random_distributor(B, A, rng);
    auto r = colim(Wt, *G);
    if (r) {
      const auto lhs = induced_right(*r.functor);
      const auto rhs = dist_lifting(Wt, induced_right(*G));
      run.check_lazy("colim universal property", fx, lhs == rhs, [&] { return detail::matrix_str(Wt); });
    }
    run.check_lazy("colim of identity weight", fx,
                   colim(induced_left(identity_functor(A)), *G) && functor_iso(*colim(induced_left(identity_functor(A)), *G).functor, *G),
                   [] { return "identity weight"; });
    // Kan extension against exhaustive least-functor search
    auto C = fixtures::random_category(A->quantaloid_ptr(), 1 + uniform_below(rng, 3), rng);
    auto Hf = fixtures::random_functor(A, C, rng);
    if (Hf) {
      auto K = kan_extension(*G, *Hf);
      std::vector<Functor<Q>> above;
      for (auto& L : enumerate_functors(C, B))
        if (functor_leq(*G, compose(L, *Hf))) above.push_back(L);
      std::optional<Functor<Q>> least;
      for (const auto& L : above) {
        bool is_least = true;
        for (const auto& M : above) is_least = is_least && functor_leq(L, M);
        if (is_least) least = L;
      }
      if (K) {
        run.check("kan extension is least", fx, least && functor_iso(*K.functor, *least));
      } else {
        run.check("kan extension is least", fx, true);
      }
    }
  }
  // free doctrine
  try {
    auto ppa = presheaf_category(pa->category(), o.materialization);
    auto M = free_mult(*pa, *ppa);
    auto Ypa = free_unit(*ppa);
    auto PY = free_map(Y, *pa, *ppa);
    run.check("monad left unit", fx, compose(M, Ypa) == identity_functor(pa->category()));
    run.check("monad right unit", fx, compose(M, PY) == identity_functor(pa->category()));
    run.check("kz inequation", fx, functor_leq(PY, Ypa));
    run.check("presheaf category cocomplete", fx,
              cocompletion_adjoint(pa->category(), *ppa) && is_adjoint_pair(*cocompletion_adjoint(pa->category(), *ppa), Ypa));
    try {
      auto pppa = presheaf_category(ppa->category(), o.materialization);
      auto Mp = free_mult(*ppa, *pppa);
      auto PM = free_map(M, *pppa, *ppa);
      run.check("monad associativity", fx, compose(M, Mp) == compose(M, PM));
    } catch (const BudgetExceeded& e) {
      run.skip("monad associativity", fx, e.what());
    }
  } catch (const BudgetExceeded& e) {
    run.skip("monad left unit", fx, e.what());
  }
}

inline LawReport presheaf_suite(const Options& o) {
  Runner run("presheaf");
  Rng rng(o.seed ^ 0x9e5u);
  auto boolq = detail::shared(TableQuantaloid::boolean());
  auto chain3 = detail::shared(TableQuantaloid::chain(3));
  auto split = detail::shared(fixtures::split_quantaloid());
  const std::size_t rounds = std::max<std::size_t>(1, o.budget / 10);
  for (std::size_t s = 0; s < rounds; ++s) {
    presheaf_fixture_laws(run, "bool", fixtures::random_preorder(boolq, 1 + uniform_below(rng, 2), rng), rng, o);
    presheaf_fixture_laws(run, "chain:3", fixtures::random_category(chain3, 1 + uniform_below(rng, 2), rng), rng, o);
    presheaf_fixture_laws(run, "split", fixtures::random_category(split, 1 + uniform_below(rng, 2), rng), rng, o);
  }
  for (std::size_t s = 0; s < o.budget; ++s) {
    auto A = fixtures::random_metric_space(1 + uniform_below(rng, 4), rng, false, 6);
    yoneda_laws(run, "lawvere", A, fixtures::random_metric_presheaf(A, rng));
  }
  return run.finish();
}

// ---- doctrines ----

template <Quantaloid Q>
void extension_laws(Runner& run, const std::string& fx, const WeightClass<Q>& c, const Completion<Q>& ca,
                    const Completion<Q>& cb, const Completion<Q>& cc, const Distributor<Q>& phi,
                    const Distributor<Q>& phi2, const Distributor<Q>& psi, const std::optional<Functor<Q>>& F) {
  // phi, phi2 : A -> B, psi : B -> C, F : A -> B
  const std::string law_prefix = c.name + " ";
  const auto A = phi.dom();
  const auto ext = [&](const Distributor<Q>& d, const Completion<Q>& x, const Completion<Q>& y) {
    return extend_to_dist(d, x, y);
  };
  run.check(law_prefix + "extension normal", fx, ext(identity_distributor(A), ca, ca) == identity_distributor(ca.category()));
  run.check_lazy(law_prefix + "extension lax", fx,
                 dist_leq(dist_compose(ext(psi, cb, cc), ext(phi, ca, cb)), ext(dist_compose(psi, phi), ca, cc)),
                 [&] { return detail::matrix_str(phi) + " " + detail::matrix_str(psi); });
  run.check_lazy(law_prefix + "extension monotone on joins", fx,
                 dist_leq(dist_join(ext(phi, ca, cb), ext(phi2, ca, cb)), ext(dist_join(phi, phi2), ca, cb)),
                 [&] { return detail::matrix_str(phi) + " v " + detail::matrix_str(phi2); });
  run.check_lazy(law_prefix + "extension preserves joins", fx,
                 ext(dist_join(phi, phi2), ca, cb) == dist_join(ext(phi, ca, cb), ext(phi2, ca, cb)),
                 [&] { return detail::matrix_str(phi) + " v " + detail::matrix_str(phi2); });
  run.check(law_prefix + "extension preserves bottom", fx, 
            ext(bottom_distributor(phi.dom(), phi.cod()), ca, cb) ==
                bottom_distributor(ca.category(), cb.category()),
            "extension of the empty join");
  if (F) {
    try {
      const auto CF = class_map(*F, ca, cb);
      run.check_lazy(law_prefix + "extension of functor", fx, ext(induced_left(*F), ca, cb) == induced_left(CF),
                     [&] { return "F=" + std::to_string(F->map().size()) + " objects"; });
    } catch (const NotInClass& e) {
      run.check(law_prefix + "extension of functor", fx, false, e.what());
    }
  }
  if (dist_in_class(phi, c)) {
    const auto IPhi = factor_through(phi, cb, c);
    // cotabulation: Phi = C(B)(I_B-, I_Phi-)
    bool ok = true;
    for (std::size_t b = 0; b < phi.cod()->size() && ok; ++b)
      for (std::size_t a = 0; a < A->size() && ok; ++a)
        ok = cb.category()->hom(cb.unit(b), IPhi(a)) == phi(b, a);
    run.check_lazy(law_prefix + "cotabulation", fx, ok, [&] { return detail::matrix_str(phi); });
  }
}

inline LawReport doctrine_suite(const Options& o) {
  Runner run("doctrine");
  Rng rng(o.seed ^ 0xd0c7u);
  auto boolq = detail::shared(TableQuantaloid::boolean());
  auto chain3 = detail::shared(TableQuantaloid::chain(3));
  auto split = detail::shared(fixtures::split_quantaloid());
  using TQ = TableQuantaloid;
  const std::vector<WeightClass<TQ>> classes = {weight_class_conical<TQ>(), weight_class_cauchy<TQ>(),
                                                weight_class_representable<TQ>(), weight_class_all<TQ>()};
  // exhaustive laws on small fixtures
  std::vector<Fixture<TQ>> small;
  {
    auto t1 = OrderTable::empty_order({"x"});
    t1.close();
    auto t2 = OrderTable::empty_order({"x", "y"});
    t2.close();
    auto t3 = t2;
    t3.set(0, 1);
    auto t4 = t3;
    t4.set(1, 0);
    small.push_back({"bool/point", free_qcategory_on_poset<TQ>(boolq, 0, t1)});
    small.push_back({"bool/discrete2", free_qcategory_on_poset<TQ>(boolq, 0, t2)});
    small.push_back({"bool/chain2", free_qcategory_on_poset<TQ>(boolq, 0, t3)});
    small.push_back({"bool/indiscrete2", free_qcategory_on_poset<TQ>(boolq, 0, t4)});
    small.push_back({"chain:3/point", singleton<TQ>(chain3, 0)});
    small.push_back({"split/point", singleton<TQ>(split, 0)});
  }
  for (const auto& c : classes) {
    run.absorb(doctrine_laws(c, small, o.materialization), c.name + " ");
  }
  // saturation sampling
  std::vector<Fixture<TQ>> sat;
  for (std::size_t i = 0; i < 4; ++i)
    sat.push_back({"bool/random#" + std::to_string(i), fixtures::random_preorder(boolq, 1 + uniform_below(rng, 3), rng)});
  for (const auto& c : classes) {
    auto r = saturation_check(c, sat, o.budget, o.seed);
    run.check(c.name + " saturation", "bool/random", r.ok(), r.ok() ? "" : r.violations.front());
  }
  {
    std::vector<Fixture<Lawvere>> spaces;
    for (std::size_t i = 0; i < 3; ++i)
      spaces.push_back({"lawvere#" + std::to_string(i), fixtures::random_metric_space(1 + uniform_below(rng, 3), rng)});
    auto r = saturation_check(weight_class_conical<Lawvere>(), spaces, o.budget, o.seed);
    run.check("conical saturation", "lawvere/random", r.ok(), r.ok() ? "" : r.violations.front());
  }
  // a class missing one representable must be refuted
  {
    auto broken = weight_class_representable<TQ>();
    broken.name = "broken";
    auto base_contains = broken.contains;
    broken.contains = [base_contains](const Presheaf<TQ>& p) {
      return base_contains(p) && !(p.base->size() == 2 && p == representable(p.base, 1));
    };
    auto r = saturation_check(broken, {small[1]}, 1, o.seed);
    run.check("broken class refuted", "bool/discrete2", !r.ok(), "saturation check found nothing");
    auto laws = doctrine_laws(broken, {small[1]}, o.materialization);
    run.check("broken class refuted", "bool/discrete2", !laws.ok(), "all doctrine laws passed");
  }
  // extension to distributors, naturality of J
  const std::size_t rounds = std::max<std::size_t>(1, o.budget / 10);
  for (const auto& c : classes) {
    for (std::size_t s = 0; s < rounds; ++s) {
      auto pick = [&]() -> std::pair<std::string, std::shared_ptr<const TQ>> {
        switch (uniform_below(rng, 3)) {
          case 0: return {"bool", boolq};
          case 1: return {"chain:3", chain3};
          default: return {"split", split};
        }
      };
      auto [qn, q] = pick();
      auto A = fixtures::random_category(q, 1 + uniform_below(rng, 2), rng);
      auto B = fixtures::random_category(q, 1 + uniform_below(rng, 2), rng);
      auto C = fixtures::random_category(q, 1 + uniform_below(rng, 2), rng);
      try {
        auto ca = build_subcategory(A, c), cb = build_subcategory(B, c), cc = build_subcategory(C, c);
        auto F = fixtures::random_functor(A, B, rng);
        extension_laws(run, qn, c, ca, cb, cc, fixtures::random_distributor(A, B, rng),
                       fixtures::random_distributor(A, B, rng), fixtures::random_distributor(B, C, rng), F);
        if (F) {
          auto pa = presheaf_category(A, o.materialization);
          auto pb = presheaf_category(B, o.materialization);
          run.check(c.name + " embedding natural", qn,
                    compose(free_map(*F, *pa, *pb), class_embedding(ca, *pa)) ==
                        compose(class_embedding(cb, *pb), class_map(*F, ca, cb)));
        }
      } catch (const BudgetExceeded& e) {
        run.skip(c.name + " extension normal", qn, e.what());
      }
    }
  }
  return run.finish();
}

// ---- Hausdorff ----

template <Quantaloid Q>
void hausdorff_fixture_laws(Runner& run, const std::string& fx, const CategoryPtr<Q>& A, bool metric, Rng& rng) {
  const auto H = hausdorff_category(A);
  const auto& q = A->quantaloid();
  const auto n = A->size();
  std::vector<SubsetWeight<Q>> subsets;
  if (n <= 10)
    for (QObject x = 0; x < q.object_count(); ++x) {
      std::vector<std::size_t> of_type;
      for (std::size_t a = 0; a < n; ++a)
        if (A->type(a) == x) of_type.push_back(a);
      for (unsigned mask = 0; mask < (1u << of_type.size()); ++mask) {
        std::vector<std::size_t> m;
        for (std::size_t i = 0; i < of_type.size(); ++i)
          if (mask >> i & 1) m.push_back(of_type[i]);
        subsets.push_back(SubsetWeight<Q>{A, x, m});
      }
    }
  for (const auto& s2 : subsets)
    for (const auto& s : subsets) {
      if (s.type != s2.type) continue;
      const auto i2 = H.find_subset(s2), i = H.find_subset(s);
      const auto closed = directed_hausdorff(s2, s);
      const auto via_hom = presheaf_hom(conical_from_subset(s2), conical_from_subset(s));
      run.check_lazy("closed form", fx, closed == via_hom && H.category()->hom(i2, i) == closed,
                     [&] { return H.generator_label(i2) + " -> " + H.generator_label(i); });
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (A->type(a) == A->type(b))
        run.check("singleton distance", fx,
                  directed_hausdorff(SubsetWeight<Q>{A, A->type(a), {a}}, SubsetWeight<Q>{A, A->type(b), {b}}) == A->hom(a, b));
  if (metric)
    for (const auto& s : subsets)
      run.check("self distance", fx, directed_hausdorff(s, s) == q.identity(s.type) || s.members.empty());
  // composition axiom of H(A), read as the triangle inequality
  run.check_lazy("triangle", fx, validate_category(*H.category()).ok(),
                 [&] { return validate_category(*H.category()).violations.front(); });
  // conicality vs subset search
  std::vector<Presheaf<Q>> generated;
  for (const auto& s : subsets) generated.push_back(conical_from_subset(s));
  auto probe = [&](const Presheaf<Q>& phi) {
    const bool brute = std::find(generated.begin(), generated.end(), phi) != generated.end();
    run.check_lazy("is_conical", fx, is_conical(phi).conical == brute, [&] { return presheaf_label(phi); });
  };
  for (const auto& m : H.objects().members()) probe(m);
  if constexpr (EnumerableQuantaloid<Q>) {
    for (const auto& phi : enumerate_presheaves(A)) probe(phi);
  } else {
    for (int k = 0; k < 8; ++k) probe(fixtures::random_metric_presheaf(A, rng));
  }
  // H' against extend_to_dist, and H(F) against class_map
  auto B = [&] {
    if constexpr (EnumerableQuantaloid<Q>)
      return fixtures::random_category(A->quantaloid_ptr(), 1 + uniform_below(rng, 3), rng);
    else
      return fixtures::random_metric_space(1 + uniform_below(rng, 3), rng);
  }();
  const auto HB = hausdorff_category(B);
  auto Phi = [&] {
    if constexpr (EnumerableQuantaloid<Q>)
      return fixtures::random_distributor(A, B, rng);
    else
      return fixtures::random_metric_distributor(A, B, rng);
  }();
  run.check_lazy("hausdorff on distributors", fx,
                 hausdorff_on_dist(Phi, H, HB) == extend_to_dist(Phi, H.completion, HB.completion),
                 [&] { return detail::matrix_str(Phi); });
  run.check("hausdorff on identity", fx,
            hausdorff_on_dist(identity_distributor(A), H, H) == identity_distributor(H.category()));
  auto F = fixtures::random_functor(A, B, rng);
  if (F) {
    const auto HF = hausdorff_on_functor(*F, H, HB);
    run.check("hausdorff on functors", fx, HF == class_map(*F, H.completion, HB.completion));
    run.check("hausdorff functor valid", fx, validate_functor(HF).ok());
  }
  const auto C = [&] {
    if constexpr (EnumerableQuantaloid<Q>)
      return fixtures::random_category(A->quantaloid_ptr(), 1 + uniform_below(rng, 3), rng);
    else
      return fixtures::random_metric_space(1 + uniform_below(rng, 3), rng);
  }();
  auto dist = [&](const CategoryPtr<Q>& x, const CategoryPtr<Q>& y) {
    if constexpr (EnumerableQuantaloid<Q>)
      return fixtures::random_distributor(x, y, rng);
    else
      return fixtures::random_metric_distributor(x, y, rng);
  };
  const auto Phi2 = dist(A, B);
  const auto Psi = dist(B, C);
  extension_laws(run, fx, weight_class_conical<Q>(), H.completion, HB.completion, hausdorff_category(C).completion, Phi,
                 Phi2, Psi, F);
}

/// Order-theoretic joins against gamma-weighted colimits over the free category on the index poset.
template <Quantaloid Q>
void conical_colimit_laws(Runner& run, const std::string& fx, const CategoryPtr<Q>& A) {
  const auto& q = A->quantaloid();
  const auto n = A->size();
  if (n > 8) return;
  for (QObject x = 0; x < q.object_count(); ++x) {
    std::vector<std::size_t> of_type;
    for (std::size_t a = 0; a < n; ++a)
      if (A->type(a) == x) of_type.push_back(a);
    for (unsigned mask = 0; mask < (1u << of_type.size()); ++mask) {
      std::vector<std::size_t> fam;
      for (std::size_t i = 0; i < of_type.size(); ++i)
        if (mask >> i & 1) fam.push_back(of_type[i]);
      std::vector<std::string> names;
      for (auto a : fam) names.push_back(A->name(a));
      auto order = OrderTable::empty_order(names);
      for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = 0; j < fam.size(); ++j)
          if (A->below(fam[i], fam[j])) order.set(i, j);
      const auto I = free_qcategory_on_poset<Q>(A->quantaloid_ptr(), x, order);
      const Functor<Q> F(I, A, fam);
      const auto gamma = as_distributor(constant_identity_weight(I, x));
      const auto r = colim(gamma, F);
      // (i): a join in A_x with A(join, -) = meet of A(a_i, -)
      std::optional<std::size_t> join_i;
      for (std::size_t k : of_type) {
        bool ok = true;
        for (std::size_t c = 0; c < n && ok; ++c) {
          auto acc = q.top(A->type(c), x);
          for (auto a : fam) acc = q.meet(A->type(c), x, acc, A->hom(a, c));
          ok = A->hom(k, c) == acc;
        }
        if (ok) {
          join_i = k;
          break;
        }
      }
      std::string label = "{";
      for (std::size_t i = 0; i < names.size(); ++i) label += (i ? "," : "") + names[i];
      label += "}";
      run.check_lazy("conical colimit equivalence", fx, r.functor.has_value() == join_i.has_value(),
                     [&] { return label; });
      if (r && join_i)
        run.check_lazy("conical colimit is join", fx, objects_isomorphic(*A, (*r.functor)(0), *join_i),
                       [&] { return label; });
      // (ii) <=> (iii) of the presheaf characterization: A(-, F-) (x) gamma is the join of representables
      const auto weight = column(dist_compose(induced_left(F), gamma), 0);
      run.check_lazy("conical weight", fx, weight == conical_from_subset(SubsetWeight<Q>{A, x, fam}),
                     [&] { return label; });
    }
  }
}

inline LawReport hausdorff_suite(const Options& o) {
  Runner run("hausdorff");
  Rng rng(o.seed ^ 0x4a5du);
  auto boolq = detail::shared(TableQuantaloid::boolean());
  auto split = detail::shared(fixtures::split_quantaloid());
  hausdorff_fixture_laws<Lawvere>(run, "lawvere/line", fixtures::line_space({0, 1, 4}), true, rng);
  const std::size_t rounds = std::max<std::size_t>(2, o.budget / 20);
  for (std::size_t s = 0; s < rounds; ++s) {
    hausdorff_fixture_laws<Lawvere>(run, "lawvere/metric",
                                    fixtures::random_metric_space(1 + uniform_below(rng, 5), rng, true), true, rng);
    hausdorff_fixture_laws<Lawvere>(run, "lawvere/generalized",
                                    fixtures::random_metric_space(1 + uniform_below(rng, 4), rng, false, 4), true, rng);
    auto P = fixtures::random_preorder(boolq, 1 + uniform_below(rng, 4), rng);
    hausdorff_fixture_laws<TableQuantaloid>(run, "bool", P, true, rng);
    conical_colimit_laws<TableQuantaloid>(run, "bool", P);
    conical_colimit_laws<Lawvere>(run, "lawvere", fixtures::random_metric_space(1 + uniform_below(rng, 4), rng));
    hausdorff_fixture_laws<TableQuantaloid>(run, "split",
                                            fixtures::random_category(split, 1 + uniform_below(rng, 2), rng), false, rng);
    // Cauchy presheaves against an exhaustive right-adjoint search
    for (const auto& phi : enumerate_presheaves(P)) {
      const auto& A = *P;
      bool brute = false;
      // rows psi : A -|-> *_X range over all matrices; check adjunction directly
      const std::size_t n = A.size();
      for (unsigned mask = 0; mask < (1u << n) && !brute; ++mask) {
        std::vector<Element> row;
        for (std::size_t a = 0; a < n; ++a) row.push_back(Element{static_cast<std::uint16_t>(mask >> a & 1)});
        auto star = singleton<TableQuantaloid>(boolq, 0);
        Distributor<TableQuantaloid> psi(P, star, row);
        if (!validate_distributor(psi).ok()) continue;
        auto phid = as_distributor(phi);
        Distributor<TableQuantaloid> phid2(star, P, phid.matrix());
        brute = dist_leq(identity_distributor(star), dist_compose(psi, phid2)) &&
                dist_leq(dist_compose(phid2, psi), identity_distributor(P));
      }
      run.check_lazy("cauchy adjoint search", "bool", is_cauchy(phi) == brute, [&] { return presheaf_label(phi); });
    }
    const auto cc = cauchy_completion(P);
    run.check("cauchy completion equivalence", "bool", is_equivalence(cc.unit));
  }
  {
    auto A = singleton<TableQuantaloid>(split, 0);
    const auto cc = cauchy_completion(A);
    run.check("cauchy completion grows", "split", cc.objects->size() == 2 && is_fully_faithful(cc.unit));
  }
  return run.finish();
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lattice", "quantaloid", "dist", "presheaf", "doctrine", "hausdorff"};
  return names;
}

/// Runs one suite by name, or every suite for "all".
inline LawReport run_suite(const std::string& name, const Options& o) {
  if (name == "all") {
    LawReport all;
    all.suite = "all";
    for (const auto& s : suite_names()) {
      auto r = run_suite(s, o);
      for (auto& e : r.entries) e.law = s + ": " + e.law;
      all.merge(r);
    }
    all.sort();
    return all;
  }
  if (name == "lattice") return lattice_suite(o);
  if (name == "quantaloid") return quantaloid_suite(o);
  if (name == "dist") return dist_suite(o);
  if (name == "presheaf") return presheaf_suite(o);
  if (name == "doctrine") return doctrine_suite(o);
  if (name == "hausdorff") return hausdorff_suite(o);
  throw Error("unknown suite '" + name + "'");
}

}  // namespace qcat::laws
