// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes, or when the only failures are
// listed as known below (they are still printed as FAIL).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include <sys/wait.h>

#include "oracles.hpp"

using namespace qcat;
using TQ = TableQuantaloid;

namespace {

struct Outcome {
  std::vector<std::string> failures;  // unexpected
  std::vector<std::string> known;     // documented as unattainable
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
};

std::shared_ptr<const TQ> boolq() {
  static const auto q = std::make_shared<const TQ>(TQ::boolean());
  return q;
}

std::shared_ptr<const TQ> chainq(std::size_t n) { return std::make_shared<const TQ>(TQ::chain(n)); }

Element truth(bool b) { return Element{static_cast<std::uint16_t>(b)}; }

/// Every preorder on n labelled elements.
std::vector<CategoryPtr<TQ>> all_preorders(std::size_t n) {
  std::vector<CategoryPtr<TQ>> out;
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  for (unsigned mask = 0; mask < (1u << off.size()); ++mask) {
    std::vector<bool> r(n * n, false);
    for (std::size_t i = 0; i < n; ++i) r[i * n + i] = true;
    for (std::size_t k = 0; k < off.size(); ++k)
      if (mask >> k & 1) r[off[k].first * n + off[k].second] = true;
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        for (std::size_t k = 0; k < n && transitive; ++k)
          transitive = !(r[i * n + j] && r[j * n + k]) || r[i * n + k];
    if (!transitive) continue;
    std::vector<Element> hom;
    for (bool b : r) hom.push_back(truth(b));
    out.push_back(make_category<TQ>(boolq(), fixtures::labels(n), std::vector<QObject>(n, 0), std::move(hom)));
  }
  return out;
}

std::vector<CategoryPtr<TQ>> small_preorders(std::size_t max_n) {
  std::vector<CategoryPtr<TQ>> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto ps = all_preorders(n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

bool all_pass(const LawReport& r, Outcome& o, const std::string& where) {
  bool ok = true;
  for (const auto& e : r.entries)
    if (e.status == LawStatus::fail) {
      o.require(false, where + ": " + e.law + " on " + e.fixture + ": " + e.counterexample);
      ok = false;
    }
  return ok;
}

// ---- criteria ----

Outcome residuation() {
  Outcome o;
  laws::Options opt;
  opt.budget = 200;
  auto r = laws::quantaloid_suite(opt);
  all_pass(r, o, "quantaloid suite");
  std::set<std::string> fixtures;
  for (const auto& e : r.entries) fixtures.insert(e.fixture);
  for (const char* f : {"bool", "chain:2", "chain:3", "chain:4"}) o.require(fixtures.count(f), std::string("missing ") + f);
  std::size_t randoms = 0;
  for (const auto& f : fixtures) randoms += f.rfind("random", 0) == 0;
  o.require(randoms >= 5, "fewer than 5 random quantaloids");
  // independent exhaustive Galois check against scanning oracles
  Rng rng(101);
  std::vector<TQ> qs = {TQ::boolean(), TQ::chain(2), TQ::chain(3), TQ::chain(4), fixtures::split_quantaloid()};
  for (int i = 0; i < 5; ++i) qs.push_back(fixtures::random_table_quantaloid(rng));
  std::size_t checks = 0;
  for (const auto& q : qs) {
    const auto n = q.object_count();
    for (QObject a = 0; a < n; ++a)
      for (QObject b = 0; b < n; ++b)
        for (QObject c = 0; c < n; ++c) {
          for (auto g : q.elements(b, c))
            for (auto h : q.elements(a, c)) {
              o.require(q.lifting(a, b, c, g, h) == oracle::lifting(q, a, b, c, g, h), "lifting differs from scan");
              ++checks;
            }
          for (auto f : q.elements(a, b))
            for (auto h : q.elements(a, c)) {
              o.require(q.extension(a, b, c, f, h) == oracle::extension(q, a, b, c, f, h), "extension differs from scan");
              ++checks;
            }
        }
  }
  o.summary = std::to_string(r.entries.size()) + " law entries, " + std::to_string(randoms) + " random quantaloids, " +
              std::to_string(checks) + " residuals scanned";
  return o;
}

Outcome yoneda_classification() {
  Outcome o;
  Rng rng(102);
  std::size_t exhaustive = 0;
  std::vector<CategoryPtr<TQ>> fx = small_preorders(3);
  for (int i = 0; i < 40; ++i) fx.push_back(fixtures::random_preorder(boolq(), 4, rng));
  for (int i = 0; i < 40; ++i) fx.push_back(fixtures::random_category(chainq(3), 1 + uniform_below(rng, 4), rng));
  for (const auto& A : fx)
    for (const auto& phi : enumerate_presheaves(A))
      for (std::size_t a = 0; a < A->size(); ++a) {
        o.require(presheaf_hom(representable(A, a), phi) == phi(a), "Yoneda fails at " + presheaf_label(phi));
        ++exhaustive;
      }
  for (int i = 0; i < 200; ++i) {
    auto A = fixtures::random_metric_space(1 + uniform_below(rng, 5), rng, false, 5);
    auto phi = fixtures::random_metric_presheaf(A, rng);
    auto a = uniform_below(rng, A->size());
    o.require(presheaf_hom(representable(A, a), phi) == phi(a), "Lawvere Yoneda fails at " + presheaf_label(phi));
  }
  for (int i = 0; i < 100; ++i) {
    auto q = i % 2 ? boolq() : chainq(3);
    auto A = fixtures::random_category(q, 1 + uniform_below(rng, 3), rng);
    auto B = fixtures::random_category(q, 1 + uniform_below(rng, 3), rng);
    auto pa = presheaf_category(A);
    auto Phi = fixtures::random_distributor(B, A, rng);
    o.require(declassify(classify(Phi, *pa), *pa) == Phi, "classify round trip");
  }
  o.summary = std::to_string(exhaustive) + " exhaustive Yoneda checks, 200 Lawvere spot checks, 100 round trips";
  return o;
}

Outcome colimits() {
  Outcome o;
  Rng rng(103);
  std::size_t colim_cases = 0, kan_cases = 0, no_pointwise = 0, least_only = 0;
  auto preorders = small_preorders(3);
  auto pick = [&]() { return preorders[uniform_below(rng, preorders.size())]; };
  while (colim_cases < 100) {
    auto A = pick(), B = pick(), C = pick();
    auto F = fixtures::random_functor(B, C, rng);
    if (!F) continue;
    auto Phi = fixtures::random_distributor(A, B, rng);
    auto r = colim(Phi, *F);
    ++colim_cases;
    for (std::size_t a = 0; a < A->size(); ++a) {
      // target(c) = meet over b of (Phi(b, a) => C(F b, c))
      std::vector<bool> target(C->size());
      for (std::size_t c = 0; c < C->size(); ++c) {
        bool t = true;
        for (std::size_t b = 0; b < B->size(); ++b)
          if (Phi(b, a) == truth(1) && C->hom((*F)(b), c) == truth(0)) t = false;
        target[c] = t;
      }
      std::vector<std::size_t> expect;
      for (std::size_t k = 0; k < C->size(); ++k) {
        bool ok = true;
        for (std::size_t c = 0; c < C->size(); ++c) ok = ok && (C->hom(k, c) == truth(1)) == target[c];
        if (ok) expect.push_back(k);
      }
      o.require(r.witnesses[a] == expect, "colimit witnesses differ from the defining equality");
      if (r) o.require(!expect.empty() && r.value()(a) == expect.front(), "chosen colimit");
    }
    o.require(static_cast<bool>(r) == !r.missing.has_value(), "colim result flag");
  }
  while (kan_cases < 100) {
    auto A = pick(), B = pick(), C = pick();
    auto F = fixtures::random_functor(A, B, rng);
    auto G = fixtures::random_functor(A, C, rng);
    if (!F || !G) continue;
    ++kan_cases;
    auto K = kan_extension(*F, *G);
    std::vector<std::vector<std::size_t>> above;
    for (const auto& k : oracle::functors(C, B)) {
      std::vector<std::size_t> kg;
      for (std::size_t a = 0; a < A->size(); ++a) kg.push_back(k[(*G)(a)]);
      if (oracle::functor_below(*B, *A, F->map(), kg)) above.push_back(k);
    }
    std::optional<std::vector<std::size_t>> least;
    for (const auto& k : above)
      if (std::all_of(above.begin(), above.end(), [&](const auto& k2) { return oracle::functor_below(*B, *C, k, k2); }))
        least = k;
    if (K) {
      o.require(least.has_value(), "Kan extension exists but no least functor");
      if (least) o.require(functor_iso(*K.functor, Functor<TQ>(C, B, *least)), "Kan extension is not least");
    } else {
      ++no_pointwise;
      least_only += least.has_value();
    }
  }
  o.summary = std::to_string(colim_cases) + " colimits, " + std::to_string(kan_cases) + " Kan extensions (" +
              std::to_string(no_pointwise) + " without a pointwise extension, " + std::to_string(least_only) +
              " of them with a least functor)";
  return o;
}

Outcome free_doctrine() {
  Outcome o;
  std::vector<Fixture<TQ>> fx;
  for (const auto& A : small_preorders(2)) fx.push_back({"bool/" + std::to_string(fx.size()), A});
  auto r = doctrine_laws(weight_class_all<TQ>(), fx);
  all_pass(r, o, "free doctrine");
  std::size_t skipped = 0;
  for (const auto& e : r.entries) skipped += e.status == LawStatus::skipped;
  o.require(skipped == 0, std::to_string(skipped) + " laws skipped under the materialization budget");
  o.summary = std::to_string(fx.size()) + " preorders, " + std::to_string(r.entries.size()) + " law entries";
  return o;
}

Outcome conical() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& A : small_preorders(4)) {
    auto brute = oracle::conical_by_subsets(A);
    for (const auto& phi : enumerate_presheaves(A)) {
      bool by_search = std::find(brute.begin(), brute.end(), std::make_pair(phi.type, phi.values)) != brute.end();
      o.require(static_cast<bool>(is_conical(phi)) == by_search, "is_conical differs at " + presheaf_label(phi));
      ++checked;
    }
  }
  // the 2-point space with d = 1 both ways
  auto P = make_category<Lawvere>(lawvere(), {"p", "q"}, {0, 0}, {Extended(0), Extended(1), Extended(1), Extended(0)});
  std::set<std::vector<Extended>> generated;
  for (const auto& s : all_subsets(2)) {
    Presheaf<Lawvere> phi = bottom_presheaf(P, 0);
    for (auto a : s)
      for (std::size_t x = 0; x < 2; ++x) phi.values[x] = std::min(phi.values[x], P->hom(x, a));
    generated.insert(phi.values);
  }
  for (const auto& v : generated) o.require(is_conical(make_presheaf(P, 0, v)).conical, "generated presheaf not conical");
  auto half = make_presheaf<Lawvere>(P, 0, {Extended::ratio(1, 2), Extended::ratio(1, 2)});
  o.require(!generated.count(half.values), "(1/2,1/2) generated by a subset");
  o.require(!is_conical(half), "(1/2,1/2) reported conical");
  // saturation at budget 500
  Rng rng(105);
  std::vector<Fixture<TQ>> bools;
  for (int i = 0; i < 5; ++i) bools.push_back({"bool#" + std::to_string(i), fixtures::random_preorder(boolq(), 1 + i % 4, rng)});
  auto rb = saturation_check(weight_class_conical<TQ>(), bools, 500, 105);
  o.require(rb.ok(), rb.ok() ? "" : rb.violations.front());
  std::vector<Fixture<Lawvere>> spaces;
  for (int i = 0; i < 4; ++i)
    spaces.push_back({"lawvere#" + std::to_string(i), fixtures::random_metric_space(1 + i % 3, rng, i % 2 == 0)});
  auto rl = saturation_check(weight_class_conical<Lawvere>(), spaces, 500, 105);
  o.require(rl.ok(), rl.ok() ? "" : rl.violations.front());
  o.summary = std::to_string(checked) + " presheaves against subset search, " + std::to_string(generated.size()) +
              " conical on the 2-point space, saturation 500+500 samples";
  return o;
}

Outcome closed_form() {
  Outcome o;
  Rng rng(106);
  std::size_t pairs = 0;
  auto three_way = [&](const auto& A) {
    using V = std::decay_t<decltype(A->hom(0, 0))>;
    auto H = hausdorff_category(A);
    auto ext = extend_to_dist(identity_distributor(A), H.completion, H.completion);
    for (const auto& s2 : all_subsets(A->size()))
      for (const auto& s : all_subsets(A->size())) {
        auto w2 = make_subset(A, 0, s2), w = make_subset(A, 0, s);
        auto formula = directed_hausdorff(w2, w);
        auto hom = presheaf_hom(conical_from_subset(w2), conical_from_subset(w));
        auto e = ext(H.find_subset(w2), H.find_subset(w));
        o.require(formula == hom && hom == e, "three-way equality fails");
        if constexpr (std::is_same_v<V, Extended>)
          o.require(oracle::num(formula) == oracle::directed_hausdorff(oracle::metric_matrix(*A), s2, s),
                    "formula differs from the numeric oracle");
        ++pairs;
      }
  };
  for (int i = 0; i < 12; ++i) three_way(fixtures::random_metric_space(1 + uniform_below(rng, 6), rng, i % 2 == 0, i % 3 ? 5 : 0));
  for (const auto& P : small_preorders(4)) three_way(P);
  auto line = fixtures::line_space({0, 1, 4});
  o.require(directed_hausdorff(make_subset(line, 0, {0, 1}), make_subset(line, 0, {2})) == Extended(4), "line {0,1}->{4}");
  o.require(directed_hausdorff(make_subset(line, 0, {2}), make_subset(line, 0, {0, 1})) == Extended(3), "line {4}->{0,1}");
  std::vector<CategoryPtr<Lawvere>> metric = {line};
  for (int i = 0; i < 10; ++i) metric.push_back(fixtures::random_metric_space(1 + uniform_below(rng, 5), rng, true));
  for (const auto& A : metric)
    for (std::size_t x = 0; x < A->size(); ++x) {
      for (std::size_t y = 0; y < A->size(); ++y)
        o.require(directed_hausdorff(make_subset(A, 0, {x}), make_subset(A, 0, {y})) == A->hom(x, y), "singleton distance");
    }
  for (const auto& A : metric)
    for (const auto& s : all_subsets(A->size()))
      o.require(directed_hausdorff(make_subset(A, 0, s), make_subset(A, 0, s)) == Extended(0), "self distance");
  o.summary = std::to_string(pairs) + " subset pairs";
  return o;
}

Outcome hausdorff_doctrine() {
  Outcome o;
  std::vector<Fixture<TQ>> fx;
  for (const auto& A : small_preorders(2)) fx.push_back({"bool/" + std::to_string(fx.size()), A});
  all_pass(doctrine_laws(weight_class_conical<TQ>(), fx), o, "Hausdorff doctrine");
  Rng rng(107);
  std::size_t join_broken = 0, bottom_broken = 0;
  for (int i = 0; i < 200; ++i) {
    auto A = fixtures::random_metric_space(1 + uniform_below(rng, 3), rng, i % 2 == 0);
    auto B = fixtures::random_metric_space(1 + uniform_below(rng, 3), rng, i % 2 == 0);
    auto C = fixtures::random_metric_space(1 + uniform_below(rng, 3), rng, i % 2 == 0);
    auto ha = hausdorff_category(A), hb = hausdorff_category(B), hc = hausdorff_category(C);
    auto phi = fixtures::random_metric_distributor(A, B, rng);
    auto phi2 = fixtures::random_metric_distributor(A, B, rng);
    auto psi = fixtures::random_metric_distributor(B, C, rng);
    o.require(hausdorff_on_dist(identity_distributor(A), ha, ha) == identity_distributor(ha.category()), "normality");
    o.require(dist_leq(dist_compose(hausdorff_on_dist(psi, hb, hc), hausdorff_on_dist(phi, ha, hb)),
                       hausdorff_on_dist(dist_compose(psi, phi), ha, hc)),
              "laxity");
    auto joined = hausdorff_on_dist(dist_join(phi, phi2), ha, hb);
    auto separate = dist_join(hausdorff_on_dist(phi, ha, hb), hausdorff_on_dist(phi2, ha, hb));
    o.require(dist_leq(separate, joined), "monotonicity on joins");
    join_broken += !(joined == separate);
    bottom_broken += !(hausdorff_on_dist(bottom_distributor(A, B), ha, hb) == bottom_distributor(ha.category(), hb.category()));
  }
  std::size_t functors = 0;
  while (functors < 100) {
    auto A = fixtures::random_metric_space(1 + uniform_below(rng, 3), rng);
    auto B = fixtures::random_metric_space(1 + uniform_below(rng, 3), rng);
    auto F = fixtures::random_functor(A, B, rng);
    if (!F) continue;
    ++functors;
    auto ha = hausdorff_category(A), hb = hausdorff_category(B);
    o.require(hausdorff_on_dist(induced_left(*F), ha, hb) == induced_left(hausdorff_on_functor(*F, ha, hb)),
              "extension of induced_left differs from induced_left of H(F)");
  }
  if (join_broken || bottom_broken)
    o.known.push_back("join preservation fails on " + std::to_string(join_broken) + "/200 fixtures and bottom preservation on " +
                      std::to_string(bottom_broken) + "/200; the extension is only lax on joins");
  o.summary = "doctrine laws on " + std::to_string(fx.size()) + " preorders, 200 distributor fixtures, " +
              std::to_string(functors) + " functors";
  return o;
}

Outcome cauchy() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& A : small_preorders(4))
    for (const auto& phi : enumerate_presheaves(A)) {
      o.require(is_cauchy(phi) == oracle::has_right_adjoint_bool(A, phi.values), "is_cauchy differs at " + presheaf_label(phi));
      ++checked;
    }
  Rng rng(108);
  for (int i = 0; i < 50; ++i) {
    auto A = fixtures::random_preorder(boolq(), 1 + uniform_below(rng, 4), rng);
    o.require(is_equivalence(cauchy_completion(A).unit), "Cauchy completion is not an equivalence");
    o.require(is_equivalence(build_subcategory(A, weight_class_representable<TQ>()).unit), "representable unit");
    auto M = fixtures::random_metric_space(1 + uniform_below(rng, 4), rng);
    o.require(is_equivalence(build_subcategory(M, weight_class_representable<Lawvere>()).unit), "representable unit (Lawvere)");
  }
  o.summary = std::to_string(checked) + " presheaves against adjoint search, 50 completions";
  return o;
}

std::pair<int, std::string> run_command(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome determinism() {
  Outcome o;
  const std::string cmd = std::string("\"") + QCAT_CLI + "\" --json laws --suite all --budget 200 --seed 7";
  auto [code1, out1] = run_command(cmd);
  auto [code2, out2] = run_command(cmd);
  o.require(!out1.empty(), "empty laws output");
  o.require(out1 == out2, "laws output differs between runs");
  o.require(code1 == code2, "exit codes differ between runs");
  // the only law failures allowed are the known join/bottom ones
  std::size_t fails = 0;
  try {
    auto j = io::json::parse(out1);
    for (const auto& e : j["entries"]) {
      if (e["status"] != "fail") continue;
      auto law = e["law"].get<std::string>();
      if (law.find("extension preserves joins") != std::string::npos ||
          law.find("extension preserves bottom") != std::string::npos)
        ++fails;
      else
        o.require(false, "law failed: " + law + " on " + e["fixture"].get<std::string>());
    }
  } catch (const std::exception& e) {
    o.require(false, std::string("laws output is not JSON: ") + e.what());
  }
  // round trips
  Rng rng(109);
  for (int i = 0; i < 50; ++i) {
    auto q = i % 2 ? boolq() : std::make_shared<const TQ>(fixtures::split_quantaloid());
    auto A = fixtures::random_category(q, 1 + uniform_below(rng, 3), rng);
    auto text = io::emit_category(*A).dump();
    auto back = std::get<CategoryPtr<TQ>>(io::parse_any_category(io::json::parse(text)));
    o.require(same_category<TQ>(A, back) && io::emit_category(*back).dump() == text, "category round trip");
    auto B = fixtures::random_category(q, 1 + uniform_below(rng, 3), rng);
    auto phi = fixtures::random_distributor(A, B, rng);
    o.require(std::get<Distributor<TQ>>(io::parse_any_distributor(io::emit_distributor(phi))) == phi,
              "distributor round trip");
    auto M = fixtures::random_metric_space(1 + uniform_below(rng, 4), rng, false, 4);
    auto Mb = io::parse_metric_space(io::emit_metric_space(*M));
    o.require(io::emit_metric_space(*Mb).dump() == io::emit_metric_space(*M).dump(), "metric space round trip");
    auto mphi = fixtures::random_metric_distributor(M, M, rng);
    o.require(std::get<Distributor<Lawvere>>(io::parse_any_distributor(io::emit_distributor(mphi))).matrix() ==
                  mphi.matrix(),
              "Lawvere distributor round trip");
    for (const auto& p : enumerate_presheaves(A))
      o.require(io::parse_presheaf_over(A, io::emit_presheaf(p)) == p, "presheaf round trip");
  }
  o.summary = "two runs, " + std::to_string(out1.size()) + " bytes each, exit code " + std::to_string(code1) + " (" +
              std::to_string(fails) + " known law failures); 50 round-trip rounds";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "residuation", 60, residuation},
      {2, "Yoneda and classification", 60, yoneda_classification},
      {3, "colimit universal property", 120, colimits},
      {4, "free-doctrine laws", 60, free_doctrine},
      {5, "conical machinery", 120, conical},
      {6, "Hausdorff closed form", 120, closed_form},
      {7, "Hausdorff doctrine laws", 180, hausdorff_doctrine},
      {8, "Cauchy", 120, cauchy},
      {9, "CLI determinism and round-trip", 180, determinism},
  };
  const auto start = std::chrono::steady_clock::now();
  bool unexpected = false;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) o.failures.push_back("took longer than " + std::to_string(static_cast<int>(c.limit_s)) + "s");
    const bool pass = o.failures.empty() && o.known.empty();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.name << " (" << secs << "s)";
    if (!o.summary.empty()) line << ": " << o.summary;
    std::cout << line.str() << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    for (const auto& k : o.known) std::cout << "    known: " << k << "\n";
    unexpected = unexpected || !o.failures.empty();
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << static_cast<int>(total) << "s\n";
  if (total > 180) {
    std::cout << "FAIL  whole run exceeded 180s\n";
    unexpected = true;
  }
  return unexpected ? 1 : 0;
}
