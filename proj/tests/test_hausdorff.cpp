#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace qcat;
using namespace testing_support;

namespace {

using TQ = TableQuantaloid;

CategoryPtr<Lawvere> two_points() {
  return space({"p", "q"}, {{Extended(0), Extended(1)}, {Extended(1), Extended(0)}});
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

}  // namespace

TEST(Hausdorff, LineDistances) {
  auto L = fixtures::line_space({0, 1, 4});
  auto s01 = make_subset(L, 0, {0, 1}), s4 = make_subset(L, 0, {2});
  EXPECT_EQ(directed_hausdorff(s01, s4), Extended(4));
  EXPECT_EQ(directed_hausdorff(s4, s01), Extended(3));
  EXPECT_EQ(symmetric_hausdorff(s01, s4), Extended(4));
  auto phi = conical_from_subset(make_subset(L, 0, {0, 2}));
  EXPECT_EQ(phi.values, (std::vector<Extended>{Extended(0), Extended(1), Extended(0)}));
}

TEST(Hausdorff, EmptySubsets) {
  auto L = fixtures::line_space({0, 1, 4});
  auto none = make_subset(L, 0, {}), some = make_subset(L, 0, {1});
  EXPECT_EQ(directed_hausdorff(none, some), Extended(0));
  EXPECT_EQ(directed_hausdorff(some, none), Extended::infinity());
  EXPECT_EQ(conical_from_subset(none), bottom_presheaf(L, 0));
}

TEST(Hausdorff, FractionalDistances) {
  auto A = space({"a", "b", "c"}, {{Extended(0), Extended::ratio(1, 3), Extended(2)},
                                   {Extended::ratio(1, 3), Extended(0), Extended::ratio(5, 3)},
                                   {Extended(2), Extended::ratio(5, 3), Extended(0)}});
  ASSERT_TRUE(validate_category(*A).ok());
  auto ab = make_subset(A, 0, {0, 1}), c = make_subset(A, 0, {2});
  EXPECT_EQ(directed_hausdorff(ab, c), Extended(2));
  EXPECT_EQ(directed_hausdorff(c, ab), Extended::ratio(5, 3));
  EXPECT_EQ(directed_hausdorff(make_subset(A, 0, {0}), make_subset(A, 0, {1})), Extended::ratio(1, 3));
}

TEST(Hausdorff, TwoPointSpaceHasFourConicalPresheaves) {
  auto A = two_points();
  auto H = hausdorff_category(A);
  EXPECT_EQ(H.size(), 4u);
  std::set<std::vector<Extended>> seen;
  for (const auto& s : all_subsets(2)) seen.insert(conical_from_subset(make_subset(A, 0, s)).values);
  EXPECT_EQ(seen.size(), 4u);
  auto half = make_presheaf<Lawvere>(A, 0, {Extended::ratio(1, 2), Extended::ratio(1, 2)});
  ASSERT_TRUE(validate_presheaf(half).ok());
  EXPECT_FALSE(is_conical(half));
  EXPECT_TRUE(is_conical(representable(A, 1)));
}

TEST(Hausdorff, SmallBoolCompletions) {
  EXPECT_EQ(hausdorff_category(preorder(1, {})).size(), 2u);
  auto H = hausdorff_category(preorder(2, {{0, 1}}));
  EXPECT_EQ(H.size(), 3u);
  // downsets ordered by inclusion
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(H.category()->hom(i, j) == truth(1), presheaf_leq(H.objects().member(i), H.objects().member(j)));
}

TEST(Hausdorff, ClosedFormOnRandomSpaces) {
  Rng rng(41);
  for (int i = 0; i < 12; ++i) {
    auto A = fixtures::random_metric_space(1 + uniform_below(rng, 5), rng, i % 2 == 0, i % 3 == 0 ? 0 : 5);
    auto d = oracle::metric_matrix(*A);
    auto H = hausdorff_category(A);
    for (const auto& s2 : all_subsets(A->size()))
      for (const auto& s : all_subsets(A->size())) {
        auto w2 = make_subset(A, 0, s2), w = make_subset(A, 0, s);
        auto delta = directed_hausdorff(w2, w);
        EXPECT_EQ(oracle::num(delta), oracle::directed_hausdorff(d, s2, s));
        EXPECT_EQ(H.category()->hom(H.find_subset(w2), H.find_subset(w)), delta);
        EXPECT_EQ(presheaf_hom(conical_from_subset(w2), conical_from_subset(w)), delta);
      }
  }
}

TEST(Hausdorff, ConicalAgreesWithSubsetSearch) {
  Rng rng(42);
  std::vector<std::shared_ptr<const TQ>> qs = {boolq(), chainq(3), splitq()};
  for (int i = 0; i < 45; ++i) {
    auto A = fixtures::random_category(qs[i % 3], 1 + uniform_below(rng, i % 3 == 0 ? 4 : 3), rng);
    auto brute = oracle::conical_by_subsets(A);
    for (const auto& phi : enumerate_presheaves(A)) {
      bool by_search = std::find(brute.begin(), brute.end(), std::make_pair(phi.type, phi.values)) != brute.end();
      EXPECT_EQ(static_cast<bool>(is_conical(phi)), by_search);
      if (i % 3 == 0) {
        EXPECT_TRUE(is_conical(phi));  // every downset is conical
      }
    }
    EXPECT_EQ(conical_presheaves(A).size(), brute.size());
  }
}

TEST(Hausdorff, CauchyMatchesAdjointSearch) {
  Rng rng(43);
  for (int i = 0; i < 40; ++i) {
    auto A = fixtures::random_preorder(boolq(), 1 + uniform_below(rng, 4), rng);
    for (const auto& phi : enumerate_presheaves(A))
      EXPECT_EQ(is_cauchy(phi), oracle::has_right_adjoint_bool(A, phi.values));
    EXPECT_TRUE(is_equivalence(cauchy_completion(A).unit));
  }
}

TEST(Hausdorff, SplitCauchyCompletionGrows) {
  auto A = singleton<TQ>(splitq(), 0);
  auto cc = cauchy_completion(A);
  EXPECT_EQ(cc.objects->size(), 2u);
  EXPECT_TRUE(is_fully_faithful(cc.unit));
  EXPECT_FALSE(is_equivalence(cc.unit));
}

TEST(Hausdorff, DistributorActionMatchesExtension) {
  Rng rng(44);
  for (int i = 0; i < 30; ++i) {
    auto A = fixtures::random_metric_space(1 + uniform_below(rng, 3), rng);
    auto B = fixtures::random_metric_space(1 + uniform_below(rng, 3), rng);
    auto phi = fixtures::random_metric_distributor(A, B, rng);
    auto ha = hausdorff_category(A), hb = hausdorff_category(B);
    EXPECT_EQ(hausdorff_on_dist(phi, ha, hb), extend_to_dist(phi, ha.completion, hb.completion));
    EXPECT_EQ(hausdorff_on_dist(identity_distributor(A), ha, ha), identity_distributor(ha.category()));
  }
}

TEST(Hausdorff, FunctorActionIsImageOfGenerators) {
  Rng rng(45);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    auto A = fixtures::random_metric_space(1 + uniform_below(rng, 3), rng);
    auto B = fixtures::random_metric_space(1 + uniform_below(rng, 3), rng);
    auto F = fixtures::random_functor(A, B, rng);
    if (!F) continue;
    ++checked;
    auto ha = hausdorff_category(A), hb = hausdorff_category(B);
    auto HF = hausdorff_on_functor(*F, ha, hb);
    EXPECT_TRUE(validate_functor(HF).ok());
    auto L = induced_left(*F);
    for (std::size_t k = 0; k < ha.size(); ++k) EXPECT_EQ(hb.objects().member(HF(k)), act(L, ha.objects().member(k)));
    EXPECT_EQ(extend_to_dist(L, ha.completion, hb.completion), induced_left(HF));
  }
  EXPECT_GT(checked, 5);
}

TEST(Hausdorff, ConstantFunctor) {
  auto A = fixtures::line_space({0, 1, 4});
  auto B = two_points();
  Functor<Lawvere> F(A, B, {1, 1, 1});
  auto ha = hausdorff_category(A), hb = hausdorff_category(B);
  auto HF = hausdorff_on_functor(F, ha, hb);
  const auto q_only = hb.find_subset(make_subset(B, 0, {1}));
  for (std::size_t k = 0; k < ha.size(); ++k)
    EXPECT_EQ(HF(k), ha.generators[k].empty() ? hb.find_subset(make_subset(B, 0, {})) : q_only);
}

// Two distributors from a point into two far-apart points: the extension of
// their join is 0 at the two-point object, the join of their extensions is 5.
TEST(Hausdorff, DistributorExtensionLosesJoins) {
  auto A = space({"s"}, {{Extended(0)}});
  auto B = space({"t1", "t2"}, {{Extended(0), Extended(5)}, {Extended(5), Extended(0)}});
  Distributor<Lawvere> p1(A, B, {Extended(0), Extended(5)}), p2(A, B, {Extended(5), Extended(0)});
  ASSERT_TRUE(validate_distributor(p1).ok() && validate_distributor(p2).ok());
  auto ha = hausdorff_category(A), hb = hausdorff_category(B);
  const auto both = hb.find_subset(make_subset(B, 0, {0, 1}));
  const auto s = ha.find_subset(make_subset(A, 0, {0}));
  auto joined = hausdorff_on_dist(dist_join(p1, p2), ha, hb);
  auto separate = dist_join(hausdorff_on_dist(p1, ha, hb), hausdorff_on_dist(p2, ha, hb));
  EXPECT_EQ(joined(both, s), Extended(0));
  EXPECT_EQ(separate(both, s), Extended(5));
  EXPECT_TRUE(dist_leq(separate, joined));
}

TEST(Hausdorff, LawSuiteFailsOnlyOnJoinPreservation) {
  laws::Options o;
  o.budget = 60;
  auto r = laws::hausdorff_suite(o);
  for (const auto& e : r.entries) {
    if (e.law.find("extension preserves") != std::string::npos) continue;
    EXPECT_EQ(e.status, LawStatus::pass) << e.law << " " << e.fixture << " " << e.counterexample;
  }
}
