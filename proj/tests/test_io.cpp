#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace qcat;
using namespace testing_support;
using io::json;

namespace {

using TQ = TableQuantaloid;

std::string fixture(const char* name) { return std::string(QCAT_FIXTURES) + "/" + name; }

}  // namespace

TEST(Io, ExtendedValues) {
  EXPECT_EQ(io::parse_extended(json("3/2")), Extended::ratio(3, 2));
  EXPECT_EQ(io::parse_extended(json::parse("0.1")), Extended::ratio(1, 10));
  EXPECT_EQ(io::parse_extended(json::parse("4")), Extended(4));
  EXPECT_EQ(io::parse_extended(json("1.5e-2")), Extended::ratio(3, 200));
  EXPECT_EQ(io::parse_extended(json("inf")), Extended::infinity());
  EXPECT_EQ(Extended::ratio(6, 4).str(), "3/2");
  EXPECT_EQ(Extended(4).str(), "4/1");
  for (const char* bad : {"abc", "-1", "1/0", "", "2/"}) EXPECT_THROW(io::parse_extended(json(bad)), ParseError) << bad;
  EXPECT_THROW(io::parse_extended(json::array()), ParseError);
}

TEST(Io, ExtendedStringRoundTrip) {
  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    auto e = fixtures::random_extended(rng, 40, 1 + uniform_below(rng, 9), 8);
    EXPECT_EQ(Extended::parse(e.str()), e);
  }
}

TEST(Io, MetricFixtures) {
  auto line = io::parse_metric_space(io::read_json_file(fixture("line.json")));
  EXPECT_EQ(line->size(), 3u);
  EXPECT_EQ(line->hom(0, 2), Extended(4));
  EXPECT_THROW(io::parse_metric_space(io::read_json_file(fixture("triangle_violation.json"))), TriangleViolation);
  try {
    io::parse_metric_space(io::read_json_file(fixture("triangle_violation.json")));
  } catch (const TriangleViolation& e) {
    ASSERT_FALSE(e.violations().empty());
    EXPECT_NE(e.violations().front().find("d(x,z)=10/1"), std::string::npos);
  }
  auto j = io::read_json_file(fixture("triangle_violation.json"));
  j["profile"] = "generalized";
  EXPECT_NO_THROW(io::parse_metric_space(j));
  auto nonzero = json::parse(R"({"points":["a"],"distances":[[1]]})");
  EXPECT_THROW(io::parse_metric_space(nonzero), ValidationError);
}

TEST(Io, PreorderFixtures) {
  auto d = io::parse_preorder(io::read_json_file(fixture("diamond.json")));
  EXPECT_EQ(d->size(), 4u);
  EXPECT_TRUE(validate_category(*d).ok());
  EXPECT_EQ(enumerate_presheaves(d).size(), 6u);
  EXPECT_THROW(io::parse_preorder(io::read_json_file(fixture("broken_preorder.json"))), ValidationError);
  auto unknown = json::parse(R"({"kind":"preorder","elements":["a"],"leq":[["a","b"]]})");
  EXPECT_THROW(io::parse_preorder(unknown), Error);
  auto dup = json::parse(R"({"kind":"preorder","elements":["a","a"],"leq":[]})");
  EXPECT_THROW(io::parse_preorder(dup), Error);
  EXPECT_THROW(io::read_json_file(fixture("missing.json")), ParseError);
}

TEST(Io, MetricSpaceRoundTrip) {
  Rng rng(52);
  for (int i = 0; i < 20; ++i) {
    auto A = fixtures::random_metric_space(1 + uniform_below(rng, 4), rng, false, 4);
    auto back = io::parse_metric_space(io::emit_metric_space(*A));
    EXPECT_EQ(back->names(), A->names());
    for (std::size_t x = 0; x < A->size(); ++x)
      for (std::size_t y = 0; y < A->size(); ++y) EXPECT_EQ(back->hom(x, y), A->hom(x, y));
  }
}

TEST(Io, CategoryRoundTrip) {
  Rng rng(53);
  for (auto q : {boolq(), chainq(3), splitq()}) {
    for (int i = 0; i < 10; ++i) {
      auto A = fixtures::random_category(q, 1 + uniform_below(rng, 3), rng);
      auto text = io::emit_category(*A).dump();
      auto back = std::get<CategoryPtr<TQ>>(io::parse_any_category(json::parse(text)));
      EXPECT_TRUE(same_category<TQ>(A, back));
      EXPECT_EQ(io::emit_category(*back).dump(), text);
    }
  }
}

TEST(Io, QuantaloidRoundTrip) {
  Rng rng(54);
  for (int i = 0; i < 10; ++i) {
    auto q = fixtures::random_table_quantaloid(rng);
    auto back = std::get<0>(io::parse_quantaloid(io::emit_quantaloid(q)));
    EXPECT_TRUE(same_quantaloid(q, *back));
  }
  auto split = fixtures::split_quantaloid();
  EXPECT_TRUE(same_quantaloid(split, *std::get<0>(io::parse_quantaloid(io::emit_quantaloid(split)))));
}

TEST(Io, DistributorRoundTrip) {
  Rng rng(55);
  for (int i = 0; i < 20; ++i) {
    auto A = fixtures::random_category(splitq(), 1 + uniform_below(rng, 3), rng);
    auto B = fixtures::random_category(splitq(), 1 + uniform_below(rng, 3), rng);
    auto phi = fixtures::random_distributor(A, B, rng);
    auto back = std::get<Distributor<TQ>>(io::parse_any_distributor(io::emit_distributor(phi)));
    EXPECT_EQ(back, phi);
  }
  for (int i = 0; i < 20; ++i) {
    auto A = fixtures::random_metric_space(1 + uniform_below(rng, 3), rng);
    auto phi = fixtures::random_metric_distributor(A, A, rng);
    auto back = std::get<Distributor<Lawvere>>(io::parse_any_distributor(io::emit_distributor(phi)));
    EXPECT_EQ(back.matrix(), phi.matrix());
  }
}

TEST(Io, LineDistributorFixture) {
  auto d = io::parse_any_distributor(io::read_json_file(fixture("line_dist.json")));
  auto& phi = std::get<Distributor<Lawvere>>(d);
  EXPECT_TRUE(validate_distributor(phi).ok());
  EXPECT_EQ(phi(1, 2), Extended::ratio(3, 2));
}

TEST(Io, PresheafRoundTrip) {
  Rng rng(56);
  for (int i = 0; i < 20; ++i) {
    auto A = fixtures::random_category(splitq(), 1 + uniform_below(rng, 3), rng);
    for (const auto& phi : enumerate_presheaves(A)) EXPECT_EQ(io::parse_presheaf_over(A, io::emit_presheaf(phi)), phi);
  }
}

TEST(Io, LawReportShape) {
  laws::Options o;
  o.budget = 5;
  auto j = io::emit_law_report(laws::lattice_suite(o));
  EXPECT_EQ(j["suite"], "lattice");
  EXPECT_EQ(j["fail"], 0);
  EXPECT_EQ(j["pass"].get<std::size_t>(), j["entries"].size());
  EXPECT_EQ(io::emit_law_report(laws::lattice_suite(o)).dump(), j.dump());
}
