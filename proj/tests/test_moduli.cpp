#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace enriques;
using namespace enriques::testing;

namespace {

H1Interval interval(const H1Outcome& o) {
  if (auto* iv = std::get_if<H1Interval>(&o)) return *iv;
  throw Error("inconclusive: " + std::get<Inconclusive>(o).reason);
}

H1Interval h1(const std::string& t) { return interval(h1_tangent_k3(parse_decomposition(t))); }

}  // namespace

TEST(DoubleCover, PullbackTerm) {
  EXPECT_EQ(tangent_pullback_h1(of("3E1+3E2"), half_fiber(1), half_fiber(2)), 0);
  EXPECT_EQ(tangent_pullback_h1(of("2E1+E2+E3"), half_fiber(2), half_fiber(3)), 0);
  // H - 2F1 of square -4 contributes one on each torsion lift
  PicClass h = of("2E1+2E2+E3");
  PicClass d = h - 2 * half_fiber(4);
  ASSERT_EQ(square(d), -4);
  EXPECT_EQ(k3_coh(d).h1, 2);
  long long other = k3_coh(h - 2 * half_fiber(3)).h1;
  EXPECT_EQ(tangent_pullback_h1(h, half_fiber(4), half_fiber(3)), 2 + other);
}

TEST(DoubleCover, BranchTerm) {
  auto a = branch_restriction_bounds(of("3E1+3E2"), half_fiber(1), half_fiber(2));
  EXPECT_EQ(a.lower, 4);
  EXPECT_EQ(a.upper, 4);
  EXPECT_TRUE(a.exact);
  auto b = branch_restriction_bounds(of("4E1+3E2"), half_fiber(1), half_fiber(2));
  EXPECT_EQ(b.lower, 2);
  EXPECT_EQ(b.upper, 2);
  PicClass h = of("E1+E2+E3+E4+E5");
  PicClass f = half_fiber(1);
  ASSERT_EQ(inner(f + half_fiber(6), h), 9);
  auto c = branch_restriction_bounds(h + half_fiber(6), f, half_fiber(6));
  EXPECT_TRUE(c.exact);
  EXPECT_EQ(c.upper, 0);
}

TEST(DoubleCover, Bounds) {
  auto a = double_cover_bound(of("3E1+3E2"), half_fiber(1), half_fiber(2));
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(a.lower, 4);
  auto b = double_cover_bound(of("E1+E2+E3+E4"), half_fiber(1), half_fiber(2));
  EXPECT_FALSE(b.exact);
  EXPECT_EQ(b.lower, 0);
  EXPECT_EQ(b.upper, 2);
  auto c = double_cover_bound(of("4E1+4E2"), half_fiber(1), half_fiber(2));
  EXPECT_TRUE(c.exact);
  EXPECT_EQ(c.lower, 1);
  EXPECT_THROW(double_cover_bound(of("E1+E{1,2}"), half_fiber(1), pair_class(1, 2)), PreconditionError);
}

TEST(QuadricIntersection, EmbeddingTerms) {
  auto a = embedding_terms(of("2E1+2E{1,2}"), half_fiber(1), pair_class(1, 2));
  EXPECT_EQ(a.euler_h1, 0);
  EXPECT_EQ(a.normal_h0, 1);
  auto b = embedding_terms(of("2E1+E{1,2}"), half_fiber(1), pair_class(1, 2));
  EXPECT_EQ(b.euler_h1, 0);
  EXPECT_EQ(b.normal_h0, 2);
  EXPECT_TRUE(embedding_terms(of("E1+E{1,2}"), half_fiber(1), pair_class(1, 2)).hyperplane_class);
}

TEST(QuadricIntersection, Bounds) {
  auto a = interval(quadric_intersection_bound(of("E1+E{1,2}"), half_fiber(1), pair_class(1, 2),
                                               CorankEvidence::unknown()));
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(a.lower, 12);
  auto b = interval(quadric_intersection_bound(of("2E1+2E{1,2}"), half_fiber(1), pair_class(1, 2),
                                               CorankEvidence::surjective("given")));
  EXPECT_TRUE(b.exact);
  EXPECT_EQ(b.lower, 3);
  ASSERT_TRUE(b.certificate.pushforward);
  EXPECT_EQ(b.certificate.pushforward->first + b.certificate.pushforward->second, 3);
  auto c = quadric_intersection_bound(of("2E1+2E{1,2}"), half_fiber(1), pair_class(1, 2),
                                      CorankEvidence::unknown());
  EXPECT_TRUE(std::holds_alternative<Inconclusive>(c));
  auto d = interval(quadric_intersection_bound(of("2E1+2E{1,2}"), half_fiber(1), pair_class(1, 2),
                                               CorankEvidence::bounded(2, "given")));
  EXPECT_FALSE(d.exact);
  EXPECT_EQ(d.lower, 3);
  EXPECT_EQ(d.upper, 5);
}

TEST(Strategy, Examples) {
  EXPECT_EQ(h1("E1+E{1,2}").lower, 12);
  auto a = h1("2E1+2E{1,2}");
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(a.lower, 3);
  EXPECT_EQ(a.certificate.mult_corank, 0);
  auto b = h1("2E1+E{1,2}");
  EXPECT_TRUE(b.exact);
  EXPECT_EQ(b.lower, 6);
  auto c = h1("2E1+E2+E3+E4");
  EXPECT_TRUE(c.exact);
  EXPECT_EQ(c.lower, 0);
  auto d = h1("2E1+2E2+E3");
  EXPECT_TRUE(d.exact);
  EXPECT_EQ(d.lower, 2);
  auto e = h1("4E1+2E2");
  EXPECT_TRUE(e.exact);
  EXPECT_EQ(e.lower, 3);
  auto f = h1("3E1+3E2");
  EXPECT_TRUE(f.exact);
  EXPECT_EQ(f.lower, 4);
  auto g = h1("E1+E2+E3+E4");
  EXPECT_FALSE(g.exact);
  EXPECT_EQ(g.upper, 2);
}

TEST(Strategy, InvariantUnderRelabeling) {
  for (const char* t : {"2E3+2E{3,7}", "4E5+3E9", "E2+E4+E{2,4}", "2E1+2E2+2E3"}) {
    DecompositionType d = parse_decomposition(t);
    auto rec = component_record_of(d);
    ASSERT_TRUE(rec) << t;
    auto a = h1(t), b = interval(h1_tangent_k3(rec->dtype));
    EXPECT_EQ(a.lower, b.lower) << t;
    EXPECT_EQ(a.upper, b.upper) << t;
  }
}

TEST(ClosedForms, Values) {
  EXPECT_EQ(h1_k3_family_k_2(2), 10);
  EXPECT_EQ(h1_k3_family_k_2(3), 6);
  EXPECT_EQ(h1_k3_family_k_2(4), 3);
  EXPECT_EQ(h1_k3_family_k_2(7), 0);
  EXPECT_EQ(h1_k3_phi_one(2), 16);
  EXPECT_EQ(h1_k3_phi_one(10), 0);
  EXPECT_EQ(h1_k3_phi_one(15), 0);
  EXPECT_EQ(h1_k3_family_k_1_1(2), 4);
  EXPECT_EQ(h1_k3_family_k_1_1(3), 0);
  EXPECT_EQ(h1_k3_family_k_1_1(5), 0);
  EXPECT_EQ(quadric_line_bundle_coh(1, 2).h0, 6);
  auto t = quadric_line_bundle_coh(0, 0);
  EXPECT_EQ(t.h0, 1);
  EXPECT_EQ(t.h1, 0);
  EXPECT_EQ(t.h2, 0);
  auto u = quadric_line_bundle_coh(-1, 5);
  EXPECT_EQ(u.h0 + u.h1 + u.h2, 0);
}

TEST(ClosedForms, QuadricCohomologyEulerCharacteristic) {
  for (long long a = -4; a <= 4; ++a)
    for (long long b = -4; b <= 4; ++b) {
      auto t = quadric_line_bundle_coh(a, b);
      EXPECT_EQ(t.h0 - t.h1 + t.h2, (a + 1) * (b + 1)) << a << "," << b;
    }
}

TEST(Split, Rules) {
  auto a = fiber_dimension(record("E_{9,3}^{(II)}"));
  EXPECT_EQ(a.split.h1_H, 1);
  EXPECT_EQ(a.split.h1_HK, 1);
  EXPECT_EQ(a.split.rule, SplitRule::SymmetricHalf);
  auto b = fiber_dimension(record("E_{9,4}^+"));
  EXPECT_EQ(b.split.h1_H, 3);
  EXPECT_EQ(b.split.h1_HK, 0);
  EXPECT_EQ(b.split.rule, SplitRule::Pushforward);
  auto c = fiber_dimension(record("E_{7,3}"));
  EXPECT_EQ(c.split.h1_H, 1);
  EXPECT_EQ(c.split.h1_HK, 1);
  EXPECT_EQ(c.total.certificate.method, BoundMethod::Reference);
  auto d = fiber_dimension(record("E_{5,2}^{(II)^+}"));
  EXPECT_EQ(d.split.rule, SplitRule::LowerBounds);
}

TEST(FiberDimension, Examples) {
  EXPECT_EQ(fiber_dimension(record("E_{13,3}^{(II)}")).value, 1);
  EXPECT_EQ(fiber_dimension(record("E_{5,2}^{(II)^+}")).value, 6);
  EXPECT_EQ(fiber_dimension(components(6, 1).front()).value, 4);
}

TEST(FiberDimension, AtLeastDimensionCount) {
  for (int g = 2; g <= 20; ++g)
    for (int p = 1; p <= 4; ++p) {
      if (!components_covered(g, p)) continue;
      for (const auto& c : components(g, p))
        EXPECT_GE(fiber_dimension(c).value, fiber_lower_bound(c)) << c.label;
    }
}

TEST(Extendability, Caps) {
  EXPECT_EQ(extendability_cap(record("E_{10,3}^{(II)}")), 2);
  EXPECT_EQ(extendability_cap(record("E_{9,4}^+")), 3);
  EXPECT_EQ(extendability_cap(record("E_{17,4}^{(IV)^-}")), std::nullopt);
  EXPECT_THROW(extendability_cap(record("E_{9,2}^{(I)}")), PreconditionError);
}

TEST(Verification, AllRowsPass) {
  auto check = [](const std::vector<RowCheck>& rows, std::size_t count) {
    EXPECT_EQ(rows.size(), count);
    for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.name << ": " << r.computed;
  };
  check(verify_exceptional_types(), 10);
  check(verify_phi_at_least_three(), 22);
  check(verify_phi_one(15), 14);
  check(verify_sextic_family(10), 9);
  check(verify_extendability_caps(), 10);
  auto two = verify_phi_two(20);
  for (const auto& r : two) EXPECT_TRUE(r.pass) << r.name;
}
