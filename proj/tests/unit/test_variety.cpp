#include <gtest/gtest.h>

#include <set>

#include "eamod/eamod.hpp"
#include "oracles.hpp"

using namespace eamod;

namespace {

const FieldCtx& F3() {
  static const FieldCtx f = FieldCtx::create(3, 1);
  return f;
}
const FieldCtx& F9() {
  static const FieldCtx f = FieldCtx::create(3, 2);
  return f;
}

std::vector<std::string> names(const FieldCtx& f, const std::vector<Point>& pts) {
  std::vector<std::string> out;
  for (const auto& a : pts) out.push_back(format_point(f, a));
  std::sort(out.begin(), out.end());
  return out;
}

// Gaussian binomial [k choose d]_p.
std::uint64_t gaussian(unsigned k, unsigned d, std::uint64_t p) {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (unsigned i = 0; i < d; ++i) {
    std::uint64_t a = 1;
    std::uint64_t b = 1;
    for (unsigned j = 0; j < k - i; ++j) a *= p;
    for (unsigned j = 0; j < i + 1; ++j) b *= p;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace

TEST(Variety, ProjectiveEnumeration) {
  EXPECT_EQ(enumerate_projective(F9(), 2).size(), 10u);
  EXPECT_EQ(enumerate_projective(F3(), 3).size(), 13u);
  EXPECT_EQ(enumerate_projective(FieldCtx::create(3, 3), 3).size(), 757u);
  // distinct lines, each normalized
  const auto pts = enumerate_projective(F9(), 3);
  std::set<std::vector<Fel>> seen;
  for (const auto& a : pts) {
    EXPECT_EQ(normalize(F9(), a.coords), a);
    EXPECT_TRUE(seen.insert(a.coords).second);
  }
  EXPECT_THROW(enumerate_projective(FieldCtx::create(3, 8), 3), Error);
}

TEST(Variety, PointSweeps) {
  const EAModule d2 = d_r(SymContext(3, 2), F3(), 2);
  EXPECT_EQ(names(F9(), variety_points(d2, F9()).variety()), (std::vector<std::string>{"(1,2w)", "(1,w)"}));
  const EAModule d2k3 = d_r(SymContext(3, 3), F3(), 2);
  EXPECT_EQ(names(F3(), variety_points(d2k3, F3()).variety()), names(F3(), zero_points(PkPoly{3, 3}, F3())));
  EXPECT_EQ(variety_points(regular_module(F3(), 2), F9()).variety_count(), 0u);
}

TEST(Variety, ZeroPoints) {
  EXPECT_EQ(names(F9(), zero_points(PkPoly{3, 2}, F9())), (std::vector<std::string>{"(1,2w)", "(1,w)"}));
  EXPECT_TRUE(zero_points(PkPoly{3, 2}, F3()).empty());
  const auto z = zero_points(PkPoly{3, 3}, F3());
  EXPECT_EQ(z.size(), 7u);
  const auto all_nonzero = std::count_if(z.begin(), z.end(), [](const Point& a) {
    return std::none_of(a.coords.begin(), a.coords.end(), [](Fel x) { return x.is_zero(); });
  });
  EXPECT_EQ(all_nonzero, 4);
  EXPECT_EQ(affine_zero_count(PkPoly{3, 2}, F9()), 17u);
  EXPECT_EQ(affine_zero_count(PkPoly{3, 2}, FieldCtx::create(3, 4)), 161u);
}

TEST(Variety, Comparisons) {
  const EAModule d2 = d_r(SymContext(3, 2), F3(), 2);
  EXPECT_EQ(compare_sets(variety_points(d2, F9()), zero_points(PkPoly{3, 2}, F9())).verdict, SetVerdict::Equal);
  const auto c = compare_sets(variety_points(block_model_d1(SymContext(3, 2), F3()), F9()), zero_points(PkPoly{3, 2}, F9()));
  EXPECT_EQ(c.verdict, SetVerdict::Superset);
  EXPECT_EQ(c.only_in_first.size(), 8u);
  EXPECT_EQ(compare_point_sets({}, {}).verdict, SetVerdict::Equal);
  const auto pts = enumerate_projective(F3(), 2);
  EXPECT_EQ(compare_point_sets({pts[0]}, {pts[0], pts[1]}).verdict, SetVerdict::ProperSubset);
  EXPECT_EQ(compare_point_sets({pts[0], pts[2]}, {pts[0], pts[1]}).verdict, SetVerdict::Incomparable);
}

TEST(Variety, GenericTypes) {
  EXPECT_EQ(generic_type(block_model_d1(SymContext(3, 3), F3()), 4, 24, 7).type.label(), "[3][3][1]");
  EXPECT_EQ(generic_type(d_r(SymContext(3, 3), F3(), 2), 4, 24, 7).type.compact_label(), "[3]^7");
  EXPECT_EQ(generic_type(trivial_module(F3(), 2), 4, 24, 7).type.label(), "[1]");
  const auto g = generic_type(block_model_d1(SymContext(3, 2), F3()), 2, 16, 3);
  EXPECT_EQ(g.samples, 16u);
  EXPECT_LE(g.attained, g.samples);
  // same seed, same answer
  const auto g2 = generic_type(block_model_d1(SymContext(3, 2), F3()), 2, 16, 3);
  EXPECT_EQ(g.type, g2.type);
  EXPECT_EQ(g.attained, g2.attained);
}

TEST(Variety, MaxJordanSet) {
  const EAModule d1 = extend_field(block_model_d1(SymContext(3, 3), F3()), F9());
  const JordanType generic = type_from_blocks(3, {3, 3, 1});
  EXPECT_TRUE(in_max_jordan_set(d1, parse_point(F9(), "1,1,w"), generic));
  EXPECT_FALSE(in_max_jordan_set(d1, parse_point(F9(), "1,1,1"), generic));
  // at p = 3 a point with one zero coordinate still reaches the generic type
  EXPECT_TRUE(in_max_jordan_set(d1, parse_point(F9(), "1,1,0"), generic));
  EXPECT_FALSE(in_max_jordan_set(d1, parse_point(F9(), "1,0,0"), generic));
}

TEST(Variety, MaxSetAtPFive) {
  // for p = 5 the non-maximal points are exactly V(p_k) and the coordinate hyperplanes
  const FieldCtx f5 = FieldCtx::create(5, 1);
  const EAModule d1 = block_model_d1(SymContext(5, 3), f5);
  const JordanType generic = type_from_blocks(5, {5, 5, 3});
  for (const auto& a : enumerate_projective(f5, 3)) {
    const bool axis = std::any_of(a.coords.begin(), a.coords.end(), [](Fel x) { return x.is_zero(); });
    const bool on_pk = pk_eval(PkPoly{5, 3}, f5, a.coords).is_zero();
    EXPECT_EQ(in_max_jordan_set(d1, a, generic), !(axis || on_pk)) << format_point(f5, a);
  }
}

TEST(Variety, WreathAction) {
  const std::vector<Fel> ones = {F3().one(), F3().one()};
  const Point a = parse_point(F3(), "1,2");
  EXPECT_EQ(format_point(F3(), wreath_act(F3(), ones, {1, 0}, a)), "(2,1)");
  EXPECT_EQ(format_point(F3(), wreath_act(F3(), {F3().element(2), F3().one()}, {0, 1}, a)), "(2,2)");
  EXPECT_EQ(wreath_act(F3(), ones, {0, 1}, a), a);
  EXPECT_THROW(wreath_act(F9(), {F9().parse("w"), F9().one()}, {0, 1}, parse_point(F9(), "1,1")), Error);
}

TEST(Variety, DimensionEstimate) {
  EXPECT_EQ(dimension_estimate(17, 161, 9), 1u);
  EXPECT_EQ(dimension_estimate(81, 6561, 9), 2u);
  const auto n2 = affine_zero_count(PkPoly{3, 3}, F9());
  const auto n4 = affine_zero_count(PkPoly{3, 3}, FieldCtx::create(3, 4));
  EXPECT_EQ(dimension_estimate(n2, n4, 9), 2u);
}

TEST(Variety, BaseSubspaceCountsAreGaussianBinomials) {
  for (unsigned p : {2u, 3u}) {
    for (unsigned k = 1; k <= 4; ++k) {
      for (unsigned d = 0; d <= k; ++d) {
        const auto subs = enumerate_base_subspaces(p, k, d, d);
        EXPECT_EQ(subs.size(), gaussian(k, d, p)) << p << " " << k << " " << d;
        const FieldCtx f = FieldCtx::create(p, 1);
        for (const auto& b : subs) {
          MatF m(f, b.size(), k);
          for (std::size_t r = 0; r < b.size(); ++r)
            for (unsigned c = 0; c < k; ++c) m(r, c) = Fel(b[r][c]);
          EXPECT_EQ(rank(m), d);
          EXPECT_EQ(row_echelon(m).rref, m);
        }
      }
    }
  }
}

TEST(Variety, GreenWitness) {
  const auto w = green_witness(d_r(SymContext(3, 2), F3(), 2), F9());
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(format_point(F9(), *w), "(1,w)");
  EXPECT_FALSE(green_witness(linear_variety_module(F9(), 2, {{F9().one(), F9().one()}}), F9()).has_value());
  EXPECT_FALSE(green_witness(regular_module(F3(), 2), F9()).has_value());
}

TEST(Variety, RankTwoBuilder) {
  const std::vector<Point> axes = {parse_point(F3(), "1,0"), parse_point(F3(), "0,1")};
  const EAModule m = dv_rank2_builder(F3(), axes);
  EXPECT_EQ(m.dim(), 6u);
  EXPECT_EQ(names(F3(), variety_points(m, F3()).variety()), (std::vector<std::string>{"(0,1)", "(1,0)"}));
  EXPECT_EQ(dv_rank2_builder(F3(), {axes[0]}).dim(), 3u);
  EXPECT_THROW(dv_rank2_builder(F3(), {}), Error);
  try {
    dv_rank2_builder(F3(), {axes[0], parse_point(F3(), "2,0")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateDirection);
  }
}

TEST(Variety, SweepIsDeterministicAcrossWorkerCounts) {
  const EAModule m = d_r(SymContext(3, 3), F3(), 2);
  const auto a = variety_points(m, F9());
  const auto b = variety_points(m, F9());
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].point, b.points[i].point);
    EXPECT_EQ(a.points[i].type, b.points[i].type);
  }
}
