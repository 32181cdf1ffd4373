#include <gtest/gtest.h>

#include <algorithm>

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

Point pt(const FieldCtx& f, const char* text) { return parse_point(f, text); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::BadParams;
}

// Columns (i<j) of the second exterior power, from (u e_i) ^ (u e_j).
MatF wedge2_oracle(const MatF& u) {
  const auto& f = u.field();
  const std::size_t n = u.rows();
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) idx.emplace_back(i, j);
  MatF w(f, idx.size(), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const auto [i, j] = idx[c];
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const auto [a, b] = idx[r];
      w(r, c) = f.sub(f.mul(u(a, i), u(b, j)), f.mul(u(b, i), u(a, j)));
    }
  }
  return w;
}

}  // namespace

TEST(Module, ValidateExamples) {
  for (std::uint64_t l = 0; l < 3; ++l)
    for (std::uint64_t m = 0; m < 3; ++m) EXPECT_NO_THROW(validate(benson_module(F3(), Fel(l), Fel(m))));
  const MatF j2(F3(), 2, 2, {0, 0, 1, 0});
  const EAModule bad(F3(), 2, {j2, j2.transpose()});
  EXPECT_EQ(code_of([&] { validate(bad); }), ErrorCode::NonCommuting);
  EXPECT_NO_THROW(validate(zero_module(F3(), 2)));
  const EAModule unipotent(F3(), 1, {MatF(F3(), 1, 1, {1})});
  EXPECT_EQ(code_of([&] { validate(unipotent); }), ErrorCode::NotNilpotent);
}

TEST(Module, XAlpha) {
  const EAModule d1 = block_model_d1(SymContext(3, 2), F3());
  EXPECT_EQ(x_alpha(d1, pt(F3(), "1,0")), d1.gen(0));
  EXPECT_EQ(code_of([&] { x_alpha(d1, pt(F3(), "0,0")); }), ErrorCode::ZeroPoint);

  const Fel lambda = F9().parse("w");
  const Fel mu = F9().parse("2");
  const EAModule b = benson_module(F9(), lambda, mu);
  const Point a = pt(F9(), "w+1,2w");
  const MatF x = x_alpha(b, a);
  const Fel sub = F9().add(a.coords[0], F9().mul(a.coords[1], lambda));
  const Fel corner = F9().mul(a.coords[1], mu);
  const MatF expect(F9(), 3, 3);
  MatF e = expect;
  e(1, 0) = sub;
  e(2, 1) = sub;
  e(2, 0) = corner;
  EXPECT_EQ(x, e);
}

TEST(Module, PointJordanTypeExamples) {
  const EAModule d1k3 = block_model_d1(SymContext(3, 3), F3());
  EXPECT_EQ(point_jordan_type(extend_field(d1k3, F9()), pt(F9(), "1,1,w")).label(), "[3][3][1]");
  EXPECT_EQ(point_jordan_type(d1k3, pt(F3(), "1,1,1")).label(), "[3][2][2]");
  EXPECT_EQ(point_jordan_type(trivial_module(F3(), 3), pt(F3(), "1,2,0")).label(), "[1]");
  const EAModule d1k2 = block_model_d1(SymContext(3, 2), F3());
  EXPECT_EQ(point_jordan_type(d1k2, pt(F3(), "1,1")).label(), "[3][1]");
  EXPECT_EQ(point_jordan_type(extend_field(d1k2, F9()), pt(F9(), "w,1")).label(), "[2][2]");
}

TEST(Module, PointTypesMatchCountingOracle) {
  const std::vector<EAModule> pool = {block_model_d1(SymContext(3, 2), F3()), benson_module(F3(), F3().one(), F3().one()),
                                      linear_variety_module(F3(), 2, {{F3().one(), F3().element(2)}}),
                                      cyclic_module(F3(), type_from_blocks(3, {3, 2, 1}))};
  for (const auto& m : pool) {
    for (const auto& a : enumerate_projective(F3(), m.k())) {
      EXPECT_EQ(point_jordan_type(m, a).partition(), oracle::blocks_by_counting(x_alpha(m, a), 3));
    }
  }
}

TEST(Module, FreenessAndVariety) {
  const EAModule d2 = d_r(SymContext(3, 2), F3(), 2);
  EXPECT_TRUE(is_free_at(d2, pt(F3(), "1,1")));
  EXPECT_FALSE(is_free_at(extend_field(d2, F9()), pt(F9(), "w,1")));
  EXPECT_FALSE(is_free_at(trivial_module(F3(), 2), pt(F3(), "1,1")));

  EXPECT_TRUE(variety_contains(d2, Point{{F3().zero(), F3().zero()}, false}));
  EXPECT_FALSE(variety_contains(regular_module(F3(), 2), pt(F3(), "1,0")));
  const Fel lambda = F9().parse("w+1");
  const EAModule b = benson_module(F9(), lambda, F9().one());
  EXPECT_TRUE(variety_contains(b, Point{{F9().neg(lambda), F9().one()}, false}));
  EXPECT_FALSE(variety_contains(b, pt(F9(), "1,0")));
}

TEST(Module, SumTensorDual) {
  const EAModule a = block_model_d1(SymContext(3, 2), F3());
  const EAModule b = benson_module(F3(), F3().one(), F3().element(2));
  EXPECT_EQ(direct_sum(a, b).dim(), a.dim() + b.dim());
  EXPECT_EQ(tensor(trivial_module(F3(), 2), a), a);
  EXPECT_EQ(tensor(a, b).dim(), a.dim() * b.dim());
  EXPECT_EQ(dual(dual(a)), a);
  EXPECT_NO_THROW(validate(tensor(a, b)));
  EXPECT_NO_THROW(validate(dual(b)));
  // group matrices of the tensor product are Kronecker products
  for (unsigned i = 0; i < 2; ++i)
    EXPECT_EQ(tensor(a, b).group_matrix(i), kron(a.group_matrix(i), b.group_matrix(i)));
  EXPECT_EQ(code_of([&] { direct_sum(a, block_model_d1(SymContext(3, 3), F3())); }), ErrorCode::MismatchedContext);
}

TEST(Module, DualPreservesGroupMatrices) {
  const EAModule a = block_model_d1(SymContext(5, 2), FieldCtx::create(5, 1));
  const EAModule d = dual(a);
  for (unsigned i = 0; i < a.k(); ++i) {
    EXPECT_EQ(d.group_matrix(i) * a.group_matrix(i).transpose(), MatF::identity(a.field(), a.dim()));
  }
}

TEST(Module, WedgeExamples) {
  EXPECT_EQ(wedge(block_model_d1(SymContext(3, 3), F3()), 2).dim(), 21u);
  EXPECT_EQ(wedge(block_model_d1(SymContext(3, 2), F3()), 2).dim(), 6u);
  const EAModule w0 = wedge(block_model_d1(SymContext(3, 2), F3()), 0);
  EXPECT_EQ(w0, trivial_module(F3(), 2));
  const EAModule m = benson_module(F3(), F3().one(), F3().one());
  EXPECT_EQ(wedge(m, 1), m);
}

TEST(Module, WedgeMatchesOracle) {
  const EAModule m = block_model_d1(SymContext(3, 2), F3());
  const EAModule w = wedge(m, 2);
  for (unsigned i = 0; i < m.k(); ++i) EXPECT_EQ(w.group_matrix(i), wedge2_oracle(m.group_matrix(i)));
}

TEST(Module, WedgeJordanExamples) {
  EXPECT_EQ(wedge_jordan(type_from_blocks(3, {2, 2}), 2).label(), "[3][1][1][1]");
  EXPECT_EQ(wedge_jordan(type_from_blocks(3, {1}), 1).label(), "[1]");
  for (std::size_t m = 1; m <= 3; ++m) {
    const JordanType t = wedge_jordan(uniform_type(3, 3, m), 2);
    EXPECT_TRUE(t.is_free()) << t.label();
  }
  const JordanType t5 = wedge_jordan(uniform_type(5, 5, 2), 4);
  EXPECT_TRUE(t5.is_free()) << t5.label();
  EXPECT_EQ(t5.total(), 210u);
}

TEST(Module, WedgeJordanMatchesOracle) {
  const FieldCtx& f = F3();
  for (const auto& blocks : std::vector<std::vector<unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 1, 1}}) {
    const JordanType t = type_from_blocks(3, blocks);
    const MatF u = MatF::identity(f, t.total()) + canonical_nilpotent(f, t);
    const MatF x = wedge2_oracle(u) - MatF::identity(f, wedge2_oracle(u).rows());
    EXPECT_EQ(wedge_jordan(t, 2).partition(), oracle::blocks_by_counting(x, 3)) << t.label();
  }
}

TEST(Module, Restriction) {
  const EAModule b = benson_module(F3(), F3().zero(), F3().one());
  const EAModule r = restrict_to_subgroup(b, {{0, 1}});
  EXPECT_EQ(r.k(), 1u);
  EXPECT_EQ(point_jordan_type(r, pt(F3(), "1")).label(), "[2][1]");

  const EAModule d1 = block_model_d1(SymContext(3, 2), F3());
  EXPECT_EQ(restrict_to_subgroup(d1, {{1, 0}, {0, 1}}), d1);

  const EAModule reg = restrict_to_subgroup(regular_module(F3(), 2), {{1, 1}});
  EXPECT_EQ(point_jordan_type(reg, pt(F3(), "1")).label(), "[3][3][3]");
  EXPECT_EQ(code_of([&] { restrict_to_subgroup(d1, {{1, 1}, {2, 2}}); }), ErrorCode::DependentGenerators);
}

TEST(Module, Induction) {
  const EAModule ind = induce(trivial_module(F3(), 1), {{1, 1}}, 2);
  EXPECT_EQ(ind.dim(), 3u);
  EXPECT_NO_THROW(validate(ind));
  std::vector<Point> var;
  for (const auto& a : enumerate_projective(F3(), 2))
    if (!is_free_at(ind, a)) var.push_back(a);
  ASSERT_EQ(var.size(), 1u);
  EXPECT_EQ(format_point(F3(), var[0]), "(1,1)");

  EXPECT_EQ(induce(trivial_module(F3(), 2), {{1, 0}, {0, 1}}, 2), trivial_module(F3(), 2));
  const EAModule free = induce(trivial_module(F3(), 0), {}, 2);
  EXPECT_EQ(free.dim(), 9u);
  EXPECT_TRUE(projective_test(free).is_projective);
}

TEST(Module, InductionThenRestrictionContainsOriginal) {
  // Mackey: restricting ind_{E'} M back to E' has M as a summand, so the
  // restricted module's point types dominate those of M at every point
  const EAModule m = benson_module(F3(), F3().one(), F3().one());
  const EAModule ind = induce(m, {{1, 0, 0}, {0, 1, 0}}, 3);
  EXPECT_EQ(ind.dim(), 9u);
  const EAModule back = restrict_to_subgroup(ind, {{1, 0, 0}, {0, 1, 0}});
  for (const auto& a : enumerate_projective(F3(), 2)) {
    const auto t = point_jordan_type(back, a);
    const auto s = point_jordan_type(m, a);
    EXPECT_EQ(t.total(), 3 * s.total());
    for (unsigned size = 1; size <= 3; ++size) EXPECT_EQ(t.blocks(size), 3 * s.blocks(size));
  }
}

TEST(Module, LinearVarietyModule) {
  const EAModule l = linear_variety_module(F3(), 2, {{F3().one(), F3().one()}});
  EXPECT_EQ(l.dim(), 3u);
  std::vector<std::string> var;
  for (const auto& a : enumerate_projective(F3(), 2))
    if (!is_free_at(l, a)) var.push_back(format_point(F3(), a));
  EXPECT_EQ(var, (std::vector<std::string>{"(1,1)"}));

  const EAModule full = linear_variety_module(F3(), 2, {{F3().one(), F3().zero()}, {F3().zero(), F3().one()}});
  EXPECT_EQ(full.dim(), 1u);
  const EAModule none = linear_variety_module(F3(), 2, {});
  EXPECT_EQ(none.dim(), 9u);
  EXPECT_TRUE(projective_test(none).is_projective);
}

TEST(Module, Projectivity) {
  const auto reg = projective_test(regular_module(F3(), 2));
  EXPECT_TRUE(reg.is_projective);
  EXPECT_EQ(reg.free_summands, 1u);
  const auto d1 = projective_test(block_model_d1(SymContext(3, 2), F3()));
  EXPECT_FALSE(d1.is_projective);
  EXPECT_EQ(d1.free_summands, 0u);
  const auto mixed = projective_test(direct_sum(regular_module(F3(), 2), block_model_d1(SymContext(3, 2), F3())));
  EXPECT_FALSE(mixed.is_projective);
  EXPECT_EQ(mixed.free_summands, 1u);
}

TEST(Module, EndomorphismRings) {
  EXPECT_EQ(endomorphism_basis(trivial_module(F3(), 1)).size(), 1u);
  const EAModule j2 = cyclic_module(F3(), type_from_blocks(3, {2}));
  const auto e = endomorphism_basis(j2);
  EXPECT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0], MatF::identity(F3(), 2));
  EXPECT_EQ(endomorphism_basis(direct_sum(trivial_module(F3(), 1), trivial_module(F3(), 1))).size(), 4u);
  // every basis element commutes with the generators
  const EAModule d1 = block_model_d1(SymContext(3, 2), F3());
  for (const auto& y : endomorphism_basis(d1))
    for (const auto& x : d1.gens()) EXPECT_EQ(y * x, x * y);
}

TEST(Module, DecompositionExamples) {
  const EAModule s = direct_sum(cyclic_module(F3(), type_from_blocks(3, {1})), cyclic_module(F3(), type_from_blocks(3, {2})));
  const Decomposition d = fitting_decompose(s, 20, 7);
  EXPECT_EQ(d.status, DecomposeStatus::Decomposed);
  std::vector<std::size_t> dims;
  for (const auto& m : d.summands) dims.push_back(m.dim());
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 2}));

  const Decomposition d6 = fitting_decompose(wedge(block_model_d1(SymContext(3, 2), F9()), 2), 60, 7);
  ASSERT_EQ(d6.summands.size(), 2u);
  EXPECT_EQ(d6.summands[0].dim(), 3u);
  EXPECT_EQ(d6.summands[1].dim(), 3u);

  const Decomposition d21 = fitting_decompose(wedge(block_model_d1(SymContext(3, 3), F3()), 2), 60, 7);
  EXPECT_EQ(d21.status, DecomposeStatus::NoSplitFound);
  EXPECT_EQ(decompose_status_name(d21.status, 60), "NoSplitFound(60)");
}

TEST(Module, DecompositionReconstructsRandomSums) {
  CounterRng rng(31, 0);
  for (int t = 0; t < 10; ++t) {
    std::vector<EAModule> parts;
    std::vector<std::size_t> dims;
    const std::size_t count = 2 + rng.below(3);
    for (std::size_t i = 0; i < count; ++i) {
      const unsigned size = 1 + static_cast<unsigned>(rng.below(3));
      parts.push_back(cyclic_module(F3(), type_from_blocks(3, {size})));
      dims.push_back(size);
    }
    const EAModule m = direct_sum(parts);
    const Decomposition d = fitting_decompose(m, 40, static_cast<std::uint64_t>(t));
    std::vector<MatF> blocks;
    std::size_t total = 0;
    for (const auto& s : d.summands) {
      blocks.push_back(s.gen(0));
      total += s.dim();
    }
    EXPECT_EQ(total, m.dim());
    EXPECT_EQ(conjugate(m, d.basis).gen(0), block_diagonal(blocks));
  }
}

TEST(Module, PointParsing) {
  const Point a = parse_point(F9(), "1, 2w+1,w");
  ASSERT_EQ(a.coords.size(), 3u);
  EXPECT_EQ(a.coords[1], F9().parse("2w+1"));
  try {
    parse_point(F9(), "1,1,q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_EQ(format_point(F9(), normalize(F9(), parse_point(F9(), "2,2w").coords)), "(1,w)");
  EXPECT_EQ(code_of([&] { normalize(F9(), {F9().zero()}); }), ErrorCode::ZeroPoint);
}
