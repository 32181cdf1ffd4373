#include "eamod/symrep.hpp"

#include "eamod/error.hpp"
#include "eamod/parallel.hpp"
#include "eamod/rng.hpp"

namespace eamod {

SymContext::SymContext(unsigned p_, unsigned k_) : p(p_), k(k_) {
  if (p < 3 || !is_prime(p)) fail(ErrorCode::BadParams, "p must be an odd prime");
  if (k < 1) fail(ErrorCode::BadParams, "k must be at least 1");
}

namespace {

// ebar_j (1-based tabloid index j) in the ebar_3..ebar_{kp} coordinates
Vec ebar(const SymContext& ctx, const FieldCtx& F, unsigned j) {
  Vec v(ctx.n() - 2, F.zero());
  if (j == 2) {
    for (auto& x : v) x = F.neg(F.one());
  } else if (j >= 3) {
    v[j - 3] = F.one();
  }
  return v;
}

void axpy(const FieldCtx& F, Vec& y, Fel a, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = F.add(y[i], F.mul(a, x[i]));
}

// image of tabloid index s under g_i (both 1-based)
unsigned cycle_image(const SymContext& ctx, unsigned i, unsigned s) {
  const unsigned lo = (i - 1) * ctx.p + 1;
  const unsigned hi = i * ctx.p;
  if (s < lo || s > hi) return s;
  return s == hi ? lo : s + 1;
}

std::int64_t binom(unsigned n, unsigned r) {
  if (r > n) return 0;
  std::int64_t c = 1;
  for (unsigned i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
  return c;
}

std::int64_t sign(int e) { return e % 2 == 0 ? 1 : -1; }

unsigned offset_of_block(const SymContext& ctx, unsigned i) { return (ctx.p - 2) + (i - 2) * ctx.p; }

}  // namespace

EAModule perm_model_d1(const SymContext& ctx, const FieldCtx& field) {
  if (field.p() != ctx.p) fail(ErrorCode::MismatchedContext, "field characteristic differs from p");
  const std::size_t dim = ctx.n() - 2;
  std::vector<MatF> gens;
  for (unsigned i = 1; i <= ctx.k; ++i) {
    MatF g(field, dim, dim);
    const unsigned image_of_1 = cycle_image(ctx, i, 1);
    for (unsigned j = 3; j <= ctx.n(); ++j) {
      // g e_j = e_{g j} - e_{g 1}
      Vec col = ebar(ctx, field, cycle_image(ctx, i, j));
      axpy(field, col, field.neg(field.one()), ebar(ctx, field, image_of_1));
      for (std::size_t r = 0; r < dim; ++r) g(r, j - 3) = col[r];
    }
    gens.push_back(g - MatF::identity(field, dim));
  }
  return EAModule(field, dim, std::move(gens));
}

EAModule block_model_d1(const SymContext& ctx, const FieldCtx& field) {
  if (field.p() != ctx.p) fail(ErrorCode::MismatchedContext, "field characteristic differs from p");
  const unsigned p = ctx.p;
  const std::size_t dim = ctx.n() - 2;
  std::vector<MatF> gens(ctx.k, MatF(field, dim, dim));
  MatF& x1 = gens[0];
  for (unsigned r = 0; r + 1 < p - 2; ++r) x1(r + 1, r) = field.one();
  for (unsigned i = 2; i <= ctx.k; ++i) {
    const unsigned off = offset_of_block(ctx, i);
    x1(off + p - 1, p - 3) = field.one();  // X_1^{p-2} b_1 = sum_i X_i^{p-1} b_i
    x1(0, off) = field.one();              // X_1 b_i = b_1
    MatF& xi = gens[i - 1];
    for (unsigned r = 0; r + 1 < p; ++r) xi(off + r + 1, off + r) = field.one();
  }
  return EAModule(field, dim, std::move(gens));
}

MatF basis_change_matrix(const SymContext& ctx, const FieldCtx& field) {
  const unsigned p = ctx.p;
  const std::size_t dim = ctx.n() - 2;
  std::vector<Vec> cols;
  for (unsigned r = 0; r + 2 <= p - 1; ++r) {
    Vec v(dim, field.zero());
    if (r == p - 3) {
      for (unsigned s = 1; s <= p - 2; ++s) axpy(field, v, field.from_int(s), ebar(ctx, field, s + 2));
    } else {
      for (unsigned s = 1; s <= r + 2; ++s) {
        const std::int64_t c = sign(static_cast<int>(r) - static_cast<int>(s) + 3) * binom(r + 1, s - 1);
        axpy(field, v, field.from_int(c), ebar(ctx, field, s + 2));
      }
    }
    cols.push_back(std::move(v));
  }
  for (unsigned i = 2; i <= ctx.k; ++i) {
    const unsigned base = (i - 1) * p;  // ebar_{i,s} = ebar_{base + s}
    for (unsigned r = 0; r < p; ++r) {
      Vec v(dim, field.zero());
      if (r == 0) {
        axpy(field, v, field.one(), ebar(ctx, field, base + 1));
        axpy(field, v, field.neg(field.one()), ebar(ctx, field, 3));
      } else {
        for (unsigned s = 1; s <= r + 1; ++s) {
          const std::int64_t c = sign(static_cast<int>(r) - static_cast<int>(s) + 1) * binom(r, s - 1);
          axpy(field, v, field.from_int(c), ebar(ctx, field, base + s));
        }
      }
      cols.push_back(std::move(v));
    }
  }
  return MatF::from_columns(field, dim, cols);
}

MatF iterated_basis_matrix(const SymContext& ctx, const FieldCtx& field) {
  const unsigned p = ctx.p;
  const std::size_t dim = ctx.n() - 2;
  const EAModule perm = perm_model_d1(ctx, field);
  std::vector<Vec> cols;
  Vec b1 = ebar(ctx, field, 3);
  if (p > 3) axpy(field, b1, field.neg(field.one()), ebar(ctx, field, 4));
  for (unsigned r = 0; r + 2 <= p - 1; ++r) {
    cols.push_back(b1);
    b1 = perm.gen(0).apply(b1);
  }
  for (unsigned i = 2; i <= ctx.k; ++i) {
    Vec b = ebar(ctx, field, (i - 1) * p + 1);
    axpy(field, b, field.neg(field.one()), ebar(ctx, field, 3));
    for (unsigned r = 0; r < p; ++r) {
      cols.push_back(b);
      b = perm.gen(i - 1).apply(b);
    }
  }
  return MatF::from_columns(field, dim, cols);
}

bool basis_change_check(const SymContext& ctx, const FieldCtx& field) {
  const MatF b = basis_change_matrix(ctx, field);
  if (!inverse(b)) fail(ErrorCode::SingularBasis, "chain basis is not a basis");
  return conjugate(perm_model_d1(ctx, field), b) == block_model_d1(ctx, field);
}

EAModule d_r(const SymContext& ctx, const FieldCtx& field, std::size_t r) {
  if (r > ctx.n() - 2) fail(ErrorCode::BadParams, "r exceeds kp-2");
  return wedge(block_model_d1(ctx, field), r);
}

Fel pk_eval(const PkPoly& poly, const FieldCtx& field, const std::vector<Fel>& alpha) {
  if (alpha.size() != poly.k) fail(ErrorCode::DimensionMismatch, "point has wrong number of coordinates");
  if (poly.k == 1) return field.one();
  Fel sum = field.zero();
  for (unsigned i = 0; i < poly.k; ++i) {
    Fel prod = field.one();
    for (unsigned j = 0; j < poly.k; ++j) {
      if (j != i) prod = field.mul(prod, alpha[j]);
    }
    sum = field.add(sum, field.pow(prod, poly.p - 1));
  }
  return sum;
}

bool RankLemmaReport::passed() const {
  for (const auto& c : clauses) {
    if (!c.failures.empty()) return false;
  }
  return true;
}

RankLemmaReport rank_lemma_check(const SymContext& ctx, const FieldCtx& field, std::size_t sample_cap,
                                 std::uint64_t seed) {
  if (ctx.k < 2) fail(ErrorCode::BadParams, "rank clauses need k >= 2");
  const unsigned p = ctx.p;
  const unsigned k = ctx.k;
  const std::uint64_t q = field.order();
  const EAModule block = block_model_d1(ctx, field);

  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (total > (std::uint64_t{1} << 40) / q) fail(ErrorCode::TooLarge, "affine space too large");
    total *= q;
  }
  --total;  // nonzero points only
  const bool sampled = total > sample_cap;
  const std::size_t count = sampled ? sample_cap : static_cast<std::size_t>(total);

  auto point_at = [&](std::size_t idx) {
    std::uint64_t code;
    if (sampled) {
      CounterRng rng(seed, idx);
      code = 1 + rng.below(total);
    } else {
      code = idx + 1;
    }
    std::vector<Fel> c(k);
    for (unsigned i = k; i-- > 0;) {
      c[i] = field.element(code % q);
      code /= q;
    }
    return Point{std::move(c), false};
  };

  // per point: bit 0..3 = failure of clause i, ii-a, ii-b, iii; bit 4 = all nonzero
  std::vector<unsigned> flags(count, 0);
  parallel_for(count, [&](std::size_t idx) {
    const Point a = point_at(idx);
    const MatF s = x_alpha(block, a);
    bool all_nonzero = true;
    for (Fel c : a.coords) all_nonzero = all_nonzero && !c.is_zero();
    std::vector<std::size_t> ranks{block.dim()};
    MatF power = MatF::identity(field, block.dim());
    for (unsigned j = 1; j < p; ++j) {
      power = power * s;
      ranks.push_back(rank(power));
    }
    unsigned f = all_nonzero ? 16u : 0u;
    const std::size_t bound = (k - 1) * (p - 1) + p - 3;
    if (ranks[1] > bound || (ranks[1] == bound) != all_nonzero) f |= 1;
    if (all_nonzero) {
      if (ranks[p - 3] != 3 * k - 2) f |= 2;
      if (ranks[p - 2] != 2 * k - 2) f |= 4;
      const bool pk_nonzero = !pk_eval(PkPoly{p, k}, field, a.coords).is_zero();
      if (ranks[p - 1] > k - 1 || (ranks[p - 1] == k - 1) != pk_nonzero) f |= 8;
    }
    flags[idx] = f;
  });

  RankLemmaReport rep;
  rep.sampled = sampled;
  rep.points = count;
  const char* names[] = {"i", "ii-a", "ii-b", "iii"};
  for (unsigned c = 0; c < 4; ++c) rep.clauses.push_back({names[c], 0, {}});
  for (std::size_t idx = 0; idx < count; ++idx) {
    const bool all_nonzero = flags[idx] & 16u;
    for (unsigned c = 0; c < 4; ++c) {
      if (c > 0 && !all_nonzero) continue;
      ++rep.clauses[c].points_checked;
      if (flags[idx] & (1u << c)) rep.clauses[c].failures.push_back(point_at(idx));
    }
  }
  return rep;
}

}  // namespace eamod
