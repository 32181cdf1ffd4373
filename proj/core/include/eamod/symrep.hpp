#pragma once

// The natural simple module D(1) of the symmetric group on kp letters,
// restricted to E_k = <g_1, ..., g_k> with g_i = ((i-1)p+1, ..., ip), and its
// exterior powers D(r).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eamod/modrep.hpp"

namespace eamod {

struct SymContext {
  unsigned p;
  unsigned k;

  /// Throws BadParams unless p is an odd prime and k >= 1.
  SymContext(unsigned p, unsigned k);
  unsigned n() const { return p * k; }
};

/// D(1) from the tabloid permutation module: e_j = t_j - t_1, modulo the
/// trivial submodule, on the basis ebar_3, ..., ebar_{kp} (ebar_2 is
/// eliminated through ebar_2 = -(ebar_3 + ... + ebar_{kp})).
EAModule perm_model_d1(const SymContext& ctx, const FieldCtx& field);

/// D(1) assembled directly on the chain basis
///   b_1, X_1 b_1, ..., X_1^{p-3} b_1, then b_i, X_i b_i, ..., X_i^{p-1} b_i for i = 2..k.
EAModule block_model_d1(const SymContext& ctx, const FieldCtx& field);

/// Columns are the chain basis vectors written in the ebar_3..ebar_{kp}
/// coordinates, from the closed formulas.
MatF basis_change_matrix(const SymContext& ctx, const FieldCtx& field);

/// True iff conjugating the permutation model by basis_change_matrix gives
/// the block model exactly. SingularBasis if the matrix is not invertible.
bool basis_change_check(const SymContext& ctx, const FieldCtx& field);

/// Columns obtained by applying the permutation-model generators to b_1 and
/// each b_i; an independent route to the same matrix.
MatF iterated_basis_matrix(const SymContext& ctx, const FieldCtx& field);

/// r-th exterior power of the block model.
EAModule d_r(const SymContext& ctx, const FieldCtx& field, std::size_t r);

/// p_k = sum_i (prod_{j != i} x_j)^{p-1}; p_1 = 1.
struct PkPoly {
  unsigned p;
  unsigned k;
};

Fel pk_eval(const PkPoly& poly, const FieldCtx& field, const std::vector<Fel>& alpha);

struct ClauseReport {
  std::string clause;
  std::size_t points_checked = 0;
  std::vector<Point> failures;
};

struct RankLemmaReport {
  bool sampled = false;
  std::size_t points = 0;
  std::vector<ClauseReport> clauses;
  bool passed() const;
};

/// Checks the four rank clauses on the block model at every nonzero affine
/// point (or a deterministic sample of `sample_cap` points when there are
/// more):
///   i    rank S = (k-1)(p-1)+p-3 iff all coordinates are nonzero
///   ii-a rank S^{p-3} = 3k-2 when all coordinates are nonzero
///   ii-b rank S^{p-2} = 2k-2 when all coordinates are nonzero
///   iii  rank S^{p-1} <= k-1, with equality iff p_k(alpha) != 0, when all
///        coordinates are nonzero
RankLemmaReport rank_lemma_check(const SymContext& ctx, const FieldCtx& field, std::size_t sample_cap = 5000,
                                 std::uint64_t seed = 0);

}  // namespace eamod
