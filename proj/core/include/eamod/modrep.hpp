#pragma once

// Modules over the group algebra F E of an elementary abelian p-group
// E = <g_1, ..., g_k>, given by the nilpotent generators X_i = g_i - 1.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eamod/gf.hpp"
#include "eamod/jordan.hpp"
#include "eamod/linalg.hpp"

namespace eamod {

class EAModule {
 public:
  /// k = gens.size(); every generator must be dim x dim over field. The
  /// commuting and nilpotency invariants are checked by validate().
  EAModule(FieldCtx field, std::size_t dim, std::vector<MatF> gens);

  unsigned p() const { return static_cast<unsigned>(field_.p()); }
  unsigned k() const { return static_cast<unsigned>(gens_.size()); }
  std::size_t dim() const { return dim_; }
  const FieldCtx& field() const { return field_; }
  const std::vector<MatF>& gens() const { return gens_; }
  const MatF& gen(std::size_t i) const { return gens_.at(i); }
  /// u_i = I + X_i.
  MatF group_matrix(std::size_t i) const;

  friend bool operator==(const EAModule&, const EAModule&) = default;

 private:
  FieldCtx field_;
  std::size_t dim_;
  std::vector<MatF> gens_;
};

/// Affine representative of a point of k-space.
struct Point {
  std::vector<Fel> coords;
  bool normalized = false;

  bool is_zero() const;
  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
  friend auto operator<=>(const Point& a, const Point& b) { return a.coords <=> b.coords; }
};

/// Scales so the first nonzero coordinate is 1; ZeroPoint for the origin.
Point normalize(const FieldCtx& field, std::vector<Fel> coords);
/// "(1,2w+1)" using FieldCtx::format.
std::string format_point(const FieldCtx& field, const Point& a);
/// Comma separated coordinates in the FieldCtx::parse grammar. Parse errors
/// report offsets into the whole string.
Point parse_point(const FieldCtx& field, std::string_view text);

/// Throws NonCommuting or NotNilpotent naming the generators involved.
void validate(const EAModule& m);

MatF x_alpha(const EAModule& m, const Point& alpha);
JordanType point_jordan_type(const EAModule& m, const Point& alpha);
bool is_free_at(const EAModule& m, const Point& alpha);
/// True at the origin, otherwise !is_free_at.
bool variety_contains(const EAModule& m, const Point& alpha);

// Standard modules.
EAModule zero_module(const FieldCtx& field, unsigned k);
EAModule trivial_module(const FieldCtx& field, unsigned k);
/// F E as F[X_1..X_k]/(X_i^p), monomials ordered with X_1 outermost.
EAModule regular_module(const FieldCtx& field, unsigned k);
/// Rank-1 module whose generator is the canonical nilpotent of type t.
EAModule cyclic_module(const FieldCtx& field, const JordanType& t);
/// Three-dimensional module with X_1 = J and X_2 = lambda J + mu J^2, where J
/// is the 3x3 lower shift.
EAModule benson_module(const FieldCtx& field, Fel lambda, Fel mu);

/// Reinterprets a module over F_p in an extension of the same characteristic.
EAModule extend_field(const EAModule& m, const FieldCtx& target);
/// Generators P^{-1} X_i P.
EAModule conjugate(const EAModule& m, const MatF& p);

EAModule direct_sum(const EAModule& a, const EAModule& b);
EAModule direct_sum(const std::vector<EAModule>& parts);
/// Diagonal action: u_i = u_i^A (x) u_i^B.
EAModule tensor(const EAModule& a, const EAModule& b);
/// Contragredient: u_i = (u_i^{-1})^T.
EAModule dual(const EAModule& m);
/// r-th exterior power on the basis of r-subsets in lexicographic order.
EAModule wedge(const EAModule& m, std::size_t r);
/// Jordan type of the r-th exterior power of a single nilpotent of type t.
JordanType wedge_jordan(const JordanType& t, std::size_t r);

/// Restriction to the subgroup generated by prod_i g_i^{w_ji}, j = 1..s.
/// Exponent vectors must be independent over F_p.
EAModule restrict_to_subgroup(const EAModule& m, const std::vector<std::vector<std::uint64_t>>& w);

/// Induction from the subgroup E' = <prod_i g_i^{v_ji}> of a rank-k group, where
/// m is a module for E' with generator j attached to vector v_j. The result
/// acts on F E'' (x) M for a complement E'' spanned by standard vectors.
EAModule induce(const EAModule& m, const std::vector<std::vector<std::uint64_t>>& embed, unsigned k);

/// Module of dimension p^{k-r} whose rank variety is span(w): the truncated
/// polynomial algebra F[Y_1..Y_{k-r}]/(Y^p) with X_i = sum_j d_{ji} Y_j, where
/// the d_j span the annihilator of w.
EAModule linear_variety_module(const FieldCtx& field, unsigned k, const std::vector<std::vector<Fel>>& w);

struct ProjectiveResult {
  bool is_projective;
  std::size_t free_summands;
};

/// Free summands counted as the rank of z = prod_i X_i^{p-1}.
ProjectiveResult projective_test(const EAModule& m);

/// Basis of {Y : Y X_i = X_i Y for all i}; the identity comes first.
std::vector<MatF> endomorphism_basis(const EAModule& m);

enum class DecomposeStatus { Decomposed, NoSplitFound };

struct Decomposition {
  std::vector<EAModule> summands;
  DecomposeStatus status = DecomposeStatus::NoSplitFound;
  unsigned trials = 0;
  /// P with P^{-1} X_i P = block_diagonal of the summand generators.
  MatF basis;
};

std::string decompose_status_name(DecomposeStatus s, unsigned trials);

/// Randomized Fitting decomposition: for each summand, up to `trials` random
/// endomorphisms are tried; one whose minimal polynomial has two coprime
/// factors splits the summand into the two kernels. NoSplitFound is evidence
/// of indecomposability, not proof.
Decomposition fitting_decompose(const EAModule& m, unsigned trials, std::uint64_t seed);

}  // namespace eamod
