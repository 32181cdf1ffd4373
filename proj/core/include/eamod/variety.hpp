#pragma once

// Rank varieties as finite point sets over F_{p^m}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eamod/modrep.hpp"
#include "eamod/symrep.hpp"

namespace eamod {

inline constexpr std::uint64_t kMaxPointWork = 10'000'000;

/// All normalized points of projective (k-1)-space in lexicographic order of
/// coordinate codes. TooLarge when q^k exceeds kMaxPointWork.
std::vector<Point> enumerate_projective(const FieldCtx& field, unsigned k);

struct PointRecord {
  Point point;
  JordanType type;
  bool free;
};

enum class SetVerdict { Equal, ProperSubset, Superset, Incomparable };

std::string verdict_name(SetVerdict v);

struct Comparison {
  SetVerdict verdict;
  std::vector<Point> only_in_first;
  std::vector<Point> only_in_second;
};

struct PointSetReport {
  FieldCtx field;
  unsigned k;
  std::vector<PointRecord> points;
  std::string target;  // empty when no comparison was made
  std::optional<Comparison> comparison;

  /// Projective points of the variety, i.e. the non-free ones.
  std::vector<Point> variety() const;
  std::size_t variety_count() const;
};

/// Classifies every projective point over `field`. A module over the prime
/// field is extended first; other field mismatches are MismatchedContext.
PointSetReport variety_points(const EAModule& m, const FieldCtx& field);

std::vector<Point> zero_points(const PkPoly& poly, const FieldCtx& field);
/// Affine zeros of p_k over `field`, the origin included.
std::uint64_t affine_zero_count(const PkPoly& poly, const FieldCtx& field);
/// Affine count 1 + (q-1) * (projective count).
std::uint64_t affine_count(std::size_t projective_points, const FieldCtx& field);

/// Compares two sets of normalized points.
Comparison compare_point_sets(std::vector<Point> first, std::vector<Point> second);
/// Compares the variety recorded in `report` with `target`.
Comparison compare_sets(const PointSetReport& report, const std::vector<Point>& target);

struct GenericResult {
  JordanType type;
  std::size_t attained = 0;  // samples of the returned type
  std::size_t samples = 0;
  unsigned ext_degree = 0;   // degree actually used
  bool inconclusive = false;
  std::vector<JordanType> observed;
};

/// Samples `trials` points with coordinates in F_{p^m}^x and returns the
/// dominance maximum of the observed types; sample i uses the stream
/// (seed, i). Retries once at degree m+2 when the top types are incomparable.
GenericResult generic_type(const EAModule& m, unsigned ext_degree, unsigned trials, std::uint64_t seed);

bool in_max_jordan_set(const EAModule& m, const Point& alpha, const JordanType& generic);

/// Scales coordinate i by gamma[i] (an element of F_p^x) and then moves
/// coordinate i to slot sigma[i] (0-based images).
Point wreath_act(const FieldCtx& field, const std::vector<Fel>& gamma, const std::vector<unsigned>& sigma,
                 const Point& alpha);

/// round(log(n_2m / n_m) / log(q)), q = p^m: the dimension of a variety whose
/// components are defined over F_q, from its affine point counts over F_q and
/// F_{q^2}. Heuristic; BadParams when n_m is zero.
unsigned dimension_estimate(std::uint64_t n_m, std::uint64_t n_2m, std::uint64_t q);

/// Subspaces of F_p^k with dimension in [min_dim, max_dim], each as its
/// reduced echelon basis. Ordered by dimension, then pivot set, then entries.
std::vector<std::vector<std::vector<std::uint64_t>>> enumerate_base_subspaces(unsigned p, unsigned k, unsigned min_dim,
                                                                              unsigned max_dim);

/// First variety point (in enumeration order) outside every proper subspace
/// spanned by F_p-rational vectors, if any.
std::optional<Point> green_witness(const EAModule& m, const FieldCtx& field);

/// Direct sum of one linear_variety_module per line of the plane.
/// DuplicateDirection if two directions agree projectively.
EAModule dv_rank2_builder(const FieldCtx& field, const std::vector<Point>& directions);

}  // namespace eamod
