#pragma once

// Jordan types of nilpotent matrices, read off from rank sequences.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eamod/linalg.hpp"

namespace eamod {

struct JordanType {
  unsigned p = 0;
  /// mult[r-1] = number of blocks of size r, for r = 1..p.
  std::vector<std::size_t> mult;

  JordanType() = default;
  JordanType(unsigned cap, std::vector<std::size_t> multiplicities);

  std::size_t total() const;
  std::size_t blocks(unsigned size) const { return size >= 1 && size <= mult.size() ? mult[size - 1] : 0; }
  /// Block sizes in non-increasing order.
  std::vector<unsigned> partition() const;
  /// "[3][3][1]"; the empty type prints as "[]".
  std::string label() const;
  /// "[3]^2[1]" style with exponents.
  std::string compact_label() const;
  /// True iff every block has size p.
  bool is_free() const;

  friend bool operator==(const JordanType&, const JordanType&) = default;
};

/// Type with `count` blocks of size `size` and nothing else.
JordanType uniform_type(unsigned p, unsigned size, std::size_t count);
/// Builds a type from a list of block sizes, each in 1..p.
JordanType type_from_blocks(unsigned p, const std::vector<unsigned>& blocks);

/// Throws NotNilpotent when N^p != 0.
JordanType jordan_type_nilpotent(const MatF& n, unsigned p);

/// Block-diagonal matrix of Jordan blocks (ones on the subdiagonal), largest
/// block first.
MatF canonical_nilpotent(const FieldCtx& field, const JordanType& t);

enum class Dominance { Greater, Less, Equal, Incomparable };

std::string dominance_name(Dominance d);

/// Dominance order on the associated partitions; UnequalTotals if the types
/// describe spaces of different dimension.
Dominance dominance_compare(const JordanType& a, const JordanType& b);

}  // namespace eamod
