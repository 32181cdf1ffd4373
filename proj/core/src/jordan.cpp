#include "eamod/jordan.hpp"

#include <algorithm>

#include "eamod/error.hpp"

namespace eamod {

JordanType::JordanType(unsigned cap, std::vector<std::size_t> multiplicities)
    : p(cap), mult(std::move(multiplicities)) {
  if (mult.size() > p) fail(ErrorCode::BadParams, "block size exceeds cap");
  mult.resize(p, 0);
}

std::size_t JordanType::total() const {
  std::size_t t = 0;
  for (std::size_t r = 0; r < mult.size(); ++r) t += (r + 1) * mult[r];
  return t;
}

std::vector<unsigned> JordanType::partition() const {
  std::vector<unsigned> out;
  for (std::size_t r = mult.size(); r-- > 0;)
    for (std::size_t c = 0; c < mult[r]; ++c) out.push_back(static_cast<unsigned>(r + 1));
  return out;
}

std::string JordanType::label() const {
  std::string s;
  for (unsigned b : partition()) s += "[" + std::to_string(b) + "]";
  return s.empty() ? "[]" : s;
}

std::string JordanType::compact_label() const {
  std::string s;
  for (std::size_t r = mult.size(); r-- > 0;) {
    if (mult[r] == 0) continue;
    s += "[" + std::to_string(r + 1) + "]";
    if (mult[r] > 1) s += "^" + std::to_string(mult[r]);
  }
  return s.empty() ? "[]" : s;
}

bool JordanType::is_free() const {
  for (std::size_t r = 0; r + 1 < mult.size(); ++r) {
    if (mult[r] != 0) return false;
  }
  return true;
}

JordanType uniform_type(unsigned p, unsigned size, std::size_t count) {
  if (size < 1 || size > p) fail(ErrorCode::BadParams, "block size out of range");
  std::vector<std::size_t> m(p, 0);
  m[size - 1] = count;
  return JordanType(p, std::move(m));
}

JordanType type_from_blocks(unsigned p, const std::vector<unsigned>& blocks) {
  std::vector<std::size_t> m(p, 0);
  for (unsigned b : blocks) {
    if (b < 1 || b > p) fail(ErrorCode::BadParams, "block size out of range");
    ++m[b - 1];
  }
  return JordanType(p, std::move(m));
}

JordanType jordan_type_nilpotent(const MatF& n, unsigned p) {
  if (!n.is_square()) fail(ErrorCode::DimensionMismatch, "Jordan type of non-square matrix");
  if (p == 0) fail(ErrorCode::BadParams, "cap must be positive");
  const std::size_t dim = n.rows();
  // ranks[j] = rank(N^j), j = 0..p
  std::vector<std::size_t> ranks{dim};
  MatF power = MatF::identity(n.field(), dim);
  for (unsigned j = 1; j <= p; ++j) {
    if (ranks.back() == 0) {
      ranks.push_back(0);
      continue;
    }
    power = power * n;
    ranks.push_back(rank(power));
  }
  if (ranks[p] != 0) fail(ErrorCode::NotNilpotent, "N^p is nonzero");
  // b_j = number of blocks of size >= j
  std::vector<std::size_t> b(p + 2, 0);
  for (unsigned j = 1; j <= p; ++j) b[j] = ranks[j - 1] - ranks[j];
  std::vector<std::size_t> m(p, 0);
  for (unsigned j = 1; j <= p; ++j) m[j - 1] = b[j] - b[j + 1];
  return JordanType(p, std::move(m));
}

MatF canonical_nilpotent(const FieldCtx& field, const JordanType& t) {
  const std::size_t dim = t.total();
  MatF n(field, dim, dim);
  std::size_t offset = 0;
  for (unsigned b : t.partition()) {
    for (unsigned i = 1; i < b; ++i) n(offset + i, offset + i - 1) = field.one();
    offset += b;
  }
  return n;
}

std::string dominance_name(Dominance d) {
  switch (d) {
    case Dominance::Greater: return "Greater";
    case Dominance::Less: return "Less";
    case Dominance::Equal: return "Equal";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

Dominance dominance_compare(const JordanType& a, const JordanType& b) {
  if (a.total() != b.total()) fail(ErrorCode::UnequalTotals, "types have different totals");
  const auto pa = a.partition();
  const auto pb = b.partition();
  const std::size_t len = std::max(pa.size(), pb.size());
  std::size_t sa = 0;
  std::size_t sb = 0;
  bool ge = true;
  bool le = true;
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < pa.size() ? pa[i] : 0;
    sb += i < pb.size() ? pb[i] : 0;
    if (sa < sb) ge = false;
    if (sa > sb) le = false;
  }
  if (ge && le) return Dominance::Equal;
  if (ge) return Dominance::Greater;
  if (le) return Dominance::Less;
  return Dominance::Incomparable;
}

}  // namespace eamod
