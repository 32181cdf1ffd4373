#pragma once

// Exact arithmetic in F_p and F_{p^m}.
//
// An element of F_{p^m} = F_p[w]/(irr) is stored as its coefficient vector
// (c_0, ..., c_{m-1}) packed into one base-p integer, c_0 least significant.
// Fields up to kTableLimit elements use exp/log/Zech tables; larger fields
// fall back to schoolbook polynomial arithmetic.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eamod {

class Fel {
 public:
  constexpr Fel() = default;
  constexpr explicit Fel(std::uint64_t code) : code_(code) {}

  constexpr std::uint64_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr auto operator<=>(Fel, Fel) = default;

 private:
  std::uint64_t code_ = 0;
};

namespace detail {

inline constexpr std::uint32_t kNoLog = 0xffffffffu;

struct FieldData {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> irr;  // ascending, monic, length m + 1

  bool tables = false;
  std::vector<std::uint32_t> log;   // log[code], kNoLog for 0
  std::vector<std::uint32_t> exp;   // exp[i] for i in [0, 2(q-1))
  std::vector<std::uint32_t> zech;  // zech[d] = log(1 + g^d), kNoLog if zero
  std::vector<std::uint32_t> neg;   // additive inverse by code
  std::vector<std::uint64_t> pow_p; // p^i for i in [0, m]
};

}  // namespace detail

/// Immutable handle to F_{p^m}. Copies share the underlying tables.
class FieldCtx {
 public:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  /// The field F_{p^m} whose modulus is the lexicographically least monic
  /// irreducible of degree m, reading (a_{m-1}, ..., a_0) as a base-p number.
  /// Throws NonPrime or DegreeOutOfRange (1 <= m <= 8).
  static FieldCtx create(std::uint64_t p, unsigned m);

  /// Field with an explicit modulus (ascending coefficients, monic). Used when
  /// loading files; the modulus is checked for irreducibility.
  static FieldCtx from_modulus(std::uint64_t p, std::vector<std::uint64_t> irr);

  std::uint64_t p() const { return d_->p; }
  unsigned m() const { return d_->m; }
  std::uint64_t order() const { return d_->q; }
  const std::vector<std::uint64_t>& modulus() const { return d_->irr; }
  bool is_prime_field() const { return d_->m == 1; }

  Fel zero() const { return Fel(0); }
  Fel one() const { return Fel(1); }
  /// The class of x in F_p[x]/(irr); zero when m = 1.
  Fel generator() const;
  /// Element with the given code; codes enumerate the field as 0..q-1.
  Fel element(std::uint64_t code) const { return Fel(code); }

  Fel from_int(std::int64_t v) const;
  /// Reduces an arbitrary-length integer coefficient vector mod p and mod irr.
  Fel from_coeffs(std::span<const std::int64_t> coeffs) const;
  std::vector<std::uint64_t> coeffs(Fel a) const;
  bool in_prime_field(Fel a) const { return a.code() < d_->p; }

  Fel add(Fel a, Fel b) const {
    if (d_->m == 1) {
      const std::uint64_t s = a.code() + b.code();
      return Fel(s >= d_->p ? s - d_->p : s);
    }
    if (d_->tables) return add_tables(a, b);
    return add_slow(a, b);
  }

  Fel neg(Fel a) const {
    if (d_->m == 1) return Fel(a.code() == 0 ? 0 : d_->p - a.code());
    if (d_->tables) return Fel(d_->neg[a.code()]);
    return neg_slow(a);
  }

  Fel sub(Fel a, Fel b) const { return add(a, neg(b)); }

  Fel mul(Fel a, Fel b) const {
    if (a.code() == 0 || b.code() == 0) return Fel(0);
    // p < 2^31, so the product of two residues fits in 64 bits
    if (d_->m == 1) return Fel((a.code() * b.code()) % d_->p);
    if (d_->tables) {
      return Fel(d_->exp[d_->log[a.code()] + d_->log[b.code()]]);
    }
    return mul_slow(a, b);
  }

  /// Multiplicative inverse; a must be nonzero.
  Fel inv(Fel a) const;
  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
  Fel pow(Fel a, std::uint64_t e) const;

  /// Human-readable polynomial in w, highest power first ("2w^2+w+1").
  std::string format(Fel a) const;
  /// Inverse of format: a sum of terms c, cw, cw^e, w, w^e with optional
  /// signs. Throws ParseError with the character offset on bad input.
  Fel parse(std::string_view text) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->irr == b.d_->irr);
  }

 private:
  explicit FieldCtx(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

  Fel add_tables(Fel a, Fel b) const {
    if (a.code() == 0) return b;
    if (b.code() == 0) return a;
    const std::uint32_t la = d_->log[a.code()];
    const std::uint32_t lb = d_->log[b.code()];
    const std::uint64_t order = d_->q - 1;
    const std::uint64_t diff = lb >= la ? lb - la : lb + order - la;
    const std::uint32_t z = d_->zech[diff];
    if (z == detail::kNoLog) return Fel(0);
    return Fel(d_->exp[la + z]);
  }

  Fel add_slow(Fel a, Fel b) const;
  Fel neg_slow(Fel a) const;
  Fel mul_slow(Fel a, Fel b) const;

  std::shared_ptr<const detail::FieldData> d_;
};

/// Deterministic primality test for the sizes the library accepts.
bool is_prime(std::uint64_t n);

}  // namespace eamod
