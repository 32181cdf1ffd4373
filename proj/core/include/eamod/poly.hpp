#pragma once

// Univariate polynomials over a FieldCtx and their factorization.

#include <cstdint>
#include <utility>
#include <vector>

#include "eamod/gf.hpp"

namespace eamod {

class Poly {
 public:
  explicit Poly(FieldCtx field) : field_(std::move(field)) {}
  /// Ascending coefficients; trailing zeros are trimmed.
  Poly(FieldCtx field, std::vector<Fel> coeffs);

  static Poly constant(const FieldCtx& field, Fel c);
  static Poly x(const FieldCtx& field);
  static Poly monomial(const FieldCtx& field, Fel c, std::size_t degree);

  const FieldCtx& field() const { return field_; }
  const std::vector<Fel>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == field_.one(); }
  Fel lead() const { return c_.empty() ? field_.zero() : c_.back(); }
  Fel coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Fel eval(Fel x) const;

  Poly monic() const;
  Poly derivative() const;
  Poly scaled(Fel s) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim();

  FieldCtx field_;
  std::vector<Fel> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus);

/// True iff f (degree >= 1) has no factor of degree 1..deg/2, tested as
/// gcd(f, x^{q^d} - x) = 1 for each such d.
bool poly_is_irreducible(const Poly& f);

struct PolyFactor {
  Poly factor;  // monic irreducible
  unsigned multiplicity;
};

/// Complete factorization into monic irreducibles: square-free decomposition,
/// distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
/// driven by a counter-based stream keyed by seed. Output is sorted by degree
/// and then by ascending coefficient codes. The leading coefficient of f is
/// dropped.
std::vector<PolyFactor> poly_factor(const Poly& f, std::uint64_t seed);

}  // namespace eamod
