#include "eamod/poly.hpp"

#include <algorithm>
#include <map>

#include "eamod/error.hpp"
#include "eamod/rng.hpp"

namespace eamod {

Poly::Poly(FieldCtx field, std::vector<Fel> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldCtx& field, Fel c) { return Poly(field, {c}); }

Poly Poly::x(const FieldCtx& field) { return Poly(field, {field.zero(), field.one()}); }

Poly Poly::monomial(const FieldCtx& field, Fel c, std::size_t degree) {
  std::vector<Fel> v(degree + 1, field.zero());
  v[degree] = c;
  return Poly(field, std::move(v));
}

Fel Poly::eval(Fel x) const {
  Fel acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_.inv(c_.back()));
}

Poly Poly::derivative() const {
  std::vector<Fel> d;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    d.push_back(field_.mul(field_.from_int(static_cast<std::int64_t>(i % field_.p())), c_[i]));
  }
  return Poly(field_, std::move(d));
}

Poly Poly::scaled(Fel s) const {
  std::vector<Fel> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], s);
  return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  const FieldCtx& F = a.field_;
  std::vector<Fel> v(std::max(a.c_.size(), b.c_.size()), F.zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  const FieldCtx& F = a.field_;
  std::vector<Fel> v(std::max(a.c_.size(), b.c_.size()), F.zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  const FieldCtx& F = a.field_;
  if (a.is_zero() || b.is_zero()) return Poly(F);
  std::vector<Fel> v(a.c_.size() + b.c_.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
    }
  }
  return Poly(F, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorCode::BadParams, "polynomial division by zero");
  const FieldCtx& F = a.field();
  if (a.degree() < b.degree()) return {Poly(F), a};
  std::vector<Fel> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Fel> quot(r.size() - db, F.zero());
  const Fel lead_inv = F.inv(b.lead());
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    const Fel c = F.mul(r[i], lead_inv);
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b.coeffs()[j]));
    }
  }
  r.resize(db);
  return {Poly(F, std::move(quot)), Poly(F, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus) {
  const FieldCtx& F = base.field();
  Poly result = divmod(Poly::constant(F, F.one()), modulus).second;
  Poly b = divmod(base, modulus).second;
  while (e) {
    if (e & 1) result = divmod(result * b, modulus).second;
    e >>= 1;
    if (e) b = divmod(b * b, modulus).second;
  }
  return result;
}

bool poly_is_irreducible(const Poly& f) {
  if (f.degree() < 1) fail(ErrorCode::BadParams, "irreducibility test needs degree >= 1");
  if (f.degree() == 1) return true;
  const FieldCtx& F = f.field();
  const Poly g = f.monic();
  const Poly x = Poly::x(F);
  Poly h = divmod(x, g).second;
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = powmod(h, F.order(), g);
    if (!gcd(g, h - x).is_one()) return false;
  }
  return true;
}

namespace {

// a -> a^{1/p}; the Frobenius inverse on F_{p^m} is a -> a^{p^{m-1}}.
Fel field_pth_root(const FieldCtx& F, Fel a) {
  std::uint64_t e = 1;
  for (unsigned i = 1; i < F.m(); ++i) e *= F.p();
  return F.pow(a, e);
}

Poly poly_pth_root(const Poly& f) {
  const FieldCtx& F = f.field();
  const auto p = F.p();
  std::vector<Fel> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(field_pth_root(F, f.coeffs()[i]));
  return Poly(F, std::move(v));
}

void square_free(const Poly& f, unsigned scale, std::vector<PolyFactor>& out) {
  const FieldCtx& F = f.field();
  if (f.degree() < 1) return;
  const Poly df = f.derivative();
  if (df.is_zero()) {
    square_free(poly_pth_root(f), scale * static_cast<unsigned>(F.p()), out);
    return;
  }
  Poly c = gcd(f, df);
  Poly w = divmod(f, c).first;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = divmod(w, y).first;
    if (z.degree() > 0) out.push_back({z.monic(), i * scale});
    ++i;
    w = y;
    c = divmod(c, y).first;
  }
  if (c.degree() > 0) square_free(poly_pth_root(c), scale * static_cast<unsigned>(F.p()), out);
}

Poly random_poly(const FieldCtx& F, int degree_below, CounterRng& rng) {
  std::vector<Fel> v(static_cast<std::size_t>(degree_below));
  for (auto& c : v) c = F.element(rng.below(F.order()));
  return Poly(F, std::move(v));
}

// Splits a monic square-free product of distinct degree-d irreducibles.
void equal_degree(const Poly& g, int d, CounterRng& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FieldCtx& F = g.field();
  const std::uint64_t q = F.order();
  for (;;) {
    const Poly a = random_poly(F, g.degree(), rng);
    if (a.degree() < 1) continue;
    Poly b(F);
    if (q % 2 == 1) {
      // a^{(q^d - 1)/2} = (a * a^q * ... * a^{q^{d-1}})^{(q-1)/2}
      Poly t = a;
      Poly acc = divmod(a, g).second;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, q, g);
        acc = divmod(acc * t, g).second;
      }
      b = powmod(acc, (q - 1) / 2, g) - Poly::constant(F, F.one());
    } else {
      // trace map a + a^2 + ... + a^{2^{md-1}}
      const auto bits = static_cast<int>(F.m()) * d;
      Poly t = divmod(a, g).second;
      b = t;
      for (int i = 1; i < bits; ++i) {
        t = divmod(t * t, g).second;
        b = b + t;
      }
    }
    const Poly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

bool coeff_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

}  // namespace

std::vector<PolyFactor> poly_factor(const Poly& f, std::uint64_t seed) {
  if (f.degree() < 1) fail(ErrorCode::BadParams, "factorization needs degree >= 1");
  const FieldCtx& F = f.field();
  CounterRng rng(seed, 0x666163746f72ULL);

  std::vector<PolyFactor> sqf;
  square_free(f.monic(), 1, sqf);

  std::vector<PolyFactor> result;
  const Poly x = Poly::x(F);
  for (const auto& [part, mult] : sqf) {
    // distinct-degree splitting
    Poly g = part;
    Poly h = divmod(x, g).second;
    for (int d = 1; g.degree() >= 2 * d; ++d) {
      h = powmod(h, F.order(), g);
      const Poly common = gcd(g, h - x);
      if (common.degree() > 0) {
        std::vector<Poly> pieces;
        equal_degree(common, d, rng, pieces);
        for (auto& piece : pieces) result.push_back({std::move(piece), mult});
        g = divmod(g, common).first;
        h = divmod(h, g).second;
      }
    }
    if (g.degree() > 0) result.push_back({g, mult});
  }

  // merge equal factors coming from different square-free layers
  std::sort(result.begin(), result.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return coeff_less(a.factor, b.factor); });
  std::vector<PolyFactor> merged;
  for (auto& pf : result) {
    if (!merged.empty() && merged.back().factor == pf.factor) {
      merged.back().multiplicity += pf.multiplicity;
    } else {
      merged.push_back(std::move(pf));
    }
  }
  return merged;
}

}  // namespace eamod
