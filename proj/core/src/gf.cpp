#include "eamod/gf.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <utility>

#include "eamod/error.hpp"
#include "eamod/poly.hpp"

namespace eamod {
namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<u64> unpack(const detail::FieldData& d, u64 code) {
  std::vector<u64> c(d.m);
  for (unsigned i = 0; i < d.m; ++i) {
    c[i] = code % d.p;
    code /= d.p;
  }
  return c;
}

u64 pack(const detail::FieldData& d, const std::vector<u64>& c) {
  u64 code = 0;
  for (unsigned i = d.m; i-- > 0;) code = code * d.p + c[i];
  return code;
}

u64 slow_mul(const detail::FieldData& d, u64 a, u64 b) {
  const auto x = unpack(d, a);
  const auto y = unpack(d, b);
  const unsigned m = d.m;
  std::vector<u64> prod(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (!x[i]) continue;
    for (unsigned j = 0; j < m; ++j) {
      prod[i + j] = (prod[i + j] + mulmod(x[i], y[j], d.p)) % d.p;
    }
  }
  for (unsigned i = 2 * m - 1; i-- > m;) {
    const u64 c = prod[i];
    if (!c) continue;
    // subtract c * w^{i-m} * irr
    for (unsigned j = 0; j <= m; ++j) {
      const u64 t = mulmod(c, d.irr[j], d.p);
      u64& slot = prod[i - m + j];
      slot = (slot + d.p - t) % d.p;
    }
  }
  prod.resize(m);
  return pack(d, prod);
}

void build_tables(detail::FieldData& d) {
  const u64 order = d.q - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](u64 a, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1) r = slow_mul(d, r, a);
      a = slow_mul(d, a, a);
      e >>= 1;
    }
    return r;
  };
  u64 gen = 0;
  for (u64 cand = 2; cand < d.q; ++cand) {
    bool primitive = true;
    for (u64 f : factors) {
      if (slow_pow(cand, order / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = cand;
      break;
    }
  }
  d.log.assign(d.q, detail::kNoLog);
  d.exp.assign(2 * order, 0);
  u64 x = 1;
  for (u64 i = 0; i < order; ++i) {
    d.exp[i] = static_cast<std::uint32_t>(x);
    d.exp[i + order] = static_cast<std::uint32_t>(x);
    d.log[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(d, x, gen);
  }
  d.neg.assign(d.q, 0);
  for (u64 c = 0; c < d.q; ++c) {
    auto digits = unpack(d, c);
    for (auto& v : digits) v = v ? d.p - v : 0;
    d.neg[c] = static_cast<std::uint32_t>(pack(d, digits));
  }
  d.zech.assign(order, detail::kNoLog);
  for (u64 i = 0; i < order; ++i) {
    auto digits = unpack(d, d.exp[i]);
    digits[0] = (digits[0] + 1) % d.p;
    const u64 s = pack(d, digits);
    d.zech[i] = s == 0 ? detail::kNoLog : d.log[s];
  }
  d.tables = true;
}

std::shared_ptr<detail::FieldData> make_data(u64 p, std::vector<u64> irr) {
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->m = static_cast<unsigned>(irr.size() - 1);
  d->irr = std::move(irr);
  d->pow_p.assign(d->m + 1, 1);
  for (unsigned i = 1; i <= d->m; ++i) d->pow_p[i] = d->pow_p[i - 1] * p;
  d->q = d->pow_p[d->m];
  if (d->m >= 2 && d->q <= FieldCtx::kTableLimit) build_tables(*d);
  return d;
}

void check_prime_and_degree(u64 p, unsigned m) {
  if (!is_prime(p)) fail(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (p >= (u64{1} << 31)) fail(ErrorCode::DegreeOutOfRange, "prime too large: " + std::to_string(p));
  if (m < 1 || m > 8) fail(ErrorCode::DegreeOutOfRange, "extension degree " + std::to_string(m));
  u128 q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q >= (u128{1} << 62)) {
      fail(ErrorCode::DegreeOutOfRange, "field order exceeds 2^62");
    }
  }
}

std::mutex cache_mutex;
std::map<std::pair<u64, std::vector<u64>>, std::shared_ptr<const detail::FieldData>> cache;

std::shared_ptr<const detail::FieldData> cached(u64 p, const std::vector<u64>& irr) {
  std::lock_guard lock(cache_mutex);
  auto key = std::make_pair(p, irr);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto d = make_data(p, irr);
  cache.emplace(std::move(key), d);
  return d;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 f : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % f == 0) return n == f;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldCtx FieldCtx::create(std::uint64_t p, unsigned m) {
  check_prime_and_degree(p, m);
  if (m == 1) return FieldCtx(cached(p, {0, 1}));
  const FieldCtx base = create(p, 1);
  // Walk (a_{m-1}, ..., a_0) in base-p order; a_0 is the least significant digit.
  u64 limit = 1;
  for (unsigned i = 0; i < m; ++i) limit *= p;
  for (u64 n = 0; n < limit; ++n) {
    std::vector<Fel> c(m + 1);
    u64 rest = n;
    for (unsigned i = 0; i < m; ++i) {
      c[i] = Fel(rest % p);
      rest /= p;
    }
    c[m] = base.one();
    if (c[0].is_zero()) continue;  // divisible by x
    if (!poly_is_irreducible(Poly(base, c))) continue;
    std::vector<u64> irr(m + 1);
    for (unsigned i = 0; i <= m; ++i) irr[i] = c[i].code();
    return FieldCtx(cached(p, irr));
  }
  fail(ErrorCode::DegreeOutOfRange, "no irreducible polynomial found");
}

FieldCtx FieldCtx::from_modulus(std::uint64_t p, std::vector<std::uint64_t> irr) {
  if (irr.size() < 2) fail(ErrorCode::FormatError, "modulus must have degree >= 1");
  const unsigned m = static_cast<unsigned>(irr.size() - 1);
  check_prime_and_degree(p, m);
  if (irr.back() != 1) fail(ErrorCode::FormatError, "modulus must be monic");
  for (u64 c : irr) {
    if (c >= p) fail(ErrorCode::FormatError, "modulus coefficient out of range");
  }
  if (m == 1) {
    if (irr[0] != 0) fail(ErrorCode::FormatError, "prime field modulus must be x");
    return FieldCtx(cached(p, irr));
  }
  const FieldCtx base = create(p, 1);
  std::vector<Fel> c;
  for (u64 v : irr) c.emplace_back(v);
  if (!poly_is_irreducible(Poly(base, c))) {
    fail(ErrorCode::FormatError, "modulus is not irreducible");
  }
  return FieldCtx(cached(p, irr));
}

Fel FieldCtx::generator() const { return d_->m == 1 ? Fel(0) : Fel(d_->p); }

Fel FieldCtx::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(d_->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Fel(static_cast<u64>(r));
}

Fel FieldCtx::from_coeffs(std::span<const std::int64_t> coeffs) const {
  Fel acc = zero();
  Fel power = one();
  const Fel w = generator();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    acc = add(acc, mul(from_int(coeffs[i]), power));
    power = mul(power, w);
  }
  return acc;
}

std::vector<std::uint64_t> FieldCtx::coeffs(Fel a) const { return unpack(*d_, a.code()); }

Fel FieldCtx::add_slow(Fel a, Fel b) const {
  auto x = unpack(*d_, a.code());
  const auto y = unpack(*d_, b.code());
  for (unsigned i = 0; i < d_->m; ++i) {
    x[i] += y[i];
    if (x[i] >= d_->p) x[i] -= d_->p;
  }
  return Fel(pack(*d_, x));
}

Fel FieldCtx::neg_slow(Fel a) const {
  auto x = unpack(*d_, a.code());
  for (auto& v : x) v = v ? d_->p - v : 0;
  return Fel(pack(*d_, x));
}

Fel FieldCtx::mul_slow(Fel a, Fel b) const { return Fel(slow_mul(*d_, a.code(), b.code())); }

Fel FieldCtx::inv(Fel a) const {
  if (a.is_zero()) fail(ErrorCode::BadParams, "inverse of zero");
  if (d_->m == 1) return Fel(powmod(a.code(), d_->p - 2, d_->p));
  if (d_->tables) {
    const u64 order = d_->q - 1;
    const u64 l = d_->log[a.code()];
    return Fel(d_->exp[l == 0 ? 0 : order - l]);
  }
  return pow(a, d_->q - 2);
}

Fel FieldCtx::pow(Fel a, std::uint64_t e) const {
  Fel r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string FieldCtx::format(Fel a) const {
  const auto c = coeffs(a);
  std::string out;
  for (unsigned i = d_->m; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += 'w';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Fel FieldCtx::parse(std::string_view text) const {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_uint = [&](std::string_view what) -> u64 {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError(pos, std::string("expected ") + std::string(what));
    }
    u64 v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const u64 digit = static_cast<u64>(text[pos] - '0');
      if (v > (~u64{0} - digit) / 10) throw ParseError(pos, "integer overflow");
      v = v * 10 + digit;
      ++pos;
    }
    return v;
  };

  Fel acc = zero();
  const Fel w = generator();
  bool first = true;
  skip_space();
  if (pos == text.size()) throw ParseError(pos, "empty element");
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_space();
    } else if (!first) {
      throw ParseError(pos, "expected '+' or '-'");
    }
    first = false;
    Fel coeff = one();
    bool have_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = Fel(read_uint("integer") % d_->p);
      have_coeff = true;
      skip_space();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_space();
        if (pos >= text.size() || text[pos] != 'w') throw ParseError(pos, "expected 'w' after '*'");
      }
    }
    Fel term = coeff;
    if (pos < text.size() && text[pos] == 'w') {
      ++pos;
      u64 e = 1;
      skip_space();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_space();
        e = read_uint("exponent");
      }
      term = mul(coeff, pow(w, e));
    } else if (!have_coeff) {
      throw ParseError(pos, "expected integer or 'w'");
    }
    acc = negative ? sub(acc, term) : add(acc, term);
    skip_space();
  }
  return acc;
}

}  // namespace eamod
