#include "eamod/modrep.hpp"

#include <algorithm>
#include <numeric>

#include "eamod/error.hpp"
#include "eamod/poly.hpp"
#include "eamod/rng.hpp"

namespace eamod {

EAModule::EAModule(FieldCtx field, std::size_t dim, std::vector<MatF> gens)
    : field_(std::move(field)), dim_(dim), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    if (g.rows() != dim_ || g.cols() != dim_) fail(ErrorCode::DimensionMismatch, "generator size differs from dim");
    if (!(g.field() == field_)) fail(ErrorCode::MismatchedContext, "generator over a different field");
  }
}

MatF EAModule::group_matrix(std::size_t i) const { return MatF::identity(field_, dim_) + gens_.at(i); }

bool Point::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](Fel a) { return a.is_zero(); });
}

Point normalize(const FieldCtx& field, std::vector<Fel> coords) {
  auto lead = std::find_if(coords.begin(), coords.end(), [](Fel a) { return !a.is_zero(); });
  if (lead == coords.end()) fail(ErrorCode::ZeroPoint, "cannot normalize the origin");
  const Fel inv = field.inv(*lead);
  for (auto& c : coords) c = field.mul(c, inv);
  return Point{std::move(coords), true};
}

std::string format_point(const FieldCtx& field, const Point& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (i) s += ",";
    s += field.format(a.coords[i]);
  }
  return s + ")";
}

Point parse_point(const FieldCtx& field, std::string_view text) {
  Point pt;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    try {
      pt.coords.push_back(field.parse(text.substr(start, end - start)));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), e.reason());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return pt;
}

void validate(const EAModule& m) {
  const auto& g = m.gens();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!(g[i] * g[j] == g[j] * g[i])) {
        fail(ErrorCode::NonCommuting, "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
      }
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].pow(m.p()).is_zero()) fail(ErrorCode::NotNilpotent, "generator " + std::to_string(i + 1));
  }
}

MatF x_alpha(const EAModule& m, const Point& alpha) {
  if (alpha.coords.size() != m.k()) fail(ErrorCode::DimensionMismatch, "point has wrong number of coordinates");
  if (alpha.is_zero()) fail(ErrorCode::ZeroPoint, "x_alpha at the origin");
  MatF x(m.field(), m.dim(), m.dim());
  for (std::size_t i = 0; i < m.k(); ++i) {
    if (!alpha.coords[i].is_zero()) x = x + m.gen(i).scaled(alpha.coords[i]);
  }
  return x;
}

JordanType point_jordan_type(const EAModule& m, const Point& alpha) {
  return jordan_type_nilpotent(x_alpha(m, alpha), m.p());
}

bool is_free_at(const EAModule& m, const Point& alpha) {
  const MatF x = x_alpha(m, alpha);
  const unsigned p = m.p();
  if (m.dim() % p != 0) return false;
  MatF power = x;
  for (unsigned j = 2; j < p; ++j) power = power * x;
  return rank(power) == m.dim() / p;
}

bool variety_contains(const EAModule& m, const Point& alpha) {
  if (alpha.is_zero()) return true;
  return !is_free_at(m, alpha);
}

EAModule zero_module(const FieldCtx& field, unsigned k) {
  return EAModule(field, 0, std::vector<MatF>(k, MatF(field, 0, 0)));
}

EAModule trivial_module(const FieldCtx& field, unsigned k) {
  return EAModule(field, 1, std::vector<MatF>(k, MatF(field, 1, 1)));
}

namespace {

MatF shift_block(const FieldCtx& field, std::size_t size) {
  MatF j(field, size, size);
  for (std::size_t i = 1; i < size; ++i) j(i, i - 1) = field.one();
  return j;
}

// I (x) ... (x) a (x) ... (x) I with `a` in slot `slot` of `slots`, each of size a.rows().
MatF in_slot(const MatF& a, std::size_t slot, std::size_t slots) {
  const FieldCtx& F = a.field();
  MatF acc = MatF::identity(F, 1);
  for (std::size_t s = 0; s < slots; ++s) acc = kron(acc, s == slot ? a : MatF::identity(F, a.rows()));
  return acc;
}

std::size_t checked_power(std::uint64_t base, std::size_t e) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > (std::size_t{1} << 24) / base) fail(ErrorCode::TooLarge, "module dimension too large");
    v *= base;
  }
  return v;
}

// Rank over F_p of integer exponent vectors; entries must lie in [0, p).
std::size_t prime_rank(std::uint64_t p, const std::vector<std::vector<std::uint64_t>>& vs, std::size_t k) {
  const FieldCtx Fp = FieldCtx::create(p, 1);
  MatF a(Fp, vs.size(), k);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != k) fail(ErrorCode::DimensionMismatch, "exponent vector has wrong length");
    for (std::size_t j = 0; j < k; ++j) {
      if (vs[i][j] >= p) fail(ErrorCode::BadParams, "exponent outside 0..p-1");
      a(i, j) = Fel(vs[i][j]);
    }
  }
  return rank(a);
}

void check_compatible(const EAModule& a, const EAModule& b) {
  if (!(a.field() == b.field()) || a.k() != b.k()) fail(ErrorCode::MismatchedContext, "modules over different groups or fields");
}

}  // namespace

EAModule regular_module(const FieldCtx& field, unsigned k) {
  const std::size_t p = field.p();
  const MatF j = shift_block(field, p);
  std::vector<MatF> gens;
  for (unsigned i = 0; i < k; ++i) gens.push_back(in_slot(j, i, k));
  return EAModule(field, checked_power(p, k), std::move(gens));
}

EAModule cyclic_module(const FieldCtx& field, const JordanType& t) {
  if (t.p > field.p()) fail(ErrorCode::BadParams, "block size exceeds the characteristic");
  return EAModule(field, t.total(), {canonical_nilpotent(field, t)});
}

EAModule benson_module(const FieldCtx& field, Fel lambda, Fel mu) {
  const MatF j = shift_block(field, 3);
  const MatF j2 = j * j;
  return EAModule(field, 3, {j, j.scaled(lambda) + j2.scaled(mu)});
}

EAModule extend_field(const EAModule& m, const FieldCtx& target) {
  if (m.field() == target) return m;
  if (!m.field().is_prime_field() || m.field().p() != target.p()) {
    fail(ErrorCode::MismatchedContext, "can only extend a module over the prime field");
  }
  std::vector<MatF> gens;
  for (const auto& g : m.gens()) {
    MatF h(target, g.rows(), g.cols());
    // prime-field codes coincide with the constant coefficient in any extension
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) h(i, j) = g(i, j);
    gens.push_back(std::move(h));
  }
  return EAModule(target, m.dim(), std::move(gens));
}

EAModule conjugate(const EAModule& m, const MatF& p) {
  const auto inv = inverse(p);
  if (!inv) fail(ErrorCode::SingularBasis, "conjugating matrix is singular");
  std::vector<MatF> gens;
  for (const auto& g : m.gens()) gens.push_back(*inv * g * p);
  return EAModule(m.field(), m.dim(), std::move(gens));
}

EAModule direct_sum(const EAModule& a, const EAModule& b) {
  check_compatible(a, b);
  std::vector<MatF> gens;
  for (unsigned i = 0; i < a.k(); ++i) {
    const MatF parts[] = {a.gen(i), b.gen(i)};
    gens.push_back(block_diagonal(parts));
  }
  return EAModule(a.field(), a.dim() + b.dim(), std::move(gens));
}

EAModule direct_sum(const std::vector<EAModule>& parts) {
  if (parts.empty()) fail(ErrorCode::BadParams, "direct sum of no modules");
  EAModule acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
  return acc;
}

EAModule tensor(const EAModule& a, const EAModule& b) {
  check_compatible(a, b);
  const std::size_t n = a.dim() * b.dim();
  const MatF id = MatF::identity(a.field(), n);
  std::vector<MatF> gens;
  for (unsigned i = 0; i < a.k(); ++i) gens.push_back(kron(a.group_matrix(i), b.group_matrix(i)) - id);
  return EAModule(a.field(), n, std::move(gens));
}

EAModule dual(const EAModule& m) {
  const MatF id = MatF::identity(m.field(), m.dim());
  std::vector<MatF> gens;
  for (unsigned i = 0; i < m.k(); ++i) {
    // u^{-1} = u^{p-1} since u^p = 1
    gens.push_back(m.group_matrix(i).pow(m.p() - 1).transpose() - id);
  }
  return EAModule(m.field(), m.dim(), std::move(gens));
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(r);
  std::iota(cur.begin(), cur.end(), 0);
  if (r > n) return out;
  for (;;) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

MatF exterior_power(const MatF& u, const std::vector<std::vector<std::size_t>>& sets) {
  const FieldCtx& F = u.field();
  const std::size_t r = sets.empty() ? 0 : sets.front().size();
  const std::size_t d = sets.size();
  MatF out(F, d, d);
  MatF minor(F, r, r);
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t t = 0; t < d; ++t) {
      bool any_zero_row = false;
      for (std::size_t a = 0; a < r && !any_zero_row; ++a) {
        bool nonzero = false;
        for (std::size_t b = 0; b < r; ++b) {
          minor(a, b) = u(sets[s][a], sets[t][b]);
          nonzero = nonzero || !minor(a, b).is_zero();
        }
        any_zero_row = !nonzero;
      }
      if (!any_zero_row) out(s, t) = determinant(minor);
    }
  }
  return out;
}

}  // namespace

EAModule wedge(const EAModule& m, std::size_t r) {
  if (r > m.dim()) fail(ErrorCode::BadParams, "exterior power degree exceeds dimension");
  if (r == 0) return trivial_module(m.field(), m.k());
  const auto sets = subsets(m.dim(), r);
  const MatF id = MatF::identity(m.field(), sets.size());
  std::vector<MatF> gens;
  for (unsigned i = 0; i < m.k(); ++i) gens.push_back(exterior_power(m.group_matrix(i), sets) - id);
  return EAModule(m.field(), sets.size(), std::move(gens));
}

JordanType wedge_jordan(const JordanType& t, std::size_t r) {
  if (r > t.total()) fail(ErrorCode::BadParams, "exterior power degree exceeds dimension");
  const FieldCtx Fp = FieldCtx::create(t.p, 1);
  const EAModule w = wedge(cyclic_module(Fp, t), r);
  return point_jordan_type(w, Point{{Fp.one()}, true});
}

EAModule restrict_to_subgroup(const EAModule& m, const std::vector<std::vector<std::uint64_t>>& w) {
  if (prime_rank(m.p(), w, m.k()) != w.size()) fail(ErrorCode::DependentGenerators, "subgroup generators are dependent");
  const MatF id = MatF::identity(m.field(), m.dim());
  std::vector<MatF> us;
  for (unsigned i = 0; i < m.k(); ++i) us.push_back(m.group_matrix(i));
  std::vector<MatF> gens;
  for (const auto& row : w) {
    MatF g = id;
    for (unsigned i = 0; i < m.k(); ++i) {
      if (row[i]) g = g * us[i].pow(static_cast<unsigned>(row[i]));
    }
    gens.push_back(g - id);
  }
  return EAModule(m.field(), m.dim(), std::move(gens));
}

EAModule induce(const EAModule& m, const std::vector<std::vector<std::uint64_t>>& embed, unsigned k) {
  const unsigned s = m.k();
  if (embed.size() != s) fail(ErrorCode::DimensionMismatch, "one embedding vector per generator required");
  const std::uint64_t p = m.p();
  if (prime_rank(p, embed, k) != s) fail(ErrorCode::DependentGenerators, "embedding vectors are dependent");

  // complete to a basis of F_p^k with standard vectors, greedily
  std::vector<std::vector<std::uint64_t>> basis = embed;
  for (unsigned l = 0; l < k && basis.size() < k; ++l) {
    std::vector<std::uint64_t> e(k, 0);
    e[l] = 1;
    basis.push_back(e);
    if (prime_rank(p, basis, k) != basis.size()) basis.pop_back();
  }
  const unsigned t = k - s;  // rank of the complement E''

  // coordinates of each standard vector in that basis: rows of V^{-1}
  const FieldCtx Fp = FieldCtx::create(p, 1);
  MatF v(Fp, k, k);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) v(i, j) = Fel(basis[i][j]);
  const MatF c = *inverse(v);

  const FieldCtx& F = m.field();
  const std::size_t outer = checked_power(p, t);
  // cyclic permutation of F<h> on group-element basis 1, h, ..., h^{p-1}
  MatF cyc(F, p, p);
  for (std::size_t i = 0; i < p; ++i) cyc((i + 1) % p, i) = F.one();
  std::vector<MatF> perms;
  for (unsigned j = 0; j < t; ++j) perms.push_back(in_slot(cyc, j, t));
  std::vector<MatF> us;
  for (unsigned i = 0; i < s; ++i) us.push_back(m.group_matrix(i));

  const std::size_t n = outer * m.dim();
  const MatF id = MatF::identity(F, n);
  std::vector<MatF> gens;
  for (unsigned l = 0; l < k; ++l) {
    MatF outer_part = MatF::identity(F, outer);
    for (unsigned j = 0; j < t; ++j) {
      const auto e = static_cast<unsigned>(c(l, s + j).code());
      if (e) outer_part = outer_part * perms[j].pow(e);
    }
    MatF inner = MatF::identity(F, m.dim());
    for (unsigned i = 0; i < s; ++i) {
      const auto e = static_cast<unsigned>(c(l, i).code());
      if (e) inner = inner * us[i].pow(e);
    }
    gens.push_back(kron(outer_part, inner) - id);
  }
  return EAModule(F, n, std::move(gens));
}

EAModule linear_variety_module(const FieldCtx& field, unsigned k, const std::vector<std::vector<Fel>>& w) {
  MatF a(field, w.size(), k);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].size() != k) fail(ErrorCode::DimensionMismatch, "spanning vector has wrong length");
    for (unsigned j = 0; j < k; ++j) a(i, j) = w[i][j];
  }
  if (rank(a) != w.size()) fail(ErrorCode::DependentGenerators, "spanning vectors are dependent");
  const auto d = kernel_basis(a);
  const std::size_t s = d.size();
  const std::size_t n = checked_power(field.p(), s);
  const MatF j = shift_block(field, field.p());
  std::vector<MatF> ys;
  for (std::size_t i = 0; i < s; ++i) ys.push_back(in_slot(j, i, s));
  std::vector<MatF> gens;
  for (unsigned i = 0; i < k; ++i) {
    MatF x(field, n, n);
    for (std::size_t jj = 0; jj < s; ++jj) {
      if (!d[jj][i].is_zero()) x = x + ys[jj].scaled(d[jj][i]);
    }
    gens.push_back(std::move(x));
  }
  return EAModule(field, n, std::move(gens));
}

ProjectiveResult projective_test(const EAModule& m) {
  MatF z = MatF::identity(m.field(), m.dim());
  for (unsigned i = 0; i < m.k(); ++i) z = z * m.gen(i).pow(m.p() - 1);
  const std::size_t free = rank(z);
  return {free * checked_power(m.p(), m.k()) == m.dim(), free};
}

std::vector<MatF> endomorphism_basis(const EAModule& m) {
  const FieldCtx& F = m.field();
  const std::size_t n = m.dim();
  if (n == 0) return {};
  const std::size_t vars = n * n;
  MatF sys(F, m.k() * vars, vars);
  for (unsigned i = 0; i < m.k(); ++i) {
    const MatF& x = m.gen(i);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t row = i * vars + r * n + c;
        // (Y X - X Y)_{rc} = sum_l Y_{rl} X_{lc} - X_{rl} Y_{lc}
        for (std::size_t l = 0; l < n; ++l) {
          sys(row, r * n + l) = F.add(sys(row, r * n + l), x(l, c));
          sys(row, l * n + c) = F.sub(sys(row, l * n + c), x(r, l));
        }
      }
    }
  }
  auto kernel = kernel_basis(sys);
  // exchange one kernel vector for the identity so it leads the basis
  std::size_t swap_at = kernel.size();
  for (std::size_t b = 0; b < kernel.size() && swap_at == kernel.size(); ++b) {
    const auto lead = std::find_if(kernel[b].begin(), kernel[b].end(), [](Fel a) { return !a.is_zero(); });
    const auto pos = static_cast<std::size_t>(lead - kernel[b].begin());
    if (pos % (n + 1) == 0) swap_at = b;  // pivot on a diagonal entry
  }
  if (swap_at == kernel.size()) fail(ErrorCode::BadParams, "identity missing from commutant");
  kernel.erase(kernel.begin() + static_cast<std::ptrdiff_t>(swap_at));
  std::vector<MatF> out{MatF::identity(F, n)};
  for (const auto& v : kernel) {
    MatF y(F, n, n);
    for (std::size_t e = 0; e < vars; ++e) y(e / n, e % n) = v[e];
    out.push_back(std::move(y));
  }
  return out;
}

std::string decompose_status_name(DecomposeStatus s, unsigned trials) {
  if (s == DecomposeStatus::Decomposed) return "Decomposed";
  return "NoSplitFound(" + std::to_string(trials) + ")";
}

namespace {

struct Split {
  std::vector<EAModule> summands;
  MatF basis;
};

Split decompose_rec(const EAModule& m, unsigned trials, CounterRng& rng) {
  const FieldCtx& F = m.field();
  const std::size_t n = m.dim();
  Split leaf{{m}, MatF::identity(F, n)};
  if (n <= 1) return leaf;
  const auto endo = endomorphism_basis(m);
  if (endo.size() == 1) return leaf;

  for (unsigned trial = 0; trial < trials; ++trial) {
    MatF theta(F, n, n);
    for (const auto& b : endo) {
      const Fel c = F.element(rng.below(F.order()));
      if (!c.is_zero()) theta = theta + b.scaled(c);
    }
    const Poly f = minimal_polynomial(theta);
    if (f.degree() < 2) continue;
    const auto factors = poly_factor(f, rng.next());
    if (factors.size() < 2) continue;

    Poly g = Poly::constant(F, F.one());
    for (unsigned e = 0; e < factors.front().multiplicity; ++e) g = g * factors.front().factor;
    const Poly h = divmod(f, g).first;
    auto cols = kernel_basis(eval_poly(g, theta));
    const std::size_t d1 = cols.size();
    const auto k2 = kernel_basis(eval_poly(h, theta));
    cols.insert(cols.end(), k2.begin(), k2.end());
    if (d1 == 0 || cols.size() != n) fail(ErrorCode::SingularBasis, "kernels of coprime factors do not span");
    const MatF p = MatF::from_columns(F, n, cols);
    const auto pinv = inverse(p);
    if (!pinv) fail(ErrorCode::SingularBasis, "Fitting basis is singular");

    std::vector<MatF> ga;
    std::vector<MatF> gb;
    for (const auto& x : m.gens()) {
      const MatF y = *pinv * x * p;
      if (!y.block(0, d1, d1, n - d1).is_zero() || !y.block(d1, 0, n - d1, d1).is_zero()) {
        fail(ErrorCode::SingularBasis, "kernel is not a submodule");
      }
      ga.push_back(y.block(0, 0, d1, d1));
      gb.push_back(y.block(d1, d1, n - d1, n - d1));
    }
    Split a = decompose_rec(EAModule(F, d1, std::move(ga)), trials, rng);
    Split b = decompose_rec(EAModule(F, n - d1, std::move(gb)), trials, rng);
    const MatF parts[] = {a.basis, b.basis};
    Split out{std::move(a.summands), p * block_diagonal(parts)};
    out.summands.insert(out.summands.end(), b.summands.begin(), b.summands.end());
    return out;
  }
  return leaf;
}

}  // namespace

Decomposition fitting_decompose(const EAModule& m, unsigned trials, std::uint64_t seed) {
  if (trials == 0) fail(ErrorCode::BadParams, "trials must be positive");
  CounterRng rng(seed, 0x666974746e67ULL);
  Split s = decompose_rec(m, trials, rng);
  const auto status = s.summands.size() > 1 ? DecomposeStatus::Decomposed : DecomposeStatus::NoSplitFound;
  return Decomposition{std::move(s.summands), status, trials, std::move(s.basis)};
}

}  // namespace eamod
