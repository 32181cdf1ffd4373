#include "eamod/variety.hpp"

#include <algorithm>
#include <cmath>

#include "eamod/error.hpp"
#include "eamod/parallel.hpp"
#include "eamod/rng.hpp"

namespace eamod {

namespace {

std::uint64_t checked_space_size(const FieldCtx& field, unsigned k) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (total > kMaxPointWork / field.order()) fail(ErrorCode::TooLarge, "point enumeration exceeds the work cap");
    total *= field.order();
  }
  return total;
}

EAModule over_field(const EAModule& m, const FieldCtx& field) {
  if (m.field() == field) return m;
  return extend_field(m, field);
}

}  // namespace

std::vector<Point> enumerate_projective(const FieldCtx& field, unsigned k) {
  if (k == 0) fail(ErrorCode::BadParams, "k must be positive");
  checked_space_size(field, k);
  const std::uint64_t q = field.order();
  std::vector<Point> out;
  for (unsigned lead = k; lead-- > 0;) {
    const unsigned tail = k - 1 - lead;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < tail; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Fel> c(k, field.zero());
      c[lead] = field.one();
      std::uint64_t rest = code;
      for (unsigned i = k; i-- > lead + 1;) {
        c[i] = field.element(rest % q);
        rest /= q;
      }
      out.push_back(Point{std::move(c), true});
    }
  }
  return out;
}

std::string verdict_name(SetVerdict v) {
  switch (v) {
    case SetVerdict::Equal: return "Equal";
    case SetVerdict::ProperSubset: return "ProperSubset";
    case SetVerdict::Superset: return "Superset";
    case SetVerdict::Incomparable: return "Incomparable";
  }
  return "?";
}

std::vector<Point> PointSetReport::variety() const {
  std::vector<Point> out;
  for (const auto& r : points) {
    if (!r.free) out.push_back(r.point);
  }
  return out;
}

std::size_t PointSetReport::variety_count() const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const PointRecord& r) { return !r.free; }));
}

PointSetReport variety_points(const EAModule& m, const FieldCtx& field) {
  const EAModule mod = over_field(m, field);
  auto pts = enumerate_projective(field, mod.k());
  std::vector<PointRecord> recs(pts.size(), PointRecord{Point{}, JordanType{}, false});
  parallel_for(pts.size(), [&](std::size_t i) {
    JordanType t = point_jordan_type(mod, pts[i]);
    const bool free = t.is_free();
    recs[i] = PointRecord{pts[i], std::move(t), free};
  });
  return PointSetReport{field, mod.k(), std::move(recs), {}, std::nullopt};
}

std::vector<Point> zero_points(const PkPoly& poly, const FieldCtx& field) {
  if (field.p() != poly.p) fail(ErrorCode::MismatchedContext, "field characteristic differs from p");
  std::vector<Point> out;
  for (auto& pt : enumerate_projective(field, poly.k)) {
    if (pk_eval(poly, field, pt.coords).is_zero()) out.push_back(std::move(pt));
  }
  return out;
}

std::uint64_t affine_count(std::size_t projective_points, const FieldCtx& field) {
  return 1 + (field.order() - 1) * projective_points;
}

std::uint64_t affine_zero_count(const PkPoly& poly, const FieldCtx& field) {
  return affine_count(zero_points(poly, field).size(), field);
}

Comparison compare_point_sets(std::vector<Point> first, std::vector<Point> second) {
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  Comparison c{SetVerdict::Equal, {}, {}};
  std::set_difference(first.begin(), first.end(), second.begin(), second.end(), std::back_inserter(c.only_in_first));
  std::set_difference(second.begin(), second.end(), first.begin(), first.end(), std::back_inserter(c.only_in_second));
  if (c.only_in_first.empty() && c.only_in_second.empty()) {
    c.verdict = SetVerdict::Equal;
  } else if (c.only_in_first.empty()) {
    c.verdict = SetVerdict::ProperSubset;
  } else if (c.only_in_second.empty()) {
    c.verdict = SetVerdict::Superset;
  } else {
    c.verdict = SetVerdict::Incomparable;
  }
  return c;
}

Comparison compare_sets(const PointSetReport& report, const std::vector<Point>& target) {
  return compare_point_sets(report.variety(), target);
}

namespace {

// Index of the unique type dominating all others, if there is one.
std::optional<std::size_t> dominant_index(const std::vector<JordanType>& types) {
  for (std::size_t i = 0; i < types.size(); ++i) {
    bool top = true;
    for (std::size_t j = 0; j < types.size() && top; ++j) {
      const Dominance d = dominance_compare(types[i], types[j]);
      top = d == Dominance::Greater || d == Dominance::Equal;
    }
    if (top) return i;
  }
  return std::nullopt;
}

GenericResult sample_types(const EAModule& m, unsigned ext_degree, unsigned trials, std::uint64_t seed) {
  const FieldCtx field = FieldCtx::create(m.p(), ext_degree);
  const EAModule mod = over_field(m, field);
  std::vector<JordanType> types(trials);
  parallel_for(trials, [&](std::size_t i) {
    CounterRng rng(seed, i);
    std::vector<Fel> c(mod.k());
    for (auto& x : c) x = field.element(1 + rng.below(field.order() - 1));
    types[i] = point_jordan_type(mod, Point{std::move(c), false});
  });
  GenericResult res;
  res.samples = trials;
  res.ext_degree = ext_degree;
  for (const auto& t : types) {
    if (std::find(res.observed.begin(), res.observed.end(), t) == res.observed.end()) res.observed.push_back(t);
  }
  const auto top = dominant_index(res.observed);
  if (top) {
    res.type = res.observed[*top];
  } else {
    res.inconclusive = true;
    res.type = res.observed.front();
  }
  res.attained = static_cast<std::size_t>(std::count(types.begin(), types.end(), res.type));
  return res;
}

}  // namespace

GenericResult generic_type(const EAModule& m, unsigned ext_degree, unsigned trials, std::uint64_t seed) {
  if (trials == 0) fail(ErrorCode::BadParams, "trials must be positive");
  if (m.k() == 0) fail(ErrorCode::BadParams, "generic type needs k >= 1");
  GenericResult res = sample_types(m, ext_degree, trials, seed);
  if (res.inconclusive && m.field().is_prime_field()) res = sample_types(m, ext_degree + 2, trials, seed);
  return res;
}

bool in_max_jordan_set(const EAModule& m, const Point& alpha, const JordanType& generic) {
  return point_jordan_type(m, alpha) == generic;
}

Point wreath_act(const FieldCtx& field, const std::vector<Fel>& gamma, const std::vector<unsigned>& sigma,
                 const Point& alpha) {
  const std::size_t k = alpha.coords.size();
  if (gamma.size() != k || sigma.size() != k) fail(ErrorCode::DimensionMismatch, "wreath element has wrong size");
  if (alpha.is_zero()) fail(ErrorCode::ZeroPoint, "wreath action on the origin");
  std::vector<bool> seen(k, false);
  for (unsigned s : sigma) {
    if (s >= k || seen[s]) fail(ErrorCode::BadParams, "sigma is not a permutation");
    seen[s] = true;
  }
  for (Fel g : gamma) {
    if (g.is_zero() || !field.in_prime_field(g)) fail(ErrorCode::BadParams, "gamma must lie in F_p^x");
  }
  std::vector<Fel> out(k);
  for (std::size_t i = 0; i < k; ++i) out[sigma[i]] = field.mul(gamma[i], alpha.coords[i]);
  return Point{std::move(out), false};
}

unsigned dimension_estimate(std::uint64_t n_m, std::uint64_t n_2m, std::uint64_t q) {
  if (n_m == 0 || q < 2) fail(ErrorCode::BadParams, "dimension estimate needs a positive base count");
  const double r = std::log(static_cast<double>(n_2m) / static_cast<double>(n_m)) / std::log(static_cast<double>(q));
  return static_cast<unsigned>(std::max(0.0, std::round(r)));
}

std::vector<std::vector<std::vector<std::uint64_t>>> enumerate_base_subspaces(unsigned p, unsigned k, unsigned min_dim,
                                                                              unsigned max_dim) {
  std::vector<std::vector<std::vector<std::uint64_t>>> out;
  max_dim = std::min(max_dim, k);
  for (unsigned d = min_dim; d <= max_dim; ++d) {
    // pivot sets as increasing d-subsets of columns, in lexicographic order
    std::vector<unsigned> piv(d);
    for (unsigned i = 0; i < d; ++i) piv[i] = i;
    for (;;) {
      // free slots: (row r, column c) with c > piv[r] and c not a pivot
      std::vector<std::pair<unsigned, unsigned>> slots;
      for (unsigned r = 0; r < d; ++r)
        for (unsigned c = piv[r] + 1; c < k; ++c) {
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(r, c);
        }
      std::uint64_t count = 1;
      for (std::size_t s = 0; s < slots.size(); ++s) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::vector<std::uint64_t>> basis(d, std::vector<std::uint64_t>(k, 0));
        for (unsigned r = 0; r < d; ++r) basis[r][piv[r]] = 1;
        std::uint64_t rest = code;
        for (std::size_t s = slots.size(); s-- > 0;) {
          basis[slots[s].first][slots[s].second] = rest % p;
          rest /= p;
        }
        out.push_back(std::move(basis));
      }
      if (d == 0) break;
      unsigned i = d;
      while (i > 0 && piv[i - 1] == k - d + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (unsigned j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

std::optional<Point> green_witness(const EAModule& m, const FieldCtx& field) {
  const unsigned k = m.k();
  if (k == 0) return std::nullopt;
  const auto subspaces = enumerate_base_subspaces(m.p(), k, 1, k - 1);
  const auto report = variety_points(m, field);
  const auto pts = report.variety();
  if (static_cast<double>(subspaces.size()) * static_cast<double>(std::max<std::size_t>(pts.size(), 1)) >
      static_cast<double>(kMaxPointWork)) {
    fail(ErrorCode::TooLarge, "subspace-point pairs exceed the work cap");
  }
  for (const auto& pt : pts) {
    bool inside_some = false;
    for (const auto& basis : subspaces) {
      MatF a(field, basis.size() + 1, k);
      for (std::size_t r = 0; r < basis.size(); ++r)
        for (unsigned c = 0; c < k; ++c) a(r, c) = Fel(basis[r][c]);
      for (unsigned c = 0; c < k; ++c) a(basis.size(), c) = pt.coords[c];
      if (rank(a) == basis.size()) {
        inside_some = true;
        break;
      }
    }
    if (!inside_some) return pt;
  }
  return std::nullopt;
}

EAModule dv_rank2_builder(const FieldCtx& field, const std::vector<Point>& directions) {
  if (directions.empty()) fail(ErrorCode::BadParams, "at least one direction is required");
  std::vector<Point> seen;
  std::vector<EAModule> parts;
  for (const auto& d : directions) {
    if (d.coords.size() != 2) fail(ErrorCode::DimensionMismatch, "directions must lie in the plane");
    const Point n = normalize(field, d.coords);
    if (std::find(seen.begin(), seen.end(), n) != seen.end()) fail(ErrorCode::DuplicateDirection, format_point(field, n));
    seen.push_back(n);
    parts.push_back(linear_variety_module(field, 2, {n.coords}));
  }
  return direct_sum(parts);
}

}  // namespace eamod
