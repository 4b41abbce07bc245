#include "limrel/limits.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace limrel {

std::size_t truncation_slack() {
  const char* raw = std::getenv("FUNCTOR_LIMITS_TRUNC_SLACK");
  if (raw == nullptr || *raw == '\0') return 0;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end)
    throw std::invalid_argument(std::string("FUNCTOR_LIMITS_TRUNC_SLACK must be a non-negative integer, got '") +
                                raw + "'");
  return value;
}

IntMatrix delta(std::size_t i, std::size_t n, const IntMatrix& phi) {
  if (i > n) throw std::out_of_range("delta: index " + std::to_string(i) + " exceeds " + std::to_string(n));
  const std::size_t a = phi.rows(), b = phi.cols();
  IntMatrix m((n + 1) * a + b, n * a + b);
  for (std::size_t r = 0; r < b; ++r) m((n + 1) * a + r, n * a + r) = 1;
  if (i < n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const std::size_t from = k <= i ? k : k - 1;
      for (std::size_t r = 0; r < a; ++r) m(k * a + r, from * a + r) = 1;
    }
  } else {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < a; ++r) m(k * a + r, k * a + r) = 1;
    m.set_block(n * a, n * a, phi);
  }
  return m;
}

IntMatrix drop_last(std::size_t n, std::size_t a_rank, std::size_t b_rank) {
  IntMatrix m(n * a_rank, n * a_rank + b_rank);
  for (std::size_t r = 0; r < n * a_rank; ++r) m(r, r) = 1;
  return m;
}

IntMatrix include_first(std::size_t n, std::size_t a_rank, std::size_t b_rank) {
  return drop_last(n, a_rank, b_rank).transpose();
}

CrossEffectSummand mixed_cross_effect(const PolyFunctor& f, std::size_t n, std::size_t a_rank,
                                      std::size_t b_rank) {
  std::vector<std::size_t> parts(n, a_rank);
  parts.push_back(b_rank);
  return cross_effect(f, parts);
}

IntMatrix h_map(const PolyFunctor& f, std::size_t i, std::size_t n, const IntMatrix& phi) {
  const auto source = mixed_cross_effect(f, n, phi.rows(), phi.cols());
  const auto target = mixed_cross_effect(f, n + 1, phi.rows(), phi.cols());
  return restrict_map(f, target, delta(i, n, phi), source);
}

CochainComplex c_phi(const PolyFunctor& f, const IntMatrix& phi, std::size_t top) {
  const std::size_t a = phi.rows(), b = phi.cols();
  std::vector<CrossEffectSummand> summands;
  std::vector<std::size_t> ranks;
  for (std::size_t n = 0; n <= top; ++n) {
    summands.push_back(mixed_cross_effect(f, n, a, b));
    ranks.push_back(summands.back().rank());
  }
  std::vector<IntMatrix> diffs;
  for (std::size_t n = 0; n < top; ++n) {
    IntMatrix d(ranks[n + 1], ranks[n]);
    if (!d.empty())
      for (std::size_t i = 0; i <= n; ++i) {
        const IntMatrix h = restrict_map(f, summands[n + 1], delta(i, n, phi), summands[n]);
        if (i % 2 == 0)
          d += h;
        else
          d -= h;
      }
    diffs.push_back(std::move(d));
  }
  return CochainComplex(std::move(ranks), std::move(diffs));
}

IntMatrix comparison_map(const PolyFunctor& f, std::size_t n, const IntMatrix& phi) {
  const std::size_t g = phi.rows();
  const auto source = mixed_cross_effect(f, n, g, phi.cols());
  const auto target = mixed_cross_effect(f, n, g, g);
  return restrict_map(f, target, direct_sum(IntMatrix::identity(n * g), phi), source);
}

namespace {

void require_vanishing_top(const CochainComplex& c, const PolyFunctor& f) {
  if (c.rank(c.length() - 1) != 0)
    throw InvariantViolation("cross-effect complex of " + f.name() +
                             " does not vanish at the truncation degree; functor degree is wrong");
}

std::size_t top_degree(const PolyFunctor& f, std::size_t i_max) {
  return std::max<std::size_t>(i_max + 1, static_cast<std::size_t>(f.degree()) + 1) + truncation_slack();
}

std::vector<FinAbGroup> cohomology_up_to(const CochainComplex& c, std::size_t i_max) {
  std::vector<FinAbGroup> out;
  for (std::size_t i = 0; i <= i_max; ++i) out.push_back(c.cohomology(i));
  return out;
}

}  // namespace

LimitComplex limit_complex_free(const PolyFunctor& f, std::size_t rank, std::size_t top) {
  const CochainComplex c = c_phi(f, IntMatrix::identity(rank), top);
  require_vanishing_top(c, f);
  std::vector<std::size_t> ranks{0};
  std::vector<IntMatrix> diffs{IntMatrix(c.rank(0), 0)};
  for (std::size_t n = 0; n < c.length(); ++n) ranks.push_back(c.rank(n));
  for (std::size_t n = 0; n + 1 < c.length(); ++n) diffs.push_back(c.differential(n));
  return {CochainComplex(std::move(ranks), std::move(diffs)), LimitRoute::Free, std::nullopt};
}

LimitComplex limit_complex_cone(const PolyFunctor& f, const Surjection& p, std::size_t top) {
  const IntMatrix& phi = p.relation_embedding();
  const std::size_t g = phi.rows();
  const CochainComplex rel = c_phi(f, phi, top);
  const CochainComplex free = c_phi(f, IntMatrix::identity(g), top);
  require_vanishing_top(rel, f);
  require_vanishing_top(free, f);

  // N^m = C_Φ(φ)^m ⊕ C_Φ(F)^{m-1}
  std::vector<std::size_t> ranks;
  for (std::size_t m = 0; m <= top; ++m) ranks.push_back(rel.rank(m) + (m == 0 ? 0 : free.rank(m - 1)));
  std::vector<IntMatrix> diffs;
  for (std::size_t m = 0; m < top; ++m) {
    const std::size_t rel_src = rel.rank(m), free_src = m == 0 ? 0 : free.rank(m - 1);
    const std::size_t rel_dst = rel.rank(m + 1), free_dst = free.rank(m);
    IntMatrix d(rel_dst + free_dst, rel_src + free_src);
    d.set_block(0, 0, -rel.differential(m));
    d.set_block(rel_dst, 0, comparison_map(f, m, phi));
    if (m > 0) d.set_block(rel_dst, rel_src, free.differential(m - 1));
    diffs.push_back(std::move(d));
  }
  return {CochainComplex(std::move(ranks), std::move(diffs)), LimitRoute::Cone, p};
}

std::vector<FinAbGroup> limits_free(const PolyFunctor& f, std::size_t rank, std::size_t i_max) {
  return cohomology_up_to(limit_complex_free(f, rank, top_degree(f, i_max)).complex, i_max);
}

std::vector<FinAbGroup> limits_via_cone(const PolyFunctor& f, const Surjection& p, std::size_t i_max) {
  return cohomology_up_to(limit_complex_cone(f, p, top_degree(f, i_max)).complex, i_max);
}

std::vector<FinAbGroup> limits_via_relation_cosimplicial(const PolyFunctor& f, const Surjection& p,
                                                         std::size_t i_max) {
  const auto rel = relation_cosimplicial(p, i_max + 1 + truncation_slack());
  const CochainComplex n = normalized_cochain(apply_levelwise(f, rel.module));
  return cohomology_up_to(n, i_max);
}

}  // namespace limrel
