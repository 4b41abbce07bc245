#include "limrel/cross_effects.hpp"

#include "limrel/smith.hpp"

#include <numeric>

namespace limrel {

namespace {

std::size_t total(const std::vector<std::size_t>& parts) {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

CrossEffectSummand from_labels(const PolyFunctor& f, const std::vector<std::size_t>& parts) {
  const std::size_t n = total(parts);
  const auto& labels = f.basis_at(n);
  std::vector<std::size_t> subset;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto deg = PolyFunctor::multidegree(labels[i], parts);
    bool all_positive = true;
    for (int x : deg) all_positive = all_positive && x > 0;
    if (all_positive) subset.push_back(i);
  }
  CrossEffectSummand s;
  s.parts = parts;
  s.ambient_rank = labels.size();
  s.embedding = IntMatrix(labels.size(), subset.size());
  s.projection = IntMatrix(subset.size(), labels.size());
  for (std::size_t j = 0; j < subset.size(); ++j) {
    s.embedding(subset[j], j) = 1;
    s.projection(j, subset[j]) = 1;
  }
  s.label_subset = std::move(subset);
  return s;
}

IntMatrix inclusion_exclusion_idempotent(const PolyFunctor& f, const std::vector<std::size_t>& parts) {
  const std::size_t k = parts.size();
  const std::size_t ambient = f.rank_at(total(parts));
  IntMatrix e(ambient, ambient);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<bool> keep(k);
    std::size_t size = 0;
    for (std::size_t i = 0; i < k; ++i) {
      keep[i] = (mask >> i) & 1;
      size += keep[i];
    }
    const IntMatrix term = f.apply_map(block_projection(parts, keep));
    if ((k - size) % 2 == 0)
      e += term;
    else
      e -= term;
  }
  return e;
}

CrossEffectSummand from_idempotent(const PolyFunctor& f, const std::vector<std::size_t>& parts) {
  const IntMatrix e = inclusion_exclusion_idempotent(f, parts);
  if (!(e * e == e)) throw InvariantViolation("cross_effect: inclusion-exclusion map is not idempotent");
  auto snf = smith_normal_form(e, {false, true, false, true});
  for (const auto& d : snf.diagonal)
    if (d != 1) throw InvariantViolation("cross_effect: idempotent image is not a direct summand");
  const std::size_t n = e.rows(), r = snf.rank();
  CrossEffectSummand s;
  s.parts = parts;
  s.ambient_rank = n;
  s.embedding = snf.U_inv.block(0, 0, n, r);
  s.projection = snf.V_inv.block(0, 0, r, n);
  if (!(s.projection * s.embedding).is_identity())
    throw InvariantViolation("cross_effect: projection does not split the embedding");
  return s;
}

}  // namespace

IntMatrix block_projection(const std::vector<std::size_t>& parts, const std::vector<bool>& keep) {
  const std::size_t n = total(parts);
  IntMatrix p(n, n);
  std::size_t offset = 0;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    if (keep[b])
      for (std::size_t i = 0; i < parts[b]; ++i) p(offset + i, offset + i) = 1;
    offset += parts[b];
  }
  return p;
}

IntMatrix block_embedding(const std::vector<std::size_t>& parts, const std::vector<bool>& keep) {
  std::size_t kept = 0;
  for (std::size_t b = 0; b < parts.size(); ++b)
    if (keep[b]) kept += parts[b];
  IntMatrix m(total(parts), kept);
  std::size_t offset = 0, col = 0;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    if (keep[b])
      for (std::size_t i = 0; i < parts[b]; ++i) m(offset + i, col++) = 1;
    offset += parts[b];
  }
  return m;
}

IntMatrix delete_block(const std::vector<std::size_t>& parts, std::size_t j) {
  std::vector<bool> keep(parts.size(), true);
  keep.at(j) = false;
  return block_embedding(parts, keep).transpose();
}

CrossEffectSummand cross_effect(const PolyFunctor& f, const std::vector<std::size_t>& parts,
                                CrossEffectMethod method) {
  if (parts.empty()) throw std::invalid_argument("cross_effect: empty list of parts");
  return method == CrossEffectMethod::Labels ? from_labels(f, parts) : from_idempotent(f, parts);
}

bool decomposition_check(const PolyFunctor& f, const std::vector<std::size_t>& parts) {
  const std::size_t k = parts.size();
  const std::size_t ambient = f.rank_at(total(parts));
  IntMatrix all(ambient, 0);
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<bool> keep(k);
    std::vector<std::size_t> sub;
    for (std::size_t i = 0; i < k; ++i) {
      keep[i] = (mask >> i) & 1;
      if (keep[i]) sub.push_back(parts[i]);
    }
    const auto s = cross_effect(f, sub, CrossEffectMethod::Idempotent);
    if (s.rank() == 0) continue;
    all = hstack(all, f.apply_map(block_embedding(parts, keep)) * s.embedding);
  }
  if (all.cols() != ambient) return false;
  const Integer det = determinant(all);
  return det == 1 || det == -1;
}

KernelIntersection kernel_intersection(const PolyFunctor& f, const std::vector<std::size_t>& parts) {
  const std::size_t n = parts.size();
  if (n < 2) throw std::invalid_argument("kernel_intersection: need at least two parts");
  const std::size_t ambient = f.rank_at(total(parts));

  IntMatrix stacked(0, ambient);
  for (std::size_t j = 0; j + 1 < n; ++j) stacked = vstack(stacked, f.apply_map(delete_block(parts, j)));
  IntMatrix kernel = kernel_basis(stacked);

  std::vector<std::size_t> head(parts.begin(), parts.end() - 1);
  std::vector<bool> keep_head(n, true);
  keep_head[n - 1] = false;
  const auto lower = cross_effect(f, head);
  const auto top = cross_effect(f, parts);
  const IntMatrix lower_embedded = f.apply_map(block_embedding(parts, keep_head)) * lower.embedding;

  KernelIntersection out;
  out.summand.parts = parts;
  out.summand.ambient_rank = ambient;
  out.summand.embedding = hstack(lower_embedded, top.embedding);
  out.summand.projection =
      vstack(lower.projection * f.apply_map(delete_block(parts, n - 1)), top.projection);
  if (!(out.summand.projection * out.summand.embedding).is_identity())
    throw InvariantViolation("kernel_intersection: summand projection does not split");
  auto coords = solve_in_lattice(out.summand.embedding, kernel);
  if (!coords || !solve_in_lattice(kernel, out.summand.embedding))
    throw InvariantViolation("kernel_intersection: kernel lattice differs from the cross-effect sum");
  out.kernel_basis = std::move(kernel);
  out.change_of_basis = std::move(*coords);
  return out;
}

IntMatrix restrict_map(const PolyFunctor& f, const CrossEffectSummand& target, const IntMatrix& m,
                       const CrossEffectSummand& source) {
  if (source.rank() == 0 || target.rank() == 0) return IntMatrix(target.rank(), source.rank());
  if (source.label_subset && target.label_subset) {
    const IntMatrix cols = f.apply_columns(m, *source.label_subset);
    return cols.select_rows(*target.label_subset);
  }
  return target.projection * f.apply_map(m) * source.embedding;
}

}  // namespace limrel
