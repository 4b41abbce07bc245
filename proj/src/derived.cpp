#include "limrel/derived.hpp"

#include "limrel/limits.hpp"
#include "limrel/simplicial.hpp"
#include "limrel/smith.hpp"

#include <map>

namespace limrel {

DerivedFunctorResult derived(const PolyFunctor& f, const PresentedGroup& a, int q, std::size_t i_max) {
  if (q != 0 && q != 1) throw std::invalid_argument("derived: q must be 0 or 1, got " + std::to_string(q));
  const IntMatrix relations = a.kernel_embedding();
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> diffs;
  if (q == 1) {
    ranks.push_back(0);
    diffs.push_back(IntMatrix(0, a.generators()));
  }
  ranks.push_back(a.generators());
  ranks.push_back(relations.cols());
  diffs.push_back(relations);
  const ChainComplex model(std::move(ranks), std::move(diffs));

  const std::size_t top = i_max + 1 + truncation_slack();
  const ChainComplex n = normalized_chain(apply_levelwise(f, dk_chain(model, top)));
  DerivedFunctorResult out{f.name(), a.normal_form(), q, {}};
  for (std::size_t i = 0; i <= i_max; ++i) out.values.push_back(n.homology(i));
  return out;
}

DerivedFunctorResult derived(const PolyFunctor& f, const FinAbGroup& a, int q, std::size_t i_max) {
  return derived(f, PresentedGroup::standard(a), q, i_max);
}

namespace {

std::vector<FinAbGroup> assemble(const std::vector<FinAbGroup>& l, std::size_t i_max) {
  std::vector<FinAbGroup> out;
  for (std::size_t i = 0; i <= i_max; ++i) {
    const FinAbGroup left = i == 0 ? FinAbGroup() : dual_diamond(l[i - 1]);
    out.push_back(direct_sum(left, dual_vee(l[i])));
  }
  return out;
}

}  // namespace

std::vector<FinAbGroup> duality_predicted_limits(const PolyFunctor& f, std::size_t rank, std::size_t i_max) {
  const auto l = derived(PolyFunctor::kuhn_dual(f), FinAbGroup::free(rank), 1, i_max).values;
  return assemble(l, i_max);
}

std::vector<FinAbGroup> torsion_predicted_limits(const PolyFunctor& f, const FinAbGroup& a, std::size_t i_max) {
  if (!a.is_finite()) throw std::invalid_argument("torsion_predicted_limits: group " + a.to_string() + " is not finite");
  const auto l = derived(PolyFunctor::kuhn_dual(f), dual_diamond(a), 0, i_max).values;
  return assemble(l, i_max);
}

std::vector<K3Degree> k3_homology(std::size_t n_max) {
  std::map<int, std::vector<FinAbGroup>> limits;
  std::vector<K3Degree> out;
  for (std::size_t n = 4; n <= n_max; ++n) {
    K3Degree row;
    row.n = n;
    std::vector<FinAbGroup> parts;
    for (int d = 2; 2 * d <= static_cast<int>(n) + 1; ++d) {
      const int i = static_cast<int>(n) - 2 * d + 1;
      if (i > d) continue;  // lim^i vanishes above the degree
      auto it = limits.find(d);
      if (it == limits.end())
        it = limits.emplace(d, limits_free(PolyFunctor::sym_power(d), 1, static_cast<std::size_t>(d))).first;
      const FinAbGroup& g = it->second[static_cast<std::size_t>(i)];
      if (!g.is_trivial()) row.contributions.emplace_back(d, g);
      parts.push_back(g);
    }
    row.total = direct_sum(parts);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace limrel
