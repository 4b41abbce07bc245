#include "limrel/complexes.hpp"

namespace limrel {

CochainComplex::CochainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials)
    : ranks_(std::move(ranks)), differentials_(std::move(differentials)) {
  if (differentials_.size() + 1 != ranks_.size() && !(ranks_.empty() && differentials_.empty()))
    throw std::invalid_argument("CochainComplex: need one differential between each pair of degrees");
  for (std::size_t n = 0; n < differentials_.size(); ++n) {
    const auto& d = differentials_[n];
    if (d.cols() != ranks_[n] || d.rows() != ranks_[n + 1])
      throw std::invalid_argument("CochainComplex: differential " + std::to_string(n) + " has wrong shape");
    if (n > 0 && !(d * differentials_[n - 1]).is_zero())
      throw InvariantViolation("CochainComplex: d∘d != 0 at degree " + std::to_string(n));
  }
}

IntMatrix CochainComplex::differential(std::size_t n) const {
  if (n < differentials_.size()) return differentials_[n];
  return IntMatrix(rank(n + 1), rank(n));
}

FinAbGroup CochainComplex::cohomology(std::size_t n) const {
  const IntMatrix d_in = n == 0 ? IntMatrix(rank(0), 0) : differential(n - 1);
  return homology_at(d_in, differential(n));
}

std::vector<FinAbGroup> CochainComplex::cohomology() const {
  std::vector<FinAbGroup> out;
  for (std::size_t n = 0; n < ranks_.size(); ++n) out.push_back(cohomology(n));
  return out;
}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials)
    : ranks_(std::move(ranks)), differentials_(std::move(differentials)) {
  if (differentials_.size() + 1 != ranks_.size() && !(ranks_.empty() && differentials_.empty()))
    throw std::invalid_argument("ChainComplex: need one differential between each pair of degrees");
  for (std::size_t n = 1; n <= differentials_.size(); ++n) {
    const auto& d = differentials_[n - 1];
    if (d.cols() != ranks_[n] || d.rows() != ranks_[n - 1])
      throw std::invalid_argument("ChainComplex: differential " + std::to_string(n) + " has wrong shape");
    if (n > 1 && !(differentials_[n - 2] * d).is_zero())
      throw InvariantViolation("ChainComplex: ∂∘∂ != 0 at degree " + std::to_string(n));
  }
}

IntMatrix ChainComplex::differential(std::size_t n) const {
  if (n >= 1 && n <= differentials_.size()) return differentials_[n - 1];
  return IntMatrix(n == 0 ? 0 : rank(n - 1), rank(n));
}

FinAbGroup ChainComplex::homology(std::size_t n) const {
  return homology_at(differential(n + 1), differential(n));
}

}  // namespace limrel
