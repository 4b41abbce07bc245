#include "limrel/antisymmetric.hpp"

#include "limrel/functor.hpp"
#include "limrel/smith.hpp"

#include <algorithm>

namespace limrel {

namespace {

std::size_t word_index(const BasisLabel& w, std::size_t g) {
  std::size_t idx = 0;
  for (int x : w) idx = idx * g + static_cast<std::size_t>(x);
  return idx;
}

std::vector<IntMatrix> relator_columns(const IntMatrix& rel) {
  std::vector<IntMatrix> cols;
  for (std::size_t c = 0; c < rel.cols(); ++c) {
    std::vector<std::size_t> idx{c};
    cols.push_back(rel.select_cols(idx));
  }
  return cols;
}

// Sorts a word with sign; returns 0 when an index repeats.
int sort_with_sign(BasisLabel& w) {
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
      std::swap(w[j - 1], w[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return 0;
  return sign;
}

}  // namespace

PresentedGroup antisym_presentation(int d, const PresentedGroup& a) {
  if (d < 1) throw std::invalid_argument("antisym_presentation: degree must be at least 1");
  const std::size_t g = a.generators();
  const auto words = PolyFunctor::tensor_power(d).basis_at(g);
  const std::size_t n = words.size();
  std::vector<std::vector<Integer>> cols;

  // Multilinear relations from the relators of A, in every slot.
  const auto relators = relator_columns(a.relations());
  for (const auto& rel : relators)
    for (int slot = 0; slot < d; ++slot)
      for (const auto& w : words) {
        if (w[slot] != 0) continue;  // one representative per word of the other slots
        std::vector<Integer> col(n);
        BasisLabel v = w;
        for (std::size_t i = 0; i < g; ++i) {
          if (sgn(rel(i, 0)) == 0) continue;
          v[slot] = static_cast<int>(i);
          col[word_index(v, g)] += rel(i, 0);
        }
        cols.push_back(std::move(col));
      }

  // ab = -ba in adjacent slots.
  for (int k = 0; k + 1 < d; ++k)
    for (const auto& w : words) {
      BasisLabel v = w;
      std::swap(v[k], v[k + 1]);
      std::vector<Integer> col(n);
      col[word_index(w, g)] += 1;
      col[word_index(v, g)] += 1;
      cols.push_back(std::move(col));
    }

  IntMatrix rel(n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) rel(r, c) = cols[c][r];
  return PresentedGroup(n, std::move(rel));
}

PresentedGroup exterior_presentation(int d, const PresentedGroup& a) {
  const std::size_t g = a.generators();
  const auto ext = PolyFunctor::ext_power(d);
  const std::size_t n = ext.rank_at(g);
  std::vector<std::vector<Integer>> cols;
  if (d > 1 || a.relations().cols() > 0) {
    const auto relators = relator_columns(a.relations());
    const auto tails = d > 1 ? PolyFunctor::ext_power(d - 1).basis_at(g) : std::vector<BasisLabel>{{}};
    for (const auto& rel : relators)
      for (const auto& tail : tails) {
        std::vector<Integer> col(n);
        for (std::size_t i = 0; i < g; ++i) {
          if (sgn(rel(i, 0)) == 0) continue;
          BasisLabel w{static_cast<int>(i)};
          w.insert(w.end(), tail.begin(), tail.end());
          const int sign = sort_with_sign(w);
          if (sign == 0) continue;
          col[ext.index_of(g, w)] += sign * rel(i, 0);
        }
        cols.push_back(std::move(col));
      }
  }
  IntMatrix rel(n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) rel(r, c) = cols[c][r];
  return PresentedGroup(n, std::move(rel));
}

IntMatrix antisym_to_exterior(int d, std::size_t generators) {
  const auto words = PolyFunctor::tensor_power(d).basis_at(generators);
  const auto ext = PolyFunctor::ext_power(d);
  IntMatrix m(ext.rank_at(generators), words.size());
  for (std::size_t j = 0; j < words.size(); ++j) {
    BasisLabel w = words[j];
    const int sign = sort_with_sign(w);
    if (sign != 0) m(ext.index_of(generators, w), j) = sign;
  }
  return m;
}

FinAbGroup kernel_of_induced_map(const IntMatrix& f, const IntMatrix& r1, const IntMatrix& r2) {
  if (!solve_in_lattice(r2, f * r1))
    throw InvariantViolation("kernel_of_induced_map: map does not preserve relations");
  const std::size_t a = f.cols();
  // {x : f x ∈ im r2} is the projection of Ker[f | -r2] to the first a coordinates.
  const IntMatrix k = kernel_basis(hstack(f, -r2));
  const IntMatrix preimage = image_basis(k.block(0, 0, a, k.cols()));
  const IntMatrix coords = solve_in_lattice_or_throw(preimage, r1, "kernel_of_induced_map");
  return FinAbGroup::cokernel(coords);
}

FinAbGroup antisym_power(int d, const FinAbGroup& a) {
  return antisym_power(d, PresentedGroup::standard(a));
}

FinAbGroup antisym_power(int d, const PresentedGroup& a) {
  return antisym_presentation(d, a).normal_form();
}

FinAbGroup ask_power(int d, const FinAbGroup& a) { return ask_power(d, PresentedGroup::standard(a)); }

FinAbGroup ask_power(int d, const PresentedGroup& a) {
  const auto anti = antisym_presentation(d, a);
  const auto ext = exterior_presentation(d, a);
  return kernel_of_induced_map(antisym_to_exterior(d, a.generators()), anti.relations(),
                               ext.relations());
}

IntMatrix antisym_induced_map(int d, const IntMatrix& f) {
  IntMatrix k = f;
  for (int i = 1; i < d; ++i) k = kronecker(k, f);
  const auto source = antisym_presentation(d, PresentedGroup(f.cols(), IntMatrix(f.cols(), 0)));
  const auto target = antisym_presentation(d, PresentedGroup(f.rows(), IntMatrix(f.rows(), 0)));
  if (!solve_in_lattice(target.relations(), k * source.relations()))
    throw InvariantViolation("antisym_induced_map: Kronecker power does not descend");
  return k;
}

}  // namespace limrel
