#include "limrel/simplicial.hpp"

#include "limrel/smith.hpp"

#include <map>
#include <set>
#include <sstream>

namespace limrel {

namespace {

void check(std::vector<std::string>& failures, bool ok, const std::string& what) {
  if (!ok) failures.push_back(what);
}

std::string tag(const char* identity, std::size_t level, std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << identity << " at level " << level << " (i=" << i << ", j=" << j << ")";
  return os.str();
}

IntMatrix alternating_sum(const std::vector<IntMatrix>& maps, std::size_t rows, std::size_t cols) {
  IntMatrix sum(rows, cols);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (i % 2 == 0)
      sum += maps[i];
    else
      sum -= maps[i];
  }
  return sum;
}

}  // namespace

std::vector<std::string> CosimplicialModule::identity_failures() const {
  std::vector<std::string> failures;
  const std::size_t L = top();
  for (std::size_t n = 0; n + 1 <= L; ++n) {
    // d^j d^i = d^i d^{j-1}, i < j
    if (n + 2 <= L)
      for (std::size_t j = 1; j <= n + 2; ++j)
        for (std::size_t i = 0; i < j; ++i)
          check(failures, cofaces[n + 1][j] * cofaces[n][i] == cofaces[n + 1][i] * cofaces[n][j - 1],
                tag("d^j d^i = d^i d^{j-1}", n, i, j));
    // s^j d^i from level n through n+1
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= n + 1; ++i) {
        const IntMatrix lhs = codegeneracies[n + 1][j] * cofaces[n][i];
        if (i < j)
          check(failures, lhs == cofaces[n - 1][i] * codegeneracies[n][j - 1], tag("s^j d^i (i<j)", n, i, j));
        else if (i == j || i == j + 1)
          check(failures, lhs.is_identity(), tag("s^j d^i = id", n, i, j));
        else
          check(failures, lhs == cofaces[n - 1][i - 1] * codegeneracies[n][j], tag("s^j d^i (i>j+1)", n, i, j));
      }
  }
  // s^j s^i = s^i s^{j+1}, i ≤ j, from level m
  for (std::size_t m = 2; m <= L; ++m)
    for (std::size_t j = 0; j + 2 <= m; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        check(failures,
              codegeneracies[m - 1][j] * codegeneracies[m][i] ==
                  codegeneracies[m - 1][i] * codegeneracies[m][j + 1],
              tag("s^j s^i = s^i s^{j+1}", m, i, j));
  return failures;
}

std::vector<std::string> SimplicialModule::identity_failures() const {
  std::vector<std::string> failures;
  const std::size_t L = top();
  // d_i d_j = d_{j-1} d_i, i < j, from level n ≥ 2
  for (std::size_t n = 2; n <= L; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        check(failures, faces[n - 1][i] * faces[n][j] == faces[n - 1][j - 1] * faces[n][i],
              tag("d_i d_j = d_{j-1} d_i", n, i, j));
  // d_i s_j from level n through n+1
  for (std::size_t n = 0; n + 1 <= L; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= n + 1; ++i) {
        const IntMatrix lhs = faces[n + 1][i] * degeneracies[n][j];
        if (i < j)
          check(failures, lhs == degeneracies[n - 1][j - 1] * faces[n][i], tag("d_i s_j (i<j)", n, i, j));
        else if (i == j || i == j + 1)
          check(failures, lhs.is_identity(), tag("d_i s_j = id", n, i, j));
        else
          check(failures, lhs == degeneracies[n - 1][j] * faces[n][i - 1], tag("d_i s_j (i>j+1)", n, i, j));
      }
  // s_i s_j = s_{j+1} s_i, i ≤ j, from level n
  for (std::size_t n = 0; n + 2 <= L; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        check(failures, degeneracies[n + 1][i] * degeneracies[n][j] == degeneracies[n + 1][j + 1] * degeneracies[n][i],
              tag("s_i s_j = s_{j+1} s_i", n, i, j));
  return failures;
}

CochainComplex nonnormalized_cochain(const CosimplicialModule& v) {
  std::vector<IntMatrix> diffs;
  for (std::size_t n = 0; n < v.top(); ++n)
    diffs.push_back(alternating_sum(v.cofaces[n], v.ranks[n + 1], v.ranks[n]));
  return CochainComplex(v.ranks, std::move(diffs));
}

NormalizedCochain normalized_cochain_with_inclusions(const CosimplicialModule& v) {
  NormalizedCochain out;
  out.inclusions.push_back(IntMatrix::identity(v.ranks[0]));
  for (std::size_t n = 1; n <= v.top(); ++n) {
    IntMatrix stacked(0, v.ranks[n]);
    for (const auto& s : v.codegeneracies[n]) stacked = vstack(stacked, s);
    out.inclusions.push_back(kernel_basis(stacked));
  }
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> diffs;
  for (std::size_t n = 0; n <= v.top(); ++n) ranks.push_back(out.inclusions[n].cols());
  for (std::size_t n = 0; n < v.top(); ++n) {
    const IntMatrix image = alternating_sum(v.cofaces[n], v.ranks[n + 1], v.ranks[n]) * out.inclusions[n];
    diffs.push_back(solve_in_lattice_or_throw(out.inclusions[n + 1], image, "normalized_cochain"));
  }
  out.complex = CochainComplex(std::move(ranks), std::move(diffs));
  return out;
}

CochainComplex normalized_cochain(const CosimplicialModule& v) {
  return normalized_cochain_with_inclusions(v).complex;
}

ChainComplex nonnormalized_chain(const SimplicialModule& v) {
  std::vector<IntMatrix> diffs;
  for (std::size_t n = 1; n <= v.top(); ++n)
    diffs.push_back(alternating_sum(v.faces[n], v.ranks[n - 1], v.ranks[n]));
  return ChainComplex(v.ranks, std::move(diffs));
}

NormalizedChain normalized_chain_with_maps(const SimplicialModule& v) {
  NormalizedChain out;
  std::vector<IntMatrix> degenerate;
  degenerate.emplace_back(v.ranks[0], 0);
  out.quotients.push_back(IntMatrix::identity(v.ranks[0]));
  out.sections.push_back(IntMatrix::identity(v.ranks[0]));
  for (std::size_t n = 1; n <= v.top(); ++n) {
    IntMatrix deg(v.ranks[n], 0);
    for (const auto& s : v.degeneracies[n - 1]) deg = hstack(deg, s);
    auto split = split_cokernel(deg);
    out.quotients.push_back(std::move(split.quotient));
    out.sections.push_back(std::move(split.section));
    degenerate.push_back(std::move(deg));
  }
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> diffs;
  for (std::size_t n = 0; n <= v.top(); ++n) ranks.push_back(out.quotients[n].rows());
  for (std::size_t n = 1; n <= v.top(); ++n) {
    const IntMatrix boundary = alternating_sum(v.faces[n], v.ranks[n - 1], v.ranks[n]);
    if (!(out.quotients[n - 1] * boundary * degenerate[n]).is_zero())
      throw InvariantViolation("normalized_chain: boundary does not preserve degenerate elements");
    diffs.push_back(out.quotients[n - 1] * boundary * out.sections[n]);
  }
  out.complex = ChainComplex(std::move(ranks), std::move(diffs));
  return out;
}

ChainComplex normalized_chain(const SimplicialModule& v) { return normalized_chain_with_maps(v).complex; }

CosimplicialModule dk_of_map(const IntMatrix& f, std::size_t top) {
  const std::size_t u0 = f.cols(), u1 = f.rows();
  CosimplicialModule v;
  for (std::size_t n = 0; n <= top; ++n) v.ranks.push_back(n * u1 + u0);
  v.cofaces.resize(top);
  v.codegeneracies.resize(top + 1);
  // level n coordinates: (x_0, ..., x_{n-1}, y) with x_k ∈ U^1 at offset k*u1, y at n*u1
  for (std::size_t n = 0; n < top; ++n) {
    const std::size_t src = v.ranks[n], dst = v.ranks[n + 1];
    for (std::size_t i = 0; i <= n + 1; ++i) {
      IntMatrix d(dst, src);
      for (std::size_t r = 0; r < u0; ++r) d((n + 1) * u1 + r, n * u1 + r) = 1;  // y ↦ y
      if (i == 0) {
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t r = 0; r < u1; ++r) d((k + 1) * u1 + r, k * u1 + r) = 1;
      } else if (i <= n) {
        // duplicate x_{i-1}: output slots 0..i-1 copy x_0..x_{i-1}, slots i..n copy x_{i-1}..x_{n-1}
        for (std::size_t k = 0; k <= n; ++k) {
          const std::size_t from = k < i ? k : k - 1;
          for (std::size_t r = 0; r < u1; ++r) d(k * u1 + r, from * u1 + r) = 1;
        }
      } else {
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t r = 0; r < u1; ++r) d(k * u1 + r, k * u1 + r) = 1;
        d.set_block(n * u1, n * u1, f);  // x_n = f(y)
      }
      v.cofaces[n].push_back(std::move(d));
    }
  }
  for (std::size_t n = 1; n <= top; ++n) {
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix s(v.ranks[n - 1], v.ranks[n]);
      for (std::size_t k = 0, out = 0; k < n; ++k) {
        if (k == i) continue;
        for (std::size_t r = 0; r < u1; ++r) s(out * u1 + r, k * u1 + r) = 1;
        ++out;
      }
      for (std::size_t r = 0; r < u0; ++r) s((n - 1) * u1 + r, n * u1 + r) = 1;
      v.codegeneracies[n].push_back(std::move(s));
    }
  }
  return v;
}

std::vector<std::vector<int>> order_surjections(std::size_t n) {
  // σ(0) = 0 and each step adds 0 or 1; grouped by k = σ(n), then lexicographic.
  std::vector<std::vector<int>> all;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> seq{0};
    for (std::size_t t = 0; t < n; ++t) seq.push_back(seq.back() + static_cast<int>((mask >> (n - 1 - t)) & 1));
    all.push_back(std::move(seq));
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.back() != b.back() ? a.back() < b.back() : a < b;
  });
  return all;
}

namespace {

struct DkLevel {
  std::vector<std::vector<int>> surjections;
  std::vector<std::size_t> offsets;
  std::map<std::vector<int>, std::size_t> index;
  std::size_t rank = 0;
};

DkLevel dk_level(const ChainComplex& u, std::size_t n) {
  DkLevel level;
  level.surjections = order_surjections(n);
  for (std::size_t s = 0; s < level.surjections.size(); ++s) {
    level.offsets.push_back(level.rank);
    level.index.emplace(level.surjections[s], s);
    level.rank += u.rank(static_cast<std::size_t>(level.surjections[s].back()));
  }
  return level;
}

// f^*: DK_n -> DK_m for an order-preserving f: [m] -> [n] given by its values.
IntMatrix dk_structure_map(const ChainComplex& u, const DkLevel& from, const DkLevel& to,
                           const std::vector<int>& f) {
  IntMatrix out(to.rank, from.rank);
  for (std::size_t s = 0; s < from.surjections.size(); ++s) {
    const auto& sigma = from.surjections[s];
    const int k = sigma.back();
    const std::size_t uk = u.rank(static_cast<std::size_t>(k));
    if (uk == 0) continue;
    std::vector<int> g;
    std::set<int> image;
    for (int t : f) {
      g.push_back(sigma[static_cast<std::size_t>(t)]);
      image.insert(g.back());
    }
    const bool surjective = static_cast<int>(image.size()) == k + 1;
    const bool misses_only_top = k >= 1 && static_cast<int>(image.size()) == k && !image.count(k);
    if (!surjective && !misses_only_top) continue;
    const std::size_t tcol = from.offsets[s];
    const std::size_t trow = to.offsets[to.index.at(g)];
    if (surjective) {
      for (std::size_t r = 0; r < uk; ++r) out(trow + r, tcol + r) = 1;
    } else {
      out.set_block(trow, tcol, u.differential(static_cast<std::size_t>(k)));
    }
  }
  return out;
}

}  // namespace

SimplicialModule dk_chain(const ChainComplex& u, std::size_t top) {
  std::vector<DkLevel> levels;
  SimplicialModule v;
  for (std::size_t n = 0; n <= top; ++n) {
    levels.push_back(dk_level(u, n));
    v.ranks.push_back(levels.back().rank);
  }
  v.faces.resize(top + 1);
  v.degeneracies.resize(top);
  for (std::size_t n = 1; n <= top; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<int> delta;  // δ^i: [n-1] -> [n], skips i
      for (int t = 0; t <= static_cast<int>(n); ++t)
        if (t != static_cast<int>(i)) delta.push_back(t);
      v.faces[n].push_back(dk_structure_map(u, levels[n], levels[n - 1], delta));
    }
  for (std::size_t n = 0; n < top; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<int> sigma;  // σ^i: [n+1] -> [n], hits i twice
      for (int t = 0; t <= static_cast<int>(n) + 1; ++t) sigma.push_back(t <= static_cast<int>(i) ? t : t - 1);
      v.degeneracies[n].push_back(dk_structure_map(u, levels[n], levels[n + 1], sigma));
    }
  return v;
}

CosimplicialModule apply_levelwise(const PolyFunctor& f, const CosimplicialModule& v) {
  CosimplicialModule out;
  for (auto r : v.ranks) out.ranks.push_back(f.rank_at(r));
  for (const auto& level : v.cofaces) {
    auto& dst = out.cofaces.emplace_back();
    for (const auto& m : level) dst.push_back(f.apply_map(m));
  }
  for (const auto& level : v.codegeneracies) {
    auto& dst = out.codegeneracies.emplace_back();
    for (const auto& m : level) dst.push_back(f.apply_map(m));
  }
  return out;
}

SimplicialModule apply_levelwise(const PolyFunctor& f, const SimplicialModule& v) {
  SimplicialModule out;
  for (auto r : v.ranks) out.ranks.push_back(f.rank_at(r));
  for (const auto& level : v.faces) {
    auto& dst = out.faces.emplace_back();
    for (const auto& m : level) dst.push_back(f.apply_map(m));
  }
  for (const auto& level : v.degeneracies) {
    auto& dst = out.degeneracies.emplace_back();
    for (const auto& m : level) dst.push_back(f.apply_map(m));
  }
  return out;
}

}  // namespace limrel
