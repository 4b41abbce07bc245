#include "limrel/functor.hpp"

#include "limrel/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <utility>

namespace limrel {

namespace {

enum class Family { Tensor, Sym, Ext, Dual };

struct LabelTable {
  std::vector<BasisLabel> labels;
  std::map<BasisLabel, std::size_t> index;
};

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lexicographic enumeration of words of length d over [0, n).
void enumerate_labels(Family family, std::size_t n, int d, std::vector<BasisLabel>& out) {
  BasisLabel word(static_cast<std::size_t>(d));
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == d) {
      out.push_back(word);
      return;
    }
    int lo = 0;
    if (pos > 0 && family == Family::Sym) lo = word[pos - 1];
    if (pos > 0 && family == Family::Ext) lo = word[pos - 1] + 1;
    for (int i = lo; i < static_cast<int>(n); ++i) {
      word[pos] = i;
      self(self, pos + 1);
    }
  };
  if (n > 0) rec(rec, 0);
}

struct ColumnSupport {
  std::vector<std::vector<std::pair<int, Integer>>> entries;  // per source index

  explicit ColumnSupport(const IntMatrix& m) : entries(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (sgn(m(r, c)) != 0) entries[c].emplace_back(static_cast<int>(r), m(r, c));
  }
};

}  // namespace

struct PolyFunctor::Impl {
  Family family;
  int degree;
  std::string name;
  std::shared_ptr<const Impl> inner;  // Dual only

  mutable std::mutex cache_mutex;
  mutable std::map<std::size_t, std::shared_ptr<const LabelTable>> cache;

  Impl(Family f, int d, std::string n, std::shared_ptr<const Impl> in = nullptr)
      : family(f), degree(d), name(std::move(n)), inner(std::move(in)) {}

  const Impl& base() const { return family == Family::Dual ? inner->base() : *this; }

  std::size_t rank_at(std::size_t n) const {
    switch (family) {
      case Family::Tensor: {
        std::size_t r = 1;
        for (int i = 0; i < degree; ++i) r *= n;
        return r;
      }
      case Family::Sym: return n == 0 ? 0 : binomial(n + degree - 1, degree);
      case Family::Ext: return binomial(n, degree);
      case Family::Dual: return inner->rank_at(n);
    }
    return 0;
  }

  std::shared_ptr<const LabelTable> table(std::size_t n) const {
    if (family == Family::Dual) return inner->table(n);
    std::lock_guard lock(cache_mutex);
    auto& slot = cache[n];
    if (!slot) {
      auto t = std::make_shared<LabelTable>();
      enumerate_labels(family, n, degree, t->labels);
      for (std::size_t i = 0; i < t->labels.size(); ++i) t->index.emplace(t->labels[i], i);
      slot = std::move(t);
    }
    return slot;
  }

  // Image of one basis label of Φ(Z^cols) under a base (non-dual) family, as
  // label -> coefficient in Φ(Z^rows).
  std::map<BasisLabel, Integer> image(const ColumnSupport& support, const BasisLabel& label) const {
    std::map<BasisLabel, Integer> acc;
    BasisLabel word(label.size());
    auto rec = [&](auto&& self, std::size_t pos, const Integer& coeff) -> void {
      if (pos == label.size()) {
        BasisLabel key = word;
        int sign = 1;
        if (family == Family::Sym) {
          std::sort(key.begin(), key.end());
        } else if (family == Family::Ext) {
          // insertion sort, tracking the permutation sign; repeated index means zero
          for (std::size_t i = 1; i < key.size(); ++i)
            for (std::size_t j = i; j > 0 && key[j - 1] > key[j]; --j) {
              std::swap(key[j - 1], key[j]);
              sign = -sign;
            }
          for (std::size_t i = 1; i < key.size(); ++i)
            if (key[i] == key[i - 1]) return;
        }
        auto [it, inserted] = acc.try_emplace(std::move(key), 0);
        if (sign > 0)
          it->second += coeff;
        else
          it->second -= coeff;
        return;
      }
      for (const auto& [row, value] : support.entries[label[pos]]) {
        word[pos] = row;
        self(self, pos + 1, coeff * value);
      }
    };
    rec(rec, 0, Integer(1));
    return acc;
  }

  IntMatrix apply_columns(const IntMatrix& m, std::span<const std::size_t> columns) const {
    if (family == Family::Dual) {
      const IntMatrix full = inner->apply_map(m.transpose()).transpose();
      return full.select_cols(columns);
    }
    const auto source = table(m.cols());
    const auto target = table(m.rows());
    const ColumnSupport support(m);
    IntMatrix out(target->labels.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      for (auto& [label, coeff] : image(support, source->labels.at(columns[j]))) {
        if (sgn(coeff) == 0) continue;
        out(target->index.at(label), j) = std::move(coeff);
      }
    }
    return out;
  }

  IntMatrix apply_map(const IntMatrix& m) const {
    if (family == Family::Dual) return inner->apply_map(m.transpose()).transpose();
    std::vector<std::size_t> all(rank_at(m.cols()));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return apply_columns(m, all);
  }
};

namespace {

void check_degree(int d) {
  if (d < 1) throw std::invalid_argument("functor degree must be at least 1 (Φ(0) = 0 is required)");
}

}  // namespace

PolyFunctor PolyFunctor::tensor_power(int d) {
  check_degree(d);
  return PolyFunctor(std::make_shared<Impl>(Family::Tensor, d, "tensor:" + std::to_string(d)));
}

PolyFunctor PolyFunctor::sym_power(int d) {
  check_degree(d);
  return PolyFunctor(std::make_shared<Impl>(Family::Sym, d, "sym:" + std::to_string(d)));
}

PolyFunctor PolyFunctor::ext_power(int d) {
  check_degree(d);
  return PolyFunctor(std::make_shared<Impl>(Family::Ext, d, "ext:" + std::to_string(d)));
}

PolyFunctor PolyFunctor::divided_power(int d) {
  const auto sym = sym_power(d);
  return PolyFunctor(std::make_shared<Impl>(Family::Dual, d, "gamma:" + std::to_string(d), sym.impl_));
}

PolyFunctor PolyFunctor::kuhn_dual(const PolyFunctor& f) {
  if (f.impl_->family == Family::Dual) return PolyFunctor(f.impl_->inner);  // Φ^## = Φ
  return PolyFunctor(
      std::make_shared<Impl>(Family::Dual, f.degree(), "dual(" + f.name() + ")", f.impl_));
}

const std::string& PolyFunctor::name() const { return impl_->name; }
int PolyFunctor::degree() const { return impl_->degree; }
std::size_t PolyFunctor::rank_at(std::size_t n) const { return impl_->rank_at(n); }

const std::vector<BasisLabel>& PolyFunctor::basis_at(std::size_t n) const {
  // the table is cached for the lifetime of the functor, so the reference stays valid
  return impl_->table(n)->labels;
}

std::size_t PolyFunctor::index_of(std::size_t n, const BasisLabel& label) const {
  return impl_->table(n)->index.at(label);
}

IntMatrix PolyFunctor::apply_map(const IntMatrix& m) const { return impl_->apply_map(m); }

IntMatrix PolyFunctor::apply_columns(const IntMatrix& m, std::span<const std::size_t> columns) const {
  return impl_->apply_columns(m, columns);
}

std::vector<int> PolyFunctor::multidegree(const BasisLabel& label, std::span<const std::size_t> parts) {
  std::vector<std::size_t> start(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) start[i + 1] = start[i] + parts[i];
  std::vector<int> deg(parts.size(), 0);
  for (int idx : label) {
    auto it = std::upper_bound(start.begin(), start.end(), static_cast<std::size_t>(idx));
    ++deg[static_cast<std::size_t>(it - start.begin()) - 1];
  }
  return deg;
}

namespace {

class FunctorParser {
 public:
  explicit FunctorParser(std::string_view text) : text_(text) {}

  PolyFunctor parse() {
    auto f = functor();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input in functor literal", pos_);
    return f;
  }

 private:
  PolyFunctor functor() {
    skip_ws();
    const std::size_t start = pos_;
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      word += text_[pos_++];
    skip_ws();
    if (word == "dual") {
      expect('(');
      auto inner = functor();
      skip_ws();
      expect(')');
      return PolyFunctor::kuhn_dual(inner);
    }
    expect(':');
    skip_ws();
    const std::size_t num_start = pos_;
    int d = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      d = d * 10 + (text_[pos_++] - '0');
    if (num_start == pos_) throw ParseError("expected a degree", num_start);
    if (d < 1) throw ParseError("functor degree must be at least 1", num_start);
    if (word == "tensor") return PolyFunctor::tensor_power(d);
    if (word == "sym") return PolyFunctor::sym_power(d);
    if (word == "ext") return PolyFunctor::ext_power(d);
    if (word == "gamma") return PolyFunctor::divided_power(d);
    throw ParseError("unknown functor '" + word + "'", start);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyFunctor parse_functor(std::string_view text) { return FunctorParser(text).parse(); }

}  // namespace limrel
