#include "limrel/abelian_group.hpp"

#include "limrel/smith.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace limrel {

FinAbGroup FinAbGroup::cyclic(const Integer& order) { return from_moduli(0, {order}); }

FinAbGroup FinAbGroup::from_moduli(std::size_t free_rank, const std::vector<Integer>& moduli) {
  IntMatrix m(free_rank + moduli.size(), moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) m(free_rank + i, i) = abs(moduli[i]);
  return cokernel(m);
}

FinAbGroup FinAbGroup::from_invariants(std::size_t free_rank, std::vector<Integer> torsion) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw std::invalid_argument("FinAbGroup: invariant factor below 2");
    if (i > 0 && !mpz_divisible_p(torsion[i].get_mpz_t(), torsion[i - 1].get_mpz_t()))
      throw std::invalid_argument("FinAbGroup: invariant factors do not form a divisibility chain");
  }
  return FinAbGroup(free_rank, std::move(torsion));
}

FinAbGroup FinAbGroup::cokernel(const IntMatrix& m) {
  const auto d = invariant_factors(m);
  std::vector<Integer> torsion;
  for (const auto& x : d)
    if (x != 1) torsion.push_back(x);
  return FinAbGroup(m.rows() - d.size(), std::move(torsion));
}

bool FinAbGroup::annihilated_by(const Integer& n) const {
  if (free_rank_ != 0) return false;
  for (const auto& t : torsion_)
    if (!mpz_divisible_p(n.get_mpz_t(), t.get_mpz_t())) return false;
  return true;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ == 1) {
    os << "Z";
    first = false;
  } else if (free_rank_ > 1) {
    os << "Z^" << free_rank_;
    first = false;
  }
  for (const auto& t : torsion_) {
    if (!first) os << '+';
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g) { return os << g.to_string(); }

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) { return direct_sum({a, b}); }

FinAbGroup direct_sum(const std::vector<FinAbGroup>& parts) {
  std::size_t free = 0;
  std::vector<Integer> moduli;
  for (const auto& p : parts) {
    free += p.free_rank();
    moduli.insert(moduli.end(), p.torsion().begin(), p.torsion().end());
  }
  return FinAbGroup::from_moduli(free, moduli);
}

FinAbGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_in.rows() != d_out.cols())
    throw std::invalid_argument("homology_at: differentials do not meet at the same module");
  if (!(d_out * d_in).is_zero())
    throw InvariantViolation("homology_at: d_out * d_in != 0");
  // Ker(d_out) is saturated, so Ker/Im has the torsion of Coker(d_in).
  const auto in_factors = invariant_factors(d_in);
  const std::size_t out_rank = matrix_rank(d_out);
  std::vector<Integer> torsion;
  for (const auto& x : in_factors)
    if (x != 1) torsion.push_back(x);
  return FinAbGroup::from_invariants(d_in.rows() - out_rank - in_factors.size(), std::move(torsion));
}

FinAbGroup dual_vee(const FinAbGroup& a) { return FinAbGroup::free(a.free_rank()); }

IntMatrix dual_vee(const IntMatrix& f) { return f.transpose(); }

FinAbGroup dual_diamond(const FinAbGroup& a) { return FinAbGroup::from_invariants(0, a.torsion()); }

namespace {

class GroupParser {
 public:
  explicit GroupParser(std::string_view text) : text_(text) {}

  FinAbGroup parse() {
    std::size_t free = 0;
    std::vector<Integer> moduli;
    skip_ws();
    if (at_end()) throw ParseError("empty group literal", pos_);
    for (;;) {
      skip_ws();
      const std::size_t start = pos_;
      if (peek() == '0') {
        ++pos_;
      } else if (peek() == 'Z') {
        ++pos_;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          const auto r = number();
          free += r.get_ui();
        } else if (peek() == '/') {
          ++pos_;
          const auto n = number();
          if (n < 1) throw ParseError("cyclic order must be positive", start);
          moduli.push_back(n);
        } else {
          free += 1;
        }
      } else {
        throw ParseError("expected 'Z' or '0'", pos_);
      }
      skip_ws();
      if (at_end()) break;
      if (peek() != '+') throw ParseError("expected '+'", pos_);
      ++pos_;
    }
    return FinAbGroup::from_moduli(free, moduli);
  }

 private:
  Integer number() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FinAbGroup parse_group(std::string_view text) { return GroupParser(text).parse(); }

PresentedGroup::PresentedGroup(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() != generators_ && !(relations_.cols() == 0 && relations_.rows() == 0))
    throw std::invalid_argument("PresentedGroup: relation rows must equal the generator count");
  if (relations_.rows() != generators_) relations_ = IntMatrix(generators_, 0);
}

PresentedGroup PresentedGroup::standard(const FinAbGroup& a) {
  const std::size_t g = a.generator_count();
  IntMatrix rel(g, a.torsion().size());
  for (std::size_t i = 0; i < a.torsion().size(); ++i) rel(a.free_rank() + i, i) = a.torsion()[i];
  return PresentedGroup(g, std::move(rel));
}

FinAbGroup PresentedGroup::normal_form() const { return FinAbGroup::cokernel(relations_); }

IntMatrix PresentedGroup::kernel_embedding() const { return image_basis(relations_); }

PresentedGroup PresentedGroup::with_extra_generators(std::size_t extra) const {
  const std::size_t g = generators_ + extra;
  IntMatrix rel(g, relations_.cols() + extra);
  rel.set_block(0, 0, relations_);
  for (std::size_t j = 0; j < extra; ++j) {
    const std::size_t col = relations_.cols() + j;
    rel(generators_ + j, col) = 1;
    if (generators_ > 0) rel(j % generators_, col) = -1;
  }
  return PresentedGroup(g, std::move(rel));
}

PresentedGroup PresentedGroup::with_redundant_relators(const IntMatrix& combination) const {
  return PresentedGroup(generators_, hstack(relations_, relations_ * combination));
}

}  // namespace limrel
