#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/linalg.hpp"

namespace nilrep {

/// The PBW monomial x_1^{a_1} ... x_d^{a_d} in the generator order of its algebra.
struct Monomial {
  std::vector<std::uint8_t> exponents;
  std::size_t weight = 0;

  std::size_t degree() const;
  bool is_one() const { return degree() == 0; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents == b.exponents; }
};

/// Weight ascending, then exponent vectors lexicographically ascending.
bool monomial_less(const Monomial& a, const Monomial& b);

/// "1", "x1^2*x3", ... using the supplied names or x1..xd.
std::string to_string(const Monomial& m, const std::vector<std::string>& names = {});

/// All exponent vectors with sum a_i * weights[i] <= c, in monomial_less order.
/// Throws std::invalid_argument if c < 0 or some weight is 0.
std::vector<Monomial> enumerate_monomials(std::span<const std::size_t> weights, long c);

/// U(g) / U^{c+1}(g) over a basis adapted to the lower central series (the
/// generators may come in any order), with a distinguished set A of
/// active monomials. Monomials outside A (and all monomials of weight > c)
/// act as zero.
///
/// Left multiplication x_i * x^a is straightened to PBW form using
/// x_i x_j = x_j x_i + [x_i, x_j] for j < i. The full product table over
/// all monomials of weight <= c is built at construction and shared by
/// copies with a different active set, so the object is immutable.
class TruncatedUEA {
 public:
  /// `algebra` must be written in a basis adapted to the lower central series
  /// with the given weights (in any order), and c must be its nilpotency
  /// class. All monomials start active.
  TruncatedUEA(const LieAlgebra& algebra, std::vector<std::size_t> weights, std::size_t c);
  /// Convenience: adapted basis first.
  static TruncatedUEA for_algebra(const LieAlgebra& g);

  const LieAlgebra& algebra() const { return table_->algebra; }
  std::size_t generators() const { return table_->algebra.dim(); }
  std::size_t nilpotency_class() const { return table_->c; }
  const std::vector<std::size_t>& weights() const { return table_->weights; }

  /// Every monomial of weight <= c, in monomial_less order.
  const std::vector<Monomial>& monomials() const { return table_->monomials; }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Indices (into monomials()) of the active set, in monomial order.
  const std::vector<std::size_t>& active() const { return active_; }
  bool is_active(std::size_t monomial_index) const { return position_[monomial_index] >= 0; }
  /// Position of a monomial inside active(), or -1.
  long position(std::size_t monomial_index) const { return position_[monomial_index]; }
  /// A copy with a different active set (indices into monomials()).
  TruncatedUEA with_active(std::vector<std::size_t> active) const;

  /// x_i * monomials()[m] modulo U^{c+1}, over monomial indices.
  const SparseVector& product(std::size_t i, std::size_t m) const;
  /// x_i * m with every inactive monomial dropped, over monomial indices.
  SparseVector left_multiply(std::size_t i, std::size_t m) const;
  SparseVector left_multiply(std::size_t i, const Monomial& m) const;

  /// The |A| x |A| matrix of x_i on span(A); column k is x_i * active()[k].
  SparseMatrix action_matrix(std::size_t i) const;

 private:
  struct Table {
    LieAlgebra algebra;
    std::vector<std::size_t> weights;
    std::size_t c = 0;
    std::vector<Monomial> monomials;
    std::vector<std::vector<SparseVector>> products;  // [generator][monomial]
    std::size_t lookup(const std::vector<std::uint8_t>& exps) const;
    std::vector<std::pair<std::vector<std::uint8_t>, std::size_t>> sorted_index;
  };

  TruncatedUEA(std::shared_ptr<const Table> table, std::vector<std::size_t> active);
  static std::shared_ptr<const Table> build(const LieAlgebra& algebra, std::vector<std::size_t> weights, std::size_t c);

  std::shared_ptr<const Table> table_;
  std::vector<std::size_t> active_;
  std::vector<long> position_;
};

}  // namespace nilrep
