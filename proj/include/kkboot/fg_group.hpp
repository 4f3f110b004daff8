#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kkboot/linalg.hpp"

namespace kkboot {

/// Finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_k in
/// invariant-factor form: every d_i >= 2 and d_i | d_{i+1}. The canonical
/// form is unique per isomorphism class, so == is the isomorphism test.
class FGGroup {
public:
  FGGroup() = default;

  static FGGroup free(std::size_t rank);
  static FGGroup cyclic(const Integer &n);
  /// Accepts any list of cyclic orders: entries equal to 1 are dropped,
  /// entries equal to 0 become free summands, and the rest are merged into
  /// an invariant-factor chain.
  static FGGroup from_orders(std::size_t rank, std::vector<Integer> orders);
  /// Trusts the caller that `factors` is already a chain of entries >= 2.
  static FGGroup from_chain(std::size_t rank, std::vector<Integer> factors);

  std::size_t rank() const { return rank_; }
  const std::vector<Integer> &factors() const { return factors_; }

  bool is_zero() const { return rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return rank_ == 0; }
  bool is_free() const { return factors_.empty(); }
  /// Order of the torsion subgroup.
  Integer torsion_order() const;
  /// Number of generators in the canonical generator system: one per
  /// invariant factor (in chain order) followed by one per free summand.
  std::size_t generator_count() const { return factors_.size() + rank_; }
  /// Order of canonical generator i, with 0 meaning infinite order.
  Integer generator_order(std::size_t i) const;
  /// Diagonal relation matrix presenting this group on its canonical
  /// generators.
  IntMatrix relation_matrix() const;

  friend bool operator==(const FGGroup &, const FGGroup &) = default;

  std::string to_string() const;

private:
  std::size_t rank_ = 0;
  std::vector<Integer> factors_;
};

FGGroup direct_sum(const FGGroup &a, const FGGroup &b);

/// coker(M : Z^cols -> Z^rows) in canonical form.
FGGroup cokernel_invariants(const IntMatrix &m);

} // namespace kkboot
