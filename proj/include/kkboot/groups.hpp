#pragma once

// Countable abelian groups built from finitely generated groups, copies of
// Q and Pruefer groups I(p) = Z[1/p]/Z, together with Hom, Ext, tensor and
// Tor on them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kkboot/fg_group.hpp"
#include "kkboot/spec_z.hpp"

namespace kkboot {

/// Indecomposable divisible group: Q (for the generic point) or I(p).
struct DivAtom {
  enum class Kind { Rationals, Prufer };
  Kind kind = Kind::Rationals;
  Prime p = 0;

  static DivAtom rationals() { return {}; }
  /// Throws InvalidPoint unless p is prime.
  static DivAtom prufer(Prime p);

  friend auto operator<=>(const DivAtom &, const DivAtom &) = default;
};

/// fg + Q^q_copies + sum of I(p) over the `prufer` multiset.
class GroupExpr {
public:
  GroupExpr() = default;
  GroupExpr(FGGroup fg, std::size_t q_copies = 0, std::vector<Prime> prufer = {});

  static GroupExpr zero() { return {}; }
  static GroupExpr free(std::size_t rank) { return GroupExpr(FGGroup::free(rank)); }
  static GroupExpr cyclic(const Integer &n) { return GroupExpr(FGGroup::cyclic(n)); }
  static GroupExpr rationals(std::size_t copies = 1) { return GroupExpr({}, copies); }
  static GroupExpr prufer_group(Prime p);
  static GroupExpr atom(const DivAtom &a);

  const FGGroup &fg() const { return fg_; }
  std::size_t q_copies() const { return q_copies_; }
  /// Sorted multiset of primes.
  const std::vector<Prime> &prufer() const { return prufer_; }

  bool is_zero() const { return fg_.is_zero() && q_copies_ == 0 && prufer_.empty(); }
  bool has_divisible_atoms() const { return q_copies_ != 0 || !prufer_.empty(); }
  /// Finitely generated: no divisible atoms.
  bool is_finitely_generated() const { return !has_divisible_atoms(); }
  /// Free abelian: no torsion and no atoms.
  bool is_free() const { return fg_.is_free() && !has_divisible_atoms(); }
  /// Divisible: the finitely generated part is trivial.
  bool is_divisible() const { return fg_.is_zero(); }

  friend bool operator==(const GroupExpr &, const GroupExpr &) = default;

  /// Summands joined by " + ", e.g. "Z^2 + Z/12 + Q + I(3)"; "0" for zero.
  std::string to_string() const;

private:
  FGGroup fg_;
  std::size_t q_copies_ = 0;
  std::vector<Prime> prufer_;
};

GroupExpr direct_sum(const GroupExpr &a, const GroupExpr &b);

/// f.g. part from a presentation matrix (cokernel of Z^cols -> Z^rows), plus
/// divisible atoms.
GroupExpr canonicalize(const IntMatrix &presentation, std::size_t q_copies = 0,
                       std::vector<Prime> prufer = {});

/// Result of Hom or Ext: an exact group, or a nonzero group outside the
/// supported algebra (p-adic integers, Ext(Q, Z), ...) that may only be
/// tested for vanishing. Tags name the offending summands.
class GroupValue {
public:
  GroupValue() = default;
  GroupValue(GroupExpr g) : exact_(std::move(g)) {} // NOLINT(implicit)
  static GroupValue unrepresentable(std::string tag);

  bool is_exact() const { return exact_.has_value(); }
  bool is_zero() const { return exact_ && exact_->is_zero(); }
  /// Throws std::logic_error if unrepresentable.
  const GroupExpr &exact() const;
  const std::vector<std::string> &tags() const { return tags_; }

  friend bool operator==(const GroupValue &, const GroupValue &) = default;
  friend GroupValue direct_sum(const GroupValue &a, const GroupValue &b);

  /// The group, or "nonzero (unrepresentable: tag, ...)".
  std::string to_string() const;

private:
  std::optional<GroupExpr> exact_ = GroupExpr{};
  std::vector<std::string> tags_;
};

/// Unrepresentable absorbs everything; tags accumulate as a sorted set.
GroupValue direct_sum(const GroupValue &a, const GroupValue &b);

GroupValue hom(const GroupExpr &g, const GroupExpr &h);
GroupValue ext(const GroupExpr &g, const GroupExpr &h);
GroupExpr tensor(const GroupExpr &g, const GroupExpr &h);
GroupExpr tor(const GroupExpr &g, const GroupExpr &h);

/// Whether G_(q) = 0. At the generic point this is rationalization, which
/// kills all torsion (including every I(p)).
bool localization_vanishes(const GroupExpr &g, SpecPoint q);

/// Points p with I(p) occurring in the minimal injective resolution of G.
SpecSubset injective_support(const GroupExpr &g);

} // namespace kkboot
