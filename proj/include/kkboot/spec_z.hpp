#pragma once

// Points and subsets of Spec Z, plus the small amount of number theory the
// rest of the library needs.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kkboot/linalg.hpp"

namespace kkboot {

using Prime = std::uint64_t;

/// Deterministic primality for 64-bit inputs (Miller-Rabin with a fixed
/// witness set that is exact below 2^64).
bool is_prime(std::uint64_t n);

/// Distinct prime divisors of |n| in increasing order. Throws
/// std::domain_error if a cofactor exceeds 64 bits after trial division.
std::vector<Prime> prime_divisors(const Integer &n);

/// p-adic valuation of n (n != 0).
unsigned valuation(const Integer &n, Prime p);

Integer integer_pow(Prime p, unsigned k);

/// All primes <= bound, ascending.
std::vector<Prime> primes_up_to(std::uint64_t bound);

struct InvalidPoint : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A point of Spec Z: the generic point 0 or a prime p.
class SpecPoint {
public:
  static SpecPoint zero() { return SpecPoint(0); }
  /// Throws InvalidPoint unless p is prime.
  static SpecPoint prime(std::uint64_t p);
  /// 0 maps to the generic point, anything else must be prime.
  static SpecPoint parse(std::uint64_t v);

  bool is_zero() const { return value_ == 0; }
  /// The prime; meaningless for the generic point.
  Prime prime_value() const { return value_; }
  std::uint64_t value() const { return value_; }

  friend auto operator<=>(const SpecPoint &, const SpecPoint &) = default;

  std::string to_string() const { return std::to_string(value_); }

private:
  explicit SpecPoint(std::uint64_t v) : value_(v) {}
  std::uint64_t value_;
};

/// Either all of Spec Z or a finite, sorted, duplicate-free set of points.
class SpecSubset {
public:
  SpecSubset() = default; // empty finite set
  static SpecSubset all();
  static SpecSubset of(std::vector<SpecPoint> points);
  static SpecSubset empty() { return {}; }

  bool is_all() const { return all_; }
  bool is_empty() const { return !all_ && points_.empty(); }
  /// Points of a finite subset; empty for All.
  const std::vector<SpecPoint> &points() const { return points_; }

  bool contains(SpecPoint p) const;
  bool subset_of(const SpecSubset &other) const;

  friend SpecSubset set_union(const SpecSubset &a, const SpecSubset &b);
  friend SpecSubset set_intersection(const SpecSubset &a, const SpecSubset &b);
  friend bool operator==(const SpecSubset &, const SpecSubset &) = default;

  /// "All" or "{2, 3}".
  std::string to_string() const;
  /// Inverse of to_string; also accepts a bare comma list, "none" and "".
  static SpecSubset parse(const std::string &text);

private:
  bool all_ = false;
  std::vector<SpecPoint> points_;
};

} // namespace kkboot
