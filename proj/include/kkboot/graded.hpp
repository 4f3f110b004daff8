#pragma once

// Z/2-graded groups and the graded bifunctors.
//
// Sign conventions: Hom has degree-preserving maps in degree 0 and
// degree-exchanging maps in degree 1; Ext likewise. The graded tensor
// product is (M (x) N)_e = sum_{i+j=e} M_i (x) N_j, and Tor is defined the
// same way with Tor_1 in place of (x). (One common printed form of the
// tensor formula reads "M_i + M_j"; that is a misprint for M_i (x) N_j.)

#include <cstdint>
#include <string>

#include "kkboot/groups.hpp"

namespace kkboot {

class Degree {
public:
  constexpr Degree() = default;
  constexpr explicit Degree(unsigned v) : v_(static_cast<std::uint8_t>(v & 1u)) {}

  constexpr unsigned value() const { return v_; }
  constexpr Degree operator+(Degree o) const { return Degree(v_ + o.v_); }
  constexpr Degree next() const { return Degree(v_ + 1u); }
  friend constexpr bool operator==(Degree, Degree) = default;

private:
  std::uint8_t v_ = 0;
};

inline constexpr Degree kEven{0};
inline constexpr Degree kOdd{1};

struct GradedGroup {
  GroupExpr deg0;
  GroupExpr deg1;

  const GroupExpr &operator[](Degree e) const { return e.value() == 0 ? deg0 : deg1; }
  GroupExpr &operator[](Degree e) { return e.value() == 0 ? deg0 : deg1; }

  bool is_zero() const { return deg0.is_zero() && deg1.is_zero(); }
  friend bool operator==(const GradedGroup &, const GradedGroup &) = default;

  /// "(deg0; deg1)"
  std::string to_string() const;
};

struct GradedValue {
  GroupValue deg0;
  GroupValue deg1;

  const GroupValue &operator[](Degree e) const { return e.value() == 0 ? deg0 : deg1; }
  GroupValue &operator[](Degree e) { return e.value() == 0 ? deg0 : deg1; }

  bool is_zero() const { return deg0.is_zero() && deg1.is_zero(); }
  bool is_exact() const { return deg0.is_exact() && deg1.is_exact(); }
  friend bool operator==(const GradedValue &, const GradedValue &) = default;

  std::string to_string() const;
};

GradedValue to_value(const GradedGroup &g);

GradedGroup place(const GroupExpr &m, Degree e);
GradedGroup suspend(const GradedGroup &m);
GradedValue suspend(const GradedValue &m);
GradedGroup direct_sum(const GradedGroup &a, const GradedGroup &b);
GradedValue direct_sum(const GradedValue &a, const GradedValue &b);

GradedValue graded_hom(const GradedGroup &m, const GradedGroup &n);
GradedValue graded_ext(const GradedGroup &m, const GradedGroup &n);
GradedGroup graded_tensor(const GradedGroup &m, const GradedGroup &n);
GradedGroup graded_tor(const GradedGroup &m, const GradedGroup &n);

} // namespace kkboot
