#pragma once

// Brute-force computation of Hom, Ext, tensor and Tor between finite
// abelian groups by enumerating group elements. Shares no code with the
// closed-form tables in groups.cpp; it exists to check them.

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "kkboot/fg_group.hpp"

namespace kkboot {

enum class Bifunctor { Hom, Ext, Tensor, Tor };

std::string_view to_string(Bifunctor b);
/// Accepts "hom", "ext", "tensor", "tor" (case-insensitive).
Bifunctor parse_bifunctor(std::string_view name);

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOracleBound = 64;

/// G and H must be finite with |G|, |H| <= max_order; otherwise throws
/// BoundExceeded (infinite groups count as exceeding every bound).
///
/// G is split along its invariant factors d_i and H is enumerated
/// element by element:
///   Hom(G, H)  = prod_i { h in H : d_i h = 0 }          (generator images)
///   Ext(G, H)  = prod_i H / d_i H                       (Z --d_i--> Z resolution)
///   G (x) H    = prod_i H / d_i H
///   Tor(G, H)  = prod_i { h in H : d_i h = 0 }
/// The isomorphism type of each resulting finite group is recovered from
/// the counts #{x : m x = 0}.
FGGroup oracle_bifunctor(Bifunctor which, const FGGroup &g, const FGGroup &h,
                         std::uint64_t max_order = kDefaultOracleBound);

} // namespace kkboot
