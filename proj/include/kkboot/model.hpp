#pragma once

// Objects of the bootstrap category, modeled by their K-theory.
//
// Two objects with isomorphic K-theory are isomorphic, so an object is its
// canonical graded K-theory plus a label recording how it was built. KK
// groups come from the split universal coefficient sequence and tensor
// products from the split Kuenneth sequence.

#include <stdexcept>
#include <string>
#include <vector>

#include "kkboot/graded.hpp"

namespace kkboot {

struct BootObject {
  GradedGroup ktheory;
  std::string label;

  bool is_zero() const { return ktheory.is_zero(); }
};

struct IllFormedMorphism : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The Hom-component of a KK class between objects with finitely generated
/// K-theory: one integer matrix per degree, acting on the canonical
/// generator systems of FGGroup (invariant-factor generators first, then
/// free generators). Column j of f_e is the image of generator j of
/// K_e(source).
class HomPartMorphism {
public:
  /// Throws IllFormedMorphism on shape mismatch, divisible atoms, or
  /// matrices that do not respect the relations.
  HomPartMorphism(BootObject source, BootObject target, IntMatrix f0, IntMatrix f1);

  const BootObject &source() const { return source_; }
  const BootObject &target() const { return target_; }
  const IntMatrix &matrix(Degree e) const { return e.value() == 0 ? f0_ : f1_; }

  /// Kernel and cokernel per degree.
  GradedGroup kernel() const;
  GradedGroup cokernel() const;

  /// this after `first`; first.target() must match source().
  HomPartMorphism compose_after(const HomPartMorphism &first) const;

private:
  BootObject source_, target_;
  IntMatrix f0_, f1_;
};

/// n times the identity of A (A compact).
HomPartMorphism multiplication(const BootObject &a, long n);
HomPartMorphism zero_morphism(const BootObject &source, const BootObject &target);

struct ConeResult {
  BootObject object;
  bool extension_ambiguous = false;
  GroupValue ambiguity_witness;
};

BootObject unit();
/// kappa(p): Z/p in degree 0, or Q for the generic point.
BootObject residue_object(SpecPoint p);
/// iota(p): I(p) in degree 0, or Q for the generic point.
BootObject injective_object(SpecPoint p);
/// Moore object: Z/n in degree 0.
BootObject moore_object(const Integer &n);
BootObject realize(const GradedGroup &m, std::string label = {});
BootObject suspend(const BootObject &a);
BootObject coproduct(const std::vector<BootObject> &objs);

/// KK_e(A, B) = Hom(K_*A, K_*B)_e + Ext(K_*A, K_*B)_{e+1}.
GradedValue kk_groups(const BootObject &a, const BootObject &b);
/// Whether the Ext term of the universal coefficient sequence vanishes.
bool kk_is_hom_only(const BootObject &a, const BootObject &b);

/// K_e(A (x) B) = (K_*A (x) K_*B)_e + Tor(K_*A, K_*B)_{e+1}.
BootObject tensor_object(const BootObject &a, const BootObject &b);
/// K_*(A; F_p) = K_*(A (x) kappa(p)).
GradedGroup k_with_coefficients(const BootObject &a, SpecPoint p);

/// K_e(cone) = coker_e + ker_{e+1}, the split representative of
/// coker_e >-> K_e(cone) ->> ker_{e+1}. The witness is the group of
/// extension classes Ext(ker_{e+1}, coker_e) summed over e.
ConeResult cone(const HomPartMorphism &phi);

bool is_isomorphic(const BootObject &a, const BootObject &b);
/// Finitely generated K-theory in both degrees.
bool is_compact(const BootObject &a);

} // namespace kkboot
