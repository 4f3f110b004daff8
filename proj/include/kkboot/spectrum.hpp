#pragma once

// Supports over Spec Z and the classification of localizing and thick
// subcategories by subsets of Spec Z.
//
// A subset S determines L_S = { A : K_*(A; F_p) = 0 for all p not in S },
// and S -> L_S is an inclusion-preserving bijection. L_S is smashing exactly
// when S is specialization closed (a set of primes, or everything).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kkboot/model.hpp"
#include "kkboot/property.hpp"

namespace kkboot {

struct LocalizingSubcat {
  SpecSubset S;
  friend bool operator==(const LocalizingSubcat &, const LocalizingSubcat &) = default;
};

struct NotSpecializationClosed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonCompactInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// { p : K_*(A; F_p) != 0 }, computed per summand.
SpecSubset supp(const BootObject &a);
/// Injective support of K_0 A together with K_1 A.
SpecSubset supp_injective(const BootObject &a);

bool member(const BootObject &a, const LocalizingSubcat &l);
/// A in Boot_V, i.e. supp_injective(A) is contained in V.
bool member_bootV(const BootObject &a, const SpecSubset &v);
/// K_*(A)_(q) = 0 for every q outside V. Throws NotSpecializationClosed.
bool localization_kernel_member(const BootObject &a, const SpecSubset &v);

bool is_specialization_closed(const SpecSubset &s);
SpecSubset specialization_closure(const SpecSubset &s);
bool is_smashing(const LocalizingSubcat &l);

/// Support of the localizing subcategory generated by the family.
SpecSubset generated_support(const std::vector<BootObject> &family);
bool in_generated(const BootObject &a, const std::vector<BootObject> &family);

/// A subset of Spec Z that may be cofinite: when `cofinite` is set it
/// stands for everything except `points`.
struct PointSet {
  bool cofinite = false;
  std::vector<SpecPoint> points;

  bool contains(SpecPoint p) const;
  std::string to_string() const;
};

/// Points p with kappa(p) in the right orthogonal of L, i.e. the
/// complement of L.S.
PointSet orthogonal_residues(const LocalizingSubcat &l);

/// Checks the support-datum axioms on a corpus of compact objects:
/// supp(0) empty, supp(unit) = All, additivity, suspension invariance,
/// cone containment (for unambiguous cones of zero and multiplication maps)
/// and supp(A (x) B) = supp A intersect supp B.
std::vector<PropertyResult> support_datum_check(const std::vector<BootObject> &corpus);

struct ThickClassificationReport {
  std::vector<SpecSubset> subsets; // specialization-closed subsets enumerated
  std::size_t distinct_classes = 0;
  std::vector<PropertyResult> checks;
  bool pass() const;
};

/// Enumerates the specialization-closed subsets over primes <= prime_bound
/// (plus All), generates each thick class from Moore objects, and checks
/// that the classes are pairwise distinct and closed under tensoring with
/// the witness objects.
ThickClassificationReport thick_classification_demo(std::uint64_t prime_bound);

} // namespace kkboot
