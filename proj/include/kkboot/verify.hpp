#pragma once

// Seeded corpora and the property suites behind `kkboot verify` and the
// acceptance test binary.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kkboot/oracle.hpp"
#include "kkboot/property.hpp"
#include "kkboot/spectrum.hpp"

namespace kkboot::verify {

/// Deterministic across platforms: only raw mt19937_64 output is used.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (engine_() >> 17) & 1; }

private:
  std::mt19937_64 engine_;
};

struct CorpusOptions {
  std::size_t max_rank = 3;
  std::size_t max_factors = 4;
  std::uint64_t max_factor = 64;
  std::size_t max_atoms = 2;
  std::uint64_t atom_prime_bound = 13;
};

GroupExpr random_group(Rng &rng, const CorpusOptions &opts, bool compact);
BootObject random_object(Rng &rng, const CorpusOptions &opts, bool compact);
std::vector<BootObject> object_corpus(std::uint64_t seed, std::size_t n,
                                      const CorpusOptions &opts, bool compact);

/// One representative of every isomorphism class of abelian groups of order
/// <= max_order.
std::vector<FGGroup> finite_groups_up_to(std::uint64_t max_order);
std::vector<std::pair<FGGroup, FGGroup>> finite_pair_corpus(std::uint64_t seed, std::size_t n,
                                                            std::uint64_t max_order);

/// Random well-defined morphism between random compact objects whose
/// finite parts stay small enough to enumerate.
HomPartMorphism random_morphism(Rng &rng, bool finite_only);

/// Points of Spec Z up to a bound: the generic point followed by primes.
std::vector<SpecPoint> points_up_to(std::uint64_t prime_bound);
/// Every finite subset of points_up_to(bound), plus All.
std::vector<SpecSubset> all_subsets(std::uint64_t prime_bound);
/// Every set of primes <= bound, plus All.
std::vector<SpecSubset> specialization_closed_subsets(std::uint64_t prime_bound);

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::uint64_t max_order = 64;
  std::size_t oracle_pairs = 500;
  std::size_t corpus_size = 200;
  std::size_t compact_corpus_size = 100;
  std::uint64_t classification_prime_bound = 13;
  std::uint64_t residue_prime_bound = 50;
  std::size_t families = 200;
  std::size_t morphisms = 100;
  std::uint64_t max_moore = 64;
};

// One function per acceptance criterion.
std::vector<PropertyResult> check_oracle_equivalence(const SuiteOptions &o);
std::vector<PropertyResult> check_uct(const SuiteOptions &o);
std::vector<PropertyResult> check_kunneth(const SuiteOptions &o);
std::vector<PropertyResult> check_residue_dichotomy(const SuiteOptions &o);
std::vector<PropertyResult> check_residue_decomposition(const SuiteOptions &o);
std::vector<PropertyResult> check_classification(const SuiteOptions &o);
std::vector<PropertyResult> check_smashing(const SuiteOptions &o);
std::vector<PropertyResult> check_bootV(const SuiteOptions &o);
std::vector<PropertyResult> check_support_datum(const SuiteOptions &o);
std::vector<PropertyResult> check_cones(const SuiteOptions &o);
std::vector<PropertyResult> check_prufer_colimit(const SuiteOptions &o);

struct UnknownSuite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Suite names: oracle, uct, kunneth, classification, smashing,
/// support-datum, cone, all.
const std::vector<std::string> &suite_names();
std::vector<PropertyResult> run_suite(const std::string &name, const SuiteOptions &o);

} // namespace kkboot::verify
