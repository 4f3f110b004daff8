#include "kkboot/spectrum.hpp"

#include <algorithm>
#include <set>

namespace kkboot {

namespace {

// Per-summand support of one graded piece: a free summand is seen by every
// residue field, Q only by the generic one, Z/n by the primes dividing n and
// I(p) by p alone (through Tor).
SpecSubset group_support(const GroupExpr &g) {
  if (g.fg().rank() > 0)
    return SpecSubset::all();
  std::vector<SpecPoint> pts;
  if (g.q_copies() > 0)
    pts.push_back(SpecPoint::zero());
  for (const auto &d : g.fg().factors())
    for (Prime p : prime_divisors(d))
      pts.push_back(SpecPoint::prime(p));
  for (Prime p : g.prufer())
    pts.push_back(SpecPoint::prime(p));
  return SpecSubset::of(std::move(pts));
}

std::vector<Prime> data_primes(const GroupExpr &g) {
  std::vector<Prime> out;
  if (!g.fg().factors().empty())
    out = prime_divisors(g.fg().factors().back());
  out.insert(out.end(), g.prufer().begin(), g.prufer().end());
  return out;
}

} // namespace

SpecSubset supp(const BootObject &a) {
  return set_union(group_support(a.ktheory.deg0), group_support(a.ktheory.deg1));
}

SpecSubset supp_injective(const BootObject &a) {
  return set_union(injective_support(a.ktheory.deg0), injective_support(a.ktheory.deg1));
}

bool member(const BootObject &a, const LocalizingSubcat &l) { return supp(a).subset_of(l.S); }

bool member_bootV(const BootObject &a, const SpecSubset &v) {
  return supp_injective(a).subset_of(v);
}

// Only the generic point and primes occurring in A's data can witness a
// nonvanishing localization: free and Q summands survive at 0.
bool localization_kernel_member(const BootObject &a, const SpecSubset &v) {
  if (!is_specialization_closed(v))
    throw NotSpecializationClosed("localization_kernel_member: " + v.to_string() +
                                  " is not specialization closed");
  if (v.is_all())
    return true;
  std::set<SpecPoint> candidates{SpecPoint::zero()};
  for (unsigned e = 0; e < 2; ++e)
    for (Prime p : data_primes(a.ktheory[Degree(e)]))
      candidates.insert(SpecPoint::prime(p));
  for (SpecPoint q : candidates) {
    if (v.contains(q))
      continue;
    if (!localization_vanishes(a.ktheory.deg0, q) || !localization_vanishes(a.ktheory.deg1, q))
      return false;
  }
  return true;
}

bool is_specialization_closed(const SpecSubset &s) {
  return s.is_all() || !s.contains(SpecPoint::zero());
}

SpecSubset specialization_closure(const SpecSubset &s) {
  return is_specialization_closed(s) ? s : SpecSubset::all();
}

bool is_smashing(const LocalizingSubcat &l) { return is_specialization_closed(l.S); }

SpecSubset generated_support(const std::vector<BootObject> &family) {
  SpecSubset s;
  for (const auto &a : family) {
    s = set_union(s, supp(a));
    if (s.is_all())
      break;
  }
  return s;
}

bool in_generated(const BootObject &a, const std::vector<BootObject> &family) {
  return supp(a).subset_of(generated_support(family));
}

bool PointSet::contains(SpecPoint p) const {
  const bool listed = std::binary_search(points.begin(), points.end(), p);
  return cofinite ? !listed : listed;
}

std::string PointSet::to_string() const {
  std::string s = SpecSubset::of(points).to_string();
  return cofinite ? (points.empty() ? "All" : "All \\ " + s) : s;
}

PointSet orthogonal_residues(const LocalizingSubcat &l) {
  if (l.S.is_all())
    return {false, {}};
  return {true, l.S.points()};
}

// ---------------------------------------------------------- support datum

std::vector<PropertyResult> support_datum_check(const std::vector<BootObject> &corpus) {
  for (const auto &a : corpus)
    if (!is_compact(a))
      throw NonCompactInput("support_datum_check: '" + a.label + "' is not compact");

  PropertyResult zero("supp(0) = empty");
  zero.expect(supp(coproduct({})).is_empty(), "supp(0) = " + supp(coproduct({})).to_string());

  PropertyResult one("supp(unit) = All");
  one.expect(supp(unit()).is_all(), "supp(C) = " + supp(unit()).to_string());

  PropertyResult sum("supp(A + B) = supp A u supp B");
  PropertyResult shift("supp(SA) = supp A");
  PropertyResult cone_ax("supp(cone) in supp(source) u supp(target)");
  PropertyResult tens("supp(A (x) B) = supp A n supp B");

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const BootObject &a = corpus[i];
    const SpecSubset sa = supp(a);
    shift.expect(supp(suspend(a)) == sa, a.label);
    for (long n : {0L, 2L, 3L, 6L}) {
      const ConeResult c = cone(multiplication(a, n));
      if (!c.extension_ambiguous)
        cone_ax.expect(supp(c.object).subset_of(sa),
                       "cone(" + std::to_string(n) + " on " + a.label + ")");
    }
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const BootObject &b = corpus[j];
      const SpecSubset sb = supp(b);
      const std::string pair = a.label + ", " + b.label;
      sum.expect(supp(coproduct({a, b})) == set_union(sa, sb), pair);
      tens.expect(supp(tensor_object(a, b)) == set_intersection(sa, sb), pair);
      const ConeResult c = cone(zero_morphism(a, b));
      if (!c.extension_ambiguous)
        cone_ax.expect(supp(c.object).subset_of(set_union(sa, sb)), "cone(0 : " + pair + ")");
    }
  }
  return {zero, one, sum, shift, cone_ax, tens};
}

// ------------------------------------------------------ thick subcategories

bool ThickClassificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyResult &r) { return r.pass; });
}

ThickClassificationReport thick_classification_demo(std::uint64_t prime_bound) {
  if (prime_bound < 2)
    throw std::invalid_argument("thick_classification_demo: prime_bound must be >= 2");
  const std::vector<Prime> primes = primes_up_to(prime_bound);
  if (primes.size() > 20)
    throw std::invalid_argument("thick_classification_demo: too many primes to enumerate");

  ThickClassificationReport rep;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
    std::vector<SpecPoint> pts;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1)
        pts.push_back(SpecPoint::prime(primes[i]));
    rep.subsets.push_back(SpecSubset::of(std::move(pts)));
  }
  rep.subsets.push_back(SpecSubset::all());

  auto generators = [](const SpecSubset &s) {
    if (s.is_all())
      return std::vector<BootObject>{unit()};
    std::vector<BootObject> g;
    for (SpecPoint p : s.points())
      g.push_back(moore_object(p.prime_value()));
    return g;
  };

  std::vector<BootObject> witnesses{unit(), coproduct({})};
  for (Prime p : primes)
    witnesses.push_back(moore_object(p));
  // Composite Moore objects exercise the tensor-ideal property.
  std::vector<BootObject> tensorands = witnesses;
  for (long n : {4L, 6L, 12L, 15L, 30L})
    tensorands.push_back(moore_object(n));
  tensorands.push_back(suspend(moore_object(10)));

  PropertyResult generated("generators recover the subset");
  PropertyResult distinct("membership predicates pairwise distinct");
  PropertyResult ideal("thick classes are tensor ideals");
  PropertyResult closed("enumerated subsets are specialization closed");

  std::set<std::vector<bool>> signatures;
  std::vector<std::vector<bool>> sig_of;
  for (const auto &s : rep.subsets) {
    closed.expect(is_specialization_closed(s), s.to_string());
    const auto gens = generators(s);
    generated.expect(generated_support(gens) == s, s.to_string());
    std::vector<bool> sig;
    for (const auto &w : witnesses)
      sig.push_back(in_generated(w, gens));
    signatures.insert(sig);
    sig_of.push_back(std::move(sig));
    for (const auto &a : gens)
      for (const auto &b : tensorands)
        ideal.expect(in_generated(tensor_object(a, b), gens),
                     a.label + " (x) " + b.label + " in " + s.to_string());
  }
  for (std::size_t i = 0; i < sig_of.size(); ++i)
    for (std::size_t j = i + 1; j < sig_of.size(); ++j)
      distinct.expect(sig_of[i] != sig_of[j],
                      rep.subsets[i].to_string() + " vs " + rep.subsets[j].to_string());
  rep.distinct_classes = signatures.size();
  rep.checks = {closed, generated, distinct, ideal};
  return rep;
}

} // namespace kkboot
