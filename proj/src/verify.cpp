#include "kkboot/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace kkboot::verify {

// ---------------------------------------------------------------- corpora

GroupExpr random_group(Rng &rng, const CorpusOptions &opts, bool compact) {
  const bool torsion_only = rng.coin() || opts.max_rank == 0;
  const std::size_t rank = torsion_only ? 0 : rng.between(1, opts.max_rank);
  const std::size_t nf = rng.between(0, opts.max_factors);
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < nf; ++i)
    orders.emplace_back(static_cast<unsigned long>(rng.between(2, opts.max_factor)));
  std::size_t q = 0;
  std::vector<Prime> prufer;
  if (!compact) {
    static const std::vector<Prime> primes = primes_up_to(1000);
    std::vector<Prime> allowed;
    for (Prime p : primes)
      if (p <= opts.atom_prime_bound)
        allowed.push_back(p);
    const std::size_t na = rng.between(0, opts.max_atoms);
    for (std::size_t i = 0; i < na; ++i) {
      if (allowed.empty() || rng.below(3) == 0)
        ++q;
      else
        prufer.push_back(allowed[rng.below(allowed.size())]);
    }
  }
  return GroupExpr(FGGroup::from_orders(rank, std::move(orders)), q, std::move(prufer));
}

BootObject random_object(Rng &rng, const CorpusOptions &opts, bool compact) {
  GradedGroup k;
  k.deg0 = random_group(rng, opts, compact);
  if (rng.below(4) != 0)
    k.deg1 = random_group(rng, opts, compact);
  return realize(k);
}

std::vector<BootObject> object_corpus(std::uint64_t seed, std::size_t n,
                                      const CorpusOptions &opts, bool compact) {
  Rng rng(seed);
  std::vector<BootObject> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(random_object(rng, opts, compact));
  return out;
}

std::vector<FGGroup> finite_groups_up_to(std::uint64_t max_order) {
  std::vector<FGGroup> out;
  std::vector<Integer> chain;
  std::function<void(std::uint64_t, std::uint64_t)> extend = [&](std::uint64_t last,
                                                                 std::uint64_t order) {
    out.push_back(FGGroup::from_chain(0, chain));
    for (std::uint64_t d = chain.empty() ? 2 : last; order * d <= max_order; d += last) {
      chain.emplace_back(static_cast<unsigned long>(d));
      extend(d, order * d);
      chain.pop_back();
    }
  };
  extend(1, 1);
  return out;
}

std::vector<std::pair<FGGroup, FGGroup>> finite_pair_corpus(std::uint64_t seed, std::size_t n,
                                                            std::uint64_t max_order) {
  const auto groups = finite_groups_up_to(max_order);
  Rng rng(seed);
  std::vector<std::pair<FGGroup, FGGroup>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(groups[rng.below(groups.size())], groups[rng.below(groups.size())]);
  return out;
}

HomPartMorphism random_morphism(Rng &rng, bool finite_only) {
  CorpusOptions small;
  small.max_rank = finite_only ? 0 : 2;
  small.max_factors = 3;
  small.max_factor = 12;
  auto object = [&] {
    GradedGroup k;
    for (unsigned e = 0; e < 2; ++e) {
      GroupExpr g = random_group(rng, small, true);
      if (finite_only)
        g = GroupExpr(FGGroup::from_chain(0, g.fg().factors()));
      k[Degree(e)] = g;
    }
    return realize(k);
  };
  BootObject src = object(), dst = object();
  IntMatrix f[2];
  for (unsigned e = 0; e < 2; ++e) {
    const FGGroup &a = src.ktheory[Degree(e)].fg();
    const FGGroup &b = dst.ktheory[Degree(e)].fg();
    f[e] = IntMatrix(b.generator_count(), a.generator_count());
    for (std::size_t i = 0; i < f[e].rows(); ++i)
      for (std::size_t j = 0; j < f[e].cols(); ++j) {
        const Integer d = a.generator_order(j), t = b.generator_order(i);
        // Smallest coefficient step keeping d * f(i, j) inside t Z.
        Integer step = d == 0 ? Integer(1) : t == 0 ? Integer(0) : Integer(t / gcd(t, d));
        f[e](i, j) = step * (static_cast<long>(rng.below(7)) - 3);
      }
  }
  return HomPartMorphism(src, dst, f[0], f[1]);
}

std::vector<SpecPoint> points_up_to(std::uint64_t prime_bound) {
  std::vector<SpecPoint> pts{SpecPoint::zero()};
  for (Prime p : primes_up_to(prime_bound))
    pts.push_back(SpecPoint::prime(p));
  return pts;
}

std::vector<SpecSubset> all_subsets(std::uint64_t prime_bound) {
  const auto pts = points_up_to(prime_bound);
  std::vector<SpecSubset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pts.size()); ++mask) {
    std::vector<SpecPoint> s;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (mask >> i & 1)
        s.push_back(pts[i]);
    out.push_back(SpecSubset::of(std::move(s)));
  }
  out.push_back(SpecSubset::all());
  return out;
}

std::vector<SpecSubset> specialization_closed_subsets(std::uint64_t prime_bound) {
  std::vector<SpecSubset> out;
  for (const auto &s : all_subsets(prime_bound))
    if (is_specialization_closed(s))
      out.push_back(s);
  return out;
}

// ----------------------------------------------------------------- helpers

namespace {

CorpusOptions default_corpus() { return {}; }

std::vector<BootObject> general_corpus(const SuiteOptions &o) {
  return object_corpus(o.seed, o.corpus_size, default_corpus(), false);
}

std::vector<BootObject> compact_corpus(const SuiteOptions &o) {
  return object_corpus(o.seed ^ 0x9e3779b97f4a7c15ull, o.compact_corpus_size, default_corpus(),
                       true);
}

std::string show(const BootObject &a) { return a.ktheory.to_string(); }

bool is_fp_vector_space(const GroupExpr &g, SpecPoint p) {
  if (p.is_zero())
    return g.fg().is_zero() && g.prufer().empty();
  if (g.fg().rank() != 0 || g.q_copies() != 0 || !g.prufer().empty())
    return false;
  return std::all_of(g.fg().factors().begin(), g.fg().factors().end(),
                     [&](const Integer &d) { return d == p.prime_value(); });
}

std::vector<BootObject> canonical_generators(const SpecSubset &s) {
  if (s.is_all())
    return {unit()};
  std::vector<BootObject> g;
  for (SpecPoint p : s.points())
    g.push_back(residue_object(p));
  return g;
}

} // namespace

// ------------------------------------------------------------------ suites

std::vector<PropertyResult> check_oracle_equivalence(const SuiteOptions &o) {
  PropertyResult eq("closed-form hom/ext/tensor/tor = brute-force oracle");
  for (const auto &[g, h] : finite_pair_corpus(o.seed, o.oracle_pairs, o.max_order)) {
    const GroupExpr G(g), H(h);
    for (Bifunctor b : {Bifunctor::Hom, Bifunctor::Ext, Bifunctor::Tensor, Bifunctor::Tor}) {
      GroupValue table;
      switch (b) {
      case Bifunctor::Hom: table = hom(G, H); break;
      case Bifunctor::Ext: table = ext(G, H); break;
      case Bifunctor::Tensor: table = tensor(G, H); break;
      case Bifunctor::Tor: table = tor(G, H); break;
      }
      const FGGroup brute = oracle_bifunctor(b, g, h, o.max_order);
      const bool ok = table.is_exact() && table.exact() == GroupExpr(brute);
      eq.expect(ok, std::string(to_string(b)) + "(" + G.to_string() + ", " + H.to_string() +
                        "): table " + table.to_string() + ", oracle " + brute.to_string());
    }
  }
  return {eq};
}

std::vector<PropertyResult> check_uct(const SuiteOptions &o) {
  const auto corpus = general_corpus(o);
  PropertyResult unit_law("KK(C, B) = K_*B");
  for (const auto &b : corpus) {
    const GradedValue kk = kk_groups(unit(), b);
    unit_law.expect(kk == to_value(b.ktheory), show(b) + " gave " + kk.to_string());
  }

  PropertyResult hom_only("Ext term vanishes for free source or divisible target");
  Rng rng(o.seed + 17);
  for (const auto &b : corpus) {
    const BootObject free_src =
        realize({GroupExpr::free(rng.below(4)), GroupExpr::free(rng.below(4))});
    hom_only.expect(kk_is_hom_only(free_src, b), show(free_src) + " -> " + show(b));
    hom_only.expect(kk_is_hom_only(unit(), b), "C -> " + show(b));
    GradedGroup div;
    for (unsigned e = 0; e < 2; ++e) {
      const GroupExpr g = random_group(rng, default_corpus(), false);
      div[Degree(e)] = GroupExpr({}, g.q_copies(), g.prufer());
    }
    const BootObject div_dst = realize(div);
    hom_only.expect(kk_is_hom_only(b, div_dst), show(b) + " -> " + show(div_dst));
  }
  for (const auto &a : corpus)
    for (const auto &b : corpus) {
      const bool free_src = a.ktheory.deg0.is_free() && a.ktheory.deg1.is_free();
      const bool div_dst = b.ktheory.deg0.is_divisible() && b.ktheory.deg1.is_divisible();
      if (free_src || div_dst)
        hom_only.expect(kk_is_hom_only(a, b), show(a) + " -> " + show(b));
    }
  return {unit_law, hom_only};
}

std::vector<PropertyResult> check_kunneth(const SuiteOptions &o) {
  const auto corpus = compact_corpus(o);
  PropertyResult unit_law("C (x) B = B = B (x) C");
  PropertyResult symmetry("A (x) B = B (x) A");
  PropertyResult assoc("(A (x) B) (x) C = A (x) (B (x) C)");
  PropertyResult shift("SA (x) B = S(A (x) B)");
  PropertyResult residue("kappa(p) (x) kappa(p) = F_p[0] + F_p[1]");

  for (const auto &b : corpus) {
    unit_law.expect(is_isomorphic(tensor_object(unit(), b), b) &&
                        is_isomorphic(tensor_object(b, unit()), b),
                    show(b));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const auto &a = corpus[i], &b = corpus[j];
      const BootObject ab = tensor_object(a, b);
      symmetry.expect(is_isomorphic(ab, tensor_object(b, a)), show(a) + ", " + show(b));
      shift.expect(is_isomorphic(tensor_object(suspend(a), b), suspend(ab)),
                   show(a) + ", " + show(b));
    }
  Rng rng(o.seed + 31);
  const std::size_t n = corpus.size();
  for (std::size_t t = 0; n > 0 && t < 4 * n; ++t) {
    const auto &a = corpus[t < n ? t : rng.below(n)];
    const auto &b = corpus[t < n ? (t + 1) % n : rng.below(n)];
    const auto &c = corpus[t < n ? (t + 2) % n : rng.below(n)];
    assoc.expect(is_isomorphic(tensor_object(tensor_object(a, b), c),
                               tensor_object(a, tensor_object(b, c))),
                 show(a) + ", " + show(b) + ", " + show(c));
  }
  for (Prime p : primes_up_to(o.residue_prime_bound)) {
    const BootObject k = residue_object(SpecPoint::prime(p));
    const GradedGroup expect{GroupExpr::cyclic(p), GroupExpr::cyclic(p)};
    residue.expect(tensor_object(k, k).ktheory == expect, "p = " + std::to_string(p));
  }
  return {unit_law, symmetry, assoc, shift, residue};
}

std::vector<PropertyResult> check_residue_dichotomy(const SuiteOptions &o) {
  PropertyResult r("kappa(p) (x) kappa(q) = 0 iff p != q");
  const auto pts = points_up_to(o.residue_prime_bound);
  for (SpecPoint p : pts)
    for (SpecPoint q : pts) {
      const bool zero = tensor_object(residue_object(p), residue_object(q)).is_zero();
      r.expect(zero == (p != q), "p = " + p.to_string() + ", q = " + q.to_string());
    }
  return {r};
}

std::vector<PropertyResult> check_residue_decomposition(const SuiteOptions &o) {
  PropertyResult r("K_*(A; F_p) is an F_p-vector space");
  PropertyResult s("supp(A) = { p : K_*(A; F_p) != 0 }");
  const auto pts = points_up_to(o.residue_prime_bound);
  for (const auto &a : general_corpus(o)) {
    const SpecSubset sa = supp(a);
    for (SpecPoint p : pts) {
      const GradedGroup k = k_with_coefficients(a, p);
      r.expect(is_fp_vector_space(k.deg0, p) && is_fp_vector_space(k.deg1, p),
               show(a) + " at " + p.to_string() + ": " + k.to_string());
      s.expect(sa.contains(p) == !k.is_zero(), show(a) + " at " + p.to_string());
    }
  }
  return {r, s};
}

std::vector<PropertyResult> check_classification(const SuiteOptions &o) {
  const auto subsets = all_subsets(o.classification_prime_bound);
  const auto pts = points_up_to(o.classification_prime_bound);
  const auto corpus = general_corpus(o);

  PropertyResult roundtrip("generated_support(canonical generators of S) = S");
  for (const auto &s : subsets)
    roundtrip.expect(generated_support(canonical_generators(s)) == s, s.to_string());

  std::vector<BootObject> witnesses{unit()};
  for (SpecPoint p : pts)
    witnesses.push_back(residue_object(p));
  PropertyResult distinct("distinct S have distinct members");
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const bool separated = std::any_of(witnesses.begin(), witnesses.end(), [&](const auto &w) {
        return member(w, {subsets[i]}) != member(w, {subsets[j]});
      });
      distinct.expect(separated, subsets[i].to_string() + " vs " + subsets[j].to_string());
    }

  PropertyResult monotone("S in T implies L_S in L_T");
  Rng pick(o.seed + 5);
  for (std::size_t t = 0; t < 500; ++t) {
    const auto &s = subsets[pick.below(subsets.size())];
    const auto &u = subsets[pick.below(subsets.size())];
    if (!s.subset_of(u))
      continue;
    for (const auto &a : corpus)
      monotone.expect(!member(a, {s}) || member(a, {u}),
                      show(a) + ", " + s.to_string() + " in " + u.to_string());
  }

  PropertyResult families("in_generated(-, E) = membership in L_{generated_support(E)}");
  Rng rng(o.seed + 11);
  for (std::size_t f = 0; f < o.families; ++f) {
    std::vector<BootObject> e;
    const std::size_t size = rng.below(5);
    for (std::size_t i = 0; i < size; ++i) {
      // Mix corpus objects with residue objects so that small supports occur.
      if (rng.coin())
        e.push_back(corpus[rng.below(corpus.size())]);
      else
        e.push_back(residue_object(pts[rng.below(pts.size())]));
    }
    const LocalizingSubcat l{generated_support(e)};
    for (const auto &a : corpus)
      families.expect(in_generated(a, e) == member(a, l),
                      show(a) + " vs family of support " + l.S.to_string());
    for (const auto &w : witnesses)
      families.expect(in_generated(w, e) == member(w, l),
                      w.label + " vs family of support " + l.S.to_string());
  }
  return {roundtrip, distinct, monotone, families};
}

std::vector<PropertyResult> check_smashing(const SuiteOptions &o) {
  PropertyResult equiv("is_smashing(L_S) iff S specialization closed");
  PropertyResult generic("0 in S != All implies L_S not smashing");
  for (const auto &s : all_subsets(o.classification_prime_bound)) {
    const bool closed = s.is_all() || !s.contains(SpecPoint::zero());
    equiv.expect(is_smashing({s}) == closed, s.to_string());
    if (!s.is_all() && s.contains(SpecPoint::zero()))
      generic.expect(!is_smashing({s}), s.to_string());
  }
  generic.expect(!is_smashing({SpecSubset::of({SpecPoint::zero()})}), "L_{0}");

  // A nonzero map iota(0) -> iota(p) is what forces 0 in Supp L to
  // propagate: Hom(Q, I(p)) does not vanish.
  PropertyResult maps("Hom(Q, I(p)) != 0");
  for (Prime p : primes_up_to(o.classification_prime_bound)) {
    const GradedValue kk =
        kk_groups(injective_object(SpecPoint::zero()), injective_object(SpecPoint::prime(p)));
    maps.expect(!kk.deg0.is_zero(), "p = " + std::to_string(p));
  }
  return {equiv, generic, maps};
}

std::vector<PropertyResult> check_bootV(const SuiteOptions &o) {
  const auto corpus = general_corpus(o);
  PropertyResult equiv("member_bootV iff localization_kernel_member");
  for (const auto &v : specialization_closed_subsets(o.classification_prime_bound))
    for (const auto &a : corpus)
      equiv.expect(member_bootV(a, v) == localization_kernel_member(a, v),
                   show(a) + " in Boot_" + v.to_string());
  PropertyResult agree("supp = supp_injective");
  for (const auto &a : corpus)
    agree.expect(supp(a) == supp_injective(a), show(a));
  for (SpecPoint p : points_up_to(o.classification_prime_bound)) {
    agree.expect(supp(residue_object(p)) == supp(injective_object(p)) &&
                     supp(injective_object(p)) == SpecSubset::of({p}),
                 "kappa/iota at " + p.to_string());
  }
  return {equiv, agree};
}

std::vector<PropertyResult> check_support_datum(const SuiteOptions &o) {
  return support_datum_check(compact_corpus(o));
}

namespace {

std::size_t image_rank(const IntMatrix &f, const FGGroup &src, const FGGroup &dst) {
  const std::size_t ts = src.factors().size(), td = dst.factors().size();
  IntMatrix block(dst.rank(), src.rank());
  for (std::size_t i = 0; i < dst.rank(); ++i)
    for (std::size_t j = 0; j < src.rank(); ++j)
      block(i, j) = f(td + i, ts + j);
  return smith_normal_form(block).rank();
}

// Size of f(A) for finite A, by walking every element of A.
Integer image_order(const IntMatrix &f, const FGGroup &src, const FGGroup &dst) {
  const std::size_t n = src.generator_count();
  std::vector<unsigned long> radix;
  for (const auto &d : src.factors())
    radix.push_back(d.get_ui());
  std::set<std::vector<Integer>> images;
  std::vector<unsigned long> x(n, 0);
  for (;;) {
    std::vector<Integer> y(f.rows());
    for (std::size_t i = 0; i < f.rows(); ++i) {
      for (std::size_t j = 0; j < n; ++j)
        y[i] += f(i, j) * x[j];
      const Integer e = dst.generator_order(i);
      if (e != 0)
        mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), e.get_mpz_t());
    }
    images.insert(std::move(y));
    std::size_t k = 0;
    while (k < n && ++x[k] == radix[k])
      x[k++] = 0;
    if (k == n)
      break;
  }
  return static_cast<unsigned long>(images.size());
}

} // namespace

std::vector<PropertyResult> check_cones(const SuiteOptions &o) {
  PropertyResult moore("cone(n : C -> C) = Z/n[0], unambiguous");
  for (std::uint64_t n = 2; n <= o.max_moore; ++n) {
    const ConeResult c = cone(multiplication(unit(), static_cast<long>(n)));
    const BootObject expect = realize(place(GroupExpr::cyclic(n), kEven));
    moore.expect(is_isomorphic(c.object, expect) && !c.extension_ambiguous,
                 "n = " + std::to_string(n) + ": " + show(c.object));
  }

  PropertyResult ranks("long exact sequence: ranks");
  PropertyResult orders("long exact sequence: orders");
  Rng rng(o.seed + 23);
  std::size_t found = 0;
  for (std::size_t attempt = 0; found < o.morphisms && attempt < 100 * o.morphisms; ++attempt) {
    const HomPartMorphism phi = random_morphism(rng, attempt % 2 == 0);
    const ConeResult c = cone(phi);
    if (c.extension_ambiguous)
      continue;
    ++found;
    const GradedGroup ker = phi.kernel(), coker = phi.cokernel();
    const std::string what = show(phi.source()) + " -> " + show(phi.target());
    for (unsigned ei = 0; ei < 2; ++ei) {
      const Degree e(ei);
      const FGGroup &a = phi.source().ktheory[e].fg();
      const FGGroup &b = phi.target().ktheory[e].fg();
      const std::size_t im = image_rank(phi.matrix(e), a, b);
      ranks.expect(ker[e].fg().rank() + im == a.rank() && coker[e].fg().rank() + im == b.rank() &&
                       c.object.ktheory[e].fg().rank() ==
                           coker[e].fg().rank() + ker[e.next()].fg().rank(),
                   what);
      if (a.is_finite()) {
        const Integer img = image_order(phi.matrix(e), a, b);
        orders.expect(ker[e].fg().torsion_order() * img == a.torsion_order(), what + " (ker)");
        if (b.is_finite())
          orders.expect(coker[e].fg().torsion_order() * img == b.torsion_order(),
                        what + " (coker)");
      }
      const FGGroup &ce = c.object.ktheory[e].fg();
      if (ce.is_finite())
        orders.expect(ce.torsion_order() == coker[e].fg().torsion_order() *
                                               ker[e.next()].fg().torsion_order(),
                      what + " (cone)");
    }
  }
  ranks.expect(found == o.morphisms, "only " + std::to_string(found) + " unambiguous morphisms");
  return {moore, ranks, orders};
}

std::vector<PropertyResult> check_prufer_colimit(const SuiteOptions &o) {
  PropertyResult r("Tor(I(p), Z/q^k) = stable Tor(Z/p^n, Z/q^k)");
  constexpr unsigned kMaxExp = 4, kStages = 8;
  const auto primes = primes_up_to(o.classification_prime_bound);
  for (Prime p : primes)
    for (Prime q : primes)
      for (unsigned k = 1; k <= kMaxExp; ++k) {
        const FGGroup target = FGGroup::cyclic(integer_pow(q, k));
        const std::uint64_t bound =
            std::max(integer_pow(p, kStages).get_ui(), integer_pow(q, k).get_ui());
        FGGroup prev, cur;
        for (unsigned n = 1; n <= kStages; ++n) {
          prev = cur;
          cur = oracle_bifunctor(Bifunctor::Tor, FGGroup::cyclic(integer_pow(p, n)), target,
                                 std::max(bound, o.max_order));
        }
        const GroupExpr table = tor(GroupExpr::prufer_group(p), GroupExpr(target));
        const std::string what = "p = " + std::to_string(p) + ", q^k = " +
                                 std::to_string(q) + "^" + std::to_string(k);
        r.expect(prev == cur, what + " did not stabilize");
        r.expect(table == GroupExpr(cur), what + ": table " + table.to_string() +
                                              ", colimit " + cur.to_string());
      }
  return {r};
}

// ------------------------------------------------------------------ runner

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{
      "oracle", "uct", "kunneth", "classification", "smashing", "support-datum", "cone", "all"};
  return names;
}

std::vector<PropertyResult> run_suite(const std::string &name, const SuiteOptions &o) {
  using Fn = std::vector<PropertyResult> (*)(const SuiteOptions &);
  std::vector<Fn> fns;
  if (name == "oracle")
    fns = {check_oracle_equivalence, check_prufer_colimit};
  else if (name == "uct")
    fns = {check_uct};
  else if (name == "kunneth")
    fns = {check_kunneth, check_residue_dichotomy, check_residue_decomposition};
  else if (name == "classification")
    fns = {check_classification, check_bootV};
  else if (name == "smashing")
    fns = {check_smashing};
  else if (name == "support-datum")
    fns = {check_support_datum};
  else if (name == "cone")
    fns = {check_cones};
  else if (name == "all")
    fns = {check_oracle_equivalence, check_prufer_colimit, check_uct,
           check_kunneth, check_residue_dichotomy, check_residue_decomposition,
           check_classification, check_bootV, check_smashing,
           check_support_datum, check_cones};
  else
    throw UnknownSuite("unknown suite '" + name + "'");
  std::vector<PropertyResult> out;
  for (Fn f : fns) {
    auto r = f(o);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

} // namespace kkboot::verify
