#include "kkboot/model.hpp"

namespace kkboot {

namespace {

const FGGroup &fg_part(const BootObject &a, Degree e, const char *role) {
  const GroupExpr &g = a.ktheory[e];
  if (!g.is_finitely_generated())
    throw IllFormedMorphism(std::string("HomPartMorphism: ") + role + " '" + a.label +
                            "' has divisible K-theory");
  return g.fg();
}

void check_degree(const FGGroup &src, const FGGroup &dst, const IntMatrix &f, unsigned deg) {
  const std::string where = "HomPartMorphism (degree " + std::to_string(deg) + "): ";
  if (f.rows() != dst.generator_count() || f.cols() != src.generator_count())
    throw IllFormedMorphism(where + "expected a " + std::to_string(dst.generator_count()) +
                            "x" + std::to_string(src.generator_count()) + " matrix, got " +
                            std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
  // Generator j of order d must land on an element killed by d.
  for (std::size_t j = 0; j < f.cols(); ++j) {
    const Integer d = src.generator_order(j);
    if (d == 0)
      continue;
    for (std::size_t i = 0; i < f.rows(); ++i) {
      const Integer e = dst.generator_order(i);
      const Integer v = d * f(i, j);
      const bool ok = e == 0 ? v == 0 : mpz_divisible_p(v.get_mpz_t(), e.get_mpz_t()) != 0;
      if (!ok)
        throw IllFormedMorphism(where + "generator " + std::to_string(j) + " of order " +
                                d.get_str() + " cannot map with coefficient " +
                                f(i, j).get_str() + " onto target generator " +
                                std::to_string(i));
    }
  }
}

// ker(f : Z^n / R_A -> Z^m / R_B) = L / im R_A where
// L = { x : f x in im R_B } is the projection of ker [f | R_B].
FGGroup kernel_of(const FGGroup &src, const FGGroup &dst, const IntMatrix &f) {
  const std::size_t n = src.generator_count();
  const IntMatrix joint = f.hcat(dst.relation_matrix());
  const IntMatrix k = kernel_basis(joint);
  IntMatrix gens(n, k.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k.cols(); ++j)
      gens(i, j) = k(i, j);

  // Basis of L: columns d_c * U_inv[:, c]; coordinates of c in that basis
  // are (U c)_i / d_i.
  const SNFResult s = smith_normal_form(gens);
  const std::size_t r = s.rank();
  const IntMatrix rel = src.relation_matrix();
  const IntMatrix urel = s.U * rel;
  IntMatrix coords(r, rel.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rel.cols(); ++j)
      mpz_divexact(coords(i, j).get_mpz_t(), urel(i, j).get_mpz_t(), s.d[i].get_mpz_t());
  return cokernel_invariants(coords);
}

} // namespace

HomPartMorphism::HomPartMorphism(BootObject source, BootObject target, IntMatrix f0,
                                 IntMatrix f1)
    : source_(std::move(source)), target_(std::move(target)), f0_(std::move(f0)),
      f1_(std::move(f1)) {
  for (unsigned e = 0; e < 2; ++e)
    check_degree(fg_part(source_, Degree(e), "source"), fg_part(target_, Degree(e), "target"),
                 matrix(Degree(e)), e);
}

GradedGroup HomPartMorphism::kernel() const {
  GradedGroup out;
  for (unsigned e = 0; e < 2; ++e) {
    const Degree d(e);
    out[d] = GroupExpr(kernel_of(source_.ktheory[d].fg(), target_.ktheory[d].fg(), matrix(d)));
  }
  return out;
}

GradedGroup HomPartMorphism::cokernel() const {
  GradedGroup out;
  for (unsigned e = 0; e < 2; ++e) {
    const Degree d(e);
    const FGGroup &dst = target_.ktheory[d].fg();
    out[d] = GroupExpr(cokernel_invariants(dst.relation_matrix().hcat(matrix(d))));
  }
  return out;
}

HomPartMorphism HomPartMorphism::compose_after(const HomPartMorphism &first) const {
  if (!(first.target_.ktheory == source_.ktheory))
    throw IllFormedMorphism("compose_after: target of first map is not the source");
  return HomPartMorphism(first.source_, target_, f0_ * first.f0_, f1_ * first.f1_);
}

HomPartMorphism multiplication(const BootObject &a, long n) {
  IntMatrix f[2];
  for (unsigned e = 0; e < 2; ++e) {
    const std::size_t k = a.ktheory[Degree(e)].fg().generator_count();
    f[e] = IntMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i)
      f[e](i, i) = n;
  }
  return HomPartMorphism(a, a, f[0], f[1]);
}

HomPartMorphism zero_morphism(const BootObject &source, const BootObject &target) {
  auto gens = [](const BootObject &x, unsigned e) {
    return x.ktheory[Degree(e)].fg().generator_count();
  };
  return HomPartMorphism(source, target, IntMatrix(gens(target, 0), gens(source, 0)),
                         IntMatrix(gens(target, 1), gens(source, 1)));
}

BootObject unit() { return {place(GroupExpr::free(1), kEven), "C"}; }

BootObject residue_object(SpecPoint p) {
  if (p.is_zero())
    return {place(GroupExpr::rationals(), kEven), "kappa(0)"};
  return {place(GroupExpr::cyclic(p.prime_value()), kEven), "kappa(" + p.to_string() + ")"};
}

BootObject injective_object(SpecPoint p) {
  if (p.is_zero())
    return {place(GroupExpr::rationals(), kEven), "iota(0)"};
  return {place(GroupExpr::prufer_group(p.prime_value()), kEven),
          "iota(" + p.to_string() + ")"};
}

BootObject moore_object(const Integer &n) {
  return {place(GroupExpr::cyclic(n), kEven), "moore(" + n.get_str() + ")"};
}

BootObject realize(const GradedGroup &m, std::string label) {
  if (label.empty())
    label = m.to_string();
  return {m, std::move(label)};
}

BootObject suspend(const BootObject &a) { return {suspend(a.ktheory), "S " + a.label}; }

BootObject coproduct(const std::vector<BootObject> &objs) {
  BootObject out{{}, ""};
  for (const auto &o : objs) {
    out.ktheory = direct_sum(out.ktheory, o.ktheory);
    out.label += (out.label.empty() ? "" : " + ") + o.label;
  }
  if (out.label.empty())
    out.label = "0";
  return out;
}

GradedValue kk_groups(const BootObject &a, const BootObject &b) {
  return direct_sum(graded_hom(a.ktheory, b.ktheory),
                    suspend(graded_ext(a.ktheory, b.ktheory)));
}

bool kk_is_hom_only(const BootObject &a, const BootObject &b) {
  return graded_ext(a.ktheory, b.ktheory).is_zero();
}

BootObject tensor_object(const BootObject &a, const BootObject &b) {
  return {direct_sum(graded_tensor(a.ktheory, b.ktheory),
                     suspend(graded_tor(a.ktheory, b.ktheory))),
          "(" + a.label + " (x) " + b.label + ")"};
}

GradedGroup k_with_coefficients(const BootObject &a, SpecPoint p) {
  return tensor_object(a, residue_object(p)).ktheory;
}

ConeResult cone(const HomPartMorphism &phi) {
  const GradedGroup ker = phi.kernel();
  const GradedGroup coker = phi.cokernel();
  ConeResult r;
  r.object = {direct_sum(coker, suspend(ker)),
              "cone(" + phi.source().label + " -> " + phi.target().label + ")"};
  r.ambiguity_witness = graded_ext(suspend(ker), coker).deg0;
  r.extension_ambiguous = !r.ambiguity_witness.is_zero();
  return r;
}

bool is_isomorphic(const BootObject &a, const BootObject &b) { return a.ktheory == b.ktheory; }

bool is_compact(const BootObject &a) {
  return a.ktheory.deg0.is_finitely_generated() && a.ktheory.deg1.is_finitely_generated();
}

} // namespace kkboot
