#include "kkboot/graded.hpp"

namespace kkboot {

std::string GradedGroup::to_string() const {
  return "(" + deg0.to_string() + "; " + deg1.to_string() + ")";
}

std::string GradedValue::to_string() const {
  return "(" + deg0.to_string() + "; " + deg1.to_string() + ")";
}

GradedValue to_value(const GradedGroup &g) { return {g.deg0, g.deg1}; }

GradedGroup place(const GroupExpr &m, Degree e) {
  GradedGroup g;
  g[e] = m;
  return g;
}

GradedGroup suspend(const GradedGroup &m) { return {m.deg1, m.deg0}; }

GradedValue suspend(const GradedValue &m) { return {m.deg1, m.deg0}; }

GradedGroup direct_sum(const GradedGroup &a, const GradedGroup &b) {
  return {direct_sum(a.deg0, b.deg0), direct_sum(a.deg1, b.deg1)};
}

GradedValue direct_sum(const GradedValue &a, const GradedValue &b) {
  return {direct_sum(a.deg0, b.deg0), direct_sum(a.deg1, b.deg1)};
}

namespace {

// out_e = sum over i of f(M_i, N_{i+e}): degree-preserving pairs land in
// degree 0, degree-exchanging pairs in degree 1.
template <class Out, class F> Out internal(const GradedGroup &m, const GradedGroup &n, F f) {
  Out out;
  for (unsigned e = 0; e < 2; ++e)
    for (unsigned i = 0; i < 2; ++i)
      out[Degree(e)] = direct_sum(out[Degree(e)], f(m[Degree(i)], n[Degree(i + e)]));
  return out;
}

// out_e = sum over i + j = e of f(M_i, N_j).
template <class F> GradedGroup external(const GradedGroup &m, const GradedGroup &n, F f) {
  GradedGroup out;
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j)
      out[Degree(i + j)] = direct_sum(out[Degree(i + j)], f(m[Degree(i)], n[Degree(j)]));
  return out;
}

} // namespace

GradedValue graded_hom(const GradedGroup &m, const GradedGroup &n) {
  return internal<GradedValue>(m, n, [](const auto &a, const auto &b) { return hom(a, b); });
}

GradedValue graded_ext(const GradedGroup &m, const GradedGroup &n) {
  return internal<GradedValue>(m, n, [](const auto &a, const auto &b) { return ext(a, b); });
}

GradedGroup graded_tensor(const GradedGroup &m, const GradedGroup &n) {
  return external(m, n, [](const auto &a, const auto &b) { return tensor(a, b); });
}

GradedGroup graded_tor(const GradedGroup &m, const GradedGroup &n) {
  return external(m, n, [](const auto &a, const auto &b) { return tor(a, b); });
}

} // namespace kkboot
