// Randomized algebraic laws over seeded hand-rolled generators.

#include <doctest.h>

#include "kkboot/graded.hpp"
#include "kkboot/model.hpp"
#include "kkboot/spectrum.hpp"
#include "kkboot/verify.hpp"

using namespace kkboot;
using verify::Rng;

namespace {

constexpr std::size_t kCases = 300;

IntMatrix random_matrix(Rng &rng, std::size_t rows, std::size_t cols, long range) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<long>(rng.below(2 * range + 1)) - range;
  return m;
}

IntMatrix random_unimodular(Rng &rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; n > 1 && step < 6; ++step) {
    const std::size_t a = rng.below(n), b = rng.below(n);
    if (a != b)
      u.add_row_multiple(a, b, static_cast<long>(rng.below(5)) - 2);
    else if (rng.coin())
      u.negate_row(a);
  }
  return u;
}

GroupExpr any_group(Rng &rng) { return verify::random_group(rng, verify::CorpusOptions{}, false); }

} // namespace

TEST_CASE("smith normal form reconstructs its input") {
  Rng rng(11);
  for (std::size_t c = 0; c < kCases; ++c) {
    const std::size_t r = rng.below(5), k = rng.below(5);
    const IntMatrix m = random_matrix(rng, r, k, 9);
    CAPTURE(m.to_string());
    const SNFResult s = smith_normal_form(m);
    CHECK(s.U * m * s.V == IntMatrix::diagonal(r, k, s.d));
    CHECK(abs(s.U.determinant()) == 1);
    CHECK(abs(s.V.determinant()) == 1);
    if (r == k) {
      Integer prod = 1;
      for (const auto &d : s.d)
        prod *= d;
      CHECK(abs(m.determinant()) == prod);
    }
    const IntMatrix kb = kernel_basis(m);
    CHECK(kb.cols() == k - s.rank());
    CHECK((m * kb).is_zero());
  }
}

TEST_CASE("presentations related by unimodular changes give the same group") {
  Rng rng(12);
  for (std::size_t c = 0; c < kCases; ++c) {
    const std::size_t r = 1 + rng.below(4), k = rng.below(5);
    const IntMatrix m = random_matrix(rng, r, k, 12);
    const IntMatrix m2 = random_unimodular(rng, r) * m * random_unimodular(rng, k);
    CAPTURE(m.to_string());
    CHECK(cokernel_invariants(m) == cokernel_invariants(m2));
  }
}

TEST_CASE("from_orders agrees with the diagonal presentation") {
  Rng rng(13);
  for (std::size_t c = 0; c < kCases; ++c) {
    std::vector<Integer> orders;
    const std::size_t n = rng.below(5);
    for (std::size_t i = 0; i < n; ++i)
      orders.emplace_back(static_cast<unsigned long>(rng.between(1, 60)));
    const std::size_t rank = rng.below(3);
    IntMatrix pres = IntMatrix::diagonal(n + rank, n, orders);
    CHECK(FGGroup::from_orders(rank, orders) == cokernel_invariants(pres));
  }
}

TEST_CASE("bifunctors are biadditive") {
  Rng rng(14);
  for (std::size_t c = 0; c < kCases; ++c) {
    const GroupExpr a = any_group(rng), b = any_group(rng), h = any_group(rng);
    const GroupExpr ab = direct_sum(a, b);
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    CAPTURE(h.to_string());
    CHECK(hom(ab, h) == direct_sum(hom(a, h), hom(b, h)));
    CHECK(ext(ab, h) == direct_sum(ext(a, h), ext(b, h)));
    CHECK(hom(h, ab) == direct_sum(hom(h, a), hom(h, b)));
    CHECK(ext(h, ab) == direct_sum(ext(h, a), ext(h, b)));
    CHECK(tensor(ab, h) == direct_sum(tensor(a, h), tensor(b, h)));
    CHECK(tor(ab, h) == direct_sum(tor(a, h), tor(b, h)));
  }
}

TEST_CASE("tensor and tor are symmetric") {
  Rng rng(15);
  for (std::size_t c = 0; c < kCases; ++c) {
    const GroupExpr a = any_group(rng), b = any_group(rng);
    CHECK(tensor(a, b) == tensor(b, a));
    CHECK(tor(a, b) == tor(b, a));
  }
}

TEST_CASE("divisible groups are injective and free groups projective") {
  Rng rng(16);
  for (std::size_t c = 0; c < kCases; ++c) {
    const GroupExpr g = any_group(rng);
    const GroupExpr d(FGGroup(), rng.below(3), {2, 3});
    CHECK(ext(g, d).is_zero());
    CHECK(ext(GroupExpr::free(rng.below(4)), g).is_zero());
    CHECK(tor(GroupExpr::free(2), g).is_zero());
    CHECK(tor(GroupExpr::rationals(), g).is_zero());
  }
}

TEST_CASE("suspension shifts every construction") {
  Rng rng(17);
  const verify::CorpusOptions opts;
  for (std::size_t c = 0; c < kCases; ++c) {
    const BootObject a = verify::random_object(rng, opts, false);
    const BootObject b = verify::random_object(rng, opts, false);
    CHECK(kk_groups(suspend(a), b) == suspend(kk_groups(a, b)));
    CHECK(kk_groups(a, suspend(b)) == suspend(kk_groups(a, b)));
    CHECK(tensor_object(suspend(a), b).ktheory == suspend(tensor_object(a, b).ktheory));
    CHECK(supp(suspend(a)) == supp(a));
    CHECK(supp_injective(suspend(a)) == supp_injective(a));
  }
}

TEST_CASE("support is multiplicative and additive on the full corpus") {
  const auto corpus = verify::object_corpus(18, 60, verify::CorpusOptions{}, false);
  for (const auto &a : corpus)
    for (const auto &b : corpus) {
      CHECK(supp(tensor_object(a, b)) == set_intersection(supp(a), supp(b)));
      CHECK(supp(coproduct({a, b})) == set_union(supp(a), supp(b)));
    }
}

TEST_CASE("generators are deterministic") {
  const verify::CorpusOptions opts;
  const auto a = verify::object_corpus(5, 50, opts, false);
  const auto b = verify::object_corpus(5, 50, opts, false);
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i].ktheory == b[i].ktheory);
  for (const auto &x : verify::object_corpus(5, 50, opts, true))
    CHECK(is_compact(x));
}
