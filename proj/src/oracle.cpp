#include "kkboot/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace kkboot {

std::string_view to_string(Bifunctor b) {
  switch (b) {
  case Bifunctor::Hom: return "hom";
  case Bifunctor::Ext: return "ext";
  case Bifunctor::Tensor: return "tensor";
  case Bifunctor::Tor: return "tor";
  }
  return "?";
}

Bifunctor parse_bifunctor(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "hom") return Bifunctor::Hom;
  if (s == "ext") return Bifunctor::Ext;
  if (s == "tensor") return Bifunctor::Tensor;
  if (s == "tor") return Bifunctor::Tor;
  throw std::invalid_argument("unknown bifunctor '" + std::string(name) + "'");
}

namespace {

using u64 = std::uint64_t;

// Z/m_1 x ... x Z/m_k with elements stored as mixed-radix indices.
class FiniteGroup {
public:
  explicit FiniteGroup(std::vector<u64> moduli) : moduli_(std::move(moduli)) {
    order_ = 1;
    for (u64 m : moduli_)
      order_ *= m;
  }

  u64 order() const { return order_; }

  // Index of n * x.
  u64 scale(u64 x, u64 n) const {
    u64 out = 0, place = 1;
    for (u64 m : moduli_) {
      const u64 c = x % m;
      x /= m;
      out += ((c * (n % m)) % m) * place;
      place *= m;
    }
    return out;
  }

  // #{x : a x = 0 and b x = 0}; b = 0 imposes nothing.
  u64 count_killed(u64 a, u64 b) const {
    u64 n = 0;
    for (u64 x = 0; x < order_; ++x)
      if (scale(x, a) == 0 && scale(x, b) == 0)
        ++n;
    return n;
  }

  std::vector<bool> multiples(u64 d) const {
    std::vector<bool> in(order_, false);
    for (u64 x = 0; x < order_; ++x)
      in[scale(x, d)] = true;
    return in;
  }

private:
  std::vector<u64> moduli_;
  u64 order_ = 1;
};

// A finite abelian group known only through the counting function
// N(m) = #{x : m x = 0}; a product of such groups multiplies the counts.
struct Counted {
  u64 order = 1;
  std::vector<std::function<u64(u64)>> factors;

  u64 killed_by(u64 m) const {
    u64 n = 1;
    for (const auto &f : factors)
      n *= f(m);
    return n;
  }
};

u64 ipow(u64 p, unsigned k) {
  u64 r = 1;
  while (k--)
    r *= p;
  return r;
}

unsigned exact_log(u64 n, u64 p) {
  unsigned k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

std::vector<u64> small_prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

// For a p-group with partition lambda, log_p N(p^k) = sum_i min(lambda_i, k),
// so successive differences count the parts of size >= k.
FGGroup recover_structure(const Counted &x) {
  std::map<u64, std::vector<unsigned>> partitions; // prime -> parts, descending
  std::size_t width = 0;
  for (u64 p : small_prime_divisors(x.order)) {
    std::vector<unsigned> at_least; // at_least[k-1] = #parts >= k
    unsigned prev = 0;
    for (unsigned k = 1;; ++k) {
      const unsigned cur = exact_log(x.killed_by(ipow(p, k)), p);
      if (cur == prev)
        break;
      at_least.push_back(cur - prev);
      prev = cur;
    }
    std::vector<unsigned> parts(at_least.empty() ? 0 : at_least[0], 0);
    for (std::size_t k = 0; k < at_least.size(); ++k)
      for (unsigned i = 0; i < at_least[k]; ++i)
        parts[i] = static_cast<unsigned>(k + 1);
    width = std::max(width, parts.size());
    partitions[p] = std::move(parts);
  }
  // Largest invariant factor collects the largest part at every prime.
  std::vector<Integer> factors(width, Integer(1));
  for (const auto &[p, parts] : partitions)
    for (std::size_t i = 0; i < parts.size(); ++i)
      factors[width - 1 - i] *= Integer(static_cast<unsigned long>(ipow(p, parts[i])));
  return FGGroup::from_chain(0, std::move(factors));
}

u64 checked_order(const FGGroup &g, u64 bound, const char *which) {
  if (!g.is_finite())
    throw BoundExceeded(std::string("oracle: ") + which + " group is infinite");
  const Integer n = g.torsion_order();
  if (n > Integer(static_cast<unsigned long>(bound)))
    throw BoundExceeded(std::string("oracle: |") + which + "| = " + n.get_str() +
                        " exceeds bound " + std::to_string(bound));
  return n.get_ui();
}

std::vector<u64> moduli_of(const FGGroup &g) {
  std::vector<u64> m;
  for (const auto &d : g.factors())
    m.push_back(d.get_ui());
  return m;
}

} // namespace

FGGroup oracle_bifunctor(Bifunctor which, const FGGroup &g, const FGGroup &h,
                         std::uint64_t max_order) {
  checked_order(g, max_order, "G");
  checked_order(h, max_order, "H");
  const auto H = std::make_shared<FiniteGroup>(moduli_of(h));

  Counted result;
  for (u64 d : moduli_of(g)) {
    if (which == Bifunctor::Hom || which == Bifunctor::Tor) {
      // Subgroup H[d].
      result.order *= H->count_killed(d, 0);
      result.factors.push_back([H, d](u64 m) { return H->count_killed(d, m); });
    } else {
      // Quotient H / dH: x is killed by m iff m x lies in dH.
      auto sub = std::make_shared<std::vector<bool>>(H->multiples(d));
      const u64 sub_order = static_cast<u64>(std::count(sub->begin(), sub->end(), true));
      result.order *= H->order() / sub_order;
      result.factors.push_back([H, sub, sub_order](u64 m) {
        u64 n = 0;
        for (u64 x = 0; x < H->order(); ++x)
          if ((*sub)[H->scale(x, m)])
            ++n;
        return n / sub_order;
      });
    }
  }
  return recover_structure(result);
}

} // namespace kkboot
