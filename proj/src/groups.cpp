#include "kkboot/groups.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kkboot {

// ---------------------------------------------------------------- FGGroup

FGGroup FGGroup::free(std::size_t rank) { return from_chain(rank, {}); }

FGGroup FGGroup::cyclic(const Integer &n) { return from_orders(0, {n}); }

// Pairwise gcd/lcm sweep: after processing index i against every j > i,
// entry i divides all later entries.
FGGroup FGGroup::from_orders(std::size_t rank, std::vector<Integer> orders) {
  std::vector<Integer> torsion;
  for (auto &o : orders) {
    Integer a = abs(o);
    if (a == 0)
      ++rank;
    else if (a != 1)
      torsion.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < torsion.size(); ++i)
    for (std::size_t j = i + 1; j < torsion.size(); ++j) {
      Integer g = gcd(torsion[i], torsion[j]);
      Integer l = lcm(torsion[i], torsion[j]);
      torsion[i] = std::move(g);
      torsion[j] = std::move(l);
    }
  std::erase_if(torsion, [](const Integer &x) { return x == 1; });
  return from_chain(rank, std::move(torsion));
}

FGGroup FGGroup::from_chain(std::size_t rank, std::vector<Integer> factors) {
  FGGroup g;
  g.rank_ = rank;
  g.factors_ = std::move(factors);
  return g;
}

Integer FGGroup::torsion_order() const {
  Integer n = 1;
  for (const auto &d : factors_)
    n *= d;
  return n;
}

Integer FGGroup::generator_order(std::size_t i) const {
  return i < factors_.size() ? factors_[i] : Integer(0);
}

IntMatrix FGGroup::relation_matrix() const {
  const std::size_t n = generator_count();
  IntMatrix r(n, factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r(i, i) = factors_[i];
  return r;
}

std::string FGGroup::to_string() const { return GroupExpr(*this).to_string(); }

FGGroup direct_sum(const FGGroup &a, const FGGroup &b) {
  std::vector<Integer> orders = a.factors();
  orders.insert(orders.end(), b.factors().begin(), b.factors().end());
  return FGGroup::from_orders(a.rank() + b.rank(), std::move(orders));
}

// -------------------------------------------------------------- GroupExpr

DivAtom DivAtom::prufer(Prime p) {
  if (!is_prime(p))
    throw InvalidPoint("I(" + std::to_string(p) + "): index is not prime");
  return {Kind::Prufer, p};
}

GroupExpr::GroupExpr(FGGroup fg, std::size_t q_copies, std::vector<Prime> prufer)
    : fg_(std::move(fg)), q_copies_(q_copies), prufer_(std::move(prufer)) {
  for (Prime p : prufer_)
    if (!is_prime(p))
      throw InvalidPoint("I(" + std::to_string(p) + "): index is not prime");
  std::sort(prufer_.begin(), prufer_.end());
}

GroupExpr GroupExpr::prufer_group(Prime p) { return GroupExpr({}, 0, {p}); }

GroupExpr GroupExpr::atom(const DivAtom &a) {
  return a.kind == DivAtom::Kind::Rationals ? rationals() : prufer_group(a.p);
}

std::string GroupExpr::to_string() const {
  std::vector<std::string> parts;
  if (fg_.rank() == 1)
    parts.push_back("Z");
  else if (fg_.rank() > 1)
    parts.push_back("Z^" + std::to_string(fg_.rank()));
  for (const auto &d : fg_.factors())
    parts.push_back("Z/" + d.get_str());
  if (q_copies_ == 1)
    parts.push_back("Q");
  else if (q_copies_ > 1)
    parts.push_back("Q^" + std::to_string(q_copies_));
  for (std::size_t i = 0; i < prufer_.size();) {
    std::size_t j = i;
    while (j < prufer_.size() && prufer_[j] == prufer_[i])
      ++j;
    std::string s = "I(" + std::to_string(prufer_[i]) + ")";
    if (j - i > 1)
      s += "^" + std::to_string(j - i);
    parts.push_back(s);
    i = j;
  }
  if (parts.empty())
    return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i)
    out += " + " + parts[i];
  return out;
}

GroupExpr direct_sum(const GroupExpr &a, const GroupExpr &b) {
  std::vector<Prime> pr = a.prufer();
  pr.insert(pr.end(), b.prufer().begin(), b.prufer().end());
  return GroupExpr(direct_sum(a.fg(), b.fg()), a.q_copies() + b.q_copies(), std::move(pr));
}

GroupExpr canonicalize(const IntMatrix &presentation, std::size_t q_copies,
                       std::vector<Prime> prufer) {
  return GroupExpr(cokernel_invariants(presentation), q_copies, std::move(prufer));
}

// ------------------------------------------------------------- GroupValue

GroupValue GroupValue::unrepresentable(std::string tag) {
  GroupValue v;
  v.exact_.reset();
  v.tags_.push_back(std::move(tag));
  return v;
}

const GroupExpr &GroupValue::exact() const {
  if (!exact_)
    throw std::logic_error("GroupValue::exact on unrepresentable value");
  return *exact_;
}

std::string GroupValue::to_string() const {
  if (exact_)
    return exact_->to_string();
  std::string s = "nonzero (unrepresentable: ";
  for (std::size_t i = 0; i < tags_.size(); ++i)
    s += (i ? ", " : "") + tags_[i];
  return s + ")";
}

GroupValue direct_sum(const GroupValue &a, const GroupValue &b) {
  if (a.is_exact() && b.is_exact())
    return direct_sum(a.exact(), b.exact());
  GroupValue out = a.is_exact() ? b : a;
  if (!a.is_exact() && !b.is_exact()) {
    // Sorted and duplicate-free, so equal sums compare equal.
    out.tags_.insert(out.tags_.end(), b.tags_.begin(), b.tags_.end());
    std::sort(out.tags_.begin(), out.tags_.end());
    out.tags_.erase(std::unique(out.tags_.begin(), out.tags_.end()), out.tags_.end());
  }
  return out;
}

// ------------------------------------------------------------- Bifunctors

namespace {

// One indecomposable summand with multiplicity.
struct Summand {
  enum class Kind { Free, Cyclic, Rationals, Prufer } kind;
  Integer n; // cyclic order
  Prime p = 0;
  std::size_t mult = 1;
};

std::vector<Summand> summands(const GroupExpr &g) {
  std::vector<Summand> out;
  if (g.fg().rank() > 0)
    out.push_back({Summand::Kind::Free, 0, 0, g.fg().rank()});
  for (const auto &d : g.fg().factors())
    out.push_back({Summand::Kind::Cyclic, d, 0, 1});
  if (g.q_copies() > 0)
    out.push_back({Summand::Kind::Rationals, 0, 0, g.q_copies()});
  const auto &pr = g.prufer();
  for (std::size_t i = 0; i < pr.size();) {
    std::size_t j = i;
    while (j < pr.size() && pr[j] == pr[i])
      ++j;
    out.push_back({Summand::Kind::Prufer, 0, pr[i], j - i});
    i = j;
  }
  return out;
}

// Collects summands and canonicalizes once at the end.
class Accumulator {
public:
  void free(std::size_t k) { rank_ += k; }
  void cyclic(const Integer &n, std::size_t k) {
    if (n == 1)
      return;
    for (std::size_t i = 0; i < k; ++i)
      orders_.push_back(n);
  }
  void rationals(std::size_t k) { q_ += k; }
  void prufer(Prime p, std::size_t k) { prufer_.insert(prufer_.end(), k, p); }
  void summand(const Summand &s, std::size_t k) {
    switch (s.kind) {
    case Summand::Kind::Free: free(k); break;
    case Summand::Kind::Cyclic: cyclic(s.n, k); break;
    case Summand::Kind::Rationals: rationals(k); break;
    case Summand::Kind::Prufer: prufer(s.p, k); break;
    }
  }
  void unrepresentable(std::string tag) {
    if (std::find(tags_.begin(), tags_.end(), tag) == tags_.end())
      tags_.push_back(std::move(tag));
  }

  GroupExpr group() const {
    return GroupExpr(FGGroup::from_orders(rank_, orders_), q_, prufer_);
  }
  GroupValue value() const {
    if (tags_.empty())
      return group();
    GroupValue v = GroupValue::unrepresentable(tags_[0]);
    for (std::size_t i = 1; i < tags_.size(); ++i)
      v = direct_sum(v, GroupValue::unrepresentable(tags_[i]));
    return v;
  }

private:
  std::size_t rank_ = 0;
  std::vector<Integer> orders_;
  std::size_t q_ = 0;
  std::vector<Prime> prufer_;
  std::vector<std::string> tags_;
};

using K = Summand::Kind;

std::string prufer_name(Prime p) { return "I(" + std::to_string(p) + ")"; }

Integer prime_part(const Integer &n, Prime p) { return integer_pow(p, valuation(n, p)); }

void hom_entry(const Summand &a, const Summand &b, Accumulator &acc) {
  const std::size_t k = a.mult * b.mult;
  switch (a.kind) {
  case K::Free:
    acc.summand(b, k);
    return;
  case K::Cyclic:
    if (b.kind == K::Cyclic)
      acc.cyclic(gcd(a.n, b.n), k);
    else if (b.kind == K::Prufer)
      acc.cyclic(prime_part(a.n, b.p), k);
    return; // Z, Q: torsion maps to zero
  case K::Rationals:
    if (b.kind == K::Rationals)
      acc.rationals(k);
    else if (b.kind == K::Prufer)
      acc.unrepresentable("Hom(Q," + prufer_name(b.p) + ")");
    return;
  case K::Prufer:
    if (b.kind == K::Prufer && b.p == a.p)
      acc.unrepresentable("Z_" + std::to_string(a.p) + " (p-adic integers)");
    return;
  }
}

void ext_entry(const Summand &a, const Summand &b, Accumulator &acc) {
  const std::size_t k = a.mult * b.mult;
  switch (a.kind) {
  case K::Free:
    return;
  case K::Cyclic:
    if (b.kind == K::Free)
      acc.cyclic(a.n, k);
    else if (b.kind == K::Cyclic)
      acc.cyclic(gcd(a.n, b.n), k);
    return; // divisible targets are injective
  case K::Rationals:
    if (b.kind == K::Free)
      acc.unrepresentable("Ext(Q,Z)");
    return;
  case K::Prufer:
    if (b.kind == K::Free)
      acc.unrepresentable("Ext(" + prufer_name(a.p) + ",Z) = Z_" + std::to_string(a.p));
    else if (b.kind == K::Cyclic)
      acc.cyclic(prime_part(b.n, a.p), k);
    return;
  }
}

// Symmetric; callers need not order the arguments.
void tensor_entry(const Summand &a, const Summand &b, Accumulator &acc) {
  const std::size_t k = a.mult * b.mult;
  if (a.kind == K::Free) {
    acc.summand(b, k);
    return;
  }
  if (b.kind == K::Free) {
    acc.summand(a, k);
    return;
  }
  if (a.kind == K::Cyclic && b.kind == K::Cyclic)
    acc.cyclic(gcd(a.n, b.n), k);
  else if (a.kind == K::Rationals && b.kind == K::Rationals)
    acc.rationals(k);
  // Everything else pairs torsion with a divisible group: zero.
}

void tor_entry(const Summand &a, const Summand &b, Accumulator &acc) {
  const std::size_t k = a.mult * b.mult;
  if (a.kind == K::Free || a.kind == K::Rationals || b.kind == K::Free ||
      b.kind == K::Rationals)
    return; // torsion-free arguments are flat
  if (a.kind == K::Cyclic && b.kind == K::Cyclic)
    acc.cyclic(gcd(a.n, b.n), k);
  else if (a.kind == K::Cyclic && b.kind == K::Prufer)
    acc.cyclic(prime_part(a.n, b.p), k);
  else if (a.kind == K::Prufer && b.kind == K::Cyclic)
    acc.cyclic(prime_part(b.n, a.p), k);
  else if (a.p == b.p)
    acc.prufer(a.p, k);
}

template <class Entry> Accumulator bilinear(const GroupExpr &g, const GroupExpr &h, Entry entry) {
  Accumulator acc;
  const auto hs = summands(h);
  for (const auto &a : summands(g))
    for (const auto &b : hs)
      entry(a, b, acc);
  return acc;
}

} // namespace

GroupValue hom(const GroupExpr &g, const GroupExpr &h) {
  return bilinear(g, h, hom_entry).value();
}

GroupValue ext(const GroupExpr &g, const GroupExpr &h) {
  return bilinear(g, h, ext_entry).value();
}

GroupExpr tensor(const GroupExpr &g, const GroupExpr &h) {
  return bilinear(g, h, tensor_entry).group();
}

GroupExpr tor(const GroupExpr &g, const GroupExpr &h) { return bilinear(g, h, tor_entry).group(); }

bool localization_vanishes(const GroupExpr &g, SpecPoint q) {
  if (g.fg().rank() > 0 || g.q_copies() > 0)
    return false;
  if (q.is_zero())
    return true;
  const Prime p = q.prime_value();
  // Chain property: p divides some factor iff it divides the last one.
  const auto &f = g.fg().factors();
  if (!f.empty() && mpz_divisible_ui_p(f.back().get_mpz_t(), p))
    return false;
  return !std::binary_search(g.prufer().begin(), g.prufer().end(), p);
}

// Z: Z -> Q -> Q/Z = sum of all I(p), so everything. Z/p^k -> I(p) -> I(p).
// Divisible atoms are their own resolution.
SpecSubset injective_support(const GroupExpr &g) {
  if (g.fg().rank() > 0)
    return SpecSubset::all();
  std::vector<SpecPoint> pts;
  if (!g.fg().factors().empty())
    for (Prime p : prime_divisors(g.fg().factors().back()))
      pts.push_back(SpecPoint::prime(p));
  if (g.q_copies() > 0)
    pts.push_back(SpecPoint::zero());
  for (Prime p : g.prufer())
    pts.push_back(SpecPoint::prime(p));
  return SpecSubset::of(std::move(pts));
}

} // namespace kkboot
