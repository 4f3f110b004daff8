#include "kkboot/spec_z.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kkboot {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Pollard-Brent; n composite and odd.
u64 find_factor(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n)
      return d;
  }
}

void factor_u64(u64 n, std::vector<Prime> &out) {
  if (n == 1)
    return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = find_factor(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0)
      return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::vector<Prime> prime_divisors(const Integer &n) {
  Integer m = abs(n);
  std::vector<Prime> out;
  if (m == 0)
    return out;
  for (u64 p = 2; p < 1000 && m > 1; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p))
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  if (m > 1) {
    if (!m.fits_ulong_p())
      throw std::domain_error("prime_divisors: cofactor " + m.get_str() +
                              " exceeds 64 bits");
    factor_u64(m.get_ui(), out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

unsigned valuation(const Integer &n, Prime p) {
  if (n == 0)
    throw std::domain_error("valuation of zero");
  Integer m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

Integer integer_pow(Prime p, unsigned k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

std::vector<Prime> primes_up_to(std::uint64_t bound) {
  std::vector<Prime> out;
  for (u64 n = 2; n <= bound; ++n)
    if (is_prime(n))
      out.push_back(n);
  return out;
}

SpecPoint SpecPoint::prime(std::uint64_t p) {
  if (!is_prime(p))
    throw InvalidPoint(std::to_string(p) + " is not a prime");
  return SpecPoint(p);
}

SpecPoint SpecPoint::parse(std::uint64_t v) { return v == 0 ? zero() : prime(v); }

SpecSubset SpecSubset::all() {
  SpecSubset s;
  s.all_ = true;
  return s;
}

SpecSubset SpecSubset::of(std::vector<SpecPoint> points) {
  SpecSubset s;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  s.points_ = std::move(points);
  return s;
}

bool SpecSubset::contains(SpecPoint p) const {
  return all_ || std::binary_search(points_.begin(), points_.end(), p);
}

bool SpecSubset::subset_of(const SpecSubset &other) const {
  if (other.all_)
    return true;
  if (all_)
    return false;
  return std::includes(other.points_.begin(), other.points_.end(), points_.begin(),
                       points_.end());
}

SpecSubset set_union(const SpecSubset &a, const SpecSubset &b) {
  if (a.all_ || b.all_)
    return SpecSubset::all();
  std::vector<SpecPoint> u;
  std::set_union(a.points_.begin(), a.points_.end(), b.points_.begin(), b.points_.end(),
                 std::back_inserter(u));
  return SpecSubset::of(std::move(u));
}

SpecSubset set_intersection(const SpecSubset &a, const SpecSubset &b) {
  if (a.all_)
    return b;
  if (b.all_)
    return a;
  std::vector<SpecPoint> u;
  std::set_intersection(a.points_.begin(), a.points_.end(), b.points_.begin(),
                        b.points_.end(), std::back_inserter(u));
  return SpecSubset::of(std::move(u));
}

std::string SpecSubset::to_string() const {
  if (all_)
    return "All";
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < points_.size(); ++i)
    os << (i ? ", " : "") << points_[i].to_string();
  os << '}';
  return os.str();
}

SpecSubset SpecSubset::parse(const std::string &text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '{' && c != '}' && c != '\t')
      t.push_back(c);
  std::string lower = t;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "all")
    return all();
  if (lower.empty() || lower == "none")
    return empty();
  std::vector<SpecPoint> pts;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t comma = t.find(',', pos);
    std::string item = t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 18)
      throw InvalidPoint("bad point '" + item + "' in set '" + text + "'");
    pts.push_back(SpecPoint::parse(std::stoull(item)));
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return of(std::move(pts));
}

} // namespace kkboot
