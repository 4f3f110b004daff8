#include "kkboot/object_parser.hpp"

#include <cctype>

namespace kkboot {

ParseError::ParseError(std::size_t position, std::string expected, const std::string &message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message +
                         (expected.empty() ? "" : " (expected " + expected + ")")),
      position_(position), expected_(std::move(expected)) {}

namespace {

constexpr std::size_t kMaxExponent = 4096;

ExprNode node(ExprNode::Kind kind) {
  ExprNode n;
  n.kind = kind;
  return n;
}

class Parser {
public:
  explicit Parser(const std::string &s) : s_(s) {}

  ExprNode parse() {
    ExprNode n = object();
    skip();
    if (pos_ != s_.size())
      fail("end of input", "unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

private:
  const std::string &s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string &expected, const std::string &msg) const {
    throw ParseError(pos_, expected, msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  // Keywords must not run into further letters ("unit" but not "units").
  bool accept_word(std::string_view word) {
    skip();
    if (s_.compare(pos_, word.size(), word) != 0)
      return false;
    const std::size_t end = pos_ + word.size();
    if (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end])))
      return false;
    pos_ = end;
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok))
      fail("'" + std::string(tok) + "'", "missing '" + std::string(tok) + "'");
  }

  Integer nat() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("natural number", "missing number");
    return Integer(s_.substr(start, pos_ - start));
  }

  std::size_t small_nat(const char *what) {
    const std::size_t at = (skip(), pos_);
    const Integer n = nat();
    if (n > static_cast<unsigned long>(kMaxExponent)) {
      pos_ = at;
      fail(std::string(what) + " <= " + std::to_string(kMaxExponent), "value too large");
    }
    return n.get_ui();
  }

  Integer modulus() {
    const std::size_t at = (skip(), pos_);
    Integer n = nat();
    if (n < 2) {
      pos_ = at;
      fail("modulus >= 2", "moduli must be >= 2, got " + n.get_str());
    }
    return n;
  }

  std::uint64_t point(bool allow_zero) {
    const std::size_t at = (skip(), pos_);
    const Integer n = nat();
    const bool ok = n.fits_ulong_p() && ((allow_zero && n == 0) || is_prime(n.get_ui()));
    if (!ok) {
      pos_ = at;
      fail(allow_zero ? "0 or a prime" : "a prime", n.get_str() + " is not a valid point");
    }
    return n.get_ui();
  }

  std::size_t exponent() { return accept("^") ? small_nat("exponent") : 1; }

  ExprNode object() {
    const std::size_t start = (skip(), pos_);
    int d0 = -1;
    ExprNode first = block(d0);
    if (!accept(";")) {
      if (d0 == 1) {
        ExprNode s = node(ExprNode::Kind::Suspend);
        s.children.push_back(std::move(first));
        return s;
      }
      return first;
    }
    const std::size_t second_at = (skip(), pos_);
    int d1 = -1;
    ExprNode second = block(d1);
    if (d0 == 1) {
      pos_ = start;
      fail("[0] on the first block", "first ';' block must be degree 0");
    }
    if (d1 == 0) {
      pos_ = second_at;
      fail("[1] on the second block", "second ';' block must be degree 1");
    }
    ExprNode g = node(ExprNode::Kind::Graded);
    g.children.push_back(std::move(first));
    g.children.push_back(std::move(second));
    return g;
  }

  ExprNode block(int &degree) {
    ExprNode s = sum();
    degree = -1;
    if (accept("[")) {
      skip();
      if (accept("0"))
        degree = 0;
      else if (accept("1"))
        degree = 1;
      else
        fail("0 or 1", "bad degree");
      expect("]");
    }
    return s;
  }

  ExprNode sum() {
    ExprNode first = term();
    if (!(skip(), pos_ < s_.size() && s_[pos_] == '+'))
      return first;
    ExprNode s = node(ExprNode::Kind::Sum);
    s.children.push_back(std::move(first));
    while (accept("+"))
      s.children.push_back(term());
    return s;
  }

  ExprNode term() {
    skip();
    ExprNode n;
    if (accept("(")) {
      n = object();
      expect(")");
      return n;
    }
    if (accept_word("unit")) {
      n.kind = ExprNode::Kind::Unit;
      return n;
    }
    if (accept("kappa(")) {
      n.kind = ExprNode::Kind::Residue;
      n.point = point(true);
      expect(")");
      return n;
    }
    if (accept("iota(")) {
      n.kind = ExprNode::Kind::Injective;
      n.point = point(true);
      expect(")");
      return n;
    }
    if (accept("moore(")) {
      n.kind = ExprNode::Kind::Moore;
      n.modulus = modulus();
      expect(")");
      return n;
    }
    if (accept("I(")) {
      n.kind = ExprNode::Kind::Prufer;
      n.point = point(false);
      expect(")");
      n.count = exponent();
      return n;
    }
    if (accept("Z/")) {
      n.kind = ExprNode::Kind::Cyclic;
      n.modulus = modulus();
      n.count = exponent();
      return n;
    }
    if (accept_word("Z")) {
      n.kind = ExprNode::Kind::Free;
      n.count = exponent();
      return n;
    }
    if (accept_word("Q")) {
      n.kind = ExprNode::Kind::Rationals;
      n.count = exponent();
      return n;
    }
    if (accept_word("S")) {
      n.kind = ExprNode::Kind::Suspend;
      n.children.push_back(term());
      return n;
    }
    if (accept("0")) {
      n.kind = ExprNode::Kind::Zero;
      return n;
    }
    fail("a term (Z, Z/n, Q, I(p), kappa(p), iota(p), moore(n), unit, S, '(')",
         pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'"
                          : "unexpected end of input");
  }
};

GradedGroup eval(const ExprNode &n) {
  using K = ExprNode::Kind;
  auto even = [](GroupExpr g) { return place(g, kEven); };
  switch (n.kind) {
  case K::Zero: return {};
  case K::Free: return even(GroupExpr::free(n.count));
  case K::Cyclic:
    return even(GroupExpr(FGGroup::from_orders(0, std::vector<Integer>(n.count, n.modulus))));
  case K::Rationals: return even(GroupExpr::rationals(n.count));
  case K::Prufer: return even(GroupExpr({}, 0, std::vector<Prime>(n.count, n.point)));
  case K::Residue: return residue_object(SpecPoint::parse(n.point)).ktheory;
  case K::Injective: return injective_object(SpecPoint::parse(n.point)).ktheory;
  case K::Moore: return moore_object(n.modulus).ktheory;
  case K::Unit: return unit().ktheory;
  case K::Suspend: return suspend(eval(n.children.at(0)));
  case K::Sum: {
    GradedGroup g;
    for (const auto &c : n.children)
      g = direct_sum(g, eval(c));
    return g;
  }
  case K::Graded: return direct_sum(eval(n.children.at(0)), suspend(eval(n.children.at(1))));
  }
  return {};
}

} // namespace

GradedGroup ObjectExpr::evaluate() const { return eval(tree); }

BootObject ObjectExpr::object() const {
  std::string label = text;
  const auto b = label.find_first_not_of(" \t");
  const auto e = label.find_last_not_of(" \t");
  label = b == std::string::npos ? "" : label.substr(b, e - b + 1);
  return realize(evaluate(), label);
}

ObjectExpr parse_object(const std::string &text) { return {text, Parser(text).parse()}; }

} // namespace kkboot
