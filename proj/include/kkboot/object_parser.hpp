#pragma once

// Text syntax for graded groups and bootstrap objects.
//
//   object  := block (";" block)?
//   block   := sum ("[" ("0" | "1") "]")?
//   sum     := term ("+" term)*
//   term    := "0" | "Z" ("^" nat)? | "Z/" nat ("^" nat)? | "Q" ("^" nat)?
//            | "I(" prime ")" ("^" nat)? | "kappa(" point ")" | "iota(" point ")"
//            | "moore(" nat ")" | "unit" | "S" term | "(" object ")"
//
// A single block defaults to degree 0 and "[1]" suspends it. With ";" the
// first block is degree 0 and the second degree 1; annotations there are
// optional but must agree with that order. Cyclic and Moore moduli must be
// at least 2.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "kkboot/model.hpp"

namespace kkboot {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, std::string expected, const std::string &message);
  std::size_t position() const { return position_; }
  const std::string &expected() const { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

/// Syntax tree of an object expression.
struct ExprNode {
  enum class Kind {
    Zero,
    Free,      // Z^count
    Cyclic,    // (Z/modulus)^count
    Rationals, // Q^count
    Prufer,    // I(point)^count
    Residue,   // kappa(point)
    Injective, // iota(point)
    Moore,     // moore(modulus)
    Unit,
    Suspend,   // children[0]
    Sum,       // children
    Graded,    // children[0] in degree 0, children[1] in degree 1
  };
  Kind kind = Kind::Zero;
  Integer modulus;
  std::uint64_t point = 0;
  std::size_t count = 1;
  std::vector<ExprNode> children;
};

struct ObjectExpr {
  std::string text;
  ExprNode tree;

  GradedGroup evaluate() const;
  /// Evaluated object labeled by the source text.
  BootObject object() const;
};

/// Throws ParseError with the byte offset of the offending token.
ObjectExpr parse_object(const std::string &text);

} // namespace kkboot
