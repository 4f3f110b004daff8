#pragma once

#include <cstddef>
#include <string>

namespace kkboot {

/// Outcome of checking one property over many cases. `witness` holds the
/// first counterexample found, or stays empty.
struct PropertyResult {
  std::string name;
  bool pass = true;
  std::string witness;
  std::size_t checked = 0;

  explicit PropertyResult(std::string n = {}) : name(std::move(n)) {}

  void expect(bool ok, const std::string &case_description) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      witness = case_description;
    }
  }
};

} // namespace kkboot
