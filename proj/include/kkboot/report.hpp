#pragma once

// Structured outcome of one CLI invocation with JSON and text renderings.
//
// JSON layout:
//   {"command": str, "inputs": [str],
//    "result": {"deg0": str, "deg1": str} | {"set": str} | {"bool": b}
//              | {"group": str} | {},
//    "unrepresentable": [str], "notes": {str: str},
//    "properties": [{"name", "pass", "witness", "checked"}]}
// Timing is kept out of the JSON so equal runs give byte-identical output.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kkboot/graded.hpp"
#include "kkboot/property.hpp"

namespace kkboot {

struct RunReport {
  enum class ResultKind { None, Graded, Set, Bool, Group };

  std::string command;
  std::vector<std::string> inputs;
  ResultKind kind = ResultKind::None;
  std::string deg0, deg1; // Graded
  std::string text;       // Set or Group
  bool flag = false;      // Bool
  std::vector<std::string> unrepresentable;
  std::map<std::string, std::string> notes;
  std::vector<PropertyResult> properties;
  std::optional<double> seconds;

  void set_graded(const GradedGroup &g);
  /// Also records the unrepresentable tags of both degrees.
  void set_graded(const GradedValue &g);
  void set_set(std::string s);
  void set_bool(bool b);
  void set_group(std::string g);

  bool all_pass() const;
  std::size_t failures() const;

  std::string to_json() const;
  static RunReport from_json(const std::string &json);
  std::string to_text() const;

  /// Timing is not part of the structured content.
  bool same_content(const RunReport &o) const;
};

} // namespace kkboot
