#include "kkboot/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace kkboot {

using nlohmann::ordered_json;

namespace {

void add_tags(std::vector<std::string> &out, const GroupValue &v) {
  for (const auto &t : v.tags())
    if (std::find(out.begin(), out.end(), t) == out.end())
      out.push_back(t);
}

} // namespace

void RunReport::set_graded(const GradedGroup &g) {
  kind = ResultKind::Graded;
  deg0 = g.deg0.to_string();
  deg1 = g.deg1.to_string();
}

void RunReport::set_graded(const GradedValue &g) {
  kind = ResultKind::Graded;
  deg0 = g.deg0.to_string();
  deg1 = g.deg1.to_string();
  add_tags(unrepresentable, g.deg0);
  add_tags(unrepresentable, g.deg1);
}

void RunReport::set_set(std::string s) {
  kind = ResultKind::Set;
  text = std::move(s);
}

void RunReport::set_bool(bool b) {
  kind = ResultKind::Bool;
  flag = b;
}

void RunReport::set_group(std::string g) {
  kind = ResultKind::Group;
  text = std::move(g);
}

bool RunReport::all_pass() const { return failures() == 0; }

std::size_t RunReport::failures() const {
  return std::count_if(properties.begin(), properties.end(),
                       [](const PropertyResult &p) { return !p.pass; });
}

std::string RunReport::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["inputs"] = inputs;
  ordered_json r = ordered_json::object();
  switch (kind) {
  case ResultKind::None: break;
  case ResultKind::Graded:
    r["deg0"] = deg0;
    r["deg1"] = deg1;
    break;
  case ResultKind::Set: r["set"] = text; break;
  case ResultKind::Bool: r["bool"] = flag; break;
  case ResultKind::Group: r["group"] = text; break;
  }
  j["result"] = r;
  j["unrepresentable"] = unrepresentable;
  j["notes"] = ordered_json(notes);
  ordered_json props = ordered_json::array();
  for (const auto &p : properties)
    props.push_back(
        {{"name", p.name}, {"pass", p.pass}, {"witness", p.witness}, {"checked", p.checked}});
  j["properties"] = props;
  return j.dump(2);
}

RunReport RunReport::from_json(const std::string &json) {
  const auto j = ordered_json::parse(json);
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs").get<std::vector<std::string>>();
  const auto &res = j.at("result");
  if (res.contains("deg0")) {
    r.kind = ResultKind::Graded;
    r.deg0 = res.at("deg0").get<std::string>();
    r.deg1 = res.at("deg1").get<std::string>();
  } else if (res.contains("set")) {
    r.set_set(res.at("set").get<std::string>());
  } else if (res.contains("bool")) {
    r.set_bool(res.at("bool").get<bool>());
  } else if (res.contains("group")) {
    r.set_group(res.at("group").get<std::string>());
  }
  r.unrepresentable = j.at("unrepresentable").get<std::vector<std::string>>();
  r.notes = j.at("notes").get<std::map<std::string, std::string>>();
  for (const auto &p : j.at("properties")) {
    PropertyResult pr(p.at("name").get<std::string>());
    pr.pass = p.at("pass").get<bool>();
    pr.witness = p.at("witness").get<std::string>();
    pr.checked = p.at("checked").get<std::size_t>();
    r.properties.push_back(std::move(pr));
  }
  return r;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << command;
  for (const auto &in : inputs)
    os << " \"" << in << '"';
  os << '\n';
  switch (kind) {
  case ResultKind::None: break;
  case ResultKind::Graded:
    os << "  degree 0: " << deg0 << "\n  degree 1: " << deg1 << '\n';
    break;
  case ResultKind::Set: os << "  " << text << '\n'; break;
  case ResultKind::Bool: os << "  " << (flag ? "true" : "false") << '\n'; break;
  case ResultKind::Group: os << "  " << text << '\n'; break;
  }
  for (const auto &t : unrepresentable)
    os << "  unrepresentable: " << t << '\n';
  for (const auto &[k, v] : notes)
    os << "  " << k << ": " << v << '\n';
  for (const auto &p : properties) {
    os << "  [" << (p.pass ? "PASS" : "FAIL") << "] " << p.name << " (" << p.checked
       << " cases)";
    if (!p.pass)
      os << " counterexample: " << p.witness;
    os << '\n';
  }
  if (!properties.empty())
    os << "  " << properties.size() - failures() << '/' << properties.size()
       << " properties passed\n";
  if (seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *seconds);
    os << "  time: " << buf << " s\n";
  }
  return os.str();
}

bool RunReport::same_content(const RunReport &o) const {
  auto key = [](const RunReport &r) {
    RunReport c = r;
    c.seconds.reset();
    return c.to_json();
  };
  return key(*this) == key(o);
}

} // namespace kkboot
