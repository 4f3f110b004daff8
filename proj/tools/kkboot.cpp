// kkboot: command-line front end for the bootstrap category model.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
// 3 unrepresentable result under --strict.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kkboot/object_parser.hpp"
#include "kkboot/oracle.hpp"
#include "kkboot/report.hpp"
#include "kkboot/spectrum.hpp"
#include "kkboot/verify.hpp"

using namespace kkboot;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kStrict = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Flags {
  bool json = false;
  bool strict = false;
  std::uint64_t seed = 1;
  std::uint64_t prime_bound = 13;
  std::uint64_t max_order = 64;
  std::size_t corpus_size = 200;
  std::size_t compact_size = 100;
  std::size_t pairs = 500;
  std::uint64_t residue_bound = 50;
  std::size_t families = 200;
  std::size_t morphisms = 100;
};

BootObject obj(const std::string &text) { return parse_object(text).object(); }

// "1,2;3,4" is the 2x2 matrix with rows (1,2) and (3,4). An empty string is
// the zero matrix of the expected shape.
IntMatrix parse_matrix(const std::string &text, std::size_t rows, std::size_t cols,
                       const std::string &name) {
  IntMatrix m(rows, cols);
  if (text.find_first_not_of(" ") == std::string::npos)
    return m;
  std::vector<std::vector<Integer>> entries;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    entries.emplace_back();
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
      const auto b = cell.find_first_not_of(" ");
      const auto e = cell.find_last_not_of(" ");
      if (b == std::string::npos)
        throw UsageError(name + ": empty matrix entry");
      try {
        entries.back().emplace_back(cell.substr(b, e - b + 1));
      } catch (const std::invalid_argument &) {
        throw UsageError(name + ": bad matrix entry '" + cell + "'");
      }
    }
  }
  if (entries.size() != rows)
    throw UsageError(name + ": expected " + std::to_string(rows) + " rows, got " +
                     std::to_string(entries.size()));
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols)
      throw UsageError(name + ": row " + std::to_string(i + 1) + " needs " +
                       std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = entries[i][j];
  }
  return m;
}

FGGroup finite_group(const std::string &text) {
  const GradedGroup g = parse_object(text).evaluate();
  if (!g.deg1.is_zero() || !g.deg0.is_finitely_generated())
    throw UsageError("oracle: '" + text + "' must be a finitely generated group in degree 0");
  return g.deg0.fg();
}

verify::SuiteOptions suite_options(const Flags &f) {
  verify::SuiteOptions o;
  o.seed = f.seed;
  o.max_order = f.max_order;
  o.oracle_pairs = f.pairs;
  o.corpus_size = f.corpus_size;
  o.compact_corpus_size = f.compact_size;
  o.classification_prime_bound = f.prime_bound;
  o.residue_prime_bound = f.residue_bound;
  o.families = f.families;
  o.morphisms = f.morphisms;
  return o;
}

int finish(const RunReport &r, const Flags &f, bool verification = false) {
  std::cout << (f.json ? r.to_json() + "\n" : r.to_text());
  if (verification && !r.all_pass())
    return kVerifyFailed;
  if (f.strict && !r.unrepresentable.empty())
    return kStrict;
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"kkboot: K-theory model of the bootstrap category"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_flag("--json", f.json, "Emit JSON");
  app.add_flag("--strict", f.strict, "Exit 3 when a result is unrepresentable");
  app.add_option("--seed", f.seed, "Corpus seed");
  app.add_option("--prime-bound", f.prime_bound, "Largest prime for enumerated subsets");
  app.add_option("--max-order", f.max_order, "Largest finite group order for brute force");
  app.add_option("--corpus-size", f.corpus_size, "Objects in the general corpus");
  app.add_option("--compact-size", f.compact_size, "Objects in the compact corpus");
  app.add_option("--pairs", f.pairs, "Group pairs checked against brute force");
  app.add_option("--residue-bound", f.residue_bound, "Largest prime for residue checks");
  app.add_option("--families", f.families, "Random generating families");
  app.add_option("--morphisms", f.morphisms, "Random morphisms for cone checks");

  std::string a_text, b_text, set_text, f0_text, f1_text, suite, functor;
  std::vector<std::string> family;

  auto *kk_cmd = app.add_subcommand("kk", "KK_0 and KK_1 of a pair of objects");
  kk_cmd->add_option("A", a_text)->required();
  kk_cmd->add_option("B", b_text)->required();

  auto *tensor_cmd = app.add_subcommand("tensor", "K-theory of A (x) B");
  tensor_cmd->add_option("A", a_text)->required();
  tensor_cmd->add_option("B", b_text)->required();

  auto *support_cmd = app.add_subcommand("support", "Support of an object");
  support_cmd->add_option("A", a_text)->required();

  auto *suppz_cmd = app.add_subcommand("suppz", "Support through injective resolutions");
  suppz_cmd->add_option("A", a_text)->required();

  auto *member_cmd = app.add_subcommand("member", "Membership in the localizing subcategory of a set");
  member_cmd->add_option("A", a_text)->required();
  member_cmd->add_option("--set", set_text, "Points, e.g. \"0,2,3\" or \"all\"")->required();

  auto *generates_cmd = app.add_subcommand("generates", "Whether A lies in the subcategory generated by a family");
  generates_cmd->add_option("A", a_text)->required();
  generates_cmd->add_option("family", family, "Generating objects")->required();

  auto *smashing_cmd = app.add_subcommand("smashing", "Whether the subcategory of a set is smashing");
  smashing_cmd->add_option("--set", set_text, "Points, e.g. \"0\" or \"2,3\"")->required();

  auto *cone_cmd = app.add_subcommand("cone", "Cone of a morphism given by its Hom matrices");
  cone_cmd->add_option("A", a_text)->required();
  cone_cmd->add_option("B", b_text)->required();
  cone_cmd->add_option("--f0", f0_text, "Degree 0 matrix, rows separated by ';'");
  cone_cmd->add_option("--f1", f1_text, "Degree 1 matrix, rows separated by ';'");

  auto *verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(verify::suite_names()));

  auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force bifunctor of two finite groups");
  oracle_cmd->add_option("bifunctor", functor)->required()->check(
      CLI::IsMember({"hom", "ext", "tensor", "tor"}));
  oracle_cmd->add_option("G", a_text)->required();
  oracle_cmd->add_option("H", b_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  try {
    if (kk_cmd->parsed()) {
      r.command = "kk";
      r.inputs = {a_text, b_text};
      const BootObject a = obj(a_text), b = obj(b_text);
      r.set_graded(kk_groups(a, b));
      r.notes["ext_term_vanishes"] = kk_is_hom_only(a, b) ? "true" : "false";
    } else if (tensor_cmd->parsed()) {
      r.command = "tensor";
      r.inputs = {a_text, b_text};
      r.set_graded(tensor_object(obj(a_text), obj(b_text)).ktheory);
    } else if (support_cmd->parsed()) {
      r.command = "support";
      r.inputs = {a_text};
      r.set_set(supp(obj(a_text)).to_string());
    } else if (suppz_cmd->parsed()) {
      r.command = "suppz";
      r.inputs = {a_text};
      r.set_set(supp_injective(obj(a_text)).to_string());
    } else if (member_cmd->parsed()) {
      r.command = "member";
      const SpecSubset s = SpecSubset::parse(set_text);
      r.inputs = {a_text, s.to_string()};
      const BootObject a = obj(a_text);
      r.set_bool(member(a, LocalizingSubcat{s}));
      r.notes["support"] = supp(a).to_string();
    } else if (generates_cmd->parsed()) {
      r.command = "generates";
      r.inputs = {a_text};
      std::vector<BootObject> objs;
      for (const auto &t : family) {
        r.inputs.push_back(t);
        objs.push_back(obj(t));
      }
      r.set_bool(in_generated(obj(a_text), objs));
      r.notes["generated_support"] = generated_support(objs).to_string();
    } else if (smashing_cmd->parsed()) {
      r.command = "smashing";
      const SpecSubset s = SpecSubset::parse(set_text);
      r.inputs = {s.to_string()};
      const LocalizingSubcat l{s};
      r.set_bool(is_smashing(l));
      r.notes["specialization_closed"] = is_specialization_closed(s) ? "true" : "false";
      r.notes["orthogonal_residues"] = orthogonal_residues(l).to_string();
    } else if (cone_cmd->parsed()) {
      r.command = "cone";
      r.inputs = {a_text, b_text, f0_text, f1_text};
      const BootObject a = obj(a_text), b = obj(b_text);
      if (!is_compact(a) || !is_compact(b))
        throw UsageError("cone: both objects must have finitely generated K-theory");
      auto gens = [](const BootObject &x, unsigned e) {
        return x.ktheory[Degree(e)].fg().generator_count();
      };
      const HomPartMorphism phi(a, b, parse_matrix(f0_text, gens(b, 0), gens(a, 0), "--f0"),
                                parse_matrix(f1_text, gens(b, 1), gens(a, 1), "--f1"));
      const ConeResult c = cone(phi);
      r.set_graded(c.object.ktheory);
      r.notes["kernel"] = phi.kernel().to_string();
      r.notes["cokernel"] = phi.cokernel().to_string();
      r.notes["extension_ambiguous"] = c.extension_ambiguous ? "true" : "false";
      if (c.extension_ambiguous)
        r.notes["extension_classes"] = c.ambiguity_witness.to_string();
    } else if (verify_cmd->parsed()) {
      r.command = "verify";
      const verify::SuiteOptions o = suite_options(f);
      r.inputs = {suite,
                  "seed=" + std::to_string(o.seed),
                  "max-order=" + std::to_string(o.max_order),
                  "pairs=" + std::to_string(o.oracle_pairs),
                  "corpus-size=" + std::to_string(o.corpus_size),
                  "compact-size=" + std::to_string(o.compact_corpus_size),
                  "prime-bound=" + std::to_string(o.classification_prime_bound),
                  "residue-bound=" + std::to_string(o.residue_prime_bound),
                  "families=" + std::to_string(o.families),
                  "morphisms=" + std::to_string(o.morphisms)};
      r.properties = verify::run_suite(suite, o);
      r.set_bool(r.all_pass());
      r.notes["failures"] = std::to_string(r.failures());
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return finish(r, f, true);
    } else if (oracle_cmd->parsed()) {
      r.command = "oracle";
      r.inputs = {functor, a_text, b_text};
      const Bifunctor which = parse_bifunctor(functor);
      const FGGroup g = finite_group(a_text), h = finite_group(b_text);
      const FGGroup brute = oracle_bifunctor(which, g, h, f.max_order);
      r.set_group(brute.to_string());
      const GroupExpr ge(g), he(h);
      std::string table;
      switch (which) {
      case Bifunctor::Hom: table = hom(ge, he).to_string(); break;
      case Bifunctor::Ext: table = ext(ge, he).to_string(); break;
      case Bifunctor::Tensor: table = tensor(ge, he).to_string(); break;
      case Bifunctor::Tor: table = tor(ge, he).to_string(); break;
      }
      PropertyResult agree("closed-form table agrees with brute force");
      agree.expect(table == GroupExpr(brute).to_string(), "table gives " + table);
      r.properties.push_back(agree);
      return finish(r, f, true);
    }
  } catch (const ParseError &e) {
    std::cerr << "kkboot: " << e.what() << '\n';
    return kUsage;
  } catch (const BoundExceeded &e) {
    std::cerr << "kkboot: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "kkboot: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error &e) {
    std::cerr << "kkboot: " << e.what() << '\n';
    return kUsage;
  }
  return finish(r, f);
}
