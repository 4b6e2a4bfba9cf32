// Command-line front end. Prints one JSON report per invocation, or only the
// verdict line with --quiet. Exit codes follow ztile::ExitCode.

#include "ztile/commands.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct SetInput {
  std::string literal;
  std::string file;

  void attach(CLI::App* cmd, const std::string& name) {
    auto* lit = cmd->add_option("--" + name, literal, "set literal, e.g. \"{0,1,3}\"");
    auto* path = cmd->add_option("--" + name + "-file", file, "file holding a set literal");
    lit->excludes(path);
  }

  ztile::IntegerSet get(const std::string& name) const {
    if (!file.empty()) return ztile::read_set_file(file);
    if (literal.empty()) throw ztile::parse_error("missing --" + name + " or --" + name + "-file");
    return ztile::parse_set(literal);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for tilings of the integers and of cyclic groups"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "print only the verdict line");

  SetInput a, b;
  std::int64_t modulus = 0, big_modulus = 0, max_modulus = 0, prime = 0, p = 0, q = 0, r = 0;
  std::optional<std::int64_t> c;
  std::size_t limit = 1;
  unsigned jobs = 1;
  std::string output;

  std::function<ztile::CommandResult()> run;

  auto* verify = app.add_subcommand("verify", "decide whether A + B tiles Z/MZ");
  a.attach(verify, "a");
  b.attach(verify, "b");
  verify->add_option("--modulus,-M", modulus)->required();
  verify->callback([&] { run = [&] { return ztile::cmd_verify(a.get("a"), b.get("b"), modulus); }; });

  auto* conditions = app.add_subcommand("conditions", "check (T1) and (T2) for A");
  a.attach(conditions, "a");
  conditions->callback([&] { run = [&] { return ztile::cmd_conditions(a.get("a")); }; });

  auto* identity = app.add_subcommand("identity", "difference and power spectra with both sides of the identity");
  a.attach(identity, "a");
  b.attach(identity, "b");
  identity->add_option("--n,-N", modulus)->required();
  identity->callback([&] { run = [&] { return ztile::cmd_identity(a.get("a"), b.get("b"), modulus); }; });

  auto* constant = app.add_subcommand("constant", "evaluate the shifted spectral sum at c, or sweep c");
  a.attach(constant, "a");
  b.attach(constant, "b");
  constant->add_option("--big-modulus,-M", big_modulus)->required();
  constant->add_option("--n,-N", modulus)->required();
  constant->add_option("--c", c, "single shift; omit to sweep [-2M, 2M] outside B");
  constant->callback(
      [&] { run = [&] { return ztile::cmd_constant(a.get("a"), b.get("b"), big_modulus, modulus, c); }; });

  auto* search = app.add_subcommand("search", "search tiling complements of A");
  a.attach(search, "a");
  search->add_option("--max-modulus", max_modulus)->required();
  search->add_option("--limit", limit, "number of complements to report")->capture_default_str();
  search->add_option("--jobs", jobs)->capture_default_str()->check(CLI::PositiveNumber);
  search->callback([&] { run = [&] { return ztile::cmd_search(a.get("a"), max_modulus, limit, jobs); }; });

  auto* theorem1 = app.add_subcommand("theorem1", "check the three-prime divisibility statement on a tiling");
  a.attach(theorem1, "a");
  b.attach(theorem1, "b");
  theorem1->add_option("--p", p)->required();
  theorem1->add_option("--q", q)->required();
  theorem1->add_option("--r", r)->required();
  theorem1->callback([&] { run = [&] { return ztile::cmd_theorem1(a.get("a"), b.get("b"), p, q, r); }; });

  auto* classify = app.add_subcommand("classify", "structural cases of B in residue coordinates mod p, q, r");
  b.attach(classify, "b");
  classify->add_option("--p", p)->required();
  classify->add_option("--q", q)->required();
  classify->add_option("--r", r)->required();
  classify->callback([&] { run = [&] { return ztile::cmd_classify(b.get("b"), p, q, r); }; });

  auto* corpus = app.add_subcommand("corpus", "write every tiling with M <= max-modulus, one record per line");
  corpus->add_option("--max-modulus", max_modulus)->required();
  corpus->add_option("--output,-o", output)->required();
  corpus->add_option("--jobs", jobs)->capture_default_str()->check(CLI::PositiveNumber);
  corpus->callback([&] { run = [&] { return ztile::cmd_corpus(max_modulus, output, jobs); }; });

  auto* decompose = app.add_subcommand("decompose", "split A along residues mod p when B lies in pZ");
  a.attach(decompose, "a");
  b.attach(decompose, "b");
  decompose->add_option("--modulus,-M", modulus)->required();
  decompose->add_option("--prime", prime)->required();
  decompose->callback([&] { run = [&] { return ztile::cmd_decompose(a.get("a"), b.get("b"), modulus, prime); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ztile::kUsageError;
  }

  ztile::CommandResult result;
  try {
    result = run();
  } catch (const ztile::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ztile::kUsageError;
  }
  if (result.exit_code == ztile::kUsageError && result.report.contains("error"))
    std::cerr << "error: " << result.report["error"].get<std::string>() << '\n';
  if (quiet)
    std::cout << result.verdict() << '\n';
  else
    std::cout << result.report.dump(2) << '\n';
  return result.exit_code;
}
