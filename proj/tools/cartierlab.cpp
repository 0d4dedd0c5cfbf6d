#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"

#include "cartierlab/cli.hpp"

int main(int argc, char** argv) {
  using namespace cartierlab;
  CLI::App app{"cartierlab: invariants of ring extensions A -> B"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CliOptions opts;
  std::string file;
  bool json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--pair-budget", opts.pair_budget, "S-pair budget per Groebner computation");
    sub->add_flag("--json", json, "emit the structured report");
    sub->add_flag("--assume-injective", opts.assume_injective, "skip the injectivity check");
  };
  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "extension description file")->required();
    add_common(sub);
    return sub;
  };

  with_file("check", "construction checks (well-defined, injective)");
  auto* stalks = with_file("stalks", "fiber components at primes of A");
  stalks->add_option("--primes", opts.primes, "maximal ideals, e.g. \"x,y;x-1,y\"");
  stalks->add_flag("--generic", opts.generic, "include the generic point");
  auto* li = with_file("li", "rank of LI(A,B)");
  li->add_option("--method", opts.method, "auto|hensel|connected|conductor|fiveterm|reduced")
      ->check(CLI::IsMember({"auto", "hensel", "connected", "conductor", "fiveterm", "reduced"}));
  li->add_option("--primes", opts.primes, "maximal ideals for the connectedness route");
  for (const char* name : {"seminormal", "anodal"}) {
    auto* sub = with_file(name, "bounded witness search and closure");
    sub->add_option("--bound", opts.bound, "total degree bound")->check(CLI::PositiveNumber);
  }
  auto* terms = app.add_subcommand("terms", "term counts of the decomposition of I(A[t_1..t_n, 1/t..], B[..])");
  terms->add_option("--n", opts.n, "number of Laurent variables")->required();
  add_common(terms);
  auto* units = app.add_subcommand("units", "unit test and Bass decomposition in R[t,1/t]");
  units->add_option("--base", opts.base, "file with a [ring] section")->required();
  units->add_option("--laurent", opts.laurent, "element, t^-k allowed")->required();
  add_common(units);
  auto* corpus = app.add_subcommand("corpus", "run the regression corpus");
  corpus->add_option("dir", file, "corpus directory");
  add_common(corpus);

  CLI11_PARSE(app, argc, argv);

  if (const char* env = std::getenv("CARTIERLAB_BUDGET")) {
    try {
      opts.pair_budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: CARTIERLAB_BUDGET must be a nonnegative integer\n";
      return 2;
    }
  }
  opts.json = json;
  std::string command = app.get_subcommands().front()->get_name();
  CommandResult r = run_command(command, file, opts);
  if (r.report.contains("error") && !json)
    std::cerr << r.text;
  else
    std::cout << render(r, json);
  return r.exit_code;
}
