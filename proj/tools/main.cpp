// coincidence-kit: exact commensurability, coincidence/similarity
// classification, and theorem-verification suites for free S-modules.

#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "cokit/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"coincidence-kit: exact arithmetic for commensurability and "
               "coincidence/similarity isometries of free S-modules"};
  app.require_subcommand(1);

  cokit::CommonOptions opt;
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for all sampled instances")->capture_default_str();
  app.add_option("--samples", opt.samples, "Sampled instances per property suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string module_1, module_2, isometry_file, suite, target;

  CLI::App* commensurate =
      app.add_subcommand("commensurate", "Decide commensurability of two modules");
  commensurate->add_option("module_1", module_1, "Module descriptor file or catalog name")
      ->required();
  commensurate->add_option("module_2", module_2, "Module descriptor file or catalog name")
      ->required();

  CLI::App* classify = app.add_subcommand(
      "classify", "Classify an isometry as coincidence/similarity/neither for a module");
  classify->add_option("module", module_1, "Module descriptor file or catalog name")->required();
  classify->add_option("isometry", isometry_file, "Isometry descriptor file")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run a property suite against a target module");
  verify
      ->add_option("suite", suite,
                   "One of: equivalence, groups, eta, thm319, example315, thm27, lemma26")
      ->required();
  verify->add_option("target", target, "Module descriptor file or catalog name")->required();

  CLI::App* index =
      app.add_subcommand("index", "Exact index of a full-rank submodule in a module");
  index->add_option("module", module_1, "Module descriptor file or catalog name")->required();
  index->add_option("submodule", module_2, "Submodule descriptor file or catalog name")
      ->required();

  for (CLI::App* sub : {commensurate, classify, verify, index}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic
    return 2;     // command-line misuse is an input error
  }

  cokit::Report report;
  if (app.got_subcommand(commensurate))
    report = cokit::cmd_commensurate(module_1, module_2, opt);
  else if (app.got_subcommand(classify))
    report = cokit::cmd_classify(module_1, isometry_file, opt);
  else if (app.got_subcommand(verify))
    report = cokit::cmd_verify(suite, target, opt);
  else
    report = cokit::cmd_index(module_1, module_2, opt);

  std::fputs(cokit::render(report, opt.format).c_str(), stdout);
  return report.exit_code;
}
