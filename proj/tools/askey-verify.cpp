#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "askey/errors.hpp"
#include "askey/report.hpp"

int main(int argc, char** argv) {
  using namespace askey;
  CLI::App app{"Exact verification of Christoffel expansions and difference/differential relations"};
  std::string families, suites, config, report_path, format = "text";
  int n_max = 0;
  unsigned jobs = 0;
  std::int64_t seed = -1;
  std::vector<std::string> mutations;
  bool list = false;
  app.add_option("--families", families, "Comma-separated family tags or 'all'");
  app.add_option("--suites", suites, "Comma-separated suites or 'all'");
  app.add_option("--n-max", n_max, "Highest degree n")->check(CLI::Range(2, 1000));
  app.add_option("--config", config, "INI configuration file")->check(CLI::ExistingFile);
  app.add_option("--report", report_path, "Write the report to this file instead of stdout");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--jobs", jobs, "Worker threads (0: all cores)");
  app.add_option("--seed", seed, "Seed for binding perturbation on zero-denominator retries")->check(CLI::NonNegativeNumber);
  app.add_option("--mutate", mutations, "Add 1 to a printed constant, e.g. AW:beta");
  app.add_flag("--list", list, "List families and suites");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (list) {
    for (const FamilyDescriptor& f : catalog()) {
      std::cout << f.tag << "\t" << f.name << "\tm=" << f.m << "\n";
    }
    std::cout << "suites:";
    for (Suite s : all_suites()) std::cout << " " << suite_name(s);
    std::cout << "\n";
    return 0;
  }

  SuiteSpec spec;
  try {
    if (!config.empty()) {
      std::ifstream in(config);
      spec = parse_config(in, config);
    } else {
      spec = default_spec();
    }
    if (app.count("--families")) spec.families = parse_families(families);
    if (app.count("--suites")) spec.suites = parse_suites(suites);
    if (n_max > 0) spec.n_max = n_max;
    if (app.count("--jobs")) spec.jobs = jobs;
    if (seed >= 0) spec.seed = static_cast<std::uint64_t>(seed);
    for (const std::string& m : mutations) spec.mutations.push_back(parse_mutation(m));
    validate(spec);
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  const VerificationReport report = run(spec);
  const std::string text = format == "structured" ? to_structured(report) : to_text(report);
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path);
    out << text;
    if (!out) {
      std::cerr << "cannot write " << report_path << "\n";
      return 2;
    }
  }
  return report.any_failed() ? 1 : 0;
}
