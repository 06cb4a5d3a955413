#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "walg/cli.hpp"
#include "walg/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"walg: finite W-algebras and Slodowy slices by exact computation"};
  app.require_subcommand(1);

  walg::JobConfig config;
  std::string checks = "theorem";
  bool table = false, omit_timing = false;
  auto* run = app.add_subcommand("run", "run checks on one (g, e, ell) case");
  run->add_option("--algebra", config.algebra, "sl<n> or a JSON algebra file")->required();
  run->add_option("--nilpotent", config.nilpotent,
                  "regular, minimal, [p1,..], a label combination or a tuple");
  run->add_option("--ell", config.ell, "zero, lagrangian-auto, file, or vectors joined by ';'");
  run->add_option("--max-degree", config.max_degree, "global Kazhdan degree ceiling");
  run->add_option("--checks", checks, "comma separated; name:degree overrides the degree");
  run->add_option("--out", config.output, "write the JSON report here");
  run->add_option("--seed", config.seed, "seed for transversality sample points");
  run->add_flag("--table", table, "print human-readable tables instead of JSON");
  run->add_flag("--omit-timing", omit_timing, "drop the timing object from the report");

  std::string algebra, nilpotent, ell = "zero";
  int degree = 8;
  bool json = false;
  auto* describe = app.add_subcommand("describe", "print grading and slice data");
  describe->add_option("--algebra", algebra, "sl<n> or a JSON algebra file")->required();
  describe->add_option("--nilpotent", nilpotent, "as for run; default regular or the file's");
  describe->add_option("--ell", ell, "as for run");
  describe->add_option("--max-degree", degree, "Hilbert series range");
  describe->add_flag("--json", json, "print JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      config.checks = walg::parse_checks(checks);
      config.threads = walg::threads_from_env();
      walg::Json report = walg::run(config);
      if (omit_timing) report = walg::strip_timing(std::move(report));
      if (!config.output.empty() && omit_timing) {
        std::ofstream out(config.output);
        out << report.dump(2) << "\n";
      }
      if (table) std::cout << walg::render_report(report);
      else if (config.output.empty()) std::cout << report.dump(2) << "\n";
      else std::cout << "status: " << report["status"].get<std::string>() << "\n";
      return walg::report_passed(report) ? 0 : 1;
    }
    const walg::Json d = walg::describe(algebra, nilpotent, ell, degree);
    if (json) std::cout << d.dump(2) << "\n";
    else std::cout << walg::render_description(d);
    return 0;
  } catch (const walg::ConfigError& ex) {
    std::cerr << "config error: " << ex.what() << "\n";
    return 2;
  } catch (const walg::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  }
}
