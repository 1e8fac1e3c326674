#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "genkummer/report.hpp"

using genkummer::report::Options;
using genkummer::report::Report;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suite for the cohomology of the "
               "generalized Kummer fourfold and its involution quotient"};
  std::string report_name = "all";
  std::string format = "text";
  std::string out_path;
  int q = 0;
  unsigned long seed = 12345;

  std::vector<std::string> valid = genkummer::report::report_names();
  valid.push_back("all");
  app.add_option("--report", report_name, "Report to run")
      ->check(CLI::IsMember(valid));
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--q", q, "Prime filter for the symplectic tables")
      ->check(CLI::IsMember({2, 3, 5}));
  app.add_option("--out", out_path, "Write output to a file");
  app.add_option("--seed", seed, "Seed for sampled property checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  Options opt;
  opt.q = q;
  opt.seed = seed;

  std::vector<std::string> to_run;
  if (report_name == "all")
    to_run = genkummer::report::report_names();
  else
    to_run.push_back(report_name);
  std::sort(to_run.begin(), to_run.end());

  std::ostringstream body;
  bool all_pass = true;
  nlohmann::json failures = nlohmann::json::array();
  nlohmann::json jreports = nlohmann::json::array();

  for (const auto& name : to_run) {
    Report r;
    try {
      r = genkummer::report::run_report(name, opt);
    } catch (const std::exception& e) {
      r.name = name;
      r.checks.push_back({"run", false, "completion", e.what(), "cli/run"});
    }
    if (!r.passed()) {
      all_pass = false;
      for (const auto& c : r.checks)
        if (!c.pass)
          failures.push_back({{"report", r.name},
                              {"check", c.name},
                              {"expected", c.expected},
                              {"actual", c.actual}});
    }
    if (format == "json")
      jreports.push_back(genkummer::report::render_json(r));
    else
      body << genkummer::report::render_text(r);
  }

  std::string output;
  if (format == "json") {
    nlohmann::json doc =
        (jreports.size() == 1) ? jreports[0] : nlohmann::json{{"reports",
                                                               jreports}};
    output = doc.dump(2) + "\n";
  } else {
    output = body.str();
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << output;
  } else {
    std::cout << output;
  }

  if (!all_pass) {
    std::cerr << failures.dump(2) << "\n";
    return 1;
  }
  return 0;
}
