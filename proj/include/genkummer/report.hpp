#pragma once
#include <json.hpp>
#include <string>
#include <vector>

// Named verification reports with machine-readable output. Each check
// carries its expected and actual values; a report passes iff every check
// does. JSON rendering is stable-ordered for golden-file comparison.
namespace genkummer::report {

using json = nlohmann::json;

struct Check {
  std::string name;
  bool pass;
  json expected;
  json actual;
  std::string ref;  // provenance tag for the tables this check pins down
};

struct Report {
  std::string name;
  std::vector<Check> checks;
  json data;  // optional extra payload (certification records)

  bool passed() const;
};

struct Options {
  int q = 0;              // 0 = all of {2,3,5} for the symplectic tables
  unsigned long seed = 12345;  // seed for sampled property checks
};

const std::vector<std::string>& report_names();  // excludes "all"
Report run_report(const std::string& name, const Options& opt);

std::string render_text(const Report& r);
json render_json(const Report& r);

}  // namespace genkummer::report
