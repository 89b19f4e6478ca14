#ifndef CFORGE_REPORT_HPP
#define CFORGE_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace cforge {

struct Failure {
  std::vector<std::string> inputs;
  std::string residual;
  std::string note;  // which identity, etc.; may be empty
};

struct Witness {
  std::string kind;
  std::string detail;
  std::vector<std::string> coeffs;
};

/// Uniform check result. `verdict` is the raw outcome; a report counts as
/// passing when verdict == expected (expected defaults to "pass", callers
/// may override, e.g. for runs that are supposed to reject a mutant).
struct Report {
  std::string check;
  std::map<std::string, std::string> params;
  std::string window;
  std::string verdict = "pass";
  std::string expected = "pass";
  std::vector<Failure> failures;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  int dpow_bound = -1;        // -1: not applicable
  int lossy = -1;             // -1: n/a, 0: exact, 1: truncation dropped terms
  long long seed = -1;        // -1: n/a
  bool has_seed = false;

  bool as_expected() const { return verdict == expected; }
  std::string status() const { return as_expected() ? "pass" : "fail"; }
  void fail(std::vector<std::string> inputs, std::string residual, std::string note = "") {
    verdict = "fail";
    failures.push_back({std::move(inputs), std::move(residual), std::move(note)});
  }
};

nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

/// Renders a batch the way the CLI emits it: one JSON array / one text
/// stream with a section per report.
std::string render_reports(const std::vector<Report>& reports, bool as_json);

}  // namespace cforge

#endif
