#include "cforge/report.hpp"

#include <sstream>

namespace cforge {

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["status"] = r.status();
  j["verdict"] = r.verdict;
  j["expected"] = r.expected;
  j["params"] = r.params;
  j["window"] = r.window;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) {
    nlohmann::json jf;
    jf["inputs"] = f.inputs;
    jf["residual"] = f.residual;
    if (!f.note.empty()) jf["note"] = f.note;
    j["failures"].push_back(jf);
  }
  if (!r.witnesses.empty()) {
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : r.witnesses) {
      nlohmann::json jw;
      jw["kind"] = w.kind;
      jw["detail"] = w.detail;
      if (!w.coeffs.empty()) jw["coeffs"] = w.coeffs;
      j["witnesses"].push_back(jw);
    }
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (r.dpow_bound >= 0) j["dpow_bound"] = r.dpow_bound;
  if (r.lossy >= 0) j["lossy"] = r.lossy != 0;
  if (r.has_seed) j["seed"] = r.seed;
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "== " << r.check << " ==\n";
  for (const auto& [k, v] : r.params) os << "  " << k << " = " << v << "\n";
  if (!r.window.empty()) os << "  window: " << r.window << "\n";
  if (r.dpow_bound >= 0) os << "  dpow_bound: " << r.dpow_bound << "\n";
  if (r.has_seed) os << "  seed: " << r.seed << "\n";
  if (r.lossy >= 0) os << "  lossy: " << (r.lossy ? "yes (truncation dropped terms; evidence only)" : "no") << "\n";
  os << "  verdict: " << r.verdict << " (expected: " << r.expected << ") -> " << r.status()
     << "\n";
  if (!r.failures.empty()) {
    os << "  failures (" << r.failures.size() << "):\n";
    for (const auto& f : r.failures) {
      os << "    at (";
      for (size_t k = 0; k < f.inputs.size(); ++k) os << (k ? ", " : "") << f.inputs[k];
      os << "): residual " << f.residual;
      if (!f.note.empty()) os << "  [" << f.note << "]";
      os << "\n";
    }
  }
  for (const auto& w : r.witnesses) {
    os << "  " << w.kind << ": " << w.detail;
    if (!w.coeffs.empty()) {
      os << "  via ";
      for (size_t k = 0; k < w.coeffs.size(); ++k) os << (k ? " + " : "") << w.coeffs[k];
    }
    os << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string render_reports(const std::vector<Report>& reports, bool as_json) {
  if (as_json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (const auto& r : reports) out += to_text(r);
  return out;
}

}  // namespace cforge
