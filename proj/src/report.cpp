#include "dualhopf/report.hpp"

#include <sstream>

namespace dualhopf {

void Check::record(bool ok, const std::function<std::string()>& describe) {
  ++cases;
  if (ok) return;
  ++failures;
  if (counterexamples.size() < max_counterexamples) counterexamples.push_back(describe());
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (c.kind == CheckKind::law && !c.holds()) return false;
  return true;
}

void Report::append(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

Check& Report::add(std::string law, std::string sector, int bound, CheckKind kind) {
  Check c;
  c.law = std::move(law);
  c.sector = std::move(sector);
  c.bound = bound;
  c.kind = kind;
  checks.push_back(std::move(c));
  return checks.back();
}

nlohmann::json Report::to_json() const {
  nlohmann::json doc;
  doc["suite"] = suite;
  doc["passed"] = passed();
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    doc["checks"].push_back({
        {"law", c.law},
        {"sector", c.sector},
        {"bound", c.bound},
        {"kind", c.kind == CheckKind::law ? "law" : "observation"},
        {"cases", c.cases},
        {"failures", c.failures},
        {"holds", c.holds()},
        {"counterexamples", c.counterexamples},
    });
  }
  return doc;
}

std::string Report::to_text() const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    const char* status = c.kind == CheckKind::observation ? (c.holds() ? "OBSERVED-TRUE" : "OBSERVED-FALSE")
                                                          : (c.holds() ? "PASS" : "FAIL");
    if (c.kind == CheckKind::law && !c.holds()) ++failed;
    out << '[' << status << "] " << c.sector << ": " << c.law << " (bound " << c.bound << ", " << c.cases
        << " cases";
    if (c.failures) out << ", " << c.failures << " failing";
    out << ")\n";
    for (const auto& ce : c.counterexamples) out << "    counterexample: " << ce << '\n';
  }
  out << "suite " << suite << ": " << (failed ? "FAILED" : "PASSED") << " (" << checks.size() << " checks, "
      << failed << " failed)\n";
  return out.str();
}

}  // namespace dualhopf
