#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dualhopf {

enum class CheckKind {
  law,          // must hold; a failure fails the suite
  observation,  // measured and reported, never fails the suite
};

/// Outcome of one law over all cases up to a bound.
struct Check {
  std::string law;
  std::string sector;
  int bound = 0;
  CheckKind kind = CheckKind::law;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;

  static constexpr std::size_t max_counterexamples = 5;

  bool holds() const { return failures == 0; }

  /// Counts one case. The description is only built for failures.
  void record(bool ok, const std::function<std::string()>& describe);
};

struct Report {
  std::string suite;
  // A deque keeps references returned by add() valid while more checks are added.
  std::deque<Check> checks;

  bool passed() const;
  void append(const Report& other);
  Check& add(std::string law, std::string sector, int bound, CheckKind kind = CheckKind::law);

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace dualhopf
