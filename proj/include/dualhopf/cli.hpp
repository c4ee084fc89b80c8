#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dualhopf/report.hpp"

namespace dualhopf::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a verification suite fails and 2 on usage or input errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Renders `count` random elements per space and parses them back.
Report roundtrip_check(std::uint64_t seed, int count, int max_grade);

}  // namespace dualhopf::cli
