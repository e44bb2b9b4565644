#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gxb/io.hpp"

namespace gxb {

/// Exit codes: success, malformed input, and a domain rejection such as a
/// non-central kernel.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitRejected = 2;

/// Runs one verb; `args` excludes the program name. The report goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Aligned-text rendering of a report. Derived from the JSON only.
std::string render_table(const Json& report);

} // namespace gxb
