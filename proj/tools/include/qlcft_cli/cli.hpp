#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlcft::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a verification sweep reports violations and 2 on usage or
/// validation errors, which are written to `err` as one "error: " line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qlcft::cli
