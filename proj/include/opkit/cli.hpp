#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opkit::cli {

/// Exit status of the Koszul command when the necessary condition fails.
inline constexpr int kNotKoszul = 2;

/// Runs one command line (args[0] is the program name). Returns the exit
/// status: 0 on success, 1 on errors, 2 when `koszul` certifies
/// non-Koszulity.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opkit::cli
