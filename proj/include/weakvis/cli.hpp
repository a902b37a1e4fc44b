#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weakvis
{

/// Exit codes of the command-line tool.
enum ExitCode : int
{
	exit_ok = 0,
	exit_domain_error = 1,
	exit_usage = 2,
};

/// Runs the tool on `args` (without the program name). Normal output goes to
/// `out`; usage text and error names go to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace weakvis
