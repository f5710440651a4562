#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace platocf::cli
{
//! Process exit statuses.
enum ExitStatus : int
{
    exit_success = 0,
    exit_validation_failure = 1,
    exit_usage = 2,
};

inline constexpr char const version[] = "0.1.0";

/*!
 * Run the command line. \c args excludes the program name. CSV and report
 * output goes to \c out unless a command writes to a file given by -o;
 * diagnostics go to \c err.
 */
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace platocf::cli
