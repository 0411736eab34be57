/**
 * @file cli.hpp
 * @brief Command dispatch for the isochron tool.
 *
 * Exit codes: 0 success, 1 computation error, 2 usage error.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isochron {

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isochron
