#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genpos {

/// Parses argv-style arguments, dispatches to the library and writes the
/// result (canonical JSON or CSV) to `out`. Exit codes: 0 success, 1 when a
/// computation succeeded but the property was not certified (certificate does
/// not hold, verdict undecided, witness tolerance not reached), 2 on input
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace genpos
