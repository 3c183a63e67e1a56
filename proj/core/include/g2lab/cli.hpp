#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace g2lab {

// Command-line front end. Returns 0 when every requested check passes, 1 when
// some check fails, 2 on usage, parse, or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g2lab
