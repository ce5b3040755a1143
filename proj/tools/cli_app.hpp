#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nestdig::cli {

// Exit codes: 0 decided/ok, 1 decided negative (violations or
// principled refusal), 2 input error, 3 capability bound exceeded.
// Machine-readable JSON goes to out, human-readable summaries to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace nestdig::cli
