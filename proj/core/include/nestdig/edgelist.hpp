#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "nestdig/digraph.hpp"

namespace nestdig {

struct EdgeListParseError : std::runtime_error {
    int line;
    EdgeListParseError(int line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message),
          line(line_) {}
};

// Text format: first line "n m", then m lines "u v" (1-indexed). Lines
// beginning with '#' are ignored. Loops are written "u u".
Digraph parse_edge_list(std::istream& in);
Digraph parse_edge_list(const std::string& text);

std::string format_edge_list(const Digraph& d);

} // namespace nestdig
