#include "nestdig/edgelist.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace nestdig {

namespace {

bool data_line(const std::string& line) {
    for (char ch : line) {
        if (ch == '#')
            return false;
        if (!std::isspace(static_cast<unsigned char>(ch)))
            return true;
    }
    return false;
}

} // namespace

Digraph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Arc> arcs;

    while (std::getline(in, line)) {
        ++lineno;
        if (!data_line(line))
            continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw EdgeListParseError(lineno,
                                         "expected header \"n m\" with "
                                         "non-negative counts");
            std::string rest;
            if (ls >> rest)
                throw EdgeListParseError(lineno, "trailing content after header");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v))
            throw EdgeListParseError(lineno, "expected arc line \"u v\"");
        std::string rest;
        if (ls >> rest)
            throw EdgeListParseError(lineno, "trailing content after arc");
        if (u < 1 || u > n || v < 1 || v > n)
            throw EdgeListParseError(lineno, "arc endpoint outside 1.." +
                                                 std::to_string(n));
        if (static_cast<long long>(arcs.size()) == m)
            throw EdgeListParseError(lineno, "more arcs than declared");
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0)
        throw EdgeListParseError(lineno == 0 ? 1 : lineno,
                                 "missing header \"n m\"");
    if (static_cast<long long>(arcs.size()) != m)
        throw EdgeListParseError(lineno, "declared " + std::to_string(m) +
                                             " arcs, found " +
                                             std::to_string(arcs.size()));
    return Digraph(static_cast<int>(n), arcs);
}

Digraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string format_edge_list(const Digraph& d) {
    std::ostringstream out;
    out << d.n() << ' ' << d.arcs().size() << '\n';
    for (const auto& [u, v] : d.arcs())
        out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace nestdig
