#include "nestdig/digraph.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace nestdig {

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [u, v] : arcs) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("arc endpoint out of range: (" +
                                        std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        adj_[static_cast<std::size_t>(u - 1) * n + (v - 1)] = 1;
    }
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (has_arc(u, v))
                arcs_.emplace_back(u, v);
}

bool Digraph::is_reflexive() const {
    for (int v = 1; v <= n_; ++v)
        if (!has_arc(v, v))
            return false;
    return true;
}

std::vector<Arc> Digraph::symmetric_arcs() const {
    std::vector<Arc> out;
    for (const auto& [u, v] : arcs_)
        if (has_arc(v, u))
            out.emplace_back(u, v);
    return out;
}

Digraph Digraph::transposed() const {
    std::vector<Arc> rev;
    rev.reserve(arcs_.size());
    for (const auto& [u, v] : arcs_)
        rev.emplace_back(v, u);
    return Digraph(n_, rev);
}

Digraph random_digraph(int n, double arc_probability, std::uint64_t seed,
                       bool force_reflexive) {
    if (arc_probability < 0.0 || arc_probability > 1.0)
        throw std::invalid_argument("arc probability outside [0,1]");
    std::mt19937_64 gen(seed);
    std::vector<Arc> arcs;
    for (int u = 1; u <= n; ++u) {
        for (int v = 1; v <= n; ++v) {
            // One draw per ordered pair, in a fixed order, so the result is a
            // pure function of (n, p, seed, force_reflexive).
            double draw = std::uniform_real_distribution<double>(0.0, 1.0)(gen);
            bool present = arc_probability >= 1.0 ||
                           (arc_probability > 0.0 && draw < arc_probability);
            if (u == v && force_reflexive)
                present = true;
            if (present)
                arcs.emplace_back(u, v);
        }
    }
    return Digraph(n, arcs);
}

DigraphEnumeration::DigraphEnumeration(int n, bool reflexive_only)
    : n_(n), reflexive_only_(reflexive_only) {
    if (n < 0 || n > max_n(reflexive_only))
        throw BoundError("exhaustive enumeration bound exceeded: n <= " +
                         std::to_string(max_n(reflexive_only)) +
                         (reflexive_only ? " (reflexive)" : " (general)"));
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (!(reflexive_only && u == v))
                optional_pairs_.emplace_back(u, v);
    total_ = std::uint64_t(1) << optional_pairs_.size();
}

std::optional<Digraph> DigraphEnumeration::next() {
    if (index_ >= total_)
        return std::nullopt;
    std::vector<Arc> arcs;
    if (reflexive_only_)
        for (int v = 1; v <= n_; ++v)
            arcs.emplace_back(v, v);
    for (std::size_t i = 0; i < optional_pairs_.size(); ++i)
        if (index_ >> i & 1)
            arcs.push_back(optional_pairs_[i]);
    ++index_;
    return Digraph(n_, arcs);
}

} // namespace nestdig
