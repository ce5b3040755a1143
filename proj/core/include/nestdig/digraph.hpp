#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nestdig {

using Arc = std::pair<int, int>;

// Raised when an operation is asked to exceed its declared exhaustive or
// brute-force bound.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Labeled digraph on vertices 1..n. Loops allowed, arcs have no
// multiplicity. Immutable after construction.
class Digraph {
public:
    Digraph() = default;

    // Duplicate arcs in the input are collapsed. Throws std::invalid_argument
    // naming the offending pair if an endpoint is outside 1..n.
    Digraph(int n, const std::vector<Arc>& arcs);

    int n() const { return n_; }

    bool has_arc(int u, int v) const {
        return adj_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] != 0;
    }
    bool has_symmetric_arc(int u, int v) const {
        return has_arc(u, v) && has_arc(v, u);
    }

    // Sorted, deduplicated.
    const std::vector<Arc>& arcs() const { return arcs_; }

    // True iff every vertex has a loop (vacuously for n = 0).
    bool is_reflexive() const;

    // S(E): arcs whose reverse is also present. Contains every loop of the
    // digraph and is symmetric as a relation.
    std::vector<Arc> symmetric_arcs() const;

    Digraph transposed() const;

    bool operator==(const Digraph& other) const {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

private:
    int n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<Arc> arcs_;
};

// Deterministic seeded Erdos-Renyi style generator. Each ordered pair with
// u != v is an arc independently with the given probability; loops follow the
// same rule unless force_reflexive, in which case all loops are present.
// A pure function of its four arguments.
Digraph random_digraph(int n, double arc_probability, std::uint64_t seed,
                       bool force_reflexive);

// Streams every labeled digraph on n vertices exactly once. With
// reflexive_only all loops are fixed present and only the n^2-n non-loop
// pairs vary. Bounds: n <= 4 reflexive (2^12 = 4096 instances), n <= 3
// general.
class DigraphEnumeration {
public:
    DigraphEnumeration(int n, bool reflexive_only);

    std::optional<Digraph> next();

    std::uint64_t total() const { return total_; }

    static int max_n(bool reflexive_only) { return reflexive_only ? 4 : 3; }

private:
    int n_;
    bool reflexive_only_;
    std::vector<Arc> optional_pairs_;
    std::uint64_t total_;
    std::uint64_t index_ = 0;
};

} // namespace nestdig
