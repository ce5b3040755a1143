#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nestdig/digraph.hpp"

namespace nestdig {

// A permutation of the vertex labels 1..n, given as the sequence of labels in
// position order.
class Ordering {
public:
    Ordering() = default;

    // Throws std::invalid_argument if the sequence is not a permutation.
    explicit Ordering(std::vector<int> vertex_sequence);

    static Ordering identity(int n);

    int n() const { return static_cast<int>(vertex_at_.size()); }
    int vertex_at(int pos) const { return vertex_at_[pos - 1]; }
    int position_of(int v) const { return pos_of_[v - 1]; }
    const std::vector<int>& sequence() const { return vertex_at_; }

    Ordering reversed() const;

    bool operator==(const Ordering& other) const {
        return vertex_at_ == other.vertex_at_;
    }

private:
    std::vector<int> vertex_at_; // position -> label
    std::vector<int> pos_of_;    // label -> position
};

struct Violation {
    std::string rule;         // e.g. "i-first", "nest-a"
    std::vector<int> witness; // vertex labels
};

struct OrderingReport {
    bool ok = true;
    std::vector<Violation> violations;
};

struct NotReflexiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluates the three nest-ordering closure properties (each a statement and
// its mirror, six rules total) over every position quadruple
// pu <= pv <= pw <= pz, repetition allowed. Reports all violations, each
// naming its rule and the witness vertices. Throws NotReflexiveError on a
// non-reflexive digraph: nest orderings are defined only for reflexive ones.
OrderingReport check_nest_ordering(const Digraph& d, const Ordering& ord);

// Early-exit variant of the same check.
bool is_nest_ordering(const Digraph& d, const Ordering& ord);

// Incremental check used by backtracking searches: given a prefix of an
// ordering (vertex labels for positions 1..k), decides whether the newly
// placed position k introduces any nest-property violation. A violation among
// placed vertices can never be repaired by later placements, so a search may
// prune on failure.
bool nest_prefix_ok(const Digraph& d, const std::vector<int>& prefix);

} // namespace nestdig
