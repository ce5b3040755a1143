#pragma once

#include <map>
#include <optional>
#include <string>

#include "nestdig/construct.hpp"
#include "nestdig/digraph.hpp"
#include "nestdig/model.hpp"
#include "nestdig/ordering.hpp"
#include "nestdig/pattern.hpp"

namespace nestdig {

// n! search limit for single-instance recognition and classification.
inline constexpr int kBruteForceBound = 9;

// Lexicographically smallest (by vertex sequence) nest ordering, if one
// exists. Backtracks over ordering prefixes, pruning on the first property
// violation. Non-reflexive digraphs have no nest ordering by definition.
// Throws BoundError when n exceeds the brute-force bound.
std::optional<Ordering> brute_force_nest_ordering(const Digraph& d);

// Lexicographically smallest ordering avoiding every pattern of the catalog,
// if one exists. Independent of the direct property checks above.
std::optional<Ordering> find_pattern_free_ordering(const Digraph& d,
                                                   const PatternCatalog& cat);

struct Certificate {
    bool member = false;
    std::optional<Ordering> ordering;    // members only
    std::optional<IntervalModel> model;  // members only
    std::string refutation;              // non-members only
};

// Constructive decision: members carry a nest ordering and its built model,
// re-verified end to end before returning; non-members carry the exhaustive
// refutation statement.
Certificate is_interval_nest(const Digraph& d);

struct ClassAdmission {
    bool admitted = false;
    std::optional<Ordering> witness;
};

struct ClassReport {
    std::map<std::string, ClassAdmission> classes; // keyed by class name
};

// Per class: does some ordering of d avoid that class's catalog?
ClassReport classify(const Digraph& d);

struct CensusResult {
    int n = 0;
    bool reflexive_only = false;
    std::uint64_t total = 0;
    std::map<std::string, std::uint64_t> admitted; // per class
    // Instances where nest admittance via the direct property search agrees
    // with admittance via the pattern search; must equal total.
    std::uint64_t nest_agreement = 0;
};

CensusResult census(int n, bool reflexive_only);

// Smallest enumerated digraph (by arc count, then lexicographic arc set)
// admitted by class_a's catalog but not class_b's.
std::optional<Digraph> find_separating_example(const std::string& class_a,
                                               const std::string& class_b, int n);

} // namespace nestdig
