#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nestdig/digraph.hpp"
#include "nestdig/ordering.hpp"

#include <nlohmann/json_fwd.hpp>

namespace nestdig {

// An ordered-slot template. Slots 1..slot_count are mapped to positions
// p1 <= ... <= pk of an ordering; adjacent slots may coincide only when
// listed in equalities_allowed. Required arcs must be present between the
// assigned vertices and forbidden arcs absent; arcs between coincident slots
// become loop conditions.
struct Pattern {
    std::string name;
    int slot_count = 0;
    std::vector<std::pair<int, int>> equalities_allowed; // adjacent (i, i+1)
    std::vector<std::pair<int, int>> required_arcs;      // slot pairs
    std::vector<std::pair<int, int>> forbidden_arcs;     // slot pairs

    bool equality_allowed(int slot) const; // between slot and slot+1
};

struct PatternCatalog {
    std::string class_name;
    std::vector<Pattern> patterns;
};

// All occurrences of the pattern under the ordering, as tuples of vertex
// labels (one per slot, coincident slots repeating the label). Witnesses are
// emitted in lexicographic order of the assigned position tuples.
std::vector<std::vector<int>> match_pattern(const Digraph& d, const Ordering& ord,
                                            const Pattern& p);

// First occurrence only, or false if the pattern does not occur.
bool pattern_occurs(const Digraph& d, const Ordering& ord, const Pattern& p,
                    std::vector<int>* first_witness = nullptr);

// ok iff no pattern of the catalog occurs; violations carry the pattern name
// and its first witness.
OrderingReport check_pattern_free(const Digraph& d, const Ordering& ord,
                                  const PatternCatalog& cat);

// Incremental variant for backtracking searches over ordering prefixes: does
// any pattern of the catalog occur within the prefix using its last position?
bool catalog_prefix_free(const Digraph& d, const std::vector<int>& prefix,
                         const PatternCatalog& cat);

// Forbidden-pattern catalogs, one per digraph class.
PatternCatalog nest_patterns();
PatternCatalog reflexive_interval_patterns();
PatternCatalog adjusted_patterns();
PatternCatalog catch_patterns();
PatternCatalog point_patterns();
PatternCatalog balanced_patterns();
PatternCatalog chronological_patterns();

const std::vector<std::string>& catalog_class_names();
PatternCatalog catalog_by_class(const std::string& class_name);

nlohmann::json catalog_to_json(const PatternCatalog& cat);

} // namespace nestdig
