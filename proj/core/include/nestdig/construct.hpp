#pragma once

#include <stdexcept>
#include <vector>

#include "nestdig/digraph.hpp"
#include "nestdig/model.hpp"
#include "nestdig/ordering.hpp"

namespace nestdig {

// Stop functions and tail neighborhoods, computed positionally under an
// ordering. Index i holds the data for the vertex at position i; positions 0
// and n+1 stand for the auxiliary isolated boundary vertices, which makes
// both stop functions total.
struct StopData {
    std::vector<int> sigma_r;            // position x -> least z > x, z not an out-neighbor
    std::vector<int> sigma_l;            // greatest z < x, z not an out-neighbor
    std::vector<std::vector<int>> tail_r; // out-neighbor positions beyond sigma_r
    std::vector<std::vector<int>> tail_l; // out-neighbor positions before sigma_l

    int sigma_right(int pos) const { return sigma_r[pos - 1]; }
    int sigma_left(int pos) const { return sigma_l[pos - 1]; }
    const std::vector<int>& tail_right(int pos) const { return tail_r[pos - 1]; }
    const std::vector<int>& tail_left(int pos) const { return tail_l[pos - 1]; }
};

// Throws NotReflexiveError on a non-reflexive digraph.
StopData compute_stops(const Digraph& d, const Ordering& ord);

struct NotNestOrderingError : std::runtime_error {
    OrderingReport report;
    explicit NotNestOrderingError(OrderingReport r)
        : std::runtime_error("ordering is not a nest ordering"),
          report(std::move(r)) {}
};

// The ordering-to-model construction. Origin intervals span from the last
// non-out-neighbor on the left to the first on the right, pulled inward by a
// fractional correction depending on the tail size; destination interval
// endpoints fold the relevant origin endpoints of in-neighbors, falling back
// to the vertex's own position when there are none.
//
// Refuses non-nest orderings (throwing NotNestOrderingError with the failing
// report embedded): the construction's guarantees hold only under that
// hypothesis. On success the returned model is validated to be nest and to
// realize d exactly.
IntervalModel build_model(const Digraph& d, const Ordering& ord);

// Same arithmetic without the nest-ordering gate or the output validation.
IntervalModel build_model_unchecked(const Digraph& d, const Ordering& ord);

} // namespace nestdig
