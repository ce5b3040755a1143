#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nestdig/digraph.hpp"
#include "nestdig/ordering.hpp"
#include "nestdig/rational.hpp"

#include <nlohmann/json_fwd.hpp>

namespace nestdig {

// Closed interval with exact rational endpoints; a point when left == right.
struct RationalInterval {
    Rational left;
    Rational right;

    RationalInterval() = default;
    RationalInterval(Rational l, Rational r) : left(l), right(r) {
        if (r < l)
            throw std::invalid_argument("interval with right < left");
    }

    bool is_point() const { return left == right; }
    bool contains(const Rational& x) const { return left <= x && x <= right; }
    bool contains(const RationalInterval& other) const {
        return left <= other.left && other.right <= right;
    }
    Rational length() const { return right - left; }

    friend bool intersects(const RationalInterval& a, const RationalInterval& b) {
        return max(a.left, b.left) <= min(a.right, b.right);
    }
    bool operator==(const RationalInterval& other) const {
        return left == other.left && right == other.right;
    }
};

// Per-vertex pair of closed intervals (I_v, J_v), indexed by vertex label.
struct IntervalModel {
    std::vector<RationalInterval> origin;      // I_v, label v at index v-1
    std::vector<RationalInterval> destination; // J_v

    int n() const { return static_cast<int>(origin.size()); }
    const RationalInterval& I(int v) const { return origin[v - 1]; }
    const RationalInterval& J(int v) const { return destination[v - 1]; }

    bool operator==(const IntervalModel& other) const {
        return origin == other.origin && destination == other.destination;
    }
};

// The intersection digraph of the model: arc (u,v) iff I_u and J_v meet.
Digraph digraph_of(const IntervalModel& m);

struct RealizationMismatch {
    int u, v;
    bool arc_without_intersection; // otherwise intersection without arc
};

struct RealizationReport {
    bool ok = true;
    std::vector<RealizationMismatch> mismatches;
};

// ok iff digraph_of(m) equals d exactly; otherwise every mismatched ordered
// pair with its direction. Throws std::invalid_argument on size mismatch.
RealizationReport realizes(const IntervalModel& m, const Digraph& d);

// J_v contained in I_v for every vertex.
bool is_nest(const IntervalModel& m);

// Every interval (both families) has positive length.
bool all_positive(const IntervalModel& m);

enum class Shape {
    interval,
    reflexive,
    nest,
    catch_,
    balanced,
    chronological,
    adjusted,
    point,
};

std::string shape_name(Shape s);

// All shape flags the model satisfies, evaluated per vertex with exact
// arithmetic. "catch" demands the destination point strictly interior to the
// origin interval, and "balanced" additionally that the point is its
// midpoint.
std::set<Shape> shape_of(const IntervalModel& m);

// Eliminates degenerate intervals: repeatedly finds the smallest endpoint
// value that is both a left and a right endpoint and shifts every right
// endpoint equal to it, plus every endpoint strictly above it, upward by half
// the minimum endpoint gap. Preserves digraph_of and is_nest; an already
// all-positive model is returned unchanged.
IntervalModel perturb_positive(const IntervalModel& m);

struct NotNestModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExtractedOrdering {
    Ordering ordering;
    std::vector<Rational> points; // p_v by vertex label
};

// Picks pairwise-distinct points p_v in the (perturbed) destination
// intervals and orders vertices by ascending p_v. For a nest model the
// resulting ordering is a nest ordering of digraph_of(m). Throws
// NotNestModelError if the model is not nest.
ExtractedOrdering extract_ordering(const IntervalModel& m);

// Bit-exact JSON serialization:
//   {"n": <int>, "intervals": [{"I": ["a/b","c/d"], "J": [...]}, ...]}
nlohmann::json model_to_json(const IntervalModel& m);

struct ModelParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IntervalModel model_from_json(const nlohmann::json& j);

} // namespace nestdig
