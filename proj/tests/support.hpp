#pragma once

// Shared fixtures and seeded generators for the unit and acceptance suites.

#include <algorithm>
#include <random>

#include "nestdig/digraph.hpp"
#include "nestdig/model.hpp"

namespace nestdig::testing {

// Three vertices, all loops, arcs 1->3 and 2<->3; the order 1<2<3 is a nest
// ordering of it.
inline Digraph running_example() {
    return Digraph(3, {{1, 1}, {2, 2}, {3, 3}, {1, 3}, {2, 3}, {3, 2}});
}

inline Rational random_rational(std::mt19937_64& gen, long long hi) {
    long long den = std::uniform_int_distribution<long long>(1, 4)(gen);
    long long num = std::uniform_int_distribution<long long>(0, hi * den)(gen);
    return Rational(num, den);
}

inline RationalInterval random_interval(std::mt19937_64& gen, long long hi) {
    Rational a = random_rational(gen, hi);
    Rational b = random_rational(gen, hi);
    return RationalInterval(min(a, b), max(a, b));
}

// Random model with J_v clamped into I_v, hence nest by construction.
inline IntervalModel random_nest_model(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    IntervalModel m;
    for (int v = 0; v < n; ++v) {
        RationalInterval I = random_interval(gen, 2 * n);
        auto clamp = [&](Rational x) { return max(I.left, min(x, I.right)); };
        Rational a = clamp(random_rational(gen, 2 * n));
        Rational b = clamp(random_rational(gen, 2 * n));
        m.origin.push_back(I);
        m.destination.push_back(RationalInterval(min(a, b), max(a, b)));
    }
    return m;
}

// Random model (not necessarily nest) with at least one degenerate point
// interval.
inline IntervalModel random_degenerate_model(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    IntervalModel m;
    for (int v = 0; v < n; ++v) {
        m.origin.push_back(random_interval(gen, 2 * n));
        m.destination.push_back(random_interval(gen, 2 * n));
    }
    int victim = std::uniform_int_distribution<int>(0, n - 1)(gen);
    Rational p = random_rational(gen, 2 * n);
    if (std::uniform_int_distribution<int>(0, 1)(gen))
        m.origin[victim] = RationalInterval(p, p);
    else
        m.destination[victim] = RationalInterval(p, p);
    return m;
}

} // namespace nestdig::testing
