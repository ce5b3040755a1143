#include "nestdig/model.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include <nlohmann/json.hpp>

namespace nestdig {

Digraph digraph_of(const IntervalModel& m) {
    std::vector<Arc> arcs;
    for (int u = 1; u <= m.n(); ++u)
        for (int v = 1; v <= m.n(); ++v)
            if (intersects(m.I(u), m.J(v)))
                arcs.emplace_back(u, v);
    return Digraph(m.n(), arcs);
}

RealizationReport realizes(const IntervalModel& m, const Digraph& d) {
    if (m.n() != d.n())
        throw std::invalid_argument("model and digraph sizes differ");
    RealizationReport report;
    for (int u = 1; u <= m.n(); ++u)
        for (int v = 1; v <= m.n(); ++v) {
            bool arc = d.has_arc(u, v);
            bool meet = intersects(m.I(u), m.J(v));
            if (arc != meet)
                report.mismatches.push_back({u, v, arc});
        }
    report.ok = report.mismatches.empty();
    return report;
}

bool is_nest(const IntervalModel& m) {
    for (int v = 1; v <= m.n(); ++v)
        if (!m.I(v).contains(m.J(v)))
            return false;
    return true;
}

bool all_positive(const IntervalModel& m) {
    for (int v = 1; v <= m.n(); ++v)
        if (m.I(v).is_point() || m.J(v).is_point())
            return false;
    return true;
}

std::string shape_name(Shape s) {
    switch (s) {
    case Shape::interval: return "interval";
    case Shape::reflexive: return "reflexive";
    case Shape::nest: return "nest";
    case Shape::catch_: return "catch";
    case Shape::balanced: return "balanced";
    case Shape::chronological: return "chronological";
    case Shape::adjusted: return "adjusted";
    default: return "point";
    }
}

std::set<Shape> shape_of(const IntervalModel& m) {
    bool reflexive = true, nest = true, catch_ = true, balanced = true;
    bool chronological = true, adjusted = true, point = true;
    for (int v = 1; v <= m.n(); ++v) {
        const auto& I = m.I(v);
        const auto& J = m.J(v);
        if (!intersects(I, J))
            reflexive = false;
        if (!I.contains(J))
            nest = false;
        bool is_pt = J.is_point();
        if (!is_pt)
            point = false;
        bool interior = is_pt && I.left < J.left && J.right < I.right;
        if (!interior)
            catch_ = false;
        if (!(interior && J.left + J.left == I.left + I.right))
            balanced = false;
        if (!(is_pt && J.left == I.left))
            chronological = false;
        if (J.left != I.left)
            adjusted = false;
    }
    std::set<Shape> flags{Shape::interval};
    if (reflexive) flags.insert(Shape::reflexive);
    if (nest) flags.insert(Shape::nest);
    if (catch_) flags.insert(Shape::catch_);
    if (balanced) flags.insert(Shape::balanced);
    if (chronological) flags.insert(Shape::chronological);
    if (adjusted) flags.insert(Shape::adjusted);
    if (point) flags.insert(Shape::point);
    return flags;
}

namespace {

std::vector<Rational> sorted_endpoint_values(const IntervalModel& m) {
    std::vector<Rational> vals;
    for (int v = 1; v <= m.n(); ++v) {
        vals.push_back(m.I(v).left);
        vals.push_back(m.I(v).right);
        vals.push_back(m.J(v).left);
        vals.push_back(m.J(v).right);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

} // namespace

IntervalModel perturb_positive(const IntervalModel& m) {
    if (all_positive(m))
        return m;
    IntervalModel cur = m;
    for (;;) {
        auto vals = sorted_endpoint_values(cur);

        // Smallest value that is simultaneously some interval's left and
        // some interval's right endpoint.
        bool found = false;
        Rational pivot;
        for (const Rational& x : vals) {
            bool is_left = false, is_right = false;
            for (int v = 1; v <= cur.n(); ++v) {
                is_left |= cur.I(v).left == x || cur.J(v).left == x;
                is_right |= cur.I(v).right == x || cur.J(v).right == x;
            }
            if (is_left && is_right) {
                pivot = x;
                found = true;
                break;
            }
        }
        if (!found)
            break;

        Rational eps(1, 2);
        bool have_gap = false;
        Rational gap;
        for (std::size_t i = 1; i < vals.size(); ++i) {
            Rational g = vals[i] - vals[i - 1];
            if (!have_gap || g < gap) {
                gap = g;
                have_gap = true;
            }
        }
        if (have_gap)
            eps = gap * Rational(1, 2);

        // Right endpoints equal to the pivot, and every endpoint strictly
        // above it, move up by eps. Order relations between endpoints are
        // preserved, so the modeled digraph is unchanged.
        auto shift_left = [&](Rational t) { return t > pivot ? t + eps : t; };
        auto shift_right = [&](Rational t) { return t >= pivot ? t + eps : t; };
        IntervalModel next = cur;
        for (int v = 1; v <= cur.n(); ++v) {
            next.origin[v - 1] = RationalInterval(shift_left(cur.I(v).left),
                                                  shift_right(cur.I(v).right));
            next.destination[v - 1] = RationalInterval(
                shift_left(cur.J(v).left), shift_right(cur.J(v).right));
        }
        cur = std::move(next);
    }
    return cur;
}

ExtractedOrdering extract_ordering(const IntervalModel& m) {
    if (!is_nest(m))
        throw NotNestModelError("ordering extraction requires a nest model");
    IntervalModel pm = perturb_positive(m);
    int n = pm.n();
    if (n == 0)
        return {Ordering(), {}};

    // Minimum destination-interval length; positive after perturbation.
    Rational g = pm.J(1).length();
    for (int v = 2; v <= n; ++v)
        g = min(g, pm.J(v).length());
    Rational delta = g * Rational(1, 2LL * n);

    // Greedy point selection in ascending (right(J), left(J), label) order:
    // each point sits at least delta above the previous one, which keeps all
    // points distinct, and the right-endpoint sort keeps every point inside
    // its own destination interval.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (pm.J(a).right != pm.J(b).right)
            return pm.J(a).right < pm.J(b).right;
        if (pm.J(a).left != pm.J(b).left)
            return pm.J(a).left < pm.J(b).left;
        return a < b;
    });

    std::vector<Rational> points(n);
    bool first = true;
    Rational prev;
    for (int v : order) {
        Rational p = pm.J(v).left;
        if (!first)
            p = max(p, prev + delta);
        first = false;
        assert(pm.J(v).contains(p));
        points[v - 1] = p;
        prev = p;
    }

    std::vector<int> seq(order);
    std::sort(seq.begin(), seq.end(), [&](int a, int b) {
        return points[a - 1] < points[b - 1];
    });
    return {Ordering(std::move(seq)), std::move(points)};
}

nlohmann::json model_to_json(const IntervalModel& m) {
    nlohmann::json intervals = nlohmann::json::array();
    for (int v = 1; v <= m.n(); ++v) {
        intervals.push_back(
            {{"I", {m.I(v).left.str(), m.I(v).right.str()}},
             {"J", {m.J(v).left.str(), m.J(v).right.str()}}});
    }
    return nlohmann::json{{"n", m.n()}, {"intervals", intervals}};
}

namespace {

RationalInterval interval_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ModelParseError(where + ": expected a two-string endpoint array");
    auto l = Rational::parse(j[0].get<std::string>());
    auto r = Rational::parse(j[1].get<std::string>());
    if (!l || !r)
        throw ModelParseError(where + ": endpoints must be reduced rationals "
                                      "\"num/den\" with positive denominator");
    if (*r < *l)
        throw ModelParseError(where + ": right endpoint below left");
    return RationalInterval(*l, *r);
}

} // namespace

IntervalModel model_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("intervals"))
        throw ModelParseError("model JSON must carry \"n\" and \"intervals\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw ModelParseError("\"n\" must be a non-negative integer");
    int n = j["n"].get<int>();
    const auto& intervals = j["intervals"];
    if (!intervals.is_array() || static_cast<int>(intervals.size()) != n)
        throw ModelParseError("\"intervals\" must be an array of length n");
    IntervalModel m;
    for (int v = 1; v <= n; ++v) {
        const auto& e = intervals[v - 1];
        std::string where = "intervals[" + std::to_string(v - 1) + "]";
        if (!e.is_object() || !e.contains("I") || !e.contains("J"))
            throw ModelParseError(where + ": expected object with \"I\" and \"J\"");
        m.origin.push_back(interval_from_json(e["I"], where + ".I"));
        m.destination.push_back(interval_from_json(e["J"], where + ".J"));
    }
    return m;
}

} // namespace nestdig
