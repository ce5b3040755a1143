#include "nestdig/pattern.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace nestdig {

bool Pattern::equality_allowed(int slot) const {
    return std::find(equalities_allowed.begin(), equalities_allowed.end(),
                     std::make_pair(slot, slot + 1)) != equalities_allowed.end();
}

namespace {

void validate(const Pattern& p) {
    for (const auto& [a, b] : p.required_arcs)
        for (const auto& [c, e] : p.forbidden_arcs)
            if (a == c && b == e)
                throw std::invalid_argument("pattern " + p.name +
                                            ": required and forbidden overlap");
    auto in_range = [&](const std::pair<int, int>& s) {
        return s.first >= 1 && s.first <= p.slot_count && s.second >= 1 &&
               s.second <= p.slot_count;
    };
    for (const auto& s : p.required_arcs)
        if (!in_range(s))
            throw std::invalid_argument("pattern " + p.name + ": slot out of range");
    for (const auto& s : p.forbidden_arcs)
        if (!in_range(s))
            throw std::invalid_argument("pattern " + p.name + ": slot out of range");
}

// Backtracking over nondecreasing slot-to-position assignments. Arc
// constraints are enforced as soon as both endpoints are assigned, keeping
// the emitted witness order lexicographic in the position tuples.
// If fixed_last_position > 0, the final slot must land exactly there (used by
// the prefix-incremental search). Returns true if the visitor asked to stop.
bool enumerate_matches(const Digraph& d, const std::vector<int>& vertex_at,
                       const Pattern& p, int fixed_last_position,
                       const std::function<bool(const std::vector<int>&)>& visit) {
    int n = static_cast<int>(vertex_at.size());
    std::vector<int> pos(p.slot_count);

    auto constraints_ok = [&](int filled) {
        int slot = filled; // 1-based index of the just-assigned slot
        for (const auto& [a, b] : p.required_arcs)
            if ((a == slot || b == slot) && a <= slot && b <= slot)
                if (!d.has_arc(vertex_at[pos[a - 1] - 1], vertex_at[pos[b - 1] - 1]))
                    return false;
        for (const auto& [a, b] : p.forbidden_arcs)
            if ((a == slot || b == slot) && a <= slot && b <= slot)
                if (d.has_arc(vertex_at[pos[a - 1] - 1], vertex_at[pos[b - 1] - 1]))
                    return false;
        return true;
    };

    std::function<bool(int)> rec = [&](int slot) -> bool {
        if (slot > p.slot_count) {
            std::vector<int> witness(p.slot_count);
            for (int i = 0; i < p.slot_count; ++i)
                witness[i] = vertex_at[pos[i] - 1];
            return visit(witness);
        }
        int lo = 1;
        if (slot > 1)
            lo = p.equality_allowed(slot - 1) ? pos[slot - 2] : pos[slot - 2] + 1;
        for (int q = lo; q <= n; ++q) {
            if (fixed_last_position > 0) {
                if (q > fixed_last_position)
                    break;
                if (slot == p.slot_count && q != fixed_last_position)
                    continue;
            }
            pos[slot - 1] = q;
            if (!constraints_ok(slot))
                continue;
            if (rec(slot + 1))
                return true;
        }
        return false;
    };
    return rec(1);
}

} // namespace

std::vector<std::vector<int>> match_pattern(const Digraph& d, const Ordering& ord,
                                            const Pattern& p) {
    validate(p);
    if (ord.n() != d.n())
        throw std::invalid_argument("ordering size does not match digraph");
    std::vector<std::vector<int>> witnesses;
    enumerate_matches(d, ord.sequence(), p, 0, [&](const std::vector<int>& w) {
        witnesses.push_back(w);
        return false;
    });
    return witnesses;
}

bool pattern_occurs(const Digraph& d, const Ordering& ord, const Pattern& p,
                    std::vector<int>* first_witness) {
    return enumerate_matches(d, ord.sequence(), p, 0,
                             [&](const std::vector<int>& w) {
                                 if (first_witness)
                                     *first_witness = w;
                                 return true;
                             });
}

OrderingReport check_pattern_free(const Digraph& d, const Ordering& ord,
                                  const PatternCatalog& cat) {
    OrderingReport report;
    for (const Pattern& p : cat.patterns) {
        std::vector<int> witness;
        if (pattern_occurs(d, ord, p, &witness))
            report.violations.push_back({p.name, witness});
    }
    report.ok = report.violations.empty();
    return report;
}

bool catalog_prefix_free(const Digraph& d, const std::vector<int>& prefix,
                         const PatternCatalog& cat) {
    int k = static_cast<int>(prefix.size());
    for (const Pattern& p : cat.patterns)
        if (enumerate_matches(d, prefix, p, k,
                              [](const std::vector<int>&) { return true; }))
            return false;
    return true;
}

namespace {

Pattern make(std::string name, int slots,
             std::vector<std::pair<int, int>> eq,
             std::vector<std::pair<int, int>> req,
             std::vector<std::pair<int, int>> forb) {
    Pattern p{std::move(name), slots, std::move(eq), std::move(req), std::move(forb)};
    validate(p);
    return p;
}

Pattern dashed_loop(std::string name) {
    return make(std::move(name), 1, {}, {}, {{1, 1}});
}

// Patterns (a)-(f) shared by the reflexive-interval and nest catalogs.
// Slots are u=1, v=2, w=3, z=4; v = w may coincide in (a), (b), (d), (e).
std::vector<Pattern> reflexive_interval_core(const std::string& prefix) {
    return {
        make(prefix + "-a", 4, {{2, 3}}, {{1, 4}}, {{1, 2}, {3, 4}}),
        make(prefix + "-b", 4, {{2, 3}}, {{1, 4}, {2, 3}}, {{1, 3}, {2, 4}}),
        make(prefix + "-c", 4, {}, {{2, 4}, {1, 3}}, {{1, 4}, {2, 3}}),
        make(prefix + "-d", 4, {{2, 3}}, {{4, 1}}, {{2, 1}, {4, 3}}),
        make(prefix + "-e", 4, {{2, 3}}, {{4, 1}, {3, 2}}, {{3, 1}, {4, 2}}),
        make(prefix + "-f", 4, {}, {{4, 2}, {3, 1}}, {{4, 1}, {3, 2}}),
    };
}

} // namespace

PatternCatalog nest_patterns() {
    PatternCatalog cat{"nest", reflexive_interval_core("nest")};
    cat.patterns.push_back(
        make("nest-g", 4, {{2, 3}}, {{1, 4}}, {{1, 2}, {4, 3}}));
    cat.patterns.push_back(
        make("nest-h", 4, {{2, 3}}, {{4, 1}}, {{1, 2}, {4, 3}}));
    cat.patterns.push_back(dashed_loop("nest-j"));
    return cat;
}

PatternCatalog reflexive_interval_patterns() {
    PatternCatalog cat{"reflexive_interval", reflexive_interval_core("refl-int")};
    cat.patterns.push_back(dashed_loop("refl-int-loop"));
    return cat;
}

PatternCatalog adjusted_patterns() {
    return {"adjusted",
            {make("adjusted-1", 3, {}, {{1, 3}}, {{1, 2}}),
             make("adjusted-2", 3, {}, {{3, 1}}, {{2, 1}}),
             dashed_loop("adjusted-loop")}};
}

PatternCatalog catch_patterns() {
    return {"catch",
            {make("catch-1", 3, {}, {{1, 3}}, {{1, 2}}),
             make("catch-2", 3, {}, {{3, 1}}, {{3, 2}}),
             dashed_loop("catch-loop")}};
}

PatternCatalog point_patterns() {
    // No loop pattern: interval point digraphs need not be reflexive.
    return {"point",
            {make("point-p", 4, {{1, 2}}, {{1, 4}, {1, 2}}, {{1, 3}}),
             make("point-q", 4, {{2, 3}}, {{2, 4}, {2, 1}}, {{2, 3}}),
             make("point-r", 4, {{2, 3}}, {{3, 1}, {3, 4}}, {{3, 2}}),
             make("point-s", 4, {{3, 4}}, {{4, 1}, {4, 3}}, {{4, 2}})}};
}

PatternCatalog balanced_patterns() {
    return {"balanced",
            {make("balanced-1", 3, {}, {{1, 3}}, {{1, 2}}),
             make("balanced-2", 3, {}, {{3, 1}}, {{3, 2}}),
             make("balanced-3", 4, {}, {{2, 4}, {3, 1}}, {{3, 4}, {2, 1}}),
             dashed_loop("balanced-loop")}};
}

PatternCatalog chronological_patterns() {
    return {"chronological",
            {dashed_loop("chron-loop"),
             make("chron-1", 2, {}, {{2, 1}}, {{1, 2}}),
             make("chron-2", 3, {}, {{1, 3}}, {{1, 2}}),
             make("chron-3", 3, {}, {{3, 1}}, {{2, 1}}),
             make("chron-4", 3, {}, {{3, 1}}, {{3, 2}}),
             make("chron-5", 3, {}, {{3, 1}}, {{2, 3}}),
             make("chron-6", 3, {}, {{1, 3}, {2, 1}}, {{2, 3}}),
             make("chron-7", 3, {}, {{1, 3}, {2, 1}, {3, 2}}, {{3, 1}}),
             make("chron-8", 3, {}, {{1, 2}, {2, 3}, {3, 2}}, {{1, 3}})}};
}

const std::vector<std::string>& catalog_class_names() {
    static const std::vector<std::string> names = {
        "adjusted",      "catch", "point",           "balanced",
        "chronological", "reflexive_interval", "nest"};
    return names;
}

PatternCatalog catalog_by_class(const std::string& class_name) {
    if (class_name == "adjusted")
        return adjusted_patterns();
    if (class_name == "catch")
        return catch_patterns();
    if (class_name == "point")
        return point_patterns();
    if (class_name == "balanced")
        return balanced_patterns();
    if (class_name == "chronological")
        return chronological_patterns();
    if (class_name == "reflexive_interval")
        return reflexive_interval_patterns();
    if (class_name == "nest")
        return nest_patterns();
    throw std::invalid_argument("unknown digraph class: " + class_name);
}

nlohmann::json catalog_to_json(const PatternCatalog& cat) {
    nlohmann::json patterns = nlohmann::json::array();
    for (const Pattern& p : cat.patterns) {
        nlohmann::json jp;
        jp["name"] = p.name;
        jp["slot_count"] = p.slot_count;
        jp["equalities"] = p.equalities_allowed;
        jp["required"] = p.required_arcs;
        jp["forbidden"] = p.forbidden_arcs;
        patterns.push_back(std::move(jp));
    }
    return nlohmann::json{{"class", cat.class_name}, {"patterns", patterns}};
}

} // namespace nestdig
