#include "nestdig/ordering.hpp"

#include <algorithm>

namespace nestdig {

Ordering::Ordering(std::vector<int> vertex_sequence)
    : vertex_at_(std::move(vertex_sequence)) {
    int n = static_cast<int>(vertex_at_.size());
    pos_of_.assign(n, 0);
    for (int pos = 1; pos <= n; ++pos) {
        int v = vertex_at_[pos - 1];
        if (v < 1 || v > n || pos_of_[v - 1] != 0)
            throw std::invalid_argument("ordering is not a permutation of 1..n");
        pos_of_[v - 1] = pos;
    }
}

Ordering Ordering::identity(int n) {
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i)
        seq[i] = i + 1;
    return Ordering(std::move(seq));
}

Ordering Ordering::reversed() const {
    std::vector<int> seq(vertex_at_.rbegin(), vertex_at_.rend());
    return Ordering(std::move(seq));
}

namespace {

// The six nest-ordering rules for vertices a <= b <= c <= d in the ordering
// Each returns true when the rule holds.
struct RuleSet {
    const Digraph& g;
    bool E(int x, int y) const { return g.has_arc(x, y); }
    bool S(int x, int y) const { return g.has_symmetric_arc(x, y); }

    bool i_first(int a, int b, int c, int d) const {
        if (!(E(a, c) && E(a, d)))
            return true;
        return E(a, b) || (S(b, c) && S(b, d) && S(c, d));
    }
    bool i_second(int a, int b, int c, int d) const {
        if (!(E(d, a) && E(d, b)))
            return true;
        return E(d, c) || (S(c, a) && S(b, a) && S(c, b));
    }
    bool ii_first(int a, int b, int c, int d) const {
        if (!(E(a, d) && E(b, c)))
            return true;
        return E(a, c) || E(b, d);
    }
    bool ii_second(int a, int b, int c, int d) const {
        if (!(E(d, a) && E(c, b)))
            return true;
        return E(d, b) || E(c, a);
    }
    bool iii_first(int a, int b, int c, int d) const {
        if (!(E(a, c) && E(b, d)))
            return true;
        return E(b, c) || E(a, d);
    }
    bool iii_second(int a, int b, int c, int d) const {
        if (!(E(d, b) && E(c, a)))
            return true;
        return E(d, a) || E(c, b);
    }
};

const char* const kRuleNames[6] = {"i-first",  "i-second",  "ii-first",
                                   "ii-second", "iii-first", "iii-second"};

bool rule_holds(const RuleSet& r, int rule, int a, int b, int c, int d) {
    switch (rule) {
    case 0: return r.i_first(a, b, c, d);
    case 1: return r.i_second(a, b, c, d);
    case 2: return r.ii_first(a, b, c, d);
    case 3: return r.ii_second(a, b, c, d);
    case 4: return r.iii_first(a, b, c, d);
    default: return r.iii_second(a, b, c, d);
    }
}

} // namespace

OrderingReport check_nest_ordering(const Digraph& d, const Ordering& ord) {
    if (!d.is_reflexive())
        throw NotReflexiveError(
            "nest orderings are defined only for reflexive digraphs");
    if (ord.n() != d.n())
        throw std::invalid_argument("ordering size does not match digraph");
    RuleSet rules{d};
    OrderingReport report;
    int n = d.n();
    for (int pu = 1; pu <= n; ++pu)
        for (int pv = pu; pv <= n; ++pv)
            for (int pw = pv; pw <= n; ++pw)
                for (int pz = pw; pz <= n; ++pz) {
                    int a = ord.vertex_at(pu), b = ord.vertex_at(pv);
                    int c = ord.vertex_at(pw), e = ord.vertex_at(pz);
                    for (int rule = 0; rule < 6; ++rule)
                        if (!rule_holds(rules, rule, a, b, c, e))
                            report.violations.push_back(
                                {kRuleNames[rule], {a, b, c, e}});
                }
    report.ok = report.violations.empty();
    return report;
}

bool is_nest_ordering(const Digraph& d, const Ordering& ord) {
    if (!d.is_reflexive())
        return false;
    RuleSet rules{d};
    int n = d.n();
    for (int pu = 1; pu <= n; ++pu)
        for (int pv = pu; pv <= n; ++pv)
            for (int pw = pv; pw <= n; ++pw)
                for (int pz = pw; pz <= n; ++pz) {
                    int a = ord.vertex_at(pu), b = ord.vertex_at(pv);
                    int c = ord.vertex_at(pw), e = ord.vertex_at(pz);
                    for (int rule = 0; rule < 6; ++rule)
                        if (!rule_holds(rules, rule, a, b, c, e))
                            return false;
                }
    return true;
}

bool nest_prefix_ok(const Digraph& d, const std::vector<int>& prefix) {
    // Only quadruples whose maximum position is the newly placed one need
    // checking; everything else was validated when shorter.
    RuleSet rules{d};
    int k = static_cast<int>(prefix.size());
    int e = prefix[k - 1];
    for (int pu = 1; pu <= k; ++pu)
        for (int pv = pu; pv <= k; ++pv)
            for (int pw = pv; pw <= k; ++pw) {
                int a = prefix[pu - 1], b = prefix[pv - 1], c = prefix[pw - 1];
                for (int rule = 0; rule < 6; ++rule)
                    if (!rule_holds(rules, rule, a, b, c, e))
                        return false;
            }
    return true;
}

} // namespace nestdig
