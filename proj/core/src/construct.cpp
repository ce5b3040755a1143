#include "nestdig/construct.hpp"

namespace nestdig {

StopData compute_stops(const Digraph& d, const Ordering& ord) {
    if (!d.is_reflexive())
        throw NotReflexiveError(
            "stop functions are defined only for reflexive digraphs");
    if (ord.n() != d.n())
        throw std::invalid_argument("ordering size does not match digraph");
    int n = d.n();
    StopData s;
    s.sigma_r.resize(n);
    s.sigma_l.resize(n);
    s.tail_r.resize(n);
    s.tail_l.resize(n);

    auto out = [&](int px, int pz) {
        // Out-neighborhood in position space; the auxiliary positions 0 and
        // n+1 are isolated.
        if (pz < 1 || pz > n)
            return false;
        return d.has_arc(ord.vertex_at(px), ord.vertex_at(pz));
    };

    for (int x = 1; x <= n; ++x) {
        int sr = x + 1;
        while (sr <= n && out(x, sr))
            ++sr;
        int sl = x - 1;
        while (sl >= 1 && out(x, sl))
            --sl;
        s.sigma_r[x - 1] = sr;
        s.sigma_l[x - 1] = sl;
        for (int z = sr + 1; z <= n; ++z)
            if (out(x, z))
                s.tail_r[x - 1].push_back(z);
        for (int z = 1; z < sl; ++z)
            if (out(x, z))
                s.tail_l[x - 1].push_back(z);
    }
    return s;
}

IntervalModel build_model_unchecked(const Digraph& d, const Ordering& ord) {
    StopData s = compute_stops(d, ord);
    int n = d.n();

    // Origin endpoints first; destination endpoints fold over them.
    std::vector<Rational> a(n), b(n);
    for (int x = 1; x <= n; ++x) {
        long long tl = static_cast<long long>(s.tail_left(x).size());
        long long tr = static_cast<long long>(s.tail_right(x).size());
        a[x - 1] = Rational(s.sigma_left(x)) + Rational(1, 2 + tl);
        b[x - 1] = Rational(s.sigma_right(x)) - Rational(1, 2 + tr);
    }

    auto out = [&](int pz, int px) {
        return d.has_arc(ord.vertex_at(pz), ord.vertex_at(px));
    };

    std::vector<Rational> alpha(n), beta(n);
    for (int x = 1; x <= n; ++x) {
        // Empty folds fall back to the vertex's own position.
        Rational al(x);
        for (int z = 1; z < x; ++z)
            if (out(z, x))
                al = min(al, b[z - 1]);
        Rational be(x);
        for (int z = x + 1; z <= n; ++z)
            if (out(z, x))
                be = max(be, a[z - 1]);
        alpha[x - 1] = al;
        beta[x - 1] = be;
    }

    // Positional intervals are reindexed to vertex labels.
    IntervalModel m;
    m.origin.resize(n);
    m.destination.resize(n);
    for (int x = 1; x <= n; ++x) {
        int v = ord.vertex_at(x);
        m.origin[v - 1] = RationalInterval(a[x - 1], b[x - 1]);
        m.destination[v - 1] = RationalInterval(alpha[x - 1], beta[x - 1]);
    }
    return m;
}

IntervalModel build_model(const Digraph& d, const Ordering& ord) {
    OrderingReport report = check_nest_ordering(d, ord);
    if (!report.ok)
        throw NotNestOrderingError(std::move(report));
    IntervalModel m = build_model_unchecked(d, ord);
    // Guaranteed under the nest hypothesis; a failure here is an
    // implementation bug, not bad input.
    if (!is_nest(m))
        throw std::logic_error("internal error: constructed model is not nest");
    if (!realizes(m, d).ok)
        throw std::logic_error(
            "internal error: constructed model does not realize the digraph");
    return m;
}

} // namespace nestdig
