#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgh/errors.hpp"
#include "sgh/group.hpp"
#include "sgh/hom.hpp"

namespace sgh {

/// Caps and budgets for the enumerative operations.
struct Limits {
    long long nodeBudget = 10'000'000;  // partial tuples in backtracking searches
    int isoOrderCap = 64;               // isomorphism search
    int productCap = 5000;              // largest materialized Cayley table
    int forkCodomainCap = 12;           // fork universal-property search
};

inline const Limits& defaultLimits() {
    static Limits l;
    return l;
}

/**
 * Direct product with its projections.  Tuples are ordered lexicographically
 * (first coordinate most significant), so the identity tuple is element 0.
 */
struct ProductGroup {
    FiniteGroup group;
    std::vector<GroupHom> projections;
    std::vector<int> sizes;

    std::vector<int> tuple(int index) const {
        std::vector<int> t(sizes.size());
        for (int i = static_cast<int>(sizes.size()) - 1; i >= 0; --i) {
            t[i] = index % sizes[i];
            index /= sizes[i];
        }
        return t;
    }

    int indexOf(const std::vector<int>& t) const {
        int idx = 0;
        for (size_t i = 0; i < sizes.size(); ++i) idx = idx * sizes[i] + t[i];
        return idx;
    }
};

inline ProductGroup product(const std::vector<FiniteGroup>& gs,
                            const Limits& limits = defaultLimits()) {
    long long total = 1;
    std::vector<int> sizes;
    for (const auto& g : gs) {
        sizes.push_back(g.order);
        total *= g.order;
        if (total > limits.productCap)
            throw EnumerationCap(limits.productCap,
                                 "product order exceeds the materialization cap");
    }
    const int n = static_cast<int>(total);
    ProductGroup p;
    p.sizes = sizes;
    p.group.order = n;
    p.group.table.resize(static_cast<size_t>(n) * n);
    std::string lbl;
    for (const auto& g : gs) lbl += (lbl.empty() ? "" : "x") + (g.label.empty() ? "?" : g.label);
    p.group.label = lbl;
    const int k = static_cast<int>(gs.size());
    std::vector<int> ta(k), tb(k), tc(k);
    for (int a = 0; a < n; ++a) {
        ta = p.tuple(a);
        for (int b = 0; b < n; ++b) {
            tb = p.tuple(b);
            for (int i = 0; i < k; ++i) tc[i] = gs[i].mul(ta[i], tb[i]);
            p.group.table[static_cast<size_t>(a) * n + b] = p.indexOf(tc);
        }
    }
    for (int i = 0; i < k; ++i) {
        std::vector<int> m(n);
        for (int a = 0; a < n; ++a) m[a] = p.tuple(a)[i];
        p.projections.push_back(GroupHom{p.group, gs[i], std::move(m)});
    }
    return p;
}

/**
 * Pullback of f : A -> C along g : B -> C.  The carrier is built directly
 * from the set of matching pairs (so the ambient product A x B is never
 * materialized); pairs are ordered lexicographically.  toEmbedding()
 * produces the literal subobject of A x B when that product fits the cap.
 */
struct Pullback {
    FiniteGroup carrier;
    GroupHom toFirst;   // carrier -> A
    GroupHom toSecond;  // carrier -> B
    std::vector<std::pair<int, int>> pairs;
    FiniteGroup first, second;

    int indexOfPair(int a, int b) const {
        auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b));
        if (it == pairs.end() || *it != std::make_pair(a, b)) return -1;
        return static_cast<int>(it - pairs.begin());
    }

    Embedding toEmbedding(const Limits& limits = defaultLimits()) const {
        ProductGroup p = product({first, second}, limits);
        std::vector<int> set;
        set.reserve(pairs.size());
        for (auto& [a, b] : pairs) set.push_back(p.indexOf({a, b}));
        return subgroupEmbedding(p.group, std::move(set));
    }
};

inline Pullback pullback(const GroupHom& f, const GroupHom& g) {
    if (f.cod.order != g.cod.order || f.cod.table != g.cod.table)
        throw CodomainMismatch("pullback: the two maps must share a codomain");
    Pullback pb;
    pb.first = f.dom;
    pb.second = g.dom;
    for (int a = 0; a < f.dom.order; ++a)
        for (int b = 0; b < g.dom.order; ++b)
            if (f.map[a] == g.map[b]) pb.pairs.emplace_back(a, b);
    const int n = static_cast<int>(pb.pairs.size());
    pb.carrier.order = n;
    pb.carrier.table.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int a = f.dom.mul(pb.pairs[i].first, pb.pairs[j].first);
            int b = g.dom.mul(pb.pairs[i].second, pb.pairs[j].second);
            pb.carrier.table[static_cast<size_t>(i) * n + j] = pb.indexOfPair(a, b);
        }
    std::vector<int> m1(n), m2(n);
    for (int i = 0; i < n; ++i) {
        m1[i] = pb.pairs[i].first;
        m2[i] = pb.pairs[i].second;
    }
    pb.toFirst = GroupHom{pb.carrier, f.dom, std::move(m1)};
    pb.toSecond = GroupHom{pb.carrier, g.dom, std::move(m2)};
    return pb;
}

/// Kernel pair R[f] = A x_B A with its two projections.
inline Pullback kernelPair(const GroupHom& f) { return pullback(f, f); }

inline Embedding equalizer(const GroupHom& f, const GroupHom& g) {
    if (f.dom.table != g.dom.table || f.cod.table != g.cod.table)
        throw CodomainMismatch("equalizer: maps must be parallel");
    std::vector<int> set;
    for (int a = 0; a < f.dom.order; ++a)
        if (f.map[a] == g.map[a]) set.push_back(a);
    return subgroupEmbedding(f.dom, std::move(set));
}

/// Coequalizer of a parallel pair: cod / normalClosure{ f(a) g(a)^-1 }.
inline QuotientPresentation coequalizerPair(const GroupHom& f, const GroupHom& g) {
    if (f.dom.table != g.dom.table || f.cod.table != g.cod.table)
        throw CodomainMismatch("coequalizerPair: maps must be parallel");
    std::vector<int> diffs;
    for (int a = 0; a < f.dom.order; ++a)
        diffs.push_back(f.cod.mul(f.map[a], f.cod.inv(g.map[a])));
    return quotientByNormalSet(f.cod, normalClosureSet(f.cod, std::move(diffs)));
}

}  // namespace sgh
