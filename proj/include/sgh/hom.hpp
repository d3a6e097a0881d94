#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgh/errors.hpp"
#include "sgh/group.hpp"

namespace sgh {

/// A group homomorphism given elementwise.  map[a] is the image of a.
struct GroupHom {
    FiniteGroup dom;
    FiniteGroup cod;
    std::vector<int> map;

    int operator()(int a) const { return map[a]; }
};

inline bool isHomomorphism(const GroupHom& f) {
    if (static_cast<int>(f.map.size()) != f.dom.order) return false;
    for (int v : f.map)
        if (v < 0 || v >= f.cod.order) return false;
    if (f.map[0] != 0) return false;
    for (int a = 0; a < f.dom.order; ++a)
        for (int b = 0; b < f.dom.order; ++b)
            if (f.map[f.dom.mul(a, b)] != f.cod.mul(f.map[a], f.map[b])) return false;
    return true;
}

inline GroupHom makeHom(FiniteGroup dom, FiniteGroup cod, std::vector<int> map) {
    GroupHom f{std::move(dom), std::move(cod), std::move(map)};
    if (static_cast<int>(f.map.size()) != f.dom.order)
        throw ValidationError("hom map length " + std::to_string(f.map.size()) +
                              " does not match domain order " + std::to_string(f.dom.order));
    for (int v : f.map)
        if (v < 0 || v >= f.cod.order) throw ValidationError("hom map value out of range");
    if (f.map[0] != 0) throw ValidationError("hom does not preserve the identity");
    for (int a = 0; a < f.dom.order; ++a)
        for (int b = 0; b < f.dom.order; ++b)
            if (f.map[f.dom.mul(a, b)] != f.cod.mul(f.map[a], f.map[b]))
                throw ValidationError("map is not multiplicative at (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
    return f;
}

inline GroupHom identityHom(const FiniteGroup& g) {
    std::vector<int> m(g.order);
    for (int a = 0; a < g.order; ++a) m[a] = a;
    return GroupHom{g, g, std::move(m)};
}

inline GroupHom zeroHom(const FiniteGroup& dom, const FiniteGroup& cod) {
    return GroupHom{dom, cod, std::vector<int>(dom.order, 0)};
}

/// g after f.  Requires f.cod == g.dom as groups.
inline GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (f.cod.order != g.dom.order || f.cod.table != g.dom.table)
        throw CodomainMismatch("compose: codomain of inner map differs from domain of outer");
    std::vector<int> m(f.dom.order);
    for (int a = 0; a < f.dom.order; ++a) m[a] = g.map[f.map[a]];
    return GroupHom{f.dom, g.cod, std::move(m)};
}

inline bool isInjective(const GroupHom& f) {
    std::vector<char> seen(f.cod.order, 0);
    for (int v : f.map) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline bool isSurjective(const GroupHom& f) {
    std::vector<char> seen(f.cod.order, 0);
    for (int v : f.map) seen[v] = 1;
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

/// Regular epimorphisms of the backend are exactly the surjections.
inline bool isRegularEpi(const GroupHom& f) { return isSurjective(f); }

inline bool isBijectiveHom(const GroupHom& f) {
    return f.dom.order == f.cod.order && isInjective(f);
}

/**
 * A subobject: a group together with an injection into an ambient group.
 * The carrier relabels the ambient elements of elementSet in increasing
 * order, so the representation of a given subgroup is canonical.
 */
struct Embedding {
    FiniteGroup carrier;
    GroupHom into;
    std::vector<int> elementSet;  // sorted ambient indices, elementSet[i] = into(i)

    int ambientToCarrier(int ambient) const {
        auto it = std::lower_bound(elementSet.begin(), elementSet.end(), ambient);
        if (it == elementSet.end() || *it != ambient) return -1;
        return static_cast<int>(it - elementSet.begin());
    }
};

/// Builds the canonical Embedding of a subgroup given by its element set.
/// The set must contain 0 and be closed under multiplication.
inline Embedding subgroupEmbedding(const FiniteGroup& ambient, std::vector<int> set,
                                   std::string label = "") {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty() || set[0] != 0)
        throw ValidationError("subgroup element set must contain the identity 0");
    const int k = static_cast<int>(set.size());
    auto carrierIndex = [&](int ambientIdx) {
        auto it = std::lower_bound(set.begin(), set.end(), ambientIdx);
        if (it == set.end() || *it != ambientIdx) return -1;
        return static_cast<int>(it - set.begin());
    };
    FiniteGroup carrier;
    carrier.order = k;
    carrier.label = std::move(label);
    carrier.table.resize(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int idx = carrierIndex(ambient.mul(set[i], set[j]));
            if (idx < 0)
                throw ValidationError("element set is not closed under multiplication");
            carrier.table[static_cast<size_t>(i) * k + j] = idx;
        }
    GroupHom into{carrier, ambient, set};
    return Embedding{std::move(carrier), std::move(into), std::move(set)};
}

/// Closure of a generating set inside ambient; returns the subgroup's sorted
/// element set.
inline std::vector<int> closureSet(const FiniteGroup& ambient, std::vector<int> gens) {
    std::vector<char> in(ambient.order, 0);
    in[0] = 1;
    std::vector<int> work{0};
    for (int gIdx : gens)
        if (!in[gIdx]) {
            in[gIdx] = 1;
            work.push_back(gIdx);
        }
    // product closure to a fixed point
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < work.size(); ++j) {
            int p = ambient.mul(work[i], work[j]);
            if (!in[p]) {
                in[p] = 1;
                work.push_back(p);
            }
        }
    std::sort(work.begin(), work.end());
    return work;
}

inline Embedding subgroupGeneratedBy(const FiniteGroup& ambient, const std::vector<int>& gens) {
    return subgroupEmbedding(ambient, closureSet(ambient, gens));
}

inline bool isNormalSet(const FiniteGroup& ambient, const std::vector<int>& set) {
    std::vector<char> in(ambient.order, 0);
    for (int s : set) in[s] = 1;
    for (int g = 0; g < ambient.order; ++g)
        for (int s : set)
            if (!in[ambient.conj(g, s)]) return false;
    return true;
}

/// Smallest normal subgroup of the ambient group containing the given set,
/// computed by closing under conjugation and multiplication to a fixed point.
inline std::vector<int> normalClosureSet(const FiniteGroup& ambient, std::vector<int> seed) {
    std::vector<int> set = closureSet(ambient, std::move(seed));
    for (;;) {
        std::vector<int> conjugates;
        std::vector<char> in(ambient.order, 0);
        for (int s : set) in[s] = 1;
        for (int g = 0; g < ambient.order; ++g)
            for (int s : set) {
                int c = ambient.conj(g, s);
                if (!in[c]) {
                    in[c] = 1;
                    conjugates.push_back(c);
                }
            }
        if (conjugates.empty()) return set;
        conjugates.insert(conjugates.end(), set.begin(), set.end());
        set = closureSet(ambient, std::move(conjugates));
    }
}

inline Embedding normalClosure(const Embedding& e) {
    return subgroupEmbedding(e.into.cod, normalClosureSet(e.into.cod, e.elementSet));
}

inline Embedding kernel(const GroupHom& f) {
    std::vector<int> set;
    for (int a = 0; a < f.dom.order; ++a)
        if (f.map[a] == 0) set.push_back(a);
    return subgroupEmbedding(f.dom, std::move(set));
}

inline Embedding image(const GroupHom& f) {
    std::vector<int> set(f.map.begin(), f.map.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return subgroupEmbedding(f.cod, std::move(set));
}

/**
 * A regular quotient: the ambient group, the projection onto the quotient
 * group, and for each quotient element its minimal ambient representative.
 * Quotient elements are ordered by that representative, which makes the
 * presentation canonical (the identity coset comes first).
 */
struct QuotientPresentation {
    FiniteGroup total;
    GroupHom projection;  // total -> quotient
    std::vector<int> cosetReps;

    const FiniteGroup& quotient() const { return projection.cod; }
};

/// Quotient of g by a normal subgroup given as a sorted element set.
inline QuotientPresentation quotientByNormalSet(const FiniteGroup& g,
                                                const std::vector<int>& normalSet,
                                                std::string label = "") {
    if (!isNormalSet(g, normalSet))
        throw ValidationError("quotient requested by a non-normal subgroup");
    std::vector<char> inN(g.order, 0);
    for (int s : normalSet) inN[s] = 1;
    std::vector<int> cosetOf(g.order, -1);
    std::vector<int> reps;
    for (int a = 0; a < g.order; ++a) {
        if (cosetOf[a] != -1) continue;
        int q = static_cast<int>(reps.size());
        reps.push_back(a);  // a is minimal in its coset by scan order
        for (int s : normalSet) cosetOf[g.mul(a, s)] = q;
    }
    const int m = static_cast<int>(reps.size());
    FiniteGroup quot;
    quot.order = m;
    quot.label = std::move(label);
    quot.table.resize(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            quot.table[static_cast<size_t>(i) * m + j] = cosetOf[g.mul(reps[i], reps[j])];
    GroupHom proj{g, quot, cosetOf};
    return QuotientPresentation{g, std::move(proj), std::move(reps)};
}

/// Cokernel in the category of groups: cod / normalClosure(image f).
inline QuotientPresentation cokernel(const GroupHom& f) {
    std::vector<int> img(f.map.begin(), f.map.end());
    return quotientByNormalSet(f.cod, normalClosureSet(f.cod, std::move(img)));
}

/// Restricts f to a subgroup of its domain.
inline GroupHom restrictHom(const GroupHom& f, const Embedding& sub) {
    std::vector<int> m(sub.carrier.order);
    for (int i = 0; i < sub.carrier.order; ++i) m[i] = f.map[sub.elementSet[i]];
    return GroupHom{sub.carrier, f.cod, std::move(m)};
}

/// Factors f through a subgroup of its codomain containing the image.
inline GroupHom corestrictHom(const GroupHom& f, const Embedding& sub) {
    std::vector<int> m(f.dom.order);
    for (int a = 0; a < f.dom.order; ++a) {
        int idx = sub.ambientToCarrier(f.map[a]);
        if (idx < 0)
            throw ValidationError("corestrictHom: image not contained in the subobject");
        m[a] = idx;
    }
    return GroupHom{f.dom, sub.carrier, std::move(m)};
}

/// The Embedding of sub composed into a larger ambient group: if sub embeds
/// in mid.carrier and mid embeds in an ambient group, view sub there.
inline Embedding composeEmbedding(const Embedding& mid, const Embedding& sub) {
    std::vector<int> set(sub.elementSet.size());
    for (size_t i = 0; i < sub.elementSet.size(); ++i) set[i] = mid.elementSet[sub.elementSet[i]];
    return subgroupEmbedding(mid.into.cod, std::move(set));
}

/// The epi part of the image factorization: dom ->> I[f] with
/// image(f).into composed after it reproducing f.
inline GroupHom imageFactorization(const GroupHom& f, const Embedding& img) {
    return corestrictHom(f, img);
}

}  // namespace sgh
