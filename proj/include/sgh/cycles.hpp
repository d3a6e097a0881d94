#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgh/errors.hpp"
#include "sgh/group.hpp"
#include "sgh/hom.hpp"
#include "sgh/iso.hpp"
#include "sgh/limits.hpp"
#include "sgh/simplicial.hpp"

namespace sgh {

/**
 * A subgroup of a power A^k cut out by face constraints, kept in tuple form.
 * The ambient power is deliberately not materialized: its Cayley table is
 * quadratic in |A|^k, far past the order cap at the depths we certify.
 * toEmbedding() produces the literal subobject when the power fits the cap.
 */
struct TupleSubgroup {
    FiniteGroup carrier;  // canonical: tuples in lexicographic order
    std::vector<std::vector<int>> tuples;
    FiniteGroup component;
    std::vector<GroupHom> projections;  // carrier -> component, one per slot
    int arity = 0;

    int indexOfTuple(const std::vector<int>& t) const {
        auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
        if (it == tuples.end() || *it != t) return -1;
        return static_cast<int>(it - tuples.begin());
    }

    Embedding toEmbedding(const Limits& limits = defaultLimits()) const {
        std::vector<FiniteGroup> comps(static_cast<size_t>(arity), component);
        ProductGroup power = product(comps, limits);
        std::vector<int> set;
        set.reserve(tuples.size());
        for (const auto& t : tuples) set.push_back(power.indexOf(t));
        return subgroupEmbedding(power.group, std::move(set));
    }
};

namespace detail {

/// Builds the carrier and projections from an already-enumerated sorted
/// tuple list.
inline TupleSubgroup tupleSubgroupFrom(std::vector<std::vector<int>> tuples,
                                       const FiniteGroup& component, int arity,
                                       std::string label) {
    TupleSubgroup s;
    s.tuples = std::move(tuples);
    s.component = component;
    s.arity = arity;
    const int n = static_cast<int>(s.tuples.size());
    s.carrier.order = n;
    s.carrier.label = std::move(label);
    s.carrier.table.resize(static_cast<size_t>(n) * n);
    std::vector<int> prod(arity);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int c = 0; c < arity; ++c)
                prod[c] = component.mul(s.tuples[i][c], s.tuples[j][c]);
            int idx = s.indexOfTuple(prod);
            if (idx < 0)
                throw ValidationError("tuple set is not closed under multiplication");
            s.carrier.table[static_cast<size_t>(i) * n + j] = idx;
        }
    for (int c = 0; c < arity; ++c) {
        std::vector<int> m(n);
        for (int i = 0; i < n; ++i) m[i] = s.tuples[i][c];
        s.projections.push_back(GroupHom{s.carrier, component, std::move(m)});
    }
    return s;
}

}  // namespace detail

/**
 * The object of n-cycles: tuples (x_0,..,x_{n+1}) in A_n^{n+2} with
 * d_i x_j = d_{j-1} x_i for i < j.  Enumerated by incremental backtracking,
 * checking each constraint as soon as both coordinates are fixed; the
 * node budget guards the blowup of the unpruned power.
 */
inline TupleSubgroup nabla(const TruncatedSimplicialGroup& a, int n,
                           const Limits& limits = defaultLimits()) {
    if (n < 0 || n > a.depth)
        throw IndexOutOfRange("nabla: degree " + std::to_string(n) + " outside [0," +
                              std::to_string(a.depth) + "]");
    const FiniteGroup& comp = a.levels[n];
    const int arity = n + 2;
    std::vector<std::vector<int>> tuples;
    if (n == 0) {
        for (int x = 0; x < comp.order; ++x)
            for (int y = 0; y < comp.order; ++y) tuples.push_back({x, y});
    } else {
        std::vector<const GroupHom*> face(n + 1);
        for (int i = 0; i <= n; ++i) face[i] = &a.face(n, i);
        std::vector<int> t(arity, 0);
        long long nodes = 0;
        // recursive descent over coordinates, constraints checked eagerly
        auto descend = [&](auto&& self, int j) -> void {
            if (j == arity) {
                tuples.push_back(t);
                return;
            }
            for (int x = 0; x < comp.order; ++x) {
                if (++nodes > limits.nodeBudget)
                    throw EnumerationCap(limits.nodeBudget,
                                         "nabla enumeration exceeded the node budget");
                bool ok = true;
                for (int i = 0; i < j && ok; ++i)
                    ok = (face[i]->map[x] == face[j - 1]->map[t[i]]);
                if (!ok) continue;
                t[j] = x;
                self(self, j + 1);
            }
        };
        descend(descend, 0);
        std::sort(tuples.begin(), tuples.end());
    }
    return detail::tupleSubgroupFrom(std::move(tuples), comp, arity,
                                     "nabla_" + std::to_string(n) + "(" + a.label + ")");
}

/// (d_0,..,d_{n+1}) : A_{n+1} -> nabla_n A.  Lands in the cycle object by the
/// simplicial identities.
inline GroupHom boundaryIntoNabla(const TruncatedSimplicialGroup& a, int n,
                                  const TupleSubgroup& nab) {
    if (n < 0 || n > a.depth - 1)
        throw IndexOutOfRange("boundaryIntoNabla: degree " + std::to_string(n) +
                              " needs level " + std::to_string(n + 1));
    const FiniteGroup& src = a.levels[n + 1];
    std::vector<int> m(src.order);
    std::vector<int> t(static_cast<size_t>(n) + 2);
    for (int x = 0; x < src.order; ++x) {
        for (int i = 0; i <= n + 1; ++i) t[i] = a.face(n + 1, i).map[x];
        int idx = nab.indexOfTuple(t);
        if (idx < 0)
            throw ValidationError("boundary tuple escapes the cycle object; identities broken");
        m[x] = idx;
    }
    return GroupHom{src, nab.carrier, std::move(m)};
}

inline GroupHom boundaryIntoNabla(const TruncatedSimplicialGroup& a, int n,
                                  const Limits& limits = defaultLimits()) {
    return boundaryIntoNabla(a, n, nabla(a, n, limits));
}

/// The map nabla_n(f) induced componentwise by a level map f.
inline GroupHom nablaInducedMap(const TupleSubgroup& from, const TupleSubgroup& to,
                                const GroupHom& levelMap) {
    std::vector<int> m(from.carrier.order);
    std::vector<int> t(from.arity);
    for (int i = 0; i < from.carrier.order; ++i) {
        for (int c = 0; c < from.arity; ++c) t[c] = levelMap.map[from.tuples[i][c]];
        int idx = to.indexOfTuple(t);
        if (idx < 0) throw ValidationError("induced cycle tuple missing in the codomain");
        m[i] = idx;
    }
    return GroupHom{from.carrier, to.carrier, std::move(m)};
}

/// Z_n A: joint kernel of all faces at level n (all of A_0 when n = 0,
/// where no faces exist).
inline Embedding zObject(const TruncatedSimplicialGroup& a, int n) {
    if (n < 0 || n > a.depth)
        throw IndexOutOfRange("zObject: degree outside the truncation");
    std::vector<int> set;
    for (int x = 0; x < a.levels[n].order; ++x) {
        bool allZero = true;
        if (n >= 1)
            for (int i = 0; i <= n && allZero; ++i) allZero = (a.face(n, i).map[x] == 0);
        if (allZero) set.push_back(x);
    }
    return subgroupEmbedding(a.levels[n], std::move(set));
}

/// S_m A: joint kernel of d_0..d_{m-2} at level m (all of A_1 when m = 1).
inline Embedding sObject(const TruncatedSimplicialGroup& a, int m) {
    if (m < 1 || m > a.depth)
        throw IndexOutOfRange("sObject: level outside the truncation");
    std::vector<int> set;
    for (int x = 0; x < a.levels[m].order; ++x) {
        bool allZero = true;
        for (int i = 0; i <= m - 2 && allZero; ++i) allZero = (a.face(m, i).map[x] == 0);
        if (allZero) set.push_back(x);
    }
    return subgroupEmbedding(a.levels[m], std::move(set));
}

/**
 * Homology by the coequalizer route: restrict d_n, d_{n+1} to the inverse
 * image of Z_n A inside S_{n+1} A and take their coequalizer.  Never touches
 * the Moore complex, so it is an independent computation of H_n A.
 */
struct CoeqHomology {
    Embedding z;          // Z_n A inside A_n
    Embedding s;          // S_{n+1} A inside A_{n+1}
    Pullback preimage;    // d_n^{-1} Z_n A, as a pullback of d_n|S against Z_n
    GroupHom dLower;      // restricted d_n     : preimage -> Z_n
    GroupHom dUpper;      // restricted d_{n+1} : preimage -> Z_n
    GroupHom section;     // restricted s_n     : Z_n -> preimage
    bool sectionVerified = false;
    QuotientPresentation classes;  // of z.carrier

    const FiniteGroup& group() const { return classes.quotient(); }
};

inline CoeqHomology homologyCoequalizer(const TruncatedSimplicialGroup& a, int n,
                                        const Limits& limits = defaultLimits()) {
    (void)limits;
    if (n < 0 || n > a.depth - 1)
        throw IndexOutOfRange("homologyCoequalizer: degree " + std::to_string(n) +
                              " is not certifiable at depth " + std::to_string(a.depth));
    CoeqHomology h;
    h.z = zObject(a, n);
    h.s = sObject(a, n + 1);
    GroupHom dnOnS = restrictHom(a.face(n + 1, n), h.s);  // S_{n+1} -> A_n
    h.preimage = pullback(dnOnS, h.z.into);
    h.dLower = h.preimage.toSecond;  // the pullback pairs are (y, d_n y)
    {
        std::vector<int> m(h.preimage.carrier.order);
        for (int i = 0; i < h.preimage.carrier.order; ++i) {
            int yAmbient = h.s.elementSet[h.preimage.pairs[i].first];
            int v = a.face(n + 1, n + 1).map[yAmbient];
            int idx = h.z.ambientToCarrier(v);
            if (idx < 0)
                throw ValidationError("restricted d_{n+1} escapes Z_n; identities broken");
            m[i] = idx;
        }
        h.dUpper = GroupHom{h.preimage.carrier, h.z.carrier, std::move(m)};
    }
    {
        std::vector<int> m(h.z.carrier.order);
        bool ok = true;
        for (int i = 0; i < h.z.carrier.order; ++i) {
            int zAmbient = h.z.elementSet[i];
            int y = a.degeneracy(n, n).map[zAmbient];
            int yS = h.s.ambientToCarrier(y);
            int zIdx = (yS >= 0) ? h.preimage.indexOfPair(yS, i) : -1;
            if (zIdx < 0) {
                ok = false;
                break;
            }
            m[i] = zIdx;
        }
        if (!ok) throw ValidationError("restricted degeneracy is not a section into the preimage");
        h.section = GroupHom{h.z.carrier, h.preimage.carrier, std::move(m)};
        h.sectionVerified = true;
        for (int i = 0; i < h.z.carrier.order && h.sectionVerified; ++i)
            h.sectionVerified = (h.dLower.map[h.section.map[i]] == i) &&
                                (h.dUpper.map[h.section.map[i]] == i);
    }
    h.classes = coequalizerPair(h.dLower, h.dUpper);
    return h;
}

/**
 * The fork check of the coequalizer-versus-cokernel lemma.  Both sides test
 * a genuine universal property by factorization search over all candidate
 * targets that can matter: the fork's own codomain and the canonically
 * constructed comparison object.  The two comparison objects come from
 * different constructions, so the two booleans are computed independently.
 */
struct ReflexiveFork {
    GroupHom d0, d1;  // A -> B, parallel
    GroupHom section;  // B -> A, common section of d0, d1
    GroupHom e;        // B -> C, the candidate quotient
};

namespace detail {

inline bool factorsUniquelyThrough(const GroupHom& e, const GroupHom& h,
                                   const std::vector<GroupHom>& homsFromC) {
    int count = 0;
    for (const auto& m : homsFromC) {
        bool matches = true;
        for (int b = 0; b < e.dom.order && matches; ++b) matches = (m.map[e.map[b]] == h.map[b]);
        if (matches && ++count > 1) return false;
    }
    return count == 1;
}

/// Universal-property search: every h that coequalizes (tests() == true) must
/// factor through e exactly once, for each target in the universe.
template <typename Admits>
bool universalPropertyHolds(const GroupHom& e, const std::vector<FiniteGroup>& universe,
                            Admits&& admits, const Limits& limits) {
    for (const auto& target : universe) {
        std::vector<GroupHom> fromB = allHoms(e.dom, target, limits);
        std::vector<GroupHom> fromC = allHoms(e.cod, target, limits);
        for (const auto& h : fromB) {
            if (!admits(h)) continue;
            if (!factorsUniquelyThrough(e, h, fromC)) return false;
        }
    }
    return true;
}

}  // namespace detail

inline void validateFork(const ReflexiveFork& f) {
    if (f.d0.dom.table != f.d1.dom.table || f.d0.cod.table != f.d1.cod.table)
        throw ShapeMismatch("fork: d0 and d1 must be parallel");
    if (f.section.dom.table != f.d0.cod.table || f.section.cod.table != f.d0.dom.table)
        throw ShapeMismatch("fork: the section must run from the codomain to the domain");
    if (f.e.dom.table != f.d0.cod.table) throw ShapeMismatch("fork: e must start at the codomain");
    for (int b = 0; b < f.section.dom.order; ++b)
        if (f.d0.map[f.section.map[b]] != b || f.d1.map[f.section.map[b]] != b)
            throw ShapeMismatch("fork: the graph is not reflexive");
}

inline std::pair<bool, bool> forkCheck(const ReflexiveFork& f,
                                       const Limits& limits = defaultLimits()) {
    validateFork(f);
    if (f.e.cod.order > limits.forkCodomainCap)
        throw EnumerationCap(limits.forkCodomainCap,
                             "fork universal-property search is capped at codomain order " +
                                 std::to_string(limits.forkCodomainCap));
    bool coeq = true;
    for (int x = 0; x < f.d0.dom.order && coeq; ++x)
        coeq = (f.e.map[f.d0.map[x]] == f.e.map[f.d1.map[x]]);
    if (coeq) {
        QuotientPresentation q = coequalizerPair(f.d0, f.d1);
        coeq = detail::universalPropertyHolds(
            f.e, {f.e.cod, q.quotient()},
            [&](const GroupHom& h) {
                for (int x = 0; x < f.d0.dom.order; ++x)
                    if (h.map[f.d0.map[x]] != h.map[f.d1.map[x]]) return false;
                return true;
            },
            limits);
    }

    GroupHom w = compose(f.d1, kernel(f.d0).into);  // K[d0] -> B
    bool cok = true;
    for (int k = 0; k < w.dom.order && cok; ++k) cok = (f.e.map[w.map[k]] == 0);
    if (cok) {
        QuotientPresentation q = cokernel(w);
        cok = detail::universalPropertyHolds(
            f.e, {f.e.cod, q.quotient()},
            [&](const GroupHom& h) {
                for (int k = 0; k < w.dom.order; ++k)
                    if (h.map[w.map[k]] != 0) return false;
                return true;
            },
            limits);
    }
    return {coeq, cok};
}

}  // namespace sgh
