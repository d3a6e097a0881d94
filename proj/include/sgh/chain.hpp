#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgh/errors.hpp"
#include "sgh/group.hpp"
#include "sgh/hom.hpp"
#include "sgh/iso.hpp"
#include "sgh/limits.hpp"

namespace sgh {

/**
 * A bounded chain complex C_0 .. C_N with d_n d_{n+1} = 0 and normal
 * differential images ("proper").  differentials[n-1] is d_n : C_n -> C_{n-1}.
 */
struct ProperChainComplex {
    std::vector<FiniteGroup> objects;
    std::vector<GroupHom> differentials;

    int length() const { return static_cast<int>(objects.size()) - 1; }
    const GroupHom& d(int n) const { return differentials[n - 1]; }
};

inline ProperChainComplex makeComplex(std::vector<FiniteGroup> objects,
                                      std::vector<GroupHom> differentials) {
    if (objects.empty()) throw ValidationError("a chain complex needs at least C_0");
    if (differentials.size() + 1 != objects.size())
        throw ValidationError("need exactly one differential per positive degree");
    ProperChainComplex c{std::move(objects), std::move(differentials)};
    for (int n = 1; n <= c.length(); ++n) {
        const GroupHom& dn = c.d(n);
        if (dn.dom.table != c.objects[n].table || dn.cod.table != c.objects[n - 1].table)
            throw ValidationError("differential d_" + std::to_string(n) +
                                  " does not match the complex objects");
        if (!isHomomorphism(dn))
            throw ValidationError("differential d_" + std::to_string(n) +
                                  " is not a homomorphism");
    }
    for (int n = 1; n < c.length(); ++n)
        for (int a = 0; a < c.objects[n + 1].order; ++a)
            if (c.d(n).map[c.d(n + 1).map[a]] != 0)
                throw ValidationError("d_" + std::to_string(n) + " d_" + std::to_string(n + 1) +
                                      " is not zero at element " + std::to_string(a));
    for (int n = 1; n <= c.length(); ++n)
        if (!isNormalSet(c.objects[n - 1], image(c.d(n)).elementSet))
            throw ValidationError("complex is not proper: image of d_" + std::to_string(n) +
                                  " is not normal");
    return c;
}

/// Convention at the ends of the truncation: kernel of the (absent) d_0 is
/// all of C_0, image of the (absent) d_{N+1} is trivial.
inline std::vector<int> cycleSetAt(const ProperChainComplex& c, int n) {
    if (n == 0) {
        std::vector<int> all(c.objects[0].order);
        for (int i = 0; i < c.objects[0].order; ++i) all[i] = i;
        return all;
    }
    return kernel(c.d(n)).elementSet;
}

inline std::vector<int> boundarySetAt(const ProperChainComplex& c, int n) {
    if (n == c.length()) return {0};
    return image(c.d(n + 1)).elementSet;
}

/// Homology carrier at one degree: the cycle subobject K[d_n] together with
/// its quotient by the image of d'_{n+1}.
struct Homology {
    Embedding cycles;               // K[d_n] inside C_n
    QuotientPresentation classes;   // quotient of cycles.carrier

    const FiniteGroup& group() const { return classes.quotient(); }

    /// Class of a cycle given by its ambient index in C_n.
    int classOfAmbient(int ambient) const {
        int c = cycles.ambientToCarrier(ambient);
        if (c < 0) throw ValidationError("element is not a cycle");
        return classes.projection.map[c];
    }

    /// Minimal-index ambient representative of a class.
    int ambientRep(int cls) const { return cycles.elementSet[classes.cosetReps[cls]]; }
};

inline Homology homologyAt(const ProperChainComplex& c, int n) {
    if (n < 0 || n > c.length())
        throw IndexOutOfRange("homologyAt: degree " + std::to_string(n) + " outside [0," +
                              std::to_string(c.length()) + "]");
    Embedding cycles = subgroupEmbedding(c.objects[n], cycleSetAt(c, n));
    std::vector<int> boundary;
    for (int b : boundarySetAt(c, n)) {
        int idx = cycles.ambientToCarrier(b);
        if (idx < 0) throw ValidationError("boundary escapes the cycle subobject");
        boundary.push_back(idx);
    }
    // properness makes the closure a no-op; still taken, as the construction
    // demands a normal subgroup
    QuotientPresentation classes =
        quotientByNormalSet(cycles.carrier, normalClosureSet(cycles.carrier, std::move(boundary)));
    return Homology{std::move(cycles), std::move(classes)};
}

struct ExactnessResult {
    bool exact = false;
    int witness = -1;  // an element of the symmetric difference on failure
};

inline ExactnessResult isExactAt(const ProperChainComplex& c, int n) {
    if (n < 0 || n > c.length())
        throw IndexOutOfRange("isExactAt: degree " + std::to_string(n) + " outside [0," +
                              std::to_string(c.length()) + "]");
    std::vector<int> im = boundarySetAt(c, n);
    std::vector<int> ker = cycleSetAt(c, n);
    if (im == ker) return {true, -1};
    std::vector<int> sym;
    std::set_symmetric_difference(im.begin(), im.end(), ker.begin(), ker.end(),
                                  std::back_inserter(sym));
    return {false, sym.front()};
}

/// A short exact sequence of proper chain complexes, levelwise.
struct ComplexSES {
    ProperChainComplex sub, total, quot;
    std::vector<GroupHom> inclusion;   // sub_n -> total_n
    std::vector<GroupHom> projection;  // total_n -> quot_n
};

inline void validateComplexSES(const ComplexSES& s) {
    const int len = s.total.length();
    if (s.sub.length() != len || s.quot.length() != len)
        throw ValidationError("complex SES levels differ in length");
    if (static_cast<int>(s.inclusion.size()) != len + 1 ||
        static_cast<int>(s.projection.size()) != len + 1)
        throw ValidationError("complex SES needs one inclusion/projection per degree");
    for (int n = 0; n <= len; ++n) {
        const GroupHom& inc = s.inclusion[n];
        const GroupHom& prj = s.projection[n];
        if (inc.dom.table != s.sub.objects[n].table || inc.cod.table != s.total.objects[n].table ||
            prj.dom.table != s.total.objects[n].table || prj.cod.table != s.quot.objects[n].table)
            throw ValidationError("SES maps do not match the complexes at degree " +
                                  std::to_string(n));
        if (!isHomomorphism(inc) || !isHomomorphism(prj))
            throw ValidationError("SES maps are not homomorphisms at degree " + std::to_string(n));
        if (!isInjective(inc))
            throw ValidationError("inclusion is not injective at degree " + std::to_string(n));
        if (!isSurjective(prj))
            throw ValidationError("projection is not surjective at degree " + std::to_string(n));
        if (kernel(prj).elementSet != image(inc).elementSet)
            throw ValidationError("inclusion is not a kernel of projection at degree " +
                                  std::to_string(n));
    }
    for (int n = 1; n <= len; ++n) {
        for (int a = 0; a < s.sub.objects[n].order; ++a)
            if (s.inclusion[n - 1].map[s.sub.d(n).map[a]] !=
                s.total.d(n).map[s.inclusion[n].map[a]])
                throw ValidationError("inclusion squares do not commute at degree " +
                                      std::to_string(n));
        for (int a = 0; a < s.total.objects[n].order; ++a)
            if (s.projection[n - 1].map[s.total.d(n).map[a]] !=
                s.quot.d(n).map[s.projection[n].map[a]])
                throw ValidationError("projection squares do not commute at degree " +
                                      std::to_string(n));
    }
}

/// Induced map on homology by a degree-n chain map component.
inline GroupHom inducedOnHomology(const GroupHom& phi, const Homology& hDom,
                                  const Homology& hCod) {
    std::vector<int> m(hDom.group().order);
    for (int cls = 0; cls < hDom.group().order; ++cls) {
        int z = hDom.ambientRep(cls);
        m[cls] = hCod.classOfAmbient(phi.map[z]);
    }
    return makeHom(hDom.group(), hCod.group(), std::move(m));
}

namespace detail {

/// One zig-zag step of the snake chase; returns the class in H_{n-1}(sub).
inline int snakeChase(const ComplexSES& s, int n, const Homology& hSub, int z, int liftChoice) {
    // lift z through the projection; liftChoice = 0 picks the minimal index
    int a = -1, seen = 0;
    for (int cand = 0; cand < s.total.objects[n].order; ++cand)
        if (s.projection[n].map[cand] == z && seen++ == liftChoice) {
            a = cand;
            break;
        }
    if (a < 0) throw LiftFailure("no preimage under the projection at degree " +
                                 std::to_string(n));
    int b = s.total.d(n).map[a];
    int sElt = -1;
    for (int cand = 0; cand < s.sub.objects[n - 1].order; ++cand)
        if (s.inclusion[n - 1].map[cand] == b) {
            sElt = cand;
            break;
        }
    if (sElt < 0)
        throw ValidationError("snake chase escaped the subcomplex; the sequence is not exact");
    if (n - 1 >= 1 && s.sub.d(n - 1).map[sElt] != 0)
        throw ValidationError("snake chase produced a non-cycle");
    return hSub.classOfAmbient(sElt);
}

}  // namespace detail

/**
 * The Snake Lemma connecting map delta_n : H_n(quot) -> H_{n-1}(sub),
 * computed by the element-level zig-zag with minimal-index choices.  The
 * choice-independence is checked separately (snakeDeltaChoiceIndependent),
 * not assumed.
 */
inline GroupHom snakeDelta(const ComplexSES& s, int n) {
    if (n < 1 || n > s.total.length())
        throw IndexOutOfRange("snakeDelta: degree " + std::to_string(n) + " outside [1," +
                              std::to_string(s.total.length()) + "]");
    Homology hQuot = homologyAt(s.quot, n);
    Homology hSub = homologyAt(s.sub, n - 1);
    std::vector<int> m(hQuot.group().order);
    for (int cls = 0; cls < hQuot.group().order; ++cls)
        m[cls] = detail::snakeChase(s, n, hSub, hQuot.ambientRep(cls), 0);
    return makeHom(hQuot.group(), hSub.group(), std::move(m));
}

/// Recomputes every delta_n value from every cycle representative and every
/// projection preimage; true when all choices agree with the canonical one.
inline bool snakeDeltaChoiceIndependent(const ComplexSES& s, int n) {
    Homology hQuot = homologyAt(s.quot, n);
    Homology hSub = homologyAt(s.sub, n - 1);
    GroupHom delta = snakeDelta(s, n);
    for (int zc = 0; zc < hQuot.cycles.carrier.order; ++zc) {
        int z = hQuot.cycles.elementSet[zc];
        int cls = hQuot.classes.projection.map[zc];
        int fiber = 0;
        for (int cand = 0; cand < s.total.objects[n].order; ++cand)
            if (s.projection[n].map[cand] == z) ++fiber;
        for (int choice = 0; choice < fiber; ++choice)
            if (detail::snakeChase(s, n, hSub, z, choice) != delta.map[cls]) return false;
    }
    return true;
}

/// The assembled long exact homology sequence of a complex SES.
struct ChainLES {
    std::vector<std::string> nodeLabels;  // "H_n(sub)" etc., top degree first
    std::vector<FiniteGroup> nodeGroups;
    std::vector<GroupHom> maps;  // maps[i] : node[i] -> node[i+1]
    std::vector<bool> exactAtInterior;
    bool allExact = true;
    bool tailSurjective = true;
};

inline ChainLES longExactSequenceOfComplexes(const ComplexSES& s) {
    validateComplexSES(s);
    const int len = s.total.length();
    ChainLES out;
    std::vector<Homology> hSub, hTot, hQuot;
    for (int n = 0; n <= len; ++n) {
        hSub.push_back(homologyAt(s.sub, n));
        hTot.push_back(homologyAt(s.total, n));
        hQuot.push_back(homologyAt(s.quot, n));
    }
    for (int n = len; n >= 0; --n) {
        auto deg = std::to_string(n);
        out.nodeLabels.push_back("H_" + deg + "(sub)");
        out.nodeGroups.push_back(hSub[n].group());
        out.maps.push_back(inducedOnHomology(s.inclusion[n], hSub[n], hTot[n]));
        out.nodeLabels.push_back("H_" + deg + "(total)");
        out.nodeGroups.push_back(hTot[n].group());
        out.maps.push_back(inducedOnHomology(s.projection[n], hTot[n], hQuot[n]));
        out.nodeLabels.push_back("H_" + deg + "(quot)");
        out.nodeGroups.push_back(hQuot[n].group());
        if (n >= 1) out.maps.push_back(snakeDelta(s, n));
    }
    // exactness at the interior nodes: image of the incoming map equals the
    // kernel of the outgoing one
    for (size_t i = 1; i + 1 < out.nodeGroups.size(); ++i) {
        std::vector<int> im = image(out.maps[i - 1]).elementSet;
        std::vector<int> ker = kernel(out.maps[i]).elementSet;
        bool ok = (im == ker);
        out.exactAtInterior.push_back(ok);
        out.allExact = out.allExact && ok;
    }
    out.tailSurjective = isSurjective(out.maps.back());
    return out;
}

}  // namespace sgh
