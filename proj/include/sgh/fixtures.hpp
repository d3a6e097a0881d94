#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sgh/group.hpp"
#include "sgh/hom.hpp"
#include "sgh/homotopy.hpp"
#include "sgh/json_io.hpp"
#include "sgh/limits.hpp"
#include "sgh/simplicial.hpp"

namespace sgh {

namespace detail {

/// Mixed-radix index converters matching the product() convention (first
/// coordinate most significant).
inline std::vector<int> powerTuple(int index, int base, int arity) {
    std::vector<int> t(arity);
    for (int i = arity - 1; i >= 0; --i) {
        t[i] = index % base;
        index /= base;
    }
    return t;
}

inline int powerIndex(const std::vector<int>& t, int base) {
    int idx = 0;
    for (int v : t) idx = idx * base + v;
    return idx;
}

}  // namespace detail

/// nerve(phi) : nerve(G) -> nerve(Q), componentwise on bar tuples.
inline SimplicialHom nerveHomFrom(const GroupHom& phi, int depth, std::string label = "",
                                  const Limits& limits = defaultLimits()) {
    TruncatedSimplicialGroup dom = nerve(phi.dom, depth, "", limits);
    TruncatedSimplicialGroup cod = nerve(phi.cod, depth, "", limits);
    std::vector<GroupHom> maps;
    maps.push_back(zeroHom(dom.levels[0], cod.levels[0]));
    for (int n = 1; n <= depth; ++n) {
        std::vector<int> m(dom.levels[n].order);
        for (int x = 0; x < dom.levels[n].order; ++x) {
            std::vector<int> t = detail::powerTuple(x, phi.dom.order, n);
            for (int& v : t) v = phi.map[v];
            m[x] = detail::powerIndex(t, phi.cod.order);
        }
        maps.push_back(GroupHom{dom.levels[n], cod.levels[n], std::move(m)});
    }
    return makeSimplicialHom(std::move(dom), std::move(cod), std::move(maps), std::move(label));
}

/// codiscrete(phi) : codiscrete(G) -> codiscrete(Q), componentwise.
inline SimplicialHom codiscreteHomFrom(const GroupHom& phi, int depth, std::string label = "",
                                       const Limits& limits = defaultLimits()) {
    TruncatedSimplicialGroup dom = codiscreteSimplicial(phi.dom, depth, "", limits);
    TruncatedSimplicialGroup cod = codiscreteSimplicial(phi.cod, depth, "", limits);
    std::vector<GroupHom> maps;
    for (int n = 0; n <= depth; ++n) {
        std::vector<int> m(dom.levels[n].order);
        for (int x = 0; x < dom.levels[n].order; ++x) {
            std::vector<int> t = detail::powerTuple(x, phi.dom.order, n + 1);
            for (int& v : t) v = phi.map[v];
            m[x] = detail::powerIndex(t, phi.cod.order);
        }
        maps.push_back(GroupHom{dom.levels[n], cod.levels[n], std::move(m)});
    }
    return makeSimplicialHom(std::move(dom), std::move(cod), std::move(maps), std::move(label));
}

/// constant(phi) : constant(G) -> constant(Q).
inline SimplicialHom constantHomFrom(const GroupHom& phi, int depth, std::string label = "") {
    TruncatedSimplicialGroup dom = constantSimplicial(phi.dom, depth);
    TruncatedSimplicialGroup cod = constantSimplicial(phi.cod, depth);
    std::vector<GroupHom> maps(static_cast<size_t>(depth) + 1, phi);
    return makeSimplicialHom(std::move(dom), std::move(cod), std::move(maps), std::move(label));
}

/// The unique map to the terminal (constant trivial) simplicial group.
inline SimplicialHom toPointHom(const TruncatedSimplicialGroup& a, std::string label = "") {
    TruncatedSimplicialGroup pt = constantSimplicial(trivialGroup(), a.depth);
    std::vector<GroupHom> maps;
    for (const auto& l : a.levels) maps.push_back(zeroHom(l, pt.levels[0]));
    return makeSimplicialHom(a, std::move(pt), std::move(maps), std::move(label));
}

/// Diagonal constant(G) -> codiscrete(G); injective, and not a Kan fibration
/// for nontrivial G.
inline SimplicialHom diagonalIntoCodiscrete(const FiniteGroup& g, int depth,
                                            std::string label = "",
                                            const Limits& limits = defaultLimits()) {
    TruncatedSimplicialGroup dom = constantSimplicial(g, depth);
    TruncatedSimplicialGroup cod = codiscreteSimplicial(g, depth, "", limits);
    std::vector<GroupHom> maps;
    for (int n = 0; n <= depth; ++n) {
        std::vector<int> m(g.order);
        for (int x = 0; x < g.order; ++x)
            m[x] = detail::powerIndex(std::vector<int>(static_cast<size_t>(n) + 1, x), g.order);
        maps.push_back(GroupHom{dom.levels[n], cod.levels[n], std::move(m)});
    }
    return makeSimplicialHom(std::move(dom), std::move(cod), std::move(maps), std::move(label));
}

/// Levelwise product with its projection onto the second factor.
inline std::pair<TruncatedSimplicialGroup, SimplicialHom> productWithSecondProjection(
    const TruncatedSimplicialGroup& a, const TruncatedSimplicialGroup& b, std::string label = "",
    const Limits& limits = defaultLimits()) {
    TruncatedSimplicialGroup p = productSimplicial(a, b, label, limits);
    std::vector<GroupHom> maps;
    for (int n = 0; n <= p.depth; ++n) {
        ProductGroup pg = product({a.levels[n], b.levels[n]}, limits);
        std::vector<int> m(p.levels[n].order);
        for (int x = 0; x < p.levels[n].order; ++x) m[x] = pg.tuple(x)[1];
        maps.push_back(GroupHom{p.levels[n], b.levels[n], std::move(m)});
    }
    SimplicialHom proj = makeSimplicialHom(p, b, std::move(maps), label + ".pr2");
    return {std::move(p), std::move(proj)};
}

/**
 * The shipped fixture registry: the groups, homs, simplicial groups,
 * simplicial homs and short exact sequences every check and CLI run uses by
 * default.  Deterministic; --fixtures adds file-based entries on top.
 */
inline FixtureSet builtinFixtures(int depth = 3, const Limits& limits = defaultLimits()) {
    FixtureSet fx;
    auto addGroup = [&](FiniteGroup g) {
        std::string label = g.label;
        fx.add(fx.groups, label, std::move(g));
    };
    addGroup(trivialGroup("triv"));
    addGroup(cyclicGroup(2));
    addGroup(cyclicGroup(3));
    addGroup(cyclicGroup(4));
    {
        FiniteGroup k4 = product({cyclicGroup(2), cyclicGroup(2)}, limits).group;
        k4.label = "K4";
        addGroup(std::move(k4));
    }
    addGroup(cyclicGroup(5));
    addGroup(cyclicGroup(6));
    addGroup(symmetricGroup(3));
    addGroup(cyclicGroup(8));
    {
        FiniteGroup g = product({cyclicGroup(4), cyclicGroup(2)}, limits).group;
        g.label = "C4xC2";
        addGroup(std::move(g));
    }
    addGroup(dihedralGroup(4));
    addGroup(quaternionGroup());
    addGroup(cyclicGroup(9));
    addGroup(cyclicGroup(12));
    addGroup(alternatingGroup(4));

    const FiniteGroup& triv = *fx.findGroup("triv");
    const FiniteGroup& c2 = *fx.findGroup("C2");
    const FiniteGroup& c3 = *fx.findGroup("C3");
    const FiniteGroup& c4 = *fx.findGroup("C4");
    const FiniteGroup& c6 = *fx.findGroup("C6");
    const FiniteGroup& k4 = *fx.findGroup("K4");
    const FiniteGroup& s3 = *fx.findGroup("S3");
    const FiniteGroup& c8 = *fx.findGroup("C8");
    const FiniteGroup& d4 = *fx.findGroup("D4");
    const FiniteGroup& q8 = *fx.findGroup("Q8");

    auto addHom = [&](const std::string& label, GroupHom h) {
        fx.add(fx.homs, label, std::move(h));
    };
    addHom("C4toC2", makeHom(c4, c2, {0, 1, 0, 1}));
    addHom("C2toC4", makeHom(c2, c4, {0, 2}));
    addHom("C6toC2", makeHom(c6, c2, {0, 1, 0, 1, 0, 1}));
    addHom("C6toC3", makeHom(c6, c3, {0, 1, 2, 0, 1, 2}));
    addHom("C3toC6", makeHom(c3, c6, {0, 2, 4}));
    addHom("C2toC6", makeHom(c2, c6, {0, 3}));
    addHom("C8toC4", makeHom(c8, c4, {0, 1, 2, 3, 0, 1, 2, 3}));
    addHom("S3toC2", makeHom(s3, c2, {0, 1, 1, 0, 0, 1}));
    addHom("C3toS3", makeHom(c3, s3, {0, 3, 4}));
    addHom("K4toC2", makeHom(k4, c2, {0, 0, 1, 1}));
    addHom("D4toC2", makeHom(d4, c2, {0, 0, 0, 0, 1, 1, 1, 1}));
    addHom("Q8toC2", makeHom(q8, c2, {0, 0, 1, 1, 0, 0, 1, 1}));
    addHom("zeroC2toC2", zeroHom(c2, c2));
    addHom("idS3", identityHom(s3));

    auto addSimp = [&](const std::string& label, TruncatedSimplicialGroup a) {
        a.label = label;
        fx.add(fx.simplicialGroups, label, std::move(a));
    };
    addSimp("constantTriv", constantSimplicial(triv, depth));
    addSimp("constantC2", constantSimplicial(c2, depth));
    addSimp("constantC3", constantSimplicial(c3, depth));
    addSimp("constantS3", constantSimplicial(s3, depth));
    addSimp("codiscreteC2", codiscreteSimplicial(c2, depth, "", limits));
    addSimp("codiscreteC3", codiscreteSimplicial(c3, depth, "", limits));
    addSimp("codiscreteC4", codiscreteSimplicial(c4, depth, "", limits));
    addSimp("nerveC2", nerve(c2, depth, "", limits));
    addSimp("nerveC3", nerve(c3, depth, "", limits));
    addSimp("nerveC4", nerve(c4, depth, "", limits));
    addSimp("nerveK4", nerve(k4, depth, "", limits));
    addSimp("nerveC2d4", nerve(c2, depth + 1, "", limits));
    addSimp("lambdaCodiscreteC2", lambdaOf(*fx.findSimplicial("codiscreteC2")).object);
    addSimp("minusCodiscreteC2", shiftMinus(*fx.findSimplicial("codiscreteC2")));

    auto addSHom = [&](const std::string& label, SimplicialHom f) {
        f.label = label;
        fx.add(fx.simplicialHoms, label, std::move(f));
    };
    {
        const TruncatedSimplicialGroup& n2 = *fx.findSimplicial("nerveC2");
        std::vector<GroupHom> ids;
        for (const auto& l : n2.levels) ids.push_back(identityHom(l));
        addSHom("idNerveC2", makeSimplicialHom(n2, n2, std::move(ids)));
    }
    addSHom("codiscreteC2toPoint", toPointHom(*fx.findSimplicial("codiscreteC2")));
    addSHom("nerveC2toPoint", toPointHom(*fx.findSimplicial("nerveC2")));
    addSHom("nerveC4toNerveC2", nerveHomFrom(*fx.findHom("C4toC2"), depth, "", limits));
    // the C8 chain is here for extension variety; its top level grows as
    // 8^depth, so it stays at depth 3
    addSHom("nerveC8toNerveC4", nerveHomFrom(*fx.findHom("C8toC4"), std::min(depth, 3), "",
                                             limits));
    addSHom("codiscreteC4toC2", codiscreteHomFrom(*fx.findHom("C4toC2"), depth, "", limits));
    addSHom("constantS3toC2", constantHomFrom(*fx.findHom("S3toC2"), depth));
    addSHom("faceZeroCodiscreteC2", faceZeroHom(*fx.findSimplicial("codiscreteC2")));
    addSHom("faceZeroNerveC2", faceZeroHom(*fx.findSimplicial("nerveC2")));
    addSHom("diagonalConstC2", diagonalIntoCodiscrete(c2, depth, "", limits));
    {
        // inclusion of the trivial object; a Kan fibration that is not
        // levelwise surjective (its H_0 map is not surjective either)
        TruncatedSimplicialGroup pt = constantSimplicial(triv, depth);
        const TruncatedSimplicialGroup& cc2 = *fx.findSimplicial("constantC2");
        std::vector<GroupHom> maps;
        for (const auto& l : cc2.levels) maps.push_back(zeroHom(pt.levels[0], l));
        addSHom("pointIntoConstantC2", makeSimplicialHom(pt, cc2, std::move(maps)));
    }
    {
        auto [prod, proj] = productWithSecondProjection(*fx.findSimplicial("nerveC2"),
                                                        *fx.findSimplicial("constantC2"),
                                                        "nerveC2xConstantC2", limits);
        fx.add(fx.simplicialGroups, "nerveC2xConstantC2", std::move(prod));
        addSHom("projNerveC2xConstantC2", std::move(proj));
    }
    addSHom("inclLambdaCodiscreteC2", lambdaOf(*fx.findSimplicial("codiscreteC2")).inclusion);

    auto addSES = [&](const std::string& label, const std::string& projLabel) {
        SimplicialSES s = sesFromSurjection(*fx.findSimplicialHom(projLabel), label);
        fx.add(fx.sesList, label, std::move(s));
    };
    addSES("sesLambdaCodiscreteC2", "faceZeroCodiscreteC2");
    addSES("sesNerveC2C4C2", "nerveC4toNerveC2");
    addSES("sesNerveC4C8C4", "nerveC8toNerveC4");
    addSES("sesConstantC3S3C2", "constantS3toC2");
    addSES("sesCodiscreteC2C4C2", "codiscreteC4toC2");
    addSES("sesProductNerveC2", "projNerveC2xConstantC2");
    addSES("sesIdNerveC2", "idNerveC2");

    return fx;
}

}  // namespace sgh
