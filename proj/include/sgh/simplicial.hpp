#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sgh/chain.hpp"
#include "sgh/errors.hpp"
#include "sgh/group.hpp"
#include "sgh/hom.hpp"
#include "sgh/limits.hpp"

namespace sgh {

/**
 * A simplicial group truncated at depth N: levels A_0..A_N, faces
 * d_i : A_n -> A_{n-1} for 1 <= n <= N and i in [n], degeneracies
 * s_i : A_n -> A_{n+1} for 0 <= n < N and i in [n].  faces[n-1][i] is d_i at
 * level n; degeneracies[n][i] is s_i at level n.
 */
struct TruncatedSimplicialGroup {
    int depth = 0;
    std::vector<FiniteGroup> levels;
    std::vector<std::vector<GroupHom>> faces;
    std::vector<std::vector<GroupHom>> degeneracies;
    std::string label;

    const GroupHom& face(int n, int i) const { return faces[n - 1][i]; }
    const GroupHom& degeneracy(int n, int i) const { return degeneracies[n][i]; }
};

namespace detail {

inline void checkSimplicialShape(const TruncatedSimplicialGroup& a) {
    const int N = a.depth;
    if (static_cast<int>(a.levels.size()) != N + 1)
        throw ValidationError("simplicial group needs depth+1 levels");
    if (static_cast<int>(a.faces.size()) != N)
        throw ValidationError("simplicial group needs one face family per level 1..depth");
    if (static_cast<int>(a.degeneracies.size()) != N)
        throw ValidationError("simplicial group needs one degeneracy family per level 0..depth-1");
    for (int n = 1; n <= N; ++n) {
        if (static_cast<int>(a.faces[n - 1].size()) != n + 1)
            throw ValidationError("level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                                  " faces");
        for (int i = 0; i <= n; ++i) {
            const GroupHom& f = a.face(n, i);
            if (f.dom.table != a.levels[n].table || f.cod.table != a.levels[n - 1].table)
                throw ValidationError("face (" + std::to_string(n) + "," + std::to_string(i) +
                                      ") does not run between the stated levels");
            if (!isHomomorphism(f))
                throw ValidationError("face (" + std::to_string(n) + "," + std::to_string(i) +
                                      ") is not a homomorphism");
        }
    }
    for (int n = 0; n < N; ++n) {
        if (static_cast<int>(a.degeneracies[n].size()) != n + 1)
            throw ValidationError("level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                                  " degeneracies");
        for (int i = 0; i <= n; ++i) {
            const GroupHom& s = a.degeneracy(n, i);
            if (s.dom.table != a.levels[n].table || s.cod.table != a.levels[n + 1].table)
                throw ValidationError("degeneracy (" + std::to_string(n) + "," +
                                      std::to_string(i) + ") does not run between the levels");
            if (!isHomomorphism(s))
                throw ValidationError("degeneracy (" + std::to_string(n) + "," +
                                      std::to_string(i) + ") is not a homomorphism");
        }
    }
}

}  // namespace detail

/// Verifies all five families of simplicial identities by exhaustive element
/// evaluation, wherever both sides are defined within the truncation.
/// Reports the first violation with its family, level, indices and element.
inline void checkSimplicialIdentities(const TruncatedSimplicialGroup& a) {
    const int N = a.depth;
    // d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (int x = 0; x < a.levels[n].order; ++x)
                    if (a.face(n - 1, i).map[a.face(n, j).map[x]] !=
                        a.face(n - 1, j - 1).map[a.face(n, i).map[x]])
                        throw IdentityViolation("dd", n, i, j, x,
                                                "d_i d_j = d_{j-1} d_i fails at level " +
                                                    std::to_string(n));
    // s_i s_j = s_{j+1} s_i for i <= j
    for (int n = 0; n + 2 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (int x = 0; x < a.levels[n].order; ++x)
                    if (a.degeneracy(n + 1, i).map[a.degeneracy(n, j).map[x]] !=
                        a.degeneracy(n + 1, j + 1).map[a.degeneracy(n, i).map[x]])
                        throw IdentityViolation("ss", n, i, j, x,
                                                "s_i s_j = s_{j+1} s_i fails at level " +
                                                    std::to_string(n));
    // d_i s_j = s_{j-1} d_i for i < j
    for (int n = 1; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (int x = 0; x < a.levels[n].order; ++x)
                    if (a.face(n + 1, i).map[a.degeneracy(n, j).map[x]] !=
                        a.degeneracy(n - 1, j - 1).map[a.face(n, i).map[x]])
                        throw IdentityViolation("ds-lt", n, i, j, x,
                                                "d_i s_j = s_{j-1} d_i fails at level " +
                                                    std::to_string(n));
    // d_j s_j = id = d_{j+1} s_j
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int x = 0; x < a.levels[n].order; ++x) {
                if (a.face(n + 1, j).map[a.degeneracy(n, j).map[x]] != x)
                    throw IdentityViolation("ds-eq", n, j, j, x,
                                            "d_j s_j = id fails at level " + std::to_string(n));
                if (a.face(n + 1, j + 1).map[a.degeneracy(n, j).map[x]] != x)
                    throw IdentityViolation("ds-eq", n, j + 1, j, x,
                                            "d_{j+1} s_j = id fails at level " +
                                                std::to_string(n));
            }
    // d_i s_j = s_j d_{i-1} for i > j+1
    for (int n = 1; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = j + 2; i <= n + 1; ++i)
                for (int x = 0; x < a.levels[n].order; ++x)
                    if (a.face(n + 1, i).map[a.degeneracy(n, j).map[x]] !=
                        a.degeneracy(n - 1, j).map[a.face(n, i - 1).map[x]])
                        throw IdentityViolation("ds-gt", n, i, j, x,
                                                "d_i s_j = s_j d_{i-1} fails at level " +
                                                    std::to_string(n));
}

inline TruncatedSimplicialGroup validateSimplicial(TruncatedSimplicialGroup a) {
    detail::checkSimplicialShape(a);
    checkSimplicialIdentities(a);
    return a;
}

/// A levelwise homomorphism commuting with faces and degeneracies.
struct SimplicialHom {
    TruncatedSimplicialGroup dom;
    TruncatedSimplicialGroup cod;
    std::vector<GroupHom> levelMaps;
    std::string label;
};

inline SimplicialHom makeSimplicialHom(TruncatedSimplicialGroup dom, TruncatedSimplicialGroup cod,
                                       std::vector<GroupHom> levelMaps, std::string label = "") {
    SimplicialHom f{std::move(dom), std::move(cod), std::move(levelMaps), std::move(label)};
    if (f.dom.depth != f.cod.depth)
        throw ShapeMismatch("simplicial hom requires equal depths");
    const int N = f.dom.depth;
    if (static_cast<int>(f.levelMaps.size()) != N + 1)
        throw ValidationError("simplicial hom needs one level map per level");
    for (int n = 0; n <= N; ++n) {
        const GroupHom& fn = f.levelMaps[n];
        if (fn.dom.table != f.dom.levels[n].table || fn.cod.table != f.cod.levels[n].table)
            throw ValidationError("level map " + std::to_string(n) +
                                  " does not run between the stated levels");
        if (!isHomomorphism(fn))
            throw ValidationError("level map " + std::to_string(n) + " is not a homomorphism");
    }
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i)
            for (int x = 0; x < f.dom.levels[n].order; ++x)
                if (f.levelMaps[n - 1].map[f.dom.face(n, i).map[x]] !=
                    f.cod.face(n, i).map[f.levelMaps[n].map[x]])
                    throw ValidationError("hom does not commute with face (" + std::to_string(n) +
                                          "," + std::to_string(i) + ")");
    for (int n = 0; n < N; ++n)
        for (int i = 0; i <= n; ++i)
            for (int x = 0; x < f.dom.levels[n].order; ++x)
                if (f.levelMaps[n + 1].map[f.dom.degeneracy(n, i).map[x]] !=
                    f.cod.degeneracy(n, i).map[f.levelMaps[n].map[x]])
                    throw ValidationError("hom does not commute with degeneracy (" +
                                          std::to_string(n) + "," + std::to_string(i) + ")");
    return f;
}

inline bool isLevelwiseSurjective(const SimplicialHom& f) {
    for (const auto& fn : f.levelMaps)
        if (!isSurjective(fn)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// fixture generators
// ---------------------------------------------------------------------------

/// All levels G, all structure maps the identity.
inline TruncatedSimplicialGroup constantSimplicial(const FiniteGroup& g, int depth,
                                                   std::string label = "") {
    TruncatedSimplicialGroup a;
    a.depth = depth;
    a.label = label.empty() ? "constant(" + g.label + "," + std::to_string(depth) + ")"
                            : std::move(label);
    for (int n = 0; n <= depth; ++n) a.levels.push_back(g);
    for (int n = 1; n <= depth; ++n)
        a.faces.emplace_back(static_cast<size_t>(n) + 1, identityHom(g));
    for (int n = 0; n < depth; ++n)
        a.degeneracies.emplace_back(static_cast<size_t>(n) + 1, identityHom(g));
    return validateSimplicial(std::move(a));
}

/// Level n is G^{n+1}; d_i deletes coordinate i, s_i repeats it.
inline TruncatedSimplicialGroup codiscreteSimplicial(const FiniteGroup& g, int depth,
                                                     std::string label = "",
                                                     const Limits& limits = defaultLimits()) {
    std::vector<ProductGroup> powers;
    for (int n = 0; n <= depth + 1; ++n) {
        std::vector<FiniteGroup> fs(static_cast<size_t>(n) + 1, g);
        if (n <= depth) powers.push_back(product(fs, limits));
    }
    TruncatedSimplicialGroup a;
    a.depth = depth;
    a.label = label.empty() ? "codiscrete(" + g.label + "," + std::to_string(depth) + ")"
                            : std::move(label);
    for (int n = 0; n <= depth; ++n) a.levels.push_back(powers[n].group);
    for (int n = 1; n <= depth; ++n) {
        std::vector<GroupHom> fam;
        for (int i = 0; i <= n; ++i) {
            std::vector<int> m(powers[n].group.order);
            for (int x = 0; x < powers[n].group.order; ++x) {
                std::vector<int> t = powers[n].tuple(x);
                t.erase(t.begin() + i);
                m[x] = powers[n - 1].indexOf(t);
            }
            fam.push_back(GroupHom{powers[n].group, powers[n - 1].group, std::move(m)});
        }
        a.faces.push_back(std::move(fam));
    }
    for (int n = 0; n < depth; ++n) {
        std::vector<GroupHom> fam;
        for (int i = 0; i <= n; ++i) {
            std::vector<int> m(powers[n].group.order);
            for (int x = 0; x < powers[n].group.order; ++x) {
                std::vector<int> t = powers[n].tuple(x);
                t.insert(t.begin() + i, t[i]);
                m[x] = powers[n + 1].indexOf(t);
            }
            fam.push_back(GroupHom{powers[n].group, powers[n + 1].group, std::move(m)});
        }
        a.degeneracies.push_back(std::move(fam));
    }
    return validateSimplicial(std::move(a));
}

/// Bar-construction nerve of an abelian group: level n is G^n, the inner
/// faces multiply adjacent entries, the outer ones drop an entry, and the
/// degeneracies insert the identity.
inline TruncatedSimplicialGroup nerve(const FiniteGroup& g, int depth, std::string label = "",
                                      const Limits& limits = defaultLimits()) {
    if (!g.isAbelian())
        throw NonAbelianNerve("nerve faces are homomorphisms only for abelian groups");
    std::vector<ProductGroup> powers;
    for (int n = 0; n <= depth; ++n) {
        std::vector<FiniteGroup> fs(static_cast<size_t>(n), g);
        powers.push_back(product(fs, limits));
        if (n == 0) powers.back().group = trivialGroup();
    }
    TruncatedSimplicialGroup a;
    a.depth = depth;
    a.label = label.empty() ? "nerve(" + g.label + "," + std::to_string(depth) + ")"
                            : std::move(label);
    for (int n = 0; n <= depth; ++n) a.levels.push_back(powers[n].group);
    for (int n = 1; n <= depth; ++n) {
        std::vector<GroupHom> fam;
        for (int i = 0; i <= n; ++i) {
            std::vector<int> m(powers[n].group.order);
            for (int x = 0; x < powers[n].group.order; ++x) {
                std::vector<int> t = powers[n].tuple(x);  // (g_1, .., g_n)
                std::vector<int> r;
                if (i == 0) {
                    r.assign(t.begin() + 1, t.end());
                } else if (i == n) {
                    r.assign(t.begin(), t.end() - 1);
                } else {
                    r = t;
                    r[i - 1] = g.mul(t[i - 1], t[i]);
                    r.erase(r.begin() + i);
                }
                m[x] = (n == 1) ? 0 : powers[n - 1].indexOf(r);
            }
            fam.push_back(GroupHom{powers[n].group, powers[n - 1].group, std::move(m)});
        }
        a.faces.push_back(std::move(fam));
    }
    for (int n = 0; n < depth; ++n) {
        std::vector<GroupHom> fam;
        for (int i = 0; i <= n; ++i) {
            std::vector<int> m(powers[n].group.order);
            for (int x = 0; x < powers[n].group.order; ++x) {
                std::vector<int> t = powers[n].tuple(x);
                t.insert(t.begin() + i, 0);
                m[x] = powers[n + 1].indexOf(t);
            }
            fam.push_back(GroupHom{powers[n].group, powers[n + 1].group, std::move(m)});
        }
        a.degeneracies.push_back(std::move(fam));
    }
    return validateSimplicial(std::move(a));
}

/// Levelwise direct product with componentwise structure maps.
inline TruncatedSimplicialGroup productSimplicial(const TruncatedSimplicialGroup& a,
                                                  const TruncatedSimplicialGroup& b,
                                                  std::string label = "",
                                                  const Limits& limits = defaultLimits()) {
    if (a.depth != b.depth) throw ShapeMismatch("product of simplicial groups needs equal depths");
    const int N = a.depth;
    std::vector<ProductGroup> prods;
    for (int n = 0; n <= N; ++n) prods.push_back(product({a.levels[n], b.levels[n]}, limits));
    auto pairMap = [&](const GroupHom& fa, const GroupHom& fb, const ProductGroup& src,
                       const ProductGroup& dst) {
        std::vector<int> m(src.group.order);
        for (int x = 0; x < src.group.order; ++x) {
            auto t = src.tuple(x);
            m[x] = dst.indexOf({fa.map[t[0]], fb.map[t[1]]});
        }
        return GroupHom{src.group, dst.group, std::move(m)};
    };
    TruncatedSimplicialGroup p;
    p.depth = N;
    p.label = label.empty() ? a.label + "x" + b.label : std::move(label);
    for (int n = 0; n <= N; ++n) p.levels.push_back(prods[n].group);
    for (int n = 1; n <= N; ++n) {
        std::vector<GroupHom> fam;
        for (int i = 0; i <= n; ++i)
            fam.push_back(pairMap(a.face(n, i), b.face(n, i), prods[n], prods[n - 1]));
        p.faces.push_back(std::move(fam));
    }
    for (int n = 0; n < N; ++n) {
        std::vector<GroupHom> fam;
        for (int i = 0; i <= n; ++i)
            fam.push_back(pairMap(a.degeneracy(n, i), b.degeneracy(n, i), prods[n], prods[n + 1]));
        p.degeneracies.push_back(std::move(fam));
    }
    return validateSimplicial(std::move(p));
}

inline TruncatedSimplicialGroup truncateSimplicial(const TruncatedSimplicialGroup& a, int depth,
                                                   std::string label = "") {
    if (depth < 0 || depth > a.depth) throw DepthTooSmall("cannot truncate to depth " +
                                                          std::to_string(depth));
    TruncatedSimplicialGroup t;
    t.depth = depth;
    t.label = label.empty() ? a.label + "|" + std::to_string(depth) : std::move(label);
    t.levels.assign(a.levels.begin(), a.levels.begin() + depth + 1);
    t.faces.assign(a.faces.begin(), a.faces.begin() + depth);
    t.degeneracies.assign(a.degeneracies.begin(), a.degeneracies.begin() + depth);
    return t;
}

/// A^-: drop A_0 and, at every level, d_0 and s_0.  Depth shrinks by one.
inline TruncatedSimplicialGroup shiftMinus(const TruncatedSimplicialGroup& a,
                                           std::string label = "") {
    if (a.depth < 1) throw DepthTooSmall("shiftMinus needs depth >= 1");
    const int N = a.depth - 1;
    TruncatedSimplicialGroup m;
    m.depth = N;
    m.label = label.empty() ? a.label + "-" : std::move(label);
    for (int n = 0; n <= N; ++n) m.levels.push_back(a.levels[n + 1]);
    for (int n = 1; n <= N; ++n) {
        std::vector<GroupHom> fam;
        for (int i = 0; i <= n; ++i) fam.push_back(a.face(n + 1, i + 1));
        m.faces.push_back(std::move(fam));
    }
    for (int n = 0; n < N; ++n) {
        std::vector<GroupHom> fam;
        for (int i = 0; i <= n; ++i) fam.push_back(a.degeneracy(n + 1, i + 1));
        m.degeneracies.push_back(std::move(fam));
    }
    return m;
}

/// The simplicial morphism (d_0)_n : A^- -> A (against A truncated to match).
inline SimplicialHom faceZeroHom(const TruncatedSimplicialGroup& a) {
    if (a.depth < 1) throw DepthTooSmall("faceZeroHom needs depth >= 1");
    TruncatedSimplicialGroup dom = shiftMinus(a);
    TruncatedSimplicialGroup cod = truncateSimplicial(a, a.depth - 1);
    std::vector<GroupHom> maps;
    for (int n = 0; n < a.depth; ++n) maps.push_back(a.face(n + 1, 0));
    return makeSimplicialHom(std::move(dom), std::move(cod), std::move(maps), a.label + ".d0");
}

/// Levelwise kernel of a simplicial hom, with its inclusion.
struct SimplicialSubobject {
    TruncatedSimplicialGroup object;
    std::vector<Embedding> embeddings;  // object level n inside f.dom level n
    SimplicialHom inclusion;
};

inline SimplicialSubobject levelwiseKernel(const SimplicialHom& f, std::string label = "") {
    const int N = f.dom.depth;
    std::vector<Embedding> embs;
    for (int n = 0; n <= N; ++n) embs.push_back(kernel(f.levelMaps[n]));
    auto restrict = [&](const GroupHom& structureMap, const Embedding& from, const Embedding& to) {
        std::vector<int> m(from.carrier.order);
        for (int i = 0; i < from.carrier.order; ++i) {
            int idx = to.ambientToCarrier(structureMap.map[from.elementSet[i]]);
            if (idx < 0)
                throw ValidationError("structure map does not preserve the levelwise kernel");
            m[i] = idx;
        }
        return GroupHom{from.carrier, to.carrier, std::move(m)};
    };
    TruncatedSimplicialGroup k;
    k.depth = N;
    k.label = label.empty() ? "K[" + (f.label.empty() ? "f" : f.label) + "]" : std::move(label);
    for (int n = 0; n <= N; ++n) k.levels.push_back(embs[n].carrier);
    for (int n = 1; n <= N; ++n) {
        std::vector<GroupHom> fam;
        for (int i = 0; i <= n; ++i)
            fam.push_back(restrict(f.dom.face(n, i), embs[n], embs[n - 1]));
        k.faces.push_back(std::move(fam));
    }
    for (int n = 0; n < N; ++n) {
        std::vector<GroupHom> fam;
        for (int i = 0; i <= n; ++i)
            fam.push_back(restrict(f.dom.degeneracy(n, i), embs[n], embs[n + 1]));
        k.degeneracies.push_back(std::move(fam));
    }
    k = validateSimplicial(std::move(k));
    std::vector<GroupHom> incl;
    for (int n = 0; n <= N; ++n) incl.push_back(embs[n].into);
    SimplicialHom inclusion = makeSimplicialHom(k, f.dom, std::move(incl));
    return SimplicialSubobject{std::move(k), std::move(embs), std::move(inclusion)};
}

/// Lambda A: the kernel of (d_0)_n : A^- -> A, a simplicial group of depth
/// one less, with its level embeddings Lambda A_n inside A_{n+1}.
inline SimplicialSubobject lambdaOf(const TruncatedSimplicialGroup& a) {
    if (a.depth < 1) throw DepthTooSmall("lambdaOf needs depth >= 1");
    SimplicialSubobject s = levelwiseKernel(faceZeroHom(a), "Lambda(" + a.label + ")");
    s.object.label = "Lambda(" + a.label + ")";
    return s;
}

// ---------------------------------------------------------------------------
// Moore complex
// ---------------------------------------------------------------------------

/// The Moore complex N(A): N_0 A = A_0, N_n A the joint kernel of
/// d_0..d_{n-1} at level n, with differential the restriction of d_n.
struct MooreComplex {
    ProperChainComplex complex;
    std::vector<Embedding> embeddings;  // N_n A inside A_n
};

inline MooreComplex moore(const TruncatedSimplicialGroup& a) {
    const int N = a.depth;
    std::vector<Embedding> embs;
    for (int n = 0; n <= N; ++n) {
        std::vector<int> set;
        for (int x = 0; x < a.levels[n].order; ++x) {
            bool inAll = true;
            for (int i = 0; i < n && inAll; ++i) inAll = (a.face(n, i).map[x] == 0);
            if (inAll) set.push_back(x);
        }
        embs.push_back(subgroupEmbedding(a.levels[n], std::move(set)));
    }
    std::vector<FiniteGroup> objects;
    for (auto& e : embs) objects.push_back(e.carrier);
    std::vector<GroupHom> diffs;
    for (int n = 1; n <= N; ++n) {
        std::vector<int> m(embs[n].carrier.order);
        for (int i = 0; i < embs[n].carrier.order; ++i) {
            int idx = embs[n - 1].ambientToCarrier(a.face(n, n).map[embs[n].elementSet[i]]);
            if (idx < 0) throw ValidationError("Moore differential escapes the Moore subobject");
            m[i] = idx;
        }
        diffs.push_back(GroupHom{embs[n].carrier, embs[n - 1].carrier, std::move(m)});
    }
    return MooreComplex{makeComplex(std::move(objects), std::move(diffs)), std::move(embs)};
}

/// H_n A = H_n N(A).  Certified for 0 <= n <= depth-1 only: the top degree
/// would need level depth+1.
inline Homology homologyMoore(const TruncatedSimplicialGroup& a, int n) {
    if (n < 0 || n > a.depth - 1)
        throw IndexOutOfRange("homologyMoore: degree " + std::to_string(n) +
                              " is not certifiable at depth " + std::to_string(a.depth));
    return homologyAt(moore(a).complex, n);
}

}  // namespace sgh
