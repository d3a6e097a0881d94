#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgh/errors.hpp"
#include "sgh/group.hpp"
#include "sgh/hom.hpp"
#include "sgh/limits.hpp"

namespace sgh {

/// Greedy generating sequence: repeatedly adjoin the smallest element not yet
/// generated.  Deterministic, and short for the groups we care about.
inline std::vector<int> generatingSequence(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> have = closureSet(g, {});
    while (static_cast<int>(have.size()) < g.order) {
        int next = -1;
        std::vector<char> in(g.order, 0);
        for (int h : have) in[h] = 1;
        for (int a = 0; a < g.order; ++a)
            if (!in[a]) {
                next = a;
                break;
            }
        gens.push_back(next);
        std::vector<int> seed = gens;
        have = closureSet(g, std::move(seed));
    }
    return gens;
}

namespace detail {

/// Partial-map closure used by the hom/iso searches.  Propagates the
/// multiplicative law from newly defined elements; returns false on a
/// conflict (or an injectivity clash when `used` is supplied).
inline bool closePartialMap(const FiniteGroup& a, const FiniteGroup& b, std::vector<int>& img,
                            std::vector<int>& defined, size_t firstNew,
                            std::vector<char>* used, long long& nodes, long long budget) {
    for (size_t w = firstNew; w < defined.size(); ++w) {
        int x = defined[w];
        for (size_t v = 0; v < defined.size(); ++v) {
            int y = defined[v];
            for (auto [p, q] : {std::make_pair(a.mul(x, y), b.mul(img[x], img[y])),
                                std::make_pair(a.mul(y, x), b.mul(img[y], img[x]))}) {
                if (++nodes > budget)
                    throw EnumerationCap(budget, "hom search exceeded the node budget");
                if (img[p] == -1) {
                    if (used) {
                        if ((*used)[q]) return false;
                        (*used)[q] = 1;
                    }
                    img[p] = q;
                    defined.push_back(p);
                } else if (img[p] != q) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Visit returns false to stop the whole search.  homSearch reports whether
/// the search should continue.
template <typename Visit>
bool homSearch(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
               size_t k, std::vector<int>& img, std::vector<int>& defined, std::vector<char>* used,
               bool requireSameElementOrder, long long& nodes, long long budget, Visit&& visit) {
    if (k == gens.size()) return visit(img);
    const int g = gens[k];
    if (img[g] != -1)  // already forced by closure
        return homSearch(a, b, gens, k + 1, img, defined, used, requireSameElementOrder, nodes,
                         budget, visit);
    const int orderOfG = a.elementOrder(g);
    for (int h = 0; h < b.order; ++h) {
        if (used && (*used)[h]) continue;
        if (requireSameElementOrder) {
            if (b.elementOrder(h) != orderOfG) continue;
        } else {
            // image order must divide the element order for a hom to exist
            if (orderOfG % b.elementOrder(h) != 0) continue;
        }
        auto imgSave = img;
        auto definedSave = defined;
        std::vector<char> usedSave;
        if (used) usedSave = *used;
        img[g] = h;
        defined.push_back(g);
        if (used) (*used)[h] = 1;
        bool goOn = true;
        if (closePartialMap(a, b, img, defined, defined.size() - 1, used, nodes, budget))
            goOn = homSearch(a, b, gens, k + 1, img, defined, used, requireSameElementOrder,
                             nodes, budget, visit);
        img = std::move(imgSave);
        defined = std::move(definedSave);
        if (used) *used = std::move(usedSave);
        if (!goOn) return false;
    }
    return true;
}

}  // namespace detail

/// Every homomorphism a -> b, enumerated deterministically (lexicographic in
/// the images of the generating sequence).
inline std::vector<GroupHom> allHoms(const FiniteGroup& a, const FiniteGroup& b,
                                     const Limits& limits = defaultLimits()) {
    std::vector<int> gens = generatingSequence(a);
    std::vector<int> img(a.order, -1);
    img[0] = 0;
    std::vector<int> defined{0};
    long long nodes = 0;
    std::vector<GroupHom> out;
    detail::homSearch(a, b, gens, 0, img, defined, nullptr, false, nodes, limits.nodeBudget,
                      [&](const std::vector<int>& m) {
                          out.push_back(GroupHom{a, b, m});
                          return true;
                      });
    return out;
}

/// First isomorphism in lexicographic search order, if one exists.
inline std::optional<GroupHom> isIsomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                            const Limits& limits = defaultLimits()) {
    if (a.order > limits.isoOrderCap || b.order > limits.isoOrderCap)
        throw OrderCap(std::max(a.order, b.order), limits.isoOrderCap,
                       "isomorphism search is capped at order " +
                           std::to_string(limits.isoOrderCap));
    if (a.order != b.order) return std::nullopt;
    if (a.isAbelian() != b.isAbelian()) return std::nullopt;
    std::map<int, int> histA, histB;
    for (int x = 0; x < a.order; ++x) ++histA[a.elementOrder(x)];
    for (int x = 0; x < b.order; ++x) ++histB[b.elementOrder(x)];
    if (histA != histB) return std::nullopt;

    std::vector<int> gens = generatingSequence(a);
    std::vector<int> img(a.order, -1);
    img[0] = 0;
    std::vector<int> defined{0};
    std::vector<char> used(b.order, 0);
    used[0] = 1;
    long long nodes = 0;
    std::optional<GroupHom> found;
    detail::homSearch(a, b, gens, 0, img, defined, &used, true, nodes, limits.nodeBudget,
                      [&](const std::vector<int>& m) {
                          found = GroupHom{a, b, m};
                          return false;  // first hit is the lexicographic minimum
                      });
    return found;
}

/// Catalog of the small groups we can name; used for human-readable reports.
inline const std::vector<FiniteGroup>& namedGroupCatalog() {
    static const std::vector<FiniteGroup> catalog = [] {
        std::vector<FiniteGroup> c;
        c.push_back(trivialGroup("0"));
        for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}) c.push_back(cyclicGroup(n));
        c.push_back(product({cyclicGroup(2), cyclicGroup(2)}).group);
        c.back().label = "K4";
        c.push_back(product({cyclicGroup(4), cyclicGroup(2)}).group);
        c.back().label = "C4xC2";
        c.push_back(product({cyclicGroup(2), cyclicGroup(2), cyclicGroup(2)}).group);
        c.back().label = "C2xC2xC2";
        c.push_back(product({cyclicGroup(3), cyclicGroup(3)}).group);
        c.back().label = "C3xC3";
        c.push_back(product({cyclicGroup(6), cyclicGroup(2)}).group);
        c.back().label = "C6xC2";
        c.push_back(symmetricGroup(3));
        c.push_back(dihedralGroup(4));
        c.push_back(dihedralGroup(5));
        c.push_back(dihedralGroup(6));
        c.push_back(quaternionGroup());
        c.push_back(alternatingGroup(4));
        return c;
    }();
    return catalog;
}

/// Name of the isomorphism class when the catalog knows it, else "G<order>".
inline std::string groupName(const FiniteGroup& g, const Limits& limits = defaultLimits()) {
    if (g.order == 1) return "0";
    for (const auto& named : namedGroupCatalog()) {
        if (named.order != g.order) continue;
        try {
            if (isIsomorphic(g, named, limits)) return named.label;
        } catch (const OrderCap&) {
            break;
        }
    }
    return "G" + std::to_string(g.order);
}

}  // namespace sgh
