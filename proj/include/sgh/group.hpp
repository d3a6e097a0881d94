#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sgh/errors.hpp"

namespace sgh {

/**
 * A finite group given by its Cayley table.
 *
 * Element 0 is always the identity.  The table is stored row-major:
 * table[a * order + b] is the product a*b.  Values are immutable after
 * construction; every operation in the library is a pure function.
 */
struct FiniteGroup {
    int order = 0;
    std::vector<int> table;  // row-major, order*order entries
    std::string label;

    int mul(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }

    int inv(int a) const {
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == 0) return b;
        return -1;  // unreachable on a valid group
    }

    int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }

    bool isAbelian() const {
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    int elementOrder(int a) const {
        int k = 1, x = a;
        while (x != 0) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }

    bool operator==(const FiniteGroup& other) const {
        return order == other.order && table == other.table;
    }
};

/// Validates a Cayley table against the three group axioms and returns the
/// group.  Reports the first failing axiom with its witness elements.
/// Checked in order: identity at index 0, associativity, two-sided inverses
/// (each row and column of the table must be a permutation).
inline FiniteGroup validateGroup(const std::vector<std::vector<int>>& table,
                                 std::string label = "") {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw ValidationError("empty Cayley table");
    FiniteGroup g;
    g.order = n;
    g.label = std::move(label);
    g.table.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n)
            throw ValidationError("Cayley table is not square at row " + std::to_string(a));
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n)
                throw ValidationError("table entry out of range at (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
            g.table[static_cast<size_t>(a) * n + b] = v;
        }
    }
    for (int b = 0; b < n; ++b)
        if (g.mul(0, b) != b)
            throw AxiomViolation("identity", {b},
                                 "element 0 is not a left identity at " + std::to_string(b));
    for (int a = 0; a < n; ++a)
        if (g.mul(a, 0) != a)
            throw AxiomViolation("identity", {a},
                                 "element 0 is not a right identity at " + std::to_string(a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw AxiomViolation("associativity", {a, b, c},
                                         "associativity fails at (" + std::to_string(a) + "," +
                                             std::to_string(b) + "," + std::to_string(c) + ")");
    // Rows and columns must be permutations; with associativity and an
    // identity this is exactly the existence of two-sided inverses.
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) seen[g.mul(a, b)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw AxiomViolation("inverse", {a}, "row " + std::to_string(a) +
                                                     " of the table is not a permutation");
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) seen[g.mul(a, b)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw AxiomViolation("inverse", {b}, "column " + std::to_string(b) +
                                                     " of the table is not a permutation");
    }
    return g;
}

inline FiniteGroup trivialGroup(std::string label = "0") {
    FiniteGroup g;
    g.order = 1;
    g.table = {0};
    g.label = std::move(label);
    return g;
}

inline FiniteGroup cyclicGroup(int n, std::string label = "") {
    if (n < 1) throw ValidationError("cyclic group needs order >= 1");
    FiniteGroup g;
    g.order = n;
    g.label = label.empty() ? "C" + std::to_string(n) : std::move(label);
    g.table.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return g;
}

/// Dihedral group of order 2n: indices 0..n-1 are rotations, n..2n-1
/// reflections.
inline FiniteGroup dihedralGroup(int n, std::string label = "") {
    if (n < 1) throw ValidationError("dihedral group needs n >= 1");
    const int m = 2 * n;
    FiniteGroup g;
    g.order = m;
    g.label = label.empty() ? "D" + std::to_string(n) : std::move(label);
    g.table.resize(static_cast<size_t>(m) * m);
    auto idx = [&](int rot, bool refl) { return refl ? n + rot : rot; };
    for (int a = 0; a < m; ++a) {
        int ra = a % n;
        bool fa = a >= n;
        for (int b = 0; b < m; ++b) {
            int rb = b % n;
            bool fb = b >= n;
            // (r^a f^e)(r^b f^e') = r^(a +- b) f^(e xor e')
            int rot = fa ? ((ra - rb) % n + n) % n : (ra + rb) % n;
            g.table[static_cast<size_t>(a) * m + b] = idx(rot, fa != fb);
        }
    }
    return g;
}

/// Quaternion group {1,i,j,k,-1,-i,-j,-k} with indices 0..7.
inline FiniteGroup quaternionGroup(std::string label = "Q8") {
    // sign-and-axis representation: element = (s, x) with s in {0,1}, x in
    // {1,i,j,k}; index = 4*s + x.
    auto mulBase = [](int x, int y, int& sign) -> int {
        // 0=1,1=i,2=j,3=k
        static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{+1, +1, +1, +1},
                                      {+1, -1, +1, -1},
                                      {+1, -1, -1, +1},
                                      {+1, +1, -1, -1}};
        sign = sgn[x][y];
        return prod[x][y];
    };
    FiniteGroup g;
    g.order = 8;
    g.label = std::move(label);
    g.table.resize(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = a / 4, xa = a % 4;
            int sb = b / 4, xb = b % 4;
            int s;
            int x = mulBase(xa, xb, s);
            int sign = ((sa + sb) % 2 + (s < 0 ? 1 : 0)) % 2;
            g.table[static_cast<size_t>(a) * 8 + b] = 4 * sign + x;
        }
    return g;
}

namespace detail {

inline std::vector<std::vector<int>> allPermutations(int m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;  // lexicographic; identity first
}

inline bool isEvenPermutation(const std::vector<int>& p) {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

inline FiniteGroup permutationGroupFrom(std::vector<std::vector<int>> perms, std::string label) {
    // perms must be closed under composition and sorted with identity first.
    const int n = static_cast<int>(perms.size());
    FiniteGroup g;
    g.order = n;
    g.label = std::move(label);
    g.table.resize(static_cast<size_t>(n) * n);
    auto indexOf = [&](const std::vector<int>& q) {
        auto it = std::lower_bound(perms.begin(), perms.end(), q);
        return static_cast<int>(it - perms.begin());
    };
    const int m = static_cast<int>(perms[0].size());
    std::vector<int> comp(m);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int x = 0; x < m; ++x) comp[x] = perms[a][perms[b][x]];
            g.table[static_cast<size_t>(a) * n + b] = indexOf(comp);
        }
    return g;
}

}  // namespace detail

/// Symmetric group on m letters, elements ordered lexicographically as
/// permutation words (so the identity is element 0).
inline FiniteGroup symmetricGroup(int m, std::string label = "") {
    if (m < 1 || m > 5) throw ValidationError("symmetricGroup supports 1 <= m <= 5");
    return detail::permutationGroupFrom(detail::allPermutations(m),
                                        label.empty() ? "S" + std::to_string(m) : std::move(label));
}

inline FiniteGroup alternatingGroup(int m, std::string label = "") {
    if (m < 1 || m > 5) throw ValidationError("alternatingGroup supports 1 <= m <= 5");
    auto perms = detail::allPermutations(m);
    std::vector<std::vector<int>> even;
    for (auto& p : perms)
        if (detail::isEvenPermutation(p)) even.push_back(p);
    return detail::permutationGroupFrom(std::move(even),
                                        label.empty() ? "A" + std::to_string(m) : std::move(label));
}

}  // namespace sgh
