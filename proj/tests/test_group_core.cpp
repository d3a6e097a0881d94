#include <catch2/catch_amalgamated.hpp>

#include "sgh/group.hpp"
#include "sgh/hom.hpp"
#include "sgh/iso.hpp"
#include "sgh/limits.hpp"

using namespace sgh;

namespace {

// brute-force oracles, independent of the library's subgroup machinery
std::vector<int> rawPreimagesOfIdentity(const GroupHom& f) {
    std::vector<int> out;
    for (int a = 0; a < f.dom.order; ++a)
        if (f.map[a] == 0) out.push_back(a);
    return out;
}

bool rawIsClosed(const FiniteGroup& g, const std::vector<int>& set) {
    for (int a : set)
        for (int b : set)
            if (std::find(set.begin(), set.end(), g.mul(a, b)) == set.end()) return false;
    return true;
}

}  // namespace

TEST_CASE("validateGroup accepts the trivial group and C2") {
    FiniteGroup one = validateGroup({{0}});
    REQUIRE(one.order == 1);
    FiniteGroup c2 = validateGroup({{0, 1}, {1, 0}});
    REQUIRE(c2.order == 2);
    REQUIRE(c2.mul(1, 1) == 0);
}

TEST_CASE("validateGroup rejects a table whose row is not a permutation") {
    try {
        validateGroup({{0, 1}, {1, 1}});
        FAIL("expected an axiom violation");
    } catch (const AxiomViolation& e) {
        CHECK(e.axiom == "inverse");
        REQUIRE(e.witness.size() == 1);
        CHECK(e.witness[0] == 1);
    }
}

TEST_CASE("validateGroup rejects a misplaced identity and broken associativity") {
    CHECK_THROWS_AS(validateGroup({{1, 0}, {0, 1}}), AxiomViolation);
    // a magma with identity and inverses that is not associative
    CHECK_THROWS_AS(validateGroup({{0, 1, 2, 3, 4},
                                   {1, 0, 3, 4, 2},
                                   {2, 4, 0, 1, 3},
                                   {3, 2, 4, 0, 1},
                                   {4, 3, 1, 2, 0}}),
                    AxiomViolation);
}

TEST_CASE("kernel of the mod-2 map on C4 is {0,2}") {
    GroupHom f = makeHom(cyclicGroup(4), cyclicGroup(2), {0, 1, 0, 1});
    Embedding k = kernel(f);
    CHECK(k.elementSet == rawPreimagesOfIdentity(f));
    CHECK(k.elementSet == std::vector<int>{0, 2});
    CHECK(k.carrier.order == 2);
    CHECK(isIsomorphic(k.carrier, cyclicGroup(2)).has_value());
}

TEST_CASE("kernel edge cases: identity and zero homs") {
    FiniteGroup s3 = symmetricGroup(3);
    CHECK(kernel(identityHom(s3)).elementSet == std::vector<int>{0});
    CHECK(kernel(zeroHom(s3, cyclicGroup(2))).elementSet.size() == 6);
}

TEST_CASE("image and cokernel of the alternating inclusion in S3") {
    FiniteGroup s3 = symmetricGroup(3);
    GroupHom incl = makeHom(cyclicGroup(3), s3, {0, 3, 4});
    Embedding img = image(incl);
    CHECK(img.carrier.order == 3);
    QuotientPresentation coker = cokernel(incl);
    CHECK(coker.quotient().order == 2);
}

TEST_CASE("image and cokernel degenerate cases") {
    FiniteGroup c4 = cyclicGroup(4);
    FiniteGroup s3 = symmetricGroup(3);
    GroupHom zero = zeroHom(s3, c4);
    CHECK(image(zero).carrier.order == 1);
    CHECK(cokernel(zero).quotient().order == 4);
    CHECK(isIsomorphic(cokernel(zero).quotient(), c4).has_value());
    GroupHom onto = makeHom(c4, cyclicGroup(2), {0, 1, 0, 1});
    CHECK(cokernel(onto).quotient().order == 1);
}

TEST_CASE("normal closure: identity, transposition in S3, abelian subgroups") {
    FiniteGroup s3 = symmetricGroup(3);
    CHECK(normalClosureSet(s3, {0}) == std::vector<int>{0});
    // conjugates of a transposition are the transpositions; together they
    // generate all of S3
    CHECK(normalClosureSet(s3, {1}) == std::vector<int>{0, 1, 2, 3, 4, 5});
    Embedding closed = normalClosure(subgroupGeneratedBy(s3, {1}));
    CHECK(closed.carrier.order == 6);
    FiniteGroup c6 = cyclicGroup(6);
    for (int a = 1; a < 6; ++a) {
        std::vector<int> sub = closureSet(c6, {a});
        CHECK(normalClosureSet(c6, {a}) == sub);
        CHECK(normalClosure(subgroupEmbedding(c6, sub)).elementSet == sub);
    }
}

TEST_CASE("product of C2 and C2 has order 4 and exponent 2") {
    ProductGroup p = product({cyclicGroup(2), cyclicGroup(2)});
    REQUIRE(p.group.order == 4);
    for (int x = 1; x < 4; ++x) CHECK(p.group.elementOrder(x) == 2);
    CHECK(p.projections.size() == 2);
    CHECK(isSurjective(p.projections[0]));
}

TEST_CASE("pullback of the identity along itself is the diagonal") {
    FiniteGroup s3 = symmetricGroup(3);
    Pullback pb = pullback(identityHom(s3), identityHom(s3));
    REQUIRE(pb.carrier.order == 6);
    for (const auto& [a, b] : pb.pairs) CHECK(a == b);
    CHECK(isIsomorphic(pb.carrier, s3).has_value());
    Embedding emb = pb.toEmbedding();
    CHECK(emb.carrier.order == 6);
    CHECK(emb.carrier.table == pb.carrier.table);
}

TEST_CASE("equalizer of a map with itself is everything") {
    GroupHom f = makeHom(cyclicGroup(4), cyclicGroup(2), {0, 1, 0, 1});
    CHECK(equalizer(f, f).carrier.order == 4);
}

TEST_CASE("coequalizers: projections, equal maps, and a shifted pair") {
    FiniteGroup c2 = cyclicGroup(2);
    ProductGroup p = product({c2, c2});
    QuotientPresentation q = coequalizerPair(p.projections[0], p.projections[1]);
    CHECK(q.quotient().order == 1);

    GroupHom f = makeHom(c2, cyclicGroup(4), {0, 2});
    QuotientPresentation same = coequalizerPair(f, f);
    CHECK(same.quotient().order == 4);
    for (int x = 0; x < 4; ++x) CHECK(same.projection.map[x] == x);

    QuotientPresentation half = coequalizerPair(zeroHom(c2, cyclicGroup(4)), f);
    CHECK(half.quotient().order == 2);
    CHECK(isIsomorphic(half.quotient(), c2).has_value());
}

TEST_CASE("coequalizerPair rejects non-parallel maps") {
    GroupHom f = makeHom(cyclicGroup(2), cyclicGroup(4), {0, 2});
    GroupHom g = makeHom(cyclicGroup(2), cyclicGroup(2), {0, 1});
    CHECK_THROWS_AS(coequalizerPair(f, g), CodomainMismatch);
}

TEST_CASE("isIsomorphic distinguishes C4 from the Klein group") {
    CHECK_FALSE(isIsomorphic(cyclicGroup(4), product({cyclicGroup(2), cyclicGroup(2)}).group)
                    .has_value());
}

TEST_CASE("isIsomorphic finds the identity first on equal groups") {
    for (const FiniteGroup& g : {cyclicGroup(4), symmetricGroup(3), quaternionGroup()}) {
        auto iso = isIsomorphic(g, g);
        REQUIRE(iso.has_value());
        for (int a = 0; a < g.order; ++a) CHECK(iso->map[a] == a);
    }
}

TEST_CASE("isIsomorphic matches C6 with C2 x C3") {
    auto iso = isIsomorphic(cyclicGroup(6), product({cyclicGroup(2), cyclicGroup(3)}).group);
    REQUIRE(iso.has_value());
    CHECK(isHomomorphism(*iso));
    CHECK(isBijectiveHom(*iso));
}

TEST_CASE("isIsomorphic enforces the order cap") {
    Limits limits;
    limits.isoOrderCap = 8;
    CHECK_THROWS_AS(isIsomorphic(cyclicGroup(12), cyclicGroup(12), limits), OrderCap);
}

TEST_CASE("image factorization reproduces the original hom") {
    FiniteGroup s3 = symmetricGroup(3);
    GroupHom sign = makeHom(s3, cyclicGroup(4), {0, 2, 2, 0, 0, 2});
    Embedding img = image(sign);
    GroupHom epi = imageFactorization(sign, img);
    CHECK(isSurjective(epi));
    CHECK(compose(img.into, epi).map == sign.map);
}

TEST_CASE("normal subgroups are kernels of their cokernel projections") {
    FiniteGroup d4 = dihedralGroup(4);
    std::vector<int> rotations{0, 1, 2, 3};
    REQUIRE(rawIsClosed(d4, rotations));
    REQUIRE(isNormalSet(d4, rotations));
    QuotientPresentation q = quotientByNormalSet(d4, rotations);
    CHECK(kernel(q.projection).elementSet == rotations);
}

TEST_CASE("allHoms enumerates the homs from C4 to C2") {
    std::vector<GroupHom> homs = allHoms(cyclicGroup(4), cyclicGroup(2));
    REQUIRE(homs.size() == 2);
    for (const auto& h : homs) CHECK(isHomomorphism(h));
}

TEST_CASE("subgroupEmbedding canonically relabels and rejects junk") {
    FiniteGroup s3 = symmetricGroup(3);
    Embedding a3 = subgroupEmbedding(s3, {0, 3, 4});
    CHECK(a3.carrier.order == 3);
    CHECK(a3.into.map == std::vector<int>{0, 3, 4});
    CHECK(a3.ambientToCarrier(4) == 2);
    CHECK_THROWS_AS(subgroupEmbedding(s3, {0, 1, 3}), ValidationError);
    CHECK_THROWS_AS(subgroupEmbedding(s3, {1, 2}), ValidationError);
}
