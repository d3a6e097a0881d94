#include <catch2/catch_amalgamated.hpp>

#include "sgh/iso.hpp"
#include "sgh/simplicial.hpp"

using namespace sgh;

TEST_CASE("constant and codiscrete fixtures validate") {
    FiniteGroup s3 = symmetricGroup(3);
    TruncatedSimplicialGroup c = constantSimplicial(s3, 3);
    CHECK(c.depth == 3);
    TruncatedSimplicialGroup cod = codiscreteSimplicial(cyclicGroup(2), 3);
    REQUIRE(cod.levels.size() == 4);
    CHECK(cod.levels[0].order == 2);
    CHECK(cod.levels[1].order == 4);
    CHECK(cod.levels[2].order == 8);
    CHECK(cod.levels[3].order == 16);
}

TEST_CASE("a face replaced by the zero hom breaks the identities") {
    TruncatedSimplicialGroup broken = constantSimplicial(cyclicGroup(2), 2);
    broken.faces[0][0] = zeroHom(cyclicGroup(2), cyclicGroup(2));
    try {
        validateSimplicial(broken);
        FAIL("expected an identity violation");
    } catch (const IdentityViolation& e) {
        CHECK_FALSE(e.family.empty());
    }
}

TEST_CASE("nerve levels grow as powers and need an abelian group") {
    TruncatedSimplicialGroup n = nerve(cyclicGroup(2), 3);
    REQUIRE(n.levels.size() == 4);
    CHECK(n.levels[0].order == 1);
    CHECK(n.levels[1].order == 2);
    CHECK(n.levels[2].order == 4);
    CHECK(n.levels[3].order == 8);
    CHECK_THROWS_AS(nerve(symmetricGroup(3), 2), NonAbelianNerve);
}

TEST_CASE("shiftMinus of a constant object is the constant object one deeper") {
    FiniteGroup g = cyclicGroup(3);
    TruncatedSimplicialGroup minus = shiftMinus(constantSimplicial(g, 3));
    TruncatedSimplicialGroup expected = constantSimplicial(g, 2);
    REQUIRE(minus.depth == 2);
    for (int n = 0; n <= 2; ++n) CHECK(minus.levels[n].table == expected.levels[n].table);
    for (int n = 1; n <= 2; ++n)
        for (int i = 0; i <= n; ++i)
            CHECK(minus.face(n, i).map == expected.face(n, i).map);
    CHECK_THROWS_AS(shiftMinus(constantSimplicial(g, 0)), DepthTooSmall);
}

TEST_CASE("lambda of the codiscrete object on C2") {
    SimplicialSubobject lam = lambdaOf(codiscreteSimplicial(cyclicGroup(2), 3));
    REQUIRE(lam.object.depth == 2);
    // kernel of d_0 : C2^2 -> C2 is the pairs with trailing identity
    CHECK(lam.object.levels[0].order == 2);
    CHECK(lam.embeddings[0].elementSet == std::vector<int>{0, 2});
    CHECK_THROWS_AS(lambdaOf(constantSimplicial(cyclicGroup(2), 0)), DepthTooSmall);
}

TEST_CASE("Moore complex of a constant object is concentrated in degree zero") {
    FiniteGroup s3 = symmetricGroup(3);
    MooreComplex m = moore(constantSimplicial(s3, 3));
    CHECK(m.complex.objects[0].order == 6);
    for (int n = 1; n <= 3; ++n) CHECK(m.complex.objects[n].order == 1);
}

TEST_CASE("Moore complex of the codiscrete object on C2") {
    MooreComplex m = moore(codiscreteSimplicial(cyclicGroup(2), 3));
    CHECK(m.complex.objects[0].order == 2);
    CHECK(m.complex.objects[1].order == 2);
    CHECK(m.complex.objects[2].order == 1);
    CHECK(m.complex.objects[3].order == 1);
    CHECK(isBijectiveHom(m.complex.d(1)));
}

TEST_CASE("Moore complex of the nerve of C2") {
    MooreComplex m = moore(nerve(cyclicGroup(2), 3));
    CHECK(m.complex.objects[0].order == 1);
    CHECK(m.complex.objects[1].order == 2);
    CHECK(m.complex.objects[2].order == 1);
    for (int v : m.complex.d(1).map) CHECK(v == 0);
}

TEST_CASE("homology of the standard fixtures") {
    FiniteGroup s3 = symmetricGroup(3);
    TruncatedSimplicialGroup c = constantSimplicial(s3, 3);
    CHECK(homologyMoore(c, 0).group().order == 6);
    CHECK(isIsomorphic(homologyMoore(c, 0).group(), s3).has_value());
    CHECK(homologyMoore(c, 1).group().order == 1);
    CHECK(homologyMoore(c, 2).group().order == 1);

    TruncatedSimplicialGroup cod = codiscreteSimplicial(cyclicGroup(2), 3);
    for (int n = 0; n <= 2; ++n) CHECK(homologyMoore(cod, n).group().order == 1);

    TruncatedSimplicialGroup nv = nerve(cyclicGroup(2), 3);
    CHECK(homologyMoore(nv, 0).group().order == 1);
    CHECK(homologyMoore(nv, 1).group().order == 2);
    CHECK(homologyMoore(nv, 2).group().order == 1);

    TruncatedSimplicialGroup nv4 = nerve(cyclicGroup(4), 3);
    CHECK(homologyMoore(nv4, 1).group().order == 4);
    CHECK(isIsomorphic(homologyMoore(nv4, 1).group(), cyclicGroup(4)).has_value());

    CHECK_THROWS_AS(homologyMoore(nv, 3), IndexOutOfRange);
}

TEST_CASE("products of simplicial groups multiply levelwise") {
    TruncatedSimplicialGroup p =
        productSimplicial(nerve(cyclicGroup(2), 3), constantSimplicial(cyclicGroup(3), 3));
    CHECK(p.levels[0].order == 3);
    CHECK(p.levels[3].order == 24);
    CHECK(homologyMoore(p, 0).group().order == 3);
    CHECK(homologyMoore(p, 1).group().order == 2);
}

TEST_CASE("simplicial homs must commute with the structure maps") {
    TruncatedSimplicialGroup nv = nerve(cyclicGroup(2), 2);
    std::vector<GroupHom> ids;
    for (const auto& l : nv.levels) ids.push_back(identityHom(l));
    CHECK_NOTHROW(makeSimplicialHom(nv, nv, ids));
    // flipping a level map breaks naturality
    std::vector<GroupHom> bad = ids;
    bad[1] = zeroHom(nv.levels[1], nv.levels[1]);
    CHECK_THROWS_AS(makeSimplicialHom(nv, nv, bad), ValidationError);
}

TEST_CASE("levelwise kernels inherit the simplicial structure") {
    TruncatedSimplicialGroup nv = nerve(cyclicGroup(4), 2);
    TruncatedSimplicialGroup nv2 = nerve(cyclicGroup(2), 2);
    // componentwise reduction mod 2 at each bar level
    std::vector<GroupHom> maps;
    maps.push_back(zeroHom(nv.levels[0], nv2.levels[0]));
    maps.push_back(makeHom(nv.levels[1], nv2.levels[1], {0, 1, 0, 1}));
    {
        std::vector<int> m(16);
        for (int x = 0; x < 16; ++x) m[x] = (x / 4 % 2) * 2 + (x % 4 % 2);
        maps.push_back(makeHom(nv.levels[2], nv2.levels[2], m));
    }
    SimplicialHom p = makeSimplicialHom(nv, nv2, maps);
    SimplicialSubobject k = levelwiseKernel(p);
    CHECK(k.object.levels[0].order == 1);
    CHECK(k.object.levels[1].order == 2);
    CHECK(k.object.levels[2].order == 4);
    CHECK(isLevelwiseSurjective(k.inclusion) == false);
}
