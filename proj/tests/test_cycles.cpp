#include <catch2/catch_amalgamated.hpp>

#include "sgh/cycles.hpp"
#include "sgh/iso.hpp"

using namespace sgh;

TEST_CASE("nabla_0 is the square of the bottom level") {
    TupleSubgroup n0 = nabla(constantSimplicial(symmetricGroup(3), 2), 0);
    CHECK(n0.arity == 2);
    CHECK(n0.carrier.order == 36);
}

TEST_CASE("nabla_1 of the nerve of C2 is unconstrained") {
    TruncatedSimplicialGroup nv = nerve(cyclicGroup(2), 3);
    TupleSubgroup n1 = nabla(nv, 1);
    CHECK(n1.carrier.order == 8);  // all of A_1^3, constraints land in A_0 = 0
    GroupHom bd = boundaryIntoNabla(nv, 1, n1);
    CHECK(image(bd).carrier.order == 4);
    CHECK_FALSE(isSurjective(bd));
}

TEST_CASE("nabla_1 of a constant object collapses to the diagonal") {
    TupleSubgroup n1 = nabla(constantSimplicial(cyclicGroup(2), 2), 1);
    CHECK(n1.carrier.order == 2);
    for (const auto& t : n1.tuples) {
        CHECK(t[0] == t[1]);
        CHECK(t[1] == t[2]);
    }
}

TEST_CASE("the boundary of the codiscrete object hits every cycle") {
    TruncatedSimplicialGroup cod = codiscreteSimplicial(cyclicGroup(2), 3);
    for (int n = 0; n <= 2; ++n) {
        TupleSubgroup nab = nabla(cod, n);
        CHECK(isSurjective(boundaryIntoNabla(cod, n, nab)));
    }
}

TEST_CASE("nabla enumeration respects the node budget") {
    Limits tiny;
    tiny.nodeBudget = 3;
    CHECK_THROWS_AS(nabla(codiscreteSimplicial(cyclicGroup(2), 3), 2, tiny), EnumerationCap);
}

TEST_CASE("the tuple carrier agrees with the literal subobject of the power") {
    TruncatedSimplicialGroup nv = nerve(cyclicGroup(2), 3);
    TupleSubgroup n1 = nabla(nv, 1);
    Embedding emb = n1.toEmbedding();
    CHECK(emb.carrier.order == n1.carrier.order);
    CHECK(emb.carrier.table == n1.carrier.table);
}

TEST_CASE("cycle and almost-cycle subobjects at low degrees") {
    TruncatedSimplicialGroup nv = nerve(cyclicGroup(2), 3);
    CHECK(zObject(nv, 0).carrier.order == 1);   // A_0 is trivial
    CHECK(zObject(nv, 1).carrier.order == 2);   // both faces land in 0
    CHECK(sObject(nv, 1).carrier.order == 2);   // S_1 = A_1
    CHECK(sObject(nv, 2).carrier.order == 2);   // kernel of d_0 alone
    TruncatedSimplicialGroup cod = codiscreteSimplicial(cyclicGroup(2), 3);
    CHECK(zObject(cod, 1).carrier.order == 1);
    CHECK(sObject(cod, 2).carrier.order == 2);
}

TEST_CASE("coequalizer-route homology matches the Moore route on fixtures") {
    for (const TruncatedSimplicialGroup& a :
         {nerve(cyclicGroup(2), 3), nerve(cyclicGroup(4), 3),
          codiscreteSimplicial(cyclicGroup(2), 3), constantSimplicial(symmetricGroup(3), 3)}) {
        for (int n = 0; n <= a.depth - 1; ++n) {
            CoeqHomology hc = homologyCoequalizer(a, n);
            CHECK(hc.sectionVerified);
            CHECK(hc.group().order == homologyMoore(a, n).group().order);
        }
    }
}

TEST_CASE("the coequalizer route at degree zero is Coeq of the bottom faces") {
    TruncatedSimplicialGroup c = constantSimplicial(symmetricGroup(3), 2);
    CoeqHomology h0 = homologyCoequalizer(c, 0);
    QuotientPresentation coeq = coequalizerPair(c.face(1, 0), c.face(1, 1));
    CHECK(h0.group().order == coeq.quotient().order);
    CHECK(isIsomorphic(h0.group(), coeq.quotient()).has_value());
}

TEST_CASE("fork check on the projection fork of C2 x C2") {
    FiniteGroup c2 = cyclicGroup(2);
    ProductGroup gg = product({c2, c2});
    std::vector<int> diag(2);
    for (int x = 0; x < 2; ++x) diag[x] = gg.indexOf({x, x});
    ReflexiveFork fork{gg.projections[0], gg.projections[1], GroupHom{c2, gg.group, diag},
                       zeroHom(c2, trivialGroup())};
    auto [coeq, cok] = forkCheck(fork);
    CHECK(coeq);
    CHECK(cok);
}

TEST_CASE("fork check on the identity fork") {
    FiniteGroup c2 = cyclicGroup(2);
    ReflexiveFork fork{identityHom(c2), identityHom(c2), identityHom(c2), identityHom(c2)};
    auto [coeq, cok] = forkCheck(fork);
    CHECK(coeq);
    CHECK(cok);
}

TEST_CASE("fork check rejects a wrong augmentation on both sides") {
    TruncatedSimplicialGroup nv = nerve(cyclicGroup(2), 2);
    ReflexiveFork fork{nv.face(1, 0), nv.face(1, 1), nv.degeneracy(0, 0),
                       zeroHom(trivialGroup(), cyclicGroup(2))};
    auto [coeq, cok] = forkCheck(fork);
    CHECK_FALSE(coeq);
    CHECK_FALSE(cok);
}

TEST_CASE("fork check guards its exponential search") {
    FiniteGroup big = cyclicGroup(16);
    ReflexiveFork fork{identityHom(big), identityHom(big), identityHom(big), identityHom(big)};
    CHECK_THROWS_AS(forkCheck(fork), EnumerationCap);
    ReflexiveFork bent{identityHom(big), identityHom(big), identityHom(cyclicGroup(4)),
                       identityHom(big)};
    CHECK_THROWS_AS(forkCheck(bent), ShapeMismatch);
}
