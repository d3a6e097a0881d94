#include <catch2/catch_amalgamated.hpp>

#include "sgh/fixtures.hpp"
#include "sgh/homotopy.hpp"
#include "sgh/iso.hpp"

using namespace sgh;

namespace {

const FixtureSet& fixtures() {
    static const FixtureSet fx = builtinFixtures(3);
    return fx;
}

}  // namespace

TEST_CASE("every fixture is Kan") {
    for (const auto& [label, a] : fixtures().simplicialGroups) {
        KanReport rep = isKan(a);
        INFO(label);
        CHECK(rep.kan);
        CHECK(rep.hornsChecked == rep.hornsFilled);
        CHECK(rep.hornsChecked > 0);
    }
}

TEST_CASE("identity homs and surjections are Kan fibrations") {
    CHECK(isKanFibration(*fixtures().findSimplicialHom("idNerveC2")).fibration);
    CHECK(isKanFibration(*fixtures().findSimplicialHom("codiscreteC2toPoint")).fibration);
    CHECK(isKanFibration(*fixtures().findSimplicialHom("nerveC4toNerveC2")).fibration);
}

TEST_CASE("inclusions of discrete objects lift every compatible instance") {
    // compatibility pins the target simplex into the image component, so the
    // non-surjective point inclusion is still a fibration
    FibrationReport rep = isKanFibration(*fixtures().findSimplicialHom("pointIntoConstantC2"));
    CHECK(rep.fibration);
    // its H_0 map is not surjective, so the epi bridge does not apply
    CHECK_FALSE(isSurjective(inducedHomologyMap(
        *fixtures().findSimplicialHom("pointIntoConstantC2"), 0)));
}

TEST_CASE("the diagonal into the codiscrete object is not a fibration") {
    FibrationReport rep = isKanFibration(*fixtures().findSimplicialHom("diagonalConstC2"));
    CHECK_FALSE(rep.fibration);
    REQUIRE(rep.witnessHorn.has_value());
    CHECK(rep.witnessHorn->level == 1);
}

TEST_CASE("regular pushout routes on the identity and degenerate squares") {
    FiniteGroup c2 = cyclicGroup(2);
    CommutingSquare idSq{identityHom(c2), identityHom(c2), identityHom(c2), identityHom(c2)};
    CHECK(isRegularPushout(idSq));
    CHECK(regularPushoutViaKernels(idSq));

    FiniteGroup triv = trivialGroup();
    FiniteGroup g = symmetricGroup(3);
    CommutingSquare degenerate{zeroHom(triv, triv), zeroHom(g, triv), zeroHom(triv, g),
                               identityHom(triv)};
    CHECK_FALSE(isRegularPushout(degenerate));
    CHECK_FALSE(regularPushoutViaKernels(degenerate));
}

TEST_CASE("squares of a surjection with acyclic kernel are regular pushouts") {
    const SimplicialHom& p = *fixtures().findSimplicialHom("codiscreteC4toC2");
    for (int n = 0; n <= p.dom.depth - 1; ++n) {
        SquareVerdict v = squareVerdictOf(boundarySquareAt(p, n));
        CHECK(v.regularPushout);
        CHECK(v.kernelMapSurjective);
    }
}

TEST_CASE("acyclicity of the three standard fixtures") {
    AcyclicityReport cod = isAcyclic(*fixtures().findSimplicial("codiscreteC2"));
    CHECK(cod.acyclic);
    CHECK_FALSE(cod.fault);

    AcyclicityReport cst = isAcyclic(*fixtures().findSimplicial("constantC2"));
    CHECK_FALSE(cst.acyclic);
    CHECK_FALSE(cst.fault);
    CHECK_FALSE(cst.degrees[0].boundarySurjective);

    AcyclicityReport nv = isAcyclic(*fixtures().findSimplicial("nerveC2"));
    CHECK_FALSE(nv.acyclic);
    CHECK_FALSE(nv.fault);
    CHECK(nv.degrees[0].boundarySurjective);
    CHECK_FALSE(nv.degrees[1].boundarySurjective);
    CHECK(nv.degrees[2].boundarySurjective);
}

TEST_CASE("homology isomorphism verdicts") {
    CHECK(isHomologyIso(*fixtures().findSimplicialHom("idNerveC2")).all);
    CHECK(isHomologyIso(*fixtures().findSimplicialHom("codiscreteC2toPoint")).all);
    HomologyIsoReport rep = isHomologyIso(*fixtures().findSimplicialHom("nerveC4toNerveC2"));
    CHECK_FALSE(rep.all);
    CHECK(rep.isoAt[0]);
    CHECK_FALSE(rep.isoAt[1]);
}

TEST_CASE("the triple characterization agrees globally and on the kernel side") {
    for (const char* label : {"codiscreteC2toPoint", "nerveC4toNerveC2", "codiscreteC4toC2",
                              "faceZeroNerveC2"}) {
        INFO(label);
        TripleCheckReport rep =
            regularEpiHomologyIsoCheck(*fixtures().findSimplicialHom(label));
        CHECK(rep.globalAgree);
        CHECK(rep.kernelRoutesAgreeDegreewise);
    }
    CHECK_THROWS_AS(
        regularEpiHomologyIsoCheck(*fixtures().findSimplicialHom("pointIntoConstantC2")),
        ShapeMismatch);
}

TEST_CASE("acyclic fibration verdicts with their cross-checks") {
    AcyclicFibrationReport idRep =
        isAcyclicFibration(*fixtures().findSimplicialHom("idNerveC2"));
    CHECK(idRep.verdict);
    CHECK(idRep.crosscheckAgrees);

    AcyclicFibrationReport proj =
        isAcyclicFibration(*fixtures().findSimplicialHom("codiscreteC2toPoint"));
    CHECK(proj.verdict);
    CHECK(proj.crosscheckAgrees);

    AcyclicFibrationReport quo =
        isAcyclicFibration(*fixtures().findSimplicialHom("nerveC4toNerveC2"));
    CHECK_FALSE(quo.verdict);
    CHECK(quo.crosscheckAgrees);

    AcyclicFibrationReport incl =
        isAcyclicFibration(*fixtures().findSimplicialHom("pointIntoConstantC2"));
    CHECK_FALSE(incl.verdict);
    CHECK(incl.crosscheckAgrees);
}

TEST_CASE("homotopy sets at the identity basepoint") {
    const TruncatedSimplicialGroup& nv = *fixtures().findSimplicial("nerveC2");
    HomotopyPartition p1 = homotopySet(nv, 0, 1);
    CHECK(p1.relationIsEquivalence);
    CHECK(p1.classes.size() == 2);
    PiGroup pi1 = piN(nv, 1);
    CHECK(pi1.group().order == 2);

    const TruncatedSimplicialGroup& cod = *fixtures().findSimplicial("codiscreteC2");
    CHECK(homotopySet(cod, 0, 1).classes.size() == 1);

    // every element of a constant object is its own path component
    const TruncatedSimplicialGroup& cst = *fixtures().findSimplicial("constantS3");
    HomotopyPartition p0 = homotopySet(cst, 0, 0);
    CHECK(p0.classes.size() == 6);
    for (const auto& cls : p0.classes) CHECK(cls.size() == 1);
    CHECK_THROWS_AS(homotopySet(cst, 99, 0), IndexOutOfRange);
    CHECK_THROWS_AS(homotopySet(cst, 0, 3), IndexOutOfRange);
}

TEST_CASE("homotopy sets work at non-identity basepoints") {
    const TruncatedSimplicialGroup& cst = *fixtures().findSimplicial("constantS3");
    HomotopyPartition p = homotopySet(cst, 2, 1);
    CHECK(p.relationIsEquivalence);
    CHECK(p.classes.size() == 1);  // only the degenerate simplex sits over the basepoint
}

TEST_CASE("the long exact sequence of the nerve extension") {
    const SimplicialSES& ses = *fixtures().findSES("sesNerveC2C4C2");
    LESReport rep = longExactSequence(ses);
    CHECK(rep.allExactInterior);
    CHECK(rep.tailSurjective);
    CHECK(rep.deltaChoiceIndependent);
    REQUIRE(rep.les.nodeGroups.size() == 12);
    // the only nontrivial row is H_1: C2 -> C4 -> C2
    CHECK(rep.les.nodeGroups[6].order == 2);
    CHECK(rep.les.nodeGroups[7].order == 4);
    CHECK(rep.les.nodeGroups[8].order == 2);
    for (size_t i = 0; i < rep.les.nodeGroups.size(); ++i)
        if (i < 6 || i > 8) CHECK(rep.les.nodeGroups[i].order == 1);
}

TEST_CASE("the LES of a constant extension degenerates to the group extension") {
    LESReport rep = longExactSequence(*fixtures().findSES("sesConstantC3S3C2"));
    CHECK(rep.allExactInterior);
    CHECK(rep.tailSurjective);
    size_t last = rep.les.nodeGroups.size();
    CHECK(rep.les.nodeGroups[last - 3].order == 3);
    CHECK(rep.les.nodeGroups[last - 2].order == 6);
    CHECK(rep.les.nodeGroups[last - 1].order == 2);
}

TEST_CASE("the defining kernel sequence of Lambda is exact") {
    LESReport rep = longExactSequence(*fixtures().findSES("sesLambdaCodiscreteC2"));
    CHECK(rep.allExactInterior);
    CHECK(rep.tailSurjective);
    CHECK(rep.deltaChoiceIndependent);
}

TEST_CASE("weak equivalence verdicts across both routes") {
    WeqReport idRep = weakEquivalenceVerdict(*fixtures().findSimplicialHom("idNerveC2"));
    CHECK(idRep.verdict);
    CHECK(idRep.piRouteRan);
    CHECK(idRep.piRouteAgrees);

    WeqReport proj = weakEquivalenceVerdict(*fixtures().findSimplicialHom("codiscreteC2toPoint"));
    CHECK(proj.verdict);
    CHECK(proj.piRouteAgrees);

    WeqReport quo = weakEquivalenceVerdict(*fixtures().findSimplicialHom("nerveC4toNerveC2"));
    CHECK_FALSE(quo.verdict);
    CHECK(quo.piRouteAgrees);
}
