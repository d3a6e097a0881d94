#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "sgh/fixtures.hpp"
#include "sgh/verify.hpp"

using namespace sgh;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("sgh_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    void write(const std::string& name, const std::string& content) const {
        std::ofstream out(path / name);
        out << content;
    }
};

json withoutTimings(const SuiteReport& rep) {
    json j = toJson(rep);
    for (auto& c : j["checks"]) c.erase("millis");
    return j;
}

}  // namespace

TEST_CASE("groups, homs and simplicial groups survive a JSON round trip") {
    FixtureSet fx = builtinFixtures(3);
    FixtureSet scratch;
    for (const char* label : {"S3", "Q8", "C12"}) {
        json j = toJson(*fx.findGroup(label));
        FiniteGroup back = groupFromJson(j, scratch, label);
        CHECK(back == *fx.findGroup(label));
        CHECK(toJson(back).dump() == j.dump());
    }
    json jh = toJson(*fx.findHom("S3toC2"));
    CHECK(jh["dom"] == "S3");
    CHECK(jh["cod"] == "C2");
    GroupHom hBack = homFromJson(jh, fx, "hom");
    CHECK(hBack.map == fx.findHom("S3toC2")->map);

    json js = toJson(*fx.findSimplicial("nerveC2"));
    TruncatedSimplicialGroup sBack = simplicialFromJson(js, scratch, "simp");
    CHECK(toJson(sBack).dump() == js.dump());
}

TEST_CASE("loadFixtures reads a directory and resolves labels across files") {
    TempDir dir;
    dir.write("01_groups.json", R"({
      "groups": [
        {"order": 2, "table": [[0,1],[1,0]], "label": "Z2"},
        {"order": 4, "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]], "label": "Z4"}
      ],
      "homs": [
        {"dom": "Z4", "cod": "Z2", "map": [0,1,0,1], "label": "mod2"}
      ]
    })");
    dir.write("02_simplicial.json", R"({
      "simplicialGroups": [
        {"generator": "nerve", "group": "Z2", "depth": 2, "label": "barZ2"},
        {"depth": 1,
         "levels": [{"order": 2, "table": [[0,1],[1,0]]}, {"order": 2, "table": [[0,1],[1,0]]}],
         "faces": [[[0,1],[0,1]]],
         "degeneracies": [[[0,1]]],
         "label": "handRolled"}
      ]
    })");
    dir.write("03_maps.json", R"({
      "simplicialHoms": [
        {"dom": "handRolled", "cod": "handRolled", "levelMaps": [[0,1],[0,1]],
         "label": "idHand"}
      ],
      "sesList": [
        {"fromProjection": "idHand", "label": "sesIdHand"}
      ]
    })");
    FixtureSet fx = loadFixtures(dir.path.string());
    REQUIRE(fx.findGroup("Z2") != nullptr);
    REQUIRE(fx.findHom("mod2") != nullptr);
    REQUIRE(fx.findSimplicial("barZ2") != nullptr);
    CHECK(fx.findSimplicial("barZ2")->levels[2].order == 4);
    CHECK(fx.findSimplicial("handRolled")->depth == 1);
    REQUIRE(fx.findSimplicialHom("idHand") != nullptr);
    REQUIRE(fx.findSES("sesIdHand") != nullptr);
    CHECK(fx.findSES("sesIdHand")->sub.levels[0].order == 1);
}

TEST_CASE("loadFixtures reports broken tables with file context") {
    TempDir dir;
    dir.write("bad.json", R"({"groups": [{"order": 2, "table": [[0,1],[1,1]], "label": "bad"}]})");
    try {
        loadFixtures(dir.path.string());
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        std::string what = e.what();
        CHECK(what.find("bad.json") != std::string::npos);
        CHECK(what.find("AxiomViolation") != std::string::npos);
    }
}

TEST_CASE("loadFixtures rejects dangling labels and malformed JSON") {
    TempDir dir;
    dir.write("dangle.json", R"({"homs": [{"dom": "nowhere", "cod": "Z2", "map": [0],
                                          "label": "ghost"}]})");
    CHECK_THROWS_AS(loadFixtures(dir.path.string()), ValidationError);
    TempDir dir2;
    dir2.write("syntax.json", "{ not json");
    CHECK_THROWS_AS(loadFixtures(dir2.path.string()), ParseError);
    CHECK_THROWS_AS(loadFixtures("/no/such/path/exists"), ParseError);
}

TEST_CASE("duplicate labels across files are rejected") {
    TempDir dir;
    dir.write("a.json", R"({"groups": [{"order": 1, "table": [[0]], "label": "one"}]})");
    dir.write("b.json", R"({"groups": [{"order": 1, "table": [[0]], "label": "one"}]})");
    CHECK_THROWS_AS(loadFixtures(dir.path.string()), ValidationError);
}

TEST_CASE("chain complexes and their exact sequences round-trip through JSON") {
    FixtureSet scratch;
    FiniteGroup c4 = cyclicGroup(4);
    GroupHom twice = makeHom(c4, c4, {0, 2, 0, 2});
    ProperChainComplex cx = makeComplex({c4, c4, c4}, {twice, twice});
    json j = toJson(cx);
    ProperChainComplex back = complexFromJson(j, scratch, "complex");
    CHECK(toJson(back).dump() == j.dump());
    CHECK(back.length() == 2);
    CHECK(homologyAt(back, 0).group().order == 2);

    FiniteGroup c2 = cyclicGroup(2);
    FiniteGroup triv = trivialGroup();
    ComplexSES ses{makeComplex({c2, triv}, {zeroHom(triv, c2)}),
                   makeComplex({c2, c2}, {identityHom(c2)}),
                   makeComplex({triv, c2}, {zeroHom(c2, triv)}),
                   {identityHom(c2), zeroHom(triv, c2)},
                   {zeroHom(c2, triv), identityHom(c2)}};
    json js = toJson(ses);
    ComplexSES sesBack = complexSESFromJson(js, scratch, "ses");
    CHECK(toJson(sesBack).dump() == js.dump());
    CHECK(snakeDelta(sesBack, 1).map == std::vector<int>{0, 1});
}

TEST_CASE("homs parse with inline domain and codomain groups") {
    FixtureSet scratch;
    json j = {{"dom", {{"order", 2}, {"table", {{0, 1}, {1, 0}}}}},
              {"cod", {{"order", 4}, {"table", {{0, 1, 2, 3}, {1, 2, 3, 0},
                                                {2, 3, 0, 1}, {3, 0, 1, 2}}}}},
              {"map", {0, 2}}};
    GroupHom f = homFromJson(j, scratch, "inline hom");
    CHECK(f.dom.order == 2);
    CHECK(f.cod.order == 4);
    CHECK(isInjective(f));
}

TEST_CASE("the verification suite is deterministic across runs") {
    FixtureSet fx = builtinFixtures(3);
    Limits limits;
    SuiteReport first = runVerifyAll(fx, 0, limits);
    SuiteReport second = runVerifyAll(fx, 0, limits);
    CHECK(withoutTimings(first).dump() == withoutTimings(second).dump());
    CHECK(first.exitStatus() == 0);
}

TEST_CASE("the verification suite reacts to the seed without changing verdicts") {
    FixtureSet fx = builtinFixtures(3);
    Limits limits;
    SuiteReport a = runVerifyAll(fx, 7, limits);
    CHECK(a.exitStatus() == 0);
}
