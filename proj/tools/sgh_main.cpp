// Command-line driver: fixture loading, per-object checks, and the full
// verification suite.  Exit codes: 0 ok, 1 a check failed, 2 a fault was
// raised (two provably-equal routes disagreed), 3 usage or I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgh/fixtures.hpp"
#include "sgh/verify.hpp"

namespace {

using namespace sgh;

struct Session {
    FixtureSet fx;
    Limits limits;
    std::uint64_t seed = 0;
    std::string outPath;
    json report;
    int exitCode = 0;

    void bump(int code) { exitCode = std::max(exitCode, code); }

    void flush() {
        if (outPath.empty()) return;
        std::ofstream out(outPath);
        if (!out) {
            std::cerr << "cannot write report to " << outPath << "\n";
            bump(3);
            return;
        }
        out << report.dump(2) << "\n";
    }
};

const TruncatedSimplicialGroup& needSimplicial(Session& s, const std::string& label) {
    const TruncatedSimplicialGroup* a = s.fx.findSimplicial(label);
    if (!a) {
        std::cerr << "unknown simplicial group '" << label << "'\n";
        throw CLI::RuntimeError(3);
    }
    return *a;
}

const SimplicialHom& needSimplicialHom(Session& s, const std::string& label) {
    const SimplicialHom* f = s.fx.findSimplicialHom(label);
    if (!f) {
        std::cerr << "unknown simplicial hom '" << label << "'\n";
        throw CLI::RuntimeError(3);
    }
    return *f;
}

std::string describeGroup(const FiniteGroup& g, const Limits& limits) {
    return groupName(g, limits) + " (order " + std::to_string(g.order) + ")";
}

void cmdGroupCheck(Session& s, const std::vector<std::string>& labels) {
    std::vector<std::string> todo = labels;
    if (todo.empty())
        for (const auto& [label, g] : s.fx.groups) todo.push_back(label);
    json results = json::array();
    for (const auto& label : todo) {
        const FiniteGroup* g = s.fx.findGroup(label);
        if (!g) {
            std::cerr << "unknown group '" << label << "'\n";
            throw CLI::RuntimeError(3);
        }
        std::vector<std::vector<int>> table(g->order, std::vector<int>(g->order));
        for (int a = 0; a < g->order; ++a)
            for (int b = 0; b < g->order; ++b) table[a][b] = g->mul(a, b);
        try {
            validateGroup(table, g->label);
            std::cout << "ok " << label << " (order " << g->order
                      << (g->isAbelian() ? ", abelian" : "") << ")\n";
            results.push_back({{"label", label}, {"verdict", "ok"}, {"order", g->order}});
        } catch (const AxiomViolation& e) {
            std::cout << "FAIL " << label << ": axiom '" << e.axiom << "' (" << e.what() << ")\n";
            results.push_back({{"label", label}, {"verdict", "fail"}, {"axiom", e.axiom}});
            s.bump(1);
        }
    }
    s.report["check"] = "group check";
    s.report["results"] = std::move(results);
}

void cmdSgrpCheck(Session& s, const std::string& label) {
    const TruncatedSimplicialGroup& a = needSimplicial(s, label);
    try {
        validateSimplicial(a);
        std::cout << "ok " << label << " (depth " << a.depth << "; levels";
        for (const auto& l : a.levels) std::cout << " " << l.order;
        std::cout << ")\n";
        s.report = {{"check", "sgrp check"}, {"label", label}, {"verdict", "ok"}};
    } catch (const IdentityViolation& e) {
        std::cout << "FAIL " << label << ": " << e.what() << "\n";
        s.report = {{"check", "sgrp check"}, {"label", label}, {"verdict", "fail"},
                    {"family", e.family}};
        s.bump(1);
    }
}

void cmdSgrpMoore(Session& s, const std::string& label) {
    const TruncatedSimplicialGroup& a = needSimplicial(s, label);
    MooreComplex m = moore(a);
    json degrees = json::array();
    for (int n = 0; n <= m.complex.length(); ++n) {
        std::cout << "N_" << n << " ≅ " << describeGroup(m.complex.objects[n], s.limits);
        if (n >= 1) {
            const GroupHom& d = m.complex.d(n);
            bool zero = std::all_of(d.map.begin(), d.map.end(), [](int v) { return v == 0; });
            std::cout << (zero ? "; d_" + std::to_string(n) + " = 0"
                               : (isBijectiveHom(d) ? "; d_" + std::to_string(n) + " iso" : ""));
        }
        std::cout << "\n";
        degrees.push_back({{"n", n}, {"order", m.complex.objects[n].order}});
    }
    s.report = {{"check", "sgrp moore"}, {"label", label}, {"degrees", std::move(degrees)}};
}

void cmdSgrpHomology(Session& s, const std::string& label, int n) {
    const TruncatedSimplicialGroup& a = needSimplicial(s, label);
    Homology h = homologyMoore(a, n);
    std::cout << "H_" << n << " ≅ " << describeGroup(h.group(), s.limits) << "\n";
    s.report = {{"check", "sgrp homology"},
                {"label", label},
                {"n", n},
                {"order", h.group().order},
                {"name", groupName(h.group(), s.limits)}};
}

void cmdSgrpNabla(Session& s, const std::string& label, int n) {
    const TruncatedSimplicialGroup& a = needSimplicial(s, label);
    TupleSubgroup nab = nabla(a, n, s.limits);
    std::cout << "nabla_" << n << " has order " << nab.carrier.order << " inside A_" << n << "^"
              << nab.arity;
    json j = {{"check", "sgrp nabla"}, {"label", label}, {"n", n},
              {"order", nab.carrier.order}, {"arity", nab.arity}};
    if (n <= a.depth - 1) {
        GroupHom bd = boundaryIntoNabla(a, n, nab);
        int imageOrder = image(bd).carrier.order;
        bool surj = (imageOrder == nab.carrier.order);
        std::cout << "; boundary image order " << imageOrder << (surj ? " (surjective)" : "");
        j["boundaryImageOrder"] = imageOrder;
        j["boundarySurjective"] = surj;
    }
    std::cout << "\n";
    s.report = std::move(j);
}

void cmdSgrpAcyclic(Session& s, const std::string& label) {
    const TruncatedSimplicialGroup& a = needSimplicial(s, label);
    AcyclicityReport rep = isAcyclic(a, s.limits);
    const std::string range = "[0," + std::to_string(a.depth - 1) + "]";
    if (rep.fault) {
        std::cout << "FAULT: acyclicity routes disagree on " << label << "\n";
        s.bump(2);
    } else if (rep.acyclic) {
        std::cout << "acyclic on range " << range << " (routes agree)\n";
    } else {
        std::cout << "not acyclic on range " << range << " (routes agree); fails at n =";
        for (const auto& d : rep.degrees)
            if (!d.boundarySurjective) std::cout << " " << d.n;
        std::cout << "\n";
    }
    json degrees = json::array();
    json witnesses = json::array();
    json faults = json::array();
    for (const auto& d : rep.degrees) {
        degrees.push_back({{"n", d.n},
                           {"boundarySurjective", d.boundarySurjective},
                           {"homologyTrivial", d.homologyTrivial}});
        if (!d.boundarySurjective) witnesses.push_back({{"n", d.n}, {"route", "boundary"}});
        if (d.boundarySurjective != d.homologyTrivial)
            faults.push_back({{"n", d.n}, {"reason", "routes disagree"}});
    }
    s.report = {{"check", "sgrp acyclic"},      {"label", label},
                {"range", {0, a.depth - 1}},    {"verdict", rep.acyclic},
                {"witnesses", std::move(witnesses)}, {"faults", std::move(faults)},
                {"degrees", std::move(degrees)}};
}

void cmdSgrpKan(Session& s, const std::string& label) {
    const TruncatedSimplicialGroup& a = needSimplicial(s, label);
    KanReport rep = isKan(a, s.limits);
    if (rep.kan) {
        std::cout << "Kan: all " << rep.hornsChecked << " horns fill (levels [1,"
                  << a.depth << "])\n";
    } else {
        std::cout << "FAIL: unfilled (" << rep.unfilled->level << "," << rep.unfilled->missing
                  << ")-horn found\n";
        s.bump(1);
    }
    json witnesses = json::array();
    if (rep.unfilled)
        witnesses.push_back({{"level", rep.unfilled->level},
                             {"missing", rep.unfilled->missing},
                             {"entries", rep.unfilled->entries}});
    s.report = {{"check", "sgrp kan"},        {"label", label},
                {"range", {1, a.depth}},      {"verdict", rep.kan},
                {"witnesses", std::move(witnesses)}, {"faults", json::array()},
                {"horns", rep.hornsChecked},  {"filled", rep.hornsFilled}};
}

void cmdMapFibration(Session& s, const std::string& label) {
    const SimplicialHom& f = needSimplicialHom(s, label);
    FibrationReport rep = isKanFibration(f, s.limits);
    std::cout << (rep.fibration ? "Kan fibration" : "not a Kan fibration") << " ("
              << rep.lifted << "/" << rep.instances << " instances lifted)\n";
    json witnesses = json::array();
    if (rep.witnessHorn)
        witnesses.push_back({{"level", rep.witnessHorn->level},
                             {"missing", rep.witnessHorn->missing},
                             {"entries", rep.witnessHorn->entries},
                             {"target", rep.witnessTarget}});
    s.report = {{"check", "map fibration"},   {"label", label},
                {"range", {1, f.dom.depth}},  {"verdict", rep.fibration},
                {"witnesses", std::move(witnesses)}, {"faults", json::array()},
                {"instances", rep.instances}, {"lifted", rep.lifted}};
}

void cmdMapTrivialFibration(Session& s, const std::string& label) {
    const SimplicialHom& f = needSimplicialHom(s, label);
    AcyclicFibrationReport rep = isAcyclicFibration(f, s.limits);
    std::cout << (rep.verdict ? "acyclic fibration" : "not an acyclic fibration")
              << " (levelwise surjective: " << (rep.levelwiseSurjective ? "yes" : "no")
              << ", squares: " << (rep.squaresAll ? "all regular pushouts" : "not all") << ")\n";
    if (!rep.crosscheckAgrees) {
        std::cout << "FAULT: characterization disagrees with KanFibration && homologyIso\n";
        s.bump(2);
    }
    json faults = json::array();
    if (!rep.crosscheckAgrees) faults.push_back({{"reason", "characterizations disagree"}});
    s.report = {{"check", "map trivial-fibration"}, {"label", label},
                {"range", {0, f.dom.depth - 1}},    {"verdict", rep.verdict},
                {"witnesses", json::array()},       {"faults", std::move(faults)},
                {"levelwiseSurjective", rep.levelwiseSurjective},
                {"squaresAll", rep.squaresAll}};
}

void cmdMapWeq(Session& s, const std::string& label) {
    const SimplicialHom& f = needSimplicialHom(s, label);
    WeqReport rep = weakEquivalenceVerdict(f, s.limits);
    const std::string range = "[0," + std::to_string(f.dom.depth - 1) + "]";
    std::cout << (rep.verdict ? "weak equivalence" : "not a weak equivalence") << " on range "
              << range;
    if (rep.piRouteRan)
        std::cout << " (pi_n route " << (rep.piRouteAgrees ? "agrees" : "DISAGREES") << ")";
    std::cout << "\n";
    if (rep.piRouteRan && !rep.piRouteAgrees) {
        std::cout << "FAULT: homotopy-group route disagrees with the homology route\n";
        s.bump(2);
    }
    json perDegree = json::array();
    json witnesses = json::array();
    for (size_t n = 0; n < rep.homology.isoAt.size(); ++n) {
        perDegree.push_back({{"n", n}, {"iso", static_cast<bool>(rep.homology.isoAt[n])}});
        if (!rep.homology.isoAt[n]) witnesses.push_back({{"n", n}, {"route", "homology"}});
    }
    json faults = json::array();
    if (rep.piRouteRan && !rep.piRouteAgrees) faults.push_back({{"reason", "pi route disagrees"}});
    s.report = {{"check", "map weq"},              {"label", label},
                {"range", {0, f.dom.depth - 1}},   {"verdict", rep.verdict},
                {"witnesses", std::move(witnesses)}, {"faults", std::move(faults)},
                {"perDegree", std::move(perDegree)}};
}

void cmdSeqLes(Session& s, const std::string& label) {
    const SimplicialSES* ses = s.fx.findSES(label);
    if (!ses) {
        std::cerr << "unknown short exact sequence '" << label << "'\n";
        throw CLI::RuntimeError(3);
    }
    try {
        LESReport rep = longExactSequence(*ses);
        for (size_t i = 0; i < rep.les.nodeGroups.size(); ++i) {
            std::cout << rep.les.nodeLabels[i] << " ≅ "
                      << describeGroup(rep.les.nodeGroups[i], s.limits);
            if (i + 1 < rep.les.nodeGroups.size()) std::cout << "  ->";
            std::cout << "\n";
        }
        std::cout << (rep.allExactInterior ? "exact at every interior node"
                                           : "NOT exact at some interior node")
                  << "; H_0 tail " << (rep.tailSurjective ? "surjective" : "NOT surjective")
                  << "; delta " << (rep.deltaChoiceIndependent ? "choice-independent"
                                                               : "NOT choice-independent")
                  << "; verified simplicial range [" << rep.verifiedLo << "," << rep.verifiedHi
                  << "]\n";
        if (!rep.allExactInterior || !rep.tailSurjective) s.bump(1);
        if (!rep.deltaChoiceIndependent) s.bump(2);
        json nodes = json::array();
        for (size_t i = 0; i < rep.les.nodeGroups.size(); ++i)
            nodes.push_back({{"node", rep.les.nodeLabels[i]},
                             {"order", rep.les.nodeGroups[i].order}});
        s.report = {{"check", "seq les"}, {"label", label}, {"nodes", std::move(nodes)},
                    {"exact", rep.allExactInterior}, {"tailSurjective", rep.tailSurjective},
                    {"range", {rep.verifiedLo, rep.verifiedHi}}};
    } catch (const MooreSurjectivityFailure& e) {
        std::cout << "FAULT: " << e.what() << "\n";
        s.report = {{"check", "seq les"}, {"label", label}, {"fault", e.what()}};
        s.bump(2);
    }
}

void cmdVerifyAll(Session& s) {
    SuiteReport rep = runVerifyAll(s.fx, s.seed, s.limits);
    for (const auto& c : rep.checks) {
        std::cout << (c.passed ? "PASS " : (c.fault ? "FAULT" : "FAIL ")) << " " << c.name;
        if (!c.range.empty()) std::cout << " [" << c.range << "]";
        std::cout << " - " << c.detail << " (" << c.instances << " instances, "
                  << static_cast<long long>(c.millis) << " ms)\n";
    }
    std::cout << (rep.exitStatus() == 0 ? "all checks passed"
                                        : "verification FAILED with exit status " +
                                              std::to_string(rep.exitStatus()))
              << "\n";
    s.report = toJson(rep);
    s.bump(rep.exitStatus());
}

}  // namespace

int main(int argc, char** argv) {
    using namespace sgh;
    CLI::App app{"executable simplicial homotopy over finite groups"};
    app.require_subcommand(1);
    app.fallthrough();

    Session s;
    std::string fixturesPath;
    int depth = 3;
    long long budget = defaultLimits().nodeBudget;
    app.add_option("--fixtures", fixturesPath, "directory of JSON fixtures to merge in");
    app.add_option("--out", s.outPath, "write a JSON report to this path");
    app.add_option("--depth", depth, "depth of the generated builtin fixtures")
        ->check(CLI::Range(1, 4));
    app.add_option("--seed", s.seed, "seed for randomized fixture generation");
    app.add_option("--budget", budget, "node budget for enumerative searches");

    int nIndex = 0;
    auto* groupCmd = app.add_subcommand("group", "finite-group operations");
    auto* groupCheck = groupCmd->add_subcommand("check", "validate group axioms");
    std::vector<std::string> groupLabels;
    groupCheck->add_option("labels", groupLabels, "group labels (all when omitted)");

    auto* sgrp = app.add_subcommand("sgrp", "simplicial-group operations");
    std::string sgrpLabel;
    auto* sgrpCheck = sgrp->add_subcommand("check", "verify the simplicial identities");
    sgrpCheck->add_option("label", sgrpLabel)->required();
    auto* sgrpMoore = sgrp->add_subcommand("moore", "Moore complex degrees");
    sgrpMoore->add_option("label", sgrpLabel)->required();
    auto* sgrpHomology = sgrp->add_subcommand("homology", "homology at a degree");
    sgrpHomology->add_option("--n", nIndex, "degree")->required();
    sgrpHomology->add_option("label", sgrpLabel)->required();
    auto* sgrpNabla = sgrp->add_subcommand("nabla", "cycle object at a degree");
    sgrpNabla->add_option("--n", nIndex, "degree")->required();
    sgrpNabla->add_option("label", sgrpLabel)->required();
    auto* sgrpAcyclic = sgrp->add_subcommand("acyclic", "two-route acyclicity verdict");
    sgrpAcyclic->add_option("label", sgrpLabel)->required();
    auto* sgrpKan = sgrp->add_subcommand("kan", "exhaustive horn-filling check");
    sgrpKan->add_option("label", sgrpLabel)->required();

    auto* mapCmd = app.add_subcommand("map", "simplicial-hom operations");
    std::string mapLabel;
    auto* mapFib = mapCmd->add_subcommand("fibration", "Kan-fibration lifting test");
    mapFib->add_option("label", mapLabel)->required();
    auto* mapTriv = mapCmd->add_subcommand("trivial-fibration", "acyclic-fibration verdict");
    mapTriv->add_option("label", mapLabel)->required();
    auto* mapWeq = mapCmd->add_subcommand("weq", "weak-equivalence verdict");
    mapWeq->add_option("label", mapLabel)->required();

    auto* seqCmd = app.add_subcommand("seq", "short-exact-sequence operations");
    std::string seqLabel;
    auto* seqLes = seqCmd->add_subcommand("les", "long exact homology sequence");
    seqLes->add_option("label", seqLabel)->required();

    auto* verifyCmd = app.add_subcommand("verify", "verification suites");
    auto* verifyAll = verifyCmd->add_subcommand("all", "run every invariant and criterion");

    CLI11_PARSE(app, argc, argv);

    try {
        s.limits = defaultLimits();
        s.limits.nodeBudget = budget;
        s.fx = builtinFixtures(depth, s.limits);
        if (!fixturesPath.empty()) loadFixturesInto(s.fx, fixturesPath, s.limits);

        if (*groupCheck) cmdGroupCheck(s, groupLabels);
        if (*sgrpCheck) cmdSgrpCheck(s, sgrpLabel);
        if (*sgrpMoore) cmdSgrpMoore(s, sgrpLabel);
        if (*sgrpHomology) cmdSgrpHomology(s, sgrpLabel, nIndex);
        if (*sgrpNabla) cmdSgrpNabla(s, sgrpLabel, nIndex);
        if (*sgrpAcyclic) cmdSgrpAcyclic(s, sgrpLabel);
        if (*sgrpKan) cmdSgrpKan(s, sgrpLabel);
        if (*mapFib) cmdMapFibration(s, mapLabel);
        if (*mapTriv) cmdMapTrivialFibration(s, mapLabel);
        if (*mapWeq) cmdMapWeq(s, mapLabel);
        if (*seqLes) cmdSeqLes(s, seqLabel);
        if (*verifyAll) cmdVerifyAll(s);
    } catch (const CLI::RuntimeError& e) {
        return e.get_exit_code();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    s.flush();
    return s.exitCode;
}
