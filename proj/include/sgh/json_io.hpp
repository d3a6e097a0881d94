#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sgh/chain.hpp"
#include "sgh/errors.hpp"
#include "sgh/group.hpp"
#include "sgh/hom.hpp"
#include "sgh/homotopy.hpp"
#include "sgh/iso.hpp"
#include "sgh/limits.hpp"
#include "sgh/simplicial.hpp"

namespace sgh {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// serialization (canonical key order, 0-based element indices)
// ---------------------------------------------------------------------------

inline json toJson(const FiniteGroup& g) {
    json j;
    j["order"] = g.order;
    json rows = json::array();
    for (int a = 0; a < g.order; ++a) {
        json row = json::array();
        for (int b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    if (!g.label.empty()) j["label"] = g.label;
    return j;
}

inline json toJson(const GroupHom& f) {
    json j;
    j["dom"] = f.dom.label.empty() ? toJson(f.dom) : json(f.dom.label);
    j["cod"] = f.cod.label.empty() ? toJson(f.cod) : json(f.cod.label);
    j["map"] = f.map;
    return j;
}

inline json toJson(const ProperChainComplex& c) {
    json j;
    j["objects"] = json::array();
    for (const auto& o : c.objects) j["objects"].push_back(toJson(o));
    j["differentials"] = json::array();
    for (const auto& d : c.differentials) j["differentials"].push_back(d.map);
    return j;
}

inline json toJson(const TruncatedSimplicialGroup& a) {
    json j;
    j["depth"] = a.depth;
    j["levels"] = json::array();
    for (const auto& l : a.levels) j["levels"].push_back(toJson(l));
    j["faces"] = json::array();
    for (const auto& fam : a.faces) {
        json f = json::array();
        for (const auto& h : fam) f.push_back(h.map);
        j["faces"].push_back(std::move(f));
    }
    j["degeneracies"] = json::array();
    for (const auto& fam : a.degeneracies) {
        json f = json::array();
        for (const auto& h : fam) f.push_back(h.map);
        j["degeneracies"].push_back(std::move(f));
    }
    if (!a.label.empty()) j["label"] = a.label;
    return j;
}

inline json toJson(const SimplicialHom& f) {
    json j;
    j["dom"] = f.dom.label.empty() ? toJson(f.dom) : json(f.dom.label);
    j["cod"] = f.cod.label.empty() ? toJson(f.cod) : json(f.cod.label);
    j["levelMaps"] = json::array();
    for (const auto& m : f.levelMaps) j["levelMaps"].push_back(m.map);
    if (!f.label.empty()) j["label"] = f.label;
    return j;
}

inline json toJson(const SimplicialSES& s) {
    json j;
    j["sub"] = s.sub.label.empty() ? toJson(s.sub) : json(s.sub.label);
    j["total"] = s.total.label.empty() ? toJson(s.total) : json(s.total.label);
    j["quot"] = s.quot.label.empty() ? toJson(s.quot) : json(s.quot.label);
    j["inclusion"] = json::array();
    for (const auto& m : s.inclusion.levelMaps) j["inclusion"].push_back(m.map);
    j["projection"] = json::array();
    for (const auto& m : s.projection.levelMaps) j["projection"].push_back(m.map);
    if (!s.label.empty()) j["label"] = s.label;
    return j;
}

// ---------------------------------------------------------------------------
// fixture registry
// ---------------------------------------------------------------------------

/// Named registries of everything a run can refer to.  Insertion order is
/// preserved so reports are deterministic.
struct FixtureSet {
    std::vector<std::pair<std::string, FiniteGroup>> groups;
    std::vector<std::pair<std::string, GroupHom>> homs;
    std::vector<std::pair<std::string, TruncatedSimplicialGroup>> simplicialGroups;
    std::vector<std::pair<std::string, SimplicialHom>> simplicialHoms;
    std::vector<std::pair<std::string, SimplicialSES>> sesList;

    template <typename T>
    static const T* find(const std::vector<std::pair<std::string, T>>& reg,
                         const std::string& label) {
        for (const auto& [l, v] : reg)
            if (l == label) return &v;
        return nullptr;
    }

    const FiniteGroup* findGroup(const std::string& l) const { return find(groups, l); }
    const GroupHom* findHom(const std::string& l) const { return find(homs, l); }
    const TruncatedSimplicialGroup* findSimplicial(const std::string& l) const {
        return find(simplicialGroups, l);
    }
    const SimplicialHom* findSimplicialHom(const std::string& l) const {
        return find(simplicialHoms, l);
    }
    const SimplicialSES* findSES(const std::string& l) const { return find(sesList, l); }

    template <typename T>
    void add(std::vector<std::pair<std::string, T>>& reg, const std::string& label, T value) {
        if (find(reg, label)) throw ValidationError("duplicate fixture label '" + label + "'");
        reg.emplace_back(label, std::move(value));
    }
};

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<int> intVector(const json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where + ": expected an array of integers");
    std::vector<int> v;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ValidationError(where + ": expected integers");
        v.push_back(e.get<int>());
    }
    return v;
}

}  // namespace detail

inline FiniteGroup groupFromJson(const json& j, const FixtureSet& fx,
                                 const std::string& where) {
    if (j.is_string()) {
        const FiniteGroup* g = fx.findGroup(j.get<std::string>());
        if (!g) throw ValidationError(where + ": unresolved group label '" +
                                      j.get<std::string>() + "'");
        return *g;
    }
    if (!j.is_object() || !j.contains("table"))
        throw ValidationError(where + ": a group needs a table");
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table"))
        table.push_back(detail::intVector(row, where + ".table"));
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
        throw ValidationError(where + ": order field disagrees with the table size");
    try {
        return validateGroup(table, j.value("label", std::string{}));
    } catch (const AxiomViolation& e) {
        throw ValidationError(where + ": AxiomViolation(" + e.axiom + "): " + e.what());
    }
}

inline GroupHom homFromJson(const json& j, const FixtureSet& fx, const std::string& where) {
    if (j.is_string()) {
        const GroupHom* f = fx.findHom(j.get<std::string>());
        if (!f) throw ValidationError(where + ": unresolved hom label '" +
                                      j.get<std::string>() + "'");
        return *f;
    }
    if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("map"))
        throw ValidationError(where + ": a hom needs dom, cod and map");
    FiniteGroup dom = groupFromJson(j.at("dom"), fx, where + ".dom");
    FiniteGroup cod = groupFromJson(j.at("cod"), fx, where + ".cod");
    return makeHom(std::move(dom), std::move(cod), detail::intVector(j.at("map"), where + ".map"));
}

/// Accepts either a bare map array or an object carrying a "map" field; used
/// inside composite structures where domain and codomain are positional.
inline std::vector<int> mapFromJson(const json& j, const std::string& where) {
    if (j.is_array()) return detail::intVector(j, where);
    if (j.is_object() && j.contains("map")) return detail::intVector(j.at("map"), where + ".map");
    throw ValidationError(where + ": expected a map array");
}

inline ProperChainComplex complexFromJson(const json& j, const FixtureSet& fx,
                                          const std::string& where) {
    if (!j.is_object() || !j.contains("objects") || !j.contains("differentials"))
        throw ValidationError(where + ": a complex needs objects and differentials");
    std::vector<FiniteGroup> objects;
    int idx = 0;
    for (const auto& o : j.at("objects"))
        objects.push_back(groupFromJson(o, fx, where + ".objects[" + std::to_string(idx++) + "]"));
    std::vector<GroupHom> diffs;
    idx = 0;
    for (const auto& d : j.at("differentials")) {
        const std::string dw = where + ".differentials[" + std::to_string(idx) + "]";
        if (idx + 1 >= static_cast<int>(objects.size()))
            throw ValidationError(where + ": more differentials than degrees");
        diffs.push_back(
            makeHom(objects[idx + 1], objects[idx], mapFromJson(d, dw)));
        ++idx;
    }
    return makeComplex(std::move(objects), std::move(diffs));
}

inline json toJson(const ComplexSES& s) {
    json j;
    j["sub"] = toJson(s.sub);
    j["total"] = toJson(s.total);
    j["quot"] = toJson(s.quot);
    j["inclusion"] = json::array();
    for (const auto& m : s.inclusion) j["inclusion"].push_back(m.map);
    j["projection"] = json::array();
    for (const auto& m : s.projection) j["projection"].push_back(m.map);
    return j;
}

inline ComplexSES complexSESFromJson(const json& j, const FixtureSet& fx,
                                     const std::string& where) {
    if (!j.is_object() || !j.contains("sub") || !j.contains("total") || !j.contains("quot") ||
        !j.contains("inclusion") || !j.contains("projection"))
        throw ValidationError(where +
                              ": a complex SES needs sub, total, quot, inclusion, projection");
    ComplexSES s;
    s.sub = complexFromJson(j.at("sub"), fx, where + ".sub");
    s.total = complexFromJson(j.at("total"), fx, where + ".total");
    s.quot = complexFromJson(j.at("quot"), fx, where + ".quot");
    int n = 0;
    for (const auto& m : j.at("inclusion")) {
        const std::string mw = where + ".inclusion[" + std::to_string(n) + "]";
        if (n > s.sub.length()) throw ValidationError(where + ": too many inclusion maps");
        s.inclusion.push_back(makeHom(s.sub.objects[n], s.total.objects[n], mapFromJson(m, mw)));
        ++n;
    }
    n = 0;
    for (const auto& m : j.at("projection")) {
        const std::string mw = where + ".projection[" + std::to_string(n) + "]";
        if (n > s.total.length()) throw ValidationError(where + ": too many projection maps");
        s.projection.push_back(makeHom(s.total.objects[n], s.quot.objects[n], mapFromJson(m, mw)));
        ++n;
    }
    validateComplexSES(s);
    return s;
}

inline TruncatedSimplicialGroup simplicialFromJson(const json& j, const FixtureSet& fx,
                                                   const std::string& where,
                                                   const Limits& limits = defaultLimits()) {
    if (j.is_string()) {
        const TruncatedSimplicialGroup* a = fx.findSimplicial(j.get<std::string>());
        if (!a) throw ValidationError(where + ": unresolved simplicial label '" +
                                      j.get<std::string>() + "'");
        return *a;
    }
    if (!j.is_object()) throw ValidationError(where + ": expected a simplicial group object");
    if (j.contains("generator")) {
        const std::string gen = j.at("generator").get<std::string>();
        const std::string label = j.value("label", std::string{});
        auto relabel = [&](TruncatedSimplicialGroup a) {
            if (!label.empty()) a.label = label;
            return a;
        };
        if (gen == "constant" || gen == "codiscrete" || gen == "nerve") {
            FiniteGroup g = groupFromJson(j.at("group"), fx, where + ".group");
            int depth = j.at("depth").get<int>();
            if (gen == "constant") return constantSimplicial(g, depth, label);
            if (gen == "codiscrete") return codiscreteSimplicial(g, depth, label, limits);
            return nerve(g, depth, label, limits);
        }
        if (gen == "shiftMinus")
            return shiftMinus(simplicialFromJson(j.at("of"), fx, where + ".of", limits), label);
        if (gen == "lambda")
            return relabel(
                lambdaOf(simplicialFromJson(j.at("of"), fx, where + ".of", limits)).object);
        if (gen == "truncate")
            return truncateSimplicial(simplicialFromJson(j.at("of"), fx, where + ".of", limits),
                                      j.at("depth").get<int>(), label);
        if (gen == "product")
            return productSimplicial(
                simplicialFromJson(j.at("of").at(0), fx, where + ".of[0]", limits),
                simplicialFromJson(j.at("of").at(1), fx, where + ".of[1]", limits), label, limits);
        throw ValidationError(where + ": unknown generator '" + gen + "'");
    }
    if (!j.contains("depth") || !j.contains("levels") || !j.contains("faces") ||
        !j.contains("degeneracies"))
        throw ValidationError(where + ": a simplicial group needs depth, levels, faces and "
                                      "degeneracies");
    TruncatedSimplicialGroup a;
    a.depth = j.at("depth").get<int>();
    a.label = j.value("label", std::string{});
    int idx = 0;
    for (const auto& l : j.at("levels"))
        a.levels.push_back(groupFromJson(l, fx, where + ".levels[" + std::to_string(idx++) + "]"));
    if (static_cast<int>(a.levels.size()) != a.depth + 1)
        throw ValidationError(where + ": levels do not match the depth");
    int n = 1;
    for (const auto& fam : j.at("faces")) {
        std::vector<GroupHom> f;
        int i = 0;
        for (const auto& h : fam) {
            const std::string hw =
                where + ".faces[" + std::to_string(n - 1) + "][" + std::to_string(i) + "]";
            f.push_back(makeHom(a.levels[n], a.levels[n - 1], mapFromJson(h, hw)));
            ++i;
        }
        a.faces.push_back(std::move(f));
        ++n;
    }
    n = 0;
    for (const auto& fam : j.at("degeneracies")) {
        std::vector<GroupHom> f;
        int i = 0;
        for (const auto& h : fam) {
            const std::string hw =
                where + ".degeneracies[" + std::to_string(n) + "][" + std::to_string(i) + "]";
            f.push_back(makeHom(a.levels[n], a.levels[n + 1], mapFromJson(h, hw)));
            ++i;
        }
        a.degeneracies.push_back(std::move(f));
        ++n;
    }
    return validateSimplicial(std::move(a));
}

inline SimplicialHom simplicialHomFromJson(const json& j, const FixtureSet& fx,
                                           const std::string& where,
                                           const Limits& limits = defaultLimits()) {
    if (j.is_string()) {
        const SimplicialHom* f = fx.findSimplicialHom(j.get<std::string>());
        if (!f) throw ValidationError(where + ": unresolved simplicial hom label '" +
                                      j.get<std::string>() + "'");
        return *f;
    }
    if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("levelMaps"))
        throw ValidationError(where + ": a simplicial hom needs dom, cod and levelMaps");
    TruncatedSimplicialGroup dom = simplicialFromJson(j.at("dom"), fx, where + ".dom", limits);
    TruncatedSimplicialGroup cod = simplicialFromJson(j.at("cod"), fx, where + ".cod", limits);
    std::vector<GroupHom> maps;
    int n = 0;
    for (const auto& m : j.at("levelMaps")) {
        const std::string mw = where + ".levelMaps[" + std::to_string(n) + "]";
        if (n > dom.depth) throw ValidationError(where + ": too many level maps");
        maps.push_back(makeHom(dom.levels[n], cod.levels[n], mapFromJson(m, mw)));
        ++n;
    }
    return makeSimplicialHom(std::move(dom), std::move(cod), std::move(maps),
                             j.value("label", std::string{}));
}

inline SimplicialSES sesFromJson(const json& j, const FixtureSet& fx, const std::string& where,
                                 const Limits& limits = defaultLimits()) {
    if (!j.is_object()) throw ValidationError(where + ": expected a SES object");
    const std::string label = j.value("label", std::string{});
    if (j.contains("fromProjection")) {
        SimplicialHom p =
            simplicialHomFromJson(j.at("fromProjection"), fx, where + ".fromProjection", limits);
        return sesFromSurjection(p, label);
    }
    if (!j.contains("sub") || !j.contains("total") || !j.contains("quot") ||
        !j.contains("inclusion") || !j.contains("projection"))
        throw ValidationError(where +
                              ": a SES needs sub, total, quot, inclusion and projection");
    TruncatedSimplicialGroup sub = simplicialFromJson(j.at("sub"), fx, where + ".sub", limits);
    TruncatedSimplicialGroup total =
        simplicialFromJson(j.at("total"), fx, where + ".total", limits);
    TruncatedSimplicialGroup quot = simplicialFromJson(j.at("quot"), fx, where + ".quot", limits);
    auto levelHoms = [&](const json& arr, const TruncatedSimplicialGroup& d,
                         const TruncatedSimplicialGroup& c, const std::string& w) {
        std::vector<GroupHom> maps;
        int n = 0;
        for (const auto& m : arr) {
            maps.push_back(makeHom(d.levels[n], c.levels[n],
                                   mapFromJson(m, w + "[" + std::to_string(n) + "]")));
            ++n;
        }
        return maps;
    };
    SimplicialHom inclusion =
        j.at("inclusion").is_string()
            ? simplicialHomFromJson(j.at("inclusion"), fx, where + ".inclusion", limits)
            : makeSimplicialHom(sub, total,
                                levelHoms(j.at("inclusion"), sub, total, where + ".inclusion"));
    SimplicialHom projection =
        j.at("projection").is_string()
            ? simplicialHomFromJson(j.at("projection"), fx, where + ".projection", limits)
            : makeSimplicialHom(total, quot,
                                levelHoms(j.at("projection"), total, quot, where + ".projection"));
    SimplicialSES s{std::move(sub), std::move(total), std::move(quot), std::move(inclusion),
                    std::move(projection), label};
    validateSimplicialSES(s);
    return s;
}

// ---------------------------------------------------------------------------
// directory loading
// ---------------------------------------------------------------------------

/// Loads every *.json file under path (sorted by name) into the registry.
/// Errors carry the file, the JSON path and the violated invariant.
inline void loadFixturesInto(FixtureSet& fx, const std::string& path,
                             const Limits& limits = defaultLimits()) {
    namespace fsys = std::filesystem;
    if (!fsys::exists(path)) throw ParseError("fixture path does not exist: " + path);
    std::vector<fsys::path> files;
    if (fsys::is_directory(path)) {
        for (const auto& entry : fsys::directory_iterator(path))
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
    } else {
        files.push_back(path);
    }
    for (const auto& file : files) {
        std::ifstream in(file);
        if (!in) throw ParseError("cannot open " + file.string());
        json doc;
        try {
            doc = json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(file.string() + ": " + e.what());
        }
        auto where = [&](const std::string& reg, int i) {
            return file.string() + ": " + reg + "[" + std::to_string(i) + "]";
        };
        try {
            int i = 0;
            for (const auto& g : doc.value("groups", json::array())) {
                FiniteGroup grp = groupFromJson(g, fx, where("groups", i));
                if (grp.label.empty())
                    throw ValidationError(where("groups", i) + ": registry entries need labels");
                fx.add(fx.groups, grp.label, grp);
                ++i;
            }
            i = 0;
            for (const auto& h : doc.value("homs", json::array())) {
                GroupHom hom = homFromJson(h, fx, where("homs", i));
                std::string label = h.is_object() ? h.value("label", std::string{}) : "";
                if (label.empty())
                    throw ValidationError(where("homs", i) + ": registry entries need labels");
                fx.add(fx.homs, label, std::move(hom));
                ++i;
            }
            i = 0;
            for (const auto& s : doc.value("simplicialGroups", json::array())) {
                TruncatedSimplicialGroup a =
                    simplicialFromJson(s, fx, where("simplicialGroups", i), limits);
                if (a.label.empty())
                    throw ValidationError(where("simplicialGroups", i) +
                                          ": registry entries need labels");
                std::string label = a.label;
                fx.add(fx.simplicialGroups, label, std::move(a));
                ++i;
            }
            i = 0;
            for (const auto& s : doc.value("simplicialHoms", json::array())) {
                SimplicialHom f = simplicialHomFromJson(s, fx, where("simplicialHoms", i), limits);
                if (f.label.empty())
                    throw ValidationError(where("simplicialHoms", i) +
                                          ": registry entries need labels");
                std::string label = f.label;
                fx.add(fx.simplicialHoms, label, std::move(f));
                ++i;
            }
            i = 0;
            for (const auto& s : doc.value("sesList", json::array())) {
                SimplicialSES ses = sesFromJson(s, fx, where("sesList", i), limits);
                if (ses.label.empty())
                    throw ValidationError(where("sesList", i) + ": registry entries need labels");
                std::string label = ses.label;
                fx.add(fx.sesList, label, std::move(ses));
                ++i;
            }
        } catch (const Error&) {
            throw;
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(file.string() + ": " + e.what());
        }
    }
}

inline FixtureSet loadFixtures(const std::string& path,
                               const Limits& limits = defaultLimits()) {
    FixtureSet fx;
    loadFixturesInto(fx, path, limits);
    return fx;
}

}  // namespace sgh
