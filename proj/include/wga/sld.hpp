#pragma once

// SLD ("surface link diagram") file format: UTF-8 JSON carrying the rotation
// system, optional non-disk face groupings, and the ambient context.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wga/ambient.hpp"
#include "wga/diagram.hpp"

namespace wga {

struct SLDDocument {
    SurfaceDiagram diagram;                  // finalised
    std::vector<FaceGroupSpec> face_groups;  // as given in the file
    AmbientContext ambient;
    std::string label;
};

namespace detail {

inline ExtInt parse_extint(const nlohmann::json& j, const char* what) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return ExtInt::inf();
        throw diagram_error(std::string(what) + ": expected integer or \"inf\"");
    }
    if (!j.is_number_integer()) throw diagram_error(std::string(what) + ": expected integer or \"inf\"");
    return ExtInt::of(j.get<long long>());
}

inline nlohmann::json dump_extint(ExtInt v) {
    if (v.infinite) return "inf";
    return v.value;
}

}  // namespace detail

inline AmbientContext parse_ambient(const nlohmann::json& j, const SurfaceDiagram& d) {
    AmbientContext ctx;
    std::string kind = j.value("kind", "ThickenedSurface");
    if (kind == "ThickenedSurface") {
        ctx.kind = AmbientKind::ThickenedSurface;
    } else if (kind == "HeegaardTorusS3") {
        ctx.kind = AmbientKind::HeegaardTorusS3;
        if (d.surfaces.size() != 1 || d.surfaces[0].genus > 1)
            throw diagram_error("HeegaardTorusS3 ambient requires a single surface component of genus 0 or 1");
    } else if (kind == "Declared") {
        ctx.kind = AmbientKind::Declared;
    } else {
        throw diagram_error("unknown ambient kind: " + kind);
    }
    if (j.contains("boundary"))
        for (const auto& b : j["boundary"]) ctx.boundary_of_Y.push_back({b.value("genus", 1)});
    auto flag = [&](const char* name) -> std::optional<bool> {
        if (!j.contains(name)) return std::nullopt;
        return j[name].get<bool>();
    };
    ctx.is_atoroidal = flag("atoroidal");
    ctx.is_boundary_anannular = flag("boundary_anannular");
    ctx.boundary_incompressible = flag("boundary_incompressible");
    ctx.heegaard = flag("heegaard");
    ctx.annulus_core_knotted = flag("annulus_core_knotted");
    ctx.declared_representativity.assign(d.surfaces.size(), std::nullopt);
    if (j.contains("declared_representativity")) {
        for (const auto& r : j["declared_representativity"]) {
            int sid = r.at("surface").get<int>();
            int idx = -1;
            for (size_t s = 0; s < d.surfaces.size(); ++s)
                if (d.surfaces[s].id == sid) idx = static_cast<int>(s);
            if (idx < 0) throw diagram_error("declared_representativity: unknown surface id");
            DeclaredRep dr;
            dr.r_minus = detail::parse_extint(r.at("r_minus"), "r_minus");
            dr.r_plus = detail::parse_extint(r.at("r_plus"), "r_plus");
            dr.note = r.value("note", "");
            ctx.declared_representativity[idx] = dr;
        }
    }
    if (j.contains("compressing_slopes")) {
        const auto& cs = j["compressing_slopes"];
        if (cs.contains("minus"))
            ctx.slope_minus = SlopePair{cs["minus"][0].get<long long>(), cs["minus"][1].get<long long>()};
        if (cs.contains("plus"))
            ctx.slope_plus = SlopePair{cs["plus"][0].get<long long>(), cs["plus"][1].get<long long>()};
    }
    return ctx;
}

inline SLDDocument parse_sld(const nlohmann::json& j) {
    if (!j.contains("sld") || j["sld"].get<int>() != 1)
        throw diagram_error("not an SLD document (missing or unsupported \"sld\" version)");
    SLDDocument doc;
    doc.label = j.value("label", "");
    doc.diagram.label = doc.label;

    std::map<int, int> surface_index, crossing_index;
    for (const auto& s : j.at("surfaces")) {
        SurfaceComponent sc;
        sc.id = s.at("id").get<int>();
        sc.genus = s.at("genus").get<int>();
        if (sc.genus < 0) throw diagram_error("negative genus");
        if (surface_index.count(sc.id)) throw diagram_error("duplicate surface id");
        surface_index[sc.id] = static_cast<int>(doc.diagram.surfaces.size());
        doc.diagram.surfaces.push_back(sc);
    }
    for (const auto& c : j.at("crossings")) {
        Crossing cr;
        cr.id = c.at("id").get<int>();
        int sid = c.at("surface").get<int>();
        if (!surface_index.count(sid)) throw diagram_error("crossing references unknown surface");
        cr.surface = surface_index[sid];
        std::string op = c.at("over_pair").get<std::string>();
        if (op == "02") cr.over_pair = OverPair::P02;
        else if (op == "13") cr.over_pair = OverPair::P13;
        else throw diagram_error("over_pair must be \"02\" or \"13\"");
        if (crossing_index.count(cr.id)) throw diagram_error("duplicate crossing id");
        crossing_index[cr.id] = static_cast<int>(doc.diagram.crossings.size());
        doc.diagram.crossings.push_back(cr);
    }
    auto end_ref = [&](const nlohmann::json& e) {
        int cid = e.at(0).get<int>();
        int port = e.at(1).get<int>();
        if (!crossing_index.count(cid)) throw diagram_error("edge references unknown crossing id");
        if (port < 0 || port > 3) throw diagram_error("port out of range");
        return EndRef{crossing_index[cid], port};
    };
    for (const auto& e : j.at("edges"))
        doc.diagram.edges.push_back({end_ref(e.at(0)), end_ref(e.at(1))});
    doc.diagram.free_loops = j.value("free_loops", 0);
    if (doc.diagram.free_loops < 0) throw diagram_error("free_loops must be non-negative");
    if (j.contains("faces")) {
        for (const auto& f : j["faces"]) {
            FaceGroupSpec g;
            g.genus = f.value("genus", 0);
            for (const auto& dref : f.at("darts")) g.boundary_darts.push_back(end_ref(dref));
            doc.face_groups.push_back(std::move(g));
        }
    }
    // A one-component genus-0 surface forces the ambient to be S^3; more
    // sphere components would make F compressible/split.
    int sphere_components = 0;
    for (const auto& s : doc.diagram.surfaces)
        if (s.genus == 0) ++sphere_components;
    if (sphere_components > 0 && doc.diagram.surfaces.size() > 1)
        throw diagram_error("a genus-0 component is only allowed when the surface has exactly one component");

    doc.diagram.finalise(doc.face_groups);
    doc.ambient = j.contains("ambient") ? parse_ambient(j["ambient"], doc.diagram)
                                        : AmbientContext{};
    return doc;
}

inline SLDDocument parse_sld_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw diagram_error(std::string("malformed syntax: ") + e.what());
    }
    return parse_sld(j);
}

inline SLDDocument load_sld(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw diagram_error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_sld_text(ss.str());
}

inline nlohmann::json serialize_sld(const SLDDocument& doc) {
    nlohmann::json j;
    j["sld"] = 1;
    if (!doc.label.empty()) j["label"] = doc.label;
    j["surfaces"] = nlohmann::json::array();
    for (const auto& s : doc.diagram.surfaces)
        j["surfaces"].push_back({{"id", s.id}, {"genus", s.genus}});
    j["crossings"] = nlohmann::json::array();
    for (const auto& c : doc.diagram.crossings)
        j["crossings"].push_back({{"id", c.id},
                                  {"surface", doc.diagram.surfaces[c.surface].id},
                                  {"over_pair", c.over_pair == OverPair::P02 ? "02" : "13"}});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : doc.diagram.edges) {
        auto cid = [&](EndRef r) { return doc.diagram.crossings[r.crossing].id; };
        j["edges"].push_back({{cid(e.a), e.a.port}, {cid(e.b), e.b.port}});
    }
    if (doc.diagram.free_loops > 0) j["free_loops"] = doc.diagram.free_loops;
    if (!doc.face_groups.empty()) {
        j["faces"] = nlohmann::json::array();
        for (const auto& g : doc.face_groups) {
            nlohmann::json f;
            f["genus"] = g.genus;
            f["darts"] = nlohmann::json::array();
            for (EndRef r : g.boundary_darts)
                f["darts"].push_back({doc.diagram.crossings[r.crossing].id, r.port});
            j["faces"].push_back(f);
        }
    }
    nlohmann::json a;
    switch (doc.ambient.kind) {
        case AmbientKind::ThickenedSurface: a["kind"] = "ThickenedSurface"; break;
        case AmbientKind::HeegaardTorusS3: a["kind"] = "HeegaardTorusS3"; break;
        case AmbientKind::Declared: a["kind"] = "Declared"; break;
    }
    if (!doc.ambient.boundary_of_Y.empty()) {
        a["boundary"] = nlohmann::json::array();
        for (const auto& b : doc.ambient.boundary_of_Y) a["boundary"].push_back({{"genus", b.genus}});
    }
    auto put_flag = [&](const char* name, const std::optional<bool>& v) {
        if (v) a[name] = *v;
    };
    put_flag("atoroidal", doc.ambient.is_atoroidal);
    put_flag("boundary_anannular", doc.ambient.is_boundary_anannular);
    put_flag("boundary_incompressible", doc.ambient.boundary_incompressible);
    put_flag("heegaard", doc.ambient.heegaard);
    put_flag("annulus_core_knotted", doc.ambient.annulus_core_knotted);
    bool any_declared = false;
    for (const auto& r : doc.ambient.declared_representativity)
        if (r) any_declared = true;
    if (any_declared) {
        a["declared_representativity"] = nlohmann::json::array();
        for (size_t s = 0; s < doc.ambient.declared_representativity.size(); ++s) {
            const auto& r = doc.ambient.declared_representativity[s];
            if (!r) continue;
            nlohmann::json rj;
            rj["surface"] = doc.diagram.surfaces[s].id;
            rj["r_minus"] = detail::dump_extint(r->r_minus);
            rj["r_plus"] = detail::dump_extint(r->r_plus);
            if (!r->note.empty()) rj["note"] = r->note;
            a["declared_representativity"].push_back(rj);
        }
    }
    if (doc.ambient.slope_minus || doc.ambient.slope_plus) {
        nlohmann::json cs;
        if (doc.ambient.slope_minus) cs["minus"] = {doc.ambient.slope_minus->a, doc.ambient.slope_minus->b};
        if (doc.ambient.slope_plus) cs["plus"] = {doc.ambient.slope_plus->a, doc.ambient.slope_plus->b};
        a["compressing_slopes"] = cs;
    }
    j["ambient"] = a;
    return j;
}

}  // namespace wga
