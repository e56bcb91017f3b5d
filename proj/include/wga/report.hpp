#pragma once

// Machine-readable reports: every analysis result as JSON with a stable
// (alphabetical) key order. Numbers carry a 6-decimal rendering and, where
// one exists, a symbolic form in multiples of pi or the octahedron volume.

#include <cstdio>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "wga/chunks.hpp"
#include "wga/dehn.hpp"
#include "wga/invariants.hpp"
#include "wga/sld.hpp"

namespace wga {

inline std::string decimal6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline nlohmann::json number_json(double v, std::string symbolic = "") {
    nlohmann::json j;
    j["decimal"] = decimal6(v);
    if (!symbolic.empty()) j["symbolic"] = std::move(symbolic);
    return j;
}

// n quarters of pi, reduced: "3 pi", "pi/2", "5 pi/4", "0".
inline std::string pi_quarters(long long quarters) {
    if (quarters == 0) return "0";
    long long whole = quarters / 4, rem = quarters % 4;
    if (rem == 0) return (whole == 1 ? "pi" : std::to_string(whole) + " pi");
    if (quarters % 2 == 0)
        return (quarters == 2 ? "pi" : std::to_string(quarters / 2) + " pi") +
               std::string("/2");
    return (quarters == 1 ? "pi" : std::to_string(quarters) + " pi") +
           std::string("/4");
}

// multiples of the octahedron volume: "2 v8", "v8/2", "3/2 v8".
inline std::string v8_multiples(double units) {
    double doubled = 2.0 * units;
    long long n = std::llround(doubled);
    if (doubled != static_cast<double>(n)) return "";
    if (n == 0) return "0";
    if (n % 2 == 0) {
        long long w = n / 2;
        return (w == 1 ? "v8" : std::to_string(w) + " v8");
    }
    return (n == 1 ? "v8/2" : std::to_string(n) + "/2 v8");
}

inline nlohmann::json extint_json(ExtInt v) {
    if (v.infinite) return "inf";
    return v.value;
}

inline nlohmann::json hypothesis_json(const Hypothesis& h) {
    nlohmann::json j;
    j["name"] = h.name;
    switch (h.status) {
        case HypothesisStatus::Pass: j["status"] = "pass"; break;
        case HypothesisStatus::Fail: j["status"] = "fail"; break;
        case HypothesisStatus::Undeclared: j["status"] = "undeclared"; break;
    }
    if (!h.provenance.empty()) j["provenance"] = h.provenance;
    if (!h.detail.empty()) j["detail"] = h.detail;
    return j;
}

inline nlohmann::json certificate_json(const Certificate& c) {
    nlohmann::json j;
    j["statement"] = c.statement;
    j["passed"] = c.passed();
    if (!c.conclusion.empty()) j["conclusion"] = c.conclusion;
    if (!c.refusal.empty()) j["refusal"] = c.refusal;
    j["hypotheses"] = nlohmann::json::array();
    for (const Hypothesis& h : c.hypotheses) j["hypotheses"].push_back(hypothesis_json(h));
    return j;
}

namespace detail {

inline nlohmann::json summary_json(const SLDDocument& doc) {
    nlohmann::json j;
    if (!doc.label.empty()) j["label"] = doc.label;
    j["crossings"] = doc.diagram.num_crossings();
    j["edges"] = doc.diagram.num_edges();
    j["link_components"] =
        static_cast<int>(doc.diagram.components.size()) + doc.diagram.free_loops;
    if (doc.diagram.free_loops > 0) j["free_loops"] = doc.diagram.free_loops;
    j["regions"] = static_cast<int>(doc.diagram.faces.faces.size());
    j["euler_characteristic"] = doc.diagram.euler_characteristic();
    j["surfaces"] = nlohmann::json::array();
    for (const SurfaceComponent& s : doc.diagram.surfaces)
        j["surfaces"].push_back({{"id", s.id}, {"genus", s.genus}});
    // the declared ambient facts are always surfaced in the output
    j["ambient"] = serialize_sld(doc)["ambient"];
    return j;
}

inline nlohmann::json validate_json(const SLDDocument& doc) {
    const SurfaceDiagram& d = doc.diagram;
    nlohmann::json j;

    AlternationReport alt = is_alternating(d);
    j["alternating"]["holds"] = alt.alternating;
    if (alt.witness_edge) j["alternating"]["witness_edge"] = *alt.witness_edge;

    if (alt.alternating) {
        Colouring col = checkerboard_colouring(d);
        j["checkerboard_colourable"]["holds"] = col.colourable;
        if (!col.odd_cycle.empty())
            j["checkerboard_colourable"]["odd_region_cycle"] = col.odd_cycle;
    } else {
        j["checkerboard_colourable"]["holds"] = false;
        j["checkerboard_colourable"]["detail"] = "requires an alternating diagram";
    }

    WeakPrimenessReport wp = is_weakly_prime(d);
    j["weakly_prime"]["holds"] = wp.weakly_prime;
    if (!wp.weakly_prime) {
        j["weakly_prime"]["detail"] = wp.reason;
        if (wp.witness) {
            j["weakly_prime"]["witness"]["edges"] = {wp.witness->edges[0],
                                                     wp.witness->edges[1]};
            j["weakly_prime"]["witness"]["regions"] = {wp.witness->faces[0],
                                                       wp.witness->faces[1]};
        }
    }

    if (alt.alternating) {
        TwistReducedReport twr = is_weakly_twist_reduced(d);
        j["weakly_twist_reduced"]["holds"] = twr.weakly_twist_reduced;
    } else {
        j["weakly_twist_reduced"]["holds"] = false;
        j["weakly_twist_reduced"]["detail"] = "requires an alternating diagram";
    }

    try {
        RepReport rep = representativity(d, doc.ambient);
        j["representativity"]["r"] = extint_json(rep.r);
        j["representativity"]["r_hat"] = extint_json(rep.r_hat);
        j["representativity"]["e"] = extint_json(rep.e);
        if (rep.e_is_bound_only) j["representativity"]["e_is_lower_bound"] = true;
        if (rep.e_witness_face)
            j["representativity"]["e_witness_region"] = *rep.e_witness_face;
        j["representativity"]["method"] = rep.method;
    } catch (const diagram_error& e) {
        j["representativity"]["status"] = "undeclared";
        j["representativity"]["detail"] = e.what();
    }

    j["certificate"] = certificate_json(wga_certificate(d, doc.ambient));
    return j;
}

inline nlohmann::json invariants_json(const SLDDocument& doc) {
    const SurfaceDiagram& d = doc.diagram;
    nlohmann::json j;

    try {
        CheckerboardStats st = checkerboard_stats(d);
        j["checkerboard"]["chi_shaded"] = st.chi_shaded;
        j["checkerboard"]["chi_white"] = st.chi_white;
        j["checkerboard"]["nonbigon_regions_shaded"] = st.r_shaded;
        j["checkerboard"]["nonbigon_regions_white"] = st.r_white;
        j["checkerboard"]["boundary_intersection_number"] = st.i_boundary;
    } catch (const diagram_error& e) {
        j["checkerboard"]["error"] = e.what();
    }

    if (is_alternating(d).alternating) {
        TwistStructure ts = twist_structure(d);
        j["twist"]["tw"] = ts.tw;
        j["twist"]["tw_per_component"] = ts.tw_per_component;
        if (ts.bigon_cycle) j["twist"]["bigon_cycle_crossings"] = *ts.bigon_cycle;
    }

    VolumeBound vb = volume_lower_bound(d, doc.ambient);
    j["volume"]["certificate"] = certificate_json(vb.cert);
    if (vb.cert.passed()) {
        j["volume"]["lower_bound"] = number_json(vb.bound, v8_multiples(vb.units_v8));
        j["volume"]["tw"] = vb.tw;
        j["volume"]["chi_surface"] = vb.chi_F;
        j["volume"]["chi_ambient_boundary"] = vb.chi_dY;
    }

    for (RegionColour col : {RegionColour::Shaded, RegionColour::White}) {
        const char* key = col == RegionColour::Shaded ? "shaded" : "white";
        GutsReport g = guts_euler(d, doc.ambient, col);
        j["guts"][key]["certificate"] = certificate_json(g.cert);
        if (g.cert.passed()) j["guts"][key]["chi"] = g.chi_guts;

        SurfaceGeometryReport sg = surface_geometry(d, doc.ambient, col);
        const char* kind = sg.kind == SurfaceClass::Quasifuchsian ? "quasifuchsian"
                           : sg.kind == SurfaceClass::Partial    ? "partial"
                                                                 : "unknown";
        j["surface_geometry"][key]["kind"] = kind;
        if (!sg.facts.empty()) j["surface_geometry"][key]["facts"] = sg.facts;
        if (!sg.semi_fiber_alternative.empty())
            j["surface_geometry"][key]["alternative"] = sg.semi_fiber_alternative;
        j["surface_geometry"][key]["certificate"] = certificate_json(sg.cert);
    }

    j["primeness"] = certificate_json(primeness(d, doc.ambient));
    return j;
}

inline nlohmann::json chunks_json(const SLDDocument& doc) {
    nlohmann::json j;
    ChunkDecomposition cd;
    try {
        cd = build_chunk_decomposition(doc.diagram, doc.ambient);
    } catch (const diagram_error& e) {
        j["refused"] = e.what();
        return j;
    }
    j["num_chunks"] = cd.num_chunks;
    j["exterior_faces_per_chunk"] = cd.exterior_faces_per_chunk;
    j["edge_classes"] = nlohmann::json::array();
    for (const EdgeClassInfo& ec : cd.edge_classes)
        j["edge_classes"].push_back(
            {{"crossing", ec.crossing}, {"members", ec.members}});
    j["interior_faces"] = nlohmann::json::array();
    for (const ChunkFace& f : cd.interior_faces) {
        nlohmann::json fj;
        fj["region"] = f.region;
        fj["side"] = f.side;
        fj["colour"] = f.colour == 0 ? "white" : "shaded";
        fj["edge_copies"] = f.edge_copies;
        j["interior_faces"].push_back(fj);
    }
    j["boundary_squares"] = nlohmann::json::array();
    for (const BoundarySquare& b : cd.boundary_faces)
        j["boundary_squares"].push_back({{"crossing", b.crossing},
                                         {"side", b.side},
                                         {"adjacent_faces", b.adjacent_face},
                                         {"corner_edge_copies", b.corner_edge_copy}});
    j["gluings"] = nlohmann::json::array();
    for (const ChunkGluing& g : cd.gluings)
        j["gluings"].push_back({{"region", g.region}, {"rotation", g.rotation}});
    j["angled_structure"] = certificate_json(verify_angled_structure(cd));
    return j;
}

inline nlohmann::json classify_json(const SLDDocument& doc) {
    nlohmann::json j;
    GeometryReport g = classify_geometry(doc.diagram, doc.ambient);
    const char* geo = g.geometry == GeometryClass::Hyperbolic  ? "hyperbolic"
                      : g.geometry == GeometryClass::Satellite ? "satellite"
                                                               : "unknown";
    j["geometry"] = geo;
    if (!g.notes.empty()) j["notes"] = g.notes;
    j["certificate"] = certificate_json(g.cert);
    return j;
}

inline nlohmann::json dehn_json(const SLDDocument& doc, int component,
                                const std::optional<Slope>& slope) {
    const SurfaceDiagram& d = doc.diagram;
    nlohmann::json j;
    j["component"] = component;

    if (component >= 0 && component < static_cast<int>(d.components.size())) {
        HarlequinTiling t = harlequin_tiling(d, component);
        j["harlequin_tiling"]["length"] = t.length();
        j["harlequin_tiling"]["squares"] = nlohmann::json::array();
        for (const HarlequinSquare& s : t.squares)
            j["harlequin_tiling"]["squares"].push_back(
                {{"square", s.square},
                 {"crossing", s.crossing},
                 {"side", s.side},
                 {"x", s.x},
                 {"meridian_corners", s.meridian_corners}});
    } else {
        j["harlequin_tiling"]["error"] =
            "component " + std::to_string(component) + " does not exist";
    }

    SlopeLengthBounds slb = slope_length_bounds(d, doc.ambient, component);
    j["slope_length_bounds"]["certificate"] = certificate_json(slb.cert);
    if (slb.cert.passed()) {
        j["slope_length_bounds"]["meridian"] = number_json(slb.meridian);
        j["slope_length_bounds"]["longitude"] = number_json(slb.longitude);
        if (!slb.note.empty()) j["slope_length_bounds"]["note"] = slb.note;
    }

    FillingThreshold th = geometric_filling_threshold(d, doc.ambient, component);
    j["geometric_threshold"]["certificate"] = certificate_json(th.cert);
    if (th.cert.passed())
        j["geometric_threshold"]["q_threshold"] = number_json(th.q_threshold);

    if (slope) {
        Slope s = *slope;
        s.component = component;
        j["slope"] = s.str();

        FilledVolumeBound fv = filled_volume_bound(d, doc.ambient, s);
        j["filled_volume"]["certificate"] = certificate_json(fv.cert);
        if (fv.cert.passed()) {
            j["filled_volume"]["slope_length_lower_bound"] =
                number_json(fv.length_lower);
            j["filled_volume"]["factor"] = number_json(fv.factor);
            j["filled_volume"]["lower_bound"] = number_json(fv.bound);
        }

        CombinatorialLengthBound cl = combinatorial_length_bound(d, doc.ambient, s);
        j["combinatorial_length"]["certificate"] = certificate_json(cl.cert);
        if (cl.cert.passed()) {
            j["combinatorial_length"]["tw_component"] = cl.tw_K;
            j["combinatorial_length"]["lower_bound"] = number_json(
                cl.bound, pi_quarters(std::llabs(s.q) * cl.tw_K));
            j["combinatorial_length"]["certifies_hyperbolic"] =
                cl.certifies_hyperbolic;
        }

        bool slope_ok = s.component >= 0 &&
                        s.component < static_cast<int>(d.components.size()) &&
                        s.lowest_terms();
        if (slope_ok) {
            FillingReport fr = filling_certificate(d, doc.ambient, {s});
            j["filling"]["certificate"] = certificate_json(fr.cert);
            if (fr.cert.passed()) {
                const SlopeVerdict& v = fr.verdicts.front();
                j["filling"]["hyperbolic"] = v.hyperbolic;
                j["filling"]["trivial"] = v.trivial;
                j["filling"]["reason"] = v.reason;
                j["filling"]["all_nontrivial_hyperbolic"] =
                    fr.all_nontrivial_hyperbolic;
            }
        } else {
            j["filling"]["error"] = "slope " + s.str() + " on component " +
                                    std::to_string(s.component) + " is invalid";
        }
    }
    return j;
}

}  // namespace detail

struct PipelineOptions {
    int component = 0;
    std::optional<Slope> slope;
};

// Run the requested analyses ("validate", "invariants", "chunks", "classify",
// "dehn") and return one deterministic JSON report. Refusals are recorded in
// the report, never thrown.
inline nlohmann::json run_pipeline(const SLDDocument& doc,
                                   const std::set<std::string>& requested,
                                   const PipelineOptions& opt = {}) {
    nlohmann::json j;
    j["summary"] = detail::summary_json(doc);
    if (requested.count("validate")) j["validate"] = detail::validate_json(doc);
    if (requested.count("invariants"))
        j["invariants"] = detail::invariants_json(doc);
    if (requested.count("chunks")) j["chunks"] = detail::chunks_json(doc);
    if (requested.count("classify")) j["classify"] = detail::classify_json(doc);
    if (requested.count("dehn"))
        j["dehn"] = detail::dehn_json(doc, opt.component, opt.slope);
    return j;
}

}  // namespace wga
