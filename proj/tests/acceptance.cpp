// End-to-end acceptance run: exercises every analysis on the fixture corpus
// and on randomly generated diagrams, printing one pass/fail line per
// criterion. Exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wga/chunks.hpp"
#include "wga/dehn.hpp"
#include "wga/invariants.hpp"
#include "wga/sld.hpp"

#include "medial_gen.hpp"

using namespace wga;

namespace {

SLDDocument load_fixture(const std::string& name) {
    return load_sld(std::string(WGA_FIXTURE_DIR) + "/" + name + ".sld");
}

const char* kFixtures[] = {"10_161_t2",  "band3_t2",   "borromean_s2",
                           "fig2_t2",    "fig8_s2",    "flype6_s2",
                           "kink_s2",    "knot3_t2",   "knot_g5",
                           "sum_trefoils_s2", "trefoil_s2", "weave4_t2"};

struct Criterion {
    std::string label;
    bool ok = true;
    std::vector<std::string> notes;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

// 1. Euler identities on >= 1000 random colourable alternating diagrams of
// genus 0-2 with at most 12 crossings, in under 10 seconds.
void euler_identities(Criterion& cr) {
    auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(20260823);
    int checked = 0, chain_checked = 0;
    while (checked < 1000) {
        testgen::EmbeddedGraph g = testgen::random_graph(rng, 6, 12);
        if (testgen::graph_genus(g) > 2) continue;
        SurfaceDiagram d;
        try {
            d = testgen::medial_diagram(g);
        } catch (const diagram_error&) {
            continue;  // no alternating assignment on this embedding
        }
        if (!checkerboard_colouring(d).colourable) continue;
        cr.require(d.num_crossings() <= 12, "crossing budget exceeded");

        int chi_F = d.euler_characteristic();
        CheckerboardStats st = checkerboard_stats(d);
        cr.require(st.chi_shaded + st.chi_white == chi_F - d.num_crossings(),
                   "chi(Sigma) + chi(Sigma') != chi(F) - c");

        TwistStructure ts = twist_structure(d);
        if (!ts.bigon_cycle) {
            cr.require(-ts.tw + st.r_shaded + st.r_white == chi_F,
                       "-tw + r_S + r_W != chi(F)");
            ++chain_checked;
        }
        ++checked;
        if (!cr.ok) return;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    cr.require(chain_checked >= 500, "too few diagrams without bigon cycles");
    cr.require(secs < 10.0, "runtime budget exceeded: " + std::to_string(secs));
    cr.notes.push_back(std::to_string(checked) + " diagrams in " +
                       std::to_string(secs) + " s");
}

// 2. Chunk invariants on every fixture that admits a decomposition: edge
// classes of size four (angle sum 2 pi), square boundary faces, and paired
// surface edges (angle sum pi) in the bounded decomposition.
void chunk_invariants(Criterion& cr) {
    int built = 0;
    for (const char* name : kFixtures) {
        SLDDocument doc = load_fixture(name);
        ChunkDecomposition cd;
        try {
            cd = build_chunk_decomposition(doc.diagram, doc.ambient);
        } catch (const diagram_error&) {
            continue;
        }
        ++built;
        std::string tag = std::string(" (") + name + ")";
        for (const EdgeClassInfo& ec : cd.edge_classes)
            cr.require(ec.members.size() == 4,
                       "edge class not glued in fours" + tag);
        cr.require(cd.boundary_faces.size() ==
                       2 * static_cast<size_t>(doc.diagram.num_crossings()),
                   "boundary face count" + tag);
        for (const BoundarySquare& b : cd.boundary_faces)
            for (int q = 0; q < 4; ++q)
                cr.require(b.adjacent_face[q] >= 0 && b.corner_edge_copy[q] >= 0,
                           "boundary face is not a square" + tag);
        std::string n = name;
        if (n == "fig8_s2" || n == "weave4_t2" || n == "10_161_t2" ||
            n == "borromean_s2" || n == "knot_g5")
            cr.require(verify_angled_structure(cd).passed(),
                       "angled structure refused" + tag);

        for (RegionColour col : {RegionColour::Shaded, RegionColour::White}) {
            ChunkDecomposition bd;
            try {
                bd = build_bounded_decomposition(doc.diagram, doc.ambient, col);
            } catch (const diagram_error&) {
                continue;
            }
            int surface_classes = 0;
            for (const EdgeClassInfo& ec : bd.edge_classes)
                if (ec.surface) {
                    ++surface_classes;
                    cr.require(ec.members.size() == 2,
                               "surface edge class not paired" + tag);
                }
            cr.require(surface_classes > 0, "no surface edge classes" + tag);
        }
    }
    cr.require(built >= 10, "too few fixtures admit a chunk decomposition");
    cr.notes.push_back(std::to_string(built) + " fixtures decomposed");
}

// Boundary-parallel squares of every boundary face, glued along the
// boundary-edge identification: the assembled surface is the link boundary.
bool boundary_assembly(const ChunkDecomposition& cd,
                       std::vector<SurfacePiece>& pieces,
                       std::vector<std::pair<ArcRef, ArcRef>>& glue) {
    for (size_t b = 0; b < cd.boundary_faces.size(); ++b) {
        SurfacePiece p;
        p.chunk = cd.boundary_faces[b].side;
        std::vector<ItineraryStep> curve;
        for (int q = 0; q < 4; ++q)
            curve.push_back({cd.boundary_faces[b].adjacent_face[q], false, false,
                             cd.boundary_faces[b].corner_edge_copy[q]});
        p.boundary = {curve};
        p.euler_char = 1;
        pieces.push_back(p);
    }
    std::map<int, std::vector<ArcRef>> by_class;
    for (size_t b = 0; b < cd.boundary_faces.size(); ++b)
        for (int q = 0; q < 4; ++q)
            by_class[cd.boundary_edge_class[4 * static_cast<int>(b) + q]].push_back(
                {static_cast<int>(b), 0, q});
    for (auto& [cls, arcs] : by_class) {
        if (arcs.size() != 2) return false;
        glue.push_back({arcs[0], arcs[1]});
    }
    return true;
}

// 3. Gauss-Bonnet: assembled link boundary tori have total combinatorial area
// zero, and every enumerable normal curve of length at most eight bounds a
// piece of nonnegative area. Exact in units of pi/2.
void gauss_bonnet(Criterion& cr) {
    for (const char* name : {"fig8_s2", "weave4_t2", "10_161_t2"}) {
        SLDDocument doc = load_fixture(name);
        ChunkDecomposition cd = build_chunk_decomposition(doc.diagram, doc.ambient);
        std::vector<SurfacePiece> pieces;
        std::vector<std::pair<ArcRef, ArcRef>> glue;
        std::string tag = std::string(" (") + name + ")";
        cr.require(boundary_assembly(cd, pieces, glue),
                   "boundary edges not paired" + tag);
        cr.require(gauss_bonnet_check(cd, pieces, glue, 0).passed(),
                   "assembled boundary fails Gauss-Bonnet" + tag);
        long long total = 0;
        for (const SurfacePiece& p : pieces) total += combinatorial_area_units(p);
        cr.require(total == 0, "boundary torus area not zero" + tag);
    }
    for (const char* name : {"fig8_s2", "weave4_t2"}) {
        SLDDocument doc = load_fixture(name);
        ChunkDecomposition cd = build_chunk_decomposition(doc.diagram, doc.ambient);
        std::string tag = std::string(" (") + name + ")";
        cr.require(verify_angled_structure(cd).passed(), "angled structure" + tag);
        int curves = 0;
        for (int side = 0; side < 2; ++side)
            for (const auto& c : enumerate_normal_curves(cd, side, 8)) {
                ++curves;
                SurfacePiece p = normal_piece_from_curve(cd, c);
                cr.require(combinatorial_area_units(p) >= 0,
                           "normal piece of negative area" + tag);
            }
        cr.require(curves > 0, "no normal curves enumerated" + tag);
    }
}

// 4. Volume bounds against externally computed hyperbolic volumes.
void volume_bounds(Criterion& cr) {
    {
        SLDDocument doc = load_fixture("borromean_s2");
        VolumeBound v = volume_lower_bound(doc.diagram, doc.ambient);
        cr.require(v.cert.passed(), "borromean bound refused");
        cr.require(v.units_v8 == 2.0, "borromean bound is not 2 v8");
        // census volume of the borromean rings complement
        const double volume = 7.32772475341774;
        cr.require(v.bound <= volume, "borromean bound exceeds the volume");
        cr.require(std::abs(v.bound - volume) < 1e-3,
                   "borromean bound misses the equality case");
    }
    {
        SLDDocument doc = load_fixture("weave4_t2");
        VolumeBound v = volume_lower_bound(doc.diagram, doc.ambient);
        cr.require(v.cert.passed(), "weave bound refused");
        // volume of the square weave complement in the thickened torus, from
        // external hyperbolic computation: four octahedra
        cr.require(v.bound <= 4 * octahedron_volume,
                   "weave bound exceeds the volume");
        cr.require(v.units_v8 == 2.0, "weave bound is not 2 v8");
    }
    {
        SLDDocument doc = load_fixture("10_161_t2");
        TwistStructure ts = twist_structure(doc.diagram);
        cr.require(ts.tw == 10, "11-crossing fixture has tw != 10");
        cr.require(doc.diagram.num_crossings() == 11,
                   "11-crossing fixture miscounted");
        VolumeBound v = volume_lower_bound(doc.diagram, doc.ambient);
        cr.require(!v.cert.passed() &&
                       v.cert.refusal.find("r = 4, need > 4") != std::string::npos,
                   "representativity four not refused with the right reason");
    }
}

// 5. On a sphere the slope length bounds reduce to the classical ones.
void sphere_reduction(Criterion& cr) {
    for (int c = 3; c <= 50; ++c) {
        cr.require(meridian_length_bound(2, c) == 3.0 - 6.0 / c,
                   "meridian bound at c = " + std::to_string(c));
        cr.require(longitude_length_bound(2, c) == 3.0 * c - 6.0,
                   "longitude bound at c = " + std::to_string(c));
    }
}

// 6. Filling certificates: the figure-eight threshold, monotonicity of the
// length bounds in |q| and tw, and the high-genus blanket certificate.
void filling_certificates(Criterion& cr) {
    SLDDocument fig8 = load_fixture("fig8_s2");
    FillingThreshold th =
        geometric_filling_threshold(fig8.diagram, fig8.ambient, 0);
    cr.require(th.cert.passed(), "figure-eight threshold refused");
    cr.require(th.q_threshold == 2.6865, "figure-eight threshold is not 2.6865");
    for (int q = 3; q <= 100; ++q)
        cr.require(q > th.q_threshold,
                   "slope above the threshold not certified, q = " +
                       std::to_string(q));

    for (int tw = 1; tw <= 12; ++tw)
        for (int q = 1; q <= 12; ++q) {
            cr.require(combinatorial_length_value(q + 1, tw) >
                           combinatorial_length_value(q, tw),
                       "combinatorial length not monotone in q");
            cr.require(combinatorial_length_value(q, tw + 1) >
                           combinatorial_length_value(q, tw),
                       "combinatorial length not monotone in tw");
            for (int chi : {2, 0, -2})
                cr.require(slope_length_lower(chi, 8, q + 1) >
                               slope_length_lower(chi, 8, q),
                           "slope length lower bound not monotone in q");
        }

    // the blanket certificate fires exactly for knots on genus >= 5 surfaces
    SLDDocument g5 = load_fixture("knot_g5");
    FillingReport fr =
        filling_certificate(g5.diagram, g5.ambient, {{0, 1, 1}, {0, 3, 2}});
    cr.require(fr.cert.passed(), "genus-5 filling certificate refused");
    cr.require(fr.all_nontrivial_hyperbolic,
               "genus-5 blanket certificate did not fire");
    for (const SlopeVerdict& v : fr.verdicts)
        cr.require(v.hyperbolic, "genus-5 filling not certified hyperbolic");

    SLDDocument weave = load_fixture("weave4_t2");
    FillingReport frw =
        filling_certificate(weave.diagram, weave.ambient, {{0, 1, 1}});
    cr.require(frw.cert.passed() && !frw.all_nontrivial_hyperbolic,
               "blanket certificate fired for a link on a torus");

    SLDDocument knot3 = load_fixture("knot3_t2");
    AmbientContext ctx = knot3.ambient;
    ctx.is_atoroidal = true;
    ctx.is_boundary_anannular = true;
    ctx.declared_representativity[0] = DeclaredRep{ExtInt::of(6), ExtInt::of(6), ""};
    FillingReport frk = filling_certificate(knot3.diagram, ctx, {{0, 1, 1}});
    cr.require(frk.cert.passed() && !frk.all_nontrivial_hyperbolic,
               "blanket certificate fired for a knot on a torus");
}

// 7. Validation facts on the fixture corpus.
void validation_fixtures(Criterion& cr) {
    {
        SLDDocument doc = load_fixture("fig2_t2");
        cr.require(is_alternating(doc.diagram).alternating,
                   "two-crossing torus diagram should alternate");
        cr.require(!checkerboard_colouring(doc.diagram).colourable,
                   "two-crossing torus diagram should not be colourable");
        RepReport rep = representativity(doc.diagram, doc.ambient);
        cr.require(!rep.e.infinite && rep.e.value == 0,
                   "edge representativity should be zero");
    }
    {
        SLDDocument doc = load_fixture("sum_trefoils_s2");
        WeakPrimenessReport wp = is_weakly_prime(doc.diagram);
        cr.require(!wp.weakly_prime && wp.witness.has_value(),
                   "connect sum should fail weak primeness with a witness");
    }
    {
        SLDDocument doc = load_fixture("kink_s2");
        cr.require(!is_weakly_prime(doc.diagram).weakly_prime,
                   "a one-crossing sphere diagram is not weakly prime");
    }
    {
        SLDDocument doc = load_fixture("weave4_t2");
        Certificate cert = wga_certificate(doc.diagram, doc.ambient);
        cr.require(cert.passed(), "square weave should carry a full certificate");
        RepReport rep = representativity(doc.diagram, doc.ambient);
        cr.require(rep.r.infinite,
                   "thickened-surface representativity should be infinite");
    }
}

// 8. Classification decision table, plus the certificate contract: no
// conclusion is ever emitted alongside a failed or undeclared hypothesis.
void classification(Criterion& cr) {
    SLDDocument weave = load_fixture("weave4_t2");
    cr.require(classify_geometry(weave.diagram, weave.ambient).geometry ==
                   GeometryClass::Hyperbolic,
               "square weave not classified hyperbolic");

    SLDDocument band = load_fixture("band3_t2");
    SLDDocument knot = load_fixture("knot3_t2");
    AmbientContext ctx = band.ambient;
    ctx.heegaard = false;
    cr.require(classify_geometry(band.diagram, ctx).geometry ==
                   GeometryClass::Satellite,
               "non-Heegaard torus should give a satellite");
    ctx.heegaard = true;
    ctx.annulus_core_knotted = true;
    cr.require(classify_geometry(band.diagram, ctx).geometry ==
                   GeometryClass::Satellite,
               "knotted annulus core should give a satellite");
    ctx.annulus_core_knotted = false;
    cr.require(classify_geometry(band.diagram, ctx).geometry ==
                   GeometryClass::Hyperbolic,
               "unknotted annulus core should give a hyperbolic knot");
    AmbientContext kctx = knot.ambient;
    kctx.heegaard = true;
    cr.require(classify_geometry(knot.diagram, kctx).geometry ==
                   GeometryClass::Hyperbolic,
               "all-disk Heegaard torus diagram should be hyperbolic");

    SLDDocument tre = load_fixture("trefoil_s2");
    TwistStructure ts = twist_structure(tre.diagram);
    cr.require(ts.bigon_cycle.has_value(),
               "trefoil should have a closed bigon cycle witness");
    VolumeBound v = volume_lower_bound(tre.diagram, tre.ambient);
    cr.require(!v.cert.passed() &&
                   v.cert.refusal.find("closed bigon cycle") != std::string::npos,
               "bigon cycle not refused in the volume bound");
    CombinatorialLengthBound cl =
        combinatorial_length_bound(tre.diagram, tre.ambient, {0, 1, 5});
    cr.require(!cl.cert.passed(), "bigon cycle not refused in the length bound");

    // fuzz the declared flags: conclusions only on all-pass certificates
    std::mt19937 rng(7);
    auto tribool = [&](std::optional<bool>& f) {
        int r = rng() % 3;
        if (r == 0) f.reset();
        else f = (r == 1);
    };
    auto audit = [&](const Certificate& c) {
        bool all_pass = true;
        for (const Hypothesis& h : c.hypotheses)
            all_pass &= (h.status == HypothesisStatus::Pass);
        if (!c.conclusion.empty())
            cr.require(c.refusal.empty() && all_pass,
                       "conclusion emitted on " + c.statement +
                           " despite: " + c.refusal);
        if (!all_pass) cr.require(!c.refusal.empty(), "failure without refusal");
    };
    const char* names[] = {"fig8_s2", "borromean_s2", "weave4_t2", "band3_t2",
                           "knot3_t2", "knot_g5"};
    for (int iter = 0; iter < 120; ++iter) {
        SLDDocument doc = load_fixture(names[rng() % std::size(names)]);
        AmbientContext fctx = doc.ambient;
        tribool(fctx.is_atoroidal);
        tribool(fctx.is_boundary_anannular);
        tribool(fctx.boundary_incompressible);
        tribool(fctx.heegaard);
        tribool(fctx.annulus_core_knotted);
        audit(volume_lower_bound(doc.diagram, fctx).cert);
        audit(classify_geometry(doc.diagram, fctx).cert);
        audit(primeness(doc.diagram, fctx));
        audit(slope_length_bounds(doc.diagram, fctx, 0).cert);
        audit(geometric_filling_threshold(doc.diagram, fctx, 0).cert);
        audit(filled_volume_bound(doc.diagram, fctx, {0, 1, 6}).cert);
        audit(combinatorial_length_bound(doc.diagram, fctx, {0, 1, 6}).cert);
        audit(filling_certificate(doc.diagram, fctx, {{0, 1, 6}}).cert);
    }
}

}  // namespace

int main() {
    struct Entry {
        const char* label;
        void (*run)(Criterion&);
    };
    const Entry entries[] = {
        {"1 Euler identities on 1000 random diagrams", euler_identities},
        {"2 chunk decomposition invariants", chunk_invariants},
        {"3 combinatorial Gauss-Bonnet", gauss_bonnet},
        {"4 volume bounds against known volumes", volume_bounds},
        {"5 slope length bounds on a sphere", sphere_reduction},
        {"6 Dehn filling certificates", filling_certificates},
        {"7 validation fixtures", validation_fixtures},
        {"8 classification and certificate contract", classification},
    };
    int failures = 0;
    for (const Entry& e : entries) {
        Criterion cr;
        cr.label = e.label;
        try {
            e.run(cr);
        } catch (const std::exception& ex) {
            cr.ok = false;
            cr.notes.push_back(std::string("exception: ") + ex.what());
        }
        std::printf("%-48s %s\n", cr.label.c_str(), cr.ok ? "PASS" : "FAIL");
        for (const std::string& n : cr.notes)
            std::printf("    %s\n", n.c_str());
        if (!cr.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
