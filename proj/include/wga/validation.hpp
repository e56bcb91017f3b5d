#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wga/ambient.hpp"
#include "wga/certificate.hpp"
#include "wga/cuts.hpp"
#include "wga/diagram.hpp"
#include "wga/representativity.hpp"
#include "wga/twist.hpp"

namespace wga {

// ---------------------------------------------------------------------------
// Alternation

struct AlternationReport {
    bool alternating = true;
    std::optional<int> witness_edge;  // edge whose two ends agree in over-ness
};

// A diagram is alternating iff every edge has one over-end and one under-end.
inline AlternationReport is_alternating(const SurfaceDiagram& d) {
    for (int e = 0; e < d.num_edges(); ++e) {
        const DiagramEdge& ed = d.edges[e];
        bool oa = d.is_over_port(ed.a.crossing, ed.a.port);
        bool ob = d.is_over_port(ed.b.crossing, ed.b.port);
        if (oa == ob) return {false, e};
    }
    return {};
}

// Independent formulation: along every face boundary walk, all arrival ends
// share their over-ness (passages alternate under-to-over along the strands).
inline bool face_walks_alternating(const SurfaceDiagram& d) {
    for (const FaceBoundary& w : d.faces.walks) {
        std::optional<bool> over;
        for (dart_t t : w.darts) {
            dart_t a = d.alpha(t);
            bool o = d.is_over_port(dart_crossing(a), dart_port(a));
            if (!over) over = o;
            else if (*over != o) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Checkerboard colouring

struct Colouring {
    bool colourable = false;
    std::vector<int> colour;          // face -> 0 (white) or 1 (shaded)
    std::vector<int> odd_cycle;       // face ids of an odd closed walk witness
};

// Two-colour the faces so that the faces across every edge differ. Requires
// an alternating diagram (the colouring is what orients the crossings
// consistently); fails with an odd cycle in the face-adjacency graph.
inline Colouring checkerboard_colouring(const SurfaceDiagram& d) {
    if (!is_alternating(d).alternating)
        throw diagram_error("checkerboard colouring requires an alternating diagram");
    Colouring col;
    const int F = static_cast<int>(d.faces.faces.size());
    col.colour.assign(F, -1);
    std::vector<int> parent(F, -1), parent_edge(F, -1);
    // adjacency across each edge, with multiplicity
    std::vector<std::vector<std::pair<int, int>>> adj(F);  // (other face, edge)
    for (int e = 0; e < d.num_edges(); ++e) {
        dart_t a = dart_of(d.edges[e].a.crossing, d.edges[e].a.port);
        dart_t b = dart_of(d.edges[e].b.crossing, d.edges[e].b.port);
        int fa = d.faces.dart_face[a], fb = d.faces.dart_face[b];
        adj[fa].push_back({fb, e});
        if (fa != fb) adj[fb].push_back({fa, e});
    }
    for (int start = 0; start < F; ++start) {
        if (col.colour[start] >= 0) continue;
        col.colour[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop_front();
            for (auto [g, e] : adj[f]) {
                if (col.colour[g] < 0) {
                    col.colour[g] = 1 - col.colour[f];
                    parent[g] = f;
                    parent_edge[g] = e;
                    queue.push_back(g);
                } else if (col.colour[g] == col.colour[f]) {
                    // odd closed walk: paths to the BFS root plus the edge f-g
                    std::vector<int> pf, pg;
                    for (int x = f; x >= 0; x = parent[x]) pf.push_back(x);
                    for (int x = g; x >= 0; x = parent[x]) pg.push_back(x);
                    while (pf.size() > 1 && pg.size() > 1 &&
                           pf[pf.size() - 2] == pg[pg.size() - 2]) {
                        pf.pop_back();
                        pg.pop_back();
                    }
                    col.odd_cycle = pf;
                    col.odd_cycle.insert(col.odd_cycle.end(), pg.rbegin(), pg.rend());
                    col.colourable = false;
                    return col;
                }
            }
        }
    }
    col.colourable = true;
    return col;
}

// ---------------------------------------------------------------------------
// Weak primeness: two-cut curves

struct TwoCutCurve {
    std::array<int, 2> edges{-1, -1};  // edges crossed (equal for a doubled edge)
    std::array<int, 2> faces{-1, -1};  // faces the two arcs run through
    bool bounds_disk = false;
    int disk_crossings = 0;  // crossings on an offending disk side
};

struct WeakPrimenessReport {
    bool weakly_prime = true;
    std::optional<TwoCutCurve> witness;
    std::string reason;
};

namespace detail {

// Run the cut for every choice of which region keeps the genus and extra
// boundary walks of each non-disk face met by the chords.
template <typename Fn>
inline bool for_each_region_choice(const SurfaceDiagram& d, const CutSpec& spec,
                                   Fn&& fn) {
    std::set<int> nondisk;
    for (const Chord& ch : spec.chords)
        for (const GapRef& g : {ch.a, ch.b}) {
            int f = d.faces.dart_face[g.side];
            if (!d.faces.faces[f].is_disk) nondisk.insert(f);
        }
    std::vector<int> faces(nondisk.begin(), nondisk.end());
    std::vector<int> choice(faces.size(), 0);
    for (;;) {
        std::map<int, int> mc;
        for (size_t i = 0; i < faces.size(); ++i) mc[faces[i]] = choice[i];
        if (fn(cut_along(d, spec, mc))) return true;
        size_t i = 0;
        for (; i < faces.size(); ++i) {
            if (++choice[i] < 3) break;  // a face is cut into at most 3 regions here
            choice[i] = 0;
        }
        if (i == faces.size()) return false;
    }
}

// Components of the cut surface that the curve borders (its at most two sides).
inline std::vector<const CutComponent*> curve_sides(const CutResult& r) {
    std::vector<const CutComponent*> sides;
    for (const CutComponent& c : r.components)
        if (c.touches_curve()) sides.push_back(&c);
    return sides;
}

}  // namespace detail

// Enumerate every two-cut curve class; fn(curve, result) returning true stops.
template <typename Fn>
inline void enumerate_two_cut_curves(const SurfaceDiagram& d, Fn&& fn) {
    const int E = d.num_edges();
    auto run = [&](TwoCutCurve curve, const CutSpec& spec) {
        return detail::for_each_region_choice(d, spec, [&](const CutResult& r) {
            if (!r.valid) return false;
            return fn(curve, r);
        });
    };
    auto side_dart = [&](int e, bool first) {
        const EndRef& r = first ? d.edges[e].a : d.edges[e].b;
        return dart_of(r.crossing, r.port);
    };
    for (int e = 0; e < E; ++e) {
        dart_t a = side_dart(e, true), b = side_dart(e, false);
        int fa = d.faces.dart_face[a], fb = d.faces.dart_face[b];
        CutSpec spec;
        spec.cuts_per_edge.assign(E, 0);
        spec.cuts_per_edge[e] = 2;
        // curve crossing one edge twice, each arc staying on its own side
        spec.chords = {{{e, 0, a}, {e, 1, a}}, {{e, 0, b}, {e, 1, b}}};
        if (run({{e, e}, {fa, fb}, false, 0}, spec)) return;
        if (fa == fb) {
            // both sides share a face: the arcs may swap sides
            spec.chords = {{{e, 0, a}, {e, 1, b}}, {{e, 1, a}, {e, 0, b}}};
            if (run({{e, e}, {fa, fb}, false, 0}, spec)) return;
        }
    }
    for (int e1 = 0; e1 < E; ++e1)
        for (int e2 = e1 + 1; e2 < E; ++e2) {
            dart_t a1 = side_dart(e1, true), b1 = side_dart(e1, false);
            dart_t a2 = side_dart(e2, true), b2 = side_dart(e2, false);
            auto face = [&](dart_t t) { return d.faces.dart_face[t]; };
            for (bool swap : {false, true}) {
                dart_t x2 = swap ? b2 : a2, y2 = swap ? a2 : b2;
                if (face(a1) != face(x2) || face(b1) != face(y2)) continue;
                CutSpec spec;
                spec.cuts_per_edge.assign(E, 0);
                spec.cuts_per_edge[e1] = spec.cuts_per_edge[e2] = 1;
                spec.chords = {{{e1, 0, a1}, {e2, 0, x2}}, {{e1, 0, b1}, {e2, 0, y2}}};
                if (run({{e1, e2}, {face(a1), face(b1)}, false, 0}, spec)) return;
            }
        }
}

// Weak primeness: every disk bounded by a curve crossing the projection twice
// meets it in a single embedded arc; genus-0 components additionally need at
// least two crossings.
inline WeakPrimenessReport is_weakly_prime(const SurfaceDiagram& d) {
    WeakPrimenessReport rep;
    std::vector<int> crossings_on(d.surfaces.size(), 0);
    for (const Crossing& c : d.crossings) ++crossings_on[c.surface];
    for (size_t s = 0; s < d.surfaces.size(); ++s)
        if (d.surfaces[s].genus == 0 && crossings_on[s] < 2) {
            rep.weakly_prime = false;
            rep.reason = "a genus-0 component carries fewer than two crossings";
            return rep;
        }
    enumerate_two_cut_curves(d, [&](const TwoCutCurve& curve, const CutResult& r) {
        auto sides = detail::curve_sides(r);
        int genus = d.surfaces[d.crossings[d.edges[curve.edges[0]].a.crossing].surface].genus;
        if (genus == 0) {
            // both complementary disks would have to contain crossings
            bool has_arc_side = false;
            for (const CutComponent* c : sides)
                if (c->crossings == 0) has_arc_side = true;
            if (!has_arc_side && !sides.empty()) {
                rep.weakly_prime = false;
                rep.witness = curve;
                rep.witness->bounds_disk = true;
                rep.witness->disk_crossings = sides.front()->crossings;
                rep.reason = "both sides of the curve contain crossings";
                return true;
            }
        } else {
            for (const CutComponent* c : sides)
                if (c->is_disk() && c->crossings > 0) {
                    rep.weakly_prime = false;
                    rep.witness = curve;
                    rep.witness->bounds_disk = true;
                    rep.witness->disk_crossings = c->crossings;
                    rep.reason = "a bounded disk contains crossings";
                    return true;
                }
        }
        return false;
    });
    return rep;
}

// Stronger property used as the no-normal-bigon precondition: every disk side
// of every two-cut curve is crossing-free. Coincides with weak primeness on
// positive-genus components.
inline bool two_cut_disk_sides_crossing_free(const SurfaceDiagram& d) {
    bool ok = true;
    enumerate_two_cut_curves(d, [&](const TwoCutCurve&, const CutResult& r) {
        for (const CutComponent* c : detail::curve_sides(r))
            if (c->is_disk() && c->crossings > 0) {
                ok = false;
                return true;
            }
        return false;
    });
    return ok;
}

// ---------------------------------------------------------------------------
// Weak twist-reducedness: four-cut curves through two crossing corners

struct FourCutCurve {
    int crossing1 = -1, corner1 = -1;  // corner between ports corner, corner+1
    int crossing2 = -1, corner2 = -1;
    std::vector<int> disk_crossings;   // contents of the offending disk
};

struct TwistReducedReport {
    bool weakly_twist_reduced = true;
    std::optional<FourCutCurve> witness;
};

// A curve meeting the projection in four points adjacent to two crossings must
// bound, on one side, a disk containing only the bigon chain between them.
inline TwistReducedReport is_weakly_twist_reduced(const SurfaceDiagram& d) {
    if (!is_alternating(d).alternating)
        throw diagram_error("twist-reducedness requires an alternating diagram");
    TwistReducedReport rep;
    TwistStructure ts = twist_structure(d);
    const int n = d.num_crossings();
    const int E = d.num_edges();

    // side qualifies when its contents are a string of bigons joining the two
    // marked crossings (the marked crossings may lie inside or outside)
    auto qualifies = [&](const CutComponent& c, int c1, int c2) {
        if (!c.is_disk()) return false;
        if (c.crossings == 0) return true;
        std::set<int> inner(c.crossing_ids.begin(), c.crossing_ids.end());
        inner.erase(c1);
        inner.erase(c2);
        return is_bigon_string(ts, c1, c2, inner);
    };

    for (int c1 = 0; c1 < n && rep.weakly_twist_reduced; ++c1)
        for (int c2 = c1 + 1; c2 < n && rep.weakly_twist_reduced; ++c2)
            for (int q1 = 0; q1 < 4 && rep.weakly_twist_reduced; ++q1)
                for (int q2 = 0; q2 < 4 && rep.weakly_twist_reduced; ++q2) {
                    // edges flanking each corner
                    std::array<std::pair<int, int>, 4> ends = {
                        std::pair{c1, q1}, {c1, (q1 + 1) % 4},
                        {c2, q2}, {c2, (q2 + 1) % 4}};
                    CutSpec spec;
                    spec.cuts_per_edge.assign(E, 0);
                    bool degenerate = false;
                    for (auto [c, p] : ends)
                        if (++spec.cuts_per_edge[d.edge_at[c][p]] > 2) degenerate = true;
                    if (degenerate) continue;
                    // cut index near a given end: 0 at the canonical start
                    auto cut_near = [&](int c, int p) {
                        int e = d.edge_at[c][p];
                        if (spec.cuts_per_edge[e] == 1) return GapRef{e, 0, -1};
                        dart_t here = dart_of(c, p);
                        dart_t other = -1;
                        for (auto [cc, pp] : ends)
                            if (d.edge_at[cc][pp] == e && dart_of(cc, pp) != here)
                                other = dart_of(cc, pp);
                        return GapRef{e, here < other ? 0 : 1, -1};
                    };
                    // corner arcs: the walk turning through each corner
                    auto corner_chord = [&](int c, int q) {
                        GapRef ga = cut_near(c, q);
                        ga.side = d.alpha(dart_of(c, q));
                        GapRef gb = cut_near(c, (q + 1) % 4);
                        gb.side = dart_of(c, (q + 1) % 4);
                        return Chord{ga, gb};
                    };
                    // far sides of the four cuts, to be joined by the long arcs
                    auto far_gap = [&](int c, int p, bool outward) {
                        GapRef g = cut_near(c, p);
                        g.side = outward ? dart_of(c, p) : d.alpha(dart_of(c, p));
                        return g;
                    };
                    GapRef f1 = far_gap(c1, q1, true);
                    GapRef f1b = far_gap(c1, (q1 + 1) % 4, false);
                    GapRef f2 = far_gap(c2, q2, true);
                    GapRef f2b = far_gap(c2, (q2 + 1) % 4, false);
                    for (bool swap : {false, true}) {
                        CutSpec cand = spec;
                        cand.chords = {corner_chord(c1, q1), corner_chord(c2, q2),
                                       {f1, swap ? f2b : f2}, {f1b, swap ? f2 : f2b}};
                        detail::for_each_region_choice(d, cand, [&](const CutResult& r) {
                            if (!r.valid) return false;
                            auto sides = detail::curve_sides(r);
                            bool any_disk = false, any_ok = false;
                            const CutComponent* bad = nullptr;
                            for (const CutComponent* c : sides) {
                                if (c->is_disk()) {
                                    any_disk = true;
                                    if (qualifies(*c, c1, c2)) any_ok = true;
                                    else bad = c;
                                }
                            }
                            if (any_disk && !any_ok) {
                                rep.weakly_twist_reduced = false;
                                rep.witness = FourCutCurve{c1, q1, c2, q2,
                                                           bad ? bad->crossing_ids
                                                               : std::vector<int>{}};
                                return true;
                            }
                            return false;
                        });
                        if (!rep.weakly_twist_reduced) break;
                    }
                }
    return rep;
}

// ---------------------------------------------------------------------------
// The full diagrammatic certificate

inline Certificate wga_certificate(const SurfaceDiagram& d, const AmbientContext& ctx) {
    Certificate cert;
    cert.statement = "weakly generalised alternating diagram";

    if (d.free_loops > 0)
        cert.require(Hypothesis::fail("every link component meets a crossing",
                                      std::to_string(d.free_loops) +
                                          " crossing-free component(s)"));
    else
        cert.require(Hypothesis::pass("every link component meets a crossing"));

    std::vector<int> crossings_on(d.surfaces.size(), 0);
    for (const Crossing& c : d.crossings) ++crossings_on[c.surface];
    bool meets_all = true;
    for (size_t s = 0; s < d.surfaces.size(); ++s)
        if (crossings_on[s] == 0) {
            meets_all = false;
            cert.require(Hypothesis::fail(
                "projection meets every surface component",
                "surface component " + std::to_string(d.surfaces[s].id) + " is empty"));
            break;
        }
    if (meets_all)
        cert.require(Hypothesis::pass("projection meets every surface component"));

    AlternationReport alt = is_alternating(d);
    if (alt.alternating)
        cert.require(Hypothesis::pass("alternating"));
    else
        cert.require(Hypothesis::fail(
            "alternating", "edge " + std::to_string(*alt.witness_edge) +
                               " has equal over-ness at both ends"));

    if (alt.alternating) {
        Colouring col = checkerboard_colouring(d);
        if (col.colourable)
            cert.require(Hypothesis::pass("checkerboard colourable"));
        else
            cert.require(Hypothesis::fail("checkerboard colourable",
                                          "odd cycle in the face-adjacency graph"));
    } else {
        cert.require(Hypothesis::fail("checkerboard colourable",
                                      "not decidable: diagram is not alternating"));
    }

    WeakPrimenessReport prime = is_weakly_prime(d);
    if (prime.weakly_prime)
        cert.require(Hypothesis::pass("weakly prime"));
    else
        cert.require(Hypothesis::fail("weakly prime", prime.reason));

    try {
        RepReport rep = representativity(d, ctx);
        Hypothesis h;
        h.name = "representativity at least 4";
        h.provenance = rep.method;
        h.detail = "r = " + rep.r.str();
        h.status = rep.r >= ExtInt::of(4) ? HypothesisStatus::Pass : HypothesisStatus::Fail;
        cert.require(h);
    } catch (const diagram_error& e) {
        cert.require(Hypothesis::undeclared("representativity at least 4", e.what()));
    }

    cert.conclude("weakly generalised alternating");
    return cert;
}

}  // namespace wga
