#pragma once

// Diagram invariants and the certificates built on them: checkerboard-surface
// Euler characteristics, guts Euler characteristic, volume lower bounds,
// geometry classification, primeness, and checkerboard-surface geometry.

#include <cmath>
#include <string>
#include <vector>

#include "wga/chunks.hpp"
#include "wga/representativity.hpp"
#include "wga/validation.hpp"

namespace wga {

// Volume of the regular ideal hyperbolic octahedron.
inline constexpr double octahedron_volume = 3.66386237670887;

// ---------------------------------------------------------------------------
// Checkerboard surfaces

// The two spanning surfaces built from the coloured regions joined by a
// twisted band at every crossing.
struct CheckerboardStats {
    int chi_shaded = 0, chi_white = 0;  // Euler characteristics of the surfaces
    int r_shaded = 0, r_white = 0;      // non-bigon regions per colour
    int i_boundary = 0;                 // intersection number of the two boundaries
    std::vector<int> colour;            // region colouring used
};

inline CheckerboardStats checkerboard_stats(const SurfaceDiagram& d) {
    Colouring col = checkerboard_colouring(d);
    if (!col.colourable)
        throw diagram_error("checkerboard stats require a colourable diagram");
    CheckerboardStats st;
    st.colour = col.colour;
    const int c = d.num_crossings();
    for (const Face& f : d.faces.faces) {
        bool bigon = f.is_disk && f.degree == 2;
        if (col.colour[f.id] == 1) {
            st.chi_shaded += f.euler_char();
            if (!bigon) st.r_shaded++;
        } else {
            st.chi_white += f.euler_char();
            if (!bigon) st.r_white++;
        }
    }
    // each crossing band joins regions of one colour and subtracts one from
    // that surface's Euler characteristic
    st.chi_shaded -= c;
    st.chi_white -= c;
    st.i_boundary = 2 * c;
    if (st.chi_shaded + st.chi_white != d.euler_characteristic() - c)
        throw diagram_error("checkerboard Euler characteristics are inconsistent");
    return st;
}

// ---------------------------------------------------------------------------
// Shared hypothesis helpers

namespace detail {

inline bool all_surfaces_positive_genus(const SurfaceDiagram& d) {
    for (const SurfaceComponent& s : d.surfaces)
        if (s.genus < 1) return false;
    return true;
}

inline bool all_regions_disks(const SurfaceDiagram& d) {
    for (const Face& f : d.faces.faces)
        if (!f.is_disk) return false;
    return true;
}

inline std::optional<int> annular_region(const SurfaceDiagram& d) {
    for (const Face& f : d.faces.faces)
        if (f.euler_char() == 0 && f.genus == 0) return f.id;
    return std::nullopt;
}

inline void require_reduced_alternating(Certificate& cert, const SurfaceDiagram& d) {
    if (d.free_loops > 0)
        cert.require(Hypothesis::fail("every link component meets a crossing",
                                      std::to_string(d.free_loops) +
                                          " crossing-free component(s)"));
    else
        cert.require(Hypothesis::pass("every link component meets a crossing"));

    AlternationReport alt = is_alternating(d);
    if (alt.alternating)
        cert.require(Hypothesis::pass("alternating"));
    else
        cert.require(Hypothesis::fail(
            "alternating", "edge " + std::to_string(*alt.witness_edge) +
                               " has equal over-ness at both ends"));

    WeakPrimenessReport prime = is_weakly_prime(d);
    if (prime.weakly_prime)
        cert.require(Hypothesis::pass("weakly prime"));
    else
        cert.require(Hypothesis::fail("weakly prime", prime.reason));
}

// A curve on a sphere splitting a handlebody pair meets a connected nonempty
// diagram at least twice, so representativity hypotheses against thresholds
// above 2 need the ambient context.
inline void require_representativity(Certificate& cert, const SurfaceDiagram& d,
                                     const AmbientContext& ctx, int threshold,
                                     bool strict, bool hat = false) {
    std::string name = std::string(hat ? "two-sided representativity " : "representativity ") +
                       (strict ? "greater than " : "at least ") + std::to_string(threshold);
    try {
        RepReport rep = representativity(d, ctx);
        ExtInt v = hat ? rep.r_hat : rep.r;
        bool ok = strict ? v > ExtInt::of(threshold) : v >= ExtInt::of(threshold);
        Hypothesis h;
        h.name = name;
        h.provenance = rep.method;
        h.detail = (hat ? "r-hat = " : "r = ") + v.str();
        if (!ok)
            h.detail += std::string(", need ") + (strict ? "> " : ">= ") +
                        std::to_string(threshold);
        h.status = ok ? HypothesisStatus::Pass : HypothesisStatus::Fail;
        cert.require(h);
    } catch (const diagram_error& e) {
        cert.require(Hypothesis::undeclared(name, e.what()));
    }
}

// Topological facts about Y cut along N(F). For a thickened surface the cut
// pieces are products F x I, which are atoroidal, carry no essential annulus
// with both boundaries on the outer copy of F, and have incompressible outer
// boundary once F has positive genus; otherwise the facts must be declared.
inline void require_cut_complement_flags(Certificate& cert, const SurfaceDiagram& d,
                                         const AmbientContext& ctx,
                                         bool need_boundary_incompressible) {
    auto flag = [&](const char* name, const std::optional<bool>& declared) {
        if (ctx.kind == AmbientKind::ThickenedSurface)
            cert.require(Hypothesis::pass(name, "computed", "product regions"));
        else if (!declared)
            cert.require(Hypothesis::undeclared(name));
        else if (*declared)
            cert.require(Hypothesis::pass(name, "declared"));
        else
            cert.require(Hypothesis::fail(name, "", "declared"));
    };
    flag("complement of the projection surface is atoroidal", ctx.is_atoroidal);
    flag("complement of the projection surface is boundary-anannular",
         ctx.is_boundary_anannular);
    if (need_boundary_incompressible &&
        boundary_euler_char(ctx, d.euler_characteristic()) != 0)
        flag("boundary of the ambient manifold is incompressible",
             ctx.boundary_incompressible);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Guts of the cut manifold

struct GutsReport {
    Certificate cert;
    int chi_guts = 0;
};

// Euler characteristic of the guts of the exterior cut along one checkerboard
// surface: chi(F) + chi(boundary of Y)/2 minus the number of non-bigon regions
// of the opposite colour.
inline GutsReport guts_euler(const SurfaceDiagram& d, const AmbientContext& ctx,
                             RegionColour cut_along) {
    GutsReport out;
    Certificate& cert = out.cert;
    cert.statement = "Euler characteristic of the guts of the exterior cut along the " +
                     std::string(cut_along == RegionColour::Shaded ? "shaded" : "white") +
                     " checkerboard surface";

    detail::require_reduced_alternating(cert, d);

    AlternationReport alt = is_alternating(d);
    Colouring col;
    if (alt.alternating && (col = checkerboard_colouring(d)).colourable)
        cert.require(Hypothesis::pass("checkerboard colourable"));
    else
        cert.require(Hypothesis::fail("checkerboard colourable"));

    TwistReducedReport twr = alt.alternating ? is_weakly_twist_reduced(d)
                                             : TwistReducedReport{false, {}};
    if (twr.weakly_twist_reduced)
        cert.require(Hypothesis::pass("weakly twist-reduced"));
    else
        cert.require(Hypothesis::fail("weakly twist-reduced"));

    if (detail::all_surfaces_positive_genus(d))
        cert.require(Hypothesis::pass("projection surface has genus at least one"));
    else
        cert.require(Hypothesis::fail(
            "projection surface has genus at least one",
            "a genus-0 component is present; the spherical case is the classical "
            "alternating setting"));

    if (detail::all_regions_disks(d))
        cert.require(Hypothesis::pass("all regions are disks"));
    else
        cert.require(Hypothesis::fail("all regions are disks"));

    detail::require_representativity(cert, d, ctx, 4, /*strict=*/true);
    detail::require_cut_complement_flags(cert, d, ctx, true);

    if (cert.refusal.empty()) {
        CheckerboardStats st = checkerboard_stats(d);
        int opposite = cut_along == RegionColour::Shaded ? st.r_white : st.r_shaded;
        out.chi_guts = d.euler_characteristic() +
                       boundary_euler_char(ctx, d.euler_characteristic()) / 2 - opposite;
        cert.conclude("chi(guts) = " + std::to_string(out.chi_guts));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Volume lower bound

struct VolumeBound {
    Certificate cert;
    double bound = 0;     // lower bound on the hyperbolic volume
    double units_v8 = 0;  // the same bound in multiples of the octahedron volume
    int tw = 0, chi_F = 0, chi_dY = 0;
};

// vol >= (v8/2) (tw - chi(F) - chi(boundary of Y)). On a sphere this is the
// classical twist-number bound for alternating links; on positive genus it
// needs the representativity and cut-complement hypotheses.
inline VolumeBound volume_lower_bound(const SurfaceDiagram& d,
                                      const AmbientContext& ctx) {
    VolumeBound out;
    Certificate& cert = out.cert;
    cert.statement = "lower bound for the hyperbolic volume of the link exterior";

    detail::require_reduced_alternating(cert, d);

    AlternationReport alt = is_alternating(d);
    if (alt.alternating && checkerboard_colouring(d).colourable)
        cert.require(Hypothesis::pass("checkerboard colourable"));
    else
        cert.require(Hypothesis::fail("checkerboard colourable"));

    TwistReducedReport twr = alt.alternating ? is_weakly_twist_reduced(d)
                                             : TwistReducedReport{false, {}};
    if (twr.weakly_twist_reduced)
        cert.require(Hypothesis::pass("weakly twist-reduced"));
    else
        cert.require(Hypothesis::fail("weakly twist-reduced"));

    TwistStructure ts = twist_structure(d);
    if (ts.bigon_cycle) {
        std::string w;
        for (int c : *ts.bigon_cycle) w += (w.empty() ? "" : " ") + std::to_string(c);
        cert.require(Hypothesis::fail(
            "twist regions form chains",
            "closed bigon cycle through crossings " + w +
                "; the diagram bounds an annulus or Moebius band and is not hyperbolic"));
    } else {
        cert.require(Hypothesis::pass("twist regions form chains"));
    }

    if (detail::all_regions_disks(d))
        cert.require(Hypothesis::pass("all regions are disks"));
    else
        cert.require(Hypothesis::fail("all regions are disks"));

    bool sphere_case = true;
    for (const SurfaceComponent& s : d.surfaces) sphere_case &= s.genus == 0;
    if (sphere_case) {
        cert.require(Hypothesis::pass(
            "projection surface is a sphere or has genus at least one", "computed",
            "sphere: reduces to the classical twist-number bound"));
    } else if (detail::all_surfaces_positive_genus(d)) {
        cert.require(Hypothesis::pass(
            "projection surface is a sphere or has genus at least one"));
        detail::require_representativity(cert, d, ctx, 4, /*strict=*/true);
        detail::require_cut_complement_flags(cert, d, ctx, true);
    } else {
        cert.require(Hypothesis::fail(
            "projection surface is a sphere or has genus at least one",
            "mixed sphere and positive-genus components"));
    }

    if (cert.refusal.empty()) {
        out.tw = ts.tw;
        out.chi_F = d.euler_characteristic();
        out.chi_dY = boundary_euler_char(ctx, out.chi_F);
        out.units_v8 = 0.5 * (out.tw - out.chi_F - out.chi_dY);
        out.bound = octahedron_volume * out.units_v8;
        cert.conclude("volume at least " + std::to_string(out.units_v8) +
                      " times the octahedron volume");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Geometry classification

enum class GeometryClass { Hyperbolic, Satellite, Unknown };

struct GeometryReport {
    GeometryClass geometry = GeometryClass::Unknown;
    Certificate cert;
    std::vector<std::string> notes;
};

// Decide the geometric type of the link exterior from the diagram and the
// declared ambient facts. Knots on a torus in S^3 follow the satellite /
// hyperbolic decision table; positive-genus diagrams with disk regions and
// two-sided representativity above four are hyperbolic when the cut
// complement is atoroidal and boundary-anannular.
inline GeometryReport classify_geometry(const SurfaceDiagram& d,
                                        const AmbientContext& ctx) {
    GeometryReport out;
    Certificate& cert = out.cert;
    cert.statement = "geometric classification of the link exterior";

    Certificate base = wga_certificate(d, ctx);
    for (Hypothesis& h : base.hypotheses) cert.require(std::move(h));
    if (!cert.refusal.empty()) return out;

    bool knot = d.components.size() == 1 && d.free_loops == 0;
    bool torus_in_s3 =
        d.surfaces.size() == 1 && d.surfaces[0].genus == 1 &&
        (ctx.kind == AmbientKind::HeegaardTorusS3 || ctx.heegaard.has_value());

    if (knot && torus_in_s3) {
        bool heegaard =
            ctx.kind == AmbientKind::HeegaardTorusS3 || ctx.heegaard.value();
        if (!heegaard) {
            cert.require(Hypothesis::pass("the torus is not a Heegaard torus of S^3",
                                          "declared"));
            out.geometry = GeometryClass::Satellite;
            cert.conclude("satellite knot");
            return out;
        }
        cert.require(Hypothesis::pass("the torus is a Heegaard torus of S^3",
                                      ctx.kind == AmbientKind::HeegaardTorusS3
                                          ? "computed"
                                          : "declared"));
        if (detail::all_regions_disks(d)) {
            cert.require(Hypothesis::pass("all regions are disks"));
            out.geometry = GeometryClass::Hyperbolic;
            out.notes.push_back("the knot is not a satellite and not a torus knot");
            cert.conclude("hyperbolic knot");
            return out;
        }
        if (auto annulus = detail::annular_region(d)) {
            cert.require(Hypothesis::pass(
                "a region is an annulus", "computed",
                "region " + std::to_string(*annulus)));
            if (!ctx.annulus_core_knotted) {
                cert.require(Hypothesis::undeclared(
                    "knottedness of the core of the annular region"));
                return out;
            }
            if (*ctx.annulus_core_knotted) {
                cert.require(Hypothesis::pass(
                    "core of the annular region is a nontrivial torus knot",
                    "declared"));
                out.geometry = GeometryClass::Satellite;
                cert.conclude("satellite knot on the torus knot at the core of the "
                              "annular region");
            } else {
                cert.require(Hypothesis::pass(
                    "core of the annular region is an unknot", "declared"));
                out.geometry = GeometryClass::Hyperbolic;
                cert.conclude("hyperbolic knot");
            }
            return out;
        }
        cert.require(Hypothesis::fail(
            "regions are disks or one region is an annulus",
            "a non-disk, non-annulus region is present"));
        return out;
    }

    if (detail::all_surfaces_positive_genus(d))
        cert.require(Hypothesis::pass("projection surface has genus at least one"));
    else
        cert.require(Hypothesis::fail(
            "projection surface has genus at least one",
            "no classification is attempted on spheres beyond the torus table"));
    if (detail::all_regions_disks(d))
        cert.require(Hypothesis::pass("all regions are disks"));
    else
        cert.require(Hypothesis::fail("all regions are disks"));
    detail::require_representativity(cert, d, ctx, 4, /*strict=*/true, /*hat=*/true);
    detail::require_cut_complement_flags(cert, d, ctx, false);

    if (cert.refusal.empty()) {
        out.geometry = GeometryClass::Hyperbolic;
        out.notes.push_back(
            "the link exterior is toroidal only if the cut complement is toroidal; "
            "the cut complement was declared atoroidal");
        out.notes.push_back(
            "the link exterior is annular only if the cut complement is "
            "boundary-annular; it was declared boundary-anannular");
        if (knot) out.notes.push_back("the knot is not a torus knot");
        cert.conclude("hyperbolic link");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Primeness

inline Certificate primeness(const SurfaceDiagram& d, const AmbientContext& ctx) {
    Certificate cert;
    cert.statement = "the link is prime";
    detail::require_reduced_alternating(cert, d);
    detail::require_representativity(cert, d, ctx, 4, /*strict=*/false);
    detail::require_representativity(cert, d, ctx, 4, /*strict=*/true, /*hat=*/true);
    cert.conclude("prime link: the exterior contains no essential meridional annulus");
    return cert;
}

// ---------------------------------------------------------------------------
// Geometry of a checkerboard surface

enum class SurfaceClass { Quasifuchsian, Partial, Unknown };

struct SurfaceGeometryReport {
    SurfaceClass kind = SurfaceClass::Unknown;
    std::vector<std::string> facts;      // facts established without the full route
    std::string semi_fiber_alternative;  // set when the diagram is a bigon cycle
    Certificate cert;
};

// Geometric type of one checkerboard surface in the link exterior. The full
// route concludes quasifuchsian; otherwise partial facts (not accidental, not
// a semi-fiber) are reported when their own hypotheses hold.
inline SurfaceGeometryReport surface_geometry(const SurfaceDiagram& d,
                                              const AmbientContext& ctx,
                                              RegionColour colour) {
    SurfaceGeometryReport out;
    Certificate& cert = out.cert;
    cert.statement = std::string("geometry of the ") +
                     (colour == RegionColour::Shaded ? "shaded" : "white") +
                     " checkerboard surface";

    Certificate base = wga_certificate(d, ctx);
    if (!base.passed()) {
        for (Hypothesis& h : base.hypotheses) cert.require(std::move(h));
        return out;
    }
    cert.require(Hypothesis::pass("weakly generalised alternating"));

    RepReport rep;
    bool have_rep = false;
    try {
        rep = representativity(d, ctx);
        have_rep = true;
    } catch (const diagram_error&) {
    }

    bool full = detail::all_surfaces_positive_genus(d) &&
                detail::all_regions_disks(d) && have_rep &&
                rep.r_hat > ExtInt::of(4) &&
                (ctx.kind == AmbientKind::ThickenedSurface ||
                 (ctx.is_atoroidal.value_or(false) &&
                  ctx.is_boundary_anannular.value_or(false)));
    if (full) {
        cert.require(Hypothesis::pass("projection surface has genus at least one"));
        cert.require(Hypothesis::pass("all regions are disks"));
        detail::require_representativity(cert, d, ctx, 4, true, true);
        detail::require_cut_complement_flags(cert, d, ctx, false);
        out.kind = SurfaceClass::Quasifuchsian;
        cert.conclude("the checkerboard surface is quasifuchsian");
        return out;
    }

    // partial facts
    Colouring col = checkerboard_colouring(d);
    int opposite = colour == RegionColour::Shaded ? 0 : 1;
    bool knot = d.components.size() == 1 && d.free_loops == 0;

    if (have_rep && rep.r_hat > ExtInt::of(4))
        out.facts.push_back("not accidental (two-sided representativity above four)");
    else if (knot) {
        for (const Face& f : d.faces.faces)
            if (col.colour[f.id] == opposite && f.is_disk) {
                out.facts.push_back(
                    "not accidental (the opposite surface has a disk region)");
                break;
            }
    }

    bool opposite_all_bigons = true, opposite_all_disks = true;
    for (const Face& f : d.faces.faces)
        if (col.colour[f.id] == opposite) {
            opposite_all_disks &= f.is_disk;
            opposite_all_bigons &= f.is_disk && f.degree == 2;
        }
    if (opposite_all_bigons)
        out.semi_fiber_alternative =
            "the diagram is a closed string of opposite-colour bigons; the opposite "
            "surface is an annulus or Moebius band and this surface may be a "
            "semi-fiber";
    else if (opposite_all_disks)
        out.facts.push_back(
            "not a semi-fiber when the exterior is hyperbolic (the diagram is not a "
            "closed string of opposite-colour bigons)");

    out.kind = out.facts.empty() ? SurfaceClass::Unknown : SurfaceClass::Partial;
    return out;
}

}  // namespace wga
