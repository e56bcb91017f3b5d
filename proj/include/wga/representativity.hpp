#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wga/ambient.hpp"
#include "wga/diagram.hpp"
#include "wga/homology.hpp"

namespace wga {

// Representativity summary for a diagram in its ambient context.
struct RepReport {
    std::vector<ExtInt> r_minus;  // per surface component
    std::vector<ExtInt> r_plus;
    ExtInt r = ExtInt::inf();      // min over everything
    ExtInt r_hat = ExtInt::inf();  // min over components of max(r-, r+)
    ExtInt e = ExtInt::inf();      // edge-representativity (or lower bound)
    bool e_is_bound_only = false;
    std::optional<int> e_witness_face;  // non-disk face carrying an essential curve
    std::string method;                 // "computed" or "declared"
};

namespace detail {

inline std::optional<int> find_nondisk_face(const SurfaceDiagram& d, int surface) {
    for (const Face& f : d.faces.faces)
        if (!f.is_disk && f.surface == surface) return f.id;
    return std::nullopt;
}

}  // namespace detail

// Minimal geometric intersection number between the diagram's projection and
// an essential simple closed curve of the given homology class on a torus.
// Computed as a shortest essential dual cycle of that class in the Z^2-cover.
inline int min_slope_intersection(const SurfaceDiagram& d, H1Class slope) {
    if (d.surfaces.size() != 1 || d.surfaces[0].genus != 1)
        throw diagram_error("slope intersection requires a single torus component");
    if (slope.is_zero()) throw diagram_error("slope class must be nonzero");
    if (!is_primitive(slope)) throw diagram_error("slope class must be primitive");
    TorusGrading g = torus_grading(d);
    if (!g.all_disks) {
        // A curve inside a non-disk region misses the projection entirely;
        // its class (the region's boundary-walk class) is all we can serve.
        for (const Face& f : d.faces.faces) {
            if (f.is_disk) continue;
            for (int wi : f.walks) {
                H1Class c = g.walk_class(d.faces.walks[wi]);
                if (!c.is_zero() && det(c, slope) == 0) return 0;
            }
            if (f.genus > 0) return 0;  // handles carry every slope
        }
        throw diagram_error(
            "non-disk regions present: slope intersections are only computed for "
            "curves parallel to a region");
    }
    const long long bound = d.num_edges();
    if (std::abs(slope.x) > bound || std::abs(slope.y) > bound)
        throw diagram_error("slope exceeds the certified search bound");
    std::optional<int> best = min_crossings_of_class(d, g, slope, bound);
    if (!best)
        throw diagram_error("slope not reachable within the certified search bound");
    return *best;
}

// Edge-representativity: minimum intersections of any essential curve with
// the projection. Exact on genus-1 components (cover search); on genus >= 2
// only bounded: 0 with a witness region, else lower bound 1.
inline void edge_representativity(const SurfaceDiagram& d, RepReport& rep) {
    rep.e = ExtInt::inf();
    rep.e_is_bound_only = false;
    rep.e_witness_face.reset();
    for (const SurfaceComponent& s : d.surfaces) {
        if (s.genus == 0) continue;  // no essential curves on the sphere
        auto witness = detail::find_nondisk_face(d, s.id);
        if (s.genus == 1 && d.surfaces.size() == 1) {
            if (witness) {
                // an essential curve lives inside the region and misses pi(L)
                rep.e = ExtInt::of(0);
                rep.e_witness_face = witness;
                return;
            }
            TorusGrading g = torus_grading(d);
            std::optional<int> best =
                min_crossings_essential(d, g, d.num_edges());
            if (best && ExtInt::of(*best) < rep.e) rep.e = ExtInt::of(*best);
        } else {
            rep.e_is_bound_only = true;
            if (witness) {
                rep.e = ExtInt::of(0);
                rep.e_witness_face = witness;
                return;
            }
            if (ExtInt::of(1) < rep.e) rep.e = ExtInt::of(1);
        }
    }
}

// Representativity of the projection with respect to the ambient context.
inline RepReport representativity(const SurfaceDiagram& d, const AmbientContext& ctx) {
    RepReport rep;
    const size_t nc = d.surfaces.size();
    rep.r_minus.assign(nc, ExtInt::inf());
    rep.r_plus.assign(nc, ExtInt::inf());
    rep.method = "computed";
    switch (ctx.kind) {
        case AmbientKind::ThickenedSurface:
            // no compressing disks on either side
            break;
        case AmbientKind::HeegaardTorusS3: {
            if (nc != 1 || d.surfaces[0].genus > 1)
                throw diagram_error(
                    "HeegaardTorusS3 ambient requires a single surface component of genus 0 or 1");
            if (d.surfaces[0].genus == 0) {
                // Every curve on the splitting sphere bounds disks on both
                // sides; a curve transverse to a nonempty connected diagram
                // meets it at least twice.
                rep.r_minus[0] = rep.r_plus[0] = ExtInt::of(2);
            } else {
                if (!ctx.slope_minus || !ctx.slope_plus)
                    throw diagram_error(
                        "HeegaardTorusS3 ambient on a torus needs compressing slopes");
                H1Class sm{ctx.slope_minus->a, ctx.slope_minus->b};
                H1Class sp{ctx.slope_plus->a, ctx.slope_plus->b};
                rep.r_minus[0] = ExtInt::of(min_slope_intersection(d, sm));
                rep.r_plus[0] = ExtInt::of(min_slope_intersection(d, sp));
            }
            break;
        }
        case AmbientKind::Declared: {
            rep.method = "declared";
            for (size_t i = 0; i < nc; ++i) {
                if (!ctx.declared_representativity[i])
                    throw diagram_error(
                        "Declared ambient needs declared representativity for every component");
                rep.r_minus[i] = ctx.declared_representativity[i]->r_minus;
                rep.r_plus[i] = ctx.declared_representativity[i]->r_plus;
            }
            break;
        }
    }
    rep.r = ExtInt::inf();
    rep.r_hat = ExtInt::inf();
    for (size_t i = 0; i < nc; ++i) {
        rep.r = std::min(rep.r, std::min(rep.r_minus[i], rep.r_plus[i]));
        rep.r_hat = std::min(rep.r_hat, std::max(rep.r_minus[i], rep.r_plus[i]));
    }
    edge_representativity(d, rep);
    return rep;
}

}  // namespace wga
