#pragma once

// Chunk decomposition of the link complement: cutting the ambient manifold
// along the projection surface leaves two chunks whose boundaries carry the
// diagram graph. Faces are the two copies of each diagram region, edges are
// crossing arcs (glued in fours), and truncating the four-valent vertices
// leaves one boundary square per crossing and side. Interior angles are all
// pi/2, giving an angled decomposition with a combinatorial Gauss-Bonnet
// theorem.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "wga/ambient.hpp"
#include "wga/certificate.hpp"
#include "wga/diagram.hpp"
#include "wga/representativity.hpp"
#include "wga/validation.hpp"

namespace wga {

// Identifier conventions: interior face = 2*region + side, boundary square =
// 2*crossing + side, chunk-edge copy = 2*edge + side, boundary edge =
// 4*square + corner. Side 0/1 are the two sides of the projection surface.

enum class RegionColour { White = 0, Shaded = 1 };

struct ChunkFace {
    int region = 0;
    int side = 0;
    int colour = 0;        // 0 white, 1 shaded (from the face-walk over-strand rule)
    bool surface = false;  // bounded decomposition: left unglued
    // Per boundary walk, in walk order: the chunk-edge copy crossed along
    // each dart, and the boundary square + square corner at each vertex.
    std::vector<std::vector<int>> edge_copies;
    std::vector<std::vector<int>> corner_squares;
    std::vector<std::vector<int>> corner_sides;
};

struct BoundarySquare {
    int crossing = 0;
    int side = 0;
    std::array<int, 4> adjacent_face{};     // interior face across square side q
    std::array<int, 4> corner_edge_copy{};  // chunk edge at the vertex after side q
};

struct ChunkEdgeCopy {
    int edge = 0;
    int side = 0;
    int edge_class = 0;
};

struct EdgeClassInfo {
    int crossing = 0;      // the crossing arc this class comes from
    bool surface = false;  // bounded decomposition: flanks a surface face
    std::vector<int> members;  // chunk-edge copy ids
};

// Interior face 2r+0 is glued to 2r+1; boundary walk w position i maps to
// position i + rotation[w] (mod walk length) on the partner.
struct ChunkGluing {
    int region = 0;
    std::vector<int> rotation;  // per boundary walk, always +1 or -1
};

struct ChunkDecomposition {
    SurfaceDiagram diagram;
    AmbientContext ambient;
    bool bounded = false;
    int unglued_colour = -1;  // RegionColour left unglued, -1 for the full build
    int num_chunks = 2;
    std::vector<ChunkFace> interior_faces;
    std::vector<BoundarySquare> boundary_faces;
    std::vector<ChunkEdgeCopy> edge_copies;
    std::vector<EdgeClassInfo> edge_classes;
    std::vector<ChunkGluing> gluings;
    std::vector<int> boundary_edge_class;  // indexed 4*square + corner
    int exterior_faces_per_chunk = 0;
};

namespace detail {

// Over-strand side of the walk: every dart of a face walk arrives at an end
// of constant over-ness in an alternating diagram; "white" means over.
inline int walk_colour(const SurfaceDiagram& d, const FaceBoundary& w) {
    dart_t a = d.alpha(w.darts.front());
    return d.is_over_port(dart_crossing(a), dart_port(a)) ? 0 : 1;
}

inline void require_chunk_preconditions(const SurfaceDiagram& d) {
    if (d.free_loops > 0)
        throw diagram_error(
            "a crossing-free link component admits no chunk decomposition");
    if (!is_alternating(d).alternating)
        throw diagram_error("chunk decomposition requires an alternating diagram");
    for (const SurfaceComponent& s : d.surfaces) {
        bool met = false;
        for (const Crossing& c : d.crossings) met |= (c.surface == s.id);
        if (!met)
            throw diagram_error(
                "the projection misses a surface component; no chunk decomposition");
    }
}

}  // namespace detail

inline ChunkDecomposition build_chunk_decomposition(const SurfaceDiagram& d,
                                                    const AmbientContext& ctx) {
    detail::require_chunk_preconditions(d);
    ChunkDecomposition cd;
    cd.diagram = d;
    cd.ambient = ctx;
    const int n = d.num_crossings(), E = d.num_edges();
    const int R = static_cast<int>(d.faces.faces.size());

    // Edge classes: on side 0 a diagram edge carries the crossing arc of its
    // under-strand end, on side 1 of its over-strand end. Each crossing then
    // collects two copies from each side: glued in fours.
    cd.edge_classes.assign(n, {});
    cd.edge_copies.assign(2 * E, {});
    for (int e = 0; e < E; ++e) {
        const DiagramEdge& ed = d.edges[e];
        for (const EndRef& end : {ed.a, ed.b}) {
            int side = d.is_over_port(end.crossing, end.port) ? 1 : 0;
            cd.edge_copies[2 * e + side] = {e, side, end.crossing};
            cd.edge_classes[end.crossing].crossing = end.crossing;
            cd.edge_classes[end.crossing].members.push_back(2 * e + side);
        }
    }

    // Interior faces and their gluings. The partner of walk position i is
    // position i - 1 on white faces and i + 1 on shaded ones: the gluing
    // rotates each boundary component one notch.
    cd.interior_faces.assign(2 * R, {});
    for (const Face& f : d.faces.faces) {
        for (int side = 0; side < 2; ++side) {
            ChunkFace& cf = cd.interior_faces[2 * f.id + side];
            cf.region = f.id;
            cf.side = side;
            cf.colour = detail::walk_colour(d, d.faces.walks[f.walks.front()]);
            for (int wi : f.walks) {
                const FaceBoundary& w = d.faces.walks[wi];
                std::vector<int> copies, squares, sides;
                for (dart_t dd : w.darts) {
                    copies.push_back(2 * d.edge_at[dart_crossing(dd)][dart_port(dd)] +
                                     side);
                    dart_t a = d.alpha(dd);
                    squares.push_back(2 * dart_crossing(a) + side);
                    sides.push_back(dart_port(a));
                }
                cf.edge_copies.push_back(std::move(copies));
                cf.corner_squares.push_back(std::move(squares));
                cf.corner_sides.push_back(std::move(sides));
            }
        }
        ChunkGluing g;
        g.region = f.id;
        for (int wi : f.walks)
            g.rotation.push_back(
                detail::walk_colour(d, d.faces.walks[wi]) == 0 ? -1 : +1);
        cd.gluings.push_back(std::move(g));
    }

    // Boundary squares: the truncated four-valent vertices.
    cd.boundary_faces.assign(2 * n, {});
    for (int c = 0; c < n; ++c)
        for (int side = 0; side < 2; ++side) {
            BoundarySquare& b = cd.boundary_faces[2 * c + side];
            b.crossing = c;
            b.side = side;
            for (int q = 0; q < 4; ++q) {
                b.adjacent_face[q] = 2 * d.faces.corner_face[c][q] + side;
                b.corner_edge_copy[q] = 2 * d.edge_at[c][(q + 1) % 4] + side;
            }
        }

    // Boundary-edge identification induced by the face gluings.
    cd.boundary_edge_class.assign(8 * n, -1);
    int next = 0;
    for (const ChunkGluing& g : cd.gluings) {
        const ChunkFace& top = cd.interior_faces[2 * g.region];
        const ChunkFace& bot = cd.interior_faces[2 * g.region + 1];
        for (size_t w = 0; w < top.corner_squares.size(); ++w) {
            const int len = static_cast<int>(top.corner_squares[w].size());
            for (int i = 0; i < len; ++i) {
                int j = ((i + g.rotation[w]) % len + len) % len;
                int x = 4 * top.corner_squares[w][i] + top.corner_sides[w][i];
                int y = 4 * bot.corner_squares[w][j] + bot.corner_sides[w][j];
                cd.boundary_edge_class[x] = cd.boundary_edge_class[y] = next++;
            }
        }
    }

    cd.exterior_faces_per_chunk =
        ctx.kind == AmbientKind::ThickenedSurface
            ? static_cast<int>(d.surfaces.size())
            : 0;
    return cd;
}

inline ChunkDecomposition build_bounded_decomposition(const SurfaceDiagram& d,
                                                      const AmbientContext& ctx,
                                                      RegionColour unglue) {
    Colouring col = checkerboard_colouring(d);
    if (!col.colourable)
        throw diagram_error(
            "bounded decomposition requires a checkerboard colourable diagram");
    ChunkDecomposition cd = build_chunk_decomposition(d, ctx);
    cd.bounded = true;
    cd.unglued_colour = static_cast<int>(unglue);

    std::vector<ChunkGluing> kept;
    for (const ChunkGluing& g : cd.gluings) {
        if (cd.interior_faces[2 * g.region].colour == cd.unglued_colour) {
            cd.interior_faces[2 * g.region].surface = true;
            cd.interior_faces[2 * g.region + 1].surface = true;
        } else {
            kept.push_back(g);
        }
    }
    cd.gluings = std::move(kept);

    // Re-derive edge classes from the surviving gluings: each class now pairs
    // one copy from each side across a glued face, and flanks the unglued
    // surface on its other side.
    const int E = d.num_edges();
    std::vector<int> parent(2 * E);
    for (int i = 0; i < 2 * E; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const ChunkGluing& g : cd.gluings) {
        const ChunkFace& top = cd.interior_faces[2 * g.region];
        const ChunkFace& bot = cd.interior_faces[2 * g.region + 1];
        for (size_t w = 0; w < top.edge_copies.size(); ++w) {
            const int len = static_cast<int>(top.edge_copies[w].size());
            for (int i = 0; i < len; ++i) {
                int j = ((i + g.rotation[w]) % len + len) % len;
                parent[find(top.edge_copies[w][i])] = find(bot.edge_copies[w][j]);
            }
        }
    }
    std::vector<int> class_of(2 * E, -1);
    std::vector<EdgeClassInfo> classes;
    for (int i = 0; i < 2 * E; ++i) {
        int r = find(i);
        if (class_of[r] < 0) {
            class_of[r] = static_cast<int>(classes.size());
            EdgeClassInfo info;
            // keep the crossing-arc label from the full decomposition
            info.crossing = cd.edge_classes[cd.edge_copies[i].edge_class].crossing;
            info.surface = true;
            classes.push_back(info);
        }
        classes[class_of[r]].members.push_back(i);
    }
    for (int i = 0; i < 2 * E; ++i) cd.edge_copies[i].edge_class = class_of[find(i)];
    cd.edge_classes = std::move(classes);

    // Rebuild the boundary-edge identification from the kept gluings.
    const int n = d.num_crossings();
    cd.boundary_edge_class.assign(8 * n, -1);
    int next = 0;
    for (const ChunkGluing& g : cd.gluings) {
        const ChunkFace& top = cd.interior_faces[2 * g.region];
        const ChunkFace& bot = cd.interior_faces[2 * g.region + 1];
        for (size_t w = 0; w < top.corner_squares.size(); ++w) {
            const int len = static_cast<int>(top.corner_squares[w].size());
            for (int i = 0; i < len; ++i) {
                int j = ((i + g.rotation[w]) % len + len) % len;
                int x = 4 * top.corner_squares[w][i] + top.corner_sides[w][i];
                int y = 4 * bot.corner_squares[w][j] + bot.corner_sides[w][j];
                cd.boundary_edge_class[x] = cd.boundary_edge_class[y] = next++;
            }
        }
    }
    for (int x = 0; x < 8 * n; ++x)
        if (cd.boundary_edge_class[x] < 0) cd.boundary_edge_class[x] = next++;
    return cd;
}

// Check the angled-structure invariants: classes glued in fours (pairs for
// bounded decompositions), boundary squares, angle sums, one-notch rotation
// gluings, and the diagram conditions guaranteeing that every normal disk
// crosses at least four edges.
inline Certificate verify_angled_structure(const ChunkDecomposition& cd) {
    Certificate cert;
    cert.statement = cd.bounded ? "bounded angled chunk decomposition"
                                : "angled chunk decomposition";
    const SurfaceDiagram& d = cd.diagram;
    const int E = d.num_edges();

    bool squares_ok = true;
    for (const BoundarySquare& b : cd.boundary_faces)
        for (int q = 0; q < 4; ++q)
            squares_ok &= b.adjacent_face[q] >= 0 &&
                          b.adjacent_face[q] < static_cast<int>(cd.interior_faces.size());
    cert.require(squares_ok
                     ? Hypothesis::pass("boundary faces are squares")
                     : Hypothesis::fail("boundary faces are squares"));

    // Recompute the edge partition from the gluings and compare.
    std::vector<int> parent(2 * E);
    for (int i = 0; i < 2 * E; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const ChunkGluing& g : cd.gluings) {
        const ChunkFace& top = cd.interior_faces[2 * g.region];
        const ChunkFace& bot = cd.interior_faces[2 * g.region + 1];
        for (size_t w = 0; w < top.edge_copies.size(); ++w) {
            const int len = static_cast<int>(top.edge_copies[w].size());
            for (int i = 0; i < len; ++i)
                join(top.edge_copies[w][i],
                     bot.edge_copies[w][((i + g.rotation[w]) % len + len) % len]);
        }
    }
    const size_t want = cd.bounded ? 2 : 4;
    bool sizes_ok = true, match_ok = true;
    std::string size_detail;
    std::map<int, std::set<int>> orbits;
    for (int i = 0; i < 2 * E; ++i) orbits[find(i)].insert(i);
    for (auto& [root, members] : orbits) {
        if (members.size() != want) {
            sizes_ok = false;
            size_detail = "edge class of size " + std::to_string(members.size());
        }
        int cls = cd.edge_copies[*members.begin()].edge_class;
        for (int m : members) match_ok &= cd.edge_copies[m].edge_class == cls;
    }
    for (const EdgeClassInfo& info : cd.edge_classes)
        sizes_ok &= info.members.size() == want;
    cert.require(sizes_ok ? Hypothesis::pass(cd.bounded
                                                 ? "surface edge classes glued in pairs"
                                                 : "edge classes glued in fours")
                          : Hypothesis::fail(cd.bounded
                                                 ? "surface edge classes glued in pairs"
                                                 : "edge classes glued in fours",
                                             size_detail));
    cert.require(match_ok
                     ? Hypothesis::pass("gluing orbits match the crossing arcs")
                     : Hypothesis::fail("gluing orbits match the crossing arcs"));

    // Angle sums: each copy carries interior angle pi/2.
    bool sums_ok = true;
    for (const EdgeClassInfo& info : cd.edge_classes)
        sums_ok &= static_cast<int>(info.members.size()) == (cd.bounded ? 2 : 4);
    cert.require(sums_ok
                     ? Hypothesis::pass(cd.bounded
                                            ? "surface edge angle sums are pi"
                                            : "interior edge angle sums are 2 pi",
                                        "computed",
                                        std::to_string(want) + " x pi/2")
                     : Hypothesis::fail(cd.bounded ? "surface edge angle sums are pi"
                                                   : "interior edge angle sums are 2 pi"));

    // Each boundary square meets four non-boundary edges, each of exterior
    // angle pi/2, so the vertex condition 4 x pi/2 = 2 pi holds.
    bool vertex_ok = true;
    for (const BoundarySquare& b : cd.boundary_faces)
        for (int q = 0; q < 4; ++q)
            vertex_ok &= b.corner_edge_copy[q] >= 0 && b.corner_edge_copy[q] < 2 * E;
    cert.require(vertex_ok
                     ? Hypothesis::pass("boundary face exterior angle sums are 2 pi",
                                        "computed", "4 x pi/2")
                     : Hypothesis::fail("boundary face exterior angle sums are 2 pi"));

    bool rot_ok = true;
    for (const ChunkGluing& g : cd.gluings) {
        const Face& f = d.faces.faces[g.region];
        for (size_t w = 0; w < g.rotation.size(); ++w) {
            int col = detail::walk_colour(d, d.faces.walks[f.walks[w]]);
            rot_ok &= g.rotation[w] == (col == 0 ? -1 : +1);
        }
    }
    cert.require(rot_ok ? Hypothesis::pass("face gluings rotate by one edge")
                        : Hypothesis::fail("face gluings rotate by one edge"));

    // Normal disks cross at least four edges: certified by the diagram
    // hypotheses rather than by disk enumeration. Weak primeness rules out
    // short disk boundaries parallel into the surface; compressing-disk
    // boundaries need representativity at least 4, except on a genus-0
    // splitting sphere where weak primeness already covers them.
    WeakPrimenessReport wp = is_weakly_prime(d);
    cert.require(wp.weakly_prime ? Hypothesis::pass("weakly prime")
                                 : Hypothesis::fail("weakly prime", wp.reason));
    bool sphere_case = true;
    for (const SurfaceComponent& s : d.surfaces) sphere_case &= s.genus == 0;
    if (sphere_case) {
        cert.require(Hypothesis::pass(
            "normal disks cross at least four edges", "computed",
            "genus-0 projection surface: guaranteed by weak primeness"));
    } else {
        try {
            RepReport rep = representativity(d, cd.ambient);
            cert.require(rep.r >= ExtInt::of(4)
                             ? Hypothesis::pass("normal disks cross at least four edges",
                                                rep.method, "r = " + rep.r.str())
                             : Hypothesis::fail("normal disks cross at least four edges",
                                                "r = " + rep.r.str(), rep.method));
        } catch (const diagram_error& ex) {
            cert.require(Hypothesis::undeclared("normal disks cross at least four edges",
                                                ex.what()));
        }
    }

    cert.conclude("angled chunk decomposition with all interior angles pi/2");
    return cert;
}

// ---------------------------------------------------------------------------
// Surface pieces and combinatorial area.

enum class PieceKind { Normal, Admissible };

struct ItineraryStep {
    int face = 0;  // interior face id, or boundary square id when in_boundary_face
    bool in_boundary_face = false;
    bool crosses_boundary_edge = false;
    int crossed = 0;  // chunk-edge copy id, or boundary edge id 4*square + corner
};

struct SurfacePiece {
    int chunk = 0;
    int euler_char = 1;
    std::vector<std::vector<ItineraryStep>> boundary;  // cyclic curves
    int sigma = 0;  // boundary arcs interior to the chunk
    PieceKind kind = PieceKind::Normal;
};

namespace detail {

inline bool face_meets(const ChunkDecomposition& cd, const ItineraryStep& s,
                       int face, bool face_is_square) {
    if (face_is_square) {
        // squares meet only their own boundary edges
        return s.crosses_boundary_edge && s.crossed / 4 == face;
    }
    const ChunkFace& f = cd.interior_faces[face];
    if (s.crosses_boundary_edge) {
        for (size_t w = 0; w < f.corner_squares.size(); ++w)
            for (size_t i = 0; i < f.corner_squares[w].size(); ++i)
                if (4 * f.corner_squares[w][i] + f.corner_sides[w][i] == s.crossed)
                    return true;
        return false;
    }
    for (const auto& walk : f.edge_copies)
        for (int c : walk)
            if (c == s.crossed) return true;
    return false;
}

}  // namespace detail

// Throws if a piece's itinerary does not fit the chunk's incidence structure.
inline void check_itinerary(const ChunkDecomposition& cd, const SurfacePiece& p) {
    if (p.kind == PieceKind::Normal && p.sigma != 0)
        throw diagram_error("normal pieces have no interior boundary arcs");
    for (const auto& curve : p.boundary) {
        if (curve.empty()) throw diagram_error("empty boundary curve");
        const size_t m = curve.size();
        for (size_t k = 0; k < m; ++k) {
            const ItineraryStep& s = curve[k];
            const ItineraryStep& t = curve[(k + 1) % m];
            int side = s.in_boundary_face ? cd.boundary_faces[s.face].side
                                          : cd.interior_faces[s.face].side;
            if (side != p.chunk)
                throw diagram_error("itinerary strays outside the piece's chunk");
            if (s.in_boundary_face && !s.crosses_boundary_edge)
                throw diagram_error("boundary faces meet only boundary edges");
            if (!detail::face_meets(cd, s, s.face, s.in_boundary_face) ||
                !detail::face_meets(cd, s, t.face, t.in_boundary_face))
                throw diagram_error("itinerary crosses an edge not on its face");
        }
    }
}

// a(S) = sum of exterior angles - 2 pi chi(S) + 2 pi sigma, with every edge
// and boundary-edge crossing contributing pi/2. Returned in units of pi/2.
inline long long combinatorial_area_units(const SurfacePiece& p) {
    long long steps = 0;
    for (const auto& curve : p.boundary) steps += static_cast<long long>(curve.size());
    return steps - 4LL * p.euler_char + 4LL * p.sigma;
}

inline double combinatorial_area(const SurfacePiece& p) {
    return static_cast<double>(combinatorial_area_units(p)) * std::numbers::pi / 2.0;
}

// ---------------------------------------------------------------------------
// Gauss-Bonnet for assembled pieces.

struct ArcRef {
    int piece = 0, curve = 0, step = 0;
};

// Glue the pieces' boundary arcs in the given pairs and check that the total
// combinatorial area equals -2 pi chi of the assembly, plus (pi/2) p for the
// p boundary squares meeting surface faces and 2 pi per interior boundary arc.
inline Certificate gauss_bonnet_check(const ChunkDecomposition& cd,
                                      const std::vector<SurfacePiece>& pieces,
                                      const std::vector<std::pair<ArcRef, ArcRef>>& glue,
                                      int p = 0) {
    Certificate cert;
    cert.statement = "combinatorial Gauss-Bonnet identity";

    bool consistent = true;
    std::string why;
    try {
        for (const SurfacePiece& piece : pieces) check_itinerary(cd, piece);
    } catch (const diagram_error& ex) {
        consistent = false;
        why = ex.what();
    }
    cert.require(consistent
                     ? Hypothesis::pass("itineraries fit the chunk incidences")
                     : Hypothesis::fail("itineraries fit the chunk incidences", why));
    if (!consistent) return cert;

    // Corner after arc k of a curve sits on the edge crossed by step k; glued
    // corners must lie on identified edges.
    auto corner_key = [&](const ArcRef& a, int k) {
        const auto& curve = pieces[a.piece].boundary[a.curve];
        const int m = static_cast<int>(curve.size());
        const ItineraryStep& s = curve[((k % m) + m) % m];
        return s.crosses_boundary_edge
                   ? std::pair{1, cd.boundary_edge_class[s.crossed]}
                   : std::pair{0, cd.edge_copies[s.crossed].edge_class};
    };
    auto corner_id = [&](int piece, int curve, int k) {
        const int m = static_cast<int>(pieces[piece].boundary[curve].size());
        return std::tuple{piece, curve, ((k % m) + m) % m};
    };

    std::map<std::tuple<int, int, int>, std::tuple<int, int, int>> cparent;
    auto cfind = [&](std::tuple<int, int, int> x) {
        if (!cparent.count(x)) cparent[x] = x;
        while (cparent[x] != x) x = cparent[x] = cparent[cparent[x]];
        return x;
    };
    auto cjoin = [&](auto a, auto b) { cparent[cfind(a)] = cfind(b); };

    bool compatible = true;
    std::set<std::tuple<int, int, int>> glued_arcs;
    for (const auto& [a, b] : glue) {
        // Arcs glue with reversed boundary orientation; fall back to the
        // aligned orientation when the edge labels demand it.
        bool rev = corner_key(a, a.step) == corner_key(b, b.step - 1) &&
                   corner_key(a, a.step - 1) == corner_key(b, b.step);
        bool fwd = corner_key(a, a.step) == corner_key(b, b.step) &&
                   corner_key(a, a.step - 1) == corner_key(b, b.step - 1);
        if (!rev && !fwd) {
            compatible = false;
            continue;
        }
        if (rev) {
            cjoin(corner_id(a.piece, a.curve, a.step), corner_id(b.piece, b.curve, b.step - 1));
            cjoin(corner_id(a.piece, a.curve, a.step - 1), corner_id(b.piece, b.curve, b.step));
        } else {
            cjoin(corner_id(a.piece, a.curve, a.step), corner_id(b.piece, b.curve, b.step));
            cjoin(corner_id(a.piece, a.curve, a.step - 1),
                  corner_id(b.piece, b.curve, b.step - 1));
        }
        compatible &= glued_arcs.insert({a.piece, a.curve, a.step}).second;
        compatible &= glued_arcs.insert({b.piece, b.curve, b.step}).second;
    }
    cert.require(compatible
                     ? Hypothesis::pass("arc gluing is a compatible matching")
                     : Hypothesis::fail("arc gluing is a compatible matching"));
    if (!compatible) return cert;

    long long total_arcs = 0, chi_pieces = 0, sigma_total = 0, area = 0;
    for (size_t i = 0; i < pieces.size(); ++i) {
        chi_pieces += pieces[i].euler_char;
        sigma_total += pieces[i].sigma;
        area += combinatorial_area_units(pieces[i]);
        for (size_t c = 0; c < pieces[i].boundary.size(); ++c) {
            const int m = static_cast<int>(pieces[i].boundary[c].size());
            total_arcs += m;
            for (int k = 0; k < m; ++k) cfind(corner_id(static_cast<int>(i), static_cast<int>(c), k));
        }
    }
    std::set<std::tuple<int, int, int>> corner_roots;
    for (auto& [x, _] : cparent) corner_roots.insert(cfind(x));
    const long long glued_pairs = static_cast<long long>(glue.size());
    const long long chi = static_cast<long long>(corner_roots.size()) -
                          (glued_pairs + (total_arcs - 2 * glued_pairs)) + chi_pieces;

    const long long expected = -4 * chi + p + 4 * sigma_total;
    cert.require(area == expected
                     ? Hypothesis::pass("total area matches -2 pi chi", "computed",
                                        "area = " + std::to_string(area) +
                                            " (pi/2), chi = " + std::to_string(chi))
                     : Hypothesis::fail("total area matches -2 pi chi",
                                        "area = " + std::to_string(area) +
                                            " (pi/2) but chi = " + std::to_string(chi)));
    cert.conclude("assembled surface satisfies combinatorial Gauss-Bonnet");
    return cert;
}

// ---------------------------------------------------------------------------
// The three forms of a zero-area normal square meeting the link boundary.

enum class NormalSquareForm { Form1, Form2, Form3 };

inline NormalSquareForm classify_zero_area_square(const ChunkDecomposition& cd,
                                                  const SurfacePiece& piece) {
    check_itinerary(cd, piece);
    if (piece.boundary.size() != 1 || piece.boundary[0].size() != 4 ||
        piece.euler_char != 1 || piece.sigma != 0)
        throw diagram_error("not a normal square");
    const auto& curve = piece.boundary[0];
    std::vector<int> bf_steps;
    for (int k = 0; k < 4; ++k)
        if (curve[k].in_boundary_face) bf_steps.push_back(k);
    if (bf_steps.empty())
        throw diagram_error("square does not meet a boundary face");

    // At each boundary-face visit the square is entered along the previous
    // step's edge; opposite/adjacent refers to the square's sides.
    auto visit_opposite = [&](int k) {
        const ItineraryStep& in = curve[(k + 3) % 4];
        const ItineraryStep& out = curve[k];
        if (!in.crosses_boundary_edge || !out.crosses_boundary_edge ||
            in.crossed / 4 != out.crossed / 4)
            throw diagram_error("boundary face entered across a non-boundary edge");
        return ((in.crossed - out.crossed) % 4 + 4) % 4 == 2;
    };
    if (bf_steps.size() == 1) {
        if (!visit_opposite(bf_steps[0]))
            throw diagram_error("single-boundary-face square must run through "
                                "opposite boundary edges");
        return NormalSquareForm::Form1;
    }
    if (bf_steps.size() != 2) throw diagram_error("not a normal square form");
    bool opp0 = visit_opposite(bf_steps[0]), opp1 = visit_opposite(bf_steps[1]);
    if (opp0 != opp1) throw diagram_error("not a normal square form");
    // With a checkerboard colouring, a square through adjacent boundary edges
    // runs through faces of opposite colour, one through opposite boundary
    // edges through faces of the same colour.
    std::vector<int> colours;
    for (int k = 0; k < 4; ++k)
        if (!curve[k].in_boundary_face)
            colours.push_back(cd.interior_faces[curve[k].face].colour);
    if (colours.size() == 2 && checkerboard_colouring(cd.diagram).colourable &&
        (colours[0] != colours[1]) != !opp0)
        throw diagram_error("square form inconsistent with the checkerboard colouring");
    return opp0 ? NormalSquareForm::Form3 : NormalSquareForm::Form2;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of closed normal curves of bounded length on one
// chunk's boundary. A crossing slot is either a chunk-edge copy or a boundary
// edge; a curve is a cyclic sequence of slot crossings whose arcs obey the
// normal-surface rules: in a disk face no arc has both endpoints on one edge,
// and no arc joins a boundary edge to an edge it shares a corner with.

namespace detail {

struct SlotOcc {
    bool boundary;  // boundary edge vs chunk edge
    int slot;       // edge-copy id or boundary-edge id
    int end;        // which of the slot's two sides this occurrence is
};

struct ChunkSurface {
    // face occurrence lists: faces are interior ids and square ids offset
    std::vector<std::vector<SlotOcc>> face_occ;   // interior faces then squares
    std::vector<std::array<std::pair<int, int>, 2>> edge_side;  // chunk slot -> (face idx, occ idx)
    std::vector<std::array<std::pair<int, int>, 2>> bd_side;    // bd slot -> same
    std::vector<bool> face_is_disk;
    std::vector<std::vector<std::pair<int, int>>> adjacency;  // per face: pairs of occ indices sharing a corner
    int interior_count = 0;
};

inline ChunkSurface chunk_surface(const ChunkDecomposition& cd, int side) {
    const SurfaceDiagram& d = cd.diagram;
    ChunkSurface cs;
    const int R = static_cast<int>(d.faces.faces.size());
    const int n = d.num_crossings();
    cs.interior_count = R;
    cs.face_occ.assign(R + n, {});
    cs.edge_side.assign(2 * d.num_edges(), {std::pair{-1, -1}, std::pair{-1, -1}});
    cs.bd_side.assign(8 * n, {std::pair{-1, -1}, std::pair{-1, -1}});
    cs.face_is_disk.assign(R + n, true);
    cs.adjacency.assign(R + n, {});
    auto add_side = [&](auto& sides, int slot, int face, int occ) {
        int k = sides[slot][0].first < 0 ? 0 : 1;
        sides[slot][k] = {face, occ};
    };
    for (int r = 0; r < R; ++r) {
        const ChunkFace& f = cd.interior_faces[2 * r + side];
        cs.face_is_disk[r] = d.faces.faces[r].is_disk;
        for (size_t w = 0; w < f.edge_copies.size(); ++w) {
            const int len = static_cast<int>(f.edge_copies[w].size());
            int first_e = -1, prev_b = -1;
            for (int i = 0; i < len; ++i) {
                int ei = static_cast<int>(cs.face_occ[r].size());
                cs.face_occ[r].push_back({false, f.edge_copies[w][i], 0});
                add_side(cs.edge_side, f.edge_copies[w][i], r, ei);
                if (i == 0) first_e = ei;
                if (prev_b >= 0) cs.adjacency[r].push_back({prev_b, ei});
                int bd = 4 * f.corner_squares[w][i] + f.corner_sides[w][i];
                int bi = static_cast<int>(cs.face_occ[r].size());
                cs.face_occ[r].push_back({true, bd, 0});
                add_side(cs.bd_side, bd, r, bi);
                cs.adjacency[r].push_back({ei, bi});
                prev_b = bi;
            }
            if (prev_b >= 0) cs.adjacency[r].push_back({prev_b, first_e});
        }
    }
    for (int c = 0; c < n; ++c) {
        int fidx = R + c;
        for (int q = 0; q < 4; ++q) {
            int bd = 4 * (2 * c + side) + q;
            int oi = static_cast<int>(cs.face_occ[fidx].size());
            cs.face_occ[fidx].push_back({true, bd, 0});
            add_side(cs.bd_side, bd, fidx, oi);
        }
    }
    return cs;
}

inline bool arc_allowed(const ChunkSurface& cs, int face, int occ_in, int occ_out) {
    if (occ_in == occ_out) return false;
    if (!cs.face_is_disk[face]) return true;  // essential arcs possible
    const SlotOcc& a = cs.face_occ[face][occ_in];
    const SlotOcc& b = cs.face_occ[face][occ_out];
    if (a.boundary == b.boundary && a.slot == b.slot)
        return false;  // both endpoints on one edge
    if (face < cs.interior_count && a.boundary != b.boundary) {
        // boundary edge to an edge sharing a corner cuts off the corner
        for (auto [x, y] : cs.adjacency[face])
            if ((x == occ_in && y == occ_out) || (x == occ_out && y == occ_in))
                return false;
    }
    return true;
}

}  // namespace detail

// Closed normal curves of at most max_len edge crossings on the boundary of
// one chunk, up to rotation and reversal. Each curve is returned as the
// cyclic list of (face, crossed slot) occurrences.
inline std::vector<std::vector<ItineraryStep>> enumerate_normal_curves(
    const ChunkDecomposition& cd, int side, int max_len) {
    detail::ChunkSurface cs = detail::chunk_surface(cd, side);
    const int R = cs.interior_count;
    auto step_of = [&](int face, const detail::SlotOcc& occ) {
        ItineraryStep s;
        if (face < R) {
            s.face = 2 * face + side;
            s.in_boundary_face = false;
        } else {
            s.face = occ.slot / 4;  // boundary edge id encodes its square
            s.in_boundary_face = true;
        }
        s.crosses_boundary_edge = occ.boundary;
        s.crossed = occ.slot;
        return s;
    };
    auto other_side = [&](const detail::SlotOcc& occ, int face, int occ_idx) {
        const auto& sides = occ.boundary ? cs.bd_side[occ.slot] : cs.edge_side[occ.slot];
        if (sides[0] == std::pair{face, occ_idx}) return sides[1];
        return sides[0];
    };

    std::set<std::string> seen;
    std::vector<std::vector<ItineraryStep>> out;

    // canonical form of a slot sequence up to rotation and reversal
    auto canonical = [](std::vector<std::pair<int, int>> seq) {
        auto best = std::string();
        auto render = [](const std::vector<std::pair<int, int>>& s) {
            std::string r;
            for (auto [a, b] : s) r += std::to_string(a) + "." + std::to_string(b) + ";";
            return r;
        };
        for (int rev = 0; rev < 2; ++rev) {
            for (size_t k = 0; k < seq.size(); ++k) {
                std::rotate(seq.begin(), seq.begin() + 1, seq.end());
                std::string r = render(seq);
                if (best.empty() || r < best) best = r;
            }
            std::reverse(seq.begin(), seq.end());
        }
        return best;
    };

    std::vector<std::pair<int, int>> crossing_seq;  // (kind, slot) per crossing

    // DFS over arcs
    std::vector<ItineraryStep> steps;
    std::function<void(int, int, int, int, int)> dfs =
        [&](int face, int occ_in, int start_face, int start_occ, int depth) {
            const auto& occs = cs.face_occ[face];
            for (int occ_out = 0; occ_out < static_cast<int>(occs.size()); ++occ_out) {
                if (!detail::arc_allowed(cs, face, occ_in, occ_out)) continue;
                const detail::SlotOcc& o = occs[occ_out];
                auto [nface, nocc] = other_side(o, face, occ_out);
                steps.push_back(step_of(face, o));
                crossing_seq.push_back({o.boundary ? 1 : 0, o.slot});
                if (nface == start_face && nocc == start_occ) {
                    std::string key = canonical(crossing_seq);
                    if (seen.insert(key).second) out.push_back(steps);
                } else if (depth + 1 < max_len) {
                    dfs(nface, nocc, start_face, start_occ, depth + 1);
                }
                steps.pop_back();
                crossing_seq.pop_back();
            }
        };

    for (int face = 0; face < static_cast<int>(cs.face_occ.size()); ++face)
        for (int occ = 0; occ < static_cast<int>(cs.face_occ[face].size()); ++occ)
            dfs(face, occ, face, occ, 0);
    return out;
}

// Wrap an enumerated curve as a normal piece. Once the angled structure is
// verified, a normal disk's boundary crosses at least four edges, so shorter
// curves bound only annuli or more complicated pieces (chi <= 0); longer ones
// are scored as disks, the worst case for the area bound.
inline SurfacePiece normal_piece_from_curve(const ChunkDecomposition& cd,
                                            const std::vector<ItineraryStep>& curve) {
    SurfacePiece p;
    p.chunk = curve.front().in_boundary_face
                  ? cd.boundary_faces[curve.front().face].side
                  : cd.interior_faces[curve.front().face].side;
    p.boundary = {curve};
    p.euler_char = curve.size() >= 4 ? 1 : 0;
    p.sigma = 0;
    p.kind = PieceKind::Normal;
    return p;
}

}  // namespace wga
