#pragma once

// Combinatorial-map representation of a link diagram drawn on one or more
// closed orientable surfaces.  A diagram is a 4-valent graph with over/under
// data at each vertex, encoded as a rotation system: every crossing has four
// ports in counterclockwise order (as seen from the positive side of its
// surface component), strands pass straight through (port p exits at p+2),
// and faces are recovered by the usual rotation-system tracing.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wga {

struct diagram_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SurfaceComponent {
    int id = 0;
    int genus = 0;          // declared
    int derived_genus = 0;  // recomputed from the face trace
};

// over_pair: which opposite port pair carries the over-strand.
enum class OverPair : std::uint8_t { P02, P13 };

struct Crossing {
    int id = 0;
    int surface = 0;  // index into SurfaceDiagram::surfaces
    OverPair over_pair = OverPair::P02;
};

struct EndRef {
    int crossing = 0;  // index into SurfaceDiagram::crossings
    int port = 0;      // 0..3
    friend bool operator==(const EndRef&, const EndRef&) = default;
    friend auto operator<=>(const EndRef&, const EndRef&) = default;
};

struct DiagramEdge {
    EndRef a, b;
};

// A dart is one of the two directed sides of an edge, identified with the
// endpoint it sits at: dart = 4 * crossing + port.
using dart_t = int;

inline dart_t dart_of(int crossing, int port) { return 4 * crossing + port; }
inline int dart_crossing(dart_t d) { return d / 4; }
inline int dart_port(dart_t d) { return d % 4; }

// One closed boundary walk of a face, as the cyclic dart sequence produced by
// the face trace.
struct FaceBoundary {
    std::vector<dart_t> darts;
    int surface = 0;
};

struct Face {
    int id = 0;
    int surface = 0;
    std::vector<int> walks;  // indices into FaceSet::walks
    int genus = 0;           // genus of the face itself (0 for disks)
    int degree = 0;          // edge-sides over all boundary walks
    bool is_disk = false;    // one boundary walk and genus 0

    int euler_char() const { return 2 - 2 * genus - static_cast<int>(walks.size()); }
};

struct FaceSet {
    std::vector<FaceBoundary> walks;
    std::vector<Face> faces;
    std::vector<int> dart_walk;  // dart -> walk index
    std::vector<int> dart_pos;   // dart -> position within its walk
    std::vector<int> dart_face;  // dart -> face index

    // face occupying the corner of `crossing` between ports k and k+1 (mod 4)
    std::vector<std::array<int, 4>> corner_face;
};

// One passage of a strand through a crossing.
struct Passage {
    int crossing = 0;
    int entry_port = 0;  // strand enters here and leaves at entry_port + 2
    bool over = false;
};

struct LinkComponent {
    int id = 0;
    std::vector<Passage> passages;  // cyclic
    int crossings_met() const { return static_cast<int>(passages.size()); }
};

// Optional grouping for non-disk faces: the listed boundary walks (named by a
// dart on each) form one face of the given genus.  Unlisted walks are disks.
struct FaceGroupSpec {
    std::vector<EndRef> boundary_darts;
    int genus = 0;
};

class SurfaceDiagram {
public:
    std::vector<SurfaceComponent> surfaces;
    std::vector<Crossing> crossings;
    std::vector<DiagramEdge> edges;
    std::string label;

    // Number of crossing-free closed link components. These carry no
    // combinatorial structure; analyses that require every component to meet
    // a crossing refuse when this is nonzero.
    int free_loops = 0;

    // derived, filled by finalise()
    std::vector<std::array<int, 4>> edge_at;  // crossing -> port -> edge index
    FaceSet faces;
    std::vector<LinkComponent> components;

    int num_crossings() const { return static_cast<int>(crossings.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_darts() const { return 4 * num_crossings(); }

    bool is_over_port(int crossing, int port) const {
        const bool even = (port % 2 == 0);
        return (crossings[crossing].over_pair == OverPair::P02) == even;
    }

    EndRef other_end(int crossing, int port) const {
        const DiagramEdge& e = edges[edge_at[crossing][port]];
        return (e.a == EndRef{crossing, port}) ? e.b : e.a;
    }
    EndRef other_end(EndRef r) const { return other_end(r.crossing, r.port); }

    dart_t alpha(dart_t d) const {
        EndRef o = other_end(dart_crossing(d), dart_port(d));
        return dart_of(o.crossing, o.port);
    }

    int euler_characteristic() const {
        int chi = 0;
        for (const SurfaceComponent& s : surfaces) chi += 2 - 2 * s.genus;
        return chi;
    }

    // Validates structure, traces faces and strands.  `face_groups` describes
    // non-disk faces; walks not covered by a group become disk faces.
    void finalise(const std::vector<FaceGroupSpec>& face_groups = {});

private:
    void check_structure() const;
    void trace_faces_internal(const std::vector<FaceGroupSpec>& face_groups);
    void trace_strands_internal();
    void check_euler() const;
    void check_connected() const;
};

inline void SurfaceDiagram::check_structure() const {
    if (surfaces.empty()) throw diagram_error("diagram has no surface components");
    for (const Crossing& c : crossings)
        if (c.surface < 0 || c.surface >= static_cast<int>(surfaces.size()))
            throw diagram_error("crossing " + std::to_string(c.id) + ": unknown surface component");
    std::set<std::pair<int, int>> seen;
    for (const DiagramEdge& e : edges) {
        for (EndRef r : {e.a, e.b}) {
            if (r.crossing < 0 || r.crossing >= num_crossings() || r.port < 0 || r.port > 3)
                throw diagram_error("edge endpoint out of range");
            if (!seen.insert({r.crossing, r.port}).second)
                throw diagram_error("duplicate port: crossing " +
                                    std::to_string(crossings[r.crossing].id) + " port " +
                                    std::to_string(r.port));
        }
        if (crossings[e.a.crossing].surface != crossings[e.b.crossing].surface)
            throw diagram_error("edge spans two surface components");
    }
    if (static_cast<int>(seen.size()) != num_darts())
        throw diagram_error("dangling port: every port must be an endpoint of exactly one edge");
}

inline void SurfaceDiagram::check_connected() const {
    // The 4-valent graph must be connected within each surface component so
    // that the rotation system is a cellular embedding there.
    const int n = num_crossings();
    if (n == 0) return;
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> stack{start};
        comp[start] = next;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int p = 0; p < 4; ++p) {
                int c2 = other_end(c, p).crossing;
                if (comp[c2] < 0) {
                    comp[c2] = next;
                    stack.push_back(c2);
                }
            }
        }
        ++next;
    }
    std::map<int, std::set<int>> per_surface;
    for (int c = 0; c < n; ++c) per_surface[crossings[c].surface].insert(comp[c]);
    for (auto& [s, comps] : per_surface)
        if (comps.size() > 1)
            throw diagram_error("disconnected diagram on surface component " +
                                std::to_string(surfaces[s].id));
}

inline void SurfaceDiagram::trace_faces_internal(const std::vector<FaceGroupSpec>& face_groups) {
    faces = FaceSet{};
    const int nd = num_darts();
    faces.dart_walk.assign(nd, -1);
    faces.dart_pos.assign(nd, -1);
    faces.dart_face.assign(nd, -1);
    faces.corner_face.assign(num_crossings(), {-1, -1, -1, -1});

    // Face trace: after traversing the edge at dart d and arriving at the
    // other endpoint (c2,p2), the walk occupies the corner (p2,p2+1) of c2 and
    // continues along the dart (c2,p2+1).
    for (dart_t start = 0; start < nd; ++start) {
        if (faces.dart_walk[start] >= 0) continue;
        FaceBoundary walk;
        walk.surface = crossings[dart_crossing(start)].surface;
        dart_t d = start;
        do {
            faces.dart_walk[d] = static_cast<int>(faces.walks.size());
            faces.dart_pos[d] = static_cast<int>(walk.darts.size());
            walk.darts.push_back(d);
            dart_t a = alpha(d);
            d = dart_of(dart_crossing(a), (dart_port(a) + 1) % 4);
        } while (d != start);
        faces.walks.push_back(std::move(walk));
    }

    // Group walks into faces.
    std::vector<int> walk_face(faces.walks.size(), -1);
    for (const FaceGroupSpec& g : face_groups) {
        Face f;
        f.id = static_cast<int>(faces.faces.size());
        f.genus = g.genus;
        if (g.boundary_darts.empty()) throw diagram_error("face group without boundary darts");
        for (EndRef r : g.boundary_darts) {
            int w = faces.dart_walk.at(dart_of(r.crossing, r.port));
            if (walk_face[w] >= 0) throw diagram_error("face group reuses a boundary walk");
            walk_face[w] = f.id;
            f.walks.push_back(w);
        }
        f.surface = faces.walks[f.walks.front()].surface;
        for (int w : f.walks)
            if (faces.walks[w].surface != f.surface)
                throw diagram_error("face group mixes surface components");
        faces.faces.push_back(std::move(f));
    }
    for (int w = 0; w < static_cast<int>(faces.walks.size()); ++w) {
        if (walk_face[w] >= 0) continue;
        Face f;
        f.id = static_cast<int>(faces.faces.size());
        f.surface = faces.walks[w].surface;
        f.walks = {w};
        walk_face[w] = f.id;
        faces.faces.push_back(std::move(f));
    }
    for (Face& f : faces.faces) {
        f.degree = 0;
        for (int w : f.walks) f.degree += static_cast<int>(faces.walks[w].darts.size());
        f.is_disk = (f.genus == 0 && f.walks.size() == 1);
    }
    for (dart_t d = 0; d < nd; ++d) faces.dart_face[d] = walk_face[faces.dart_walk[d]];
    for (const FaceBoundary& w : faces.walks)
        for (dart_t d : w.darts) {
            dart_t a = alpha(d);
            faces.corner_face[dart_crossing(a)][dart_port(a)] = faces.dart_face[d];
        }
}

inline void SurfaceDiagram::trace_strands_internal() {
    components.clear();
    // Strand traversal over directed edge passes: state = dart being departed
    // from; crossing the edge lands at (c2,p2), the strand passes through and
    // departs at (c2,p2+2).
    const int nd = num_darts();
    std::vector<char> used(nd, 0);
    for (dart_t start = 0; start < nd; ++start) {
        if (used[start]) continue;
        LinkComponent comp;
        comp.id = static_cast<int>(components.size());
        dart_t d = start;
        do {
            used[d] = 1;
            dart_t a = alpha(d);
            int c2 = dart_crossing(a), p2 = dart_port(a);
            comp.passages.push_back({c2, p2, is_over_port(c2, p2)});
            d = dart_of(c2, (p2 + 2) % 4);
        } while (d != start);
        // The reverse traversal departs from the arrival darts; mark them so
        // each undirected strand is reported once.
        dart_t r = alpha(start);
        if (!used[r]) {
            dart_t d2 = r;
            do {
                used[d2] = 1;
                dart_t a = alpha(d2);
                d2 = dart_of(dart_crossing(a), (dart_port(a) + 2) % 4);
            } while (d2 != r);
        }
        components.push_back(std::move(comp));
    }
}

inline void SurfaceDiagram::check_euler() const {
    std::vector<int> v(surfaces.size(), 0), e(surfaces.size(), 0), chi_f(surfaces.size(), 0);
    for (const Crossing& c : crossings) ++v[c.surface];
    for (const DiagramEdge& ed : edges) ++e[crossings[ed.a.crossing].surface];
    for (const Face& f : faces.faces) chi_f[f.surface] += f.euler_char();
    for (size_t s = 0; s < surfaces.size(); ++s) {
        if (v[s] == 0) continue;  // component not met by the diagram
        int chi = v[s] - e[s] + chi_f[s];
        if (chi != 2 - 2 * surfaces[s].genus)
            throw diagram_error("declared genus mismatch on surface component " +
                                std::to_string(surfaces[s].id) + ": declared genus " +
                                std::to_string(surfaces[s].genus) + " but faces give Euler characteristic " +
                                std::to_string(chi));
    }
}

inline void SurfaceDiagram::finalise(const std::vector<FaceGroupSpec>& face_groups) {
    check_structure();
    edge_at.assign(num_crossings(), {-1, -1, -1, -1});
    for (int i = 0; i < num_edges(); ++i) {
        edge_at[edges[i].a.crossing][edges[i].a.port] = i;
        edge_at[edges[i].b.crossing][edges[i].b.port] = i;
    }
    check_connected();
    trace_faces_internal(face_groups);
    check_euler();
    for (SurfaceComponent& s : surfaces) s.derived_genus = s.genus;
    trace_strands_internal();
}

// Free-function views matching the operation names used throughout.
inline const FaceSet& trace_faces(const SurfaceDiagram& d) { return d.faces; }
inline const std::vector<LinkComponent>& strands(const SurfaceDiagram& d) { return d.components; }

// Census helpers used by several analyses.
inline int count_faces_of_degree(const SurfaceDiagram& d, int degree) {
    int n = 0;
    for (const Face& f : d.faces.faces)
        if (f.is_disk && f.degree == degree) ++n;
    return n;
}

inline bool all_faces_disks(const SurfaceDiagram& d) {
    for (const Face& f : d.faces.faces)
        if (!f.is_disk) return false;
    return true;
}

}  // namespace wga
