#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "wga/diagram.hpp"

namespace wga {

// Machinery for cutting the surface along a simple closed curve that crosses
// a few diagram edges transversely and otherwise runs through faces along
// boundary-parallel arcs. The curve is described combinatorially: cut points
// on edges, plus chords pairing up the cut-point sides within faces. Cutting
// produces components whose Euler characteristics and crossing counts decide
// primality and twist-reducedness questions.

struct CutPoint {
    int edge = -1;
    int index = 0;  // order along the edge's canonical direction (min dart first)
};

// One side of a cut point: the gap it opens in the boundary walk of the face
// seen from dart `side` (one of the edge's two darts).
struct GapRef {
    int edge = -1;
    int cut_index = 0;
    dart_t side = -1;
    friend bool operator==(const GapRef&, const GapRef&) = default;
};

struct Chord {
    GapRef a, b;
};

struct CutSpec {
    std::vector<int> cuts_per_edge;  // dense, per edge id; 0, 1 or 2
    std::vector<Chord> chords;
};

struct CutComponent {
    long long euler = 0;
    int crossings = 0;
    int segments = 0;
    int boundary_points = 0;  // cut-point copies: nonzero iff the curve borders it
    std::vector<int> crossing_ids;
    bool is_disk() const { return euler == 1; }
    bool touches_curve() const { return boundary_points > 0; }
};

struct CutResult {
    bool valid = false;  // false when the chords force the curve to self-cross
    std::vector<CutComponent> components;
};

namespace detail {

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace detail

// Cut the surface along the curve described by `spec`. `main_choice` selects,
// for non-disk faces split by chords, which resulting region inherits the
// face's genus and untouched boundary walks (indexed by face id; -1 = first).
inline CutResult cut_along(const SurfaceDiagram& d, const CutSpec& spec,
                           const std::map<int, int>& main_choice = {}) {
    CutResult res;
    const int E = d.num_edges();
    const int V = d.num_crossings();
    // Positions: the occurrence sequence of edge segments along every walk.
    // position -> (atom id, walk); gap after each position -> cut id or -1.
    struct Pos {
        int atom;      // segment atom id
        int walk;
        int face;
        int gap_cut;   // global cut id opened after this position, or -1
        dart_t gap_side;  // dart whose walk this gap sits in (for chord lookup)
        int next;      // default successor (cyclic within walk)
    };
    // atoms: per edge, cuts+1 segments
    std::vector<int> atom_base(E + 1, 0);
    for (int e = 0; e < E; ++e)
        atom_base[e + 1] = atom_base[e] + spec.cuts_per_edge[e] + 1;
    const int num_atoms = atom_base[E];
    // global cut ids: per edge, cuts
    std::vector<int> cut_base(E + 1, 0);
    for (int e = 0; e < E; ++e) cut_base[e + 1] = cut_base[e] + spec.cuts_per_edge[e];

    std::vector<Pos> pos;
    std::map<std::pair<int, dart_t>, int> gap_pos;  // (global cut, side dart) -> position
    for (size_t wi = 0; wi < d.faces.walks.size(); ++wi) {
        const FaceBoundary& w = d.faces.walks[wi];
        int face = d.faces.dart_face[w.darts[0]];
        int start = static_cast<int>(pos.size());
        for (dart_t t : w.darts) {
            int e = d.edge_at[dart_crossing(t)][dart_port(t)];
            int k = spec.cuts_per_edge[e];
            bool forward = t < d.alpha(t);  // canonical direction
            for (int j = 0; j <= k; ++j) {
                int seg = forward ? j : k - j;
                int cut_after = -1;
                if (j < k) cut_after = forward ? seg : seg - 1;
                Pos p;
                p.atom = atom_base[e] + seg;
                p.walk = static_cast<int>(wi);
                p.face = face;
                p.gap_cut = cut_after < 0 ? -1 : cut_base[e] + cut_after;
                p.gap_side = t;
                p.next = static_cast<int>(pos.size()) + 1;
                if (cut_after >= 0)
                    gap_pos[{p.gap_cut, t}] = static_cast<int>(pos.size());
                pos.push_back(p);
            }
        }
        pos.back().next = start;
    }
    const int P = static_cast<int>(pos.size());

    // rewire successors along the chords; every cut side must be used once
    std::vector<int> succ(P);
    for (int i = 0; i < P; ++i) succ[i] = pos[i].next;
    auto locate = [&](GapRef g) -> std::optional<int> {
        auto it = gap_pos.find({cut_base[g.edge] + g.cut_index, g.side});
        if (it == gap_pos.end()) return std::nullopt;
        return it->second;
    };
    struct ChordPos {
        int pa, pb;
    };
    std::vector<ChordPos> chord_pos;
    for (const Chord& ch : spec.chords) {
        auto pa = locate(ch.a), pb = locate(ch.b);
        if (!pa || !pb || *pa == *pb) return res;
        if (pos[*pa].face != pos[*pb].face) return res;
        chord_pos.push_back({*pa, *pb});
    }
    // self-crossing test: chords within one walk must not interleave
    for (size_t i = 0; i < chord_pos.size(); ++i)
        for (size_t j = i + 1; j < chord_pos.size(); ++j) {
            auto [a1, b1] = chord_pos[i];
            auto [a2, b2] = chord_pos[j];
            if (pos[a1].walk != pos[b1].walk || pos[a2].walk != pos[b2].walk)
                continue;  // cross-walk chords are routed disjointly
            if (pos[a1].walk != pos[a2].walk) continue;
            // cyclic interleaving within the walk
            auto order = [&](int p) {
                return p;  // positions are already in walk cyclic order blocks
            };
            int x1 = order(a1), y1 = order(b1);
            if (x1 > y1) std::swap(x1, y1);
            int inside = 0;
            for (int p : {order(a2), order(b2)})
                if (x1 < p && p < y1) ++inside;
            if (inside == 1) return res;
        }
    for (const ChordPos& cp : chord_pos) {
        // region boundary: ...atom(pa), chord, atom just after pb's gap...
        int na = succ[cp.pa], nb = succ[cp.pb];
        succ[cp.pa] = nb;
        succ[cp.pb] = na;
    }

    // orbits of succ = regions
    std::vector<int> region(P, -1);
    int num_regions = 0;
    for (int i = 0; i < P; ++i) {
        if (region[i] >= 0) continue;
        int r = num_regions++;
        int j = i;
        while (region[j] < 0) {
            region[j] = r;
            j = succ[j];
        }
    }

    // per-face region bookkeeping and piece Euler characteristics
    const int F = static_cast<int>(d.faces.faces.size());
    std::vector<std::vector<int>> face_regions(F);
    std::vector<int> face_chords(F, 0);
    for (const ChordPos& cp : chord_pos) ++face_chords[pos[cp.pa].face];
    for (int i = 0; i < P; ++i) {
        auto& fr = face_regions[pos[i].face];
        if (std::find(fr.begin(), fr.end(), region[i]) == fr.end())
            fr.push_back(region[i]);
    }
    // regions touched by chords, per face (orbits of cut walks)
    std::vector<std::vector<int>> face_cut_regions(F);
    for (const ChordPos& cp : chord_pos)
        for (int p : {cp.pa, cp.pb}) {
            auto& fr = face_cut_regions[pos[p].face];
            if (std::find(fr.begin(), fr.end(), region[p]) == fr.end())
                fr.push_back(region[p]);
        }
    // main region per face and piece chi
    std::vector<long long> region_chi(num_regions, 1);
    std::vector<int> region_of_face_main(F, -1);
    for (int f = 0; f < F; ++f) {
        const Face& face = d.faces.faces[f];
        if (face_chords[f] == 0) {
            // untouched face: all its walks form separate orbits but belong
            // to one piece; merge below via a virtual main region
            if (!face_regions[f].empty()) {
                int main = face_regions[f].front();
                region_of_face_main[f] = main;
                // the other walk orbits join this piece carrying a default 1
                region_chi[main] = face.euler_char() -
                                   (static_cast<long long>(face_regions[f].size()) - 1);
            }
            continue;
        }
        auto& cutr = face_cut_regions[f];
        int main = cutr.front();
        auto it = main_choice.find(face.id);
        if (it != main_choice.end() && it->second >= 0 &&
            it->second < static_cast<int>(cutr.size()))
            main = cutr[static_cast<size_t>(it->second)];
        region_of_face_main[f] = main;
        // untouched walk orbits of this face join the main piece with default 1
        long long untouched = static_cast<long long>(face_regions[f].size()) -
                              static_cast<long long>(cutr.size());
        long long chi_main = face.euler_char() + face_chords[f] -
                             (static_cast<long long>(cutr.size()) - 1) - untouched;
        region_chi[main] = chi_main;
    }

    // union-find over: regions | atoms | crossings
    const int NR = num_regions;
    detail::DSU dsu(NR + num_atoms + V);
    auto region_node = [&](int r) { return r; };
    auto atom_node = [&](int a) { return NR + a; };
    auto crossing_node = [&](int c) { return NR + num_atoms + c; };
    for (int i = 0; i < P; ++i) dsu.unite(atom_node(pos[i].atom), region_node(region[i]));
    // untouched walks of a face join the face's main piece
    for (int f = 0; f < F; ++f) {
        if (region_of_face_main[f] < 0) continue;
        for (int r : face_regions[f]) {
            bool is_cut = std::find(face_cut_regions[f].begin(), face_cut_regions[f].end(),
                                    r) != face_cut_regions[f].end();
            if (!is_cut) dsu.unite(region_node(r), region_node(region_of_face_main[f]));
        }
    }
    // crossings join the adjacent end segments of their edge ends
    for (dart_t t = 0; t < d.num_darts(); ++t) {
        int e = d.edge_at[dart_crossing(t)][dart_port(t)];
        bool forward = t < d.alpha(t);
        int seg = forward ? 0 : spec.cuts_per_edge[e];
        dsu.unite(crossing_node(dart_crossing(t)), atom_node(atom_base[e] + seg));
    }

    // tally per component
    std::map<int, CutComponent> comp;
    std::map<int, std::pair<long long, long long>> vcounts;  // extra V, extra E
    for (int c = 0; c < V; ++c) {
        CutComponent& cc = comp[dsu.find(crossing_node(c))];
        ++cc.crossings;
        cc.crossing_ids.push_back(c);
    }
    for (int a = 0; a < num_atoms; ++a) ++comp[dsu.find(atom_node(a))].segments;
    for (int r = 0; r < NR; ++r) comp[dsu.find(region_node(r))].euler += region_chi[r];
    // point copies: 2 per cut, following the segments on each side
    for (int e = 0; e < E; ++e)
        for (int j = 0; j < spec.cuts_per_edge[e]; ++j) {
            for (int seg : {j, j + 1})
                ++vcounts[dsu.find(atom_node(atom_base[e] + seg))].first;
        }
    // arc copies: 2 per chord, one per bounding region traversal
    for (const ChordPos& cp : chord_pos) {
        ++vcounts[dsu.find(region_node(region[cp.pa]))].second;
        ++vcounts[dsu.find(region_node(region[cp.pb]))].second;
    }
    for (auto& [root, cc] : comp) {
        auto vc = vcounts.count(root) ? vcounts[root] : std::pair<long long, long long>{0, 0};
        cc.boundary_points = static_cast<int>(vc.first);
        cc.euler += (cc.crossings + vc.first) - (cc.segments + vc.second);
        res.components.push_back(cc);
    }
    res.valid = true;
    return res;
}

}  // namespace wga
