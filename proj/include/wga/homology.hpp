#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "wga/diagram.hpp"

namespace wga {

// First-homology class of a curve on a genus-1 surface component, written in
// the canonical basis chosen by torus_grading below.
struct H1Class {
    long long x = 0, y = 0;
    bool is_zero() const { return x == 0 && y == 0; }
    friend bool operator==(const H1Class&, const H1Class&) = default;
    H1Class operator+(H1Class o) const { return {x + o.x, y + o.y}; }
    H1Class operator-() const { return {-x, -y}; }
};

inline long long det(H1Class a, H1Class b) { return a.x * b.y - a.y * b.x; }

inline bool is_primitive(H1Class c) {
    if (c.is_zero()) return false;
    long long a = std::abs(c.x), b = std::abs(c.y);
    while (b) { long long t = a % b; a = b; b = t; }
    return a == 1;
}

// Integer grading of the diagram's darts by first homology. Each dart (an
// oriented edge end, pointing from its own crossing towards the other end)
// receives a vector such that the oriented sum over every face boundary is
// zero. The basis is pinned by a deterministic construction: edges in sorted
// dart order, a breadth-first spanning tree rooted at crossing 0 (tree edges
// graded zero), and a Smith-normal-form reduction of the face relations with
// smallest-pivot selection. `rank` is the free rank of the cycle lattice
// modulo face relations; it is 2 exactly when the faces assemble a torus from
// disks, and drops when non-disk faces hide part of the homology.
struct TorusGrading {
    int rank = 0;
    bool all_disks = false;
    std::vector<H1Class> dart_class;  // indexed by dart

    H1Class sum(const std::vector<dart_t>& darts) const {
        H1Class c;
        for (dart_t d : darts) c = c + dart_class[d];
        return c;
    }
    H1Class walk_class(const FaceBoundary& w) const { return sum(w.darts); }
};

namespace detail {

// Smith-style diagonalisation tracking column operations only; returns the
// diagonal entries and fills `V` with the accumulated column transform so
// that row-vector coordinates c = x * V diagonalise the relation lattice.
inline std::vector<long long> smith_diagonal(std::vector<std::vector<long long>>& R,
                                             std::vector<std::vector<long long>>& V) {
    const int r = static_cast<int>(R.size());
    const int m = r ? static_cast<int>(R[0].size()) : 0;
    V.assign(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i) V[i][i] = 1;
    auto swap_cols = [&](int i, int j) {
        for (auto& row : R) std::swap(row[i], row[j]);
        for (auto& row : V) std::swap(row[i], row[j]);
    };
    auto addmul_col = [&](int i, int j, long long k) {
        for (auto& row : R) row[i] += k * row[j];
        for (auto& row : V) row[i] += k * row[j];
    };
    std::vector<long long> diag;
    int t = 0;
    while (t < std::min(r, m)) {
        int pi = -1, pj = -1;
        for (int i = t; i < r; ++i)
            for (int j = t; j < m; ++j)
                if (R[i][j] != 0 &&
                    (pi < 0 || std::abs(R[i][j]) < std::abs(R[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(R[t], R[pi]);
        swap_cols(t, pj);
        bool done = false;
        while (!done) {
            done = true;
            for (int i = t + 1; i < r; ++i) {
                long long q = R[i][t] / R[t][t];
                bool rem = (R[i][t] % R[t][t]) != 0;
                for (int j = 0; j < m; ++j) R[i][j] -= q * R[t][j];
                if (rem && R[i][t] != 0) {
                    std::swap(R[t], R[i]);
                    done = false;
                }
            }
            for (int j = t + 1; j < m; ++j) {
                long long q = R[t][j] / R[t][t];
                bool rem = (R[t][j] % R[t][t]) != 0;
                addmul_col(j, t, -q);
                if (rem && R[t][j] != 0) {
                    swap_cols(t, j);
                    done = false;
                }
            }
        }
        diag.push_back(std::abs(R[t][t]));
        ++t;
    }
    return diag;
}

}  // namespace detail

// Compute the canonical homology grading for a diagram on a single closed
// orientable surface. Requires one surface component; throws otherwise.
inline TorusGrading torus_grading(const SurfaceDiagram& d) {
    if (d.surfaces.size() != 1)
        throw diagram_error("homology grading requires a single surface component");
    const int n = d.num_darts();
    // canonical edge list: sorted (min dart, max dart) pairs
    std::vector<std::pair<dart_t, dart_t>> edges;
    for (dart_t t = 0; t < n; ++t) {
        dart_t a = d.alpha(t);
        if (t < a) edges.push_back({t, a});
    }
    std::sort(edges.begin(), edges.end());
    // breadth-first spanning tree over crossings, rooted at crossing 0
    const int V = d.num_crossings();
    std::vector<std::vector<std::pair<dart_t, dart_t>>> adj(V);
    for (auto [a, b] : edges) {
        adj[dart_crossing(a)].push_back({a, b});
        adj[dart_crossing(b)].push_back({b, a});
    }
    std::vector<char> in_tree_vertex(V, 0);
    std::map<std::pair<dart_t, dart_t>, int> edge_index;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) edge_index[edges[i]] = i;
    std::vector<char> tree_edge(edges.size(), 0);
    std::deque<int> q{0};
    in_tree_vertex[0] = 1;
    while (!q.empty()) {
        int c = q.front();
        q.pop_front();
        for (auto [mine, other] : adj[c]) {
            int c2 = dart_crossing(other);
            if (!in_tree_vertex[c2]) {
                in_tree_vertex[c2] = 1;
                tree_edge[edge_index[{std::min(mine, other), std::max(mine, other)}]] = 1;
                q.push_back(c2);
            }
        }
    }
    // unknowns: non-tree edges, in canonical order
    std::vector<int> nontree;  // edge index
    std::vector<int> col_of_edge(edges.size(), -1);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (!tree_edge[i]) {
            col_of_edge[i] = static_cast<int>(nontree.size());
            nontree.push_back(i);
        }
    const int m = static_cast<int>(nontree.size());
    // relations: the oriented boundary sum of every face is null-homologous
    std::vector<std::vector<long long>> R;
    for (const Face& f : d.faces.faces) {
        std::vector<long long> row(m, 0);
        for (int wi : f.walks)
            for (dart_t t : d.faces.walks[wi].darts) {
                dart_t a = d.alpha(t);
                auto key = std::make_pair(std::min(t, a), std::max(t, a));
                int col = col_of_edge[edge_index[key]];
                if (col >= 0) row[col] += (t < a) ? 1 : -1;
            }
        R.push_back(std::move(row));
    }
    std::vector<std::vector<long long>> Vm;
    std::vector<long long> diag = detail::smith_diagonal(R, Vm);
    int rk = 0;
    for (long long x : diag)
        if (x != 0) ++rk;
    TorusGrading g;
    g.rank = m - rk;
    g.all_disks = all_faces_disks(d);
    if (g.rank > 2)
        throw diagram_error("homology grading supports genus at most 1");
    for (long long x : diag)
        if (x > 1) throw diagram_error("homology has torsion; surface structure is inconsistent");
    g.dart_class.assign(n, {});
    for (int k = 0; k < m; ++k) {
        int ei = nontree[k];
        H1Class v{};
        if (rk + 0 < m) v.x = Vm[k][rk + 0];
        if (g.rank >= 2) v.y = Vm[k][rk + 1];
        auto [a, b] = edges[ei];
        g.dart_class[a] = v;
        g.dart_class[b] = -v;
    }
    return g;
}

// Distances from the cover face (walk f0, sheet (0,0)) in the dual graph of
// the Z^2-cover. Only meaningful when every face is a disk. Sheets are
// confined to |i|,|j| <= bound.
inline std::map<std::array<long long, 3>, int> cover_face_distances(
    const SurfaceDiagram& d, const TorusGrading& g, int f0, long long bound) {
    // per-dart sheet offset within its walk's lift
    std::vector<H1Class> prefix(d.num_darts());
    for (const FaceBoundary& w : d.faces.walks) {
        H1Class acc;
        for (dart_t t : w.darts) {
            prefix[t] = acc;
            acc = acc + g.dart_class[t];
        }
    }
    std::map<std::array<long long, 3>, int> dist;
    std::deque<std::array<long long, 3>> q;
    dist[{f0, 0, 0}] = 0;
    q.push_back({f0, 0, 0});
    while (!q.empty()) {
        auto [f, gx, gy] = q.front();
        q.pop_front();
        int dc = dist[{f, gx, gy}];
        for (dart_t t : d.faces.walks[static_cast<size_t>(f)].darts) {
            H1Class s{gx + prefix[t].x, gy + prefix[t].y};
            dart_t a = d.alpha(t);
            H1Class v = g.dart_class[t];
            long long nf = d.faces.dart_walk[a];
            long long nx = s.x + v.x - prefix[a].x;
            long long ny = s.y + v.y - prefix[a].y;
            if (std::abs(nx) > bound || std::abs(ny) > bound) continue;
            std::array<long long, 3> key{nf, nx, ny};
            if (!dist.count(key)) {
                dist[key] = dc + 1;
                q.push_back(key);
            }
        }
    }
    return dist;
}

// Minimum number of diagram edges crossed by an essential closed curve of
// homology class `target` (nonzero); nullopt if unreachable within bound.
inline std::optional<int> min_crossings_of_class(const SurfaceDiagram& d,
                                                 const TorusGrading& g,
                                                 H1Class target,
                                                 long long bound) {
    std::optional<int> best;
    for (int f0 = 0; f0 < static_cast<int>(d.faces.walks.size()); ++f0) {
        auto dist = cover_face_distances(d, g, f0, bound);
        auto it = dist.find({f0, target.x, target.y});
        if (it != dist.end() && (!best || it->second < *best)) best = it->second;
    }
    return best;
}

// Minimum over all nonzero classes: the shortest essential dual cycle.
inline std::optional<int> min_crossings_essential(const SurfaceDiagram& d,
                                                  const TorusGrading& g,
                                                  long long bound) {
    std::optional<int> best;
    for (int f0 = 0; f0 < static_cast<int>(d.faces.walks.size()); ++f0) {
        auto dist = cover_face_distances(d, g, f0, bound);
        for (const auto& [key, dd] : dist)
            if (key[0] == f0 && (key[1] != 0 || key[2] != 0))
                if (!best || dd < *best) best = dd;
    }
    return best;
}

// Homology class of a link component's projection: sum of the outgoing darts
// along one traversal (each passage contributes the dart leaving the crossing).
inline H1Class strand_class(const SurfaceDiagram& d, const TorusGrading& g,
                            const LinkComponent& k) {
    H1Class c;
    for (const Passage& p : k.passages)
        c = c + g.dart_class[dart_of(p.crossing, (p.entry_port + 2) % 4)];
    return c;
}

// Total class of the whole projection.
inline H1Class diagram_class(const SurfaceDiagram& d, const TorusGrading& g) {
    H1Class c;
    for (const LinkComponent& k : strands(d)) c = c + strand_class(d, g, k);
    return c;
}

}  // namespace wga
