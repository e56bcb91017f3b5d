#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "wga/diagram.hpp"

namespace wga {

// Twist structure: crossings grouped into maximal bigon chains. A bigon is a
// disk region of degree two between two distinct crossings; chains of bigons
// arranged vertex to vertex form one twist region, and a crossing adjacent to
// no bigon is a twist region on its own.

struct TwistRegion {
    std::vector<int> crossings;    // in chain order when the region is a path
    std::vector<int> bigon_faces;  // face ids of the connecting bigons
    bool is_chain = true;          // false for closed cycles / branched clusters
};

struct TwistStructure {
    std::vector<TwistRegion> regions;
    std::vector<int> region_of;            // crossing -> region index
    std::vector<std::vector<int>> bigon_adj;  // crossing -> bigon-adjacent crossings
    int tw = 0;                            // number of twist regions
    std::vector<int> tw_per_component;     // regions entered by each strand
    // if the bigon adjacency contains a closed cycle (or a crossing adjacent
    // to three or more bigons), the chain structure degenerates; certificates
    // that depend on tw refuse on such diagrams
    std::optional<std::vector<int>> bigon_cycle;  // crossings of one bad cluster
};

inline TwistStructure twist_structure(const SurfaceDiagram& d) {
    TwistStructure ts;
    const int n = d.num_crossings();
    ts.region_of.assign(n, -1);

    // bigon adjacency between crossings
    struct BigonEdge {
        int c1, c2, face;
    };
    std::vector<BigonEdge> bigons;
    std::vector<std::vector<int>> adj(n);  // crossing -> bigon indices
    for (const Face& f : d.faces.faces) {
        if (!f.is_disk || f.degree != 2) continue;
        const FaceBoundary& w = d.faces.walks[f.walks[0]];
        int c1 = dart_crossing(w.darts[0]);
        int c2 = dart_crossing(w.darts[1]);
        if (c1 == c2) continue;  // a kink monogon edge pair, not a twist bigon
        int b = static_cast<int>(bigons.size());
        bigons.push_back({c1, c2, f.id});
        adj[c1].push_back(b);
        adj[c2].push_back(b);
    }

    ts.bigon_adj.assign(n, {});
    for (const BigonEdge& b : bigons) {
        ts.bigon_adj[b.c1].push_back(b.c2);
        ts.bigon_adj[b.c2].push_back(b.c1);
    }

    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        // collect the connected component under bigon adjacency
        std::vector<int> cluster{start};
        std::set<int> cluster_bigons;
        seen[start] = 1;
        for (size_t i = 0; i < cluster.size(); ++i)
            for (int b : adj[cluster[i]]) {
                cluster_bigons.insert(b);
                for (int c : {bigons[b].c1, bigons[b].c2})
                    if (!seen[c]) {
                        seen[c] = 1;
                        cluster.push_back(c);
                    }
            }
        TwistRegion region;
        region.is_chain = cluster_bigons.size() + 1 == cluster.size() &&
                          std::all_of(cluster.begin(), cluster.end(),
                                      [&](int c) { return adj[c].size() <= 2; });
        for (int b : cluster_bigons) region.bigon_faces.push_back(bigons[b].face);
        if (region.is_chain) {
            // order the chain from an endpoint
            int head = cluster[0];
            for (int c : cluster)
                if (adj[c].size() < 2) head = c;
            int prev_bigon = -1, cur = head;
            region.crossings.push_back(cur);
            while (region.crossings.size() < cluster.size()) {
                int next = -1;
                for (int b : adj[cur]) {
                    if (b == prev_bigon) continue;
                    next = bigons[b].c1 == cur ? bigons[b].c2 : bigons[b].c1;
                    prev_bigon = b;
                    break;
                }
                cur = next;
                region.crossings.push_back(cur);
            }
        } else {
            region.crossings = cluster;
            if (!ts.bigon_cycle) ts.bigon_cycle = cluster;
        }
        int id = static_cast<int>(ts.regions.size());
        for (int c : region.crossings) ts.region_of[c] = id;
        ts.regions.push_back(std::move(region));
    }
    ts.tw = static_cast<int>(ts.regions.size());

    ts.tw_per_component.assign(d.components.size(), 0);
    for (size_t k = 0; k < d.components.size(); ++k) {
        std::set<int> entered;
        for (const Passage& p : d.components[k].passages)
            entered.insert(ts.region_of[p.crossing]);
        ts.tw_per_component[k] = static_cast<int>(entered.size());
    }
    return ts;
}

// Crossings strictly between c1 and c2 along their common chain, if the two
// lie in one path-shaped twist region.
inline std::optional<std::set<int>> chain_between(const TwistStructure& ts, int c1,
                                                  int c2) {
    if (ts.region_of[c1] != ts.region_of[c2]) return std::nullopt;
    const TwistRegion& r = ts.regions[ts.region_of[c1]];
    if (!r.is_chain) return std::nullopt;
    auto i1 = std::find(r.crossings.begin(), r.crossings.end(), c1);
    auto i2 = std::find(r.crossings.begin(), r.crossings.end(), c2);
    if (i1 > i2) std::swap(i1, i2);
    return std::set<int>(i1 + 1, i2);
}

// Whether the crossings `inner` (not containing c1, c2) together with c1 and
// c2 induce a simple bigon-adjacency path from c1 to c2 passing through all
// of them: the shape of a string of bigons joining the two crossings.
inline bool is_bigon_string(const TwistStructure& ts, int c1, int c2,
                            const std::set<int>& inner) {
    std::set<int> verts = inner;
    verts.insert(c1);
    verts.insert(c2);
    // walk from c1 within verts, never revisiting
    std::set<int> visited{c1};
    int cur = c1, prev = -1;
    while (cur != c2) {
        int next = -1;
        for (int nb : ts.bigon_adj[cur]) {
            if (nb == prev || !verts.count(nb) || visited.count(nb)) continue;
            if (next >= 0 && next != nb) return false;  // branching: not a path
            next = nb;
        }
        if (next < 0) return false;
        visited.insert(next);
        prev = cur;
        cur = next;
    }
    // the path must exhaust the inner crossings, and c2 must be its endpoint
    return visited.size() == verts.size();
}

}  // namespace wga
