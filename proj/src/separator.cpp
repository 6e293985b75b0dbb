#include "fb/separator.hpp"

#include <algorithm>
#include <array>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fb {

std::vector<ArcSite> cofacial_candidates(const PlaneGraph& g, const SpanningTree& t) {
    FaceSet fs = trace_faces(g);
    return cofacial_candidates(g, t, fs);
}

std::vector<ArcSite> cofacial_candidates(const PlaneGraph& g, const SpanningTree& t,
                                         const FaceSet& faces) {
    std::vector<ArcSite> sites;
    // (face, k1, k2) sort keys; existing edges use their canonical half-edge
    // position twice.
    std::vector<std::array<int, 3>> keys;

    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (u > v) continue;
            if (t.is_tree_edge(u, v)) continue;
            ArcSite s;
            s.kind = ArcSite::ExistingEdge;
            s.u = u;
            s.v = v;
            s.face = faces.face_of(g, u, v);
            s.occ_u = s.occ_v = faces.pos_of(g, u, v);
            sites.push_back(s);
            keys.push_back({s.face, s.occ_u, s.occ_u});
        }
    }

    for (int f = 0; f < faces.face_count(); ++f) {
        const auto& walk = faces.walks[f];
        int L = (int)walk.size();
        for (int p = 0; p < L; ++p) {
            for (int q = p + 1; q < L; ++q) {
                Vertex a = walk[p].to, b = walk[q].to;
                if (a == b || g.has_edge(a, b)) continue;
                ArcSite s;
                s.kind = ArcSite::Chord;
                s.u = a;
                s.v = b;
                s.face = f;
                s.occ_u = p;
                s.occ_v = q;
                sites.push_back(s);
                keys.push_back({f, p, q});
            }
        }
    }

    std::vector<int> idx(sites.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    std::vector<ArcSite> out;
    out.reserve(sites.size());
    for (int i : idx) out.push_back(sites[i]);
    return out;
}

JordanCurve fundamental_cycle(const SpanningTree& t, Vertex u, Vertex v, const ArcSite& site) {
    if (u == v) throw std::invalid_argument("fundamental_cycle: u == v");
    Vertex a = u, b = v;
    // climb to equal depth, then in lockstep to the deepest common ancestor
    while (t.depth[a] > t.depth[b]) a = t.parent[a];
    while (t.depth[b] > t.depth[a]) b = t.parent[b];
    while (a != b) { a = t.parent[a]; b = t.parent[b]; }
    Vertex z = a;

    auto path_down = [&](Vertex end) {
        std::vector<Vertex> p;
        for (Vertex x = end; x != z; x = t.parent[x]) p.push_back(x);
        p.push_back(z);
        std::reverse(p.begin(), p.end());
        return p;
    };
    JordanCurve c;
    c.u_path = path_down(u);
    c.v_path = path_down(v);
    c.site = site;
    return c;
}

PlaneGraph augmented(const PlaneGraph& g, const ArcSite& site) {
    if (site.kind == ArcSite::Chord) return insert_arc(g, site);
    return g;
}

int max_vertices_per_depth(const JordanCurve& curve, const SpanningTree& t) {
    std::vector<int> cnt;
    int best = 0;
    for (Vertex v : curve.cycle()) {
        int d = t.depth[v];
        if ((int)cnt.size() <= d) cnt.resize(d + 1, 0);
        best = std::max(best, ++cnt[d]);
    }
    return best;
}

namespace {

// Scratch for the candidate scan: epoch-stamped marks so no per-candidate
// clearing or graph copies are needed. The chord's face is modelled as two
// dual nodes (the walk split at the two corners), everything else floods
// through unblocked, non-curve edges.
struct Scanner {
    const PlaneGraph& g;
    const SpanningTree& t;
    const FaceSet& fs;
    int epoch = 0;
    std::vector<int> on_curve;              // epoch marks per vertex
    std::vector<std::vector<int>> blocked;  // epoch marks per half-edge slot
    std::vector<int> face_vis;              // epoch marks per face
    int split_vis[2] = {-1, -1};            // epoch marks for the two split segments
    std::vector<int> stack;                 // face worklist; -1/-2 = split segments

    Scanner(const PlaneGraph& g_, const SpanningTree& t_, const FaceSet& fs_)
        : g(g_), t(t_), fs(fs_) {
        on_curve.assign(g.num_vertices(), -1);
        blocked.resize(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v) blocked[v].assign(g.degree(v), -1);
        face_vis.assign(fs.face_count(), -1);
    }

    // Marks the curve of `site` and returns its vertex count, or -1 for a
    // degenerate candidate (should not happen for enumerated sites).
    int mark_curve(const ArcSite& site) {
        int cnt = 0;
        Vertex a = site.u, b = site.v;
        while (t.depth[a] > t.depth[b]) a = climb_mark(a, cnt);
        while (t.depth[b] > t.depth[a]) b = climb_mark(b, cnt);
        while (a != b) { a = climb_mark(a, cnt); b = climb_mark(b, cnt); }
        on_curve[a] = epoch; // z
        ++cnt;
        if (site.kind == ArcSite::ExistingEdge) block_edge(site.u, site.v);
        return cnt;
    }

    Vertex climb_mark(Vertex x, int& cnt) {
        on_curve[x] = epoch;
        ++cnt;
        block_edge(x, t.parent[x]);
        return t.parent[x];
    }

    void block_edge(Vertex x, Vertex y) {
        blocked[x][g.slot(x, y)] = epoch;
        blocked[y][g.slot(y, x)] = epoch;
    }

    bool edge_blocked(Vertex x, Vertex y) const { return blocked[x][g.slot(x, y)] == epoch; }

    // Returns {interior, exterior} sizes for the candidate.
    std::pair<int, int> sizes(const ArcSite& site) {
        ++epoch;
        int curve_n = mark_curve(site);

        // A chord splits its face in two; model the halves as separate dual
        // nodes. Segment 0 holds the walk positions occ_u+1 .. occ_v
        // (cyclically), segment 1 the rest.
        int S = site.kind == ArcSite::Chord ? site.face : -1;
        int L = S >= 0 ? (int)fs.walks[S].size() : 0;
        int len0 = S >= 0 ? (site.occ_v - site.occ_u + L) % L : 0;
        auto segment_of = [&](int pos) {
            int rel = (pos - site.occ_u + L) % L;
            return (rel >= 1 && rel <= len0) ? 0 : 1;
        };

        stack.clear();
        auto push_face = [&](int f, int via_pos) {
            if (f == S) {
                int seg = segment_of(via_pos);
                if (split_vis[seg] == epoch) return;
                split_vis[seg] = epoch;
                stack.push_back(seg == 0 ? -1 : -2);
            } else {
                if (face_vis[f] == epoch) return;
                face_vis[f] = epoch;
                stack.push_back(f);
            }
        };
        auto expand_halfedge = [&](const HalfEdge& he) {
            if (edge_blocked(he.from, he.to)) return;
            push_face(fs.face_of(g, he.to, he.from), fs.pos_of(g, he.to, he.from));
        };

        {
            HalfEdge o = g.outer_halfedge();
            push_face(fs.outer_face, fs.pos_of(g, o.from, o.to));
        }
        while (!stack.empty()) {
            int node = stack.back();
            stack.pop_back();
            if (node >= 0) {
                for (const HalfEdge& he : fs.walks[node]) expand_halfedge(he);
            } else {
                int seg = node == -1 ? 0 : 1;
                int lo = seg == 0 ? 1 : len0 + 1;
                int hi = seg == 0 ? len0 : L;
                for (int rel = lo; rel <= hi; ++rel)
                    expand_halfedge(fs.walks[S][(site.occ_u + rel) % L]);
            }
        }

        int ext = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (on_curve[v] == epoch) continue;
            int f0 = fs.face_of_slot[v][0];
            bool vis;
            if (f0 == S)
                vis = split_vis[segment_of(fs.pos_of_slot[v][0])] == epoch;
            else
                vis = face_vis[f0] == epoch;
            if (vis) ++ext;
        }
        int interior = g.num_vertices() - curve_n - ext;
        return {interior, ext};
    }
};

} // namespace

BalancedCurve find_balanced_curve(const PlaneGraph& g, const SpanningTree& t, Exec exec) {
    int n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("find_balanced_curve: need n >= 2");

    JordanCurve best_curve;
    if (n == 2) {
        // Only candidate: close the single edge with a parallel arc. Both
        // regions are empty.
        Vertex r = t.root, s = r == 0 ? 1 : 0;
        best_curve.u_path = {r};
        best_curve.v_path = {r, s};
        best_curve.site = ArcSite{ArcSite::TreeParallel, r, s, -1, -1, -1};
    } else {
        FaceSet fs = trace_faces(g);
        std::vector<ArcSite> sites = cofacial_candidates(g, t, fs);
        if (sites.empty())
            throw std::logic_error("find_balanced_curve: no candidate arc sites");

        long long best_key = std::numeric_limits<long long>::max();
        auto key_of = [&](int in_sz, int ex_sz, int idx) {
            return (long long)std::max(in_sz, ex_sz) << 32 | (unsigned)idx;
        };

        if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel
            {
                Scanner scan(g, t, fs);
                long long local = std::numeric_limits<long long>::max();
#pragma omp for schedule(dynamic, 16) nowait
                for (int i = 0; i < (int)sites.size(); ++i) {
                    auto [in_sz, ex_sz] = scan.sizes(sites[i]);
                    local = std::min(local, key_of(in_sz, ex_sz, i));
                }
#pragma omp critical
                best_key = std::min(best_key, local);
            }
#else
            exec = Exec::Serial;
#endif
        }
        if (exec == Exec::Serial) {
            Scanner scan(g, t, fs);
            for (int i = 0; i < (int)sites.size(); ++i) {
                auto [in_sz, ex_sz] = scan.sizes(sites[i]);
                best_key = std::min(best_key, key_of(in_sz, ex_sz, i));
            }
        }

        int best_idx = (int)(best_key & 0xffffffffLL);
        const ArcSite& site = sites[best_idx];
        best_curve = fundamental_cycle(t, site.u, site.v, site);

        // Definitive partition via the explicit augmented graph; must agree
        // with the scan.
        PlaneGraph aug = augmented(g, site);
        RegionPartition part = region_partition(aug, best_curve);
        int scan_max = (int)(best_key >> 32);
        if (std::max(part.interior_size(), part.exterior_size()) != scan_max)
            throw std::logic_error("find_balanced_curve: scan and partition disagree");

        BalancedCurve bc;
        bc.curve = best_curve;
        bc.partition = std::move(part);
        bc.interior_size = bc.partition.interior_size();
        bc.exterior_size = bc.partition.exterior_size();
        if (3 * bc.interior_size >= 2 * n || 3 * bc.exterior_size >= 2 * n)
            throw std::logic_error("find_balanced_curve: no balanced candidate found "
                                   "(best max region " + std::to_string(scan_max) + " of " +
                                   std::to_string(n) + ")");
        return bc;
    }

    // Degenerate two-vertex case.
    BalancedCurve bc;
    bc.curve = best_curve;
    bc.partition.side.assign(n, RegionPartition::OnCurve);
    bc.partition.on_curve = {0, 1};
    bc.interior_size = bc.exterior_size = 0;
    return bc;
}

} // namespace fb
