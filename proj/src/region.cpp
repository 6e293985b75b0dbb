#include "fb/region.hpp"

#include <algorithm>
#include <queue>

namespace fb {

std::vector<Vertex> JordanCurve::cycle() const {
    std::vector<Vertex> cyc(u_path);
    for (int i = (int)v_path.size() - 1; i >= 1; --i) cyc.push_back(v_path[i]);
    return cyc;
}

std::vector<std::pair<Vertex, Vertex>> JordanCurve::graph_edges(const PlaneGraph& g) const {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (size_t i = 1; i < u_path.size(); ++i) es.push_back({u_path[i - 1], u_path[i]});
    for (size_t i = 1; i < v_path.size(); ++i) es.push_back({v_path[i - 1], v_path[i]});
    if (site.kind != ArcSite::TreeParallel || !es.empty()) {
        if (g.has_edge(site.u, site.v)) es.push_back({site.u, site.v});
    }
    return es;
}

PlaneGraph insert_arc(const PlaneGraph& g, const ArcSite& site) {
    if (site.kind != ArcSite::Chord)
        throw std::invalid_argument("insert_arc: site is not a chord");
    if (site.u == site.v) throw std::invalid_argument("insert_arc: u == v");
    if (g.has_edge(site.u, site.v))
        throw std::invalid_argument("insert_arc: edge already present");

    FaceSet fs = trace_faces(g);
    if (site.face < 0 || site.face >= fs.face_count())
        throw std::invalid_argument("insert_arc: bad face id");
    const auto& walk = fs.walks[site.face];
    int L = (int)walk.size();
    if (site.occ_u < 0 || site.occ_u >= L || site.occ_v < 0 || site.occ_v >= L ||
        walk[site.occ_u].to != site.u || walk[site.occ_v].to != site.v)
        throw std::invalid_argument("insert_arc: corners do not match site vertices");

    std::vector<std::vector<Vertex>> adj(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) adj[v] = g.neighbors(v);

    // The corner at walk position p sits at vertex head(walk[p]) between the
    // incoming edge from walk[p].from and the next boundary edge; the new
    // neighbor goes immediately after walk[p].from in clockwise order.
    auto splice = [&](int pos, Vertex other) {
        Vertex at = walk[pos].to;
        Vertex pred = walk[pos].from;
        int s = g.slot(at, pred);
        adj[at].insert(adj[at].begin() + s + 1, other);
    };
    splice(site.occ_u, site.v);
    splice(site.occ_v, site.u);

    return PlaneGraph(std::move(adj), g.outer_halfedge(), g.labels());
}

ArcSite find_chord_site(const PlaneGraph& g, const FaceSet& faces, Vertex u, Vertex v, int face) {
    if (u == v) throw std::invalid_argument("arc endpoints coincide");
    if (face < 0 || face >= faces.face_count()) throw std::invalid_argument("bad face id");
    ArcSite site;
    site.kind = ArcSite::Chord;
    site.u = u;
    site.v = v;
    site.face = face;
    const auto& walk = faces.walks[face];
    for (int p = 0; p < (int)walk.size(); ++p) {
        if (walk[p].to == u && site.occ_u < 0) site.occ_u = p;
        if (walk[p].to == v && site.occ_v < 0) site.occ_v = p;
    }
    if (site.occ_u < 0 || site.occ_v < 0)
        throw std::invalid_argument("vertices are not co-facial on the given face");
    return site;
}

PlaneGraph insert_arc(const PlaneGraph& g, Vertex u, Vertex v, int face) {
    FaceSet fs = trace_faces(g);
    return insert_arc(g, find_chord_site(g, fs, u, v, face));
}

RegionPartition region_partition(const PlaneGraph& g_aug, const JordanCurve& curve) {
    int n = g_aug.num_vertices();
    RegionPartition part;
    part.side.assign(n, RegionPartition::Interior);

    std::vector<Vertex> cyc = curve.cycle();
    std::vector<char> on(n, 0);
    for (Vertex v : cyc) {
        if (v < 0 || v >= n || on[v])
            throw std::invalid_argument("region_partition: curve is not a simple cycle");
        on[v] = 1;
        part.side[v] = RegionPartition::OnCurve;
    }

    // Closed edge sequence of the cycle; every consecutive pair must be an
    // edge of g_aug (for TreeParallel the closing edge repeats a path edge).
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (cyc.size() >= 2) {
        for (size_t i = 0; i + 1 < cyc.size(); ++i) edges.push_back({cyc[i], cyc[i + 1]});
        edges.push_back({cyc.back(), cyc.front()});
        if (curve.site.kind == ArcSite::TreeParallel && cyc.size() == 2) edges.pop_back();
        for (auto [a, b] : edges)
            if (!g_aug.has_edge(a, b))
                throw std::invalid_argument("region_partition: curve edge missing from graph");
    }

    FaceSet fs = trace_faces(g_aug);
    std::vector<std::vector<char>> blocked(n);
    for (Vertex v = 0; v < n; ++v) blocked[v].assign(g_aug.degree(v), 0);
    for (auto [a, b] : edges) {
        blocked[a][g_aug.slot(a, b)] = 1;
        blocked[b][g_aug.slot(b, a)] = 1;
    }

    std::vector<char> face_ext(fs.face_count(), 0);
    if (fs.outer_face >= 0) {
        std::queue<int> q;
        q.push(fs.outer_face);
        face_ext[fs.outer_face] = 1;
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (const HalfEdge& he : fs.walks[f]) {
                if (blocked[he.from][g_aug.slot(he.from, he.to)]) continue;
                int g2 = fs.face_of(g_aug, he.to, he.from);
                if (!face_ext[g2]) {
                    face_ext[g2] = 1;
                    q.push(g2);
                }
            }
        }
    }

    for (Vertex v = 0; v < n; ++v) {
        if (on[v]) continue;
        if (g_aug.degree(v) == 0) { part.side[v] = RegionPartition::Exterior; continue; }
        bool ext = face_ext[fs.face_of_slot[v][0]];
        for (int s = 1; s < g_aug.degree(v); ++s)
            if (face_ext[fs.face_of_slot[v][s]] != ext)
                throw std::logic_error("region_partition: vertex touches both sides; "
                                       "curve is not closed");
        part.side[v] = ext ? RegionPartition::Exterior : RegionPartition::Interior;
    }

    for (Vertex v = 0; v < n; ++v) {
        switch (part.side[v]) {
        case RegionPartition::OnCurve: part.on_curve.push_back(v); break;
        case RegionPartition::Interior: part.interior.push_back(v); break;
        case RegionPartition::Exterior: part.exterior.push_back(v); break;
        }
    }
    return part;
}

} // namespace fb
