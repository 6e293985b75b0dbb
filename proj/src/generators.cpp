#include "fb/generators.hpp"

#include "fb/region.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fb {

namespace {

// Outer face detection for coordinate-built graphs: with clockwise
// rotations, bounded face walks run counterclockwise (positive signed
// area); the one negative-area walk is the outer face. Coordinates are
// integer pairs (a, b) on a lattice where the true position is
// (a * sx, b * sy) for positive scale factors, which do not affect signs.
HalfEdge outer_by_area(const std::vector<std::vector<Vertex>>& adj,
                       const std::vector<std::pair<long long, long long>>& pos) {
    int n = (int)adj.size();
    std::vector<std::vector<char>> seen(n);
    for (int v = 0; v < n; ++v) seen[v].assign(adj[v].size(), 0);
    auto slot_of = [&](Vertex v, Vertex u) {
        for (int i = 0; i < (int)adj[v].size(); ++i)
            if (adj[v][i] == u) return i;
        return -1;
    };
    for (int v0 = 0; v0 < n; ++v0) {
        for (int s0 = 0; s0 < (int)adj[v0].size(); ++s0) {
            if (seen[v0][s0]) continue;
            long long area2 = 0;
            Vertex a = v0;
            int sl = s0;
            do {
                seen[a][sl] = 1;
                Vertex b = adj[a][sl];
                area2 += pos[a].first * pos[b].second - pos[b].first * pos[a].second;
                int back = slot_of(b, a);
                sl = (back + 1) % (int)adj[b].size();
                a = b;
            } while (!(a == v0 && sl == s0));
            if (area2 < 0) return {v0, adj[v0][s0]};
        }
    }
    throw std::logic_error("outer_by_area: no negative-area walk found");
}

} // namespace

PlaneGraph gen_grid(int w, int h) {
    if (w < 1 || h < 1 || (long long)w * h < 1) throw std::invalid_argument("grid: bad size");
    if (w == 1 && h == 1) return PlaneGraph({{}}, {-1, -1});
    int n = w * h;
    auto id = [&](int x, int y) { return y * w + x; };
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<std::pair<long long, long long>> pos(n);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            pos[id(x, y)] = {x, y};
            // clockwise: up, right, down, left (y axis points up)
            if (y + 1 < h) adj[id(x, y)].push_back(id(x, y + 1));
            if (x + 1 < w) adj[id(x, y)].push_back(id(x + 1, y));
            if (y > 0) adj[id(x, y)].push_back(id(x, y - 1));
            if (x > 0) adj[id(x, y)].push_back(id(x - 1, y));
        }
    }
    HalfEdge outer = outer_by_area(adj, pos);
    return PlaneGraph(std::move(adj), outer);
}

PlaneGraph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::vector<Vertex>> adj(n);
    for (int i = 0; i < n; ++i) adj[i] = {(i + n - 1) % n, (i + 1) % n};
    // With rotations [prev, next] the descending orbit is one face; call it
    // the outer face.
    return PlaneGraph(std::move(adj), {1, 0});
}

PlaneGraph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    if (n == 1) return PlaneGraph({{}}, {-1, -1});
    std::vector<std::vector<Vertex>> adj(n);
    for (int i = 0; i + 1 < n; ++i) {
        adj[i].push_back(i + 1);
        adj[i + 1].push_back(i);
    }
    return PlaneGraph(std::move(adj), {0, 1});
}

PlaneGraph gen_star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star: need >= 1 leaf");
    std::vector<std::vector<Vertex>> adj(leaves + 1);
    for (int i = 1; i <= leaves; ++i) {
        adj[0].push_back(i);
        adj[i] = {0};
    }
    return PlaneGraph(std::move(adj), {0, 1});
}

PlaneGraph gen_k2n(int legs) {
    if (legs < 1) throw std::invalid_argument("k2n: need >= 1 leg");
    int n = legs + 2;
    std::vector<std::vector<Vertex>> adj(n);
    for (int i = 2; i < n; ++i) {
        adj[0].push_back(i);
        adj[i] = {0, 1};
    }
    for (int i = n - 1; i >= 2; --i) adj[1].push_back(i);
    return PlaneGraph(std::move(adj), {0, 2});
}

PlaneGraph gen_wheel(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel: need rim >= 3");
    int hub = rim;
    std::vector<std::vector<Vertex>> adj(rim + 1);
    for (int i = 0; i < rim; ++i)
        adj[i] = {hub, (i + 1) % rim, (i + rim - 1) % rim};
    for (int i = rim - 1; i >= 0; --i) adj[hub].push_back(i);
    return PlaneGraph(std::move(adj), {1, 0});
}

PlaneGraph gen_hex_patch(int r) {
    if (r < 1) throw std::invalid_argument("hex_patch: need r >= 1");
    // Cell centers in axial coordinates within hex distance r-1 of origin;
    // corner positions on the integer lattice (a, b) with true position
    // (a * sqrt(3)/2, b / 2).
    std::map<std::pair<long long, long long>, int> corner_id;
    std::vector<std::pair<long long, long long>> pos;
    auto corner = [&](long long a, long long b) {
        auto it = corner_id.find({a, b});
        if (it != corner_id.end()) return it->second;
        int id = (int)pos.size();
        corner_id[{a, b}] = id;
        pos.push_back({a, b});
        return id;
    };
    // Clockwise corner offsets of a pointy-top hexagon, starting at the top.
    const std::pair<int, int> off[6] = {{0, 2}, {1, 1}, {1, -1}, {0, -2}, {-1, -1}, {-1, 1}};
    std::vector<std::pair<int, int>> edges;
    for (int q = -(r - 1); q <= r - 1; ++q) {
        for (int s = std::max(-(r - 1), -q - (r - 1)); s <= std::min(r - 1, -q + (r - 1)); ++s) {
            long long ca = 2 * q + s, cb = 3 * s;
            int prev = -1, first = -1;
            for (int k = 0; k < 6; ++k) {
                int c = corner(ca + off[k].first, cb + off[k].second);
                if (k == 0) first = c;
                else edges.push_back({prev, c});
                prev = c;
            }
            edges.push_back({prev, first});
        }
    }
    std::sort(edges.begin(), edges.end(), [](auto& e, auto& f) {
        return std::minmax(e.first, e.second) < std::minmax(f.first, f.second);
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](auto& e, auto& f) {
                                return std::minmax(e.first, e.second) ==
                                       std::minmax(f.first, f.second);
                            }),
                edges.end());

    int n = (int)pos.size();
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // Each honeycomb vertex has one of two neighbor-offset patterns; order
    // them clockwise.
    const std::pair<int, int> cw_up[3] = {{0, 2}, {1, -1}, {-1, -1}};
    const std::pair<int, int> cw_down[3] = {{-1, 1}, {1, 1}, {0, -2}};
    for (int v = 0; v < n; ++v) {
        auto [va, vb] = pos[v];
        std::vector<Vertex> ordered;
        auto try_offsets = [&](const std::pair<int, int>* offs) {
            ordered.clear();
            for (int k = 0; k < 3; ++k) {
                auto it = corner_id.find({va + offs[k].first, vb + offs[k].second});
                if (it == corner_id.end()) continue;
                if (std::find(adj[v].begin(), adj[v].end(), it->second) != adj[v].end())
                    ordered.push_back(it->second);
            }
        };
        try_offsets(cw_up);
        if (ordered.size() != adj[v].size()) try_offsets(cw_down);
        if (ordered.size() != adj[v].size())
            throw std::logic_error("hex_patch: neighbor pattern mismatch");
        adj[v] = ordered;
    }
    HalfEdge outer = outer_by_area(adj, pos);
    return PlaneGraph(std::move(adj), outer);
}

PlaneGraph gen_apollonian(int steps, uint64_t seed) {
    if (steps < 0) throw std::invalid_argument("apollonian: steps must be >= 0");
    // K4 with one vertex inside the triangle 0-1-2; outer face (1,0).
    std::vector<std::vector<Vertex>> adj = {{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {2, 1, 0}};
    HalfEdge outer{1, 0};
    std::mt19937_64 rng(seed);
    PlaneGraph g(adj, outer);
    for (int s = 0; s < steps; ++s) {
        FaceSet fs = trace_faces(g);
        std::vector<int> inner;
        for (int f = 0; f < fs.face_count(); ++f)
            if (f != fs.outer_face) inner.push_back(f);
        int pick = inner[std::uniform_int_distribution<int>(0, (int)inner.size() - 1)(rng)];
        const auto& walk = fs.walks[pick];
        if (walk.size() != 3) throw std::logic_error("apollonian: non-triangular face");
        int nv = g.num_vertices();
        std::vector<std::vector<Vertex>> a2(nv + 1);
        for (Vertex v = 0; v < nv; ++v) a2[v] = g.neighbors(v);
        // Insert the new vertex after each corner's predecessor, clockwise
        // rotation at the new vertex is the reversed walk order.
        for (int k = 0; k < 3; ++k) {
            Vertex at = walk[k].to, pred = walk[k].from;
            int sl = g.slot(at, pred);
            a2[at].insert(a2[at].begin() + sl + 1, nv);
        }
        a2[nv] = {walk[2].to, walk[1].to, walk[0].to};
        g = PlaneGraph(std::move(a2), outer);
    }
    return g;
}

PlaneGraph gen_cpath_gadget(int left, int pocket, int tail) {
    if (left < 0 || pocket < 0 || tail < 0)
        throw std::invalid_argument("cpath_gadget: negative tree size");
    // A vertical ladder around a degree-4 root 0: up-path 0-1-2-3-4, down
    // path 0-5-6-7-8, side neighbors 9 (left) and 10 (right), and a bypass
    // edge 5-2 swinging around the right pocket. Vertex 11 is a spur keeping
    // deg(1) >= deg(5) so the defense keeps 5 as the sacrificed neighbor.
    // Pendant paths of the given sizes hang from 9 (left), 10 (inside the
    // pocket) and 7 (right) to tune region balance and piece sizes.
    int n = 12 + left + pocket + tail;
    std::vector<std::vector<Vertex>> adj(n);
    adj[0] = {1, 10, 5, 9};
    adj[1] = {2, 0, 11};
    adj[2] = {3, 5, 1};
    adj[3] = {4, 2};
    adj[4] = {3};
    adj[5] = {0, 2, 6};
    adj[6] = {5, 7};
    adj[7] = {6, 8};
    adj[8] = {7};
    adj[9] = {0};
    adj[10] = {0};
    adj[11] = {1};
    int next = 12;
    auto chain = [&](Vertex anchor, int len) {
        Vertex prev = anchor;
        for (int i = 0; i < len; ++i) {
            adj[prev].push_back(next);
            adj[next].push_back(prev);
            prev = next++;
        }
    };
    chain(9, left);
    chain(10, pocket);
    // tail sits between v2 and v4 in the clockwise rotation at 7
    if (tail > 0) {
        adj[7] = {6};
        chain(7, tail);
        adj[7].push_back(8);
    }
    return PlaneGraph(std::move(adj), {4, 3});
}

PlaneGraph subdivide_edges(const PlaneGraph& base, int count, std::mt19937_64& rng) {
    if (count < 0) throw std::invalid_argument("subdivide: count must be >= 0");
    PlaneGraph g = base;
    for (int s = 0; s < count; ++s) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            for (Vertex u : g.neighbors(v))
                if (v < u) edges.push_back({v, u});
        auto [eu, ev] = edges[std::uniform_int_distribution<size_t>(0, edges.size() - 1)(rng)];
        int nv = g.num_vertices();
        std::vector<std::vector<Vertex>> a2(nv + 1);
        for (Vertex v = 0; v < nv; ++v) a2[v] = g.neighbors(v);
        a2[eu][g.slot(eu, ev)] = nv;
        a2[ev][g.slot(ev, eu)] = nv;
        a2[nv] = {eu, ev};
        HalfEdge outer = g.outer_halfedge();
        if (outer.from == eu && outer.to == ev) outer = {eu, nv};
        else if (outer.from == ev && outer.to == eu) outer = {ev, nv};
        g = PlaneGraph(std::move(a2), outer);
    }
    return g;
}

PlaneGraph generate(const std::string& family, const std::vector<int>& params, uint64_t seed) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family '" + family + "' expects " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (family == "grid") { need(2); return gen_grid(params[0], params[1]); }
    if (family == "cycle") { need(1); return gen_cycle(params[0]); }
    if (family == "path") { need(1); return gen_path(params[0]); }
    if (family == "star") { need(1); return gen_star(params[0]); }
    if (family == "k2n") { need(1); return gen_k2n(params[0]); }
    if (family == "wheel") { need(1); return gen_wheel(params[0]); }
    if (family == "hex_patch") { need(1); return gen_hex_patch(params[0]); }
    if (family == "apollonian") { need(1); return gen_apollonian(params[0], seed); }
    if (family == "cpath_gadget") {
        need(3);
        return gen_cpath_gadget(params[0], params[1], params[2]);
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

PlaneGraph generate_subdivided(const std::string& base_family,
                               const std::vector<int>& base_params, int count, uint64_t seed) {
    PlaneGraph base = generate(base_family, base_params, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    return subdivide_edges(base, count, rng);
}

} // namespace fb
