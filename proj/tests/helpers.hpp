#pragma once

#include "fb/generators.hpp"
#include "fb/plane_graph.hpp"
#include "fb/region.hpp"

#include <map>
#include <set>
#include <vector>

namespace fbtest {

inline const char* kC4File =
    "# comment\n"
    "planar 1\n"
    "n 4\n"
    "outer 0 1\n"
    "v 0 : 1 3\n"
    "v 1 : 2 0\n"
    "v 2 : 3 1\n"
    "v 3 : 0 2\n";

inline fb::PlaneGraph k4() {
    return fb::PlaneGraph({{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {2, 1, 0}}, {1, 0});
}

inline fb::PlaneGraph octahedron() {
    return fb::PlaneGraph(
        {{4, 3, 2, 1}, {0, 2, 5, 4}, {0, 3, 5, 1}, {0, 4, 5, 2}, {0, 1, 5, 3}, {1, 2, 3, 4}},
        {1, 0});
}

// Small mixed corpus for property tests.
inline std::vector<std::pair<std::string, fb::PlaneGraph>> small_corpus() {
    std::vector<std::pair<std::string, fb::PlaneGraph>> out;
    out.push_back({"k2", fb::gen_path(2)});
    out.push_back({"p3", fb::gen_path(3)});
    out.push_back({"p5", fb::gen_path(5)});
    out.push_back({"p8", fb::gen_path(8)});
    out.push_back({"c3", fb::gen_cycle(3)});
    out.push_back({"c5", fb::gen_cycle(5)});
    out.push_back({"c8", fb::gen_cycle(8)});
    out.push_back({"star4", fb::gen_star(4)});
    out.push_back({"star7", fb::gen_star(7)});
    out.push_back({"k23", fb::gen_k2n(3)});
    out.push_back({"k26", fb::gen_k2n(6)});
    out.push_back({"grid22", fb::gen_grid(2, 2)});
    out.push_back({"grid33", fb::gen_grid(3, 3)});
    out.push_back({"grid34", fb::gen_grid(3, 4)});
    out.push_back({"wheel5", fb::gen_wheel(5)});
    out.push_back({"wheel7", fb::gen_wheel(7)});
    out.push_back({"hex1", fb::gen_hex_patch(1)});
    out.push_back({"apo4", fb::gen_apollonian(4, 11)});
    out.push_back({"apo8", fb::gen_apollonian(8, 3)});
    out.push_back({"k4", k4()});
    out.push_back({"octa", octahedron()});
    return out;
}

// Independent region computation used as a test oracle: re-traces faces with
// its own orbit walker, flood-fills with an explicit recursion-free DFS, and
// classifies every vertex by checking all incident faces.
struct SlowRegions {
    std::set<int> interior, exterior, on_curve;
};

inline SlowRegions slow_region_oracle(const fb::PlaneGraph& g,
                                      const std::vector<fb::Vertex>& cycle,
                                      bool skip_closing_edge = false) {
    using fb::Vertex;
    int n = g.num_vertices();
    SlowRegions out;
    std::set<std::pair<Vertex, Vertex>> blocked;
    for (size_t i = 0; i < cycle.size(); ++i) {
        out.on_curve.insert(cycle[i]);
        if (i + 1 < cycle.size() || !skip_closing_edge) {
            Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
            blocked.insert({a, b});
            blocked.insert({b, a});
        }
    }
    // faces as maps from directed edge -> face id
    std::map<std::pair<Vertex, Vertex>, int> face_of;
    int nfaces = 0;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : g.neighbors(v)) {
            if (face_of.count({v, u})) continue;
            int id = nfaces++;
            Vertex a = v, b = u;
            while (!face_of.count({a, b})) {
                face_of[{a, b}] = id;
                // successor: neighbor after `a` in clockwise order at b
                int s = g.slot(b, a);
                Vertex c = g.nbr_at(b, s + 1);
                a = b;
                b = c;
            }
        }
    }
    fb::HalfEdge oh = g.outer_halfedge();
    int outer = face_of.at({oh.from, oh.to});
    std::vector<char> vis(nfaces, 0);
    std::vector<int> stack{outer};
    vis[outer] = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (auto& [he, id] : face_of) {
            if (id != f) continue;
            if (blocked.count(he)) continue;
            int other = face_of.at({he.second, he.first});
            if (!vis[other]) {
                vis[other] = 1;
                stack.push_back(other);
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (out.on_curve.count(v)) continue;
        bool any_ext = false, any_int = false;
        for (Vertex u : g.neighbors(v))
            (vis[face_of.at({v, u})] ? any_ext : any_int) = true;
        if (any_ext && any_int) throw std::logic_error("slow oracle: inconsistent sides");
        (any_ext ? out.exterior : out.interior).insert(v);
    }
    return out;
}

} // namespace fbtest
