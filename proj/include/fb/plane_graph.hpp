#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fb {

using Vertex = int;

// Directed half-edge u -> v.
struct HalfEdge {
    Vertex from = -1;
    Vertex to = -1;
    friend bool operator==(const HalfEdge& a, const HalfEdge& b) {
        return a.from == b.from && a.to == b.to;
    }
};

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string& what_)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + what_),
          line(line_), col(col_) {}
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A simple connected graph with a clockwise rotation system and a designated
// outer face. Immutable after construction; all queries are const.
//
// Faces are the orbits of the successor map
//     next(u -> v) = (v -> w),  w = neighbor immediately after u in the
//                               clockwise rotation stored at v,
// which traces every face boundary exactly once. Construction verifies
// symmetry, simplicity, connectivity and Euler's relation n - m + f = 2.
class PlaneGraph {
public:
    // adjacency[v] lists the neighbors of v in clockwise order.
    // For n == 1 `outer` is ignored; otherwise (outer.from, outer.to) must be
    // an edge; the face traced from it is the outer face.
    PlaneGraph(std::vector<std::vector<Vertex>> adjacency, HalfEdge outer,
               std::vector<std::string> labels = {});

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }
    int num_faces() const { return f_; }
    HalfEdge outer_halfedge() const { return outer_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return (int)adj_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    // Position of neighbor u in the rotation at v; -1 if absent.
    int slot(Vertex v, Vertex u) const;
    // Neighbor at cyclic position i of v's rotation.
    Vertex nbr_at(Vertex v, int i) const {
        int d = degree(v);
        return adj_[v][((i % d) + d) % d];
    }

    const std::vector<std::string>& labels() const { return labels_; }

    std::string serialize() const;

private:
    void validate_and_index();

    int n_ = 0;
    int m_ = 0;
    int f_ = 0;
    HalfEdge outer_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<int>> slot_of_;   // slot_of_[v] sorted by neighbor id? see cpp
    std::vector<std::vector<Vertex>> sorted_nbrs_;
    std::vector<std::string> labels_;
};

// Face structure of a plane graph: every directed half-edge belongs to
// exactly one boundary walk; walk lengths sum to 2m.
struct FaceSet {
    // walks[f] is the cyclic sequence of half-edges on face f.
    std::vector<std::vector<HalfEdge>> walks;
    int outer_face = -1;
    // face id / walk position of half-edge (v, slot s at v)
    std::vector<std::vector<int>> face_of_slot;
    std::vector<std::vector<int>> pos_of_slot;

    int face_of(const PlaneGraph& g, Vertex u, Vertex v) const {
        return face_of_slot[u][g.slot(u, v)];
    }
    int pos_of(const PlaneGraph& g, Vertex u, Vertex v) const {
        return pos_of_slot[u][g.slot(u, v)];
    }
    int face_count() const { return (int)walks.size(); }
};

FaceSet trace_faces(const PlaneGraph& g);

// BFS tree rooted at `root`. depth[v] is the graph distance from the root.
// Children are explored in clockwise rotation order starting from the parent
// half-edge; the root starts at its lowest-id neighbor.
struct SpanningTree {
    Vertex root = 0;
    std::vector<Vertex> parent; // parent[root] == root
    std::vector<int> depth;
    std::vector<Vertex> order;  // visit order (BFS)

    bool is_tree_edge(Vertex u, Vertex v) const {
        return parent[u] == v || parent[v] == u;
    }
    // Path root .. v along tree edges.
    std::vector<Vertex> path_from_root(Vertex v) const;
};

SpanningTree bfs_tree(const PlaneGraph& g, Vertex root);

PlaneGraph parse_plane_graph(const std::string& text);

} // namespace fb
