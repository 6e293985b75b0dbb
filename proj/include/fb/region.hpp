#pragma once

#include "fb/plane_graph.hpp"

namespace fb {

// Where a closing arc between two vertices runs.
//
// A Chord is routed through face `face` of the base graph, attached at the
// corners `occ_u` / `occ_v` of that face's boundary walk (walk position p is
// the corner at the head of the p-th half-edge). Distinct corner pairs are
// distinct sites; this matters on faces with repeated vertices.
//
// An ExistingEdge site uses an edge already present in the graph; no
// insertion is needed. TreeParallel is the degenerate closing of a curve
// along a tree edge (both regions bounded by a doubled edge); it only occurs
// for two-vertex graphs.
struct ArcSite {
    enum Kind { Chord, ExistingEdge, TreeParallel };
    Kind kind = Chord;
    Vertex u = -1, v = -1;
    int face = -1;
    int occ_u = -1, occ_v = -1;
};

// Cycle made of two tree paths joined by one closing arc. Both paths start
// at the same vertex z; u_path ends at site.u, v_path at site.v.
struct JordanCurve {
    std::vector<Vertex> u_path; // z .. u
    std::vector<Vertex> v_path; // z .. v
    ArcSite site;

    Vertex z() const { return u_path.front(); }
    // Closed vertex cycle z .. u, v .. (z excluded at the end).
    std::vector<Vertex> cycle() const;
    // Undirected edges of the curve that exist in the given graph
    // (path edges, plus the closing edge unless it is a chord yet to be
    // inserted there).
    std::vector<std::pair<Vertex, Vertex>> graph_edges(const PlaneGraph& g) const;
};

struct RegionPartition {
    std::vector<Vertex> on_curve;  // sorted
    std::vector<Vertex> interior;  // sorted
    std::vector<Vertex> exterior;  // sorted
    enum Side : signed char { OnCurve = 0, Interior = 1, Exterior = 2 };
    std::vector<signed char> side; // per vertex

    int interior_size() const { return (int)interior.size(); }
    int exterior_size() const { return (int)exterior.size(); }
};

// Splices a new edge (u, v) into the rotations at the two corners named by a
// Chord site. The result is again a valid plane graph: the face splits in
// two, m and f each grow by one.
PlaneGraph insert_arc(const PlaneGraph& g, const ArcSite& site);

// Convenience form: routes the arc through the first corner occurrences of u
// and v on the boundary walk of `face`. Errors if u == v, the vertices are
// not co-facial there, or the edge already exists.
PlaneGraph insert_arc(const PlaneGraph& g, Vertex u, Vertex v, int face);

// Locates the chord site for (u, v) on `face`, first occurrences.
ArcSite find_chord_site(const PlaneGraph& g, const FaceSet& faces, Vertex u, Vertex v, int face);

// Splits the vertices of g_aug by the curve: faces are flood-filled from the
// outer face without crossing curve edges; the reached side is the exterior.
// For a Chord site, g_aug must already contain the inserted arc.
RegionPartition region_partition(const PlaneGraph& g_aug, const JordanCurve& curve);

} // namespace fb
