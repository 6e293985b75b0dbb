#pragma once

#include "fb/region.hpp"

namespace fb {

// Execution mode for the data-parallel kernels. Serial is the reference
// implementation; Parallel uses OpenMP and must produce identical results.
enum class Exec { Serial, Parallel };

// A curve whose two open regions are both strictly smaller than 2n/3.
struct BalancedCurve {
    JordanCurve curve;
    RegionPartition partition;
    int interior_size = 0;
    int exterior_size = 0;
};

// Every site where a closing arc can run: all non-tree edges of the graph,
// plus every chord between distinct, non-adjacent vertices that share a face
// (one site per corner pair). This is a superset of the candidate arcs any
// plane triangulation of g could contribute. Order: face id, then walk
// positions.
std::vector<ArcSite> cofacial_candidates(const PlaneGraph& g, const SpanningTree& t);
std::vector<ArcSite> cofacial_candidates(const PlaneGraph& g, const SpanningTree& t,
                                         const FaceSet& faces);

// Cycle formed by the two tree paths from the deepest common ancestor z of
// u and v, closed by the arc. Passes through the tree root iff z == root.
JordanCurve fundamental_cycle(const SpanningTree& t, Vertex u, Vertex v, const ArcSite& site);

// g with the site's chord inserted (or g unchanged for other site kinds).
PlaneGraph augmented(const PlaneGraph& g, const ArcSite& site);

// Scans all candidate sites and returns the curve minimizing
// max(|interior|, |exterior|), ties broken by candidate order. Guaranteed to
// satisfy the strict 2n/3 balance on both open regions; aborts loudly if no
// candidate does. Requires n >= 2; t must span g.
BalancedCurve find_balanced_curve(const PlaneGraph& g, const SpanningTree& t,
                                  Exec exec = Exec::Serial);

// Max number of curve vertices at any single BFS depth (<= 2 for curves from
// BFS trees).
int max_vertices_per_depth(const JordanCurve& curve, const SpanningTree& t);

} // namespace fb
