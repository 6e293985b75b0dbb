#pragma once

#include "fb/plane_graph.hpp"

#include <cstdint>
#include <random>

namespace fb {

// All generators emit a rotation system and outer face directly;
// construction re-validates Euler's relation. Randomized families are
// deterministic in (params, seed).

PlaneGraph gen_grid(int w, int h);
PlaneGraph gen_cycle(int n);
PlaneGraph gen_path(int n);
PlaneGraph gen_star(int leaves);
PlaneGraph gen_k2n(int legs);
PlaneGraph gen_wheel(int rim);
// Patch of the hexagonal lattice: all cells within distance r-1 of the
// central cell (r = 1 is a single hexagon). Girth 6.
PlaneGraph gen_hex_patch(int r);
// Maximal planar graph grown from K4 by repeatedly placing a new vertex
// inside a uniformly chosen bounded triangular face.
PlaneGraph gen_apollonian(int steps, uint64_t seed);
// Ladder around a degree-4 root with a bypass edge re-entering the up-path;
// exercises the re-entry branch of the degree-4 defense. Pendant paths of
// the given sizes tune the region balance.
PlaneGraph gen_cpath_gadget(int left, int pocket, int tail);
// Replaces `count` uniformly chosen edges of `base` by length-2 paths.
PlaneGraph subdivide_edges(const PlaneGraph& base, int count, std::mt19937_64& rng);

// Dispatch by family name with positional integer params (see the CLI).
PlaneGraph generate(const std::string& family, const std::vector<int>& params, uint64_t seed);

// Generates the base family, then applies `count` random edge subdivisions.
PlaneGraph generate_subdivided(const std::string& base_family,
                               const std::vector<int>& base_params, int count, uint64_t seed);

} // namespace fb
