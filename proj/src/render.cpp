#include "fb/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace fb {

namespace {

// Barycentric placement: pin the outer walk to a regular polygon, put every
// other vertex at the average of its neighbors. Solved by plain Gauss-Seidel
// sweeps; the system is strictly diagonally dominant on the free vertices.
std::vector<std::pair<double, double>> layout(const PlaneGraph& g) {
    int n = g.num_vertices();
    std::vector<std::pair<double, double>> pos(n, {0.0, 0.0});
    std::vector<char> pinned(n, 0);
    if (n == 1) return {{0.5, 0.5}};

    FaceSet fs = trace_faces(g);
    const auto& walk = fs.walks[fs.outer_face];
    std::vector<Vertex> ring;
    std::set<Vertex> seen;
    for (const HalfEdge& he : walk)
        if (seen.insert(he.to).second) ring.push_back(he.to);
    // The outer walk comes out clockwise; place it counterclockwise on the
    // circle so the drawing is mirror-consistent.
    int k = (int)ring.size();
    for (int i = 0; i < k; ++i) {
        double ang = -2.0 * M_PI * i / k + M_PI / 2.0;
        pos[ring[i]] = {std::cos(ang), std::sin(ang)};
        pinned[ring[i]] = 1;
    }
    for (int sweep = 0; sweep < 2000; ++sweep) {
        double delta = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (pinned[v] || g.degree(v) == 0) continue;
            double sx = 0, sy = 0;
            for (Vertex u : g.neighbors(v)) {
                sx += pos[u].first;
                sy += pos[u].second;
            }
            sx /= g.degree(v);
            sy /= g.degree(v);
            delta += std::abs(sx - pos[v].first) + std::abs(sy - pos[v].second);
            pos[v] = {sx, sy};
        }
        if (delta < 1e-9) break;
    }
    return pos;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string render_svg(const PlaneGraph& g, const RenderOverlay& overlay) {
    int n = g.num_vertices();
    auto pos = layout(g);
    const double size = 640.0, margin = 40.0;
    double lo_x = 1e18, hi_x = -1e18, lo_y = 1e18, hi_y = -1e18;
    for (auto& [x, y] : pos) {
        lo_x = std::min(lo_x, x); hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y); hi_y = std::max(hi_y, y);
    }
    double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    auto px = [&](Vertex v) { return margin + (pos[v].first - lo_x) / span * (size - 2 * margin); };
    auto py = [&](Vertex v) { return margin + (hi_y - pos[v].second) / span * (size - 2 * margin); };

    std::vector<char> burned(n, 0), prot(n, 0);
    for (Vertex v : overlay.burned) burned[v] = 1;
    for (Vertex v : overlay.protected_vertices) prot[v] = 1;

    auto norm = [](Vertex a, Vertex b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    std::set<std::pair<Vertex, Vertex>> curve_edges;
    std::pair<Vertex, Vertex> arc_edge{-1, -1};
    if (overlay.curve) {
        for (auto [a, b] : overlay.curve->graph_edges(g)) curve_edges.insert(norm(a, b));
        arc_edge = norm(overlay.curve->site.u, overlay.curve->site.v);
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (int)size << "\" height=\""
       << (int)size << "\" viewBox=\"0 0 " << (int)size << " " << (int)size << "\">\n";
    os << "<style>\n"
          ".edge { stroke: #999; stroke-width: 1; }\n"
          ".tree { stroke: #222; stroke-width: 1.6; }\n"
          ".curve { stroke: #000; stroke-width: 4; }\n"
          ".arc { stroke: #000; stroke-width: 3; stroke-dasharray: 7 5; }\n"
          ".v { fill: #fff; stroke: #333; }\n"
          ".burned { fill: #d33; }\n"
          ".protected { fill: #36c; }\n"
          "text { font: 10px sans-serif; }\n"
          "</style>\n";

    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : g.neighbors(v)) {
            if (u < v) continue;
            auto key = norm(u, v);
            std::string cls = "edge";
            if (overlay.tree && overlay.tree->is_tree_edge(u, v)) cls = "tree";
            if (curve_edges.count(key)) cls = key == arc_edge ? "arc" : "curve";
            os << "<line class=\"" << cls << "\" x1=\"" << fmt(px(v)) << "\" y1=\"" << fmt(py(v))
               << "\" x2=\"" << fmt(px(u)) << "\" y2=\"" << fmt(py(u)) << "\"/>\n";
        }
    }
    // A chord arc has no underlying edge; draw it between its endpoints.
    if (overlay.curve && overlay.curve->site.kind == ArcSite::Chord) {
        Vertex a = overlay.curve->site.u, b = overlay.curve->site.v;
        os << "<line class=\"arc\" x1=\"" << fmt(px(a)) << "\" y1=\"" << fmt(py(a)) << "\" x2=\""
           << fmt(px(b)) << "\" y2=\"" << fmt(py(b)) << "\"/>\n";
    }
    for (Vertex v = 0; v < n; ++v) {
        std::string cls = "v";
        if (burned[v]) cls = "v burned";
        else if (prot[v]) cls = "v protected";
        os << "<circle class=\"" << cls << "\" cx=\"" << fmt(px(v)) << "\" cy=\"" << fmt(py(v))
           << "\" r=\"7\"/>\n";
        os << "<text x=\"" << fmt(px(v) + 8) << "\" y=\"" << fmt(py(v) - 8) << "\">" << v
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace fb
