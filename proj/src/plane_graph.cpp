#include "fb/plane_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace fb {

PlaneGraph::PlaneGraph(std::vector<std::vector<Vertex>> adjacency, HalfEdge outer,
                       std::vector<std::string> labels)
    : outer_(outer), adj_(std::move(adjacency)), labels_(std::move(labels)) {
    n_ = (int)adj_.size();
    validate_and_index();
}

int PlaneGraph::slot(Vertex v, Vertex u) const {
    const auto& s = sorted_nbrs_[v];
    auto it = std::lower_bound(s.begin(), s.end(), u);
    if (it == s.end() || *it != u) return -1;
    return slot_of_[v][it - s.begin()];
}

bool PlaneGraph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return slot(u, v) >= 0;
}

void PlaneGraph::validate_and_index() {
    if (n_ < 1) throw ValidationError("graph must have at least one vertex");

    // Simplicity + symmetry, and the slot index.
    slot_of_.assign(n_, {});
    sorted_nbrs_.assign(n_, {});
    long long deg_sum = 0;
    for (Vertex v = 0; v < n_; ++v) {
        std::vector<std::pair<Vertex, int>> by_id;
        by_id.reserve(adj_[v].size());
        for (int i = 0; i < (int)adj_[v].size(); ++i) {
            Vertex u = adj_[v][i];
            if (u < 0 || u >= n_)
                throw ValidationError("vertex " + std::to_string(v) +
                                      " lists out-of-range neighbor " + std::to_string(u));
            if (u == v)
                throw ValidationError("loop at vertex " + std::to_string(v));
            by_id.push_back({u, i});
        }
        std::sort(by_id.begin(), by_id.end());
        for (size_t i = 1; i < by_id.size(); ++i)
            if (by_id[i].first == by_id[i - 1].first)
                throw ValidationError("parallel edge " + std::to_string(v) + "-" +
                                      std::to_string(by_id[i].first));
        for (auto& [u, i] : by_id) {
            sorted_nbrs_[v].push_back(u);
            slot_of_[v].push_back(i);
        }
        deg_sum += (long long)adj_[v].size();
    }
    for (Vertex v = 0; v < n_; ++v)
        for (Vertex u : adj_[v])
            if (slot(u, v) < 0)
                throw ValidationError("asymmetric rotation: " + std::to_string(v) + " lists " +
                                      std::to_string(u) + " but not vice versa");
    m_ = (int)(deg_sum / 2);

    // Connectivity.
    {
        std::vector<char> seen(n_, 0);
        std::queue<Vertex> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex u : adj_[v])
                if (!seen[u]) { seen[u] = 1; ++cnt; q.push(u); }
        }
        if (cnt != n_) throw ValidationError("graph is disconnected");
    }

    if (n_ == 1) {
        f_ = 1; // the whole plane
        outer_ = HalfEdge{-1, -1};
        return;
    }
    if (!has_edge(outer_.from, outer_.to))
        throw ValidationError("outer half-edge (" + std::to_string(outer_.from) + "," +
                              std::to_string(outer_.to) + ") is not an edge");

    // Count face orbits and check Euler's relation.
    int orbits = 0;
    std::vector<std::vector<char>> seen(n_);
    for (Vertex v = 0; v < n_; ++v) seen[v].assign(adj_[v].size(), 0);
    for (Vertex v = 0; v < n_; ++v) {
        for (int s = 0; s < (int)adj_[v].size(); ++s) {
            if (seen[v][s]) continue;
            ++orbits;
            Vertex a = v;
            int sl = s;
            do {
                seen[a][sl] = 1;
                Vertex b = adj_[a][sl];
                int back = slot(b, a);
                sl = (back + 1) % (int)adj_[b].size();
                a = b;
            } while (!(a == v && sl == s));
        }
    }
    f_ = orbits;
    if (n_ - m_ + f_ != 2)
        throw ValidationError("Euler violation: n - m + f = " + std::to_string(n_) + " - " +
                              std::to_string(m_) + " + " + std::to_string(f_) + " != 2");
}

std::string PlaneGraph::serialize() const {
    std::ostringstream os;
    os << "planar 1\n";
    os << "n " << n_ << "\n";
    if (n_ >= 2) os << "outer " << outer_.from << " " << outer_.to << "\n";
    for (Vertex v = 0; v < n_; ++v) {
        os << "v " << v << " :";
        for (Vertex u : adj_[v]) os << " " << u;
        os << "\n";
    }
    for (Vertex v = 0; v < (int)labels_.size(); ++v)
        if (!labels_[v].empty()) os << "name " << v << " " << labels_[v] << "\n";
    return os.str();
}

FaceSet trace_faces(const PlaneGraph& g) {
    FaceSet fs;
    int n = g.num_vertices();
    fs.face_of_slot.assign(n, {});
    fs.pos_of_slot.assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
        fs.face_of_slot[v].assign(g.degree(v), -1);
        fs.pos_of_slot[v].assign(g.degree(v), -1);
    }
    for (Vertex v = 0; v < n; ++v) {
        for (int s = 0; s < g.degree(v); ++s) {
            if (fs.face_of_slot[v][s] >= 0) continue;
            int id = (int)fs.walks.size();
            std::vector<HalfEdge> walk;
            Vertex a = v;
            int sl = s;
            do {
                fs.face_of_slot[a][sl] = id;
                fs.pos_of_slot[a][sl] = (int)walk.size();
                Vertex b = g.neighbors(a)[sl];
                walk.push_back({a, b});
                int back = g.slot(b, a);
                sl = (back + 1) % g.degree(b);
                a = b;
            } while (!(a == v && sl == s));
            fs.walks.push_back(std::move(walk));
        }
    }
    if (n >= 2) {
        HalfEdge o = g.outer_halfedge();
        fs.outer_face = fs.face_of_slot[o.from][g.slot(o.from, o.to)];
    } else if (!fs.walks.empty()) {
        fs.outer_face = 0;
    }
    return fs;
}

std::vector<Vertex> SpanningTree::path_from_root(Vertex v) const {
    std::vector<Vertex> path;
    for (Vertex x = v;; x = parent[x]) {
        path.push_back(x);
        if (x == parent[x]) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

SpanningTree bfs_tree(const PlaneGraph& g, Vertex root) {
    int n = g.num_vertices();
    if (root < 0 || root >= n) throw std::invalid_argument("bfs_tree: bad root");
    SpanningTree t;
    t.root = root;
    t.parent.assign(n, -1);
    t.depth.assign(n, -1);
    t.parent[root] = root;
    t.depth[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    t.order.push_back(root);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        int d = g.degree(v);
        if (d == 0) continue;
        int start = 0;
        if (v == root) {
            Vertex lo = *std::min_element(g.neighbors(v).begin(), g.neighbors(v).end());
            start = g.slot(v, lo);
        } else {
            start = g.slot(v, t.parent[v]);
        }
        for (int k = 0; k < d; ++k) {
            Vertex u = g.nbr_at(v, start + k);
            if (t.depth[u] >= 0) continue;
            t.depth[u] = t.depth[v] + 1;
            t.parent[u] = v;
            t.order.push_back(u);
            q.push(u);
        }
    }
    return t;
}

namespace {

struct Tok {
    std::string text;
    int col;
};

std::vector<Tok> tokenize(const std::string& line) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (isspace((unsigned char)line[i])) { ++i; continue; }
        size_t j = i;
        while (j < line.size() && !isspace((unsigned char)line[j])) ++j;
        out.push_back({line.substr(i, j - i), (int)i + 1});
        i = j;
    }
    return out;
}

int parse_int(const Tok& t, int lineno) {
    try {
        size_t pos;
        int v = std::stoi(t.text, &pos);
        if (pos != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError(lineno, t.col, "expected integer, got '" + t.text + "'");
    }
}

} // namespace

PlaneGraph parse_plane_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    bool saw_magic = false;
    int n = -1;
    std::optional<HalfEdge> outer;
    std::vector<std::vector<Vertex>> adj;
    std::vector<char> have_v;
    std::vector<std::string> labels;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;
        if (!saw_magic) {
            if (kw != "planar" || toks.size() != 2 || toks[1].text != "1")
                throw ParseError(lineno, toks[0].col, "expected 'planar 1' header");
            saw_magic = true;
            continue;
        }
        if (kw == "n") {
            if (toks.size() != 2) throw ParseError(lineno, toks[0].col, "expected 'n <count>'");
            n = parse_int(toks[1], lineno);
            if (n < 1) throw ParseError(lineno, toks[1].col, "vertex count must be >= 1");
            adj.assign(n, {});
            have_v.assign(n, 0);
            labels.assign(n, "");
        } else if (kw == "outer") {
            if (toks.size() != 3) throw ParseError(lineno, toks[0].col, "expected 'outer u v'");
            outer = HalfEdge{parse_int(toks[1], lineno), parse_int(toks[2], lineno)};
        } else if (kw == "v") {
            if (n < 0) throw ParseError(lineno, toks[0].col, "'v' line before 'n' line");
            if (toks.size() < 3 || toks[2].text != ":")
                throw ParseError(lineno, toks[0].col, "expected 'v <id> : <neighbors>'");
            int id = parse_int(toks[1], lineno);
            if (id < 0 || id >= n)
                throw ParseError(lineno, toks[1].col, "vertex id out of range");
            if (have_v[id])
                throw ParseError(lineno, toks[1].col,
                                 "duplicate rotation for vertex " + std::to_string(id));
            have_v[id] = 1;
            for (size_t i = 3; i < toks.size(); ++i) {
                int u = parse_int(toks[i], lineno);
                if (u < 0 || u >= n)
                    throw ParseError(lineno, toks[i].col, "neighbor id out of range");
                adj[id].push_back(u);
            }
        } else if (kw == "name") {
            if (n < 0 || toks.size() < 3)
                throw ParseError(lineno, toks[0].col, "expected 'name <id> <text>'");
            int id = parse_int(toks[1], lineno);
            if (id < 0 || id >= n)
                throw ParseError(lineno, toks[1].col, "vertex id out of range");
            std::string s;
            for (size_t i = 2; i < toks.size(); ++i) {
                if (i > 2) s += " ";
                s += toks[i].text;
            }
            labels[id] = s;
        } else {
            throw ParseError(lineno, toks[0].col, "unknown directive '" + kw + "'");
        }
    }
    if (!saw_magic) throw ParseError(lineno, 1, "missing 'planar 1' header");
    if (n < 0) throw ParseError(lineno, 1, "missing 'n' line");
    for (int v = 0; v < n; ++v)
        if (!have_v[v])
            throw ParseError(lineno, 1, "missing rotation line for vertex " + std::to_string(v));
    if (n >= 2 && !outer) throw ParseError(lineno, 1, "missing 'outer' line");

    return PlaneGraph(std::move(adj), outer.value_or(HalfEdge{-1, -1}), std::move(labels));
}

} // namespace fb
