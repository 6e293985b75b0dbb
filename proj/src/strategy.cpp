#include "fb/strategy.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace fb {

namespace {

std::vector<int> bfs_dist(const PlaneGraph& g, Vertex src) {
    std::vector<int> d(g.num_vertices(), -1);
    std::queue<Vertex> q;
    d[src] = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex u : g.neighbors(v))
            if (d[u] < 0) {
                d[u] = d[v] + 1;
                q.push(u);
            }
    }
    return d;
}

// Shortest path `from` .. `target` walking down the distance field of the
// target, lowest neighbor id first.
std::vector<Vertex> descend(const PlaneGraph& g, const std::vector<int>& dist_to_target,
                            Vertex from) {
    std::vector<Vertex> path{from};
    Vertex cur = from;
    while (dist_to_target[cur] > 0) {
        Vertex next = -1;
        for (Vertex u : g.neighbors(cur))
            if (dist_to_target[u] == dist_to_target[cur] - 1 && (next < 0 || u < next)) next = u;
        if (next < 0) throw std::logic_error("descend: broken distance field");
        path.push_back(next);
        cur = next;
    }
    return path;
}

// Buckets the curve vertices by BFS depth; depth 0 (the root) is never a
// legal protection target and is skipped.
std::vector<std::vector<Vertex>> depth_targets(const std::vector<Vertex>& cycle_vertices,
                                               const SpanningTree& t) {
    std::vector<std::vector<Vertex>> targets;
    for (Vertex v : cycle_vertices) {
        int d = t.depth[v];
        if (d == 0) continue;
        if ((int)targets.size() <= d) targets.resize(d + 1);
        targets[d].push_back(v);
    }
    for (auto& bucket : targets) std::sort(bucket.begin(), bucket.end());
    return targets;
}

std::vector<char> closed_side(const RegionPartition& part, Side side) {
    std::vector<char> s(part.side.size(), 0);
    auto keep = side == Side::Interior ? RegionPartition::Interior : RegionPartition::Exterior;
    for (size_t v = 0; v < part.side.size(); ++v)
        s[v] = part.side[v] == keep || part.side[v] == RegionPartition::OnCurve;
    return s;
}

std::vector<char> whole_graph_side(int n) { return std::vector<char>(n, 1); }

StrategyOutcome run_plan(const PlaneGraph& g, Vertex root, DefensePlan plan,
                         BudgetSchedule schedule, Rat guarantee, GuaranteeKind kind,
                         std::string trace) {
    Strategy s = make_plan_strategy(g, std::move(plan));
    RunResult rr = run(g, root, s, schedule);
    StrategyOutcome out;
    out.saved = rr.saved;
    out.guarantee = guarantee;
    out.kind = kind;
    out.case_trace = std::move(trace);
    out.schedule = std::move(schedule);
    out.rounds = rr.rounds;
    out.burned = rr.final_state.burned_set();
    out.protected_set = rr.final_state.protected_set();
    return out;
}

// Wraps any simple cycle of existing edges as a curve object.
JordanCurve cycle_curve(std::vector<Vertex> cyc) {
    JordanCurve c;
    c.site = ArcSite{ArcSite::ExistingEdge, cyc.back(), cyc.front(), -1, -1, -1};
    c.u_path = std::move(cyc);
    c.v_path = {c.u_path.front()};
    return c;
}

// Off-curve neighbors of `root` per open side.
std::pair<std::vector<Vertex>, std::vector<Vertex>>
split_root_neighbors(const PlaneGraph& g, Vertex root, const RegionPartition& part) {
    std::pair<std::vector<Vertex>, std::vector<Vertex>> out;
    for (Vertex u : g.neighbors(root)) {
        if (part.side[u] == RegionPartition::Interior) out.first.push_back(u);
        else if (part.side[u] == RegionPartition::Exterior) out.second.push_back(u);
    }
    return out;
}

} // namespace

Strategy make_plan_strategy(const PlaneGraph& g, DefensePlan plan) {
    return [&g, plan = std::move(plan)](const GameState& s) {
        int t = s.round() + 1;
        int budget = s.current_budget();
        std::vector<Vertex> picks;
        auto pickable = [&](Vertex v) {
            return !s.burned(v) && !s.defended(v) &&
                   std::find(picks.begin(), picks.end(), v) == picks.end();
        };
        if (t < (int)plan.round_targets.size())
            for (Vertex v : plan.round_targets[t])
                if ((int)picks.size() < budget && pickable(v)) picks.push_back(v);
        if (plan.fallback != Fallback::Skip && (int)picks.size() < budget) {
            auto fire_adjacent = [&](Vertex v) {
                for (Vertex u : g.neighbors(v))
                    if (s.burned(u)) return true;
                return false;
            };
            for (int pass = 0; pass < 2 && (int)picks.size() < budget; ++pass) {
                bool side_pass = pass == 0;
                if (!side_pass && plan.fallback != Fallback::SideGlobal) break;
                for (Vertex v = 0; v < g.num_vertices() && (int)picks.size() < budget; ++v) {
                    if (side_pass && !plan.saved_side.empty() && !plan.saved_side[v]) continue;
                    if (pickable(v) && fire_adjacent(v)) picks.push_back(v);
                }
            }
        }
        return picks;
    };
}

Strategy two_path_protection(const PlaneGraph& g, Vertex root, const BalancedCurve& curve,
                             Side side, Fallback fallback) {
    SpanningTree t = bfs_tree(g, root);
    DefensePlan plan;
    plan.round_targets = depth_targets(curve.curve.cycle(), t);
    plan.saved_side = closed_side(curve.partition, side);
    plan.fallback = fallback;
    return make_plan_strategy(g, std::move(plan));
}

StrategyOutcome lemma22_defense(const PlaneGraph& g, Vertex root, Fallback fallback) {
    return lemma22_defense_with_budget(g, root, fallback, -1);
}

StrategyOutcome lemma22_defense_with_budget(const PlaneGraph& g, Vertex root, Fallback fallback,
                                            int first_budget) {
    int n = g.num_vertices();
    int deg = g.degree(root);
    if (first_budget < 0) first_budget = 2 + std::max(0, (deg - 2) / 2);

    if (n == 1)
        return run_plan(g, root, DefensePlan{}, BudgetSchedule::first_then(first_budget, 2),
                        Rat(0), GuaranteeKind::AtLeast, "lemma22_trivial");

    SpanningTree t = bfs_tree(g, root);
    BalancedCurve bc = find_balanced_curve(g, t);
    auto [in_nbrs, ex_nbrs] = split_root_neighbors(g, root, bc.partition);

    Side side;
    std::vector<Vertex> extras;
    std::string trace;
    Rat guarantee;
    if (bc.curve.z() == root) {
        side = in_nbrs.size() <= ex_nbrs.size() ? Side::Interior : Side::Exterior;
        extras = side == Side::Interior ? in_nbrs : ex_nbrs;
        trace = "lemma22_on_curve";
        guarantee = Rat(n, 3) - Rat(1);
    } else {
        side = bc.partition.side[root] == RegionPartition::Interior ? Side::Exterior
                                                                    : Side::Interior;
        trace = "lemma22_off_curve";
        guarantee = Rat(n, 3);
    }

    DefensePlan plan;
    plan.round_targets = depth_targets(bc.curve.cycle(), t);
    if (!extras.empty()) {
        if (plan.round_targets.size() < 2) plan.round_targets.resize(2);
        for (Vertex v : extras) plan.round_targets[1].push_back(v);
        std::sort(plan.round_targets[1].begin(), plan.round_targets[1].end());
        plan.round_targets[1].erase(
            std::unique(plan.round_targets[1].begin(), plan.round_targets[1].end()),
            plan.round_targets[1].end());
    }
    plan.saved_side = closed_side(bc.partition, side);
    plan.fallback = fallback;
    return run_plan(g, root, std::move(plan), BudgetSchedule::first_then(first_budget, 2),
                    guarantee, GuaranteeKind::StrictGreater, trace);
}

bool degree4_precondition(const PlaneGraph& g, Vertex root) {
    if (g.degree(root) != 4) return false;
    int high = 0;
    for (Vertex u : g.neighbors(root))
        if (g.degree(u) > 5) ++high;
    return high <= 1;
}

namespace {

// Shared tail of the degree-4 cases: protect `cycle` bottom-up by depth and
// flood the chosen side.
StrategyOutcome run_depth_curve(const PlaneGraph& g, Vertex root, const SpanningTree& t,
                                const std::vector<Vertex>& cycle, const RegionPartition& part,
                                Side side, std::vector<Vertex> round1_extra, Fallback fallback,
                                Rat guarantee, const std::string& trace) {
    DefensePlan plan;
    plan.round_targets = depth_targets(cycle, t);
    if (!round1_extra.empty()) {
        if (plan.round_targets.size() < 2) plan.round_targets.resize(2);
        auto& r1 = plan.round_targets[1];
        r1.insert(r1.end(), round1_extra.begin(), round1_extra.end());
        std::sort(r1.begin(), r1.end());
        r1.erase(std::unique(r1.begin(), r1.end()), r1.end());
    }
    plan.saved_side = closed_side(part, side);
    plan.fallback = fallback;
    return run_plan(g, root, std::move(plan), BudgetSchedule::constant(2), guarantee,
                    GuaranteeKind::StrictGreater, trace);
}

// The last resort of the degree-4 analysis: sacrifice c = second path's
// first vertex, protect a and the root neighbor on the saved side first,
// then the (at most two) neighbors of c inside the saved closed side, then
// follow the two paths with a one-round lag on the a-side.
StrategyOutcome degree4_final_case(const PlaneGraph& g, Vertex root, const SpanningTree& t,
                                   std::vector<Vertex> path_u, std::vector<Vertex> path_v,
                                   const RegionPartition& part, Fallback fallback,
                                   const std::string& trace) {
    int n = g.num_vertices();
    Vertex a = path_u[1], c = path_v[1];

    int cnt_in = 0, cnt_ex = 0;
    for (Vertex u : g.neighbors(c)) {
        if (part.side[u] != RegionPartition::Exterior) ++cnt_in; // closed interior
        if (part.side[u] != RegionPartition::Interior) ++cnt_ex; // closed exterior
    }
    Side side = cnt_in <= cnt_ex ? Side::Interior : Side::Exterior;
    auto in_open = side == Side::Interior ? RegionPartition::Interior : RegionPartition::Exterior;

    std::vector<Vertex> round1{a};
    for (Vertex u : g.neighbors(root))
        if (part.side[u] == in_open) round1.push_back(u);

    std::vector<Vertex> round2;
    for (Vertex u : g.neighbors(c)) {
        if (u == root) continue;
        if (part.side[u] == in_open || part.side[u] == RegionPartition::OnCurve)
            round2.push_back(u);
    }
    std::sort(round2.begin(), round2.end());

    DefensePlan plan;
    size_t rounds = std::max(path_u.size() + 1, path_v.size()) + 1;
    plan.round_targets.assign(std::max<size_t>(rounds, 3), {});
    plan.round_targets[1] = round1;
    plan.round_targets[2] = round2;
    for (size_t r = 3; r < plan.round_targets.size(); ++r) {
        if (r - 1 < path_u.size()) plan.round_targets[r].push_back(path_u[r - 1]);
        if (r < path_v.size()) plan.round_targets[r].push_back(path_v[r]);
        auto& tr = plan.round_targets[r];
        std::sort(tr.begin(), tr.end());
        tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
    }
    plan.saved_side = closed_side(part, side);
    plan.fallback = fallback;
    return run_plan(g, root, std::move(plan), BudgetSchedule::constant(2), Rat(n, 6) - Rat(1),
                    GuaranteeKind::StrictGreater, trace);
}

} // namespace

StrategyOutcome degree4_defense(const PlaneGraph& g, Vertex root, Fallback fallback) {
    int n = g.num_vertices();
    if (n < 5) throw std::invalid_argument("degree4_defense: need n >= 5");
    if (!degree4_precondition(g, root))
        throw std::invalid_argument("degree4_defense: root must have degree 4 with at most "
                                    "one neighbor of degree > 5");

    SpanningTree t = bfs_tree(g, root);
    BalancedCurve bc = find_balanced_curve(g, t);
    const ArcSite& site = bc.curve.site;

    // Degenerate: the closing arc touches the root. The curve is the root
    // plus a single shortest path, so the root has at most two on-curve
    // neighbors and the emptier side costs at most one extra protection.
    if (site.u == root || site.v == root) {
        auto [in_nbrs, ex_nbrs] = split_root_neighbors(g, root, bc.partition);
        Side side = in_nbrs.size() <= ex_nbrs.size() ? Side::Interior : Side::Exterior;
        auto extras = side == Side::Interior ? in_nbrs : ex_nbrs;
        return run_depth_curve(g, root, t, bc.curve.cycle(), bc.partition, side, extras,
                               fallback, Rat(n, 3) - Rat(1), "deg4_arc_at_root");
    }

    std::vector<Vertex> path_u = t.path_from_root(site.u);
    std::vector<Vertex> path_v = t.path_from_root(site.v);
    Vertex a = path_u[1];
    Vertex v1 = path_v[1];

    // Case: both paths leave through the same neighbor; the root is off the
    // curve and the far side can be sealed completely.
    if (v1 == a) {
        Side side = bc.partition.side[root] == RegionPartition::Interior ? Side::Exterior
                                                                         : Side::Interior;
        return run_depth_curve(g, root, t, bc.curve.cycle(), bc.partition, side, {}, fallback,
                               Rat(n, 3) + Rat(1), "deg4_off_curve");
    }

    // Clockwise labels a, b, c, d starting at the u-path exit.
    const auto& rot = g.neighbors(root);
    int ia = g.slot(root, a);
    Vertex b = rot[(ia + 1) % 4], c = rot[(ia + 2) % 4], d = rot[(ia + 3) % 4];

    // Case: the v-path leaves right next to the u-path; the wedge between
    // them is empty, so that side leaks nowhere at the root.
    if (v1 == b || v1 == d) {
        auto [in_nbrs, ex_nbrs] = split_root_neighbors(g, root, bc.partition);
        Side side = in_nbrs.size() <= ex_nbrs.size() ? Side::Interior : Side::Exterior;
        return run_depth_curve(g, root, t, bc.curve.cycle(), bc.partition, side, {}, fallback,
                               Rat(n, 3) - Rat(1), "deg4_wedge");
    }

    // v1 == c: the curve leaves through opposite wedges and both sides leak.
    // Arrange deg(c) <= deg(a) up front; the final case sacrifices c.
    if (g.degree(c) > g.degree(a)) {
        std::swap(path_u, path_v);
        std::swap(a, c);
        std::swap(b, d);
    }
    Vertex u_end = path_u.back();
    Vertex v_end = path_v.back();
    std::vector<int> dist_u = bfs_dist(g, u_end);
    int du = dist_u[root];

    std::vector<char> on_u(n, 0), on_v(n, 0);
    for (Vertex x : path_u) on_u[x] = 1;
    for (Vertex x : path_v) on_v[x] = 1;

    // Shortcut to the u-end through b or d: the shortest path and one of the
    // curve paths bound a region sealed at the root.
    for (Vertex x : {b, d}) {
        if (1 + dist_u[x] != du) continue;
        std::vector<Vertex> P{root};
        {
            auto tail = descend(g, dist_u, x);
            P.insert(P.end(), tail.begin(), tail.end());
        }

        struct Candidate {
            std::vector<Vertex> cycle;
            bool uses_arc = false;
        };
        std::vector<Candidate> cands;

        // Close P against the u-path at the first meeting point.
        for (size_t i = 1; i < P.size(); ++i) {
            if (!on_u[P[i]]) continue;
            std::vector<Vertex> cyc(P.begin(), P.begin() + i + 1);
            auto it = std::find(path_u.begin(), path_u.end(), P[i]);
            for (auto r = it; r != path_u.begin();) {
                --r;
                if (r == path_u.begin()) break;
                cyc.push_back(*r);
            }
            cands.push_back({std::move(cyc), false});
            break;
        }
        // Close P against the v-path (or, if disjoint, around the arc).
        {
            size_t meet = 0;
            for (size_t i = 1; i < P.size() && !meet; ++i)
                if (on_v[P[i]]) meet = i;
            if (meet) {
                std::vector<Vertex> cyc(P.begin(), P.begin() + meet + 1);
                auto it = std::find(path_v.begin(), path_v.end(), P[meet]);
                for (auto r = it; r != path_v.begin();) {
                    --r;
                    if (r == path_v.begin()) break;
                    cyc.push_back(*r);
                }
                cands.push_back({std::move(cyc), false});
            } else {
                std::vector<Vertex> cyc(P);
                for (size_t i = path_v.size(); i-- > 1;) cyc.push_back(path_v[i]);
                cands.push_back({std::move(cyc), true});
            }
        }

        int best_score = -1;
        std::vector<Vertex> best_cycle;
        RegionPartition best_part;
        Side best_side = Side::Interior;
        for (auto& cand : cands) {
            JordanCurve jc;
            PlaneGraph aug = g;
            if (cand.uses_arc) {
                jc.u_path = P;
                jc.v_path = path_v;
                jc.site = site;
                if (site.kind == ArcSite::Chord) aug = insert_arc(g, site);
            } else {
                jc = cycle_curve(cand.cycle);
            }
            RegionPartition part = region_partition(aug, jc);
            auto [in_nbrs, ex_nbrs] = split_root_neighbors(g, root, part);
            Side side = in_nbrs.size() <= ex_nbrs.size() ? Side::Interior : Side::Exterior;
            int closed = (int)part.on_curve.size() +
                         (side == Side::Interior ? part.interior_size() : part.exterior_size());
            if (closed > best_score) {
                best_score = closed;
                best_cycle = jc.cycle();
                best_part = std::move(part);
                best_side = side;
            }
        }
        return run_depth_curve(g, root, t, best_cycle, best_part, best_side, {}, fallback,
                               Rat(n, 6) - Rat(1), "deg4_shortcut_bd");
    }

    // Shortcut through c re-entering the u-path at the least index.
    std::vector<int> dist_c = bfs_dist(g, c);
    int i_reentry = -1;
    for (int i = 2; i < (int)path_u.size(); ++i) {
        if (1 + dist_c[path_u[i]] == i) { i_reentry = i; break; }
    }
    if (i_reentry > 0) {
        Vertex v_prime = path_u[i_reentry];
        std::vector<int> dist_vp = bfs_dist(g, v_prime);
        std::vector<Vertex> Q{root};
        {
            auto tail = descend(g, dist_vp, c);
            Q.insert(Q.end(), tail.begin(), tail.end());
        }

        // The piece cut off behind the re-entry path: components of g minus
        // the walls (c-path, u-path tail, closing arc, v-path) that do not
        // contain the root.
        std::vector<char> wall(n, 0);
        for (size_t i = 1; i < Q.size(); ++i) wall[Q[i]] = 1;
        for (size_t i = i_reentry; i < path_u.size(); ++i) wall[path_u[i]] = 1;
        for (size_t i = 1; i < path_v.size(); ++i) wall[path_v[i]] = 1;
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        for (Vertex s = 0; s < n; ++s) {
            if (wall[s] || comp[s] >= 0) continue;
            std::queue<Vertex> q;
            q.push(s);
            comp[s] = ncomp;
            while (!q.empty()) {
                Vertex x = q.front();
                q.pop();
                for (Vertex y : g.neighbors(x))
                    if (!wall[y] && comp[y] < 0) {
                        comp[y] = ncomp;
                        q.push(y);
                    }
            }
            ++ncomp;
        }
        long long piece = 0;
        std::vector<char> in_piece(n, 0);
        for (Vertex x = 0; x < n; ++x)
            if (!wall[x] && comp[x] != comp[root]) {
                ++piece;
                in_piece[x] = 1;
            }

        if (6 * piece > (long long)n - 6) {
            // Save the piece: protect the walls bottom-up by depth.
            std::vector<Vertex> wall_list;
            for (Vertex x = 0; x < n; ++x)
                if (wall[x]) wall_list.push_back(x);
            DefensePlan plan;
            plan.round_targets = depth_targets(wall_list, t);
            plan.saved_side.assign(n, 0);
            for (Vertex x = 0; x < n; ++x)
                if (wall[x] || in_piece[x]) plan.saved_side[x] = 1;
            plan.fallback = fallback;
            return run_plan(g, root, std::move(plan), BudgetSchedule::constant(2),
                            Rat(n, 6) - Rat(1), GuaranteeKind::StrictGreater,
                            "deg4_cpath_piece");
        }

        // Replace the curve: tree path to the re-entry vertex plus the
        // c-path, and run the final case on it.
        std::vector<Vertex> new_u(path_u.begin(), path_u.begin() + i_reentry + 1);
        std::vector<Vertex> cyc(new_u);
        for (size_t i = Q.size() - 2; i >= 1; --i) cyc.push_back(Q[i]);
        RegionPartition part = region_partition(g, cycle_curve(cyc));
        return degree4_final_case(g, root, t, new_u, Q, part, fallback, "deg4_final_via_cpath");
    }

    return degree4_final_case(g, root, t, path_u, path_v, bc.partition, fallback, "deg4_final");
}

StrategyOutcome null_defense(const PlaneGraph& g, Vertex root, BudgetSchedule schedule) {
    int n = g.num_vertices();
    DefensePlan plan;
    plan.saved_side = whole_graph_side(n);
    plan.fallback = Fallback::SideOnly;
    Rat guarantee = n >= 3 && schedule.budget(1) >= 2 ? Rat(2) : Rat(0);
    return run_plan(g, root, std::move(plan), std::move(schedule), guarantee,
                    GuaranteeKind::AtLeast, "null");
}

StrategyOutcome dispatch_defense(const PlaneGraph& g, Vertex root, ScheduleKind kind,
                                 Fallback fallback) {
    int n = g.num_vertices();
    int deg = g.degree(root);
    int first = kind == ScheduleKind::ThreeTwo ? 3 : 2;

    if (deg <= 2) {
        DefensePlan plan;
        plan.round_targets.assign(2, {});
        plan.round_targets[1] = g.neighbors(root);
        std::sort(plan.round_targets[1].begin(), plan.round_targets[1].end());
        plan.fallback = Fallback::Skip;
        return run_plan(g, root, std::move(plan), BudgetSchedule::first_then(first, 2),
                        Rat(n - 1), GuaranteeKind::Exact, "deg_le2");
    }
    if (deg == 3) return lemma22_defense_with_budget(g, root, fallback, first);
    if (deg == 4) {
        if (kind == ScheduleKind::ThreeTwo)
            return lemma22_defense_with_budget(g, root, fallback, 3);
        if (degree4_precondition(g, root)) return degree4_defense(g, root, fallback);
    }
    return null_defense(g, root, BudgetSchedule::first_then(first, 2));
}

} // namespace fb
