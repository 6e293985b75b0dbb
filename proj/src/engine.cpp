#include "fb/engine.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fb {

BudgetSchedule BudgetSchedule::parse(const std::string& text) {
    BudgetSchedule s;
    std::stringstream ss(text);
    std::string item;
    bool saw_tail = false;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty budget entry");
        if (saw_tail) throw std::invalid_argument("entries after the repeating tail");
        bool star = item.back() == '*';
        if (star) item.pop_back();
        int v;
        try {
            size_t pos;
            v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("");
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad budget entry '" + item + "'");
        }
        if (v < 0) throw std::invalid_argument("negative budget");
        if (star) {
            s.tail = v;
            saw_tail = true;
        } else {
            s.head.push_back(v);
        }
    }
    return s;
}

std::string BudgetSchedule::str() const {
    std::string out;
    for (int b : head) out += std::to_string(b) + ",";
    out += std::to_string(tail) + "*";
    return out;
}

GameState::GameState(const PlaneGraph& g, Vertex ignition, BudgetSchedule schedule)
    : g_(&g), schedule_(std::move(schedule)) {
    if (ignition < 0 || ignition >= g.num_vertices())
        throw GameError("ignition vertex " + std::to_string(ignition) + " out of range");
    burned_.assign(g.num_vertices(), 0);
    protected_.assign(g.num_vertices(), 0);
    burned_[ignition] = 1;
    burned_count_ = 1;
}

GameState new_game(const PlaneGraph& g, Vertex ignition, BudgetSchedule schedule) {
    return GameState(g, ignition, std::move(schedule));
}

bool GameState::terminal() const {
    for (Vertex v = 0; v < g_->num_vertices(); ++v) {
        if (!burned_[v]) continue;
        for (Vertex u : g_->neighbors(v))
            if (!burned_[u] && !protected_[u]) return false;
    }
    return true;
}

std::vector<Vertex> GameState::burned_set() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g_->num_vertices(); ++v)
        if (burned_[v]) out.push_back(v);
    return out;
}

std::vector<Vertex> GameState::protected_set() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g_->num_vertices(); ++v)
        if (protected_[v]) out.push_back(v);
    return out;
}

GameState GameState::step(const std::vector<Vertex>& protections) const {
    GameState next(*this);
    int budget = schedule_.budget(round_ + 1);
    if ((int)protections.size() > budget)
        throw GameError("round " + std::to_string(round_ + 1) + " protects " +
                        std::to_string(protections.size()) + " > budget " +
                        std::to_string(budget));
    for (Vertex v : protections) {
        if (v < 0 || v >= g_->num_vertices()) throw GameError("protection out of range");
        if (next.burned_[v])
            throw GameError("vertex " + std::to_string(v) + " is on fire");
        if (next.protected_[v])
            throw GameError("vertex " + std::to_string(v) + " protected twice");
        next.protected_[v] = 1;
        ++next.protected_count_;
    }
    std::vector<Vertex> frontier;
    for (Vertex v = 0; v < g_->num_vertices(); ++v) {
        if (!burned_[v]) continue;
        for (Vertex u : g_->neighbors(v))
            if (!next.burned_[u] && !next.protected_[u]) {
                next.burned_[u] = 1;
                frontier.push_back(u);
            }
    }
    next.burned_count_ += (int)frontier.size();
    next.round_ = round_ + 1;
    return next;
}

RunResult run(const PlaneGraph& g, Vertex ignition, const Strategy& strategy,
              BudgetSchedule schedule) {
    GameState state = new_game(g, ignition, std::move(schedule));
    int rounds = 0;
    while (!state.terminal()) {
        if (rounds > g.num_vertices())
            throw std::logic_error("game failed to terminate");
        state = state.step(strategy(state));
        ++rounds;
    }
    return {state, state.saved(), rounds};
}

namespace {

using Mask = uint32_t;

struct OracleCtx {
    const PlaneGraph& g;
    const BudgetSchedule& sched;
    int n;
    std::vector<Mask> nbr;
    int head_len;
    std::unordered_map<uint64_t, int> memo;
    uint64_t nodes = 0;
    uint64_t node_cap;
    bool aborted = false;
    bool restrict_reachable;
    bool exact_size_only;

    OracleCtx(const PlaneGraph& g_, const BudgetSchedule& s, uint64_t cap, bool restrict_,
              bool exact_size)
        : g(g_), sched(s), n(g_.num_vertices()), head_len((int)s.head.size()),
          node_cap(cap), restrict_reachable(restrict_), exact_size_only(exact_size) {
        nbr.assign(n, 0);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex u : g.neighbors(v)) nbr[v] |= Mask(1) << u;
    }

    Mask spread_once(Mask burned, Mask prot) const {
        Mask next = burned;
        Mask b = burned;
        while (b) {
            int v = __builtin_ctz(b);
            b &= b - 1;
            next |= nbr[v] & ~prot;
        }
        return next;
    }

    // Vertices reachable from the fire through unburned, unprotected
    // vertices: protecting anything else is dominated.
    Mask reachable(Mask burned, Mask prot) const {
        Mask free = ~(burned | prot) & ((n == 32 ? ~Mask(0) : (Mask(1) << n) - 1));
        Mask reach = 0;
        Mask frontier = burned;
        while (frontier) {
            Mask next = 0;
            Mask f = frontier;
            while (f) {
                int v = __builtin_ctz(f);
                f &= f - 1;
                next |= nbr[v] & free & ~reach;
            }
            reach |= next;
            frontier = next;
        }
        return reach;
    }

    int value(Mask burned, Mask prot, int round) {
        if (aborted) return 0;
        if (++nodes > node_cap) { aborted = true; return 0; }

        Mask cand = restrict_reachable
                        ? reachable(burned, prot)
                        : ~(burned | prot) & ((n == 32 ? ~Mask(0) : (Mask(1) << n) - 1));
        Mask frontier_test = spread_once(burned, prot);
        if (frontier_test == burned) return n - __builtin_popcount(burned);
        if (restrict_reachable && cand == 0) return n - __builtin_popcount(burned);

        // Rounds beyond the schedule head all have the same budget.
        int round_key = std::min(round, head_len);
        uint64_t key = (uint64_t)burned | ((uint64_t)prot << n) | ((uint64_t)round_key << (2 * n));
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        int budget = sched.budget(round + 1);
        std::vector<int> cands;
        for (Mask c = cand; c;) {
            int v = __builtin_ctz(c);
            c &= c - 1;
            cands.push_back(v);
        }
        int ub = n - __builtin_popcount(burned);
        int best = -1;

        int kmax = std::min<int>(budget, (int)cands.size());
        int kmin = exact_size_only ? kmax : 0;
        std::vector<int> pick;
        // enumerate subsets of `cands` of size k via recursion
        std::function<void(int, int)> rec = [&](int start, int k) {
            if (aborted || best == ub) return;
            if (k == 0) {
                Mask pmask = prot;
                for (int v : pick) pmask |= Mask(1) << v;
                Mask nb = spread_once(burned, pmask);
                int val = value(nb, pmask, round + 1);
                best = std::max(best, val);
                return;
            }
            for (int i = start; i + k <= (int)cands.size(); ++i) {
                pick.push_back(cands[i]);
                rec(i + 1, k - 1);
                pick.pop_back();
            }
        };
        for (int k = kmax; k >= kmin && !aborted && best != ub; --k) rec(0, k);

        if (!aborted) memo[key] = best;
        return best;
    }
};

SnResult sn_search(const PlaneGraph& g, Vertex ignition, const BudgetSchedule& schedule,
                   const SnLimits& limits, bool restrict_reachable, bool exact_size) {
    int n = g.num_vertices();
    if (ignition < 0 || ignition >= n) throw GameError("ignition vertex out of range");
    if (n > limits.max_n || n > 25)
        return {false, 0, 0};
    OracleCtx ctx(g, schedule, limits.node_cap, restrict_reachable, exact_size);
    int val = ctx.value(Mask(1) << ignition, 0, 0);
    if (ctx.aborted) return {false, 0, ctx.nodes};
    return {true, val, ctx.nodes};
}

} // namespace

SnResult sn_exact(const PlaneGraph& g, Vertex ignition, const BudgetSchedule& schedule,
                  const SnLimits& limits) {
    return sn_search(g, ignition, schedule, limits, true, true);
}

SnResult sn_exhaustive(const PlaneGraph& g, Vertex ignition, const BudgetSchedule& schedule,
                       const SnLimits& limits) {
    return sn_search(g, ignition, schedule, limits, false, false);
}

RhoResult rho_exact(const PlaneGraph& g, int k, const SnLimits& limits, Exec exec) {
    if (k < 1) throw std::invalid_argument("rho_exact: k must be >= 1");
    int n = g.num_vertices();
    BudgetSchedule sched = BudgetSchedule::constant(k);
    std::vector<int> saved(n, -1);
    bool ok = true;

    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (Vertex v = 0; v < n; ++v) {
            SnResult r = sn_exact(g, v, sched, limits);
            if (!r.exact)
#pragma omp critical
                ok = false;
            else
                saved[v] = r.saved;
        }
#else
        exec = Exec::Serial;
#endif
    }
    if (exec == Exec::Serial) {
        for (Vertex v = 0; v < n && ok; ++v) {
            SnResult r = sn_exact(g, v, sched, limits);
            if (!r.exact) { ok = false; break; }
            saved[v] = r.saved;
        }
    }
    if (!ok) return {false, Rat(0)};
    long long total = 0;
    for (Vertex v = 0; v < n; ++v) total += saved[v];
    return {true, Rat(total, (long long)n * n)};
}

} // namespace fb
