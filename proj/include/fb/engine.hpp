#pragma once

#include "fb/plane_graph.hpp"
#include "fb/rational.hpp"
#include "fb/separator.hpp"

#include <cstdint>
#include <functional>

namespace fb {

struct GameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-round protection allowances: head[0], head[1], ..., then `tail`
// forever. Rounds are 1-based.
struct BudgetSchedule {
    std::vector<int> head;
    int tail = 0;

    int budget(int round) const {
        if (round <= (int)head.size()) return head[round - 1];
        return tail;
    }
    static BudgetSchedule constant(int k) { return {{}, k}; }
    static BudgetSchedule first_then(int first, int rest) { return {{first}, rest}; }

    // "b1,b2,..,t*" — a comma list; a trailing entry marked '*' repeats
    // forever (defaults to 0 if absent).
    static BudgetSchedule parse(const std::string& text);
    std::string str() const;
};

// Snapshot of a firefighter game. Protection happens strictly before spread
// within a round; both sets only grow. `round` counts completed rounds.
class GameState {
public:
    GameState(const PlaneGraph& g, Vertex ignition, BudgetSchedule schedule);

    const PlaneGraph& graph() const { return *g_; }
    bool burned(Vertex v) const { return burned_[v] != 0; }
    bool defended(Vertex v) const { return protected_[v] != 0; }
    int burned_count() const { return burned_count_; }
    int protected_count() const { return protected_count_; }
    int round() const { return round_; }
    const BudgetSchedule& schedule() const { return schedule_; }
    int current_budget() const { return schedule_.budget(round_ + 1); }

    // No unprotected, unburned vertex is adjacent to fire.
    bool terminal() const;
    int saved() const { return g_->num_vertices() - burned_count_; }
    std::vector<Vertex> burned_set() const;
    std::vector<Vertex> protected_set() const;

    // Validates the protections against this state, applies them, spreads
    // the fire once, and returns the successor state.
    GameState step(const std::vector<Vertex>& protections) const;

private:
    const PlaneGraph* g_;
    std::vector<uint8_t> burned_, protected_;
    int burned_count_ = 0, protected_count_ = 0;
    int round_ = 0;
    BudgetSchedule schedule_;
};

GameState new_game(const PlaneGraph& g, Vertex ignition, BudgetSchedule schedule);

// Decision rule: which vertices to protect in the upcoming round. Must
// return unburned, unprotected vertices within budget; deterministic in the
// state.
using Strategy = std::function<std::vector<Vertex>(const GameState&)>;

struct RunResult {
    GameState final_state;
    int saved = 0;
    int rounds = 0;
};

RunResult run(const PlaneGraph& g, Vertex ignition, const Strategy& strategy,
              BudgetSchedule schedule);

// Exact search limits; graphs above max_n or searches above node_cap yield
// an explicit non-answer instead of a bound.
struct SnLimits {
    int max_n = 14;
    uint64_t node_cap = 80'000'000;
};

struct SnResult {
    bool exact = false; // false: cap exceeded, `saved` meaningless
    int saved = 0;
    uint64_t nodes = 0;
};

// Maximum savable vertex count over all legal protection sequences.
// Depth-first search over per-round protection subsets with dominance
// restriction to fire-reachable vertices, memoization, and an early stop
// when a branch already saves everything still unburned.
SnResult sn_exact(const PlaneGraph& g, Vertex ignition, const BudgetSchedule& schedule,
                  const SnLimits& limits = {});

// Reference oracle: no dominance restriction, all subset sizes up to the
// budget. Exponentially slower; for cross-checks on small graphs.
SnResult sn_exhaustive(const PlaneGraph& g, Vertex ignition, const BudgetSchedule& schedule,
                       const SnLimits& limits = {});

// Exact k-surviving rate (1/n^2) * sum_v sn_k(g, v), as a rational.
struct RhoResult {
    bool exact = false;
    Rat value;
};
RhoResult rho_exact(const PlaneGraph& g, int k, const SnLimits& limits = {},
                    Exec exec = Exec::Serial);

} // namespace fb
