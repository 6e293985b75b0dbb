#pragma once

#include "fb/engine.hpp"
#include "fb/separator.hpp"

namespace fb {

// How a defense fills budget left over after its planned targets:
//   Skip       — protect planned targets only.
//   SideOnly   — add lowest-id unburned vertices adjacent to fire on the
//                side being saved.
//   SideGlobal — as SideOnly, then anywhere adjacent to fire.
enum class Fallback { Skip, SideOnly, SideGlobal };

enum class GuaranteeKind {
    Exact,         // saved == guarantee
    StrictGreater, // saved >  guarantee
    AtLeast        // saved >= guarantee
};

struct StrategyOutcome {
    int saved = 0;
    Rat guarantee;
    GuaranteeKind kind = GuaranteeKind::StrictGreater;
    std::string case_trace;
    BudgetSchedule schedule;
    int rounds = 0;
    std::vector<Vertex> burned;
    std::vector<Vertex> protected_set;

    bool guarantee_met() const {
        Rat s(saved);
        switch (kind) {
        case GuaranteeKind::Exact: return s == guarantee;
        case GuaranteeKind::StrictGreater: return s > guarantee;
        case GuaranteeKind::AtLeast: return s >= guarantee;
        }
        return false;
    }
};

// Which side of a curve a defense tries to save.
enum class Side { Interior, Exterior };

// Round-by-round protection plan: fixed targets per round (1-based), then
// fallback protections on the closed saved side. Targets that are already
// burned or protected are replaced by fallback picks.
struct DefensePlan {
    std::vector<std::vector<Vertex>> round_targets; // index 0 unused
    std::vector<char> saved_side;                   // closed side membership per vertex
    Fallback fallback = Fallback::SideGlobal;
};

Strategy make_plan_strategy(const PlaneGraph& g, DefensePlan plan);

// Protect the curve bottom-up by BFS depth (round t covers the curve
// vertices at depth t), then flood remaining budget into the chosen side.
Strategy two_path_protection(const PlaneGraph& g, Vertex root, const BalancedCurve& curve,
                             Side side, Fallback fallback = Fallback::SideGlobal);

// Separator defense: BFS tree, balanced curve, then two-path protection of
// the side holding at most floor((deg r - 2)/2) off-curve neighbors of the
// root, protecting those neighbors in the bigger first round. Budgets
// (2 + floor((deg r - 2)/2); 2, 2, ...). Saves more than n/3 - 1; more than
// n/3 when the root is off the curve.
StrategyOutcome lemma22_defense(const PlaneGraph& g, Vertex root,
                                Fallback fallback = Fallback::SideGlobal);

// Same defense under an explicit first-round budget (>= the derived need);
// -1 derives 2 + floor((deg r - 2)/2).
StrategyOutcome lemma22_defense_with_budget(const PlaneGraph& g, Vertex root, Fallback fallback,
                                            int first_budget);

// Defense for a degree-4 root with at most one neighbor of degree > 5 under
// budgets (2; 2, ...). Decision tree over the first vertices of the two
// curve paths and shortest-path shortcuts; saves more than n/6 - 1.
StrategyOutcome degree4_defense(const PlaneGraph& g, Vertex root,
                                Fallback fallback = Fallback::SideGlobal);

bool degree4_precondition(const PlaneGraph& g, Vertex root);

enum class ScheduleKind { Two, ThreeTwo }; // (2; 2, ...) or (3; 2, ...)

// Root-degree dispatch: deg <= 2 protects the whole neighborhood (saves
// exactly n - 1); deg 3 runs the separator defense; deg 4 with the local
// degree condition runs the degree-4 defense (schedule Two) or the separator
// defense (schedule ThreeTwo); anything else falls back to greedy protection
// of two fire-adjacent vertices per round (saves at least 2 for n >= 3).
StrategyOutcome dispatch_defense(const PlaneGraph& g, Vertex root,
                                 ScheduleKind kind = ScheduleKind::Two,
                                 Fallback fallback = Fallback::SideGlobal);

// Greedy: protect the lowest-id fire-adjacent vertices up to budget.
StrategyOutcome null_defense(const PlaneGraph& g, Vertex root, BudgetSchedule schedule);

} // namespace fb
