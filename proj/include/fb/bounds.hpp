#pragma once

#include "fb/engine.hpp"
#include "fb/plane_graph.hpp"
#include "fb/rational.hpp"

#include <optional>

namespace fb {

// Savings classes by local degree conditions. X saves n-1, Y more than
// n/3 - 1, Z more than n/6 - 1, W at least 2. These are sufficient
// conditions only; the true sn-based classes are supersets.
enum class VertexClass { X, Y, Z, W };

VertexClass classify_vertex(const PlaneGraph& g, Vertex v);

struct ClassCounts {
    long long x = 0, y = 0, z = 0, w = 0;
};
ClassCounts class_counts(const PlaneGraph& g);

// (1/n^2) * ( n(x + y/3 + z/6) - (x + y + z) + 2w ), clamped at 0.
Rat rate_lower_bound(const PlaneGraph& g);

// 2m >= x + 3y + 4z + (9/2)w. Holds for every plane graph; a violation
// indicates a classification bug.
struct DegreeInequality {
    bool holds = false;
    Rat slack; // 2m - (x + 3y + 4z + 9w/2)
};
DegreeInequality check_degree_inequality(const PlaneGraph& g);

// Exact minimum of the class-counting program
//   min  (1/n^2) ( n(x + y/3 + z/6) - (x+y+z) + 2w )
//   s.t. x+y+z+w = n,  x + 3y + 4z + (9/2)w <= (9/2 - eps) n,  vars >= 0
// by enumeration of basic feasible solutions in exact rationals.
struct LpResult {
    bool feasible = false;
    Rat alpha;
    Rat x, y, z, w;
};
LpResult lp_min(long long n, const Rat& eps);

// Closed forms of the program's minimum: for eps in (0, 3/2] the minimizer
// has x = z = 0, giving
//   alpha0 = (2/9) eps + (2 - 2 eps)/n;
// for eps in (3/2, 5/2] it has w = z = 0, giving
//   alpha1 = (2 eps - 1)/6 - 1/n.
Rat alpha_closed(long long n, const Rat& eps);

// Piecewise surviving-rate bound from the average-degree deficit
// eps = 9/2 - 2m/n: (2/9)eps for eps <= 1, (2/9)eps - 1/n beyond; none when
// eps <= 0.
std::optional<Rat> theorem12_bound(long long n, long long m);

// Density threshold below which k firefighters guarantee a positive
// surviving rate: 30/11 for k = 1, k + 2 - 1/(k+2) for k >= 2.
Rat tau(int k);

struct RateReport {
    long long n = 0, m = 0;
    Rat eps; // 9/2 - 2m/n
    ClassCounts classes;
    Rat bound_ineq1;
    std::optional<Rat> bound_thm12;
    std::optional<Rat> lp_min_value;
    Rat simulated_rate;          // dispatch defense from every root, budgets 2,2,...
    std::optional<Rat> exact_rate; // oracle, when n is within the exact cap
    bool degree_inequality_ok = false;
    Rat degree_slack;
};

struct RateReportOptions {
    SnLimits limits{};
    Exec exec = Exec::Serial;
};

RateReport build_rate_report(const PlaneGraph& g, const RateReportOptions& opts = {});

// Deterministic key-value rendering ("p/q (~ 0.123456)" per rational line).
std::string render_rate_report(const RateReport& r);

} // namespace fb
