#include "fb/bounds.hpp"

#include "fb/strategy.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fb {

VertexClass classify_vertex(const PlaneGraph& g, Vertex v) {
    int deg = g.degree(v);
    if (deg <= 2) return VertexClass::X;
    if (deg == 3) return VertexClass::Y;
    if (deg == 4) {
        int high = 0;
        for (Vertex u : g.neighbors(v))
            if (g.degree(u) >= 6) ++high;
        return high <= 1 ? VertexClass::Z : VertexClass::W;
    }
    return VertexClass::W;
}

ClassCounts class_counts(const PlaneGraph& g) {
    ClassCounts c;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        switch (classify_vertex(g, v)) {
        case VertexClass::X: ++c.x; break;
        case VertexClass::Y: ++c.y; break;
        case VertexClass::Z: ++c.z; break;
        case VertexClass::W: ++c.w; break;
        }
    }
    return c;
}

Rat rate_lower_bound(const PlaneGraph& g) {
    long long n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("rate_lower_bound: need n >= 2");
    ClassCounts c = class_counts(g);
    Rat val = Rat(n) * (Rat(c.x) + Rat(c.y, 3) + Rat(c.z, 6)) - Rat(c.x + c.y + c.z) +
              Rat(2 * c.w);
    val = val / Rat(n * n);
    return val < Rat(0) ? Rat(0) : val;
}

DegreeInequality check_degree_inequality(const PlaneGraph& g) {
    ClassCounts c = class_counts(g);
    Rat lhs(2LL * g.num_edges());
    Rat rhs = Rat(c.x) + Rat(3) * Rat(c.y) + Rat(4) * Rat(c.z) + Rat(9, 2) * Rat(c.w);
    DegreeInequality di;
    di.slack = lhs - rhs;
    di.holds = di.slack >= Rat(0);
    return di;
}

LpResult lp_min(long long n, const Rat& eps) {
    if (n < 1) throw std::invalid_argument("lp_min: need n >= 1");
    if (eps <= Rat(0)) throw std::invalid_argument("lp_min: eps must be positive");

    // Variables (x, y, z, w, s); two equations:
    //   x +  y +  z +    w      = n
    //   x + 3y + 4z + (9/2)w + s = (9/2 - eps) n
    const std::array<std::array<Rat, 5>, 2> A = {{{Rat(1), Rat(1), Rat(1), Rat(1), Rat(0)},
                                                  {Rat(1), Rat(3), Rat(4), Rat(9, 2), Rat(1)}}};
    const std::array<Rat, 2> rhs = {Rat(n), (Rat(9, 2) - eps) * Rat(n)};

    LpResult best;
    std::array<Rat, 5> sol;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            // Solve for basic variables i, j; the rest are zero.
            Rat det = A[0][i] * A[1][j] - A[0][j] * A[1][i];
            if (det == Rat(0)) continue;
            Rat vi = (rhs[0] * A[1][j] - rhs[1] * A[0][j]) / det;
            Rat vj = (A[0][i] * rhs[1] - A[1][i] * rhs[0]) / det;
            if (vi < Rat(0) || vj < Rat(0)) continue;
            sol.fill(Rat(0));
            sol[i] = vi;
            sol[j] = vj;
            Rat alpha = (Rat(n) * (sol[0] + sol[1] / Rat(3) + sol[2] / Rat(6)) -
                         (sol[0] + sol[1] + sol[2]) + Rat(2) * sol[3]) /
                        Rat(n * n);
            bool better = !best.feasible || alpha < best.alpha;
            if (!better && alpha == best.alpha) {
                auto tup = [](const LpResult& r) {
                    return std::array<Rat, 4>{r.x, r.y, r.z, r.w};
                };
                std::array<Rat, 4> cur{sol[0], sol[1], sol[2], sol[3]};
                better = cur < tup(best);
            }
            if (better) {
                best.feasible = true;
                best.alpha = alpha;
                best.x = sol[0];
                best.y = sol[1];
                best.z = sol[2];
                best.w = sol[3];
            }
        }
    }
    return best;
}

Rat alpha_closed(long long n, const Rat& eps) {
    if (eps <= Rat(0) || eps > Rat(5, 2))
        throw std::invalid_argument("alpha_closed: eps out of (0, 5/2]");
    Rat nn(n);
    if (eps <= Rat(3, 2)) {
        // minimizer x = z = 0, y = (2/3) eps n, w = n - y
        return Rat(2, 9) * eps + (Rat(2) - Rat(2) * eps) / nn;
    }
    // minimizer w = z = 0, x = ((2 eps - 3)/4) n, y = n - x
    return (Rat(2) * eps - Rat(1)) / Rat(6) - Rat(1) / nn;
}

std::optional<Rat> theorem12_bound(long long n, long long m) {
    if (n < 2) throw std::invalid_argument("theorem12_bound: need n >= 2");
    Rat eps = Rat(9, 2) - Rat(2 * m, n);
    if (eps <= Rat(0)) return std::nullopt;
    if (eps <= Rat(1)) return Rat(2, 9) * eps;
    return Rat(2, 9) * eps - Rat(1, n);
}

Rat tau(int k) {
    if (k < 1) throw std::invalid_argument("tau: k must be >= 1");
    if (k == 1) return Rat(30, 11);
    return Rat(k + 2) - Rat(1, k + 2);
}

RateReport build_rate_report(const PlaneGraph& g, const RateReportOptions& opts) {
    RateReport r;
    int n = g.num_vertices();
    r.n = n;
    r.m = g.num_edges();
    r.eps = Rat(9, 2) - Rat(2 * r.m, r.n);
    r.classes = class_counts(g);
    r.bound_ineq1 = n >= 2 ? rate_lower_bound(g) : Rat(0);
    if (n >= 2) r.bound_thm12 = theorem12_bound(r.n, r.m);
    if (r.eps > Rat(0)) {
        LpResult lp = lp_min(r.n, r.eps);
        if (lp.feasible) r.lp_min_value = lp.alpha;
    }
    DegreeInequality di = check_degree_inequality(g);
    r.degree_inequality_ok = di.holds;
    r.degree_slack = di.slack;

    std::vector<long long> saved(n, 0);
    if (opts.exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (Vertex v = 0; v < n; ++v)
            saved[v] = dispatch_defense(g, v).saved;
#else
        for (Vertex v = 0; v < n; ++v) saved[v] = dispatch_defense(g, v).saved;
#endif
    } else {
        for (Vertex v = 0; v < n; ++v) saved[v] = dispatch_defense(g, v).saved;
    }
    long long total = 0;
    for (long long s : saved) total += s;
    r.simulated_rate = Rat(total, (long long)n * n);

    if (n <= opts.limits.max_n) {
        RhoResult rho = rho_exact(g, 2, opts.limits, opts.exec);
        if (rho.exact) r.exact_rate = rho.value;
    }
    return r;
}

namespace {
std::string rat_line(const Rat& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (~ %.6f)", r.to_double());
    return r.str() + buf;
}
} // namespace

std::string render_rate_report(const RateReport& r) {
    std::ostringstream os;
    os << "n = " << r.n << "\n";
    os << "m = " << r.m << "\n";
    os << "eps = " << rat_line(r.eps) << "\n";
    os << "class_x = " << r.classes.x << "\n";
    os << "class_y = " << r.classes.y << "\n";
    os << "class_z = " << r.classes.z << "\n";
    os << "class_w = " << r.classes.w << "\n";
    os << "degree_inequality = " << (r.degree_inequality_ok ? "ok" : "VIOLATED")
       << " slack " << r.degree_slack.str() << "\n";
    os << "bound_ineq1 = " << rat_line(r.bound_ineq1) << "\n";
    os << "bound_thm12 = " << (r.bound_thm12 ? rat_line(*r.bound_thm12) : "none") << "\n";
    os << "lp_min = " << (r.lp_min_value ? rat_line(*r.lp_min_value) : "none") << "\n";
    os << "simulated_rate = " << rat_line(r.simulated_rate) << "\n";
    os << "exact_rate = " << (r.exact_rate ? rat_line(*r.exact_rate) : "none") << "\n";
    return os.str();
}

} // namespace fb
