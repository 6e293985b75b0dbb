// Timing comparison of the serial reference kernels against their OpenMP
// variants: the balanced-curve candidate scan, the per-root rate batch, and
// the exact-rate oracle batch.

#include "fb/bounds.hpp"
#include "fb/engine.hpp"
#include "fb/generators.hpp"
#include "fb/separator.hpp"
#include "fb/strategy.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_once(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double best_of(int reps, const std::function<void()>& fn) {
    double best = 1e18;
    for (int i = 0; i < reps; ++i) best = std::min(best, time_once(fn));
    return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-34s %10.2f ms %10.2f ms %8.2fx\n", name.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled; both columns serial)\n");
#endif
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    struct Case {
        std::string name;
        fb::PlaneGraph graph;
    };
    std::vector<Case> cases;
    cases.push_back({"grid 12x12", fb::gen_grid(12, 12)});
    cases.push_back({"hex_patch 4", fb::gen_hex_patch(4)});
    cases.push_back({"apollonian 120", fb::gen_apollonian(120, 7)});

    for (const auto& c : cases) {
        const fb::PlaneGraph& g = c.graph;
        auto scan_all_roots = [&](fb::Exec exec) {
            for (fb::Vertex r = 0; r < g.num_vertices(); ++r) {
                fb::SpanningTree t = fb::bfs_tree(g, r);
                volatile int sink = fb::find_balanced_curve(g, t, exec).interior_size;
                (void)sink;
            }
        };
        double s = best_of(2, [&] { scan_all_roots(fb::Exec::Serial); });
        double p = best_of(2, [&] { scan_all_roots(fb::Exec::Parallel); });
        row("balanced-curve scan, " + c.name, s, p);
    }

    {
        fb::PlaneGraph g = fb::gen_grid(10, 10);
        fb::RateReportOptions so, po;
        so.limits.max_n = 0;
        po.limits.max_n = 0;
        po.exec = fb::Exec::Parallel;
        double s = best_of(2, [&] { fb::build_rate_report(g, so); });
        double p = best_of(2, [&] { fb::build_rate_report(g, po); });
        row("rate batch (dispatch), grid 10x10", s, p);
    }
    {
        fb::PlaneGraph g = fb::gen_grid(3, 4);
        double s = best_of(2, [&] { fb::rho_exact(g, 2, {}, fb::Exec::Serial); });
        double p = best_of(2, [&] { fb::rho_exact(g, 2, {}, fb::Exec::Parallel); });
        row("exact-rate oracle, grid 3x4", s, p);
    }
    return 0;
}
