#pragma once

#include "fb/engine.hpp"
#include "fb/plane_graph.hpp"

#include <cstdint>

namespace fb {

// Line-oriented corpus description: a `seed` line plus one generator line
// per family. Generator arguments are integers, ranges `a..b`, or stepped
// ranges `a..b..s`; ranged arguments expand Cartesian-style. `subdivide`
// takes a base family, its arguments, and a subdivision count.
struct CorpusSpec {
    uint64_t seed = 1;
    struct Entry {
        std::string family;
        std::vector<std::string> args;
    };
    std::vector<Entry> entries;

    static CorpusSpec parse(const std::string& text);
};

struct CorpusInstance {
    std::string id;
    PlaneGraph graph;
};

std::vector<CorpusInstance> expand_corpus(const CorpusSpec& spec);

struct VerificationRecord {
    std::string graph_id;
    int root = -1; // -1: graph-level
    std::string check;
    std::string detail;
    bool pass = true;
    bool report_only = false;
};

struct VerifyOptions {
    Exec exec = Exec::Serial;
    SnLimits limits{12, 80'000'000}; // oracle checks stop at n = 12
    std::string reproducer_dir;      // empty: write no reproducer files
};

struct VerifyResult {
    std::vector<VerificationRecord> records;
    int graph_count = 0;
    int fail_count = 0;
    std::string report_text;
    std::string report_json;
};

// All check names, in report order.
const std::vector<std::string>& all_check_names();

// Runs the requested checks over the corpus. Any non-report-only failure
// leaves fail_count > 0 and, when a reproducer directory is set, a replay
// file per failing (graph, check).
VerifyResult verify_corpus(const CorpusSpec& spec, const std::vector<std::string>& checks,
                           const VerifyOptions& opts = {});

// Simple structural helpers used by checks and tests.
bool has_triangle(const PlaneGraph& g);
int girth(const PlaneGraph& g); // -1 for forests

} // namespace fb
