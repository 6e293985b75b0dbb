// The OpenMP kernels must be bit-identical to their serial references.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fb/bounds.hpp"
#include "fb/separator.hpp"
#include "fb/verify.hpp"
#include "helpers.hpp"

using namespace fb;

TEST_CASE("balanced-curve scan: parallel equals serial") {
    std::vector<std::pair<std::string, PlaneGraph>> graphs = fbtest::small_corpus();
    graphs.push_back({"grid66", gen_grid(6, 6)});
    graphs.push_back({"hex3", gen_hex_patch(3)});
    graphs.push_back({"apo40", gen_apollonian(40, 9)});
    for (const auto& [name, g] : graphs) {
        CAPTURE(name);
        for (Vertex r = 0; r < g.num_vertices(); ++r) {
            SpanningTree t = bfs_tree(g, r);
            BalancedCurve a = find_balanced_curve(g, t, Exec::Serial);
            BalancedCurve b = find_balanced_curve(g, t, Exec::Parallel);
            CAPTURE(r);
            CHECK(a.interior_size == b.interior_size);
            CHECK(a.exterior_size == b.exterior_size);
            CHECK(a.curve.cycle() == b.curve.cycle());
            CHECK(a.curve.site.u == b.curve.site.u);
            CHECK(a.curve.site.v == b.curve.site.v);
            CHECK(a.curve.site.face == b.curve.site.face);
            CHECK(a.curve.site.occ_u == b.curve.site.occ_u);
            CHECK(a.curve.site.occ_v == b.curve.site.occ_v);
        }
    }
}

TEST_CASE("exact-rate batch: parallel equals serial") {
    for (const auto& [name, g] : fbtest::small_corpus()) {
        CAPTURE(name);
        if (g.num_vertices() > 10) continue;
        RhoResult a = rho_exact(g, 2, {}, Exec::Serial);
        RhoResult b = rho_exact(g, 2, {}, Exec::Parallel);
        REQUIRE(a.exact);
        REQUIRE(b.exact);
        CHECK(a.value == b.value);
    }
}

TEST_CASE("rate reports: parallel equals serial") {
    for (const auto& name : {"grid", "hex"}) {
        PlaneGraph g = std::string(name) == "grid" ? gen_grid(5, 5) : gen_hex_patch(2);
        RateReportOptions so, po;
        po.exec = Exec::Parallel;
        RateReport a = build_rate_report(g, so);
        RateReport b = build_rate_report(g, po);
        CHECK(render_rate_report(a) == render_rate_report(b));
    }
}

TEST_CASE("corpus verification: parallel equals serial, byte for byte") {
    CorpusSpec spec = CorpusSpec::parse("seed 3\ngrid 2..4 2..4\ngrid 3 9\ncycle 3..9\n"
                                        "star 2..5\nhex_patch 1..2\napollonian 2..6..2\n"
                                        "cpath_gadget 0 0 0..1\n");
    VerifyOptions serial{Exec::Serial, {}, ""};
    VerifyOptions parallel{Exec::Parallel, {}, ""};
    VerifyResult a = verify_corpus(spec, all_check_names(), serial);
    VerifyResult b = verify_corpus(spec, all_check_names(), parallel);
    CHECK(a.fail_count == 0);
    CHECK(a.report_text == b.report_text);
    CHECK(a.report_json == b.report_json);
}
