#include "fb/bounds.hpp"
#include "fb/engine.hpp"
#include "fb/generators.hpp"
#include "fb/plane_graph.hpp"
#include "fb/render.hpp"
#include "fb/separator.hpp"
#include "fb/strategy.hpp"
#include "fb/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;
constexpr int kExitCapExceeded = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

fb::PlaneGraph load_graph(const std::string& path) {
    return fb::parse_plane_graph(slurp(path));
}

struct StateFile {
    std::vector<fb::Vertex> burned, protected_vertices;
};

StateFile parse_state_file(const std::string& text) {
    StateFile sf;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        std::vector<fb::Vertex>* dst = nullptr;
        if (kw == "burned:") dst = &sf.burned;
        else if (kw == "protected:") dst = &sf.protected_vertices;
        else continue;
        int v;
        while (ls >> v) dst->push_back(v);
    }
    return sf;
}

std::string state_file_text(const std::vector<fb::Vertex>& burned,
                            const std::vector<fb::Vertex>& prot) {
    std::ostringstream os;
    os << "burned:";
    for (int v : burned) os << " " << v;
    os << "\nprotected:";
    for (int v : prot) os << " " << v;
    os << "\n";
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-graph firefighting workbench"};
    app.require_subcommand(1);

    // validate
    auto* validate = app.add_subcommand("validate", "parse and validate an embedded graph file");
    std::string validate_file;
    validate->add_option("file", validate_file)->required();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a plane graph");
    std::string gen_family, gen_base;
    std::vector<int> gen_params;
    uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("family", gen_family,
                    "grid|cycle|path|star|k2n|wheel|hex_patch|apollonian|subdivide")
        ->required();
    gen->add_option("params", gen_params, "positional integer parameters");
    gen->add_option("--base", gen_base, "base family for subdivide (params: base... count)");
    gen->add_option("--seed", gen_seed);
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    // separator
    auto* sep = app.add_subcommand("separator", "find a balanced curve");
    std::string sep_file;
    int sep_root = 0;
    bool sep_parallel = false;
    sep->add_option("file", sep_file)->required();
    sep->add_option("--root", sep_root)->required();
    sep->add_flag("--parallel", sep_parallel, "use the OpenMP scan");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run a defense strategy");
    std::string sim_file, sim_strategy = "dispatch", sim_budgets, sim_state_out;
    int sim_root = 0;
    sim->add_option("file", sim_file)->required();
    sim->add_option("--root", sim_root)->required();
    sim->add_option("--strategy", sim_strategy, "lemma22|degree4|dispatch|null");
    sim->add_option("--budgets", sim_budgets, "e.g. \"3,2*\" (head list, tail starred)");
    sim->add_option("--state-out", sim_state_out, "write final burned/protected sets");

    // sn-exact
    auto* sn = app.add_subcommand("sn-exact", "exact savable count via search");
    std::string sn_file, sn_budgets = "2*";
    int sn_root = 0;
    int sn_cap = 14;
    sn->add_option("file", sn_file)->required();
    sn->add_option("--root", sn_root)->required();
    sn->add_option("--budgets", sn_budgets);
    sn->add_option("--max-n", sn_cap, "exact-search size cap");

    // rate
    auto* rate = app.add_subcommand("rate", "surviving-rate report for a graph");
    std::string rate_file;
    bool rate_parallel = false;
    rate->add_option("file", rate_file)->required();
    rate->add_flag("--parallel", rate_parallel);

    // lp
    auto* lp = app.add_subcommand("lp", "class-counting linear program");
    std::string lp_eps;
    long long lp_n = 0;
    lp->add_option("--eps", lp_eps, "rational, e.g. 3/2")->required();
    lp->add_option("--n", lp_n)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run corpus checks");
    std::string verify_spec, verify_checks = "all", verify_report, verify_json, verify_repro;
    bool verify_serial = false;
    verify->add_option("--spec", verify_spec, "corpus spec file")->required();
    verify->add_option("--checks", verify_checks, "comma list or 'all'");
    verify->add_option("--report", verify_report, "write text report here");
    verify->add_option("--json", verify_json, "write JSON report here");
    verify->add_option("--repro-dir", verify_repro, "directory for reproducer files");
    verify->add_flag("--serial", verify_serial, "disable the OpenMP runner");

    // render
    auto* render = app.add_subcommand("render", "SVG diagnostic drawing");
    std::string render_file, render_out = "out.svg", render_state;
    bool render_curve = false;
    int render_root = 0;
    render->add_option("file", render_file)->required();
    render->add_flag("--curve", render_curve, "overlay the balanced curve");
    render->add_option("--root", render_root, "root for --curve (default 0)");
    render->add_option("--state", render_state, "overlay a burned/protected state file");
    render->add_option("-o,--out", render_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*validate) {
            fb::PlaneGraph g = load_graph(validate_file);
            std::cout << "ok n=" << g.num_vertices() << " m=" << g.num_edges()
                      << " f=" << g.num_faces() << "\n";
            return kExitOk;
        }
        if (*gen) {
            fb::PlaneGraph g = [&] {
                if (gen_family == "subdivide") {
                    if (gen_base.empty() || gen_params.empty())
                        throw std::invalid_argument(
                            "subdivide: pass --base <family> plus base params and a final count");
                    std::vector<int> base_params(gen_params.begin(), gen_params.end() - 1);
                    return fb::generate_subdivided(gen_base, base_params, gen_params.back(),
                                                   gen_seed);
                }
                return fb::generate(gen_family, gen_params, gen_seed);
            }();
            std::string text = g.serialize();
            if (gen_out.empty()) std::cout << text;
            else spit(gen_out, text);
            return kExitOk;
        }
        if (*sep) {
            fb::PlaneGraph g = load_graph(sep_file);
            fb::SpanningTree t = fb::bfs_tree(g, sep_root);
            fb::BalancedCurve bc = fb::find_balanced_curve(
                g, t, sep_parallel ? fb::Exec::Parallel : fb::Exec::Serial);
            std::cout << "root " << sep_root << "\n";
            std::cout << "z " << bc.curve.z() << "\n";
            std::cout << "arc " << bc.curve.site.u << " " << bc.curve.site.v << " kind "
                      << (bc.curve.site.kind == fb::ArcSite::Chord ? "chord"
                          : bc.curve.site.kind == fb::ArcSite::ExistingEdge ? "edge"
                                                                            : "parallel")
                      << "\n";
            std::cout << "curve";
            for (int v : bc.curve.cycle()) std::cout << " " << v;
            std::cout << "\ninterior " << bc.interior_size << "\nexterior " << bc.exterior_size
                      << "\n";
            return kExitOk;
        }
        if (*sim) {
            fb::PlaneGraph g = load_graph(sim_file);
            fb::StrategyOutcome o;
            if (sim_strategy == "lemma22") {
                o = fb::lemma22_defense(g, sim_root);
            } else if (sim_strategy == "degree4") {
                o = fb::degree4_defense(g, sim_root);
            } else if (sim_strategy == "dispatch") {
                fb::ScheduleKind kind = fb::ScheduleKind::Two;
                if (!sim_budgets.empty()) {
                    fb::BudgetSchedule b = fb::BudgetSchedule::parse(sim_budgets);
                    if (b.budget(1) == 3 && b.budget(2) == 2) kind = fb::ScheduleKind::ThreeTwo;
                }
                o = fb::dispatch_defense(g, sim_root, kind);
            } else if (sim_strategy == "null") {
                fb::BudgetSchedule b = sim_budgets.empty() ? fb::BudgetSchedule::constant(2)
                                                           : fb::BudgetSchedule::parse(sim_budgets);
                o = fb::null_defense(g, sim_root, b);
            } else {
                std::cerr << "unknown strategy " << sim_strategy << "\n";
                return kExitUsage;
            }
            std::cout << "strategy " << sim_strategy << "\ncase " << o.case_trace
                      << "\nbudgets " << o.schedule.str() << "\nrounds " << o.rounds
                      << "\nsaved " << o.saved << "\nguarantee "
                      << (o.kind == fb::GuaranteeKind::Exact ? "= "
                          : o.kind == fb::GuaranteeKind::StrictGreater ? "> "
                                                                       : ">= ")
                      << o.guarantee.str() << " " << (o.guarantee_met() ? "met" : "VIOLATED")
                      << "\n";
            if (!sim_state_out.empty())
                spit(sim_state_out, state_file_text(o.burned, o.protected_set));
            return o.guarantee_met() ? kExitOk : kExitVerification;
        }
        if (*sn) {
            fb::PlaneGraph g = load_graph(sn_file);
            fb::SnLimits limits;
            limits.max_n = sn_cap;
            fb::SnResult r =
                fb::sn_exact(g, sn_root, fb::BudgetSchedule::parse(sn_budgets), limits);
            if (!r.exact) {
                std::cout << "unknown (cap exceeded, nodes=" << r.nodes << ")\n";
                return kExitCapExceeded;
            }
            std::cout << "sn " << r.saved << "\nnodes " << r.nodes << "\n";
            return kExitOk;
        }
        if (*rate) {
            fb::PlaneGraph g = load_graph(rate_file);
            fb::RateReportOptions opts;
            opts.exec = rate_parallel ? fb::Exec::Parallel : fb::Exec::Serial;
            std::cout << fb::render_rate_report(fb::build_rate_report(g, opts));
            return kExitOk;
        }
        if (*lp) {
            fb::Rat eps = fb::Rat::parse(lp_eps);
            fb::LpResult r = fb::lp_min(lp_n, eps);
            if (!r.feasible) {
                std::cout << "infeasible\n";
                return kExitValidation;
            }
            std::cout << "lp_min " << r.alpha.str() << "\n";
            std::cout << "argmin x=" << r.x.str() << " y=" << r.y.str() << " z=" << r.z.str()
                      << " w=" << r.w.str() << "\n";
            if (eps > fb::Rat(0) && eps <= fb::Rat(5, 2))
                std::cout << "alpha_closed " << fb::alpha_closed(lp_n, eps).str() << "\n";
            return kExitOk;
        }
        if (*verify) {
            fb::CorpusSpec spec = fb::CorpusSpec::parse(slurp(verify_spec));
            std::vector<std::string> checks;
            if (verify_checks == "all") {
                checks = fb::all_check_names();
            } else {
                std::stringstream ss(verify_checks);
                std::string c;
                while (std::getline(ss, c, ',')) checks.push_back(c);
            }
            fb::VerifyOptions opts;
            opts.exec = verify_serial ? fb::Exec::Serial : fb::Exec::Parallel;
            opts.reproducer_dir = verify_repro;
            fb::VerifyResult res = fb::verify_corpus(spec, checks, opts);
            std::cout << res.report_text;
            if (!verify_report.empty()) spit(verify_report, res.report_text);
            if (!verify_json.empty()) spit(verify_json, res.report_json);
            return res.fail_count == 0 ? kExitOk : kExitVerification;
        }
        if (*render) {
            fb::PlaneGraph g = load_graph(render_file);
            fb::RenderOverlay ov;
            fb::SpanningTree t;
            fb::BalancedCurve bc;
            if (render_curve) {
                t = fb::bfs_tree(g, render_root);
                bc = fb::find_balanced_curve(g, t);
                ov.tree = &t;
                ov.curve = &bc.curve;
            }
            StateFile sf;
            if (!render_state.empty()) {
                sf = parse_state_file(slurp(render_state));
                ov.burned = sf.burned;
                ov.protected_vertices = sf.protected_vertices;
            }
            spit(render_out, fb::render_svg(g, ov));
            return kExitOk;
        }
    } catch (const fb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const fb::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const fb::GameError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
