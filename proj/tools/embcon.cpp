// Command-line front end: validation, face/ribbon reports, connectivity with
// optional JSON output, brute-force oracles, generators, and a scaling bench.
//
// Exit codes: 0 success, 2 validation failure, 3 parse error, 4 internal
// consistency failure, 64 command-line/usage errors.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "embcon/connectivity.hpp"
#include "embcon/dp.hpp"
#include "embcon/egf.hpp"
#include "embcon/embedded_graph.hpp"
#include "embcon/generators.hpp"
#include "embcon/oracle.hpp"
#include "embcon/radial.hpp"
#include "embcon/ribbon.hpp"
#include "embcon/slices.hpp"
#include "embcon/treedec.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;
constexpr int kExitInternal = 4;
constexpr int kExitUsage = 64;

embcon::EmbeddedGraph load_valid(const std::string& path) {
    embcon::EmbeddedGraph g = embcon::load_egf_file(path);
    auto report = embcon::validate(g);
    if (!report.ok) {
        for (const auto& e : report.errors) std::cerr << "invalid: " << e << "\n";
        throw embcon::precondition_error("validation failed for " + path);
    }
    return g;
}

int cmd_validate(const std::string& path) {
    embcon::EmbeddedGraph g = embcon::load_egf_file(path);
    auto report = embcon::validate(g);
    if (!report.ok) {
        for (const auto& e : report.errors) std::cerr << "invalid: " << e << "\n";
        return kExitValidation;
    }
    std::cout << "valid n " << g.n << " q " << g.q << " edges " << g.edge_count()
              << "\n";
    return 0;
}

int cmd_faces(const std::string& path) {
    embcon::EmbeddedGraph g = load_valid(path);
    embcon::Planarization p = embcon::planarize(g);
    auto faces = p.pg.faces();
    std::cout << "faces " << faces.count << "\n";
    for (int f = 0; f < faces.count; ++f) {
        std::cout << "face " << f << ":";
        for (int d : faces.walks[f]) std::cout << " " << p.pg.tail(d);
        std::cout << "\n";
    }
    return 0;
}

int cmd_ribbon(const std::string& path, bool per_crossing, int threads) {
    embcon::EmbeddedGraph g = load_valid(path);
    embcon::Planarization p = embcon::planarize(g);
    embcon::RadialGraph radial = embcon::build_radial(p);
    auto rr = embcon::ribbon_radius(g, radial, threads);
    std::cout << "mu " << rr.mu << "\n";
    if (per_crossing)
        for (int j = 0; j < g.q; ++j)
            std::cout << "crossing " << g.n + j << " mu " << rr.per_crossing[j]
                      << "\n";
    return 0;
}

// Writes radial/slice/decomposition dumps for one connectivity run.
embcon::TraceHook debug_dump_hook(const std::string& dir,
                                  std::shared_ptr<int> counter) {
    return [dir, counter](const embcon::Slice& slice,
                          const embcon::TreeDecomposition& td, int budget,
                          const embcon::DpResult&) {
        int id = (*counter)++;
        char name[64];
        std::snprintf(name, sizeof name, "slice_%04d_s%d", id, budget);
        std::ofstream dot(dir + "/" + std::string(name) + ".dot");
        dot << embcon::slice_to_dot(slice);
        std::ofstream pace(dir + "/" + std::string(name) + ".td");
        pace << embcon::td_to_pace(td, slice.graph.vertex_count());
    };
}

int cmd_connectivity(const std::string& mode, const std::string& path,
                     int mu_override, bool as_json, int threads,
                     const std::string& dump_dir) {
    embcon::EmbeddedGraph g = load_valid(path);
    embcon::SearchOptions opts;
    opts.mu_override = mu_override;
    opts.threads = threads;
    auto counter = std::make_shared<int>(0);
    if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        embcon::Planarization p = embcon::planarize(
            mode == "edge" && g.n > 2 ? embcon::subdivide(g) : g);
        std::ofstream dot(dump_dir + "/radial.dot");
        dot << embcon::radial_to_dot(embcon::build_radial(p));
        opts.trace = debug_dump_hook(dump_dir, counter);
    }
    embcon::ConnectivityResult res = mode == "vertex"
                                         ? embcon::vertex_connectivity(g, opts)
                                         : embcon::edge_connectivity(g, opts);
    std::vector<int> cut = res.cut;
    std::sort(cut.begin(), cut.end());
    const char* key = mode == "vertex" ? "kappa" : "lambda";
    if (as_json) {
        nlohmann::ordered_json out;
        out[key] = res.value;
        out["cut"] = cut;
        out["mode"] = res.trivial ? "trivial" : "dp";
        if (!res.trivial) {
            out["certificate"] = {{"mu", res.mu},
                                  {"windows", res.windows_searched}};
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << key << " " << res.value << "\n";
        std::cout << "cut";
        for (int v : cut) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_oracle(const std::string& mode, const std::string& path) {
    embcon::EmbeddedGraph g = load_valid(path);
    if (mode == "vertex") {
        std::cout << "kappa "
                  << embcon::oracle_vertex_connectivity(embcon::real_graph(g))
                  << "\n";
    } else if (mode == "edge") {
        int lambda = g.n < 2 ? 0
                             : embcon::oracle_edge_connectivity(
                                   embcon::real_graph(g));
        std::cout << "lambda " << lambda << "\n";
    } else {
        embcon::Planarization p = embcon::planarize(g);
        embcon::RadialGraph radial = embcon::build_radial(p);
        auto probe =
            embcon::oracle_ribbon_radius(g, radial, radial.lam.vertex_count());
        embcon::check(probe.conclusive, "ribbon oracle ran past its cap");
        std::cout << "mu " << probe.value << "\n";
    }
    return 0;
}

int cmd_generate(const std::string& cls, const std::vector<int>& args,
                 const std::string& out_path) {
    embcon::EmbeddedGraph g;
    auto arity = [&](size_t want, const char* usage) {
        if (args.size() != want) {
            std::cerr << "generate " << cls << " expects: " << usage << "\n";
            std::exit(kExitUsage);
        }
    };
    if (cls == "grid") {
        arity(2, "<rows> <cols>");
        g = embcon::gen_grid(args[0], args[1]);
    } else if (cls == "cycle") {
        arity(1, "<n>");
        g = embcon::gen_cycle(args[0]);
    } else if (cls == "clique-in-face") {
        arity(2, "<m> <t>");
        g = embcon::gen_clique_in_face(args[0], args[1]);
    } else if (cls == "map") {
        arity(2, "<degree> <points>");
        g = embcon::gen_map_flower_chain(args[0], args[1]);
    } else {
        arity(3, "<k> <p> <r>");
        g = embcon::gen_layered_counterexample(args[0], args[1], args[2]).graph;
    }
    auto report = embcon::validate(g);
    embcon::check(report.ok, "generated instance fails validation");
    if (out_path.empty())
        std::cout << embcon::serialize_egf(g);
    else
        embcon::save_egf_file(g, out_path);
    return 0;
}

int cmd_bench(const std::string& cls, const std::vector<int>& sizes,
              int threads) {
    std::cout << "class size vertices crossings ms\n";
    double prev_ms = 0, prev_ratio = 0;
    int row = 0;
    for (int size : sizes) {
        embcon::EmbeddedGraph g;
        if (cls == "grid")
            g = embcon::gen_grid(size, size);
        else if (cls == "cycle")
            g = embcon::gen_cycle(size);
        else if (cls == "map")
            g = embcon::gen_map_flower_chain(5, size);
        else {
            std::cerr << "bench supports: grid cycle map\n";
            return kExitUsage;
        }
        embcon::SearchOptions opts;
        opts.threads = threads;
        auto t0 = std::chrono::steady_clock::now();
        auto res = embcon::vertex_connectivity(g, opts);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        std::cout << cls << " " << size << " " << g.n << " " << g.q << " "
                  << ms << "\n";
        if (row > 0) {
            double ratio = ms / std::max(prev_ms, 1e-9);
            if (row > 1)
                std::cout << "ratio-of-ratios "
                          << ratio / std::max(prev_ratio, 1e-9) << "\n";
            prev_ratio = ratio;
        }
        prev_ms = ms;
        ++row;
        (void)res;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connectivity of embedded near-planar graphs"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string file, mode, cls, out_path, dump_dir;
    std::vector<int> gen_args, sizes;
    bool per_crossing = false, as_json = false;
    int mu_override = 0, threads = 1;

    auto* validate = app.add_subcommand("validate", "check an EGF file");
    validate->add_option("file", file)->required();

    auto* faces = app.add_subcommand("faces", "face walks of the planarization");
    faces->add_option("file", file)->required();

    auto* ribbon =
        app.add_subcommand("ribbon-radius", "ribbon radius of the drawing");
    ribbon->add_option("file", file)->required();
    ribbon->add_flag("--per-crossing", per_crossing);
    ribbon->add_option("--threads", threads);

    auto* conn = app.add_subcommand("connectivity", "vertex or edge connectivity");
    conn->add_option("mode", mode)
        ->required()
        ->check(CLI::IsMember({"vertex", "edge"}));
    conn->add_option("file", file)->required();
    conn->add_option("--mu", mu_override);
    conn->add_flag("--json", as_json);
    conn->add_option("--threads", threads);
    conn->add_option("--debug-dump", dump_dir);

    auto* oracle = app.add_subcommand("oracle", "brute-force reference values");
    oracle->add_option("mode", mode)
        ->required()
        ->check(CLI::IsMember({"vertex", "edge", "ribbon"}));
    oracle->add_option("file", file)->required();

    auto* gen = app.add_subcommand("generate", "write a generated instance");
    gen->add_option("class", cls)
        ->required()
        ->check(CLI::IsMember(
            {"grid", "cycle", "clique-in-face", "map", "counterexample"}));
    gen->add_option("params", gen_args);
    gen->add_option("-o,--output", out_path);

    auto* bench = app.add_subcommand("bench", "size vs wall-time table");
    bench->add_option("class", cls)->required();
    bench->add_option("--sizes", sizes)->required()->delimiter(',');
    bench->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (faces->parsed()) return cmd_faces(file);
        if (ribbon->parsed()) return cmd_ribbon(file, per_crossing, threads);
        if (conn->parsed())
            return cmd_connectivity(mode, file, mu_override, as_json, threads,
                                    dump_dir);
        if (oracle->parsed()) return cmd_oracle(mode, file);
        if (gen->parsed()) return cmd_generate(cls, gen_args, out_path);
        if (bench->parsed()) return cmd_bench(cls, sizes, threads);
    } catch (const embcon::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const embcon::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const embcon::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
