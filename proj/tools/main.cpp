#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "autdec/codes.hpp"
#include "autdec/dem_io.hpp"
#include "autdec/ensemble.hpp"
#include "autdec/gf2.hpp"
#include "autdec/noise_sim.hpp"
#include "autdec/tanner_aut.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitParse = 4;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

autdec::CssCode load_code(const std::string& name, const std::string& manifest_path) {
    if (name == "qrm15") return autdec::build_qrm15();
    const std::string text =
        manifest_path.empty() ? autdec::builtin_code_manifest() : read_file(manifest_path);
    for (const autdec::BbSpec& spec : autdec::parse_code_manifest(text)) {
        if (spec.name == name) return autdec::build_from_spec(spec);
    }
    throw ConfigError("unknown code '" + name + "' (try qrm15 or a manifest entry)");
}

int cmd_code_info(const std::string& name, const std::string& manifest_path) {
    const autdec::CssCode code = load_code(name, manifest_path);
    const autdec::BinaryMatrix product = autdec::mul(code.hx, code.hz.transpose());
    std::cout << "name: " << code.name << "\n"
              << "n: " << code.n << "\n"
              << "k: " << code.k << "\n"
              << "hx: " << code.hx.rows() << " x " << code.hx.cols()
              << " (rank " << autdec::rank(code.hx) << ")\n"
              << "hz: " << code.hz.rows() << " x " << code.hz.cols()
              << " (rank " << autdec::rank(code.hz) << ")\n"
              << "commutation: " << (product.is_zero() ? "ok" : "violated") << "\n"
              << "logicals: " << code.lx.rows() << " X and " << code.lz.rows() << " Z\n";
    return product.is_zero() ? 0 : kExitConfig;
}

int cmd_aut_find(const std::string& code_name, const std::string& manifest_path,
                 const std::string& side, const std::string& dem_path,
                 const std::string& out_path, std::size_t cap) {
    autdec::ColoredGraph graph;
    std::size_t columns = 0;
    if (!dem_path.empty()) {
        const autdec::DetectorErrorModel dem = autdec::parse_dem(read_file(dem_path));
        graph = autdec::build_tanner(dem.h);
        columns = dem.h.cols();
        std::cout << "source: dem " << dem_path << " (" << dem.h.rows() << ", " << dem.h.cols()
                  << ")\n";
    } else {
        const autdec::CssCode code = load_code(code_name, manifest_path);
        columns = code.n;
        if (side == "x") {
            graph = autdec::build_tanner(code.hx);
        } else if (side == "z") {
            graph = autdec::build_tanner(code.hz);
        } else if (side == "joint") {
            graph = autdec::build_joint_tanner(code.hx, code.hz);
        } else {
            throw ConfigError("--side must be x, z or joint");
        }
        std::cout << "source: code " << code.name << " side " << side << "\n";
    }

    const auto start = std::chrono::steady_clock::now();
    const autdec::GeneratorSet gens = autdec::find_automorphism_generators(graph);
    const autdec::GroupOrderResult order = autdec::group_order(gens.generators, cap);
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();

    std::cout << "vertices: " << graph.vertex_count << "\n"
              << "columns: " << columns << "\n"
              << "generators: " << gens.generators.size() << "\n";
    if (order.overflowed) {
        std::cout << "order: > " << cap << " (cap exceeded)\n";
    } else {
        std::cout << "order: " << order.order << "\n";
    }
    std::cout << "time_ms: " << ms << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw IoError("cannot write '" + out_path + "'");
        out << autdec::generators_to_json(gens);
        std::cout << "wrote: " << out_path << "\n";
    }
    return 0;
}

struct SimulateArgs {
    std::string code_name;
    std::string manifest_path;
    std::string dem_path;
    std::vector<std::string> decoders;
    std::vector<double> ps;
    std::size_t shots = 0;
    std::size_t max_iters = 15;
    double scaling = 1.0;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> ensemble_seed;
    std::size_t workers = 0;
    std::string metric;
    std::string out_path;
    bool append = false;
};

int cmd_simulate(const SimulateArgs& args) {
    if (args.shots == 0) throw ConfigError("--shots must be positive");
    if (args.decoders.empty()) throw ConfigError("--decoder is required");
    for (const std::string& spec : args.decoders) {
        autdec::parse_decoder_spec(spec);  // validate before any work
    }
    if (!args.dem_path.empty() && !args.ps.empty()) {
        throw ConfigError("-p applies to code-capacity runs, not --dem runs");
    }
    if (args.dem_path.empty() && args.ps.empty()) {
        throw ConfigError("at least one -p value is required");
    }

    autdec::SimOptions opts;
    opts.bp_cfg.max_iters = args.max_iters;
    opts.bp_cfg.scaling = args.scaling;
    opts.workers = args.workers == 0
                       ? std::max<std::size_t>(1, std::thread::hardware_concurrency())
                       : args.workers;
    opts.ensemble_seed = args.ensemble_seed.value_or(args.seed);
    if (args.metric == "min-weight") {
        opts.metric = autdec::MetricKind::min_weight;
    } else if (args.metric == "likelihood") {
        opts.metric = autdec::MetricKind::prior_likelihood;
    } else if (!args.metric.empty()) {
        throw ConfigError("--metric must be min-weight or likelihood");
    }

    std::vector<std::string> rows;
    if (!args.dem_path.empty()) {
        const autdec::DetectorErrorModel dem = autdec::parse_dem(read_file(args.dem_path));
        opts.label = args.dem_path;
        for (const std::string& spec : args.decoders) {
            rows.push_back(autdec::csv_row(
                autdec::run_dem_experiment(dem, spec, args.shots, args.seed, opts)));
        }
    } else {
        const autdec::CssCode code = load_code(args.code_name, args.manifest_path);
        for (const std::string& spec : args.decoders) {
            for (double p : args.ps) {
                rows.push_back(autdec::csv_row(
                    autdec::run_capacity_experiment(code, spec, p, args.shots, args.seed, opts)));
            }
        }
    }

    if (args.out_path.empty()) {
        std::cout << autdec::csv_header() << "\n";
        for (const std::string& row : rows) std::cout << row << "\n";
        return 0;
    }
    bool write_header = true;
    if (args.append) {
        std::ifstream probe(args.out_path, std::ios::binary);
        write_header = !probe || probe.peek() == std::ifstream::traits_type::eof();
    }
    std::ofstream out(args.out_path,
                      std::ios::binary | (args.append ? std::ios::app : std::ios::trunc));
    if (!out) throw IoError("cannot write '" + args.out_path + "'");
    if (write_header) out << autdec::csv_header() << "\n";
    for (const std::string& row : rows) out << row << "\n";
    std::cerr << "wrote " << rows.size() << " row(s) to " << args.out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Automorphism-ensemble decoding for CSS LDPC codes"};
    app.require_subcommand(1);

    // code info
    CLI::App* code_cmd = app.add_subcommand("code", "Inspect codes from the manifest");
    code_cmd->require_subcommand(1);
    CLI::App* info_cmd = code_cmd->add_subcommand("info", "Print parameters and checks");
    std::string info_name;
    std::string info_manifest;
    info_cmd->add_option("name", info_name, "code name (qrm15 or a manifest entry)")->required();
    info_cmd->add_option("--manifest", info_manifest, "path to a codes manifest JSON");

    // aut find
    CLI::App* aut_cmd = app.add_subcommand("aut", "Tanner graph automorphisms");
    aut_cmd->require_subcommand(1);
    CLI::App* find_cmd = aut_cmd->add_subcommand("find", "Search for generators");
    std::string find_code;
    std::string find_manifest;
    std::string find_side = "joint";
    std::string find_dem;
    std::string find_out;
    std::size_t find_cap = 1000000;
    find_cmd->add_option("--code", find_code, "code name");
    find_cmd->add_option("--manifest", find_manifest, "path to a codes manifest JSON");
    find_cmd->add_option("--side", find_side, "x, z or joint (default joint)");
    find_cmd->add_option("--dem", find_dem, "detector error model file");
    find_cmd->add_option("--out", find_out, "write generators JSON here");
    find_cmd->add_option("--cap", find_cap, "stop counting the group past this size");

    // simulate
    CLI::App* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo logical error rates");
    SimulateArgs sim;
    sim_cmd->add_option("--code", sim.code_name, "code name");
    sim_cmd->add_option("--manifest", sim.manifest_path, "path to a codes manifest JSON");
    sim_cmd->add_option("--dem", sim.dem_path, "detector error model file");
    sim_cmd->add_option("--decoder", sim.decoders,
                        "decoder specs: bp, bp+osd0, bp+osd-N, autbp-K, autbposd0-K")
        ->delimiter(',');
    sim_cmd->add_option("-p,--error-rate", sim.ps, "physical error rates")->delimiter(',');
    sim_cmd->add_option("--shots", sim.shots, "shots per row");
    sim_cmd->add_option("--max-iters", sim.max_iters, "BP iteration limit (default 15)");
    sim_cmd->add_option("--scaling", sim.scaling, "min-sum scale factor (default 1.0)");
    sim_cmd->add_option("--seed", sim.seed, "experiment seed (default 1)");
    std::uint64_t ensemble_seed_value = 0;
    CLI::Option* eseed_opt =
        sim_cmd->add_option("--ensemble-seed", ensemble_seed_value,
                            "automorphism sampling seed (defaults to --seed)");
    sim_cmd->add_option("--workers", sim.workers, "worker threads (default: all cores)");
    sim_cmd->add_option("--metric", sim.metric, "candidate ranking: min-weight or likelihood");
    sim_cmd->add_option("--out", sim.out_path, "CSV output path (default stdout)");
    sim_cmd->add_flag("--append", sim.append, "append rows, writing the header only if new");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (info_cmd->parsed()) {
            return cmd_code_info(info_name, info_manifest);
        }
        if (find_cmd->parsed()) {
            if (find_code.empty() == find_dem.empty()) {
                throw ConfigError("pass exactly one of --code or --dem");
            }
            return cmd_aut_find(find_code, find_manifest, find_side, find_dem, find_out,
                                find_cap);
        }
        if (sim_cmd->parsed()) {
            if (sim.code_name.empty() == sim.dem_path.empty()) {
                throw ConfigError("pass exactly one of --code or --dem");
            }
            if (*eseed_opt) sim.ensemble_seed = ensemble_seed_value;
            return cmd_simulate(sim);
        }
        throw ConfigError("no subcommand selected");
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const autdec::DemParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const autdec::ManifestParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
